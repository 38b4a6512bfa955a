#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vsl/partitions.hpp"

namespace vsl {

using Point = std::pair<int, int>;  // (x, y)
using Edge = std::pair<int, int>;   // (a, b) with a < b

/// Unit-interval graph on [n]: vertex x is adjacent to every y in (x, reach(x)].
/// A strict column additionally marks its top edge (x, reach(x)) as strict.
class DecoratedGraph {
 public:
  DecoratedGraph() = default;
  DecoratedGraph(int n, std::vector<int> reach, std::vector<bool> strict);

  int n() const { return n_; }
  int reach(int x) const { return reach_[x]; }
  bool strict_column(int x) const { return strict_[x]; }

  bool has_edge(int a, int b) const;    // a < b
  bool is_strict(int a, int b) const;   // a < b

  std::vector<Edge> edges() const;         // lexicographic
  std::vector<Edge> strict_edges() const;  // lexicographic
  std::vector<Edge> plain_edges() const;   // non-strict, lexicographic

  /// (x,z) an edge implies (x,y) and (y,z) edges for x < y < z.
  bool is_unit_interval() const;

  friend bool operator==(const DecoratedGraph&, const DecoratedGraph&) = default;

 private:
  int n_ = 0;
  std::vector<int> reach_;   // 1-indexed; reach_[x] >= x
  std::vector<bool> strict_;
};

/// Lattice path over n (north), d (diagonal), e (east) from (0,0) to (n,n),
/// never below y = x, and with no diagonal step starting on y = x.
class SchroederPath {
 public:
  SchroederPath() = default;

  /// Validates the word. Errors: InvalidStep, BelowDiagonal, DiagonalOnMainDiagonal, NotClosed.
  static SchroederPath parse(const std::string& word);

  const std::string& word() const { return word_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_dyck() const { return word_.find('d') == std::string::npos; }
  int diagonal_count() const;

  /// Point reached after i steps, 0 <= i <= length().
  Point point(int i) const;
  std::vector<Point> points() const;

  /// Step index list of the path; first index i with point(i) == p, or -1.
  int index_of(Point p) const;

  friend bool operator==(const SchroederPath& a, const SchroederPath& b) { return a.word_ == b.word_; }
  friend auto operator<=>(const SchroederPath& a, const SchroederPath& b) { return a.word_ <=> b.word_; }

 private:
  std::string word_;
  int size_ = 0;
};

/// True iff word is a valid Schroeder path.
bool is_valid_path(const std::string& word);

/// All paths of size n, grouped by number of diagonal steps (Dyck paths first),
/// each group in lexicographic order for n < e < d. Throws BoundExceeded.
std::vector<SchroederPath> enumerate(int n);
std::vector<SchroederPath> enumerate_dyck(int n);

/// Reads the word backwards, exchanging n and e.
SchroederPath reverse(const SchroederPath& p);

DecoratedGraph graph(const SchroederPath& p);

/// Number of non-strict edges.
int area(const SchroederPath& p);

struct Decomposition {
  std::string U, s1, s2, V, s3, s4, W;  // s1 is empty when the bounce path ends at the origin

  std::string st() const { return s1 + s2; }
  std::string assemble() const { return U + s1 + s2 + V + s3 + s4 + W; }
};

struct BounceData {
  Point start;                       // (x, z)
  int start_index = 0;               // step index of start on the path
  int end_index = 0;                 // step index of the terminal point
  std::vector<Point> bounce_points;  // (u1,u1), (u2,u2), ...
  std::vector<int> bounce_partition; // (u0, u1, ..., u_{k+1})
  std::optional<Decomposition> decomposition;  // absent when the segments would overlap
};

/// Partial reverse bounce path from a point of the path. PointNotOnPath for points
/// off the path and for the two end points.
BounceData bounce_at(const SchroederPath& p, Point start);

/// Replaces every corner "en" of a Dyck path by a diagonal step. HasDiagonal otherwise.
SchroederPath dyck_star(const SchroederPath& p);

/// n^{mu1} e^{mu1-mu2} d^{mu2} e^{mu2-mu3} ... d^{mu_l} e^{mu_l}.
SchroederPath p_mu(const Partition& mu);

struct NuAlpha {
  SchroederPath path;
  int area = 0;   // sum over cars of the distance to the lowest car diagonal
  int below = 0;  // cars strictly below y = x
  std::string support;  // north-east support path of the car diagram
};

/// Car-diagram construction for a weak composition of n with n parts. SizeMismatch otherwise.
NuAlpha nu_alpha(const Composition& alpha);

/// Classical bounce statistic of a Dyck path: sum of (n - j) over the intermediate
/// diagonal touch points j of the forward bounce path.
int haglund_bounce(const SchroederPath& p);

}  // namespace vsl

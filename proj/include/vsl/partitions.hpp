#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace vsl {

/// Integer partition: weakly decreasing positive parts. The empty partition is 0's.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// Sorts and drops zeros; accepts any multiset of non-negative parts.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  /// Multiplicity of part value k.
  int multiplicity(int k) const;

  /// Concatenation followed by re-sorting (the index of a product e_a * e_b).
  Partition merged(const Partition& other) const;

  std::string to_string() const;  // "[2,1]"

  /// Graded order: smaller size first, then reverse lexicographic within a size,
  /// so (3) < (2,1) < (1,1,1).
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);
  friend bool operator==(const Partition& a, const Partition& b) = default;

 private:
  std::vector<int> parts_;
};

/// Weak composition: any list of non-negative integers.
using Composition = std::vector<int>;

/// All partitions of n in reverse-lexicographic order. Throws BoundExceeded above the
/// configured partition bound.
const std::vector<Partition>& partitions_of(int n);

/// Position of lambda in partitions_of(|lambda|).
std::size_t partition_index(const Partition& lambda);

Partition conjugate(const Partition& lambda);

/// True iff mu dominates lambda (equal sizes assumed).
bool dominates(const Partition& mu, const Partition& lambda);

/// Number of semistandard Young tableaux of shape mu and content lambda, counted by
/// filling one value at a time as a horizontal strip. Memoized; thread safe.
long long kostka(const Partition& mu, const Partition& lambda);

/// All length-k sequences of non-negative integers summing to n, first part descending.
std::vector<Composition> weak_compositions(int n, int k);

/// Compositions of n with positive parts, in lexicographic-descending order.
std::vector<Composition> strict_compositions(int n);

}  // namespace vsl

#include "vsl/schroeder.hpp"

#include <algorithm>
#include <functional>

#include "vsl/error.hpp"

namespace vsl {

DecoratedGraph::DecoratedGraph(int n, std::vector<int> reach, std::vector<bool> strict)
    : n_(n), reach_(std::move(reach)), strict_(std::move(strict)) {
  if (static_cast<int>(reach_.size()) != n + 1 || static_cast<int>(strict_.size()) != n + 1) {
    throw Error(ErrorKind::SizeMismatch, "graph columns");
  }
  for (int x = 1; x <= n; ++x) {
    if (reach_[x] < x || reach_[x] > n) throw Error(ErrorKind::InvalidArgument, "reach out of range");
    if (strict_[x] && reach_[x] == x) throw Error(ErrorKind::InvalidArgument, "strict column without edge");
  }
}

bool DecoratedGraph::has_edge(int a, int b) const { return a < b && a >= 1 && b <= n_ && b <= reach_[a]; }

bool DecoratedGraph::is_strict(int a, int b) const { return has_edge(a, b) && strict_[a] && b == reach_[a]; }

std::vector<Edge> DecoratedGraph::edges() const {
  std::vector<Edge> out;
  for (int a = 1; a <= n_; ++a) {
    for (int b = a + 1; b <= reach_[a]; ++b) out.emplace_back(a, b);
  }
  return out;
}

std::vector<Edge> DecoratedGraph::strict_edges() const {
  std::vector<Edge> out;
  for (int a = 1; a <= n_; ++a) {
    if (strict_[a]) out.emplace_back(a, reach_[a]);
  }
  return out;
}

std::vector<Edge> DecoratedGraph::plain_edges() const {
  std::vector<Edge> out;
  for (int a = 1; a <= n_; ++a) {
    const int top = strict_[a] ? reach_[a] - 1 : reach_[a];
    for (int b = a + 1; b <= top; ++b) out.emplace_back(a, b);
  }
  return out;
}

bool DecoratedGraph::is_unit_interval() const {
  // With edges stored as intervals (x, reach(x)], the property reduces to monotone reach.
  for (int x = 1; x < n_; ++x) {
    for (int y = x + 1; y <= reach_[x]; ++y) {
      if (reach_[y] < reach_[x]) return false;
    }
  }
  return true;
}

namespace {

void check_word(const std::string& word) {
  int x = 0;
  int y = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const char c = word[i];
    const std::string where = " at step " + std::to_string(i + 1) + " of '" + word + "'";
    switch (c) {
      case 'n': ++y; break;
      case 'e': ++x; break;
      case 'd':
        if (x == y) throw Error(ErrorKind::DiagonalOnMainDiagonal, "diagonal step" + where);
        ++x;
        ++y;
        break;
      default: throw Error(ErrorKind::InvalidStep, std::string("'") + c + "'" + where);
    }
    if (x > y) throw Error(ErrorKind::BelowDiagonal, "path leaves the region y >= x" + where);
  }
  if (x != y) throw Error(ErrorKind::NotClosed, "'" + word + "' ends at (" + std::to_string(x) + "," + std::to_string(y) + ")");
}

}  // namespace

SchroederPath SchroederPath::parse(const std::string& word) {
  check_word(word);
  SchroederPath p;
  p.word_ = word;
  p.size_ = static_cast<int>(std::count(word.begin(), word.end(), 'n') + std::count(word.begin(), word.end(), 'd'));
  return p;
}

bool is_valid_path(const std::string& word) {
  try {
    check_word(word);
    return true;
  } catch (const Error&) {
    return false;
  }
}

int SchroederPath::diagonal_count() const { return static_cast<int>(std::count(word_.begin(), word_.end(), 'd')); }

Point SchroederPath::point(int i) const {
  Point pt{0, 0};
  for (int k = 0; k < i; ++k) {
    if (word_[k] != 'n') ++pt.first;
    if (word_[k] != 'e') ++pt.second;
  }
  return pt;
}

std::vector<Point> SchroederPath::points() const {
  std::vector<Point> out{{0, 0}};
  for (char c : word_) {
    Point pt = out.back();
    if (c != 'n') ++pt.first;
    if (c != 'e') ++pt.second;
    out.push_back(pt);
  }
  return out;
}

int SchroederPath::index_of(Point p) const {
  const auto pts = points();
  auto it = std::find(pts.begin(), pts.end(), p);
  return it == pts.end() ? -1 : static_cast<int>(it - pts.begin());
}

std::vector<SchroederPath> enumerate(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative size");
  check_bound(n, limits().path_enum_n, "path size");
  std::vector<std::vector<SchroederPath>> by_diagonals(static_cast<std::size_t>(n + 1));
  std::string word;
  std::function<void(int, int)> rec = [&](int x, int y) {
    if (x == n && y == n) {
      auto p = SchroederPath::parse(word);
      by_diagonals[static_cast<std::size_t>(p.diagonal_count())].push_back(std::move(p));
      return;
    }
    if (y < n) {
      word.push_back('n');
      rec(x, y + 1);
      word.pop_back();
    }
    if (x < y) {
      word.push_back('e');
      rec(x + 1, y);
      word.pop_back();
    }
    if (x < y && y < n) {
      word.push_back('d');
      rec(x + 1, y + 1);
      word.pop_back();
    }
  };
  rec(0, 0);
  std::vector<SchroederPath> out;
  for (auto& group : by_diagonals) {
    for (auto& p : group) out.push_back(std::move(p));
  }
  return out;
}

std::vector<SchroederPath> enumerate_dyck(int n) {
  auto all = enumerate(n);
  std::erase_if(all, [](const SchroederPath& p) { return !p.is_dyck(); });
  return all;
}

SchroederPath reverse(const SchroederPath& p) {
  std::string w(p.word().rbegin(), p.word().rend());
  for (char& c : w) {
    if (c == 'n') {
      c = 'e';
    } else if (c == 'e') {
      c = 'n';
    }
  }
  return SchroederPath::parse(w);
}

DecoratedGraph graph(const SchroederPath& p) {
  const int n = p.size();
  std::vector<int> reach(static_cast<std::size_t>(n + 1), 0);
  std::vector<bool> strict(static_cast<std::size_t>(n + 1), false);
  int x = 0;
  int y = 0;
  for (char c : p.word()) {
    if (c == 'n') {
      ++y;
    } else if (c == 'e') {
      ++x;
      reach[x] = y;  // cells of column x below height y
    } else {
      ++x;
      ++y;
      reach[x] = y;
      strict[x] = true;  // the diagonal step ending at (x, y)
    }
  }
  return DecoratedGraph(n, std::move(reach), std::move(strict));
}

int area(const SchroederPath& p) { return static_cast<int>(graph(p).plain_edges().size()); }

BounceData bounce_at(const SchroederPath& p, Point start) {
  const auto pts = p.points();
  const int len = p.length();
  const std::string& w = p.word();
  const std::string where = "(" + std::to_string(start.first) + "," + std::to_string(start.second) + ")";
  const int s = p.index_of(start);
  if (s <= 0 || s >= len) throw Error(ErrorKind::PointNotOnPath, where + " on '" + w + "'");

  BounceData data;
  data.start = start;
  data.start_index = s;
  data.bounce_partition = {start.second, start.first};

  int u = start.first;
  int t = s;
  for (;;) {
    data.bounce_points.emplace_back(u, u);
    // West from (u, u): the rightmost point of the path at height u.
    int j = -1;
    for (int i = 0; i <= len; ++i) {
      if (pts[i].second == u) j = i;
    }
    const bool between_diagonals = j > 0 && j < len && w[j - 1] == 'd' && w[j] == 'd';
    if (!between_diagonals) {
      t = j;
      data.bounce_partition.push_back(pts[j].first);
      break;
    }
    u = pts[j].first;
    data.bounce_partition.push_back(u);
  }
  data.end_index = t;

  if (t + 2 <= s) {
    Decomposition d;
    d.U = t >= 1 ? w.substr(0, t - 1) : "";
    d.s1 = t >= 1 ? w.substr(t - 1, 1) : "";
    d.s2 = w.substr(t, 1);
    d.V = w.substr(t + 1, s - t - 2);
    d.s3 = w.substr(s - 1, 1);
    d.s4 = w.substr(s, 1);
    d.W = w.substr(s + 1);
    data.decomposition = d;
  }
  return data;
}

SchroederPath dyck_star(const SchroederPath& p) {
  if (!p.is_dyck()) throw Error(ErrorKind::HasDiagonal, "'" + p.word() + "'");
  const std::string& w = p.word();
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 'e' && i + 1 < w.size() && w[i + 1] == 'n') {
      out.push_back('d');
      ++i;
    } else {
      out.push_back(w[i]);
    }
  }
  return SchroederPath::parse(out);
}

SchroederPath p_mu(const Partition& mu) {
  if (mu.empty()) throw Error(ErrorKind::InvalidArgument, "empty partition");
  std::string w(static_cast<std::size_t>(mu[0]), 'n');
  const std::size_t len = static_cast<std::size_t>(mu.length());
  for (std::size_t i = 0; i < len; ++i) {
    w.append(static_cast<std::size_t>(mu[i] - mu[i + 1]), 'e');
    w.append(static_cast<std::size_t>(mu[i + 1]), 'd');
  }
  return SchroederPath::parse(w);
}

NuAlpha nu_alpha(const Composition& alpha) {
  const int n = static_cast<int>(alpha.size());
  int total = 0;
  for (int a : alpha) {
    if (a < 0) throw Error(ErrorKind::InvalidArgument, "negative part");
    total += a;
  }
  if (total != n) throw Error(ErrorKind::SizeMismatch, "weak composition must have n parts summing to n");

  struct Car {
    int col;
    int row;
    int diag() const { return row - col; }
  };
  std::vector<Car> cars;
  NuAlpha result;
  int row = 0;
  for (int i = 1; i <= n; ++i) {
    result.support.append(static_cast<std::size_t>(alpha[i - 1]), 'n');
    result.support.push_back('e');
    for (int k = 0; k < alpha[i - 1]; ++k) cars.push_back({i, ++row});
  }

  int lowest = cars.front().diag();
  for (const Car& c : cars) {
    lowest = std::min(lowest, c.diag());
    if (c.diag() < 0) ++result.below;
  }
  // Row by row: the squares between each car and the lowest car diagonal.
  for (const Car& c : cars) result.area += c.diag() - lowest;

  // Reading order: highest diagonal first, right to left within a diagonal.
  std::sort(cars.begin(), cars.end(), [](const Car& a, const Car& b) {
    if (a.diag() != b.diag()) return a.diag() > b.diag();
    return a.col > b.col;
  });

  std::vector<int> reach(static_cast<std::size_t>(n + 1));
  std::vector<bool> strict(static_cast<std::size_t>(n + 1), false);
  for (int a = 1; a <= n; ++a) {
    reach[a] = a;
    const Car& ca = cars[a - 1];
    for (int b = a + 1; b <= n; ++b) {
      const Car& cb = cars[b - 1];
      bool edge = false;
      bool is_strict = false;
      if (cb.diag() == ca.diag()) {
        edge = true;
      } else if (cb.diag() == ca.diag() - 1 && cb.col >= ca.col) {
        edge = true;
        is_strict = cb.col == ca.col;
      }
      if (!edge) continue;
      if (b != reach[a] + 1) {
        throw Error(ErrorKind::InvalidArgument, "car graph is not unit-interval");
      }
      if (strict[a]) throw Error(ErrorKind::InvalidArgument, "strict edge is not the top edge of its column");
      reach[a] = b;
      strict[a] = is_strict;
    }
  }

  // Rebuild the Schroeder path column by column from the graph.
  std::string w;
  int y = 0;
  for (int x = 1; x <= n; ++x) {
    const int top = strict[x] ? reach[x] - 1 : reach[x];
    if (top < y) throw Error(ErrorKind::InvalidArgument, "car graph reach is not monotone");
    w.append(static_cast<std::size_t>(top - y), 'n');
    w.push_back(strict[x] ? 'd' : 'e');
    y = reach[x];
  }
  result.path = SchroederPath::parse(w);
  if (!(graph(result.path) == DecoratedGraph(n, reach, strict))) {
    throw Error(ErrorKind::InvalidArgument, "car graph does not come from a path");
  }
  return result;
}

int haglund_bounce(const SchroederPath& p) {
  if (!p.is_dyck()) throw Error(ErrorKind::HasDiagonal, "'" + p.word() + "'");
  const int n = p.size();
  // Height of the east step leaving column x.
  std::vector<int> east_height(static_cast<std::size_t>(n), 0);
  int x = 0;
  int y = 0;
  for (char c : p.word()) {
    if (c == 'n') {
      ++y;
    } else {
      east_height[x] = y;
      ++x;
    }
  }
  int total = 0;
  int j = 0;
  for (;;) {
    j = east_height[j];
    if (j == n) break;
    total += n - j;
  }
  return total;
}

}  // namespace vsl

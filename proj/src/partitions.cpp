#include "vsl/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

#include "vsl/error.hpp"
#include "vsl/memo.hpp"

namespace vsl {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw Error(ErrorKind::InvalidArgument, "not a partition: parts must be positive and weakly decreasing");
    }
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  if (std::any_of(parts.begin(), parts.end(), [](int p) { return p < 0; })) {
    throw Error(ErrorKind::InvalidArgument, "negative part");
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

Partition Partition::merged(const Partition& other) const {
  std::vector<int> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return from_unsorted(std::move(all));
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  // Reverse lexicographic: the larger leading part comes first.
  const std::size_t n = std::min(a.parts_.size(), b.parts_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.parts_[i] != b.parts_[i]) return b.parts_[i] <=> a.parts_[i];
  }
  return a.parts_.size() <=> b.parts_.size();
}

namespace {

std::vector<Partition> generate_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative size");
  check_bound(n, limits().partition_n, "partition size");
  static std::mutex mutex;
  static std::map<int, std::vector<Partition>> table;
  std::lock_guard lock(mutex);
  auto it = table.find(n);
  if (it == table.end()) it = table.emplace(n, generate_partitions(n)).first;
  return it->second;
}

std::size_t partition_index(const Partition& lambda) {
  const auto& all = partitions_of(lambda.size());
  // partitions_of is sorted ascending in the graded order.
  auto it = std::lower_bound(all.begin(), all.end(), lambda);
  return static_cast<std::size_t>(it - all.begin());
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out;
  if (lambda.empty()) return {};
  for (int j = 1; j <= lambda[0]; ++j) {
    int count = 0;
    for (int p : lambda) count += (p >= j);
    out.push_back(count);
  }
  return Partition(std::move(out));
}

bool dominates(const Partition& mu, const Partition& lambda) {
  int a = 0;
  int b = 0;
  const int len = std::max(mu.length(), lambda.length());
  for (int i = 0; i < len; ++i) {
    a += mu[i];
    b += lambda[i];
    if (a < b) return false;
  }
  return true;
}

namespace {

// Counts chains of shapes in which value `value` fills a horizontal strip of size content[value].
long long count_fillings(std::vector<int>& shape, const Partition& target,
                         const std::vector<int>& content, std::size_t value) {
  if (value == content.size()) {
    for (int i = 0; i < target.length(); ++i) {
      if (shape[i] != target[i]) return 0;
    }
    return 1;
  }
  long long total = 0;
  const int rows = static_cast<int>(shape.size());
  // Distribute content[value] boxes over the rows; row i may grow up to the old
  // length of row i-1 (horizontal strip) and up to the target row length.
  std::vector<int> old = shape;
  std::function<void(int, int)> rec = [&](int row, int left) {
    if (row == rows) {
      if (left == 0) total += count_fillings(shape, target, content, value + 1);
      return;
    }
    const int cap_above = row == 0 ? target[0] : old[row - 1];
    const int cap = std::min(cap_above, target[row]);
    for (int add = 0; old[row] + add <= cap && add <= left; ++add) {
      shape[row] = old[row] + add;
      rec(row + 1, left - add);
    }
    shape[row] = old[row];
  };
  rec(0, content[value]);
  return total;
}

}  // namespace

long long kostka(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) {
    throw Error(ErrorKind::SizeMismatch, "kostka(" + mu.to_string() + ", " + lambda.to_string() + ")");
  }
  static ConcurrentMemo<std::pair<Partition, Partition>, long long> memo;
  return memo.get_or_compute({mu, lambda}, [&] {
    std::vector<int> shape(static_cast<std::size_t>(mu.length()), 0);
    return count_fillings(shape, mu, lambda.parts(), 0);
  });
}

std::vector<Composition> weak_compositions(int n, int k) {
  std::vector<Composition> out;
  if (k == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  Composition current(static_cast<std::size_t>(k), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == k - 1) {
      current[pos] = left;
      out.push_back(current);
      return;
    }
    for (int v = left; v >= 0; --v) {
      current[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, n);
  return out;
}

std::vector<Composition> strict_compositions(int n) {
  std::vector<Composition> out;
  Composition current;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      out.push_back(current);
      return;
    }
    for (int v = left; v >= 1; --v) {
      current.push_back(v);
      rec(left - v);
      current.pop_back();
    }
  };
  rec(n);
  return out;
}

}  // namespace vsl

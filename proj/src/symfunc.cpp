#include "vsl/symfunc.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <vector>

#include "vsl/memo.hpp"

namespace vsl {

std::string_view to_string(Basis b) {
  switch (b) {
    case Basis::m: return "m";
    case Basis::e: return "e";
    case Basis::h: return "h";
    case Basis::p: return "p";
    case Basis::s: return "s";
  }
  return "?";
}

Basis parse_basis(std::string_view name) {
  for (Basis b : {Basis::m, Basis::e, Basis::h, Basis::p, Basis::s}) {
    if (to_string(b) == name) return b;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown basis '" + std::string(name) + "'");
}

SymFunc SymFunc::element(Basis basis, const Partition& lambda, const Coeff& c) {
  SymFunc f(basis);
  f.add_term(lambda, c);
  return f;
}

Coeff SymFunc::at(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Coeff() : it->second;
}

void SymFunc::add_term(const Partition& lambda, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
  const SymFunc& rhs = other.basis_ == basis_ ? other : convert(other, basis_);
  for (const auto& [lambda, c] : rhs.terms_) add_term(lambda, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) {
  const SymFunc rhs = other.basis_ == basis_ ? other : convert(other, basis_);
  for (const auto& [lambda, c] : rhs.terms_) add_term(lambda, -c);
  return *this;
}

SymFunc& SymFunc::operator*=(const Coeff& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

SymFunc SymFunc::map_coeffs(const std::function<Coeff(const Coeff&)>& fn) const {
  SymFunc r(basis_);
  for (const auto& [lambda, c] : terms_) r.add_term(lambda, fn(c));
  return r;
}

std::string SymFunc::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [lambda, c] = *it;
    std::string name = std::string(vsl::to_string(basis_)) + lambda.to_string();
    bool negative = false;
    std::string scalar;
    if (c.size() == 1) {
      const auto& [mono, r] = *c.terms().begin();
      negative = r < 0;
      Coeff magnitude = negative ? -c : c;
      scalar = magnitude == Coeff(1) ? "" : magnitude.to_string();
    } else {
      scalar = "(" + c.to_string() + ")";
    }
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (!scalar.empty()) out << scalar << "*";
    out << name;
  }
  return out.str();
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;

struct Transition {
  Matrix forward;  // b_lambda = sum_mu forward[lambda][mu] m_mu
  Matrix inverse;
};

Matrix invert(Matrix a) {
  const std::size_t n = a.size();
  Matrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw Error(ErrorKind::InvalidArgument, "singular transition matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= scale;
      inv[col][j] /= scale;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[row][j] -= factor * a[col][j];
        inv[row][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

// Number of ways to distribute the factors of b_lambda over the monomial x^mu.
// Each factor consumes a pattern of exponents from the remaining column budget.
long long count_monomial(Basis b, const std::vector<int>& lambda, std::size_t i, std::vector<int>& rem,
                         std::map<std::pair<std::size_t, std::vector<int>>, long long>& memo) {
  if (i == lambda.size()) {
    return std::all_of(rem.begin(), rem.end(), [](int r) { return r == 0; }) ? 1 : 0;
  }
  auto key = std::make_pair(i, rem);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  long long total = 0;
  const int k = lambda[i];
  const std::size_t cols = rem.size();
  if (b == Basis::p) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (rem[j] < k) continue;
      rem[j] -= k;
      total += count_monomial(b, lambda, i + 1, rem, memo);
      rem[j] += k;
    }
  } else {
    // e: each column takes 0 or 1; h: each column takes any amount.
    const int per_column_cap = b == Basis::e ? 1 : k;
    std::function<void(std::size_t, int)> spread = [&](std::size_t j, int left) {
      if (j == cols) {
        if (left == 0) total += count_monomial(b, lambda, i + 1, rem, memo);
        return;
      }
      const int cap = std::min({per_column_cap, left, rem[j]});
      for (int take = 0; take <= cap; ++take) {
        rem[j] -= take;
        spread(j + 1, left - take);
        rem[j] += take;
      }
    };
    spread(0, k);
  }
  memo.emplace(std::move(key), total);
  return total;
}

std::shared_ptr<const Transition> transition(Basis b, int n) {
  static ConcurrentMemo<std::pair<Basis, int>, std::shared_ptr<const Transition>> cache;
  return cache.get_or_compute({b, n}, [&] {
    const auto& parts = partitions_of(n);
    const std::size_t size = parts.size();
    auto t = std::make_shared<Transition>();
    t->forward.assign(size, std::vector<Rational>(size, Rational(0)));
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        t->forward[i][j] = to_monomial_entry(b, parts[i], parts[j]);
      }
    }
    t->inverse = invert(t->forward);
    return std::shared_ptr<const Transition>(t);
  });
}

std::map<int, SymFunc::Terms> by_degree(const SymFunc& f) {
  std::map<int, SymFunc::Terms> slices;
  for (const auto& [lambda, c] : f.terms()) slices[lambda.size()].emplace(lambda, c);
  return slices;
}

bool is_multiplicative(Basis b) { return b == Basis::e || b == Basis::h || b == Basis::p; }

}  // namespace

Rational to_monomial_entry(Basis b, const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw Error(ErrorKind::SizeMismatch, lambda.to_string() + " vs " + mu.to_string());
  }
  switch (b) {
    case Basis::m: return lambda == mu ? 1 : 0;
    case Basis::s: return Rational(static_cast<long>(kostka(lambda, mu)));
    default: {
      std::map<std::pair<std::size_t, std::vector<int>>, long long> memo;
      std::vector<int> rem = mu.parts();
      return Rational(static_cast<long>(count_monomial(b, lambda.parts(), 0, rem, memo)));
    }
  }
}

SymFunc convert(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  SymFunc result(target);
  for (const auto& [n, slice] : by_degree(f)) {
    const auto& parts = partitions_of(n);
    const std::size_t size = parts.size();

    std::vector<Coeff> mono(size);
    if (f.basis() == Basis::m) {
      for (const auto& [lambda, c] : slice) mono[partition_index(lambda)] = c;
    } else {
      auto src = transition(f.basis(), n);
      for (const auto& [lambda, c] : slice) {
        const auto& row = src->forward[partition_index(lambda)];
        for (std::size_t j = 0; j < size; ++j) {
          if (row[j] != 0) mono[j] += c * row[j];
        }
      }
    }

    if (target == Basis::m) {
      for (std::size_t j = 0; j < size; ++j) result.add_term(parts[j], mono[j]);
      continue;
    }
    auto dst = transition(target, n);
    for (std::size_t j = 0; j < size; ++j) {
      if (mono[j].is_zero()) continue;
      const auto& row = dst->inverse[j];
      for (std::size_t k = 0; k < size; ++k) {
        if (row[k] != 0) result.add_term(parts[k], mono[j] * row[k]);
      }
    }
  }
  return result;
}

bool equal(const SymFunc& a, const SymFunc& b) { return convert(a, Basis::e) == convert(b, Basis::e); }

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
  const Basis work = is_multiplicative(f.basis()) ? f.basis() : Basis::p;
  const SymFunc a = convert(f, work);
  const SymFunc b = convert(g, work);
  SymFunc product(work);
  for (const auto& [la, ca] : a.terms()) {
    for (const auto& [lb, cb] : b.terms()) product.add_term(la.merged(lb), ca * cb);
  }
  return convert(product, f.basis());
}

SymFunc omega(const SymFunc& f) {
  SymFunc p = convert(f, Basis::p);
  SymFunc r(Basis::p);
  for (const auto& [lambda, c] : p.terms()) {
    const bool odd = (lambda.size() - lambda.length()) % 2 != 0;
    r.add_term(lambda, odd ? -c : c);
  }
  return convert(r, f.basis());
}

SymFunc pleth_q_minus_1(const SymFunc& f) {
  SymFunc p = convert(f, Basis::p);
  SymFunc r(Basis::p);
  for (const auto& [lambda, c] : p.terms()) {
    Coeff factor(1);
    for (int k : lambda) factor *= q_power_minus_one(k);
    r.add_term(lambda, c * factor);
  }
  return convert(r, f.basis());
}

std::optional<SignedPartition> straighten_schur(const Composition& alpha) {
  const int len = static_cast<int>(alpha.size());
  std::vector<int> shifted(alpha.size());
  for (int i = 0; i < len; ++i) {
    shifted[i] = alpha[i] + (len - 1 - i);
    if (shifted[i] < 0) return std::nullopt;
  }
  // Insertion sort into decreasing order, counting transpositions for the sign.
  int sign = 1;
  for (int i = 1; i < len; ++i) {
    for (int j = i; j > 0 && shifted[j - 1] < shifted[j]; --j) {
      std::swap(shifted[j - 1], shifted[j]);
      sign = -sign;
    }
  }
  for (int i = 1; i < len; ++i) {
    if (shifted[i - 1] == shifted[i]) return std::nullopt;
  }
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    const int part = shifted[i] - (len - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return SignedPartition{sign, Partition(std::move(parts))};
}

Coeff coefficient(const SymFunc& f, Basis basis, const Partition& lambda) {
  return convert(f, basis).at(lambda);
}

}  // namespace vsl

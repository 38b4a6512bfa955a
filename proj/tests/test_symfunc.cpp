#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vsl/symfunc.hpp"

using vsl::Basis;
using vsl::Coeff;
using vsl::Partition;
using vsl::SymFunc;

namespace {

SymFunc el(Basis b, Partition p, Coeff c = 1) { return SymFunc::element(b, p, c); }
Coeff q(int k = 1) { return Coeff::q(k); }

const Basis kAll[] = {Basis::m, Basis::e, Basis::h, Basis::p, Basis::s};

}  // namespace

TEST_CASE("conversion examples") {
  CHECK(vsl::convert(el(Basis::e, {2}), Basis::m) == el(Basis::m, {1, 1}));
  CHECK(vsl::convert(el(Basis::p, {2}), Basis::m) == el(Basis::m, {2}));
  SymFunc s21(Basis::e);
  s21.add_term({2, 1}, 1);
  s21.add_term({3}, -1);
  CHECK(vsl::convert(el(Basis::s, {2, 1}), Basis::e) == s21);
  CHECK(vsl::parse_basis("h") == Basis::h);
  CHECK_THROWS_AS(vsl::parse_basis("x"), vsl::Error);
}

TEST_CASE("multiplication examples") {
  CHECK(vsl::multiply(el(Basis::e, {1}), el(Basis::e, {1})) == el(Basis::e, {1, 1}));
  CHECK(vsl::multiply(el(Basis::e, {2}), el(Basis::e, {})) == el(Basis::e, {2}));
  SymFunc expect(Basis::m);
  expect.add_term({2}, 1);
  expect.add_term({1, 1}, 2);
  CHECK(vsl::multiply(el(Basis::m, {1}), el(Basis::m, {1})) == expect);
}

TEST_CASE("omega and plethysm examples") {
  CHECK(vsl::equal(vsl::omega(el(Basis::e, {2, 1})), el(Basis::h, {2, 1})));
  CHECK(vsl::omega(el(Basis::e, {2, 1})).basis() == Basis::e);
  CHECK(vsl::omega(el(Basis::p, {2})) == el(Basis::p, {2}, -1));
  CHECK(vsl::pleth_q_minus_1(el(Basis::p, {1})) == el(Basis::p, {1}, q() - 1));
  CHECK(vsl::pleth_q_minus_1(el(Basis::p, {1, 1})) == el(Basis::p, {1, 1}, (q() - 1) * (q() - 1)));
  SymFunc e2 = vsl::convert(el(Basis::e, {2}), Basis::p);
  SymFunc expect(Basis::p);
  expect.add_term({1, 1}, (q() - 1) * (q() - 1) * vsl::Rational(1, 2));
  expect.add_term({2}, (q(2) - 1) * vsl::Rational(-1, 2));
  CHECK(vsl::pleth_q_minus_1(e2) == expect);
}

TEST_CASE("straightening") {
  CHECK_FALSE(vsl::straighten_schur({1, 2}).has_value());
  auto a = vsl::straighten_schur({2, 1});
  REQUIRE(a.has_value());
  CHECK(a->sign == 1);
  CHECK(a->shape == Partition{2, 1});
  auto b = vsl::straighten_schur({1, 3, 1});
  REQUIRE(b.has_value());
  CHECK(b->sign == -1);
  CHECK(b->shape == Partition{2, 2, 1});
}

TEST_CASE("coefficient extraction") {
  CHECK(vsl::coefficient(el(Basis::e, {3}), Basis::e, {3}) == Coeff(1));
  CHECK(vsl::coefficient(el(Basis::e, {3}), Basis::e, {2, 1}).is_zero());
  CHECK(vsl::coefficient(el(Basis::e, {2}), Basis::s, {1, 1}) == Coeff(1));
}

TEST_CASE("printing") {
  SymFunc f(Basis::s);
  f.add_term({1, 1, 1}, q(2));
  f.add_term({2, 1}, q());
  CHECK(f.to_string() == "q^2*s[1,1,1] + q*s[2,1]");
  CHECK(SymFunc(Basis::e).to_string() == "0");
}

TEST_CASE("e, h, p expand into monomials as the direct count") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : vsl::partitions_of(n)) {
      for (const auto& mu : vsl::partitions_of(n)) {
        CHECK(vsl::to_monomial_entry(Basis::e, lambda, mu) == oracle::monomial_coefficient('e', lambda, mu));
        CHECK(vsl::to_monomial_entry(Basis::h, lambda, mu) == oracle::monomial_coefficient('h', lambda, mu));
        CHECK(vsl::to_monomial_entry(Basis::p, lambda, mu) == oracle::monomial_coefficient('p', lambda, mu));
      }
    }
  }
}

TEST_CASE("Schur functions expand by tableau counts") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& mu : vsl::partitions_of(n)) {
      const SymFunc m = vsl::convert(el(Basis::s, mu), Basis::m);
      for (const auto& lambda : vsl::partitions_of(n)) {
        CHECK(m.at(lambda) == Coeff(oracle::kostka(mu, lambda)));
      }
    }
  }
}

TEST_CASE("dual Kostka identity gives h") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : vsl::partitions_of(n)) {
      SymFunc f(Basis::s);
      for (const auto& mu : vsl::partitions_of(n)) f.add_term(mu, oracle::kostka(mu, lambda));
      CHECK(vsl::equal(f, el(Basis::h, lambda)));
    }
  }
}

TEST_CASE("omega sends e to h") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : vsl::partitions_of(n)) {
      CHECK(vsl::equal(vsl::omega(el(Basis::e, lambda)), el(Basis::h, lambda)));
    }
  }
}

TEST_CASE("conversion round trips") {
  std::mt19937 rng(3);
  for (int n = 0; n <= 6; ++n) {
    for (Basis a : kAll) {
      const SymFunc f = oracle::random_symfunc(rng, a, n);
      for (Basis b : kAll) CHECK(vsl::convert(vsl::convert(f, b), a) == f);
    }
  }
}

TEST_CASE("mixed-degree arithmetic") {
  SymFunc f = el(Basis::e, {2}) + el(Basis::h, {1});
  CHECK(f.basis() == Basis::e);
  CHECK(f.at({1}) == Coeff(1));
  f -= el(Basis::e, {2});
  CHECK(f == el(Basis::e, {1}));
}

TEST_CASE("products agree across bases") {
  std::mt19937 rng(5);
  for (int i = 0; i < 12; ++i) {
    const SymFunc f = oracle::random_symfunc(rng, Basis::s, 1 + i % 3);
    const SymFunc g = oracle::random_symfunc(rng, Basis::m, 1 + (i / 3) % 3);
    const SymFunc fg = vsl::multiply(f, g);
    for (Basis b : kAll) {
      CHECK(vsl::equal(vsl::multiply(vsl::convert(f, b), vsl::convert(g, b)), fg));
    }
  }
}

TEST_CASE("plethysm is multiplicative") {
  std::mt19937 rng(9);
  for (int i = 0; i < 12; ++i) {
    const SymFunc f = oracle::random_symfunc(rng, kAll[i % 5], 1 + i % 3);
    const SymFunc g = oracle::random_symfunc(rng, kAll[(i + 2) % 5], 1 + (i / 2) % 3);
    CHECK(vsl::equal(vsl::pleth_q_minus_1(vsl::multiply(f, g)),
                     vsl::multiply(vsl::pleth_q_minus_1(f), vsl::pleth_q_minus_1(g))));
  }
}

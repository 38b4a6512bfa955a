#include <doctest.h>

#include "vsl/schur.hpp"

using vsl::Basis;
using vsl::Coeff;
using vsl::Partition;
using vsl::SchroederPath;
using vsl::SymFunc;

namespace {

SchroederPath P(const std::string& w) { return SchroederPath::parse(w); }

}  // namespace

TEST_CASE("worked example") {
  SymFunc expect(Basis::s);
  expect.add_term({1, 1, 1}, Coeff::q(2));
  expect.add_term({2, 1}, Coeff::q());
  CHECK(vsl::elw_schur(P("nndee")) == expect);
  CHECK(vsl::kostka_schur(P("nndee")) == expect);
}

TEST_CASE("diagonal chains give a single column") {
  for (int k = 1; k <= 5; ++k) {
    const auto p = P("n" + std::string(k, 'd') + "e");
    const Partition column(std::vector<int>(static_cast<std::size_t>(k + 1), 1));
    CHECK(vsl::elw_schur(p) == SymFunc::element(Basis::s, column));
    CHECK(vsl::kostka_schur(p) == SymFunc::element(Basis::s, column));
    CHECK(vsl::permutation_colorings(vsl::graph(p)).size() == 1);
  }
}

TEST_CASE("permutation colorings and gaps") {
  CHECK(vsl::permutation_colorings(vsl::graph(P("nnee"))).size() == 2);
  CHECK(vsl::inverse_ascent_set({0, 2, 3, 1}) == std::vector<int>{2});
  CHECK(vsl::gap_composition({2}, 3) == vsl::Composition{2, 1});
  CHECK(vsl::gap_composition({}, 3) == vsl::Composition{3});
  CHECK(vsl::gap_composition({1, 2}, 3) == vsl::Composition{1, 1, 1});
}

TEST_CASE("three Schur expansions agree") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& p : vsl::enumerate(n)) {
      const SymFunc direct = vsl::convert(vsl::llt(p), Basis::s);
      CHECK(vsl::elw_schur(p) == direct);
      CHECK(vsl::kostka_schur(p) == direct);
    }
  }
}

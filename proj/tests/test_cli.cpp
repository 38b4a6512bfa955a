#include <doctest.h>

#include <sstream>

#include "vsl/cli.hpp"
#include "vsl/json_io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = vsl::run(args, out, err);
  return {code, out.str(), err.str()};
}

vsl::Json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  const auto r = run(args);
  return vsl::Json::parse(r.out);
}

}  // namespace

TEST_CASE("paths") {
  CHECK(run({"paths", "3"}).out == "11\n");
  const auto j = run_json({"paths", "5"});
  CHECK(j["schema"] == vsl::kSchema);
  CHECK(j["command"] == "paths");
  CHECK(j["exit_code"] == 0);
  CHECK(run({"paths", "2", "--dyck", "--witness"}).out.find("nnee") != std::string::npos);
}

TEST_CASE("expand") {
  for (const std::string method : {"colorings", "orientations", "recursion"}) {
    const auto r = run({"expand", "nndee", "--basis", "s", "--method", method});
    CHECK(r.code == 0);
    CHECK(r.out == "q^2*s[1,1,1] + q*s[2,1]\n");
  }
  CHECK(run({"expand", "nnee", "--shift-q", "1"}).out == "e[1,1] + q*e[2]\n");
}

TEST_CASE("expand methods agree on every path") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : vsl::enumerate(n)) {
      const auto a = run_json({"expand", p.word(), "--method", "colorings"})["result"];
      CHECK(run_json({"expand", p.word(), "--method", "orientations"})["result"] == a);
      CHECK(run_json({"expand", p.word(), "--method", "recursion"})["result"] == a);
    }
  }
}

TEST_CASE("nabla-p json") {
  const auto r = run({"nabla-p", "2", "--json"});
  REQUIRE(r.code == 0);
  const auto j = vsl::Json::parse(r.out);
  const vsl::SymFunc f = vsl::symfunc_from_json(j["result"]);
  CHECK(f.at({2}) == vsl::Coeff(1));
  CHECK(f.at({1, 1}) == vsl::Coeff::q() + vsl::Coeff::t() + vsl::Coeff::monomial(1, 1));
  CHECK(run({"nabla-p", "2"}).out.find("(-1)^(n-1)") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"expand", "nx"}).code == 2);
  CHECK(run({"expand", "en"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"paths", "99"}).code == 2);
  CHECK(run({"--unsafe-max-n", "9", "paths", "9"}).code == 0);
  CHECK(run({"paths", "9"}).code == 2);
  CHECK(run({"verify", "--suite", "unicellular", "--max-n", "3"}).code == 0);
  CHECK(run({"verify", "--suite", "nope", "--max-n", "3"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify reports") {
  const auto j = run_json({"verify", "--suite", "all", "--max-n", "4"});
  CHECK(j["exit_code"] == 0);
  CHECK(j["result"]["reports"].size() == 8);
  for (const auto& r : j["result"]["reports"]) CHECK(r["passed"] == true);
  CHECK(run({"equality", "--max-n", "4"}).code == 0);
}

TEST_CASE("other commands") {
  CHECK(run({"schur", "nndee", "--method", "kostka"}).out == "q^2*s[1,1,1] + q*s[2,1]\n");
  CHECK(run({"chromatic", "nnee", "--basis", "e"}).out == "(1 + q)*e[2]\n");
  CHECK(run({"hl", "2"}).code == 0);
  CHECK(run({"nabla-e", "2"}).code == 0);
  CHECK(run({"survey", "--max-n", "3"}).code == 0);
}

TEST_CASE("json round trips") {
  vsl::Coeff c = vsl::Coeff::monomial(2, -1, vsl::Rational(3, 7)) - vsl::Coeff::q();
  CHECK(vsl::coeff_from_json(vsl::Json::parse(vsl::to_json(c).dump())) == c);
  vsl::Partition p{3, 1, 1};
  CHECK(vsl::partition_from_json(vsl::to_json(p)) == p);
  vsl::SymFunc f(vsl::Basis::h);
  f.add_term({2, 1}, c);
  f.add_term({3}, 5);
  CHECK(vsl::symfunc_from_json(vsl::Json::parse(vsl::to_json(f).dump())) == f);
  const auto g = vsl::graph(vsl::SchroederPath::parse("nndnnenedeee"));
  CHECK(vsl::graph_from_json(vsl::to_json(g)) == g);
  for (const std::string cmd : {"paths", "expand"}) {
    std::vector<std::string> args{"--json", cmd, cmd == "paths" ? "4" : "nnddndeee"};
    const auto j = vsl::Json::parse(run(args).out);
    CHECK(vsl::Json::parse(j.dump()) == j);
    CHECK(j.contains("parameters"));
    CHECK(j.contains("wall_time_ms"));
  }
}

#include "vsl/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <optional>

#include "vsl/harmonics.hpp"
#include "vsl/json_io.hpp"
#include "vsl/llt.hpp"
#include "vsl/parallel.hpp"
#include "vsl/relations.hpp"
#include "vsl/schur.hpp"

namespace vsl {

namespace {

constexpr const char* kBounceConvention =
    "classical forward bounce path from (0,0); bounce = sum of (n - j) over the diagonal touch points j < n";

struct Options {
  bool json = false;
  bool witness = false;
  int threads = 0;
  int unsafe_max_n = 0;
};

struct Output {
  Json parameters = Json::object();
  Json result;
  std::string text;
  int exit_code = 0;
};

void raise_limits(int n) {
  Limits& l = limits();
  for (int* field : {&l.partition_n, &l.path_enum_n, &l.coloring_n, &l.verify_n, &l.chromatic_verify_n,
                     &l.nabla_e_n, &l.nabla_p_n, &l.hall_littlewood_n, &l.survey_n, &l.path_graph_k}) {
    *field = std::max(*field, n);
  }
  l.partition_n = std::max(l.partition_n, n);
  l.max_area = std::max(l.max_area, n * (n - 1) / 2);
}

std::string report_text(const RelationReport& r, bool witness) {
  std::string s = r.suite + ": " + std::to_string(r.instances) + " instances, " +
                  std::to_string(r.failures.size()) + " failures\n";
  if (!witness && r.passed()) return s;
  std::size_t shown = 0;
  for (const auto& f : r.failures) {
    if (!witness && shown++ >= 10) {
      s += "  ...\n";
      break;
    }
    s += "  FAIL " + f.instance.kind + " from " + f.instance.source;
    if (f.instance.point) {
      s += " at (" + std::to_string(f.instance.point->first) + "," + std::to_string(f.instance.point->second) + ")";
    }
    s += f.note.empty() ? ": " + f.discrepancy.to_string() : ": " + f.note;
    s += "\n";
  }
  return s;
}

SymFunc expand_by(const SchroederPath& p, const std::string& method) {
  if (method == "colorings") return llt(p);
  if (method == "orientations") return llt_via_orientations(p);
  if (method == "recursion") return recursion_evaluate(p);
  throw Error(ErrorKind::InvalidArgument, "unknown method '" + method + "'");
}

SymFunc shift_all(const SymFunc& f, long c) {
  return f.map_coeffs([c](const Coeff& a) { return shift_q(a, c); });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<char*> argv;
  std::vector<std::string> storage{"vsl"};
  storage.insert(storage.end(), args.begin(), args.end());
  for (auto& a : storage) argv.push_back(a.data());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vertical-strip LLT polynomials from Schroeder paths"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Options opt;
  app.add_flag("--json", opt.json, "Print a JSON document");
  app.add_flag("--witness", opt.witness, "Include witnesses and details");
  app.add_option("--threads", opt.threads, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--unsafe-max-n", opt.unsafe_max_n, "Raise every size guard to this value");

  int n = 0;
  int max_n = 0;
  bool dyck = false;
  std::string word;
  std::string basis = "e";
  std::string method;
  std::string suite = "all";
  std::optional<long> shift;
  std::vector<int> mu_parts;

  auto* paths_cmd = app.add_subcommand("paths", "Count (or list) Schroeder paths of size n");
  paths_cmd->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
  paths_cmd->add_flag("--dyck", dyck, "Dyck paths only");

  auto* expand_cmd = app.add_subcommand("expand", "Expand G_P in a basis");
  expand_cmd->add_option("word", word)->required();
  expand_cmd->add_option("--basis", basis)->check(CLI::IsMember({"m", "e", "h", "p", "s"}));
  expand_cmd->add_option("--shift-q", shift, "Substitute q -> q + c");
  method = "colorings";
  expand_cmd->add_option("--method", method)->check(CLI::IsMember({"colorings", "orientations", "recursion"}));

  auto* equality_cmd = app.add_subcommand("equality", "Check the coloring/orientation identity on all paths");
  equality_cmd->add_option("--max-n", max_n)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run relation suites");
  verify_cmd->add_option("--suite", suite)
      ->check(CLI::IsMember({"unicellular", "bounceA", "bounceB", "bounceND", "generalized", "dyck", "dual",
                             "chromatic", "extended", "all"}));
  verify_cmd->add_option("--max-n", max_n)->required();

  auto* schur_cmd = app.add_subcommand("schur", "Schur expansion of G_P");
  schur_cmd->add_option("word", word)->required();
  std::string schur_method = "elw";
  schur_cmd->add_option("--method", schur_method)->check(CLI::IsMember({"elw", "kostka", "convert"}));

  auto* nabla_e_cmd = app.add_subcommand("nabla-e", "nabla e_n via Dyck paths");
  nabla_e_cmd->add_option("n", n)->required();
  auto* nabla_p_cmd = app.add_subcommand("nabla-p", "(-1)^(n-1) nabla p_n via weak compositions");
  nabla_p_cmd->add_option("n", n)->required();

  auto* hl_cmd = app.add_subcommand("hl", "Transformed Hall-Littlewood H_{mu'}");
  hl_cmd->add_option("parts", mu_parts)->required();

  auto* chromatic_cmd = app.add_subcommand("chromatic", "Chromatic quasisymmetric function of a Dyck path");
  chromatic_cmd->add_option("word", word)->required();
  chromatic_cmd->add_option("--basis", basis)->check(CLI::IsMember({"m", "e", "h", "p", "s"}));

  auto* survey_cmd = app.add_subcommand("survey", "Unimodality survey of e-coefficients");
  survey_cmd->add_option("--max-n", max_n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  const int saved_threads = thread_count();
  const Limits saved_limits = limits();
  thread_count() = opt.threads;
  if (opt.unsafe_max_n > 0) raise_limits(opt.unsafe_max_n);

  auto* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();
  const auto started = std::chrono::steady_clock::now();
  Output o;
  int code = 0;
  try {
    if (name == "paths") {
      const auto all = dyck ? enumerate_dyck(n) : enumerate(n);
      o.parameters = {{"n", n}, {"dyck", dyck}};
      Json words = Json::array();
      for (const auto& p : all) words.push_back(p.word());
      o.result = {{"count", all.size()}};
      if (opt.witness) o.result["paths"] = words;
      o.text = std::to_string(all.size()) + "\n";
      if (opt.witness) {
        for (const auto& p : all) o.text += p.word() + (p.is_dyck() ? "  (dyck)" : "") + "\n";
      }
    } else if (name == "expand") {
      const auto p = SchroederPath::parse(word);
      SymFunc f = convert(expand_by(p, method), parse_basis(basis));
      if (shift) f = shift_all(f, *shift);
      o.parameters = {{"word", word}, {"basis", basis}, {"method", method}};
      if (shift) o.parameters["shift_q"] = *shift;
      o.result = to_json(f);
      o.text = f.to_string() + "\n";
      if (opt.witness) {
        const auto g = graph(p);
        o.result["graph"] = to_json(g);
        o.result["area"] = area(p);
        o.text += "graph: " + to_json(g).dump() + "\narea: " + std::to_string(area(p)) + "\n";
      }
    } else if (name == "equality") {
      check_bound(max_n, limits().verify_n, "max n");
      std::vector<SchroederPath> all;
      for (int k = 1; k <= max_n; ++k) {
        auto level = enumerate(k);
        all.insert(all.end(), level.begin(), level.end());
      }
      auto diffs = parallel_map(all, [](const SchroederPath& p) {
        return shift_all(convert(llt(p), Basis::e), 1) - orientation_e_expansion(p);
      });
      RelationReport r;
      r.suite = "equality";
      r.instances = static_cast<long>(all.size());
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (!diffs[i].is_zero()) r.failures.push_back({{all[i].word(), std::nullopt, "main", {}}, diffs[i], ""});
      }
      o.parameters = {{"max_n", max_n}};
      o.result = to_json(r, opt.witness);
      o.text = report_text(r, opt.witness);
      o.exit_code = r.passed() ? 0 : 1;
    } else if (name == "verify") {
      std::vector<Suite> suites = suite == "all" ? required_suites() : std::vector<Suite>{parse_suite(suite)};
      Json reports = Json::array();
      for (Suite s : suites) {
        const auto r = verify(s, s == Suite::chromatic ? std::min(max_n, limits().chromatic_verify_n) : max_n);
        reports.push_back(to_json(r, opt.witness));
        o.text += report_text(r, opt.witness);
        if (!r.passed()) o.exit_code = 1;
      }
      o.parameters = {{"suite", suite}, {"max_n", max_n}};
      o.result = {{"reports", reports}};
    } else if (name == "schur") {
      const auto p = SchroederPath::parse(word);
      SymFunc f = schur_method == "elw"      ? elw_schur(p)
                  : schur_method == "kostka" ? kostka_schur(p)
                                             : convert(llt(p), Basis::s);
      o.parameters = {{"word", word}, {"method", schur_method}};
      o.result = to_json(f);
      o.text = f.to_string() + "\n";
    } else if (name == "nabla-e") {
      const SymFunc f = nabla_e(n);
      o.parameters = {{"n", n}, {"bounce_convention", kBounceConvention}};
      o.result = to_json(f);
      o.text = "nabla e_" + std::to_string(n) + " = " + f.to_string() + "\n";
    } else if (name == "nabla-p") {
      const SymFunc f = nabla_p(n);
      o.parameters = {{"n", n}, {"normalization", "(-1)^(n-1)"}};
      o.result = to_json(f);
      o.text = "(-1)^(n-1) nabla p_" + std::to_string(n) + " = " + f.to_string() + "\n";
    } else if (name == "hl") {
      const Partition mu = Partition::from_unsorted(mu_parts);
      const SymFunc f = hall_littlewood(mu);
      o.parameters = {{"mu", to_json(mu)}, {"path", p_mu(mu).word()}};
      o.result = to_json(f);
      o.text = "H_" + conjugate(mu).to_string() + " = " + f.to_string() + "\n";
    } else if (name == "chromatic") {
      const SymFunc f = convert(chromatic(SchroederPath::parse(word)), parse_basis(basis));
      o.parameters = {{"word", word}, {"basis", basis}};
      o.result = to_json(f);
      o.text = f.to_string() + "\n";
    } else if (name == "survey") {
      const auto r = survey_e_coefficients(max_n);
      o.parameters = {{"max_n", max_n}};
      o.result = to_json(r);
      if (!opt.witness) o.result.erase("entries");
      o.text = "coefficients: " + std::to_string(r.entries.size()) + "\nnot unimodal: " +
               std::to_string(r.not_unimodal) + "\nnot log-concave: " + std::to_string(r.not_log_concave) +
               "\nnegative: " + std::to_string(r.negative) + "\n";
      if (opt.witness) {
        for (const auto& e : r.entries) {
          if (e.unimodal && e.log_concave) continue;
          o.text += e.path + " " + e.shape.to_string() + (e.unimodal ? "" : " not-unimodal") +
                    (e.log_concave ? "" : " not-log-concave") + "\n";
        }
      }
    }
    code = o.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    code = 2;
  }

  if (code != 2) {
    if (opt.json) {
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
      Json doc = {{"schema", kSchema},
                  {"command", name},
                  {"parameters", o.parameters},
                  {"result", o.result},
                  {"exit_code", code},
                  {"wall_time_ms", ms}};
      out << doc.dump(2) << "\n";
    } else {
      out << o.text;
    }
  }
  thread_count() = saved_threads;
  limits() = saved_limits;
  return code;
}

}  // namespace vsl

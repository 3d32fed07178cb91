#include "svinv/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "svinv/cohomology.hpp"
#include "svinv/errors.hpp"
#include "svinv/inv_solver.hpp"
#include "svinv/serialize.hpp"
#include "svinv/sweep.hpp"

namespace svinv {

namespace {

struct Options {
  std::string lambda;
  std::string mu;
  std::string s;
  std::int64_t window = 8;
  std::int64_t core = 4;
  std::string convention = "lemma";
  std::string weight_filter = "on";
  std::string format;
  std::string out_path;
  std::string tag;
  std::string form_path;
  std::string config_path;
  unsigned jobs = 1;
  std::vector<std::string> elements;
};

void add_param_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--lambda", o.lambda, "lambda as an exact rational, e.g. -2 or 1/3")->required();
  cmd->add_option("--mu", o.mu, "mu as an exact rational")->required();
  cmd->add_option("--s", o.s, "sector: 0 or 1/2")->required();
}

void add_window_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--window", o.window, "window bound M")->capture_default_str();
  cmd->add_option("--core", o.core, "core bound C (C <= M/2)")->capture_default_str();
}

void add_output_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", o.out_path, "write the report to PATH instead of stdout");
}

void add_convention_flag(CLI::App* cmd, Options& o) {
  cmd->add_option("--convention", o.convention, "printed or lemma")
      ->check(CLI::IsMember({"printed", "lemma"}))
      ->capture_default_str();
}

class UsageError : public Error {
 public:
  using Error::Error;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

Window make_window(const Options& o) {
  Window w{o.window, o.core};
  if (w.bound < 0 || w.core < 0) throw WindowError("window bounds must be non-negative");
  if (w.bound < 2 * w.core) {
    throw WindowError("--window " + std::to_string(o.window) + " is smaller than 2 * --core " +
                      std::to_string(o.core));
  }
  return w;
}

void require_json(const Options& o, const std::string& command) {
  if (!o.format.empty() && o.format != "json") {
    throw UsageError(command + " does not support --format " + o.format);
  }
}

BilinearForm form_for(const Options& o, const AlgebraParams& params, const Window& window) {
  if (!o.form_path.empty()) {
    BilinearForm f = form_from_json(read_json_file(o.form_path));
    if (!(f.params() == params)) throw UsageError("form parameters differ from --lambda/--mu/--s");
    return f;
  }
  const FamilyTag tag =
      o.tag.empty() ? classify_tag(params, parse_convention(o.convention)) : parse_family_tag(o.tag);
  return closed_form(params, tag, Window{window.bound, 0});
}

}  // namespace

int execute_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariant forms and degree-2 cohomology of deformative Schrodinger-Virasoro algebras",
               "svinv"};
  app.require_subcommand(1);
  Options o;

  auto* bracket_cmd = app.add_subcommand("bracket", "bracket of two basis elements");
  add_param_flags(bracket_cmd, o);
  bracket_cmd->add_option("elements", o.elements, "two basis elements, e.g. L(1) Y(-1)")
      ->required()
      ->expected(2);

  auto* classify_cmd = app.add_subcommand("classify", "classify invariant forms for one parameter point");
  add_param_flags(classify_cmd, o);
  add_window_flags(classify_cmd, o);
  add_convention_flag(classify_cmd, o);
  add_output_flags(classify_cmd, o);

  auto* closed_cmd = app.add_subcommand("closed-form", "window restriction of a family generator");
  add_param_flags(closed_cmd, o);
  add_window_flags(closed_cmd, o);
  add_convention_flag(closed_cmd, o);
  closed_cmd->add_option("--tag", o.tag, "family tag, overrides --convention");
  add_output_flags(closed_cmd, o);

  auto* check_cmd = app.add_subcommand("check-invariance", "list invariance violations on the window");
  add_param_flags(check_cmd, o);
  add_window_flags(check_cmd, o);
  add_convention_flag(check_cmd, o);
  check_cmd->add_option("--tag", o.tag, "family tag, overrides --convention");
  check_cmd->add_option("--form", o.form_path, "read the form from a JSON file");
  add_output_flags(check_cmd, o);

  auto* radical_cmd = app.add_subcommand("radical", "radical of a form on the window");
  add_param_flags(radical_cmd, o);
  add_window_flags(radical_cmd, o);
  add_convention_flag(radical_cmd, o);
  radical_cmd->add_option("--tag", o.tag, "family tag, overrides --convention");
  radical_cmd->add_option("--form", o.form_path, "read the form from a JSON file");
  add_output_flags(radical_cmd, o);

  auto* solve_cmd = app.add_subcommand("solve-inv", "solve the invariance system and compare");
  add_param_flags(solve_cmd, o);
  add_window_flags(solve_cmd, o);
  add_convention_flag(solve_cmd, o);
  solve_cmd->add_option("--weight-filter", o.weight_filter, "on or off")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();
  add_output_flags(solve_cmd, o);

  auto* coh_cmd = app.add_subcommand("cohomology", "core dimensions of degree-2 cocycle spaces");
  add_param_flags(coh_cmd, o);
  add_window_flags(coh_cmd, o);
  add_output_flags(coh_cmd, o);

  auto* sweep_cmd = app.add_subcommand("sweep", "run a parameter grid");
  sweep_cmd->add_option("--config", o.config_path, "sweep configuration JSON")->required();
  sweep_cmd->add_option("--jobs", o.jobs, "worker threads")->capture_default_str();
  add_output_flags(sweep_cmd, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::ostringstream report;
  int code = kExitOk;
  try {
    if (*bracket_cmd) {
      const auto params = AlgebraParams::parse(o.lambda, o.mu, o.s);
      const auto x = parse_basis_element(o.elements[0], params);
      const auto y = parse_basis_element(o.elements[1], params);
      report << bracket(params, Element(x), Element(y)).str() << "\n";
    } else if (*sweep_cmd) {
      const SweepConfig cfg = sweep_config_from_json(read_json_file(o.config_path));
      const auto rows = run_sweep(cfg, o.jobs);
      if (o.format == "json") {
        report << dump(sweep_json(rows));
      } else {
        report << sweep_csv(rows);
      }
    } else {
      const auto params = AlgebraParams::parse(o.lambda, o.mu, o.s);
      const Window window = make_window(o);
      if (*classify_cmd) {
        require_json(o, "classify");
        const Convention conv = parse_convention(o.convention);
        const auto result = classify(params, conv, Window{window.bound, 0});
        Json j = classification_to_json(result, params);
        const FamilyTag printed = classify_tag(params, Convention::Printed);
        const FamilyTag lemma = classify_tag(params, Convention::Lemma);
        const Window full{window.bound, 0};
        const bool same = closed_form(params, printed, full) == closed_form(params, lemma, full);
        if (!same) {
          std::optional<Violation> witness;
          if (printed != FamilyTag::Zero) {
            witness = minimal_violation(closed_form(params, printed, full), full);
          }
          j["discrepancy"] = Json{{"printed_tag", to_string(printed)},
                                  {"lemma_tag", to_string(lemma)},
                                  {"witness", witness ? violation_to_json(*witness) : Json(nullptr)}};
        }
        report << dump(j);
      } else if (*closed_cmd) {
        require_json(o, "closed-form");
        const FamilyTag tag = o.tag.empty() ? classify_tag(params, parse_convention(o.convention))
                                            : parse_family_tag(o.tag);
        report << dump(form_to_json(closed_form(params, tag, Window{window.bound, 0})));
      } else if (*check_cmd) {
        require_json(o, "check-invariance");
        const Window full{window.bound, 0};
        const BilinearForm form = form_for(o, params, window);
        const auto violations = invariance_violations(form, full);
        Json list = Json::array();
        for (const auto& v : violations) list.push_back(violation_to_json(v));
        report << dump(Json{{"params", params_to_json(params)},
                            {"window", window_to_json(window)},
                            {"violation_count", violations.size()},
                            {"violations", std::move(list)}});
        if (!violations.empty()) code = kExitMismatch;
      } else if (*radical_cmd) {
        require_json(o, "radical");
        const Window full{window.bound, 0};
        const auto basis = radical_basis(form_for(o, params, window), full);
        Json list = Json::array();
        for (const auto& e : basis) list.push_back(e.str());
        report << dump(Json{{"params", params_to_json(params)},
                            {"window", window_to_json(window)},
                            {"dimension", basis.size()},
                            {"basis", std::move(list)}});
      } else if (*solve_cmd) {
        const InvSolution sol = solve_invariant_forms(params, window, o.weight_filter == "on");
        if (!sol.stabilized) {
          err << "warning: projected dimension not stabilized between M=" << window.bound
              << " and M=" << window.bound + 2 << "; enlarge --window\n";
          report << dump(Json{{"solution", solution_to_json(sol)}, {"report", nullptr}});
          code = kExitMismatch;
        } else {
          const DiscrepancyReport rep = compare_with_classification(sol, params);
          const bool ok = parse_convention(o.convention) == Convention::Printed ? rep.match_printed
                                                                               : rep.match_lemma;
          if (!ok) code = kExitMismatch;
          if (o.format == "csv") {
            report << discrepancy_csv(rep);
          } else {
            report << dump(Json{{"solution", solution_to_json(sol)},
                                {"report", discrepancy_to_json(rep)},
                                {"lemmas", lemma_verdicts_to_json(lemma_suite(params, sol))}});
          }
        }
      } else if (*coh_cmd) {
        require_json(o, "cohomology");
        const CohomologyReport rep = cohomology_report(params, window);
        if (!rep.stabilized) {
          err << "warning: cohomology dimensions not stabilized between M=" << window.bound
              << " and M=" << window.bound + 2 << "\n";
        }
        report << dump(cohomology_to_json(rep));
      }
    }
  } catch (const UnstabilizedError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (o.out_path.empty()) {
    out << report.str();
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << o.out_path << "'\n";
      return kExitUsage;
    }
    file << report.str();
  }
  return code;
}

}  // namespace svinv

#include "svinv/sweep.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "svinv/cohomology.hpp"
#include "svinv/errors.hpp"
#include "svinv/inv_solver.hpp"

namespace svinv {

SweepConfig sweep_config_from_json(const Json& j) {
  SweepConfig cfg;
  try {
    if (!j.is_object()) throw ParseError("sweep config must be a JSON object");
    if (j.contains("points")) {
      for (const auto& p : j.at("points")) cfg.points.push_back(params_from_json(p));
    }
    if (j.contains("grid")) {
      const Json& g = j.at("grid");
      for (const auto& l : g.at("lambda")) {
        for (const auto& m : g.at("mu")) {
          for (const auto& s : g.at("s")) {
            cfg.points.push_back(AlgebraParams::parse(l.get<std::string>(), m.get<std::string>(),
                                                      s.get<std::string>()));
          }
        }
      }
    }
    if (j.contains("window")) cfg.window.bound = j.at("window").get<std::int64_t>();
    if (j.contains("core")) cfg.window.core = j.at("core").get<std::int64_t>();
    if (j.contains("conventions")) {
      cfg.conventions.clear();
      for (const auto& c : j.at("conventions")) cfg.conventions.push_back(parse_convention(c.get<std::string>()));
    }
    if (j.contains("cohomology")) cfg.cohomology = j.at("cohomology").get<bool>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid sweep config: ") + e.what());
  }
  cfg.window.validate();
  if (cfg.window.bound < 2) throw WindowError("sweep window bound must be at least 2");
  return cfg;
}

std::vector<AlgebraParams> fixture_grid() {
  std::vector<AlgebraParams> out;
  for (const char* l : {"-5", "-4", "-3", "-2", "-1", "0", "1"}) {
    for (const char* m : {"-1", "-1/2", "0", "1/3", "1/2", "1", "3/2"}) {
      for (const char* s : {"0", "1/2"}) out.push_back(AlgebraParams::parse(l, m, s));
    }
  }
  return out;
}

SweepRow run_point(const AlgebraParams& params, const SweepConfig& config) {
  SweepRow row;
  row.params = params;
  row.window = config.window;
  const InvSolution sol = solve_invariant_forms(params, config.window);
  row.dim_solver = sol.projected_dimension;
  row.stabilized = sol.stabilized;
  row.dim_printed = classify_tag(params, Convention::Printed) == FamilyTag::Zero ? 0 : 1;
  row.dim_lemma = classify_tag(params, Convention::Lemma) == FamilyTag::Zero ? 0 : 1;
  if (!sol.stabilized) {
    row.match = "unstabilized";
  } else {
    const DiscrepancyReport rep = compare_with_classification(sol, params);
    std::string m;
    for (Convention c : config.conventions) {
      const bool ok = c == Convention::Printed ? rep.match_printed : rep.match_lemma;
      if (!ok) continue;
      if (!m.empty()) m += "+";
      m += to_string(c);
    }
    row.match = m.empty() ? "none" : m;
  }
  if (config.cohomology) {
    const CohomologyDims d = cohomology_dims(params, config.window);
    row.h2 = d.h2_core;
    row.hl2 = d.hl2_core;
    row.xi_image = d.xi_image_dim;
  }
  return row;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config, unsigned jobs) {
  std::vector<SweepRow> rows(config.points.size());
  if (jobs <= 1 || config.points.size() <= 1) {
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = run_point(config.points[i], config);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      try {
        rows[i] = run_point(config.points[i], config);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

namespace {

std::string opt_str(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : ""; }

const char* bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "lambda,mu,s,M,C,dim_solver,dim_printed,dim_lemma,stabilized,match,h2,hl2,xi_image\n";
  for (const auto& r : rows) {
    out += csv_field(r.params.lambda.str()) + "," + csv_field(r.params.mu.str()) + "," +
           csv_field(r.params.s.value().str()) + "," + std::to_string(r.window.bound) + "," +
           std::to_string(r.window.core) + "," + std::to_string(r.dim_solver) + "," +
           std::to_string(r.dim_printed) + "," + std::to_string(r.dim_lemma) + "," +
           bool_str(r.stabilized) + "," + csv_field(r.match) + "," + opt_str(r.h2) + "," +
           opt_str(r.hl2) + "," + opt_str(r.xi_image) + "\n";
  }
  return out;
}

Json sweep_json(const std::vector<SweepRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    auto opt = [](const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); };
    out.push_back(Json{{"params", params_to_json(r.params)},
                       {"window", window_to_json(r.window)},
                       {"dim_solver", r.dim_solver},
                       {"dim_printed", r.dim_printed},
                       {"dim_lemma", r.dim_lemma},
                       {"stabilized", r.stabilized},
                       {"match", r.match},
                       {"h2", opt(r.h2)},
                       {"hl2", opt(r.hl2)},
                       {"xi_image", opt(r.xi_image)}});
  }
  return out;
}

std::string discrepancy_csv(const DiscrepancyReport& r) {
  return "lambda,mu,s,M,C,dim,stabilized,match_printed,match_lemma\n" +
         csv_field(r.params.lambda.str()) + "," + csv_field(r.params.mu.str()) + "," +
         csv_field(r.params.s.value().str()) + "," + std::to_string(r.window.bound) + "," +
         std::to_string(r.window.core) + "," + std::to_string(r.solver_dim) + "," +
         bool_str(r.stabilized) + "," + bool_str(r.match_printed) + "," +
         bool_str(r.match_lemma) + "\n";
}

}  // namespace svinv

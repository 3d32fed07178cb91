#pragma once

#include <optional>
#include <string>
#include <vector>

#include "svinv/forms.hpp"
#include "svinv/serialize.hpp"

namespace svinv {

struct SweepConfig {
  std::vector<AlgebraParams> points;
  Window window{8, 4};
  std::vector<Convention> conventions{Convention::Printed, Convention::Lemma};
  bool cohomology = false;
};

/// Accepts {"points": [{"lambda", "mu", "s"}, ...]} and/or
/// {"grid": {"lambda": [...], "mu": [...], "s": [...]}} (expanded lambda-major),
/// plus optional "window", "core", "conventions", "cohomology".
/// Throws ParseError / DomainError / WindowError on invalid input.
SweepConfig sweep_config_from_json(const Json& j);

/// The 7 x 7 x 2 fixture grid.
std::vector<AlgebraParams> fixture_grid();

struct SweepRow {
  AlgebraParams params;
  Window window;
  std::size_t dim_solver = 0;
  int dim_printed = 0;
  int dim_lemma = 0;
  bool stabilized = false;
  std::string match;  // matching conventions joined by '+', "none" or "unstabilized"
  std::optional<std::size_t> h2;
  std::optional<std::size_t> hl2;
  std::optional<std::size_t> xi_image;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

SweepRow run_point(const AlgebraParams& params, const SweepConfig& config);

/// Runs every point on up to `jobs` threads; rows keep config order.
std::vector<SweepRow> run_sweep(const SweepConfig& config, unsigned jobs = 1);

std::string sweep_csv(const std::vector<SweepRow>& rows);
Json sweep_json(const std::vector<SweepRow>& rows);

/// Inv-solver row: lambda,mu,s,M,C,dim,stabilized,match_printed,match_lemma.
std::string discrepancy_csv(const DiscrepancyReport& r);

}  // namespace svinv

#pragma once

// Canonical JSON and CSV encodings. Object keys are emitted in sorted order
// and rationals as "p/q" strings, so equal values always serialize to equal
// bytes.

#include <string>
#include <vector>

#include <json.hpp>

#include "svinv/cohomology.hpp"
#include "svinv/forms.hpp"
#include "svinv/inv_solver.hpp"

namespace svinv {

using Json = nlohmann::json;

Json params_to_json(const AlgebraParams& p);
AlgebraParams params_from_json(const Json& j);

Json window_to_json(const Window& w);
Window window_from_json(const Json& j);

Json form_to_json(const BilinearForm& f);
BilinearForm form_from_json(const Json& j);

Json map_to_json(const BilinearMap& m);
BilinearMap map_from_json(const Json& j);

Json violation_to_json(const Violation& v);
Violation violation_from_json(const Json& j, const AlgebraParams& p);

Json classification_to_json(const ClassificationResult& r, const AlgebraParams& p);
Json solution_to_json(const InvSolution& s);
Json lemma_verdicts_to_json(const std::vector<LemmaVerdict>& verdicts);

Json discrepancy_to_json(const DiscrepancyReport& r);
DiscrepancyReport discrepancy_from_json(const Json& j);

Json cohomology_to_json(const CohomologyReport& r);
CohomologyReport cohomology_from_json(const Json& j);

/// Pretty-printed (two-space indent) with a trailing newline.
std::string dump(const Json& j);

/// RFC 4180 quoting for a single CSV field.
std::string csv_field(const std::string& s);

}  // namespace svinv

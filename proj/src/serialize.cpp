#include "svinv/serialize.hpp"

#include "svinv/errors.hpp"

namespace svinv {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid ") + what + " JSON: " + e.what());
  }
}

Json triple_to_json(const std::array<BasisElement, 3>& t) {
  return Json::array({t[0].str(), t[1].str(), t[2].str()});
}

std::array<BasisElement, 3> triple_from_json(const Json& j, const AlgebraParams& p) {
  if (!j.is_array() || j.size() != 3) throw ParseError("triple must be an array of 3 elements");
  return {parse_basis_element(j[0].get<std::string>(), p),
          parse_basis_element(j[1].get<std::string>(), p),
          parse_basis_element(j[2].get<std::string>(), p)};
}

Json dims_to_json(const CohomologyDims& d) {
  return Json{{"cocycles_core", d.cocycles_core},
              {"leibniz_cocycles_core", d.leibniz_cocycles_core},
              {"coboundaries_core", d.coboundaries_core},
              {"h2_core", d.h2_core},
              {"hl2_core", d.hl2_core},
              {"xi_image_dim", d.xi_image_dim},
              {"inv_dim", d.inv_dim}};
}

CohomologyDims dims_from_json(const Json& j) {
  CohomologyDims d;
  d.cocycles_core = j.at("cocycles_core").get<std::size_t>();
  d.leibniz_cocycles_core = j.at("leibniz_cocycles_core").get<std::size_t>();
  d.coboundaries_core = j.at("coboundaries_core").get<std::size_t>();
  d.h2_core = j.at("h2_core").get<std::size_t>();
  d.hl2_core = j.at("hl2_core").get<std::size_t>();
  d.xi_image_dim = j.at("xi_image_dim").get<std::size_t>();
  d.inv_dim = j.at("inv_dim").get<std::size_t>();
  return d;
}

Json cocycle_violation_to_json(const CocycleViolation& v) {
  return Json{{"triple", triple_to_json(v.triple)}, {"residual", v.residual.str()}};
}

Json optional_or_null(const auto& opt, auto&& convert) {
  return opt ? convert(*opt) : Json(nullptr);
}

Json witness_to_json(const Witness& w) {
  Json j{{"convention", to_string(w.convention)}};
  if (w.kind == Witness::Kind::ViolatedTriple) {
    j["kind"] = "violated_triple";
    j["triple"] = triple_to_json(w.violation->triple);
    j["residual"] = w.violation->residual.str();
  } else {
    j["kind"] = "kernel_outside_span";
    j["form"] = form_to_json(*w.form);
  }
  return j;
}

Witness witness_from_json(const Json& j, const AlgebraParams& p) {
  Witness w;
  w.convention = parse_convention(j.at("convention").get<std::string>());
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "violated_triple") {
    w.kind = Witness::Kind::ViolatedTriple;
    w.violation = violation_from_json(j, p);
  } else if (kind == "kernel_outside_span") {
    w.kind = Witness::Kind::KernelOutsideSpan;
    w.form = form_from_json(j.at("form"));
  } else {
    throw ParseError("unknown witness kind '" + kind + "'");
  }
  return w;
}

}  // namespace

Json params_to_json(const AlgebraParams& p) {
  return Json{{"lambda", p.lambda.str()}, {"mu", p.mu.str()}, {"s", p.s.value().str()}};
}

AlgebraParams params_from_json(const Json& j) {
  return guarded("params", [&] {
    return AlgebraParams::parse(j.at("lambda").get<std::string>(), j.at("mu").get<std::string>(),
                                j.at("s").get<std::string>());
  });
}

Json window_to_json(const Window& w) { return Json{{"M", w.bound}, {"C", w.core}}; }

Window window_from_json(const Json& j) {
  return guarded("window", [&] {
    Window w{j.at("M").get<std::int64_t>(), j.at("C").get<std::int64_t>()};
    w.validate();
    return w;
  });
}

Json form_to_json(const BilinearForm& f) {
  Json entries = Json::array();
  for (const auto& [k, v] : f.entries()) {
    entries.push_back(Json{{"a", k.first.str()}, {"b", k.second.str()}, {"val", v.str()}});
  }
  return Json{{"params", params_to_json(f.params())}, {"entries", std::move(entries)}};
}

BilinearForm form_from_json(const Json& j) {
  return guarded("form", [&] {
    BilinearForm f(params_from_json(j.at("params")));
    for (const auto& e : j.at("entries")) {
      const auto a = parse_basis_element(e.at("a").get<std::string>(), f.params());
      const auto b = parse_basis_element(e.at("b").get<std::string>(), f.params());
      f.add(a, b, Rational::parse(e.at("val").get<std::string>()));
    }
    return f;
  });
}

Json map_to_json(const BilinearMap& m) {
  Json entries = Json::array();
  for (const auto& [k, v] : m.entries()) {
    entries.push_back(Json{{"a", k.first.str()}, {"b", k.second.str()}, {"val", v.str()}});
  }
  return Json{{"params", params_to_json(m.params())}, {"entries", std::move(entries)}};
}

BilinearMap map_from_json(const Json& j) {
  return guarded("bilinear map", [&] {
    BilinearMap m(params_from_json(j.at("params")));
    for (const auto& e : j.at("entries")) {
      const auto a = parse_basis_element(e.at("a").get<std::string>(), m.params());
      const auto b = parse_basis_element(e.at("b").get<std::string>(), m.params());
      m.add(a, b, Rational::parse(e.at("val").get<std::string>()));
    }
    return m;
  });
}

Json violation_to_json(const Violation& v) {
  return Json{{"triple", triple_to_json(v.triple)}, {"residual", v.residual.str()}};
}

Violation violation_from_json(const Json& j, const AlgebraParams& p) {
  return guarded("violation", [&] {
    return Violation{triple_from_json(j.at("triple"), p),
                     Rational::parse(j.at("residual").get<std::string>())};
  });
}

Json classification_to_json(const ClassificationResult& r, const AlgebraParams& p) {
  return Json{{"params", params_to_json(p)},
              {"convention", to_string(r.convention)},
              {"tag", to_string(r.tag)},
              {"dimension", r.dimension},
              {"generator", optional_or_null(r.generator, form_to_json)}};
}

Json solution_to_json(const InvSolution& s) {
  Json basis = Json::array();
  for (const auto& f : s.projected_basis) basis.push_back(form_to_json(f));
  return Json{{"params", params_to_json(s.params)},
              {"window", window_to_json(s.window)},
              {"weight_filter", s.weight_filter},
              {"kernel_size", s.kernel.size()},
              {"projected_dimension", s.projected_dimension},
              {"next_projected_dimension", s.next_projected_dimension},
              {"stabilized", s.stabilized},
              {"projected_basis", std::move(basis)}};
}

Json lemma_verdicts_to_json(const std::vector<LemmaVerdict>& verdicts) {
  Json out = Json::array();
  for (const auto& v : verdicts) {
    const char* status = !v.applicable ? "not_applicable"
                         : !v.passed   ? "fail"
                         : v.vacuous   ? "vacuous"
                                       : "pass";
    out.push_back(Json{{"lemma", v.lemma},
                       {"status", status},
                       {"instances", v.instances},
                       {"witness", v.witness.empty() ? Json(nullptr) : Json(v.witness)}});
  }
  return out;
}

Json discrepancy_to_json(const DiscrepancyReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(witness_to_json(w));
  Json first = witnesses.empty() ? Json(nullptr) : witnesses.front();
  return Json{{"params", params_to_json(r.params)},
              {"window", window_to_json(r.window)},
              {"stabilized", r.stabilized},
              {"solver_dim", r.solver_dim},
              {"printed_dim", r.printed_dim},
              {"lemma_dim", r.lemma_dim},
              {"printed_tag", to_string(r.printed_tag)},
              {"lemma_tag", to_string(r.lemma_tag)},
              {"generator", optional_or_null(r.generator, form_to_json)},
              {"match_printed", r.match_printed},
              {"match_lemma", r.match_lemma},
              {"witness", std::move(first)},
              {"witnesses", std::move(witnesses)}};
}

DiscrepancyReport discrepancy_from_json(const Json& j) {
  return guarded("discrepancy report", [&] {
    DiscrepancyReport r;
    r.params = params_from_json(j.at("params"));
    r.window = window_from_json(j.at("window"));
    r.stabilized = j.at("stabilized").get<bool>();
    r.solver_dim = j.at("solver_dim").get<std::size_t>();
    r.printed_dim = j.at("printed_dim").get<int>();
    r.lemma_dim = j.at("lemma_dim").get<int>();
    r.printed_tag = parse_family_tag(j.at("printed_tag").get<std::string>());
    r.lemma_tag = parse_family_tag(j.at("lemma_tag").get<std::string>());
    if (!j.at("generator").is_null()) r.generator = form_from_json(j.at("generator"));
    r.match_printed = j.at("match_printed").get<bool>();
    r.match_lemma = j.at("match_lemma").get<bool>();
    for (const auto& w : j.at("witnesses")) r.witnesses.push_back(witness_from_json(w, r.params));
    return r;
  });
}

Json cohomology_to_json(const CohomologyReport& r) {
  Json chi = nullptr;
  if (r.chi_audit) {
    const ChiAudit& a = *r.chi_audit;
    chi = Json{{"tag", to_string(a.tag)},
               {"one_sided_violations", a.one_sided_violations},
               {"symmetric_violations", a.symmetric_violations},
               {"one_sided_witness", optional_or_null(a.one_sided_witness, cocycle_violation_to_json)},
               {"symmetric_witness", optional_or_null(a.symmetric_witness, cocycle_violation_to_json)}};
  }
  return Json{{"params", params_to_json(r.params)},
              {"window", window_to_json(r.window)},
              {"dims", dims_to_json(r.dims)},
              {"next_dims", dims_to_json(r.next_dims)},
              {"stabilized", r.stabilized},
              {"gap", r.gap},
              {"chi_audit", std::move(chi)}};
}

CohomologyReport cohomology_from_json(const Json& j) {
  return guarded("cohomology report", [&] {
    CohomologyReport r;
    r.params = params_from_json(j.at("params"));
    r.window = window_from_json(j.at("window"));
    r.dims = dims_from_json(j.at("dims"));
    r.next_dims = dims_from_json(j.at("next_dims"));
    r.stabilized = j.at("stabilized").get<bool>();
    r.gap = j.at("gap").get<std::int64_t>();
    const Json& chi = j.at("chi_audit");
    if (!chi.is_null()) {
      ChiAudit a;
      a.tag = parse_family_tag(chi.at("tag").get<std::string>());
      a.one_sided_violations = chi.at("one_sided_violations").get<std::size_t>();
      a.symmetric_violations = chi.at("symmetric_violations").get<std::size_t>();
      auto read = [&](const Json& w) -> std::optional<CocycleViolation> {
        if (w.is_null()) return std::nullopt;
        return CocycleViolation{triple_from_json(w.at("triple"), r.params),
                                Rational::parse(w.at("residual").get<std::string>())};
      };
      a.one_sided_witness = read(chi.at("one_sided_witness"));
      a.symmetric_witness = read(chi.at("symmetric_witness"));
      r.chi_audit = a;
    }
    return r;
  });
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace svinv

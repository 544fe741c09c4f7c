#include "symcert/json_io.hpp"

#include <cstdio>

namespace symcert::json {

Json rational(const Rational& q) { return to_string(q); }

Json rationals(std::span<const Rational> values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(rational(v));
  return out;
}

Json sym_profile(const Tuple& x) {
  const SymProfile s = sigma_all(x);
  const auto e = e_all(x);
  Json out;
  out["n"] = s.n();
  out["x"] = rationals(x.entries());
  out["sigma"] = rationals(s.values());
  out["E"] = rationals(e);
  return out;
}

Json gap_report(const GapReport& r) {
  Json out;
  out["lhs"] = rational(r.lhs);
  out["rhs"] = rational(r.rhs);
  out["gap"] = rational(r.gap);
  out["relation"] = std::string(to_string(r.relation));
  out["equality_case"] = std::string(to_string(r.equality_case));
  return out;
}

Json chain_result(const ChainResult& r) {
  Json out;
  out["holds"] = r.holds;
  out["last_index"] = r.last_index;
  Json steps = Json::array();
  for (auto s : r.steps) steps.push_back(std::string(to_string(s)));
  out["steps"] = steps;
  out["first_failure"] = r.first_failure ? Json(*r.first_failure) : Json(nullptr);
  out["precondition_break"] = r.precondition_break ? Json(*r.precondition_break) : Json(nullptr);
  return out;
}

Json cert_constants(const CertConstants& cc) {
  Json out;
  out["n"] = cc.n;
  out["k"] = cc.k;
  out["a"] = to_string(cc.quad.a);
  out["b"] = to_string(cc.quad.b);
  out["c"] = to_string(cc.quad.c);
  out["d"] = to_string(cc.quad.d);
  out["theta1"] = rational(cc.theta1);
  out["theta2"] = rational(cc.theta2);
  out["t"] = rational(cc.t);
  out["A1"] = rational(cc.A1);
  out["A2"] = rational(cc.A2);
  out["A3"] = rational(cc.A3);
  out["A1A2_minus_A3sq_over_36"] = rational(cc.discriminant());
  return out;
}

Json lemma_row(const LemmaRow& row) {
  Json out;
  out["n"] = row.n;
  out["k"] = row.k;
  out["pass"] = row.ok();
  out["lemma31"] = {{"3bd-c^2", to_string(row.lemma31.three_bd_minus_c2)},
                    {"3ac-b^2", to_string(row.lemma31.three_ac_minus_b2)},
                    {"2ac^3+2b^3d-b^2c^2-3abcd", to_string(row.lemma31.theta1_numerator)},
                    {"pass", row.lemma31.ok()}};
  out["lemma32"] = {{"A1", rational(row.lemma32.A1)},
                    {"A2", rational(row.lemma32.A2)},
                    {"A3", rational(row.lemma32.A3)},
                    {"A1A2-A3^2/36", rational(row.lemma32.discriminant)},
                    {"pass", row.lemma32.ok()}};
  Json f = Json::array();
  for (const auto& v : row.f.f) f.push_back(to_string(v));
  out["f"] = f;
  out["f_pass"] = row.f.ok();
  out["theta1"] = rational(row.theta1);
  out["theta1_in_unit_interval"] = row.theta1_in_unit_interval();
  out["theta2_positive"] = row.theta2 > 0;
  out["bc_below_9ad"] = row.bc_below_9ad;
  out["mirror_symmetric"] = row.mirror_symmetric;
  out["endpoints_ok"] = row.endpoints_ok;
  return out;
}

Json symbolic_check(const SymbolicCheck& check) {
  Json out;
  out["n"] = check.n;
  out["k"] = check.k;
  out["decomposition_holds"] = check.decomposition_holds;
  out["l_expansion_holds"] = check.l_expansion_holds;
  out["w_expansion_holds"] = check.w_expansion_holds;
  out["coefficient_system_holds"] = check.coefficient_system_holds;
  out["monomials_compared"] = check.monomials_compared;
  out["mismatches"] = check.mismatches.size();
  return out;
}

Json cubic(const Cubic& c) { return rationals(std::vector<Rational>{c.c0, c.c1, c.c2, c.c3}); }

Json root_triple(const RootTriple& r) {
  Json out;
  out["branch"] = std::string(to_string(r.branch));
  out["normalized_cubic"] = cubic(r.normalized);
  out["discriminant"] = rational(r.discriminant);
  out["real_rooted"] = r.discriminant >= 0;
  out["vieta_moments"] = r.branch == Branch::Degenerate ? Json(nullptr) : rationals(r.vieta_moments);
  out["scale"] = rational(r.scale);
  Json roots = Json::array();
  for (long double v : r.roots) roots.push_back(format_root(v));
  out["roots"] = roots;
  out["root_precision"] = kRootDigits;
  Json residuals = Json::array();
  for (double v : r.relative_residuals) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    residuals.push_back(buf);
  }
  out["relative_residuals"] = residuals;
  out["degenerate_gap"] = r.degenerate_gap ? rational(*r.degenerate_gap) : Json(nullptr);
  return out;
}

Json cascade(const std::vector<std::vector<CascadeEntry>>& levels) {
  Json out = Json::array();
  for (const auto& level : levels) {
    Json row = Json::array();
    for (const auto& e : level) {
      row.push_back({{"t_derivs", e.t_derivs},
                     {"s_derivs", e.s_derivs},
                     {"coeffs", rationals(e.form.coeffs)},
                     {"identically_zero", e.identically_zero},
                     {"real_roots", e.real_roots},
                     {"real_rooted", e.real_rooted},
                     {"multiplicity_consistent", e.multiplicity_consistent}});
    }
    out.push_back(row);
  }
  return out;
}

Json witness(const Witness& w) {
  Json out;
  out["context"] = std::string(to_string(w.context));
  out["tuple"] = rationals(w.tuple.entries());
  if (w.context == WitnessContext::Conjecture15) {
    out["coeffs"] = rationals(w.coeffs);
  } else {
    out["alpha"] = rational(w.alpha);
    out["k"] = w.k;
  }
  out["gap"] = rational(w.gap);
  out["seed"] = w.seed;
  out["iteration"] = w.iteration;
  out["from_hint"] = w.from_hint;
  out["reverified"] = reverify(w);
  return out;
}

Json conjecture15(const Conjecture15Result& r, int m, int n, std::uint64_t budget) {
  Json out;
  out["m"] = m;
  out["n"] = n;
  out["budget"] = budget;
  out["iterations"] = r.iterations;
  out["float_candidates"] = r.float_candidates;
  out["exact_rejections"] = r.exact_rejections;
  out["found"] = r.witness.has_value();
  out["witness"] = r.witness ? witness(*r.witness) : Json(nullptr);
  return out;
}

Json theta_summary(const ThetaSummary& s) {
  Json out;
  out["n"] = s.n;
  out["k"] = s.k;
  out["theta"] = rational(s.theta);
  out["min_ratio"] = rational(s.min_ratio);
  out["samples"] = s.samples;
  out["degenerate"] = s.degenerate;
  out["bound_holds"] = s.min_ratio >= s.theta;
  out["argmin"] = witness(s.argmin);
  return out;
}

Json scan_report(const ScanReport& r) {
  Json out;
  out["family"] = std::string(to_string(r.family));
  out["m"] = r.m;
  out["tuple_len"] = r.tuple_len;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"coeffs", rationals(row.coeffs)},
                    {"evaluated", row.evaluated},
                    {"negative", row.negative},
                    {"zero", row.zero},
                    {"min_gap", rational(row.min_gap)},
                    {"argmin", rationals(row.argmin.entries())}});
  }
  out["rows"] = rows;
  return out;
}

}  // namespace symcert::json

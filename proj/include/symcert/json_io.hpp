#pragma once

#include <nlohmann/json.hpp>

#include "symcert/certificate.hpp"
#include "symcert/inequalities.hpp"
#include "symcert/reduction.hpp"
#include "symcert/search.hpp"
#include "symcert/symmetric.hpp"

namespace symcert::json {

using Json = nlohmann::ordered_json;

/// Every rational is serialized as a "p/q" string, never as a float.
Json rational(const Rational& q);
Json rationals(std::span<const Rational> values);

Json sym_profile(const Tuple& x);
Json gap_report(const GapReport& r);
Json chain_result(const ChainResult& r);
Json cert_constants(const CertConstants& cc);
Json lemma_row(const LemmaRow& row);
Json symbolic_check(const SymbolicCheck& check);
Json cubic(const Cubic& c);
Json root_triple(const RootTriple& r);
Json cascade(const std::vector<std::vector<CascadeEntry>>& levels);
Json witness(const Witness& w);
Json conjecture15(const Conjecture15Result& r, int m, int n, std::uint64_t budget);
Json theta_summary(const ThetaSummary& s);
Json scan_report(const ScanReport& r);

}  // namespace symcert::json

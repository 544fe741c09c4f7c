#include "symcert/symmetric.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <string>

#include "symcert/errors.hpp"

namespace symcert {

namespace {

const Rational& zero() {
  static const Rational z{0};
  return z;
}

}  // namespace

Tuple Tuple::scaled(const Rational& c) const {
  std::vector<Rational> out;
  out.reserve(entries_.size());
  for (const auto& v : entries_) out.emplace_back(c * v);
  return Tuple(std::move(out));
}

bool Tuple::all_equal() const {
  return std::adjacent_find(entries_.begin(), entries_.end(), std::not_equal_to<>()) ==
         entries_.end();
}

std::vector<Rational> parse_rational_list(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON array: ") + e.what());
  }
  if (!doc.is_array()) throw std::invalid_argument("expected a JSON array of rationals");
  std::vector<Rational> out;
  out.reserve(doc.size());
  for (const auto& item : doc) {
    if (item.is_string()) {
      out.push_back(parse_rational(item.get<std::string>()));
    } else if (item.is_number_integer()) {
      out.push_back(parse_rational(item.dump()));
    } else {
      // floats would already have lost precision in the JSON parser
      throw std::invalid_argument("array entries must be strings like \"1/4\" or integers");
    }
  }
  return out;
}

Tuple parse_tuple(std::string_view json_text) {
  auto values = parse_rational_list(json_text);
  if (values.empty()) throw std::invalid_argument("tuple must have at least one entry");
  return Tuple(std::move(values));
}

SymProfile::SymProfile(std::vector<Rational> sigma) : sigma_(std::move(sigma)) {
  if (sigma_.empty() || sigma_[0] != 1)
    throw std::invalid_argument("symmetric profile must start with sigma_0 = 1");
}

const Rational& SymProfile::operator[](int j) const {
  if (j < 0 || j > n()) return zero();
  return sigma_[static_cast<std::size_t>(j)];
}

const Rational& MeanProfile::operator[](int j) const {
  if (j < 0 || j > n()) return zero();
  return e_[static_cast<std::size_t>(j)];
}

Integer binomial(int n, int k) {
  if (n < 0) throw RangeError("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

SymProfile sigma_all(const Tuple& x) {
  const std::size_t n = x.size();
  std::vector<Rational> s(n + 1, Rational(0));
  s[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j >= 1; --j) s[j] += x[i] * s[j - 1];
  }
  return SymProfile(std::move(s));
}

SymProfile sigma_naive(const Tuple& x) {
  const std::size_t n = x.size();
  if (n > kNaiveMaxSize)
    throw RangeError("sigma_naive: n = " + std::to_string(n) + " exceeds the enumeration limit of " +
                     std::to_string(kNaiveMaxSize));
  std::vector<Rational> s(n + 1, Rational(0));
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    Rational product = 1;
    std::size_t bits = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1UL << i)) {
        product *= x[i];
        ++bits;
      }
    }
    s[bits] += product;
  }
  return SymProfile(std::move(s));
}

MeanProfile MeanProfile::of(const Tuple& x) {
  const SymProfile sigma = sigma_all(x);
  const int n = sigma.n();
  std::vector<Rational> e;
  e.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) e.emplace_back(sigma[k] / Rational(binomial(n, k)));
  return MeanProfile(std::move(e));
}

std::vector<Rational> e_all(const Tuple& x) {
  const MeanProfile e = MeanProfile::of(x);
  return {e.values().begin(), e.values().end()};
}

bool garding_membership(const Tuple& x, int k) {
  const int n = static_cast<int>(x.size());
  if (k < 1 || k > n)
    throw RangeError("garding_membership: k must lie in [1, n], got k = " + std::to_string(k));
  const SymProfile sigma = sigma_all(x);
  for (int m = 1; m <= k; ++m)
    if (sigma[m] <= 0) return false;
  return true;
}

}  // namespace symcert

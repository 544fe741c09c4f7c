#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include "symcert/rational.hpp"

namespace symcert {

/// The point x = (x_1, ..., x_n). Length is fixed at construction.
class Tuple {
 public:
  Tuple() = default;
  explicit Tuple(std::vector<Rational> entries) : entries_(std::move(entries)) {}
  Tuple(std::initializer_list<Rational> entries) : entries_(entries) {}

  std::size_t size() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Rational> entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  Tuple scaled(const Rational& c) const;
  bool all_equal() const;

  friend bool operator==(const Tuple&, const Tuple&) = default;

 private:
  std::vector<Rational> entries_;
};

/// Parse a JSON array of strings (or integers), e.g. ["4","4","1/4","0.25"].
Tuple parse_tuple(std::string_view json_text);
std::vector<Rational> parse_rational_list(std::string_view json_text);

/// sigma_0..sigma_n of a tuple. Indices outside [0, n] read as exactly 0.
class SymProfile {
 public:
  explicit SymProfile(std::vector<Rational> sigma);

  int n() const { return static_cast<int>(sigma_.size()) - 1; }
  const Rational& operator[](int j) const;
  std::span<const Rational> values() const& { return sigma_; }
  std::span<const Rational> values() const&& = delete;

  friend bool operator==(const SymProfile&, const SymProfile&) = default;

 private:
  std::vector<Rational> sigma_;
};

/// C(n, k); zero when k < 0 or k > n. Requires n >= 0.
Integer binomial(int n, int k);

/// Single pass: for each entry x_i, sigma_j += x_i * sigma_{j-1} for
/// descending j. O(n^2) exact multiplications.
SymProfile sigma_all(const Tuple& x);

/// Subset enumeration, O(2^n). Test oracle; rejects n > 20.
SymProfile sigma_naive(const Tuple& x);

inline constexpr int kNaiveMaxSize = 20;

/// Elementary symmetric means E_k = sigma_k / C(n,k), k = 0..n.
class MeanProfile {
 public:
  explicit MeanProfile(std::vector<Rational> e) : e_(std::move(e)) {}
  static MeanProfile of(const Tuple& x);

  int n() const { return static_cast<int>(e_.size()) - 1; }
  const Rational& operator[](int j) const;
  std::span<const Rational> values() const& { return e_; }
  std::span<const Rational> values() const&& = delete;

 private:
  std::vector<Rational> e_;
};

std::vector<Rational> e_all(const Tuple& x);

/// Membership in the Garding cone: sigma_m(x) > 0 for m = 1..k.
bool garding_membership(const Tuple& x, int k);

}  // namespace symcert

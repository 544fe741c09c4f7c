#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "symcert/rational.hpp"

namespace symcert {

/// Sparse polynomial over Q in a fixed number of variables. Used to compare
/// two sides of an identity coefficient by coefficient.
template <std::size_t Vars>
class MPoly {
 public:
  using Exponents = std::array<std::uint8_t, Vars>;

  MPoly() = default;
  MPoly(const Rational& c) {  // NOLINT: constants promote implicitly
    if (c != 0) terms_[Exponents{}] = c;
  }

  static MPoly variable(std::size_t index) {
    Exponents e{};
    e[index] = 1;
    MPoly p;
    p.terms_[e] = 1;
    return p;
  }

  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  MPoly& operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(const MPoly& a) { return MPoly() - a; }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e{};
        for (std::size_t i = 0; i < Vars; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  friend bool operator==(const MPoly&, const MPoly&) = default;

  Rational evaluate(const std::array<Rational, Vars>& point) const {
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
      Rational term = c;
      for (std::size_t i = 0; i < Vars; ++i)
        if (e[i] != 0) term *= pow(point[i], e[i]);
      sum += term;
    }
    return sum;
  }

 private:
  void add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<Exponents, Rational> terms_;
};

}  // namespace symcert

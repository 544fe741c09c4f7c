#include "symcert/upoly.hpp"

#include <stdexcept>

namespace symcert {

UPoly::UPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  const Rational inv = 1 / lead();
  return inv * *this;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return UPoly(std::move(out));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + Rational(-1) * b; }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(out));
}

UPoly operator*(const Rational& s, const UPoly& p) {
  std::vector<Rational> out = p.c_;
  for (auto& v : out) v *= s;
  return UPoly(std::move(out));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& num, const UPoly& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = num.c_;
  const int dd = den.degree();
  if (num.degree() < dd) return {UPoly(), num};
  std::vector<Rational> quot(static_cast<std::size_t>(num.degree() - dd + 1), Rational(0));
  for (int i = num.degree(); i >= dd; --i) {
    const Rational factor = rem[static_cast<std::size_t>(i)] / den.lead();
    if (factor == 0) continue;
    quot[static_cast<std::size_t>(i - dd)] = factor;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= factor * den.c_[static_cast<std::size_t>(j)];
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly operator%(const UPoly& a, const UPoly& b) { return UPoly::divmod(a, b).second; }
UPoly operator/(const UPoly& a, const UPoly& b) { return UPoly::divmod(a, b).first; }

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  UPoly next = p.derivative();
  while (!next.is_zero()) {
    seq.push_back(next);
    const std::size_t m = seq.size();
    next = Rational(-1) * (seq[m - 2] % seq[m - 1]);
  }
  return seq;
}

namespace {

int variations(const std::vector<int>& signs) {
  int count = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

int distinct_real_roots(const UPoly& p) {
  if (p.is_zero()) throw std::domain_error("the zero polynomial has no finite root count");
  const auto seq = sturm_sequence(p);
  std::vector<int> at_neg, at_pos;
  for (const auto& q : seq) {
    const int s = sgn(q.lead());
    at_pos.push_back(s);
    at_neg.push_back(q.degree() % 2 == 0 ? s : -s);
  }
  return variations(at_neg) - variations(at_pos);
}

std::vector<std::pair<UPoly, int>> square_free_decomposition(const UPoly& p) {
  std::vector<std::pair<UPoly, int>> out;
  if (p.degree() < 1) return out;
  const UPoly f = p.monic();
  const UPoly df = f.derivative();
  UPoly a = gcd(f, df);
  UPoly b = f / a;
  UPoly c = df / a;
  UPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() >= 1) {
    UPoly factor = gcd(b, d);
    if (factor.degree() >= 1) out.emplace_back(factor, i);
    b = b / factor;
    c = d / factor;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

int real_roots_with_multiplicity(const UPoly& p) {
  int total = 0;
  for (const auto& [factor, mult] : square_free_decomposition(p))
    total += mult * distinct_real_roots(factor);
  return total;
}

}  // namespace symcert

#include "symcert/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

namespace symcert {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
}

Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad(text);

  bool negative = false;
  std::string_view body = s;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational out;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    Integer d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    out = Rational(Integer(std::string(num), 10), d);
    out.canonicalize();
  } else {
    // decimal with optional exponent
    long exponent = 0;
    std::string_view mantissa = body;
    if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = body.substr(0, e);
      std::string_view exp_text = body.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) bad(text);
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
    }
    std::string digits;
    long frac_len = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      std::string_view ip = mantissa.substr(0, dot);
      std::string_view fp = mantissa.substr(dot + 1);
      if (ip.empty() && fp.empty()) bad(text);
      if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) bad(text);
      digits = std::string(ip) + std::string(fp);
      frac_len = static_cast<long>(fp.size());
    } else {
      if (!all_digits(mantissa)) bad(text);
      digits = std::string(mantissa);
    }
    exponent -= frac_len;
    out = Rational(Integer(digits, 10));
    if (exponent > 0) out *= Rational(pow10(static_cast<unsigned long>(exponent)));
    if (exponent < 0) out /= Rational(pow10(static_cast<unsigned long>(-exponent)));
    out.canonicalize();
  }
  if (negative) out = -out;
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string to_string(const Integer& z) { return z.get_str(10); }

Rational pow(const Rational& q, unsigned long e) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), e);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite value cannot be made exact");
  Rational r;
  mpq_set_d(r.get_mpq_t(), v);
  return r;
}

Rational rationalize(double v, const Integer& max_den) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite value cannot be rationalized");
  if (max_den < 1) throw std::invalid_argument("max_den must be positive");
  // Continued fraction of the exact binary value; convergents h/k.
  Rational x = from_double(v);
  Integer h_prev = 0, h = 1, k_prev = 1, k = 0;
  Rational rest = x;
  while (true) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    Integer h_next = a * h + h_prev;
    Integer k_next = a * k + k_prev;
    if (k_next > max_den) {
      // semiconvergent check: largest admissible multiplier
      Integer m = (max_den - k_prev) / k;
      if (m > 0) {
        Rational semi(m * h + h_prev, m * k + k_prev);
        semi.canonicalize();
        Rational conv(h, k);
        conv.canonicalize();
        if (abs(semi - x) < abs(conv - x)) return semi;
      }
      Rational conv(h, k);
      conv.canonicalize();
      return conv;
    }
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    Rational frac = rest - Rational(a);
    if (frac == 0) {
      Rational exact(h, k);
      exact.canonicalize();
      return exact;
    }
    rest = 1 / frac;
  }
}

}  // namespace symcert

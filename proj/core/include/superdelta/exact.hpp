#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

namespace superdelta {

using Rational = mpq_class;

/// Rational from numerator/denominator, reduced to canonical form.
inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rational_factorial(int n) {
  if (n < 0) throw std::invalid_argument("rational_factorial: negative argument");
  Rational r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Rational rational_binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  Rational r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

inline double to_double(const Rational& q) { return q.get_d(); }

/// Exact scalar for the algebraic identities in this library: a finite sum of
/// monomials q * sqrt(2)^s * i^t * pi^(h/2) with rational q, s and t in {0,1}
/// after reduction (sqrt(2)^2 -> 2, i^2 -> -1) and integer h. Closed under
/// +,-,* and under division by a single monomial, which covers every exact
/// quantity this library produces: Berezin normalizations pi^(-n), the delta
/// distribution's pi^n, Fourier prefactors (2*pi)^(n-1/2), the transform
/// kernel's powers of i, and sqrt(2*pi) from the one-dimensional closed forms.
class Exact {
 public:
  struct Key {
    std::int8_t sqrt2 = 0;   // exponent of sqrt(2), 0 or 1
    std::int8_t imag = 0;    // exponent of i, 0 or 1
    std::int16_t pi_half = 0;  // exponent of pi in half-integer units

    auto operator<=>(const Key&) const = default;
  };

  Exact() = default;
  Exact(long v) {
    if (v != 0) terms_[Key{}] = Rational(v);
  }
  Exact(const Rational& q) {
    if (q != 0) terms_[Key{}] = q;
  }

  static Exact monomial(Rational coeff, int sqrt2_pow, int imag_pow, int pi_half_pow) {
    // fold even powers of sqrt(2) and the four-cycle of i into the coefficient
    int s = ((sqrt2_pow % 2) + 2) % 2;
    int two_pow = (sqrt2_pow - s) / 2;
    if (two_pow >= 0) {
      for (int j = 0; j < two_pow; ++j) coeff *= 2;
    } else {
      for (int j = 0; j < -two_pow; ++j) coeff /= 2;
    }
    int t = ((imag_pow % 4) + 4) % 4;
    if (t >= 2) {
      coeff = -coeff;
      t -= 2;
    }
    Exact r;
    if (coeff != 0) {
      r.terms_[Key{static_cast<std::int8_t>(s), static_cast<std::int8_t>(t),
                   static_cast<std::int16_t>(pi_half_pow)}] = coeff;
    }
    return r;
  }

  static Exact pi_power(int k) { return monomial(1, 0, 0, 2 * k); }
  static Exact sqrt_two() { return monomial(1, 1, 0, 0); }
  static Exact imaginary_unit() { return monomial(1, 0, 1, 0); }
  /// (2*pi)^(h/2) for integer h (h = 2k gives (2*pi)^k, h = 1 gives sqrt(2*pi)).
  static Exact two_pi_half_power(int h) { return monomial(1, h, 0, h); }

  bool is_zero() const { return terms_.empty(); }

  bool is_real() const {
    for (const auto& [k, q] : terms_) {
      if (k.imag != 0) return false;
    }
    return true;
  }

  /// True when the value is a single monomial (includes zero).
  bool is_monomial() const { return terms_.size() <= 1; }

  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{});
  }

  Rational rational_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_rational()) throw std::domain_error("Exact::rational_value: not a plain rational");
    return terms_.begin()->second;
  }

  Exact real_part() const {
    Exact r;
    for (const auto& [k, q] : terms_) {
      if (k.imag == 0) r.terms_[k] = q;
    }
    return r;
  }

  /// Coefficient of i as an Exact value (zero for real inputs).
  Exact imag_part() const {
    Exact r;
    for (const auto& [k, q] : terms_) {
      if (k.imag != 0) r.terms_[Key{k.sqrt2, 0, k.pi_half}] = q;
    }
    return r;
  }

  /// Multiplicative inverse; defined for single-monomial values only.
  Exact inverse() const {
    if (terms_.size() != 1) {
      throw std::domain_error("Exact::inverse: defined for single monomials only");
    }
    const auto& [k, q] = *terms_.begin();
    Rational c = 1 / q;
    if (k.sqrt2 != 0) c /= 2;   // 1/sqrt(2) = sqrt(2)/2
    if (k.imag != 0) c = -c;    // 1/i = -i
    return monomial(c, k.sqrt2, k.imag, -k.pi_half);
  }

  Exact& operator+=(const Exact& o) {
    for (const auto& [k, q] : o.terms_) add_term(k, q);
    return *this;
  }
  Exact& operator-=(const Exact& o) {
    for (const auto& [k, q] : o.terms_) add_term(k, -q);
    return *this;
  }
  Exact& operator*=(const Exact& o) {
    Exact r;
    for (const auto& [ka, qa] : terms_) {
      for (const auto& [kb, qb] : o.terms_) {
        Rational q = qa * qb;
        int s = ka.sqrt2 + kb.sqrt2;
        if (s >= 2) {
          s -= 2;
          q *= 2;
        }
        int t = ka.imag + kb.imag;
        if (t >= 2) {
          t -= 2;
          q = -q;
        }
        r.add_term(Key{static_cast<std::int8_t>(s), static_cast<std::int8_t>(t),
                       static_cast<std::int16_t>(ka.pi_half + kb.pi_half)},
                   q);
      }
    }
    terms_ = std::move(r.terms_);
    return *this;
  }
  Exact& operator*=(const Rational& q) {
    if (q == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= q;
    return *this;
  }
  Exact& operator/=(const Exact& o) { return *this *= o.inverse(); }

  friend Exact operator+(Exact a, const Exact& b) { return a += b; }
  friend Exact operator-(Exact a, const Exact& b) { return a -= b; }
  friend Exact operator*(Exact a, const Exact& b) { return a *= b; }
  friend Exact operator/(Exact a, const Exact& b) { return a /= b; }
  friend Exact operator-(const Exact& a) {
    Exact r;
    for (const auto& [k, q] : a.terms_) r.terms_[k] = -q;
    return r;
  }

  friend bool operator==(const Exact& a, const Exact& b) { return a.terms_ == b.terms_; }

  double to_double() const {
    if (!is_real()) throw std::domain_error("Exact::to_double: value has an imaginary part");
    return to_complex().real();
  }

  std::complex<double> to_complex() const {
    std::complex<double> v = 0.0;
    for (const auto& [k, q] : terms_) {
      double m = superdelta::to_double(q);
      if (k.sqrt2 != 0) m *= std::numbers::sqrt2;
      m *= std::pow(std::numbers::pi, 0.5 * k.pi_half);
      v += (k.imag != 0) ? std::complex<double>(0.0, m) : std::complex<double>(m, 0.0);
    }
    return v;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, q] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << q.get_str();
      if (k.sqrt2 != 0) os << "*sqrt2";
      if (k.imag != 0) os << "*i";
      if (k.pi_half != 0) {
        if (k.pi_half % 2 == 0) {
          os << "*pi^" << k.pi_half / 2;
        } else {
          os << "*pi^(" << k.pi_half << "/2)";
        }
      }
    }
    return os.str();
  }

  const std::map<Key, Rational>& terms() const { return terms_; }

 private:
  void add_term(const Key& k, const Rational& q) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      if (q != 0) terms_.emplace(k, q);
      return;
    }
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }

  std::map<Key, Rational> terms_;
};

}  // namespace superdelta

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace cutpoint {

/// Exact rational number in reduced form with positive denominator.
///
/// Thin value wrapper over GMP's mpq_class so that expression templates
/// never leak into user code and every stored value is canonical.
class Rational {
public:
  Rational() = default;
  Rational(long value) : q_(value) {}
  Rational(long num, long den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p/q" or "p". Throws std::invalid_argument on malformed input
  /// or a zero denominator.
  static Rational parse(std::string_view text);

  std::string str() const { return q_.get_str(); }
  const mpq_class& raw() const { return q_; }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  /// Largest integer not exceeding the value.
  long floor() const;
  /// Value minus its floor, in [0,1).
  Rational frac() const;
  double to_double() const { return q_.get_d(); }
  int sign() const { return sgn(q_); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace cutpoint

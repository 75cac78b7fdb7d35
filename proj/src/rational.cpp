#include "cutpoint/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cutpoint {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class to_mpz(std::string_view s) {
  std::string t(s);
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  return mpz_class(t, 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  mpz_class d = to_mpz(den);
  if (d == 0) throw std::invalid_argument("rational '" + std::string(text) + "' has zero denominator");
  return Rational(mpq_class(to_mpz(num), d));
}

long Rational::floor() const {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  if (!f.fits_slong_p()) throw std::overflow_error("floor does not fit in long");
  return f.get_si();
}

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw std::domain_error("division by zero rational");
  q_ /= o.q_;
  return *this;
}

}  // namespace cutpoint

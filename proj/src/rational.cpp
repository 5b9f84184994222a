#include "shiftarg/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace shiftarg {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inv() const {
  if (is_zero()) throw std::invalid_argument("inverse of zero rational");
  return Rational(mpq_class(1) / v_);
}

Rational Rational::parse(std::string_view text) {
  // accepted grammar:  '-'? digits ('/' digits)?   with a positive denominator
  size_t pos = 0;
  auto fail = [&]() -> void {
    throw std::invalid_argument("malformed rational \"" + std::string(text) +
                                "\"; expected \"p\" or \"p/q\"");
  };
  if (text.empty()) fail();
  std::string num, den;
  if (text[pos] == '-') {
    num += '-';
    ++pos;
  }
  size_t digits = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    num += text[pos++];
    ++digits;
  }
  if (digits == 0) fail();
  if (pos < text.size()) {
    if (text[pos] != '/') fail();
    ++pos;
    size_t den_digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      den += text[pos++];
      ++den_digits;
    }
    if (den_digits == 0 || pos != text.size()) fail();
  } else {
    den = "1";
  }
  mpz_class n(num), d(den);
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(mpq_class(b));
}

Rational factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(f));
}

}  // namespace shiftarg

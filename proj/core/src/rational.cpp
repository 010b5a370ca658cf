#include "renyi/rational.hpp"

#include <cctype>
#include <ostream>

#include "renyi/error.hpp"

namespace renyi {

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw Error("rational with zero denominator");
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("division of rational by zero");
  q_ /= o.q_;
  return *this;
}

std::optional<Rational> Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  auto digits = [&](std::string& out) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      out.push_back(text[pos++]);
    }
    return pos > start;
  };

  std::string num;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') num.push_back('-');
    ++pos;
  }
  if (!digits(num)) return std::nullopt;

  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den.clear();
    if (!digits(den)) return std::nullopt;
  }
  if (pos != text.size()) return std::nullopt;

  mpz_class n(num);
  mpz_class d(den);
  if (d == 0) return std::nullopt;
  mpq_class q{n, d};
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  return q_.get_str();
}

std::string Rational::decimal(int significant_digits) const {
  // 256 bits of working precision is far beyond 12 decimal digits for any
  // value this library produces; the rounding step below is the only loss.
  mpf_class f(0, 256);
  mpf_set_q(f.get_mpf_t(), q_.get_mpq_t());
  char buf[128];
  gmp_snprintf(buf, sizeof(buf), "%.*Fg", significant_digits, f.get_mpf_t());
  return std::string(buf);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace renyi

#include "zmc/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace zmc {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body))
    throw std::invalid_argument("not a rational number: '" + std::string(whole) + "'");
  std::string digits(s.front() == '+' ? s.substr(1) : s);
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash), text);
    Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view head = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !head.empty() && head.front() == '-';
    if (!head.empty() && (head.front() == '-' || head.front() == '+')) head.remove_prefix(1);
    if ((head.empty() && frac.empty()) || (!head.empty() && !all_digits(head)) ||
        (!frac.empty() && !all_digits(frac)))
      throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    std::string digits = std::string(head) + std::string(frac);
    Rational q(Integer(digits.empty() ? "0" : digits, 10), scale);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }

  return Rational(parse_integer(text, text));
}

namespace {

// mpq_class(p, q) does not reduce; everything below reads num/den.
Rational canonical(Rational q) {
  q.canonicalize();
  return q;
}

}  // namespace

std::string to_string(const Rational& value) {
  const Rational q = canonical(value);
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Rational& q) { return canonical(q).get_den() == 1; }

std::optional<Rational> exact_sqrt(const Rational& value) {
  const Rational q = canonical(value);
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return std::nullopt;
  Integer num = sqrt(q.get_num());
  Integer den = sqrt(q.get_den());
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational pow(const Rational& q, long k) {
  if (k < 0) {
    if (sgn(q) == 0) throw std::domain_error("zero to a negative power");
    return pow(Rational(1) / q, -k);
  }
  Rational result = 1;
  Rational base = q;
  unsigned long e = static_cast<unsigned long>(k);
  while (e) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

}  // namespace zmc

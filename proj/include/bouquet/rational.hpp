#ifndef BOUQUET_RATIONAL_HPP
#define BOUQUET_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace bouquet {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// True exactly when r lies in the coset Z + 1/2.
inline bool is_half_integer(const Rational& r) { return r.get_den() == 2; }

inline Integer floor_int(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

// Canonical "p/q" rendering; "/q" is omitted for integers.
inline std::string format_rational(const Rational& r) { return r.get_str(); }

namespace detail {

inline Integer parse_integer_token(std::string s) {
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  std::string digits = s;
  if (!digits.empty() && digits.front() == '-') digits.erase(digits.begin());
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("malformed integer literal: " + s);
  return Integer(s);
}

}  // namespace detail

// Accepts "p", "p/q" and plain decimal literals such as "-2.5".
inline Rational parse_rational(const std::string& text) {
  const auto b = text.find_first_not_of(" \t\r\n");
  const auto e = text.find_last_not_of(" \t\r\n");
  if (b == std::string::npos) throw std::invalid_argument("empty rational literal");
  const std::string s = text.substr(b, e - b + 1);

  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const Integer num = detail::parse_integer_token(s.substr(0, slash));
    const Integer den = detail::parse_integer_token(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  if (const auto dot = s.find('.'); dot != std::string::npos) {
    std::string head = s.substr(0, dot);
    const std::string tail = s.substr(dot + 1);
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed decimal literal: " + text);
    bool negative = false;
    if (!head.empty() && (head.front() == '+' || head.front() == '-')) {
      negative = head.front() == '-';
      head.erase(head.begin());
    }
    if (head.empty()) head = "0";
    if (head.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed decimal literal: " + text);
    Integer scale = 1;
    for (size_t i = 0; i < tail.size(); ++i) scale *= 10;
    Integer num = Integer(head) * scale + Integer(tail);
    if (negative) num = -num;
    Rational r(num, scale);
    r.canonicalize();
    return r;
  }

  return Rational(detail::parse_integer_token(s));
}

}  // namespace bouquet

#endif

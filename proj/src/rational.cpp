#include "gdinv/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace gdinv {

namespace {

std::string rational_str(const Rational& r) {
  std::string s = r.get_num().get_str();
  if (r.get_den() != 1) {
    s += '/';
    s += r.get_den().get_str();
  }
  return s;
}

// One signed term of the grammar: sign? ( "i" | int ("/" int)? "i"? ).
struct Term {
  Rational value;
  bool imaginary;
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }

Rational parse_integer(const std::string& s, std::size_t& pos) {
  const std::size_t start = pos;
  while (pos < s.size() && is_digit(s[pos])) ++pos;
  if (pos == start) throw ParseError("expected digits in scalar '" + s + "'");
  return Rational(mpz_class(s.substr(start, pos - start)));
}

Term parse_term(const std::string& s, std::size_t& pos) {
  int sign = 1;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    if (s[pos] == '-') sign = -1;
    ++pos;
  }
  if (pos >= s.size()) throw ParseError("dangling sign in scalar '" + s + "'");

  if (s[pos] == 'i') {
    ++pos;
    return {Rational(sign), true};
  }

  Rational value = parse_integer(s, pos);
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    const Rational den = parse_integer(s, pos);
    if (den == 0) throw ParseError("zero denominator in scalar '" + s + "'");
    value /= den;
  }
  if (sign < 0) value = -value;

  bool imaginary = false;
  if (pos < s.size() && s[pos] == 'i') {
    ++pos;
    imaginary = true;
  }
  return {value, imaginary};
}

}  // namespace

std::string to_string(const GaussianRational& x) {
  const Rational& re = x.real();
  const Rational& im = x.imag();
  if (im == 0) return rational_str(re);

  std::string imag_part;
  const Rational mag = im < 0 ? Rational(-im) : im;
  if (mag == 1)
    imag_part = "i";
  else
    imag_part = rational_str(mag) + "i";

  if (re == 0) return (im < 0 ? "-" : "") + imag_part;
  return rational_str(re) + (im < 0 ? "-" : "+") + imag_part;
}

GaussianRational parse_scalar(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty scalar");

  std::size_t pos = 0;
  const Term first = parse_term(s, pos);
  Rational re(0), im(0);
  (first.imaginary ? im : re) = first.value;

  if (pos < s.size()) {
    if (s[pos] != '+' && s[pos] != '-')
      throw ParseError("unexpected character '" + std::string(1, s[pos]) + "' in scalar '" + text +
                       "'");
    const Term second = parse_term(s, pos);
    if (second.imaginary == first.imaginary)
      throw ParseError("duplicate " + std::string(first.imaginary ? "imaginary" : "real") +
                       " part in scalar '" + text + "'");
    (second.imaginary ? im : re) = second.value;
  }
  if (pos != s.size()) throw ParseError("trailing characters in scalar '" + text + "'");
  return {re, im};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) {
  return os << to_string(x);
}

}  // namespace gdinv

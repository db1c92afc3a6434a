#include "subsums/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace subsums {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  // strip surrounding whitespace
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational literal");

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
    if (text.empty()) throw std::invalid_argument("sign with no digits");
  }

  std::string body(text);
  auto slash = body.find('/');
  auto dot = body.find('.');

  Rational value;
  if (slash != std::string::npos) {
    if (dot != std::string::npos) throw std::invalid_argument("mixed '/' and '.' in rational: " + body);
    std::string num = body.substr(0, slash);
    std::string den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("malformed fraction: " + body);
    Integer n(num, 10), d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator: " + body);
    value = Rational(n, d);
    value.canonicalize();
  } else if (dot != std::string::npos) {
    std::string ip = body.substr(0, dot);
    std::string fp = body.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw std::invalid_argument("malformed decimal: " + body);
    if (!ip.empty() && !all_digits(ip)) throw std::invalid_argument("malformed decimal: " + body);
    if (!fp.empty() && !all_digits(fp)) throw std::invalid_argument("malformed decimal: " + body);
    Integer scaled(ip.empty() ? std::string("0") + fp : ip + fp, 10);
    Integer den = 1;
    for (size_t i = 0; i < fp.size(); ++i) den *= 10;
    value = Rational(scaled, den);
    value.canonicalize();
  } else {
    if (!all_digits(body)) throw std::invalid_argument("malformed integer: " + body);
    value = Rational(Integer(body, 10));
  }
  if (negative) value = -value;
  return value;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace subsums

#include "axial/rational.hpp"

#include <cctype>

#include "axial/error.hpp"

namespace axial {

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_token(text)) {
      throw Error(Errc::parse_error, "not a rational: '" + std::string(text) + "'");
    }
    Integer n{std::string(text)};
    return Rational(n);
  }
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) {
    throw Error(Errc::parse_error, "not a rational: '" + std::string(text) + "'");
  }
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) {
    throw Error(Errc::parse_error, "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(n, d);
}

std::string rational_to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace axial

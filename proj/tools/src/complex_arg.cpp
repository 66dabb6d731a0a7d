#include "complex_arg.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace cradjoint::tool {

namespace {

double parse_real(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty numeric field");
  std::size_t used = 0;
  const double value = std::stod(text, &used);
  if (used != text.size()) throw std::invalid_argument("trailing characters in number: " + text);
  return value;
}

// Coefficient in front of a trailing 'i'; bare signs mean unit magnitude.
double parse_imag_coefficient(const std::string& text) {
  if (text.empty() || text == "+") return 1.0;
  if (text == "-") return -1.0;
  return parse_real(text);
}

}  // namespace

Complex parse_complex(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  }
  if (text.empty()) throw std::invalid_argument("empty complex literal");

  if (text.back() != 'i' && text.back() != 'I') {
    return {parse_real(text), 0.0};
  }
  const std::string body = text.substr(0, text.size() - 1);
  // Split at the last +/- that is not a leading sign and not an exponent sign.
  for (std::size_t k = body.size(); k-- > 1;) {
    const char c = body[k];
    if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      const double re = parse_real(body.substr(0, k));
      const std::string imag_field = body.substr(k);
      return {re, parse_imag_coefficient(imag_field)};
    }
  }
  return {0.0, parse_imag_coefficient(body)};
}

std::string format_complex(Complex z) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g%+.12gi", z.real(), z.imag());
  return buffer;
}

}  // namespace cradjoint::tool

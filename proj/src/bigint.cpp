#include "crossunion/bigint.hpp"

#include <cctype>
#include <stdexcept>

namespace crossunion {

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const BigRational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

BigInt parse_integer(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("malformed integer: " + std::string(text));
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("malformed integer: " + std::string(text));
    }
  }
  BigInt value(std::string(text.substr(start)));
  return text[0] == '-' ? BigInt(-value) : value;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_integer(text));
  const BigInt num = parse_integer(text.substr(0, slash));
  const BigInt den = parse_integer(text.substr(slash + 1));
  if (den <= 0) throw std::invalid_argument("denominator must be positive: " + std::string(text));
  return BigRational(num, den);
}

double to_double(const BigRational& value) { return value.convert_to<double>(); }

}  // namespace crossunion

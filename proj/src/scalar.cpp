#include "tverberg/scalar.hpp"

#include <algorithm>
#include <cctype>

#include "tverberg/error.hpp"

namespace tverberg {

namespace {

using boost::multiprecision::mpz_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

mpz_int parse_integer(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (!all_digits(text)) throw ParseError("not a number: '" + std::string(whole) + "'");
  text.remove_prefix(std::min(text.find_first_not_of('0'), text.size() - 1));
  mpz_int value{std::string(text)};
  return negative ? mpz_int(-value) : value;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty number");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const mpz_int num = parse_integer(text.substr(0, slash), whole);
    const std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw ParseError("bad denominator in '" + std::string(whole) + "'");
    const mpz_int den = parse_integer(den_text, whole);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
    return Scalar(num, den);
  }

  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = text.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw ParseError("not a number: '" + std::string(whole) + "'");
    }
    // Leading zeros would make the string read as octal.
    std::string digits = std::string(int_part) + std::string(frac_part);
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
    mpz_int num(digits.empty() ? std::string("0") : digits);
    mpz_int den = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
    if (negative) num = -num;
    return Scalar(num, den);
  }

  return Scalar(parse_integer(text, whole));
}

std::string format_scalar(const Scalar& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

double to_double(const Scalar& value) { return value.convert_to<double>(); }

}  // namespace tverberg

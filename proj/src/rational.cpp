#include "radial/rational.hpp"

#include "radial/error.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace radial {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::RootHasZeroInjection: return "RootHasZeroInjection";
    case ErrorCode::NegativeCost: return "NegativeCost";
    case ErrorCode::DanglingEdge: return "DanglingEdge";
    case ErrorCode::MissingCost: return "MissingCost";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::RootHasNoParentEdge: return "RootHasNoParentEdge";
    case ErrorCode::EmptyList: return "EmptyList";
    case ErrorCode::NodeNotCritical: return "NodeNotCritical";
    case ErrorCode::CombinatorialLimit: return "CombinatorialLimit";
    case ErrorCode::MismatchedMeasuredSets: return "MismatchedMeasuredSets";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// Leading zeros would select octal in the cpp_int string constructor.
BigInt decimal_int(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return BigInt(std::string(digits));
}

BigInt pow10(long exponent) {
  BigInt result = 1;
  for (long i = 0; i < exponent; ++i) result *= 10;
  return result;
}

[[noreturn]] void bad(std::string_view text) {
  throw Error(ErrorCode::ParseError, "not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  if (s.empty()) bad(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    BigInt d = decimal_int(den);
    if (d == 0) bad(text);
    Rational r(decimal_int(num), d);
    return negative ? Rational(-r) : r;
  }

  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    auto exp_text = s.substr(e + 1);
    auto [ptr, ec] = std::from_chars(exp_text.data() + (exp_text.starts_with('+') ? 1 : 0),
                                     exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc() || ptr != exp_text.data() + exp_text.size()) bad(text);
    if (exponent > 4000 || exponent < -4000) bad(text);
    s = s.substr(0, e);
  }

  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      bad(text);
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(s)) bad(text);
    digits = std::string(s);
  }

  BigInt mantissa = decimal_int(digits);
  Rational r = exponent >= 0 ? Rational(mantissa * pow10(exponent))
                             : Rational(mantissa, pow10(-exponent));
  return negative ? Rational(-r) : r;
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::ParseError, "non-finite number");
  }
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) throw Error(ErrorCode::ParseError, "cannot format number");
  return parse_rational(std::string_view(buffer, static_cast<std::size_t>(ptr - buffer)));
}

bool is_terminating_decimal(const Rational& value) {
  BigInt den = boost::multiprecision::denominator(value);
  while (den % 2 == 0) den /= 2;
  while (den % 5 == 0) den /= 5;
  return den == 1;
}

std::string format_rational(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  if (!is_terminating_decimal(value)) return num.str() + "/" + den.str();

  // Smallest k with den | 10^k.
  int k = 0;
  BigInt scale = 1;
  while (scale % den != 0) {
    scale *= 10;
    ++k;
  }
  BigInt scaled = abs(num) * (scale / den);
  std::string digits = scaled.str();
  if (static_cast<int>(digits.size()) <= k) {
    digits.insert(0, static_cast<std::size_t>(k - static_cast<int>(digits.size()) + 1), '0');
  }
  digits.insert(digits.size() - static_cast<std::size_t>(k), ".");
  return (num < 0 ? "-" : "") + digits;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace radial

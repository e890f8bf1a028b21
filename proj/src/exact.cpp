#include "arr/exact.hpp"

#include <cctype>

#include "arr/errors.hpp"

namespace arr {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::syntax: return "syntax";
    case ParseErrorKind::nonlinear: return "nonlinear";
    case ParseErrorKind::duplicate: return "duplicate";
    case ParseErrorKind::zero_form: return "zero_form";
    case ParseErrorKind::unknown_variable: return "unknown_variable";
  }
  return "unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

ExactScalar parse_scalar(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError(ParseErrorKind::syntax, "malformed rational '" + std::string(text) + "'");
  const mpz_class p{std::string(num)}, q{std::string(den)};
  if (q == 0) throw ParseError(ParseErrorKind::syntax, "zero denominator in '" + std::string(text) + "'");
  ExactScalar value(p, q);
  value.canonicalize();
  return negative ? ExactScalar(-value) : value;
}

std::string to_string(const ExactScalar& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return to_int64(r);
}

std::int64_t to_int64(const mpz_class& value) {
  if (!value.fits_slong_p()) throw ResourceError("integer " + value.get_str() + " exceeds 64 bits");
  return value.get_si();
}

}  // namespace arr

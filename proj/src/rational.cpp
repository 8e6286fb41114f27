#include "bilocal/rational.hpp"

#include <limits>
#include <stdexcept>

namespace bilocal {

Rational ratio(long a, long b) {
  if (b == 0) throw std::invalid_argument("zero denominator");
  Rational r(a, b);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!valid_integer_text(s)) {
    throw std::invalid_argument("malformed rational component '" + std::string(s) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

nlohmann::json to_json(const Rational& r) {
  if (is_integer(r) && r.get_num().fits_slong_p()) {
    return static_cast<std::int64_t>(r.get_num().get_si());
  }
  return to_string(r);
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<std::int64_t>())));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected a rational, got " + j.dump());
}

}  // namespace bilocal

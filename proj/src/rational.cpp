#include "gonil/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gonil {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");

  mpz_class d(std::string(den), 10);
  if (sgn(d) == 0)
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  if (text.front() == '-') n = -n;

  Rational out(n, d);
  out.canonicalize();
  return out;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_string(const VectorQ& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + ")";
}

bool is_zero(const VectorQ& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Rational dot(const VectorQ& a, const VectorQ& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

VectorQ unit_vector(std::size_t dim, std::size_t index) {
  VectorQ v(dim, Rational(0));
  v.at(index) = 1;
  return v;
}

}  // namespace gonil

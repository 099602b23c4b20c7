#include "lpa/rational.hpp"

#include <stdexcept>

namespace lpa {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rational value;
  if (value.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational literal '" + text + "'");
  }
  if (value.get_den() == 0) {
    throw std::invalid_argument("zero denominator in '" + text + "'");
  }
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

bool is_zero(const RatVector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

bool proportional(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size() || is_zero(a) || is_zero(b)) return false;
  std::size_t k = 0;
  while (b[k] == 0) ++k;
  if (a[k] == 0) return false;
  const Rational t = a[k] / b[k];
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != t * b[i]) return false;
  }
  return true;
}

}  // namespace lpa

#include "dint/rational.hpp"

#include <stdexcept>

namespace dint {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(s));
    boost::multiprecision::cpp_int num(s.substr(0, slash));
    boost::multiprecision::cpp_int den(s.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("non-positive denominator");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
}

std::string format_rational(const Rational& r) {
  return r.str();
}

}  // namespace dint

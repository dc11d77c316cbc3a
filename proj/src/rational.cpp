#include "twtie/rational.hpp"

#include "twtie/errors.hpp"

namespace twtie {

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw input_error("fraction with zero denominator: " + text);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw input_error("malformed fraction: '" + text + "'");
  }
}

std::string rational_str(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

}  // namespace twtie

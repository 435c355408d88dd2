#include "uinf/lambda_poly.hpp"

#include <sstream>

namespace uinf {

std::string LambdaPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    Rational c = coeff(d);
    if (c == 0) continue;
    if (first) {
      if (c < 0) { os << '-'; c = -c; }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (d == 0) {
      os << c;
    } else {
      if (c != 1) os << c << '*';
      os << 'L';
      if (d > 1) os << '^' << d;
    }
  }
  return os.str();
}

}  // namespace uinf

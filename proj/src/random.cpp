#include "liereach/random.hpp"

#include <cmath>

#include "liereach/errors.hpp"

namespace liereach {

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * M_PI * u2;
  spare_ = r * std::sin(t);
  has_spare_ = true;
  return r * std::cos(t);
}

StateVector Rng::state(int size, int top) {
  if (size <= 0 || top < 0 || top >= size) throw ArgumentError("Rng::state: invalid support");
  StateVector v = StateVector::Zero(size);
  for (int i = 0; i <= top; ++i) {
    const double re = normal();
    const double im = normal();
    v(i) = Complex(re, im);
  }
  return v / v.norm();
}

}  // namespace liereach

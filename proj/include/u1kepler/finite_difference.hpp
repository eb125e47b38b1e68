// Fourth-order central finite-difference stencils for closed-form
// evaluators (the function can be sampled anywhere, so no grid coupling).

#pragma once

namespace u1kepler::fd {

template <class F>
double deriv1(F&& f, double x, double h) {
  return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) /
         (12 * h);
}

template <class F>
double deriv2(F&& f, double x, double h) {
  return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) -
          f(x - 2 * h)) /
         (12 * h * h);
}

}  // namespace u1kepler::fd

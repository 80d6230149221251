#include "pilotwave/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <stdexcept>

namespace pilotwave {

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& cfg) {
  if (a >= b) return 0.0;
  using boost::math::quadrature::gauss_kronrod;
  // Substituting x = a + (b-a) s keeps the integration on [0, 1], where the
  // adaptive error estimate is reported in the same units as the result.
  const double width = b - a;
  const auto g = [&](double s) { return f(a + width * s) * width; };
  double error = 0.0;
  double l1 = 0.0;
  const double result = gauss_kronrod<double, 15>::integrate(
      g, 0.0, 1.0, static_cast<unsigned>(cfg.max_depth), cfg.rel_tol, &error, &l1);
  if (!std::isfinite(result))
    throw std::runtime_error("quadrature produced a non-finite result");
  if (error > 1e-6 * std::max(l1, 1e-300))
    throw std::runtime_error("quadrature failed to converge");
  return result;
}

}  // namespace pilotwave

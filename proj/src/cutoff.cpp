#include "frontlab/cutoff.hpp"

#include <cmath>

namespace frontlab {

// Quintic blend on sigma in [1/2, 1] in the variable u = 2 sigma - 1:
//   chi = 1/2 + u/2 + 2 u^3 - 7/2 u^4 + 3/2 u^5
// matches chi(1/2) = 1/2, chi'(1/2) = 1, chi''(1/2) = 0 and
// chi(1) = 1, chi'(1) = chi''(1) = 0; chi' >= 0 throughout.
void CutoffPsi::chi(double sigma, double* c, double* dc, double* d2c) {
    if (sigma <= 0.5) {
        *c = sigma;
        *dc = 1.0;
        *d2c = 0.0;
        return;
    }
    if (sigma >= 1.0) {
        *c = 1.0;
        *dc = 0.0;
        *d2c = 0.0;
        return;
    }
    const double u = 2.0 * sigma - 1.0;
    const double u2 = u * u, u3 = u2 * u, u4 = u3 * u, u5 = u4 * u;
    *c = 0.5 + 0.5 * u + 2.0 * u3 - 3.5 * u4 + 1.5 * u5;
    *dc = 2.0 * (0.5 + 6.0 * u2 - 14.0 * u3 + 7.5 * u4);
    *d2c = 4.0 * (12.0 * u - 42.0 * u2 + 30.0 * u3);
}

CutoffPsi::Eval CutoffPsi::operator()(double s) const {
    const double sigma = std::exp(rate_ * s);
    if (sigma >= 1.0) return {1.0, 0.0, 0.0};
    if (sigma <= 0.5) {
        // psi = sigma exactly on this branch
        return {sigma, rate_ * sigma, rate_ * rate_ * sigma};
    }
    double c, dc, d2c;
    chi(sigma, &c, &dc, &d2c);
    const double ds = rate_ * sigma;  // d sigma / d s
    return {c, dc * ds, d2c * ds * ds + dc * rate_ * rate_ * sigma};
}

}  // namespace frontlab

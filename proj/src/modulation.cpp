#include "frontlab/modulation.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "frontlab/errors.hpp"

namespace frontlab {

double ModulationPair::p(double t) const {
    if (zero) return 0.0;
    return (2.0 / K) * C1 * C2 / (C2 + C1 * t * t);
}

double ModulationPair::dp(double t) const {
    if (zero) return 0.0;
    const double den = C2 + C1 * t * t;
    return (2.0 / K) * C1 * C2 * (-2.0 * C1 * t) / (den * den);
}

double ModulationPair::q(double t) const {
    if (zero) return 0.0;
    return (2.0 * C0 / K) * std::sqrt(C1 * C2) * std::atan(t * std::sqrt(C1 / C2));
}

double ModulationPair::q_inf() const {
    if (zero) return 0.0;
    return (2.0 * C0 / K) * std::sqrt(C1 * C2) * (M_PI / 2.0);
}

double ModulationPair::P(double t) const {
    if (zero) return 0.0;
    if (t <= 0.0) return C1;
    return std::min(C2 / (t * t), C1);
}

ModulationPair build_modulation(double eps, double K, double C0, double C1, double C2) {
    if (!(eps > 0.0 && K > 0.0 && C0 > 0.0 && C1 > 0.0 && C2 > 0.0))
        throw ConfigError("modulation constants must be positive");
    if (C0 < 1.0) throw ConfigError("modulation requires C0 >= 1");
    if (K > 1.0) throw ConfigError("modulation requires K <= 1");
    ModulationPair m{eps, K, C0, C1, C2, false};
    if (m.q_inf() > eps)
        throw EpsilonBudgetError("q(inf) = " + std::to_string(m.q_inf()) +
                                 " exceeds the epsilon budget " + std::to_string(eps));
    if (m.p(0.0) > eps)
        throw EpsilonBudgetError("p(0) = " + std::to_string(m.p(0.0)) +
                                 " exceeds the epsilon budget " + std::to_string(eps));
    return m;
}

ModulationPair zero_modulation() {
    ModulationPair m;
    m.zero = true;
    return m;
}

}  // namespace frontlab

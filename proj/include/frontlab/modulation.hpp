#pragma once

namespace frontlab {

/// Closed-form modulation pair
///   p(t) = (2/K) C1 C2 / (C2 + C1 t^2),
///   q(t) = C0 int_0^t p = (2 C0 / K) sqrt(C1 C2) atan(t sqrt(C1/C2)),
/// which satisfies P(t) <= K p(t) <= 2 P(t) for P(t) = min(C2 t^-2, C1) as an
/// algebraic identity (harmonic mean bracket), with q(inf) constrained by the
/// epsilon budget.
struct ModulationPair {
    double eps = 0.0;
    double K = 1.0;
    double C0 = 1.0;
    double C1 = 1.0;
    double C2 = 1.0;
    bool zero = false;  // degenerate p = q = 0 pair for baseline checks

    double p(double t) const;
    double dp(double t) const;
    double q(double t) const;
    double dq(double t) const { return zero ? 0.0 : C0 * p(t); }
    double q_inf() const;
    double P(double t) const;  // min(C2 t^-2, C1)
};

/// Validates positivity, C0 >= 1, K <= 1, p <= eps and the budget
/// q(inf) <= eps (EpsilonBudgetError otherwise).
ModulationPair build_modulation(double eps, double K, double C0, double C1, double C2);

ModulationPair zero_modulation();

}  // namespace frontlab

#pragma once

#include <vector>

#include "frontlab/errors.hpp"

namespace frontlab {

enum class GraphBc {
    Periodic,
    LinearExtrapolate,  // aperiodic test mode for tilted graphs
};

/// Graph W(x) on a uniform x grid of extent Lx (nodes at i * Lx / n).
struct GraphField {
    double Lx = 20.0;
    std::vector<double> w;
    double time = 0.0;
    GraphBc bc = GraphBc::Periodic;

    std::size_t n() const { return w.size(); }
    double dx() const { return Lx / static_cast<double>(w.size()); }
    double x(std::size_t i) const { return dx() * static_cast<double>(i); }
};

/// One explicit Euler step of the graph mean curvature flow with drift,
///   U_t = U_xx / (1 + U_x^2) + c sqrt(1 + U_x^2).
/// Requires dt <= dx^2 / 2; flat data advances by exactly c dt.
void step_mcf(GraphField& U, double c, double dt);

/// One explicit Euler step of V_t = V_xx + (c/2) V_x^2 (+ c when with_drift).
void step_semilinear(GraphField& V, double c, double dt, bool with_drift);

/// Stable default step for the explicit graph solvers.
double graph_stable_dt(const GraphField& g);

struct GapSeries {
    std::vector<double> t;
    std::vector<double> gap;
    double sup_gap = 0.0;
};

/// Evolves U (curvature flow) and V (semilinear) from the same data with the
/// drift included in both, recording sup_x |U - V| along the way.
GapSeries compare_U_V(const std::vector<double>& phi0, double Lx, double c, double T,
                      double dt = 0.0, double sample_dt = 0.25);

struct DecaySeries {
    std::vector<double> t;
    std::vector<double> sup_vx, sup_vxx, sup_vxxx, sup_vxt;
};

/// Double-kink data (A/2)(tanh((x-Lx/4)/w) - tanh((x-3Lx/4)/w) - 1), the
/// broad-spectrum initial condition whose sup-norm derivative decay follows
/// the self-similar t^{-1/2}, t^{-1}, t^{-3/2} envelopes over [1, T].
std::vector<double> double_kink(double Lx, std::size_t nx, double A, double w);

/// Runs the drift-free semilinear flow from V0, sampling derivative sup norms
/// (4th-order V_x; centered V_xx, V_xxx; V_xt = V_xxx + c V_x V_xx).
DecaySeries decay_series(const std::vector<double>& V0, double Lx, double c, double T,
                         std::size_t samples = 80, double t_first = 1.0);

struct GammaFrame {
    double t = 0.0;
    std::vector<double> gamma;
};

struct GammaCompareResult {
    double sup_gap = 0.0;
    std::vector<double> t;
    std::vector<double> gap;
};

/// Initializes the drift-free semilinear flow with Gamma(., tau) and reports
/// sup_x |Gamma(x, t) - V(x, t - tau)| over the remaining frames. Frames must
/// share one x grid; the V grid matches it.
GammaCompareResult gamma_vs_V(const std::vector<GammaFrame>& frames, double Lx, double tau,
                              double c);

}  // namespace frontlab

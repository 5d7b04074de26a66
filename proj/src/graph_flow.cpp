#include "frontlab/graph_flow.hpp"

#include <algorithm>
#include <cmath>

namespace frontlab {

namespace {

inline double nb(const GraphField& g, long i) {
    const long n = static_cast<long>(g.n());
    if (g.bc == GraphBc::Periodic) return g.w[static_cast<std::size_t>(((i % n) + n) % n)];
    if (i < 0) return 2.0 * g.w[0] - g.w[static_cast<std::size_t>(-i)];
    if (i >= n) return 2.0 * g.w[n - 1] - g.w[static_cast<std::size_t>(2 * n - 2 - i)];
    return g.w[static_cast<std::size_t>(i)];
}

void check_finite(const GraphField& g) {
    for (double v : g.w)
        if (!std::isfinite(v) || std::fabs(v) > 1e8)
            throw BlowUpError("graph solver blow-up at t = " + std::to_string(g.time));
}

}  // namespace

double graph_stable_dt(const GraphField& g) {
    const double dx = g.dx();
    return 0.35 * dx * dx;
}

void step_mcf(GraphField& U, double c, double dt) {
    const std::size_t n = U.n();
    const double dx = U.dx();
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const long li = static_cast<long>(i);
        const double wm = nb(U, li - 1), wc = U.w[i], wp = nb(U, li + 1);
        const double ux = (wp - wm) / (2.0 * dx);
        const double uxx = (wp - 2.0 * wc + wm) / (dx * dx);
        const double g2 = 1.0 + ux * ux;
        out[i] = wc + dt * (uxx / g2 + c * std::sqrt(g2));
    }
    U.w = std::move(out);
    U.time += dt;
    check_finite(U);
}

void step_semilinear(GraphField& V, double c, double dt, bool with_drift) {
    const std::size_t n = V.n();
    const double dx = V.dx();
    std::vector<double> out(n);
    const double drift = with_drift ? c : 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const long li = static_cast<long>(i);
        const double wm = nb(V, li - 1), wc = V.w[i], wp = nb(V, li + 1);
        const double vx = (wp - wm) / (2.0 * dx);
        const double vxx = (wp - 2.0 * wc + wm) / (dx * dx);
        out[i] = wc + dt * (vxx + 0.5 * c * vx * vx + drift);
    }
    V.w = std::move(out);
    V.time += dt;
    check_finite(V);
}

GapSeries compare_U_V(const std::vector<double>& phi0, double Lx, double c, double T,
                      double dt, double sample_dt) {
    GraphField U{Lx, phi0, 0.0, GraphBc::Periodic};
    GraphField V{Lx, phi0, 0.0, GraphBc::Periodic};
    if (dt <= 0.0) dt = graph_stable_dt(U);
    GapSeries out;
    const long nsteps = static_cast<long>(std::ceil(T / dt - 1e-12));
    const long per = std::max(1L, std::lround(sample_dt / dt));
    for (long k = 1; k <= nsteps; ++k) {
        step_mcf(U, c, dt);
        step_semilinear(V, c, dt, true);
        double gap = 0.0;
        for (std::size_t i = 0; i < U.n(); ++i)
            gap = std::max(gap, std::fabs(U.w[i] - V.w[i]));
        out.sup_gap = std::max(out.sup_gap, gap);
        if (k % per == 0 || k == nsteps) {
            out.t.push_back(U.time);
            out.gap.push_back(gap);
        }
    }
    return out;
}

std::vector<double> double_kink(double Lx, std::size_t nx, double A, double w) {
    std::vector<double> v(nx);
    const double dx = Lx / static_cast<double>(nx);
    for (std::size_t i = 0; i < nx; ++i) {
        const double x = dx * static_cast<double>(i);
        v[i] = 0.5 * A *
               (std::tanh((x - 0.25 * Lx) / w) - std::tanh((x - 0.75 * Lx) / w) - 1.0);
    }
    return v;
}

DecaySeries decay_series(const std::vector<double>& V0, double Lx, double c, double T,
                         std::size_t samples, double t_first) {
    GraphField V{Lx, V0, 0.0, GraphBc::Periodic};
    const double dt = graph_stable_dt(V);
    const double dx = V.dx();
    const std::size_t n = V.n();
    std::vector<double> rec(samples);
    for (std::size_t i = 0; i < samples; ++i)
        rec[i] = t_first * std::pow(T / t_first, static_cast<double>(i) /
                                                     static_cast<double>(samples - 1));
    DecaySeries out;
    std::size_t ri = 0;
    const long nsteps = static_cast<long>(std::ceil(T / dt - 1e-12));
    for (long k = 1; k <= nsteps && ri < samples; ++k) {
        step_semilinear(V, c, dt, false);
        if (V.time + 1e-12 < rec[ri]) continue;
        double s1 = 0.0, s2 = 0.0, s3 = 0.0, s4 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const long li = static_cast<long>(i);
            const double m2 = nb(V, li - 2), m1 = nb(V, li - 1), c0 = V.w[i],
                         p1 = nb(V, li + 1), p2 = nb(V, li + 2);
            const double vx = (-p2 + 8.0 * p1 - 8.0 * m1 + m2) / (12.0 * dx);
            const double vxx = (p1 - 2.0 * c0 + m1) / (dx * dx);
            const double vxxx = (p2 - 2.0 * p1 + 2.0 * m1 - m2) / (2.0 * dx * dx * dx);
            const double vxt = vxxx + c * vx * vxx;
            s1 = std::max(s1, std::fabs(vx));
            s2 = std::max(s2, std::fabs(vxx));
            s3 = std::max(s3, std::fabs(vxxx));
            s4 = std::max(s4, std::fabs(vxt));
        }
        out.t.push_back(V.time);
        out.sup_vx.push_back(s1);
        out.sup_vxx.push_back(s2);
        out.sup_vxxx.push_back(s3);
        out.sup_vxt.push_back(s4);
        ++ri;
    }
    return out;
}

GammaCompareResult gamma_vs_V(const std::vector<GammaFrame>& frames, double Lx, double tau,
                              double c) {
    if (frames.size() < 2) throw ConfigError("gamma_vs_V needs at least two frames");
    std::size_t start = frames.size();
    for (std::size_t i = 0; i < frames.size(); ++i) {
        if (std::fabs(frames[i].t - tau) < 1e-9) {
            start = i;
            break;
        }
    }
    if (start >= frames.size())
        throw ConfigError("no level-set frame recorded at the handoff time tau");
    const std::size_t nx = frames[start].gamma.size();
    GraphField V{Lx, frames[start].gamma, 0.0, GraphBc::Periodic};
    double dt = graph_stable_dt(V);
    GammaCompareResult out;
    for (std::size_t i = start; i < frames.size(); ++i) {
        if (frames[i].gamma.size() != nx)
            throw ConfigError("level-set frames use inconsistent x grids");
        const double target = frames[i].t - tau;
        if (target > V.time + 1e-12) {
            const long nsteps = static_cast<long>(std::ceil((target - V.time) / dt - 1e-12));
            const double h = (target - V.time) / static_cast<double>(nsteps);
            for (long k = 0; k < nsteps; ++k) step_semilinear(V, c, h, false);
        }
        double gap = 0.0;
        for (std::size_t j = 0; j < nx; ++j)
            gap = std::max(gap, std::fabs(frames[i].gamma[j] - V.w[j]));
        out.t.push_back(frames[i].t);
        out.gap.push_back(gap);
        out.sup_gap = std::max(out.sup_gap, gap);
    }
    return out;
}

}  // namespace frontlab

#include "frontlab/pde1d.hpp"

#include <algorithm>
#include <cmath>

#include "frontlab/errors.hpp"

namespace frontlab {

Stepper1D::Stepper1D(Grid1D grid, ReactionTerm f, double c, double dt, BoundaryKind bc)
    : grid_(grid), f_(std::move(f)), c_(c), dt_(dt), bc_(bc) {
    grid_.validate();
    if (!(dt > 0.0)) throw ConfigError("Stepper1D requires dt > 0");
    const double dz = grid_.dz();
    if (dz > 2.0 / std::max(std::fabs(c), 1e-300))
        throw ConfigError("Stepper1D stability contract: dz <= 2/|c| violated");
    const double a = dt / (dz * dz);
    const double b = c * dt / (2.0 * dz);
    const std::size_t n = grid_.nz;
    if (bc_ == BoundaryKind::DirichletFront) {
        // unknowns are the interior nodes 1..n-2
        const std::size_t m = n - 2;
        std::vector<double> sub(m, -(a - b)), diag(m, 1.0 + 2.0 * a), sup(m, -(a + b));
        sub[0] = 0.0;
        sup[m - 1] = 0.0;
        solver_.factor(sub, diag, sup);
        bdry_lo_coef_ = a - b;
        bdry_hi_coef_ = a + b;
    } else {
        // mirror ghosts: u_{-1} = u_1, u_n = u_{n-2}; advection vanishes there
        const std::size_t m = n;
        std::vector<double> sub(m, -(a - b)), diag(m, 1.0 + 2.0 * a), sup(m, -(a + b));
        sub[0] = 0.0;
        sup[0] = -2.0 * a;
        sub[m - 1] = -2.0 * a;
        sup[m - 1] = 0.0;
        solver_.factor(sub, diag, sup);
    }
}

void Stepper1D::step(Field1D& field) const {
    auto& u = field.u;
    const std::size_t n = grid_.nz;
    if (u.size() != n) throw ConfigError("field/grid size mismatch");
    for (std::size_t j = 0; j < n; ++j) u[j] += dt_ * f_.value(u[j]);
    if (bc_ == BoundaryKind::DirichletFront) {
        u[0] = 1.0;
        u[n - 1] = 0.0;
        u[1] += bdry_lo_coef_ * 1.0;
        solver_.solve(u.data() + 1, n - 2);
    } else {
        solver_.solve(u.data(), n);
    }
    field.time += dt_;
    for (std::size_t j = 0; j < n; ++j)
        if (!(std::fabs(u[j]) <= 10.0))
            throw BlowUpError("solution exceeded 10 at z = " + std::to_string(grid_.z(j)) +
                              ", t = " + std::to_string(field.time));
}

void Stepper1D::advance(Field1D& field, double T) const {
    const long nsteps = static_cast<long>(std::ceil(T / dt_ - 1e-12));
    for (long k = 0; k < nsteps; ++k) step(field);
}

Field1D make_field(const Grid1D& grid, BoundaryKind bc, const std::vector<double>& values,
                   double time) {
    grid.validate();
    if (values.size() != grid.nz) throw ConfigError("initial data size mismatch");
    return Field1D{grid, values, time, bc};
}

std::vector<double> initial_step(const Grid1D& grid, double z0) {
    // 1 left of z0, 0 right of z0, linear over two cells
    std::vector<double> u(grid.nz);
    const double dz = grid.dz();
    for (std::size_t j = 0; j < grid.nz; ++j) {
        const double s = (grid.z(j) - z0) / (2.0 * dz);
        u[j] = std::clamp(0.5 - s, 0.0, 1.0);
    }
    return u;
}

std::vector<double> initial_exp_tail(const Grid1D& grid, double lambda, double K) {
    if (!(lambda < 0.0)) throw ConfigError("exponential-tail data needs lambda < 0");
    std::vector<double> u(grid.nz);
    for (std::size_t j = 0; j < grid.nz; ++j)
        u[j] = std::min(1.0, K * std::exp(lambda * grid.z(j)));
    return u;
}

std::vector<double> initial_shifted_profile(const Grid1D& grid, const FrontProfile& p,
                                            double shift) {
    std::vector<double> u(grid.nz);
    for (std::size_t j = 0; j < grid.nz; ++j) u[j] = p.value(grid.z(j) - shift);
    return u;
}

Field1D step(const Field1D& u, const ReactionTerm& f, double c, double dt) {
    Stepper1D st(u.grid, f, c, dt, u.bc);
    Field1D out = u;
    st.step(out);
    return out;
}

double level_position(const Field1D& u, double level) {
    return level_position(u, level, u.grid.z_lo, u.grid.z_hi);
}

double level_position(const Field1D& u, double level, double band_lo, double band_hi) {
    const auto& v = u.u;
    const Grid1D& g = u.grid;
    double pos = 0.0;
    int found = 0;
    bool upward = false;
    for (std::size_t j = 0; j + 1 < g.nz; ++j) {
        const double za = g.z(j), zb = g.z(j + 1);
        if (zb < band_lo || za > band_hi) continue;
        const double da = v[j] - level, db = v[j + 1] - level;
        if (da > 0.0 && db <= 0.0) {
            pos = za + (zb - za) * da / (da - db);
            ++found;
        } else if (da < 0.0 && db >= 0.0) {
            upward = true;
        }
    }
    if (found == 0) {
        if (upward)
            throw NonMonotoneError("level crossed with u_z >= 0 only");
        throw NoCrossingError("u does not cross level " + std::to_string(level) +
                              " inside the band");
    }
    if (found > 1)
        throw MultipleCrossingsError(0, "several downward crossings inside the band");
    return pos;
}

std::vector<double> ConvergenceTrace::sigma() const {
    std::vector<double> s(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) s[i] = xi[i] + c * t[i];
    return s;
}

ConvergenceTrace run_front_convergence(const ReactionTerm& f, double c,
                                       const std::vector<double>& u0, const Grid1D& grid,
                                       double dt, double T, const RunOptions& opts) {
    Stepper1D st(grid, f, c, dt);
    Field1D field = make_field(grid, BoundaryKind::DirichletFront, u0);
    ConvergenceTrace tr;
    tr.level = opts.level;
    tr.c = c;
    tr.min_u = *std::min_element(u0.begin(), u0.end());
    tr.max_u = *std::max_element(u0.begin(), u0.end());
    const long steps_per_sample = std::max(1L, std::lround(opts.sample_dt / dt));
    const long nsteps = static_cast<long>(std::ceil(T / dt - 1e-12));
    double xi_half = 0.0;
    for (long k = 1; k <= nsteps; ++k) {
        st.step(field);
        if (k % steps_per_sample == 0 || k == nsteps) {
            tr.t.push_back(field.time);
            tr.xi.push_back(level_position(field, opts.level));
            for (double v : field.u) {
                tr.min_u = std::min(tr.min_u, v);
                tr.max_u = std::max(tr.max_u, v);
            }
            if (field.time <= 0.5 * T + 1e-9) xi_half = tr.xi.back();
        }
    }
    tr.settle = std::fabs(tr.xi.back() - xi_half);
    return tr;
}

namespace {

// predicate helpers for the sandwich search; Phi decreasing in z
bool upper_holds(const Field1D& u, const FrontProfile& p, double delta, double s) {
    for (std::size_t j = 0; j < u.grid.nz; ++j)
        if (u.u[j] > p.value(u.grid.z(j) - s) + delta) return false;
    return true;
}

bool lower_holds(const Field1D& u, const FrontProfile& p, double delta, double s) {
    for (std::size_t j = 0; j < u.grid.nz; ++j)
        if (p.value(u.grid.z(j) - s) - delta > u.u[j]) return false;
    return true;
}

}  // namespace

std::pair<double, double> sandwich_shifts(const Field1D& u, const FrontProfile& p,
                                          double delta) {
    const double R = (u.grid.z_hi - u.grid.z_lo) + 10.0;
    if (!upper_holds(u, p, delta, R) || !lower_holds(u, p, delta, -R))
        throw NoCrossingError("no admissible sandwich shift within the search range");
    // upper bound: admissible for large s; find the smallest admissible shift
    double lo = -R, hi = R;
    if (upper_holds(u, p, delta, lo)) {
        hi = lo;
    } else {
        for (int i = 0; i < 60; ++i) {
            const double mid = 0.5 * (lo + hi);
            (upper_holds(u, p, delta, mid) ? hi : lo) = mid;
        }
    }
    const double z1 = hi;
    // lower bound: admissible for very negative s; find the largest admissible
    lo = -R;
    hi = R;
    if (lower_holds(u, p, delta, hi)) {
        lo = hi;
    } else {
        for (int i = 0; i < 60; ++i) {
            const double mid = 0.5 * (lo + hi);
            (lower_holds(u, p, delta, mid) ? lo : hi) = mid;
        }
    }
    const double z2 = lo;
    if (!(z1 <= z2 + 1e-9))
        throw NoCrossingError("sandwich inverted: z1 > z2 (delta too small for this state)");
    return {z1, z2};
}

}  // namespace frontlab

#pragma once

#include <vector>

#include "frontlab/fitting.hpp"
#include "frontlab/grid.hpp"
#include "frontlab/profile.hpp"
#include "frontlab/reaction.hpp"
#include "frontlab/tridiag.hpp"

namespace frontlab {

enum class BoundaryKind {
    DirichletFront,  // u(z_lo) = 1, u(z_hi) = 0
    NeumannZero,
};

struct Field1D {
    Grid1D grid;
    std::vector<double> u;
    double time = 0.0;
    BoundaryKind bc = BoundaryKind::DirichletFront;
};

/// One-dimensional moving-frame stepper for u_t = u_zz + c u_z + f(u).
///
/// Scheme: explicit Euler reaction substep followed by backward-Euler
/// diffusion-advection (Lie splitting; first order in time, second order in
/// space). The implicit factor is an M-matrix whenever dz <= 2/|c|, so with
/// dt * sup_{[0,1]} f(u)/(1-u) <= 1 the solution stays inside [0, 1] exactly
/// (up to solver roundoff) for admissible data; there is no diffusion CFL
/// restriction.
class Stepper1D {
public:
    Stepper1D(Grid1D grid, ReactionTerm f, double c, double dt,
              BoundaryKind bc = BoundaryKind::DirichletFront);

    void step(Field1D& field) const;
    void advance(Field1D& field, double T) const;  // ceil(T/dt) steps

    double dt() const { return dt_; }
    double c() const { return c_; }
    const Grid1D& grid() const { return grid_; }

private:
    Grid1D grid_;
    ReactionTerm f_;
    double c_;
    double dt_;
    BoundaryKind bc_;
    Tridiag solver_;
    double bdry_lo_coef_ = 0.0;  // Dirichlet contributions to the first/last rhs row
    double bdry_hi_coef_ = 0.0;
};

Field1D make_field(const Grid1D& grid, BoundaryKind bc, const std::vector<double>& values,
                   double time = 0.0);

/// Initial data families used throughout the experiments.
std::vector<double> initial_step(const Grid1D& grid, double z0 = 0.0);
std::vector<double> initial_exp_tail(const Grid1D& grid, double lambda, double K = 1.0);
std::vector<double> initial_shifted_profile(const Grid1D& grid, const FrontProfile& p,
                                            double shift);

/// Single explicit-operation variant of Stepper1D::step (builds the solver).
Field1D step(const Field1D& u, const ReactionTerm& f, double c, double dt);

/// Interpolated z where u crosses `level` downward inside the band. Errors:
/// NoCrossing, NonMonotone (upward slope at the crossing), MultipleCrossings.
double level_position(const Field1D& u, double level);
double level_position(const Field1D& u, double level, double band_lo, double band_hi);

struct ConvergenceTrace {
    std::vector<double> t;
    std::vector<double> xi;     // moving-frame level positions
    double level = 0.5;
    double c = 0.0;
    double min_u = 0.0;         // corridor monitors over the whole run
    double max_u = 1.0;
    double settle = 0.0;        // |xi(T) - xi(T/2)|
    std::vector<double> sigma() const;  // lab frame: xi + c t
};

struct RunOptions {
    double sample_dt = 0.5;
    double level = 0.5;
};

/// Runs the moving-frame equation from the given data, recording the level
/// position at sample times.
ConvergenceTrace run_front_convergence(const ReactionTerm& f, double c,
                                       const std::vector<double>& u0, const Grid1D& grid,
                                       double dt, double T, const RunOptions& opts = {});

/// Tightest profile sandwich: smallest s1 with u <= Phi(z - s1) + delta and
/// largest s2 with Phi(z - s2) - delta <= u on the grid; verifies s1 <= s2.
std::pair<double, double> sandwich_shifts(const Field1D& u, const FrontProfile& p,
                                          double delta);

}  // namespace frontlab

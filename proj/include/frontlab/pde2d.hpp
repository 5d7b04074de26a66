#pragma once

#include <vector>

#include "frontlab/grid.hpp"
#include "frontlab/pde1d.hpp"
#include "frontlab/profile.hpp"
#include "frontlab/reaction.hpp"
#include "frontlab/tridiag.hpp"

namespace frontlab {

/// u(x_i, z_j) stored row-major per column: values[ix * nz + jz].
struct Field2D {
    Grid2D grid;
    std::vector<double> u;
    double time = 0.0;
    BoundaryKind bc = BoundaryKind::DirichletFront;

    double& at(std::size_t ix, std::size_t jz) { return u[ix * grid.nz + jz]; }
    double at(std::size_t ix, std::size_t jz) const { return u[ix * grid.nz + jz]; }
};

/// Two-dimensional moving-frame stepper (x periodic, z truncated) with the
/// same splitting as Stepper1D: explicit reaction, then implicit z lines,
/// then implicit x lines. For x-independent data the x solve acts on constant
/// rows, so columns reproduce the 1D scheme to roundoff.
class Stepper2D {
public:
    Stepper2D(Grid2D grid, ReactionTerm f, double c, double dt,
              BoundaryKind bc = BoundaryKind::DirichletFront, int threads = 1);

    void step(Field2D& field) const;
    void advance(Field2D& field, double T) const;

    double dt() const { return dt_; }
    const Grid2D& grid() const { return grid_; }

private:
    Grid2D grid_;
    ReactionTerm f_;
    double c_;
    double dt_;
    BoundaryKind bc_;
    int threads_;
    Tridiag z_solver_;
    CyclicTridiag x_solver_;
    double bdry_lo_coef_ = 0.0;
};

Field2D make_field2d(const Grid2D& grid, BoundaryKind bc, const std::vector<double>& values,
                     double time = 0.0);

/// u0(x, z) = Phi(z - A cos(2 pi x / Lx)).
std::vector<double> initial_corrugated(const Grid2D& grid, const FrontProfile& p, double A);
/// Column-wise copy of one-dimensional data.
std::vector<double> initial_x_independent(const Grid2D& grid, const std::vector<double>& col);

struct LevelSet {
    std::vector<double> x;
    std::vector<double> gamma;
    double level = 0.5;
    double time = 0.0;
    double min_minus_uz = 0.0;  // smallest crossing slope -u_z over the columns
};

/// Per-column interpolated crossing of `level` inside [z_lo + band_margin,
/// z_hi - band_margin]. MultipleCrossingsError carries the offending column.
LevelSet extract_level_set(const Field2D& u, double level, double band_margin = 5.0);

/// sup over all grid nodes of |u(x,z) - Phi(z - Gamma(x))|.
double profile_residual(const Field2D& u, const LevelSet& ls, const FrontProfile& p);

/// min of -u_z (centered differences) over nodes with |u - level| <= m.
double monotonicity_check(const Field2D& u, double level, double m);

struct XDerivativeSup {
    double sup_ux = 0.0;
    double sup_uxx = 0.0;
};

/// Centered-difference sup norms of u_x and u_xx over the band |z| <= R.
XDerivativeSup x_derivative_sup(const Field2D& u, double R);

struct LevelSetSlopes {
    double sup_gx = 0.0;
    double sup_gxx = 0.0;
};

/// Periodic centered differences of Gamma.
LevelSetSlopes level_set_slopes(const LevelSet& ls, double Lx);

}  // namespace frontlab

#include "frontlab/pde2d.hpp"

#include <algorithm>
#include <cmath>

#include "frontlab/errors.hpp"
#include "frontlab/threading.hpp"

namespace frontlab {

Stepper2D::Stepper2D(Grid2D grid, ReactionTerm f, double c, double dt, BoundaryKind bc,
                     int threads)
    : grid_(grid), f_(std::move(f)), c_(c), dt_(dt), bc_(bc), threads_(threads) {
    grid_.validate();
    if (!(dt > 0.0)) throw ConfigError("Stepper2D requires dt > 0");
    const double dz = grid_.dz();
    if (dz > 2.0 / std::max(std::fabs(c), 1e-300))
        throw ConfigError("Stepper2D stability contract: dz <= 2/|c| violated");
    const double a = dt / (dz * dz);
    const double b = c * dt / (2.0 * dz);
    if (bc_ == BoundaryKind::DirichletFront) {
        const std::size_t m = grid_.nz - 2;
        std::vector<double> sub(m, -(a - b)), diag(m, 1.0 + 2.0 * a), sup(m, -(a + b));
        sub[0] = 0.0;
        sup[m - 1] = 0.0;
        z_solver_.factor(sub, diag, sup);
        bdry_lo_coef_ = a - b;
    } else {
        const std::size_t m = grid_.nz;
        std::vector<double> sub(m, -(a - b)), diag(m, 1.0 + 2.0 * a), sup(m, -(a + b));
        sub[0] = 0.0;
        sup[0] = -2.0 * a;
        sub[m - 1] = -2.0 * a;
        sup[m - 1] = 0.0;
        z_solver_.factor(sub, diag, sup);
    }
    const double ax = dt / (grid_.dx() * grid_.dx());
    x_solver_.factor(-ax, 1.0 + 2.0 * ax, -ax, grid_.nx);
}

void Stepper2D::step(Field2D& field) const {
    const std::size_t nx = grid_.nx, nz = grid_.nz;
    if (field.u.size() != nx * nz) throw ConfigError("field/grid size mismatch");
    auto* u = field.u.data();

    parallel_for(nx, threads_, [&](std::size_t b, std::size_t e) {
        for (std::size_t ix = b; ix < e; ++ix) {
            double* col = u + ix * nz;
            for (std::size_t j = 0; j < nz; ++j) col[j] += dt_ * f_.value(col[j]);
            if (bc_ == BoundaryKind::DirichletFront) {
                col[0] = 1.0;
                col[nz - 1] = 0.0;
                col[1] += bdry_lo_coef_;
                z_solver_.solve(col + 1, nz - 2);
            } else {
                z_solver_.solve(col, nz);
            }
        }
    });

    parallel_for(nz, threads_, [&](std::size_t b, std::size_t e) {
        std::vector<double> row(nx);
        for (std::size_t j = b; j < e; ++j) {
            if (bc_ == BoundaryKind::DirichletFront && (j == 0 || j == nz - 1)) continue;
            for (std::size_t ix = 0; ix < nx; ++ix) row[ix] = u[ix * nz + j];
            x_solver_.solve(row);
            for (std::size_t ix = 0; ix < nx; ++ix) u[ix * nz + j] = row[ix];
        }
    });

    field.time += dt_;
    for (std::size_t i = 0; i < nx * nz; ++i)
        if (!(std::fabs(u[i]) <= 10.0))
            throw BlowUpError("2d solution exceeded 10 at t = " + std::to_string(field.time));
}

void Stepper2D::advance(Field2D& field, double T) const {
    const long nsteps = static_cast<long>(std::ceil(T / dt_ - 1e-12));
    for (long k = 0; k < nsteps; ++k) step(field);
}

Field2D make_field2d(const Grid2D& grid, BoundaryKind bc, const std::vector<double>& values,
                     double time) {
    grid.validate();
    if (values.size() != grid.nx * grid.nz) throw ConfigError("initial data size mismatch");
    return Field2D{grid, values, time, bc};
}

std::vector<double> initial_corrugated(const Grid2D& grid, const FrontProfile& p, double A) {
    std::vector<double> u(grid.nx * grid.nz);
    const double k = 2.0 * M_PI / grid.Lx;
    for (std::size_t ix = 0; ix < grid.nx; ++ix) {
        const double shift = A * std::cos(k * grid.x(ix));
        for (std::size_t j = 0; j < grid.nz; ++j)
            u[ix * grid.nz + j] = p.value(grid.z(j) - shift);
    }
    return u;
}

std::vector<double> initial_x_independent(const Grid2D& grid, const std::vector<double>& col) {
    if (col.size() != grid.nz) throw ConfigError("column size mismatch");
    std::vector<double> u(grid.nx * grid.nz);
    for (std::size_t ix = 0; ix < grid.nx; ++ix)
        std::copy(col.begin(), col.end(), u.begin() + ix * grid.nz);
    return u;
}

LevelSet extract_level_set(const Field2D& field, double level, double band_margin) {
    const Grid2D& g = field.grid;
    LevelSet ls;
    ls.level = level;
    ls.time = field.time;
    ls.x.resize(g.nx);
    ls.gamma.resize(g.nx);
    ls.min_minus_uz = std::numeric_limits<double>::max();
    const double band_lo = g.z_lo + band_margin, band_hi = g.z_hi - band_margin;
    const double dz = g.dz();
    for (std::size_t ix = 0; ix < g.nx; ++ix) {
        const double* col = field.u.data() + ix * g.nz;
        int found = 0;
        double pos = 0.0, slope = 0.0;
        for (std::size_t j = 0; j + 1 < g.nz; ++j) {
            const double za = g.z(j), zb = g.z(j + 1);
            if (zb < band_lo || za > band_hi) continue;
            const double da = col[j] - level, db = col[j + 1] - level;
            if (da > 0.0 && db <= 0.0) {
                pos = za + dz * da / (da - db);
                slope = (col[j] - col[j + 1]) / dz;  // -u_z at the crossing
                ++found;
            }
        }
        if (found == 0)
            throw NoCrossingError("column " + std::to_string(ix) +
                                  " does not cross the level inside the band");
        if (found > 1)
            throw MultipleCrossingsError(
                ix, "column " + std::to_string(ix) + " crosses the level " +
                        std::to_string(found) + " times; advance past the transient");
        ls.x[ix] = g.x(ix);
        ls.gamma[ix] = pos;
        ls.min_minus_uz = std::min(ls.min_minus_uz, slope);
    }
    return ls;
}

double profile_residual(const Field2D& field, const LevelSet& ls, const FrontProfile& p) {
    const Grid2D& g = field.grid;
    if (ls.gamma.size() != g.nx) throw ConfigError("level set / grid mismatch");
    double sup = 0.0;
    for (std::size_t ix = 0; ix < g.nx; ++ix) {
        const double* col = field.u.data() + ix * g.nz;
        const double shift = ls.gamma[ix];
        for (std::size_t j = 0; j < g.nz; ++j)
            sup = std::max(sup, std::fabs(col[j] - p.value(g.z(j) - shift)));
    }
    return sup;
}

double monotonicity_check(const Field2D& field, double level, double m) {
    const Grid2D& g = field.grid;
    const double dz = g.dz();
    double best = std::numeric_limits<double>::max();
    bool any = false;
    for (std::size_t ix = 0; ix < g.nx; ++ix) {
        const double* col = field.u.data() + ix * g.nz;
        for (std::size_t j = 1; j + 1 < g.nz; ++j) {
            if (std::fabs(col[j] - level) > m) continue;
            any = true;
            best = std::min(best, -(col[j + 1] - col[j - 1]) / (2.0 * dz));
        }
    }
    if (!any) throw EmptyBandError("no grid nodes inside the monotonicity band");
    return best;
}

XDerivativeSup x_derivative_sup(const Field2D& field, double R) {
    const Grid2D& g = field.grid;
    const double dx = g.dx();
    XDerivativeSup out;
    for (std::size_t ix = 0; ix < g.nx; ++ix) {
        const std::size_t il = (ix + g.nx - 1) % g.nx, ir = (ix + 1) % g.nx;
        for (std::size_t j = 0; j < g.nz; ++j) {
            if (std::fabs(g.z(j)) > R) continue;
            const double um = field.u[il * g.nz + j];
            const double uc = field.u[ix * g.nz + j];
            const double up = field.u[ir * g.nz + j];
            out.sup_ux = std::max(out.sup_ux, std::fabs((up - um) / (2.0 * dx)));
            out.sup_uxx = std::max(out.sup_uxx, std::fabs((up - 2.0 * uc + um) / (dx * dx)));
        }
    }
    return out;
}

LevelSetSlopes level_set_slopes(const LevelSet& ls, double Lx) {
    const std::size_t n = ls.gamma.size();
    const double dx = Lx / static_cast<double>(n);
    LevelSetSlopes out;
    for (std::size_t i = 0; i < n; ++i) {
        const double gm = ls.gamma[(i + n - 1) % n];
        const double gc = ls.gamma[i];
        const double gp = ls.gamma[(i + 1) % n];
        out.sup_gx = std::max(out.sup_gx, std::fabs((gp - gm) / (2.0 * dx)));
        out.sup_gxx = std::max(out.sup_gxx, std::fabs((gp - 2.0 * gc + gm) / (dx * dx)));
    }
    return out;
}

}  // namespace frontlab

#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "frontlab/cutoff.hpp"
#include "frontlab/modulation.hpp"
#include "frontlab/profile.hpp"
#include "frontlab/reaction.hpp"

namespace frontlab {

enum class SignSide { Super, Sub };

/// Grid evaluation record of L[candidate] = u_t - u_xx - u_zz - c u_z - f(u).
struct ResidualReport {
    std::string candidate;
    SignSide side = SignSide::Super;
    bool pass = false;
    double min_L = 0.0;
    double max_L = 0.0;
    double numeric_tol = 0.0;
    double worst_x = 0.0;  // location of the extremum that decides the verdict
    double worst_z = 0.0;
    double worst_t = 0.0;
    std::size_t points = 0;
    std::vector<std::pair<std::string, double>> constants;

    /// Violation depth against the verdict tolerance (0 when pass).
    double violation() const {
        return side == SignSide::Super ? (min_L < -numeric_tol ? -min_L : 0.0)
                                       : (max_L > numeric_tol ? max_L : 0.0);
    }
};

struct PairReports {
    ResidualReport upper;
    ResidualReport lower;
    bool pass() const { return upper.pass && lower.pass; }
};

/// Residual evaluation box in (z, t); x resolution is taken from the
/// candidate (main pair) when present.
struct GridBox {
    double z_lo = -40.0;
    double z_hi = 40.0;
    std::size_t nz = 801;
    double t_lo = 0.0;
    double t_hi = 50.0;
    std::size_t nt = 101;

    GridBox halved() const {
        GridBox b = *this;
        b.nz = 2 * nz - 1;
        b.nt = 2 * nt - 1;
        return b;
    }
};

/// Candidate with analytic derivative evaluators (x-independent).
struct Candidate1D {
    std::function<double(double z, double t)> u;
    std::function<double(double z, double t)> u_t;
    std::function<double(double z, double t)> u_z;
    std::function<double(double z, double t)> u_zz;
    /// Restricts the scan to nodes where this returns true (empty = all).
    /// Subsolutions that enter the comparison argument as max(w, 0) are
    /// certified on their positive part only.
    std::function<bool(double u)> active;
};

ResidualReport residual_L(const std::string& name, SignSide side, const Candidate1D& cand,
                          const ReactionTerm& f, double c, const GridBox& box, double tol);

/// u = Phi(z), with the second derivative taken from the interpolant (not the
/// ODE identity) so the report measures a genuine residual.
Candidate1D candidate_wave(const FrontProfile& p);
/// u = Phi(z) + lift.
Candidate1D candidate_wave_lift(const FrontProfile& p, double lift);
Candidate1D candidate_zero();

// -- retreating/advancing front pair with the exponential cutoff weight --

struct RotheOptions {
    double q0 = 0.1;
    double z1 = 0.0;
    double z2 = 0.0;
    double tol = 1e-8;
    double psi_rate = 0.0;              // 0 -> vertex -c/2
    std::vector<double> beta_ladder;    // empty -> scaled by the vertex margin
    std::vector<double> C_ladder;       // empty -> {0.5, 1, 2, ..., 512}
};

/// Searches (beta, C) per side; throws SearchExhaustedError (with the worst
/// violation) when no ladder entry certifies. The lower candidate retreats by
/// C(1 - e^{-beta t}) and goes negative in the wake it leaves behind; it acts
/// in the comparison argument as max(w, 0), so its verdict is certified on
/// the positive part {w > 0} (recorded in the report constants).
PairReports check_rothe_pair(const FrontProfile& p, const RotheOptions& opts,
                             const GridBox& box);
double rothe_value(const FrontProfile& p, SignSide side, double q0, double z1, double z2,
                   double beta, double C, double psi_rate, double z, double t);

/// Re-evaluates one side at pinned constants (used for refinement checks).
ResidualReport check_rothe_side(const FrontProfile& p, SignSide side, const RotheOptions& opts,
                                double beta, double C, const GridBox& box);

// -- multiplicative pair (1 +/- eps e^{-beta t}) Phi(z -/+ sigma eps (1-e^{-beta t})) --

struct WangOptions {
    double eps = 0.05;
    double tol = 1e-8;
    std::vector<double> beta_ladder;   // empty -> {0.05, 0.1, 0.2, 0.4}
    std::vector<double> sigma_ladder;  // empty -> {1, 2, 3, 4, 6, 8, 12, 16}
};

/// Requires the KPP-structure bound 0 < f'(0)u - f(u) <= M u^2 on (0,1)
/// (checked by sampling; M is reported). Searches (sigma, beta) per side.
PairReports check_wang_pair(const FrontProfile& p, const WangOptions& opts,
                            const GridBox& box);
double wang_value(const FrontProfile& p, SignSide side, double eps, double sigma, double beta,
                  double z, double t);

ResidualReport check_wang_side(const FrontProfile& p, SignSide side, double eps, double sigma,
                               double beta, double tol, const GridBox& box);

/// Largest M with f'(0)u - f(u) <= M u^2 on sampled (0,1); throws ConfigError
/// if f'(0)u - f(u) is not strictly positive there.
double kpp_structure_bound(const ReactionTerm& f, std::size_t samples = 2000);

// -- exponential-weight pair (1 +/- e^{-(z - a t)}) Phi(z - z0) --

struct ExponentialOptions {
    double z0 = 0.0;
    double a = 0.0;  // 0 -> the sufficient bound 2k - 1 - c + sup|f'|
    double tol = 1e-8;
};

/// No search: evaluates both sides at the given (or derived) rate a and
/// reports pass/fail. The t box is clipped to [0, (z_hi - 10)/a].
PairReports check_exponential_pair(const FrontProfile& p, const ExponentialOptions& opts,
                                   const GridBox& box);
double exponential_rate_bound(const FrontProfile& p);  // 2k - 1 - c + sup|f'|
double exponential_value(const FrontProfile& p, SignSide side, double z0, double a, double z,
                         double t);

// -- modulated pair around a curved interface --

struct MainPairOptions {
    double tol = 1e-6;
    double psi_rate = 0.0;  // 0 -> vertex -c/2
};

/// u(+/-) = Phi((z - V)/sqrt(1+V_x^2) -/+ q(t)) +/- p(t) psi(z), with V
/// evolved internally by the drift-free squared-gradient semilinear flow from
/// V0 on the periodic x grid of extent Lx. Reports both sides (no throw).
PairReports check_main_pair(const FrontProfile& p, const std::vector<double>& V0, double Lx,
                            const ModulationPair& pair, const MainPairOptions& opts,
                            const GridBox& box);

struct MainPairSearch {
    ModulationPair pair;
    PairReports reports;
};

/// Ladder search over (K, C0, C1, C2) within the epsilon budget; first
/// certified pair wins. Throws SearchExhaustedError when none certifies.
MainPairSearch search_main_pair(const FrontProfile& p, const std::vector<double>& V0,
                                double Lx, double eps, const MainPairOptions& opts,
                                const GridBox& box);

}  // namespace frontlab

#pragma once

#include <cstddef>
#include <vector>

#include "frontlab/reaction.hpp"

namespace frontlab {

/// Traveling-wave profile on a uniform grid, translated so that phi(0) = 1/2.
///
/// Values and first derivatives are stored per node; evaluation between nodes
/// is cubic Hermite (monotone for this data), and second derivatives come from
/// the profile ODE phi'' = -c phi' - f(phi). Outside the stored window the
/// tails are extended exponentially, matching value and slope at the ends.
class FrontProfile {
public:
    FrontProfile(ReactionTerm reaction, double c, double z_first, double dz,
                 std::vector<double> phi, std::vector<double> phi_prime,
                 CharacteristicExponents exponents);

    double value(double z) const;
    double deriv(double z) const;
    /// -c phi'(z) - f(phi(z)); exact wherever the profile solves the ODE.
    double second(double z) const;

    double c() const { return c_; }
    double dz() const { return dz_; }
    double z_lo() const { return z_first_; }
    double z_hi() const { return z_first_ + dz_ * static_cast<double>(n() - 1); }
    std::size_t n() const { return phi_.size(); }
    double z_at(std::size_t k) const { return z_first_ + dz_ * static_cast<double>(k); }
    const std::vector<double>& phi() const { return phi_; }
    const std::vector<double>& phi_prime() const { return phi_prime_; }
    const ReactionTerm& reaction() const { return reaction_; }
    const CharacteristicExponents& exponents() const { return exponents_; }

    /// Fitted tail log-slope over the default window (phi in [1e-5, 1e-3]).
    double decay_exponent_measured() const { return decay_exponent_measured_; }
    void set_decay_exponent_measured(double v) { decay_exponent_measured_ = v; }

    /// z with value(z) = level (monotone bisection on the interpolant).
    double z_of_level(double level) const;

    /// max over the stored grid of |phi'| / phi (tail-ratio bound k).
    double sup_slope_ratio() const;

private:
    ReactionTerm reaction_;
    double c_;
    double z_first_;
    double dz_;
    std::vector<double> phi_;
    std::vector<double> phi_prime_;
    CharacteristicExponents exponents_;
    double decay_exponent_measured_ = 0.0;
    // tail extension rates fixed from the endpoint states
    double left_rate_ = 0.0;   // 1 - phi ~ exp(left_rate (z - z_lo)), left_rate > 0
    double right_rate_ = 0.0;  // phi ~ exp(right_rate (z - z_hi)), right_rate < 0
};

struct ProfileOptions {
    double grid_dz = 0.002;      // stored node spacing (the FD residual contract needs <= ~0.0025)
    double eps_saddle = 1e-7;    // launch distance 1 - phi from the saddle
    double phi_floor = 1e-9;     // right tail truncation for storage
    double z_max_span = 400.0;   // probe/storage integration span limit
    double rtol = 1e-12;         // adaptive probe tolerance
    double overshoot_rel = 0.05; // envelope-relative zero-crossing threshold
    double amp_budget = 16.0;    // accumulated fast/slow amplification cap
};

/// Shoot the heteroclinic from the saddle (1,0) toward z -> +infinity.
/// Throws OvershootError when the trajectory crosses phi = 0 with negative
/// slope (c below the minimal speed), DomainTooSmallError when the span ends
/// before the tail is reached.
FrontProfile solve_profile(const ReactionTerm& f, double c, const ProfileOptions& opts = {});

struct MinSpeedOptions {
    double probe_z_span = 1200.0;  // probes need long windows near the pulled boundary
    double rtol = 1e-12;
    double overshoot_rel = 0.05;
    double amp_budget = 16.0;
    int max_expansions = 60;
};

struct MinSpeedResult {
    double cstar = 0.0;       // midpoint of the final bracket, clamped to >= 2 sqrt(f'(0))
    double bracket_lo = 0.0;  // last speed that overshot (or the initial lower end)
    double bracket_hi = 0.0;  // smallest probed speed with a positive front
    int probes = 0;
};

/// Bisection on "solve_profile overshoots". Resolution of the overshoot
/// detector is about 3e-6 in c; tolerances below that are not meaningful.
MinSpeedResult find_min_speed(const ReactionTerm& f, double tol,
                              const MinSpeedOptions& opts = {});

struct ZWindow {
    double lo = 0.0;
    double hi = 0.0;
};

/// Window [z(phi=phi_hi), z(phi=phi_lo)] of the stored tail. The default
/// [1e-5, 1e-3] band sits deep enough for linear decay but shallow enough
/// that speed error from the bisection does not contaminate the slope.
ZWindow decay_window(const FrontProfile& p, double phi_lo = 1e-5, double phi_hi = 1e-3);

/// Least-squares slope of ln phi over the window. Requires at least 10 grid
/// points and positive phi throughout.
double measure_decay_exponent(const FrontProfile& p, const ZWindow& window);

/// Tail fit with the degenerate-root correction ln phi = lambda z + ln(alpha z + beta);
/// returns the fitted lambda (s0 = beta/alpha reported via *s0 when non-null).
double measure_decay_exponent_linear_corrected(const FrontProfile& p, const ZWindow& window,
                                               double* s0 = nullptr);

enum class FrontType { Pushed, Pulled };

/// Pushed iff cstar exceeds 2 sqrt(f'(0)) by more than tol and the measured
/// tail slope is within 5% of lambda_minus(cstar); Pulled iff cstar is within
/// tol of 2 sqrt(f'(0)). Disagreement raises InconsistentClassificationError.
FrontType classify_front(const ReactionTerm& f, double cstar, const FrontProfile& p,
                         double tol = 1e-3);

/// Closed-form pushed front 1/(1 + exp(sqrt(nu/2) z)) at c = sqrt(nu/2) + sqrt(2/nu).
/// Rejects nu <= 2.
FrontProfile exact_hadeler_rothe(double nu, double grid_dz = 0.002);

}  // namespace frontlab

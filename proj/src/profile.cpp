#include "frontlab/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "detail/ode2.hpp"
#include "frontlab/errors.hpp"
#include "frontlab/fitting.hpp"

namespace frontlab {

namespace {

using detail::State2;

struct ShootSetup {
    State2 y0;
    double mu;  // unstable eigenvalue of the saddle (1, 0)
};

ShootSetup saddle_launch(const ReactionTerm& f, double c, double eps) {
    const double fp1 = f.fprime1();
    if (!(fp1 < 0.0)) throw ConfigError("saddle launch requires f'(1) < 0");
    const double mu = 0.5 * (-c + std::sqrt(c * c - 4.0 * fp1));
    return {State2{1.0 - eps, -mu * eps}, mu};
}

struct ProbeResult {
    bool overshoot = false;
    double z_cross = 0.0;
    bool half_found = false;
    double z_half_lo = 0.0;  // step start just before phi dropped below 1/2
    State2 half_state{0.0, 0.0};
    bool floor_reached = false;
    double z_floor = 0.0;
    double z_end = 0.0;
    bool budget_stop = false;  // amplification budget exhausted above 1e-6
};

// Adaptive shot from the saddle. Detects zero crossings relative to the
// running positive envelope so that roundoff in deep tails cannot fake an
// overshoot, and caps the accumulated fast-mode error amplification.
ProbeResult probe_shot(const ReactionTerm& f, double c, double z_span, double rtol,
                       double overshoot_rel, double amp_budget, double phi_floor) {
    auto rhs = [&f, c](const State2& y) {
        return State2{y.v, -c * y.v - f.value(y.phi)};
    };
    ShootSetup setup = saddle_launch(f, c, 1e-7);
    State2 y = setup.y0;

    const double fp0 = f.fprime0();
    const double disc = c * c - 4.0 * fp0;
    const double lam_p = disc > 0.0 ? 0.5 * (-c + std::sqrt(disc)) : -0.5 * c;
    const double lam_m = disc > 0.0 ? 0.5 * (-c - std::sqrt(disc)) : -0.5 * c;
    const double env_rate = 1.2 * (0.5 * c + 0.5 * std::sqrt(std::max(disc, 0.0)));

    ProbeResult res;
    double z = 0.0, h = 1e-3, env = 1.0, amp = 0.0;
    const double h_min = 1e-9, h_max = 0.5;
    while (z < z_span) {
        h = std::min(h, z_span - z);
        State2 k1 = rhs(y);
        State2 err;
        State2 yn = detail::dopri5_step(rhs, y, h, &err, k1);
        const double scale = std::max(std::fabs(y.phi), std::fabs(yn.phi)) +
                             std::max(std::fabs(y.v), std::fabs(yn.v));
        const double sc_p =
            1e-300 + rtol * (std::max(std::fabs(y.phi), std::fabs(yn.phi)) + 0.01 * scale);
        const double sc_v =
            1e-300 + rtol * (std::max(std::fabs(y.v), std::fabs(yn.v)) + 0.01 * scale);
        const double en = std::sqrt(0.5 * ((err.phi / sc_p) * (err.phi / sc_p) +
                                           (err.v / sc_v) * (err.v / sc_v)));
        if (en <= 1.0) {
            if (y.phi >= 0.5 && yn.phi < 0.5) {
                res.half_found = true;
                res.z_half_lo = z;
                res.half_state = y;
            }
            if (yn.phi < -overshoot_rel * env) {
                const double frac = y.phi / (y.phi - yn.phi + 1e-300);
                res.overshoot = true;
                res.z_cross = z + frac * h;
                res.z_end = z + h;
                return res;
            }
            if (!res.floor_reached && yn.phi < phi_floor) {
                res.floor_reached = true;
                res.z_floor = z + h;
            }
            if (disc > 0.0 && yn.phi > 0.0 && yn.phi < 0.25) {
                double s = yn.v / yn.phi;
                s = std::clamp(s, lam_m - 1.0, lam_p);
                amp += (lam_p - s) * h;
                if (amp > amp_budget) {
                    if (yn.phi < 1e-6) {
                        if (!res.floor_reached) {
                            res.floor_reached = true;
                            res.z_floor = z + h;
                        }
                        res.z_end = z + h;
                        return res;
                    }
                    res.budget_stop = true;
                    res.z_end = z + h;
                    return res;
                }
            }
            env = std::max(env * std::exp(-env_rate * h), yn.phi > 0.0 ? yn.phi : 0.0);
            z += h;
            y = yn;
            h = std::min(h * std::clamp(0.9 * std::pow(std::max(en, 1e-10), -0.2), 0.3, 5.0),
                         h_max);
        } else {
            h = std::max(h * std::max(0.9 * std::pow(en, -0.2), 0.2), h_min);
        }
    }
    res.z_end = z;
    if (!res.floor_reached) res.z_floor = z;
    return res;
}

bool probe_overshoots(const ReactionTerm& f, double c, const MinSpeedOptions& opts) {
    ProbeResult r = probe_shot(f, c, opts.probe_z_span, opts.rtol, opts.overshoot_rel,
                               opts.amp_budget, 1e-12);
    return r.overshoot;
}

}  // namespace

FrontProfile::FrontProfile(ReactionTerm reaction, double c, double z_first, double dz,
                           std::vector<double> phi, std::vector<double> phi_prime,
                           CharacteristicExponents exponents)
    : reaction_(std::move(reaction)),
      c_(c),
      z_first_(z_first),
      dz_(dz),
      phi_(std::move(phi)),
      phi_prime_(std::move(phi_prime)),
      exponents_(exponents) {
    if (phi_.size() < 4 || phi_.size() != phi_prime_.size())
        throw ConfigError("profile needs at least 4 nodes with matching derivative data");
    left_rate_ = -phi_prime_.front() / std::max(1.0 - phi_.front(), 1e-300);
    right_rate_ = phi_prime_.back() / std::max(phi_.back(), 1e-300);
}

double FrontProfile::value(double z) const {
    if (z <= z_lo())
        return 1.0 - (1.0 - phi_.front()) * std::exp(left_rate_ * (z - z_lo()));
    if (z >= z_hi()) return phi_.back() * std::exp(right_rate_ * (z - z_hi()));
    const double u = (z - z_first_) / dz_;
    std::size_t k = std::min(static_cast<std::size_t>(u), n() - 2);
    const double t = u - static_cast<double>(k);
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
    return h00 * phi_[k] + h10 * dz_ * phi_prime_[k] + h01 * phi_[k + 1] +
           h11 * dz_ * phi_prime_[k + 1];
}

double FrontProfile::deriv(double z) const {
    if (z <= z_lo()) return phi_prime_.front() * std::exp(left_rate_ * (z - z_lo()));
    if (z >= z_hi()) return phi_prime_.back() * std::exp(right_rate_ * (z - z_hi()));
    const double u = (z - z_first_) / dz_;
    std::size_t k = std::min(static_cast<std::size_t>(u), n() - 2);
    const double t = u - static_cast<double>(k);
    const double t2 = t * t;
    const double g00 = (6 * t2 - 6 * t) / dz_, g10 = 3 * t2 - 4 * t + 1;
    const double g01 = (6 * t - 6 * t2) / dz_, g11 = 3 * t2 - 2 * t;
    return g00 * phi_[k] + g10 * phi_prime_[k] + g01 * phi_[k + 1] + g11 * phi_prime_[k + 1];
}

double FrontProfile::second(double z) const {
    return -c_ * deriv(z) - reaction_.value(value(z));
}

double FrontProfile::z_of_level(double level) const {
    if (!(level > 0.0 && level < 1.0)) throw ConfigError("level must lie in (0,1)");
    double lo = z_lo(), hi = z_hi();
    // extend outward through the exponential tails when needed
    while (value(lo) < level) lo -= 5.0;
    while (value(hi) > level) hi += 5.0;
    for (int i = 0; i < 200 && hi - lo > 1e-14; ++i) {
        const double mid = 0.5 * (lo + hi);
        (value(mid) > level ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double FrontProfile::sup_slope_ratio() const {
    double m = 0.0;
    for (std::size_t k = 0; k < n(); ++k)
        m = std::max(m, std::fabs(phi_prime_[k]) / phi_[k]);
    return m;
}

FrontProfile solve_profile(const ReactionTerm& f, double c, const ProfileOptions& opts) {
    ProbeResult pr = probe_shot(f, c, opts.z_max_span, opts.rtol, opts.overshoot_rel,
                                opts.amp_budget, opts.phi_floor);
    if (pr.overshoot) throw OvershootError(c, pr.z_cross);
    if (pr.budget_stop || !pr.floor_reached)
        throw DomainTooSmallError("trajectory did not reach the far tail within span " +
                                  std::to_string(opts.z_max_span));
    if (!pr.half_found) throw DomainTooSmallError("phi = 1/2 level not crossed");

    auto rhs = [&f, c](const State2& y) {
        return State2{y.v, -c * y.v - f.value(y.phi)};
    };

    // Newton refinement of the phi = 1/2 location from the bracketing state.
    double z_half = pr.z_half_lo;
    State2 yh = pr.half_state;
    for (int it = 0; it < 80; ++it) {
        const double g = yh.phi - 0.5;
        if (std::fabs(g) < 1e-13) break;
        double step = -g / yh.v;
        step = std::clamp(step, -1.0, 1.0);
        const int nsub = std::max(2, static_cast<int>(std::ceil(std::fabs(step) / 0.002)));
        yh = detail::rk4_advance(rhs, yh, step, nsub);
        z_half += step;
    }

    // Fixed-step sweep landing exactly on the uniform grid anchored at z_half.
    const double dz = opts.grid_dz;
    ShootSetup setup = saddle_launch(f, c, opts.eps_saddle);
    const long k_lo = static_cast<long>(std::ceil(-z_half / dz - 1e-12));
    const int nsub = std::max(1, static_cast<int>(std::lround(dz / 0.002)));
    std::vector<double> phi, phip;
    phi.reserve(static_cast<std::size_t>((pr.z_floor - 0.0) / dz) + 4);
    phip.reserve(phi.capacity());

    State2 y = setup.y0;
    double z_rel = 0.0;
    const double z_first_node = z_half + static_cast<double>(k_lo) * dz;
    const double d0 = z_first_node - z_rel;
    if (d0 > 1e-14)
        y = detail::rk4_advance(rhs, y, d0, std::max(1, static_cast<int>(std::ceil(d0 / 0.002))));
    z_rel = z_first_node;

    long k = k_lo;
    while (true) {
        if (y.phi < opts.phi_floor) break;
        phi.push_back(y.phi);
        phip.push_back(y.v);
        if (z_rel > pr.z_floor + dz) break;
        y = detail::rk4_advance(rhs, y, dz, nsub);
        z_rel += dz;
        ++k;
        if (phi.size() > 4'000'000) throw DomainTooSmallError("profile grid ran away");
    }
    if (phi.size() < 12) throw DomainTooSmallError("profile grid too short");

    CharacteristicExponents ex = lambda_roots(f, c, 1e-6);
    FrontProfile prof(f, c, static_cast<double>(k_lo) * dz, dz, std::move(phi), std::move(phip),
                      ex);
    try {
        prof.set_decay_exponent_measured(measure_decay_exponent(prof, decay_window(prof)));
    } catch (const Error&) {
        prof.set_decay_exponent_measured(std::numeric_limits<double>::quiet_NaN());
    }
    return prof;
}

MinSpeedResult find_min_speed(const ReactionTerm& f, double tol, const MinSpeedOptions& opts) {
    if (!(tol > 0.0)) throw ConfigError("find_min_speed requires tol > 0");
    const double cmin = 2.0 * std::sqrt(f.fprime0());
    MinSpeedResult res;

    double lo = cmin - tol;
    if (!probe_overshoots(f, lo, opts)) {
        ++res.probes;
        res.cstar = cmin;
        res.bracket_lo = lo;
        res.bracket_hi = lo + tol;
        return res;
    }
    ++res.probes;

    double hi = cmin + std::max(0.5, 4.0 * tol);
    int expansions = 0;
    while (probe_overshoots(f, hi, opts)) {
        ++res.probes;
        hi = cmin + (hi - cmin) * 1.6;
        if (++expansions > opts.max_expansions)
            throw BracketExpansionError("no front found up to c = " + std::to_string(hi));
    }
    ++res.probes;

    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (probe_overshoots(f, mid, opts))
            lo = mid;
        else
            hi = mid;
        ++res.probes;
    }
    res.bracket_lo = lo;
    res.bracket_hi = hi;
    res.cstar = std::max(0.5 * (lo + hi), cmin);
    return res;
}

ZWindow decay_window(const FrontProfile& p, double phi_lo, double phi_hi) {
    const double tail_min = p.phi().back();
    phi_lo = std::max(phi_lo, tail_min * 1.5);
    if (!(phi_hi > phi_lo)) throw FitError("decay window empty: tail too short");
    return ZWindow{p.z_of_level(phi_hi), p.z_of_level(phi_lo)};
}

double measure_decay_exponent(const FrontProfile& p, const ZWindow& window) {
    std::vector<double> zs, ys;
    for (std::size_t k = 0; k < p.n(); ++k) {
        const double z = p.z_at(k);
        if (z < window.lo || z > window.hi) continue;
        const double v = p.phi()[k];
        if (!(v > 0.0)) throw FitError("nonpositive phi inside decay window");
        zs.push_back(z);
        ys.push_back(std::log(v));
    }
    if (zs.size() < 10) throw FitError("decay window shorter than 10 grid points");
    return fit_slope(zs, ys);
}

double measure_decay_exponent_linear_corrected(const FrontProfile& p, const ZWindow& window,
                                               double* s0_out) {
    std::vector<double> zs, ys;  // y = phi'/phi, the exact log-derivative at nodes
    for (std::size_t k = 0; k < p.n(); ++k) {
        const double z = p.z_at(k);
        if (z < window.lo || z > window.hi) continue;
        if (!(p.phi()[k] > 0.0)) throw FitError("nonpositive phi inside decay window");
        zs.push_back(z);
        ys.push_back(p.phi_prime()[k] / p.phi()[k]);
    }
    if (zs.size() < 10) throw FitError("decay window shorter than 10 grid points");
    const double zmin = zs.front();
    double best_s0 = 0.0, best_lam = 0.0, best_ssr = std::numeric_limits<double>::max();
    // model y = lambda + 1/(z + s0); scan the pole offset, solve lambda in closed form
    for (int pass = 0; pass < 2; ++pass) {
        const double lo = pass == 0 ? -zmin + 0.25 : best_s0 * 0.8;
        const double hi = pass == 0 ? -zmin + 400.0 : best_s0 * 1.25;
        const int m = 400;
        for (int i = 0; i <= m; ++i) {
            const double s0 = lo + (hi - lo) * i / m;
            double lam = 0.0;
            for (std::size_t j = 0; j < zs.size(); ++j) lam += ys[j] - 1.0 / (zs[j] + s0);
            lam /= static_cast<double>(zs.size());
            double ssr = 0.0;
            for (std::size_t j = 0; j < zs.size(); ++j) {
                const double r = ys[j] - lam - 1.0 / (zs[j] + s0);
                ssr += r * r;
            }
            if (ssr < best_ssr) {
                best_ssr = ssr;
                best_s0 = s0;
                best_lam = lam;
            }
        }
    }
    if (s0_out) *s0_out = best_s0;
    return best_lam;
}

FrontType classify_front(const ReactionTerm& f, double cstar, const FrontProfile& p,
                         double tol) {
    const double cmin = 2.0 * std::sqrt(f.fprime0());
    const double margin = cstar - cmin;
    if (margin > tol) {
        const double lam_m = lambda_roots(f, cstar, 1e-6).lambda_minus;
        const double decay = p.decay_exponent_measured();
        if (std::fabs(decay - lam_m) <= 0.05 * std::fabs(lam_m)) return FrontType::Pushed;
        throw InconsistentClassificationError(
            "speed margin " + std::to_string(margin) + " says pushed but tail slope " +
            std::to_string(decay) + " is not within 5% of " + std::to_string(lam_m));
    }
    if (std::fabs(margin) <= tol) return FrontType::Pulled;
    throw InconsistentClassificationError("cstar below 2 sqrt(f'(0)) by " +
                                          std::to_string(-margin));
}

FrontProfile exact_hadeler_rothe(double nu, double grid_dz) {
    if (!(nu > 2.0)) throw ConfigError("exact_hadeler_rothe requires nu > 2");
    const double b = std::sqrt(0.5 * nu);
    const double c = b + 1.0 / b;
    const long k_lo = static_cast<long>(std::floor(-16.2 / b / grid_dz));
    const long k_hi = static_cast<long>(std::ceil(20.8 / b / grid_dz));
    std::vector<double> phi, phip;
    phi.reserve(k_hi - k_lo + 1);
    phip.reserve(k_hi - k_lo + 1);
    for (long k = k_lo; k <= k_hi; ++k) {
        const double z = grid_dz * static_cast<double>(k);
        const double e = std::exp(-b * std::fabs(z));
        const double p = z >= 0.0 ? e / (1.0 + e) : 1.0 / (1.0 + e);
        phi.push_back(p);
        phip.push_back(-b * p * (1.0 - p));
    }
    ReactionTerm f = make_hadeler_rothe(nu);
    FrontProfile prof(f, c, grid_dz * static_cast<double>(k_lo), grid_dz, std::move(phi),
                      std::move(phip), lambda_roots(f, c, 1e-12));
    prof.set_decay_exponent_measured(-b);
    return prof;
}

}  // namespace frontlab

#include "frontlab/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>

#include "frontlab/comparison.hpp"
#include "frontlab/csv.hpp"
#include "frontlab/errors.hpp"
#include "frontlab/graph_flow.hpp"
#include "frontlab/pde1d.hpp"
#include "frontlab/pde2d.hpp"
#include "frontlab/profile.hpp"

namespace frontlab {

namespace {

constexpr const char* kVersion = "frontlab 0.1.0";
constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kHr4Cstar = 2.1213203435596424;  // sqrt(2) + 1/sqrt(2)

double hr_cstar(double nu) { return std::sqrt(0.5 * nu) + std::sqrt(2.0 / nu); }

}  // namespace

Criterion within(const std::string& name, double measured, double target, double tol) {
    Criterion c{name, Criterion::Kind::AbsDiff, measured, target, tol, false};
    c.pass = std::isfinite(measured) && std::fabs(measured - target) <= tol;
    return c;
}

Criterion at_most(const std::string& name, double measured, double limit) {
    Criterion c{name, Criterion::Kind::AtMost, measured, limit, 0.0, false};
    c.pass = std::isfinite(measured) && measured <= limit;
    return c;
}

Criterion at_least(const std::string& name, double measured, double limit) {
    Criterion c{name, Criterion::Kind::AtLeast, measured, limit, 0.0, false};
    c.pass = std::isfinite(measured) && measured >= limit;
    return c;
}

Criterion flag(const std::string& name, bool ok) {
    Criterion c{name, Criterion::Kind::Flag, ok ? 1.0 : 0.0, 1.0, 0.0, ok};
    return c;
}

bool ExperimentReport::pass() const {
    if (criteria.empty()) return false;
    for (const auto& c : criteria)
        if (!c.pass) return false;
    return true;
}

const std::vector<CatalogEntry>& list_experiments() {
    static const std::vector<CatalogEntry> catalog = {
        {"E1", "minimal speed and pushed/pulled classification of the built-in reactions"},
        {"E2", "shooting profile against the closed-form pushed front, oracle equivalence"},
        {"E3", "front shift fits: pulled Bramson log term vs pushed absence of it"},
        {"E4", "sign certificates for the supersolution families (retreating, multiplicative, "
               "exponential, modulated) plus a deliberate violation"},
        {"E5", "curvature flow vs semilinear approximation gap and derivative decay rates"},
        {"E6", "2d corrugated front: modulated convergence, level-set flattening, monotone band"},
        {"E7", "level set against the semilinear graph flow, end to end"},
    };
    return catalog;
}

// ---------------------------------------------------------------------------
// shared standard corrugated run (E6 and E7 both consume it)

namespace {

struct CorrugatedRun {
    double c = 0.0;
    std::vector<GammaFrame> frames;       // every 1.0 up to T
    std::vector<double> diag_t;
    std::vector<double> residual;
    std::vector<double> min_uz_band;      // monotonicity over the corollary band
    std::vector<double> sup_ux, sup_uxx;  // x-derivative decay, |z| <= 10
    std::vector<double> sup_gx, sup_gxx;
    double min_u = 0.0, max_u = 1.0;
};

// The z spacing controls the discrete traveling-wave speed bias (about
// -0.28 dz^2 for HR(4)), which E7 sees as a linear drift of Gamma against V;
// dz = 0.025 keeps that drift near 0.02 over the 200-unit horizon.
struct CorrugatedParams {
    double Lx = 20.0;
    std::size_t nx = 64;
    double z_lo = -30.0, z_hi = 42.0;
    std::size_t nz = 2881;
    double dt = 0.02;
    double T = 200.0;
    double A = 1.0;
    double T_burn = 5.0;

    bool operator==(const CorrugatedParams&) const = default;
};

const CorrugatedRun& standard_corrugated_run(const CorrugatedParams& par, int threads) {
    static std::optional<CorrugatedParams> cached_par;
    static std::optional<CorrugatedRun> cached;
    if (cached && cached_par == par) return *cached;

    auto hr4 = make_hadeler_rothe(4.0);
    MinSpeedResult ms = find_min_speed(hr4, 1e-4);
    const double c = ms.bracket_hi;
    FrontProfile prof = solve_profile(hr4, c);

    Grid2D grid{par.Lx, par.nx, par.z_lo, par.z_hi, par.nz};
    Stepper2D st(grid, hr4, c, par.dt, BoundaryKind::DirichletFront, threads);
    Field2D u = make_field2d(grid, BoundaryKind::DirichletFront,
                             initial_corrugated(grid, prof, par.A));

    CorrugatedRun run;
    run.c = c;
    run.min_u = 0.0;
    run.max_u = 1.0;
    const double band = 0.5 * (1.0 - 1e-3);
    const long steps_per_frame = std::lround(1.0 / par.dt);
    const long nframes = std::lround(par.T);
    for (long fr = 1; fr <= nframes; ++fr) {
        for (long k = 0; k < steps_per_frame; ++k) st.step(u);
        LevelSet ls = extract_level_set(u, 0.5);
        run.frames.push_back(GammaFrame{u.time, ls.gamma});
        run.diag_t.push_back(u.time);
        run.residual.push_back(profile_residual(u, ls, prof));
        run.min_uz_band.push_back(monotonicity_check(u, 0.5, band));
        XDerivativeSup xd = x_derivative_sup(u, 10.0);
        run.sup_ux.push_back(xd.sup_ux);
        run.sup_uxx.push_back(xd.sup_uxx);
        LevelSetSlopes sl = level_set_slopes(ls, par.Lx);
        run.sup_gx.push_back(sl.sup_gx);
        run.sup_gxx.push_back(sl.sup_gxx);
        for (double v : u.u) {
            run.min_u = std::min(run.min_u, v);
            run.max_u = std::max(run.max_u, v);
        }
    }
    cached_par = par;
    cached = std::move(run);
    return *cached;
}

double diag_at(const std::vector<double>& t, const std::vector<double>& v, double when) {
    for (std::size_t i = 0; i < t.size(); ++i)
        if (std::fabs(t[i] - when) < 1e-9) return v[i];
    throw ConfigError("diagnostic sample missing at t = " + std::to_string(when));
}

// log-spaced subset of a recorded trace, nearest recorded sample per target
void fit_subset(const ConvergenceTrace& tr, double t_lo, double t_hi, std::size_t n,
                std::vector<double>* ts, std::vector<double>* sig) {
    const std::vector<double> sigma = tr.sigma();
    std::size_t last = 0;
    bool have_last = false;
    for (std::size_t i = 0; i < n; ++i) {
        const double target =
            t_lo * std::pow(t_hi / t_lo, static_cast<double>(i) / static_cast<double>(n - 1));
        std::size_t best = 0;
        double dist = std::numeric_limits<double>::max();
        for (std::size_t j = 0; j < tr.t.size(); ++j) {
            const double d = std::fabs(tr.t[j] - target);
            if (d < dist) {
                dist = d;
                best = j;
            }
        }
        if (have_last && best == last) continue;
        last = best;
        have_last = true;
        ts->push_back(tr.t[best]);
        sig->push_back(sigma[best]);
    }
}

void write_trace_csv(const std::string& dir, const std::string& name,
                     const ConvergenceTrace& tr) {
    CsvWriter w(dir + "/" + name, {"t", "xi", "sigma"});
    const auto sigma = tr.sigma();
    for (std::size_t i = 0; i < tr.t.size(); ++i) w.row({tr.t[i], tr.xi[i], sigma[i]});
}

// ---------------------------------------------------------------------------

ExperimentReport run_E1(const ExperimentConfig& cfg) {
    ExperimentReport rep;
    const double tol = cfg.overrides.get_num("run", "bisect_tol", 1e-4);
    auto kpp = make_kpp();
    auto hr4 = make_hadeler_rothe(4.0);
    auto hr1 = make_hadeler_rothe(1.0);

    MinSpeedResult mk = find_min_speed(kpp, tol);
    rep.criteria.push_back(within("kpp_min_speed", mk.cstar, 2.0, 1e-3));

    MinSpeedResult m4 = find_min_speed(hr4, tol);
    rep.criteria.push_back(within("hr4_min_speed", m4.cstar, kHr4Cstar, 1e-3));
    FrontProfile p4 = solve_profile(hr4, m4.bracket_hi);
    bool pushed = false;
    try {
        pushed = classify_front(hr4, m4.cstar, p4, 1e-3) == FrontType::Pushed;
    } catch (const Error&) {
    }
    rep.criteria.push_back(flag("hr4_classified_pushed", pushed));
    rep.criteria.push_back(
        within("hr4_tail_exponent", p4.decay_exponent_measured(), -kSqrt2, 0.02));

    MinSpeedResult m1 = find_min_speed(hr1, tol);
    FrontProfile p1 = solve_profile(hr1, m1.bracket_hi);
    bool pulled = false;
    try {
        pulled = classify_front(hr1, m1.cstar, p1, 1e-3) == FrontType::Pulled;
    } catch (const Error&) {
    }
    rep.criteria.push_back(flag("hr1_classified_pulled", pulled));

    if (!cfg.out_dir.empty()) {
        CsvWriter w(cfg.out_dir + "/minspeed.csv",
                    {"family", "nu", "cstar", "bracket_lo", "bracket_hi"});
        w.row_mixed({"kpp", "0", CsvWriter::format(mk.cstar), CsvWriter::format(mk.bracket_lo),
                     CsvWriter::format(mk.bracket_hi)});
        w.row_mixed({"hadeler_rothe", "4", CsvWriter::format(m4.cstar),
                     CsvWriter::format(m4.bracket_lo), CsvWriter::format(m4.bracket_hi)});
        w.row_mixed({"hadeler_rothe", "1", CsvWriter::format(m1.cstar),
                     CsvWriter::format(m1.bracket_lo), CsvWriter::format(m1.bracket_hi)});
    }
    return rep;
}

ExperimentReport run_E2(const ExperimentConfig& cfg) {
    ExperimentReport rep;
    for (double nu : {3.0, 4.0, 6.0}) {
        auto f = make_hadeler_rothe(nu);
        FrontProfile shot = solve_profile(f, hr_cstar(nu));
        FrontProfile exact = exact_hadeler_rothe(nu);
        double sup = 0.0;
        for (std::size_t k = 0; k < shot.n(); ++k)
            sup = std::max(sup, std::fabs(shot.phi()[k] - exact.value(shot.z_at(k))));
        rep.criteria.push_back(
            at_most("profile_oracle_sup_diff_nu" + std::to_string(static_cast<int>(nu)), sup,
                    1e-5));
        if (!cfg.out_dir.empty()) {
            CsvWriter w(cfg.out_dir + "/profile_nu" + std::to_string(static_cast<int>(nu)) +
                            ".csv",
                        {"z", "phi", "phi_prime"});
            for (std::size_t k = 0; k < shot.n(); ++k)
                w.row({shot.z_at(k), shot.phi()[k], shot.phi_prime()[k]});
        }
    }
    return rep;
}

ExperimentReport run_E3(const ExperimentConfig& cfg) {
    ExperimentReport rep;
    const double dt = cfg.overrides.get_num("run", "dt", 0.01);
    const double T = cfg.overrides.get_num("run", "T", 500.0);
    const double fit_lo = cfg.overrides.get_num("fit", "t_lo", 50.0);
    const double fit_hi = cfg.overrides.get_num("fit", "t_hi", 500.0);
    const auto fit_n =
        static_cast<std::size_t>(cfg.overrides.get_int("fit", "samples", 150));

    // pulled side: KPP at c = 2 with sharp step data
    auto kpp = make_kpp();
    Grid1D gk{-90.0, 60.0, static_cast<std::size_t>(
                               cfg.overrides.get_int("grid1d", "nz", 3001))};
    gk.validate();
    ConvergenceTrace tk =
        run_front_convergence(kpp, 2.0, initial_step(gk), gk, dt, T, RunOptions{0.5, 0.5});
    std::vector<double> ts, sig;
    fit_subset(tk, fit_lo, fit_hi, fit_n, &ts, &sig);
    ShiftFit fk = fit_log_shift(ts, sig);
    rep.criteria.push_back(within("kpp_log_shift_r", fk.r, -1.5, 0.3));
    rep.criteria.push_back(at_least("kpp_corridor_min_u", tk.min_u, -1e-6));
    rep.criteria.push_back(at_most("kpp_corridor_max_u", tk.max_u, 1.0 + 1e-6));

    // pushed side: HR(4) at the measured minimal speed, steep-tail data
    auto hr4 = make_hadeler_rothe(4.0);
    MinSpeedResult m4 = find_min_speed(hr4, 1e-4);
    const double c4 = m4.bracket_hi;
    Grid1D gh{-60.0, 60.0, static_cast<std::size_t>(
                               cfg.overrides.get_int("grid1d", "nz_pushed", 2401))};
    gh.validate();
    const double lam_m = lambda_roots(hr4, c4).lambda_minus;
    ConvergenceTrace th = run_front_convergence(hr4, c4, initial_exp_tail(gh, lam_m), gh, dt,
                                                T, RunOptions{0.5, 0.5});
    std::vector<double> ts4, sig4;
    fit_subset(th, fit_lo, fit_hi, fit_n, &ts4, &sig4);
    ShiftFit f4 = fit_log_shift(ts4, sig4);
    rep.criteria.push_back(at_most("hr4_log_shift_abs_r", std::fabs(f4.r), 0.1));
    rep.criteria.push_back(at_least("hr4_corridor_min_u", th.min_u, -1e-6));
    rep.criteria.push_back(at_most("hr4_corridor_max_u", th.max_u, 1.0 + 1e-6));

    rep.criteria.push_back(
        at_least("pushed_pulled_separation", std::fabs(fk.r - f4.r), 1.0));

    if (!cfg.out_dir.empty()) {
        write_trace_csv(cfg.out_dir, "trace_kpp.csv", tk);
        write_trace_csv(cfg.out_dir, "trace_hr4.csv", th);
        CsvWriter w(cfg.out_dir + "/shift_fits.csv", {"family", "c_fit", "r", "s", "rms"});
        w.row_mixed({"kpp", CsvWriter::format(fk.c_fit), CsvWriter::format(fk.r),
                     CsvWriter::format(fk.s), CsvWriter::format(fk.rms)});
        w.row_mixed({"hadeler_rothe_4", CsvWriter::format(f4.c_fit), CsvWriter::format(f4.r),
                     CsvWriter::format(f4.s), CsvWriter::format(f4.rms)});
    }
    return rep;
}

void push_pair_criteria(ExperimentReport& rep, const std::string& prefix,
                        const PairReports& pr) {
    rep.criteria.push_back(flag(prefix + "_super", pr.upper.pass));
    rep.criteria.push_back(flag(prefix + "_sub", pr.lower.pass));
}

bool refine_stable(const ResidualReport& base, const ResidualReport& half) {
    return base.pass == half.pass &&
           std::fabs(half.violation() - base.violation()) < 10.0 * base.numeric_tol;
}

ExperimentReport run_E4(const ExperimentConfig& cfg) {
    ExperimentReport rep;
    GridBox box;  // z [-40,40] x t [0,50]
    auto hr4_exact = exact_hadeler_rothe(4.0);

    RotheOptions ro;
    PairReports rothe = check_rothe_pair(hr4_exact, ro, box);
    push_pair_criteria(rep, "rothe", rothe);

    auto kpp = make_kpp();
    FrontProfile pk = solve_profile(kpp, 2.5);
    WangOptions wo;
    PairReports wang = check_wang_pair(pk, wo, box);
    push_pair_criteria(rep, "wang", wang);

    ExponentialOptions eo;
    PairReports expo = check_exponential_pair(hr4_exact, eo, box);
    push_pair_criteria(rep, "exponential", expo);

    // deliberately undersized rate: half the tight linear-regime threshold
    const double a_tight = 2.0 * hr4_exact.sup_slope_ratio() + 1.0 - hr4_exact.c();
    ExponentialOptions en;
    en.a = 0.5 * a_tight;
    PairReports negative = check_exponential_pair(hr4_exact, en, box);
    rep.criteria.push_back(flag("negative_test_reports_violation",
                                !negative.upper.pass && !negative.lower.pass));

    const double eps = 0.5;
    std::vector<double> Vflat(64, 3.0);
    MainPairSearch mf = search_main_pair(hr4_exact, Vflat, 20.0, eps, MainPairOptions{}, box);
    push_pair_criteria(rep, "main_flat", mf.reports);

    std::vector<double> Vcorr(64);
    for (std::size_t i = 0; i < Vcorr.size(); ++i)
        Vcorr[i] = 0.05 * std::cos(2.0 * M_PI * static_cast<double>(i) / 64.0);
    MainPairSearch mc = search_main_pair(hr4_exact, Vcorr, 20.0, eps, MainPairOptions{}, box);
    push_pair_criteria(rep, "main_corrugated", mc.reports);

    // verdict stability under halving all residual-grid spacings
    const GridBox half = box.halved();
    {
        ResidualReport upper2 = check_rothe_side(hr4_exact, SignSide::Super, ro,
                                                 rothe.upper.constants[3].second,
                                                 rothe.upper.constants[4].second, half);
        ResidualReport lower2 = check_rothe_side(hr4_exact, SignSide::Sub, ro,
                                                 rothe.lower.constants[3].second,
                                                 rothe.lower.constants[4].second, half);
        rep.criteria.push_back(flag("rothe_refine_stable",
                                    refine_stable(rothe.upper, upper2) &&
                                        refine_stable(rothe.lower, lower2)));
    }
    {
        ResidualReport upper2 = check_wang_side(pk, SignSide::Super, wo.eps,
                                                wang.upper.constants[1].second,
                                                wang.upper.constants[2].second, wo.tol, half);
        ResidualReport lower2 = check_wang_side(pk, SignSide::Sub, wo.eps,
                                                wang.lower.constants[1].second,
                                                wang.lower.constants[2].second, wo.tol, half);
        rep.criteria.push_back(flag("wang_refine_stable",
                                    refine_stable(wang.upper, upper2) &&
                                        refine_stable(wang.lower, lower2)));
    }
    {
        PairReports expo2 = check_exponential_pair(hr4_exact, eo, half);
        rep.criteria.push_back(flag("exponential_refine_stable",
                                    refine_stable(expo.upper, expo2.upper) &&
                                        refine_stable(expo.lower, expo2.lower)));
    }
    {
        PairReports mc2 = check_main_pair(hr4_exact, Vcorr, 20.0, mc.pair, MainPairOptions{},
                                          half);
        rep.criteria.push_back(flag("main_refine_stable",
                                    refine_stable(mc.reports.upper, mc2.upper) &&
                                        refine_stable(mc.reports.lower, mc2.lower)));
    }

    if (!cfg.out_dir.empty()) {
        CsvWriter w(cfg.out_dir + "/certificates.csv",
                    {"candidate", "side", "pass", "min_L", "max_L", "numeric_tol"});
        auto emit = [&w](const ResidualReport& r) {
            w.row_mixed({r.candidate, r.side == SignSide::Super ? "super" : "sub",
                         r.pass ? "1" : "0", CsvWriter::format(r.min_L),
                         CsvWriter::format(r.max_L), CsvWriter::format(r.numeric_tol)});
        };
        for (const PairReports* pr : {&rothe, &wang, &expo, &negative, &mf.reports,
                                      &mc.reports}) {
            emit(pr->upper);
            emit(pr->lower);
        }
    }
    return rep;
}

ExperimentReport run_E5(const ExperimentConfig& cfg) {
    ExperimentReport rep;
    const double Lx = 20.0;
    const std::size_t nx = 128;
    const double c = kHr4Cstar;

    auto cos_mode = [&](double A) {
        std::vector<double> v(nx);
        for (std::size_t i = 0; i < nx; ++i)
            v[i] = A * std::cos(2.0 * M_PI * static_cast<double>(i) /
                                static_cast<double>(nx));
        return v;
    };
    GapSeries g005 = compare_U_V(cos_mode(0.05), Lx, c, 50.0);
    rep.criteria.push_back(at_most("uv_gap_amplitude_005", g005.sup_gap, 0.01));
    const double g04 = compare_U_V(cos_mode(0.4), Lx, c, 50.0).sup_gap;
    const double g02 = compare_U_V(cos_mode(0.2), Lx, c, 50.0).sup_gap;
    const double g01 = compare_U_V(cos_mode(0.1), Lx, c, 50.0).sup_gap;
    rep.criteria.push_back(at_most("uv_gap_halving_04_02", g02, 0.5 * g04));
    rep.criteria.push_back(at_most("uv_gap_halving_02_01", g01, 0.5 * g02));
    rep.criteria.push_back(flag("uv_gap_strictly_decreasing", g04 > g02 && g02 > g01));

    DecaySeries ds = decay_series(double_kink(800.0, 8192, 1.0, 1.0), 800.0, c, 100.0);
    const double s_vx = fit_power(ds.t, ds.sup_vx);
    const double s_vxx = fit_power(ds.t, ds.sup_vxx);
    const double s_vxxx = fit_power(ds.t, ds.sup_vxxx);
    const double s_vxt = fit_power(ds.t, ds.sup_vxt);
    rep.criteria.push_back(within("decay_rate_vx", s_vx, -0.5, 0.15));
    rep.criteria.push_back(within("decay_rate_vxx", s_vxx, -1.0, 0.2));
    rep.criteria.push_back(within("decay_rate_vxxx", s_vxxx, -1.5, 0.3));
    rep.criteria.push_back(within("decay_rate_vxt", s_vxt, -1.5, 0.3));

    if (!cfg.out_dir.empty()) {
        CsvWriter w(cfg.out_dir + "/compare.csv", {"t", "gap"});
        for (std::size_t i = 0; i < g005.t.size(); ++i) w.row({g005.t[i], g005.gap[i]});
        CsvWriter d(cfg.out_dir + "/decay.csv",
                    {"t", "sup_vx", "sup_vxx", "sup_vxxx", "sup_vxt"});
        for (std::size_t i = 0; i < ds.t.size(); ++i)
            d.row({ds.t[i], ds.sup_vx[i], ds.sup_vxx[i], ds.sup_vxxx[i], ds.sup_vxt[i]});
    }
    return rep;
}

CorrugatedParams corrugated_params(const ExperimentConfig& cfg) {
    CorrugatedParams par;
    par.Lx = cfg.overrides.get_num("grid2d", "Lx", par.Lx);
    par.nx = static_cast<std::size_t>(cfg.overrides.get_int("grid2d", "nx",
                                                            static_cast<long>(par.nx)));
    par.z_lo = cfg.overrides.get_num("grid2d", "z_lo", par.z_lo);
    par.z_hi = cfg.overrides.get_num("grid2d", "z_hi", par.z_hi);
    par.nz = static_cast<std::size_t>(cfg.overrides.get_int("grid2d", "nz",
                                                            static_cast<long>(par.nz)));
    par.dt = cfg.overrides.get_num("run", "dt", par.dt);
    par.T = cfg.overrides.get_num("run", "T", par.T);
    par.A = cfg.overrides.get_num("run", "amplitude", par.A);
    Grid2D probe{par.Lx, par.nx, par.z_lo, par.z_hi, par.nz};
    probe.validate();
    return par;
}

void write_corrugated_csvs(const std::string& dir, const CorrugatedRun& run, double Lx) {
    CsvWriter ls(dir + "/levelset.csv", {"t", "x", "gamma"});
    for (const auto& fr : run.frames) {
        const double dx = Lx / static_cast<double>(fr.gamma.size());
        for (std::size_t i = 0; i < fr.gamma.size(); ++i)
            ls.row({fr.t, dx * static_cast<double>(i), fr.gamma[i]});
    }
    CsvWriter dg(dir + "/diagnostics.csv",
                 {"t", "residual", "min_minus_uz", "sup_ux", "sup_uxx", "sup_gx", "sup_gxx"});
    for (std::size_t i = 0; i < run.diag_t.size(); ++i)
        dg.row({run.diag_t[i], run.residual[i], run.min_uz_band[i], run.sup_ux[i],
                run.sup_uxx[i], run.sup_gx[i], run.sup_gxx[i]});
}

ExperimentReport run_E6(const ExperimentConfig& cfg) {
    ExperimentReport rep;
    const CorrugatedParams par = corrugated_params(cfg);
    const CorrugatedRun& run = standard_corrugated_run(par, cfg.threads);

    rep.criteria.push_back(
        at_most("residual_at_T100", diag_at(run.diag_t, run.residual, 100.0), 0.02));
    const double gx10 = diag_at(run.diag_t, run.sup_gx, 10.0);
    const double gx200 = diag_at(run.diag_t, run.sup_gx, 200.0);
    const double gxx10 = diag_at(run.diag_t, run.sup_gxx, 10.0);
    const double gxx200 = diag_at(run.diag_t, run.sup_gxx, 200.0);
    rep.criteria.push_back(at_least("levelset_gx_shrink_factor", gx10 / gx200, 5.0));
    rep.criteria.push_back(at_least("levelset_gxx_shrink_factor", gxx10 / gxx200, 5.0));
    double min_uz = std::numeric_limits<double>::max();
    for (std::size_t i = 0; i < run.diag_t.size(); ++i)
        if (run.diag_t[i] >= par.T_burn) min_uz = std::min(min_uz, run.min_uz_band[i]);
    rep.criteria.push_back(at_least("monotone_band_min_minus_uz", min_uz, 1e-12));
    const double ux10 = diag_at(run.diag_t, run.sup_ux, 10.0);
    const double ux200 = diag_at(run.diag_t, run.sup_ux, 200.0);
    rep.criteria.push_back(at_most("x_derivative_decay", ux200, 0.1 * ux10));
    rep.criteria.push_back(at_least("corridor_min_u", run.min_u, -1e-6));
    rep.criteria.push_back(at_most("corridor_max_u", run.max_u, 1.0 + 1e-6));

    if (!cfg.out_dir.empty()) write_corrugated_csvs(cfg.out_dir, run, par.Lx);
    return rep;
}

ExperimentReport run_E7(const ExperimentConfig& cfg) {
    ExperimentReport rep;
    const CorrugatedParams par = corrugated_params(cfg);
    const CorrugatedRun& run = standard_corrugated_run(par, cfg.threads);

    GammaCompareResult g20 = gamma_vs_V(run.frames, par.Lx, 20.0, run.c);
    GammaCompareResult g40 = gamma_vs_V(run.frames, par.Lx, 40.0, run.c);
    rep.criteria.push_back(at_most("gamma_vs_V_gap_tau20", g20.sup_gap, 0.1));
    rep.criteria.push_back(at_most("gamma_vs_V_gap_tau40", g40.sup_gap, g20.sup_gap + 1e-12));

    if (!cfg.out_dir.empty()) {
        CsvWriter w(cfg.out_dir + "/compare.csv", {"t", "gap"});
        for (std::size_t i = 0; i < g20.t.size(); ++i) w.row({g20.t[i], g20.gap[i]});
    }
    return rep;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    cfg.overrides.validate_sections({"experiment", "reaction", "grid1d", "grid2d", "run",
                                     "fit"});
    cfg.overrides.validate_keys("experiment", {"id", "threads"});
    cfg.overrides.validate_keys("reaction", {"name", "nu"});
    cfg.overrides.validate_keys("grid1d", {"z_lo", "z_hi", "nz", "nz_pushed"});
    cfg.overrides.validate_keys("grid2d", {"Lx", "nx", "z_lo", "z_hi", "nz"});
    cfg.overrides.validate_keys("run",
                                {"dt", "T", "sample_dt", "amplitude", "bisect_tol", "level"});
    cfg.overrides.validate_keys("fit", {"t_lo", "t_hi", "samples"});

    const auto t0 = std::chrono::steady_clock::now();
    ExperimentReport rep;
    if (cfg.id == "E1")
        rep = run_E1(cfg);
    else if (cfg.id == "E2")
        rep = run_E2(cfg);
    else if (cfg.id == "E3")
        rep = run_E3(cfg);
    else if (cfg.id == "E4")
        rep = run_E4(cfg);
    else if (cfg.id == "E5")
        rep = run_E5(cfg);
    else if (cfg.id == "E6")
        rep = run_E6(cfg);
    else if (cfg.id == "E7")
        rep = run_E7(cfg);
    else
        throw ConfigError("unknown experiment id: " + cfg.id);
    rep.id = cfg.id;
    for (const auto& e : list_experiments())
        if (e.id == cfg.id) rep.description = e.description;
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                           .count();
    rep.config_hash = cfg.overrides.hash();
    rep.version = kVersion;
    return rep;
}

void emit_report(const ExperimentReport& report, const std::string& out_dir) {
    if (report.criteria.empty())
        throw ConfigError("refusing to emit a report with no criteria");
    std::filesystem::create_directories(out_dir);
    {
        std::ofstream txt(out_dir + "/report.txt");
        if (!txt) throw ConfigError("cannot write report to " + out_dir);
        txt << report.id << ": " << report.description << "\n";
        txt << "version: " << report.version << "  config_hash: " << report.config_hash
            << "  wall_seconds: " << report.wall_seconds << "\n";
        for (const auto& c : report.criteria) {
            txt << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
                << ": measured=" << CsvWriter::format(c.measured);
            switch (c.kind) {
                case Criterion::Kind::AbsDiff:
                    txt << " target=" << CsvWriter::format(c.target)
                        << " tol=" << CsvWriter::format(c.tol);
                    break;
                case Criterion::Kind::AtMost:
                    txt << " limit<=" << CsvWriter::format(c.target);
                    break;
                case Criterion::Kind::AtLeast:
                    txt << " limit>=" << CsvWriter::format(c.target);
                    break;
                case Criterion::Kind::Flag:
                    txt << " expected=1";
                    break;
            }
            txt << "\n";
        }
        txt << (report.pass() ? "RESULT: PASS" : "RESULT: FAIL") << "\n";
    }
    CsvWriter csv(out_dir + "/report.csv", {"criterion", "measured", "target", "tol", "pass"});
    for (const auto& c : report.criteria)
        csv.row_mixed({c.name, CsvWriter::format(c.measured), CsvWriter::format(c.target),
                       CsvWriter::format(c.tol), c.pass ? "1" : "0"});
}

}  // namespace frontlab

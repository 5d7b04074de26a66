#include "frontlab/reaction.hpp"

#include <cmath>
#include <sstream>

#include "frontlab/errors.hpp"

namespace frontlab {

namespace {

double poly_eval(const std::vector<double>& c, double u) {
    double r = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) r = r * u + c[k];
    return r;
}

double poly_deriv(const std::vector<double>& c, double u) {
    double r = 0.0;
    for (std::size_t k = c.size(); k-- > 1;) r = r * u + static_cast<double>(k) * c[k];
    return r;
}

}  // namespace

ReactionTerm::ReactionTerm(std::string name, std::vector<double> coeffs,
                           std::vector<double> params)
    : name_(std::move(name)), coeffs_(std::move(coeffs)), params_(std::move(params)) {
    if (coeffs_.empty() || coeffs_[0] != 0.0)
        throw ConfigError("reaction polynomial must have zero constant term");
    fprime0_ = coeffs_.size() > 1 ? coeffs_[1] : 0.0;
    fprime1_ = poly_deriv(coeffs_, 1.0);
}

double ReactionTerm::value(double u) const {
    if (u < 0.0) return fprime0_ * u;
    return poly_eval(coeffs_, u);
}

double ReactionTerm::deriv(double u) const {
    if (u < 0.0) return fprime0_;
    return poly_deriv(coeffs_, u);
}

double ReactionTerm::sup_abs_deriv_01() const {
    const int n = 4096;
    double m = 0.0;
    for (int i = 0; i <= n; ++i) {
        double d = std::fabs(poly_deriv(coeffs_, static_cast<double>(i) / n));
        if (d > m) m = d;
    }
    return m;
}

ReactionTerm make_kpp() {
    return ReactionTerm("kpp", {0.0, 1.0, -1.0});
}

ReactionTerm make_hadeler_rothe(double nu) {
    if (!(nu > 0.0)) throw ConfigError("hadeler_rothe requires nu > 0");
    // u(1-u)(1+nu u) = u + (nu-1) u^2 - nu u^3
    return ReactionTerm("hadeler_rothe", {0.0, 1.0, nu - 1.0, -nu}, {nu});
}

ReactionTerm make_polynomial(std::string name, std::vector<double> coeffs) {
    return ReactionTerm(std::move(name), std::move(coeffs));
}

MonostableReport validate_monostable(const ReactionTerm& f, std::size_t samples, double tol) {
    MonostableReport rep;
    if (samples < 100) {
        rep.message = "need at least 100 samples";
        return rep;
    }
    auto fail = [&rep](const std::string& msg, double s, double v) {
        rep.pass = false;
        rep.message = msg;
        rep.s_bad = s;
        rep.f_bad = v;
        return rep;
    };
    if (std::fabs(f.value(0.0)) > 1e-14) return fail("f(0) != 0", 0.0, f.value(0.0));
    if (std::fabs(f.value(1.0)) > 1e-12) return fail("f(1) != 0", 1.0, f.value(1.0));
    if (!(f.fprime0() > 0.0)) return fail("f'(0) <= 0", 0.0, f.fprime0());
    if (!(f.fprime1() < 0.0)) return fail("f'(1) >= 0", 1.0, f.fprime1());
    const auto n = samples;
    for (std::size_t i = 1; i < n; ++i) {
        double s = static_cast<double>(i) / n;
        double v = f.value(s);
        if (!(v > tol)) {
            std::ostringstream os;
            os << "f(" << s << ") = " << v << " not positive inside (0,1)";
            return fail(os.str(), s, v);
        }
    }
    for (std::size_t i = 1; i <= n; ++i) {
        double s = 1.0 + static_cast<double>(i) / n;
        double v = f.value(s);
        if (!(v < -tol)) {
            std::ostringstream os;
            os << "f(" << s << ") = " << v << " not negative on (1,2]";
            return fail(os.str(), s, v);
        }
    }
    rep.pass = true;
    rep.message = "ok";
    return rep;
}

CharacteristicExponents lambda_roots(double fprime0, double c, double tol) {
    if (!(fprime0 > 0.0)) throw ConfigError("lambda_roots requires f'(0) > 0");
    const double cmin = 2.0 * std::sqrt(fprime0);
    if (c < cmin - tol)
        throw ComplexRootsError("complex characteristic roots: c = " + std::to_string(c) +
                                " < 2 sqrt(f'(0)) = " + std::to_string(cmin));
    CharacteristicExponents ex;
    ex.discriminant = c * c - 4.0 * fprime0;
    if (ex.discriminant < tol) {
        ex.double_root = true;
        ex.lambda_minus = ex.lambda_plus = -0.5 * c;
        return ex;
    }
    // lambda_minus by the stable branch, lambda_plus from the product fprime0.
    ex.lambda_minus = -0.5 * (c + std::sqrt(ex.discriminant));
    ex.lambda_plus = fprime0 / ex.lambda_minus;
    return ex;
}

CharacteristicExponents lambda_roots(const ReactionTerm& f, double c, double tol) {
    return lambda_roots(f.fprime0(), c, tol);
}

}  // namespace frontlab

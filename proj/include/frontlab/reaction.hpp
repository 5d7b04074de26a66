#pragma once

#include <string>
#include <vector>

namespace frontlab {

/// Monostable reaction term f with the linear extension f(u) = f'(0) u for u < 0.
///
/// The positive branch is a polynomial sum c_k u^k (c_0 = 0 so that f(0) = 0
/// holds exactly). Evaluators are pure and safe to call from concurrent grid
/// loops.
class ReactionTerm {
public:
    ReactionTerm(std::string name, std::vector<double> coeffs,
                 std::vector<double> params = {});

    /// f(u); exactly f'(0) u for u < 0.
    double operator()(double u) const { return value(u); }
    double value(double u) const;
    /// f'(u); exactly f'(0) for u < 0.
    double deriv(double u) const;

    double fprime0() const { return fprime0_; }
    double fprime1() const { return fprime1_; }
    const std::string& name() const { return name_; }
    const std::vector<double>& params() const { return params_; }
    const std::vector<double>& coeffs() const { return coeffs_; }

    /// sup |f'| over [0,1], used by comparison-function bounds.
    double sup_abs_deriv_01() const;

private:
    std::string name_;
    std::vector<double> coeffs_;  // positive-branch polynomial, c_0 == 0
    std::vector<double> params_;
    double fprime0_ = 0.0;
    double fprime1_ = 0.0;
};

/// f(u) = u(1-u).
ReactionTerm make_kpp();

/// f(u) = u(1-u)(1+nu*u); pushed for nu > 2. Rejects nu <= 0.
ReactionTerm make_hadeler_rothe(double nu);

/// General polynomial branch for u >= 0 (coeffs[0] must be 0); the negative
/// side always uses the linear extension. Monostability is not enforced here;
/// run validate_monostable to check condition-style sign requirements.
ReactionTerm make_polynomial(std::string name, std::vector<double> coeffs);

struct MonostableReport {
    bool pass = false;
    std::string message;
    double s_bad = 0.0;  // first offending sample (when !pass)
    double f_bad = 0.0;
};

/// Sign checks on a uniform sample of (0,1) and (1,2]: f > 0 inside (0,1),
/// f < 0 on (1,2], f(0) = f(1) = 0, f'(0) > 0, f'(1) < 0.
MonostableReport validate_monostable(const ReactionTerm& f, std::size_t samples = 10000,
                                     double tol = 0.0);

/// Roots of lambda^2 + c lambda + f'(0) = 0.
struct CharacteristicExponents {
    double lambda_minus = 0.0;  // smallest root
    double lambda_plus = 0.0;   // largest root
    double discriminant = 0.0;  // c^2 - 4 f'(0)
    bool double_root = false;
};

/// Throws ComplexRootsError when c < 2 sqrt(f'(0)) - tol.
CharacteristicExponents lambda_roots(const ReactionTerm& f, double c, double tol = 1e-9);
CharacteristicExponents lambda_roots(double fprime0, double c, double tol = 1e-9);

}  // namespace frontlab

#pragma once

namespace frontlab {

/// Exponential cutoff psi(s) = chi(exp(rate * s)) with
///   chi(sigma) = sigma          for sigma <= 1/2,
///   chi(sigma) = 1              for sigma >= 1,
/// and the unique quintic blend on [1/2, 1] matching value, first and second
/// derivatives of both outer branches (C^2 overall, monotone, 0 < chi <= 1).
/// Any sign of `rate` is allowed: negative rates decay toward s = +infinity,
/// positive rates toward s = -infinity.
class CutoffPsi {
public:
    explicit CutoffPsi(double rate) : rate_(rate) {}

    struct Eval {
        double psi;
        double dpsi;
        double d2psi;
    };

    Eval operator()(double s) const;
    double value(double s) const { return (*this)(s).psi; }
    double rate() const { return rate_; }

    /// chi and its sigma-derivatives (exposed for the blend tests).
    static void chi(double sigma, double* c, double* dc, double* d2c);

private:
    double rate_;
};

}  // namespace frontlab

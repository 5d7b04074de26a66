#pragma once

#include <vector>

namespace frontlab {

/// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Front-position model sigma(t) ~ c_fit t + r ln t + s.
struct ShiftFit {
    double c_fit = 0.0;
    double r = 0.0;
    double s = 0.0;
    double rms = 0.0;  // residual root-mean-square over the fitted samples
};

/// Fits the three-parameter model over the given samples. Requires positive
/// times spanning at least one decade (max/min >= 10), else FitError.
ShiftFit fit_log_shift(const std::vector<double>& t, const std::vector<double>& sigma);

/// Log-log least-squares power: slope of ln y against ln t. Values must be
/// positive and above 1e-12 (flat data has no meaningful rate).
double fit_power(const std::vector<double>& t, const std::vector<double>& y);

}  // namespace frontlab

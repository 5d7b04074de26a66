#include "frontlab/fitting.hpp"

#include <cmath>

#include "frontlab/errors.hpp"

namespace frontlab {

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw FitError("fit_slope needs >= 2 samples");
    const auto n = static_cast<double>(x.size());
    double xm = 0.0, ym = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        xm += x[i];
        ym += y[i];
    }
    xm /= n;
    ym /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - xm) * (x[i] - xm);
        sxy += (x[i] - xm) * (y[i] - ym);
    }
    if (sxx <= 0.0) throw FitError("fit_slope: degenerate abscissae");
    return sxy / sxx;
}

ShiftFit fit_log_shift(const std::vector<double>& t, const std::vector<double>& sigma) {
    if (t.size() != sigma.size() || t.size() < 4) throw FitError("fit_log_shift needs >= 4 samples");
    double tmin = t.front(), tmax = t.front();
    for (double v : t) {
        if (!(v > 0.0)) throw FitError("fit_log_shift needs positive times");
        tmin = std::min(tmin, v);
        tmax = std::max(tmax, v);
    }
    if (tmax < 10.0 * tmin - 1e-6)
        throw FitError("fit window shorter than one decade in t");

    // columns: t, ln t, 1 -- solve the 3x3 normal equations via Cramer.
    long double A[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    long double b[3] = {0, 0, 0};
    for (std::size_t i = 0; i < t.size(); ++i) {
        const long double col[3] = {t[i], std::log(t[i]), 1.0L};
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) A[r][c] += col[r] * col[c];
            b[r] += col[r] * sigma[i];
        }
    }
    auto det3 = [](const long double m[3][3]) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    const long double d = det3(A);
    if (std::fabs(static_cast<double>(d)) < 1e-30) throw FitError("ill-conditioned shift fit");
    long double sol[3];
    for (int k = 0; k < 3; ++k) {
        long double M[3][3];
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) M[r][c] = (c == k) ? b[r] : A[r][c];
        sol[k] = det3(M) / d;
    }
    ShiftFit out;
    out.c_fit = static_cast<double>(sol[0]);
    out.r = static_cast<double>(sol[1]);
    out.s = static_cast<double>(sol[2]);
    long double ssr = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const long double res = sigma[i] - (sol[0] * t[i] + sol[1] * std::log(t[i]) + sol[2]);
        ssr += res * res;
    }
    out.rms = std::sqrt(static_cast<double>(ssr) / static_cast<double>(t.size()));
    return out;
}

double fit_power(const std::vector<double>& t, const std::vector<double>& y) {
    if (t.size() != y.size() || t.size() < 2) throw FitError("fit_power needs >= 2 samples");
    std::vector<double> lt(t.size()), ly(y.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!(t[i] > 0.0)) throw FitError("fit_power needs positive times");
        if (!(y[i] > 1e-12)) throw FitError("fit_power: sup-norm below 1e-12, rate meaningless");
        lt[i] = std::log(t[i]);
        ly[i] = std::log(y[i]);
    }
    return fit_slope(lt, ly);
}

}  // namespace frontlab

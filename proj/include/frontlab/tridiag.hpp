#pragma once

#include <cstddef>
#include <vector>

#include "frontlab/errors.hpp"

namespace frontlab {

/// Prefactored Thomas solve for a fixed tridiagonal matrix
/// (sub[i] x[i-1] + diag[i] x[i] + sup[i] x[i+1] = d[i]).
class Tridiag {
public:
    Tridiag() = default;
    Tridiag(const std::vector<double>& sub, const std::vector<double>& diag,
            const std::vector<double>& sup) {
        factor(sub, diag, sup);
    }

    void factor(const std::vector<double>& sub, const std::vector<double>& diag,
                const std::vector<double>& sup) {
        const std::size_t n = diag.size();
        if (n < 2 || sub.size() != n || sup.size() != n)
            throw ConfigError("Tridiag: inconsistent band sizes");
        sup_ = sup;
        m_.assign(n, 0.0);
        inv_piv_.assign(n, 0.0);
        double piv = diag[0];
        inv_piv_[0] = 1.0 / piv;
        for (std::size_t i = 1; i < n; ++i) {
            m_[i] = sub[i] * inv_piv_[i - 1];
            piv = diag[i] - m_[i] * sup_[i - 1];
            if (piv == 0.0) throw ConfigError("Tridiag: zero pivot");
            inv_piv_[i] = 1.0 / piv;
        }
    }

    void solve(std::vector<double>& d) const { solve(d.data(), d.size()); }

    void solve(double* d, std::size_t n) const {
        for (std::size_t i = 1; i < n; ++i) d[i] -= m_[i] * d[i - 1];
        d[n - 1] *= inv_piv_[n - 1];
        for (std::size_t i = n - 1; i-- > 0;) d[i] = (d[i] - sup_[i] * d[i + 1]) * inv_piv_[i];
    }

    std::size_t size() const { return m_.size(); }

private:
    std::vector<double> sup_, m_, inv_piv_;
};

/// Periodic (cyclic) constant-coefficient tridiagonal solve via the
/// Sherman-Morrison correction of a prefactored open-chain system.
class CyclicTridiag {
public:
    CyclicTridiag() = default;
    CyclicTridiag(double sub, double diag, double sup, std::size_t n) {
        factor(sub, diag, sup, n);
    }

    void factor(double sub, double diag, double sup, std::size_t n) {
        if (n < 3) throw ConfigError("CyclicTridiag requires n >= 3");
        n_ = n;
        sub_ = sub;
        sup_ = sup;
        gamma_ = -diag;
        std::vector<double> a(n, sub), b(n, diag), c(n, sup);
        a[0] = 0.0;
        c[n - 1] = 0.0;
        b[0] = diag - gamma_;
        b[n - 1] = diag - sub * sup / gamma_;
        core_.factor(a, b, c);
        q_.assign(n, 0.0);
        q_[0] = gamma_;
        q_[n - 1] = sup;  // u-vector of the rank-one update
        core_.solve(q_);
        denom_ = 1.0 + q_[0] + (sub / gamma_) * q_[n - 1];
    }

    void solve(std::vector<double>& d) const { solve(d.data()); }

    void solve(double* d) const {
        core_.solve(d, n_);
        const double corr = (d[0] + (sub_ / gamma_) * d[n_ - 1]) / denom_;
        for (std::size_t i = 0; i < n_; ++i) d[i] -= corr * q_[i];
    }

    std::size_t size() const { return n_; }

private:
    Tridiag core_;
    std::vector<double> q_;
    double sub_ = 0.0, sup_ = 0.0, gamma_ = 1.0, denom_ = 1.0;
    std::size_t n_ = 0;
};

}  // namespace frontlab

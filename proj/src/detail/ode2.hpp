#pragma once

// Small fixed-dimension (phi, v) integrators for the profile ODE
//   phi' = v,  v' = -c v - f(phi).
// Dormand-Prince 5(4) with PI-free simple step control for probing, and a
// classical RK4 fixed-step kernel for landing exactly on output grid nodes.

#include <algorithm>
#include <cmath>

namespace frontlab::detail {

struct State2 {
    double phi;
    double v;
};

template <class Rhs>
inline State2 rhs_of(const Rhs& rhs, const State2& y) {
    return rhs(y);
}

// One embedded Dormand-Prince step; returns the 5th-order result and the
// embedded error estimate through *err.
template <class Rhs>
inline State2 dopri5_step(const Rhs& rhs, const State2& y, double h, State2* err,
                          const State2& k1) {
    auto axpy = [](const State2& y0, double a, const State2& k) {
        return State2{y0.phi + a * k.phi, y0.v + a * k.v};
    };
    State2 k2 = rhs(axpy(y, h * (1.0 / 5.0), k1));
    State2 k3 = rhs(State2{y.phi + h * (3.0 / 40.0 * k1.phi + 9.0 / 40.0 * k2.phi),
                           y.v + h * (3.0 / 40.0 * k1.v + 9.0 / 40.0 * k2.v)});
    State2 k4 = rhs(State2{
        y.phi + h * (44.0 / 45.0 * k1.phi - 56.0 / 15.0 * k2.phi + 32.0 / 9.0 * k3.phi),
        y.v + h * (44.0 / 45.0 * k1.v - 56.0 / 15.0 * k2.v + 32.0 / 9.0 * k3.v)});
    State2 k5 = rhs(State2{y.phi + h * (19372.0 / 6561.0 * k1.phi - 25360.0 / 2187.0 * k2.phi +
                                        64448.0 / 6561.0 * k3.phi - 212.0 / 729.0 * k4.phi),
                           y.v + h * (19372.0 / 6561.0 * k1.v - 25360.0 / 2187.0 * k2.v +
                                      64448.0 / 6561.0 * k3.v - 212.0 / 729.0 * k4.v)});
    State2 k6 = rhs(State2{
        y.phi + h * (9017.0 / 3168.0 * k1.phi - 355.0 / 33.0 * k2.phi +
                     46732.0 / 5247.0 * k3.phi + 49.0 / 176.0 * k4.phi -
                     5103.0 / 18656.0 * k5.phi),
        y.v + h * (9017.0 / 3168.0 * k1.v - 355.0 / 33.0 * k2.v + 46732.0 / 5247.0 * k3.v +
                   49.0 / 176.0 * k4.v - 5103.0 / 18656.0 * k5.v)});
    State2 y5{y.phi + h * (35.0 / 384.0 * k1.phi + 500.0 / 1113.0 * k3.phi +
                           125.0 / 192.0 * k4.phi - 2187.0 / 6784.0 * k5.phi +
                           11.0 / 84.0 * k6.phi),
              y.v + h * (35.0 / 384.0 * k1.v + 500.0 / 1113.0 * k3.v + 125.0 / 192.0 * k4.v -
                         2187.0 / 6784.0 * k5.v + 11.0 / 84.0 * k6.v)};
    State2 k7 = rhs(y5);
    State2 y4{y.phi + h * (5179.0 / 57600.0 * k1.phi + 7571.0 / 16695.0 * k3.phi +
                           393.0 / 640.0 * k4.phi - 92097.0 / 339200.0 * k5.phi +
                           187.0 / 2100.0 * k6.phi + 1.0 / 40.0 * k7.phi),
              y.v + h * (5179.0 / 57600.0 * k1.v + 7571.0 / 16695.0 * k3.v +
                         393.0 / 640.0 * k4.v - 92097.0 / 339200.0 * k5.v +
                         187.0 / 2100.0 * k6.v + 1.0 / 40.0 * k7.v)};
    err->phi = y5.phi - y4.phi;
    err->v = y5.v - y4.v;
    return y5;
}

// Classical RK4 over [0, h_total] in nsub equal substeps.
template <class Rhs>
inline State2 rk4_advance(const Rhs& rhs, State2 y, double h_total, int nsub) {
    const double h = h_total / nsub;
    for (int i = 0; i < nsub; ++i) {
        State2 k1 = rhs(y);
        State2 k2 = rhs(State2{y.phi + 0.5 * h * k1.phi, y.v + 0.5 * h * k1.v});
        State2 k3 = rhs(State2{y.phi + 0.5 * h * k2.phi, y.v + 0.5 * h * k2.v});
        State2 k4 = rhs(State2{y.phi + h * k3.phi, y.v + h * k3.v});
        y.phi += h / 6.0 * (k1.phi + 2.0 * k2.phi + 2.0 * k3.phi + k4.phi);
        y.v += h / 6.0 * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v);
    }
    return y;
}

}  // namespace frontlab::detail

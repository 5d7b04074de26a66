#include <doctest.h>

#include <cmath>

#include "frontlab/errors.hpp"
#include "frontlab/reaction.hpp"

using namespace frontlab;

namespace {

// deterministic generator for property sweeps (no global RNG anywhere)
struct Lcg {
    unsigned long long s = 0x243f6a8885a308d3ull;
    double next() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<double>((s >> 11) & ((1ull << 52) - 1)) / static_cast<double>(1ull << 52);
    }
};

double fd_deriv(const ReactionTerm& f, double u, double h = 1e-6) {
    return (f.value(u + h) - f.value(u - h)) / (2.0 * h);
}

}  // namespace

TEST_CASE("kpp closed-form values") {
    auto f = make_kpp();
    CHECK(f.value(0.5) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(f.value(-2.0) == -2.0);  // linear extension f'(0) u
    CHECK(f.fprime0() == 1.0);
    CHECK(f.fprime1() == -1.0);
    CHECK(f.value(0.0) == 0.0);
    CHECK(f.value(1.0) == 0.0);
}

TEST_CASE("hadeler-rothe family values") {
    auto f = make_hadeler_rothe(4.0);
    CHECK(f.value(0.5) == doctest::Approx(0.75).epsilon(1e-15));
    // oracle: finite-difference derivative at u = 1 agrees with the closed form -5
    CHECK(fd_deriv(f, 1.0) == doctest::Approx(-5.0).epsilon(1e-8));
    CHECK(f.fprime1() == doctest::Approx(-5.0).epsilon(1e-15));
    CHECK(f.value(-1.0) == -1.0);
    CHECK(f.fprime0() == 1.0);
    CHECK_THROWS_AS(make_hadeler_rothe(0.0), ConfigError);
    CHECK_THROWS_AS(make_hadeler_rothe(-1.0), ConfigError);
}

TEST_CASE("extension is C^1 at u = 0") {
    auto f = make_hadeler_rothe(4.0);
    CHECK(std::fabs(f.deriv(-1e-12) - f.deriv(0.0)) <= 1e-12);
    CHECK(std::fabs(f.value(1e-12) - 1e-12) <= 1e-24);
    CHECK(f.deriv(-5.0) == f.fprime0());
}

TEST_CASE("monostable validation") {
    CHECK(validate_monostable(make_kpp()).pass);
    // oracle: dense sampling of the cubic confirms positivity inside (0,1)
    CHECK(validate_monostable(make_hadeler_rothe(4.0), 50000).pass);
    for (double nu : {0.5, 1.0, 2.0, 4.0, 8.0})
        CHECK(validate_monostable(make_hadeler_rothe(nu)).pass);
    // bistable shape u(1-u)(u-0.3) = -0.3u + 1.3u^2 - u^3 violates the sign condition
    auto bad = make_polynomial("bistable", {0.0, -0.3, 1.3, -1.0});
    auto rep = validate_monostable(bad);
    CHECK_FALSE(rep.pass);
    auto rep2 = validate_monostable(make_polynomial("cubic_root_inside", {0.0, 0.3, 0.4, -1.0}));
    CHECK_FALSE(rep2.pass);   // f(1) != 0
    CHECK_FALSE(validate_monostable(make_kpp(), 10).pass);  // too few samples
}

TEST_CASE("lambda roots: examples") {
    auto f = make_kpp();
    auto ex = lambda_roots(f, 2.5);
    CHECK(ex.lambda_minus == doctest::Approx(-2.0).epsilon(1e-14));
    CHECK(ex.lambda_plus == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK_FALSE(ex.double_root);

    auto dd = lambda_roots(f, 2.0);
    CHECK(dd.double_root);
    CHECK(dd.lambda_minus == doctest::Approx(-1.0));
    CHECK(dd.lambda_plus == doctest::Approx(-1.0));

    // c = 3/sqrt(2): oracle = substitute the roots back into the quadratic
    const double c = 3.0 / std::sqrt(2.0);
    auto rt = lambda_roots(f, c);
    CHECK(rt.lambda_minus == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-13));
    CHECK(rt.lambda_plus == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-13));
    for (double lam : {rt.lambda_minus, rt.lambda_plus})
        CHECK(std::fabs(lam * lam + c * lam + 1.0) <= 1e-12);

    CHECK_THROWS_AS(lambda_roots(f, 1.9), ComplexRootsError);
}

TEST_CASE("lambda roots: residual and Vieta relations over random inputs") {
    Lcg rng;
    for (int i = 0; i < 1000; ++i) {
        const double fp0 = 0.05 + 4.0 * rng.next();
        const double c = 2.0 * std::sqrt(fp0) * (1.0 + 2.0 * rng.next());
        auto ex = lambda_roots(fp0, c);
        CHECK(ex.lambda_minus <= ex.lambda_plus);
        CHECK(ex.lambda_plus < 0.0);
        for (double lam : {ex.lambda_minus, ex.lambda_plus})
            CHECK(std::fabs(lam * lam + c * lam + fp0) <= 1e-10);
        CHECK(std::fabs(ex.lambda_minus + ex.lambda_plus + c) <= 1e-12 * c);
        CHECK(std::fabs(ex.lambda_minus * ex.lambda_plus - fp0) <= 1e-12 * fp0);
    }
}

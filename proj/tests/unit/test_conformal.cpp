#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "icosa/conformal.hpp"
#include "icosa/errors.hpp"

using namespace icosa;

namespace {

const double a = 2 * std::cos(2 * kPi / 5), b = 2 * std::cos(kPi / 5);

// Frozen values from tests/oracles/sc_oracle.py (mpmath, 40 digits, an
// independent path of integration).
const double kCalFa = 4.1779794069292867036;
const double kK = 0.14792652824589549746;

struct OracleValue {
    Complex xi, value;
};
const OracleValue kOracle[] = {
    {{0.3, 0.4}, {0.48177573350699967367, 0.13553158542344130985}},
    {{1.0, 1.0}, {0.55398898205821848709, 0.24775376418412558143}},
    {{-0.5, 0.2}, {0.38202913957690891689, 0.24793689313893339422}},
    {{0.62, 0.01}, {0.61393131442306174462, 0.011833084065530821078}},
    {{2.0, 0.5}, {0.59004568563004610128, 0.35434518187952712005}},
    {{-1.0, 0.0}, {0.39669948735632675168, 0.28821904840229633565}},
    {{0.3, 0.0}, {0.46352080429105979277, 0.0}},
    {{1.2, 0.0}, {0.7467676912153532856, 0.17718674062877233182}},
};

} // namespace

TEST_CASE("f and f'") {
    CHECK(std::abs(f(0.0)) == 0.0);
    CHECK(std::abs(f(a)) < 1e-30);
    const double want = std::pow(1 - a, 3) * std::pow(1 - b, 9);
    CHECK(std::abs(f(1.0) - want) < 1e-14 * std::abs(want));
    // Central difference oracle for f'.
    const Complex z{0.7, 0.3};
    const double h = 1e-5;
    const Complex fd = (f(z + h) - f(z - h)) / (2 * h);
    CHECK(std::abs(f_prime(z) - fd) < 1e-8 * std::abs(fd));
}

TEST_CASE("eta branches") {
    const Complex xi{0.3, 0.4};
    CHECK(std::abs(std::pow(eta(xi, 0), 10) / f(xi) - 1.0) < 1e-10);
    for (int k = 0; k < 10; ++k) {
        CHECK(std::abs(eta(xi, k + 1) / eta(xi, k) - std::polar(1.0, kPi / 5)) < 1e-14);
        CHECK(std::abs(std::pow(eta(xi, k), 10) / f(xi) - 1.0) < 1e-10);
    }
    CHECK(std::abs(eta(xi, 13) - eta(xi, 3)) < 1e-15);

    // Log-domain oracle on (0, a): sheet 0 is real and positive there.
    const double x = 0.5 * a;
    const double log_mod = (8 * std::log(x) + 3 * std::log(a - x) + 9 * std::log(b - x)) / 10;
    CHECK(std::abs(eta(x, 0) - std::exp(log_mod)) < 1e-14);

    // Boundary values from above match interior values.
    for (double t : {-0.7, 0.3, 1.1, 2.4}) CHECK(std::abs(eta(t, 0) - eta({t, 1e-12}, 0)) < 1e-9);

    CHECK_THROWS_AS(eta(0.0, 0), SingularFiber);
    CHECK_THROWS_AS(eta(a, 2), SingularFiber);
    CHECK_THROWS_AS(eta(b, 5), SingularFiber);
    CHECK_THROWS_AS(make_sheeted(b, 0), SingularFiber);
    CHECK(make_sheeted(xi, -3).sheet == 7);
}

TEST_CASE("normalisation constant") {
    const QuadEstimate F = calF_a();
    CHECK(std::abs(F.value.real() - kCalFa) < 1e-12);
    CHECK(std::abs(F.value.imag()) < 1e-14);
    CHECK(F.error < 1e-12);
    const double k = compute_k();
    CHECK(k > 0);
    CHECK(std::abs(k - kK) < 1e-14);
    CHECK(std::abs(k * F.value - a) < 1e-10);

    // Halving the target changes k by less than the coarse error estimate.
    QuadratureRule coarse, fine;
    coarse.target_abs_err = 1e-8;
    fine.target_abs_err = 5e-9;
    const QuadEstimate Fc = calF_a(coarse);
    CHECK(std::abs(compute_k(fine) - compute_k(coarse)) <= a * Fc.error / (Fc.value.real() * Fc.value.real()) + 1e-15);

    QuadratureRule ts;
    ts.kind = QuadratureRule::Kind::TanhSinh;
    CHECK(std::abs(compute_k(ts) - kK) < 1e-12);
}

TEST_CASE("F_T against the oracle") {
    for (const auto& o : kOracle) {
        CAPTURE(o.xi);
        CHECK(std::abs(F_T(o.xi) - o.value) < 1e-12);
    }
    QuadratureRule ts;
    ts.kind = QuadratureRule::Kind::TanhSinh;
    for (const auto& o : kOracle) CHECK(std::abs(F_T(o.xi, ts) - o.value) < 1e-10);
}

TEST_CASE("F_T vertices and angles") {
    CHECK(std::abs(F_T_vertex(0)) < 1e-15);
    CHECK(std::abs(F_T_vertex(1) - a) < 1e-12);
    CHECK(std::abs(F_T_vertex(2) - Complex(1.3090169943749474241, 0.95105651629515357212)) < 1e-12);
    CHECK(std::abs(F_T_vertex(2) - std::polar(b, kPi / 5)) < 1e-12);
    // Approach from both sides of b: |F_T(b +- d) - B| ~ C d^{1/10}, with
    // C = 10 k b^{-4/5} (b - a)^{-3/10}.
    const double C = 10 * compute_k() * std::pow(b, -0.8) * std::pow(b - a, -0.3);
    for (double d : {1e-6, 1e-8}) {
        CHECK(std::abs(std::abs(F_T(b - d) - F_T_vertex(2)) / std::pow(d, 0.1) / C - 1) < 1e-2);
        CHECK(std::abs(std::abs(F_T(b + d) - F_T_vertex(2)) / std::pow(d, 0.1) / C - 1) < 1e-2);
    }
    CHECK(std::abs(interior_angle(0, 1e-4) - kPi / 5) < 1e-3);
    CHECK(std::abs(interior_angle(1, 1e-4) - 0.7 * kPi) < 1e-3);
    CHECK(std::abs(interior_angle(2, 1e-4) - 0.1 * kPi) < 1e-3);
}

TEST_CASE("F_T image lies in T and boundary maps to edges") {
    const TriangleT T = build_triangle();
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ux(-4, 5), uy(0.0, 4);
    for (int i = 0; i < 100; ++i) {
        const Complex xi{ux(rng), uy(rng)};
        if (singular_index(xi, 1e-6) >= 0) continue;
        CHECK(in_closed_triangle(F_T(xi), T, 1e-9));
    }
    // (0, a) -> OA, (a, b) -> AB, (b, inf) and (-inf, 0) -> BO.
    CHECK(std::abs(F_T(0.4).imag()) < 1e-12);
    const Complex on_ab = F_T(1.0);
    CHECK(std::abs(((on_ab - T.A) * std::conj(T.B - T.A)).imag()) < 1e-12);
    for (double x : {-2.0, 3.0}) {
        const Complex w = F_T(x);
        CHECK(std::abs((w * std::conj(T.B)).imag()) < 1e-12);
    }
    CHECK_THROWS_AS(F_T({0.3, -0.1}), InvalidArgument);
    CHECK_THROWS_AS(F_T(a), SingularFiber);
}

TEST_CASE("path policy") {
    for (Complex xi : {Complex{0.3, 0.4}, Complex{1.0, 1e-3}, Complex{0.62, 0.01}, Complex{-1.0, 0.0}, Complex{1.3, 0.0}}) {
        const auto path = map_path(xi);
        REQUIRE(path.size() >= 2);
        CHECK(std::abs(path.front()) == 0.0);
        CHECK(std::abs(path.back() - xi) == 0.0);
        for (Complex p : path) CHECK(p.imag() >= 0.0);
    }
}

TEST_CASE("F_Q and F_Kstar") {
    const Complex xi{0.3, 0.2};
    CHECK(std::abs(F_Q(std::conj(xi)) - std::conj(F_Q(xi))) < 1e-10);
    CHECK(std::abs(F_Q(xi) - F_T(xi)) == 0.0);
    CHECK(std::abs(F_Kstar(xi, 1) - epsilon() * F_Q(xi)) < 1e-15);
    for (double x : {0.1, 0.3, 0.55}) CHECK(std::abs(F_Q(x).imag()) < 1e-9);
    const StarPolygon& K = star();
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int i = 0; i < 40; ++i) {
        const Complex z{u(rng), u(rng)};
        if (std::abs(z.imag()) < 1e-3) continue;
        for (int nu = 0; nu < 5; ++nu) CHECK(point_location(F_Kstar(z, nu), K, 1e-9).inside_closed());
    }
}

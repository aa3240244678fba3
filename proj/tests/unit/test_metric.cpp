#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "icosa/errors.hpp"
#include "icosa/metric.hpp"

using namespace icosa;

namespace {

std::vector<SheetedPoint> random_points(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(-2.0, 3.0), uy(0.05, 2.0);
    std::uniform_int_distribution<int> us(0, 9), sign(0, 1);
    std::vector<SheetedPoint> out;
    for (int i = 0; i < n; ++i) out.push_back({{ux(rng), sign(rng) ? uy(rng) : -uy(rng)}, us(rng)});
    return out;
}

// delta(p0) sits near the incenter of T.
const SheetedPoint kStart{{0.55, 0.6}, 0};

} // namespace

TEST_CASE("flat metric gamma") {
    CHECK(gamma(1.0, 1.0) == 1.0);
    CHECK(gamma({0, 1}, {0, 1}) == 1.0);
    CHECK(gamma({1, 1}, {1, 1}) == 2.0);
    // Invariant under z -> eps z and z -> conj z.
    const Complex v{0.3, -1.2}, w{2.0, 0.7};
    CHECK(std::abs(gamma(epsilon() * v, epsilon() * w) - gamma(v, w)) < 1e-15);
    CHECK(gamma(std::conj(v), std::conj(w)) == gamma(v, w));
}

TEST_CASE("Gamma and the unit field X") {
    for (const auto& p : random_points(100, 1)) {
        const TangentVector x = X(p);
        CHECK(std::abs(x.d_xi) > 0.0);
        CHECK(std::abs(std::abs(x.d_xi) - std::abs(eta(p.xi, p.sheet)) / compute_k()) < 1e-14);
        CHECK(std::abs(Gamma(p, x, x) - 1.0) < 1e-8);
        const TangentVector x2{p, 2.0 * x.d_xi};
        CHECK(std::abs(Gamma(p, x2, x2) - 4.0 * Gamma(p, x, x)) < 1e-12);
        CHECK(x.tangency_residual() < 1e-10);
    }
    CHECK_THROWS_AS(X({0.0, 0}), SingularFiber);
}

TEST_CASE("delta is an isometry and straightens X") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> ua(0, 2 * kPi), ur(0.1, 3.0);
    for (const auto& p : random_points(100, 3)) {
        const TangentVector v{p, std::polar(ur(rng), ua(rng))};
        const double G = Gamma(p, v, v);
        const Complex dz = push_delta_star(v);
        CHECK(std::abs(G - gamma(dz, dz)) < 1e-8 * (1 + G));
        // T delta(X) = e^{i pi k/5} d/dz, which is d/dz on sheet 0.
        const Complex dx = push_delta(X(p));
        CHECK(std::abs(dx - std::polar(1.0, kPi * p.sheet / 5)) < 1e-8);
    }
    const Complex d0 = push_delta(X(kStart));
    CHECK(std::abs(d0 - 1.0) < 1e-8);
    // Closed form against a difference quotient of F_Q.
    for (const auto& p : random_points(10, 5)) {
        const TangentVector v{p, std::polar(1.0, 0.4)};
        CHECK(std::abs(push_delta(v) - push_delta_numeric(v)) < 1e-6);
    }
}

TEST_CASE("generators act by isometries") {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> ua(0, 2 * kPi);
    for (const auto& p : random_points(40, 7)) {
        const TangentVector v{p, std::polar(1.3, ua(rng))};
        for (SheetGenerator g : {SheetGenerator::R, SheetGenerator::U}) {
            const TangentVector w = push_generator(g, v);
            CHECK(std::abs(Gamma(w.base, w, w) - Gamma(p, v, v)) < 1e-10);
        }
    }
}

TEST_CASE("delta_star equivariance") {
    CHECK(sector_of_sheet(0) == 0);
    for (int k = 0; k < 10; ++k) {
        CHECK(sector_of_sheet(k + 2) == (sector_of_sheet(k) + 1) % 5);
        CHECK(sector_of_sheet((10 - k) % 10) == (5 - sector_of_sheet(k)) % 5);
    }
    for (const auto& p : random_points(30, 8)) {
        const SheetedPoint rp = apply_generator(SheetGenerator::R, p);
        const SheetedPoint up = apply_generator(SheetGenerator::U, p);
        CHECK(std::abs(delta_star(rp) - epsilon() * delta_star(p)) < 1e-8);
        CHECK(std::abs(delta_star(up) - std::conj(delta_star(p))) < 1e-8);
    }
    const TriangleT T = build_triangle();
    for (const auto& p : random_points(100, 9)) {
        if (p.xi.imag() > 0) CHECK(in_closed_triangle(delta(p), T));
        CHECK(point_location(delta_star(p), star()).inside_closed());
    }
}

TEST_CASE("flow of X") {
    CHECK(std::abs(flow_X(kStart, 0.0).xi - kStart.xi) == 0.0);
    const Complex z0 = delta(kStart);
    for (double t : {0.05, 0.1, 0.2}) CHECK(std::abs(delta(flow_X(kStart, t)) - z0 - t) < 1e-6);
    CHECK(std::abs(delta(flow_X(kStart, -0.1)) - z0 + 0.1) < 1e-6);

    // Complex-time reparametrisation: alpha X develops to z0 + t alpha.
    for (int j = 0; j < 8; ++j) {
        FlowOptions opt;
        opt.alpha = std::polar(1.0, kPi * j / 4);
        const auto path = flow_X_path(kStart, 0.15, opt);
        const std::size_t n = path.size() - 1;
        for (std::size_t i = 0; i <= n; i += n / 6) {
            const double s = 0.15 * static_cast<double>(i) / static_cast<double>(n);
            CHECK(std::abs(delta(path[i]) - z0 - s * opt.alpha) < 1e-6);
        }
        const Complex a = delta(path[0]), b = delta(path[n / 3]), c = delta(path[n]);
        CHECK(std::abs(((b - a) * std::conj((c - a) / std::abs(c - a))).imag()) < 1e-8);
    }

    // On sheet 3 the image moves along e^{3 i pi/5}.
    const SheetedPoint p3{kStart.xi, 3};
    CHECK(std::abs(delta(flow_X(p3, 0.1)) - delta(p3) - 0.1 * std::polar(1.0, 3 * kPi / 5)) < 1e-6);

    CHECK_THROWS_AS(flow_X(kStart, 5.0), LeftDomain);
    CHECK_THROWS_AS(flow_X({{0.3, -0.2}, 0}, 0.1), LeftDomain);
    CHECK_THROWS_AS(flow_X({0.0, 0}, 0.1), LeftDomain);
}

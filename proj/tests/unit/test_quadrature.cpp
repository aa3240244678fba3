#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "icosa/errors.hpp"
#include "icosa/quadrature.hpp"

using namespace icosa;
using C = std::complex<double>;

TEST_CASE("rule validation") {
    QuadratureRule r;
    CHECK_NOTHROW(r.validate());
    r.nodes_per_panel = 3;
    CHECK_THROWS_AS(r.validate(), InvalidArgument);
    r = {};
    r.target_abs_err = 0.0;
    CHECK_THROWS_AS(r.validate(), InvalidArgument);
    CHECK(parse_quadrature_kind("tanh-sinh") == QuadratureRule::Kind::TanhSinh);
    CHECK(to_string(QuadratureRule::Kind::GaussJacobiSplit) == "gauss-jacobi-split");
    CHECK_THROWS_AS(parse_quadrature_kind("simpson"), InvalidArgument);
}

TEST_CASE("Gauss-Jacobi nodes integrate the weight") {
    for (auto [alpha, beta] : {std::pair{-0.8, -0.3}, std::pair{-0.9, 0.0}, std::pair{0.0, 0.0}}) {
        const auto& g = gauss_jacobi(24, alpha, beta);
        double sum = 0;
        for (double w : g.w) sum += w;
        const double exact = std::pow(2.0, alpha + beta + 1) * std::tgamma(alpha + 1) * std::tgamma(beta + 1) /
                             std::tgamma(alpha + beta + 2);
        CHECK(std::abs(sum - exact) < 1e-13 * exact);
        for (std::size_t i = 1; i < g.x.size(); ++i) CHECK(g.x[i] > g.x[i - 1]);
        CHECK(g.x.front() > -1.0);
        CHECK(g.x.back() < 1.0);
    }
    // Legendre nodes integrate x^46 exactly.
    const auto& g = gauss_jacobi(24, 0.0, 0.0);
    double s = 0;
    for (std::size_t i = 0; i < g.x.size(); ++i) s += g.w[i] * std::pow(g.x[i], 46);
    CHECK(std::abs(s - 2.0 / 47.0) < 1e-14);
}

TEST_CASE("singular panels") {
    const QuadratureRule rule;
    // integral_0^1 x^{-1/2} (1 - x)^{-0.3} cos x dx, reference from tanh-sinh.
    auto h = [](C z, C from_p, C from_q) { return std::pow(from_p, -0.5) * std::pow(-from_q, -0.3) * std::cos(z); };
    const QuadEstimate j = jacobi_panel(h, 0.0, 1.0, -0.5, -0.3, rule, 1e-14);
    const AdaptiveResult t = tanh_sinh_panel(h, 0.0, 1.0, 1e-14);
    CHECK(t.ok);
    CHECK(std::abs(j.value - t.estimate.value) < 1e-12);

    auto root = [](C, C from_p, C) { return std::pow(from_p, -0.5); };
    CHECK(std::abs(jacobi_panel(root, 0.0, 1.0, -0.5, 0.0, rule, 1e-14).value - 2.0) < 1e-13);
    CHECK(std::abs(tanh_sinh_panel(root, 0.0, 1.0, 1e-14).estimate.value - 2.0) < 1e-12);

    // Complex panel: integral over [0, i] of z^{-0.8} dz = i^{0.2} / 0.2.
    auto cz = [](C, C from_p, C) { return std::pow(from_p, -0.8); };
    const C want = std::pow(C(0, 1), 0.2) / 0.2;
    CHECK(std::abs(jacobi_panel(cz, 0.0, C(0, 1), -0.8, 0.0, rule, 1e-14).value - want) < 1e-12);
}

TEST_CASE("Gauss-Kronrod on smooth panels") {
    auto ex = [](C z, C, C) { return std::exp(z); };
    const AdaptiveResult r = kronrod_panel(ex, 0.0, 1.0, 1e-14);
    CHECK(r.ok);
    CHECK(std::abs(r.estimate.value - (std::exp(1.0) - 1.0)) < 1e-14);
    CHECK(r.estimate.error < 1e-13);
    // Oscillatory integrand needs subdivision.
    auto osc = [](C z, C, C) { return std::cos(60.0 * z); };
    const AdaptiveResult o = kronrod_panel(osc, 0.0, 1.0, 1e-13);
    CHECK(o.ok);
    CHECK(std::abs(o.estimate.value - std::sin(60.0) / 60.0) < 1e-13);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "icosa/errors.hpp"
#include "icosa/tiling.hpp"

using namespace icosa;

namespace {

ZEps random_zeps(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> u(-4, 4);
    return {{u(rng), u(rng), u(rng), u(rng)}};
}

MotionGroupElement random_element(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> uj(0, 4), ul(0, 1);
    return {uj(rng), ul(rng), random_zeps(rng)};
}

} // namespace

TEST_CASE("exact arithmetic in Z[eps]") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 50; ++i) {
        const ZEps x = random_zeps(rng), y = random_zeps(rng);
        CHECK(std::abs((x + y).value() - (x.value() + y.value())) < 1e-12);
        CHECK(std::abs(x.times_eps().value() - epsilon() * x.value()) < 1e-12);
        CHECK(std::abs(x.conj().value() - std::conj(x.value())) < 1e-12);
        CHECK(x.conj().conj() == x);
        CHECK(x.rotated(5) == x);
    }
    CHECK(ZEps::eps_pow(4) + ZEps::eps_pow(3) + ZEps::eps_pow(2) + ZEps::eps_pow(1) + ZEps::one() == ZEps{});
    const auto v = star_vertices_exact();
    for (int i = 0; i < 10; ++i) CHECK(std::abs(v[i].value() - star().vertices[i]) < 1e-14);
}

TEST_CASE("apothem and translations") {
    CHECK(std::abs(apothem() - 0.5) < 1e-14);
    const double a = inner_radius(), b = outer_radius();
    CHECK(std::abs(a * b * std::sin(kPi / 5) / (2 * std::sin(kPi / 5)) - 0.5) < 1e-14);
    for (int k = 0; k < 5; ++k) {
        CHECK(std::abs(std::abs(two_u(k).value()) - 2 * apothem()) < 1e-14);
        // The mirror image of O in an edge line is -2u_j for some j.
        bool is_mirror = false;
        for (const auto& line : star().edge_lines) is_mirror = is_mirror || std::abs(-two_u(k).value() - line.normal) < 1e-14;
        CHECK(is_mirror);
    }
    CHECK(std::abs(tau(0).apply(Complex{0, 0}) - 1.0) < 1e-15);
    for (int k = 0; k < 5; ++k)
        for (int l = 0; l < 5; ++l) CHECK(multiply(tau(k), tau(l)) == multiply(tau(l), tau(k)));
}

TEST_CASE("tau commutes with rotations up to relabelling") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int k = 0; k < 5; ++k) {
        for (int l = 0; l < 5; ++l) {
            const auto lhs = multiply(tau((k + 2 * l) % 5), MotionGroupElement::rotation(l));
            const auto rhs = multiply(MotionGroupElement::rotation(l), tau(k));
            CHECK(lhs == rhs);
            for (int i = 0; i < 20; ++i) {
                const Complex z{u(rng), u(rng)};
                CHECK(std::abs(lhs.apply(z) - rhs.apply(z)) < 1e-12);
            }
        }
    }
    // R^j U (u_k) = u_{(k'(k) + 2j) mod 5}.
    for (int k = 0; k < 5; ++k)
        for (int j = 0; j < 5; ++j)
            CHECK(MotionGroupElement{j, 1, {}}.apply(two_u(k)) == two_u((k_prime(k) + 2 * j) % 5));
}

TEST_CASE("group law") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-2, 2);
    const auto e = MotionGroupElement::identity();
    for (int i = 0; i < 50; ++i) {
        const auto g1 = random_element(rng), g2 = random_element(rng);
        const Complex z{u(rng), u(rng)};
        CHECK(std::abs(multiply(g1, g2).apply(z) - g1.apply(g2.apply(z))) < 1e-12);
        CHECK(multiply(e, g1) == g1);
        CHECK(multiply(g1, e) == g1);
        CHECK(multiply(g1, inverse(g1)).is_identity());
        CHECK(multiply(inverse(g1), g1).is_identity());
        const int expect_j = ((g1.ell == 0 ? g1.j + g2.j : g1.j - g2.j) % 5 + 5) % 5;
        CHECK(multiply(g1, g2).j == expect_j);
    }
    for (int k = 0; k < 5; ++k) {
        const MotionGroupElement lin{3, 1, {}};
        CHECK(multiply(tau(k), lin) == MotionGroupElement{3, 1, two_u(k)});
    }
}

TEST_CASE("enumeration") {
    const auto g0 = enumerate_group(0, true);
    CHECK(g0.size() == 1);
    const auto g1 = enumerate_group(1, false);
    CHECK(g1.size() == 13);  // identity, R, R^-1, ten translations
    const auto g2 = enumerate_group(2, true);
    for (const auto& w : g2) CHECK(static_cast<int>(w.word.size()) >= w.length);
    CHECK_THROWS_AS(enumerate_group(11, true), InvalidArgument);
}

TEST_CASE("translation lattice") {
    const TranslationLattice L = translation_lattice();
    CHECK(L.rank == 4);
    CHECK(L.index == 1);
    std::mt19937_64 rng(4);
    for (int i = 0; i < 50; ++i) {
        const ZEps z = random_zeps(rng);
        std::array<std::int64_t, 5> n;
        REQUIRE(translation_coordinates(z, n));
        ZEps back;
        for (int k = 0; k < 5; ++k) back = back + two_u(k) * n[k];
        CHECK(back == z);
        CHECK(in_vplus(z));
    }
}

TEST_CASE("patches") {
    CHECK(generate_patch(0).centers == std::vector<ZEps>{ZEps{}});
    const TilingPatch p1 = generate_patch(1);
    for (int k = 0; k < 5; ++k) CHECK(std::find(p1.centers.begin(), p1.centers.end(), two_u(k)) != p1.centers.end());
    CHECK_THROWS_AS(generate_patch(7), InvalidArgument);
    CHECK_THROWS_AS(generate_patch(-1), InvalidArgument);

    const TilingPatch p3 = generate_patch(3);
    const CheckReport cov = coverage_check(p3, 500, 0.9, 12345);
    CHECK(cov.all_pass());
    // Every copy is congruent to K: recentred vertices match K's.
    for (const auto& c : p3.centers) {
        for (const ZEps& v : star_vertices_exact()) CHECK(in_vplus(c + v));
    }
}

TEST_CASE("invariance and freeness") {
    const TilingPatch p = generate_patch(3);
    TilingCheckOptions opt;
    opt.word_length = 6;
    const CheckReport r = invariance_freeness_checks(p, opt);
    auto item = [&](const std::string& n) {
        return *std::find_if(r.items.begin(), r.items.end(), [&](const CheckItem& c) { return c.name == n; });
    };
    CHECK(item("vplus_invariance").pass);
    CHECK(item("freeness").pass);
    CHECK(item("transitivity").pass);
    // The translations are dense, so orbits are not separated.
    CHECK_FALSE(item("properness_separation").pass);
    CHECK_FALSE(item("fixed_points_off_vplus").pass);
}

TEST_CASE("carriers into K") {
    const auto group = enumerate_group(4, false);
    // z = 1.2 + 0.1i lies in the copy centred at 1, so tau_0^{-1} carries it.
    const auto c = carriers({1.2, 0.1}, group, false);
    const bool has_T0 = std::any_of(c.begin(), c.end(), [](const WordElement& w) { return w.word == "T0"; });
    CHECK(has_T0);
    // Points of int K have more carriers than the identity: every rotation fixes K.
    const auto inner = carriers({0.1, 0.05}, group, true);
    CHECK(inner.size() >= 5);
    const TilingPatch p = generate_patch(3);
    TilingCheckOptions opt;
    opt.word_length = 4;
    opt.samples = 20;
    const CheckReport fd = fundamental_domain_check(p, opt);
    CHECK(fd.items[0].pass);       // existence
    CHECK_FALSE(fd.items[1].pass); // uniqueness
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "icosa/covering.hpp"
#include "icosa/errors.hpp"
#include "icosa/quotient.hpp"

using namespace icosa;

TEST_CASE("reflections T_m") {
    const auto refl = build_reflections();
    REQUIRE(refl.size() == 5);
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-2, 2);
    for (const auto& r : refl) {
        for (int i = 0; i < 10; ++i) {
            const Complex z{u(rng), u(rng)};
            CHECK(std::abs(r.map(r.map(z)) - z) < 1e-14);
            const Complex on_ray = r.fixed_dir * (r.fixed_length * i / 9.0);
            CHECK(std::abs(r.map(on_ray) - on_ray) < 1e-12);
        }
        // T_m maps the star onto itself.
        for (const Complex v : star().vertices) {
            double best = 1e9;
            for (const Complex w : star().vertices) best = std::min(best, std::abs(r.map(v) - w));
            CHECK(best < 1e-12);
        }
    }
    // T_1 = R^3 U.
    for (int i = 0; i < 20; ++i) {
        const Complex z{u(rng), u(rng)};
        CHECK(std::abs(refl[1].map(z) - epsilon_pow(3) * std::conj(z)) < 1e-12);
    }
    // The fixed ray of T_0 passes through the outer vertex D_0.
    CHECK(std::abs(refl[0].fixed_dir * refl[0].fixed_length - star().vertices[1]) < 1e-12);
}

TEST_CASE("edge pairing") {
    const EdgePairing p = edge_pairing();
    REQUIRE(p.pairs.size() == 5);
    const std::vector<std::pair<int, int>> want{{2, 9}, {1, 4}, {3, 6}, {5, 8}, {0, 7}};
    for (int i = 0; i < 5; ++i) {
        CHECK(p.pairs[i].label == 'a' + i);
        CHECK(std::pair{p.pairs[i].first, p.pairs[i].second} == want[i]);
        const int d = std::abs(p.pairs[i].first - p.pairs[i].second);
        CHECK(d != 1);
        CHECK(d != 9);  // not adjacent
        CHECK(star().line_of_edge(p.pairs[i].first) == star().line_of_edge(p.pairs[i].second));
    }
    for (int e = 0; e < 10; ++e) CHECK(p.partner[p.partner[e]] == e);
    // The rotation group has order 5, so its orbits on the pairs have size 1 or 5.
    CHECK(p.orbit_sizes() == std::vector<int>{5});
}

TEST_CASE("triangulation census") {
    const TriangulationCensus c = triangulate();
    CHECK(c.faces.size() == 10);
    CHECK(c.edges.size() == 20);
    CHECK(c.vertices.size() == 10);
    CHECK(c.face_orbits == 2);
    CHECK(c.vertex_orbits == 2);
    CHECK(c.vertex_orbit_sizes == std::vector<int>{5, 5});
    CHECK(c.oriented_edge_orbits == 8);
    REQUIRE(c.cone_angles.size() == 2);
    CHECK(c.cone_angles[0].total == PiFraction{7, 1});
    CHECK(c.cone_angles[1].total == PiFraction{1, 1});
    // No face is fixed by a nontrivial rotation.
    for (const auto& f : c.faces) {
        for (int j = 1; j < 5; ++j) {
            bool fixed = true;
            for (Complex p : f.points) {
                const Complex q = rotation_map(j)(p);
                fixed = fixed && std::any_of(f.points.begin(), f.points.end(), [&](Complex r) { return std::abs(q - r) < 1e-10; });
            }
            CHECK_FALSE(fixed);
        }
    }
}

TEST_CASE("Euler characteristic of the quotient") {
    // The census the genus formula expects (2/2/8/2) is not what the rotation
    // orbits give: pairs form one orbit.
    CHECK_THROWS_AS(quotient_euler_genus(), CellCountMismatch);

    const QuotientComplex closed = quotient_complex(true);
    CHECK(closed.vertices == 3);
    CHECK(closed.edges == 3);
    CHECK(closed.faces == 2);
    CHECK(closed.chi() == 2);
    CHECK(closed.boundary_consistent);
    const QuotientComplex open = quotient_complex(false);
    CHECK(open.chi() == 1);
    CHECK(open.boundary_consistent);

    // The genus-4 count comes from lifting the sphere's triangulation.
    CHECK(lifted_triangulation(ramification_report()).euler == -6);
}

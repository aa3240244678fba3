#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "icosa/geometry.hpp"

namespace icosa {

// Exact element c0 + c1 eps + c2 eps^2 + c3 eps^3 of Z[eps], eps = e^{2 pi i/5}.
struct ZEps {
    std::array<std::int64_t, 4> c{0, 0, 0, 0};

    static ZEps one() { return {{1, 0, 0, 0}}; }
    static ZEps eps_pow(int k);

    ZEps operator+(const ZEps& o) const;
    ZEps operator-(const ZEps& o) const;
    ZEps operator-() const;
    ZEps operator*(std::int64_t s) const;
    ZEps times_eps() const;
    ZEps rotated(int j) const;  // eps^j * z
    ZEps conj() const;
    bool operator==(const ZEps&) const = default;

    Complex value() const;
    std::string str() const;
};

struct ZEpsHash {
    std::size_t operator()(const ZEps& z) const;
};

// Distance from O to the edge lines of K; every line must agree to 1e-12.
double apothem(const StarPolygon& K = star());

// 2 u_k = eps^{3k} (so |2 u_k| = 2 * apothem = 1).
ZEps two_u(int k);

// U(u_k) = u_{k'(k)} with k' = -k mod 5.
int k_prime(int k);

// z -> R^j U^l (z) + t with t in Z[eps].
struct MotionGroupElement {
    int j = 0;
    int ell = 0;
    ZEps t;

    static MotionGroupElement identity() { return {}; }
    static MotionGroupElement rotation(int j) { return {((j % 5) + 5) % 5, 0, {}}; }
    static MotionGroupElement flip() { return {0, 1, {}}; }
    static MotionGroupElement translation(const ZEps& t) { return {0, 0, t}; }

    Complex apply(Complex z) const;
    ZEps apply(const ZEps& z) const;
    Complex translation_value() const { return t.value(); }
    bool is_identity() const { return j == 0 && ell == 0 && t == ZEps{}; }
    bool operator==(const MotionGroupElement&) const = default;
};

// Translation by 2 u_k.
MotionGroupElement tau(int k);

// Composition g1 after g2.
MotionGroupElement multiply(const MotionGroupElement& g1, const MotionGroupElement& g2);
MotionGroupElement inverse(const MotionGroupElement& g);

struct WordElement {
    MotionGroupElement g;
    int length = 0;
    std::string word;  // generators applied right to left: "r", "R" (inverse), "U", "t0".."t4", "T0".."T4" (inverses)
};

// Distinct elements reachable by words of length <= max_length in
// R^{+-1}, tau_k^{+-1} and, if with_flip, U. Breadth-first, so each element
// carries a shortest word.
std::vector<WordElement> enumerate_group(int max_length, bool with_flip);

// Integer lattice spanned by 2 u_0..2 u_4 inside Z[eps]: rank and index.
struct TranslationLattice {
    int rank = 0;
    std::int64_t index = 0;  // [Z[eps] : T], 0 if rank < 4
};
TranslationLattice translation_lattice();

// Integer coefficients n_k with sum n_k 2u_k = z (exists for every z when
// the index is 1). Returns false if z is not in the lattice.
bool translation_coordinates(const ZEps& z, std::array<std::int64_t, 5>& n);

// Exact vertices of K (index as in StarPolygon) and its center.
std::array<ZEps, 10> star_vertices_exact();

// Membership in V+ = T + (V u {O}).
bool in_vplus(const ZEps& z);

struct TilingPatch {
    int depth = 0;
    std::vector<ZEps> centers;  // sum n_k 2u_k, sum |n_k| <= depth
    std::vector<ZEps> vpoints;  // centers + (V u {O})
};

// Throws InvalidArgument unless 0 <= depth <= 6.
TilingPatch generate_patch(int depth);

// Covered by at least one closed star copy of the patch.
bool covered_by_patch(Complex z, const TilingPatch& patch, double tol = kTolGeo);

struct CheckItem {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    std::string witness;  // counterexample or supporting detail
};

struct CheckReport {
    std::vector<CheckItem> items;
    bool all_pass() const;
};

struct TilingCheckOptions {
    int samples = 200;
    int elements = 40;
    int word_length = 8;
    std::uint64_t seed = 12345;
};

CheckReport coverage_check(const TilingPatch& patch, int samples, double radius, std::uint64_t seed);

// Invariance of V+, freeness on sampled points, transitivity between star
// copies, and properness tested as a separation bound on orbits.
CheckReport invariance_freeness_checks(const TilingPatch& patch, const TilingCheckOptions& opt = {});

// For sampled z, searches rotations and translations (word length <= L) for
// carriers of z into K minus O and asks for exactly one carrier into the open
// interior.
CheckReport fundamental_domain_check(const TilingPatch& patch, const TilingCheckOptions& opt = {});

// All elements g within word length L with g(z) in the closed star minus O.
std::vector<WordElement> carriers(Complex z, const std::vector<WordElement>& group, bool interior_only,
                                  double tol = kTolGeo);

} // namespace icosa

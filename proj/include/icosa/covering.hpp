#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "icosa/conformal.hpp"

namespace icosa {

enum class BranchPoint { Zero, A, B, Infinity };

std::string to_string(BranchPoint p);
BranchPoint parse_branch_point(const std::string& name);  // "0", "a", "b", "inf"

struct SheetPermutation {
    std::array<int, 10> images{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};

    static SheetPermutation shift(int s);

    int operator()(int k) const { return images[((k % 10) + 10) % 10]; }
    bool is_identity() const;
    bool is_bijective() const;
    // Apply `first`, then *this.
    SheetPermutation after(const SheetPermutation& first) const;
    SheetPermutation inverse() const;
    std::vector<int> cycle_type() const;  // sorted, descending
    // s if this is k -> k + s for every k.
    std::optional<int> as_shift() const;

    bool operator==(const SheetPermutation&) const = default;
};

// Fixed basepoint of every monodromy loop.
Complex monodromy_basepoint();

// Distance from the point to the nearest other singular point. For infinity
// this is measured in the coordinate w = 1/xi, where it equals 1/b.
double singular_gap(BranchPoint p);

struct MonodromyOptions {
    int circle_steps = 256;
    double reject_fraction = 0.1;  // of the inter-sheet gap
};

// Sheet permutation from continuing eta once counterclockwise around the
// point on a circle of the given radius (in the w = 1/xi chart for
// infinity). Throws ContinuationAmbiguity if a step cannot be matched to a
// sheet decisively, InvalidArgument if the circle would enclose a second
// singular point.
SheetPermutation monodromy(BranchPoint p, double radius, const MonodromyOptions& opt = {});

struct BranchPointReport {
    BranchPoint point;
    int local_degree = 1;
    std::vector<int> cycle_type;
    int ramification_index = 0;
    SheetPermutation permutation;
};

BranchPointReport make_report(BranchPoint p, const SheetPermutation& perm);

// Reports for 0, a, b, infinity at radius `fraction` * singular_gap.
std::vector<BranchPointReport> ramification_report(double fraction = 0.1);

int total_ramification(const std::vector<BranchPointReport>& reports);

// g from r = 2 * sheets + 2g - 2. Throws NonIntegralGenus when r - 18 is odd
// or negative (for 10 sheets).
int genus_from_ramification(int r, int sheets = 10);
int genus_riemann_hurwitz();

// Lift of the two-triangle decomposition of the sphere (vertices 0, a, b)
// through the cover: V = number of cycles over 0, a, b; E = 3 * 10; F = 2 * 10.
struct LiftedCellCount {
    int vertices = 0, edges = 0, faces = 0, euler = 0, genus = 0;
};
LiftedCellCount lifted_triangulation(const std::vector<BranchPointReport>& reports);

// Generators of the sheet group: R (xi, eta) -> (xi, eps eta) and
// U (xi, eta) -> (conj xi, conj eta).
enum class SheetGenerator { R, U };

SheetedPoint apply_generator(SheetGenerator g, const SheetedPoint& p);
// Word applied right to left, as composition: "RU" means U first, then R.
SheetedPoint sheet_action(const std::string& word, const SheetedPoint& p);

// True iff the generated group acts transitively on the 10 sheets.
bool connectivity_check(const std::vector<SheetPermutation>& generators);
bool connectivity_check();

} // namespace icosa

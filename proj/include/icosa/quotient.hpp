#pragma once

#include <array>
#include <string>
#include <vector>

#include "icosa/geometry.hpp"

namespace icosa {

// T_m = R^{2m+1} U as z -> eps^{2m+1} conj(z). Its mirror is the line at
// angle pi (2m+1)/5 through O; it fixes the ray from O to the outer vertex
// at that angle and preserves the edge line with the same normal.
struct Reflection {
    int m = 0;
    PlaneIsometry map;
    Complex fixed_dir;       // unit direction of the fixed ray
    double fixed_length = 0; // the ray is {t * fixed_dir : 0 <= t <= fixed_length}
};

std::vector<Reflection> build_reflections();

// Reflection m and the rotation R^j as plane maps.
PlaneIsometry reflection_map(int m);
PlaneIsometry rotation_map(int j);

struct EdgePair {
    char label = '?';
    int first = -1, second = -1;  // edge indices, first < second
    int reflection = -1;          // m with T_m(first) = second
};

struct EdgePairing {
    std::vector<EdgePair> pairs;     // ordered by label
    std::array<int, 10> partner{};   // partner edge of each boundary edge
    std::array<int, 10> via{};       // reflection index pairing the edge with its partner
    std::vector<std::vector<int>> orbits;  // rotation orbits on pairs (indices into pairs)

    std::vector<int> orbit_sizes() const;
};

// Throws PairingFailure if some edge has no partner among the boundary edges.
EdgePairing edge_pairing(const StarPolygon& K = star());

struct Cell {
    std::string label;
    std::vector<Complex> points;  // vertex positions, in order
    int orbit = -1;
};

struct ConeAngle {
    std::string vertex_orbit;
    PiFraction total;  // sum of the corner angles of K over the orbit
};

struct TriangulationCensus {
    std::vector<Cell> faces, edges, vertices;
    EdgePairing pairing;
    int face_orbits = 0;
    int vertex_orbits = 0;
    int pair_orbits = 0;
    int oriented_edge_orbits = 0;  // both orientations of each open edge
    std::vector<int> vertex_orbit_sizes;
    std::vector<ConeAngle> cone_angles;
};

// Rotation-invariant triangulation of K minus O with literal orbit counts.
TriangulationCensus triangulate(const StarPolygon& K = star());

struct EulerResult {
    int chi = 0;
    int genus = 0;
};

// The census formula faces - (pair orbits + oriented edge orbits) + vertices
// over orbits. Throws CellCountMismatch unless the computed orbit counts are
// 2 faces, 2 pair orbits, 8 oriented edge orbits and 2 vertices.
EulerResult quotient_euler_genus(const StarPolygon& K = star());

// Cell complex of K modulo rotations and the edge pairing, built by
// union-find over cells of the triangulation.
struct QuotientComplex {
    bool with_center = true;
    int vertices = 0, edges = 0, faces = 0;
    int chi() const { return vertices - edges + faces; }
    bool boundary_consistent = false;
};

QuotientComplex quotient_complex(bool with_center, const StarPolygon& K = star());

} // namespace icosa

#pragma once

#include <array>
#include <complex>
#include <numbers>
#include <vector>

namespace icosa {

using Complex = std::complex<double>;
// A point of the plane. Every stored geometry point is finite.
using ComplexPoint = Complex;

inline constexpr double kPi = std::numbers::pi;

// Default absolute tolerance for point classification.
inline constexpr double kTolGeo = 1e-9;

// The two radii of the star, a = 2 cos(2 pi/5) and b = 2 cos(pi/5).
double inner_radius();
double outer_radius();

// e^{2 pi i / 5}, the rotation R.
Complex epsilon();
// epsilon()^n for any integer n (reduced mod 5 before evaluating).
Complex epsilon_pow(int n);

// An angle stored as an exact multiple of pi.
struct PiFraction {
    int num = 0;
    int den = 1;

    double radians() const { return kPi * num / den; }
    friend bool operator==(const PiFraction& l, const PiFraction& r) {
        return static_cast<long>(l.num) * r.den == static_cast<long>(r.num) * l.den;
    }
};

PiFraction operator+(PiFraction l, PiFraction r);

// Homogeneous coordinates [z0 : z1] on CP^1.
class ProjectivePoint {
public:
    ProjectivePoint(Complex z0, Complex z1);

    Complex z0() const { return z0_; }
    Complex z1() const { return z1_; }

    // z0*w1 == z1*w0 up to a relative tolerance.
    bool equivalent(const ProjectivePoint& other, double tol = 1e-12) const;

private:
    Complex z0_;
    Complex z1_;
};

// The twelve vertex images [0:1], [1:0], [eps^nu (eps + eps^4) : 1],
// [eps^nu (eps^2 + eps^3) : 1].
std::vector<ProjectivePoint> icosahedron_vertices();

// [z:1] -> z. Throws PoleError at the north pole [1:0].
ComplexPoint stereographic_project(const ProjectivePoint& p);

struct TriangleT {
    ComplexPoint O, A, B;
    double a = 0, b = 0, c = 0;          // |OA|, |OB|, |AB|
    PiFraction alpha, beta, gamma;         // angles at B, A, O
};

TriangleT build_triangle();

struct Segment {
    ComplexPoint p, q;

    ComplexPoint at(double t) const { return p + (q - p) * t; }
    double length() const { return std::abs(q - p); }
};

enum class VertexClass { Inner, Outer };

// {z : Re(z conj(normal)) = offset}, normal of unit length.
struct EdgeLine {
    Complex normal;
    double offset = 0;
    std::array<int, 2> edges{};

    double signed_distance(ComplexPoint z) const {
        return (z * std::conj(normal)).real() - offset;
    }
};

// The stellated 5-gon. Vertex 2nu is inner (eps^nu a), vertex 2nu+1 is
// outer (b e^{i pi (2nu+1)/5}); edge i runs from vertex i to vertex i+1, so
// the boundary is traversed counterclockwise.
struct StarPolygon {
    ComplexPoint center{0.0, 0.0};
    std::array<ComplexPoint, 10> vertices{};
    std::array<Segment, 10> edges{};
    std::array<EdgeLine, 5> edge_lines{};

    static VertexClass vertex_class(int vertex) {
        return vertex % 2 == 0 ? VertexClass::Inner : VertexClass::Outer;
    }
    // Index of the line that carries `edge`.
    int line_of_edge(int edge) const;
};

StarPolygon build_star();

// The shared star instance (built once, immutable).
const StarPolygon& star();

struct Location {
    enum class Kind { Interior, OnEdge, AtVertex, Exterior, AtCenter };
    Kind kind = Kind::Exterior;
    int id = -1;          // edge or vertex index
    double param = 0.0;   // position along the edge, in (0, 1)

    bool inside_closed() const { return kind != Kind::Exterior; }
};

Location point_location(ComplexPoint z, const StarPolygon& K, double tol = kTolGeo);

// Location relative to the closed triangle T (O, A, B).
bool in_closed_triangle(ComplexPoint z, const TriangleT& T, double tol = kTolGeo);

// z -> rot * (flip ? conj(z) : z) + shift, |rot| = 1.
struct PlaneIsometry {
    Complex rot{1.0, 0.0};
    bool flip = false;
    Complex shift{0.0, 0.0};

    ComplexPoint operator()(ComplexPoint z) const { return rot * (flip ? std::conj(z) : z) + shift; }
    Complex linear(Complex v) const { return rot * (flip ? std::conj(v) : v); }

    static PlaneIsometry identity() { return {}; }
    static PlaneIsometry rotation(Complex r) { return {r, false, {}}; }
    static PlaneIsometry translation(Complex t) { return {{1.0, 0.0}, false, t}; }
    // Mirror in the line through `point` with unit direction `dir`.
    static PlaneIsometry reflection(ComplexPoint point, Complex dir);

    PlaneIsometry inverse() const;
    // (*this) after `inner`.
    PlaneIsometry compose(const PlaneIsometry& inner) const;
};

// Sum of the three angle-at-A' checks used to show the edges line up.
struct CollinearityReport {
    double first_sum = 0;   // angle C A' O + O A' C' + C' A' B'
    double second_sum = 0;  // angle C' A' O + O A' C + C A' B
    double max_line_residual = 0;    // worst distance of an edge endpoint to its line
    int lines_with_two_edges = 0;
};

CollinearityReport star_collinearity(const StarPolygon& K);

// Angle at vertex p between rays p->q and p->r, in [0, pi].
double angle_at(ComplexPoint p, ComplexPoint q, ComplexPoint r);

} // namespace icosa

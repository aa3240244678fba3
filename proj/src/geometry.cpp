#include "icosa/geometry.hpp"

#include <cmath>
#include <numeric>

#include "icosa/errors.hpp"

namespace icosa {

double inner_radius() { return 2.0 * std::cos(2.0 * kPi / 5.0); }
double outer_radius() { return 2.0 * std::cos(kPi / 5.0); }

Complex epsilon() { return std::polar(1.0, 2.0 * kPi / 5.0); }

Complex epsilon_pow(int n) {
    int m = ((n % 5) + 5) % 5;
    return std::polar(1.0, 2.0 * kPi * m / 5.0);
}

PiFraction operator+(PiFraction l, PiFraction r) {
    int num = l.num * r.den + r.num * l.den;
    int den = l.den * r.den;
    int g = std::gcd(num, den);
    if (g == 0) g = 1;
    return {num / g, den / g};
}

ProjectivePoint::ProjectivePoint(Complex z0, Complex z1) : z0_(z0), z1_(z1) {
    if (z0 == Complex{} && z1 == Complex{}) throw InvalidArgument("[0:0] is not a projective point");
}

bool ProjectivePoint::equivalent(const ProjectivePoint& other, double tol) const {
    Complex lhs = z0_ * other.z1_;
    Complex rhs = z1_ * other.z0_;
    double scale = std::max({std::abs(z0_), std::abs(z1_)}) * std::max({std::abs(other.z0_), std::abs(other.z1_)});
    return std::abs(lhs - rhs) <= tol * scale;
}

std::vector<ProjectivePoint> icosahedron_vertices() {
    std::vector<ProjectivePoint> out;
    out.reserve(12);
    out.emplace_back(Complex{0.0, 0.0}, Complex{1.0, 0.0});
    out.emplace_back(Complex{1.0, 0.0}, Complex{0.0, 0.0});
    Complex e = epsilon();
    Complex first = e + std::pow(e, 4);
    Complex second = std::pow(e, 2) + std::pow(e, 3);
    for (int nu = 0; nu < 5; ++nu) out.emplace_back(epsilon_pow(nu) * first, Complex{1.0, 0.0});
    for (int nu = 0; nu < 5; ++nu) out.emplace_back(epsilon_pow(nu) * second, Complex{1.0, 0.0});
    return out;
}

ComplexPoint stereographic_project(const ProjectivePoint& p) {
    if (std::abs(p.z1()) <= 1e-300 * std::abs(p.z0())) throw PoleError("[1:0] has no finite image");
    return p.z0() / p.z1();
}

TriangleT build_triangle() {
    TriangleT T;
    T.a = inner_radius();
    T.b = outer_radius();
    T.c = 2.0 * std::sin(kPi / 5.0);
    T.O = {0.0, 0.0};
    T.A = {T.a, 0.0};
    T.B = std::polar(T.b, kPi / 5.0);
    T.alpha = {1, 10};
    T.beta = {7, 10};
    T.gamma = {1, 5};
    return T;
}

int StarPolygon::line_of_edge(int edge) const {
    for (int k = 0; k < 5; ++k)
        if (edge_lines[k].edges[0] == edge || edge_lines[k].edges[1] == edge) return k;
    return -1;
}

StarPolygon build_star() {
    StarPolygon K;
    const double a = inner_radius();
    const double b = outer_radius();
    for (int nu = 0; nu < 5; ++nu) {
        K.vertices[2 * nu] = epsilon_pow(nu) * a;
        K.vertices[2 * nu + 1] = std::polar(b, kPi * (2 * nu + 1) / 5.0);
    }
    for (int i = 0; i < 10; ++i) K.edges[i] = {K.vertices[i], K.vertices[(i + 1) % 10]};

    // The outward normal of edge i is its direction turned by -90 degrees
    // (interior on the left). Collinear edges share normal and offset.
    int nlines = 0;
    for (int i = 0; i < 10; ++i) {
        Complex d = K.edges[i].q - K.edges[i].p;
        Complex n = d / std::abs(d) * Complex{0.0, -1.0};
        double off = (K.edges[i].p * std::conj(n)).real();
        bool placed = false;
        for (int k = 0; k < nlines; ++k) {
            if (std::abs(K.edge_lines[k].normal - n) < 1e-9 && std::abs(K.edge_lines[k].offset - off) < 1e-9) {
                K.edge_lines[k].edges[1] = i;
                placed = true;
                break;
            }
        }
        if (!placed) {
            if (nlines == 5) throw Error("star construction produced more than 5 edge lines");
            K.edge_lines[nlines] = {n, off, {i, -1}};
            ++nlines;
        }
    }
    // Order lines by the angle of their normal: line k has normal e^{i pi (2k+1)/5}.
    std::array<EdgeLine, 5> ordered{};
    for (const auto& line : K.edge_lines) {
        double ang = std::arg(line.normal);
        if (ang < 0) ang += 2 * kPi;
        int k = static_cast<int>(std::lround((ang * 5.0 / kPi - 1.0) / 2.0)) % 5;
        ordered[k] = line;
    }
    K.edge_lines = ordered;
    return K;
}

const StarPolygon& star() {
    static const StarPolygon K = build_star();
    return K;
}

namespace {

double cross(Complex u, Complex v) { return u.real() * v.imag() - u.imag() * v.real(); }

bool crossing_inside(ComplexPoint z, const StarPolygon& K) {
    bool inside = false;
    for (const auto& e : K.edges) {
        const Complex p = e.p, q = e.q;
        if ((p.imag() > z.imag()) != (q.imag() > z.imag())) {
            double x = p.real() + (z.imag() - p.imag()) * (q.real() - p.real()) / (q.imag() - p.imag());
            if (x > z.real()) inside = !inside;
        }
    }
    return inside;
}

} // namespace

Location point_location(ComplexPoint z, const StarPolygon& K, double tol) {
    using Kind = Location::Kind;
    if (std::abs(z - K.center) <= tol) return {Kind::AtCenter, -1, 0.0};
    for (int v = 0; v < 10; ++v)
        if (std::abs(z - K.vertices[v]) <= tol) return {Kind::AtVertex, v, 0.0};
    for (int i = 0; i < 10; ++i) {
        const auto& e = K.edges[i];
        Complex d = e.q - e.p;
        double t = ((z - e.p) * std::conj(d)).real() / std::norm(d);
        if (t <= 0.0 || t >= 1.0) continue;
        if (std::abs(z - e.at(t)) <= tol) return {Kind::OnEdge, i, t};
    }
    return crossing_inside(z, K) ? Location{Kind::Interior, -1, 0.0} : Location{Kind::Exterior, -1, 0.0};
}

bool in_closed_triangle(ComplexPoint z, const TriangleT& T, double tol) {
    // T is counterclockwise O -> A -> B.
    const std::array<ComplexPoint, 3> v{T.O, T.A, T.B};
    for (int i = 0; i < 3; ++i) {
        Complex d = v[(i + 1) % 3] - v[i];
        if (cross(d, z - v[i]) / std::abs(d) < -tol) return false;
    }
    return true;
}

PlaneIsometry PlaneIsometry::reflection(ComplexPoint point, Complex dir) {
    // z -> point + u^2 conj(z - point), u = dir/|dir|.
    Complex u = dir / std::abs(dir);
    Complex r = u * u;
    return {r, true, point - r * std::conj(point)};
}

PlaneIsometry PlaneIsometry::inverse() const {
    // z = rot * T(w) + shift  =>  w = T^{-1}(conj-aware (z - shift) / rot)
    if (!flip) return {std::conj(rot), false, -std::conj(rot) * shift};
    // z = rot conj(w) + shift  =>  w = conj((z - shift)/rot) = rot conj(z) - rot conj(shift)
    return {rot, true, -rot * std::conj(shift)};
}

PlaneIsometry PlaneIsometry::compose(const PlaneIsometry& inner) const {
    // outer(inner(z)) = rot * F(inner_rot * G(z) + inner_shift) + shift
    PlaneIsometry out;
    if (!flip) {
        out.rot = rot * inner.rot;
        out.flip = inner.flip;
        out.shift = rot * inner.shift + shift;
    } else {
        out.rot = rot * std::conj(inner.rot);
        out.flip = !inner.flip;
        out.shift = rot * std::conj(inner.shift) + shift;
    }
    return out;
}

double angle_at(ComplexPoint p, ComplexPoint q, ComplexPoint r) {
    Complex u = q - p, v = r - p;
    return std::abs(std::arg(v * std::conj(u)));
}

CollinearityReport star_collinearity(const StarPolygon& K) {
    const TriangleT T = build_triangle();
    const Complex e = epsilon();
    // A' is A reflected in OB, which equals R(A); B' = R(B).
    const ComplexPoint A = T.A, B = T.B;
    const ComplexPoint A1 = PlaneIsometry::reflection({0.0, 0.0}, B)(A);
    const ComplexPoint B1 = e * B;
    // C is the foot of A on OB (the angle OCA is a right angle); C' = R(C).
    const Complex u = B / std::abs(B);
    const ComplexPoint C = u * (A * std::conj(u)).real();
    const ComplexPoint C1 = e * C;
    const ComplexPoint O{0.0, 0.0};

    CollinearityReport rep;
    rep.first_sum = angle_at(A1, C, O) + angle_at(A1, O, C1) + angle_at(A1, C1, B1);
    rep.second_sum = angle_at(A1, C1, O) + angle_at(A1, O, C) + angle_at(A1, C, B);
    for (const auto& line : K.edge_lines) {
        int count = 0;
        for (int id : line.edges) {
            if (id < 0) continue;
            ++count;
            rep.max_line_residual = std::max({rep.max_line_residual, std::abs(line.signed_distance(K.edges[id].p)),
                                              std::abs(line.signed_distance(K.edges[id].q))});
        }
        if (count == 2) ++rep.lines_with_two_edges;
    }
    return rep;
}

} // namespace icosa

#include "icosa/billiards.hpp"

#include <algorithm>
#include <cmath>

#include "icosa/errors.hpp"
#include "icosa/quotient.hpp"

namespace icosa {

namespace {

double cross(Complex u, Complex v) { return u.real() * v.imag() - u.imag() * v.real(); }

double point_line_distance(ComplexPoint z, ComplexPoint p, Complex dir) {
    return std::abs(cross(dir / std::abs(dir), z - p));
}

double point_segment_distance(ComplexPoint z, ComplexPoint p, ComplexPoint q) {
    Complex d = q - p;
    if (std::norm(d) == 0.0) return std::abs(z - p);
    double t = std::clamp(((z - p) * std::conj(d)).real() / std::norm(d), 0.0, 1.0);
    return std::abs(z - (p + d * t));
}

} // namespace

Hit next_event(const BilliardState& s, const StarPolygon& K, int skip_edge, double tol) {
    Hit best;
    best.time = 1e300;
    bool found = false;
    for (int i = 0; i < 10; ++i) {
        if (i == skip_edge) continue;
        const Complex p = K.edges[i].p, d = K.edges[i].q - K.edges[i].p;
        const double denom = cross(s.dir, d);
        if (std::abs(denom) < 1e-14 * std::abs(d)) continue;
        const Complex w = p - s.pos;
        const double t = cross(w, d) / denom;
        const double u = cross(w, s.dir) / denom;
        if (t <= tol || u < -1e-12 || u > 1.0 + 1e-12) continue;
        if (t < best.time) {
            best = {Hit::Kind::Edge, i, s.pos + s.dir * t, t};
            found = true;
        }
    }
    if (!found) throw DegenerateRay("ray from (" + std::to_string(s.pos.real()) + ", " + std::to_string(s.pos.imag()) +
                                    ") meets no edge");
    for (int v = 0; v < 10; ++v) {
        if (std::abs(best.point - K.vertices[v]) <= tol) {
            best.kind = Hit::Kind::Vertex;
            best.id = v;
            best.point = K.vertices[v];
            best.time = std::abs(K.vertices[v] - s.pos);
            break;
        }
    }
    return best;
}

Complex reflect_dir(Complex dir, int edge, const StarPolygon& K) {
    Complex u = K.edges[edge].q - K.edges[edge].p;
    u /= std::abs(u);
    return std::conj(dir * std::conj(u)) * u;
}

namespace {

struct StartRule {
    bool to_vertex = false;  // run straight to `vertex`
    int vertex = -1;
    int skip_edge = -1;
};

StartRule classify_start(ComplexPoint z0, Complex dir, const StarPolygon& K, double tol) {
    const Location loc = point_location(z0, K, tol);
    using Kind = Location::Kind;
    switch (loc.kind) {
    case Kind::Interior: return {};
    case Kind::Exterior: throw InvalidStart("start lies outside K");
    case Kind::AtCenter: throw InvalidStart("the center O is not part of the billiard table");
    case Kind::OnEdge: {
        const int e = loc.id;
        const Complex n = K.edge_lines[K.line_of_edge(e)].normal;
        const double c = (dir * std::conj(n)).real();
        if (c < -1e-12) return {false, -1, e};
        if (c > 1e-12) throw InvalidStart("direction points out of K");
        const Complex d = K.edges[e].q - K.edges[e].p;
        int v = (dir * std::conj(d)).real() > 0.0 ? (e + 1) % 10 : e;
        return {true, v, -1};
    }
    case Kind::AtVertex: {
        const Location probe = point_location(z0 + 1e-6 * dir, K, 1e-12);
        if (probe.kind == Kind::Interior) return {};
        if (probe.kind == Kind::OnEdge) {
            const int e = probe.id;
            int v = std::abs(K.vertices[e] - z0) <= tol ? (e + 1) % 10 : e;
            return {true, v, -1};
        }
        throw InvalidStart("direction at the vertex points out of K");
    }
    }
    return {};
}

} // namespace

Trajectory simulate(ComplexPoint z0, Complex dir, int max_events, const StarPolygon& K, double tol) {
    if (std::abs(std::abs(dir) - 1.0) > 1e-12) throw InvalidArgument("direction must be a unit vector");
    if (max_events < 0) throw InvalidArgument("max_events must be non-negative");
    Trajectory tr;
    BilliardState s{z0, dir, 0.0};
    int skip = -1;
    StartRule rule = classify_start(z0, dir, K, tol);
    int events = 0;
    if (rule.to_vertex && max_events > 0) {
        const ComplexPoint v = K.vertices[rule.vertex];
        const double len = std::abs(v - z0);
        tr.segments.push_back({z0, v, dir, 0.0, len});
        tr.events.push_back({TrajectoryEvent::Kind::Reverse, rule.vertex, v});
        s = {v, -dir, len};
        ++events;
    } else {
        skip = rule.skip_edge;
    }
    for (; events < max_events; ++events) {
        const Hit h = next_event(s, K, skip, tol);
        tr.segments.push_back({s.pos, h.point, s.dir, s.time, s.time + h.time});
        if (h.kind == Hit::Kind::Edge) {
            tr.events.push_back({TrajectoryEvent::Kind::Reflect, h.id, h.point});
            s = {h.point, reflect_dir(s.dir, h.id, K), s.time + h.time};
            s.dir /= std::abs(s.dir);
            skip = h.id;
        } else {
            tr.events.push_back({TrajectoryEvent::Kind::Reverse, h.id, h.point});
            s = {h.point, -s.dir, s.time + h.time};
            skip = -1;
        }
    }
    return tr;
}

PlaneIsometry DihedralElement::map() const {
    return {epsilon_pow(j), l % 2 == 1, {0.0, 0.0}};
}

DihedralElement DihedralElement::times(const DihedralElement& o) const {
    int jj = l % 2 == 0 ? j + o.j : j - o.j;
    return {((jj % 5) + 5) % 5, (l + o.l) % 2};
}

namespace {

TrajectorySegment map_segment(const PlaneIsometry& g, const TrajectorySegment& s) {
    return {g(s.start), g(s.end), g.linear(s.dir), s.t_start, s.t_end};
}

int match_edge(const StarPolygon& K, ComplexPoint p, ComplexPoint q) {
    for (int i = 0; i < 10; ++i) {
        const auto& e = K.edges[i];
        if ((std::abs(e.p - p) < 1e-9 && std::abs(e.q - q) < 1e-9) || (std::abs(e.p - q) < 1e-9 && std::abs(e.q - p) < 1e-9))
            return i;
    }
    return -1;
}

} // namespace

LiftedTrajectory lift_trajectory(const Trajectory& t, const StarPolygon& K, double tol) {
    for (const auto& s : t.segments)
        if (point_segment_distance(K.center, s.start, s.end) <= tol)
            throw CenterCrossing("segment passes through O");
    const EdgePairing pairing = edge_pairing(K);

    LiftedTrajectory out;
    out.base = t;
    DihedralElement M;
    PlaneIsometry dev = PlaneIsometry::identity();
    for (std::size_t i = 0; i < t.segments.size(); ++i) {
        const TrajectorySegment lifted = map_segment(M.map(), t.segments[i]);
        out.lifted.push_back(lifted);
        out.developed.push_back(map_segment(dev, lifted));
        if (i >= t.events.size()) break;

        const TrajectoryEvent& ev = t.events[i];
        LiftTag tag;
        tag.event = static_cast<int>(i);
        if (ev.kind == TrajectoryEvent::Kind::Reflect) {
            const int m = pairing.via[ev.id];
            tag.reflection = m;
            // The glued edge in lifted coordinates, and the gluing map across it:
            // psi = T' after the mirror in the edge line, with T' the pairing
            // reflection of that edge.
            const PlaneIsometry Mmap = M.map();
            const int e2 = match_edge(K, Mmap(K.edges[ev.id].p), Mmap(K.edges[ev.id].q));
            if (e2 < 0) throw PairingFailure("lifted edge is not an edge of K");
            const PlaneIsometry mirror = PlaneIsometry::reflection(K.edges[e2].p, K.edges[e2].q - K.edges[e2].p);
            const PlaneIsometry Tp = reflection_map(pairing.via[e2]);
            const PlaneIsometry psi_inv = mirror.compose(Tp);
            dev = dev.compose(psi_inv);
            M = M.times({(2 * m + 1) % 5, 1});
        }
        tag.accumulated = M;
        tag.sector = M.j;
        out.tags.push_back(tag);
    }

    if (!out.developed.empty()) {
        const auto& d0 = out.developed.front();
        for (std::size_t i = 0; i < out.developed.size(); ++i) {
            const auto& d = out.developed[i];
            out.straightness = std::max({out.straightness, point_line_distance(d.start, d0.start, d0.dir),
                                         point_line_distance(d.end, d0.start, d0.dir)});
            if (i > 0) out.continuity = std::max(out.continuity, std::abs(d.start - out.developed[i - 1].end));
        }
    }
    return out;
}

double rotation_equivariance(ComplexPoint z0, Complex dir, int j, int max_events, const StarPolygon& K) {
    const Complex r = epsilon_pow(j);
    const Trajectory a = simulate(r * z0, r * dir, max_events, K);
    const Trajectory b = simulate(z0, dir, max_events, K);
    if (a.segments.size() != b.segments.size()) return 1e300;
    double worst = 0.0;
    for (std::size_t i = 0; i < a.segments.size(); ++i) {
        worst = std::max({worst, std::abs(a.segments[i].start - r * b.segments[i].start),
                          std::abs(a.segments[i].end - r * b.segments[i].end)});
    }
    for (std::size_t i = 0; i < a.events.size(); ++i)
        if (a.events[i].kind != b.events[i].kind) return 1e300;
    return worst;
}

} // namespace icosa

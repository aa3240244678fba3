#include "icosa/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

#include "icosa/errors.hpp"

namespace icosa {

namespace {

constexpr double kMatchTol = 1e-10;

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int x, int y) { parent[find(x)] = find(y); }
    int classes() {
        int c = 0;
        for (int i = 0; i < static_cast<int>(parent.size()); ++i)
            if (find(i) == i) ++c;
        return c;
    }
};

bool same_points(const std::vector<Complex>& u, const std::vector<Complex>& v, bool ordered) {
    if (u.size() != v.size()) return false;
    if (ordered) {
        for (std::size_t i = 0; i < u.size(); ++i)
            if (std::abs(u[i] - v[i]) > kMatchTol) return false;
        return true;
    }
    for (Complex p : u) {
        bool found = std::any_of(v.begin(), v.end(), [&](Complex q) { return std::abs(p - q) <= kMatchTol; });
        if (!found) return false;
    }
    return true;
}

int find_cell(const std::vector<Cell>& cells, const std::vector<Complex>& pts, bool ordered) {
    for (int i = 0; i < static_cast<int>(cells.size()); ++i)
        if (same_points(cells[i].points, pts, ordered)) return i;
    return -1;
}

std::vector<Complex> mapped(const PlaneIsometry& g, const std::vector<Complex>& pts) {
    std::vector<Complex> out;
    out.reserve(pts.size());
    for (Complex p : pts) out.push_back(g(p));
    return out;
}

// Orbits of the rotation group on `cells`; writes the orbit index into each
// cell and returns the number of orbits.
int rotation_orbits(std::vector<Cell>& cells, bool ordered) {
    UnionFind uf(static_cast<int>(cells.size()));
    for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
        for (int j = 1; j < 5; ++j) {
            int t = find_cell(cells, mapped(rotation_map(j), cells[i].points), ordered);
            if (t < 0) throw Error("rotation does not map the triangulation to itself");
            uf.unite(i, t);
        }
    }
    std::map<int, int> ids;
    for (auto& c : cells) {
        int root = uf.find(static_cast<int>(&c - cells.data()));
        auto it = ids.try_emplace(root, static_cast<int>(ids.size())).first;
        c.orbit = it->second;
    }
    return static_cast<int>(ids.size());
}

std::string vertex_label(int v) {
    int j = v / 2;
    return (v % 2 == 0 ? "C" : "D") + (j == 0 ? std::string() : std::to_string(j));
}

PiFraction corner_angle(const StarPolygon& K, int v) {
    const Complex prev = K.vertices[(v + 9) % 10], here = K.vertices[v], next = K.vertices[(v + 1) % 10];
    // Interior lies to the left of the counterclockwise boundary, so the
    // interior angle is the turn from (next - here) to (prev - here).
    double ang = std::arg((prev - here) / (next - here));
    if (ang < 0) ang += 2 * kPi;
    int tenths = static_cast<int>(std::lround(ang * 10.0 / kPi));
    int g = std::gcd(tenths, 10);
    return {tenths / g, 10 / g};
}

} // namespace

PlaneIsometry reflection_map(int m) { return {epsilon_pow(2 * m + 1), true, {0.0, 0.0}}; }

PlaneIsometry rotation_map(int j) { return PlaneIsometry::rotation(epsilon_pow(j)); }

std::vector<Reflection> build_reflections() {
    std::vector<Reflection> out;
    for (int m = 0; m < 5; ++m) out.push_back({m, reflection_map(m), std::polar(1.0, kPi * (2 * m + 1) / 5.0), outer_radius()});
    return out;
}

std::vector<int> EdgePairing::orbit_sizes() const {
    std::vector<int> s;
    for (const auto& o : orbits) s.push_back(static_cast<int>(o.size()));
    std::sort(s.rbegin(), s.rend());
    return s;
}

// The partner of an edge is the other edge on its supporting line; the
// reflection that swaps them is the T_m preserving that line.
EdgePairing edge_pairing(const StarPolygon& K) {
    EdgePairing out;
    std::vector<Cell> edges;
    for (int i = 0; i < 10; ++i) edges.push_back({"", {K.edges[i].p, K.edges[i].q}});
    out.partner.fill(-1);
    out.via.fill(-1);
    for (int i = 0; i < 10; ++i) {
        for (int m = 0; m < 5; ++m) {
            int t = find_cell(edges, mapped(reflection_map(m), edges[i].points), false);
            if (t >= 0 && t != i && K.line_of_edge(t) == K.line_of_edge(i)) {
                out.partner[i] = t;
                out.via[i] = m;
                break;
            }
        }
        if (out.partner[i] < 0) throw PairingFailure("edge " + std::to_string(i) + " has no partner");
    }
    for (int i = 0; i < 10; ++i) {
        if (out.partner[i] < i) continue;
        int line = K.line_of_edge(i);
        out.pairs.push_back({static_cast<char>('a' + line), i, out.partner[i], out.via[i]});
    }
    std::sort(out.pairs.begin(), out.pairs.end(), [](const EdgePair& x, const EdgePair& y) { return x.label < y.label; });

    // g . [E, T E] = [gE, g T g^-1 (gE)], i.e. the pair of image edges.
    const int n = static_cast<int>(out.pairs.size());
    UnionFind uf(n);
    for (int p = 0; p < n; ++p) {
        for (int j = 1; j < 5; ++j) {
            auto e1 = mapped(rotation_map(j), edges[out.pairs[p].first].points);
            auto e2 = mapped(rotation_map(j), edges[out.pairs[p].second].points);
            int i1 = find_cell(edges, e1, false), i2 = find_cell(edges, e2, false);
            for (int q = 0; q < n; ++q) {
                bool hit = (out.pairs[q].first == i1 && out.pairs[q].second == i2) ||
                           (out.pairs[q].first == i2 && out.pairs[q].second == i1);
                if (hit) uf.unite(p, q);
            }
        }
    }
    std::map<int, std::vector<int>> groups;
    for (int p = 0; p < n; ++p) groups[uf.find(p)].push_back(p);
    for (auto& [root, members] : groups) out.orbits.push_back(members);
    return out;
}

TriangulationCensus triangulate(const StarPolygon& K) {
    TriangulationCensus c;
    const Complex O = K.center;
    for (int i = 0; i < 10; ++i) {
        c.faces.push_back({"O" + vertex_label(i) + vertex_label((i + 1) % 10), {O, K.vertices[i], K.vertices[(i + 1) % 10]}});
    }
    for (int i = 0; i < 10; ++i) c.edges.push_back({"O" + vertex_label(i), {O, K.vertices[i]}});
    for (int i = 0; i < 10; ++i) {
        // Boundary edges are stored from the inner vertex to the outer one.
        int inner = i % 2 == 0 ? i : (i + 1) % 10;
        int outer = i % 2 == 0 ? i + 1 : i;
        c.edges.push_back({vertex_label(inner) + vertex_label(outer), {K.vertices[inner], K.vertices[outer]}});
    }
    for (int v = 0; v < 10; ++v) c.vertices.push_back({vertex_label(v), {K.vertices[v]}});

    c.face_orbits = rotation_orbits(c.faces, false);
    c.vertex_orbits = rotation_orbits(c.vertices, true);
    rotation_orbits(c.edges, false);

    std::vector<Cell> oriented;
    for (const auto& e : c.edges) {
        oriented.push_back({e.label, e.points});
        oriented.push_back({e.label + "'", {e.points[1], e.points[0]}});
    }
    c.oriented_edge_orbits = rotation_orbits(oriented, true);

    c.pairing = edge_pairing(K);
    c.pair_orbits = static_cast<int>(c.pairing.orbits.size());

    std::map<int, std::vector<int>> by_orbit;
    for (int v = 0; v < 10; ++v) by_orbit[c.vertices[v].orbit].push_back(v);
    for (auto& [orbit, members] : by_orbit) {
        c.vertex_orbit_sizes.push_back(static_cast<int>(members.size()));
        PiFraction total{0, 1};
        for (int v : members) total = total + corner_angle(K, v);
        c.cone_angles.push_back({"O(" + c.vertices[members.front()].label + ")", total});
    }
    return c;
}

EulerResult quotient_euler_genus(const StarPolygon& K) {
    const TriangulationCensus c = triangulate(K);
    if (c.faces.size() != 10 || c.edges.size() != 20 || c.vertices.size() != 10)
        throw CellCountMismatch("triangulation is not 10/20/10");
    if (c.face_orbits != 2 || c.pair_orbits != 2 || c.oriented_edge_orbits != 8 || c.vertex_orbits != 2)
        throw CellCountMismatch("orbit counts faces=" + std::to_string(c.face_orbits) +
                                " pairs=" + std::to_string(c.pair_orbits) +
                                " oriented edges=" + std::to_string(c.oriented_edge_orbits) +
                                " vertices=" + std::to_string(c.vertex_orbits) + ", census needs 2/2/8/2");
    EulerResult r;
    r.chi = c.face_orbits - (c.pair_orbits + c.oriented_edge_orbits) + c.vertex_orbits;
    r.genus = (2 - r.chi) / 2;
    return r;
}

QuotientComplex quotient_complex(bool with_center, const StarPolygon& K) {
    const TriangulationCensus c = triangulate(K);
    std::vector<Cell> verts = c.vertices;
    if (with_center) verts.push_back({"O", {K.center}});
    const EdgePairing& pr = c.pairing;

    UnionFind vf(static_cast<int>(verts.size())), ef(20), ff(10);
    auto vertex_index = [&](Complex z) { return find_cell(verts, {z}, true); };
    for (int i = 0; i < static_cast<int>(verts.size()); ++i)
        for (int j = 1; j < 5; ++j) vf.unite(i, vertex_index(rotation_map(j)(verts[i].points[0])));
    for (int i = 0; i < 20; ++i)
        for (int j = 1; j < 5; ++j) ef.unite(i, find_cell(c.edges, mapped(rotation_map(j), c.edges[i].points), false));
    for (int i = 0; i < 10; ++i)
        for (int j = 1; j < 5; ++j) ff.unite(i, find_cell(c.faces, mapped(rotation_map(j), c.faces[i].points), false));
    // Edge pairing: boundary edge e ~ T_m e, endpoints follow T_m.
    for (int i = 0; i < 10; ++i) {
        const PlaneIsometry T = reflection_map(pr.via[i]);
        int e = find_cell(c.edges, {K.edges[i].p, K.edges[i].q}, false);
        int f = find_cell(c.edges, {T(K.edges[i].p), T(K.edges[i].q)}, false);
        ef.unite(e, f);
        vf.unite(vertex_index(K.edges[i].p), vertex_index(T(K.edges[i].p)));
        vf.unite(vertex_index(K.edges[i].q), vertex_index(T(K.edges[i].q)));
    }

    QuotientComplex q;
    q.with_center = with_center;
    q.vertices = vf.classes();
    q.edges = ef.classes();
    q.faces = ff.classes();

    // Every edge in a class must have the same multiset of endpoint classes.
    std::map<int, std::vector<int>> ends;
    q.boundary_consistent = true;
    for (int i = 0; i < 20; ++i) {
        std::vector<int> e;
        for (Complex z : c.edges[i].points) {
            int v = vertex_index(z);
            e.push_back(v < 0 ? -1 : vf.find(v));
        }
        std::sort(e.begin(), e.end());
        auto [it, fresh] = ends.try_emplace(ef.find(i), e);
        if (!fresh && it->second != e) q.boundary_consistent = false;
    }
    return q;
}

} // namespace icosa

#include "icosa/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "icosa/errors.hpp"

namespace icosa {

ZEps ZEps::eps_pow(int k) {
    switch (((k % 5) + 5) % 5) {
    case 0: return {{1, 0, 0, 0}};
    case 1: return {{0, 1, 0, 0}};
    case 2: return {{0, 0, 1, 0}};
    case 3: return {{0, 0, 0, 1}};
    default: return {{-1, -1, -1, -1}};
    }
}

ZEps ZEps::operator+(const ZEps& o) const {
    return {{c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]}};
}
ZEps ZEps::operator-(const ZEps& o) const {
    return {{c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]}};
}
ZEps ZEps::operator-() const { return {{-c[0], -c[1], -c[2], -c[3]}}; }
ZEps ZEps::operator*(std::int64_t s) const { return {{s * c[0], s * c[1], s * c[2], s * c[3]}}; }

ZEps ZEps::times_eps() const {
    // eps^4 = -1 - eps - eps^2 - eps^3
    return {{-c[3], c[0] - c[3], c[1] - c[3], c[2] - c[3]}};
}

ZEps ZEps::rotated(int j) const {
    ZEps z = *this;
    for (int i = 0; i < ((j % 5) + 5) % 5; ++i) z = z.times_eps();
    return z;
}

ZEps ZEps::conj() const {
    // eps -> eps^4, eps^2 -> eps^3, eps^3 -> eps^2
    return {{c[0] - c[1], -c[1], c[3] - c[1], c[2] - c[1]}};
}

Complex ZEps::value() const {
    return double(c[0]) + double(c[1]) * epsilon_pow(1) + double(c[2]) * epsilon_pow(2) + double(c[3]) * epsilon_pow(3);
}

std::string ZEps::str() const {
    std::ostringstream os;
    os << "[" << c[0] << "," << c[1] << "," << c[2] << "," << c[3] << "]";
    return os.str();
}

std::size_t ZEpsHash::operator()(const ZEps& z) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : z.c) h = (h ^ static_cast<std::size_t>(v + 0x9e3779b9)) * 1099511628211ull;
    return h;
}

double apothem(const StarPolygon& K) {
    double d = std::abs(K.edge_lines[0].signed_distance(K.center));
    for (const auto& line : K.edge_lines)
        if (std::abs(std::abs(line.signed_distance(K.center)) - d) > 1e-12)
            throw Error("edge lines are not equidistant from O");
    return d;
}

ZEps two_u(int k) { return ZEps::eps_pow(3 * k); }

int k_prime(int k) { return ((-k % 5) + 5) % 5; }

Complex MotionGroupElement::apply(Complex z) const {
    return epsilon_pow(j) * (ell % 2 ? std::conj(z) : z) + t.value();
}

ZEps MotionGroupElement::apply(const ZEps& z) const { return (ell % 2 ? z.conj() : z).rotated(j) + t; }

MotionGroupElement tau(int k) { return MotionGroupElement::translation(two_u(k)); }

MotionGroupElement multiply(const MotionGroupElement& g1, const MotionGroupElement& g2) {
    MotionGroupElement out;
    int jj = g1.ell % 2 == 0 ? g1.j + g2.j : g1.j - g2.j;
    out.j = ((jj % 5) + 5) % 5;
    out.ell = (g1.ell + g2.ell) % 2;
    const MotionGroupElement linear{g1.j, g1.ell, {}};
    out.t = linear.apply(g2.t) + g1.t;
    return out;
}

MotionGroupElement inverse(const MotionGroupElement& g) {
    // (R^j)^-1 = R^-j and (R^j U)^-1 = R^j U.
    MotionGroupElement inv{g.ell % 2 ? g.j : (5 - g.j) % 5, g.ell, {}};
    inv.t = -inv.apply(g.t);
    return inv;
}

namespace {

struct ElementKey {
    int j, ell;
    ZEps t;
    bool operator==(const ElementKey&) const = default;
};

struct ElementKeyHash {
    std::size_t operator()(const ElementKey& k) const { return ZEpsHash{}(k.t) * 31 + k.j * 2 + k.ell; }
};

struct Generator {
    std::string name;
    MotionGroupElement g;
};

std::vector<Generator> generators(bool with_flip) {
    std::vector<Generator> gens{{"r", MotionGroupElement::rotation(1)}, {"R", MotionGroupElement::rotation(4)}};
    if (with_flip) gens.push_back({"U", MotionGroupElement::flip()});
    for (int k = 0; k < 5; ++k) {
        gens.push_back({"t" + std::to_string(k), tau(k)});
        gens.push_back({"T" + std::to_string(k), inverse(tau(k))});
    }
    return gens;
}

} // namespace

std::vector<WordElement> enumerate_group(int max_length, bool with_flip) {
    if (max_length < 0 || max_length > 10) throw InvalidArgument("word length must lie in 0..10");
    const auto gens = generators(with_flip);
    std::vector<WordElement> out{{MotionGroupElement::identity(), 0, ""}};
    std::unordered_set<ElementKey, ElementKeyHash> seen{{0, 0, {}}};
    std::size_t frontier_begin = 0;
    for (int len = 1; len <= max_length; ++len) {
        const std::size_t frontier_end = out.size();
        for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
            for (const auto& s : gens) {
                MotionGroupElement g = multiply(s.g, out[i].g);
                if (seen.insert({g.j, g.ell, g.t}).second) out.push_back({g, len, s.name + out[i].word});
            }
        }
        frontier_begin = frontier_end;
    }
    return out;
}

namespace {

struct Echelon {
    std::vector<std::array<std::int64_t, 4>> rows;
    std::vector<std::array<std::int64_t, 5>> combos;  // row = sum combo_k * 2u_k
    std::vector<int> pivots;
};

const Echelon& lattice_echelon() {
    static const Echelon E = [] {
        std::vector<std::array<std::int64_t, 4>> v(5);
        std::vector<std::array<std::int64_t, 5>> comb(5);
        for (int k = 0; k < 5; ++k) {
            v[k] = two_u(k).c;
            comb[k] = {0, 0, 0, 0, 0};
            comb[k][k] = 1;
        }
        auto sub = [&](int dst, int src, std::int64_t q) {
            for (int i = 0; i < 4; ++i) v[dst][i] -= q * v[src][i];
            for (int i = 0; i < 5; ++i) comb[dst][i] -= q * comb[src][i];
        };
        Echelon out;
        int row = 0;
        for (int col = 0; col < 4 && row < 5; ++col) {
            while (true) {
                int best = -1;
                for (int r = row; r < 5; ++r)
                    if (v[r][col] != 0 && (best < 0 || std::llabs(v[r][col]) < std::llabs(v[best][col]))) best = r;
                if (best < 0) break;
                std::swap(v[row], v[best]);
                std::swap(comb[row], comb[best]);
                bool clean = true;
                for (int r = row + 1; r < 5; ++r) {
                    if (v[r][col] == 0) continue;
                    sub(r, row, v[r][col] / v[row][col]);
                    if (v[r][col] != 0) clean = false;
                }
                if (clean) break;
            }
            if (v[row][col] == 0) continue;
            if (v[row][col] < 0) {
                for (auto& x : v[row]) x = -x;
                for (auto& x : comb[row]) x = -x;
            }
            out.rows.push_back(v[row]);
            out.combos.push_back(comb[row]);
            out.pivots.push_back(col);
            ++row;
        }
        return out;
    }();
    return E;
}

} // namespace

TranslationLattice translation_lattice() {
    const Echelon& E = lattice_echelon();
    TranslationLattice L;
    L.rank = static_cast<int>(E.rows.size());
    if (L.rank == 4) {
        L.index = 1;
        for (int i = 0; i < 4; ++i) L.index *= E.rows[i][E.pivots[i]];
    }
    return L;
}

bool translation_coordinates(const ZEps& z, std::array<std::int64_t, 5>& n) {
    const Echelon& E = lattice_echelon();
    std::array<std::int64_t, 4> x = z.c;
    n = {0, 0, 0, 0, 0};
    for (std::size_t i = 0; i < E.rows.size(); ++i) {
        const int p = E.pivots[i];
        const std::int64_t piv = E.rows[i][p];
        if (x[p] % piv != 0) return false;
        const std::int64_t q = x[p] / piv;
        for (int c = 0; c < 4; ++c) x[c] -= q * E.rows[i][c];
        for (int k = 0; k < 5; ++k) n[k] += q * E.combos[i][k];
    }
    return x == std::array<std::int64_t, 4>{0, 0, 0, 0};
}

std::array<ZEps, 10> star_vertices_exact() {
    std::array<ZEps, 10> v;
    const ZEps inner = ZEps::eps_pow(1) + ZEps::eps_pow(4);  // a = eps + eps^4
    const ZEps outer = ZEps::one() + ZEps::eps_pow(1);       // b e^{i pi/5} = 1 + eps
    for (int j = 0; j < 5; ++j) {
        v[2 * j] = inner.rotated(j);
        v[2 * j + 1] = outer.rotated(j);
    }
    return v;
}

bool in_vplus(const ZEps& z) {
    std::array<std::int64_t, 5> n;
    if (translation_coordinates(z, n)) return true;
    for (const ZEps& v : star_vertices_exact())
        if (translation_coordinates(z - v, n)) return true;
    return false;
}

TilingPatch generate_patch(int depth) {
    if (depth < 0 || depth > 6) throw InvalidArgument("patch depth must lie in 0..6");
    TilingPatch patch;
    patch.depth = depth;
    std::unordered_set<ZEps, ZEpsHash> seen{ZEps{}};
    patch.centers.push_back(ZEps{});
    std::size_t begin = 0;
    for (int d = 1; d <= depth; ++d) {
        const std::size_t end = patch.centers.size();
        for (std::size_t i = begin; i < end; ++i) {
            for (int k = 0; k < 5; ++k) {
                for (const ZEps& c : {patch.centers[i] + two_u(k), patch.centers[i] - two_u(k)}) {
                    if (seen.insert(c).second) patch.centers.push_back(c);
                }
            }
        }
        begin = end;
    }
    std::unordered_set<ZEps, ZEpsHash> vp;
    const auto verts = star_vertices_exact();
    for (const ZEps& c : patch.centers) {
        if (vp.insert(c).second) patch.vpoints.push_back(c);
        for (const ZEps& v : verts)
            if (vp.insert(c + v).second) patch.vpoints.push_back(c + v);
    }
    return patch;
}

bool covered_by_patch(Complex z, const TilingPatch& patch, double tol) {
    const StarPolygon& K = star();
    const double reach = outer_radius() + tol;
    for (const ZEps& c : patch.centers) {
        const Complex w = z - c.value();
        if (std::abs(w) > reach) continue;
        if (point_location(w, K, tol).inside_closed()) return true;
    }
    return false;
}

bool CheckReport::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.pass; });
}

namespace {

Complex sample_disk(std::mt19937_64& rng, double radius) {
    std::uniform_real_distribution<double> u(-radius, radius);
    while (true) {
        Complex z{u(rng), u(rng)};
        if (std::abs(z) <= radius) return z;
    }
}

double distance_to_set(Complex z, const std::vector<Complex>& pts) {
    double d = 1e300;
    for (Complex p : pts) d = std::min(d, std::abs(z - p));
    return d;
}

std::vector<Complex> values(const std::vector<ZEps>& pts) {
    std::vector<Complex> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(p.value());
    return out;
}

std::string fmt(Complex z) {
    std::ostringstream os;
    os.precision(12);
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

double boundary_distance(Complex z, const StarPolygon& K) {
    double d = 1e300;
    for (const auto& e : K.edges) {
        Complex dd = e.q - e.p;
        double t = std::clamp(((z - e.p) * std::conj(dd)).real() / std::norm(dd), 0.0, 1.0);
        d = std::min(d, std::abs(z - (e.p + dd * t)));
    }
    return d;
}

} // namespace

CheckReport coverage_check(const TilingPatch& patch, int samples, double radius, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto vp = values(patch.vpoints);
    CheckItem item{"coverage"};
    int misses = 0, tested = 0;
    while (tested < samples) {
        Complex z = sample_disk(rng, radius);
        if (distance_to_set(z, vp) <= 1e-6) continue;
        ++tested;
        if (!covered_by_patch(z, patch)) {
            if (misses == 0) item.witness = "uncovered z = " + fmt(z);
            ++misses;
        }
    }
    item.measured = misses;
    item.pass = misses == 0;
    if (item.pass) item.witness = std::to_string(tested) + " samples in the disk of radius " + std::to_string(radius);
    return {{item}};
}

CheckReport invariance_freeness_checks(const TilingPatch& patch, const TilingCheckOptions& opt) {
    CheckReport rep;
    std::mt19937_64 rng(opt.seed);
    const auto group = enumerate_group(opt.word_length, true);
    const StarPolygon& K = star();

    {
        CheckItem item{"vplus_invariance"};
        std::uniform_int_distribution<std::size_t> pick_g(1, group.size() - 1), pick_v(0, patch.vpoints.size() - 1);
        int failures = 0;
        for (int e = 0; e < opt.elements; ++e) {
            const WordElement& g = group[pick_g(rng)];
            for (int s = 0; s < opt.samples; ++s) {
                const ZEps& v = patch.vpoints[pick_v(rng)];
                if (!in_vplus(g.g.apply(v))) {
                    if (failures == 0) item.witness = "word " + g.word + " moves " + v.str() + " out of V+";
                    ++failures;
                }
            }
        }
        item.measured = failures;
        item.pass = failures == 0;
        const TranslationLattice L = translation_lattice();
        if (item.pass)
            item.witness = "exact Z[eps] check; translation lattice rank " + std::to_string(L.rank) + ", index " +
                           std::to_string(L.index);
        rep.items.push_back(item);
    }

    const double radius = std::max(1.0, patch.depth * apothem(K));
    const auto vp = values(patch.vpoints);
    {
        CheckItem item{"freeness"};
        std::vector<Complex> zs{{0.3, 0.1}};
        while (static_cast<int>(zs.size()) < opt.samples) {
            Complex z = sample_disk(rng, radius);
            if (distance_to_set(z, vp) > 1e-6) zs.push_back(z);
        }
        int failures = 0;
        double closest = 1e300;
        for (Complex z : zs) {
            for (std::size_t i = 1; i < group.size(); ++i) {
                double d = std::abs(group[i].g.apply(z) - z);
                closest = std::min(closest, d);
                if (d < 1e-9) {
                    if (failures == 0) item.witness = "word " + group[i].word + " fixes z = " + fmt(z);
                    ++failures;
                }
            }
        }
        item.measured = failures;
        item.pass = failures == 0;
        if (item.pass) item.witness = "smallest displacement " + std::to_string(closest);
        rep.items.push_back(item);
    }

    {
        // Structured points that random sampling never hits: U fixes the real
        // axis, and R^j + t fixes t / (1 - eps^j).
        CheckItem item{"fixed_points_off_vplus"};
        const Complex z{0.3, 0.0};
        std::string detail;
        bool u_fixes = std::abs(MotionGroupElement::flip().apply(z) - z) == 0.0;
        bool z_in_vplus = distance_to_set(z, vp) < 1e-9;
        item.pass = !(u_fixes && !z_in_vplus);
        item.measured = u_fixes ? 1 : 0;
        item.witness = u_fixes ? "U fixes z = 0.3, which is not in V+" : "no fixed point found";
        rep.items.push_back(item);
    }

    {
        CheckItem item{"transitivity"};
        std::uniform_int_distribution<std::size_t> pick(0, patch.centers.size() - 1);
        int failures = 0;
        for (int s = 0; s < opt.samples; ++s) {
            const ZEps& c0 = patch.centers[pick(rng)];
            const ZEps& c1 = patch.centers[pick(rng)];
            std::array<std::int64_t, 5> n;
            bool ok = translation_coordinates(c1 - c0, n);
            if (ok) {
                MotionGroupElement g;
                for (int k = 0; k < 5; ++k)
                    for (std::int64_t r = 0; r < std::llabs(n[k]); ++r)
                        g = multiply(n[k] > 0 ? tau(k) : inverse(tau(k)), g);
                ok = g.apply(c0) == c1;
            }
            if (!ok) {
                if (failures == 0) item.witness = "no translation word from " + c0.str() + " to " + c1.str();
                ++failures;
            }
        }
        item.measured = failures;
        item.pass = failures == 0;
        rep.items.push_back(item);
    }

    {
        // A free, properly discontinuous action with fundamental domain K
        // moves an interior point z by at least 2 dist(z, boundary K).
        CheckItem item{"properness_separation"};
        double worst = 1e300;
        std::string witness;
        for (int s = 0; s < std::min(opt.samples, 50); ++s) {
            Complex z = sample_disk(rng, apothem(K));
            double d = boundary_distance(z, K);
            for (std::size_t i = 1; i < group.size(); ++i) {
                double ratio = std::abs(group[i].g.apply(z) - z) / (2.0 * d);
                if (ratio < worst) {
                    worst = ratio;
                    witness = "word " + group[i].word + " moves z = " + fmt(z) + " by " +
                              std::to_string(std::abs(group[i].g.apply(z) - z)) + " < 2 dist(z, boundary) = " +
                              std::to_string(2.0 * d);
                }
            }
        }
        item.measured = worst;
        item.pass = worst >= 1.0;
        item.witness = witness;
        rep.items.push_back(item);
    }
    return rep;
}

std::vector<WordElement> carriers(Complex z, const std::vector<WordElement>& group, bool interior_only, double tol) {
    const StarPolygon& K = star();
    const double reach = std::abs(z) + outer_radius() + tol;
    std::vector<WordElement> out;
    for (const auto& w : group) {
        if (std::abs(w.g.translation_value()) > reach) continue;
        const Complex gz = w.g.apply(z);
        const Location loc = point_location(gz, K, tol);
        if (loc.kind == Location::Kind::Exterior || loc.kind == Location::Kind::AtCenter) continue;
        if (interior_only && loc.kind != Location::Kind::Interior) continue;
        out.push_back(w);
    }
    return out;
}

CheckReport fundamental_domain_check(const TilingPatch& patch, const TilingCheckOptions& opt) {
    std::mt19937_64 rng(opt.seed + 1);
    const auto group = enumerate_group(opt.word_length, false);
    const auto vp = values(patch.vpoints);
    const double radius = std::max(1.0, patch.depth * apothem());

    CheckItem existence{"fundamental_domain_existence"}, uniqueness{"fundamental_domain_uniqueness"};
    int missing = 0, multiple = 0;
    std::size_t most = 0;
    std::vector<Complex> zs{{0.3, 0.0}, {1.2, 0.1}};
    const int n = std::min(opt.samples, 100);
    while (static_cast<int>(zs.size()) < n) {
        Complex z = sample_disk(rng, radius);
        if (distance_to_set(z, vp) > 1e-6) zs.push_back(z);
    }
    for (Complex z : zs) {
        const auto any = carriers(z, group, false);
        if (any.empty()) {
            if (missing == 0) existence.witness = "no carrier for z = " + fmt(z);
            ++missing;
        }
        const auto inner = carriers(z, group, true);
        if (inner.size() > 1) {
            if (multiple == 0) {
                uniqueness.witness = "z = " + fmt(z) + " has " + std::to_string(inner.size()) +
                                     " carriers into int K, e.g. '" + (inner[0].word.empty() ? "e" : inner[0].word) +
                                     "' and '" + (inner[1].word.empty() ? "e" : inner[1].word) + "'";
            }
            ++multiple;
        }
        most = std::max(most, inner.size());
    }
    existence.measured = missing;
    existence.pass = missing == 0;
    if (existence.pass) existence.witness = std::to_string(zs.size()) + " samples";
    uniqueness.measured = multiple;
    uniqueness.pass = multiple == 0;
    if (uniqueness.pass) uniqueness.witness = "largest carrier count " + std::to_string(most);
    return {{existence, uniqueness}};
}

} // namespace icosa

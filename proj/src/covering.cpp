#include "icosa/covering.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "icosa/errors.hpp"

namespace icosa {

std::string to_string(BranchPoint p) {
    switch (p) {
    case BranchPoint::Zero: return "0";
    case BranchPoint::A: return "a";
    case BranchPoint::B: return "b";
    case BranchPoint::Infinity: return "inf";
    }
    return "?";
}

BranchPoint parse_branch_point(const std::string& name) {
    if (name == "0") return BranchPoint::Zero;
    if (name == "a") return BranchPoint::A;
    if (name == "b") return BranchPoint::B;
    if (name == "inf" || name == "infinity") return BranchPoint::Infinity;
    throw InvalidArgument("unknown branch point '" + name + "'");
}

SheetPermutation SheetPermutation::shift(int s) {
    SheetPermutation p;
    for (int k = 0; k < 10; ++k) p.images[k] = (((k + s) % 10) + 10) % 10;
    return p;
}

bool SheetPermutation::is_identity() const {
    for (int k = 0; k < 10; ++k)
        if (images[k] != k) return false;
    return true;
}

bool SheetPermutation::is_bijective() const {
    std::array<bool, 10> seen{};
    for (int v : images) {
        if (v < 0 || v > 9 || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

SheetPermutation SheetPermutation::after(const SheetPermutation& first) const {
    SheetPermutation out;
    for (int k = 0; k < 10; ++k) out.images[k] = images[first.images[k]];
    return out;
}

SheetPermutation SheetPermutation::inverse() const {
    SheetPermutation out;
    for (int k = 0; k < 10; ++k) out.images[images[k]] = k;
    return out;
}

std::vector<int> SheetPermutation::cycle_type() const {
    std::array<bool, 10> seen{};
    std::vector<int> out;
    for (int k = 0; k < 10; ++k) {
        if (seen[k]) continue;
        int len = 0;
        for (int j = k; !seen[j]; j = images[j]) {
            seen[j] = true;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::optional<int> SheetPermutation::as_shift() const {
    int s = images[0];
    for (int k = 0; k < 10; ++k)
        if (images[k] != (k + s) % 10) return std::nullopt;
    return s;
}

Complex monodromy_basepoint() { return {0.5 * (inner_radius() + outer_radius()), 0.5}; }

double singular_gap(BranchPoint p) {
    const double a = inner_radius(), b = outer_radius();
    switch (p) {
    case BranchPoint::Zero: return a;
    case BranchPoint::A: return std::min(a, b - a);
    case BranchPoint::B: return b - a;
    case BranchPoint::Infinity: return 1.0 / b;
    }
    return 0.0;
}

namespace {

// Polyline in the chart (xi, or w = 1/xi for infinity), closed at the basepoint.
std::vector<Complex> loop_points(Complex center, Complex base, double radius, int steps, const std::vector<Complex>& hazards) {
    std::vector<Complex> leg;
    const Complex dir = (base - center) / std::abs(base - center);
    const Complex start = center + radius * dir;
    // Out-leg from the basepoint to the circle, with a step bounded by the
    // distance to the nearest hazard.
    Complex z = base;
    leg.push_back(z);
    std::vector<Complex> near = hazards;
    near.push_back(center);
    while (std::abs(z - start) > 0.0) {
        double clearance = 1e300;
        for (Complex h : near) clearance = std::min(clearance, std::abs(z - h));
        double step = std::max(0.02 * clearance, 1e-12);
        double remaining = std::abs(start - z);
        if (remaining <= step) {
            z = start;
        } else {
            z += (start - z) / remaining * step;
        }
        leg.push_back(z);
    }
    std::vector<Complex> pts = leg;
    const double theta0 = std::arg(dir);
    for (int j = 1; j <= steps; ++j) pts.push_back(center + std::polar(radius, theta0 + 2.0 * kPi * j / steps));
    pts.back() = start;
    for (auto it = leg.rbegin() + 1; it != leg.rend(); ++it) pts.push_back(*it);
    return pts;
}

int nearest_sheet(Complex value, Complex base, double& residual) {
    int best = 0;
    residual = 1e300;
    for (int j = 0; j < 10; ++j) {
        double r = std::abs(value - std::polar(1.0, kPi * j / 5.0) * base);
        if (r < residual) {
            residual = r;
            best = j;
        }
    }
    return best;
}

int continue_sheet(int sheet, const std::vector<Complex>& xs, const MonodromyOptions& opt) {
    const double a = inner_radius(), b = outer_radius();
    Complex value = eta(xs.front(), sheet);
    for (std::size_t j = 1; j < xs.size(); ++j) {
        const Complex x0 = xs[j - 1], x1 = xs[j];
        // Exact change of log eta over a step short enough that each factor
        // turns by much less than pi.
        Complex dlog = 0.8 * std::log(x1 / x0) + 0.3 * std::log((x1 - a) / (x0 - a)) + 0.9 * std::log((x1 - b) / (x0 - b));
        Complex predicted = value * std::exp(dlog);
        Complex base = eta_principal(x1);
        double residual;
        int k = nearest_sheet(predicted, base, residual);
        double gap = 2.0 * std::abs(base) * std::sin(kPi / 10.0);
        if (!(residual < opt.reject_fraction * gap))
            throw ContinuationAmbiguity("step " + std::to_string(j) + " residual " + std::to_string(residual) +
                                        " against gap " + std::to_string(gap));
        value = std::polar(1.0, kPi * k / 5.0) * base;
    }
    double residual;
    return nearest_sheet(value, eta_principal(xs.back()), residual);
}

} // namespace

SheetPermutation monodromy(BranchPoint p, double radius, const MonodromyOptions& opt) {
    if (!(radius > 0.0) || radius >= singular_gap(p))
        throw InvalidArgument("radius must lie in (0, " + std::to_string(singular_gap(p)) + ")");
    if (opt.circle_steps < 8) throw InvalidArgument("circle_steps must be at least 8");
    const auto s = prevertices();
    const Complex base = monodromy_basepoint();
    std::vector<Complex> xs;
    if (p == BranchPoint::Infinity) {
        // Chart w = 1/xi; the finite prevertices a, b map to 1/a, 1/b and 0 to infinity.
        std::vector<Complex> hazards{Complex{1.0 / s[1], 0.0}, Complex{1.0 / s[2], 0.0}};
        auto ws = loop_points({0.0, 0.0}, 1.0 / base, radius, opt.circle_steps, hazards);
        xs.reserve(ws.size());
        for (Complex w : ws) xs.push_back(1.0 / w);
    } else {
        int i = static_cast<int>(p);
        std::vector<Complex> hazards;
        for (int j = 0; j < 3; ++j) hazards.emplace_back(s[j], 0.0);
        xs = loop_points({s[i], 0.0}, base, radius, opt.circle_steps, hazards);
    }
    SheetPermutation perm;
    for (int k = 0; k < 10; ++k) perm.images[k] = continue_sheet(k, xs, opt);
    if (!perm.is_bijective()) throw ContinuationAmbiguity("continuation did not produce a permutation");
    return perm;
}

BranchPointReport make_report(BranchPoint p, const SheetPermutation& perm) {
    BranchPointReport r{p};
    r.permutation = perm;
    r.cycle_type = perm.cycle_type();
    r.local_degree = r.cycle_type.empty() ? 1 : r.cycle_type.front();
    for (int len : r.cycle_type) r.ramification_index += len - 1;
    return r;
}

std::vector<BranchPointReport> ramification_report(double fraction) {
    std::vector<BranchPointReport> out;
    for (BranchPoint p : {BranchPoint::Zero, BranchPoint::A, BranchPoint::B, BranchPoint::Infinity})
        out.push_back(make_report(p, monodromy(p, fraction * singular_gap(p))));
    return out;
}

int total_ramification(const std::vector<BranchPointReport>& reports) {
    int r = 0;
    for (const auto& rep : reports) r += rep.ramification_index;
    return r;
}

int genus_from_ramification(int r, int sheets) {
    int twice = r - 2 * sheets + 2;
    if (twice < 0 || twice % 2 != 0)
        throw NonIntegralGenus("r = " + std::to_string(r) + " gives 2g = " + std::to_string(twice));
    return twice / 2;
}

int genus_riemann_hurwitz() { return genus_from_ramification(total_ramification(ramification_report())); }

LiftedCellCount lifted_triangulation(const std::vector<BranchPointReport>& reports) {
    LiftedCellCount c;
    for (const auto& rep : reports)
        if (rep.point != BranchPoint::Infinity) c.vertices += static_cast<int>(rep.cycle_type.size());
    c.edges = 3 * 10;
    c.faces = 2 * 10;
    c.euler = c.vertices - c.edges + c.faces;
    c.genus = (2 - c.euler) / 2;
    return c;
}

SheetedPoint apply_generator(SheetGenerator g, const SheetedPoint& p) {
    if (g == SheetGenerator::R) return {p.xi, (p.sheet + 2) % 10};
    const Complex target = std::conj(eta(p.xi, p.sheet));
    const Complex xi = std::conj(p.xi);
    double residual;
    int k = nearest_sheet(target, eta_principal(xi), residual);
    return {xi, k};
}

SheetedPoint sheet_action(const std::string& word, const SheetedPoint& p) {
    SheetedPoint q = p;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it == 'R')
            q = apply_generator(SheetGenerator::R, q);
        else if (*it == 'U')
            q = apply_generator(SheetGenerator::U, q);
        else
            throw InvalidArgument(std::string("unknown generator '") + *it + "'");
    }
    return q;
}

bool connectivity_check(const std::vector<SheetPermutation>& generators) {
    std::array<bool, 10> reached{};
    std::vector<int> stack{0};
    reached[0] = true;
    while (!stack.empty()) {
        int k = stack.back();
        stack.pop_back();
        for (const auto& g : generators) {
            for (int v : {g(k), g.inverse()(k)}) {
                if (!reached[v]) {
                    reached[v] = true;
                    stack.push_back(v);
                }
            }
        }
    }
    return std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
}

bool connectivity_check() {
    std::vector<SheetPermutation> gens;
    for (const auto& rep : ramification_report())
        if (rep.point != BranchPoint::Infinity) gens.push_back(rep.permutation);
    return connectivity_check(gens);
}

} // namespace icosa

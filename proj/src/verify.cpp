#include "icosa/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "icosa/billiards.hpp"
#include "icosa/conformal.hpp"
#include "icosa/covering.hpp"
#include "icosa/errors.hpp"
#include "icosa/geometry.hpp"
#include "icosa/metric.hpp"
#include "icosa/quotient.hpp"
#include "icosa/tiling.hpp"

namespace icosa {

using nlohmann::json;

bool VerifyLedger::all_pass() const {
    return std::all_of(entries.begin(), entries.end(), [](const LedgerEntry& e) { return e.pass; });
}

const std::vector<std::string>& verify_modules() {
    static const std::vector<std::string> m{"geometry_core",        "conformal_map", "covering_surface",
                                            "flat_metric_dynamics", "billiards",     "quotient_surface",
                                            "affine_tiling"};
    return m;
}

namespace {

std::string sci(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

SubCheck below(const std::string& name, double value, double tol) {
    return {name, value < tol, value, "< " + sci(tol)};
}

SubCheck equals(const std::string& name, const json& got, const json& want) {
    return {name, got == want, got, "== " + want.dump()};
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void finish(LedgerEntry& e, const Timer& t) {
    e.seconds = t.seconds();
    e.checks.push_back({"runtime", e.seconds < e.budget_seconds, e.seconds, "< " + sci(e.budget_seconds) + " s"});
    e.pass = std::all_of(e.checks.begin(), e.checks.end(), [](const SubCheck& c) { return c.pass; });
}

LedgerEntry ac01(const Config&) {
    LedgerEntry e{"AC01", "geometry_core", "The triangle O, A, B has side c = 2 sin(pi/5) and angles pi/10, 7pi/10, pi/5"};
    e.budget_seconds = 1e-3;
    Timer t;
    const TriangleT T = build_triangle();
    const double c_res = std::abs(T.c - 2.0 * std::sin(kPi / 5.0));
    const double at_B = angle_at(T.B, T.O, T.A), at_A = angle_at(T.A, T.B, T.O), at_O = angle_at(T.O, T.A, T.B);
    const double ang_res = std::max({std::abs(at_B - kPi / 10), std::abs(at_A - 7 * kPi / 10), std::abs(at_O - kPi / 5)});
    const bool labels = T.alpha == PiFraction{1, 10} && T.beta == PiFraction{7, 10} && T.gamma == PiFraction{1, 5};
    e.checks.push_back(below("side_c_residual", c_res, 1e-12));
    e.checks.push_back(below("angle_residual", ang_res, 1e-12));
    e.checks.push_back({"rational_angles_1_2_7", labels, labels, "exact"});
    finish(e, t);
    return e;
}

LedgerEntry ac02(const Config&) {
    LedgerEntry e{"AC02", "geometry_core", "The two angle sums at A' equal pi and the 10 star edges lie on 5 lines"};
    e.budget_seconds = 10e-3;
    Timer t;
    const StarPolygon K = build_star();
    const CollinearityReport r = star_collinearity(K);
    e.checks.push_back(below("first_angle_sum_residual", std::abs(r.first_sum - kPi), 1e-12));
    e.checks.push_back(below("second_angle_sum_residual", std::abs(r.second_sum - kPi), 1e-12));
    e.checks.push_back(below("edge_line_residual", r.max_line_residual, 1e-12));
    e.checks.push_back(equals("lines_with_two_edges", r.lines_with_two_edges, 5));
    finish(e, t);
    return e;
}

LedgerEntry ac03(const Config& cfg) {
    LedgerEntry e{"AC03", "conformal_map", "k calF(a) = a with k = a / calF(a) > 0"};
    e.budget_seconds = 1.0;
    Timer t;
    const QuadEstimate F = calF_a(cfg.quadrature);
    const double k = compute_k(cfg.quadrature);
    e.checks.push_back(below("normalization_residual", std::abs(k * F.value - inner_radius()), 1e-10));
    e.checks.push_back({"k_positive", k > 0.0, k, "> 0"});
    e.checks.push_back(below("calF_imaginary_part", std::abs(F.value.imag()), 1e-12));
    e.note = "quadrature " + to_string(cfg.quadrature.kind) + ", " + std::to_string(F.evaluations) + " evaluations";
    finish(e, t);
    return e;
}

LedgerEntry ac04(const Config& cfg) {
    LedgerEntry e{"AC04", "conformal_map", "F_T sends 0, a, b to O, A, B with interior angles pi/5, 7pi/10, pi/10"};
    e.budget_seconds = 5.0;
    Timer t;
    const TriangleT T = build_triangle();
    const std::array<Complex, 3> want{T.O, T.A, T.B};
    const std::array<double, 3> angles{kPi / 5, 7 * kPi / 10, kPi / 10};
    const char* names[3] = {"0", "a", "b"};
    for (int i = 0; i < 3; ++i) {
        e.checks.push_back(below(std::string("endpoint_") + names[i], std::abs(F_T_vertex(i, cfg.quadrature) - want[i]), 1e-6));
        e.checks.push_back(
            below(std::string("turning_angle_") + names[i], std::abs(interior_angle(i, 1e-4, cfg.quadrature) - angles[i]), 1e-3));
    }
    finish(e, t);
    return e;
}

LedgerEntry ac05(const Config&) {
    LedgerEntry e{"AC05", "covering_surface", "Monodromy shifts sheets by +8, +3, +9 around 0, a, b and fixes them around infinity"};
    e.budget_seconds = 5.0;
    Timer t;
    const std::array<BranchPoint, 4> pts{BranchPoint::Zero, BranchPoint::A, BranchPoint::B, BranchPoint::Infinity};
    const std::array<int, 4> shifts{8, 3, 9, 0};
    for (double fraction : {0.1, 0.01}) {
        for (int i = 0; i < 4; ++i) {
            const auto perm = monodromy(pts[i], fraction * singular_gap(pts[i]));
            const auto s = perm.as_shift();
            const json got = s ? json(*s) : json("not a shift");
            e.checks.push_back(equals("shift_" + to_string(pts[i]) + "_r" + sci(fraction), got, shifts[i]));
        }
    }
    finish(e, t);
    return e;
}

LedgerEntry ac06(const Config&) {
    LedgerEntry e{"AC06", "covering_surface",
                  "Riemann-Hurwitz gives r = 26, g = 4, and the quotient triangulation gives chi = -6, g = 4"};
    e.budget_seconds = 1.0;
    Timer t;
    const auto reports = ramification_report(0.1);
    const int r = total_ramification(reports);
    const int g_rh = genus_from_ramification(r);
    e.checks.push_back(equals("total_ramification", r, 26));
    e.checks.push_back(equals("genus_riemann_hurwitz", g_rh, 4));
    try {
        const EulerResult q = quotient_euler_genus();
        e.checks.push_back(equals("quotient_chi", q.chi, -6));
        e.checks.push_back(equals("quotient_genus", q.genus, 4));
        e.checks.push_back(equals("genera_agree", q.genus == g_rh, true));
    } catch (const CellCountMismatch& ex) {
        e.checks.push_back({"quotient_chi", false, ex.what(), "== -6"});
        e.checks.push_back({"genera_agree", false, false, "== true"});
    }
    const LiftedCellCount lifted = lifted_triangulation(reports);
    const QuotientComplex closed = quotient_complex(true);
    std::ostringstream note;
    note << "diagnostics: lifted sphere triangulation V" << lifted.vertices << " E" << lifted.edges << " F"
         << lifted.faces << " chi " << lifted.euler << "; honest quotient K/R with O: V" << closed.vertices << " E"
         << closed.edges << " F" << closed.faces << " chi " << closed.chi();
    e.note = note.str();
    finish(e, t);
    return e;
}

LedgerEntry ac07(const Config& cfg) {
    LedgerEntry e{"AC07", "flat_metric_dynamics",
                  "Gamma(X, X) = 1, delta is an isometry, and flows of X develop to straight lines"};
    e.budget_seconds = 10.0;
    Timer t;
    const QuadratureRule& rule = cfg.quadrature;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> ux(-2.0, 3.0), uy(0.05, 2.0), ua(0.0, 2 * kPi), ur(0.1, 3.0);
    std::uniform_int_distribution<int> us(0, 9), sign(0, 1);
    const TriangleT T = build_triangle();
    double gxx = 0, iso = 0, tangency = 0;
    int outside = 0;
    for (int i = 0; i < 100; ++i) {
        const double y = sign(rng) ? uy(rng) : -uy(rng);
        const SheetedPoint p{{ux(rng), y}, us(rng)};
        const TangentVector x = X(p, rule);
        gxx = std::max(gxx, std::abs(Gamma(p, x, x, rule) - 1.0));
        const TangentVector v{p, std::polar(ur(rng), ua(rng))};
        const double G = Gamma(p, v, v, rule);
        const Complex dz = push_delta_star(v, rule);
        iso = std::max(iso, std::abs(G - gamma(dz, dz)) / (1.0 + G));
        tangency = std::max(tangency, v.tangency_residual());
        if (y > 0 && !in_closed_triangle(delta(p, rule), T, cfg.tol_geo)) ++outside;
    }
    e.checks.push_back(below("gamma_X_X_residual", gxx, 1e-8));
    e.checks.push_back(below("isometry_residual", iso, 1e-8));
    e.checks.push_back(below("tangency_residual", tangency, 1e-12));
    e.checks.push_back(equals("delta_outside_T", outside, 0));

    // delta(p0) lies within 0.004 of the incenter of T (inradius 0.172).
    const SheetedPoint p0{{0.55, 0.6}, 0};
    const Complex z0 = delta(p0, rule);
    double linear = 0;
    for (double s : {0.05, 0.1, 0.15, 0.2}) linear = std::max(linear, std::abs(delta(flow_X(p0, s, {}, rule), rule) - z0 - s));
    e.checks.push_back(below("flow_linearity_residual", linear, 1e-6));

    double straight = 0, collinear = 0;
    for (int j = 0; j < 8; ++j) {
        FlowOptions opt;
        opt.alpha = std::polar(1.0, 2 * kPi * j / 8.0);
        const double tmax = 0.15;
        const auto path = flow_X_path(p0, tmax, opt, rule);
        const std::size_t n = path.size() - 1;
        for (std::size_t i = 0; i <= n; i += std::max<std::size_t>(1, n / 12)) {
            const double s = tmax * static_cast<double>(i) / static_cast<double>(n);
            straight = std::max(straight, std::abs(delta(path[i], rule) - (z0 + s * opt.alpha)));
        }
        const Complex a = delta(path[0], rule), b = delta(path[n / 2], rule), c = delta(path[n], rule);
        const Complex u = (c - a) / std::abs(c - a);
        collinear = std::max(collinear, std::abs(((b - a) * std::conj(u)).imag()));
    }
    e.checks.push_back(below("rotated_flow_line_residual", straight, 1e-6));
    e.checks.push_back(below("flow_collinearity_residual", collinear, 1e-8));
    finish(e, t);
    return e;
}

Complex random_in_K(std::mt19937_64& rng, const StarPolygon& K) {
    std::uniform_real_distribution<double> u(-outer_radius(), outer_radius());
    while (true) {
        const Complex z{u(rng), u(rng)};
        if (point_location(z, K, 1e-6).kind == Location::Kind::Interior && std::abs(z) > 1e-3) return z;
    }
}

LedgerEntry ac08(const Config& cfg) {
    LedgerEntry e{"AC08", "billiards",
                  "Billiard motions reflect, reverse at vertices, commute with the rotations, and lift to straight lines"};
    e.budget_seconds = 5.0;
    Timer t;
    const StarPolygon& K = star();
    std::mt19937_64 rng(cfg.seed + 8);
    std::uniform_real_distribution<double> ua(0.0, 2 * kPi);
    std::uniform_int_distribution<int> ue(0, 9);

    double invol = 0;
    for (int i = 0; i < 50; ++i) {
        const Complex d = std::polar(1.0, ua(rng));
        const int edge = ue(rng);
        invol = std::max(invol, std::abs(reflect_dir(reflect_dir(d, edge, K), edge, K) - d));
    }
    e.checks.push_back(below("reflection_involution", invol, 1e-12));

    const Trajectory axis = simulate({0.1, 0.0}, {1.0, 0.0}, 3, K, cfg.tol_geo);
    const bool reversal = !axis.events.empty() && axis.events[0].kind == TrajectoryEvent::Kind::Reverse &&
                          axis.events[0].id == 0 && std::abs(axis.segments[0].t_end - (inner_radius() - 0.1)) < 1e-12 &&
                          axis.events.size() == 3 && axis.events[2].id == 0;
    e.checks.push_back({"real_axis_vertex_reversal", reversal, axis.events.empty() ? 0.0 : axis.segments[0].t_end,
                        "reverse at A after a - 0.1"});

    double speed = 0, equiv = 0, straight = 0, continuity = 0;
    int lifted = 0;
    for (int i = 0; i < 20; ++i) {
        const Complex z0 = random_in_K(rng, K);
        const Complex d = std::polar(1.0, ua(rng));
        const Trajectory tr = simulate(z0, d, cfg.billiard_events, K, cfg.tol_geo);
        for (const auto& s : tr.segments) {
            speed = std::max({speed, std::abs(std::abs(s.dir) - 1.0),
                              std::abs((s.t_end - s.t_start) - std::abs(s.end - s.start))});
        }
        for (int j = 0; j < 5; ++j) equiv = std::max(equiv, rotation_equivariance(z0, d, j, cfg.billiard_events, K));
        try {
            const LiftedTrajectory L = lift_trajectory(tr, K, cfg.tol_geo);
            straight = std::max(straight, L.straightness);
            continuity = std::max(continuity, L.continuity);
            ++lifted;
        } catch (const CenterCrossing&) {
        }
    }
    e.checks.push_back(below("speed_conservation", speed, 1e-12));
    e.checks.push_back(below("rotation_equivariance", equiv, 1e-9));
    e.checks.push_back(below("development_straightness", straight, 1e-8));
    e.checks.push_back(below("development_continuity", continuity, 1e-8));
    e.checks.push_back(equals("lifted_trajectories", lifted, 20));
    finish(e, t);
    return e;
}

LedgerEntry ac09(const Config&) {
    LedgerEntry e{"AC09", "quotient_surface",
                  "The triangulation has 10/20/10 cells, pairing orbits {3, 2}, 8 interior-edge orbits and cone angles at both vertices"};
    e.budget_seconds = 0.1;
    Timer t;
    const TriangulationCensus c = triangulate();
    e.checks.push_back(equals("cells_faces_edges_vertices",
                              json::array({c.faces.size(), c.edges.size(), c.vertices.size()}), json::array({10, 20, 10})));
    e.checks.push_back(equals("pairing_orbit_sizes", c.pairing.orbit_sizes(), json::array({3, 2})));
    e.checks.push_back(equals("interior_edge_orbits", c.oriented_edge_orbits, 8));
    json cones = json::array();
    for (const auto& a : c.cone_angles) cones.push_back(a.vertex_orbit + " = " + std::to_string(a.total.num) + "pi/" + std::to_string(a.total.den));
    e.checks.push_back({"cone_angles_present", c.cone_angles.size() == 2, cones, "2 vertex orbits"});
    finish(e, t);
    return e;
}

LedgerEntry ac10(const Config& cfg) {
    LedgerEntry e{"AC10", "affine_tiling",
                  "Apothem 1/2, tau commutation, and a depth-3 patch that covers, is invariant, free, and has K as fundamental domain"};
    e.budget_seconds = 30.0;
    Timer t;
    e.checks.push_back(below("apothem_residual", std::abs(apothem() - 0.5), 1e-12));

    double comm = 0;
    bool exact = true;
    const std::array<Complex, 3> probes{{{0.3, 0.1}, {-0.7, 0.45}, {1.1, -0.2}}};
    for (int k = 0; k < 5; ++k) {
        for (int l = 0; l < 5; ++l) {
            const auto lhs = multiply(tau((k + 2 * l) % 5), MotionGroupElement::rotation(l));
            const auto rhs = multiply(MotionGroupElement::rotation(l), tau(k));
            exact = exact && lhs == rhs;
            for (Complex z : probes) comm = std::max(comm, std::abs(lhs.apply(z) - rhs.apply(z)));
        }
    }
    e.checks.push_back(below("commutation_residual", comm, 1e-12));
    e.checks.push_back({"commutation_exact", exact, exact, "all 25 (k, l)"});

    const TilingPatch patch = generate_patch(3);
    TilingCheckOptions opt;
    opt.samples = cfg.tiling_samples;
    opt.word_length = cfg.tiling_word_length;
    opt.seed = cfg.seed;
    auto add = [&](const CheckReport& r, std::initializer_list<const char*> names) {
        for (const auto& item : r.items) {
            for (const char* n : names) {
                if (item.name == n) e.checks.push_back({item.name, item.pass, item.measured, "0 counterexamples"});
            }
        }
    };
    const CheckReport cov = coverage_check(patch, 500, 0.9, cfg.seed);
    add(cov, {"coverage"});
    const CheckReport inv = invariance_freeness_checks(patch, opt);
    add(inv, {"vplus_invariance", "freeness"});
    const CheckReport fd = fundamental_domain_check(patch, opt);
    add(fd, {"fundamental_domain_existence", "fundamental_domain_uniqueness"});
    for (const auto& item : fd.items)
        if (!item.pass) e.note += item.name + ": " + item.witness + ". ";
    for (const auto& item : inv.items)
        if (item.name == "properness_separation" || item.name == "fixed_points_off_vplus")
            e.note += "info " + item.name + (item.pass ? " pass" : " fail") + ": " + item.witness + ". ";
    finish(e, t);
    return e;
}

using Runner = LedgerEntry (*)(const Config&);
constexpr std::array<Runner, 10> kRunners{ac01, ac02, ac03, ac04, ac05, ac06, ac07, ac08, ac09, ac10};

} // namespace

LedgerEntry run_criterion(int index, const Config& cfg) {
    if (index < 1 || index > 10) throw InvalidArgument("criterion index must lie in 1..10");
    try {
        return kRunners[index - 1](cfg);
    } catch (const Error& ex) {
        LedgerEntry e;
        char id[8];
        std::snprintf(id, sizeof id, "AC%02d", index);
        e.id = id;
        e.module = "unknown";
        e.claim = "criterion raised an error";
        e.checks.push_back({"exception", false, ex.what(), "none"});
        e.note = ex.what();
        return e;
    }
}

VerifyLedger verify(const Config& cfg, const std::string& module_filter) {
    static const std::array<const char*, 10> modules{"geometry_core",        "geometry_core",   "conformal_map",
                                                     "conformal_map",        "covering_surface", "covering_surface",
                                                     "flat_metric_dynamics", "billiards",        "quotient_surface",
                                                     "affine_tiling"};
    if (!module_filter.empty() &&
        std::find(verify_modules().begin(), verify_modules().end(), module_filter) == verify_modules().end())
        throw InvalidArgument("unknown module '" + module_filter + "'");
    VerifyLedger ledger;
    for (int i = 1; i <= 10; ++i) {
        // The genus criterion compares against the quotient triangulation, so
        // it belongs to both modules.
        const bool selected = module_filter.empty() || module_filter == modules[i - 1] ||
                              (i == 6 && module_filter == "quotient_surface");
        if (selected) ledger.entries.push_back(run_criterion(i, cfg));
    }
    std::sort(ledger.entries.begin(), ledger.entries.end(),
              [](const LedgerEntry& a, const LedgerEntry& b) { return a.id < b.id; });
    return ledger;
}

json to_json(const LedgerEntry& e) {
    json checks = json::array();
    for (const auto& c : e.checks)
        checks.push_back({{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"measured", c.measured},
                          {"tolerance", c.tolerance}});
    json measured = json::object();
    std::string tolerance;
    for (const auto& c : e.checks) {
        if (c.name == "runtime") continue;
        measured[c.name] = c.measured;
        tolerance += (tolerance.empty() ? "" : "; ") + c.name + " " + c.tolerance;
    }
    json out{{"id", e.id},           {"module", e.module},   {"paper_ref", e.claim},
             {"status", e.pass ? "pass" : "fail"}, {"measured", measured}, {"tolerance", tolerance},
             {"checks", checks},     {"seconds", e.seconds}, {"budget_seconds", e.budget_seconds}};
    if (!e.note.empty()) out["note"] = e.note;
    return out;
}

json to_json(const VerifyLedger& ledger) {
    json entries = json::array();
    for (const auto& e : ledger.entries) entries.push_back(to_json(e));
    return {{"entries", entries}, {"all_pass", ledger.all_pass()}};
}

} // namespace icosa

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "icosa/billiards.hpp"
#include "icosa/config.hpp"
#include "icosa/conformal.hpp"
#include "icosa/covering.hpp"
#include "icosa/errors.hpp"
#include "icosa/metric.hpp"
#include "icosa/quotient.hpp"
#include "icosa/svg.hpp"
#include "icosa/tiling.hpp"
#include "icosa/verify.hpp"
#include "json.hpp"

using namespace icosa;
using nlohmann::json;

namespace {

json cjson(Complex z) { return json::array({z.real(), z.imag()}); }

Complex parse_complex(const std::string& s) {
    const auto comma = s.find(',');
    try {
        std::size_t used = 0;
        if (comma == std::string::npos) {
            double re = std::stod(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return {re, 0.0};
        }
        const std::string a = s.substr(0, comma), b = s.substr(comma + 1);
        double re = std::stod(a, &used);
        if (used != a.size()) throw std::invalid_argument(s);
        double im = std::stod(b, &used);
        if (used != b.size()) throw std::invalid_argument(s);
        return {re, im};
    } catch (const std::logic_error&) {
        throw InvalidArgument("expected RE,IM but got '" + s + "'");
    }
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write " + path);
    out << text;
}

struct Globals {
    std::string config_path, json_path;
    std::optional<double> tol_geo, quad_target;
    std::optional<int> quad_nodes;
    std::optional<std::string> quad_kind;
    std::optional<std::uint64_t> seed;

    Config config() const {
        Config c = config_path.empty() ? Config{} : Config::load(config_path);
        if (tol_geo) c.set("tol_geo", std::to_string(*tol_geo));
        if (quad_kind) c.set("quadrature.kind", *quad_kind);
        if (quad_nodes) c.set("quadrature.nodes", std::to_string(*quad_nodes));
        if (quad_target) {
            c.quadrature.target_abs_err = *quad_target;
            c.quadrature.validate();
        }
        if (seed) c.seed = *seed;
        return c;
    }

    void emit(const json& j) const {
        if (json_path.empty())
            std::cout << j.dump(2) << "\n";
        else
            write_text(json_path, j.dump(2) + "\n");
    }
};

json star_json(const StarPolygon& K) {
    json verts = json::array(), edges = json::array(), lines = json::array();
    for (int i = 0; i < 10; ++i) {
        verts.push_back({{"index", i},
                         {"class", StarPolygon::vertex_class(i) == VertexClass::Inner ? "inner" : "outer"},
                         {"z", cjson(K.vertices[i])}});
        edges.push_back({{"index", i}, {"from", i}, {"to", (i + 1) % 10}, {"line", K.line_of_edge(i)}});
    }
    for (int k = 0; k < 5; ++k)
        lines.push_back({{"index", k},
                         {"normal", cjson(K.edge_lines[k].normal)},
                         {"offset", K.edge_lines[k].offset},
                         {"edges", {K.edge_lines[k].edges[0], K.edge_lines[k].edges[1]}}});
    const TriangleT T = build_triangle();
    json tri{{"O", cjson(T.O)}, {"A", cjson(T.A)}, {"B", cjson(T.B)}, {"sides", {T.a, T.b, T.c}},
             {"angles_over_pi", {T.alpha.num * 1.0 / T.alpha.den, T.beta.num * 1.0 / T.beta.den, T.gamma.num * 1.0 / T.gamma.den}}};
    return {{"center", cjson(K.center)}, {"vertices", verts}, {"edges", edges}, {"lines", lines}, {"triangle", tri}};
}

json trajectory_json(const Trajectory& t) {
    json segs = json::array(), evs = json::array();
    for (const auto& s : t.segments)
        segs.push_back({{"start", cjson(s.start)}, {"end", cjson(s.end)}, {"dir", cjson(s.dir)}, {"t_start", s.t_start},
                        {"t_end", s.t_end}});
    for (const auto& e : t.events)
        evs.push_back({{"kind", e.kind == TrajectoryEvent::Kind::Reflect ? "reflect" : "reverse"},
                       {e.kind == TrajectoryEvent::Kind::Reflect ? "edge" : "vertex", e.id},
                       {"point", cjson(e.point)}});
    return {{"segments", segs}, {"events", evs}, {"total_time", t.total_time()}};
}

json genus_json(int& exit_code) {
    const auto reports = ramification_report(0.1);
    json pts = json::array();
    for (const auto& r : reports) {
        const auto s = r.permutation.as_shift();
        pts.push_back({{"point", to_string(r.point)}, {"local_degree", r.local_degree}, {"cycle_type", r.cycle_type},
                       {"ramification_index", r.ramification_index}, {"shift", s ? json(*s) : json(nullptr)}});
    }
    const int r = total_ramification(reports);
    json out{{"per_point", pts}, {"total_r", r}};
    int g = -1;
    try {
        g = genus_from_ramification(r);
        out["genus_rh"] = g;
    } catch (const NonIntegralGenus& e) {
        out["genus_rh"] = nullptr;
        out["genus_rh_error"] = e.what();
    }
    try {
        const EulerResult q = quotient_euler_genus();
        out["genus_triangulation"] = q.genus;
        out["match"] = q.genus == g;
    } catch (const CellCountMismatch& e) {
        out["genus_triangulation"] = nullptr;
        out["triangulation_error"] = e.what();
        out["match"] = false;
    }
    const LiftedCellCount lc = lifted_triangulation(reports);
    out["lifted_triangulation"] = {{"V", lc.vertices}, {"E", lc.edges}, {"F", lc.faces}, {"chi", lc.euler}, {"genus", lc.genus}};
    if (!out["match"].get<bool>()) exit_code = 1;
    return out;
}

json census_json() {
    const TriangulationCensus c = triangulate();
    auto cells = [](const std::vector<Cell>& cs) {
        json a = json::array();
        for (const auto& x : cs) {
            json pts = json::array();
            for (Complex p : x.points) pts.push_back(cjson(p));
            a.push_back({{"label", x.label}, {"points", pts}, {"orbit", x.orbit}});
        }
        return a;
    };
    json pairs = json::array();
    for (const auto& p : c.pairing.pairs)
        pairs.push_back({{"label", std::string(1, p.label)}, {"edges", {p.first, p.second}}, {"reflection", p.reflection}});
    json cones = json::array();
    for (const auto& a : c.cone_angles)
        cones.push_back({{"vertex_orbit", a.vertex_orbit}, {"total_over_pi", {a.total.num, a.total.den}}});
    json out{{"faces", cells(c.faces)},
             {"edges", cells(c.edges)},
             {"vertices", cells(c.vertices)},
             {"pairs", pairs},
             {"pair_orbit_sizes", c.pairing.orbit_sizes()},
             {"face_orbits", c.face_orbits},
             {"vertex_orbits", c.vertex_orbits},
             {"oriented_edge_orbits", c.oriented_edge_orbits},
             {"vertex_orbit_sizes", c.vertex_orbit_sizes},
             {"cone_angles", cones}};
    for (bool with_center : {true, false}) {
        const QuotientComplex q = quotient_complex(with_center);
        out[with_center ? "quotient_with_center" : "quotient_without_center"] = {
            {"V", q.vertices}, {"E", q.edges}, {"F", q.faces}, {"chi", q.chi()}, {"boundary_consistent", q.boundary_consistent}};
    }
    return out;
}

json report_json(const CheckReport& r) {
    json items = json::array();
    for (const auto& i : r.items)
        items.push_back({{"name", i.name}, {"status", i.pass ? "pass" : "fail"}, {"measured", i.measured}, {"witness", i.witness}});
    return items;
}

bool is_usage_error(const Error& e) {
    return dynamic_cast<const InvalidArgument*>(&e) || dynamic_cast<const InvalidStart*>(&e) ||
           dynamic_cast<const SingularFiber*>(&e) || dynamic_cast<const PoleError*>(&e);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Flat geometry of the (1,2,7) star: conformal map, covering, billiards, quotient and tiling"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--config", g.config_path, "key = value config file");
    app.add_option("--json", g.json_path, "write JSON to this path instead of stdout");
    app.add_option("--tol-geo", g.tol_geo, "point classification tolerance");
    app.add_option("--quadrature", g.quad_kind, "gauss-jacobi-split or tanh-sinh");
    app.add_option("--quad-nodes", g.quad_nodes, "nodes per Jacobi panel");
    app.add_option("--quad-target", g.quad_target, "absolute quadrature error target");
    app.add_option("--seed", g.seed, "base seed for sampled checks");

    std::string svg;
    auto* star_cmd = app.add_subcommand("star", "star geometry");
    star_cmd->add_option("--svg", svg, "SVG output path");

    auto* map_cmd = app.add_subcommand("map", "Schwarz-Christoffel map");
    map_cmd->require_subcommand(1);
    std::string xi_s = "0.3,0.4";
    int sheet = 0, grid_n = 10;
    auto* map_eval = map_cmd->add_subcommand("eval", "evaluate F_T, eta and k");
    map_eval->add_option("--xi", xi_s, "RE,IM")->required();
    map_eval->add_option("--sheet", sheet, "sheet 0..9");
    auto* map_grid = map_cmd->add_subcommand("grid", "image of an upper half-plane grid");
    map_grid->add_option("--n", grid_n, "grid lines per family");
    map_grid->add_option("--svg", svg, "SVG output path");

    app.add_subcommand("genus", "genus by Riemann-Hurwitz and by triangulation");

    double theta = 0.0, t_flow = 0.1;
    int steps = 0, samples = 20;
    auto* flow_cmd = app.add_subcommand("flow", "flow of e^{i theta} X");
    flow_cmd->add_option("--xi", xi_s, "RE,IM")->required();
    flow_cmd->add_option("--sheet", sheet, "sheet 0..9");
    flow_cmd->add_option("--theta", theta, "direction angle in radians");
    flow_cmd->add_option("--t", t_flow, "flow time");
    flow_cmd->add_option("--steps", steps, "RK4 steps (0 = automatic)");
    flow_cmd->add_option("--samples", samples, "number of reported samples");

    std::string z0_s = "0.1,0.05";
    int events = 10;
    bool lift = false;
    auto* bil_cmd = app.add_subcommand("billiard", "billiard trajectory in the star");
    bil_cmd->add_option("--z0", z0_s, "RE,IM")->required();
    bil_cmd->add_option("--theta", theta, "direction angle in radians");
    bil_cmd->add_option("--events", events, "number of events");
    bil_cmd->add_option("--svg", svg, "SVG output path");
    bil_cmd->add_flag("--lift", lift, "add lift tags and the development check");

    int depth = 3;
    bool check = false;
    auto* til_cmd = app.add_subcommand("tiling", "affine tiling patch");
    til_cmd->add_option("--depth", depth, "patch depth 0..6");
    til_cmd->add_option("--svg", svg, "SVG output path");
    til_cmd->add_flag("--check", check, "run the coverage, invariance, freeness and fundamental-domain checks");

    bool dump = false;
    auto* quo_cmd = app.add_subcommand("quotient", "quotient census");
    quo_cmd->add_flag("--dump", dump, "emit the full census");

    std::string module;
    auto* ver_cmd = app.add_subcommand("verify", "run the acceptance ledger");
    ver_cmd->add_option("--module", module, "restrict to one module");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    int exit_code = 0;
    try {
        const Config cfg = g.config();
        if (*star_cmd) {
            const StarPolygon& K = star();
            g.emit(star_json(K));
            if (!svg.empty()) write_text(svg, svg_star(K));
        } else if (*map_eval) {
            const Complex xi = parse_complex(xi_s);
            const QuadEstimate est = F_T_estimate(xi, cfg.quadrature);
            g.emit({{"xi", cjson(xi)},
                    {"sheet", ((sheet % 10) + 10) % 10},
                    {"F_T", cjson(est.value)},
                    {"error_estimate", est.error},
                    {"eta", cjson(eta(xi, sheet))},
                    {"k", compute_k(cfg.quadrature)}});
        } else if (*map_grid) {
            const std::string doc = svg_map_grid(grid_n);
            const TriangleT T = build_triangle();
            int outside = 0, total = 0;
            for (int i = 0; i <= grid_n; ++i)
                for (int j = 1; j <= grid_n; ++j) {
                    ++total;
                    if (!in_closed_triangle(F_T({-3.0 + 6.0 * i / grid_n, 3.0 * j / grid_n}, cfg.quadrature), T, cfg.tol_geo))
                        ++outside;
                }
            g.emit({{"n", grid_n}, {"grid_points", total}, {"outside_T", outside}});
            if (!svg.empty()) write_text(svg, doc);
            if (outside) exit_code = 1;
        } else if (app.got_subcommand("genus")) {
            g.emit(genus_json(exit_code));
        } else if (*flow_cmd) {
            const SheetedPoint p0 = make_sheeted(parse_complex(xi_s), sheet);
            FlowOptions opt;
            opt.alpha = std::polar(1.0, theta);
            opt.steps = steps;
            const auto path = flow_X_path(p0, t_flow, opt, cfg.quadrature);
            json pts = json::array();
            const std::size_t n = path.size() - 1;
            const int m = std::max(1, samples);
            for (int s = 0; s <= m; ++s) {
                const std::size_t i = n * static_cast<std::size_t>(s) / static_cast<std::size_t>(m);
                pts.push_back({{"t", t_flow * static_cast<double>(i) / static_cast<double>(std::max<std::size_t>(n, 1))},
                               {"xi", cjson(path[i].xi)},
                               {"sheet", path[i].sheet},
                               {"delta", cjson(delta(path[i], cfg.quadrature))}});
                if (n == 0) break;
            }
            g.emit({{"alpha", cjson(opt.alpha)}, {"t", t_flow}, {"steps", n}, {"samples", pts}});
        } else if (*bil_cmd) {
            const Trajectory tr = simulate(parse_complex(z0_s), std::polar(1.0, theta), events, star(), cfg.tol_geo);
            json out = trajectory_json(tr);
            if (lift) {
                const LiftedTrajectory L = lift_trajectory(tr, star(), cfg.tol_geo);
                json tags = json::array();
                for (const auto& tag : L.tags)
                    tags.push_back({{"event", tag.event},
                                    {"reflection", tag.reflection < 0 ? json(nullptr) : json(tag.reflection)},
                                    {"accumulated", {{"j", tag.accumulated.j}, {"l", tag.accumulated.l}}},
                                    {"sector", tag.sector}});
                out["lift"] = {{"tags", tags},
                               {"straightness", L.straightness},
                               {"continuity", L.continuity},
                               {"straight", L.straightness < 1e-8 && L.continuity < 1e-8}};
                if (!(L.straightness < 1e-8 && L.continuity < 1e-8)) exit_code = 1;
            }
            g.emit(out);
            if (!svg.empty()) write_text(svg, svg_billiard(tr));
        } else if (*til_cmd) {
            const TilingPatch patch = generate_patch(depth);
            json centers = json::array(), vp = json::array();
            for (const auto& c : patch.centers) centers.push_back(c.c);
            for (const auto& v : patch.vpoints) vp.push_back(v.c);
            json out{{"depth", depth}, {"basis", "integer coordinates in 1, eps, eps^2, eps^3"},
                     {"centers", centers}, {"vplus_points", vp}};
            if (check) {
                TilingCheckOptions opt;
                opt.samples = cfg.tiling_samples;
                opt.word_length = cfg.tiling_word_length;
                opt.seed = cfg.seed;
                json items = json::array();
                bool pass = true;
                const double radius = std::max(0.5, depth * apothem());
                for (const CheckReport& r : {coverage_check(patch, 500, radius, cfg.seed), invariance_freeness_checks(patch, opt),
                                             fundamental_domain_check(patch, opt)}) {
                    for (auto& j : report_json(r)) items.push_back(j);
                    for (const auto& i : r.items)
                        if (i.name != "properness_separation" && i.name != "fixed_points_off_vplus") pass = pass && i.pass;
                }
                out["checks"] = items;
                out["all_pass"] = pass;
                if (!pass) exit_code = 1;
            }
            g.emit(out);
            if (!svg.empty()) write_text(svg, svg_tiling(patch));
        } else if (*quo_cmd) {
            json out;
            if (dump) {
                out = census_json();
            } else {
                const TriangulationCensus c = triangulate();
                out = {{"pair_orbit_sizes", c.pairing.orbit_sizes()},
                       {"face_orbits", c.face_orbits},
                       {"vertex_orbits", c.vertex_orbits},
                       {"oriented_edge_orbits", c.oriented_edge_orbits}};
            }
            try {
                const EulerResult r = quotient_euler_genus();
                out["euler"] = {{"chi", r.chi}, {"genus", r.genus}};
            } catch (const CellCountMismatch& e) {
                out["euler"] = {{"error", e.what()}};
                exit_code = 1;
            }
            g.emit(out);
        } else if (*ver_cmd) {
            const VerifyLedger ledger = verify(cfg, module);
            g.emit(to_json(ledger));
            for (const auto& e : ledger.entries)
                std::cerr << e.id << " " << (e.pass ? "PASS" : "FAIL") << " " << e.claim << "\n";
            if (!ledger.all_pass()) exit_code = 1;
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return is_usage_error(e) ? 2 : 1;
    }
    return exit_code;
}

#include "icosa/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "icosa/errors.hpp"

namespace icosa {

std::array<double, 3> prevertices() { return {0.0, inner_radius(), outer_radius()}; }

std::array<double, 3> integrand_exponents() { return {-0.8, -0.3, -0.9}; }

Complex f(Complex xi) {
    const double a = inner_radius(), b = outer_radius();
    return std::pow(xi, 8) * std::pow(xi - a, 3) * std::pow(xi - b, 9);
}

Complex f_prime(Complex xi) {
    const double a = inner_radius(), b = outer_radius();
    Complex u = xi - a, v = xi - b;
    return std::pow(xi, 7) * u * u * std::pow(v, 8) * (8.0 * u * v + 3.0 * xi * v + 9.0 * xi * u);
}

namespace {

// Pin the sign of a zero imaginary part so that std::pow picks the boundary
// value from the upper half-plane.
Complex upper_side(Complex z) { return z.imag() == 0.0 ? Complex{z.real(), 0.0} : z; }
Complex lower_side(Complex z) { return z.imag() == 0.0 ? Complex{z.real(), -0.0} : z; }

// Product of the three factors raised to the given exponents. `near` names a
// prevertex whose offset w = xi - s is known exactly; that factor is built
// from w instead of from xi.
Complex branch_product(Complex xi, int near, Complex w, double e0, double e1, double e2) {
    const double a = inner_radius(), b = outer_radius();
    Complex x0 = near == 0 ? w : xi;
    Complex x1 = near == 1 ? -w : a - xi;
    Complex x2 = near == 2 ? -w : b - xi;
    return std::pow(upper_side(x0), e0) * std::pow(lower_side(x1), e1) * std::pow(lower_side(x2), e2);
}

Complex inv_eta0(Complex xi, int near, Complex w) { return branch_product(xi, near, w, -0.8, -0.3, -0.9); }

} // namespace

Complex eta_principal(Complex xi) { return branch_product(xi, -1, {}, 0.8, 0.3, 0.9); }

int singular_index(Complex xi, double tol) {
    const auto s = prevertices();
    for (int i = 0; i < 3; ++i)
        if (std::abs(xi - s[i]) <= tol) return i;
    return -1;
}

Complex eta(Complex xi, int sheet) {
    if (singular_index(xi) >= 0) throw SingularFiber("eta is not defined over a prevertex");
    int k = ((sheet % 10) + 10) % 10;
    return std::polar(1.0, kPi * k / 5.0) * eta_principal(xi);
}

SheetedPoint make_sheeted(Complex xi, int sheet) {
    if (singular_index(xi) >= 0) throw SingularFiber("point lies over a prevertex");
    return {xi, ((sheet % 10) + 10) % 10};
}

namespace {

int exact_singular(Complex z) {
    const auto s = prevertices();
    for (int i = 0; i < 3; ++i)
        if (z == Complex{s[i], 0.0}) return i;
    return -1;
}

// Distance from prevertex i to the nearest other prevertex.
double isolation(int i) {
    const auto s = prevertices();
    double d = 1e300;
    for (int j = 0; j < 3; ++j)
        if (j != i) d = std::min(d, std::abs(s[i] - s[j]));
    return d;
}

QuadEstimate regular_piece(Complex p, Complex q, double tol) {
    PanelIntegrand h = [](Complex z, Complex, Complex) { return inv_eta0(z, -1, {}); };
    AdaptiveResult r = kronrod_panel(h, p, q, tol);
    if (r.ok) return r.estimate;
    AdaptiveResult ts = tanh_sinh_panel(h, p, q, tol);
    if (ts.ok) return ts.estimate;
    throw QuadratureFailure("regular panel did not reach the target error");
}

QuadEstimate segment_jacobi(Complex p, Complex q, const QuadratureRule& rule, double tol) {
    const auto ex = integrand_exponents();
    const int ip = exact_singular(p), iq = exact_singular(q);
    const double len = std::abs(q - p);
    if (len == 0.0) return {};
    if (ip >= 0 && iq >= 0) {
        PanelIntegrand h = [ip, iq](Complex z, Complex fp, Complex fq) {
            // Both ends are singular; the nearer end supplies the exact offset.
            return std::abs(fp) <= std::abs(fq) ? inv_eta0(z, ip, fp) : inv_eta0(z, iq, fq);
        };
        return jacobi_panel(h, p, q, ex[ip], ex[iq], rule, tol);
    }
    const Complex d = q - p;
    double tp = ip >= 0 ? std::min(0.5 * isolation(ip) / len, 1.0) : 0.0;
    double tq = iq >= 0 ? std::max(1.0 - 0.5 * isolation(iq) / len, 0.0) : 1.0;
    QuadEstimate total;
    if (ip >= 0) {
        Complex m = tp >= 1.0 ? q : p + d * tp;
        PanelIntegrand h = [ip](Complex z, Complex fp, Complex) { return inv_eta0(z, ip, fp); };
        total += jacobi_panel(h, p, m, ex[ip], 0.0, rule, tol / 3);
        if (tp >= 1.0) return total;
    }
    Complex m1 = p + d * tp;
    Complex m2 = iq >= 0 ? (tq <= 0.0 ? p : p + d * tq) : q;
    if (iq >= 0 && tq <= tp) m2 = m1;
    if (m2 != m1) total += regular_piece(m1, m2, tol / 3);
    if (iq >= 0) {
        PanelIntegrand h = [iq](Complex z, Complex, Complex fq) { return inv_eta0(z, iq, fq); };
        total += jacobi_panel(h, m2, q, 0.0, ex[iq], rule, tol / 3);
    }
    return total;
}

QuadEstimate segment_tanh_sinh(Complex p, Complex q, double tol) {
    const int ip = exact_singular(p), iq = exact_singular(q);
    PanelIntegrand h = [ip, iq](Complex z, Complex fp, Complex fq) {
        if (ip >= 0 && (iq < 0 || std::abs(fp) <= std::abs(fq))) return inv_eta0(z, ip, fp);
        if (iq >= 0) return inv_eta0(z, iq, fq);
        return inv_eta0(z, -1, {});
    };
    AdaptiveResult r = tanh_sinh_panel(h, p, q, tol);
    if (!r.ok) throw QuadratureFailure("tanh-sinh panel did not reach the target error");
    return r.estimate;
}

} // namespace

QuadEstimate integrate_inv_eta(const std::vector<Complex>& path, const QuadratureRule& rule) {
    rule.validate();
    if (path.size() < 2) return {};
    const double tol = rule.target_abs_err / (4.0 * static_cast<double>(path.size() - 1));
    QuadEstimate total;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (rule.kind == QuadratureRule::Kind::TanhSinh)
            total += segment_tanh_sinh(path[i], path[i + 1], tol);
        else
            total += segment_jacobi(path[i], path[i + 1], rule, tol);
    }
    if (!(total.error <= rule.target_abs_err))
        throw QuadratureFailure("estimated error " + std::to_string(total.error) + " exceeds target " +
                                std::to_string(rule.target_abs_err));
    return total;
}

QuadEstimate calF_a(const QuadratureRule& rule) { return integrate_inv_eta({0.0, inner_radius()}, rule); }

double compute_k(const QuadratureRule& rule) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, double>, double> cache;
    const auto key = std::make_tuple(static_cast<int>(rule.kind), rule.nodes_per_panel, rule.target_abs_err);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const QuadEstimate F = calF_a(rule);
    const double k = inner_radius() / F.value.real();
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, k);
    return k;
}

namespace {

double segment_distance(Complex p, Complex q, Complex z) {
    Complex d = q - p;
    double t = std::clamp(((z - p) * std::conj(d)).real() / std::norm(d), 0.0, 1.0);
    return std::abs(z - (p + d * t));
}

constexpr double kClearance = 0.05;

// Along the real axis through every prevertex below x. A point just below a
// or b is reached from that prevertex, so no panel ends next to a singularity.
std::vector<Complex> real_path_to(double x) {
    std::vector<Complex> path{0.0};
    for (double s : {inner_radius(), outer_radius()}) {
        if (s < x || (s > x && s - x < kClearance && x > 0.0)) path.emplace_back(s, 0.0);
        if (s >= x) break;
    }
    path.emplace_back(x, 0.0);
    return path;
}

} // namespace

std::vector<Complex> map_path(Complex xi) {
    if (xi.imag() < 0.0) throw InvalidArgument("F_T needs Im xi >= 0");
    if (singular_index(xi) >= 0) throw SingularFiber("F_T is evaluated at a prevertex; use F_T_vertex");
    if (xi.imag() == 0.0) return real_path_to(xi.real());
    const auto s = prevertices();
    for (int i = 1; i < 3; ++i) {
        if (std::abs(xi - s[i]) < kClearance) {
            auto path = real_path_to(s[i]);
            path.push_back(xi);
            return path;
        }
    }
    const Complex zero{0.0, 0.0};
    if (segment_distance(zero, xi, s[1]) > kClearance && segment_distance(zero, xi, s[2]) > kClearance)
        return {zero, xi};
    return {zero, Complex{0.0, std::max(1.0, std::abs(xi))}, xi};
}

QuadEstimate F_T_estimate(Complex xi, const QuadratureRule& rule) {
    const double k = compute_k(rule);
    QuadEstimate I = integrate_inv_eta(map_path(xi), rule);
    I.value *= k;
    I.error *= k;
    return I;
}

Complex F_T(Complex xi, const QuadratureRule& rule) { return F_T_estimate(xi, rule).value; }

Complex F_T_vertex(int i, const QuadratureRule& rule) {
    if (i < 0 || i > 2) throw InvalidArgument("prevertex index must be 0, 1 or 2");
    if (i == 0) return {0.0, 0.0};
    return compute_k(rule) * integrate_inv_eta(real_path_to(prevertices()[i]), rule).value;
}

double interior_angle(int i, double r, const QuadratureRule& rule) {
    const double s = prevertices()[i];
    const Complex c = F_T_vertex(i, rule);
    const Complex left = F_T(Complex{s - r, 0.0}, rule) - c;
    const Complex right = F_T(Complex{s + r, 0.0}, rule) - c;
    return std::abs(std::arg(left * std::conj(right)));
}

Complex F_Q(Complex xi, const QuadratureRule& rule) {
    if (xi.imag() >= 0.0) return F_T(xi, rule);
    return std::conj(F_T(std::conj(xi), rule));
}

Complex F_Kstar(Complex xi, int nu, const QuadratureRule& rule) { return epsilon_pow(nu) * F_Q(xi, rule); }

} // namespace icosa

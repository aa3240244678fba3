#include "icosa/metric.hpp"

#include <cmath>

#include "icosa/errors.hpp"

namespace icosa {

Complex TangentVector::d_eta() const {
    const Complex e = eta(base.xi, base.sheet);
    return 0.1 * f_prime(base.xi) / std::pow(e, 9) * d_xi;
}

double TangentVector::tangency_residual() const {
    const Complex e = eta(base.xi, base.sheet);
    const Complex lhs = e * d_eta();
    const Complex rhs = 0.1 * f_prime(base.xi) / std::pow(e, 8) * d_xi;
    const double scale = std::max(std::abs(lhs) + std::abs(rhs), 1e-300);
    return std::abs(lhs - rhs) / scale;
}

double gamma(Complex v, Complex w) { return (v * std::conj(w)).real(); }

double Gamma(const SheetedPoint& p, const TangentVector& v, const TangentVector& w, const QuadratureRule& rule) {
    const double k = compute_k(rule);
    const double n = std::norm(eta(p.xi, p.sheet));
    return k * k / n * (v.d_xi * std::conj(w.d_xi)).real();
}

TangentVector X(const SheetedPoint& p, const QuadratureRule& rule) {
    return {p, eta(p.xi, p.sheet) / compute_k(rule)};
}

TangentVector push_generator(SheetGenerator g, const TangentVector& v) {
    SheetedPoint q = apply_generator(g, v.base);
    return {q, g == SheetGenerator::R ? v.d_xi : std::conj(v.d_xi)};
}

Complex delta(const SheetedPoint& p, const QuadratureRule& rule) { return F_Q(p.xi, rule); }

int sector_of_sheet(int sheet) { return (((3 * sheet) % 5) + 5) % 5; }

Complex delta_star(const SheetedPoint& p, const QuadratureRule& rule) {
    return F_Kstar(p.xi, sector_of_sheet(p.sheet), rule);
}

namespace {

// d F_Q / d xi = k / eta0 in both half-planes (F_Q is holomorphic off the cuts).
Complex map_derivative(Complex xi, const QuadratureRule& rule) {
    const double k = compute_k(rule);
    if (xi.imag() >= 0.0) return k / eta_principal(xi);
    return std::conj(k / eta_principal(std::conj(xi)));
}

} // namespace

Complex push_delta(const TangentVector& v, const QuadratureRule& rule) {
    if (singular_index(v.base.xi) >= 0) throw SingularFiber("no tangent space over a prevertex");
    return map_derivative(v.base.xi, rule) * v.d_xi;
}

Complex push_delta_star(const TangentVector& v, const QuadratureRule& rule) {
    return epsilon_pow(sector_of_sheet(v.base.sheet)) * push_delta(v, rule);
}

Complex push_delta_numeric(const TangentVector& v, double h, const QuadratureRule& rule) {
    const Complex xi = v.base.xi, d = v.d_xi;
    auto F = [&](double s) { return F_Q(xi + s * h * d, rule); };
    return (-F(2) + 8.0 * F(1) - 8.0 * F(-1) + F(-2)) / (12.0 * h);
}

namespace {

Complex field(Complex xi, int sheet, Complex alpha, double k, double singular_tol) {
    if (xi.imag() <= 0.0) throw LeftDomain("trajectory reached the real axis at xi = " + std::to_string(xi.real()));
    if (singular_index(xi, singular_tol) >= 0) throw LeftDomain("trajectory reached a singular fiber");
    return alpha * eta(xi, sheet) / k;
}

} // namespace

std::vector<SheetedPoint> flow_X_path(const SheetedPoint& p0, double t, const FlowOptions& opt,
                                      const QuadratureRule& rule) {
    if (!(p0.xi.imag() > 0.0)) throw LeftDomain("flow starts outside the open upper half-plane");
    make_sheeted(p0.xi, p0.sheet);
    std::vector<SheetedPoint> out{p0};
    if (t == 0.0) return out;
    const double k = compute_k(rule);
    const int n = opt.steps > 0 ? opt.steps : std::max(64, static_cast<int>(std::ceil(std::abs(t) * 4000.0)));
    const double h = t / n;
    Complex xi = p0.xi;
    const int s = p0.sheet;
    for (int i = 0; i < n; ++i) {
        Complex k1 = field(xi, s, opt.alpha, k, opt.singular_tol);
        Complex k2 = field(xi + 0.5 * h * k1, s, opt.alpha, k, opt.singular_tol);
        Complex k3 = field(xi + 0.5 * h * k2, s, opt.alpha, k, opt.singular_tol);
        Complex k4 = field(xi + h * k3, s, opt.alpha, k, opt.singular_tol);
        xi += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        field(xi, s, opt.alpha, k, opt.singular_tol);
        out.push_back({xi, s});
    }
    const TriangleT T = build_triangle();
    if (!in_closed_triangle(delta(out.back(), rule), T)) throw LeftDomain("image left the triangle");
    return out;
}

SheetedPoint flow_X(const SheetedPoint& p0, double t, const FlowOptions& opt, const QuadratureRule& rule) {
    return flow_X_path(p0, t, opt, rule).back();
}

} // namespace icosa

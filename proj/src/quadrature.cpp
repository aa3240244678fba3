#include "icosa/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <queue>
#include <tuple>

#include "icosa/errors.hpp"

namespace icosa {

using Complex = std::complex<double>;

void QuadratureRule::validate() const {
    if (!(target_abs_err > 0.0)) throw InvalidArgument("target_abs_err must be positive");
    if (nodes_per_panel < 4) throw InvalidArgument("nodes_per_panel must be at least 4");
}

QuadratureRule::Kind parse_quadrature_kind(const std::string& name) {
    if (name == "gauss-jacobi-split") return QuadratureRule::Kind::GaussJacobiSplit;
    if (name == "tanh-sinh") return QuadratureRule::Kind::TanhSinh;
    throw InvalidArgument("unknown quadrature kind '" + name + "'");
}

std::string to_string(QuadratureRule::Kind kind) {
    return kind == QuadratureRule::Kind::TanhSinh ? "tanh-sinh" : "gauss-jacobi-split";
}

namespace {

GaussJacobiNodes golub_welsch(int n, double alpha, double beta) {
    const double ab = alpha + beta;
    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(std::max(n - 1, 0));
    diag(0) = (beta - alpha) / (ab + 2.0);
    for (int k = 1; k < n; ++k) {
        double s = 2.0 * k + ab;
        diag(k) = (beta * beta - alpha * alpha) / (s * (s + 2.0));
    }
    for (int k = 1; k < n; ++k) {
        double s = 2.0 * k + ab;
        double v;
        if (k == 1)
            v = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
        else
            v = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
        sub(k - 1) = std::sqrt(v);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw QuadratureFailure("Golub-Welsch eigenproblem did not converge");

    const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) -
                                std::lgamma(ab + 2.0));
    GaussJacobiNodes out;
    out.x.resize(n);
    out.w.resize(n);
    for (int i = 0; i < n; ++i) {
        out.x[i] = solver.eigenvalues()(i);
        double v0 = solver.eigenvectors()(0, i);
        out.w[i] = mu0 * v0 * v0;
    }
    return out;
}

} // namespace

const GaussJacobiNodes& gauss_jacobi(int n, double alpha, double beta) {
    static std::mutex mu;
    static std::map<std::tuple<int, double, double>, std::unique_ptr<GaussJacobiNodes>> cache;
    if (n < 1) throw InvalidArgument("gauss_jacobi needs n >= 1");
    if (!(alpha > -1.0) || !(beta > -1.0)) throw InvalidArgument("Jacobi exponents must exceed -1");
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{n, alpha, beta}];
    if (!slot) slot = std::make_unique<GaussJacobiNodes>(golub_welsch(n, alpha, beta));
    return *slot;
}

namespace {

Complex jacobi_sum(const PanelIntegrand& h, Complex p, Complex q, double exp_p, double exp_q, int n) {
    const auto& gj = gauss_jacobi(n, exp_q, exp_p);
    const Complex half = 0.5 * (q - p);
    Complex sum{0.0, 0.0};
    for (int i = 0; i < n; ++i) {
        const double xp = 1.0 + gj.x[i];
        const double xm = 1.0 - gj.x[i];
        Complex fp = half * xp;
        Complex fq = -half * xm;
        Complex val = h(p + fp, fp, fq);
        double weight_div = 1.0;
        if (exp_p != 0.0) weight_div *= std::pow(xp, exp_p);
        if (exp_q != 0.0) weight_div *= std::pow(xm, exp_q);
        sum += gj.w[i] * (val / weight_div);
    }
    return sum * half;
}

double rounding_floor(Complex v, int evals) { return 4.0 * DBL_EPSILON * std::abs(v) * std::sqrt(double(evals)); }

} // namespace

QuadEstimate jacobi_panel(const PanelIntegrand& h, Complex p, Complex q, double exp_p, double exp_q,
                          const QuadratureRule& rule, double tol) {
    int n = rule.nodes_per_panel;
    Complex prev = jacobi_sum(h, p, q, exp_p, exp_q, n);
    int evals = n;
    QuadEstimate est;
    while (true) {
        int n2 = 2 * n;
        Complex next = jacobi_sum(h, p, q, exp_p, exp_q, n2);
        evals += n2;
        double diff = std::abs(next - prev);
        est = {next, std::max(diff, rounding_floor(next, n2)), evals};
        if (diff <= tol || n2 >= 256) break;
        n = n2;
        prev = next;
    }
    return est;
}

namespace {

constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Piece {
    double t0, t1;
    Complex value;
    double error;
    bool operator<(const Piece& o) const { return error < o.error; }
};

Piece gk15(const PanelIntegrand& h, Complex p, Complex q, double t0, double t1) {
    const Complex d = q - p;
    const double c = 0.5 * (t0 + t1), r = 0.5 * (t1 - t0);
    auto eval = [&](double t) {
        Complex fp = d * t;
        Complex fq = -d * (1.0 - t);
        return h(p + fp, fp, fq);
    };
    Complex fc = eval(c);
    Complex kron = fc * kWgk[7];
    Complex gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        Complex f1 = eval(c - r * kXgk[j]);
        Complex f2 = eval(c + r * kXgk[j]);
        kron += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
    }
    kron *= r * d;
    gauss *= r * d;
    return {t0, t1, kron, std::abs(kron - gauss)};
}

} // namespace

AdaptiveResult kronrod_panel(const PanelIntegrand& h, Complex p, Complex q, double tol) {
    std::priority_queue<Piece> heap;
    Piece first = gk15(h, p, q, 0.0, 1.0);
    heap.push(first);
    Complex total = first.value;
    double err = first.error;
    int evals = 15;
    constexpr int kMaxPieces = 4000;
    while (err > tol && static_cast<int>(heap.size()) < kMaxPieces) {
        Piece worst = heap.top();
        heap.pop();
        double mid = 0.5 * (worst.t0 + worst.t1);
        if (mid <= worst.t0 || mid >= worst.t1) {
            heap.push(worst);
            break;
        }
        Piece l = gk15(h, p, q, worst.t0, mid);
        Piece r = gk15(h, p, q, mid, worst.t1);
        evals += 30;
        total += l.value + r.value - worst.value;
        err += l.error + r.error - worst.error;
        heap.push(l);
        heap.push(r);
    }
    // Recompute the running sums to avoid drift from the incremental updates.
    Complex sum{0.0, 0.0};
    double esum = 0.0;
    auto copy = heap;
    while (!copy.empty()) {
        sum += copy.top().value;
        esum += copy.top().error;
        copy.pop();
    }
    esum = std::max(esum, rounding_floor(sum, evals));
    return {{sum, esum, evals}, esum <= tol};
}

AdaptiveResult tanh_sinh_panel(const PanelIntegrand& h, Complex p, Complex q, double tol) {
    const Complex half = 0.5 * (q - p);
    constexpr double kHalfPi = 0.5 * std::numbers::pi;
    // One node at parameter t; 1 + x and 1 - x are formed from exponentials
    // so that points very close to either end keep full relative accuracy.
    auto term = [&](double t, bool& alive) -> Complex {
        double u = kHalfPi * std::sinh(t);
        double xp = 2.0 / (1.0 + std::exp(-2.0 * u));  // 1 + x
        double xm = 2.0 / (1.0 + std::exp(2.0 * u));   // 1 - x
        if (xp < 1e-280 || xm < 1e-280) {
            alive = false;
            return {0.0, 0.0};
        }
        double cu = std::cosh(u);
        double w = kHalfPi * std::cosh(t) / (cu * cu);
        Complex fp = half * xp;
        Complex fq = -half * xm;
        return w * h(p + fp, fp, fq);
    };
    auto sweep = [&](double step, double offset, int stride) {
        Complex s{0.0, 0.0};
        int count = 0;
        for (int sign : {1, -1}) {
            for (int j = 0;; j += stride) {
                double t = sign * (offset + j * step);
                if (t == 0.0 && sign < 0) continue;
                bool alive = true;
                Complex v = term(t, alive);
                if (!alive) break;
                s += v;
                ++count;
                if (std::abs(t) > 7.0) break;
            }
        }
        return std::make_pair(s, count);
    };

    double step = 0.5;
    auto [sum, count] = sweep(step, 0.0, 1);
    Complex prev = sum * step * half;
    int evals = count;
    for (int level = 0; level < 9; ++level) {
        step *= 0.5;
        auto [extra, c2] = sweep(2.0 * step, step, 1);
        evals += c2;
        sum += extra;
        Complex next = sum * step * half;
        double diff = std::abs(next - prev);
        if (diff <= tol && level >= 1) {
            double e = std::max(diff, rounding_floor(next, evals));
            return {{next, e, evals}, true};
        }
        prev = next;
    }
    return {{prev, std::abs(prev), evals}, false};
}

} // namespace icosa

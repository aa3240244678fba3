#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace icosa {

struct QuadratureRule {
    enum class Kind { GaussJacobiSplit, TanhSinh };

    Kind kind = Kind::GaussJacobiSplit;
    int nodes_per_panel = 24;
    double target_abs_err = 1e-12;

    // Throws InvalidArgument unless target_abs_err > 0 and nodes_per_panel >= 4.
    void validate() const;
};

QuadratureRule::Kind parse_quadrature_kind(const std::string& name);
std::string to_string(QuadratureRule::Kind kind);

struct QuadEstimate {
    std::complex<double> value{0.0, 0.0};
    double error = 0.0;
    int evaluations = 0;

    QuadEstimate& operator+=(const QuadEstimate& other) {
        value += other.value;
        error += other.error;
        evaluations += other.evaluations;
        return *this;
    }
};

// The integrand on a straight panel from p to q. It is called with the point
// z and with its offsets z - p and z - q, computed without cancellation, so a
// singular factor at either end can be formed accurately.
using PanelIntegrand =
    std::function<std::complex<double>(std::complex<double> z, std::complex<double> from_p, std::complex<double> from_q)>;

struct GaussJacobiNodes {
    std::vector<double> x;   // ascending, in (-1, 1)
    std::vector<double> w;
};

// Nodes and weights for the weight (1 - x)^alpha (1 + x)^beta on [-1, 1]
// (Golub-Welsch). Cached per (n, alpha, beta); safe to call concurrently.
const GaussJacobiNodes& gauss_jacobi(int n, double alpha, double beta);

// Integral over the panel of h, where h behaves like |z - p|^exp_p near p
// and |z - q|^exp_q near q (exponents > -1, 0 for a regular end). The
// Jacobi weight absorbs both powers. Doubles the node count from
// rule.nodes_per_panel until two successive sums agree to `tol`, up to 256.
QuadEstimate jacobi_panel(const PanelIntegrand& h, std::complex<double> p, std::complex<double> q, double exp_p,
                          double exp_q, const QuadratureRule& rule, double tol);

// Adaptive 7/15-point Gauss-Kronrod on a panel with a smooth integrand.
// Returns ok = false if the subdivision budget runs out before `tol`.
struct AdaptiveResult {
    QuadEstimate estimate;
    bool ok = true;
};
AdaptiveResult kronrod_panel(const PanelIntegrand& h, std::complex<double> p, std::complex<double> q, double tol);

// Double-exponential rule. Copes with integrable endpoint singularities
// without knowing the exponents.
AdaptiveResult tanh_sinh_panel(const PanelIntegrand& h, std::complex<double> p, std::complex<double> q, double tol);

} // namespace icosa

#pragma once

#include <array>

#include "icosa/geometry.hpp"
#include "icosa/quadrature.hpp"

namespace icosa {

// The three finite prevertices 0, a, b, indexed 0, 1, 2.
std::array<double, 3> prevertices();

// Exponent of 1/eta at each prevertex: -4/5, -3/10, -9/10.
std::array<double, 3> integrand_exponents();

// xi^8 (xi - a)^3 (xi - b)^9 and its derivative.
Complex f(Complex xi);
Complex f_prime(Complex xi);

// Sheet-0 branch xi^{4/5} (a - xi)^{3/10} (b - xi)^{9/10} with principal
// powers. On the real axis the value is the limit from the upper half-plane,
// so the branch is continuous on the closed upper half-plane minus {0, a, b}.
// Sheet 0 is real and positive on (0, a).
Complex eta_principal(Complex xi);

// e^{i pi k / 5} * eta_principal(xi). Sheets are taken mod 10.
// Throws SingularFiber at 0, a, b.
Complex eta(Complex xi, int sheet);

// Index of the prevertex within `tol` of xi, or -1.
int singular_index(Complex xi, double tol = 1e-14);

struct SheetedPoint {
    Complex xi;
    int sheet = 0;
};

// Normalises the sheet to 0..9. Throws SingularFiber if xi is a prevertex.
SheetedPoint make_sheeted(Complex xi, int sheet);

// Integral of d xi / eta (sheet 0) along the polyline `path`. Vertices of
// the path that coincide exactly with a prevertex are treated as singular
// endpoints. Throws QuadratureFailure when the error estimate exceeds the
// rule's target.
QuadEstimate integrate_inv_eta(const std::vector<Complex>& path, const QuadratureRule& rule);

// calF(a) = integral over (0, a) of d xi / eta.
QuadEstimate calF_a(const QuadratureRule& rule = {});

// k = a / calF(a). Cached per rule for the life of the process.
double compute_k(const QuadratureRule& rule = {});

// Path used by F_T (see the README for the policy).
std::vector<Complex> map_path(Complex xi);

// k * integral from 0 to xi of d xi / eta. Requires Im xi >= 0 and xi not a
// prevertex.
Complex F_T(Complex xi, const QuadratureRule& rule = {});
QuadEstimate F_T_estimate(Complex xi, const QuadratureRule& rule = {});

// Limit of F_T at prevertex i (0 -> O, 1 -> A, 2 -> B).
Complex F_T_vertex(int i, const QuadratureRule& rule = {});

// Angle between F_T(s - r) - F_T(s) and F_T(s + r) - F_T(s) at prevertex s.
double interior_angle(int i, double r, const QuadratureRule& rule = {});

// Schwarz reflection of F_T into the lower half-plane, and its rotations.
Complex F_Q(Complex xi, const QuadratureRule& rule = {});
Complex F_Kstar(Complex xi, int nu, const QuadratureRule& rule = {});

} // namespace icosa

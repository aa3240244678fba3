#pragma once

#include <vector>

#include "icosa/conformal.hpp"
#include "icosa/covering.hpp"

namespace icosa {

// A tangent vector to the curve eta^10 = f(xi). Only the xi component is
// stored; the eta component follows from the curve relation.
struct TangentVector {
    SheetedPoint base;
    Complex d_xi{0.0, 0.0};

    // (1/10) f'(xi) / eta^9 * d_xi
    Complex d_eta() const;
    // |eta d_eta - (1/10) f'(xi)/eta^8 d_xi|, relative to the size of its terms.
    double tangency_residual() const;
};

// The flat metric on the plane: Re(v conj w).
double gamma(Complex v, Complex w);

// k^2 / |eta(p)|^2 * Re(v.d_xi conj w.d_xi).
double Gamma(const SheetedPoint& p, const TangentVector& v, const TangentVector& w, const QuadratureRule& rule = {});

// The field with d_xi = eta / k.
TangentVector X(const SheetedPoint& p, const QuadratureRule& rule = {});

// Pushforward of a tangent vector under R-cal and U-cal.
TangentVector push_generator(SheetGenerator g, const TangentVector& v);

// F_T of the projection (F_Q below the real axis). The sheet is ignored.
Complex delta(const SheetedPoint& p, const QuadratureRule& rule = {});

// Sector index for the star-level map: 3k mod 5, so that R-cal (k -> k+2)
// advances the sector by one and U-cal (k -> -k) negates it.
int sector_of_sheet(int sheet);

// eps^{sector} * F_Q(xi).
Complex delta_star(const SheetedPoint& p, const QuadratureRule& rule = {});

// Differential of delta and delta_star applied to v, in closed form.
Complex push_delta(const TangentVector& v, const QuadratureRule& rule = {});
Complex push_delta_star(const TangentVector& v, const QuadratureRule& rule = {});

// Five-point difference quotient of delta along v (independent of push_delta).
Complex push_delta_numeric(const TangentVector& v, double h = 1e-3, const QuadratureRule& rule = {});

struct FlowOptions {
    Complex alpha{1.0, 0.0};   // integrate alpha * X
    int steps = 0;             // 0 chooses from |t|
    double singular_tol = 1e-9;
};

// RK4 in xi for the real-time flow of alpha * X, starting in the open upper
// half-plane. eta is re-evaluated from the sheet at every stage. Throws
// LeftDomain if xi reaches the real axis, comes within singular_tol of a
// prevertex, or the image leaves T.
SheetedPoint flow_X(const SheetedPoint& p0, double t, const FlowOptions& opt = {}, const QuadratureRule& rule = {});

// Same integration, returning the point after every step (first entry p0).
std::vector<SheetedPoint> flow_X_path(const SheetedPoint& p0, double t, const FlowOptions& opt = {},
                                      const QuadratureRule& rule = {});

} // namespace icosa

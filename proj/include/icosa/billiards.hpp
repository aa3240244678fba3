#pragma once

#include <vector>

#include "icosa/geometry.hpp"

namespace icosa {

struct BilliardState {
    ComplexPoint pos;
    Complex dir{1.0, 0.0};
    double time = 0.0;
};

struct Hit {
    enum class Kind { Edge, Vertex };
    Kind kind = Kind::Edge;
    int id = -1;  // edge or vertex index
    ComplexPoint point;
    double time = 0.0;  // travel time from the state's position
};

// Earliest boundary hit of the ray pos + t dir, t > tol. `skip_edge` is the
// edge the state currently sits on, if any. Throws DegenerateRay if nothing
// is hit.
Hit next_event(const BilliardState& s, const StarPolygon& K = star(), int skip_edge = -1, double tol = kTolGeo);

// Mirror image of dir in the line of the edge.
Complex reflect_dir(Complex dir, int edge, const StarPolygon& K = star());

struct TrajectorySegment {
    ComplexPoint start, end;
    Complex dir;
    double t_start = 0.0, t_end = 0.0;
};

struct TrajectoryEvent {
    enum class Kind { Reflect, Reverse };
    Kind kind = Kind::Reflect;
    int id = -1;  // edge for Reflect, vertex for Reverse
    ComplexPoint point;
};

struct Trajectory {
    std::vector<TrajectorySegment> segments;
    std::vector<TrajectoryEvent> events;  // events[i] ends segments[i]

    double total_time() const { return segments.empty() ? 0.0 : segments.back().t_end; }
};

// Event-driven billiard in K: reflection in edge interiors, reversal at
// vertices. Stops after max_events events. Throws InvalidStart for a start
// outside K, at O, or on the boundary pointing outward.
Trajectory simulate(ComplexPoint z0, Complex dir, int max_events, const StarPolygon& K = star(), double tol = kTolGeo);

// Element of the dihedral group on K written as R^j U^l.
struct DihedralElement {
    int j = 0;
    int l = 0;
    PlaneIsometry map() const;
    DihedralElement times(const DihedralElement& other) const;
};

struct LiftTag {
    int event = -1;
    int reflection = -1;            // m of T_m, or -1 for the identity (reversal)
    DihedralElement accumulated;    // M_i after the event
    int sector = 0;                 // rotation part of M_i
};

struct LiftedTrajectory {
    Trajectory base;
    std::vector<LiftTag> tags;
    std::vector<TrajectorySegment> lifted;     // M_i applied to segment i
    std::vector<TrajectorySegment> developed;  // lifted segments carried to one plane chart
    double straightness = 0.0;  // worst distance of a developed endpoint to the first developed line
    double continuity = 0.0;    // worst gap between consecutive developed segments
};

// Tags each reflection with the T_m pairing the hit edge with its partner,
// tracks M_i = T_{m_1} ... T_{m_i}, and develops the lifted path through the
// edge gluings. Throws CenterCrossing if a segment passes within tol of O.
LiftedTrajectory lift_trajectory(const Trajectory& t, const StarPolygon& K = star(), double tol = kTolGeo);

// Equivariance residual between simulate(R^j z0, R^j dir) and R^j applied to
// simulate(z0, dir), over segments.
double rotation_equivariance(ComplexPoint z0, Complex dir, int j, int max_events, const StarPolygon& K = star());

} // namespace icosa

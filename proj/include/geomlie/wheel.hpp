// Coxeter wheels.
//
// A_k: regular (k+1)-gon, vertices v_1..v_{k+1} counterclockwise, alpha_i the
// edge v_i -> v_{i+1}.
// D_k: regular 2(k-1)-gon plus a center puncture v_0. Boundary vertex v_i
// (i > 0) sits at position i-1 and v_{-i} at position k-2+i, counterclockwise.
// A segment s -> t has class phi(t) - phi(s) where phi(v_0) = 0,
// phi(v_i) = alpha_1 + alpha_3 + ... + alpha_{i+1} and
// phi(v_{-i}) = -(alpha_2 + alpha_3 + ... + alpha_{i+1}).
// E_k: no planar model; label (j, m, sign) stands for sign * rho_*^m(beta_j).
//
// All geometric predicates are exact: they only use vertex positions.

#pragma once

#include <optional>
#include <variant>
#include <vector>

#include <boost/rational.hpp>
#include <json.hpp>

#include "geomlie/rootsys.hpp"

namespace geomlie {

struct Vertex {
  int label;
  // Counterclockwise position on the polygon; the D center has none.
  std::optional<int> position;
  double x, y;
};

struct VertexSegment {
  int source, target;
  bool operator==(const VertexSegment&) const = default;
};

struct OrbitLabel {
  int j;     // 1..k
  int m;     // 0 .. order(rho_*) - 1
  int sign;  // +1 or -1
  bool operator==(const OrbitLabel&) const = default;
};

using OrientedSegment = std::variant<VertexSegment, OrbitLabel>;

struct WheelModel {
  LieType type;
  std::vector<Vertex> vertices;  // empty for E
  std::vector<int> punctures;    // vertex labels
  bool has_center = false;
  int polygon_size = 0;          // boundary vertex count; 0 for E
  int orbit_steps = 0;           // order of rho_* for E, 0 otherwise
  std::optional<boost::rational<int>> rotation;  // multiple of pi, D and E only

  const Vertex& vertex(int label) const;
};

class SegmentError : public Error {
 public:
  using Error::Error;
};

struct SegmentClass {
  Root homology;
  std::vector<OrientedSegment> representatives;
};

WheelModel build_wheel(const LieType& t);

Root segment_class(const WheelModel& w, const OrientedSegment& s);
Root segment_class(const LieType& t, const OrientedSegment& s);

// Every valid segment (A, D) or canonical label (E), in a fixed order.
std::vector<OrientedSegment> all_segments(const WheelModel& w);

// Classes sorted by root; D representatives sorted by midpoint angle.
std::vector<SegmentClass> enumerate_classes(const LieType& t);

// The four D_k coordinate families, by which of alpha_1, alpha_2 occur.
enum class DRootKind { I, II, III, IV };
DRootKind d_root_kind(const LieType& t, const Root& r);

// Image of a segment under the monodromy rotation: k steps of pi/(k-1) for D,
// one step for A (class becomes -rho_* of the original), m -> m+1 for E.
OrientedSegment rotate_segment(const WheelModel& w, const OrientedSegment& s);

// Orientation of the triangle (p, q, r) of vertex labels: +1, -1, or 0.
int orientation(const WheelModel& w, int p, int q, int r);
// Center strictly inside the triangle; false when the center is a vertex.
bool center_strictly_inside(const WheelModel& w, int p, int q, int r);

// Signs from every concatenable triangle realising alpha + beta.
std::vector<int> d_sign_candidates(const WheelModel& w, const Root& alpha, const Root& beta);
int d_geometric_sign(const LieType& t, const Root& alpha, const Root& beta);

// Counterclockwise rotation of the wheel compatible with rho_*, as a multiple of pi.
boost::rational<int> rotation_angle(const LieType& t);

nlohmann::json segment_classes_json(const LieType& t, const std::vector<SegmentClass>& classes);

}  // namespace geomlie

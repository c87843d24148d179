// Coxeter-plane projection of the roots and an SVG renderer.
// The only floating-point code in the library lives here.

#pragma once

#include <string>
#include <vector>

#include "geomlie/rootsys.hpp"

namespace geomlie {

inline constexpr double kPlaneTolerance = 1e-9;
inline constexpr double kClusterTolerance = 1e-6;

class CoxeterPlaneError : public Error {
 public:
  using Error::Error;
};

struct PlaneBasis {
  LieType type;
  std::vector<double> u, v;
  // A1: c = -1 has no invariant plane; u spans the line and v = 0.
  bool degenerate = false;
};

struct ProjectedRoot {
  Root root;
  double x, y;
};

// Real and imaginary parts of the e^{2 pi i/h} eigenvector of c (phase fixed
// so the first nonzero entry is real and positive), C-orthonormalized.
// Throws CoxeterPlaneError if the plane fails the tolerance checks.
PlaneBasis plane_basis(const LieType& t);

ProjectedRoot project(const PlaneBasis& b, const Root& r);
std::vector<ProjectedRoot> project_all(const LieType& t);

// Largest ||proj(c a) - R(2 pi/h) proj(a)|| over all roots.
double equivariance_residual(const LieType& t);

struct Cluster {
  double x, y;
  std::vector<std::size_t> members;  // root indices
};

// Greedy clustering of the projections at kClusterTolerance.
std::vector<Cluster> multiplicity_report(const LieType& t);
bool projection_injective(const LieType& t);

struct SvgOptions {
  bool show_edges = true;
  bool show_orbit_colors = true;
  int size = 400;
};

std::string render_svg(const LieType& t, const SvgOptions& opts = {});

}  // namespace geomlie

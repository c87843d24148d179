#include "geomlie/wheel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace geomlie {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

int d_label_at(int k, int pos) { return pos <= k - 2 ? pos + 1 : -(pos - k + 2); }

// phi(v) for the D wheel, in alpha-coordinates.
RelativeCycle d_potential(int k, int label) {
  RelativeCycle v = RelativeCycle::zero(static_cast<std::size_t>(k));
  if (label == 0) return v;
  const int i = std::abs(label);
  v.coords[label > 0 ? 0 : 1] = 1;
  for (int p = 2; p <= i; ++p) v.coords[static_cast<std::size_t>(p)] = 1;
  return label > 0 ? v : -v;
}

void check_vertex_segment(const WheelModel& w, const VertexSegment& s) {
  const int k = w.type.rank;
  if (s.source == s.target) throw SegmentError("degenerate segment: source equals target");
  if (w.type.family == Family::A) {
    for (int v : {s.source, s.target})
      if (v < 1 || v > k + 1) throw SegmentError("A_k vertex labels are 1..k+1");
    return;
  }
  for (int v : {s.source, s.target})
    if (std::abs(v) > k - 1) throw SegmentError("D_k vertex labels are -(k-1)..k-1");
  if (s.source != 0 && s.target == -s.source)
    throw SegmentError("segment joins opposite vertices through the center puncture");
}

// Angle of the segment midpoint in units of pi/n (n = polygon size).
int midpoint_key(const WheelModel& w, const VertexSegment& s) {
  const int n = w.polygon_size;
  const auto& a = w.vertex(s.source).position;
  const auto& b = w.vertex(s.target).position;
  if (!a) return 2 * *b;
  if (!b) return 2 * *a;
  const int sum = *a + *b;
  return 2 * std::abs(*a - *b) < n ? mod(sum, 2 * n) : mod(sum + n, 2 * n);
}

}  // namespace

const Vertex& WheelModel::vertex(int label) const {
  for (const auto& v : vertices)
    if (v.label == label) return v;
  throw SegmentError("no vertex " + std::to_string(label) + " on the " + type.name() + " wheel");
}

WheelModel build_wheel(const LieType& t) {
  WheelModel w;
  w.type = t;
  const int k = t.rank;
  auto place = [&](int label, int pos, int n) {
    const double theta = 2.0 * std::numbers::pi * pos / n;
    w.vertices.push_back({label, pos, std::cos(theta), std::sin(theta)});
    w.punctures.push_back(label);
  };
  switch (t.family) {
    case Family::A:
      w.polygon_size = k + 1;
      for (int i = 1; i <= k + 1; ++i) place(i, i - 1, k + 1);
      break;
    case Family::D:
      w.polygon_size = 2 * (k - 1);
      w.has_center = true;
      w.vertices.push_back({0, std::nullopt, 0.0, 0.0});
      w.punctures.push_back(0);
      for (int p = 0; p < w.polygon_size; ++p) place(d_label_at(k, p), p, w.polygon_size);
      w.rotation = rotation_angle(t);
      break;
    case Family::E:
      w.orbit_steps = static_cast<int>(expected_operator_order(t, OrbitOperator::Monodromy));
      w.rotation = rotation_angle(t);
      break;
  }
  return w;
}

Root segment_class(const WheelModel& w, const OrientedSegment& s) {
  const int k = w.type.rank;
  if (const auto* lab = std::get_if<OrbitLabel>(&s)) {
    if (w.type.family != Family::E) throw SegmentError("orbit labels belong to E-type wheels");
    if (lab->j < 1 || lab->j > k) throw SegmentError("orbit label j out of range");
    if (lab->m < 0 || lab->m >= w.orbit_steps) throw SegmentError("orbit label m out of range");
    if (lab->sign != 1 && lab->sign != -1) throw SegmentError("orbit label sign must be +-1");
    const IntMatrix rho = monodromy_matrix(w.type, Basis::Simple);
    RelativeCycle v(projective_basis(w.type).row(static_cast<std::size_t>(lab->j - 1)));
    for (int i = 0; i < lab->m; ++i) v = RelativeCycle(rho.apply(v.coords));
    return v * lab->sign;
  }
  const auto& seg = std::get<VertexSegment>(s);
  if (w.type.family == Family::E) throw SegmentError("E-type wheels take orbit labels, not vertex segments");
  check_vertex_segment(w, seg);
  if (w.type.family == Family::A) {
    const int lo = std::min(seg.source, seg.target), hi = std::max(seg.source, seg.target);
    RelativeCycle v = RelativeCycle::zero(static_cast<std::size_t>(k));
    for (int p = lo; p < hi; ++p) v.coords[static_cast<std::size_t>(p - 1)] = 1;
    return seg.source < seg.target ? v : -v;
  }
  return d_potential(k, seg.target) - d_potential(k, seg.source);
}

Root segment_class(const LieType& t, const OrientedSegment& s) { return segment_class(build_wheel(t), s); }

std::vector<OrientedSegment> all_segments(const WheelModel& w) {
  std::vector<OrientedSegment> out;
  const int k = w.type.rank;
  if (w.type.family == Family::E) {
    const bool both_signs = k != 6;  // E6 orbits already contain -beta_j
    for (int sign : {1, -1}) {
      if (sign < 0 && !both_signs) break;
      for (int j = 1; j <= k; ++j)
        for (int m = 0; m < w.orbit_steps; ++m) out.push_back(OrbitLabel{j, m, sign});
    }
    return out;
  }
  for (const auto& a : w.vertices)
    for (const auto& b : w.vertices) {
      if (a.label == b.label) continue;
      if (w.type.family == Family::D && a.label != 0 && b.label == -a.label) continue;
      out.push_back(VertexSegment{a.label, b.label});
    }
  return out;
}

std::vector<SegmentClass> enumerate_classes(const LieType& t) {
  const WheelModel w = build_wheel(t);
  std::map<IntVector, std::vector<OrientedSegment>> groups;
  for (const auto& s : all_segments(w)) groups[segment_class(w, s).coords].push_back(s);
  std::vector<SegmentClass> out;
  for (auto& [root, reps] : groups) {
    if (t.family == Family::D) {
      std::stable_sort(reps.begin(), reps.end(), [&](const OrientedSegment& a, const OrientedSegment& b) {
        return midpoint_key(w, std::get<VertexSegment>(a)) < midpoint_key(w, std::get<VertexSegment>(b));
      });
    }
    out.push_back({Root(root), std::move(reps)});
  }
  return out;
}

DRootKind d_root_kind(const LieType& t, const Root& r) {
  if (t.family != Family::D) throw Error("d_root_kind: not a D type");
  if (!is_root(Lattice(t), r)) throw Error("d_root_kind: not a root");
  const bool a = r.coords[0] != 0, b = r.coords[1] != 0;
  if (!a && !b) return DRootKind::I;
  if (a && b) return DRootKind::II;
  return a ? DRootKind::III : DRootKind::IV;
}

OrientedSegment rotate_segment(const WheelModel& w, const OrientedSegment& s) {
  if (const auto* lab = std::get_if<OrbitLabel>(&s)) {
    segment_class(w, s);  // validates
    return OrbitLabel{lab->j, (lab->m + 1) % w.orbit_steps, lab->sign};
  }
  const auto& seg = std::get<VertexSegment>(s);
  if (w.type.family == Family::E) throw SegmentError("E-type wheels take orbit labels, not vertex segments");
  check_vertex_segment(w, seg);
  const int k = w.type.rank, n = w.polygon_size;
  const int step = w.type.family == Family::A ? 1 : k;
  auto rot = [&](int label) {
    const auto& pos = w.vertex(label).position;
    if (!pos) return label;
    const int p = mod(*pos + step, n);
    return w.type.family == Family::A ? p + 1 : d_label_at(k, p);
  };
  return VertexSegment{rot(seg.source), rot(seg.target)};
}

int orientation(const WheelModel& w, int p, int q, int r) {
  if (p == q || q == r || p == r) return 0;
  const int n = w.polygon_size;
  // Rotate the triple so that a center vertex, if any, comes first.
  const Vertex* v[3] = {&w.vertex(p), &w.vertex(q), &w.vertex(r)};
  for (int i = 0; i < 3; ++i) {
    if (!v[i]->position) {
      const int a = *v[(i + 1) % 3]->position, b = *v[(i + 2) % 3]->position;
      const int d = mod(b - a, n);
      if (2 * d == n) return 0;
      return 2 * d < n ? 1 : -1;
    }
  }
  const int a = mod(*v[1]->position - *v[0]->position, n);
  const int b = mod(*v[2]->position - *v[0]->position, n);
  return a < b ? 1 : -1;
}

bool center_strictly_inside(const WheelModel& w, int p, int q, int r) {
  if (!w.has_center) return false;
  int pos[3];
  int i = 0;
  for (int label : {p, q, r}) {
    const auto& x = w.vertex(label).position;
    if (!x) return false;
    pos[i++] = *x;
  }
  std::sort(pos, pos + 3);
  const int n = w.polygon_size;
  const int gaps[3] = {pos[1] - pos[0], pos[2] - pos[1], n - pos[2] + pos[0]};
  for (int g : gaps)
    if (2 * g >= n) return false;
  return true;
}

std::vector<int> d_sign_candidates(const WheelModel& w, const Root& alpha, const Root& beta) {
  if (w.type.family != Family::D) throw Error("the geometric sign rule is defined for D types only");
  const Lattice lat(w.type);
  const Root sum = alpha + beta;
  if (!is_root(lat, alpha) || !is_root(lat, beta) || !is_root(lat, sum))
    throw Error("d_geometric_sign: alpha, beta and alpha+beta must all be roots");

  std::vector<VertexSegment> sa, sb;
  for (const auto& s : all_segments(w)) {
    const Root c = segment_class(w, s);
    if (c == alpha) sa.push_back(std::get<VertexSegment>(s));
    if (c == beta) sb.push_back(std::get<VertexSegment>(s));
  }
  auto opposite = [](int x, int y) { return x != 0 && y == -x; };
  std::vector<int> out;
  auto record = [&](int eps, int i, int j, int l) {
    out.push_back(center_strictly_inside(w, i, j, l) ? -eps : eps);
  };
  for (const auto& a : sa)
    for (const auto& b : sb) {
      // alpha then beta: i -> j -> l
      if (b.source == a.target && b.target != a.source && !opposite(a.source, b.target))
        record(orientation(w, a.source, a.target, b.target), a.source, a.target, b.target);
      // beta then alpha: l -> i -> j
      if (b.target == a.source && b.source != a.target && !opposite(a.target, b.source))
        record(-orientation(w, a.source, a.target, b.source), a.source, a.target, b.source);
    }
  return out;
}

int d_geometric_sign(const LieType& t, const Root& alpha, const Root& beta) {
  const auto c = d_sign_candidates(build_wheel(t), alpha, beta);
  if (c.empty()) throw Error("no concatenable triangle realises alpha + beta");
  return c.front();
}

boost::rational<int> rotation_angle(const LieType& t) {
  switch (t.family) {
    case Family::A:
      throw Error("rotation_angle: the A-type monodromy is not a wheel rotation");
    case Family::D:
      return {t.rank, t.rank - 1};
    case Family::E:
      if (t.rank == 6) return {7, 6};
      if (t.rank == 7) return {10, 9};
      return {16, 15};
  }
  return {};
}

nlohmann::json segment_classes_json(const LieType& t, const std::vector<SegmentClass>& classes) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : classes) {
    nlohmann::json segs = nlohmann::json::array();
    for (const auto& s : c.representatives) {
      if (const auto* v = std::get_if<VertexSegment>(&s))
        segs.push_back({v->source, v->target});
      else {
        const auto& l = std::get<OrbitLabel>(s);
        segs.push_back({l.j, l.m, l.sign});
      }
    }
    arr.push_back({{"root", c.homology.coords}, {"segments", segs}});
  }
  return {{"type", t.name()}, {"classes", arr}};
}

}  // namespace geomlie

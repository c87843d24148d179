#include "geomlie/coxplane.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <set>

#include <Eigen/Dense>
#include <fmt/format.h>

namespace geomlie {

namespace {

Eigen::MatrixXd to_eigen(const IntMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = static_cast<double>(m(i, j));
  return out;
}

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

// Six decimals with no negative zero.
std::string num(double x) {
  std::string s = fmt::format("{:.6f}", x);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

constexpr const char* kPalette[16] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
                                      "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939",
                                      "#8c6d31", "#843c39", "#7b4173", "#3182bd"};

}  // namespace

PlaneBasis plane_basis(const LieType& t) {
  const Lattice lat(t);
  const Eigen::MatrixXd c = to_eigen(coxeter_matrix(t));
  const Eigen::MatrixXd g = to_eigen(lat.cartan());
  auto cnorm = [&](const Eigen::VectorXd& x) { return std::sqrt(x.dot(g * x)); };

  PlaneBasis b;
  b.type = t;
  const auto k = static_cast<Eigen::Index>(lat.rank());
  if (k == 1) {
    Eigen::VectorXd u(1);
    u(0) = 1.0 / cnorm(Eigen::VectorXd::Ones(1));
    b.u = to_std(u);
    b.v = {0.0};
    b.degenerate = true;
    return b;
  }

  const double theta = 2.0 * std::numbers::pi / t.coxeter_number;
  const std::complex<double> target = std::polar(1.0, theta);
  Eigen::EigenSolver<Eigen::MatrixXd> es(c);
  if (es.info() != Eigen::Success) throw CoxeterPlaneError("eigen decomposition of c failed");
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < k; ++i)
    if (std::abs(es.eigenvalues()(i) - target) < std::abs(es.eigenvalues()(best) - target)) best = i;
  if (std::abs(es.eigenvalues()(best) - target) > kPlaneTolerance)
    throw CoxeterPlaneError("c has no eigenvalue e^{2 pi i/h} within tolerance");

  Eigen::VectorXcd w = es.eigenvectors().col(best);
  Eigen::Index lead = 0;
  while (lead < k && std::abs(w(lead)) < 1e-8) ++lead;
  w *= std::conj(w(lead)) / std::abs(w(lead));

  Eigen::VectorXd u = w.real();
  Eigen::VectorXd v = -w.imag();
  u /= cnorm(u);
  v -= u.dot(g * v) * u;
  v /= cnorm(v);

  // c u = cos u + sin v, c v = -sin u + cos v
  const double cs = std::cos(theta), sn = std::sin(theta);
  const double res = std::max((c * u - (cs * u + sn * v)).norm(), (c * v - (-sn * u + cs * v)).norm());
  if (res > kPlaneTolerance) throw CoxeterPlaneError("eigenplane residual " + std::to_string(res) + " exceeds tolerance");
  b.u = to_std(u);
  b.v = to_std(v);
  return b;
}

ProjectedRoot project(const PlaneBasis& b, const Root& r) {
  const IntMatrix cm = cartan_matrix(b.type).entries;
  const IntVector cr = cm.apply(r.coords);
  double x = 0, y = 0;
  for (std::size_t i = 0; i < cr.size(); ++i) {
    x += static_cast<double>(cr[i]) * b.u[i];
    y += static_cast<double>(cr[i]) * b.v[i];
  }
  return {r, x, y};
}

std::vector<ProjectedRoot> project_all(const LieType& t) {
  const PlaneBasis b = plane_basis(t);
  const RootSystem rs = enumerate_roots(t);
  std::vector<ProjectedRoot> out;
  out.reserve(rs.size());
  for (const auto& r : rs.roots()) out.push_back(project(b, r));
  return out;
}

double equivariance_residual(const LieType& t) {
  const PlaneBasis b = plane_basis(t);
  const IntMatrix c = coxeter_matrix(t);
  const double theta = 2.0 * std::numbers::pi / t.coxeter_number;
  const double cs = std::cos(theta), sn = std::sin(theta);
  const RootSystem rs = enumerate_roots(t);
  double worst = 0;
  for (const auto& r : rs.roots()) {
    const ProjectedRoot p = project(b, r);
    const ProjectedRoot q = project(b, Root(c.apply(r.coords)));
    worst = std::max(worst, std::hypot(q.x - (cs * p.x - sn * p.y), q.y - (sn * p.x + cs * p.y)));
  }
  return worst;
}

std::vector<Cluster> multiplicity_report(const LieType& t) {
  const auto pts = project_all(t);
  std::vector<Cluster> clusters;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool placed = false;
    for (auto& cl : clusters)
      if (std::hypot(pts[i].x - cl.x, pts[i].y - cl.y) < kClusterTolerance) {
        cl.members.push_back(i);
        placed = true;
        break;
      }
    if (!placed) clusters.push_back({pts[i].x, pts[i].y, {i}});
  }
  return clusters;
}

bool projection_injective(const LieType& t) {
  return multiplicity_report(t).size() == static_cast<std::size_t>(t.root_count);
}

std::string render_svg(const LieType& t, const SvgOptions& opts) {
  const RootSystem rs = enumerate_roots(t);
  const auto clusters = multiplicity_report(t);
  const auto orbits = orbit_decomposition(rs, OrbitOperator::CoxeterBar);

  std::vector<std::size_t> orbit_of(rs.size()), cluster_of(rs.size());
  for (std::size_t o = 0; o < orbits.orbits.size(); ++o)
    for (std::size_t r : orbits.orbits[o]) orbit_of[r] = o;
  double radius = 0;
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    for (std::size_t r : clusters[c].members) cluster_of[r] = c;
    radius = std::max(radius, std::hypot(clusters[c].x, clusters[c].y));
  }
  const double s = opts.size;
  const double scale = radius > 0 ? 0.9 * s / radius : 1.0;
  auto px = [&](const Cluster& c) { return num(c.x * scale); };
  auto py = [&](const Cluster& c) { return num(-c.y * scale); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{0}\" viewBox=\"{1} {1} {2} {2}\">\n",
      2 * opts.size, -opts.size, 2 * opts.size);
  out += fmt::format("<title>{} root projections</title>\n", t.name());
  out += fmt::format("<rect x=\"{0}\" y=\"{0}\" width=\"{1}\" height=\"{1}\" fill=\"white\"/>\n", -opts.size, 2 * opts.size);

  if (opts.show_edges) {
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t a = 0; a < rs.size(); ++a)
      for (std::size_t b = a + 1; b < rs.size(); ++b) {
        if (!rs.contains(rs[a] - rs[b])) continue;
        const std::size_t ca = cluster_of[a], cb = cluster_of[b];
        if (ca != cb) edges.emplace(std::min(ca, cb), std::max(ca, cb));
      }
    out += "<g stroke=\"#999999\" stroke-width=\"0.5\" stroke-opacity=\"0.6\">\n";
    for (const auto& [a, b] : edges)
      out += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n", px(clusters[a]), py(clusters[a]),
                         px(clusters[b]), py(clusters[b]));
    out += "</g>\n";
  }

  const double dot = std::max(2.0, s / 80.0);
  out += "<g stroke=\"black\" stroke-width=\"0.5\">\n";
  for (const auto& cl : clusters) {
    const char* color = opts.show_orbit_colors ? kPalette[orbit_of[cl.members.front()] % 16] : "#000000";
    out += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\"><title>{} root(s)</title></circle>\n", px(cl),
                       py(cl), num(dot), color, cl.members.size());
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace geomlie

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <regex>

#include <fmt/format.h>

#include "geomlie/coxplane.hpp"

using namespace geomlie;

namespace {

double c_inner(const LieType& t, const std::vector<double>& a, const std::vector<double>& b) {
  const IntMatrix c = cartan_matrix(t).entries;
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * static_cast<double>(c(i, j)) * b[j];
  return s;
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("plane basis") {
  for (const auto& t : standard_types()) {
    if (t.rank == 1) continue;
    CAPTURE(t.name());
    const PlaneBasis b = plane_basis(t);
    CHECK_FALSE(b.degenerate);
    CHECK(c_inner(t, b.u, b.u) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(c_inner(t, b.v, b.v) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(c_inner(t, b.u, b.v)) < 1e-9);
    std::size_t lead = 0;
    while (std::abs(b.u[lead]) < 1e-8) ++lead;
    CHECK(b.u[lead] > 0);
    CHECK(equivariance_residual(t) < kPlaneTolerance);
  }
  const PlaneBasis a1 = plane_basis(make_type("A1"));
  CHECK(a1.degenerate);
  CHECK(a1.v == std::vector<double>{0.0});
}

TEST_CASE("A2 projections form a regular hexagon") {
  const auto pts = project_all(make_type("A2"));
  REQUIRE(pts.size() == 6);
  const double r0 = std::hypot(pts[0].x, pts[0].y);
  std::vector<double> angles;
  for (const auto& p : pts) {
    CHECK(std::hypot(p.x, p.y) == doctest::Approx(r0));
    angles.push_back(std::atan2(p.y, p.x));
  }
  std::sort(angles.begin(), angles.end());
  for (std::size_t i = 1; i < angles.size(); ++i)
    CHECK(angles[i] - angles[i - 1] == doctest::Approx(std::numbers::pi / 3));
}

TEST_CASE("projection is linear") {
  const LieType e6 = make_type("E6");
  const PlaneBasis b = plane_basis(e6);
  const RootSystem rs = enumerate_roots(e6);
  for (const auto& r : rs.roots()) {
    const ProjectedRoot p = project(b, r), q = project(b, -r);
    CHECK(std::abs(p.x + q.x) < 1e-12);
    CHECK(std::abs(p.y + q.y) < 1e-12);
  }
}

TEST_CASE("injectivity table") {
  const std::map<std::string, std::size_t> clusters{
      {"A1", 2},  {"A2", 6},  {"A3", 8},  {"A4", 20}, {"A5", 18}, {"A6", 42}, {"A7", 32}, {"A8", 72}, {"D3", 8},
      {"D4", 12}, {"D5", 32}, {"D6", 50}, {"D7", 60}, {"D8", 98}, {"E6", 48}, {"E7", 126}, {"E8", 240}};
  for (const auto& t : standard_types()) {
    CAPTURE(t.name());
    CHECK(multiplicity_report(t).size() == clusters.at(t.name()));
    const bool expect = (t.family == Family::A && (t.rank % 2 == 0 || t.rank == 1)) ||
                        (t.family == Family::E && t.rank >= 7);
    CHECK(projection_injective(t) == expect);
  }
  CHECK(multiplicity_report(make_type("E6")).size() < 72);
}

TEST_CASE("norm is constant on Coxeter orbits") {
  for (const char* name : {"D6", "E7", "E8"}) {
    const LieType t = make_type(name);
    const auto pts = project_all(t);
    for (const auto& orbit : orbit_decomposition(t, OrbitOperator::CoxeterBar).orbits) {
      const double r = std::hypot(pts[orbit.front()].x, pts[orbit.front()].y);
      for (std::size_t i : orbit) CHECK(std::abs(std::hypot(pts[i].x, pts[i].y) - r) < 1e-9);
    }
  }
}

TEST_CASE("SVG output") {
  const LieType e8 = make_type("E8");
  const std::string svg = render_svg(e8);
  CHECK(svg == render_svg(e8));
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>\n") == svg.size() - 7);
  CHECK(count(svg, "<circle") == 240);
  CHECK(count(svg, "<circle") == count(svg, "</circle>"));
  CHECK(count(svg, "<line") > 0);
  CHECK(svg.find("-0.000000") == std::string::npos);

  const std::string bare = render_svg(e8, {.show_edges = false, .show_orbit_colors = false});
  CHECK(count(bare, "<line") == 0);
  CHECK(count(bare, "fill=\"#000000\"") == 240);

  // A2: six dots, and the edge rule joins neighbours of the hexagon
  const std::string a2 = render_svg(make_type("A2"), {.size = 100});
  CHECK(count(a2, "<circle") == 6);
  CHECK(count(a2, "<line") == 6);
  CHECK(a2.find("width=\"200\"") != std::string::npos);
  const std::regex cx(R"re(cx="(-?[0-9]+\.[0-9]{6})" cy="(-?[0-9]+\.[0-9]{6})")re");
  int dots = 0;
  for (std::sregex_iterator it(a2.begin(), a2.end(), cx), end; it != end; ++it, ++dots) {
    const double x = std::stod((*it)[1]), y = std::stod((*it)[2]);
    CHECK(std::hypot(x, y) == doctest::Approx(90.0).epsilon(1e-6));
  }
  CHECK(dots == 6);

  // one dot per cluster when the projection is not injective
  CHECK(count(render_svg(make_type("D4")), "<circle") == 12);
  CHECK(count(render_svg(make_type("A1")), "<circle") == 2);
  CHECK(fmt::format("{:.6f}", -0.0) == "-0.000000");  // why the renderer normalizes
}

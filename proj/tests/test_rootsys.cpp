#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "geomlie/rootsys.hpp"
#include "geomlie/verify.hpp"

using namespace geomlie;

namespace {

std::size_t orbit_size_of(const OrbitDecomposition& d, std::size_t r) {
  for (const auto& o : d.orbits)
    if (std::find(o.begin(), o.end(), r) != o.end()) return o.size();
  return 0;
}

}  // namespace

TEST_CASE("enumeration") {
  CHECK(enumerate_roots(make_type("E6")).size() == 72);
  CHECK(enumerate_roots(make_type("D5")).size() == 40);
  const RootSystem a1 = enumerate_roots(make_type("A1"));
  REQUIRE(a1.size() == 2);
  CHECK(a1[0] == Root{-1});
  CHECK(a1[1] == Root{1});
  for (const auto& t : standard_types()) CHECK_MESSAGE(enumerate_roots(t).size() == std::size_t(t.root_count), t.name());
}

TEST_CASE("root system axioms hold exhaustively") {
  for (const auto& t : standard_types()) {
    CAPTURE(t.name());
    const RootSystem rs = enumerate_roots(t);
    const Lattice& lat = rs.lattice();
    CHECK(std::is_sorted(rs.roots().begin(), rs.roots().end()));
    for (std::size_t i = 0; i < rs.size(); ++i) CHECK(rs.index_of(rs[i]) == i);
    bool closed = true, integral = true, coherent = true;
    for (const auto& a : rs.roots()) {
      closed = closed && rs.contains(-a);
      // all coordinates of one sign
      const bool pos = std::all_of(a.coords.begin(), a.coords.end(), [](auto x) { return x >= 0; });
      const bool neg = std::all_of(a.coords.begin(), a.coords.end(), [](auto x) { return x <= 0; });
      coherent = coherent && (pos || neg);
      for (const auto& b : rs.roots()) {
        const auto p = lat.pairing(a, b);
        integral = integral && p >= -2 && p <= 2;
        closed = closed && rs.contains(reflect(lat, a, b));
      }
    }
    CHECK(closed);
    CHECK(integral);
    CHECK(coherent);
  }
}

TEST_CASE("reflections") {
  const LieType a2 = make_type("A2");
  const Root a1{1, 0}, a2r{0, 1};
  CHECK(reflect(a2, a1, a1) == -a1);
  CHECK(reflect(a2, a1, -a1) == a1);
  CHECK(reflect(a2, a1, a2r) == Root{1, 1});
  const LieType a3 = make_type("A3");
  CHECK(reflect(a3, Root{1, 0, 0}, Root{0, 0, 1}) == Root{0, 0, 1});
  CHECK_THROWS_AS(reflect(a2, Root{1, 1, 0}, a1), Error);
  CHECK_THROWS_AS(reflect(a2, Root{2, 0}, a1), Error);
  CHECK(simple_reflection_matrix(a2, 0) == IntMatrix{{-1, 1}, {0, 1}});
}

TEST_CASE("Coxeter element") {
  CHECK(coxeter_matrix(make_type("A1")) == IntMatrix{{-1}});
  CHECK(coxeter_matrix(make_type("E8")).order() == 30);
  CHECK(coxeter_matrix(make_type("D5")).order() == 8);
  for (const auto& t : standard_types()) CHECK_MESSAGE(coxeter_matrix(t).order() == unsigned(t.coxeter_number), t.name());
}

TEST_CASE("monodromy in the projective basis") {
  const IntMatrix p6 = monodromy_matrix(make_type("E6"), Basis::Projective);
  CHECK(p6 == IntMatrix{{1, 1, 0, 0, 1, 1},
                        {-1, 0, 0, 0, 0, 0},
                        {0, 0, 1, 1, 1, 1},
                        {0, 0, -1, 0, 0, 0},
                        {0, -1, 0, -1, -1, -1},
                        {0, 0, 0, 0, -1, 0}});
  CHECK(p6.order() == 12);
  CHECK(monodromy_matrix(make_type("E7"), Basis::Projective).order() == 9);
  CHECK(monodromy_matrix(make_type("E8"), Basis::Projective).order() == 15);
  for (const char* name : {"E7", "E8"}) {
    const LieType t = make_type(name);
    CHECK(monodromy_matrix(t, Basis::Projective) == reference_projective_monodromy(t));
  }
  CHECK(monodromy_matrix(make_type("A1"), Basis::Simple) == IntMatrix{{1}});
}

TEST_CASE("S and T matrices") {
  for (const auto& t : standard_types()) {
    CAPTURE(t.name());
    for (int l = 1; l <= t.rank; ++l) {
      auto [s, tt] = sT_matrices(t, l);
      CHECK(s(l - 1, l - 1) == -1);
      CHECK(tt(l - 1, l - 1) == 1);
    }
    CHECK(verify_sT_identity(t));
  }
  CHECK_THROWS_AS(sT_matrices(make_type("A2"), 3), Error);
}

TEST_CASE("orbit tables") {
  const auto e7m = orbit_decomposition(make_type("E7"), OrbitOperator::Monodromy);
  CHECK(e7m.operator_order == 9);
  CHECK(e7m.orbits.size() == 14);
  CHECK(e7m.free);
  for (const auto& o : e7m.orbits) CHECK(o.size() == 9);
  const auto e7c = orbit_decomposition(make_type("E7"), OrbitOperator::CoxeterBar);
  CHECK(e7c.operator_order == 18);
  CHECK(e7c.orbits.size() == 7);
  const auto a4 = orbit_decomposition(make_type("A4"), OrbitOperator::Monodromy);
  CHECK(a4.operator_order == 10);
  CHECK(a4.orbits.size() == 2);
  CHECK(a4.free);
  for (const auto& t : standard_types()) {
    CAPTURE(t.name());
    CHECK(orbit_decomposition(t, OrbitOperator::CoxeterBar).free);
    CHECK(orbit_decomposition(t, OrbitOperator::Monodromy).operator_order ==
          expected_operator_order(t, OrbitOperator::Monodromy));
  }
}

TEST_CASE("monodromy is not free on A5") {
  // rho_* = -c has order 6 on A5, but the three long diagonals of the hexagon
  // are fixed by rho_*^3: rotation by pi composed with reversal.
  const RootSystem rs = enumerate_roots(make_type("A5"));
  const auto d = orbit_decomposition(rs, OrbitOperator::Monodromy);
  CHECK(d.operator_order == 6);
  CHECK_FALSE(d.free);
  CHECK(d.orbits.size() == 6);
  std::multiset<std::size_t> sizes;
  for (const auto& o : d.orbits) sizes.insert(o.size());
  CHECK(sizes == std::multiset<std::size_t>{3, 3, 6, 6, 6, 6});
  // v1 -> v4 is a long diagonal
  const Root diag{1, 1, 1, 0, 0};
  CHECK(orbit_size_of(d, *rs.index_of(diag)) == 3);
  const IntMatrix rho3 = monodromy_matrix(make_type("A5"), Basis::Simple).power(3);
  CHECK(Root(rho3.apply(diag.coords)) == diag);
}

TEST_CASE("foldings") {
  const FoldResult f4 = fold(classical_folding("E6:F4"));
  CHECK(f4.cartan.rows() == 4);
  int minus_two = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) minus_two += f4.cartan(i, j) == -2;
  CHECK(minus_two == 1);
  CHECK(f4.cartan == IntMatrix{{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}});

  const FoldResult g2 = fold(classical_folding("D4:G2"));
  CHECK(g2.cartan == IntMatrix{{2, -3}, {-1, 2}});
  CHECK(g2.nodes == std::vector<std::vector<int>>{{0, 1, 3}, {2}});

  const FoldResult triv = fold({make_type("A2"), {0, 1}, "A2"});
  CHECK(triv.cartan == cartan_matrix(make_type("A2")).entries);

  const FoldResult b4 = fold(classical_folding("D5:B4"));
  CHECK(b4.cartan.rows() == 4);
  const FoldResult c3 = fold(classical_folding("A5:C3"));
  CHECK(c3.cartan.rows() == 3);

  // swapping adjacent nodes of A2 is an automorphism but folds adjacent nodes
  CHECK_THROWS_AS(fold({make_type("A2"), {1, 0}, "?"}), FoldingError);
  // not a graph automorphism
  CHECK_THROWS_AS(fold({make_type("A3"), {1, 0, 2}, "?"}), FoldingError);
  CHECK_THROWS_AS(fold({make_type("A3"), {0, 0, 2}, "?"}), FoldingError);
  CHECK_THROWS_AS(fold({make_type("A3"), {0, 1}, "?"}), FoldingError);
  CHECK_THROWS_AS(classical_folding("E7:F4"), FoldingError);
  CHECK_THROWS_AS(classical_folding("E6"), FoldingError);
}

TEST_CASE("root system JSON") {
  const auto j = enumerate_roots(make_type("A2")).to_json();
  CHECK(j.dump() == R"({"cartan":[[2,-1],[-1,2]],"roots":[[-1,-1],[-1,0],[0,-1],[0,1],[1,0],[1,1]],"type":"A2"})");
  const auto o = orbit_decomposition(make_type("A2"), OrbitOperator::CoxeterBar).to_json();
  CHECK(o.contains("orbits"));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "geomlie/lattice.hpp"
#include "geomlie/rootsys.hpp"

using namespace geomlie;

namespace {

RelativeCycle random_cycle(std::mt19937& rng, std::size_t k) {
  std::uniform_int_distribution<int> d(-4, 4);
  RelativeCycle v = RelativeCycle::zero(k);
  for (auto& x : v.coords) x = d(rng);
  return v;
}

const RelativeCycle a1{1, 0}, a2{0, 1};

}  // namespace

TEST_CASE("type labels") {
  const LieType e8 = make_type("E8");
  CHECK(e8.family == Family::E);
  CHECK(e8.rank == 8);
  CHECK(e8.coxeter_number == 30);
  CHECK(e8.root_count == 240);
  const LieType a1t = make_type("A1");
  CHECK(a1t.coxeter_number == 2);
  CHECK(a1t.root_count == 2);
  CHECK(make_type("e7") == make_type("E7"));
  CHECK(make_type("d5").coxeter_number == 8);
  CHECK(make_type("D3").is_low_rank_alias());
  for (const char* bad : {"D2", "A0", "E5", "E9", "X3", "A", "", "A01", "A+1", "A-1", "A1x", "B3"})
    CHECK_THROWS_AS(make_type(bad), TypeError);
  CHECK(standard_types().size() == 17);
}

TEST_CASE("mixed intersection matrices") {
  CHECK(seifert_matrix(make_type("A2")).entries == IntMatrix{{1, -1}, {0, 1}});
  CHECK(seifert_matrix(make_type("A1")).entries == IntMatrix{{1}});
  CHECK(seifert_matrix(make_type("E6")).entries.row(1) == IntVector{0, 1, 0, 0, -1, 0});
  CHECK(seifert_matrix(make_type("D4")).entries ==
        IntMatrix{{1, 0, -1, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 0, 1}});
}

TEST_CASE("Cartan matrices") {
  CHECK(cartan_matrix(make_type("A2")).entries == IntMatrix{{2, -1}, {-1, 2}});
  CHECK(cartan_matrix(make_type("A1")).entries == IntMatrix{{2}});
  const auto g = dynkin_graph(cartan_matrix(make_type("D4")).entries);
  CHECK(g[2] == std::vector<int>{0, 1, 3});
  // det C: A_k -> k+1, D_k -> 4, E6/E7/E8 -> 3/2/1
  for (const auto& t : standard_types()) {
    const std::int64_t det = cartan_matrix(t).entries.determinant();
    const std::int64_t want = t.family == Family::A ? t.rank + 1 : t.family == Family::D ? 4 : 9 - t.rank;
    CHECK_MESSAGE(det == want, t.name());
  }
}

TEST_CASE("forms on A2") {
  const LieType t = make_type("A2");
  CHECK(pairing(t, a1, a1) == 2);
  CHECK(pairing(t, a1, a2) == -1);
  CHECK(pairing(t, a1, RelativeCycle::zero(2)) == 0);
  CHECK(mixed_intersection(t, variation(a2), a1) == 0);
  CHECK(mixed_intersection(t, variation(a1), a2) == -1);
  const AbsoluteCycle d1 = variation(a1), d2 = variation(a2);
  CHECK(intersection_abs(t, d2, d1) == -1);
  CHECK(intersection_abs(t, d1, d2) == -intersection_abs(t, d2, d1));
  CHECK(seifert_form(t, a1, a1) == -1);
  CHECK(seifert_form(t, a2, a1) == 1);
  CHECK_THROWS_AS(pairing(t, a1, RelativeCycle{1, 0, 0}), DimensionError);
}

TEST_CASE("variation is the identity on coordinates") {
  CHECK(variation(a1).coords == IntVector{1, 0});
  CHECK(variation(a1 + a2) == variation(a1) + variation(a2));
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    const RelativeCycle v = random_cycle(rng, 6);
    CHECK(variation_inverse(variation(v)) == v);
  }
}

TEST_CASE("lattice invariants for every type") {
  std::mt19937 rng(11);
  for (const auto& t : standard_types()) {
    CAPTURE(t.name());
    const Lattice lat(t);
    const IntMatrix& b = lat.seifert();
    CHECK(is_distinguished(b));
    CHECK(b.determinant() == 1);
    const IntMatrix& c = lat.cartan();
    CHECK(c.is_symmetric());
    CHECK(c.is_positive_definite());
    for (std::size_t i = 0; i < c.rows(); ++i) {
      CHECK(c(i, i) == 2);
      for (std::size_t j = 0; j < c.cols(); ++j)
        if (i != j) CHECK((c(i, j) == 0 || c(i, j) == -1));
    }
    const IntMatrix l = lat.seifert_form_matrix();
    CHECK(-(l + l.transpose()) == c);

    const IntMatrix rho = monodromy_matrix(t, Basis::Simple);
    for (int trial = 0; trial < 100; ++trial) {
      const RelativeCycle a = random_cycle(rng, lat.rank()), x = random_cycle(rng, lat.rank());
      CHECK(lat.pairing(a, x) == lat.mixed_intersection(variation(a), x) + lat.mixed_intersection(variation(x), a));
      CHECK(lat.intersection_abs(variation(a), variation(a)) == 0);
      // rho_*(a) . var(x) + var(a) . x = 0, with relative . absolute = -(absolute . relative)
      const RelativeCycle ra(rho.apply(a.coords));
      CHECK(-lat.mixed_intersection(variation(x), ra) + lat.mixed_intersection(variation(a), x) == 0);
    }
  }
}

TEST_CASE("stabilization keeps the pairing") {
  // going from m to m+1 variables multiplies L by (-1)^(m+1)
  const LieType e6 = make_type("E6");
  const IntMatrix l2 = Lattice(e6).seifert_form_matrix();
  CHECK(stabilized_seifert_matrix(e6, 2) == l2);
  CHECK(stabilized_seifert_matrix(e6, 3) == -l2);
  CHECK(stabilized_seifert_matrix(e6, 4) == -l2);
  CHECK(stabilized_seifert_matrix(e6, 5) == l2);
  CHECK(stabilized_pairing_matrix(e6, 2) == cartan_matrix(e6).entries);
  CHECK(stabilized_pairing_matrix(e6, 3) == cartan_matrix(e6).entries);
  for (const auto& t : standard_types())
    for (int n = 2; n <= 6; ++n) CHECK_MESSAGE(stabilized_pairing_matrix(t, n) == cartan_matrix(t).entries, t.name(), n);
  CHECK_THROWS_AS(stabilized_seifert_matrix(e6, 1), Error);
}

TEST_CASE("projective basis") {
  CHECK(projective_basis(make_type("E6")).row(4) == IntVector{1, 1, 1, 1, 1, 0});
  CHECK(projective_basis(make_type("A3")) == IntMatrix{{1, 0, 0}, {1, 1, 0}, {1, 1, 1}});
  CHECK(projective_basis(make_type("D4")).row(1) == IntVector{0, 1, 0, 0});
  for (const auto& t : standard_types()) {
    const Lattice lat(t);
    const IntMatrix q = projective_basis(t);
    CHECK_MESSAGE(std::abs(q.determinant()) == 1, t.name());
    for (std::size_t j = 0; j < q.rows(); ++j) CHECK(lat.pairing(RelativeCycle(q.row(j)), RelativeCycle(q.row(j))) == 2);
  }
}

TEST_CASE("distinguished basis criterion") {
  CHECK(is_distinguished(seifert_matrix(make_type("E8")).entries));
  CHECK(is_distinguished(IntMatrix::identity(4)));
  CHECK_FALSE(is_distinguished(IntMatrix{{1, 0}, {1, 1}}));
  CHECK(is_distinguished(IntMatrix{{1, 0}, {1, 1}}, Triangularity::Lower));
  CHECK_FALSE(is_distinguished(IntMatrix{{2, 0}, {0, 1}}));
  CHECK_THROWS_AS(is_distinguished(IntMatrix(2, 3)), DimensionError);
}

TEST_CASE("matrix JSON") {
  const auto j = matrix_json(make_type("A2"), cartan_matrix(make_type("A2")).entries);
  CHECK(j.dump() == R"({"matrix":[[2,-1],[-1,2]],"type":"A2"})");
}

// ADE type data and the integral bilinear forms on the two homology
// coordinate systems: relative cycles in the simple basis alpha_1..alpha_k
// and absolute cycles in the basis Delta_i = var(alpha_i).
//
// B is the mixed intersection matrix B_ij = var(alpha_i) . alpha_j.
// Everything else is derived from it:
//   pairing          (a, b)   = a^T (B + B^T) b
//   mixed            h . b    = h^T B b
//   absolute         h . h'   = h^T (B^T - B) h'
//   Seifert          L(a, b)  = a^T L b,   L = -B^T

#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "geomlie/integer.hpp"

namespace geomlie {

enum class Family { A, D, E };

struct LieType {
  Family family = Family::A;
  int rank = 1;
  int coxeter_number = 2;
  int root_count = 2;

  std::string name() const;
  // D3 is accepted but coincides with A3.
  bool is_low_rank_alias() const { return family == Family::D && rank == 3; }

  bool operator==(const LieType& o) const { return family == o.family && rank == o.rank; }
};

class TypeError : public Error {
 public:
  using Error::Error;
};

// Parses "A<k>", "D<k>", "E6", "E7", "E8" (case-insensitive).
LieType make_type(std::string_view spec);

// A1..A8, D3..D8, E6, E7, E8.
std::vector<LieType> standard_types();

template <class Tag>
struct Cycle {
  IntVector coords;

  Cycle() = default;
  explicit Cycle(IntVector c) : coords(std::move(c)) {}
  Cycle(std::initializer_list<std::int64_t> c) : coords(c) {}

  static Cycle zero(std::size_t k) { return Cycle(IntVector(k, 0)); }
  static Cycle basis(std::size_t k, std::size_t i) {
    Cycle c = zero(k);
    c.coords.at(i) = 1;
    return c;
  }

  std::size_t size() const { return coords.size(); }
  bool is_zero() const {
    for (auto x : coords)
      if (x != 0) return false;
    return true;
  }

  Cycle operator-() const {
    Cycle r(coords);
    for (auto& x : r.coords) x = checked_mul(x, -1);
    return r;
  }
  Cycle operator+(const Cycle& o) const {
    if (o.size() != size()) throw DimensionError("cycle sum: length mismatch");
    Cycle r(coords);
    for (std::size_t i = 0; i < size(); ++i) r.coords[i] = checked_add(r.coords[i], o.coords[i]);
    return r;
  }
  Cycle operator-(const Cycle& o) const { return *this + (-o); }
  Cycle operator*(std::int64_t s) const {
    Cycle r(coords);
    for (auto& x : r.coords) x = checked_mul(x, s);
    return r;
  }

  auto operator<=>(const Cycle& o) const = default;
};

struct RelativeTag {};
struct AbsoluteTag {};

// Element of H_1(M, dM) in the simple basis.
using RelativeCycle = Cycle<RelativeTag>;
// Element of H_1(M) in the basis Delta_i = var(alpha_i).
using AbsoluteCycle = Cycle<AbsoluteTag>;

struct SeifertMatrix {
  IntMatrix entries;
};

struct CartanMatrix {
  IntMatrix entries;
};

SeifertMatrix seifert_matrix(const LieType& t);
CartanMatrix cartan_matrix(const LieType& t);

// Immutable bundle of the forms for one type.
class Lattice {
 public:
  explicit Lattice(const LieType& t);

  const LieType& type() const { return type_; }
  std::size_t rank() const { return static_cast<std::size_t>(type_.rank); }
  const IntMatrix& seifert() const { return b_; }
  const IntMatrix& cartan() const { return c_; }

  std::int64_t pairing(const RelativeCycle& a, const RelativeCycle& b) const;
  std::int64_t mixed_intersection(const AbsoluteCycle& h, const RelativeCycle& b) const;
  std::int64_t intersection_abs(const AbsoluteCycle& a, const AbsoluteCycle& b) const;
  std::int64_t seifert_form(const RelativeCycle& a, const RelativeCycle& b) const;

  // L = -B^T.
  IntMatrix seifert_form_matrix() const;

 private:
  void check(std::size_t n) const;

  LieType type_;
  IntMatrix b_;
  IntMatrix c_;
};

std::int64_t pairing(const LieType& t, const RelativeCycle& a, const RelativeCycle& b);
std::int64_t mixed_intersection(const LieType& t, const AbsoluteCycle& a, const RelativeCycle& b);
std::int64_t intersection_abs(const LieType& t, const AbsoluteCycle& a, const AbsoluteCycle& b);
std::int64_t seifert_form(const LieType& t, const RelativeCycle& a, const RelativeCycle& b);

// var is the identity on coordinates; only the basis tag changes.
AbsoluteCycle variation(const RelativeCycle& a);
RelativeCycle variation_inverse(const AbsoluteCycle& a);

// Seifert matrix of the n-variable stabilization f + z_1^2 + ... + z_{n-2}^2.
// Each stabilization by z^2 multiplies L by (-1)^m * L_{z^2}(D, D) = (-1)^(m+1)
// where m is the number of variables before the step.
IntMatrix stabilized_seifert_matrix(const LieType& t, int n);

// (-1)^(n(n+1)/2) (L_n^T + L_n).
IntMatrix stabilized_pairing_matrix(const LieType& t, int n);

// Rows are beta_j in alpha-coordinates.
IntMatrix projective_basis(const LieType& t);

enum class Triangularity { Upper, Lower };

// Unit-diagonal triangularity of a variation matrix.
bool is_distinguished(const IntMatrix& m, Triangularity tri = Triangularity::Upper);

// Off-diagonal support of C as an adjacency list (0-based).
std::vector<std::vector<int>> dynkin_graph(const IntMatrix& cartan);

nlohmann::json matrix_json(const LieType& t, const IntMatrix& m);

}  // namespace geomlie

// The geometric Lie algebra over Z: Cartan part spanned by Delta_i = var(alpha_i)
// plus one generator g_alpha per geometric root.
//
// Basis order is Delta_1..Delta_k followed by the roots in RootSystem order.
// Brackets:
//   [Delta_i, Delta_j]   = 0
//   [Delta_i, g_b]       = (alpha_i, b) g_b
//   [g_a, g_{-a}]        = -var(a) = -sum_i a_i Delta_i
//   [g_a, g_b]           = N_{a,b} g_{a+b}  if a+b is a root, else 0
// with N_{a,b} = (-1)^(b^T B a).

#pragma once

#include <iosfwd>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include <json.hpp>

#include "geomlie/rootsys.hpp"

namespace geomlie {

struct CartanGen {
  int i = 1;  // 1-based
  bool operator==(const CartanGen&) const = default;
};

struct RootGen {
  Root alpha;
  bool operator==(const RootGen&) const = default;
};

using BasisElement = std::variant<CartanGen, RootGen>;

struct Term {
  int index;
  std::int64_t coef;
  bool operator==(const Term&) const = default;
};

// Sparse integer combination of basis vectors, sorted by index, no zeros.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(std::size_t dim) : dim_(dim) {}
  AlgebraElement(std::size_t dim, std::vector<Term> terms);

  static AlgebraElement basis(std::size_t dim, int index, std::int64_t coef = 1);

  std::size_t dimension() const { return dim_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(int index) const;

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator-() const;
  AlgebraElement operator*(std::int64_t s) const;

  bool operator==(const AlgebraElement&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Term> terms_;
};

class LieAlgebra {
 public:
  // Structure constants from the four defining rules.
  static LieAlgebra build(const LieType& t);
  // Arbitrary table over the canonical basis of t, row-major dim x dim.
  static LieAlgebra from_table(const LieType& t, std::vector<AlgebraElement> table);

  const LieType& type() const { return roots_.type(); }
  const RootSystem& root_system() const { return roots_; }
  std::size_t dimension() const { return dim_; }
  std::size_t rank() const { return static_cast<std::size_t>(type().rank); }

  BasisElement basis_element(std::size_t index) const;
  std::size_t index_of(const BasisElement& b) const;
  std::string label(std::size_t index) const;
  AlgebraElement element(const BasisElement& b, std::int64_t coef = 1) const;

  const AlgebraElement& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) const;

  // Copy with one table entry (and only that one) replaced.
  LieAlgebra with_entry(std::size_t i, std::size_t j, AlgebraElement value) const;

  bool operator==(const LieAlgebra& o) const { return type() == o.type() && table_ == o.table_; }

 private:
  LieAlgebra(RootSystem rs, std::vector<AlgebraElement> table);

  RootSystem roots_;
  std::size_t dim_;
  std::vector<AlgebraElement> table_;
};

std::int64_t n_sign(const LieType& t, const Root& alpha, const Root& beta);
std::int64_t n_sign(const Lattice& lat, const Root& alpha, const Root& beta);

// Basis pairs (i, j), i < j, with [e_i, e_j] != -[e_j, e_i]; also (i, i) if [e_i, e_i] != 0.
std::vector<std::pair<std::size_t, std::size_t>> antisymmetry_violations(const LieAlgebra& L);

struct JacobiReport {
  std::uint64_t triples_checked = 0;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> violations;
  bool ok() const { return violations.empty(); }
};

// All unordered basis triples i < j < l.
JacobiReport check_jacobi(const LieAlgebra& L);

IntMatrix killing_form(const LieAlgebra& L);
bool is_nondegenerate(const IntMatrix& killing);

struct Sl2Triple {
  AlgebraElement e, f, h;
  bool verified = false;
};

// (g_a, g_{-a}, var(a)); verified iff [h,e]=2e, [h,f]=-2f, [e,f]=-h.
Sl2Triple sl2_triple(const LieAlgebra& L, const Root& alpha);

// Image of a basis element of build(A_k) in sl_{k+1}(Z).
IntMatrix sl_model_image(const LieAlgebra& L, std::size_t index);

// Checks that the type-A correspondence is injective, lands in traceless
// matrices and commutes with brackets on every basis pair. 1 <= k <= 8.
bool slk_model_check(int k);

nlohmann::json structure_constants_json(const LieAlgebra& L);
std::string structure_constants_csv(const LieAlgebra& L);
// Inverse of structure_constants_json; fills in j > i entries by antisymmetry.
LieAlgebra import_structure_constants(const nlohmann::json& doc);

}  // namespace geomlie

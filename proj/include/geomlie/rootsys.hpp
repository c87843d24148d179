// Geometric root system: enumeration, reflections, the Coxeter element,
// the monodromy operator rho_* = -c, orbit decompositions and foldings.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "geomlie/lattice.hpp"

namespace geomlie {

using Root = RelativeCycle;

class RootSystem {
 public:
  RootSystem(const LieType& t, std::vector<Root> roots);

  const LieType& type() const { return lattice_.type(); }
  const Lattice& lattice() const { return lattice_; }
  const std::vector<Root>& roots() const& { return roots_; }
  // Safe in `for (auto& r : enumerate_roots(t).roots())`.
  std::vector<Root> roots() && { return std::move(roots_); }
  std::size_t size() const { return roots_.size(); }
  const Root& operator[](std::size_t i) const { return roots_[i]; }

  bool contains(const RelativeCycle& v) const { return index_.contains(v.coords); }
  // Position of v in the canonical order.
  std::optional<std::size_t> index_of(const RelativeCycle& v) const;

  nlohmann::json to_json() const;

 private:
  Lattice lattice_;
  std::vector<Root> roots_;
  std::map<IntVector, std::size_t> index_;
};

// Closure of {+-alpha_i} under simple reflections, sorted lexicographically.
RootSystem enumerate_roots(const LieType& t);

bool is_root(const Lattice& lat, const RelativeCycle& v);

// s_alpha(beta) = beta - (alpha, beta) alpha; alpha must have norm 2.
RelativeCycle reflect(const Lattice& lat, const Root& alpha, const RelativeCycle& beta);
RelativeCycle reflect(const LieType& t, const Root& alpha, const RelativeCycle& beta);

// Matrix of s_{alpha_i} in the simple basis (0-based i).
IntMatrix simple_reflection_matrix(const LieType& t, std::size_t i);

// c = s_{alpha_1} o ... o s_{alpha_k}.
IntMatrix coxeter_matrix(const LieType& t);

enum class Basis { Simple, Projective };

// rho_* = -c in the simple basis, or conjugated by Q^T into the projective
// basis so that column j is rho_*(beta_j) in beta-coordinates.
IntMatrix monodromy_matrix(const LieType& t, Basis basis);

// S_lambda (reflection) and T_lambda (Picard-Lefschetz) on H_1(M) in the
// Delta basis, lambda 1-based.
std::pair<IntMatrix, IntMatrix> sT_matrices(const LieType& t, int lambda);
bool verify_sT_identity(const LieType& t);

enum class OrbitOperator { Monodromy, CoxeterBar };

std::string to_string(OrbitOperator op);

struct OrbitDecomposition {
  OrbitOperator op = OrbitOperator::Monodromy;
  unsigned operator_order = 0;
  // Each orbit lists root indices r, op(r), op^2(r), ...
  std::vector<std::vector<std::size_t>> orbits;
  bool free = false;

  nlohmann::json to_json() const;
};

// Reference order of rho_* (Monodromy) or c (CoxeterBar); for A1 the
// matrix order (1) is used, see README.
unsigned expected_operator_order(const LieType& t, OrbitOperator op);

OrbitDecomposition orbit_decomposition(const RootSystem& rs, OrbitOperator op);
OrbitDecomposition orbit_decomposition(const LieType& t, OrbitOperator op);

class FoldingError : public Error {
 public:
  using Error::Error;
};

struct FoldingSpec {
  LieType source;
  // permutation[i] = image of node i (0-based); must be a Dynkin graph automorphism
  std::vector<int> permutation;
  std::string target_name;
};

struct FoldResult {
  // Orbits of the permutation, each sorted, ordered by smallest member.
  std::vector<std::vector<int>> nodes;
  IntMatrix cartan;
};

// C_fold[a][b] = sum over a' in orbit a of C[a'][b'] for any b' in orbit b.
FoldResult fold(const FoldingSpec& spec);

// "E6:F4", "D4:G2", "D<k+1>:B<k>", "A<2k-1>:C<k>".
FoldingSpec classical_folding(std::string_view label);

}  // namespace geomlie

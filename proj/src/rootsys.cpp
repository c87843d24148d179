#include "geomlie/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace geomlie {

RootSystem::RootSystem(const LieType& t, std::vector<Root> roots) : lattice_(t), roots_(std::move(roots)) {
  std::sort(roots_.begin(), roots_.end());
  for (std::size_t i = 0; i < roots_.size(); ++i) index_.emplace(roots_[i].coords, i);
}

std::optional<std::size_t> RootSystem::index_of(const RelativeCycle& v) const {
  const auto it = index_.find(v.coords);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

nlohmann::json RootSystem::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : roots_) rows.push_back(r.coords);
  nlohmann::json cartan = nlohmann::json::array();
  for (const auto& r : lattice_.cartan().to_rows()) cartan.push_back(r);
  return {{"type", type().name()}, {"cartan", cartan}, {"roots", rows}};
}

bool is_root(const Lattice& lat, const RelativeCycle& v) {
  return v.size() == lat.rank() && lat.pairing(v, v) == 2;
}

RelativeCycle reflect(const Lattice& lat, const Root& alpha, const RelativeCycle& beta) {
  if (!is_root(lat, alpha)) throw Error("reflect: first argument is not a root");
  return beta - alpha * lat.pairing(alpha, beta);
}

RelativeCycle reflect(const LieType& t, const Root& alpha, const RelativeCycle& beta) {
  return reflect(Lattice(t), alpha, beta);
}

RootSystem enumerate_roots(const LieType& t) {
  const Lattice lat(t);
  const std::size_t k = lat.rank();
  std::set<IntVector> seen;
  std::deque<RelativeCycle> frontier;
  for (std::size_t i = 0; i < k; ++i) {
    for (const auto& r : {RelativeCycle::basis(k, i), -RelativeCycle::basis(k, i)}) {
      if (seen.insert(r.coords).second) frontier.push_back(r);
    }
  }
  std::vector<RelativeCycle> simple;
  for (std::size_t i = 0; i < k; ++i) simple.push_back(RelativeCycle::basis(k, i));
  while (!frontier.empty()) {
    const RelativeCycle v = frontier.front();
    frontier.pop_front();
    for (const auto& a : simple) {
      RelativeCycle w = reflect(lat, a, v);
      if (seen.insert(w.coords).second) frontier.push_back(std::move(w));
    }
  }
  std::vector<Root> roots;
  roots.reserve(seen.size());
  for (const auto& c : seen) roots.emplace_back(c);
  return RootSystem(t, std::move(roots));
}

IntMatrix simple_reflection_matrix(const LieType& t, std::size_t i) {
  const Lattice lat(t);
  const std::size_t k = lat.rank();
  if (i >= k) throw Error("simple reflection index out of range");
  IntMatrix s = IntMatrix::identity(k);
  for (std::size_t j = 0; j < k; ++j) s(i, j) -= lat.cartan()(i, j);
  return s;
}

IntMatrix coxeter_matrix(const LieType& t) {
  const auto k = static_cast<std::size_t>(t.rank);
  IntMatrix c = IntMatrix::identity(k);
  for (std::size_t i = 0; i < k; ++i) c = c * simple_reflection_matrix(t, i);
  return c;
}

IntMatrix monodromy_matrix(const LieType& t, Basis basis) {
  const IntMatrix rho = -coxeter_matrix(t);
  if (basis == Basis::Simple) return rho;
  // Columns of Q^T are beta_j in alpha-coordinates.
  const IntMatrix change = projective_basis(t).transpose();
  return change.unimodular_inverse() * rho * change;
}

std::pair<IntMatrix, IntMatrix> sT_matrices(const LieType& t, int lambda) {
  if (lambda < 1 || lambda > t.rank) throw Error("sT_matrices: index out of range");
  const Lattice lat(t);
  const auto l = static_cast<std::size_t>(lambda - 1);
  const IntMatrix& b = lat.seifert();
  const IntMatrix sym = b + b.transpose();
  const IntMatrix skew = b - b.transpose();
  IntMatrix s = IntMatrix::identity(lat.rank());
  IntMatrix tt = IntMatrix::identity(lat.rank());
  for (std::size_t j = 0; j < lat.rank(); ++j) {
    s(l, j) -= sym(l, j);
    tt(l, j) -= skew(l, j);
  }
  return {s, tt};
}

bool verify_sT_identity(const LieType& t) {
  const auto k = static_cast<std::size_t>(t.rank);
  IntMatrix s_prod = IntMatrix::identity(k);
  IntMatrix t_prod = IntMatrix::identity(k);
  for (int l = 1; l <= t.rank; ++l) {
    auto [s, tt] = sT_matrices(t, l);
    s_prod = s_prod * s;
    t_prod = t_prod * tt;
  }
  return s_prod == -t_prod;
}

std::string to_string(OrbitOperator op) {
  return op == OrbitOperator::Monodromy ? "rho" : "rhobar";
}

nlohmann::json OrbitDecomposition::to_json() const {
  return {{"operator", to_string(op)}, {"order", operator_order}, {"free", free}, {"orbits", orbits}};
}

unsigned expected_operator_order(const LieType& t, OrbitOperator op) {
  const auto k = static_cast<unsigned>(t.rank);
  if (op == OrbitOperator::CoxeterBar) return static_cast<unsigned>(t.coxeter_number);
  switch (t.family) {
    case Family::A:
      if (k == 1) return 1;  // rho_* = +id on the rank-1 lattice
      return k % 2 == 0 ? 2 * (k + 1) : k + 1;
    case Family::D:
      return k % 2 == 0 ? k - 1 : 2 * (k - 1);
    case Family::E:
      return k == 6 ? 12 : k == 7 ? 9 : 15;
  }
  return 0;
}

OrbitDecomposition orbit_decomposition(const RootSystem& rs, OrbitOperator op) {
  const IntMatrix c = coxeter_matrix(rs.type());
  const IntMatrix m = op == OrbitOperator::Monodromy ? -c : c;
  OrbitDecomposition out;
  out.op = op;
  out.operator_order = m.order();

  // image[i] = index of op(root i)
  std::vector<std::size_t> image(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const auto j = rs.index_of(RelativeCycle(m.apply(rs[i].coords)));
    if (!j) throw Error("operator does not preserve the root system");
    image[i] = *j;
  }
  std::vector<bool> visited(rs.size(), false);
  out.free = true;
  for (std::size_t start = 0; start < rs.size(); ++start) {
    if (visited[start]) continue;
    std::vector<std::size_t> orbit;
    std::size_t cur = start;
    do {
      visited[cur] = true;
      orbit.push_back(cur);
      cur = image[cur];
    } while (cur != start);
    if (orbit.size() != out.operator_order) out.free = false;
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

OrbitDecomposition orbit_decomposition(const LieType& t, OrbitOperator op) {
  return orbit_decomposition(enumerate_roots(t), op);
}

FoldResult fold(const FoldingSpec& spec) {
  const Lattice lat(spec.source);
  const std::size_t k = lat.rank();
  const IntMatrix& c = lat.cartan();
  const auto& pi = spec.permutation;
  if (pi.size() != k) throw FoldingError("folding permutation has wrong length");
  std::vector<bool> hit(k, false);
  for (int p : pi) {
    if (p < 0 || static_cast<std::size_t>(p) >= k || hit[static_cast<std::size_t>(p)])
      throw FoldingError("folding map is not a permutation");
    hit[static_cast<std::size_t>(p)] = true;
  }
  auto img = [&](std::size_t i) { return static_cast<std::size_t>(pi[i]); };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (c(img(i), img(j)) != c(i, j)) throw FoldingError("permutation does not preserve the Cartan matrix");

  FoldResult out;
  std::vector<int> node_of(k, -1);
  for (std::size_t i = 0; i < k; ++i) {
    if (node_of[i] >= 0) continue;
    std::vector<int> orbit;
    std::size_t cur = i;
    do {
      node_of[cur] = static_cast<int>(out.nodes.size());
      orbit.push_back(static_cast<int>(cur));
      cur = img(cur);
    } while (cur != i);
    std::sort(orbit.begin(), orbit.end());
    out.nodes.push_back(std::move(orbit));
  }

  // first folding axiom: distinct members of one orbit are orthogonal
  for (const auto& orbit : out.nodes)
    for (int a : orbit)
      for (int b : orbit)
        if (a != b && c(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) != 0)
          throw FoldingError("folding axiom violated: nodes " + std::to_string(a + 1) + " and " +
                             std::to_string(b + 1) + " are folded but adjacent");

  const std::size_t n = out.nodes.size();
  out.cartan = IntMatrix(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::optional<std::int64_t> value;
      for (int bp : out.nodes[b]) {
        std::int64_t sum = 0;
        for (int ap : out.nodes[a]) sum += c(static_cast<std::size_t>(ap), static_cast<std::size_t>(bp));
        // second axiom: the sum is independent of the representative b'
        if (value && *value != sum) throw FoldingError("folding axiom violated: sum depends on representative");
        value = sum;
      }
      out.cartan(a, b) = *value;
    }
  return out;
}

FoldingSpec classical_folding(std::string_view label) {
  const auto colon = label.find(':');
  if (colon == std::string_view::npos) throw FoldingError("folding label must look like SOURCE:TARGET");
  const LieType src = make_type(label.substr(0, colon));
  std::string target(label.substr(colon + 1));
  for (auto& ch : target) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  const int k = src.rank;

  FoldingSpec spec{src, {}, target};
  spec.permutation.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) spec.permutation[static_cast<std::size_t>(i)] = i;
  auto swap_nodes = [&](int a, int b) {  // 1-based
    spec.permutation[static_cast<std::size_t>(a - 1)] = b - 1;
    spec.permutation[static_cast<std::size_t>(b - 1)] = a - 1;
  };

  if (src.family == Family::E && k == 6 && target == "F4") {
    swap_nodes(1, 3);
    swap_nodes(2, 4);
  } else if (src.family == Family::D && k == 4 && target == "G2") {
    spec.permutation = {1, 3, 2, 0};  // 1 -> 2 -> 4 -> 1
  } else if (src.family == Family::D && target == "B" + std::to_string(k - 1)) {
    swap_nodes(1, 2);
  } else if (src.family == Family::A && k % 2 == 1 && k >= 3 && target == "C" + std::to_string((k + 1) / 2)) {
    for (int i = 1; i < (k + 1) / 2; ++i) swap_nodes(i, k + 1 - i);
  } else {
    throw FoldingError("no classical folding " + std::string(label));
  }
  return spec;
}

}  // namespace geomlie

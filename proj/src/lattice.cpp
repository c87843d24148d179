#include "geomlie/lattice.hpp"

#include <cctype>
#include <charconv>

namespace geomlie {

std::string LieType::name() const {
  const char f = family == Family::A ? 'A' : family == Family::D ? 'D' : 'E';
  return std::string(1, f) + std::to_string(rank);
}

LieType make_type(std::string_view spec) {
  if (spec.size() < 2) throw TypeError("malformed type label '" + std::string(spec) + "'");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(spec[0])));
  int k = 0;
  const auto digits = spec.substr(1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits[0] == '0' || digits[0] == '+')
    throw TypeError("malformed type label '" + std::string(spec) + "'");

  LieType t;
  t.rank = k;
  switch (f) {
    case 'A':
      if (k < 1) throw TypeError("A_k requires k >= 1");
      t.family = Family::A;
      t.coxeter_number = k + 1;
      t.root_count = k * (k + 1);
      break;
    case 'D':
      if (k < 3) throw TypeError("D_k requires k >= 3");
      t.family = Family::D;
      t.coxeter_number = 2 * (k - 1);
      t.root_count = 2 * k * (k - 1);
      break;
    case 'E':
      t.family = Family::E;
      if (k == 6) {
        t.coxeter_number = 12;
        t.root_count = 72;
      } else if (k == 7) {
        t.coxeter_number = 18;
        t.root_count = 126;
      } else if (k == 8) {
        t.coxeter_number = 30;
        t.root_count = 240;
      } else {
        throw TypeError("E_k requires k in {6, 7, 8}");
      }
      break;
    default:
      throw TypeError("unknown family in type label '" + std::string(spec) + "'");
  }
  return t;
}

std::vector<LieType> standard_types() {
  std::vector<LieType> out;
  for (int k = 1; k <= 8; ++k) out.push_back(make_type("A" + std::to_string(k)));
  for (int k = 3; k <= 8; ++k) out.push_back(make_type("D" + std::to_string(k)));
  for (int k = 6; k <= 8; ++k) out.push_back(make_type("E" + std::to_string(k)));
  return out;
}

SeifertMatrix seifert_matrix(const LieType& t) {
  const auto k = static_cast<std::size_t>(t.rank);
  IntMatrix b = IntMatrix::identity(k);
  // (row, col) positions of the -1 entries, 1-based.
  std::vector<std::pair<int, int>> minus;
  switch (t.family) {
    case Family::A:
      for (int i = 1; i < t.rank; ++i) minus.emplace_back(i, i + 1);
      break;
    case Family::D:
      minus.emplace_back(1, 3);
      for (int i = 2; i < t.rank; ++i) minus.emplace_back(i, i + 1);
      break;
    case Family::E:
      if (t.rank == 6) {
        minus = {{1, 2}, {2, 5}, {3, 4}, {4, 5}, {5, 6}};
      } else if (t.rank == 7) {
        minus = {{1, 5}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
      } else {
        minus = {{1, 4}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}};
      }
      break;
  }
  for (auto [i, j] : minus) b(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = -1;
  return {b};
}

CartanMatrix cartan_matrix(const LieType& t) {
  const IntMatrix b = seifert_matrix(t).entries;
  return {b + b.transpose()};
}

Lattice::Lattice(const LieType& t) : type_(t), b_(seifert_matrix(t).entries), c_(b_ + b_.transpose()) {}

void Lattice::check(std::size_t n) const {
  if (n != rank())
    throw DimensionError("expected a length-" + std::to_string(rank()) + " vector for " + type_.name() +
                         ", got length " + std::to_string(n));
}

std::int64_t Lattice::pairing(const RelativeCycle& a, const RelativeCycle& b) const {
  check(a.size());
  check(b.size());
  return dot(a.coords, c_.apply(b.coords));
}

std::int64_t Lattice::mixed_intersection(const AbsoluteCycle& h, const RelativeCycle& b) const {
  check(h.size());
  check(b.size());
  return dot(h.coords, b_.apply(b.coords));
}

std::int64_t Lattice::intersection_abs(const AbsoluteCycle& a, const AbsoluteCycle& b) const {
  check(a.size());
  check(b.size());
  return dot(a.coords, (b_.transpose() - b_).apply(b.coords));
}

std::int64_t Lattice::seifert_form(const RelativeCycle& a, const RelativeCycle& b) const {
  check(a.size());
  check(b.size());
  return dot(a.coords, seifert_form_matrix().apply(b.coords));
}

IntMatrix Lattice::seifert_form_matrix() const { return -b_.transpose(); }

std::int64_t pairing(const LieType& t, const RelativeCycle& a, const RelativeCycle& b) {
  return Lattice(t).pairing(a, b);
}

std::int64_t mixed_intersection(const LieType& t, const AbsoluteCycle& a, const RelativeCycle& b) {
  return Lattice(t).mixed_intersection(a, b);
}

std::int64_t intersection_abs(const LieType& t, const AbsoluteCycle& a, const AbsoluteCycle& b) {
  return Lattice(t).intersection_abs(a, b);
}

std::int64_t seifert_form(const LieType& t, const RelativeCycle& a, const RelativeCycle& b) {
  return Lattice(t).seifert_form(a, b);
}

AbsoluteCycle variation(const RelativeCycle& a) { return AbsoluteCycle(a.coords); }

RelativeCycle variation_inverse(const AbsoluteCycle& a) { return RelativeCycle(a.coords); }

IntMatrix stabilized_seifert_matrix(const LieType& t, int n) {
  if (n < 2) throw Error("stabilization requires n >= 2 variables");
  IntMatrix l = Lattice(t).seifert_form_matrix();
  for (int m = 2; m < n; ++m) {
    if ((m + 1) % 2 != 0) l = -l;
  }
  return l;
}

IntMatrix stabilized_pairing_matrix(const LieType& t, int n) {
  const IntMatrix l = stabilized_seifert_matrix(t, n);
  const long long e = static_cast<long long>(n) * (n + 1) / 2;
  const IntMatrix sym = l.transpose() + l;
  return e % 2 == 0 ? sym : -sym;
}

IntMatrix projective_basis(const LieType& t) {
  const auto k = static_cast<std::size_t>(t.rank);
  IntMatrix q(k, k);
  auto prefix = [&](std::size_t row, std::size_t len) {
    for (std::size_t j = 0; j < len; ++j) q(row, j) = 1;
  };
  switch (t.family) {
    case Family::A:
      for (std::size_t j = 0; j < k; ++j) prefix(j, j + 1);
      break;
    case Family::D:
      q(0, 0) = 1;
      q(1, 1) = 1;
      for (std::size_t j = 2; j < k; ++j) prefix(j, j + 1);
      break;
    case Family::E:
      if (k == 6) {
        q = IntMatrix{{1, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
                      {0, 0, 1, 1, 0, 0}, {1, 1, 1, 1, 1, 0}, {1, 1, 1, 1, 1, 1}};
      } else if (k == 7) {
        q = IntMatrix{{1, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0}, {0, 1, 1, 0, 0, 0, 0},
                      {0, 1, 1, 1, 0, 0, 0}, {1, 1, 1, 1, 1, 0, 0}, {1, 1, 1, 1, 1, 1, 0},
                      {1, 1, 1, 1, 1, 1, 1}};
      } else {
        q = IntMatrix{{1, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0, 0}, {0, 1, 1, 0, 0, 0, 0, 0},
                      {1, 1, 1, 1, 0, 0, 0, 0}, {1, 1, 1, 1, 1, 0, 0, 0}, {1, 1, 1, 1, 1, 1, 0, 0},
                      {1, 1, 1, 1, 1, 1, 1, 0}, {1, 1, 1, 1, 1, 1, 1, 1}};
      }
      break;
  }
  return q;
}

bool is_distinguished(const IntMatrix& m, Triangularity tri) {
  if (!m.square()) throw DimensionError("is_distinguished: matrix is not square");
  const bool shape = tri == Triangularity::Upper ? m.is_upper_triangular() : m.is_lower_triangular();
  if (!shape) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, i) != 1) return false;
  return true;
}

std::vector<std::vector<int>> dynkin_graph(const IntMatrix& cartan) {
  std::vector<std::vector<int>> adj(cartan.rows());
  for (std::size_t i = 0; i < cartan.rows(); ++i)
    for (std::size_t j = 0; j < cartan.cols(); ++j)
      if (i != j && cartan(i, j) != 0) adj[i].push_back(static_cast<int>(j));
  return adj;
}

nlohmann::json matrix_json(const LieType& t, const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : m.to_rows()) rows.push_back(r);
  return {{"type", t.name()}, {"matrix", rows}};
}

}  // namespace geomlie

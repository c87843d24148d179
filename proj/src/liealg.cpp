#include "geomlie/liealg.hpp"

#include <algorithm>
#include <sstream>

namespace geomlie {

namespace {

// Sorts, merges duplicates and drops zeros.
std::vector<Term> canonical(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  std::vector<Term> out;
  for (const auto& t : terms) {
    if (!out.empty() && out.back().index == t.index)
      out.back().coef = checked_add(out.back().coef, t.coef);
    else
      out.push_back(t);
    if (out.back().coef == 0) out.pop_back();
  }
  return out;
}

// Dense scratch vector that remembers which slots it touched.
class Accumulator {
 public:
  explicit Accumulator(std::size_t n) : values_(n, 0) {}

  void add(const AlgebraElement& x, std::int64_t s) {
    for (const auto& t : x.terms()) {
      auto& v = values_[static_cast<std::size_t>(t.index)];
      if (v == 0) touched_.push_back(t.index);
      v += s * t.coef;
    }
  }

  // True if everything summed to zero; resets the scratch either way.
  bool drain_is_zero() {
    bool zero = true;
    for (int i : touched_) {
      if (values_[static_cast<std::size_t>(i)] != 0) zero = false;
      values_[static_cast<std::size_t>(i)] = 0;
    }
    touched_.clear();
    return zero;
  }

 private:
  std::vector<std::int64_t> values_;
  std::vector<int> touched_;
};

}  // namespace

AlgebraElement::AlgebraElement(std::size_t dim, std::vector<Term> terms) : dim_(dim), terms_(canonical(std::move(terms))) {
  for (const auto& t : terms_)
    if (t.index < 0 || static_cast<std::size_t>(t.index) >= dim_)
      throw DimensionError("algebra element index " + std::to_string(t.index) + " out of range");
}

AlgebraElement AlgebraElement::basis(std::size_t dim, int index, std::int64_t coef) {
  return AlgebraElement(dim, {{index, coef}});
}

std::int64_t AlgebraElement::coefficient(int index) const {
  const auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                                   [](const Term& t, int i) { return t.index < i; });
  return it != terms_.end() && it->index == index ? it->coef : 0;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  if (o.dim_ != dim_) throw DimensionError("algebra elements live in different algebras");
  std::vector<Term> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  return AlgebraElement(dim_, std::move(all));
}

AlgebraElement AlgebraElement::operator-() const { return *this * -1; }

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const { return *this + (-o); }

AlgebraElement AlgebraElement::operator*(std::int64_t s) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coef = checked_mul(t.coef, s);
  return AlgebraElement(dim_, std::move(out));
}

std::int64_t n_sign(const Lattice& lat, const Root& alpha, const Root& beta) {
  if (!is_root(lat, alpha) || !is_root(lat, beta)) throw Error("n_sign: arguments must be roots");
  const std::int64_t e = dot(beta.coords, lat.seifert().apply(alpha.coords));
  return e % 2 == 0 ? 1 : -1;
}

std::int64_t n_sign(const LieType& t, const Root& alpha, const Root& beta) {
  return n_sign(Lattice(t), alpha, beta);
}

LieAlgebra::LieAlgebra(RootSystem rs, std::vector<AlgebraElement> table)
    : roots_(std::move(rs)), dim_(rank() + roots_.size()), table_(std::move(table)) {
  if (table_.size() != dim_ * dim_) throw DimensionError("bracket table has the wrong size");
  for (const auto& e : table_)
    if (e.dimension() != dim_) throw DimensionError("bracket table entry has the wrong dimension");
}

LieAlgebra LieAlgebra::build(const LieType& t) {
  RootSystem rs = enumerate_roots(t);
  const Lattice& lat = rs.lattice();
  const std::size_t k = lat.rank();
  const std::size_t dim = k + rs.size();
  std::vector<AlgebraElement> table(dim * dim, AlgebraElement(dim));
  auto root_index = [&](std::size_t r) { return static_cast<int>(k + r); };

  for (std::size_t i = 0; i < k; ++i) {
    const Root ai = RelativeCycle::basis(k, i);
    for (std::size_t r = 0; r < rs.size(); ++r) {
      const std::int64_t w = lat.pairing(ai, rs[r]);
      table[i * dim + k + r] = AlgebraElement::basis(dim, root_index(r), w);
      table[(k + r) * dim + i] = AlgebraElement::basis(dim, root_index(r), -w);
    }
  }
  for (std::size_t a = 0; a < rs.size(); ++a) {
    for (std::size_t b = 0; b < rs.size(); ++b) {
      const Root sum = rs[a] + rs[b];
      AlgebraElement value(dim);
      if (sum.is_zero()) {
        std::vector<Term> terms;
        for (std::size_t i = 0; i < k; ++i) terms.push_back({static_cast<int>(i), -rs[a].coords[i]});
        value = AlgebraElement(dim, std::move(terms));
      } else if (const auto s = rs.index_of(sum)) {
        value = AlgebraElement::basis(dim, root_index(*s), n_sign(lat, rs[a], rs[b]));
      }
      table[(k + a) * dim + k + b] = std::move(value);
    }
  }
  return LieAlgebra(std::move(rs), std::move(table));
}

LieAlgebra LieAlgebra::from_table(const LieType& t, std::vector<AlgebraElement> table) {
  return LieAlgebra(enumerate_roots(t), std::move(table));
}

LieAlgebra LieAlgebra::with_entry(std::size_t i, std::size_t j, AlgebraElement value) const {
  if (i >= dim_ || j >= dim_) throw DimensionError("with_entry: index out of range");
  LieAlgebra copy = *this;
  copy.table_[i * dim_ + j] = std::move(value);
  return copy;
}

BasisElement LieAlgebra::basis_element(std::size_t index) const {
  if (index >= dim_) throw DimensionError("basis index out of range");
  if (index < rank()) return CartanGen{static_cast<int>(index + 1)};
  return RootGen{roots_[index - rank()]};
}

std::size_t LieAlgebra::index_of(const BasisElement& b) const {
  if (const auto* h = std::get_if<CartanGen>(&b)) {
    if (h->i < 1 || static_cast<std::size_t>(h->i) > rank()) throw DimensionError("Cartan generator out of range");
    return static_cast<std::size_t>(h->i - 1);
  }
  const auto idx = roots_.index_of(std::get<RootGen>(b).alpha);
  if (!idx) throw Error("not a root of " + type().name());
  return rank() + *idx;
}

std::string LieAlgebra::label(std::size_t index) const {
  const BasisElement b = basis_element(index);
  if (const auto* h = std::get_if<CartanGen>(&b)) return "h" + std::to_string(h->i);
  std::string s = "g[";
  const auto& c = std::get<RootGen>(b).alpha.coords;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "]";
}

AlgebraElement LieAlgebra::element(const BasisElement& b, std::int64_t coef) const {
  return AlgebraElement::basis(dim_, static_cast<int>(index_of(b)), coef);
}

AlgebraElement LieAlgebra::bracket(const AlgebraElement& x, const AlgebraElement& y) const {
  if (x.dimension() != dim_ || y.dimension() != dim_)
    throw DimensionError("bracket: element does not belong to this " + type().name() + " algebra");
  std::vector<Term> out;
  for (const auto& a : x.terms())
    for (const auto& b : y.terms()) {
      const std::int64_t s = checked_mul(a.coef, b.coef);
      for (const auto& t : bracket_basis(static_cast<std::size_t>(a.index), static_cast<std::size_t>(b.index)).terms())
        out.push_back({t.index, checked_mul(s, t.coef)});
    }
  return AlgebraElement(dim_, std::move(out));
}

std::vector<std::pair<std::size_t, std::size_t>> antisymmetry_violations(const LieAlgebra& L) {
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  const std::size_t n = L.dimension();
  for (std::size_t i = 0; i < n; ++i) {
    if (!L.bracket_basis(i, i).is_zero()) bad.emplace_back(i, i);
    for (std::size_t j = i + 1; j < n; ++j)
      if (L.bracket_basis(i, j) != -L.bracket_basis(j, i)) bad.emplace_back(i, j);
  }
  return bad;
}

JacobiReport check_jacobi(const LieAlgebra& L) {
  const std::size_t n = L.dimension();
  JacobiReport report;
  Accumulator acc(n);
  // [[x,y],z] summed over terms t of [x,y]: coefficient * [e_t, z]
  auto add_outer = [&](std::size_t x, std::size_t y, std::size_t z) {
    for (const auto& t : L.bracket_basis(x, y).terms())
      acc.add(L.bracket_basis(static_cast<std::size_t>(t.index), z), t.coef);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = j + 1; l < n; ++l) {
        add_outer(i, j, l);
        add_outer(j, l, i);
        add_outer(l, i, j);
        ++report.triples_checked;
        if (!acc.drain_is_zero()) report.violations.emplace_back(i, j, l);
      }
  return report;
}

IntMatrix killing_form(const LieAlgebra& L) {
  const std::size_t n = L.dimension();
  // kappa(x, y) = sum_z coefficient of z in [x, [y, z]]
  IntMatrix kappa(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y) {
      std::int64_t tr = 0;
      for (std::size_t z = 0; z < n; ++z)
        for (const auto& t : L.bracket_basis(y, z).terms())
          tr += t.coef * L.bracket_basis(x, static_cast<std::size_t>(t.index)).coefficient(static_cast<int>(z));
      kappa(x, y) = tr;
      kappa(y, x) = tr;
    }
  return kappa;
}

bool is_nondegenerate(const IntMatrix& killing) { return exact_determinant(killing) != 0; }

Sl2Triple sl2_triple(const LieAlgebra& L, const Root& alpha) {
  if (!L.root_system().contains(alpha)) throw Error("sl2_triple: not a root of " + L.type().name());
  Sl2Triple tr;
  tr.e = L.element(RootGen{alpha});
  tr.f = L.element(RootGen{-alpha});
  std::vector<Term> h;
  for (std::size_t i = 0; i < alpha.size(); ++i) h.push_back({static_cast<int>(i), alpha.coords[i]});
  tr.h = AlgebraElement(L.dimension(), std::move(h));
  tr.verified = L.bracket(tr.h, tr.e) == tr.e * 2 && L.bracket(tr.h, tr.f) == tr.f * -2 &&
                L.bracket(tr.e, tr.f) == -tr.h;
  return tr;
}

IntMatrix sl_model_image(const LieAlgebra& L, std::size_t index) {
  if (L.type().family != Family::A) throw Error("the matrix model exists for type A only");
  const std::size_t n = L.rank() + 1;
  IntMatrix m(n, n);
  const BasisElement b = L.basis_element(index);
  if (const auto* h = std::get_if<CartanGen>(&b)) {
    const auto i = static_cast<std::size_t>(h->i - 1);
    m(i, i) = 1;
    m(i + 1, i + 1) = -1;
    return m;
  }
  // alpha_ij has ones in positions i..j-1; negative roots go to -E_ji.
  const auto& c = std::get<RootGen>(b).alpha.coords;
  const bool positive = *std::max_element(c.begin(), c.end()) > 0;
  std::size_t first = n, last = 0;
  for (std::size_t p = 0; p < c.size(); ++p)
    if (c[p] != 0) {
      first = std::min(first, p);
      last = p;
    }
  const std::size_t i = first, j = last + 1;
  if (positive)
    m(i, j) = 1;
  else
    m(j, i) = -1;
  return m;
}

bool slk_model_check(int k) {
  if (k < 1 || k > 8) throw Error("slk_model_check: k must be in 1..8");
  const LieAlgebra L = LieAlgebra::build(make_type("A" + std::to_string(k)));
  const std::size_t n = L.dimension();
  const auto size = static_cast<std::size_t>(k + 1);
  std::vector<IntMatrix> img;
  for (std::size_t i = 0; i < n; ++i) {
    img.push_back(sl_model_image(L, i));
    std::int64_t tr = 0;
    for (std::size_t d = 0; d < size; ++d) tr += img.back()(d, d);
    if (tr != 0) return false;
  }
  if (n != size * size - 1) return false;

  // Injectivity: Gram matrix of the flattened images is nonsingular.
  IntMatrix gram(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::int64_t s = 0;
      for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c) s += img[a](r, c) * img[b](r, c);
      gram(a, b) = s;
    }
  if (exact_determinant(gram) == 0) return false;

  auto image = [&](const AlgebraElement& x) {
    IntMatrix m(size, size);
    for (const auto& t : x.terms()) m = m + img[static_cast<std::size_t>(t.index)].scaled(t.coef);
    return m;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const IntMatrix comm = img[a] * img[b] - img[b] * img[a];
      if (image(L.bracket_basis(a, b)) != comm) return false;
    }
  return true;
}

nlohmann::json structure_constants_json(const LieAlgebra& L) {
  const std::size_t n = L.dimension();
  nlohmann::json basis = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i) basis.push_back(L.label(i));
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& v = L.bracket_basis(i, j);
      if (v.is_zero()) continue;
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& t : v.terms()) terms.push_back({t.index, t.coef});
      rows.push_back({{"i", i}, {"j", j}, {"terms", terms}});
    }
  return {{"type", L.type().name()}, {"dimension", n}, {"basis", basis}, {"brackets", rows}};
}

std::string structure_constants_csv(const LieAlgebra& L) {
  std::ostringstream out;
  out << "i,j,index,coef\n";
  const std::size_t n = L.dimension();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (const auto& t : L.bracket_basis(i, j).terms()) out << i << ',' << j << ',' << t.index << ',' << t.coef << '\n';
  return out.str();
}

LieAlgebra import_structure_constants(const nlohmann::json& doc) {
  try {
    const LieType t = make_type(doc.at("type").get<std::string>());
    const RootSystem rs = enumerate_roots(t);
    const std::size_t n = static_cast<std::size_t>(t.rank) + rs.size();
    if (doc.at("dimension").get<std::size_t>() != n) throw Error("dimension does not match type");
    std::vector<AlgebraElement> table(n * n, AlgebraElement(n));
    for (const auto& row : doc.at("brackets")) {
      const auto i = row.at("i").get<std::size_t>();
      const auto j = row.at("j").get<std::size_t>();
      if (i >= j || j >= n) throw Error("bracket row indices must satisfy i < j < dimension");
      std::vector<Term> terms;
      for (const auto& term : row.at("terms")) terms.push_back({term.at(0).get<int>(), term.at(1).get<std::int64_t>()});
      AlgebraElement v(n, std::move(terms));
      table[j * n + i] = -v;
      table[i * n + j] = std::move(v);
    }
    LieAlgebra L = LieAlgebra::from_table(t, std::move(table));
    const auto& labels = doc.at("basis");
    if (labels.size() != n) throw Error("basis label count does not match dimension");
    for (std::size_t i = 0; i < n; ++i)
      if (labels[i].get<std::string>() != L.label(i)) throw Error("basis label mismatch at index " + std::to_string(i));
    return L;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed structure-constant document: ") + e.what());
  }
}

}  // namespace geomlie

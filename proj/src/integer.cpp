#include "geomlie/integer.hpp"

#include <cmath>
#include <sstream>

namespace geomlie {

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw DimensionError("ragged row list");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols) {
  return from_rows(cols).transpose();
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<IntVector> IntMatrix::to_rows() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator-() const { return scaled(-1); }

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum: shape mismatch");
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = checked_add(data_[i], o.data_[i]);
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference: shape mismatch");
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = checked_sub(data_[i], o.data_[i]);
  return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionError("matrix product: shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t l = 0; l < cols_; ++l) {
      const std::int64_t a = (*this)(i, l);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r(i, j) = checked_add(r(i, j), checked_mul(a, o(l, j)));
    }
  return r;
}

IntMatrix IntMatrix::scaled(std::int64_t s) const {
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = checked_mul(data_[i], s);
  return r;
}

IntVector IntMatrix::apply(std::span<const std::int64_t> v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector product: length mismatch");
  IntVector r(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      r[i] = checked_add(r[i], checked_mul((*this)(i, j), v[j]));
  return r;
}

IntMatrix IntMatrix::power(unsigned e) const {
  if (!square()) throw DimensionError("power of non-square matrix");
  IntMatrix result = identity(rows_);
  IntMatrix base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

bool IntMatrix::is_identity() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool IntMatrix::is_symmetric() const {
  return square() && *this == transpose();
}

bool IntMatrix::is_upper_triangular() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if ((*this)(i, j) != 0) return false;
  return true;
}

bool IntMatrix::is_lower_triangular() const {
  return square() && transpose().is_upper_triangular();
}

std::int64_t IntMatrix::determinant() const {
  if (!square()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  std::vector<__int128> a(data_.begin(), data_.end());
  auto at = [&](std::size_t i, std::size_t j) -> __int128& { return a[i * n + j]; };
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = (at(k, k) * at(i, j) - at(i, k) * at(k, j)) / prev;
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  const __int128 d = sign * at(n - 1, n - 1);
  if (d > INT64_MAX || d < INT64_MIN) throw OverflowError("determinant exceeds 64 bits");
  return static_cast<std::int64_t>(d);
}

unsigned IntMatrix::order(unsigned limit) const {
  if (!square()) throw DimensionError("order of non-square matrix");
  IntMatrix p = *this;
  for (unsigned m = 1; m <= limit; ++m) {
    if (p.is_identity()) return m;
    p = p * (*this);
  }
  return 0;
}

IntMatrix IntMatrix::unimodular_inverse() const {
  if (!square()) throw DimensionError("inverse of non-square matrix");
  const std::int64_t det = determinant();
  if (det != 1 && det != -1) throw Error("matrix is not unimodular");
  // adjugate / det; cofactors via minors
  const std::size_t n = rows_;
  IntMatrix inv(n, n);
  if (n == 1) {
    inv(0, 0) = det;
    return inv;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = (*this)(r, c);
        }
        ++mr;
      }
      const std::int64_t cof = ((i + j) % 2 == 0 ? 1 : -1) * minor.determinant();
      inv(j, i) = cof * det;
    }
  return inv;
}

bool IntMatrix::is_positive_definite() const {
  if (!is_symmetric()) return false;
  for (std::size_t m = 1; m <= rows_; ++m) {
    IntMatrix lead(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) lead(i, j) = (*this)(i, j);
    if (lead.determinant() <= 0) return false;
  }
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << "]\n";
  }
  return os.str();
}

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t det_mod(const IntMatrix& m, std::uint64_t p) {
  const std::size_t n = m.rows();
  std::vector<std::uint64_t> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t v = m(i, j) % static_cast<std::int64_t>(p);
      a[i * n + j] = static_cast<std::uint64_t>(v < 0 ? v + static_cast<std::int64_t>(p) : v);
    }
  std::uint64_t det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      det = (p - det) % p;
    }
    const std::uint64_t pv = a[k * n + k];
    det = det * pv % p;
    const std::uint64_t inv = pow_mod(pv, p - 2, p);
    for (std::size_t i = k + 1; i < n; ++i) {
      const std::uint64_t f = a[i * n + k] * inv % p;
      if (f == 0) continue;
      for (std::size_t j = k; j < n; ++j)
        a[i * n + j] = (a[i * n + j] + (p - f) * a[k * n + j]) % p;
    }
  }
  return det;
}

}  // namespace

BigInt exact_determinant(const IntMatrix& m) {
  if (!m.square()) throw DimensionError("determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  double log2_bound = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    long double ss = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) ss += static_cast<long double>(m(i, j)) * m(i, j);
    if (ss == 0) return 0;
    log2_bound += 0.5 * std::log2(static_cast<double>(ss));
  }
  // |det| <= 2^log2_bound, so the product of moduli must exceed twice that.
  const double needed_bits = log2_bound + 2.0;

  BigInt modulus = 1;
  BigInt residue = 0;
  double have_bits = 0.0;
  std::uint64_t p = (1ULL << 31) - 1;
  while (have_bits < needed_bits) {
    while (!is_prime(p)) --p;
    const std::uint64_t r = det_mod(m, p);
    // Garner step: residue + modulus * t == r (mod p)
    const std::uint64_t res_mod = static_cast<std::uint64_t>(residue % p);
    const std::uint64_t mod_mod = static_cast<std::uint64_t>(modulus % p);
    const std::uint64_t diff = (r + p - res_mod) % p;
    const std::uint64_t t = diff * pow_mod(mod_mod, p - 2, p) % p;
    residue += modulus * t;
    modulus *= p;
    have_bits += std::log2(static_cast<double>(p));
    --p;
  }
  if (residue > modulus / 2) residue -= modulus;
  return residue;
}

}  // namespace geomlie

#include "supercohom/linalg.hpp"

#include <algorithm>
#include <utility>

namespace supercohom {

Matrix::Matrix(const PrimeField& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(const PrimeField& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const PrimeField& field, std::size_t cols,
                         const std::vector<Vec>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j] % field.characteristic();
  }
  return m;
}

Matrix Matrix::from_columns(const PrimeField& field, std::size_t rows,
                            const std::vector<Vec>& cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

Residue Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw DimensionError("matrix index out of range");
  return (*this)(i, j);
}

Vec Matrix::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Matrix::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_column(std::size_t j, const Vec& v) {
  if (v.size() != rows_) throw DimensionError("column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i] % field_.characteristic();
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  const std::uint64_t p = field_.characteristic();
  Vec out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    const Residue* r = &data_[i * cols_];
    for (std::size_t j = 0; j < cols_; ++j) {
      if (r[j] != 0 && v[j] != 0) acc = (acc + static_cast<std::uint64_t>(r[j]) * v[j]) % p;
    }
    out[i] = static_cast<Residue>(acc);
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionError("matrix product size mismatch");
  const std::uint64_t p = field_.characteristic();
  Matrix out(field_, rows_, o.cols_);
  std::vector<std::uint64_t> acc(o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = (*this)(i, k);
      if (a == 0) continue;
      const Residue* b = &o.data_[k * o.cols_];
      for (std::size_t j = 0; j < o.cols_; ++j) acc[j] = (acc[j] + a * b[j]) % p;
    }
    for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) = static_cast<Residue>(acc[j]);
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum size mismatch");
  Matrix out(*this);
  for (std::size_t t = 0; t < data_.size(); ++t) out.data_[t] = field_.add(data_[t], o.data_[t]);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference size mismatch");
  Matrix out(*this);
  for (std::size_t t = 0; t < data_.size(); ++t) out.data_[t] = field_.sub(data_[t], o.data_[t]);
  return out;
}

Matrix Matrix::scaled(Residue a) const {
  Matrix out(*this);
  for (auto& x : out.data_) x = field_.mul(a, x);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Matrix Matrix::pow(unsigned e) const {
  if (rows_ != cols_) throw DimensionError("power of a non-square matrix");
  Matrix result = identity(field_, rows_);
  Matrix base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

bool Matrix::is_zero() const {
  for (Residue r : data_)
    if (r != 0) return false;
  return true;
}

Matrix Matrix::vstack(const Matrix& below) const {
  if (cols_ != below.cols_) throw DimensionError("vstack column mismatch");
  Matrix out(field_, rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(),
            out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

Matrix Matrix::hstack(const Matrix& right) const {
  if (rows_ != right.rows_) throw DimensionError("hstack row mismatch");
  Matrix out(field_, rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) out(i, cols_ + j) = right(i, j);
  }
  return out;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& row_idx,
                         const std::vector<std::size_t>& col_idx) const {
  Matrix out(field_, row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j) out(i, j) = at(row_idx[i], col_idx[j]);
  return out;
}

std::vector<std::size_t> row_reduce(const PrimeField& field, std::vector<Vec>& rows,
                                    std::size_t cols) {
  const std::uint64_t p = field.characteristic();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Vec& prow = rows[r];
    const Residue inv = field.inv(prow[c]);
    for (std::size_t j = c; j < cols; ++j) prow[j] = field.mul(prow[j], inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Vec& row = rows[i];
      const std::uint64_t f = p - row[c];
      for (std::size_t j = c; j < cols; ++j) {
        if (prow[j] != 0) row[j] = static_cast<Residue>((row[j] + f * prow[j]) % p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

Subspace::Subspace(const PrimeField& field, std::size_t ambient)
    : field_(field), ambient_(ambient) {}

Subspace::Subspace(const PrimeField& field, std::size_t ambient, std::vector<Vec> spanning)
    : field_(field), ambient_(ambient), basis_(std::move(spanning)) {
  for (auto& v : basis_) {
    if (v.size() != ambient_) throw DimensionError("spanning vector has wrong length");
    for (auto& x : v) x %= field_.characteristic();
  }
  pivots_ = row_reduce(field_, basis_, ambient_);
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionError("vector has wrong length for subspace");
  Vec out(v);
  for (auto& x : out) x %= field_.characteristic();
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Residue c = out[pivots_[i]];
    if (c != 0) field_.axpy(field_.neg(c), basis_[i], out);
  }
  return out;
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis())
    if (!contains(v)) return false;
  return true;
}

bool Subspace::extend(const Vec& v) {
  Vec r = reduce(v);
  if (is_zero(r)) return false;
  basis_.push_back(std::move(r));
  pivots_ = row_reduce(field_, basis_, ambient_);
  return true;
}

RankKernelImage rank_kernel_image(const Matrix& m) {
  const PrimeField& f = m.field();
  std::vector<Vec> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  const auto pivots = row_reduce(f, rows, m.cols());

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> ker;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(rows[i][free]);
    ker.push_back(std::move(v));
  }
  std::vector<Vec> img;
  img.reserve(pivots.size());
  for (auto c : pivots) img.push_back(m.column(c));
  return {pivots.size(), Subspace(f, m.cols(), std::move(ker)),
          Subspace(f, m.rows(), std::move(img))};
}

std::size_t rank(const Matrix& m) {
  std::vector<Vec> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return row_reduce(m.field(), rows, m.cols()).size();
}

Subspace kernel(const Matrix& m) { return rank_kernel_image(m).kernel; }

std::vector<Vec> quotient_basis(const Subspace& z, const Subspace& b) {
  if (z.ambient() != b.ambient()) throw DimensionError("quotient of subspaces in different spaces");
  for (std::size_t i = 0; i < b.dim(); ++i) {
    if (!z.contains(b.basis()[i]))
      throw ContainmentError("boundary space is not contained in cycle space (basis vector " +
                             std::to_string(i) + ")");
  }
  Subspace span = b;
  std::vector<Vec> reps;
  for (const auto& v : z.basis()) {
    Vec r = span.reduce(v);
    if (is_zero(r)) continue;
    reps.push_back(r);
    span.extend(r);
  }
  return reps;
}

std::optional<Vec> solve(const Matrix& m, const Vec& rhs) {
  if (rhs.size() != m.rows()) throw DimensionError("right-hand side has wrong length");
  const PrimeField& f = m.field();
  std::vector<Vec> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vec r = m.row(i);
    r.push_back(rhs[i] % f.characteristic());
    rows.push_back(std::move(r));
  }
  const auto pivots = row_reduce(f, rows, m.cols() + 1);
  Vec x(m.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == m.cols()) return std::nullopt;
    x[pivots[i]] = rows[i][m.cols()];
  }
  return x;
}

}  // namespace supercohom

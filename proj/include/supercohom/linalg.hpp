#pragma once

// Dense exact linear algebra over GF(p).

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "supercohom/errors.hpp"
#include "supercohom/field.hpp"

namespace supercohom {

class Matrix {
 public:
  Matrix(const PrimeField& field, std::size_t rows, std::size_t cols);
  static Matrix identity(const PrimeField& field, std::size_t n);
  static Matrix from_rows(const PrimeField& field, std::size_t cols,
                          const std::vector<Vec>& rows);
  static Matrix from_columns(const PrimeField& field, std::size_t rows,
                             const std::vector<Vec>& cols);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Residue operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Residue& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Residue at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, std::int64_t value) {
    (*this)(i, j) = field_.reduce(value);
  }
  void add_to(std::size_t i, std::size_t j, Residue value) {
    Residue& r = (*this)(i, j);
    r = field_.add(r, value);
  }

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;
  void set_column(std::size_t j, const Vec& v);

  Vec apply(const Vec& v) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(Residue a) const;
  Matrix transpose() const;
  Matrix pow(unsigned e) const;
  bool is_zero() const;

  // Rows stacked under this one / columns appended to the right.
  Matrix vstack(const Matrix& below) const;
  Matrix hstack(const Matrix& right) const;
  Matrix submatrix(const std::vector<std::size_t>& row_idx,
                   const std::vector<std::size_t>& col_idx) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

// Reduces rows in place to reduced row-echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(const PrimeField& field, std::vector<Vec>& rows,
                                    std::size_t cols);

// A subspace of GF(p)^n stored by its RREF basis.
class Subspace {
 public:
  Subspace(const PrimeField& field, std::size_t ambient);
  Subspace(const PrimeField& field, std::size_t ambient, std::vector<Vec> spanning);

  const PrimeField& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Normal form of v modulo this subspace (pivot coordinates cleared).
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const { return is_zero(reduce(v)); }
  bool contains(const Subspace& other) const;
  // Appends v if independent; returns whether the dimension grew.
  bool extend(const Vec& v);

 private:
  PrimeField field_;
  std::size_t ambient_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

struct RankKernelImage {
  std::size_t rank;
  Subspace kernel;
  Subspace image;
};

RankKernelImage rank_kernel_image(const Matrix& m);
std::size_t rank(const Matrix& m);
Subspace kernel(const Matrix& m);

// Coset representatives of Z/B: normal forms that extend an echelon basis of
// B to one of Z. Throws ContainmentError when B is not inside Z.
std::vector<Vec> quotient_basis(const Subspace& z, const Subspace& b);

// Some x with m x = rhs, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& rhs);

}  // namespace supercohom

#pragma once

#include <vector>

#include "lieform/rational.hpp"

namespace lieform {

struct SingularMatrix : Error {
  explicit SingularMatrix(const std::string& msg) : Error("SingularMatrix", msg) {}
};
struct NotSymmetric : Error {
  explicit NotSymmetric(const std::string& msg) : Error("NotSymmetric", msg) {}
};
struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& msg) : Error("DimensionMismatch", msg) {}
};

// Dense matrix of exact rationals. Everything below is plain fraction
// arithmetic; there is no floating point anywhere in this library.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[index(i, j)]; }
  const Rat& at(int i, int j) const { return a_[index(i, j)]; }
  void swap_rows(int i, int j);

  bool operator==(const RatMatrix&) const = default;

 private:
  std::size_t index(int i, int j) const;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> a_;
};

// Exact solution of A x = b for square A; throws SingularMatrix when A is not
// invertible.
RatVec solve_linear(const RatMatrix& a, const RatVec& b);

// Basis of {x : A x = 0}, one vector per free column of the reduced row
// echelon form, free columns in ascending order, unit entry at the free
// coordinate. Empty when A is injective. The output is canonical for a given
// A, which makes downstream reports reproducible.
std::vector<RatVec> nullspace(const RatMatrix& a);

// Leading principal minors, all exactly > 0. Throws NotSymmetric unless
// S == S^T.
bool is_positive_definite(const RatMatrix& s);

int rank(const RatMatrix& a);
Rat determinant(const RatMatrix& a);

// Reduced row echelon form (pivots 1, zeros above and below each pivot).
RatMatrix rref(const RatMatrix& a);

}  // namespace lieform

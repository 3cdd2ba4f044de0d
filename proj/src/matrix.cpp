#include "lieform/matrix.hpp"

#include <utility>

namespace lieform {

std::size_t RatMatrix::index(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw DimensionMismatch("matrix index out of range");
  return static_cast<std::size_t>(i) * cols_ + j;
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void RatMatrix::swap_rows(int i, int j) {
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

namespace {

// In-place reduced row echelon form; returns the pivot columns in order.
std::vector<int> rref_in_place(RatMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r) m.swap_rows(p, r);
    const Rat lead = m.at(r, c);
    for (int j = c; j < m.cols(); ++j) m.at(r, j) /= lead;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const Rat f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RatVec solve_linear(const RatMatrix& a, const RatVec& b) {
  if (a.rows() != a.cols())
    throw DimensionMismatch("solve_linear needs a square matrix");
  if (static_cast<int>(b.size()) != a.rows())
    throw DimensionMismatch("right-hand side length does not match");
  const int n = a.rows();
  RatMatrix aug(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n) = b[static_cast<std::size_t>(i)];
  }
  const auto pivots = rref_in_place(aug);
  if (static_cast<int>(pivots.size()) != n || (n > 0 && pivots.back() != n - 1))
    throw SingularMatrix("matrix is not invertible");
  RatVec x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = aug.at(i, n);
  return x;
}

std::vector<RatVec> nullspace(const RatMatrix& a) {
  RatMatrix m = a;
  const auto pivots = rref_in_place(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<RatVec> basis;
  for (int f = 0; f < a.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    RatVec v(static_cast<std::size_t>(a.cols()));
    v[static_cast<std::size_t>(f)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<std::size_t>(pivots[r])] = -m.at(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_positive_definite(const RatMatrix& s) {
  if (s.rows() != s.cols())
    throw NotSymmetric("positive-definiteness needs a square matrix");
  for (int i = 0; i < s.rows(); ++i)
    for (int j = i + 1; j < s.cols(); ++j)
      if (s.at(i, j) != s.at(j, i))
        throw NotSymmetric("matrix is not symmetric");
  for (int k = 1; k <= s.rows(); ++k) {
    RatMatrix lead(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lead.at(i, j) = s.at(i, j);
    if (determinant(lead) <= 0) return false;
  }
  return true;
}

int rank(const RatMatrix& a) {
  RatMatrix m = a;
  return static_cast<int>(rref_in_place(m).size());
}

Rat determinant(const RatMatrix& a) {
  if (a.rows() != a.cols())
    throw DimensionMismatch("determinant needs a square matrix");
  const int n = a.rows();
  RatMatrix m = a;
  Rat det = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i) {
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) return Rat(0);
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m.at(c, c);
    const Rat lead = m.at(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (m.at(i, c) == 0) continue;
      const Rat f = m.at(i, c) / lead;
      for (int j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return det;
}

RatMatrix rref(const RatMatrix& a) {
  RatMatrix m = a;
  rref_in_place(m);
  return m;
}

}  // namespace lieform

#pragma once

#include <cstdint>

#include "lieform/chevalley.hpp"

namespace lieform {

struct IncompatibleInputs : Error {
  explicit IncompatibleInputs(const std::string& msg) : Error("IncompatibleInputs", msg) {}
};
struct NotSkewSymmetric : Error {
  explicit NotSkewSymmetric(const std::string& msg) : Error("NotSkewSymmetric", msg) {}
};

// Skew-symmetric rational parameter matrix (u_ij = -u_ji, zero diagonal).
class UMatrix {
 public:
  static UMatrix zero(int n);
  static UMatrix from_grid(const std::vector<RatVec>& grid);  // throws NotSkewSymmetric
  // Seeded parameters: the upper triangle is drawn as u_ij = s/t with
  // s in [-9,9]\{0}, t in [1,9], then skew-completed. Draws come straight
  // from mt19937_64 by modulo, so the stream is identical everywhere.
  static UMatrix random(int n, std::uint64_t seed);

  int n() const { return n_; }
  const Rat& at(int i, int j) const;
  bool zero_matrix() const;

  bool operator==(const UMatrix&) const = default;

 private:
  UMatrix() = default;
  int n_ = 0;
  std::vector<RatVec> u_;
};

// u(lambda, mu) = sum_ij u_ij lambda(h_i) mu(h_j); alternating.
Rat u_form(const CartanMatrix& c, const UMatrix& u, const Weight& lam, const Weight& mu);

// The unique Phi(lambda) with (Phi(lambda)|mu) = u(lambda, mu) for all mu,
// solved exactly against the Gram matrix DC.
Weight phi(const CartanMatrix& c, const UMatrix& u, const Weight& lam);
Weight phi_plus(const CartanMatrix& c, const UMatrix& u, const Weight& lam);   // Phi + I
Weight phi_minus(const CartanMatrix& c, const UMatrix& u, const Weight& lam);  // Phi - I

// The deformed Lie algebra on the basis {x_alpha, k_i, h_i}: the H/K blocks
// commute, [h_i, x_alpha] = ((lam_i|alpha) - u(lam_i, alpha)) x_alpha and
// [k_i, x_alpha] = ((lam_i|alpha) + u(lam_i, alpha)) x_alpha with
// lam_i = alpha_i / d_i, root-vector brackets copied from the simple algebra
// except [x_alpha, x_-alpha] = (x_alpha|x_-alpha)(h_alpha + k_alpha)/2.
// Carries the invariant form as a dense Gram table; its determinant is kept
// as a diagnostic and may be zero.
//
// Basis order: negative root vectors, k_1..k_n, h_1..h_n, positive root
// vectors.
class DAlgebra {
 public:
  DAlgebra(const GAlgebra& g, UMatrix u);  // throws IncompatibleInputs on rank clash

  const CartanMatrix& cartan() const { return rs_.cartan(); }
  const RootSystem& root_system() const { return rs_; }
  const UMatrix& u() const { return u_; }
  const BracketTable& table() const { return table_; }
  const RatMatrix& gram() const { return gram_; }
  const Rat& gram_det() const { return gram_det_; }
  int dim() const { return table_.dim(); }

  int e_pos(int root_idx) const;
  int k_pos(int i) const;
  int h_pos(int i) const;

  Weight lambda_of_h(int i) const;  // lam_i = alpha_i / d_i, so h_{lam_i} = h_i

  Rat form(const SparseElt& x, const SparseElt& y) const;
  SparseElt h_of(const Weight& lam) const;  // h_lambda over the H block
  SparseElt k_of(const Weight& lam) const;  // k_lambda over the K block

 private:
  RootSystem rs_;
  UMatrix u_;
  BracketTable table_;
  RatMatrix gram_;
  Rat gram_det_;
};

// Jacobi identity over all basis triples.
Report verify_jacobi(const DAlgebra& d);

// Gram symmetry plus ([a,b]|c) = (a|[b,c]) over all ordered basis triples.
// The (table, gram) form exists so corrupted copies can be checked directly.
Report verify_invariance_table(const BracketTable& t, const RatMatrix& gram);
Report verify_invariance(const DAlgebra& d);

// [h_lam - k_lam, x_alpha] = -2 u(lam, alpha) x_alpha and
// [h_lam + k_lam, x_alpha] = 2 (lam|alpha) x_alpha for lam in {alpha_1..alpha_n}
// and every root alpha.
Report verify_reduction(const DAlgebra& d);

}  // namespace lieform

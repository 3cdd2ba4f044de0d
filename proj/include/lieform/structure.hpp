#pragma once

#include "lieform/deformed.hpp"

namespace lieform {

struct PreconditionViolated : Error {
  explicit PreconditionViolated(const std::string& msg) : Error("PreconditionViolated", msg) {}
};

// Subspace of a fixed coordinate space, stored as the reduced row echelon
// basis. That representation is unique, so equality, containment, and the
// reports built from them are canonical.
class Subspace {
 public:
  Subspace() = default;
  static Subspace span(int ambient_dim, const std::vector<RatVec>& generators);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<RatVec>& basis() const { return rows_; }

  bool contains(const RatVec& v) const;
  bool contains(const Subspace& other) const;
  RatVec reduce(RatVec v) const;  // v mod this subspace

  bool operator==(const Subspace&) const = default;

 private:
  int ambient_ = 0;
  std::vector<RatVec> rows_;
  std::vector<int> pivots_;
};

// Basis of rad(u) = {lambda : u(lambda, .) = 0}: the nullspace of
// M[i][j] = u(alpha_i, alpha_j).
std::vector<Weight> rad_u(const CartanMatrix& c, const UMatrix& u);

// The ideal spanned by h_lambda - k_lambda over a rad(u) basis.
Subspace ideal_l(const DAlgebra& d);

// The ideal spanned by every root vector together with h_i + k_i.
Subspace ideal_m(const DAlgebra& d);

// True iff [b, s] stays in S for every basis element b and S-basis vector s.
bool is_ideal(const DAlgebra& d, const Subspace& s);

// S, [S,S], [[S,S],[S,S]], ... until the chain stabilizes; the subspace is
// solvable iff the last entry is zero.
std::vector<Subspace> derived_series(const DAlgebra& d, const Subspace& s);

// {x : kappa(x, [g,g]) = 0} for the Killing form kappa(a,b) = tr(ad a ad b);
// in characteristic zero this is the solvable radical.
Subspace killing_radical(const BracketTable& t);
Subspace killing_radical(const DAlgebra& d);

// Checks that h_lambda + k_lambda -> 2 h_lambda, x_alpha -> x_alpha is a Lie
// isomorphism from the ideal m onto the simple algebra.
Report iso_m_to_g(const DAlgebra& d, const GAlgebra& g);

// At u = 0: the quotient by l on coset representatives {x_alpha, h_i} is
// isomorphic to the simple algebra under the identity on representatives.
// Throws PreconditionViolated when u != 0.
Report quotient_iso_u0(const DAlgebra& d, const GAlgebra& g);

}  // namespace lieform

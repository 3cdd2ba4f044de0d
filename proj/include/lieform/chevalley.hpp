#pragma once

#include "lieform/bracket.hpp"
#include "lieform/roots.hpp"

namespace lieform {

struct JacobiViolation : Error {
  explicit JacobiViolation(const std::string& msg) : Error("JacobiViolation", msg) {}
};

// The simple Lie algebra on the Chevalley basis {x_alpha (alpha in Delta),
// h_i}: [h_i, x_alpha] = alpha(h_i) x_alpha, [x_alpha, x_-alpha] = the coroot
// of alpha, [x_alpha, x_beta] = N_{alpha,beta} x_{alpha+beta} with
// |N| = p + 1. Signs follow the extraspecial-pair convention: positive roots
// ordered by (height, lex); for each non-simple positive gamma the special
// pair (alpha, beta), alpha minimal, gets N = +(p+1); every other constant is
// propagated through antisymmetry, N_{-a,-b} = -N_{a,b} and the cyclic
// relation N_{a,b}/(c|c) = N_{b,c}/(a|a) for a+b+c = 0. The Jacobi identity
// is verified on all basis triples before the constructor returns.
//
// Basis order: negative root vectors (system order), h_1..h_n, positive root
// vectors.
class GAlgebra {
 public:
  explicit GAlgebra(const CartanMatrix& cartan);
  explicit GAlgebra(RootSystem rs);

  const CartanMatrix& cartan() const { return rs_.cartan(); }
  const RootSystem& root_system() const { return rs_; }
  const BracketTable& table() const { return table_; }
  const RatMatrix& gram() const { return gram_; }
  int dim() const { return table_.dim(); }

  int e_pos(int root_idx) const;  // basis position of x_alpha
  int h_pos(int i) const;         // basis position of h_i

  // Invariant form: (h_i|h_j) = a_ij/d_j, (x_alpha|x_-alpha) = 2/(alpha|alpha),
  // every other basis pairing zero.
  Rat form(const SparseElt& x, const SparseElt& y) const;

  SparseElt coroot_elt(int root_idx) const;  // [x_alpha, x_-alpha] over the H block
  SparseElt h_of(const Weight& lam) const;   // h_lambda over the H block

 private:
  void build();
  RootSystem rs_;
  BracketTable table_;
  RatMatrix gram_;
};

// (ad x_{+-alpha_i})^{1 - a_ij} (x_{+-alpha_j}) = 0 for all i != j, both signs.
Report verify_serre(const GAlgebra& g);

// [x_alpha, x_-alpha] = (x_alpha|x_-alpha) h_alpha for every positive root.
Report verify_coroot_identity(const GAlgebra& g);

// ([a,b]|c) = (a|[b,c]) on all ordered basis triples.
Report verify_form_invariance_g(const GAlgebra& g);

}  // namespace lieform

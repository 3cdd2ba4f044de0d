#pragma once

#include <string>
#include <vector>

#include "lieform/matrix.hpp"

namespace lieform {

struct NotGCM : Error {
  explicit NotGCM(const std::string& msg) : Error("NotGCM", msg) {}
};
struct NotIndecomposable : Error {
  explicit NotIndecomposable(const std::string& msg) : Error("NotIndecomposable", msg) {}
};
struct NotSymmetrizable : Error {
  explicit NotSymmetrizable(const std::string& msg) : Error("NotSymmetrizable", msg) {}
};
struct NotFiniteType : Error {
  explicit NotFiniteType(const std::string& msg) : Error("NotFiniteType", msg) {}
};
struct RankMismatch : Error {
  explicit RankMismatch(const std::string& msg) : Error("RankMismatch", msg) {}
};
struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& msg) : Error("IndexOutOfRange", msg) {}
};

// Element of h*, coordinates in the simple-root basis {alpha_i}.
struct Weight {
  RatVec c;
  bool operator==(const Weight&) const = default;
};

// Element of h, coordinates in the coroot basis {h_i}.
struct CartanElt {
  RatVec t;
  bool operator==(const CartanElt&) const = default;
};

// An indecomposable generalized Cartan matrix of finite type together with
// its gcd-normalized symmetrizer (d_i a_ij = d_j a_ji, DC symmetric positive
// definite). Entry convention: a_ij = alpha_j(h_i), so row i belongs to the
// coroot h_i. Immutable once validated.
class CartanMatrix {
 public:
  // Checks every axiom: 2s on the diagonal, non-positive off-diagonal with a
  // symmetric zero pattern, connected Dynkin graph, a positive symmetrizer,
  // and positive-definite DC. Throws NotGCM / NotIndecomposable /
  // NotSymmetrizable / NotFiniteType accordingly.
  static CartanMatrix validate(const std::vector<std::vector<int>>& grid);

  // Named series A1..A8, B2..B8, C3..C8, D4..D8, E6, E7, E8, F4, G2 with
  // Bourbaki node numbering; the result still goes through validate().
  static CartanMatrix catalog(const std::string& name);
  static const std::vector<std::string>& catalog_names();

  int rank() const { return n_; }
  int a(int i, int j) const;
  long d(int i) const;
  const std::vector<long>& symmetrizer() const { return d_; }
  const std::vector<std::vector<int>>& grid() const { return a_; }
  RatMatrix symmetrized() const;  // DC

  bool operator==(const CartanMatrix&) const = default;

 private:
  CartanMatrix() = default;
  int n_ = 0;
  std::vector<std::vector<int>> a_;
  std::vector<long> d_;
};

Weight zero_weight(int n);
Weight simple_root(int n, int i);

// (lambda|mu) = c_lambda^T (DC) c_mu; symmetric, positive definite.
Rat weight_form(const CartanMatrix& c, const Weight& lam, const Weight& mu);

// lambda(h_i) = sum_j c_j a_ij.
Rat eval_on_coroot(const CartanMatrix& c, const Weight& lam, int i);

// h_lambda, the image of lambda under the form-induced identification of h*
// with h: t_j = d_j c_j. The defining property (alpha_i|lambda) =
// alpha_i(h_lambda) is re-checked on every call.
CartanElt nu_inverse(const CartanMatrix& c, const Weight& lam);

// Bilinear extension of (h_i|h_j) = a_ij / d_j.
Rat cartan_form_h(const CartanMatrix& c, const CartanElt& x, const CartanElt& y);

}  // namespace lieform

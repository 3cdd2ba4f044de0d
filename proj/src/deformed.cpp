#include "lieform/deformed.hpp"

#include <random>

namespace lieform {

UMatrix UMatrix::zero(int n) {
  UMatrix u;
  u.n_ = n;
  u.u_.assign(static_cast<std::size_t>(n), RatVec(static_cast<std::size_t>(n)));
  return u;
}

UMatrix UMatrix::from_grid(const std::vector<RatVec>& grid) {
  const int n = static_cast<int>(grid.size());
  for (const auto& row : grid)
    if (static_cast<int>(row.size()) != n)
      throw NotSkewSymmetric("u matrix is not square");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
          -grid[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
        throw NotSkewSymmetric("u matrix is not skew-symmetric");
  UMatrix u;
  u.n_ = n;
  u.u_ = grid;
  return u;
}

UMatrix UMatrix::random(int n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  UMatrix u = zero(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const long r = static_cast<long>(gen() % 18);  // -9..-1, 1..9
      const long s = r < 9 ? r - 9 : r - 8;
      const long t = 1 + static_cast<long>(gen() % 9);
      u.u_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = rat(s, t);
      u.u_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = rat(-s, t);
    }
  }
  return u;
}

const Rat& UMatrix::at(int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_)
    throw IndexOutOfRange("u index out of range");
  return u_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

bool UMatrix::zero_matrix() const {
  for (const auto& row : u_)
    for (const Rat& x : row)
      if (x != 0) return false;
  return true;
}

Rat u_form(const CartanMatrix& c, const UMatrix& u, const Weight& lam, const Weight& mu) {
  const int n = c.rank();
  if (u.n() != n) throw RankMismatch("u matrix rank does not match");
  RatVec le(static_cast<std::size_t>(n)), me(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    le[static_cast<std::size_t>(i)] = eval_on_coroot(c, lam, i);
    me[static_cast<std::size_t>(i)] = eval_on_coroot(c, mu, i);
  }
  Rat acc(0);
  for (int i = 0; i < n; ++i) {
    if (le[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < n; ++j)
      acc += u.at(i, j) * le[static_cast<std::size_t>(i)] * me[static_cast<std::size_t>(j)];
  }
  return acc;
}

Weight phi(const CartanMatrix& c, const UMatrix& u, const Weight& lam) {
  const int n = c.rank();
  // (Phi lam | alpha_i) = u(lam, alpha_i); DC is invertible for finite type,
  // so the system always solves
  RatVec rhs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    rhs[static_cast<std::size_t>(i)] = u_form(c, u, lam, simple_root(n, i));
  return Weight{solve_linear(c.symmetrized(), rhs)};
}

Weight phi_plus(const CartanMatrix& c, const UMatrix& u, const Weight& lam) {
  Weight w = phi(c, u, lam);
  for (std::size_t i = 0; i < w.c.size(); ++i) w.c[i] += lam.c[i];
  return w;
}

Weight phi_minus(const CartanMatrix& c, const UMatrix& u, const Weight& lam) {
  Weight w = phi(c, u, lam);
  for (std::size_t i = 0; i < w.c.size(); ++i) w.c[i] -= lam.c[i];
  return w;
}

DAlgebra::DAlgebra(const GAlgebra& g, UMatrix u) : rs_(g.root_system()), u_(std::move(u)) {
  const CartanMatrix& c = rs_.cartan();
  const int n = c.rank();
  if (u_.n() != n)
    throw IncompatibleInputs("u matrix rank does not match the Cartan matrix");
  const int half = rs_.first_positive();

  std::vector<BasisLabel> basis;
  for (int r = 0; r < half; ++r) basis.push_back({BasisLabel::Kind::E, r});
  for (int i = 0; i < n; ++i) basis.push_back({BasisLabel::Kind::K, i});
  for (int i = 0; i < n; ++i) basis.push_back({BasisLabel::Kind::H, i});
  for (int r = half; r < rs_.size(); ++r) basis.push_back({BasisLabel::Kind::E, r});
  table_ = BracketTable(std::move(basis));

  // [h_i, x_alpha] and [k_i, x_alpha] coefficients: (lam_i|alpha) -+ u(lam_i, alpha)
  std::vector<RatVec> h_coeff(static_cast<std::size_t>(n)), k_coeff(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    h_coeff[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(rs_.size()));
    k_coeff[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(rs_.size()));
    const Weight lam = lambda_of_h(i);
    for (int r = 0; r < rs_.size(); ++r) {
      const Weight alpha = rs_.as_weight(r);
      const Rat pair = weight_form(c, lam, alpha);
      const Rat twist = u_form(c, u_, lam, alpha);
      h_coeff[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] = pair - twist;
      k_coeff[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] = pair + twist;
    }
  }

  const int dim = table_.dim();
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      const BasisLabel& bi = table_.basis()[static_cast<std::size_t>(i)];
      const BasisLabel& bj = table_.basis()[static_cast<std::size_t>(j)];
      const bool ei = bi.kind == BasisLabel::Kind::E;
      const bool ej = bj.kind == BasisLabel::Kind::E;
      SparseElt value;
      if (!ei && !ej) continue;  // H/K blocks commute
      if (ei != ej) {
        const BasisLabel cart = ei ? bj : bi;
        const int ridx = ei ? bi.index : bj.index;
        const auto& coeff = cart.kind == BasisLabel::Kind::H
                                ? h_coeff[static_cast<std::size_t>(cart.index)]
                                : k_coeff[static_cast<std::size_t>(cart.index)];
        Rat v = coeff[static_cast<std::size_t>(ridx)];
        if (ei) v = -v;  // stored pair has x_alpha on the left
        value.add_term(ei ? i : j, v);
      } else {
        const int ra = bi.index, rb = bj.index;
        if (rs_.negative_of(ra) == rb) {
          // [x_-alpha, x_alpha] = -(x_alpha|x_-alpha)(h_alpha + k_alpha)/2
          const int posr = rb;  // basis order puts the negative root first
          const Rat val = Rat(2) / Rat(rs_.norm(posr));
          const auto& coords = rs_.roots()[static_cast<std::size_t>(posr)].coords;
          for (int t = 0; t < n; ++t) {
            const Rat coord = -val / 2 * rat(c.d(t) * coords[static_cast<std::size_t>(t)]);
            value.add_term(h_pos(t), coord);
            value.add_term(k_pos(t), coord);
          }
        } else {
          // away from opposite pairs the bracket agrees with the simple algebra
          const SparseElt gval = g.table().bracket(g.e_pos(ra), g.e_pos(rb));
          for (const auto& [pos, cf] : gval.terms()) {
            const BasisLabel& lbl = g.table().basis()[static_cast<std::size_t>(pos)];
            if (lbl.kind != BasisLabel::Kind::E)
              throw Error("Internal", "unexpected Cartan support in a root-sum bracket");
            value.add_term(e_pos(lbl.index), cf);
          }
        }
      }
      table_.set(i, j, std::move(value));
    }
  }

  gram_ = RatMatrix(dim, dim);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rat hh = 2 * rat(c.a(i, j), c.d(j));
      gram_.at(h_pos(i), h_pos(j)) = hh;
      gram_.at(k_pos(i), k_pos(j)) = hh;
      const Rat hk = -2 * u_form(c, u_, lambda_of_h(i), lambda_of_h(j));
      gram_.at(h_pos(i), k_pos(j)) = hk;
      gram_.at(k_pos(j), h_pos(i)) = hk;
    }
  }
  for (int r = 0; r < rs_.size(); ++r)
    gram_.at(e_pos(r), e_pos(rs_.negative_of(r))) = Rat(2) / Rat(rs_.norm(r));
  gram_det_ = determinant(gram_);
}

int DAlgebra::e_pos(int root_idx) const {
  const int half = rs_.first_positive();
  return root_idx < half ? root_idx : root_idx + 2 * rs_.cartan().rank();
}

int DAlgebra::k_pos(int i) const { return rs_.first_positive() + i; }

int DAlgebra::h_pos(int i) const { return rs_.first_positive() + rs_.cartan().rank() + i; }

Weight DAlgebra::lambda_of_h(int i) const {
  const CartanMatrix& c = rs_.cartan();
  Weight w = zero_weight(c.rank());
  w.c[static_cast<std::size_t>(i)] = rat(1, c.d(i));
  return w;
}

Rat DAlgebra::form(const SparseElt& x, const SparseElt& y) const {
  Rat acc(0);
  for (const auto& [i, ci] : x.terms())
    for (const auto& [j, cj] : y.terms()) acc += ci * cj * gram_.at(i, j);
  return acc;
}

SparseElt DAlgebra::h_of(const Weight& lam) const {
  const CartanElt h = nu_inverse(rs_.cartan(), lam);
  SparseElt e;
  for (int j = 0; j < rs_.cartan().rank(); ++j)
    e.add_term(h_pos(j), h.t[static_cast<std::size_t>(j)]);
  return e;
}

SparseElt DAlgebra::k_of(const Weight& lam) const {
  const CartanElt h = nu_inverse(rs_.cartan(), lam);
  SparseElt e;
  for (int j = 0; j < rs_.cartan().rank(); ++j)
    e.add_term(k_pos(j), h.t[static_cast<std::size_t>(j)]);
  return e;
}

Report verify_jacobi(const DAlgebra& d) { return verify_jacobi_table(d.table()); }

Report verify_invariance_table(const BracketTable& t, const RatMatrix& gram) {
  Report rep{"invariance", 0, {}};
  const int dim = t.dim();
  for (int a = 0; a < dim; ++a)
    for (int b = a; b < dim; ++b)
      if (gram.at(a, b) != gram.at(b, a)) {
        rep.violations.push_back("Gram table is not symmetric at (" + std::to_string(a) + "," +
                                 std::to_string(b) + ")");
        if (rep.violations.size() >= 16) return rep;
      }
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      const SparseElt ab = t.bracket(a, b);
      for (int c = 0; c < dim; ++c) {
        ++rep.cases_checked;
        Rat lhs(0);
        for (const auto& [pos, coeff] : ab.terms()) lhs += coeff * gram.at(pos, c);
        Rat rhs(0);
        const SparseElt bc = t.bracket(b, c);
        for (const auto& [pos, coeff] : bc.terms()) rhs += coeff * gram.at(a, pos);
        if (lhs != rhs) {
          if (rep.violations.size() < 16)
            rep.violations.push_back("([a,b]|c) != (a|[b,c]) at (" + std::to_string(a) + "," +
                                     std::to_string(b) + "," + std::to_string(c) + ")");
          else
            return rep;
        }
      }
    }
  }
  return rep;
}

Report verify_invariance(const DAlgebra& d) {
  return verify_invariance_table(d.table(), d.gram());
}

Report verify_reduction(const DAlgebra& d) {
  Report rep{"reduction", 0, {}};
  const CartanMatrix& c = d.cartan();
  const RootSystem& rs = d.root_system();
  for (int i = 0; i < c.rank(); ++i) {
    const Weight lam = simple_root(c.rank(), i);
    const SparseElt h = d.h_of(lam);
    const SparseElt k = d.k_of(lam);
    SparseElt diff = h;
    diff.add_scaled(k, Rat(-1));
    SparseElt sum = h;
    sum.add_scaled(k, Rat(1));
    for (int r = 0; r < rs.size(); ++r) {
      ++rep.cases_checked;
      const SparseElt x = SparseElt::unit(d.e_pos(r));
      const Weight alpha = rs.as_weight(r);

      SparseElt want = x;
      want.scale(-2 * u_form(c, d.u(), lam, alpha));
      if (!(d.table().bracket(diff, x) == want))
        rep.violations.push_back("[h_lam - k_lam, x] != -2u(lam,alpha) x at (i=" +
                                 std::to_string(i + 1) + ", root #" + std::to_string(r) + ")");

      want = x;
      want.scale(2 * weight_form(c, lam, alpha));
      if (!(d.table().bracket(sum, x) == want))
        rep.violations.push_back("[h_lam + k_lam, x] != 2(lam|alpha) x at (i=" +
                                 std::to_string(i + 1) + ", root #" + std::to_string(r) + ")");
    }
  }
  return rep;
}

}  // namespace lieform

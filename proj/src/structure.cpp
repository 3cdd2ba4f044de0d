#include "lieform/structure.hpp"

namespace lieform {

namespace {

RatVec dense_of(const SparseElt& e, int dim) {
  RatVec v(static_cast<std::size_t>(dim));
  for (const auto& [pos, c] : e.terms()) v[static_cast<std::size_t>(pos)] = c;
  return v;
}

SparseElt sparse_of(const RatVec& v) {
  SparseElt e;
  for (std::size_t i = 0; i < v.size(); ++i) e.add_term(static_cast<int>(i), v[i]);
  return e;
}

}  // namespace

Subspace Subspace::span(int ambient_dim, const std::vector<RatVec>& generators) {
  Subspace s;
  s.ambient_ = ambient_dim;
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != ambient_dim)
      throw DimensionMismatch("generator length does not match the ambient dimension");
    RatVec v = s.reduce(g);
    int pivot = -1;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) {
        pivot = static_cast<int>(i);
        break;
      }
    }
    if (pivot < 0) continue;
    const Rat lead = v[static_cast<std::size_t>(pivot)];
    for (Rat& x : v) x /= lead;
    // clear the new pivot column in the existing rows, then insert sorted
    for (std::size_t r = 0; r < s.rows_.size(); ++r) {
      const Rat f = s.rows_[r][static_cast<std::size_t>(pivot)];
      if (f == 0) continue;
      for (std::size_t i = 0; i < v.size(); ++i) s.rows_[r][i] -= f * v[i];
    }
    auto it = s.pivots_.begin();
    auto rit = s.rows_.begin();
    while (it != s.pivots_.end() && *it < pivot) {
      ++it;
      ++rit;
    }
    s.pivots_.insert(it, pivot);
    s.rows_.insert(rit, std::move(v));
  }
  return s;
}

RatVec Subspace::reduce(RatVec v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw DimensionMismatch("vector length does not match the ambient dimension");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rat f = v[static_cast<std::size_t>(pivots_[r])];
    if (f == 0) continue;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= f * rows_[r][i];
  }
  return v;
}

bool Subspace::contains(const RatVec& v) const {
  for (const Rat& x : reduce(v))
    if (x != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& row : other.rows_)
    if (!contains(row)) return false;
  return true;
}

std::vector<Weight> rad_u(const CartanMatrix& c, const UMatrix& u) {
  const int n = c.rank();
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.at(i, j) = u_form(c, u, simple_root(n, i), simple_root(n, j));
  std::vector<Weight> basis;
  for (auto& v : nullspace(m)) basis.push_back(Weight{std::move(v)});
  return basis;
}

Subspace ideal_l(const DAlgebra& d) {
  std::vector<RatVec> gens;
  for (const Weight& lam : rad_u(d.cartan(), d.u())) {
    SparseElt e = d.h_of(lam);
    e.add_scaled(d.k_of(lam), Rat(-1));
    gens.push_back(dense_of(e, d.dim()));
  }
  return Subspace::span(d.dim(), gens);
}

Subspace ideal_m(const DAlgebra& d) {
  std::vector<RatVec> gens;
  for (int r = 0; r < d.root_system().size(); ++r)
    gens.push_back(dense_of(SparseElt::unit(d.e_pos(r)), d.dim()));
  for (int i = 0; i < d.cartan().rank(); ++i) {
    SparseElt e = SparseElt::unit(d.h_pos(i));
    e.add_term(d.k_pos(i), Rat(1));
    gens.push_back(dense_of(e, d.dim()));
  }
  return Subspace::span(d.dim(), gens);
}

bool is_ideal(const DAlgebra& d, const Subspace& s) {
  for (int b = 0; b < d.dim(); ++b) {
    for (const auto& row : s.basis()) {
      const SparseElt w = d.table().ad(b, sparse_of(row));
      if (!s.contains(dense_of(w, d.dim()))) return false;
    }
  }
  return true;
}

std::vector<Subspace> derived_series(const DAlgebra& d, const Subspace& s) {
  std::vector<Subspace> series{s};
  for (;;) {
    const Subspace& cur = series.back();
    std::vector<RatVec> gens;
    const auto& rows = cur.basis();
    for (std::size_t a = 0; a < rows.size(); ++a) {
      const SparseElt ea = sparse_of(rows[a]);
      for (std::size_t b = a + 1; b < rows.size(); ++b)
        gens.push_back(dense_of(d.table().bracket(ea, sparse_of(rows[b])), d.dim()));
    }
    Subspace next = Subspace::span(d.dim(), gens);
    if (next == cur) break;
    series.push_back(std::move(next));
  }
  return series;
}

Subspace killing_radical(const BracketTable& t) {
  const int dim = t.dim();
  // kappa(a,b) = tr(ad a ad b) = sum_j sum_t [b,e_j]_t [a,e_t]_j
  RatMatrix kappa(dim, dim);
  for (int a = 0; a < dim; ++a) {
    for (int b = a; b < dim; ++b) {
      Rat acc(0);
      for (int j = 0; j < dim; ++j) {
        const SparseElt bj = t.bracket(b, j);
        for (const auto& [tpos, cb] : bj.terms()) acc += cb * t.bracket(a, tpos).coeff(j);
      }
      kappa.at(a, b) = acc;
      kappa.at(b, a) = acc;
    }
  }
  std::vector<RatVec> gens;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      const SparseElt e = t.bracket(i, j);
      if (e.zero()) continue;
      RatVec v(static_cast<std::size_t>(dim));
      for (const auto& [pos, c] : e.terms()) v[static_cast<std::size_t>(pos)] = c;
      gens.push_back(std::move(v));
    }
  const Subspace derived = Subspace::span(dim, gens);
  RatMatrix constraints(derived.dim(), dim);
  for (int r = 0; r < derived.dim(); ++r) {
    const auto& w = derived.basis()[static_cast<std::size_t>(r)];
    for (int x = 0; x < dim; ++x) {
      Rat acc(0);
      for (int tpos = 0; tpos < dim; ++tpos)
        if (w[static_cast<std::size_t>(tpos)] != 0)
          acc += w[static_cast<std::size_t>(tpos)] * kappa.at(x, tpos);
      constraints.at(r, x) = acc;
    }
  }
  return Subspace::span(dim, nullspace(constraints));
}

Subspace killing_radical(const DAlgebra& d) { return killing_radical(d.table()); }

Report iso_m_to_g(const DAlgebra& d, const GAlgebra& g) {
  if (!(d.cartan() == g.cartan()))
    throw IncompatibleInputs("the two algebras come from different Cartan matrices");
  Report rep{"iso_m_to_g", 0, {}};
  const RootSystem& rs = d.root_system();
  const int n = d.cartan().rank();

  // m-basis and its image: x_alpha -> x_alpha, h_i + k_i -> 2 h_i
  std::vector<SparseElt> mb, image;
  for (int r = 0; r < rs.size(); ++r) {
    mb.push_back(SparseElt::unit(d.e_pos(r)));
    image.push_back(SparseElt::unit(g.e_pos(r)));
  }
  for (int i = 0; i < n; ++i) {
    SparseElt e = SparseElt::unit(d.h_pos(i));
    e.add_term(d.k_pos(i), Rat(1));
    mb.push_back(std::move(e));
    SparseElt img = SparseElt::unit(g.h_pos(i));
    img.scale(Rat(2));
    image.push_back(std::move(img));
  }

  // psi of an element of m: E coordinates pass through, and the h/k part must
  // have matching coordinates c_i on h_i and k_i, mapping to 2 c_i h_i
  auto psi = [&](const SparseElt& v, bool& inside) {
    SparseElt out;
    RatVec hc(static_cast<std::size_t>(n)), kc(static_cast<std::size_t>(n));
    for (const auto& [pos, c] : v.terms()) {
      const BasisLabel& lbl = d.table().basis()[static_cast<std::size_t>(pos)];
      switch (lbl.kind) {
        case BasisLabel::Kind::E:
          out.add_term(g.e_pos(lbl.index), c);
          break;
        case BasisLabel::Kind::H:
          hc[static_cast<std::size_t>(lbl.index)] = c;
          break;
        case BasisLabel::Kind::K:
          kc[static_cast<std::size_t>(lbl.index)] = c;
          break;
      }
    }
    if (hc != kc) {
      inside = false;
      return out;
    }
    for (int i = 0; i < n; ++i)
      out.add_term(g.h_pos(i), 2 * hc[static_cast<std::size_t>(i)]);
    return out;
  };

  for (std::size_t a = 0; a < mb.size(); ++a) {
    for (std::size_t b = a + 1; b < mb.size(); ++b) {
      ++rep.cases_checked;
      bool inside = true;
      const SparseElt lhs = psi(d.table().bracket(mb[a], mb[b]), inside);
      if (!inside) {
        rep.violations.push_back("bracket of m-basis pair (" + std::to_string(a) + "," +
                                 std::to_string(b) + ") leaves m");
        continue;
      }
      const SparseElt rhs = g.table().bracket(image[a], image[b]);
      if (!(lhs == rhs))
        rep.violations.push_back("psi([a,b]) != [psi a, psi b] at m-basis pair (" +
                                 std::to_string(a) + "," + std::to_string(b) + ")");
    }
  }
  return rep;
}

Report quotient_iso_u0(const DAlgebra& d, const GAlgebra& g) {
  if (!d.u().zero_matrix())
    throw PreconditionViolated("quotient comparison needs u = 0");
  if (!(d.cartan() == g.cartan()))
    throw IncompatibleInputs("the two algebras come from different Cartan matrices");
  Report rep{"quotient_iso_u0", 0, {}};
  const RootSystem& rs = d.root_system();
  const int n = d.cartan().rank();

  // coset representatives {x_alpha, h_i}; k_i = h_i modulo l
  std::vector<SparseElt> reps, images;
  for (int r = 0; r < rs.size(); ++r) {
    reps.push_back(SparseElt::unit(d.e_pos(r)));
    images.push_back(SparseElt::unit(g.e_pos(r)));
  }
  for (int i = 0; i < n; ++i) {
    reps.push_back(SparseElt::unit(d.h_pos(i)));
    images.push_back(SparseElt::unit(g.h_pos(i)));
  }

  auto project = [&](const SparseElt& v) {  // collapse k_i onto h_i, map onto g
    SparseElt out;
    for (const auto& [pos, c] : v.terms()) {
      const BasisLabel& lbl = d.table().basis()[static_cast<std::size_t>(pos)];
      switch (lbl.kind) {
        case BasisLabel::Kind::E:
          out.add_term(g.e_pos(lbl.index), c);
          break;
        case BasisLabel::Kind::H:
        case BasisLabel::Kind::K:
          out.add_term(g.h_pos(lbl.index), c);
          break;
      }
    }
    return out;
  };

  for (std::size_t a = 0; a < reps.size(); ++a) {
    for (std::size_t b = a + 1; b < reps.size(); ++b) {
      ++rep.cases_checked;
      const SparseElt lhs = project(d.table().bracket(reps[a], reps[b]));
      const SparseElt rhs = g.table().bracket(images[a], images[b]);
      if (!(lhs == rhs))
        rep.violations.push_back("induced bracket differs at representative pair (" +
                                 std::to_string(a) + "," + std::to_string(b) + ")");
    }
  }
  return rep;
}

}  // namespace lieform

#include "lieform/cartan.hpp"

#include <deque>

namespace lieform {

namespace {

std::vector<std::vector<int>> path_grid(int n) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  for (int i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = -1;
  return a;
}

}  // namespace

int CartanMatrix::a(int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_)
    throw IndexOutOfRange("Cartan entry index out of range");
  return a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

long CartanMatrix::d(int i) const {
  if (i < 0 || i >= n_) throw IndexOutOfRange("symmetrizer index out of range");
  return d_[static_cast<std::size_t>(i)];
}

RatMatrix CartanMatrix::symmetrized() const {
  RatMatrix dc(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) dc.at(i, j) = rat(d(i) * a(i, j));
  return dc;
}

CartanMatrix CartanMatrix::validate(const std::vector<std::vector<int>>& grid) {
  const int n = static_cast<int>(grid.size());
  if (n == 0) throw NotGCM("empty matrix");
  for (const auto& row : grid)
    if (static_cast<int>(row.size()) != n) throw NotGCM("matrix is not square");
  for (int i = 0; i < n; ++i) {
    if (grid[i][i] != 2) throw NotGCM("diagonal entry is not 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (grid[i][j] > 0) throw NotGCM("positive off-diagonal entry");
      if ((grid[i][j] == 0) != (grid[j][i] == 0))
        throw NotGCM("zero pattern is not symmetric");
    }
  }

  // connectivity of the Dynkin graph
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::deque<int> work{0};
  seen[0] = true;
  while (!work.empty()) {
    const int i = work.front();
    work.pop_front();
    for (int j = 0; j < n; ++j) {
      if (i != j && grid[i][j] != 0 && !seen[static_cast<std::size_t>(j)]) {
        seen[static_cast<std::size_t>(j)] = true;
        work.push_back(j);
      }
    }
  }
  for (bool s : seen)
    if (!s) throw NotIndecomposable("Dynkin graph is disconnected");

  // symmetrizer by ratio propagation along a spanning tree: on every edge
  // d_j = d_i * a_ij / a_ji, well-defined because both entries are negative
  CartanMatrix m;
  m.n_ = n;
  m.a_ = grid;
  std::vector<Rat> r(static_cast<std::size_t>(n));
  std::vector<bool> have(static_cast<std::size_t>(n), false);
  r[0] = 1;
  have[0] = true;
  work.assign({0});
  while (!work.empty()) {
    const int i = work.front();
    work.pop_front();
    for (int j = 0; j < n; ++j) {
      if (i == j || grid[i][j] == 0 || have[static_cast<std::size_t>(j)]) continue;
      r[static_cast<std::size_t>(j)] =
          r[static_cast<std::size_t>(i)] * rat(grid[i][j], grid[j][i]);
      have[static_cast<std::size_t>(j)] = true;
      work.push_back(j);
    }
  }
  mpz_class common(1);
  for (const Rat& x : r) common = lcm(common, x.get_den());
  std::vector<mpz_class> scaled(static_cast<std::size_t>(n));
  mpz_class g(0);
  for (int i = 0; i < n; ++i) {
    scaled[static_cast<std::size_t>(i)] =
        r[static_cast<std::size_t>(i)].get_num() *
        (common / r[static_cast<std::size_t>(i)].get_den());
    g = gcd(g, scaled[static_cast<std::size_t>(i)]);
  }
  m.d_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const mpz_class di = scaled[static_cast<std::size_t>(i)] / g;
    if (di <= 0 || !di.fits_slong_p())
      throw NotSymmetrizable("no positive symmetrizer");
    m.d_[static_cast<std::size_t>(i)] = di.get_si();
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m.d(i) * grid[i][j] != m.d(j) * grid[j][i])
        throw NotSymmetrizable("d_i a_ij = d_j a_ji has no solution");

  if (!is_positive_definite(m.symmetrized()))
    throw NotFiniteType("DC is not positive definite");
  return m;
}

const std::vector<std::string>& CartanMatrix::catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (int r = 1; r <= 8; ++r) v.push_back("A" + std::to_string(r));
    for (int r = 2; r <= 8; ++r) v.push_back("B" + std::to_string(r));
    for (int r = 3; r <= 8; ++r) v.push_back("C" + std::to_string(r));
    for (int r = 4; r <= 8; ++r) v.push_back("D" + std::to_string(r));
    v.insert(v.end(), {"E6", "E7", "E8", "F4", "G2"});
    return v;
  }();
  return names;
}

CartanMatrix CartanMatrix::catalog(const std::string& name) {
  auto bad = [&]() -> CartanMatrix {
    throw ParseError("unknown catalog name '" + name + "' (finite types, rank <= 8)");
  };
  if (name.size() < 2) return bad();
  const char fam = name[0];
  int rank = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return bad();
    rank = rank * 10 + (name[i] - '0');
  }
  std::vector<std::vector<int>> a;
  switch (fam) {
    case 'A':
      if (rank < 1 || rank > 8) return bad();
      a = path_grid(rank);
      break;
    case 'B':  // alpha_rank is the short root
      if (rank < 2 || rank > 8) return bad();
      a = path_grid(rank);
      a[rank - 1][rank - 2] = -2;
      break;
    case 'C':  // alpha_rank is the long root
      if (rank < 3 || rank > 8) return bad();
      a = path_grid(rank);
      a[rank - 2][rank - 1] = -2;
      break;
    case 'D':  // fork: nodes rank-1 and rank both attached to rank-2
      if (rank < 4 || rank > 8) return bad();
      a = path_grid(rank);
      a[rank - 2][rank - 1] = a[rank - 1][rank - 2] = 0;
      a[rank - 3][rank - 1] = a[rank - 1][rank - 3] = -1;
      break;
    case 'E': {
      if (rank < 6 || rank > 8) return bad();
      a.assign(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(rank), 0));
      for (int i = 0; i < rank; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
      std::vector<std::pair<int, int>> edges{{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
      if (rank >= 7) edges.emplace_back(6, 7);
      if (rank == 8) edges.emplace_back(7, 8);
      for (auto [p, q] : edges)
        a[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(q - 1)] =
            a[static_cast<std::size_t>(q - 1)][static_cast<std::size_t>(p - 1)] = -1;
      break;
    }
    case 'F':
      if (rank != 4) return bad();
      a = path_grid(4);
      a[2][1] = -2;
      break;
    case 'G':  // alpha_1 is the short root
      if (rank != 2) return bad();
      a = {{2, -3}, {-1, 2}};
      break;
    default:
      return bad();
  }
  return validate(a);
}

Weight zero_weight(int n) { return Weight{RatVec(static_cast<std::size_t>(n))}; }

Weight simple_root(int n, int i) {
  if (i < 0 || i >= n) throw IndexOutOfRange("simple root index out of range");
  Weight w = zero_weight(n);
  w.c[static_cast<std::size_t>(i)] = 1;
  return w;
}

Rat weight_form(const CartanMatrix& c, const Weight& lam, const Weight& mu) {
  const int n = c.rank();
  if (static_cast<int>(lam.c.size()) != n || static_cast<int>(mu.c.size()) != n)
    throw RankMismatch("weight length does not match the rank");
  Rat acc(0);
  for (int i = 0; i < n; ++i) {
    if (lam.c[static_cast<std::size_t>(i)] == 0) continue;
    Rat row(0);
    for (int j = 0; j < n; ++j)
      row += rat(c.d(i) * c.a(i, j)) * mu.c[static_cast<std::size_t>(j)];
    acc += lam.c[static_cast<std::size_t>(i)] * row;
  }
  return acc;
}

Rat eval_on_coroot(const CartanMatrix& c, const Weight& lam, int i) {
  const int n = c.rank();
  if (static_cast<int>(lam.c.size()) != n)
    throw RankMismatch("weight length does not match the rank");
  if (i < 0 || i >= n) throw IndexOutOfRange("coroot index out of range");
  Rat acc(0);
  for (int j = 0; j < n; ++j) acc += lam.c[static_cast<std::size_t>(j)] * c.a(i, j);
  return acc;
}

CartanElt nu_inverse(const CartanMatrix& c, const Weight& lam) {
  const int n = c.rank();
  if (static_cast<int>(lam.c.size()) != n)
    throw RankMismatch("weight length does not match the rank");
  CartanElt h{RatVec(static_cast<std::size_t>(n))};
  for (int j = 0; j < n; ++j)
    h.t[static_cast<std::size_t>(j)] = rat(c.d(j)) * lam.c[static_cast<std::size_t>(j)];
  // defining property: (alpha_i|lambda) = alpha_i(h_lambda) for every i
  for (int i = 0; i < n; ++i) {
    Rat eval(0);
    for (int j = 0; j < n; ++j) eval += h.t[static_cast<std::size_t>(j)] * c.a(j, i);
    if (weight_form(c, simple_root(n, i), lam) != eval)
      throw Error("Internal", "nu_inverse postcondition failed");
  }
  return h;
}

Rat cartan_form_h(const CartanMatrix& c, const CartanElt& x, const CartanElt& y) {
  const int n = c.rank();
  if (static_cast<int>(x.t.size()) != n || static_cast<int>(y.t.size()) != n)
    throw RankMismatch("Cartan element length does not match the rank");
  Rat acc(0);
  for (int i = 0; i < n; ++i) {
    if (x.t[static_cast<std::size_t>(i)] == 0) continue;
    Rat row(0);
    for (int j = 0; j < n; ++j)
      row += rat(c.a(i, j), c.d(j)) * y.t[static_cast<std::size_t>(j)];
    acc += x.t[static_cast<std::size_t>(i)] * row;
  }
  return acc;
}

}  // namespace lieform

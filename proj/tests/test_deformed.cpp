#include <doctest.h>

#include <random>

#include "lieform/deformed.hpp"
#include "lieform/json_io.hpp"

using namespace lieform;

namespace {

UMatrix a2_u() {
  return UMatrix::from_grid({{rat(0), rat(1)}, {rat(-1), rat(0)}});
}

Weight random_weight(std::mt19937_64& gen, int n) {
  Weight w = zero_weight(n);
  for (Rat& x : w.c) x = rat(static_cast<long>(gen() % 19) - 9, 1 + static_cast<long>(gen() % 9));
  return w;
}

SparseElt xd(const DAlgebra& d, const std::vector<int>& coords) {
  const int idx = d.root_system().index_of(coords);
  REQUIRE(idx >= 0);
  return SparseElt::unit(d.e_pos(idx));
}

}  // namespace

TEST_CASE("UMatrix validation and seeded generation") {
  CHECK_THROWS_AS(UMatrix::from_grid({{rat(0), rat(1)}, {rat(1), rat(0)}}), NotSkewSymmetric);
  CHECK_THROWS_AS(UMatrix::from_grid({{rat(1)}}), NotSkewSymmetric);
  CHECK_THROWS_AS(UMatrix::from_grid({{rat(0), rat(1)}}), NotSkewSymmetric);
  CHECK(UMatrix::zero(3).zero_matrix());
  CHECK_FALSE(a2_u().zero_matrix());

  const UMatrix u1 = UMatrix::random(4, 7);
  const UMatrix u2 = UMatrix::random(4, 7);
  CHECK(u1 == u2);
  CHECK_FALSE(u1 == UMatrix::random(4, 8));
  for (int i = 0; i < 4; ++i) {
    CHECK(u1.at(i, i) == 0);
    for (int j = 0; j < 4; ++j) {
      CHECK(u1.at(i, j) == -u1.at(j, i));
      if (i != j) {
        CHECK(u1.at(i, j) != 0);  // numerators are drawn from [-9,9] without 0
        CHECK(abs(u1.at(i, j).get_num()) <= 9);
        CHECK(u1.at(i, j).get_den() <= 9);
      }
    }
  }
}

TEST_CASE("u_form examples") {
  const CartanMatrix c = CartanMatrix::catalog("A2");
  const UMatrix zero = UMatrix::zero(2);
  std::mt19937_64 gen(37);
  for (int trial = 0; trial < 10; ++trial) {
    const Weight lam = random_weight(gen, 2);
    const Weight mu = random_weight(gen, 2);
    CHECK(u_form(c, zero, lam, mu) == 0);
    CHECK(u_form(c, a2_u(), lam, lam) == 0);  // alternating
    CHECK(u_form(c, a2_u(), lam, mu) == -u_form(c, a2_u(), mu, lam));
  }
  // u(alpha_1, alpha_2) = 1*2*2 + (-1)*(-1)*(-1) = 3
  CHECK(u_form(c, a2_u(), simple_root(2, 0), simple_root(2, 1)) == 3);
  CHECK_THROWS_AS(u_form(c, UMatrix::zero(3), zero_weight(2), zero_weight(2)), RankMismatch);
}

TEST_CASE("phi solves the defining property") {
  const CartanMatrix c = CartanMatrix::catalog("A2");
  std::mt19937_64 gen(41);

  // u = 0: Phi = 0 and Phi_+- = +-identity
  const Weight lam0 = random_weight(gen, 2);
  CHECK(phi(c, UMatrix::zero(2), lam0) == zero_weight(2));
  CHECK(phi_plus(c, UMatrix::zero(2), lam0) == lam0);
  Weight neg = lam0;
  for (Rat& x : neg.c) x = -x;
  CHECK(phi_minus(c, UMatrix::zero(2), lam0) == neg);

  // frozen example: DC c = (0, 3) -> c = (1, 2)
  CHECK(phi(c, a2_u(), simple_root(2, 0)) == Weight{RatVec{rat(1), rat(2)}});

  for (const auto& name : {"A2", "B3", "G2"}) {
    const CartanMatrix cc = CartanMatrix::catalog(name);
    const UMatrix u = UMatrix::random(cc.rank(), 99);
    for (int trial = 0; trial < 10; ++trial) {
      const Weight lam = random_weight(gen, cc.rank());
      const Weight mu = random_weight(gen, cc.rank());
      const Weight ph = phi(cc, u, lam);
      CHECK(weight_form(cc, ph, mu) == u_form(cc, u, lam, mu));
      CHECK(weight_form(cc, phi_plus(cc, u, lam), mu) ==
            u_form(cc, u, lam, mu) + weight_form(cc, lam, mu));
      CHECK(weight_form(cc, phi_minus(cc, u, lam), mu) ==
            u_form(cc, u, lam, mu) - weight_form(cc, lam, mu));
    }
  }
}

TEST_CASE("deformed brackets at u = 0 restrict to the simple algebra") {
  const CartanMatrix c = CartanMatrix::catalog("A2");
  const GAlgebra g(c);
  const DAlgebra d(g, UMatrix::zero(2));
  CHECK(d.dim() == 10);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      std::vector<int> e(2, 0);
      e[static_cast<std::size_t>(j)] = 1;
      SparseElt want = xd(d, e);
      want.scale(rat(c.a(i, j)));
      CHECK(d.table().bracket(SparseElt::unit(d.h_pos(i)), xd(d, e)) == want);
      // at u = 0, h_i and k_i act identically
      for (int r = 0; r < d.root_system().size(); ++r)
        CHECK(d.table().bracket(d.h_pos(i), d.e_pos(r)) ==
              d.table().bracket(d.k_pos(i), d.e_pos(r)));
    }
  }
}

TEST_CASE("A1 opposite-pair bracket") {
  const GAlgebra g(CartanMatrix::catalog("A1"));
  const DAlgebra d(g, UMatrix::zero(1));
  SparseElt want;
  want.add_term(d.h_pos(0), rat(1, 2));
  want.add_term(d.k_pos(0), rat(1, 2));
  CHECK(d.table().bracket(xd(d, {1}), xd(d, {-1})) == want);
}

TEST_CASE("A2 twisted action example") {
  const GAlgebra g(CartanMatrix::catalog("A2"));
  const DAlgebra d(g, a2_u());
  SparseElt diff = SparseElt::unit(d.h_pos(0));
  diff.add_term(d.k_pos(0), rat(-1));
  SparseElt want = xd(d, {0, 1});
  want.scale(rat(-6));  // -2 u(alpha_1, alpha_2) = -6 with d = (1,1)
  CHECK(d.table().bracket(diff, xd(d, {0, 1})) == want);
}

TEST_CASE("build rejects mismatched input ranks") {
  const GAlgebra g(CartanMatrix::catalog("A2"));
  CHECK_THROWS_AS(DAlgebra(g, UMatrix::zero(3)), IncompatibleInputs);
}

TEST_CASE("deformed Gram table") {
  const CartanMatrix c = CartanMatrix::catalog("A2");
  const GAlgebra g(c);

  const DAlgebra d0(g, UMatrix::zero(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(d0.gram().at(d0.h_pos(i), d0.h_pos(j)) == 2 * rat(c.a(i, j), c.d(j)));
      CHECK(d0.gram().at(d0.k_pos(i), d0.k_pos(j)) == 2 * rat(c.a(i, j), c.d(j)));
      CHECK(d0.gram().at(d0.h_pos(i), d0.k_pos(j)) == 0);  // the h/k coupling vanishes
    }

  const DAlgebra d(g, a2_u());
  CHECK(d.gram().at(d.h_pos(0), d.k_pos(1)) == rat(-6));  // -2 u(alpha_1, alpha_2)
  CHECK(d.gram().at(d.k_pos(1), d.h_pos(0)) == rat(-6));
  CHECK(d.gram().at(d.h_pos(0), d.k_pos(0)) == 0);  // alternating u
  for (int a = 0; a < d.dim(); ++a)
    for (int b = 0; b < d.dim(); ++b) CHECK(d.gram().at(a, b) == d.gram().at(b, a));
}

TEST_CASE("jacobi and invariance hold for zero and seeded u") {
  for (const auto& name : {"A1", "A2", "B2", "G2", "A3"}) {
    const CartanMatrix c = CartanMatrix::catalog(name);
    const GAlgebra g(c);
    for (std::uint64_t seed : {0u, 1u, 2u}) {
      const UMatrix u = seed == 0 ? UMatrix::zero(c.rank()) : UMatrix::random(c.rank(), seed);
      const DAlgebra d(g, u);
      CHECK(d.dim() == d.root_system().size() + 2 * c.rank());
      CHECK(verify_jacobi(d).ok());
      CHECK(verify_invariance(d).ok());
      CHECK(verify_reduction(d).ok());
    }
  }
}

TEST_CASE("flipping the k-action sign is detected with a witness") {
  const GAlgebra g(CartanMatrix::catalog("A2"));
  const DAlgebra d(g, a2_u());
  // negate every [k_1, x_alpha] entry, as if the twist came with the wrong sign
  BracketTable bad = d.table();
  const int kp = d.k_pos(0);
  for (int r = 0; r < d.root_system().size(); ++r) {
    const int ep = d.e_pos(r);
    const int i = std::min(kp, ep), j = std::max(kp, ep);
    bad.set(i, j, d.table().bracket(i, j).negated());
  }
  const Report jac = verify_jacobi_table(bad);
  const Report inv = verify_invariance_table(bad, d.gram());
  CHECK((!jac.ok() || !inv.ok()));
  CHECK_FALSE(jac.violations.empty());  // witness triple is reported
}

TEST_CASE("root grading of the h and k actions") {
  const GAlgebra g(CartanMatrix::catalog("B2"));
  const DAlgebra d(g, UMatrix::random(2, 5));
  for (int i = 0; i < 2; ++i) {
    for (int r = 0; r < d.root_system().size(); ++r) {
      for (const SparseElt& v : {d.table().bracket(d.h_pos(i), d.e_pos(r)),
                                 d.table().bracket(d.k_pos(i), d.e_pos(r))}) {
        for (const auto& [pos, cf] : v.terms()) CHECK(pos == d.e_pos(r));
      }
    }
  }
}

TEST_CASE("table export re-parses to an equal algebra") {
  const GAlgebra g(CartanMatrix::catalog("B2"));
  const DAlgebra d(g, UMatrix::random(2, 11));
  const Json j = table_json(d);
  const DAlgebra back = d_from_table_json(j);
  CHECK(back.table() == d.table());
  CHECK(back.gram() == d.gram());
  CHECK(back.gram_det() == d.gram_det());
  CHECK(back.u() == d.u());

  Json tampered = j;
  tampered["gram_det"] = "1/7";
  CHECK_THROWS_AS(d_from_table_json(tampered), ParseError);
  Json wrong = j;
  wrong["brackets"][0]["value"] = Json::object();
  CHECK_THROWS_AS(d_from_table_json(wrong), ParseError);
}

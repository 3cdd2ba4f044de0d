#include "lieform/bracket.hpp"

#include <algorithm>

namespace lieform {

SparseElt SparseElt::unit(int pos) {
  SparseElt e;
  e.terms_.emplace_back(pos, Rat(1));
  return e;
}

void SparseElt::add_term(int pos, const Rat& coeff) {
  if (coeff == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), pos,
                             [](const auto& t, int p) { return t.first < p; });
  if (it != terms_.end() && it->first == pos) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {pos, coeff});
  }
}

void SparseElt::add_scaled(const SparseElt& other, const Rat& s) {
  if (s == 0) return;
  for (const auto& [pos, c] : other.terms_) add_term(pos, c * s);
}

void SparseElt::scale(const Rat& s) {
  if (s == 0) {
    terms_.clear();
    return;
  }
  for (auto& [pos, c] : terms_) c *= s;
}

SparseElt SparseElt::negated() const {
  SparseElt e = *this;
  for (auto& [pos, c] : e.terms_) c = -c;
  return e;
}

Rat SparseElt::coeff(int pos) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), pos,
                             [](const auto& t, int p) { return t.first < p; });
  if (it != terms_.end() && it->first == pos) return it->second;
  return Rat(0);
}

BracketTable::BracketTable(std::vector<BasisLabel> basis) : basis_(std::move(basis)) {}

void BracketTable::set(int i, int j, SparseElt value) {
  if (i >= j) throw Error("Internal", "bracket table stores pairs with i < j only");
  if (value.zero())
    entries_.erase({i, j});
  else
    entries_[{i, j}] = std::move(value);
}

SparseElt BracketTable::bracket(int i, int j) const {
  if (i == j) return {};
  if (i > j) return bracket(j, i).negated();
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? SparseElt{} : it->second;
}

SparseElt BracketTable::ad(int i, const SparseElt& v) const {
  SparseElt out;
  for (const auto& [pos, c] : v.terms()) out.add_scaled(bracket(i, pos), c);
  return out;
}

SparseElt BracketTable::bracket(const SparseElt& x, const SparseElt& y) const {
  SparseElt out;
  for (const auto& [i, ci] : x.terms())
    for (const auto& [j, cj] : y.terms()) out.add_scaled(bracket(i, j), ci * cj);
  return out;
}

Report verify_jacobi_table(const BracketTable& t, std::size_t max_violations) {
  Report rep{"jacobi", 0, {}};
  const int n = t.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const SparseElt bij = t.bracket(i, j);
      for (int k = j + 1; k < n; ++k) {
        ++rep.cases_checked;
        SparseElt acc = t.ad(i, t.bracket(j, k));
        acc.add_scaled(t.ad(j, t.bracket(k, i)), Rat(1));
        acc.add_scaled(t.ad(k, bij), Rat(1));
        if (!acc.zero()) {
          if (rep.violations.size() < max_violations)
            rep.violations.push_back("jacobi fails on basis triple (" + std::to_string(i) +
                                     "," + std::to_string(j) + "," + std::to_string(k) + ")");
          else
            return rep;
        }
      }
    }
  }
  return rep;
}

}  // namespace lieform

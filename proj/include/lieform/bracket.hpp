#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lieform/rational.hpp"

namespace lieform {

// Basis label of a bracket table: root vector (E, root index into the owning
// RootSystem), Cartan element h_i (H), or its mirror copy k_i (K).
struct BasisLabel {
  enum class Kind : std::uint8_t { E, H, K };
  Kind kind = Kind::H;
  int index = 0;
  bool operator==(const BasisLabel&) const = default;
};

// Sparse vector over basis positions; terms sorted by position, no zeros.
class SparseElt {
 public:
  SparseElt() = default;
  static SparseElt unit(int pos);

  void add_term(int pos, const Rat& coeff);
  void add_scaled(const SparseElt& other, const Rat& s);
  void scale(const Rat& s);
  SparseElt negated() const;
  bool zero() const { return terms_.empty(); }
  Rat coeff(int pos) const;
  const std::vector<std::pair<int, Rat>>& terms() const { return terms_; }

  bool operator==(const SparseElt&) const = default;

 private:
  std::vector<std::pair<int, Rat>> terms_;
};

// Antisymmetric bracket on an ordered basis. Each unordered pair is stored
// once (i < j, zero results omitted); [b_j, b_i] = -[b_i, b_j] and
// [b_i, b_i] = 0 are derived, never stored, so antisymmetry cannot drift.
class BracketTable {
 public:
  BracketTable() = default;
  explicit BracketTable(std::vector<BasisLabel> basis);

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<BasisLabel>& basis() const { return basis_; }

  void set(int i, int j, SparseElt value);  // requires i < j
  SparseElt bracket(int i, int j) const;
  SparseElt bracket(const SparseElt& x, const SparseElt& y) const;
  SparseElt ad(int i, const SparseElt& v) const;  // [b_i, v]

  const std::map<std::pair<int, int>, SparseElt>& entries() const { return entries_; }

  bool operator==(const BracketTable&) const = default;

 private:
  std::vector<BasisLabel> basis_;
  std::map<std::pair<int, int>, SparseElt> entries_;
};

struct Report {
  std::string check;
  long cases_checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Exhaustive Jacobi check. Runs over the distinct triples i < j < k: with the
// structurally antisymmetric table and bilinear expansion, triples with a
// repeated index cancel identically, so these generate every basis triple.
Report verify_jacobi_table(const BracketTable& t, std::size_t max_violations = 16);

}  // namespace lieform

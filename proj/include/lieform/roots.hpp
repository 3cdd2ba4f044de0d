#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lieform/cartan.hpp"

namespace lieform {

struct NotARoot : Error {
  explicit NotARoot(const std::string& msg) : Error("NotARoot", msg) {}
};
struct EqualOrOpposite : Error {
  explicit EqualOrOpposite(const std::string& msg) : Error("EqualOrOpposite", msg) {}
};

struct Root {
  std::vector<int> coords;  // simple-root coordinates, never mixed-sign
  int height = 0;           // sum of coordinates
  bool positive = false;
  bool operator==(const Root&) const = default;
};

// The finite root system of a validated Cartan matrix, generated by closing
// the simple roots under all simple reflections s_i(v) = v - v(h_i) alpha_i.
// Roots are sorted by (height, lexicographic coordinates), so the negative
// roots occupy the first half and indices are stable across runs.
class RootSystem {
 public:
  explicit RootSystem(CartanMatrix cartan);

  const CartanMatrix& cartan() const { return cartan_; }
  const std::vector<Root>& roots() const { return roots_; }
  int size() const { return static_cast<int>(roots_.size()); }
  int positive_count() const { return size() / 2; }
  // positive roots are the second half of roots(), indices first_positive()..size()-1
  int first_positive() const { return size() / 2; }

  bool is_root(const std::vector<int>& v) const;
  int index_of(const std::vector<int>& v) const;  // -1 when absent
  int negative_of(int idx) const;

  // The alpha-string through beta: (p, q) with beta - p alpha ... beta + q alpha
  // all in the system. Throws NotARoot / EqualOrOpposite on bad arguments.
  std::pair<int, int> root_string(const Root& alpha, const Root& beta) const;
  std::pair<int, int> root_string(int alpha_idx, int beta_idx) const;

  long form(int i, int j) const;  // (alpha|beta) on root indices, an integer
  long norm(int i) const { return form(i, i); }
  Weight as_weight(int idx) const;

 private:
  CartanMatrix cartan_;
  std::vector<Root> roots_;
  std::map<std::vector<int>, int> index_;
  std::vector<int> negative_;
};

}  // namespace lieform

#include "lieform/roots.hpp"

#include <algorithm>
#include <set>

namespace lieform {

namespace {

// s_i(v) = v - v(h_i) alpha_i on integer coordinate vectors
std::vector<int> reflect(const CartanMatrix& c, const std::vector<int>& v, int i) {
  long pairing = 0;
  for (int j = 0; j < c.rank(); ++j) pairing += static_cast<long>(v[static_cast<std::size_t>(j)]) * c.a(i, j);
  std::vector<int> w = v;
  w[static_cast<std::size_t>(i)] -= static_cast<int>(pairing);
  return w;
}

}  // namespace

RootSystem::RootSystem(CartanMatrix cartan) : cartan_(std::move(cartan)) {
  const int n = cartan_.rank();
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> work;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    seen.insert(e);
    work.push_back(std::move(e));
  }
  // reflection-orbit closure; finite type keeps this small, the cap is a
  // safety net against accepting anything else by mistake
  constexpr std::size_t kMaxRoots = 4096;
  while (!work.empty()) {
    const std::vector<int> v = std::move(work.back());
    work.pop_back();
    for (int i = 0; i < n; ++i) {
      std::vector<int> w = reflect(cartan_, v, i);
      if (seen.insert(w).second) {
        if (seen.size() > kMaxRoots)
          throw Error("Internal", "reflection closure did not terminate");
        work.push_back(std::move(w));
      }
    }
  }

  roots_.reserve(seen.size());
  for (const auto& v : seen) {
    Root r;
    r.coords = v;
    r.height = 0;
    for (int x : v) r.height += x;
    const bool any_pos = std::any_of(v.begin(), v.end(), [](int x) { return x > 0; });
    const bool any_neg = std::any_of(v.begin(), v.end(), [](int x) { return x < 0; });
    if (any_pos == any_neg)
      throw Error("Internal", "mixed-sign vector in reflection closure");
    r.positive = any_pos;
    roots_.push_back(std::move(r));
  }
  std::sort(roots_.begin(), roots_.end(), [](const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.coords < b.coords;
  });
  for (int i = 0; i < size(); ++i) index_[roots_[static_cast<std::size_t>(i)].coords] = i;

  negative_.resize(roots_.size());
  for (int i = 0; i < size(); ++i) {
    std::vector<int> neg = roots_[static_cast<std::size_t>(i)].coords;
    for (int& x : neg) x = -x;
    const int j = index_of(neg);
    if (j < 0) throw Error("Internal", "root system is not symmetric");
    negative_[static_cast<std::size_t>(i)] = j;
  }
}

bool RootSystem::is_root(const std::vector<int>& v) const { return index_.count(v) > 0; }

int RootSystem::index_of(const std::vector<int>& v) const {
  const auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::negative_of(int idx) const {
  return negative_[static_cast<std::size_t>(idx)];
}

std::pair<int, int> RootSystem::root_string(const Root& alpha, const Root& beta) const {
  const int ai = index_of(alpha.coords);
  const int bi = index_of(beta.coords);
  if (ai < 0 || bi < 0) throw NotARoot("root-string argument is not a root");
  return root_string(ai, bi);
}

std::pair<int, int> RootSystem::root_string(int alpha_idx, int beta_idx) const {
  if (alpha_idx == beta_idx || negative_of(alpha_idx) == beta_idx)
    throw EqualOrOpposite("root string needs beta != +-alpha");
  const auto& a = roots_[static_cast<std::size_t>(alpha_idx)].coords;
  const auto& b = roots_[static_cast<std::size_t>(beta_idx)].coords;
  const std::size_t n = a.size();
  auto shifted = [&](int k) {
    std::vector<int> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = b[j] + k * a[j];
    return v;
  };
  int p = 0, q = 0;
  while (is_root(shifted(-(p + 1)))) ++p;
  while (is_root(shifted(q + 1))) ++q;
  return {p, q};
}

long RootSystem::form(int i, int j) const {
  const auto& a = roots_[static_cast<std::size_t>(i)].coords;
  const auto& b = roots_[static_cast<std::size_t>(j)].coords;
  const int n = cartan_.rank();
  long acc = 0;
  for (int s = 0; s < n; ++s) {
    if (a[static_cast<std::size_t>(s)] == 0) continue;
    for (int t = 0; t < n; ++t)
      acc += static_cast<long>(a[static_cast<std::size_t>(s)]) * cartan_.d(s) *
             cartan_.a(s, t) * b[static_cast<std::size_t>(t)];
  }
  return acc;
}

Weight RootSystem::as_weight(int idx) const {
  const auto& r = roots_[static_cast<std::size_t>(idx)];
  Weight w = zero_weight(cartan_.rank());
  for (std::size_t j = 0; j < r.coords.size(); ++j) w.c[j] = r.coords[j];
  return w;
}

}  // namespace lieform

#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the code paths it is used to check.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "incline/incline.hpp"
#include "incline/matrix.hpp"

namespace oracle {

using Terms = std::vector<int>;

inline std::map<std::pair<int, int>, int> count_edges(const Terms& w) {
  std::map<std::pair<int, int>, int> m;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) ++m[{w[i], w[i + 1]}];
  return m;
}

inline bool is_reduction(const Terms& u, const Terms& v) {
  if (u.front() != v.front() || u.back() != v.back()) return false;
  const auto mu = count_edges(u);
  const auto mv = count_edges(v);
  for (const auto& [edge, c] : mu) {
    auto it = mv.find(edge);
    if (it == mv.end() || it->second < c) return false;
  }
  return true;
}

// Every walk with `length` edges on {1..n}, depth-first.
inline void for_each_walk(int n, int length, const std::function<void(const Terms&)>& visit) {
  Terms w;
  std::function<void()> rec = [&] {
    if (static_cast<int>(w.size()) == length + 1) {
      visit(w);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      w.push_back(v);
      rec();
      w.pop_back();
    }
  };
  rec();
}

// Entry (i, j) (0-based) of A^l as the join, over all walks of length l from
// i to j, of the product of the entries along the walk.
inline incline::Element power_entry_by_walks(const incline::Matrix& a, int l, std::size_t i, std::size_t j) {
  const incline::Incline& L = a.incline();
  std::optional<incline::Element> acc;
  std::function<void(std::size_t, int, incline::Element)> rec = [&](std::size_t at, int left, incline::Element prod) {
    if (left == 0) {
      if (at == j) acc = acc ? L.add(*acc, prod) : prod;
      return;
    }
    for (std::size_t next = 0; next < a.size(); ++next) rec(next, left - 1, L.mul(prod, a(at, next)));
  };
  for (std::size_t next = 0; next < a.size(); ++next) rec(next, l - 1, a(i, next));
  return *acc;
}

// Names of every violated law of a finite table (indices 0..size-1),
// evaluated straight from the definitions.
inline std::set<std::string> violated_laws(const std::vector<std::vector<int>>& add,
                                           const std::vector<std::vector<int>>& mul) {
  const int s = static_cast<int>(add.size());
  auto A = [&](int x, int y) { return add[x][y]; };
  auto M = [&](int x, int y) { return mul[x][y]; };
  auto le = [&](int x, int y) { return A(x, y) == y; };
  std::set<std::string> bad;
  for (int x = 0; x < s; ++x) {
    for (int y = 0; y < s; ++y) {
      for (int z = 0; z < s; ++z) {
        if (A(x, x) != x) bad.insert("add-idempotent");
        if (A(x, y) != A(y, x)) bad.insert("add-commutative");
        if (A(A(x, y), z) != A(x, A(y, z))) bad.insert("add-associative");
        if (M(M(x, y), z) != M(x, M(y, z))) bad.insert("mul-associative");
        if (M(x, y) != M(y, x)) bad.insert("mul-commutative");
        if (M(x, A(y, z)) != A(M(x, y), M(x, z))) bad.insert("left-distributive");
        if (M(A(y, z), x) != A(M(y, x), M(z, x))) bad.insert("right-distributive");
        if (A(x, M(x, y)) != x || A(x, M(y, x)) != x) bad.insert("absorption");
        if (!le(M(x, y), x) || !le(M(y, x), x)) bad.insert("mul-below-factor");
        if (le(y, z) && (!le(M(x, y), M(x, z)) || !le(M(y, x), M(z, x)))) bad.insert("mul-monotone");
      }
    }
  }
  return bad;
}

}  // namespace oracle

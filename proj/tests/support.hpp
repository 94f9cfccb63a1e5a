#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "holobrace/group.hpp"
#include "holobrace/holomorph.hpp"

namespace oracle {

using holobrace::Elem;
using holobrace::FiniteGroup;

inline bool associative(const FiniteGroup& g) {
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      for (Elem c = 0; c < g.order(); ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
  return true;
}

inline std::uint64_t order_of(const FiniteGroup& g, Elem x) {
  std::uint64_t k = 1;
  for (Elem y = x; y != g.identity(); y = g.mul(y, x)) ++k;
  return k;
}

inline std::map<std::uint64_t, std::size_t> order_profile(const FiniteGroup& g) {
  std::map<std::uint64_t, std::size_t> out;
  for (Elem x = 0; x < g.order(); ++x) ++out[order_of(g, x)];
  return out;
}

inline std::vector<Elem> center(const FiniteGroup& g) {
  std::vector<Elem> out;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) out.push_back(x);
  }
  return out;
}

// Repeated multiplication until nothing new appears.
inline std::vector<Elem> closure(const FiniteGroup& g, const std::vector<Elem>& gens) {
  std::set<Elem> s{g.identity()};
  s.insert(gens.begin(), gens.end());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Elem> cur(s.begin(), s.end());
    for (Elem a : cur)
      for (Elem b : cur) grew |= s.insert(g.mul(a, b)).second;
  }
  return {s.begin(), s.end()};
}

// Automorphisms counted by trying every tuple of images of the given
// generators and extending along words.
inline std::size_t automorphism_count(const FiniteGroup& g, const std::vector<Elem>& gens) {
  const std::size_t n = g.order(), k = gens.size();
  std::vector<Elem> images(k, 0);
  std::size_t count = 0;
  for (;;) {
    std::vector<Elem> map(n, Elem(n));
    map[g.identity()] = g.identity();
    std::vector<Elem> frontier{g.identity()};
    bool ok = true;
    while (!frontier.empty() && ok) {
      std::vector<Elem> next;
      for (Elem x : frontier)
        for (std::size_t i = 0; i < k && ok; ++i) {
          const Elem y = g.mul(x, gens[i]), fy = g.mul(map[x], images[i]);
          if (map[y] == Elem(n)) {
            map[y] = fy;
            next.push_back(y);
          } else {
            ok = map[y] == fy;
          }
        }
      frontier = std::move(next);
    }
    if (ok) {
      for (Elem a = 0; a < n && ok; ++a)
        for (Elem b = 0; b < n && ok; ++b) ok = map[g.mul(a, b)] == g.mul(map[a], map[b]);
      std::vector<Elem> sorted = map;
      std::sort(sorted.begin(), sorted.end());
      for (Elem i = 0; i < n && ok; ++i) ok = sorted[i] == i;
    }
    count += ok;
    std::size_t j = 0;
    while (j < k && ++images[j] == n) images[j++] = 0;
    if (j == k) break;
  }
  return count;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t t = 1; t <= n; ++t) c += std::gcd(t, n) == 1;
  return c;
}

// Hol(N) element as an explicit permutation of N.
inline std::vector<Elem> as_permutation(const holobrace::Holomorph& hol, Elem h) {
  std::vector<Elem> out(hol.degree());
  for (Elem x = 0; x < hol.degree(); ++x) out[x] = hol.act(h, x);
  return out;
}

}  // namespace oracle

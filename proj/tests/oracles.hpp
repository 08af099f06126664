#pragma once

// Brute-force reference computations for the tests. Nothing here calls into
// the library's counting or groupoid code; permutations are plain vectors.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;

// p then q, matching the library's diagrammatic convention: x.(pq) = (x.p).q.
inline Perm then(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

inline Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

inline Perm identity(int n) {
  Perm r(n);
  std::iota(r.begin(), r.end(), 0);
  return r;
}

// Naive closure: multiply everything by everything until nothing new appears.
inline std::vector<Perm> closure(int degree, const std::vector<Perm>& gens) {
  std::set<Perm> all{identity(degree)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> now(all.begin(), all.end());
    for (const auto& a : now)
      for (const auto& g : gens)
        if (all.insert(then(a, g)).second) grew = true;
  }
  return {all.begin(), all.end()};
}

inline int element_order(const Perm& p) {
  Perm q = p;
  int k = 1;
  while (q != identity(static_cast<int>(p.size()))) {
    q = then(q, p);
    ++k;
  }
  return k;
}

// Class sizes, sorted.
inline std::vector<std::size_t> class_sizes(const std::vector<Perm>& G) {
  std::set<Perm> done;
  std::vector<std::size_t> sizes;
  for (const auto& g : G) {
    if (done.count(g)) continue;
    std::set<Perm> cls;
    for (const auto& h : G) cls.insert(then(then(inverse(h), g), h));
    done.insert(cls.begin(), cls.end());
    sizes.push_back(cls.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

inline std::size_t centralizer_order(const std::vector<Perm>& G, const Perm& g) {
  std::size_t n = 0;
  for (const auto& h : G) n += then(g, h) == then(h, g);
  return n;
}

// A right action as an explicit function on points.
struct Action {
  std::vector<Perm> group;  // any order
  int points = 0;
  std::vector<std::vector<int>> image;  // image[g][x] = x.g, aligned with group
};

inline Action natural(const std::vector<Perm>& G) {
  Action a{G, G.empty() ? 0 : static_cast<int>(G[0].size()), {}};
  for (const auto& g : G) a.image.push_back(g);
  return a;
}

// Colorings as digit vectors; (c.g)(i) = c(i.g^-1), encoded sum c(i) k^i.
inline Action colorings(const std::vector<Perm>& G, int k) {
  const int n = static_cast<int>(G[0].size());
  int total = 1;
  for (int i = 0; i < n; ++i) total *= k;
  Action a{G, total, {}};
  for (const auto& g : G) {
    const Perm ginv = inverse(g);
    std::vector<int> row(total);
    for (int code = 0; code < total; ++code) {
      std::vector<int> c(n);
      int v = code;
      for (int i = 0; i < n; ++i, v /= k) c[i] = v % k;
      int out = 0;
      for (int i = n - 1; i >= 0; --i) out = out * k + c[ginv[i]];
      row[code] = out;
    }
    a.image.push_back(std::move(row));
  }
  return a;
}

// Orbits by flood fill over every group element.
inline std::size_t orbit_count(const Action& a) {
  std::vector<bool> seen(a.points, false);
  std::size_t count = 0;
  for (int x = 0; x < a.points; ++x) {
    if (seen[x]) continue;
    ++count;
    for (const auto& row : a.image) seen[row[x]] = true;
  }
  return count;
}

inline std::size_t fixpoint_total(const Action& a) {
  std::size_t n = 0;
  for (const auto& row : a.image)
    for (int x = 0; x < a.points; ++x) n += row[x] == x;
  return n;
}

// Stabilizer orders per orbit representative, used for weak quotient sizes.
inline std::vector<std::size_t> stabilizer_orders(const Action& a) {
  std::vector<bool> seen(a.points, false);
  std::vector<std::size_t> out;
  for (int x = 0; x < a.points; ++x) {
    if (seen[x]) continue;
    std::size_t stab = 0;
    for (const auto& row : a.image) {
      seen[row[x]] = true;
      stab += row[x] == x;
    }
    out.push_back(stab);
  }
  return out;
}

// Reduced fraction p/q as a pair, for comparing against library output
// without using the library's rational type.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
  Fraction() = default;
  Fraction(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { reduce(); }
  void reduce() {
    const std::int64_t g = std::gcd(num, den);
    if (g) {
      num /= g;
      den /= g;
    }
    if (den < 0) {
      num = -num;
      den = -den;
    }
  }
  Fraction operator+(const Fraction& o) const { return {num * o.den + o.num * den, den * o.den}; }
  bool operator==(const Fraction& o) const { return num == o.num && den == o.den; }
  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

// Random subgroup of S_n from a few random generators.
inline std::vector<Perm> random_generators(std::mt19937_64& rng, int degree, int count) {
  std::vector<Perm> gens;
  for (int i = 0; i < count; ++i) {
    Perm p = identity(degree);
    std::shuffle(p.begin(), p.end(), rng);
    gens.push_back(p);
  }
  return gens;
}

}  // namespace oracle

#ifndef R4EMBED_TESTS_HELPERS_HPP
#define R4EMBED_TESTS_HELPERS_HPP

#include <numeric>
#include <random>
#include <vector>

#include "r4embed/complex.hpp"
#include "r4embed/homology.hpp"
#include "r4embed/matrix.hpp"
#include "r4embed/presentation.hpp"

namespace r4embed::testing {

// ---- reference surface triangulations ----

// The 7-vertex torus: vertex set Z_7, triangles {i, i+1, i+3} and
// {i, i+2, i+3}.  Its 1-skeleton is K_7; every edge lies in exactly two
// triangles.
inline SimplicialComplex2 torus7() {
  SimplicialComplex2 k;
  k.vertex_count = 7;
  auto tri = [&](int a, int b, int c) {
    k.ensure_edge(a, b);
    k.ensure_edge(a, c);
    k.ensure_edge(b, c);
    k.ensure_triangle(a, b, c);
  };
  for (int i = 0; i < 7; ++i) {
    tri(i, (i + 1) % 7, (i + 3) % 7);
    tri(i, (i + 2) % 7, (i + 3) % 7);
  }
  return k;
}

// n x n grid torus (diagonal split), n >= 3.
inline SimplicialComplex2 torus_grid(int n) {
  SimplicialComplex2 k;
  k.vertex_count = static_cast<std::size_t>(n * n);
  auto id = [&](int i, int j) { return n * (((i % n) + n) % n) + ((j % n) + n) % n; };
  auto tri = [&](int a, int b, int c) {
    k.ensure_edge(a, b);
    k.ensure_edge(a, c);
    k.ensure_edge(b, c);
    k.ensure_triangle(a, b, c);
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int a = id(i, j), b = id(i + 1, j), c = id(i, j + 1),
                d = id(i + 1, j + 1);
      tri(a, b, d);
      tri(a, d, c);
    }
  return k;
}

// n x n grid Klein bottle: the i-direction wraps with the flip
// j -> (n - j) mod n, the j-direction wraps straight.
inline SimplicialComplex2 klein_grid(int n) {
  SimplicialComplex2 k;
  k.vertex_count = static_cast<std::size_t>(n * n);
  auto id = [&](int i, int j) {
    j = ((j % n) + n) % n;
    if (i >= n) {
      i -= n;
      j = (n - j) % n;
    }
    return n * i + j;
  };
  auto tri = [&](int a, int b, int c) {
    k.ensure_edge(a, b);
    k.ensure_edge(a, c);
    k.ensure_edge(b, c);
    k.ensure_triangle(a, b, c);
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int a = id(i, j), b = id(i + 1, j), c = id(i, j + 1),
                d = id(i + 1, j + 1);
      tri(a, b, d);
      tri(a, d, c);
    }
  return k;
}

// Boundary of the 3-simplex: the minimal 2-sphere.
inline SimplicialComplex2 sphere_tetra() {
  SimplicialComplex2 k;
  k.vertex_count = 4;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) k.ensure_edge(a, b);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (int c = b + 1; c < 4; ++c) k.ensure_triangle(a, b, c);
  return k;
}

// Random valid complex: triangles on a small vertex set with all faces
// present, plus a few extra edges.
inline SimplicialComplex2 random_complex(std::mt19937& rng) {
  SimplicialComplex2 k;
  std::uniform_int_distribution<int> nv(3, 9);
  const int v = nv(rng);
  k.vertex_count = static_cast<std::size_t>(v);
  std::uniform_int_distribution<int> nt(1, 8), pick(0, v - 1);
  const int t = nt(rng);
  for (int i = 0; i < t; ++i) {
    int a = pick(rng), b = pick(rng), c = pick(rng);
    if (a == b || b == c || a == c) continue;
    k.ensure_edge(a, b);
    k.ensure_edge(a, c);
    k.ensure_edge(b, c);
    k.ensure_triangle(a, b, c);
  }
  const int e = nt(rng);
  for (int i = 0; i < e; ++i) {
    int a = pick(rng), b = pick(rng);
    if (a != b) k.ensure_edge(a, b);
  }
  // no isolated vertices: chain every vertex to its successor
  for (int a = 0; a + 1 < v; ++a) k.ensure_edge(a, a + 1);
  return k;
}

// ---- matrix helpers ----

inline IntegerMatrix random_matrix(std::mt19937& rng, std::size_t max_dim = 6,
                                   int max_abs = 10) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<int> entry(-max_abs, max_abs);
  IntegerMatrix m(dim(rng), dim(rng));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
  return m;
}

inline Integer det(const IntegerMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Integer acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, 0) == 0) continue;
    IntegerMatrix sub(n - 1, n - 1);
    std::size_t r = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i) continue;
      for (std::size_t c = 1; c < n; ++c) sub(r, c - 1) = m(k, c);
      ++r;
    }
    const Integer term = m(i, 0) * det(sub);
    acc += (i % 2 == 0) ? term : -term;
  }
  return acc;
}

// Invariant factors via the determinantal-divisor definition:
// d_k = gcd of all k x k minors, factor_k = d_k / d_{k-1}.  Exponential,
// fine for matrices up to ~6x6; the independent SNF oracle.
inline std::vector<Integer> minor_gcd_factors(const IntegerMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  const std::size_t kmax = std::min(r, c);

  auto subsets = [](std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(k);
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
      out.push_back(cur);
      std::size_t i = k;
      while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++cur[i - 1];
      for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
  };

  std::vector<Integer> d{1};  // d_0 = 1
  for (std::size_t k = 1; k <= kmax; ++k) {
    Integer g = 0;
    for (const auto& rows : subsets(r, k))
      for (const auto& cols : subsets(c, k)) {
        IntegerMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
        g = boost::multiprecision::gcd(g, det(sub));
        }
    d.push_back(g);
    if (g == 0) break;  // rank reached; all larger minors vanish too
  }
  std::vector<Integer> factors;
  for (std::size_t k = 1; k < d.size() && d[k] != 0; ++k)
    factors.push_back(d[k] / d[k - 1]);
  return factors;
}

// ---- word helpers ----

// Letter-level free reduction: expand to generator letters, cancel
// adjacent inverse pairs to a fixpoint, recollect syllables.  Slow and
// obviously correct; only for words with small exponents.
inline std::vector<Syllable> naive_reduce(const std::vector<Syllable>& raw) {
  std::vector<std::pair<int, int>> letters;  // (generator, +-1)
  for (const Syllable& s : raw) {
    const int step = s.exponent > 0 ? 1 : -1;
    for (Integer i = 0; i < boost::multiprecision::abs(s.exponent); ++i)
      letters.emplace_back(s.generator, step);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i)
      if (letters[i].first == letters[i + 1].first &&
          letters[i].second == -letters[i + 1].second) {
        letters.erase(letters.begin() + static_cast<long>(i),
                      letters.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
  }
  std::vector<Syllable> out;
  for (const auto& [g, sgn] : letters) {
    if (!out.empty() && out.back().generator == g)
      out.back().exponent += sgn;
    else
      out.push_back({g, Integer(sgn)});
  }
  return out;
}

inline std::vector<Syllable> random_raw_word(std::mt19937& rng, int gens) {
  std::uniform_int_distribution<int> len(0, 12), gen(0, gens - 1),
      exp(-3, 3);
  std::vector<Syllable> raw;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) {
    const int e = exp(rng);
    if (e == 0) continue;
    raw.push_back({gen(rng), Integer(e)});
  }
  return raw;
}

}  // namespace r4embed::testing

#endif

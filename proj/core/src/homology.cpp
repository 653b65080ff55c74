#include "r4embed/homology.hpp"

#include <algorithm>
#include <utility>

namespace r4embed {

using boost::multiprecision::abs;

IntegerMatrix SNFResult::diagonal(std::size_t rows, std::size_t cols) const {
  IntegerMatrix d(rows, cols);
  for (std::size_t i = 0; i < invariant_factors.size(); ++i)
    d(i, i) = invariant_factors[i];
  return d;
}

namespace {

// Diagonalization with the divisibility chain enforced in-loop.  When
// track is set, U and V accumulate the row and column operations.
std::vector<Integer> snf_core(IntegerMatrix& m, bool track, IntegerMatrix* u,
                              IntegerMatrix* v) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (track) {
    *u = IntegerMatrix::identity(rows);
    *v = IntegerMatrix::identity(cols);
  }

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m(a, j), m(b, j));
    if (track)
      for (std::size_t j = 0; j < rows; ++j) std::swap((*u)(a, j), (*u)(b, j));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, a), m(i, b));
    if (track)
      for (std::size_t i = 0; i < cols; ++i) std::swap((*v)(i, a), (*v)(i, b));
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const Integer& q) {
    // row_dst += q * row_src
    if (q == 0) return;
    for (std::size_t j = 0; j < cols; ++j)
      if (m(src, j) != 0) m(dst, j) += q * m(src, j);
    if (track)
      for (std::size_t j = 0; j < rows; ++j)
        if ((*u)(src, j) != 0) (*u)(dst, j) += q * (*u)(src, j);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < rows; ++i)
      if (m(i, src) != 0) m(i, dst) += q * m(i, src);
    if (track)
      for (std::size_t i = 0; i < cols; ++i)
        if ((*v)(i, src) != 0) (*v)(i, dst) += q * (*v)(i, src);
  };
  auto negate_row = [&](std::size_t r) {
    for (std::size_t j = 0; j < cols; ++j) m(r, j) = -m(r, j);
    if (track)
      for (std::size_t j = 0; j < rows; ++j) (*u)(r, j) = -(*u)(r, j);
  };

  const std::size_t steps = std::min(rows, cols);
  std::vector<Integer> factors;

  for (std::size_t t = 0; t < steps; ++t) {
    // Smallest nonzero absolute value in the trailing submatrix,
    // row-then-column tie-breaking.
    std::size_t pr = t, pc = t;
    Integer best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (m(i, j) == 0) continue;
        Integer a = abs(m(i, j));
        if (best == 0 || a < best) {
          best = a;
          pr = i;
          pc = j;
        }
      }
    if (best == 0) break;
    swap_rows(t, pr);
    swap_cols(t, pc);

    for (;;) {
      bool disturbed = false;
      // Clear the pivot column.
      for (std::size_t i = t + 1; i < rows; ++i) {
        while (m(i, t) != 0) {
          Integer q = m(i, t) / m(t, t);
          add_row(i, t, -q);
          if (m(i, t) != 0) {
            // Remainder became the smaller value; continue Euclid.
            swap_rows(i, t);
            disturbed = true;
          }
        }
      }
      // Clear the pivot row.
      bool row_dirty = false;
      for (std::size_t j = t + 1; j < cols; ++j) {
        while (m(t, j) != 0) {
          Integer q = m(t, j) / m(t, t);
          add_col(j, t, -q);
          if (m(t, j) != 0) {
            swap_cols(j, t);
            row_dirty = true;
          }
        }
      }
      if (row_dirty) continue;  // column may be dirty again
      if (disturbed) {
        // Re-check the column once more after row clearing.
        bool col_clean = true;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (m(i, t) != 0) col_clean = false;
        if (!col_clean) continue;
      }
      // Pivot must divide the whole trailing submatrix.
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols && !fixed; ++j)
          if (m(i, j) % m(t, t) != 0) {
            add_row(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }

    if (m(t, t) < 0) negate_row(t);
    factors.push_back(m(t, t));
  }
  return factors;
}

}  // namespace

SNFResult smith_normal_form(IntegerMatrix m) {
  SNFResult r;
  r.invariant_factors = snf_core(m, true, &r.U, &r.V);
  return r;
}

std::vector<Integer> invariant_factors(IntegerMatrix m) {
  return snf_core(m, false, nullptr, nullptr);
}

std::string AbelianDecomposition::to_string() const {
  if (trivial()) return "0";
  std::string s;
  if (free_rank == 1)
    s = "Z";
  else if (free_rank > 1)
    s = "Z^" + std::to_string(free_rank);
  for (const Integer& d : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + d.str();
  }
  return s;
}

AbelianDecomposition decomposition_from_relations(const IntegerMatrix& m) {
  AbelianDecomposition d;
  std::vector<Integer> f = invariant_factors(m);
  d.free_rank = m.cols() - f.size();
  for (Integer& x : f)
    if (x > 1) d.torsion.push_back(std::move(x));
  return d;
}

HomologyGroups homology_groups(const SimplicialComplex2& k) {
  auto [d1, d2] = boundary_matrices(k);
  const std::size_t nv = k.vertex_count;
  const std::size_t ne = k.edges.size();
  const std::size_t nt = k.triangles.size();

  const std::size_t r1 = invariant_factors(d1).size();
  std::vector<Integer> f2 = invariant_factors(d2);
  const std::size_t r2 = f2.size();

  HomologyGroups h;
  h.h0.free_rank = nv - r1;  // connected components
  h.h1.free_rank = ne - r1 - r2;
  for (Integer& x : f2)
    if (x > 1) h.h1.torsion.push_back(std::move(x));
  h.h2.free_rank = nt - r2;  // kernel of d2 is free
  return h;
}

}  // namespace r4embed

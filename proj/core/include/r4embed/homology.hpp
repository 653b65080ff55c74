#ifndef R4EMBED_HOMOLOGY_HPP
#define R4EMBED_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "r4embed/complex.hpp"
#include "r4embed/matrix.hpp"

namespace r4embed {

struct SNFResult {
  std::vector<Integer> invariant_factors;  // positive, d_i | d_{i+1}
  IntegerMatrix U, V;                      // unimodular, U * M * V = D

  IntegerMatrix diagonal(std::size_t rows, std::size_t cols) const;
};

// Smith normal form with transforms.  Smallest-absolute-value pivoting,
// deterministic; arbitrary-precision throughout.
SNFResult smith_normal_form(IntegerMatrix m);

// Invariant factors without maintaining U and V (cheaper on the large
// boundary matrices).
std::vector<Integer> invariant_factors(IntegerMatrix m);

struct AbelianDecomposition {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // entries > 1 in divisibility order

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;  // e.g. "Z^2 + Z/2 + Z/6", "0"
  bool operator==(const AbelianDecomposition&) const = default;
};

// The group Z^n / rowspace(M) for an m x n relation matrix.
AbelianDecomposition decomposition_from_relations(const IntegerMatrix& m);

struct HomologyGroups {
  AbelianDecomposition h0, h1, h2;
};

HomologyGroups homology_groups(const SimplicialComplex2& k);

}  // namespace r4embed

#endif

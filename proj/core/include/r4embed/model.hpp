#ifndef R4EMBED_MODEL_HPP
#define R4EMBED_MODEL_HPP

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "r4embed/complex.hpp"
#include "r4embed/presentation.hpp"

namespace r4embed {

// Bookkeeping for the model complex K(P) of a stabilized presentation:
// which vertices form the wedge circles, and the annulus/cone/h-disk
// gadget attached per relator.
struct ModelStructure {
  // Each circle is the 3-cycle wedge_point -> a -> b -> wedge_point; the
  // far edge (a, b) is the one not incident to the wedge point.
  struct Circle {
    int a = -1, b = -1;
  };

  // One gadget per relator r_j h_j.  lower[l] is the wedge vertex under
  // v_l; rectangle Q_l has lower edge (lower[l], lower[l+1]) and the
  // rectangle over e_j is Q_n.
  struct Gadget {
    int relator = -1;
    std::vector<int> lower;
    std::vector<int> upper;
    int apex = -1;
  };

  int wedge_point = 0;
  std::vector<Circle> circles;      // one per generator of the stabilized P
  std::size_t base_gen_count = 0;   // n of the padded pre-stabilization P
  std::size_t stabilizer_count = 0; // m; circles n..n+m-1 are the h_j

  std::vector<Gadget> gadgets;              // size m
  std::vector<std::array<int, 3>> h_disks;  // filling triangle per h_j

  std::array<int, 2> e_edge(std::size_t j) const {
    const Circle& c = circles[base_gen_count + j];
    return {c.a, c.b};
  }
};

// Wedge of `gen_count` simplicial circles, each a 3-edge cycle, disjoint
// except at the wedge point.
std::pair<SimplicialComplex2, ModelStructure> build_wedge(std::size_t gen_count);

// Standalone triangulated annulus of `rect_count` >= 3 rectangles, lower
// vertices 0..n-1, upper vertices n..2n-1, rectangle Q_l split by the
// diagonal v_l w_{l+1}.
SimplicialComplex2 build_annulus(std::size_t rect_count);

// Attach the annulus for relator j (the word r_j h_j, whose last syllable
// must be the stabilizer h_j with exponent 1) along the wedge.
void attach_annulus(SimplicialComplex2& k, ModelStructure& st, int relator_j,
                    const Word& word);

// Cone the upper boundary of gadget j from a fresh apex.
void cone_upper_boundary(SimplicialComplex2& k, ModelStructure& st, int j);

// Fill the 3-cycle of circle h_j with a single triangle.
void add_h_disk(SimplicialComplex2& k, ModelStructure& st, int j);

// Full pipeline for a stabilized presentation
// <g_1..g_n, h_1..h_m ; r_1 h_1, ..., r_m h_m, h_1, ..., h_m>.
std::pair<SimplicialComplex2, ModelStructure> build_model_complex(
    const Presentation& p_stab);

// Total simplex count (vertices + edges + triangles).
std::size_t simplex_count(const SimplicialComplex2& k);

}  // namespace r4embed

#endif

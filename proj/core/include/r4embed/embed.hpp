#ifndef R4EMBED_EMBED_HPP
#define R4EMBED_EMBED_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "r4embed/model.hpp"
#include "r4embed/numeric.hpp"

namespace r4embed {

// Frame of the construction.  Pi = {x3 = x4 = 0}; Lambda = {x4 = h} with
// h = 1; the pencil of 3-planes through Pi is parameterized rationally by
// t via the tan-half-angle direction
//   direction(t) = ((1 - t^2)/(1 + t^2), 2t/(1 + t^2))
// in the (x3, x4)-plane, with gamma = 2 * arctan(t) increasing in t.
// Gadgets live in t in (t*, 1), t* = 1/2 (sin of the limiting angle is
// 4/5), and rho' = h / sin(gamma*) = 5/4.
struct Frame {
  static Rational h() { return 1; }
  static Rational t_star() { return Rational(1, 2); }
  static Rational rho_prime() { return Rational(5, 4); }
  static Rational apex_height() { return 2; }

  // x3 coordinate of the point of Sigma_t at height x4 = 1 above Pi:
  // cot(gamma) = (1 - t^2) / (2t).
  static Rational cot_gamma(const Rational& t) {
    return (1 - t * t) / (2 * t);
  }

  static std::pair<Rational, Rational> direction(const Rational& t) {
    const Rational d = 1 + t * t;
    return {(1 - t * t) / d, 2 * t / d};
  }
};

struct WedgeLayout {
  std::vector<Point4> coords;  // indexed by wedge vertex id
  Rational delta_lb;           // certified rational lower bound on delta
};

// Place the wedge in Pi: generator circles as thin triangles at radius 1,
// stabilizer circles as wide triangles with far edge e_j at radius 4, one
// angular slot per circle.  delta_lb is computed from exact squared
// distances, never assumed.
WedgeLayout layout_wedge(const ModelStructure& st);

// m pairwise disjoint closed t-intervals inside (1/2, 1), all of equal
// width w with 2w < delta_lb / (4 rho') and gaps of at least w.
std::vector<std::pair<Rational, Rational>> assign_intervals(
    std::size_t m, const Rational& delta_lb);

struct GadgetGeometry {
  Rational lo, hi;                // I_j as a t-interval
  std::vector<Rational> t_values; // strictly increasing, inside (lo, hi)
};

struct RealizedComplex {
  SimplicialComplex2 complex;
  ModelStructure structure;
  std::vector<Point4> coords;            // per vertex
  std::vector<GadgetGeometry> gadgets;   // parallel to structure.gadgets
  Rational delta_lb;
  Presentation base;                     // padded (maybe compressed) source
};

// Upper vertices of gadget j: uniform rational subdivision of I_j, each
// v_l vertically above w_l at height h on the 3-plane Sigma_{t_l}.
GadgetGeometry place_annulus(const ModelStructure& st, std::size_t j,
                             const std::pair<Rational, Rational>& interval,
                             std::vector<Point4>& coords);

// Apex above Lambda at the interval midpoint parameter.
void place_cone(const ModelStructure& st, std::size_t j,
                const GadgetGeometry& geom, std::vector<Point4>& coords);

// Full pipeline: pad -> (binary_compress) -> stabilize ->
// build_model_complex -> layout -> intervals -> per-gadget placement.
RealizedComplex realize(const Presentation& p, bool compress = false);

// Homotopy-type route: contract a spanning tree of a connected 2-complex and
// realize the resulting length-<=3 presentation.
RealizedComplex realize_homotopy_type(const SimplicialComplex2& k2);

}  // namespace r4embed

#endif

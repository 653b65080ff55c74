#ifndef R4EMBED_VERIFY_HPP
#define R4EMBED_VERIFY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "r4embed/complex.hpp"
#include "r4embed/embed.hpp"
#include "r4embed/numeric.hpp"

namespace r4embed {

enum class PairClass { disjoint, shared_face, violation };

struct PairResult {
  PairClass cls = PairClass::disjoint;
  std::optional<Point4> witness;  // set on violation
};

// Exact classification of |S| vs |T| for realized simplices of dimension
// <= 2 in R^4.  S and T are given by abstract vertex ids plus rational
// coordinates; the shared abstract face is derived from matching ids.
// Throws std::invalid_argument on a degenerate (affinely dependent)
// simplex.
PairResult simplex_pair_intersection(const std::vector<int>& s_ids,
                                     const std::vector<Point4>& s_pts,
                                     const std::vector<int>& t_ids,
                                     const std::vector<Point4>& t_pts);

struct Violation {
  SimplexId a, b;
  Point4 witness;
};

struct IntersectionReport {
  std::vector<Violation> violations;
  std::vector<std::string> degeneracies;
  std::size_t checked_pairs = 0;
  std::size_t pruned_pairs = 0;

  bool clean() const { return violations.empty() && degeneracies.empty(); }
};

struct CheckOptions {
  bool prune = true;
  unsigned workers = 1;
};

// All-pairs embedding certificate.  Pruning uses exact separating
// hyperplane tests only (axis-aligned boxes and the angular-sector
// normals between gadget intervals), so pruned and unpruned runs agree.
IntersectionReport check_embedding(const RealizedComplex& rc,
                                   const CheckOptions& opts = {});

struct SigmaCertificate {
  bool ok = false;
  std::vector<Rational> margins;  // delta_lb/(4 rho') - 2*width per gadget
  std::string problem;            // first failure, empty when ok
};

// The sigma width condition: 2*width(I_j) < delta_lb / (4 rho') for
// every gadget, intervals pairwise disjoint inside (t*, 1), per-gadget
// parameters strictly increasing inside I_j.
SigmaCertificate check_sigma_condition(const RealizedComplex& rc);

// Segment-angle bound oracle.  Two segments with base points in the
// plane {z = 0} at distance delta > 0 meet at a common tip above the
// plane; certifies that at least one makes an angle with the plane
// normal exceeding delta / (2 * length).  All comparisons are exact,
// using the rational cosine bounds 1 - x^2/2 <= cos x <= 1 - x^2/2 + x^4/24.
bool lemma2_oracle(const Point3& base1, const Point3& base2, const Point3& tip);

}  // namespace r4embed

#endif

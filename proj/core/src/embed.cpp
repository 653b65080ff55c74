#include "r4embed/embed.hpp"

#include <algorithm>
#include <stdexcept>

namespace r4embed {

namespace {

using Vec2 = std::array<Rational, 2>;

Rational dot2(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }

Vec2 sub2(const Vec2& a, const Vec2& b) { return {a[0] - b[0], a[1] - b[1]}; }

Rational cross2(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }

Rational sq_norm2(const Vec2& a) { return dot2(a, a); }

// Exact squared distance from point p to segment [a, b].
Rational point_segment_sq(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = sub2(b, a);
  const Vec2 ap = sub2(p, a);
  const Rational len2 = sq_norm2(ab);
  if (len2 == 0) return sq_norm2(ap);
  Rational t = dot2(ap, ab) / len2;
  if (t < 0) t = 0;
  if (t > 1) t = 1;
  const Vec2 closest{a[0] + t * ab[0], a[1] + t * ab[1]};
  return sq_norm2(sub2(p, closest));
}

int sign(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c,
                        const Vec2& d) {
  const int d1 = sign(cross2(sub2(b, a), sub2(c, a)));
  const int d2 = sign(cross2(sub2(b, a), sub2(d, a)));
  const int d3 = sign(cross2(sub2(d, c), sub2(a, c)));
  const int d4 = sign(cross2(sub2(d, c), sub2(b, c)));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  auto on = [&](const Vec2& p, const Vec2& u, const Vec2& v) {
    return sign(cross2(sub2(v, u), sub2(p, u))) == 0 &&
           point_segment_sq(p, u, v) == 0;
  };
  return on(c, a, b) || on(d, a, b) || on(a, c, d) || on(b, c, d);
}

Rational segment_segment_sq(const Vec2& a, const Vec2& b, const Vec2& c,
                            const Vec2& d) {
  if (segments_intersect(a, b, c, d)) return 0;
  Rational m = point_segment_sq(a, c, d);
  m = std::min(m, point_segment_sq(b, c, d));
  m = std::min(m, point_segment_sq(c, a, b));
  m = std::min(m, point_segment_sq(d, a, b));
  return m;
}

Vec2 unit_direction(const Rational& u) {
  const Rational d = 1 + u * u;
  return {(1 - u * u) / d, 2 * u / d};
}

Point4 planar(const Vec2& p) { return {p[0], p[1], 0, 0}; }

}  // namespace

WedgeLayout layout_wedge(const ModelStructure& st) {
  const std::size_t big_n = st.circles.size();
  const std::size_t n = st.base_gen_count;
  WedgeLayout out;
  out.coords.assign(1 + 2 * big_n, Point4{0, 0, 0, 0});
  out.delta_lb = 1;
  if (big_n == 0) return out;

  // One angular slot per circle in the tan-half-angle family; generator
  // circles are thin triangles at radius 1, stabilizer circles wide
  // triangles at radius 4 so that the far edge e_j is both long and far
  // from the generator part of the wedge.
  std::vector<std::pair<Vec2, Vec2>> far(big_n);  // (a_i, b_i) positions
  for (std::size_t i = 0; i < big_n; ++i) {
    const Rational u_c(2 * i + 1, 2 * big_n);
    const bool stab = i >= n;
    const Rational half_width =
        stab ? Rational(1, 4 * big_n) : Rational(1, 8 * big_n);
    const Rational radius = stab ? 4 : 1;
    const Vec2 da = unit_direction(u_c - half_width);
    const Vec2 db = unit_direction(u_c + half_width);
    far[i] = {{radius * da[0], radius * da[1]}, {radius * db[0], radius * db[1]}};
    out.coords[static_cast<std::size_t>(st.circles[i].a)] = planar(far[i].first);
    out.coords[static_cast<std::size_t>(st.circles[i].b)] = planar(far[i].second);
  }

  // Certify delta: exact min squared distance from the far edges e_j to
  // the generator circles, capped by the e_j lengths themselves (the
  // annulus embedding argument needs length(e_j) >= delta as well).
  const std::size_t m = st.stabilizer_count;
  if (m == 0) return out;
  const Vec2 origin{0, 0};
  Rational min_sq = -1;
  auto account = [&](const Rational& v) {
    if (min_sq < 0 || v < min_sq) min_sq = v;
  };
  for (std::size_t j = 0; j < m; ++j) {
    const auto& [ea, eb] = far[n + j];
    account(sq_norm2(sub2(ea, eb)));  // length(e_j)^2
    for (std::size_t i = 0; i < n; ++i) {
      const auto& [ga, gb] = far[i];
      account(segment_segment_sq(ea, eb, origin, ga));
      account(segment_segment_sq(ea, eb, ga, gb));
      account(segment_segment_sq(ea, eb, gb, origin));
    }
  }
  out.delta_lb = rational_sqrt_lower(min_sq);
  if (out.delta_lb <= 0)
    throw std::logic_error("wedge layout failed to separate the far edges");
  return out;
}

std::vector<std::pair<Rational, Rational>> assign_intervals(
    std::size_t m, const Rational& delta_lb) {
  if (m == 0) throw std::invalid_argument("assign_intervals needs m >= 1");
  if (delta_lb <= 0) throw std::invalid_argument("delta_lb must be positive");
  // 2m+1 slots inside (1/2, 1); intervals occupy every other slot, so the
  // gaps are at least one slot wide.  Width also satisfies the sigma
  // surrogate 2w < delta_lb / (4 rho') = delta_lb / 5.
  const Rational slot = Rational(1, 2) / Rational(2 * m + 1);
  const Rational eleventh = delta_lb / 11;
  const Rational w = slot < eleventh ? slot : eleventh;
  std::vector<std::pair<Rational, Rational>> out;
  out.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    const Rational lo = Rational(1, 2) + Rational(2 * j + 1) * slot;
    out.emplace_back(lo, lo + w);
  }
  return out;
}

GadgetGeometry place_annulus(const ModelStructure& st, std::size_t j,
                             const std::pair<Rational, Rational>& interval,
                             std::vector<Point4>& coords) {
  const auto& g = st.gadgets[j];
  const std::size_t n = g.lower.size();
  GadgetGeometry geom;
  geom.lo = interval.first;
  geom.hi = interval.second;
  const Rational step = (geom.hi - geom.lo) / Rational(n + 1);
  for (std::size_t l = 0; l < n; ++l) {
    const Rational t = geom.lo + Rational(l + 1) * step;
    geom.t_values.push_back(t);
    const Point4& w = coords[static_cast<std::size_t>(g.lower[l])];
    coords[static_cast<std::size_t>(g.upper[l])] = {w[0], w[1],
                                                    Frame::cot_gamma(t),
                                                    Frame::h()};
  }
  return geom;
}

void place_cone(const ModelStructure& st, std::size_t j,
                const GadgetGeometry& geom, std::vector<Point4>& coords) {
  const auto& g = st.gadgets[j];
  const std::size_t n = g.lower.size();
  Rational cx = 0, cy = 0;
  for (std::size_t l = 0; l < n; ++l) {
    const Point4& w = coords[static_cast<std::size_t>(g.lower[l])];
    cx += w[0];
    cy += w[1];
  }
  cx /= Rational(n);
  cy /= Rational(n);
  const Rational t_mid = (geom.lo + geom.hi) / 2;
  coords[static_cast<std::size_t>(g.apex)] = {
      cx, cy, Frame::apex_height() * Frame::cot_gamma(t_mid),
      Frame::apex_height()};
}

RealizedComplex realize(const Presentation& p, bool compress) {
  Presentation padded = pad_relations(p);
  if (compress) padded = binary_compress(padded);
  const Presentation stab = stabilize(padded);

  RealizedComplex rc;
  auto built = build_model_complex(stab);
  rc.complex = std::move(built.first);
  rc.structure = std::move(built.second);
  rc.base = std::move(padded);

  WedgeLayout wl = layout_wedge(rc.structure);
  rc.delta_lb = wl.delta_lb;
  rc.coords.assign(rc.complex.vertex_count, Point4{0, 0, 0, 0});
  std::copy(wl.coords.begin(), wl.coords.end(), rc.coords.begin());

  const std::size_t m = rc.structure.gadgets.size();
  if (m > 0) {
    auto intervals = assign_intervals(m, rc.delta_lb);
    for (std::size_t j = 0; j < m; ++j) {
      GadgetGeometry geom = place_annulus(rc.structure, j, intervals[j], rc.coords);
      place_cone(rc.structure, j, geom, rc.coords);
      rc.gadgets.push_back(std::move(geom));
    }
  }
  return rc;
}

RealizedComplex realize_homotopy_type(const SimplicialComplex2& k2) {
  CWData cw = contract_tree(k2, 0);
  Presentation p;
  p.generators = cw.one_cells;
  p.relators = cw.attaching_words;
  return realize(p, false);
}

}  // namespace r4embed

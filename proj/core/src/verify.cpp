#include "r4embed/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace r4embed {

namespace {

// -------- small exact linear algebra --------

enum class SolveStatus { inconsistent, unique, underdetermined };

struct SolveResult {
  SolveStatus status = SolveStatus::inconsistent;
  std::vector<Rational> x;  // when unique
  std::size_t rank = 0;
};

// Gaussian elimination on an augmented system (each row: n coefficients
// followed by the right-hand side).
SolveResult solve_linear(std::vector<std::vector<Rational>> rows, std::size_t n) {
  const std::size_t m = rows.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t pr = r;
    while (pr < m && rows[pr][c] == 0) ++pr;
    if (pr == m) continue;
    std::swap(rows[r], rows[pr]);
    const Rational inv = rows[r][c];
    for (std::size_t k = c; k <= n; ++k) rows[r][k] /= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t k = c; k <= n; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  SolveResult out;
  out.rank = r;
  for (std::size_t i = r; i < m; ++i)
    if (rows[i][n] != 0) {
      out.status = SolveStatus::inconsistent;
      return out;
    }
  if (r < n) {
    out.status = SolveStatus::underdetermined;
    return out;
  }
  out.status = SolveStatus::unique;
  out.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < r; ++i) out.x[pivot_col[i]] = rows[i][n];
  return out;
}

// Affine independence of k points in R^4 (k <= 3).
bool affinely_independent(const std::vector<Point4>& pts) {
  const std::size_t k = pts.size();
  if (k <= 1) return true;
  // rank of the (k-1) difference vectors
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 1; i < k; ++i) {
    std::vector<Rational> row(5, Rational(0));
    for (int c = 0; c < 4; ++c)
      row[static_cast<std::size_t>(c)] = pts[i][c] - pts[0][c];
    rows.push_back(std::move(row));
  }
  // Use the solver just for its rank computation (rhs column all zero).
  SolveResult s = solve_linear(std::move(rows), 4);
  return s.rank == k - 1;
}

struct Candidate {
  std::vector<Rational> x;
};

}  // namespace

PairResult simplex_pair_intersection(const std::vector<int>& s_ids,
                                     const std::vector<Point4>& s_pts,
                                     const std::vector<int>& t_ids,
                                     const std::vector<Point4>& t_pts) {
  const std::size_t a = s_pts.size(), b = t_pts.size();
  if (a == 0 || a > 3 || b == 0 || b > 3 || s_ids.size() != a ||
      t_ids.size() != b)
    throw std::invalid_argument("simplices must have 1..3 labelled vertices");
  if (!affinely_independent(s_pts) || !affinely_independent(t_pts))
    throw std::invalid_argument("degenerate simplex");

  const std::size_t nvars = a + b;
  // Base system: coordinates agree, barycentric weights sum to one.
  std::vector<std::vector<Rational>> base;
  for (int c = 0; c < 4; ++c) {
    std::vector<Rational> row(nvars + 1, Rational(0));
    for (std::size_t i = 0; i < a; ++i) row[i] = s_pts[i][c];
    for (std::size_t j = 0; j < b; ++j) row[a + j] = -t_pts[j][c];
    base.push_back(std::move(row));
  }
  {
    std::vector<Rational> row(nvars + 1, Rational(0));
    for (std::size_t i = 0; i < a; ++i) row[i] = 1;
    row[nvars] = 1;
    base.push_back(row);
  }
  {
    std::vector<Rational> row(nvars + 1, Rational(0));
    for (std::size_t j = 0; j < b; ++j) row[a + j] = 1;
    row[nvars] = 1;
    base.push_back(row);
  }

  auto feasible = [&](const std::vector<Rational>& x) {
    for (const Rational& v : x)
      if (v < 0) return false;
    return true;
  };

  std::vector<Candidate> vertices;
  SolveResult root = solve_linear(base, nvars);
  if (root.status == SolveStatus::inconsistent)
    return {PairClass::disjoint, std::nullopt};
  if (root.status == SolveStatus::unique) {
    if (feasible(root.x)) vertices.push_back({std::move(root.x)});
  } else {
    // The feasible set is a polytope inside an affine space of dimension
    // d = nvars - rank; every polytope vertex is the unique solution of
    // the base system plus d pinned-to-zero variables, so enumerating all
    // d-subsets finds them all.
    const std::size_t d = nvars - root.rank;
    std::vector<std::size_t> idx(nvars);
    for (std::size_t i = 0; i < nvars; ++i) idx[i] = i;
    std::vector<bool> mask(nvars, false);
    std::fill(mask.end() - static_cast<long>(d), mask.end(), true);
    std::vector<std::vector<Rational>> sys;
    do {
      sys = base;
      for (std::size_t i = 0; i < nvars; ++i)
        if (mask[i]) {
          std::vector<Rational> pin(nvars + 1, Rational(0));
          pin[i] = 1;
          sys.push_back(std::move(pin));
        }
      SolveResult s = solve_linear(std::move(sys), nvars);
      if (s.status == SolveStatus::unique && feasible(s.x))
        vertices.push_back({std::move(s.x)});
    } while (std::next_permutation(mask.begin(), mask.end()));
  }

  if (vertices.empty()) return {PairClass::disjoint, std::nullopt};

  // Every vertex of the intersection polytope must be supported on the
  // shared abstract face.
  for (const Candidate& cand : vertices) {
    bool ok = true;
    for (std::size_t i = 0; i < a && ok; ++i)
      if (cand.x[i] > 0 &&
          std::find(t_ids.begin(), t_ids.end(), s_ids[i]) == t_ids.end())
        ok = false;
    for (std::size_t j = 0; j < b && ok; ++j)
      if (cand.x[a + j] > 0 &&
          std::find(s_ids.begin(), s_ids.end(), t_ids[j]) == s_ids.end())
        ok = false;
    if (!ok) {
      Point4 w{0, 0, 0, 0};
      for (std::size_t i = 0; i < a; ++i)
        for (int c = 0; c < 4; ++c) w[c] += cand.x[i] * s_pts[i][c];
      return {PairClass::violation, w};
    }
  }
  return {PairClass::shared_face, std::nullopt};
}

namespace {

struct SimplexRec {
  SimplexId id;
  std::vector<int> ids;
  std::vector<Point4> pts;
  Point4 bb_min, bb_max;
  int gadget = -1;  // annulus/cone gadget index, -1 for the planar part
  bool degenerate = false;
};

SimplexRec make_rec(const RealizedComplex& rc, const SimplexId& id) {
  SimplexRec r;
  r.id = id;
  for (int i = 0; i <= id.dim; ++i) {
    const int v = id.v[static_cast<std::size_t>(i)];
    r.ids.push_back(v);
    r.pts.push_back(rc.coords[static_cast<std::size_t>(v)]);
  }
  r.bb_min = r.bb_max = r.pts[0];
  for (const Point4& p : r.pts)
    for (int c = 0; c < 4; ++c) {
      if (p[c] < r.bb_min[c]) r.bb_min[c] = p[c];
      if (p[c] > r.bb_max[c]) r.bb_max[c] = p[c];
    }
  const GadgetLabel l = rc.complex.label(id);
  if (l.kind == GadgetKind::annulus || l.kind == GadgetKind::cone)
    r.gadget = l.index;
  r.degenerate = !affinely_independent(r.pts);
  return r;
}

// id-subset test on sorted vectors
bool is_face_pair(const SimplexRec& a, const SimplexRec& b) {
  const SimplexRec& small = a.ids.size() <= b.ids.size() ? a : b;
  const SimplexRec& big = a.ids.size() <= b.ids.size() ? b : a;
  return std::includes(big.ids.begin(), big.ids.end(), small.ids.begin(),
                       small.ids.end());
}

bool bbox_separated(const SimplexRec& a, const SimplexRec& b) {
  for (int c = 0; c < 4; ++c)
    if (a.bb_max[c] < b.bb_min[c] || b.bb_max[c] < a.bb_min[c]) return true;
  return false;
}

// Signed side of the 3-plane through Pi with pencil parameter t:
// positive above the separating angle, negative below, zero on Pi.
int sector_side(const Point4& p, const Rational& t) {
  const Rational f = (1 - t * t) * p[3] - 2 * t * p[2];
  return f > 0 ? 1 : (f < 0 ? -1 : 0);
}

bool sector_separated(const SimplexRec& a, const SimplexRec& b,
                      const std::vector<GadgetGeometry>& gadgets) {
  if (a.gadget < 0 || b.gadget < 0 || a.gadget == b.gadget) return false;
  const SimplexRec& lo = a.gadget < b.gadget ? a : b;
  const SimplexRec& hi = a.gadget < b.gadget ? b : a;
  const Rational t_sep =
      (gadgets[static_cast<std::size_t>(lo.gadget)].hi +
       gadgets[static_cast<std::size_t>(hi.gadget)].lo) /
      2;
  for (const Point4& p : lo.pts)
    if (sector_side(p, t_sep) >= 0) return false;
  for (const Point4& p : hi.pts)
    if (sector_side(p, t_sep) <= 0) return false;
  return true;
}

}  // namespace

IntersectionReport check_embedding(const RealizedComplex& rc,
                                   const CheckOptions& opts) {
  IntersectionReport report;

  std::vector<SimplexRec> recs;
  for (std::size_t v = 0; v < rc.complex.vertex_count; ++v)
    recs.push_back(make_rec(rc, SimplexId::vertex(static_cast<int>(v))));
  for (const auto& e : rc.complex.edges)
    recs.push_back(make_rec(rc, SimplexId::edge(e[0], e[1])));
  for (const auto& t : rc.complex.triangles)
    recs.push_back(make_rec(rc, SimplexId::triangle(t[0], t[1], t[2])));

  std::vector<const SimplexRec*> live;
  for (const SimplexRec& r : recs) {
    if (r.degenerate)
      report.degeneracies.push_back("degenerate simplex " + to_string(r.id));
    else
      live.push_back(&r);
  }

  const std::size_t k = live.size();
  const unsigned workers = std::max(1u, opts.workers);

  struct Partial {
    std::vector<Violation> violations;
    std::size_t checked = 0, pruned = 0;
  };
  std::vector<Partial> partials(workers);

  auto run_range = [&](unsigned w) {
    Partial& out = partials[w];
    for (std::size_t i = w; i < k; i += workers) {
      const SimplexRec& s = *live[i];
      for (std::size_t j = i + 1; j < k; ++j) {
        const SimplexRec& t = *live[j];
        if (is_face_pair(s, t)) {
          ++out.checked;
          continue;  // |S| n |T| is the smaller simplex, its own face
        }
        if (opts.prune &&
            (bbox_separated(s, t) || sector_separated(s, t, rc.gadgets))) {
          ++out.pruned;
          continue;
        }
        ++out.checked;
        PairResult r = simplex_pair_intersection(s.ids, s.pts, t.ids, t.pts);
        if (r.cls == PairClass::violation)
          out.violations.push_back({s.id, t.id, *r.witness});
      }
    }
  };

  if (workers == 1) {
    run_range(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w)
      threads.emplace_back(run_range, w);
    for (auto& th : threads) th.join();
  }

  for (Partial& p : partials) {
    report.checked_pairs += p.checked;
    report.pruned_pairs += p.pruned;
    for (Violation& v : p.violations) report.violations.push_back(std::move(v));
  }
  std::sort(report.violations.begin(), report.violations.end(),
            [](const Violation& x, const Violation& y) {
              return std::pair(x.a, x.b) < std::pair(y.a, y.b);
            });
  return report;
}

SigmaCertificate check_sigma_condition(const RealizedComplex& rc) {
  SigmaCertificate cert;
  const Rational bound = rc.delta_lb / (4 * Frame::rho_prime());
  if (rc.delta_lb <= 0) {
    cert.problem = "delta_lb is not positive";
    return cert;
  }
  for (std::size_t j = 0; j < rc.gadgets.size(); ++j) {
    const GadgetGeometry& g = rc.gadgets[j];
    const Rational width = g.hi - g.lo;
    cert.margins.push_back(bound - 2 * width);
    if (!(2 * width < bound)) {
      cert.problem = "interval " + std::to_string(j) + " too wide";
      return cert;
    }
    if (!(g.lo > Frame::t_star() && g.hi < 1)) {
      cert.problem = "interval " + std::to_string(j) + " leaves (t*, 1)";
      return cert;
    }
    Rational prev = g.lo;
    for (const Rational& t : g.t_values) {
      if (!(t > prev && t < g.hi)) {
        cert.problem = "parameters of gadget " + std::to_string(j) +
                       " not strictly increasing inside the interval";
        return cert;
      }
      prev = t;
    }
    if (j + 1 < rc.gadgets.size() && !(g.hi < rc.gadgets[j + 1].lo)) {
      cert.problem = "intervals " + std::to_string(j) + " and " +
                     std::to_string(j + 1) + " not disjoint";
      return cert;
    }
  }
  cert.ok = true;
  return cert;
}

namespace {

// cos(angle to plane normal) compared against a rational threshold c:
// angle has cos = height / length with height >= 0, so
// cos < c  <=>  c > 0 and height^2 < c^2 * length^2.
bool cos_less_than(const Rational& height, const Rational& len_sq,
                   const Rational& c) {
  if (c <= 0) return false;
  return height * height < c * c * len_sq;
}

}  // namespace

bool lemma2_oracle(const Point3& base1, const Point3& base2, const Point3& tip) {
  if (base1[2] != 0 || base2[2] != 0)
    throw std::invalid_argument("segment base points must lie in the plane z=0");
  if (tip[2] <= 0)
    throw std::invalid_argument("common tip must lie strictly above the plane");
  const Rational dx = base1[0] - base2[0], dy = base1[1] - base2[1];
  const Rational delta_sq = dx * dx + dy * dy;
  if (delta_sq == 0)
    throw std::invalid_argument("base points must be distinct (delta > 0)");

  auto certify = [&](const Point3& base) {
    Rational len_sq = 0;
    for (int c = 0; c < 3; ++c) {
      const Rational d = tip[c] - base[c];
      len_sq += d * d;
    }
    // B = delta / (2 len); only B^2 is rational.
    const Rational b_sq = delta_sq / (4 * len_sq);
    // cos B >= 1 - B^2/2, so cos(angle) < 1 - B^2/2 certifies angle > B.
    const Rational lower = 1 - b_sq / 2;
    return cos_less_than(tip[2], len_sq, lower);
  };
  return certify(base1) || certify(base2);
}

}  // namespace r4embed

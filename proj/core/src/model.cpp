#include "r4embed/model.hpp"

#include <stdexcept>

namespace r4embed {

std::size_t simplex_count(const SimplicialComplex2& k) {
  return k.vertex_count + k.edges.size() + k.triangles.size();
}

std::pair<SimplicialComplex2, ModelStructure> build_wedge(std::size_t gen_count) {
  SimplicialComplex2 k;
  ModelStructure st;
  st.wedge_point = k.add_vertex();
  k.set_label(SimplexId::vertex(st.wedge_point), {GadgetKind::wedge, -1});
  for (std::size_t i = 0; i < gen_count; ++i) {
    ModelStructure::Circle c;
    c.a = k.add_vertex();
    c.b = k.add_vertex();
    k.add_edge(st.wedge_point, c.a);
    k.add_edge(c.a, c.b);
    k.add_edge(c.b, st.wedge_point);
    for (int v : {c.a, c.b})
      k.set_label(SimplexId::vertex(v), {GadgetKind::wedge, -1});
    k.set_label(SimplexId::edge(st.wedge_point, c.a), {GadgetKind::wedge, -1});
    k.set_label(SimplexId::edge(c.a, c.b), {GadgetKind::wedge, -1});
    k.set_label(SimplexId::edge(c.b, st.wedge_point), {GadgetKind::wedge, -1});
    st.circles.push_back(c);
  }
  return {std::move(k), std::move(st)};
}

SimplicialComplex2 build_annulus(std::size_t rect_count) {
  if (rect_count < 3)
    throw std::invalid_argument("annulus needs at least 3 rectangles");
  SimplicialComplex2 k;
  const int n = static_cast<int>(rect_count);
  k.vertex_count = 2 * rect_count;  // lower 0..n-1, upper n..2n-1
  auto lo = [&](int l) { return l % n; };
  auto up = [&](int l) { return n + l % n; };
  for (int l = 0; l < n; ++l) {
    k.add_edge(lo(l), lo(l + 1));
    k.add_edge(up(l), up(l + 1));
    k.add_edge(lo(l), up(l));
    k.add_edge(up(l), lo(l + 1));  // diagonal v_l w_{l+1}
    k.add_triangle(up(l), lo(l), lo(l + 1));      // t'_l
    k.add_triangle(up(l), lo(l + 1), up(l + 1));  // t_l
  }
  return k;
}

namespace {

// Wedge path spelling a word: each positive letter traverses its circle
// wedge -> a -> b -> wedge, negative letters in reverse.  Returns the
// cyclic vertex sequence (size = 3 * letter count), starting at the wedge
// point.
std::vector<int> word_path(const ModelStructure& st, const Word& word) {
  std::vector<int> path;
  for (const Syllable& s : word.syllables()) {
    const auto& c = st.circles[static_cast<std::size_t>(s.generator)];
    Integer reps = boost::multiprecision::abs(s.exponent);
    for (Integer r = 0; r < reps; ++r) {
      path.push_back(st.wedge_point);
      if (s.exponent > 0) {
        path.push_back(c.a);
        path.push_back(c.b);
      } else {
        path.push_back(c.b);
        path.push_back(c.a);
      }
    }
  }
  return path;
}

}  // namespace

void attach_annulus(SimplicialComplex2& k, ModelStructure& st, int relator_j,
                    const Word& word) {
  const std::size_t j = static_cast<std::size_t>(relator_j);
  const auto& syls = word.syllables();
  const int h_gen = static_cast<int>(st.base_gen_count + j);
  if (syls.empty() || syls.back().generator != h_gen ||
      syls.back().exponent != 1)
    throw std::invalid_argument(
        "relator word does not end in its stabilizer letter (stabilize not "
        "applied)");

  std::vector<int> path = word_path(st, word);
  const int n = static_cast<int>(path.size());

  ModelStructure::Gadget g;
  g.relator = relator_j;
  // Rotate so that the rectangle over e_j (the middle edge of the final
  // h_j traversal, path edge n-2) becomes Q_n.
  g.lower.resize(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l)
    g.lower[static_cast<std::size_t>(l)] =
        path[static_cast<std::size_t>((l + n - 1) % n)];
  g.upper.resize(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) {
    int v = k.add_vertex();
    g.upper[static_cast<std::size_t>(l)] = v;
    k.set_label(SimplexId::vertex(v), {GadgetKind::annulus, relator_j});
  }

  const GadgetLabel lab{GadgetKind::annulus, relator_j};
  for (int l = 0; l < n; ++l) {
    const int wl = g.lower[static_cast<std::size_t>(l)];
    const int wn = g.lower[static_cast<std::size_t>((l + 1) % n)];
    const int vl = g.upper[static_cast<std::size_t>(l)];
    const int vn = g.upper[static_cast<std::size_t>((l + 1) % n)];
    k.ensure_edge(wl, wn);  // lower edge: already a wedge edge
    k.add_edge(vl, vn);
    k.add_edge(wl, vl);
    k.add_edge(vl, wn);  // diagonal
    k.set_label(SimplexId::edge(vl, vn), lab);
    k.set_label(SimplexId::edge(wl, vl), lab);
    k.set_label(SimplexId::edge(vl, wn), lab);
    k.add_triangle(vl, wl, wn);  // t'_l
    k.add_triangle(vl, wn, vn);  // t_l
    k.set_label(SimplexId::triangle(vl, wl, wn), lab);
    k.set_label(SimplexId::triangle(vl, wn, vn), lab);
  }
  st.gadgets.push_back(std::move(g));
}

void cone_upper_boundary(SimplicialComplex2& k, ModelStructure& st, int j) {
  ModelStructure::Gadget& g = st.gadgets[static_cast<std::size_t>(j)];
  const int n = static_cast<int>(g.upper.size());
  if (n < 3) throw std::invalid_argument("upper cycle too short to cone");
  g.apex = k.add_vertex();
  const GadgetLabel lab{GadgetKind::cone, g.relator};
  k.set_label(SimplexId::vertex(g.apex), lab);
  for (int l = 0; l < n; ++l) {
    const int vl = g.upper[static_cast<std::size_t>(l)];
    const int vn = g.upper[static_cast<std::size_t>((l + 1) % n)];
    k.add_edge(g.apex, vl);
    k.set_label(SimplexId::edge(g.apex, vl), lab);
    k.add_triangle(g.apex, vl, vn);
    k.set_label(SimplexId::triangle(g.apex, vl, vn), lab);
  }
}

void add_h_disk(SimplicialComplex2& k, ModelStructure& st, int j) {
  const auto& c = st.circles[st.base_gen_count + static_cast<std::size_t>(j)];
  k.add_triangle(st.wedge_point, c.a, c.b);
  k.set_label(SimplexId::triangle(st.wedge_point, c.a, c.b),
              {GadgetKind::h_disk, j});
  st.h_disks.push_back({st.wedge_point, c.a, c.b});
}

std::pair<SimplicialComplex2, ModelStructure> build_model_complex(
    const Presentation& p_stab) {
  const std::size_t total = p_stab.relators.size();
  if (total % 2 != 0)
    throw std::invalid_argument("presentation is not stabilized (odd relator count)");
  const std::size_t m = total / 2;
  if (p_stab.generators.size() < m)
    throw std::invalid_argument("presentation is not stabilized");
  const std::size_t n = p_stab.generators.size() - m;

  for (std::size_t j = 0; j < m; ++j) {
    const Word& single = p_stab.relators[m + j];
    if (single.size() != 1 ||
        single.syllables()[0].generator != static_cast<int>(n + j) ||
        single.syllables()[0].exponent != 1)
      throw std::invalid_argument(
          "presentation is not stabilized (missing h_j relator)");
  }

  auto [k, st] = build_wedge(n + m);
  st.base_gen_count = n;
  st.stabilizer_count = m;

  for (std::size_t j = 0; j < m; ++j) {
    attach_annulus(k, st, static_cast<int>(j), p_stab.relators[j]);
    cone_upper_boundary(k, st, static_cast<int>(j));
  }
  for (std::size_t j = 0; j < m; ++j) add_h_disk(k, st, static_cast<int>(j));
  return {std::move(k), std::move(st)};
}

}  // namespace r4embed

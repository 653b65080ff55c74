#include "r4embed/complex.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace r4embed {

std::string to_string(const GadgetLabel& l) {
  switch (l.kind) {
    case GadgetKind::plain:
      return "plain";
    case GadgetKind::wedge:
      return "wedge";
    case GadgetKind::annulus:
      return "annulus:" + std::to_string(l.index);
    case GadgetKind::cone:
      return "cone:" + std::to_string(l.index);
    case GadgetKind::h_disk:
      return "h_disk:" + std::to_string(l.index);
  }
  return "plain";
}

GadgetLabel parse_gadget_label(const std::string& s) {
  auto split = [&](const std::string& prefix, GadgetKind kind) -> GadgetLabel {
    return {kind, std::stoi(s.substr(prefix.size()))};
  };
  if (s == "plain") return {GadgetKind::plain, -1};
  if (s == "wedge") return {GadgetKind::wedge, -1};
  if (s.rfind("annulus:", 0) == 0) return split("annulus:", GadgetKind::annulus);
  if (s.rfind("cone:", 0) == 0) return split("cone:", GadgetKind::cone);
  if (s.rfind("h_disk:", 0) == 0) return split("h_disk:", GadgetKind::h_disk);
  throw std::invalid_argument("unknown gadget label '" + s + "'");
}

SimplexId SimplexId::edge(int a, int b) {
  if (a > b) std::swap(a, b);
  return {1, {a, b, -1}};
}

SimplexId SimplexId::triangle(int a, int b, int c) {
  std::array<int, 3> v{a, b, c};
  std::sort(v.begin(), v.end());
  return {2, v};
}

std::string to_string(const SimplexId& s) {
  std::string out = s.dim == 0 ? "v:" : (s.dim == 1 ? "e:" : "t:");
  for (int i = 0; i <= s.dim; ++i) {
    if (i) out += "-";
    out += std::to_string(s.v[static_cast<std::size_t>(i)]);
  }
  return out;
}

namespace {

std::array<int, 2> sorted_edge(int a, int b) {
  if (a > b) std::swap(a, b);
  return {a, b};
}

std::array<int, 3> sorted_triangle(int a, int b, int c) {
  std::array<int, 3> v{a, b, c};
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

void SimplicialComplex2::add_edge(int a, int b) {
  if (!edges.insert(sorted_edge(a, b)).second)
    duplicate_insertions.push_back("duplicate edge " +
                                   to_string(SimplexId::edge(a, b)));
}

void SimplicialComplex2::add_triangle(int a, int b, int c) {
  if (!triangles.insert(sorted_triangle(a, b, c)).second)
    duplicate_insertions.push_back("duplicate triangle " +
                                   to_string(SimplexId::triangle(a, b, c)));
}

void SimplicialComplex2::ensure_edge(int a, int b) {
  edges.insert(sorted_edge(a, b));
}

void SimplicialComplex2::ensure_triangle(int a, int b, int c) {
  triangles.insert(sorted_triangle(a, b, c));
}

bool SimplicialComplex2::has_edge(int a, int b) const {
  return edges.count(sorted_edge(a, b)) > 0;
}

bool SimplicialComplex2::has_triangle(int a, int b, int c) const {
  return triangles.count(sorted_triangle(a, b, c)) > 0;
}

GadgetLabel SimplicialComplex2::label(const SimplexId& s) const {
  auto it = labels.find(s);
  return it == labels.end() ? GadgetLabel{} : it->second;
}

ValidationReport validate(const SimplicialComplex2& k) {
  ValidationReport r;
  const int n = static_cast<int>(k.vertex_count);

  for (const auto& e : k.edges) {
    if (e[0] < 0 || e[1] >= n)
      r.problems.push_back("edge " + to_string(SimplexId::edge(e[0], e[1])) +
                           " has out-of-range vertex");
    if (e[0] == e[1])
      r.problems.push_back("degenerate edge at vertex " + std::to_string(e[0]));
  }
  for (const auto& t : k.triangles) {
    if (t[0] < 0 || t[2] >= n)
      r.problems.push_back("triangle " +
                           to_string(SimplexId::triangle(t[0], t[1], t[2])) +
                           " has out-of-range vertex");
    if (t[0] == t[1] || t[1] == t[2])
      r.problems.push_back("degenerate triangle " +
                           to_string(SimplexId::triangle(t[0], t[1], t[2])));
    const std::array<std::array<int, 2>, 3> faces{
        sorted_edge(t[0], t[1]), sorted_edge(t[0], t[2]), sorted_edge(t[1], t[2])};
    for (const auto& f : faces)
      if (!k.edges.count(f))
        r.problems.push_back("triangle " +
                             to_string(SimplexId::triangle(t[0], t[1], t[2])) +
                             " missing edge " + to_string(SimplexId::edge(f[0], f[1])));
  }

  if (!k.edges.empty() || !k.triangles.empty()) {
    std::vector<bool> used(k.vertex_count, false);
    for (const auto& e : k.edges)
      for (int v : e)
        if (v >= 0 && v < n) used[static_cast<std::size_t>(v)] = true;
    for (int v = 0; v < n; ++v)
      if (!used[static_cast<std::size_t>(v)])
        r.problems.push_back("isolated vertex " + std::to_string(v));
  }

  for (const auto& d : k.duplicate_insertions) r.problems.push_back(d);
  return r;
}

long long euler_characteristic(const SimplicialComplex2& k) {
  return static_cast<long long>(k.vertex_count) -
         static_cast<long long>(k.edges.size()) +
         static_cast<long long>(k.triangles.size());
}

std::pair<IntegerMatrix, IntegerMatrix> boundary_matrices(
    const SimplicialComplex2& k) {
  std::vector<std::array<int, 2>> edges(k.edges.begin(), k.edges.end());
  std::vector<std::array<int, 3>> tris(k.triangles.begin(), k.triangles.end());
  std::map<std::array<int, 2>, std::size_t> eidx;
  for (std::size_t i = 0; i < edges.size(); ++i) eidx[edges[i]] = i;

  IntegerMatrix d1(k.vertex_count, edges.size());
  for (std::size_t j = 0; j < edges.size(); ++j) {
    d1(static_cast<std::size_t>(edges[j][0]), j) = -1;
    d1(static_cast<std::size_t>(edges[j][1]), j) = 1;
  }

  IntegerMatrix d2(edges.size(), tris.size());
  for (std::size_t j = 0; j < tris.size(); ++j) {
    const auto& t = tris[j];
    // d[v0,v1,v2] = [v1,v2] - [v0,v2] + [v0,v1]
    d2(eidx[sorted_edge(t[1], t[2])], j) = 1;
    d2(eidx[sorted_edge(t[0], t[2])], j) = -1;
    d2(eidx[sorted_edge(t[0], t[1])], j) = 1;
  }
  return {std::move(d1), std::move(d2)};
}

namespace {

struct TreeInfo {
  std::vector<int> parent;                 // -1 for root / unreached
  std::vector<std::array<int, 2>> loops;   // non-tree edges, sorted order
  std::map<std::array<int, 2>, int> loop_index;
  std::set<std::array<int, 2>> tree_edges;
};

TreeInfo spanning_tree(const SimplicialComplex2& k, int basepoint) {
  const std::size_t n = k.vertex_count;
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : k.edges) {
    adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
    adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  TreeInfo t;
  t.parent.assign(n, -1);
  std::vector<bool> seen(n, false);
  if (basepoint < 0 || static_cast<std::size_t>(basepoint) >= n)
    throw std::invalid_argument("basepoint out of range");
  std::queue<int> q;
  q.push(basepoint);
  seen[static_cast<std::size_t>(basepoint)] = true;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (seen[static_cast<std::size_t>(v)]) continue;
      seen[static_cast<std::size_t>(v)] = true;
      t.parent[static_cast<std::size_t>(v)] = u;
      t.tree_edges.insert(sorted_edge(u, v));
      q.push(v);
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!seen[v]) throw std::invalid_argument("complex is disconnected");

  for (const auto& e : k.edges)
    if (!t.tree_edges.count(e)) {
      t.loop_index[e] = static_cast<int>(t.loops.size());
      t.loops.push_back(e);
    }
  return t;
}

// Word of the directed edge u->v after tree contraction: empty for tree
// edges, the loop generator (inverted when traversed high-to-low) otherwise.
void append_edge_word(const TreeInfo& t, int u, int v,
                      std::vector<Syllable>& out) {
  auto e = sorted_edge(u, v);
  auto it = t.loop_index.find(e);
  if (it == t.loop_index.end()) return;  // tree edge contracts away
  out.push_back({it->second, u < v ? Integer(1) : Integer(-1)});
}

}  // namespace

Presentation pi1_presentation(const SimplicialComplex2& k, int basepoint) {
  TreeInfo t = spanning_tree(k, basepoint);
  Presentation p;
  for (const auto& e : t.loops)
    p.generators.push_back("e" + std::to_string(e[0]) + "_" +
                           std::to_string(e[1]));
  for (const auto& tr : k.triangles) {
    std::vector<Syllable> syls;
    append_edge_word(t, tr[0], tr[1], syls);
    append_edge_word(t, tr[1], tr[2], syls);
    append_edge_word(t, tr[2], tr[0], syls);
    p.relators.emplace_back(std::move(syls));
  }
  return p;
}

CWData contract_tree(const SimplicialComplex2& k, int basepoint) {
  TreeInfo t = spanning_tree(k, basepoint);
  CWData cw;
  for (const auto& e : t.loops)
    cw.one_cells.push_back("e" + std::to_string(e[0]) + "_" +
                           std::to_string(e[1]));
  for (const auto& tr : k.triangles) {
    std::vector<Syllable> syls;
    append_edge_word(t, tr[0], tr[1], syls);
    append_edge_word(t, tr[1], tr[2], syls);
    append_edge_word(t, tr[2], tr[0], syls);
    cw.attaching_words.emplace_back(std::move(syls));
  }
  return cw;
}

}  // namespace r4embed

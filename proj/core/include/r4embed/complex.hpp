#ifndef R4EMBED_COMPLEX_HPP
#define R4EMBED_COMPLEX_HPP

#include <array>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "r4embed/matrix.hpp"
#include "r4embed/presentation.hpp"

namespace r4embed {

enum class GadgetKind { plain, wedge, annulus, cone, h_disk };

struct GadgetLabel {
  GadgetKind kind = GadgetKind::plain;
  int index = -1;  // relator index for annulus/cone/h_disk

  bool operator==(const GadgetLabel&) const = default;
};

std::string to_string(const GadgetLabel& l);
GadgetLabel parse_gadget_label(const std::string& s);

// Identifies a simplex of dimension 0..2 by its sorted vertex ids.
struct SimplexId {
  int dim = 0;
  std::array<int, 3> v{-1, -1, -1};  // only first dim+1 entries used

  static SimplexId vertex(int a) { return {0, {a, -1, -1}}; }
  static SimplexId edge(int a, int b);
  static SimplexId triangle(int a, int b, int c);

  auto operator<=>(const SimplexId&) const = default;
};

std::string to_string(const SimplexId& s);

// Abstract simplicial 2-complex.  Edges and triangles are stored as
// sorted vertex tuples; vertex ids are dense in [0, vertex_count).
struct SimplicialComplex2 {
  std::size_t vertex_count = 0;
  std::set<std::array<int, 2>> edges;
  std::set<std::array<int, 3>> triangles;
  std::map<SimplexId, GadgetLabel> labels;

  // Build-time record of attempted duplicate insertions; surfaced by
  // validate().
  std::vector<std::string> duplicate_insertions;

  int add_vertex() { return static_cast<int>(vertex_count++); }

  // add_* record a duplicate if the simplex already exists;
  // ensure_* insert silently when absent and are no-ops otherwise.
  void add_edge(int a, int b);
  void add_triangle(int a, int b, int c);
  void ensure_edge(int a, int b);
  void ensure_triangle(int a, int b, int c);

  bool has_edge(int a, int b) const;
  bool has_triangle(int a, int b, int c) const;

  void set_label(const SimplexId& s, GadgetLabel l) { labels[s] = l; }
  GadgetLabel label(const SimplexId& s) const;
};

struct ValidationReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

// Closure violations, duplicate insertions, out-of-range or isolated
// vertices.  Empty report iff the complex invariants hold.
ValidationReport validate(const SimplicialComplex2& k);

long long euler_characteristic(const SimplicialComplex2& k);

// Oriented boundary matrices with the ascending-vertex-id orientation
// convention: d1 is V x E, d2 is E x T, and d1 * d2 = 0.
std::pair<IntegerMatrix, IntegerMatrix> boundary_matrices(const SimplicialComplex2& k);

// Deterministic BFS spanning tree (lowest vertex id first) rooted at
// `basepoint`; generators are the non-tree edges, relators the triangle
// boundary words.  Throws std::invalid_argument if the complex is
// disconnected.
Presentation pi1_presentation(const SimplicialComplex2& k, int basepoint = 0);

// CW structure after contracting the spanning tree: one 0-cell, a loop
// per non-tree edge, and one attaching word of length <= 3 per triangle.
struct CWData {
  std::vector<std::string> one_cells;
  std::vector<Word> attaching_words;
};

CWData contract_tree(const SimplicialComplex2& k, int basepoint = 0);

}  // namespace r4embed

#endif

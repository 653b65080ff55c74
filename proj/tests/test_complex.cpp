#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "r4embed/complex.hpp"
#include "r4embed/homology.hpp"
#include "r4embed/model.hpp"

using namespace r4embed;

namespace {

SimplicialComplex2 filled_triangle() {
  SimplicialComplex2 k;
  k.vertex_count = 3;
  k.ensure_edge(0, 1);
  k.ensure_edge(0, 2);
  k.ensure_edge(1, 2);
  k.ensure_triangle(0, 1, 2);
  return k;
}

}  // namespace

TEST_CASE("validate accepts a filled triangle") {
  CHECK(validate(filled_triangle()).ok());
}

TEST_CASE("validate reports a closure violation") {
  SimplicialComplex2 k = filled_triangle();
  k.edges.erase({1, 2});
  const ValidationReport r = validate(k);
  REQUIRE_FALSE(r.ok());
  CHECK(r.problems[0].find("missing edge") != std::string::npos);
}

TEST_CASE("duplicate insertions are deduplicated and flagged") {
  SimplicialComplex2 k = filled_triangle();
  k.add_edge(0, 1);
  CHECK(k.edges.size() == 3);
  const ValidationReport r = validate(k);
  REQUIRE_FALSE(r.ok());
  CHECK(r.problems[0].find("duplicate edge") != std::string::npos);
}

TEST_CASE("validate reports range, degeneracy and isolation") {
  SimplicialComplex2 k;
  k.vertex_count = 3;
  k.ensure_edge(0, 5);
  const auto r1 = validate(k);
  CHECK_FALSE(r1.ok());

  SimplicialComplex2 iso;
  iso.vertex_count = 3;
  iso.ensure_edge(0, 1);
  const auto r2 = validate(iso);
  REQUIRE_FALSE(r2.ok());
  CHECK(r2.problems[0] == "isolated vertex 2");

  SimplicialComplex2 bare;
  bare.vertex_count = 4;  // vertices only: vacuously fine
  CHECK(validate(bare).ok());
}

TEST_CASE("euler characteristic") {
  for (std::size_t n : {1u, 2u, 5u}) {
    auto [k, st] = build_wedge(n);
    CHECK(euler_characteristic(k) == 1 - static_cast<long long>(n));
  }
  CHECK(euler_characteristic(filled_triangle()) == 1);
  CHECK(euler_characteristic(r4embed::testing::sphere_tetra()) == 2);
}

TEST_CASE("boundary matrix conventions") {
  SimplicialComplex2 k;
  k.vertex_count = 2;
  k.ensure_edge(0, 1);
  auto [d1, d1_d2] = boundary_matrices(k);
  CHECK(d1(0, 0) == -1);
  CHECK(d1(1, 0) == 1);

  auto [t1, t2] = boundary_matrices(filled_triangle());
  // edges in sorted order: (0,1), (0,2), (1,2)
  CHECK(t2(0, 0) == 1);
  CHECK(t2(1, 0) == -1);
  CHECK(t2(2, 0) == 1);
  CHECK((t1 * t2).is_zero());
}

TEST_CASE("d1 d2 = 0 on random complexes") {
  std::mt19937 rng(424242);
  for (int iter = 0; iter < 100; ++iter) {
    const SimplicialComplex2 k = r4embed::testing::random_complex(rng);
    auto [d1, d2] = boundary_matrices(k);
    CHECK((d1 * d2).is_zero());
  }
}

TEST_CASE("pi1 of a wedge of circles is free") {
  auto [k, st] = build_wedge(2);
  const Presentation p = pi1_presentation(k);
  CHECK(p.generators.size() == 2);
  CHECK(p.relators.empty());
}

TEST_CASE("pi1 of the model complex of <a ; a^3> presents Z_3") {
  const Presentation stab = stabilize(parse_presentation("<a ; a^3>"));
  auto [k, st] = build_model_complex(stab);
  const Presentation p = pi1_presentation(k);
  CHECK(decomposition_from_relations(abelianized_matrix(p)).to_string() ==
        "Z/3");
}

TEST_CASE("pi1 of a filled triangle is trivial") {
  const Presentation p = pi1_presentation(filled_triangle());
  CHECK(p.generators.size() == 1);
  REQUIRE(p.relators.size() == 1);
  CHECK_FALSE(p.relators[0].empty());
  CHECK(decomposition_from_relations(abelianized_matrix(p)).trivial());
}

TEST_CASE("pi1 rejects disconnected input and bad basepoints") {
  SimplicialComplex2 k;
  k.vertex_count = 4;
  k.ensure_edge(0, 1);
  k.ensure_edge(2, 3);
  CHECK_THROWS_AS(pi1_presentation(k), std::invalid_argument);
  CHECK_THROWS_AS(pi1_presentation(filled_triangle(), 9), std::invalid_argument);
}

TEST_CASE("contract_tree counts") {
  const SimplicialComplex2 torus = r4embed::testing::torus7();
  const CWData cw = contract_tree(torus);
  CHECK(cw.one_cells.size() == 21 - (7 - 1));  // E - (V - 1) = 15
  CHECK(cw.attaching_words.size() == 14);
  for (const Word& w : cw.attaching_words) CHECK(w.size() <= 3);

  const CWData tri = contract_tree(filled_triangle());
  CHECK(tri.one_cells.size() == 1);
  CHECK(tri.attaching_words.size() == 1);

  auto [wedge, st] = build_wedge(3);
  const CWData wc = contract_tree(wedge);
  CHECK(wc.one_cells.size() == 3);
  CHECK(wc.attaching_words.empty());
}

TEST_CASE("contract_tree abelianization matches surface homology") {
  for (const SimplicialComplex2& k :
       {r4embed::testing::torus7(), r4embed::testing::klein_grid(3),
        r4embed::testing::sphere_tetra()}) {
    const CWData cw = contract_tree(k);
    Presentation p;
    p.generators = cw.one_cells;
    p.relators = cw.attaching_words;
    CHECK(decomposition_from_relations(abelianized_matrix(p)) ==
          homology_groups(k).h1);
  }
}

TEST_CASE("simplex id and label round-trips") {
  CHECK(SimplexId::edge(3, 1) == SimplexId::edge(1, 3));
  CHECK(to_string(SimplexId::triangle(2, 0, 1)) == "t:0-1-2");
  for (const GadgetLabel l :
       {GadgetLabel{GadgetKind::plain, -1}, GadgetLabel{GadgetKind::wedge, -1},
        GadgetLabel{GadgetKind::annulus, 2}, GadgetLabel{GadgetKind::cone, 0},
        GadgetLabel{GadgetKind::h_disk, 7}}) {
    CHECK(parse_gadget_label(to_string(l)) == l);
  }
  CHECK_THROWS_AS(parse_gadget_label("nonsense"), std::invalid_argument);
}

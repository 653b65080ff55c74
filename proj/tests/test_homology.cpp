#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "r4embed/homology.hpp"
#include "r4embed/model.hpp"
#include "r4embed/presentation.hpp"

using namespace r4embed;
using r4embed::testing::minor_gcd_factors;

namespace {

IntegerMatrix mat(std::size_t r, std::size_t c, std::vector<long long> vals) {
  IntegerMatrix m(r, c);
  std::size_t k = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = vals[k++];
  return m;
}

}  // namespace

TEST_CASE("snf examples") {
  const auto r = smith_normal_form(mat(2, 2, {2, 4, 6, 8}));
  CHECK(r.invariant_factors == std::vector<Integer>{2, 4});

  const auto id = smith_normal_form(IntegerMatrix::identity(4));
  CHECK(id.invariant_factors == std::vector<Integer>(4, Integer(1)));

  const auto zero = smith_normal_form(IntegerMatrix(3, 2));
  CHECK(zero.invariant_factors.empty());
}

TEST_CASE("snf transforms and divisibility on random matrices") {
  std::mt19937 rng(20240902);
  for (int iter = 0; iter < 300; ++iter) {
    const IntegerMatrix m = r4embed::testing::random_matrix(rng, 6, 10);
    const SNFResult r = smith_normal_form(m);

    CHECK(r.U * m * r.V == r.diagonal(m.rows(), m.cols()));
    CHECK(boost::multiprecision::abs(r4embed::testing::det(r.U)) == 1);
    CHECK(boost::multiprecision::abs(r4embed::testing::det(r.V)) == 1);
    for (std::size_t i = 0; i + 1 < r.invariant_factors.size(); ++i) {
      CHECK(r.invariant_factors[i] > 0);
      CHECK(r.invariant_factors[i + 1] % r.invariant_factors[i] == 0);
    }
    CHECK(invariant_factors(m) == r.invariant_factors);
  }
}

TEST_CASE("snf matches the minor-gcd oracle") {
  std::mt19937 rng(31337);
  for (int iter = 0; iter < 200; ++iter) {
    const IntegerMatrix m = r4embed::testing::random_matrix(rng, 5, 10);
    CHECK(invariant_factors(m) == minor_gcd_factors(m));
  }
}

TEST_CASE("decomposition examples") {
  CHECK(decomposition_from_relations(mat(1, 1, {3})).to_string() == "Z/3");
  CHECK(decomposition_from_relations(mat(1, 2, {2, 0})).to_string() ==
        "Z + Z/2");
  CHECK(decomposition_from_relations(IntegerMatrix(2, 2)).to_string() == "Z^2");
  CHECK(decomposition_from_relations(mat(1, 1, {1})).to_string() == "0");
  CHECK(decomposition_from_relations(mat(2, 2, {2, 0, 0, 6})).to_string() ==
        "Z/2 + Z/6");
}

TEST_CASE("homology of model complexes") {
  {
    auto [k, st] =
        build_model_complex(stabilize(parse_presentation("<a ; a^3>")));
    const HomologyGroups h = homology_groups(k);
    CHECK(h.h0.to_string() == "Z");
    CHECK(h.h1.to_string() == "Z/3");
    CHECK(h.h2.to_string() == "0");
  }
  {
    auto [k, st] = build_model_complex(
        stabilize(pad_relations(parse_presentation("<a, b ; a b a b^-1>"))));
    CHECK(homology_groups(k).h1.to_string() == "Z + Z/2");
  }
}

TEST_CASE("homology of the sphere") {
  const HomologyGroups h = homology_groups(r4embed::testing::sphere_tetra());
  CHECK(h.h0.to_string() == "Z");
  CHECK(h.h1.to_string() == "0");
  CHECK(h.h2.to_string() == "Z");
}

TEST_CASE("homology of reference surfaces") {
  CHECK(homology_groups(r4embed::testing::torus7()).h1.to_string() == "Z^2");
  CHECK(homology_groups(r4embed::testing::torus_grid(3)).h1.to_string() ==
        "Z^2");
  CHECK(homology_groups(r4embed::testing::klein_grid(3)).h1.to_string() ==
        "Z + Z/2");
  CHECK(homology_groups(r4embed::testing::klein_grid(4)).h1.to_string() ==
        "Z + Z/2");
}

TEST_CASE("H2 is torsion-free and H0 counts components") {
  std::mt19937 rng(555);
  for (int iter = 0; iter < 50; ++iter) {
    const SimplicialComplex2 k = r4embed::testing::random_complex(rng);
    const HomologyGroups h = homology_groups(k);
    CHECK(h.h2.torsion.empty());
    CHECK(h.h0.torsion.empty());
    CHECK(h.h0.free_rank >= 1);
  }
}

TEST_CASE("equivalence of relation and complex homology") {
  for (const char* in : {"<a ; a^3>", "<a, b ; 1, 1>", "<a, b ; a b a b^-1>",
                         "<a, b ; a b a^-1 b^-1>", "<a ; a^12>"}) {
    const Presentation p = pad_relations(parse_presentation(in));
    auto [k, st] = build_model_complex(stabilize(p));
    CHECK(homology_groups(k).h1 ==
          decomposition_from_relations(abelianized_matrix(p)));
  }
}

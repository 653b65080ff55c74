#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "r4embed/embed.hpp"
#include "r4embed/json_io.hpp"
#include "r4embed/verify.hpp"

using namespace r4embed;
using nlohmann::json;

TEST_CASE("presentation json round-trip") {
  for (const char* in : {"<a ; a^3>", "<a, b ; a b a^-1 b^-1>",
                         "<a, b ; 1, 1>", "< ; >"}) {
    const Presentation p = parse_presentation(in);
    CHECK(presentation_from_json(presentation_to_json(p)) == p);
  }
}

TEST_CASE("huge exponents travel as decimal strings") {
  const Presentation p = parse_presentation("<a ; a^36893488147419103232>");
  const json j = presentation_to_json(p);
  CHECK(j.at("relators").at(0).at(0).at(1).is_string());
  CHECK(presentation_from_json(j) == p);
}

TEST_CASE("presentation json rejects bad input") {
  CHECK_THROWS(presentation_from_json(
      json::parse(R"({"generators":["a"],"relators":[[["b",1]]]})")));
  CHECK_THROWS(presentation_from_json(
      json::parse(R"({"generators":["a"],"relators":[[["a",0]]]})")));
}

TEST_CASE("complex json round-trip keeps labels") {
  const RealizedComplex rc = realize(parse_presentation("<a ; a^2>"));
  const SimplicialComplex2 back = complex_to_json(rc.complex).is_object()
      ? complex_from_json(complex_to_json(rc.complex))
      : SimplicialComplex2{};
  CHECK(back.vertex_count == rc.complex.vertex_count);
  CHECK(back.edges == rc.complex.edges);
  CHECK(back.triangles == rc.complex.triangles);
  CHECK(back.labels == rc.complex.labels);
}

TEST_CASE("realized complex json round-trip is lossless") {
  const RealizedComplex rc = realize(parse_presentation("<a, b ; a b, 1>"));
  const RealizedComplex back = realized_from_json(realized_to_json(rc));
  CHECK(back.coords == rc.coords);
  CHECK(back.delta_lb == rc.delta_lb);
  CHECK(back.complex.edges == rc.complex.edges);
  CHECK(back.complex.triangles == rc.complex.triangles);
  CHECK(back.base == rc.base);
  REQUIRE(back.gadgets.size() == rc.gadgets.size());
  for (std::size_t j = 0; j < rc.gadgets.size(); ++j) {
    CHECK(back.gadgets[j].lo == rc.gadgets[j].lo);
    CHECK(back.gadgets[j].hi == rc.gadgets[j].hi);
    CHECK(back.gadgets[j].t_values == rc.gadgets[j].t_values);
    CHECK(back.structure.gadgets[j].lower == rc.structure.gadgets[j].lower);
    CHECK(back.structure.gadgets[j].upper == rc.structure.gadgets[j].upper);
    CHECK(back.structure.gadgets[j].apex == rc.structure.gadgets[j].apex);
  }

  // the reloaded complex verifies exactly like the in-process one
  const IntersectionReport a = check_embedding(rc);
  const IntersectionReport b = check_embedding(back);
  CHECK(a.clean());
  CHECK(b.clean());
  CHECK(a.checked_pairs == b.checked_pairs);
  CHECK(check_sigma_condition(back).ok);
}

TEST_CASE("matrix json and text round-trips") {
  std::mt19937 rng(12);
  for (int iter = 0; iter < 30; ++iter) {
    const IntegerMatrix m = r4embed::testing::random_matrix(rng, 5, 50);
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
    CHECK(matrix_from_text(matrix_to_text(m)) == m);
  }
  // bare row-of-rows JSON form
  const IntegerMatrix bare = matrix_from_json(json::parse("[[2,4],[6,8]]"));
  CHECK(bare.rows() == 2);
  CHECK(bare(1, 0) == 6);

  CHECK_THROWS_AS(matrix_from_text("1 2\n3"), std::invalid_argument);
}

TEST_CASE("json output is deterministic with sorted keys") {
  const RealizedComplex rc = realize(parse_presentation("<a ; a^2>"));
  const std::string once = realized_to_json(rc).dump(2);
  const std::string twice = realized_to_json(rc).dump(2);
  CHECK(once == twice);
  const json j = realized_to_json(rc);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(std::is_sorted(keys.begin(), keys.end()));
}

TEST_CASE("report, sigma and decomposition serialization") {
  const RealizedComplex rc = realize(parse_presentation("<a ; a^2>"));
  const json rep = report_to_json(check_embedding(rc));
  CHECK(rep.at("clean").get<bool>());
  CHECK(rep.at("violations").empty());
  CHECK(rep.at("checked_pairs").get<std::size_t>() > 0);

  const json sig = sigma_to_json(check_sigma_condition(rc));
  CHECK(sig.at("ok").get<bool>());

  AbelianDecomposition d;
  d.free_rank = 2;
  d.torsion = {Integer(2), Integer(6)};
  const json dj = decomposition_to_json(d);
  CHECK(dj.at("pretty") == "Z^2 + Z/2 + Z/6");
}

TEST_CASE("off export shape") {
  const RealizedComplex rc = realize(parse_presentation("<a ; a^2>"));
  const std::string off = realized_to_off(rc);
  std::istringstream in(off);
  std::string magic;
  std::size_t nv = 0, nf = 0, ne = 0;
  in >> magic >> nv >> nf >> ne;
  CHECK(magic == "OFF");
  CHECK(nv == rc.coords.size());
  CHECK(nf == rc.complex.triangles.size());
  double x = 0;
  for (std::size_t i = 0; i < 3 * nv; ++i) CHECK((in >> x).good());
}

TEST_CASE("rational parsing") {
  CHECK(rational_from_string("3/4") == Rational(3, 4));
  CHECK(rational_from_string("-7/2") == Rational(-7, 2));
  CHECK(rational_from_string("5") == Rational(5));
  CHECK(rational_from_string(to_string(Rational(22, 7))) == Rational(22, 7));
}

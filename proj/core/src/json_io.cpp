#include "r4embed/json_io.hpp"

#include <limits>
#include <map>
#include <sstream>

namespace r4embed {

using nlohmann::json;

namespace {

json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected integer or decimal string");
}

std::string rational_to_string(const Rational& q) { return to_string(q); }

}  // namespace

Rational rational_from_string(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Integer(s));
  return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
}

json presentation_to_json(const Presentation& p) {
  json j;
  j["generators"] = p.generators;
  json rels = json::array();
  for (const Word& w : p.relators) {
    json word = json::array();
    for (const Syllable& s : w.syllables())
      word.push_back(json::array(
          {p.generators[static_cast<std::size_t>(s.generator)],
           integer_to_json(s.exponent)}));
    rels.push_back(std::move(word));
  }
  j["relators"] = std::move(rels);
  return j;
}

Presentation presentation_from_json(const json& j) {
  Presentation p;
  p.generators = j.at("generators").get<std::vector<std::string>>();
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    index[p.generators[i]] = static_cast<int>(i);
  for (const json& word : j.at("relators")) {
    std::vector<Syllable> syls;
    for (const json& pair : word) {
      const std::string name = pair.at(0).get<std::string>();
      auto it = index.find(name);
      if (it == index.end())
        throw std::invalid_argument("unknown generator '" + name + "' in relator");
      Integer exp = integer_from_json(pair.at(1));
      if (exp == 0) throw std::invalid_argument("zero exponent in relator");
      syls.push_back({it->second, std::move(exp)});
    }
    p.relators.emplace_back(std::move(syls));
  }
  return p;
}

json complex_to_json(const SimplicialComplex2& k) {
  json j;
  j["vertices"] = k.vertex_count;
  json edges = json::array();
  for (const auto& e : k.edges) edges.push_back(json::array({e[0], e[1]}));
  j["edges"] = std::move(edges);
  json tris = json::array();
  for (const auto& t : k.triangles)
    tris.push_back(json::array({t[0], t[1], t[2]}));
  j["triangles"] = std::move(tris);
  json labels = json::object();
  for (const auto& [id, lab] : k.labels) labels[to_string(id)] = to_string(lab);
  j["labels"] = std::move(labels);
  return j;
}

SimplicialComplex2 complex_from_json(const json& j) {
  SimplicialComplex2 k;
  k.vertex_count = j.at("vertices").get<std::size_t>();
  for (const json& e : j.at("edges"))
    k.ensure_edge(e.at(0).get<int>(), e.at(1).get<int>());
  for (const json& t : j.at("triangles"))
    k.ensure_triangle(t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>());
  if (j.contains("labels")) {
    for (const auto& [key, value] : j.at("labels").items()) {
      // key: "v:3", "e:0-1", "t:0-1-2"
      SimplexId id;
      const std::string body = key.substr(2);
      std::vector<int> verts;
      std::size_t pos = 0;
      while (pos != std::string::npos && pos < body.size()) {
        std::size_t dash = body.find('-', pos);
        verts.push_back(std::stoi(body.substr(pos, dash - pos)));
        pos = dash == std::string::npos ? dash : dash + 1;
      }
      if (key[0] == 'v')
        id = SimplexId::vertex(verts.at(0));
      else if (key[0] == 'e')
        id = SimplexId::edge(verts.at(0), verts.at(1));
      else
        id = SimplexId::triangle(verts.at(0), verts.at(1), verts.at(2));
      k.set_label(id, parse_gadget_label(value.get<std::string>()));
    }
  }
  return k;
}

namespace {

json point_to_json(const Point4& p) {
  json a = json::array();
  for (int c = 0; c < 4; ++c) a.push_back(rational_to_string(p[c]));
  return a;
}

Point4 point_from_json(const json& j) {
  Point4 p;
  for (int c = 0; c < 4; ++c)
    p[c] = rational_from_string(j.at(c).get<std::string>());
  return p;
}

}  // namespace

json realized_to_json(const RealizedComplex& rc) {
  json j;
  j["complex"] = complex_to_json(rc.complex);
  json coords = json::array();
  for (const Point4& p : rc.coords) coords.push_back(point_to_json(p));
  j["coords"] = std::move(coords);
  j["delta_lb"] = rational_to_string(rc.delta_lb);
  j["frame"] = {{"h", rational_to_string(Frame::h())},
                {"t_star", rational_to_string(Frame::t_star())},
                {"rho_prime", rational_to_string(Frame::rho_prime())}};

  json gadgets = json::array();
  for (std::size_t i = 0; i < rc.gadgets.size(); ++i) {
    const GadgetGeometry& g = rc.gadgets[i];
    const auto& sg = rc.structure.gadgets[i];
    json t_values = json::array();
    for (const Rational& t : g.t_values) t_values.push_back(rational_to_string(t));
    gadgets.push_back({{"relator", sg.relator},
                       {"interval",
                        json::array({rational_to_string(g.lo),
                                     rational_to_string(g.hi)})},
                       {"t_values", std::move(t_values)},
                       {"lower", sg.lower},
                       {"upper", sg.upper},
                       {"apex", sg.apex}});
  }
  j["gadgets"] = std::move(gadgets);

  json circles = json::array();
  for (const auto& c : rc.structure.circles)
    circles.push_back(json::array({c.a, c.b}));
  j["structure"] = {{"wedge_point", rc.structure.wedge_point},
                    {"circles", std::move(circles)},
                    {"base_gen_count", rc.structure.base_gen_count},
                    {"stabilizer_count", rc.structure.stabilizer_count}};
  j["base"] = presentation_to_json(rc.base);
  return j;
}

RealizedComplex realized_from_json(const json& j) {
  RealizedComplex rc;
  rc.complex = complex_from_json(j.at("complex"));
  for (const json& p : j.at("coords")) rc.coords.push_back(point_from_json(p));
  rc.delta_lb = rational_from_string(j.at("delta_lb").get<std::string>());

  const json& st = j.at("structure");
  rc.structure.wedge_point = st.at("wedge_point").get<int>();
  for (const json& c : st.at("circles"))
    rc.structure.circles.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
  rc.structure.base_gen_count = st.at("base_gen_count").get<std::size_t>();
  rc.structure.stabilizer_count = st.at("stabilizer_count").get<std::size_t>();

  for (const json& g : j.at("gadgets")) {
    GadgetGeometry geom;
    geom.lo = rational_from_string(g.at("interval").at(0).get<std::string>());
    geom.hi = rational_from_string(g.at("interval").at(1).get<std::string>());
    for (const json& t : g.at("t_values"))
      geom.t_values.push_back(rational_from_string(t.get<std::string>()));
    rc.gadgets.push_back(std::move(geom));
    ModelStructure::Gadget sg;
    sg.relator = g.at("relator").get<int>();
    sg.lower = g.at("lower").get<std::vector<int>>();
    sg.upper = g.at("upper").get<std::vector<int>>();
    sg.apex = g.at("apex").get<int>();
    rc.structure.gadgets.push_back(std::move(sg));
  }
  for (std::size_t hj = 0; hj < rc.structure.stabilizer_count; ++hj) {
    const auto& c = rc.structure.circles[rc.structure.base_gen_count + hj];
    rc.structure.h_disks.push_back({rc.structure.wedge_point, c.a, c.b});
  }
  if (j.contains("base")) rc.base = presentation_from_json(j.at("base"));
  return rc;
}

json matrix_to_json(const IntegerMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(integer_to_json(m(i, c)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

IntegerMatrix matrix_from_json(const json& j) {
  if (j.is_array()) {
    // Bare row-of-rows form.
    const std::size_t rows = j.size();
    const std::size_t cols = rows ? j.at(0).size() : 0;
    IntegerMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t c = 0; c < cols; ++c)
        m(i, c) = integer_from_json(j.at(i).at(c));
    return m;
  }
  IntegerMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  const json& entries = j.at("entries");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t c = 0; c < m.cols(); ++c)
      m(i, c) = integer_from_json(entries.at(i).at(c));
  return m;
}

std::string matrix_to_text(const IntegerMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << m(i, c);
    }
    out << '\n';
  }
  return out.str();
}

IntegerMatrix matrix_from_text(const std::string& text) {
  std::vector<std::vector<Integer>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<Integer> row;
    std::string tok;
    while (ls >> tok) row.emplace_back(tok);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  for (const auto& row : rows)
    if (row.size() != c)
      throw std::invalid_argument("ragged matrix rows in text input");
  IntegerMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < c; ++k) m(i, k) = rows[i][k];
  return m;
}

json report_to_json(const IntersectionReport& r) {
  json v = json::array();
  for (const Violation& x : r.violations) {
    v.push_back({{"pair", json::array({to_string(x.a), to_string(x.b)})},
                 {"witness", point_to_json(x.witness)}});
  }
  return {{"violations", std::move(v)},
          {"degeneracies", r.degeneracies},
          {"checked_pairs", r.checked_pairs},
          {"pruned_pairs", r.pruned_pairs},
          {"clean", r.clean()}};
}

json sigma_to_json(const SigmaCertificate& c) {
  json margins = json::array();
  for (const Rational& m : c.margins) margins.push_back(rational_to_string(m));
  return {{"ok", c.ok}, {"margins", std::move(margins)}, {"problem", c.problem}};
}

json decomposition_to_json(const AbelianDecomposition& d) {
  json torsion = json::array();
  for (const Integer& t : d.torsion) torsion.push_back(integer_to_json(t));
  return {{"free_rank", d.free_rank},
          {"torsion", std::move(torsion)},
          {"pretty", d.to_string()}};
}

std::string realized_to_off(const RealizedComplex& rc) {
  std::ostringstream out;
  out << "OFF\n"
      << rc.coords.size() << ' ' << rc.complex.triangles.size() << " 0\n";
  out.precision(17);
  for (const Point4& p : rc.coords) {
    for (int c = 0; c < 3; ++c)
      out << (c ? " " : "") << static_cast<double>(p[c]);
    out << '\n';
  }
  for (const auto& t : rc.complex.triangles)
    out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  return out.str();
}

}  // namespace r4embed

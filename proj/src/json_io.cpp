#include "json_io.hpp"

namespace weyl {

Json to_json(const Rat& r) {
  if (r.is_integer()) return r.num();
  return r.str();
}

Json to_json(const QVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const IVec& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

Json to_json(const IMat& m) {
  Json a = Json::array();
  for (int i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

Json to_json(const FiniteAbelianGroup& g) {
  return Json{{"invariant_factors", to_json(IVec(g.invariant_factors()))},
              {"order", g.order()},
              {"name", g.str()}};
}

Json to_json(const Cone& c) {
  Json j;
  j["ambient_dim"] = c.ambient_dim();
  j["rays"] = Json::array();
  for (const auto& r : c.rays()) j["rays"].push_back(to_json(r));
  j["lines"] = Json::array();
  for (const auto& l : c.lines()) j["lines"].push_back(to_json(l));
  j["inequalities"] = Json::array();
  for (const auto& q : c.ineq_normals()) j["inequalities"].push_back(to_json(q));
  j["equations"] = Json::array();
  for (const auto& e : c.eq_normals()) j["equations"].push_back(to_json(e));
  return j;
}

Json to_json(const Fan& f) {
  Json j;
  j["ambient_dim"] = f.ambient_dim();
  j["cones"] = Json::array();
  for (const auto& c : f.cones()) j["cones"].push_back(to_json(c));
  Json maximal = Json::array();
  for (const auto& c : f.maximal_cones()) {
    Json g = Json::array();
    for (const auto& r : c.generators()) g.push_back(to_json(r));
    maximal.push_back(g);
  }
  j["maximal_cone_generators"] = maximal;
  return j;
}

Json to_json(const RootDatum& rd) {
  Json j;
  j["type"] = std::string(1, rd.type);
  j["rank"] = rd.rank;
  j["flavor"] = flavor_name(rd.flavor);
  j["cartan"] = to_json(rd.cartan);
  j["simple_roots"] = Json::array();
  for (const auto& a : rd.simple_roots) j["simple_roots"].push_back(to_json(a));
  j["simple_coroots"] = Json::array();
  for (const auto& a : rd.simple_coroots) j["simple_coroots"].push_back(to_json(a));
  return j;
}

Json to_json(const WeightMultiplicityTable& t) {
  Json j;
  j["highest_weight"] = to_json(t.lambda);
  j["dimension"] = t.dimension();
  Json rows = Json::array();
  for (const auto& [mu, m] : t.mult)
    rows.push_back(Json{{"weight", to_json(mu)}, {"multiplicity", m}});
  j["multiplicities"] = rows;
  return j;
}

Json to_json(const AffineRootDatum& ard) {
  Json j;
  j["base"] = to_json(ard.base);
  j["theta"] = to_json(ard.theta);
  j["theta_alpha"] = to_json(ard.theta_alpha);
  j["affine_cartan"] = to_json(ard.affine_cartan);
  j["marks"] = to_json(ard.marks);
  j["comarks"] = to_json(ard.comarks);
  return j;
}

Json to_json(const Alcove& al) {
  Json j;
  Json walls = Json::array();
  for (size_t i = 0; i < al.walls.size(); ++i)
    walls.push_back(Json{{"node", (int)i},
                         {"constant", to_json(al.walls[i].constant)},
                         {"linear", to_json(al.walls[i].linear)}});
  j["walls"] = walls;
  Json verts = Json::array();
  for (size_t i = 0; i < al.vertices.size(); ++i)
    verts.push_back(Json{{"node", (int)i}, {"point", to_json(al.vertices[i])}});
  j["vertices"] = verts;
  return j;
}

Json to_json(const AffineDynkinDiagram& d) {
  Json j;
  j["nodes"] = d.nodes;
  Json bonds = Json::array();
  for (const auto& b : d.bonds)
    bonds.push_back(Json{{"from", b.from},
                         {"to", b.to},
                         {"multiplicity", b.multiplicity},
                         {"direction", b.direction}});
  j["bonds"] = bonds;
  Json autos = Json::array();
  for (const auto& p : d.automorphisms) {
    Json perm = Json::array();
    for (int x : p) perm.push_back(x);
    autos.push_back(perm);
  }
  j["automorphisms"] = autos;
  return j;
}

Json to_json(const StackyFan& sf) {
  Json j;
  j["beta"] = to_json(sf.beta);
  j["fan"] = to_json(sf.fan);
  return j;
}

Json to_json(const CDeltaResult& r) {
  Json j;
  j["c_delta"] = to_json(r.c_delta);
  j["dual"] = to_json(r.dual);
  Json exp = Json::array();
  for (const auto& g : r.expected_dual_generators) exp.push_back(to_json(g));
  j["expected_dual_generators"] = exp;
  j["certificate_ok"] = r.certificate_ok;
  j["dual_lineality_dim"] = r.dual_lineality_dim;
  return j;
}

Json to_json(const OrbitPoset& p) {
  Json j;
  j["affine"] = p.affine;
  j["rank"] = p.rank;
  Json elems = Json::array();
  for (const auto& e : p.elements) {
    Json idx = Json::array();
    for (int x : e.j) idx.push_back(x);
    elems.push_back(Json{{"J", idx},
                         {"levi_type", e.levi_type},
                         {"is_divisor", e.is_divisor},
                         {"center_torus_rank", e.center_torus_rank},
                         {"stabilizer", e.stabilizer_shape}});
  }
  j["elements"] = elems;
  Json covers = Json::array();
  for (auto [a, b] : p.cover_relations) covers.push_back(Json::array({a, b}));
  j["cover_relations"] = covers;
  return j;
}

Json to_json(const VoronoiCell& c) {
  Json j;
  j["center"] = to_json(c.center);
  Json facets = Json::array();
  for (const auto& f : c.facets)
    facets.push_back(Json{{"vector", to_json(f.vector)}, {"rhs", to_json(f.rhs)}});
  j["facets"] = facets;
  Json verts = Json::array();
  for (const auto& v : c.vertices) verts.push_back(to_json(v));
  j["vertices"] = verts;
  return j;
}

Json to_json(const DelaunayCell& c) {
  Json j;
  j["witness"] = to_json(c.witness);
  j["radius_squared"] = to_json(c.radius2);
  Json verts = Json::array();
  for (const auto& v : c.vertices) verts.push_back(to_json(v));
  j["vertices"] = verts;
  return j;
}

Json to_json(const LTFan& f) {
  Json j;
  j["gram"] = to_json(f.q.gram());
  j["window"] = f.window;
  j["height_convention"] = "loop-rotation coordinate last, cells at height 1";
  Json rays = Json::array();
  for (const auto& r : f.rays) rays.push_back(to_json(r));
  j["rays"] = rays;
  j["fan"] = to_json(f.fan);
  return j;
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<Int>());
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rat(std::stoll(s));
      return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
      throw config_error("malformed rational: " + s);
    }
  }
  throw config_error("expected an integer or \"p/q\" string");
}

IVec ivec_from_json(const Json& j) {
  if (!j.is_array()) throw config_error("expected an array of integers");
  IVec v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw config_error("expected an integer entry");
    v.push_back(x.get<Int>());
  }
  return v;
}

IMat imat_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw config_error("expected a matrix (array of rows)");
  std::vector<IVec> rows;
  for (const auto& r : j) rows.push_back(ivec_from_json(r));
  for (const auto& r : rows)
    if (r.size() != rows[0].size()) throw config_error("ragged matrix");
  return IMat::from_rows(rows);
}

}  // namespace weyl

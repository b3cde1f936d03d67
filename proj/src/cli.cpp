#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <set>

#include "affine_weyl.hpp"
#include "json_io.hpp"
#include "svg.hpp"

namespace weyl {

namespace {

constexpr const char* kVersion = "0.1.0";

struct Options {
  std::optional<std::string> config_path;
  std::optional<std::string> output_path;
  bool pretty = false;

  std::optional<std::string> type;
  std::optional<int> rank;
  std::optional<std::string> flavor;
  std::optional<std::string> cartan;  // inline JSON matrix
  std::optional<std::string> gram;    // inline JSON matrix
  std::optional<int> j;
  std::optional<Int> t;
  std::optional<Int> window;
  std::optional<std::string> lambda, eta, beta, center;
  bool affine = false;
  bool stacky = false;
  std::optional<std::string> target;

  Json config;  // parsed --config file, {} when absent

  void validate_config() const {
    static const std::set<std::string> known = {
        "type", "rank",   "flavor", "cartan", "gram",   "j",     "t",
        "window", "lambda", "eta",    "beta",   "center", "affine", "stacky",
        "target"};
    for (const auto& [key, value] : config.items()) {
      (void)value;
      if (!known.count(key)) throw config_error("unknown config key: " + key);
    }
  }

  template <typename T>
  std::optional<T> fetch(const std::optional<T>& flag, const char* key) const {
    if (flag.has_value()) return flag;
    if (config.contains(key)) {
      try {
        return config.at(key).get<T>();
      } catch (const Json::exception&) {
        throw config_error(std::string("config key '") + key + "' has the wrong type");
      }
    }
    return std::nullopt;
  }

  // vectors/matrices come as inline JSON text on flags or as arrays in config
  std::optional<Json> fetch_json(const std::optional<std::string>& flag, const char* key) const {
    if (flag.has_value()) {
      try {
        return Json::parse(*flag);
      } catch (const Json::exception&) {
        throw config_error(std::string("flag value for '") + key + "' is not valid JSON");
      }
    }
    if (config.contains(key)) return config.at(key);
    return std::nullopt;
  }

  bool flag_or_config(bool flag, const char* key) const {
    if (flag) return true;
    if (config.contains(key)) return config.at(key).get<bool>();
    return false;
  }

  RootDatum datum() const {
    auto c = fetch_json(cartan, "cartan");
    if (c.has_value()) {
      // explicit Cartan matrix: identify the type, then build with the
      // requested flavor
      IMat m = imat_from_json(*c);
      std::string name = finite_type_name(m);
      if (name.size() != 2 || m.rows() != name[1] - '0')
        throw unsupported_error("explicit Cartan matrices must be irreducible, rank <= 8");
      Flavor f = flavor_from_name(fetch(flavor, "flavor").value_or("sc"));
      return build_root_datum(name[0], name[1] - '0', f);
    }
    auto t = fetch(type, "type");
    auto r = fetch(rank, "rank");
    if (!t.has_value() || !r.has_value())
      throw config_error("group spec needed: --type and --rank (or --cartan)");
    if (t->size() != 1) throw config_error("type must be a single letter A..G");
    Flavor f = flavor_from_name(fetch(flavor, "flavor").value_or("sc"));
    return build_root_datum((*t)[0], *r, f);
  }

  QuadraticForm form() const {
    auto g = fetch_json(gram, "gram");
    if (g.has_value()) return QuadraticForm(imat_from_json(*g));
    return basic_form(datum());
  }

  Json echo() const {
    Json in = config;
    auto put = [&](const char* k, const auto& v) {
      if (v.has_value()) in[k] = *v;
    };
    put("type", type);
    put("rank", rank);
    put("flavor", flavor);
    put("j", j);
    put("t", t);
    put("window", window);
    for (auto [k, v] : {std::pair<const char*, const std::optional<std::string>&>{
                            "cartan", cartan},
                        {"gram", gram},
                        {"lambda", lambda},
                        {"eta", eta},
                        {"beta", beta},
                        {"center", center},
                        {"target", target}})
      if (v.has_value()) in[k] = Json::parse(*v, nullptr, false).is_discarded()
                                     ? Json(*v)
                                     : Json::parse(*v);
    if (affine) in["affine"] = true;
    if (stacky) in["stacky"] = true;
    return in;
  }
};

Json conventions() {
  return Json{{"cartan", "a_ij = <alpha_j, alpha_i^vee>"},
              {"pairing", "dual coordinate bases, <mu,eta> = dot product"},
              {"exponent_f", "t*Q(eta,eta)/2 + Q(beta,eta)"},
              {"translation_action", "(n - lambda(eta) - (h/2)Q(eta,eta), lambda + h*Q(eta,.), h)"},
              {"orbit_levi", "L_J is the subdiagram on the complement of J"},
              {"fan_support", "embedding fans live in the negative chamber / alcove cone"}};
}

Json envelope(const std::string& command, const Options& opt, Json result, Json provenance) {
  Json env;
  env["schema_version"] = 1;
  env["tool"] = "weylfan";
  env["version"] = kVersion;
  env["command"] = command;
  env["input"] = opt.echo();
  env["result"] = std::move(result);
  provenance["conventions"] = conventions();
  env["provenance"] = std::move(provenance);
  return env;
}

Json cmd_rootdata(const Options& opt) {
  RootDatum rd = opt.datum();
  Json res = to_json(rd);
  Json pos = Json::array();
  for (const auto& b : positive_roots(rd)) pos.push_back(to_json(b));
  res["positive_roots"] = pos;
  res["highest_root"] = to_json(highest_root(rd));
  res["weyl_order"] = weyl_order(rd.type, rd.rank);
  Json rays = Json::array();
  for (const auto& u : chamber_rays(rd)) rays.push_back(to_json(u));
  res["chamber_rays"] = rays;
  res["dominant_chamber"] = to_json(dominant_chamber(rd));
  return envelope("rootdata", opt, res, Json::object());
}

Json cmd_alcove(const Options& opt) {
  AffineRootDatum ard = build_affine_root_datum(opt.datum());
  Json res;
  res["affine_cartan"] = to_json(ard.affine_cartan);
  res["marks"] = to_json(ard.marks);
  res["alcove"] = to_json(alcove(ard));
  res["affine_dynkin"] = to_json(affine_dynkin(ard));
  Json simple = Json::array();
  for (const auto& r : affine_simple_roots(ard))
    simple.push_back(Json{{"n", to_json(r.n)}, {"lambda", to_json(r.lambda)}, {"h", r.h}});
  res["affine_simple_roots"] = simple;
  return envelope("alcove", opt, res, Json::object());
}

Json cmd_parahoric(const Options& opt) {
  AffineRootDatum ard = build_affine_root_datum(opt.datum());
  auto j = opt.fetch(opt.j, "j");
  if (!j.has_value()) throw config_error("parahoric needs --j (node index)");
  if (*j < 0 || *j >= ard.nodes()) throw config_error("node index out of range");
  Json res;
  res["node"] = *j;
  res["levi"] = parahoric_levi_type(ard, *j);
  res["z_j"] = to_json(levi_center_quotient(ard, *j));
  res["vertex"] = to_json(alcove_vertices(ard)[*j].second);
  return envelope("parahoric", opt, res, Json::object());
}

Json cmd_stackyfan(const Options& opt) {
  RootDatum rd = opt.datum();
  StackyFan sf = weyl_chamber_stacky_fan(rd);
  Json res = to_json(sf);
  res["z_beta"] = to_json(z_beta(sf));
  return envelope("stackyfan", opt, res, Json::object());
}

Json cmd_cdelta(const Options& opt) {
  RootDatum rd = opt.datum();
  return envelope("cdelta", opt, to_json(c_delta(rd)), Json::object());
}

Json cmd_orbits(const Options& opt) {
  bool affine = opt.flag_or_config(opt.affine, "affine");
  RootDatum rd = opt.datum();
  OrbitPoset p = affine ? orbit_poset_affine(build_affine_root_datum(rd)) : orbit_poset(rd);
  return envelope("orbits", opt, to_json(p), Json::object());
}

Json cmd_voronoi(const Options& opt) {
  QuadraticForm q = opt.form();
  IVec center(q.rank(), 0);
  auto c = opt.fetch_json(opt.center, "center");
  if (c.has_value()) center = ivec_from_json(*c);
  if ((int)center.size() != q.rank()) throw config_error("center has the wrong dimension");
  Json res = to_json(voronoi_cell(q, center));
  res["gram"] = to_json(q.gram());
  Json rel = Json::array();
  for (const auto& v : relevant_vectors(q)) rel.push_back(to_json(v));
  res["relevant_vectors"] = rel;
  res["z_q"] = to_json(z_q(q));
  return envelope("voronoi", opt, res, Json::object());
}

Json cmd_ltfan(const Options& opt) {
  QuadraticForm q = opt.form();
  Int window = opt.fetch(opt.window, "window").value_or(3);
  LTFan f = lt_fan(q, window);
  Json res = to_json(f);
  // with --t, also certify cone classes against minimizer sets, and report
  // the minimizer set of --beta when given
  auto t = opt.fetch(opt.t, "t");
  if (t.has_value()) {
    auto check = lt_fan_vs_minimizers_check(q, *t, window);
    res["minimizer_check"] = Json{{"t", *t},
                                  {"ok", check.ok},
                                  {"points_checked", check.points_checked},
                                  {"class_count", check.class_count},
                                  {"failure", check.failure}};
    auto b = opt.fetch_json(opt.beta, "beta");
    if (b.has_value()) {
      IVec beta = ivec_from_json(*b);
      if ((int)beta.size() != q.rank()) throw config_error("beta has the wrong dimension");
      Json mins = Json::array();
      for (const auto& m : minimizer_set(q, *t, beta)) mins.push_back(to_json(m));
      res["minimizer_set"] = Json{{"beta", to_json(beta)}, {"minimizers", mins}};
    }
  }
  Json prov;
  prov["window"] = window;
  prov["note"] = "fan restricted to cells with centers in the window";
  return envelope("ltfan", opt, res, prov);
}

Json cmd_limit(const Options& opt) {
  RootDatum rd = opt.datum();
  auto e = opt.fetch_json(opt.eta, "eta");
  if (!e.has_value()) throw config_error("limit needs --eta (coweight in -C)");
  IVec eta = ivec_from_json(*e);
  if ((int)eta.size() != rd.rank) throw config_error("eta has the wrong dimension");
  auto j = one_param_limit_J(rd, eta);
  Json res;
  Json idx = Json::array();
  for (int x : j) idx.push_back(x);
  res["J"] = idx;
  res["idempotent"] = "e_J, coordinates t^{-alpha_j} -> 0 for j in J";
  return envelope("limit", opt, res, Json::object());
}

Json cmd_freudenthal(const Options& opt) {
  RootDatum rd = opt.datum();
  auto l = opt.fetch_json(opt.lambda, "lambda");
  if (!l.has_value()) throw config_error("freudenthal needs --lambda (dominant weight)");
  IVec lambda = ivec_from_json(*l);
  if ((int)lambda.size() != rd.rank) throw config_error("lambda has the wrong dimension");
  return envelope("freudenthal", opt, to_json(freudenthal_multiplicities(rd, lambda)),
                  Json::object());
}

std::string cmd_plot(const Options& opt) {
  auto target = opt.fetch(opt.target, "target");
  if (!target.has_value()) throw config_error("plot needs --target fan|alcove|voronoi");
  if (*target == "fan") {
    QuadraticForm q = opt.form();
    Int window = opt.fetch(opt.window, "window").value_or(3);
    return plot_lt_fan(lt_fan(q, window));
  }
  if (*target == "alcove") {
    return plot_alcove(build_affine_root_datum(opt.datum()));
  }
  if (*target == "voronoi") {
    QuadraticForm q = opt.form();
    Int window = opt.fetch(opt.window, "window").value_or(1);
    return plot_voronoi(q, window);
  }
  throw config_error("unknown plot target: " + *target);
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"exact combinatorics of wonderful group compactifications"};
  app.require_subcommand(1);
  Options opt;

  std::vector<CLI::App*> subs;
  for (const char* name : {"rootdata", "alcove", "parahoric", "stackyfan", "cdelta", "orbits",
                           "voronoi", "ltfan", "limit", "freudenthal", "plot"}) {
    CLI::App* s = app.add_subcommand(name);
    s->add_option("--config", opt.config_path, "JSON config file");
    s->add_option("--output", opt.output_path, "write the payload to this file");
    s->add_flag("--pretty", opt.pretty, "indent the JSON output");
    s->add_option("--type", opt.type, "group type A..G");
    s->add_option("--rank", opt.rank, "group rank");
    s->add_option("--flavor", opt.flavor, "sc or ad");
    s->add_option("--cartan", opt.cartan, "explicit Cartan matrix (JSON)");
    s->add_option("--gram", opt.gram, "Gram matrix of a quadratic form (JSON)");
    s->add_option("--j", opt.j, "affine node index");
    s->add_option("--t", opt.t, "loop-rotation exponent t > 0");
    s->add_option("--window", opt.window, "enumeration window");
    s->add_option("--lambda", opt.lambda, "weight (JSON array)");
    s->add_option("--eta", opt.eta, "coweight (JSON array)");
    s->add_option("--beta", opt.beta, "coweight (JSON array)");
    s->add_option("--center", opt.center, "lattice point (JSON array)");
    s->add_flag("--affine", opt.affine, "use the affine variant");
    s->add_flag("--stacky", opt.stacky, "use the stacky flavor");
    s->add_option("--target", opt.target, "plot target: fan, alcove, voronoi");
    subs.push_back(s);
  }

  CliResult res;
  std::vector<std::string> argv_r(args.rbegin(), args.rend());
  try {
    app.parse(argv_r);
  } catch (const CLI::CallForHelp& e) {
    res.out = app.help();
    return res;
  } catch (const CLI::ParseError& e) {
    res.exit_code = 2;
    res.err = e.what();
    res.out = Json{{"schema_version", 1}, {"error", {{"kind", "usage"}, {"message", e.what()}}}}
                  .dump() +
              "\n";
    return res;
  }

  std::string command;
  for (size_t i = 0; i < subs.size(); ++i)
    if (subs[i]->parsed()) command = subs[i]->get_name();

  try {
    if (opt.config_path.has_value()) {
      std::ifstream in(*opt.config_path);
      if (!in) throw config_error("cannot open config file: " + *opt.config_path);
      try {
        in >> opt.config;
      } catch (const Json::exception& e) {
        throw config_error(std::string("config file is not valid JSON: ") + e.what());
      }
      if (!opt.config.is_object()) throw config_error("config file must hold a JSON object");
      opt.validate_config();
    }

    std::string payload;
    if (command == "plot") {
      if (!opt.output_path.has_value())
        throw config_error("plot writes SVG to a file: pass --output");
      payload = cmd_plot(opt);
    } else {
      Json env;
      if (command == "rootdata") env = cmd_rootdata(opt);
      else if (command == "alcove") env = cmd_alcove(opt);
      else if (command == "parahoric") env = cmd_parahoric(opt);
      else if (command == "stackyfan") env = cmd_stackyfan(opt);
      else if (command == "cdelta") env = cmd_cdelta(opt);
      else if (command == "orbits") env = cmd_orbits(opt);
      else if (command == "voronoi") env = cmd_voronoi(opt);
      else if (command == "ltfan") env = cmd_ltfan(opt);
      else if (command == "limit") env = cmd_limit(opt);
      else if (command == "freudenthal") env = cmd_freudenthal(opt);
      else throw internal_error("unreachable command dispatch");
      payload = opt.pretty ? env.dump(2) + "\n" : env.dump() + "\n";
    }

    if (opt.output_path.has_value()) {
      std::ofstream outf(*opt.output_path, std::ios::binary);
      if (!outf) throw config_error("cannot open output file: " + *opt.output_path);
      outf << payload;
      res.out = "";
    } else {
      res.out = payload;
    }
    return res;
  } catch (const config_error& e) {
    res.exit_code = 2;
    res.err = e.what();
    res.out = Json{{"schema_version", 1},
                   {"error", {{"kind", "config"}, {"message", e.what()}}}}
                  .dump() +
              "\n";
  } catch (const unsupported_error& e) {
    res.exit_code = 3;
    res.err = e.what();
    res.out = Json{{"schema_version", 1},
                   {"error", {{"kind", "unsupported"}, {"message", e.what()}}}}
                  .dump() +
              "\n";
  } catch (const std::exception& e) {
    res.exit_code = 4;
    res.err = e.what();
    res.out = Json{{"schema_version", 1},
                   {"error", {{"kind", "internal"}, {"message", e.what()}}}}
                  .dump() +
              "\n";
  }
  return res;
}

}  // namespace weyl

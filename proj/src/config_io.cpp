#include "fdnoma/config_io.hpp"

#include <fstream>
#include <set>
#include <string>

#include "fdnoma/errors.hpp"

namespace fdnoma {

namespace {

// Reads fields out of one JSON object and remembers which keys it consumed.
class FieldReader {
 public:
  FieldReader(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ValidationError(where() + ": expected a JSON object");
  }

  void read(const char* key, double& out) {
    if (const Json* v = take(key)) {
      if (!v->is_number()) throw ValidationError(field(key) + ": expected a number");
      out = v->get<double>();
    }
  }

  void read(const char* key, std::size_t& out) {
    if (const Json* v = take(key)) {
      if (!v->is_number_integer() || v->get<long long>() < 0) {
        throw ValidationError(field(key) + ": expected a non-negative integer");
      }
      out = v->get<std::size_t>();
    }
  }

  void read(const char* key, bool& out) {
    if (const Json* v = take(key)) {
      if (!v->is_boolean()) throw ValidationError(field(key) + ": expected true or false");
      out = v->get<bool>();
    }
  }

  template <typename Fn>
  void object(const char* key, Fn&& fn) {
    if (const Json* v = take(key)) {
      FieldReader inner(*v, field(key));
      fn(inner);
      inner.finish();
    }
  }

  void scenario_tag(std::string_view expected) {
    if (const Json* v = take("scenario")) {
      if (!v->is_string() || v->get<std::string>() != expected) {
        throw ValidationError(field("scenario") + ": expected \"" + std::string(expected) + "\"");
      }
    }
  }

  void finish() const {
    for (const auto& [key, value] : j_.items()) {
      if (!seen_.contains(key)) throw ValidationError("unknown config key '" + field(key.c_str()) + "'");
    }
  }

 private:
  const Json* take(const char* key) {
    seen_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }
  std::string where() const { return path_.empty() ? "config" : path_; }
  std::string field(const char* key) const { return path_.empty() ? key : path_ + "." + key; }

  const Json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

void read_alloc(FieldReader& r, PowerAllocation& alloc) {
  r.object("alloc", [&](FieldReader& a) {
    a.read("a1", alloc.a1);
    a.read("a2", alloc.a2);
  });
}

Json alloc_json(const PowerAllocation& a) { return Json{{"a1", a.a1}, {"a2", a.a2}}; }

}  // namespace

UldlConfig uldl_config_from_json(const Json& j) {
  UldlConfig cfg;
  FieldReader r(j, "");
  r.scenario_tag("uldl");
  r.read("rho_b", cfg.rho_b);
  r.read("p_u1", cfg.p_u1);
  r.read("p_u2", cfg.p_u2);
  r.read("uplink_offset_db", cfg.uplink_offset_db);
  r.read("sigma2_si", cfg.sigma2_si);
  r.read("n_t", cfg.n_t);
  r.read("n_r", cfg.n_r);
  r.object("lambda", [&](FieldReader& l) {
    l.read("bs_d1", cfg.lambda.bs_d1);
    l.read("bs_d2", cfg.lambda.bs_d2);
    l.read("u1_bs", cfg.lambda.u1_bs);
    l.read("u2_bs", cfg.lambda.u2_bs);
    l.read("u1_d1", cfg.lambda.u1_d1);
    l.read("u1_d2", cfg.lambda.u1_d2);
    l.read("u2_d1", cfg.lambda.u2_d1);
    l.read("u2_d2", cfg.lambda.u2_d2);
  });
  r.read("cci_factor", cfg.cci_factor);
  r.read("n_neighbor_cells", cfg.n_neighbor_cells);
  read_alloc(r, cfg.alloc);
  r.read("shared_beam", cfg.shared_beam);
  r.read("min_rule", cfg.min_rule);
  r.finish();
  validate(cfg);
  return cfg;
}

CoopConfig coop_config_from_json(const Json& j) {
  CoopConfig cfg;
  FieldReader r(j, "");
  r.scenario_tag("coop");
  r.read("rho_b", cfg.rho_b);
  r.read("relay_power_ratio", cfg.relay_power_ratio);
  read_alloc(r, cfg.alloc);
  r.object("lambda", [&](FieldReader& l) {
    l.read("b1", cfg.lambda.b1);
    l.read("br", cfg.lambda.br);
    l.read("r1", cfg.lambda.r1);
    l.read("r2", cfg.lambda.r2);
    l.read("rr", cfg.lambda.rr);
    l.read("b2", cfg.lambda.b2);
    l.read("u12", cfg.lambda.u12);
    l.read("uu", cfg.lambda.uu);
  });
  r.read("k1", cfg.k1);
  r.read("k2", cfg.k2);
  r.read("min_rule", cfg.min_rule);
  r.finish();
  validate(cfg);
  return cfg;
}

CognitiveConfig cognitive_config_from_json(const Json& j) {
  CognitiveConfig cfg;
  FieldReader r(j, "");
  r.scenario_tag("cognitive");
  r.read("p_s_max", cfg.p_s_max);
  r.read("p_r_max", cfg.p_r_max);
  r.read("i_th", cfg.i_th);
  r.read("n_t", cfg.n_t);
  r.read("n_r", cfg.n_r);
  r.object("lambda", [&](FieldReader& l) {
    l.read("s1", cfg.lambda.s1);
    l.read("sr", cfg.lambda.sr);
    l.read("r2", cfg.lambda.r2);
    l.read("r1", cfg.lambda.r1);
    l.read("sp", cfg.lambda.sp);
    l.read("rp", cfg.lambda.rp);
    l.read("si", cfg.lambda.si);
  });
  read_alloc(r, cfg.alloc);
  r.read("min_rule", cfg.min_rule);
  r.read("grid_points", cfg.grid_points);
  r.read("refine_points", cfg.refine_points);
  r.read("grid_range_db", cfg.grid_range_db);
  r.read("r2_target", cfg.r2_target);
  r.finish();
  validate(cfg);
  return cfg;
}

ScbfConfig scbf_config_from_json(const Json& j) {
  ScbfConfig cfg;
  FieldReader r(j, "");
  r.scenario_tag("scbf");
  r.read("m", cfg.m);
  r.read("p_total", cfg.p_total);
  r.read("alpha", cfg.alpha);
  r.read("rho_corr", cfg.rho_corr);
  r.read("grid_resolution", cfg.grid_resolution);
  r.read("refinements", cfg.refinements);
  r.finish();
  validate(cfg);
  return cfg;
}

Json to_json(const UldlConfig& cfg) {
  const auto& l = cfg.lambda;
  return Json{{"scenario", "uldl"},
              {"rho_b", cfg.rho_b},
              {"p_u1", cfg.p_u1},
              {"p_u2", cfg.p_u2},
              {"uplink_offset_db", cfg.uplink_offset_db},
              {"sigma2_si", cfg.sigma2_si},
              {"n_t", cfg.n_t},
              {"n_r", cfg.n_r},
              {"lambda",
               {{"bs_d1", l.bs_d1},
                {"bs_d2", l.bs_d2},
                {"u1_bs", l.u1_bs},
                {"u2_bs", l.u2_bs},
                {"u1_d1", l.u1_d1},
                {"u1_d2", l.u1_d2},
                {"u2_d1", l.u2_d1},
                {"u2_d2", l.u2_d2}}},
              {"cci_factor", cfg.cci_factor},
              {"n_neighbor_cells", cfg.n_neighbor_cells},
              {"alloc", alloc_json(cfg.alloc)},
              {"shared_beam", cfg.shared_beam},
              {"min_rule", cfg.min_rule}};
}

Json to_json(const CoopConfig& cfg) {
  const auto& l = cfg.lambda;
  return Json{{"scenario", "coop"},
              {"rho_b", cfg.rho_b},
              {"relay_power_ratio", cfg.relay_power_ratio},
              {"alloc", alloc_json(cfg.alloc)},
              {"lambda",
               {{"b1", l.b1},
                {"br", l.br},
                {"r1", l.r1},
                {"r2", l.r2},
                {"rr", l.rr},
                {"b2", l.b2},
                {"u12", l.u12},
                {"uu", l.uu}}},
              {"k1", cfg.k1},
              {"k2", cfg.k2},
              {"min_rule", cfg.min_rule}};
}

Json to_json(const CognitiveConfig& cfg) {
  const auto& l = cfg.lambda;
  return Json{{"scenario", "cognitive"},
              {"p_s_max", cfg.p_s_max},
              {"p_r_max", cfg.p_r_max},
              {"i_th", cfg.i_th},
              {"n_t", cfg.n_t},
              {"n_r", cfg.n_r},
              {"lambda",
               {{"s1", l.s1},
                {"sr", l.sr},
                {"r2", l.r2},
                {"r1", l.r1},
                {"sp", l.sp},
                {"rp", l.rp},
                {"si", l.si}}},
              {"alloc", alloc_json(cfg.alloc)},
              {"min_rule", cfg.min_rule},
              {"grid_points", cfg.grid_points},
              {"refine_points", cfg.refine_points},
              {"grid_range_db", cfg.grid_range_db},
              {"r2_target", cfg.r2_target}};
}

Json to_json(const ScbfConfig& cfg) {
  return Json{{"scenario", "scbf"},
              {"m", cfg.m},
              {"p_total", cfg.p_total},
              {"alpha", cfg.alpha},
              {"rho_corr", cfg.rho_corr},
              {"grid_resolution", cfg.grid_resolution},
              {"refinements", cfg.refinements}};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError("config '" + path.string() + "': " + e.what());
  }
}

}  // namespace fdnoma

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fdnoma/cli.hpp"
#include "fdnoma/config_io.hpp"
#include "fdnoma/csv.hpp"
#include "fdnoma/errors.hpp"

using namespace fdnoma;
namespace fs = std::filesystem;

namespace {

const fs::path kConfigDir = fs::path(FDNOMA_SOURCE_DIR) / "configs";

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("fdnoma_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

int cli(std::vector<std::string> args, std::string* err_text = nullptr) {
  args.insert(args.begin(), "fdnoma");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (err_text) *err_text = err.str();
  return code;
}

}  // namespace

TEST_CASE("empty cooperative config takes the published defaults") {
  const CoopConfig cfg = coop_config_from_json(Json::object());
  CHECK(cfg.alloc.a1 == 0.05);
  CHECK(cfg.alloc.a2 == 0.95);
  CHECK(cfg.relay_power_ratio == 0.5);
  CHECK(cfg.lambda.b1 == 1.0);
  CHECK(cfg.lambda.br == 0.5);
  CHECK(cfg.lambda.r1 == 0.5);
  CHECK(cfg.lambda.r2 == 0.5);
  CHECK(cfg.lambda.rr == 0.3);
}

TEST_CASE("uldl config without sigma2_si uses 0.1") {
  const UldlConfig cfg = uldl_config_from_json(Json{{"rho_b", 5.0}});
  CHECK(cfg.sigma2_si == 0.1);
  CHECK(cfg.rho_b == 5.0);
  CHECK(cfg.n_t == 3);
  CHECK(cfg.n_r == 2);
}

TEST_CASE("config validation errors name the field") {
  try {
    coop_config_from_json(Json::parse(R"({"alloc": {"a1": 0.6}})"));
    FAIL("expected an error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("alloc.a1") != std::string::npos);
  }
  try {
    uldl_config_from_json(Json::parse(R"({"lambda": {"bs_d3": 1.0}})"));
    FAIL("expected an error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("lambda.bs_d3") != std::string::npos);
  }
  CHECK_THROWS_AS(coop_config_from_json(Json::parse(R"({"k1": "small"})")), ValidationError);
  CHECK_THROWS_AS(uldl_config_from_json(Json::parse(R"({"n_t": 2.5})")), ValidationError);
  CHECK_THROWS_AS(uldl_config_from_json(Json::parse(R"({"n_t": -1})")), ValidationError);
  CHECK_THROWS_AS(scbf_config_from_json(Json::parse(R"({"scenario": "coop"})")), ValidationError);
  CHECK_THROWS_AS(scbf_config_from_json(Json::parse("[1, 2]")), ValidationError);
}

TEST_CASE("resolved configs round trip through JSON") {
  UldlConfig u;
  u.cci_factor = 0.37;
  u.n_neighbor_cells = 3;
  const UldlConfig u2 = uldl_config_from_json(to_json(u));
  CHECK(u2.cci_factor == 0.37);
  CHECK(u2.n_neighbor_cells == 3);
  CHECK(to_json(u2) == to_json(u));
  CHECK(to_json(coop_config_from_json(to_json(CoopConfig{}))) == to_json(CoopConfig{}));
  CHECK(to_json(cognitive_config_from_json(to_json(CognitiveConfig{}))) == to_json(CognitiveConfig{}));
  CHECK(to_json(scbf_config_from_json(to_json(ScbfConfig{}))) == to_json(ScbfConfig{}));
}

TEST_CASE("shipped configs are valid") {
  CHECK_NOTHROW(uldl_config_from_json(read_json_file(kConfigDir / "uldl_single.json")));
  const UldlConfig multi = uldl_config_from_json(read_json_file(kConfigDir / "uldl_multi.json"));
  CHECK(multi.n_neighbor_cells > 0);
  CHECK(multi.cci_factor > 0.0);
  CHECK(to_json(coop_config_from_json(read_json_file(kConfigDir / "coop.json"))) ==
        to_json(CoopConfig{}));
  CHECK_NOTHROW(cognitive_config_from_json(read_json_file(kConfigDir / "cognitive.json")));
  CHECK_NOTHROW(scbf_config_from_json(read_json_file(kConfigDir / "scbf.json")));
  CHECK_THROWS_AS(read_json_file(kConfigDir / "missing.json"), ValidationError);
}

// ---------------------------------------------------------------------------

TEST_CASE("reals are written with 17 significant digits and parse back exactly") {
  for (double v : {0.1, 1.0 / 3.0, 2.8745, 1e-300, 12345678.9, 0.0}) {
    const std::string s = format_real(v);
    CHECK(parse_real(s) == v);
    CHECK(s.find(',') == std::string::npos);
  }
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(format_real(40.0) == "40");
  CHECK_THROWS_AS(parse_real("1.5x"), ValidationError);
}

TEST_CASE("sweep CSV with one point") {
  SweepResult r;
  r.scenario = "coop";
  r.metric = "sum_rate";
  r.trials = 10;
  r.seed = 3;
  r.series.push_back({"fd_relay", {{5.0, 1.0 / 3.0, 0.25}}});
  std::ostringstream out;
  write_sweep_csv(out, r);
  const auto rows = lines(out.str());
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == kSweepCsvHeader);
  const auto f = split_csv_line(rows[1]);
  REQUIRE(f.size() == 9);
  CHECK(f[0] == "coop");
  CHECK(f[2] == "snr_db");
  CHECK(parse_real(f[5]) == 1.0 / 3.0);
  CHECK(out.str().find('\r') == std::string::npos);
}

TEST_CASE("region CSV marks infeasible targets with an empty rate") {
  RateRegion region;
  region.scenario = "cognitive";
  region.scheme = "optimum";
  region.trials = 5;
  region.seed = 2;
  region.points.resize(2);
  region.points[0].r2_target = 0.0;
  region.points[0].r1_max = 1.25;
  region.points[0].feasible = true;
  region.points[1].r2_target = 9.0;
  std::ostringstream out;
  write_region_csv(out, region, {1.0, std::nullopt});
  const auto rows = lines(out.str());
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == kRegionCsvHeader);
  CHECK(rows[2] == "cognitive,optimum,9,,false,1,5,2");
  CHECK(split_csv_line(rows[1])[3] == "1.25");
}

TEST_CASE("grid specifications") {
  CHECK(parse_grid("0:40:5").size() == 9);
  CHECK(parse_grid("7").size() == 1);
  CHECK_THROWS_AS(parse_grid("0:40"), ValidationError);
  CHECK_THROWS_AS(parse_grid("a:b:c"), ValidationError);
  CHECK_THROWS_AS(parse_grid("0:40:-5"), ValidationError);
}

// ---------------------------------------------------------------------------

TEST_CASE("run writes one row per mode and grid point and is byte reproducible") {
  TempDir dir;
  const fs::path a = dir.path() / "a.csv";
  const fs::path b = dir.path() / "sub" / "b.csv";
  const std::vector<std::string> common{"run",      "--scenario", "coop",  "--snr",
                                        "0:40:5",   "--trials",   "1000",  "--seed",
                                        "7",        "--modes",    "fd_relay,hd_relay"};
  auto with_out = [&](const fs::path& p) {
    auto args = common;
    args.push_back("--out");
    args.push_back(p.string());
    return args;
  };
  REQUIRE(cli(with_out(a)) == 0);
  REQUIRE(cli(with_out(b)) == 0);
  const std::string csv = slurp(a);
  CHECK(lines(csv).size() == 19);
  CHECK(csv == slurp(b));

  const fs::path manifest = manifest_path(a);
  CHECK(manifest.filename() == "a.manifest.json");
  const Json m = read_json_file(manifest);
  CHECK(m["seed"] == 7);
  CHECK(m["trials"] == 1000);
  CHECK(m["config"]["k1"] == 0.01);
  CHECK(m.contains("timestamp"));
  CHECK(m.contains("version"));

  const fs::path c = dir.path() / "c.csv";
  REQUIRE(cli({"replay", "--manifest", manifest.string(), "--out", c.string()}) == 0);
  CHECK(slurp(c) == csv);
}

TEST_CASE("region commands") {
  TempDir dir;
  const fs::path s = dir.path() / "scbf.csv";
  REQUIRE(cli({"region", "--scenario", "scbf", "--alpha", "0.25", "--power-db", "10", "--targets",
               "0:1.5:0.5", "--out", s.string()}) == 0);
  const auto rows = lines(slurp(s));
  REQUIRE(rows.size() == 1 + 4 + 2);
  CHECK(rows[5].rfind("scbf,tdm,0,", 0) == 0);
  CHECK(parse_real(split_csv_line(rows[5])[3]) == doctest::Approx(3.4594).epsilon(1e-4));
  CHECK(parse_real(split_csv_line(rows[6])[2]) == doctest::Approx(1.8074).epsilon(1e-4));

  const fs::path g = dir.path() / "cog.csv";
  REQUIRE(cli({"region", "--scenario", "cognitive", "--ith-db", "10", "--targets", "0:2:1",
               "--trials", "20", "--seed", "4", "--schemes", "optimum", "--out", g.string()}) == 0);
  const auto grow = lines(slurp(g));
  REQUIRE(grow.size() == 4);
  CHECK(split_csv_line(grow[1])[5] == "10");
  const fs::path g2 = dir.path() / "cog2.csv";
  REQUIRE(cli({"replay", "--manifest", manifest_path(g).string(), "--out", g2.string()}) == 0);
  CHECK(slurp(g2) == slurp(g));
}

TEST_CASE("exit codes") {
  TempDir dir;
  const std::string out = (dir.path() / "x.csv").string();
  std::string err;
  CHECK(cli({"run", "--scenario", "scbf", "--snr", "0", "--out", out}) == 2);
  CHECK(cli({"run", "--scenario", "coop", "--snr", "0", "--modes", "fd_zf", "--out", out}, &err) == 2);
  CHECK(err.find("fd_relay") != std::string::npos);
  CHECK(cli({"run", "--scenario", "coop", "--snr", "0", "--bogus", "--out", out}) == 2);
  CHECK(cli({"run", "--scenario", "coop", "--out", out}) == 2);
  CHECK(cli({"region", "--scenario", "scbf", "--ith-db", "3", "--targets", "0", "--out", out}) == 2);
  CHECK(cli({"region", "--scenario", "scbf", "--alpha", "2", "--targets", "0", "--out", out}) == 2);
  const fs::path bad = dir.path() / "bad.json";
  std::ofstream(bad) << R"({"alloc": {"a1": 0.6, "a2": 0.4}})";
  CHECK(cli({"run", "--scenario", "coop", "--config", bad.string(), "--snr", "0", "--out", out}) == 2);
  const fs::path broken = dir.path() / "broken.json";
  std::ofstream(broken) << "{";
  CHECK(cli({"run", "--scenario", "coop", "--config", broken.string(), "--snr", "0", "--out", out}) == 2);
  CHECK_FALSE(fs::exists(out));
  CHECK(cli({"run", "--scenario", "coop", "--snr", "0", "--trials", "10", "--out", "/proc/none/x.csv"}) == 1);
  CHECK(cli({}) == 2);
  CHECK(cli({"oracle", "rayleigh", "--snr-db", "0"}) == 0);
}

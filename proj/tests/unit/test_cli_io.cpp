#include "eomq/cli_io.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

using namespace eomq;

namespace {

const char* kDsb = R"({
  "command": "spectrum",
  "preset": "yb_dual",
  "drive": {"kind": "dsb", "index": 0.5, "tone": 3},
  "input": {"mode": 100}
})";

ConfigError parse_error(const std::string& text, std::optional<Command> cmd = std::nullopt) {
  try {
    parse_config(text, cmd);
  } catch (const ConfigError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for " << text;
  return ConfigError(ConfigError::Kind::syntax, "", "none");
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(parse_config, minimal_dsb_document) {
  const auto cfg = parse_config(kDsb);
  EXPECT_EQ(cfg.command, Command::spectrum);
  EXPECT_EQ(cfg.base.n0, ModeIndex(100));
  const auto& pm1 = std::get<PMConfig>(cfg.base.eom.pm1);
  EXPECT_EQ(pm1.index, 0.5);
  EXPECT_EQ(pm1.tone, RFTone(3));
  EXPECT_EQ(cfg.base.eom.splitter_out.mirrored, true);
  EXPECT_TRUE(cfg.sweep.empty());
}

TEST(parse_config, errors_name_the_field) {
  auto e = parse_error(R"({"command": "spectrum", "splitter_in": {"kind": "dc", "k": 1.5}, "input": {"mode": 3}})");
  EXPECT_EQ(e.kind(), ConfigError::Kind::schema);
  EXPECT_EQ(e.path(), "splitter_in.k");

  e = parse_error(R"({"preset": "yb_dual", "input": {"mode": 3}})");
  EXPECT_EQ(e.path(), "command");

  e = parse_error(R"({"command": "spectrum", "input": {"mode": 3},)");
  EXPECT_EQ(e.kind(), ConfigError::Kind::syntax);

  e = parse_error(R"({"command": "spectrum", "input": {"mode": 0}})");
  EXPECT_EQ(e.path(), "input.mode");

  e = parse_error(R"({"command": "spectrum", "pm1": {"index": 51}, "input": {"mode": 2}})");
  EXPECT_EQ(e.path(), "pm1.index");

  e = parse_error(R"({"command": "spectrum", "input": {"mode": 2}, "colour": 1})");
  EXPECT_EQ(e.path(), "colour");

  e = parse_error(R"({"command": "spectrum", "input": {"mode": 2, "state": "coherent"}})");
  EXPECT_EQ(e.path(), "input.state");

  e = parse_error(R"({"command": "coherent", "input": {"mode": 2}})", Command::spectrum);
  EXPECT_EQ(e.path(), "command");

  e = parse_error(R"({"command": "spectrum", "input": {"mode": 5},
                      "pm1": {"tones": [{"index": 0.1, "tone": 2}, {"index": 0.2, "tone": 2}]}})");
  EXPECT_EQ(e.kind(), ConfigError::Kind::physics);
  EXPECT_EQ(e.path(), "pm1.tones");

  e = parse_error(R"({"command": "spectrum", "input": {"mode": 5}, "sweep": [{"input": {"mode": -1}}]})");
  EXPECT_EQ(e.path(), "sweep[0].input.mode");
}

TEST(parse_config, command_from_caller) {
  const auto cfg = parse_config(R"({"preset": "dc_dual", "input": {"mode": 4}})", Command::two_photon);
  EXPECT_EQ(cfg.command, Command::two_photon);
  EXPECT_EQ(cfg.base.state, StateKind::two_photon);
  EXPECT_EQ(parse_config("{}", Command::verify).tolerance_scale, 1.0);
}

TEST(emit, empty_and_single_entry_csv) {
  RunResult r;
  r.blocks.push_back(SpectrumBlock{{}, 10, 2});
  const auto header = emit(r, Format::csv);
  EXPECT_EQ(header, "port,mode,order,real,imag,abs2\n");

  TwoPortSpectrum one;
  one.port2.set(ModeIndex(12), {0.5, -0.25});
  r.blocks[0] = SpectrumBlock{one, 10, 2};
  const auto doc = lines(emit(r, Format::csv));
  ASSERT_EQ(doc.size(), 2u);
  EXPECT_EQ(doc[1], "2,12,1,5.0000000000000000e-01,-2.5000000000000000e-01,3.1250000000000000e-01");
}

TEST(emit, json_round_trip_is_bit_exact) {
  auto cfg = parse_config(R"({"command": "coherent", "preset": "hybrid_dual",
      "pm1": {"bias": 0.3, "index": 1.7, "rf_phase": 0.2, "tone": 2},
      "pm2": {"bias": -1.3, "index": 0.9, "rf_phase": 2.5, "tone": 2},
      "input": {"mode": 30, "alpha": [1.25, -0.5]}})");
  const auto res = run(cfg);
  const auto doc = nlohmann::json::parse(emit(res, Format::json));
  const auto& amps = std::get<SpectrumBlock>(res.blocks[0]).amplitudes;
  const auto& rows = doc.at("points").at(0).at("port1");
  ASSERT_EQ(rows.size(), amps.port1.size());
  for (const auto& row : rows) {
    const cplx a = amps.port1.at(row.at("mode").get<std::int64_t>());
    EXPECT_EQ(row.at("real").get<double>(), a.real());
    EXPECT_EQ(row.at("imag").get<double>(), a.imag());
  }
}

TEST(run, deterministic_and_thread_independent) {
  const auto cfg = parse_config(R"({"command": "spectrum", "preset": "dc_dual",
      "pm1": {"index": 1.1, "tone": 3}, "pm2": {"bias": 0.5, "index": 0.7, "tone": 2},
      "input": {"mode": 40},
      "sweep": [{"pm1": {"index": 0.2}}, {"pm2": {"tone": 5}}, {"input": {"port": 2}}]})");
  ASSERT_EQ(cfg.sweep.size(), 3u);
  EXPECT_EQ(std::get<PMConfig>(cfg.sweep[0].eom.pm1).tone, RFTone(3));
  const auto a = emit(run(cfg, Exec::parallel), Format::csv);
  EXPECT_EQ(a, emit(run(cfg, Exec::parallel), Format::csv));
  EXPECT_EQ(a, emit(run(cfg, Exec::serial), Format::csv));
  EXPECT_EQ(lines(a)[0], "point,port,mode,order,real,imag,abs2");
}

TEST(run, dsb_even_orders_vanish) {
  for (const char* model : {"exact", "optical"}) {
    auto cfg = parse_config(kDsb);
    cfg.base.model = parse_model(model);
    const auto csv = lines(emit(run(cfg), Format::csv));
    int checked = 0;
    for (std::size_t i = 1; i < csv.size(); ++i) {
      std::istringstream row(csv[i]);
      std::string port, mode, order, re, im, abs2;
      std::getline(row, port, ',');
      std::getline(row, mode, ',');
      std::getline(row, order, ',');
      std::getline(row, re, ',');
      std::getline(row, im, ',');
      std::getline(row, abs2, ',');
      if (port == "1" && std::stoll(order) % 2 == 0) {
        EXPECT_LT(std::stod(abs2), 1e-28) << csv[i];
        ++checked;
      }
    }
    EXPECT_GT(checked, 5);
  }
}

TEST(run, engine_errors_surface) {
  const auto cfg = parse_config(R"({"command": "spectrum",
      "pm1": {"tones": [{"index": 0.01, "tone": 7}]}, "input": {"mode": 3}})");
  EXPECT_THROW(run(cfg), std::domain_error);
}

TEST(cli, exit_codes) {
  const std::string cli = EOMQ_CLI_PATH;
  const std::string dir = ::testing::TempDir();
  const std::string bad = dir + "/eomq_bad.json";
  std::ofstream(bad) << R"({"command": "spectrum", "splitter_in": {"kind": "yb", "k": 1.5}, "input": {"mode": 3}})";
  auto status = [](const std::string& cmd) {
    const int rc = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  };
  EXPECT_EQ(status(cli + " spectrum --config " + bad), 1);
  EXPECT_EQ(status(cli + " spectrum --config " + dir + "/does_not_exist.json"), 2);
  EXPECT_EQ(status(cli + " spectrum --config " + std::string(EOMQ_SOURCE_DIR) + "/configs/yb_dual_dsb.json --out " +
                   dir + "/no/such/dir/out.csv"),
            2);
  EXPECT_EQ(status(cli + " spectrum --config " + std::string(EOMQ_SOURCE_DIR) + "/configs/yb_dual_dsb.json"), 0);
  EXPECT_EQ(status(cli + " frobnicate"), 1);
}

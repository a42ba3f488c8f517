// eomsim: batch front end for the electro-optic modulator engine.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "eomq/cli_io.hpp"

using namespace eomq;

namespace {

struct Options {
  std::string config;
  std::string out;
  std::optional<std::string> format;
  std::optional<std::string> model;
  double tolerance_scale = 1.0;
  bool serial = false;
};

bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  text = ss.str();
  return static_cast<bool>(in) || in.eof();
}

int execute(Command command, const Options& opt) {
  RunConfig cfg;
  try {
    if (opt.config.empty()) {
      if (command != Command::verify) {
        std::cerr << "eomsim: --config is required for " << to_string(command) << "\n";
        return kExitInvalid;
      }
      cfg.command = Command::verify;
    } else {
      std::string text;
      if (!read_file(opt.config, text)) {
        std::cerr << "eomsim: cannot read " << opt.config << "\n";
        return kExitIo;
      }
      cfg = parse_config(text, command);
    }
    if (opt.format) cfg.format = parse_format(*opt.format);
    if (opt.model) {
      const Model m = parse_model(*opt.model);
      cfg.base.model = m;
      for (auto& p : cfg.sweep) p.model = m;
    }
    if (command == Command::verify && opt.tolerance_scale != 1.0) cfg.tolerance_scale = opt.tolerance_scale;
  } catch (const ConfigError& e) {
    const char* kind = e.kind() == ConfigError::Kind::syntax   ? "syntax"
                       : e.kind() == ConfigError::Kind::schema ? "schema"
                                                               : "physics";
    std::cerr << "eomsim: " << kind << " error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "eomsim: " << e.what() << "\n";
    return kExitInvalid;
  }

  RunResult result;
  try {
    result = run(cfg, opt.serial ? Exec::serial : Exec::parallel);
  } catch (const std::logic_error& e) {  // invalid_argument, domain_error, out_of_range
    std::cerr << "eomsim: " << e.what() << "\n";
    return kExitInvalid;
  }

  const std::string doc = emit(result, cfg.format);
  if (opt.out.empty()) {
    std::cout << doc;
    std::cout.flush();
    if (!std::cout) return kExitIo;
  } else {
    std::ofstream f(opt.out, std::ios::binary | std::ios::trunc);
    if (!f || !(f << doc) || !f.flush()) {
      std::cerr << "eomsim: cannot write " << opt.out << "\n";
      return kExitIo;
    }
  }
  if (command == Command::verify && !result.passed()) return kExitInvalid;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum model of electro-optic modulators: sideband spectra, states and fields"};
  app.require_subcommand(1);

  Options opt;
  std::optional<Command> chosen;
  for (Command c : {Command::spectrum, Command::coherent, Command::two_photon, Command::mean_field, Command::verify}) {
    auto* sub = app.add_subcommand(std::string(to_string(c)));
    auto* config = sub->add_option("--config", opt.config, "JSON configuration file");
    if (c != Command::verify) config->required();
    sub->add_option("--format", opt.format, "csv or json (overrides the config)");
    sub->add_option("--out", opt.out, "write here instead of stdout");
    sub->add_flag("--serial", opt.serial, "use the single-threaded kernels");
    if (c == Command::verify)
      sub->add_option("--tolerance-scale", opt.tolerance_scale, "multiply every tolerance (>= 1)");
    else
      sub->add_option("--model", opt.model, "exact or optical (overrides the config)");
    sub->callback([&chosen, c] { chosen = c; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInvalid;
  }
  return execute(*chosen, opt);
}

#include "eomq/cli_io.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <initializer_list>

#include <json.hpp>

#include "eomq/special_functions.hpp"

namespace eomq {

namespace {

using json = nlohmann::json;
using Kind = ConfigError::Kind;

[[noreturn]] void schema_error(const std::string& path, const std::string& msg) {
  throw ConfigError(Kind::schema, path, msg);
}

[[noreturn]] void physics_error(const std::string& path, const std::string& msg) {
  throw ConfigError(Kind::physics, path, msg);
}

std::string join(const std::string& base, std::string_view key) {
  return base.empty() ? std::string(key) : base + "." + std::string(key);
}

std::string indexed(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

void require_object(const json& j, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
}

void allow_keys(const json& obj, const std::string& path, std::initializer_list<std::string_view> keys) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto k : keys) known = known || key == k;
    if (!known) schema_error(join(path, key), "unknown field");
  }
}

double number(const json& obj, const std::string& path, std::string_view key, double fallback) {
  const auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number()) schema_error(join(path, key), "expected a number");
  const double v = it->get<double>();
  if (!std::isfinite(v)) schema_error(join(path, key), "must be finite");
  return v;
}

double number_in(const json& obj, const std::string& path, std::string_view key, double fallback, double lo,
                 double hi) {
  const double v = number(obj, path, key, fallback);
  if (v < lo || v > hi) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "must lie in [%g, %g], got %g", lo, hi, v);
    schema_error(join(path, key), buf);
  }
  return v;
}

std::int64_t integer(const json& obj, const std::string& path, std::string_view key, std::int64_t fallback,
                     std::int64_t lo) {
  const auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number_integer()) schema_error(join(path, key), "expected an integer");
  const auto v = it->get<std::int64_t>();
  if (v < lo) schema_error(join(path, key), "must be >= " + std::to_string(lo));
  return v;
}

std::string text(const json& obj, const std::string& path, std::string_view key) {
  const auto& v = obj.at(key);
  if (!v.is_string()) schema_error(join(path, key), "expected a string");
  return v.get<std::string>();
}

// Runs a name parser and reports its failure against `path`.
template <class F>
auto named(const std::string& path, F&& parse) {
  try {
    return parse();
  } catch (const std::invalid_argument& e) {
    schema_error(path, e.what());
  }
}

Port parse_port(const json& obj, const std::string& path, std::string_view key) {
  const auto n = integer(obj, path, key, 1, 1);
  if (n > 2) schema_error(join(path, key), "port must be 1 or 2");
  return port_from_number(static_cast<int>(n));
}

SplitterSpec parse_splitter(const json& j, const std::string& path) {
  require_object(j, path);
  allow_keys(j, path, {"kind", "k", "theta", "mirrored"});
  if (!j.contains("kind")) schema_error(join(path, "kind"), "missing field");
  const auto kind = named(join(path, "kind"), [&] { return parse_splitter_kind(text(j, path, "kind")); });
  bool mirrored = false;
  if (j.contains("mirrored")) {
    if (!j.at("mirrored").is_boolean()) schema_error(join(path, "mirrored"), "expected true or false");
    mirrored = j.at("mirrored").get<bool>();
  }
  if (kind == SplitterKind::bulk) {
    if (j.contains("k")) schema_error(join(path, "k"), "bulk splitters take theta");
    return SplitterSpec::bulk(number(j, path, "theta", 0.0)).with_mirror(mirrored);
  }
  if (j.contains("theta")) schema_error(join(path, "theta"), "integrated splitters take k");
  if (!j.contains("k")) schema_error(join(path, "k"), "missing field");
  const double k = number_in(j, path, "k", 0.0, 0.0, 1.0);
  const auto spec = kind == SplitterKind::y_branch ? SplitterSpec::y_branch(k) : SplitterSpec::directional_coupler(k);
  return spec.with_mirror(mirrored);
}

ToneDrive parse_tone_drive(const json& j, const std::string& path) {
  require_object(j, path);
  allow_keys(j, path, {"index", "rf_phase", "tone"});
  return {number_in(j, path, "index", 0.0, 0.0, kBesselMaxArgument), number(j, path, "rf_phase", 0.0),
          RFTone(integer(j, path, "tone", 1, 1))};
}

ArmModulator parse_arm(const json& j, const std::string& path) {
  if (j.is_string()) {
    if (j.get<std::string>() != "none") schema_error(path, "expected \"none\" or an object");
    return std::monostate{};
  }
  require_object(j, path);
  if (j.contains("tones")) {
    allow_keys(j, path, {"bias", "tones", "convention"});
    MultitonePMConfig cfg;
    cfg.bias = number(j, path, "bias", 0.0);
    const auto& tones = j.at("tones");
    const auto tones_path = join(path, "tones");
    if (!tones.is_array()) schema_error(tones_path, "expected an array");
    for (std::size_t i = 0; i < tones.size(); ++i) cfg.tones.push_back(parse_tone_drive(tones[i], indexed(tones_path, i)));
    if (j.contains("convention")) {
      const auto name = text(j, path, "convention");
      if (name == "literal") cfg.convention = SidebandConvention::literal;
      else if (name == "bessel") cfg.convention = SidebandConvention::bessel;
      else schema_error(join(path, "convention"), "expected \"literal\" or \"bessel\"");
    }
    try {
      cfg.validate();
    } catch (const std::invalid_argument& e) {
      physics_error(tones_path, e.what());
    }
    return cfg;
  }
  allow_keys(j, path, {"bias", "index", "rf_phase", "tone"});
  return PMConfig{number(j, path, "bias", 0.0), number_in(j, path, "index", 0.0, 0.0, kBesselMaxArgument),
                  number(j, path, "rf_phase", 0.0), RFTone(integer(j, path, "tone", 1, 1))};
}

void apply_drive(const json& j, const std::string& path, EOMConfig& eom) {
  require_object(j, path);
  allow_keys(j, path, {"kind", "index", "tone", "suppress"});
  if (!j.contains("kind")) schema_error(join(path, "kind"), "missing field");
  const auto kind = text(j, path, "kind");
  const double m = number_in(j, path, "index", 0.0, 0.0, kBesselMaxArgument);
  const RFTone tone(integer(j, path, "tone", 1, 1));
  std::pair<PMConfig, PMConfig> arms;
  if (kind == "dsb") {
    if (j.contains("suppress")) schema_error(join(path, "suppress"), "only ssb drives take suppress");
    arms = dsb_settings(m, tone);
  } else if (kind == "ssb") {
    auto side = SuppressedSideband::lower;
    if (j.contains("suppress")) {
      const auto s = text(j, path, "suppress");
      if (s == "upper") side = SuppressedSideband::upper;
      else if (s != "lower") schema_error(join(path, "suppress"), "expected \"lower\" or \"upper\"");
    }
    arms = ssb_settings(m, tone, side);
  } else {
    schema_error(join(path, "kind"), "expected \"dsb\" or \"ssb\"");
  }
  eom.pm1 = arms.first;
  eom.pm2 = arms.second;
}

cplx parse_alpha(const json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    const cplx a{j[0].get<double>(), j[1].get<double>()};
    if (std::isfinite(a.real()) && std::isfinite(a.imag())) return a;
  }
  schema_error(path, "expected a number or [real, imag]");
}

StateKind default_state(Command c) {
  switch (c) {
    case Command::coherent:
    case Command::mean_field: return StateKind::coherent;
    case Command::two_photon: return StateKind::two_photon;
    default: return StateKind::photon;
  }
}

RunPoint parse_point(const json& doc, const std::string& base, Command command) {
  RunPoint p;
  if (doc.contains("preset"))
    p.eom = preset(named(join(base, "preset"), [&] { return parse_preset(text(doc, base, "preset")); }));
  if (doc.contains("splitter_in")) p.eom.splitter_in = parse_splitter(doc.at("splitter_in"), join(base, "splitter_in"));
  if (doc.contains("splitter_out"))
    p.eom.splitter_out = parse_splitter(doc.at("splitter_out"), join(base, "splitter_out"));
  if (doc.contains("drive")) {
    if (doc.contains("pm1") || doc.contains("pm2")) schema_error(join(base, "drive"), "drive replaces pm1 and pm2");
    apply_drive(doc.at("drive"), join(base, "drive"), p.eom);
  }
  if (doc.contains("pm1")) p.eom.pm1 = parse_arm(doc.at("pm1"), join(base, "pm1"));
  if (doc.contains("pm2")) p.eom.pm2 = parse_arm(doc.at("pm2"), join(base, "pm2"));

  if (doc.contains("model"))
    p.model = named(join(base, "model"), [&] { return parse_model(text(doc, base, "model")); });

  if (doc.contains("truncation")) {
    const auto path = join(base, "truncation");
    const auto& t = doc.at("truncation");
    require_object(t, path);
    allow_keys(t, path, {"floor", "q_margin"});
    p.truncation.floor = number_in(t, path, "floor", p.truncation.floor, 1e-300, 1.0);
    if (p.truncation.floor <= 0.0) schema_error(join(path, "floor"), "must be > 0");
    p.truncation.q_margin = static_cast<int>(integer(t, path, "q_margin", p.truncation.q_margin, 0));
  }

  const auto in_path = join(base, "input");
  if (!doc.contains("input")) schema_error(in_path, "missing field");
  const auto& in = doc.at("input");
  require_object(in, in_path);
  allow_keys(in, in_path, {"port", "mode", "state", "alpha"});
  if (!in.contains("mode")) schema_error(join(in_path, "mode"), "missing field");
  p.n0 = ModeIndex(integer(in, in_path, "mode", 1, 1));
  p.input = parse_port(in, in_path, "port");
  p.state = default_state(command);
  if (in.contains("state")) {
    const auto name = text(in, in_path, "state");
    StateKind s{};
    if (name == "photon") s = StateKind::photon;
    else if (name == "coherent") s = StateKind::coherent;
    else if (name == "two_photon") s = StateKind::two_photon;
    else schema_error(join(in_path, "state"), "expected photon, coherent or two_photon");
    if (s != p.state)
      schema_error(join(in_path, "state"), "state '" + name + "' does not fit command " + std::string(to_string(command)));
  }
  if (in.contains("alpha")) {
    if (p.state != StateKind::coherent) schema_error(join(in_path, "alpha"), "alpha needs a coherent input");
    p.alpha = parse_alpha(in.at("alpha"), join(in_path, "alpha"));
  }

  if (doc.contains("mean_field")) {
    const auto path = join(base, "mean_field");
    if (command != Command::mean_field) schema_error(path, "only the mean-field command reads this block");
    const auto& m = doc.at("mean_field");
    require_object(m, path);
    allow_keys(m, path, {"port", "t_start", "t_stop", "samples", "field_scale", "speed", "length"});
    auto& mf = p.mean_field;
    mf.port = parse_port(m, path, "port");
    mf.t_start = number(m, path, "t_start", mf.t_start);
    mf.t_stop = number(m, path, "t_stop", mf.t_stop);
    mf.samples = static_cast<int>(integer(m, path, "samples", mf.samples, 1));
    if (mf.samples > 1000000) schema_error(join(path, "samples"), "must be <= 1000000");
    mf.units.field_scale = number_in(m, path, "field_scale", 1.0, 0.0, INFINITY);
    mf.units.speed = number(m, path, "speed", mf.units.speed);
    mf.units.length = number(m, path, "length", mf.units.length);
    if (mf.units.speed <= 0.0) schema_error(join(path, "speed"), "must be > 0");
    if (mf.units.length <= 0.0) schema_error(join(path, "length"), "must be > 0");
  }

  try {
    p.eom.validate();
  } catch (const std::invalid_argument& e) {
    physics_error(base, e.what());
  }
  return p;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::int64_t order_step(const EOMConfig& eom) {
  if (const auto* a = std::get_if<PMConfig>(&eom.pm1)) return a->tone.value();
  if (const auto* b = std::get_if<PMConfig>(&eom.pm2)) return b->tone.value();
  return 0;
}

std::optional<std::int64_t> order_of(const SpectrumBlock& b, std::int64_t mode) {
  if (b.order_step == 0 || (mode - b.n0) % b.order_step != 0) return std::nullopt;
  return (mode - b.n0) / b.order_step;
}

ResultBlock evaluate(const RunPoint& p, Command command, Exec exec) {
  switch (command) {
    case Command::spectrum:
      return SpectrumBlock{single_photon_output(p.eom, p.input, p.n0, p.truncation, p.model), p.n0.value(),
                           order_step(p.eom)};
    case Command::coherent:
      return SpectrumBlock{coherent_output(p.eom, p.input, p.n0, p.alpha, p.truncation, p.model), p.n0.value(),
                           order_step(p.eom)};
    case Command::two_photon: {
      TwoPhotonBlock b;
      b.state = two_photon_output(p.eom, p.n0, p.truncation, p.model);
      b.singular_values = port_entanglement(b.state);
      b.sectors = b.state.sectors();
      return b;
    }
    case Command::mean_field: {
      const auto disp = coherent_output(p.eom, p.input, p.n0, p.alpha, p.truncation, p.model);
      const auto& mf = p.mean_field;
      const auto times = time_grid(mf.t_start, mf.t_stop, mf.samples);
      return MeanFieldBlock{mean_field(disp, mf.port, times, mf.units, exec)};
    }
    case Command::verify: break;
  }
  throw std::logic_error("verify has no per-point result");
}

// CSV ---------------------------------------------------------------------

void csv_spectrum(std::string& out, const RunResult& r) {
  const std::string pre = r.sweep ? "point," : "";
  out += pre + "port,mode,order,real,imag,abs2\n";
  for (std::size_t i = 0; i < r.blocks.size(); ++i) {
    const auto& b = std::get<SpectrumBlock>(r.blocks[i]);
    const std::string point = r.sweep ? std::to_string(i) + "," : "";
    for (Port port : {Port::first, Port::second})
      for (const auto& [mode, amp] : b.amplitudes.port(port)) {
        const auto q = order_of(b, mode);
        out += point + std::to_string(port_number(port)) + "," + std::to_string(mode) + "," +
               (q ? std::to_string(*q) : "") + "," + fmt(amp.real()) + "," + fmt(amp.imag()) + "," +
               fmt(std::norm(amp)) + "\n";
      }
  }
}

void csv_two_photon(std::string& out, const RunResult& r) {
  const std::string pre = r.sweep ? "point," : "";
  auto point = [&](std::size_t i) { return r.sweep ? std::to_string(i) + "," : std::string(); };
  out += "# amplitudes\n" + pre + "port_a,mode_a,port_b,mode_b,real,imag,probability\n";
  for (std::size_t i = 0; i < r.blocks.size(); ++i)
    for (const auto& [key, amp] : std::get<TwoPhotonBlock>(r.blocks[i]).state.entries())
      out += point(i) + std::to_string(port_number(key.first.port)) + "," + std::to_string(key.first.mode) + "," +
             std::to_string(port_number(key.second.port)) + "," + std::to_string(key.second.mode) + "," +
             fmt(amp.real()) + "," + fmt(amp.imag()) + "," + fmt(TwoPhotonState::weight(key, amp)) + "\n";
  out += "# singular_values\n" + pre + "index,value\n";
  for (std::size_t i = 0; i < r.blocks.size(); ++i) {
    const auto& sv = std::get<TwoPhotonBlock>(r.blocks[i]).singular_values;
    for (std::size_t k = 0; k < sv.size(); ++k) out += point(i) + std::to_string(k) + "," + fmt(sv[k]) + "\n";
  }
  out += "# sectors\n" + pre + "sector,probability\n";
  for (std::size_t i = 0; i < r.blocks.size(); ++i) {
    const auto& s = std::get<TwoPhotonBlock>(r.blocks[i]).sectors;
    out += point(i) + "both_port1," + fmt(s.both_port1) + "\n";
    out += point(i) + "split," + fmt(s.split) + "\n";
    out += point(i) + "both_port2," + fmt(s.both_port2) + "\n";
  }
}

void csv_mean_field(std::string& out, const RunResult& r) {
  const std::string pre = r.sweep ? "point," : "";
  auto point = [&](std::size_t i) { return r.sweep ? std::to_string(i) + "," : std::string(); };
  out += "# samples\n" + pre + "t,field\n";
  for (std::size_t i = 0; i < r.blocks.size(); ++i) {
    const auto& s = std::get<MeanFieldBlock>(r.blocks[i]).series;
    for (std::size_t k = 0; k < s.times.size(); ++k) out += point(i) + fmt(s.times[k]) + "," + fmt(s.field[k]) + "\n";
  }
  out += "# phasors\n" + pre + "mode,omega,real,imag\n";
  for (std::size_t i = 0; i < r.blocks.size(); ++i)
    for (const auto& t : std::get<MeanFieldBlock>(r.blocks[i]).series.terms)
      out += point(i) + std::to_string(t.mode) + "," + fmt(t.omega) + "," + fmt(t.phasor.real()) + "," +
             fmt(t.phasor.imag()) + "\n";
}

// JSON --------------------------------------------------------------------

json json_spectrum(const SpectrumBlock& b) {
  json j;
  j["n0"] = b.n0;
  j["order_step"] = b.order_step == 0 ? json(nullptr) : json(b.order_step);
  for (Port port : {Port::first, Port::second}) {
    json rows = json::array();
    for (const auto& [mode, amp] : b.amplitudes.port(port)) {
      const auto q = order_of(b, mode);
      rows.push_back({{"mode", mode}, {"order", q ? json(*q) : json(nullptr)}, {"real", amp.real()},
                      {"imag", amp.imag()}, {"abs2", std::norm(amp)}});
    }
    j[port == Port::first ? "port1" : "port2"] = std::move(rows);
  }
  return j;
}

json json_two_photon(const TwoPhotonBlock& b) {
  json amps = json::array();
  for (const auto& [key, amp] : b.state.entries())
    amps.push_back({{"port_a", port_number(key.first.port)}, {"mode_a", key.first.mode},
                    {"port_b", port_number(key.second.port)}, {"mode_b", key.second.mode}, {"real", amp.real()},
                    {"imag", amp.imag()}, {"probability", TwoPhotonState::weight(key, amp)}});
  return {{"amplitudes", amps},
          {"singular_values", b.singular_values},
          {"sectors",
           {{"both_port1", b.sectors.both_port1}, {"split", b.sectors.split}, {"both_port2", b.sectors.both_port2}}}};
}

json json_mean_field(const MeanFieldBlock& b) {
  json phasors = json::array();
  for (const auto& t : b.series.terms)
    phasors.push_back({{"mode", t.mode}, {"omega", t.omega}, {"real", t.phasor.real()}, {"imag", t.phasor.imag()}});
  return {{"times", b.series.times}, {"field", b.series.field}, {"phasors", phasors}};
}

}  // namespace

ConfigError::ConfigError(Kind kind, std::string path, const std::string& message)
    : std::runtime_error(path.empty() ? message : path + ": " + message), kind_(kind), path_(std::move(path)) {}

std::string_view to_string(Command c) {
  switch (c) {
    case Command::spectrum: return "spectrum";
    case Command::coherent: return "coherent";
    case Command::two_photon: return "two-photon";
    case Command::mean_field: return "mean-field";
    case Command::verify: return "verify";
  }
  return "?";
}

Command parse_command(std::string_view name) {
  for (Command c : {Command::spectrum, Command::coherent, Command::two_photon, Command::mean_field, Command::verify})
    if (to_string(c) == name) return c;
  throw std::invalid_argument("unknown command '" + std::string(name) + "'");
}

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

Model parse_model(std::string_view name) {
  if (name == "exact") return Model::exact;
  if (name == "optical") return Model::optical;
  throw std::invalid_argument("unknown model '" + std::string(name) + "'");
}

RunConfig parse_config(std::string_view text_in, std::optional<Command> command) {
  json doc;
  try {
    doc = json::parse(text_in.begin(), text_in.end());
  } catch (const json::parse_error& e) {
    throw ConfigError(Kind::syntax, "", e.what());
  }
  require_object(doc, "");

  RunConfig cfg;
  if (doc.contains("command")) {
    const auto c = named("command", [&] { return parse_command(text(doc, "", "command")); });
    if (command && *command != c)
      schema_error("command", "document is for '" + std::string(to_string(c)) + "', not '" +
                                  std::string(to_string(*command)) + "'");
    command = c;
  }
  if (!command) schema_error("command", "missing field");
  cfg.command = *command;
  if (doc.contains("format")) cfg.format = named("format", [&] { return parse_format(text(doc, "", "format")); });

  if (cfg.command == Command::verify) {
    allow_keys(doc, "", {"command", "format", "tolerance_scale"});
    cfg.tolerance_scale = number_in(doc, "", "tolerance_scale", 1.0, 1.0, 1e6);
    return cfg;
  }

  allow_keys(doc, "", {"command", "format", "model", "preset", "splitter_in", "splitter_out", "pm1", "pm2", "drive",
                       "input", "truncation", "mean_field", "sweep"});
  json base = doc;
  base.erase("sweep");
  cfg.base = parse_point(base, "", cfg.command);

  if (doc.contains("sweep")) {
    const auto& sweep = doc["sweep"];
    if (!sweep.is_array() || sweep.empty()) schema_error("sweep", "expected a non-empty array of overrides");
    for (std::size_t i = 0; i < sweep.size(); ++i) {
      const auto path = indexed("sweep", i);
      require_object(sweep[i], path);
      for (auto key : {"command", "format", "sweep"})
        if (sweep[i].contains(key)) schema_error(join(path, key), "cannot be overridden per point");
      json merged = base;
      merged.merge_patch(sweep[i]);
      cfg.sweep.push_back(parse_point(merged, path, cfg.command));
    }
  }
  return cfg;
}

bool RunResult::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

RunResult run(const RunConfig& cfg, Exec exec) {
  RunResult res;
  res.command = cfg.command;
  if (cfg.command == Command::verify) {
    res.checks = run_verification(cfg.tolerance_scale, exec);
    return res;
  }
  if (cfg.sweep.empty()) {
    res.blocks.push_back(evaluate(cfg.base, cfg.command, exec));
    return res;
  }

  res.sweep = true;
  const auto n = static_cast<std::int64_t>(cfg.sweep.size());
  res.blocks.resize(cfg.sweep.size());
  std::vector<std::exception_ptr> errors(cfg.sweep.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      res.blocks[static_cast<std::size_t>(i)] = evaluate(cfg.sweep[static_cast<std::size_t>(i)], cfg.command, Exec::serial);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return res;
}

std::string emit(const RunResult& r, Format format) {
  if (format == Format::json) {
    json doc;
    doc["command"] = std::string(to_string(r.command));
    if (r.command == Command::verify) {
      json checks = json::array();
      for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      doc["checks"] = checks;
      doc["passed"] = r.passed();
    } else {
      json points = json::array();
      for (const auto& b : r.blocks)
        points.push_back(std::visit(
            [](const auto& blk) -> json {
              using T = std::decay_t<decltype(blk)>;
              if constexpr (std::is_same_v<T, SpectrumBlock>) return json_spectrum(blk);
              else if constexpr (std::is_same_v<T, TwoPhotonBlock>) return json_two_photon(blk);
              else return json_mean_field(blk);
            },
            b));
      doc["points"] = points;
    }
    return doc.dump(2) + "\n";
  }

  std::string out;
  switch (r.command) {
    case Command::spectrum:
    case Command::coherent: csv_spectrum(out, r); break;
    case Command::two_photon: csv_two_photon(out, r); break;
    case Command::mean_field: csv_mean_field(out, r); break;
    case Command::verify:
      out += "check,passed,detail\n";
      for (const auto& c : r.checks) out += c.name + "," + (c.passed ? "true" : "false") + "," + c.detail + "\n";
      break;
  }
  return out;
}

}  // namespace eomq

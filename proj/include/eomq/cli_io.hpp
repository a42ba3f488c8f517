#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "eomq/eom_engine.hpp"
#include "eomq/mean_field.hpp"
#include "eomq/two_photon.hpp"
#include "eomq/verify.hpp"

namespace eomq {

enum class Command { spectrum, coherent, two_photon, mean_field, verify };
enum class StateKind { photon, coherent, two_photon };
enum class Format { csv, json };

std::string_view to_string(Command c);
Command parse_command(std::string_view name);
Format parse_format(std::string_view name);
Model parse_model(std::string_view name);

class ConfigError : public std::runtime_error {
 public:
  enum class Kind { syntax, schema, physics };

  ConfigError(Kind kind, std::string path, const std::string& message);

  Kind kind() const { return kind_; }
  // Field path such as "pm1.index" or "sweep[2].input.mode"; empty for syntax errors.
  const std::string& path() const { return path_; }

 private:
  Kind kind_;
  std::string path_;
};

struct MeanFieldSpec {
  FieldUnits units;
  Port port = Port::first;
  double t_start = 0.0;
  double t_stop = 1.0;
  int samples = 101;
};

// Everything needed for one engine evaluation.
struct RunPoint {
  EOMConfig eom;
  Port input = Port::first;
  ModeIndex n0{1};
  StateKind state = StateKind::photon;
  cplx alpha{1.0, 0.0};
  Model model = Model::exact;
  Truncation truncation;
  MeanFieldSpec mean_field;
};

struct RunConfig {
  Command command = Command::spectrum;
  Format format = Format::csv;
  RunPoint base;
  // Non-empty when the document carries a sweep; one point per override, in order.
  std::vector<RunPoint> sweep;
  double tolerance_scale = 1.0;
};

/// Parses and validates a JSON configuration document. `command` is the
/// command chosen on the command line; a "command" field in the document
/// must agree with it. When no command is given the document must name one.
RunConfig parse_config(std::string_view text, std::optional<Command> command = std::nullopt);

struct SpectrumBlock {
  TwoPortSpectrum amplitudes;
  std::int64_t n0 = 1;
  std::int64_t order_step = 0;  // tone used for the order column, 0 when undefined
};

struct TwoPhotonBlock {
  TwoPhotonState state;
  std::vector<double> singular_values;
  SectorProbabilities sectors;
};

struct MeanFieldBlock {
  MeanFieldSeries series;
};

using ResultBlock = std::variant<SpectrumBlock, TwoPhotonBlock, MeanFieldBlock>;

struct RunResult {
  Command command = Command::spectrum;
  bool sweep = false;
  std::vector<ResultBlock> blocks;   // one per evaluated point
  std::vector<CheckResult> checks;   // verify only

  bool passed() const;
};

RunResult run(const RunConfig& cfg, Exec exec = Exec::parallel);

std::string emit(const RunResult& result, Format format);

// Exit status of the command line tool.
enum ExitCode : int { kExitOk = 0, kExitInvalid = 1, kExitIo = 2 };

}  // namespace eomq

#pragma once

// RunConfig: everything one CLI invocation needs, round-trippable through a
// JSON config file. Command-line flags override file values.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tlg/grid.hpp"
#include "tlg/harness/figures.hpp"
#include "tlg/harness/gof.hpp"
#include "tlg/harness/theorems.hpp"
#include "tlg/serialization.hpp"
#include "tlg/system.hpp"

namespace tlg {

enum class Command { figure, theorem, gof, eval, compare };

inline std::string_view to_string(Command c) {
  switch (c) {
    case Command::figure: return "figure";
    case Command::theorem: return "theorem";
    case Command::gof: return "gof";
    case Command::eval: return "eval";
    case Command::compare: return "compare";
  }
  return "?";
}

inline Command command_from_string(std::string_view s) {
  for (Command c : {Command::figure, Command::theorem, Command::gof, Command::eval,
                    Command::compare}) {
    if (to_string(c) == s) return c;
  }
  throw std::invalid_argument("unknown command '" + std::string(s) + "'");
}

struct RunConfig {
  Command command = Command::figure;
  std::optional<FigureId> figure_id;
  /// Empty with command == theorem means every suite.
  std::optional<TheoremId> theorem_id;
  std::size_t trials = 200;
  std::optional<std::size_t> n_components;
  std::uint64_t seed = 42;
  GridOptions grid;
  std::optional<std::string> output_path;

  /// gof: systems to simulate; eval: systems to evaluate; compare: exactly [X, Y].
  std::vector<SystemSpec> systems;
  std::vector<double> x;
  std::size_t n_samples = 100000;

  void validate() const {
    grid.validate();
    switch (command) {
      case Command::figure:
        if (!figure_id) throw std::invalid_argument("figure command needs a figure id");
        break;
      case Command::theorem:
        break;
      case Command::gof:
        if (n_samples < kMinGofSamples) {
          throw std::invalid_argument("gof needs at least 100 samples");
        }
        break;
      case Command::eval:
        if (systems.empty()) throw std::invalid_argument("eval needs at least one system");
        if (x.empty()) throw std::invalid_argument("eval needs at least one x value");
        break;
      case Command::compare:
        if (systems.size() != 2) throw std::invalid_argument("compare needs exactly two systems");
        break;
    }
  }
};

inline void to_json(json& j, const RunConfig& c) {
  j = json{{"command", std::string(to_string(c.command))},
           {"trials", c.trials},
           {"seed", c.seed},
           {"grid", c.grid},
           {"systems", c.systems},
           {"x", c.x},
           {"n_samples", c.n_samples}};
  j["figure_id"] = c.figure_id ? json(std::string(to_string(*c.figure_id))) : json(nullptr);
  j["theorem_id"] = c.theorem_id ? json(std::string(to_string(*c.theorem_id))) : json(nullptr);
  j["n_components"] = c.n_components ? json(*c.n_components) : json(nullptr);
  j["output_path"] = c.output_path ? json(*c.output_path) : json(nullptr);
}

inline void from_json(const json& j, RunConfig& c) {
  RunConfig d;
  c.command = command_from_string(j.at("command").get<std::string>());
  auto opt_string = [&j](const char* key) -> std::optional<std::string> {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<std::string>();
  };
  if (auto s = opt_string("figure_id")) c.figure_id = figure_id_from_string(*s);
  else c.figure_id.reset();
  if (auto s = opt_string("theorem_id")) c.theorem_id = theorem_id_from_string(*s);
  else c.theorem_id.reset();
  c.output_path = opt_string("output_path");
  c.trials = j.value("trials", d.trials);
  c.seed = j.value("seed", d.seed);
  if (j.contains("n_components") && !j.at("n_components").is_null()) {
    c.n_components = j.at("n_components").get<std::size_t>();
  } else {
    c.n_components.reset();
  }
  c.grid = j.contains("grid") ? j.at("grid").get<GridOptions>() : d.grid;
  c.systems = j.value("systems", std::vector<SystemSpec>{});
  c.x = j.value("x", std::vector<double>{});
  c.n_samples = j.value("n_samples", d.n_samples);
}

}  // namespace tlg

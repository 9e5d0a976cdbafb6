// Command-line front end: figure presets, quantum convention calibration and
// game-B analysis.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "parrondo/calibration.hpp"
#include "parrondo/scenario.hpp"

namespace {

constexpr int kUsage = 2;
constexpr int kValidation = 3;
constexpr int kIo = 4;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string quote_command(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += i == 0 ? std::string("parrondo") : std::string(argv[i]);
  }
  return s;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << body;
  if (!out.flush()) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flashing-ratchet game simulator (classical and quantum walks)"};
  app.set_version_flag("--version", parrondo::kToolVersion);
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run a figure preset and write CSV");
  std::string preset;
  std::vector<std::string> sets;
  std::string out_dir = ".";
  std::string config;
  std::uint64_t seed = 42;
  std::string phase_order;
  std::string format = "csv";
  run->add_option("--preset", preset, "Preset name")->required();
  run->add_option("--set", sets, "Override key=value (repeatable)");
  run->add_option("--out", out_dir, "Output directory");
  run->add_option("--config", config, "key=value file loaded before --set");
  run->add_option("--seed", seed, "Monte Carlo seed");
  run->add_option("--phase-order", phase_order, "Quantum phase placement")
      ->check(CLI::IsMember({"pre", "mid", "post"}));
  run->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv"}));

  auto* calibrate =
      app.add_subcommand("calibrate", "Calibrate quantum step conventions");
  std::string calib_out;
  calibrate->add_option("--out", calib_out, "Also write the report here");

  auto* analyze = app.add_subcommand("analyze", "Closed-form analysis of game B");
  double p0 = 0.1;
  double p1 = 0.75;
  analyze->add_option("--p0", p0, "Heads probability of coin B0");
  analyze->add_option("--p1", p1, "Heads probability of coin B1");

  app.add_subcommand("presets", "List presets and their override keys");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*run) {
      parrondo::Overrides overrides;
      if (!config.empty()) {
        std::ifstream in(config);
        if (!in) throw IoError("cannot read config '" + config + "'");
        overrides = parrondo::parse_config(in);
      }
      for (const auto& kv : sets) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
          std::cerr << "error: --set expects key=value, got '" << kv << "'\n";
          return kUsage;
        }
        overrides[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
      parrondo::RunOptions options;
      options.seed = seed;
      if (!phase_order.empty()) {
        options.phase_order = parrondo::parse_phase_order(phase_order);
      }
      options.command = quote_command(argc, argv);

      const auto tables = parrondo::run_preset(preset, overrides, options);
      const std::filesystem::path dir(out_dir);
      std::error_code ec;
      std::filesystem::create_directories(dir, ec);
      if (!std::filesystem::is_directory(dir)) {
        throw IoError("output directory '" + out_dir + "' is unavailable");
      }
      for (const auto& [name, table] : tables) {
        std::ostringstream body;
        parrondo::write_csv(body, table);
        const auto path = dir / (preset + "_" + name + ".csv");
        write_file(path, body.str());
        std::cout << path.string() << '\n';
      }
      return 0;
    }
    if (*calibrate) {
      const auto report = parrondo::calibrate_phase_order();
      const auto text = report.text();
      std::cout << text;
      if (!calib_out.empty()) write_file(calib_out, text);
      return 0;
    }
    if (*analyze) {
      std::cout << parrondo::analyze(parrondo::GameBParams{p0, p1});
      return 0;
    }
    for (const auto& name : parrondo::preset_names()) {
      std::cout << name << ':';
      for (const auto& k : parrondo::preset_keys(name)) std::cout << ' ' << k;
      std::cout << '\n';
    }
    return 0;
  } catch (const parrondo::UnknownPreset& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const parrondo::UnknownOverrideKey& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

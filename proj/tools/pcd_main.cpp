#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pcd/report.hpp"

namespace {

// Exit codes: 0 success, 1 command-line usage error (CLI11), 2 config/input
// error, 3 constraint violation, 4 empty search result.
constexpr int kExitConfigError = 2;
constexpr int kExitConstraintViolation = 3;
constexpr int kExitEmptyResult = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pcd::ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-" || path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw pcd::ConfigError("cannot open output file: " + path);
  out << content;
  if (!out) throw pcd::ConfigError("failed writing output file: " + path);
}

pcd::OutputFormat parse_format(const std::string& name) {
  if (name == "json") return pcd::OutputFormat::json;
  if (name == "csv") return pcd::OutputFormat::csv;
  throw pcd::ConfigError("unknown format: " + name);
}

struct CommonOpts {
  std::string config_path;
  std::string out_path = "-";
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path, "input config file (JSON)")->required();
  cmd->add_option("--out", opts.out_path, "output path, or - for stdout");
  cmd->add_option("--format", opts.format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"3K-H-V planetary-cycloidal gear train analysis toolkit"};
  app.require_subcommand(1);

  CommonOpts analyze_opts, sweep_opts, search_opts;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "ratios, efficiencies and optional power flow for one train");
  add_common(analyze, analyze_opts);
  CLI::App* sweep =
      app.add_subcommand("sweep", "efficiency-versus-ratio curve families");
  add_common(sweep, sweep_opts);
  CLI::App* search =
      app.add_subcommand("search", "exhaustive tooth-count design search");
  add_common(search, search_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      const auto cfg = pcd::parse_analysis_config(read_file(analyze_opts.config_path));
      write_output(analyze_opts.out_path,
                   pcd::render_analysis(cfg, parse_format(analyze_opts.format)));
      return 0;
    }
    if (sweep->parsed()) {
      const auto spec = pcd::parse_sweep_spec(read_file(sweep_opts.config_path));
      write_output(sweep_opts.out_path,
                   pcd::render_sweep(pcd::run_sweep(spec), parse_format(sweep_opts.format)));
      return 0;
    }
    const auto query = pcd::parse_design_query(read_file(search_opts.config_path));
    const auto candidates = pcd::enumerate_designs(query);
    write_output(search_opts.out_path,
                 pcd::render_search(query, candidates, parse_format(search_opts.format)));
    if (candidates.empty()) {
      std::cerr << "search: no candidate within bounds and tolerance\n";
      return kExitEmptyResult;
    }
    return 0;
  } catch (const pcd::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConstraintViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
}

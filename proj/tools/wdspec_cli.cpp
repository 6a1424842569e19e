#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <wdspec/cli.hpp>

int main(int argc, char** argv) {
  CLI::App app{"Pseudospectral solver and verification lab for weakly dissipative shallow-water equations"};
  app.require_subcommand(1);
  std::string config_path;
  std::string output_dir;
  for (const auto& name : wdspec::commands()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "configuration file")->required();
    sub->add_option("--output-dir", output_dir, "directory for CSV and JSON output (overrides output_dir)");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : wdspec::kExitConfig;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  std::ifstream in(config_path, std::ios::binary);
  if (!in) {
    std::cerr << wdspec::detail::error_object("ConfigError", "cannot read config file " + config_path).dump()
              << "\n";
    return wdspec::kExitConfig;
  }
  std::ostringstream text;
  text << in.rdbuf();

  wdspec::RunConfig config;
  try {
    config = wdspec::parse_config(text.str());
    config.command = command;
    if (!output_dir.empty()) config.output_dir = output_dir;
    wdspec::validate(config);
  } catch (const wdspec::ConfigError& e) {
    std::cerr << wdspec::detail::error_object(e.kind(), e.what(), e.key()).dump() << "\n";
    return wdspec::kExitConfig;
  }
  return wdspec::run(config);
}

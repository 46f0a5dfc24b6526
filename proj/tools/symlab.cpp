#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "symlab/cli/config.hpp"
#include "symlab/cli/demos.hpp"
#include "symlab/cli/svg.hpp"
#include "symlab/sets/set_literal.hpp"

int main(int argc, char** argv) {
  CLI::App app{"symlab: iterated set-symmetrization experiments"};
  app.require_subcommand(1);

  std::string config_path;
  CLI::App* run = app.add_subcommand("run", "run an experiment described by a config file");
  run->add_option("config", config_path, "config file (key = value, or JSON)")->required();

  std::string demo_name;
  CLI::App* demo = app.add_subcommand("demo", "run a built-in reproduction");
  std::string names;
  for (const auto& n : symlab::demo_names()) names += (names.empty() ? "" : ", ") + n;
  demo->add_option("name", demo_name, "one of: " + names)->required();

  std::string set_path, out_path;
  int slice = std::numeric_limits<int>::min();
  CLI::App* render = app.add_subcommand("render", "render a set file to SVG");
  render->add_option("set", set_path, "set literal file")->required();
  render->add_option("out", out_path, "output .svg path")->required();
  render->add_option("--slice", slice, "z-slice index for 3-D grids");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      symlab::ExperimentConfig cfg = symlab::load_experiment_config(config_path);
      return symlab::run_experiment(cfg, std::cout);
    }
    if (*demo) {
      int rc = symlab::run_demo(demo_name, std::cout);
      if (rc == 1) return 1;  // unknown name is a usage error
      return rc;
    }
    if (*render) {
      std::ifstream in(set_path);
      if (!in) {
        std::cerr << "cannot open set file: " << set_path << "\n";
        return 1;
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      symlab::AnySet set = symlab::parse_set_literal(buf.str());
      symlab::write_svg_file(set, out_path, slice);
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

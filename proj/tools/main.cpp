#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "actlr/harness.hpp"

namespace {

int cmd_gen_synth(long n, int d, std::uint64_t seed, const std::string& out) {
  auto [data, oracle] = actlr::generate_synthetic(n, d, seed);
  std::vector<int> labels(static_cast<std::size_t>(data->size()));
  for (int i = 0; i < data->size(); ++i) {
    labels[static_cast<std::size_t>(i)] = oracle.query(i);
  }
  actlr::write_dataset_csv(out, *data, &labels);
  std::cout << "wrote " << data->size() << " points of dimension "
            << data->dim() << " to " << out << "\n";
  return 0;
}

int cmd_summarize(const std::string& curves, const std::string& target) {
  std::size_t eq = target.find('=');
  if (eq == std::string::npos) {
    std::cerr << "summarize: --target must look like metric=value\n";
    return 2;
  }
  std::string metric = target.substr(0, eq);
  double value = std::stod(target.substr(eq + 1));
  std::cout << actlr::summarize_curves(curves, metric, value);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"active logistic regression experiment harness"};
  app.require_subcommand(1);

  long n = 1000;
  int d = 10;
  std::uint64_t seed = 1;
  std::string out = "synth.csv";
  CLI::App* gen = app.add_subcommand("gen-synth",
                                     "generate a synthetic pool as CSV");
  gen->add_option("--n", n, "number of points")->required();
  gen->add_option("--d", d, "hypercube dimension (a constant-1 column is appended)")
      ->required();
  gen->add_option("--seed", seed, "generator seed")->required();
  gen->add_option("--out", out, "output CSV path")->required();

  std::string config_path;
  CLI::App* run = app.add_subcommand("run", "run a configured experiment");
  run->add_option("--config", config_path, "config file path")->required();

  std::string curves_path;
  std::string target;
  CLI::App* summarize =
      app.add_subcommand("summarize", "median labels to reach a metric target");
  summarize->add_option("--curves", curves_path, "curves.csv path")->required();
  summarize->add_option("--target", target, "metric=value, e.g. train_acc=0.8")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen_synth(n, d, seed, out);
    if (run->parsed()) {
      return actlr::run_experiment(actlr::parse_config_file(config_path));
    }
    if (summarize->parsed()) return cmd_summarize(curves_path, target);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "wiser/checks.hpp"
#include "wiser/expr.hpp"
#include "wiser/grid.hpp"
#include "wiser/report.hpp"

namespace {

constexpr int kFailure = 1;
constexpr int kInputError = 2;

struct GridArgs {
  std::string mode;
  std::uint64_t imax = 10;
  std::uint64_t jmax = 10;
  std::string out;
  std::string model;
  std::string channel;
  std::string prior;
  std::string first;
  std::string second;
};

int run_grid(const GridArgs& a) {
  wiser::GridSpec spec = wiser::medical_grid(wiser::parse_grid_mode(a.mode), a.imax, a.jmax);
  if (!a.model.empty()) {
    const wiser::Model m = wiser::Model::load(a.model);
    if (a.channel.empty() || a.prior.empty())
      throw wiser::ParseError(1, 1, "--model needs --channel and --prior");
    spec.channel = m.channel(a.channel);
    spec.prior = m.distribution(a.prior);
    const auto& cod = spec.channel.cod();
    if (cod.size() < 2 && (a.first.empty() || a.second.empty()))
      throw wiser::ParseError(1, 1, "codomain has fewer than two outcomes; pass --first and --second");
    spec.first = a.first.empty() ? cod.label(0) : a.first;
    spec.second = a.second.empty() ? cod.label(1) : a.second;
  } else {
    if (!a.first.empty()) spec.first = a.first;
    if (!a.second.empty()) spec.second = a.second;
  }
  const std::string csv = wiser::grid_csv(wiser::compute_grid(spec));
  if (a.out == "-") {
    std::cout << csv;
    return 0;
  }
  std::ofstream f(a.out, std::ios::binary);
  if (!f) wiser::fail(wiser::ErrorKind::IOFailure, "cannot write " + a.out);
  f << csv;
  if (!f) wiser::fail(wiser::ErrorKind::IOFailure, "write to " + a.out + " failed");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Validity and updating of discrete distributions under multiple pieces of evidence"};
  app.require_subcommand(1);

  auto* report = app.add_subcommand("report", "Print a built-in worked example");
  std::string which;
  report->add_option("example", which, "Example name")->required()->check(CLI::IsMember({"medical"}));

  GridArgs ga;
  auto* grid = app.add_subcommand("grid", "Write an i|first> + j|second> evidence grid as CSV");
  grid->add_option("--mode", ga.mode, "Quantity per cell")->required()->check(CLI::IsMember(wiser::grid_mode_names()));
  grid->add_option("--imax", ga.imax, "Largest i")->check(CLI::PositiveNumber);
  grid->add_option("--jmax", ga.jmax, "Largest j")->check(CLI::PositiveNumber);
  grid->add_option("--out", ga.out, "Output CSV path, - for stdout")->required();
  grid->add_option("--model", ga.model, "Model file replacing the medical example");
  grid->add_option("--channel", ga.channel, "Channel id in the model");
  grid->add_option("--prior", ga.prior, "Prior distribution id in the model");
  grid->add_option("--first", ga.first, "Codomain element counted by i");
  grid->add_option("--second", ga.second, "Codomain element counted by j");

  std::string suite = "all";
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  bool list = false;
  auto* check = app.add_subcommand("check", "Run a seeded property suite");
  check->add_option("--suite", suite, "Suite name");
  check->add_option("--trials", trials, "Trials per property")->check(CLI::PositiveNumber);
  check->add_option("--seed", seed, "Seed");
  check->add_flag("--list", list, "List suite names and exit");

  std::string model_path, expr;
  auto* eval = app.add_subcommand("eval", "Evaluate an operation on a model file");
  eval->add_option("--model", model_path, "Model JSON file")->required();
  eval->add_option("--expr", expr, "Expression such as validity(prior, pt)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kInputError;
  }

  try {
    if (*report) {
      std::cout << wiser::medical_report();
      return 0;
    }
    if (*grid) return run_grid(ga);
    if (*check) {
      if (list) {
        for (const auto& n : wiser::checks::suite_names()) std::cout << n << "\n";
        return 0;
      }
      const auto r = wiser::checks::run_suite(suite, trials, seed);
      std::cout << wiser::checks::format(r);
      return r.ok() ? 0 : kFailure;
    }
    if (*eval) {
      const wiser::Model m = wiser::Model::load(model_path);
      std::cout << wiser::render(wiser::evaluate(m, expr)) << "\n";
      return 0;
    }
  } catch (const wiser::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}

// qlogic: command-line checks over the bundled finite models.
//
// Exit status: 0 when every expected verdict is met, 1 when a check fails or
// the model breaks a prerequisite, 2 on usage, input or size errors.

#include <qlogic/report.hpp>
#include <qlogic/zoo.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace qlogic;

struct Options {
  bool json = false;
  std::uint64_t seed = 0;
  std::size_t max_points = 64;
  std::vector<std::string> expect;
};

std::map<std::string, bool> parse_expectations(const std::vector<std::string>& items) {
  std::map<std::string, bool> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    const auto key = item.substr(0, eq);
    const auto value = eq == std::string::npos ? std::string("true") : item.substr(eq + 1);
    if (key.empty() || (value != "true" && value != "false")) {
      throw Error(ErrorCode::invalid_argument, "--expect takes id=true or id=false, got " + item);
    }
    out[key] = value == "true";
  }
  return out;
}

int emit(RunReport& report, const Options& opt, std::chrono::steady_clock::time_point start) {
  report.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (opt.json) {
    std::cout << report.to_json().dump(2) << '\n';
  } else {
    std::cout << report.to_text();
  }
  return report.all_met() ? 0 : 1;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse_error:
    case ErrorCode::too_large:
    case ErrorCode::invalid_argument:
    case ErrorCode::dimension_mismatch:
    case ErrorCode::dimension_too_small:
    case ErrorCode::dimension_too_large:
    case ErrorCode::unknown_experiment:
    case ErrorCode::invalid_model:
      return 2;
    default:
      // The model itself fails a law the command depends on.
      return 1;
  }
}

int list_zoo(const Options& opt) {
  const auto zoo = model_zoo();
  if (opt.json) {
    Json out = Json::array();
    for (const auto& e : zoo) {
      out.push_back({{"id", e.id}, {"kind", to_string(e.kind)}, {"description", e.description}, {"expected", e.expected}});
    }
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  for (const auto& e : zoo) {
    std::cout << e.id << std::string(e.id.size() < 22 ? 22 - e.id.size() : 1, ' ') << to_string(e.kind)
              << std::string(to_string(e.kind).size() < 15 ? 15 - to_string(e.kind).size() : 1, ' ') << e.description
              << '\n';
  }
  return 0;
}

int export_zoo(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& e : model_zoo()) {
    std::ofstream out(dir / (e.id + ".json"));
    if (!out) throw Error(ErrorCode::parse_error, (dir / (e.id + ".json")).string() + ": cannot write");
    out << e.document().dump(2) << '\n';
  }
  std::cout << "wrote " << model_zoo().size() << " models to " << dir.string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite quantum-axiomatic model checker"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Print the report as JSON");
  app.add_option("--seed", opt.seed, "Seed for sampled checks");
  app.add_option("--max-points", opt.max_points, "Largest product state space sepprod will build");
  app.add_option("--expect", opt.expect, "Expected verdict, id=true|false (repeatable)");

  std::string path, path2;
  auto* check = app.add_subcommand("check", "Lattice axioms and Axioms 1-5 on a lattice or state-property system");
  check->add_option("file", path, "Model JSON")->required();
  auto* decompose = app.add_subcommand("decompose", "Classical part, nonclassical components, representation");
  decompose->add_option("file", path, "State-property system JSON")->required();
  auto* sepprod = app.add_subcommand("sepprod", "Separated product of two systems and the no-go verdict");
  sepprod->add_option("first", path, "State-property system JSON")->required();
  sepprod->add_option("second", path2, "State-property system JSON")->required();
  std::string product_out;
  sepprod->add_option("--product-out", product_out, "Also write the product system as JSON");
  auto* separation = app.add_subcommand("separation", "Whether joint experiments are separated");
  separation->add_option("file", path, "Outcome model JSON")->required();
  std::size_t dim1 = 3, dim2 = 3;
  CouplingSampling sampling;
  bool broken = false;
  auto* coupling = app.add_subcommand("coupling", "Coupling conditions for the tensor embedding");
  coupling->add_option("--dim1", dim1, "Dimension of the first factor")->capture_default_str();
  coupling->add_option("--dim2", dim2, "Dimension of the second factor")->capture_default_str();
  coupling->add_option("--trials", sampling.trials, "Sampled instances per condition")->capture_default_str();
  coupling->add_option("--ray-pairs", sampling.ray_pairs, "Sampled ray pairs")->capture_default_str();
  coupling->add_flag("--broken", broken, "Replace h1 by its order-reversed variant");
  std::string export_dir;
  auto* zoo = app.add_subcommand("zoo", "List the bundled models");
  zoo->add_option("--export", export_dir, "Write every model as JSON into this directory");
  for (auto* sub : {check, decompose, sepprod, separation, coupling, zoo}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    const auto expectations = parse_expectations(opt.expect);
    RunReport report;
    if (*check) {
      report = run_check(read_json_file(path), path);
    } else if (*decompose) {
      report = run_decompose(read_json_file(path), path);
    } else if (*sepprod) {
      const auto doc1 = read_json_file(path);
      const auto doc2 = read_json_file(path2);
      report = run_sepprod(doc1, doc2, path, path2, opt.max_points);
      if (!product_out.empty()) {
        const auto product = separated_product(sps_from_json(doc1), sps_from_json(doc2), opt.max_points);
        std::ofstream out(product_out);
        if (!out) throw Error(ErrorCode::parse_error, product_out + ": cannot write");
        out << to_json(product.system).dump(2) << '\n';
      }
    } else if (*separation) {
      report = run_separation(read_json_file(path), path);
    } else if (*coupling) {
      sampling.seed = opt.seed;
      report = run_coupling(dim1, dim2, sampling, broken);
    } else {
      return export_dir.empty() ? list_zoo(opt) : export_zoo(export_dir);
    }
    apply_expectations(report, expectations, true);
    return emit(report, opt, start);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

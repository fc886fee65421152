#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gkz/json_io.hpp"

namespace {

gkz::RatVec parse_rat_list(const std::string& s) {
  gkz::RatVec out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(gkz::parse_rat(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Nilsson-series analysis of A-hypergeometric systems"};
  std::string input_file;
  std::string subcommand = "analyze";
  std::string format = "json";
  std::string weight_override, beta_override, beta0_override, truncate_override;
  long search_bound = -1;

  app.add_option("--input", input_file, "problem file (JSON)")->required();
  app.add_option("--subcommand", subcommand,
                 "analyze|series|triangulate|converge|irregularity|oracle")
      ->check(CLI::IsMember(
          {"analyze", "series", "triangulate", "converge", "irregularity",
           "oracle"}));
  app.add_option("--format", format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--weight", weight_override, "comma-separated rationals");
  app.add_option("--beta", beta_override, "comma-separated rationals");
  app.add_option("--beta0", beta0_override, "rational");
  app.add_option("--truncate", truncate_override, "rational bound T");
  app.add_option("--search-bound", search_bound, "integer box bound K");
  CLI11_PARSE(app, argc, argv);

  try {
    std::ifstream in(input_file);
    if (!in) {
      std::cerr << "error: cannot open " << input_file << "\n";
      return 1;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    gkz::ProblemSpec spec = gkz::parse_problem(buf.str());
    if (!weight_override.empty()) spec.w = parse_rat_list(weight_override);
    if (!beta_override.empty()) spec.beta = parse_rat_list(beta_override);
    if (!beta0_override.empty()) spec.beta0 = gkz::parse_rat(beta0_override);
    if (!truncate_override.empty()) spec.T = gkz::parse_rat(truncate_override);
    if (search_bound > 0) spec.K = search_bound;

    gkz::Stage stage = gkz::Stage::Analyze;
    if (subcommand == "series") stage = gkz::Stage::Series;
    else if (subcommand == "triangulate") stage = gkz::Stage::Triangulate;
    else if (subcommand == "converge") stage = gkz::Stage::Converge;
    else if (subcommand == "irregularity") stage = gkz::Stage::Irregularity;
    else if (subcommand == "oracle") stage = gkz::Stage::Oracle;

    gkz::AnalysisReport rep = gkz::run_subcommand(spec, stage);
    if (format == "json")
      std::cout << gkz::report_to_json(rep);
    else
      std::cout << gkz::report_to_text(rep);
    return rep.exit_status();
  } catch (const gkz::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

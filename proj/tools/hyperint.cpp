#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "hyperint/cli.hpp"

using namespace hyperint::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact integration of closed hyperexponential 1-forms"};
  Request defaults;
  std::string format = "text", batch;
  std::vector<std::string> inputs;
  app.add_option("--vars", defaults.vars, "number of variables (default: inferred)")->check(CLI::Range(1, 9));
  app.add_option("--max-num-degree", defaults.opt.max_num_degree, "numerator degree bound")->check(CLI::Range(1, 1000));
  app.add_option("--max-den-power", defaults.opt.max_den_power, "extra pole order tried along level sets")->check(CLI::Range(0, 100));
  app.add_option("--field-cap", defaults.opt.field_cap, "largest number field degree")->check(CLI::Range(1, 1000));
  app.add_option("--homography-bound", defaults.opt.homography_bound, "search range of the homography")->check(CLI::Range(0, 1000));
  app.add_option("--with", defaults.declarations, "algebraic number declaration, e.g. 'alpha: t^2-2' (repeatable)")
      ->allow_extra_args(false);
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--batch", batch, "file with one request per line");
  app.add_option("command", defaults.command, "rational-integrate | hyperexp-decompose | liouville | cohomology | linearize");
  app.add_option("inputs", inputs, "expressions");
  CLI11_PARSE(app, argc, argv);

  std::vector<Request> requests;
  if (!batch.empty()) {
    std::ifstream in(batch);
    if (!in) {
      std::cerr << "cannot open " << batch << "\n";
      return 2;
    }
    try {
      requests = parse_batch(in, defaults);
    } catch (const std::exception& e) {
      std::cerr << batch << ": " << e.what() << "\n";
      return 2;
    }
  } else {
    if (defaults.command.empty()) {
      std::cerr << app.help();
      return 2;
    }
    defaults.inputs = inputs;
    requests.push_back(defaults);
  }

  std::vector<Report> reports;
  for (const auto& req : requests) {
    reports.push_back(run(req));
    std::cerr << req.command << ": " << std::fixed << std::setprecision(3) << reports.back().seconds << " s\n";
  }
  if (format == "json") {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& r : reports) out.push_back(render_json(r));
    std::cout << (batch.empty() ? out[0] : out).dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) std::cout << (i ? "\n" : "") << render_text(reports[i]);
  }
  return exit_code(reports);
}

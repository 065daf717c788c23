#include "plucker/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  namespace cli = plucker::cli;
  CLI::App app{"Plücker-type counts of curves from their Newton polygons"};
  cli::Request req;
  std::string out_path;
  app.add_option("command", req.command, "report | dual | assumptions | verify | implicitize | render")
      ->required()
      ->check(CLI::IsMember({"report", "dual", "assumptions", "verify", "implicitize", "render"}));
  app.add_option("--polygon", req.polygon_source, "JSON file with [[x,y],...], '-' for stdin, or inline JSON")
      ->required();
  app.add_option("--seed", req.seed, "oracle seed");
  app.add_option("--coeff-bound", req.coeff_bound, "bound on sampled coefficients")->check(CLI::PositiveNumber);
  app.add_option("--format", req.format, "json | text | svg")->check(CLI::IsMember({"json", "text", "svg"}));
  app.add_option("--out", out_path, "write output here instead of stdout");
  app.add_flag("--advisory", req.advisory, "run the oracle even when assumptions are not verified");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kInputError;
  }

  const cli::Response res = cli::run(req);
  if (out_path.empty()) {
    std::cout << res.output;
  } else {
    std::ofstream out(out_path);
    if (!(out << res.output)) {
      std::cerr << "cannot write " << out_path << '\n';
      return cli::kInputError;
    }
  }
  return res.exit_code;
}

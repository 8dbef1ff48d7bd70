#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "hyperarith/core/error.hpp"

namespace {

int emit(const hyperarith::cli::Outcome& o, const std::string& json_path, bool strict) {
  std::cout << o.text;
  if (!json_path.empty()) {
    const std::string body = o.report.dump(2) + "\n";
    if (json_path == "-") {
      std::cout << body;
    } else {
      std::ofstream out(json_path, std::ios::binary);
      if (!out || !(out << body)) throw hyperarith::Error("cannot write '" + json_path + "'");
    }
  }
  return strict && o.negative ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace hyperarith::cli;
  CLI::App app{"Exact verdicts for arithmetic and hybrid hyperbolic lattices, Coxeter diagrams and link trace fields"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  std::string json_path;
  bool strict = false;
  if (const char* env = std::getenv("HYPERARITH_DATA")) opt.data_dir = env;
  else opt.data_dir = HYPERARITH_DEFAULT_DATA;
  app.add_option("--json", json_path, "Write the JSON report to this path ('-' for stdout)");
  app.add_flag("--strict", strict, "Exit 1 when a primary verdict is No");
  app.add_option("--jobs", opt.jobs, "Analyze independent inputs concurrently")->check(CLI::Range(1, 256));
  app.add_flag("--approx", opt.approx, "Add 15-digit decimal renderings next to exact values");
  app.add_option("--data-dir", opt.data_dir, "Data directory (default: $HYPERARITH_DATA or the bundled data)");

  std::vector<std::string> files;
  std::string a, b, e, z, table;

  auto* form = app.add_subcommand("form", "Quadratic forms")->require_subcommand(1);
  auto* check = form->add_subcommand("check", "Admissibility of form files");
  check->add_option("files", files, "Form files")->required();
  auto* comm = form->add_subcommand("commensurable", "Commensurability of two forms (file or diag(...))");
  comm->add_option("first", a)->required();
  comm->add_option("second", b)->required();

  auto* hybrid = app.add_subcommand("hybrid", "Hybrid gluings")->require_subcommand(1);
  auto* verify = hybrid->add_subcommand("verify", "Finiteness hypotheses of complex files");
  verify->add_option("files", files, "Complex files")->required();
  auto* angle = hybrid->add_subcommand("angle", "cos^2 of the angle between e-perp and Z-perp");
  angle->add_option("file", a, "Form file")->required();
  angle->add_option("--e", e, "Normal vector, comma separated")->required();
  angle->add_option("--z", z, "Spanning vectors of Z, ';' between vectors")->required();

  auto* coxeter = app.add_subcommand("coxeter", "Coxeter diagrams")->require_subcommand(1);
  auto* analyze = coxeter->add_subcommand("analyze", "Classification, arithmeticity, splittability");
  analyze->add_option("files", files, "Diagram files")->required();

  auto* links = app.add_subcommand("links", "Belted sums and trace fields")->require_subcommand(1);
  auto* compose = links->add_subcommand("compose", "Run composition scripts or name+name expressions");
  compose->add_option("inputs", files, "Scripts or expressions")->required();
  compose->add_option("--table", table, "Link table (default: links.txt in the data directory)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return emit(form_check(files, opt), json_path, strict);
    if (*comm) return emit(form_commensurable(a, b, opt), json_path, strict);
    if (*verify) return emit(hybrid_verify(files, opt), json_path, strict);
    if (*angle) return emit(hybrid_angle(a, e, z, opt), json_path, strict);
    if (*analyze) return emit(coxeter_analyze(files, opt), json_path, strict);
    if (*compose) return emit(links_compose(files, table, opt), json_path, strict);
  } catch (const hyperarith::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}

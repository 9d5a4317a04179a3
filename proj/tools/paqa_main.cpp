#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "paqa/dsl.hpp"
#include "paqa/report.hpp"

namespace {

std::size_t default_max_degree() {
  const char* env = std::getenv("PAQA_MAX_DEGREE");
  if (!env || !*env) return paqa::kDefaultMaxDegree;
  try {
    std::size_t pos = 0;
    unsigned long v = std::stoul(env, &pos);
    if (pos == std::string(env).size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  std::cerr << "warning: ignoring invalid PAQA_MAX_DEGREE='" << env << "'\n";
  return paqa::kDefaultMaxDegree;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"paqa: exact analysis of partly (anti-)commutative quiver algebras"};
  std::string command;
  std::string file;
  paqa::RunOptions options;
  options.max_degree = default_max_degree();

  app.add_option("command", command, "validate | admissible | orthogonal | center | fingen | dual | "
                                     "hochschild | oracle-check | dot")
      ->required()
      ->check(CLI::IsMember(paqa::commands()));
  app.add_option("file", file, "spec file ('-' reads standard input)")->required();
  app.add_flag("--json", options.json, "emit a JSON report");
  app.add_flag("--verify", options.verify, "center: cross-check against the elimination oracle");
  app.add_option("--max-degree", options.max_degree, "degree bound for enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--graph", options.graph, "graph for dot: gen | gen-perp | rel")
      ->check(CLI::IsMember({"gen", "gen-perp", "rel"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : paqa::kExitInputError;
  }

  std::stringstream buffer;
  if (file == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "error: cannot open '" << file << "'\n";
      return paqa::kExitInputError;
    }
    buffer << in.rdbuf();
  }

  paqa::SpecDocument doc;
  try {
    doc = paqa::parse_spec(buffer.str());
  } catch (const paqa::ParseError& e) {
    std::cerr << file << ":" << e.pos().line << ":" << e.pos().column << ": error: " << e.message()
              << "\n";
    return paqa::kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << file << ": error: " << e.what() << "\n";
    return paqa::kExitInputError;
  }

  paqa::RunResult r = paqa::run(command, doc, options);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

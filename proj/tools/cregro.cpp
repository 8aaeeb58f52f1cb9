// cregro: run a script of module computations.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "cregro/io/session.hpp"

namespace {

std::optional<unsigned> env_threads() {
  const char* s = std::getenv("CREGRO_THREADS");
  if (!s || !*s) return std::nullopt;
  try {
    long v = std::stol(s);
    if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
  } catch (const std::exception&) {
  }
  std::cerr << "warning: ignoring CREGRO_THREADS=" << s << "\n";
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Initial modules, Groebner bases and componentwise regularity over K[x1..xn]"};
  std::string path;
  cregro::io::RunOptions opt;
  std::int64_t max_degree = 0;
  unsigned threads = 0;
  app.add_option("script", path, "script file (.crg), or - for stdin")->required();
  app.add_flag("--json", opt.json, "one JSON object per command");
  app.add_option("--seed", opt.seed, "first seed of check sweeps")->capture_default_str();
  app.add_option("--budget", opt.budget, "instances per check sweep")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--threads", threads, "worker threads for check sweeps (default: CREGRO_THREADS or 1)")
      ->check(CLI::Range(1u, 1024u));
  app.add_option("--max-degree", max_degree, "reject generators above this degree; caps sweep degrees")
      ->check(CLI::PositiveNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : cregro::io::kExitUsage;
  }
  if (max_degree > 0) opt.max_degree = max_degree;
  opt.threads = threads ? threads : env_threads().value_or(1);

  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read " << path << "\n";
      return cregro::io::kExitUsage;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  cregro::io::Session session(opt, std::cout, std::cerr);
  return session.run_text(text);
}

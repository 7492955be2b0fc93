// pq: p-subgroup complexes from the command line.
//
//   pq list
//   pq group --group "PSL(3,4):frob(1):graph" --p 2
//   pq homology --group "Sym(6)" --p 2 --kind B
//   pq verify euler --group "Alt(6)" --p 3
//   pq suite --slow
//
// Reports go to stdout (or --out) as canonical JSON. Exit status: 0 pass,
// 1 a check failed, 2 bad input or a cap was hit.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "pq/report.hpp"

namespace {

void add_common(CLI::App* cmd, pq::RunConfig& c, std::string& cache_dir, bool& no_cache) {
  cmd->add_option("--group", c.group, "group spec, e.g. \"PSigmaL(2,4)\"");
  cmd->add_option("--H", c.h, "spec of the Lie-type normal subgroup (same points as --group)");
  cmd->add_option("--Gdf", c.gdf, "spec of the G_df subgroup (same points as --group)");
  cmd->add_option("--p", c.p, "prime");
  cmd->add_option("--r", c.r, "second prime for cross-characteristic");
  cmd->add_flag("--slow", c.slow, "include slow instances");
  cmd->add_option("--cache-dir", cache_dir, "cache directory (default: $PQ_CACHE_DIR or ~/.cache/pq)");
  cmd->add_flag("--no-cache", no_cache, "do not read or write the cache");
  cmd->add_option("--out", c.out, "write the report here instead of stdout");
  cmd->add_option("--element-cap", c.element_cap, "maximum group order to enumerate");
  cmd->add_option("--poset-cap", c.poset_cap, "maximum poset size");
  cmd->add_option("--simplex-cap", c.simplex_cap, "maximum number of simplices");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pq: p-subgroup complexes, homology and verifiers"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pq::kToolVersion);

  pq::RunConfig config;
  std::string cache_dir;
  bool no_cache = false;

  for (const char* name : {"group", "poset", "complex", "homology", "suite", "list"}) {
    auto* cmd = app.add_subcommand(name);
    add_common(cmd, config, cache_dir, no_cache);
    if (std::string(name) == "poset" || std::string(name) == "complex" || std::string(name) == "homology")
      cmd->add_option("--kind", config.kind, "A, S, B or mixed")->check(CLI::IsMember({"A", "S", "B", "mixed"}));
  }
  auto* verify = app.add_subcommand("verify", "run a theorem verifier");
  verify->add_option("id", config.verifier, "verifier id")->required()->check(CLI::IsMember(pq::verifier_ids()));
  add_common(verify, config, cache_dir, no_cache);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  config.command = app.get_subcommands().front()->get_name();
  if (!no_cache) config.cache_dir = cache_dir.empty() ? pq::default_cache_dir().string() : cache_dir;

  auto result = pq::run(config);
  std::string text = pq::canonical_dump(result.report);
  if (config.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(config.out, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) {
      std::cerr << "cannot write " << config.out << "\n";
      return 2;
    }
  }
  return result.exit_code;
}

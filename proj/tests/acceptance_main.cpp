#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "bspec/cli/app.hpp"

int main(int argc, char** argv) {
  bspec::cli::AcceptanceOptions opts;
  if (argc > 1) opts.workers = static_cast<unsigned>(std::strtoul(argv[1], nullptr, 10));
  const bspec::cli::AcceptanceReport rep = bspec::cli::run_acceptance(opts);
  for (const auto& c : rep.criteria)
    std::printf("%s criterion %2d: %s (%.0f ms)\n", c.passed ? "PASS" : "FAIL", c.id, c.title.c_str(), c.timing_ms);
  if (argc > 2) std::ofstream(argv[2]) << rep.to_json().dump(2) << '\n';
  std::printf("%s\n", rep.passed() ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED");
  return rep.passed() ? 0 : 1;
}

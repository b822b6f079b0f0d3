// golden_runner <zmc> <golden dir> <work dir> [--update]

#include "golden.hpp"

#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
  if (argc < 4) {
    std::cerr << "usage: golden_runner <zmc> <golden dir> <work dir> [--update]\n";
    return 2;
  }
  const bool update = argc > 4 && std::strcmp(argv[4], "--update") == 0;
  const std::filesystem::path golden_dir = argv[2];
  int failures = 0;
  for (const auto& c : golden::read_manifest(golden_dir / "cases.txt")) {
    const auto outcome = golden::run_case(argv[1], c, golden_dir, argv[3], update);
    std::cout << (outcome.pass ? "ok    " : "FAIL  ") << c.name << ": " << outcome.message << "\n";
    if (!outcome.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}

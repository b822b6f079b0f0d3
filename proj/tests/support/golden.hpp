#pragma once

// Golden-file cases for the zmc CLI. The manifest has one case per line:
//
//   name | expected exit code | arguments...
//
// An argument "{out}" is replaced by a CSV path in the work directory; the
// CSV is then compared with <name>.csv next to <name>.json. Cases expected
// to exit with 2 also compare stderr with <name>.err. Blank lines and
// lines starting with # are ignored.

#include <filesystem>
#include <string>
#include <vector>

namespace golden {

struct Case {
  std::string name;
  int expected_exit = 0;
  std::vector<std::string> args;
  bool writes_csv = false;
};

std::vector<Case> read_manifest(const std::filesystem::path& path);

struct Outcome {
  bool pass = false;
  std::string message;
};

/// Runs the case twice (ZMC_THREADS=1, then 4), requires the expected exit
/// code, byte-identical outputs between runs, and equality with the golden
/// files. With update set, the golden files are rewritten from the first run.
Outcome run_case(const std::string& cli, const Case& c, const std::filesystem::path& golden_dir,
                 const std::filesystem::path& work_dir, bool update = false);

std::string read_file(const std::filesystem::path& path);

}  // namespace golden

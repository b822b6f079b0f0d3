#include "golden.hpp"

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace golden {

namespace fs = std::filesystem;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char ch : s) {
    if (ch == '\'')
      out += "'\\''";
    else
      out += ch;
  }
  return out + "'";
}

struct Run {
  int exit_code = -1;
  std::string out;
  std::string err;
  std::string csv;
};

Run run_once(const std::string& cli, const Case& c, const fs::path& work, const std::string& tag,
             const std::string& threads) {
  const fs::path out = work / (c.name + "." + tag + ".json");
  const fs::path err = work / (c.name + "." + tag + ".err");
  const fs::path csv = work / (c.name + "." + tag + ".csv");
  fs::remove(csv);
  std::string cmd = "ZMC_THREADS=" + threads + " " + quote(cli);
  for (const auto& a : c.args) cmd += " " + quote(a == "{out}" ? csv.string() : a);
  cmd += " >" + quote(out.string()) + " 2>" + quote(err.string());
  const int status = std::system(cmd.c_str());
  Run r;
  r.exit_code = (status != -1 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  r.out = read_file(out);
  r.err = read_file(err);
  if (c.writes_csv) r.csv = fs::exists(csv) ? read_file(csv) : std::string("<missing>");
  return r;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f << content;
  if (!f) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace

std::string read_file(const fs::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return "<unreadable " + path.string() + ">";
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<Case> read_manifest(const fs::path& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open manifest " + path.string());
  std::vector<Case> cases;
  std::string line;
  while (std::getline(f, line)) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto p1 = line.find('|');
    const auto p2 = line.find('|', p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
      throw std::runtime_error("bad manifest line: " + line);
    Case c;
    c.name = trim(line.substr(0, p1));
    c.expected_exit = std::stoi(trim(line.substr(p1 + 1, p2 - p1 - 1)));
    std::istringstream args(line.substr(p2 + 1));
    for (std::string a; args >> a;) {
      if (a == "{out}") c.writes_csv = true;
      c.args.push_back(a);
    }
    cases.push_back(std::move(c));
  }
  return cases;
}

Outcome run_case(const std::string& cli, const Case& c, const fs::path& golden_dir, const fs::path& work_dir,
                 bool update) {
  fs::create_directories(work_dir);
  const Run first = run_once(cli, c, work_dir, "run1", "1");
  const Run second = run_once(cli, c, work_dir, "run2", "4");

  if (first.exit_code != c.expected_exit)
    return {false, "exit code " + std::to_string(first.exit_code) + ", expected " +
                       std::to_string(c.expected_exit)};
  if (second.exit_code != first.exit_code) return {false, "exit code differs between runs"};
  if (second.out != first.out) return {false, "stdout differs between runs"};
  if (second.err != first.err) return {false, "stderr differs between runs"};
  if (second.csv != first.csv) return {false, "CSV differs between runs"};

  const fs::path gold_json = golden_dir / (c.name + ".json");
  const fs::path gold_csv = golden_dir / (c.name + ".csv");
  const fs::path gold_err = golden_dir / (c.name + ".err");
  const bool check_err = c.expected_exit == 2;
  if (update) {
    write_file(gold_json, first.out);
    if (check_err) write_file(gold_err, first.err);
    if (c.writes_csv) write_file(gold_csv, first.csv);
    return {true, "updated"};
  }
  if (!fs::exists(gold_json)) return {false, "missing golden file " + gold_json.string()};
  if (read_file(gold_json) != first.out) return {false, "stdout differs from " + gold_json.filename().string()};
  if (check_err && read_file(gold_err) != first.err)
    return {false, "stderr differs from " + gold_err.filename().string()};
  if (c.writes_csv && read_file(gold_csv) != first.csv)
    return {false, "CSV differs from " + gold_csv.filename().string()};
  return {true, "ok"};
}

}  // namespace golden

#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace testutil {

struct RunResult {
  int status = -1;
  std::string out;
  std::string err;
};

inline std::string shell_quote(const std::string& s) {
  std::string quoted = "'";
  for (const char c : s) {
    if (c == '\'') {
      quoted += "'\\''";
    } else {
      quoted += c;
    }
  }
  quoted += "'";
  return quoted;
}

inline std::string cli_binary() {
  if (const char* env = std::getenv("WIKIRANK_BIN")) return env;
  return "build/tools/wikirank";
}

// Runs the CLI with stdout/stderr captured to scratch files. env_prefix is
// spliced in front verbatim, e.g. "env -u TAGME_TOKEN" or
// "env TAGME_TOKEN=abc".
inline RunResult run_cli(const std::vector<std::string>& args,
                         const std::string& env_prefix = "") {
  static std::atomic<int> counter{0};
  const int id = counter.fetch_add(1);
  const auto scratch = std::filesystem::temp_directory_path();
  const auto out_path =
      scratch / ("wikirank-cli-" + std::to_string(::getpid()) + "-" +
                 std::to_string(id) + ".out");
  const auto err_path =
      scratch / ("wikirank-cli-" + std::to_string(::getpid()) + "-" +
                 std::to_string(id) + ".err");

  std::string cmd;
  if (!env_prefix.empty()) cmd += env_prefix + " ";
  cmd += shell_quote(cli_binary());
  for (const std::string& arg : args) cmd += " " + shell_quote(arg);
  cmd += " > " + shell_quote(out_path.string());
  cmd += " 2> " + shell_quote(err_path.string());

  const int rc = std::system(cmd.c_str());

  RunResult result;
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  auto read_all = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  result.out = read_all(out_path);
  result.err = read_all(err_path);
  std::error_code ec;
  std::filesystem::remove(out_path, ec);
  std::filesystem::remove(err_path, ec);
  return result;
}

}  // namespace testutil

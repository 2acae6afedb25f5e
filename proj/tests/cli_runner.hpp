#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <sys/wait.h>

namespace edgepoly::testing {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

// Runs a shell command line; the token `edgepoly` is replaced by the built
// binary. Stderr is captured through a temporary file.
inline CliResult run_cli(std::string line) {
  const std::string bin = EDGEPOLY_CLI_PATH;
  for (std::size_t pos = 0; (pos = line.find("edgepoly", pos)) != std::string::npos; pos += bin.size())
    line.replace(pos, 8, bin);
  const auto err_path = std::filesystem::temp_directory_path() / ("edgepoly_err_" + std::to_string(::getpid()));
  const std::string cmd = "(" + line + ") 2>" + err_path.string();
  CliResult r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = ::pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream err(err_path);
  r.err.assign(std::istreambuf_iterator<char>(err), {});
  std::filesystem::remove(err_path);
  return r;
}

}  // namespace edgepoly::testing

#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace focs::testing {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI; returns its exit status and stdout (plus stderr when merged).
inline CliResult run_cli(const std::string& args, bool merge_stderr = false) {
  std::string command = std::string("\"") + FOCS_CLI_PATH + "\" " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

// Per-process, so concurrently running test binaries never share files.
inline std::filesystem::path fixture_dir() {
  auto dir = std::filesystem::temp_directory_path() / ("focs_cli_fixtures_" + std::to_string(getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::filesystem::path write_fixture(const std::string& name, const std::string& text) {
  auto path = fixture_dir() / name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace focs::testing

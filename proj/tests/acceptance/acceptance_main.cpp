// One line per acceptance criterion: [PASS]/[FAIL], id, title, elapsed time
// against its limit. Criterion 10 shells out to the CLI (path in argv[1]) and
// compares two full verify-all runs byte for byte.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <sys/wait.h>

#include "weil/verify.hpp"

namespace {

struct Captured {
  std::string out;
  int status = -1;
};

Captured run(const std::string& cmd) {
  Captured c;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return c;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) c.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return c;
}

void line(bool ok, const weil::CriterionInfo& info, double secs, const std::string& note) {
  std::printf("[%s] criterion %2d  %-58s %8.2fs / %4.0fs%s%s\n", ok ? "PASS" : "FAIL", info.id, info.title.c_str(), secs,
              info.time_limit_seconds, note.empty() ? "" : "  ", note.c_str());
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  using clock = std::chrono::steady_clock;
  const auto& infos = weil::criteria();
  int failed = 0;

  for (int id = 1; id <= 9; ++id) {
    const auto& info = infos[static_cast<std::size_t>(id - 1)];
    const auto t0 = clock::now();
    const auto r = weil::run_criterion(id);
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    const bool ok = r.passed && secs <= info.time_limit_seconds;
    std::string note = std::to_string(r.checks) + " checks";
    if (!r.failures.empty()) note += "; first failure: " + r.failures.front();
    if (secs > info.time_limit_seconds) note += "; over time limit";
    line(ok, info, secs, note);
    failed += ok ? 0 : 1;
  }

  const auto& info10 = infos[9];
  if (argc < 2) {
    line(false, info10, 0.0, "no CLI path given");
    ++failed;
  } else {
    const std::string cmd = std::string("'") + argv[1] + "' verify-all 2>/dev/null";
    const auto t0 = clock::now();
    const auto a = run(cmd);
    const auto b = run(cmd);
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    const bool same = !a.out.empty() && a.out == b.out;
    const bool ok = same && a.status == 0 && b.status == 0 && secs <= info10.time_limit_seconds;
    std::string note = std::to_string(a.out.size()) + " bytes, exit " + std::to_string(a.status) + "/" +
                       std::to_string(b.status) + (same ? ", identical" : ", outputs differ");
    line(ok, info10, secs, note);
    failed += ok ? 0 : 1;
  }

  std::printf("%d of 10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}

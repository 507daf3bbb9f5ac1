// Acceptance run: one line per criterion, full level. Criterion 12 also runs
// the installed CLI twice per format and compares the bytes.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>

#include "qwalk/app/battery.hpp"

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Returns an empty string on success, else a reason.
std::string cli_determinism() {
  const fs::path dir = fs::temp_directory_path() / ("qwalk_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const char* runs[] = {
      "simulate --shift swapping --n 16 --omega-frac 1/3 --steps 5000",
      "limitdist --shift moving --n 16 --omega-frac 1/3 --method spectral-numeric",
      "limitdist --shift swapping --n 32 --omega-frac 1/3 --method spectral-analytic",
      "spectrum --shift moving --n 12 --omega-frac 1/4 --compare",
  };
  std::string reason;
  int k = 0;
  for (const char* args : runs)
    for (const char* fmt : {"csv", "json"}) {
      std::string outputs[2];
      for (int rep = 0; rep < 2; ++rep) {
        const fs::path out = dir / ("run" + std::to_string(k) + "_" + std::to_string(rep));
        const std::string cmd = std::string("\"") + QWALK_CLI_PATH + "\" " + args + " --format " + fmt + " --out \"" +
                                out.string() + "\"";
        if (std::system(cmd.c_str()) != 0) {
          reason = "command failed: " + cmd;
          break;
        }
        outputs[rep] = slurp(out);
      }
      ++k;
      if (!reason.empty()) break;
      if (outputs[0].empty() || outputs[0] != outputs[1]) {
        reason = std::string("outputs differ: ") + args + " --format " + fmt;
        break;
      }
    }
  fs::remove_all(dir);
  return reason;
}

}  // namespace

int main() {
  using namespace qwalk::app;
  int failures = 0;
  for (int c = 1; c <= kCriterionCount; ++c) {
    CheckResult r = run_criterion(c, Level::Full);
    if (c == 12 && r.pass) {
      const std::string reason = cli_determinism();
      if (reason.empty()) {
        r.detail += "; CLI csv/json runs byte-identical";
      } else {
        r.pass = false;
        r.detail += "; " + reason;
      }
    }
    if (!r.pass) ++failures;
    std::printf("criterion %2d: %s  %s  %s  (%.2f s)\n", c, r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.c_str(), r.seconds);
  }
  std::printf("%d of %d criteria passed\n", kCriterionCount - failures, kCriterionCount);
  return failures == 0 ? 0 : 1;
}

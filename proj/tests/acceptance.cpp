// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.  Trial counts, tolerances, and time limits are fixed here.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "atto/verify.hpp"

namespace {

using atto::verify::PropertyResult;

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

int failures = 0;

void report(int id, const std::string& label, bool pass,
            const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", id,
              label.c_str(), detail.c_str());
  if (!pass) ++failures;
}

std::string residual_detail(const std::vector<PropertyResult>& parts,
                            double elapsed) {
  double worst = 0.0;
  for (const auto& p : parts) worst = std::max(worst, p.max_residual);
  char buf[128];
  std::snprintf(buf, sizeof(buf), "max residual %.3e, %.1f s", worst, elapsed);
  return buf;
}

bool all_pass(const std::vector<PropertyResult>& parts) {
  for (const auto& p : parts)
    if (!p.pass) return false;
  return true;
}

}  // namespace

int main() {
  const std::uint64_t seed = 1;

  {
    Timer t;
    PropertyResult r = atto::verify::zero_symbol_forward(seed, 200);
    double elapsed = t.seconds();
    report(1, "zero-symbol forward: 200 zero-class instances assemble to zero",
           r.pass && elapsed < 20.0, residual_detail({r}, elapsed));
  }
  {
    Timer t;
    PropertyResult r = atto::verify::zero_symbol_converse(seed, 200, 20);
    double elapsed = t.seconds();
    report(2,
           "zero-symbol converse: verdicts match the matrix norm on 200 pairs "
           "(20 planted)",
           r.pass && elapsed < 20.0, residual_detail({r}, elapsed));
  }
  {
    Timer t;
    PropertyResult a = atto::verify::canonical_pair_reduction(seed, 100);
    PropertyResult b = atto::verify::pair_shift_invariance(seed, 100);
    report(3, "canonical-pair reduction and shift invariance on 100 symbols",
           all_pass({a, b}), residual_detail({a, b}, t.seconds()));
  }
  {
    Timer t;
    PropertyResult u = atto::verify::crofoot_unitarity(seed, 50);
    PropertyResult k = atto::verify::crofoot_kernel_identity(seed, 100);
    PropertyResult c = atto::verify::crofoot_conjugation(seed, 50);
    report(4,
           "Crofoot suite: unitarity (50), kernel identity (100), "
           "conjugation (50)",
           all_pass({u, k, c}), residual_detail({u, k, c}, t.seconds()));
  }
  {
    Timer t;
    PropertyResult a = atto::verify::rank_one_interior_a_suite(seed, 50);
    PropertyResult b = atto::verify::rank_one_interior_b_suite(seed, 50);
    PropertyResult c = atto::verify::rank_one_boundary_suite(seed, 50);
    PropertyResult l = atto::verify::rank_one_boundary_limit(seed, 50);
    report(5, "rank-one suite: interior (a), (b), boundary, radial limit",
           all_pass({a, b, c, l}), residual_detail({a, b, c, l}, t.seconds()));
  }
  {
    Timer t;
    PropertyResult r = atto::verify::oracle_agreement(seed, 100);
    report(6, "dual-path certification on 100 instances across all builders",
           r.pass, residual_detail({r}, t.seconds()));
  }
  {
    Timer t;
    PropertyResult m = atto::verify::conjugation_matrix_suite(seed, 30);
    PropertyResult k = atto::verify::conjugate_kernel_identity(seed, 30);
    report(7, "conjugation: unitary-symmetric matrices, C k_w = conj-kernel",
           all_pass({m, k}), residual_detail({m, k}, t.seconds()));
  }
  {
    Timer t;
    std::string cmd = std::string(ATTO_CLI_PATH) + " verify > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    double elapsed = t.seconds();
    char buf[96];
    std::snprintf(buf, sizeof(buf), "exit %d, %.1f s", code, elapsed);
    report(8, "full verify run with the default seed under 60 s",
           code == 0 && elapsed < 60.0, buf);
  }

  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}

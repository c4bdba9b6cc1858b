// Acceptance suite: runs the claim checklist and prints one PASS/FAIL line
// per claim on stdout (timings go to stderr). With a numeric argument only
// that claim runs. Exit code 0 iff every executed claim passes.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "spinxor/io.hpp"
#include "spinxor/reproduce.hpp"

int main(int argc, char** argv) {
  using namespace spinxor;
  std::vector<ClaimResult> results;
  try {
    if (argc > 1) {
      results.push_back(run_claim_check(std::atoi(argv[1])));
    } else {
      results = run_claim_checks();
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  bool all_pass = true;
  for (const ClaimResult& r : results) {
    std::cout << format_claim_line(r) << '\n';
    std::cerr << "claim " << r.id << " took " << format_real(r.millis, 3) << " ms\n";
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}

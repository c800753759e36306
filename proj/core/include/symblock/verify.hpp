#pragma once

#include <string>
#include <vector>

namespace symblock {

struct VerifyRow {
  std::string check;
  int p = 0;
  bool passed = false;
  std::string detail;
};

/// Exhaustive oracle sweeps cross-validating every closed form against its
/// brute-force route, one row per (check, p). Rows with an empty parameter
/// range at a given p pass trivially and say so. Sweeps for distinct rows run
/// in parallel.
std::vector<VerifyRow> run_verification(const std::vector<int>& primes);

bool all_passed(const std::vector<VerifyRow>& rows);

}  // namespace symblock

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hypchrom {

struct CheckGroup {
  std::string name;
  bool passed = false;
  std::string detail;  ///< worst observed value against its threshold
};

/// |phi - Re(angular)| and |Im(angular)| below 1e-8 on d in {0.5, 1, 2, 4, 8}
/// x lambda in {0, 0.5, 1, 2, 5, 10}.
CheckGroup check_oracle_grid();
/// Horocycle cocycle identity on random isometries, within 1e-10.
CheckGroup check_cocycle(int samples, std::uint64_t seed);
/// Distance preservation on random isometries, within 1e-12.
CheckGroup check_isometry(int samples, std::uint64_t seed);
/// F_d(v) <= (1-v)^{-1/2} and f_d(v) <= sqrt(2) (1-v^2)^{-1/2}, d in (0, 200].
CheckGroup check_envelope(int samples, std::uint64_t seed);
/// Stationarity tan(rho) = rho and nu = cos(rho) within 1e-10.
CheckGroup check_limit();
/// Certified spindles with chromatic number 4 for d in {0.5, 1, 4, 12}.
CheckGroup check_spindle();

std::vector<CheckGroup> run_self_checks(std::uint64_t seed = 0x5eed);

}  // namespace hypchrom

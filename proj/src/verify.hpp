#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace chz {

struct FamilyResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  // First failure, empty when the family passed.
  std::string detail;
  bool passed() const { return failures == 0 && checks > 0; }
};

struct VerifyReport {
  std::vector<FamilyResult> families;
  bool passed() const;
};

// Runs every identity family over the grid stored under "full" or "quick" in
// the JSON config at config_path. Throws Error(invalid_argument) for an
// unreadable or malformed config; identity failures are reported, not thrown.
VerifyReport verify_all(const std::string& config_path, bool quick);
VerifyReport verify_grid(const std::string& grid_json);

}  // namespace chz

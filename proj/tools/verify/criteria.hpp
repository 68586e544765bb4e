#pragma once

#include <functional>
#include <string>
#include <vector>

#include <cvtele/grid.hpp>

namespace cvtele::verify {

enum class Level { Quick, Full };

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    double max_error = 0.0;
    double tolerance = 0.0;
    double seconds = 0.0;
    double budget_seconds = 0.0;  // exceeding it fails the criterion
    std::string detail;
};

// The grid teleportation map under test. Swapping it out is how the
// fault-injection hook corrupts the kernel without touching the library.
using TeleportFn = std::function<WignerGrid(const WignerGrid&, double)>;

TeleportFn library_teleport();
// Kernel with a 1% width error: small enough to look plausible, large enough
// that every oracle comparison must catch it.
TeleportFn corrupted_kernel_teleport();

struct Options {
    Level level = Level::Full;
    TeleportFn teleport = library_teleport();
    std::vector<int> only;  // empty runs all criteria
};

inline constexpr int kCriterionCount = 9;

// Runs the selected criteria in order, calling `report` after each.
std::vector<CriterionResult> run(const Options& options,
                                 const std::function<void(const CriterionResult&)>& report = {});

// "[PASS] 3 oracle-equivalence  max_err=1.2e-09 tol=1e-05 (41.2 s of 600) detail"
std::string format_line(const CriterionResult& r);

}  // namespace cvtele::verify

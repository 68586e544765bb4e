#pragma once

#include <filesystem>
#include <ostream>
#include <vector>

#include "../verify/criteria.hpp"
#include "sweep.hpp"

namespace cvtele::cli {

// Each command returns the process exit status.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitAccuracy = 2;
inline constexpr int kExitIo = 3;

// Rows (s_qc, n_bar, T, n_tau, n_d, gap, separable), s-major then n_bar then T.
int noise_sweep(const SweepSpec& spec, std::ostream& out);

// Rows (n_tau, F_closed, F_grid, abs_diff) for a fock:m or squeezed:s input.
// n_tau comes from --ntau, or from the channel sweep when --ntau is absent.
// Returns kExitAccuracy if any |F_closed - F_grid| exceeds 1e-4.
int fidelity_table(const SweepSpec& spec, std::ostream& out);

// Writes input.{csv,json}, teleported.{csv,json} and summary.json into dir.
int teleport_export(const SweepSpec& spec, const std::filesystem::path& dir, std::ostream& log);

struct VerifyRequest {
    verify::Level level = verify::Level::Quick;
    bool corrupt_kernel = false;
    std::vector<int> only;
};

// JSON report on `out`, one human-readable line per criterion on `log`.
int run_verify(const VerifyRequest& request, std::ostream& out, std::ostream& log);

}  // namespace cvtele::cli

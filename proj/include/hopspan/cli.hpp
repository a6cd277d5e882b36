#pragma once

#include <cstdint>
#include <iosfwd>

#include "hopspan/udg.hpp"

namespace hopspan {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

/// Uniform points in [0, width] x [0, height], resampled until all pairwise
/// distances are >= min_gap and the set passes check_general_position.
/// Throws Error once 100 * n samples have been drawn.
PointSet generate_points(std::size_t n, double width, double height, std::uint64_t seed,
                         double min_gap = 1e-6);

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace hopspan

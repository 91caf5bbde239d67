#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "minkflow/surface.hpp"

namespace minkflow::cli {

enum class Command { Verify, Flow, Counterexample, SphereTable, Sweep };

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kNoFinding = 1;
inline constexpr int kViolation = 2;
inline constexpr int kNotConvex = 3;
inline constexpr int kUsage = 64;
inline constexpr int kInternal = 70;
}  // namespace exit_code

/// t-grid "start:stop:count".
struct GridSpec {
    double start = 0.0;
    double stop = 2.0;
    int count = 9;
};

GridSpec parse_grid(const std::string& text);

struct RunConfig {
    Command command = Command::Verify;
    std::optional<std::filesystem::path> input_path;
    std::filesystem::path output_dir = ".";
    std::optional<int> subdivision;
    std::optional<GridSpec> grid;
    std::optional<double> tolerance;
    double rmin = 0.1;
    double rmax = 5.0;
    double step = 0.05;
};

inline constexpr int kDefaultSubdivision = 5;

int cmd_verify(const RunConfig& config);
int cmd_flow(const RunConfig& config);
int cmd_counterexample(const RunConfig& config);
int cmd_sphere_table(const RunConfig& config);
int cmd_sweep(const RunConfig& config);

/// Dispatches a parsed config, mapping exceptions to exit codes.
int run(const RunConfig& config);

/// Parses argv and runs; usage errors exit with 64.
int main(int argc, char** argv);

/// Radii used for the sphere regression table.
std::vector<double> sphere_table_radii(SpaceKind space);

}  // namespace minkflow::cli

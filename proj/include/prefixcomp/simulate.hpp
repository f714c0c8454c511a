#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prefixcomp/core.hpp"
#include "prefixcomp/verdict.hpp"

namespace prefixcomp {

/// Counter-based stream: the state is a hash of (seed, n, sample index), so
/// every sample owns an independent substream and results do not depend on
/// execution order or thread count.
struct RngStream {
    std::uint64_t state = 0;

    static RngStream keyed(std::uint64_t seed, std::uint64_t n, std::uint64_t index);
    std::uint64_t next_u64();
    double next_unit();  // uniform in (0, 1), never 0 or 1
};

/// Flat Dirichlet sample: n unit-mean exponentials (inverse transform),
/// normalized. Float mode.
Source sample_dirichlet(int n, RngStream& rng);

struct ExperimentConfig {
    int n_min = 0;
    int n_max = 0;
    std::int64_t samples_per_n = 0;
    std::uint64_t seed = 0;
    VerdictMethod method = VerdictMethod::LeafCondition;
    int threads = 1;  // 0 = hardware concurrency

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

struct SimulationRow {
    int n = 0;
    std::int64_t samples = 0;
    std::int64_t flagged = 0;  // verdict NotOptimal
    double fraction = 0.0;
    double seconds = 0.0;
};

struct SimulationReport {
    ExperimentConfig config;
    std::vector<SimulationRow> rows;
};

/// Draws samples_per_n sources per n and counts NotOptimal verdicts under
/// the configured method (LeafCondition, SubsetExact, or Hexahedron).
/// Deterministic given the config, regardless of thread count.
SimulationReport run_experiment(const ExperimentConfig& cfg);

/// CSV: header "n,samples,flagged,fraction,method,seed", fraction with six
/// decimal digits.
void write_report_csv(const SimulationReport& r, std::ostream& out);
void write_report(const SimulationReport& r, const std::string& path);

/// JSON alternative carrying the full config and wall-clock per n.
void write_report_json(const SimulationReport& r, const std::string& path);

/// Parses the CSV back; wall-clock is not serialized and reads as zero.
SimulationReport read_report_csv(std::istream& in);

}  // namespace prefixcomp

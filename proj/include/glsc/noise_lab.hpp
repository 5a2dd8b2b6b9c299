#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glsc/codec.hpp"

namespace glsc {

struct TrialConfig {
    ExactRational p_target;
    std::uint64_t N = 0;
    ExactRational epsilon;
    MapMode mode = MapMode::Binary;
    std::uint64_t flip_distance = 1; // d: 1 = last payload bit
    std::uint64_t seed = 0;
};

enum class TrialOutcomeKind : std::uint8_t { DetectedAt, UndetectedWrong, UndetectedCorrect };

struct TrialResult {
    TrialOutcomeKind outcome = TrialOutcomeKind::UndetectedWrong;
    std::uint64_t symbol_index = 0; // meaningful for DetectedAt only
    std::uint64_t prefix_match_symbols = 0;
    std::uint64_t payload_len = 0;
};

struct DistanceBin {
    std::uint64_t d_lo = 0;
    std::uint64_t d_hi = 0;
    std::uint64_t detected = 0;
    std::uint64_t undetected = 0;
};

struct ExperimentReport {
    ExactRational epsilon;
    std::vector<DistanceBin> bins;
    std::uint64_t detected_total = 0;
    std::uint64_t undetected_total = 0;
    double percent_detected = 0.0;
};

struct TrialRecord {
    ExactRational epsilon;
    std::uint64_t d = 0;
    std::uint64_t seed = 0;
    TrialResult result;
};

struct TableConfig {
    ExactRational p_target;
    std::uint64_t N = 0;
    std::vector<ExactRational> epsilons;
    std::uint64_t d_max = 250;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> bins = {{1, 50}, {51, 100}, {101, 150}, {151, 250}};
    std::uint64_t seed = 0;
    MapMode mode = MapMode::Binary;
    unsigned threads = 0; // 0: hardware concurrency
};

struct TableRun {
    std::vector<ExperimentReport> reports; // one per epsilon
    std::vector<TrialRecord> records;      // every trial, epsilon-major then d ascending
};

std::uint64_t splitmix64(std::uint64_t x);

// Deterministic i.i.d. bits: 0 with probability p_target, mt19937_64 stream.
BitString random_message(const ExactRational& p_target, std::uint64_t N, std::uint64_t seed);

// Invert the payload bit at distance d from the end; header untouched.
CompressedArtifact flip_bit(const CompressedArtifact& artifact, std::uint64_t d);

// Generate, encode, corrupt one bit, decode, classify.
TrialResult run_trial(const TrialConfig& cfg);

// One trial per distance 1..d_max per epsilon, fresh seed-derived message
// each; aggregation is order-independent, so results do not depend on the
// thread schedule.
TableRun run_table(const TableConfig& cfg);

void write_csv(const TableRun& run, const std::string& path);
void write_json(const TableRun& run, const TableConfig& cfg, const std::string& path);

struct RedundancyRow {
    ExactRational epsilon;
    std::uint64_t redundancy_bits = 0;                // ceil(N * -log2(1-eps))
    std::optional<std::uint64_t> predicted_payload;   // when p is given
};

// Redundancy per epsilon at message length N; with p, also the payload length
// predicted for a message whose zero count is the nearest integer to p*N.
std::vector<RedundancyRow> redundancy_table(std::uint64_t N, const std::vector<ExactRational>& epsilons,
                                            const std::optional<ExactRational>& p = std::nullopt);

} // namespace glsc

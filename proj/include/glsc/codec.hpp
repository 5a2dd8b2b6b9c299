#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "glsc/bitstring.hpp"
#include "glsc/gls_model.hpp"

namespace glsc {

// Everything the decoder needs to rebuild the partition.
struct SourceModel {
    std::uint64_t zero_count = 0;
    std::uint64_t length = 0; // N
    ExactRational epsilon;
    MapMode mode = MapMode::Binary;

    ExactRational p() const { return rational_from_counts(zero_count, length); }
};

struct CompressedArtifact {
    SourceModel model;
    BitString payload; // binary expansion of an initial value inside [START, END)
};

struct DecodeSuccess {
    BitString message;
};

struct DecodeDetected {
    std::uint64_t symbol_index = 0; // first iterate that landed in the forbidden branch
    BitString prefix;               // symbols decoded before the hit
};

using DecodeOutcome = std::variant<DecodeSuccess, DecodeDetected>;

// Final interval [START, END) for msg under part (backward iteration),
// computed with an integer core (no per-step gcd).
CodingInterval message_interval(const BitString& msg, const GlsPartition& part);

// Midpoint bits: L0 = ceil(-log2 w) bits when the truncated midpoint still
// lies in the interval, else L0+1 bits. The emitted value always decodes back.
BitString emit_midpoint_bits(const CodingInterval& iv);

// Encode against an explicit partition (the repetition-code path injects its
// own branch widths here). Returns the payload bits only.
BitString encode_with_partition(const BitString& msg, const GlsPartition& part);

// Model from the message's own zero count; msg needs at least one 0 and one 1.
CompressedArtifact encode(const BitString& msg, const ExactRational& epsilon, MapMode mode);

// Forward-iterate the payload value N times, reading off symbols; stops at
// the first forbidden-branch hit.
DecodeOutcome decode(const CompressedArtifact& artifact);

// Diagnostics (floating point; never used in coding decisions).
double entropy_bits_per_symbol(std::uint64_t zero_count, std::uint64_t n);
double redundancy_bits_per_symbol(const ExactRational& epsilon);
double code_rate(const ExactRational& epsilon);

// ceil(N * -log2(1-eps)) computed exactly.
std::uint64_t redundancy_bits(std::uint64_t n, const ExactRational& epsilon);

// Container: magic "GLSC" | version u8=1 | mode u8 | N u64 | zero_count u64 |
// eps_num u16 | eps_den u16 | payload_bit_len u64 | payload packed MSB-first.
// All integers big-endian.
std::vector<std::uint8_t> serialize_artifact(const CompressedArtifact& artifact);
CompressedArtifact parse_artifact(const std::vector<std::uint8_t>& bytes);
void save_artifact(const std::string& path, const CompressedArtifact& artifact);
CompressedArtifact load_artifact(const std::string& path);

} // namespace glsc

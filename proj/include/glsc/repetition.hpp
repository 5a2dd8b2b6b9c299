#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "glsc/bitstring.hpp"
#include "glsc/gls_model.hpp"

namespace glsc {

struct RepetitionParams {
    unsigned n = 1; // odd, >= 1
};

// Each bit repeated n times.
BitString rep_encode(const BitString& msg, unsigned n);

// Majority vote per n-bit block; second element counts non-uniform blocks.
std::pair<BitString, std::uint64_t> rep_decode_majority(const BitString& code, unsigned n);

// Same codewords produced through the coding map: Binary mode with branch
// widths {2^-n, 1-2^-(n-1), 2^-n}, ignoring the message's own statistics.
BitString rep_encode_via_gls(const BitString& msg, unsigned n);

// Depth-k approximation of the codeword set: 2^k disjoint intervals of width
// 2^-(nk), obtained by k rounds of keeping the first and last 2^-n fraction.
struct CantorApprox {
    unsigned n = 1;
    unsigned depth = 0;
    std::vector<CodingInterval> intervals; // ascending order
};

CantorApprox cantor_approx(unsigned n, unsigned depth);

bool cantor_member(const DyadicFraction& x, unsigned n, unsigned depth);

// log N(delta) / log(1/delta) at delta = 2^-(nk): equal to 1/n at every depth.
double box_counting_dimension(unsigned n, unsigned k);

} // namespace glsc

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "glsc/rational.hpp"

namespace glsc {

// Ordered sequence of bits. Indexable from the front (0-based) and from the
// end ("distance d": d=1 is the last bit). One byte per bit internally; the
// packed forms are only for the wire.
class BitString {
public:
    BitString() = default;

    static BitString from_string(std::string_view s); // '0'/'1' characters
    // MSB-first bits of m as a fixed-width field; requires m < 2^width.
    static BitString from_mantissa(const mpz_class& m, std::uint32_t width);
    // Unpack bit_len bits from MSB-first packed bytes.
    static BitString unpack(const std::uint8_t* data, std::size_t nbytes, std::uint64_t bit_len);

    void push_back(int bit);
    int operator[](std::size_t i) const { return bits_[i]; }
    // d=1 addresses the last bit.
    int from_end(std::size_t d) const;
    void flip_from_end(std::size_t d);

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    std::uint64_t count_zeros() const;

    auto begin() const { return bits_.begin(); }
    auto end() const { return bits_.end(); }

    std::string to_string() const;
    std::vector<std::uint8_t> pack() const; // MSB-first, zero-padded
    DyadicFraction to_dyadic() const;       // value 0.b1b2...

    bool operator==(const BitString&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

// Longest common prefix length of two bit strings.
std::size_t common_prefix(const BitString& a, const BitString& b);

// Message files: u64 big-endian bit count, then the bits packed MSB-first
// and zero-padded to a byte boundary.
void save_message_file(const std::string& path, const BitString& bits);
BitString load_message_file(const std::string& path);

} // namespace glsc

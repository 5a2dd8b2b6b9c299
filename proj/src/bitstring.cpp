#include "glsc/bitstring.hpp"

#include <algorithm>
#include <fstream>

#include "glsc/errors.hpp"

namespace glsc {

BitString BitString::from_string(std::string_view s) {
    BitString out;
    out.bits_.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1')
            throw InvalidParameterError("bit string may contain only '0' and '1'");
        out.bits_.push_back(c == '1' ? 1 : 0);
    }
    return out;
}

BitString BitString::from_mantissa(const mpz_class& m, std::uint32_t width) {
    if (m < 0 || m >= (mpz_class(1) << width))
        throw InvalidParameterError("mantissa does not fit the requested width");
    BitString out;
    out.bits_.resize(width);
    for (std::uint32_t i = 0; i < width; ++i)
        out.bits_[i] = static_cast<std::uint8_t>(mpz_tstbit(m.get_mpz_t(), width - 1 - i));
    return out;
}

BitString BitString::unpack(const std::uint8_t* data, std::size_t nbytes, std::uint64_t bit_len) {
    if (bit_len > nbytes * 8)
        throw FramingError("bit count exceeds available bytes");
    BitString out;
    out.bits_.resize(bit_len);
    for (std::uint64_t i = 0; i < bit_len; ++i)
        out.bits_[i] = (data[i / 8] >> (7 - i % 8)) & 1;
    return out;
}

void BitString::push_back(int bit) {
    if (bit != 0 && bit != 1) throw InvalidParameterError("bit must be 0 or 1");
    bits_.push_back(static_cast<std::uint8_t>(bit));
}

int BitString::from_end(std::size_t d) const {
    if (d < 1 || d > bits_.size())
        throw InvalidParameterError("end-distance out of range");
    return bits_[bits_.size() - d];
}

void BitString::flip_from_end(std::size_t d) {
    if (d < 1 || d > bits_.size())
        throw InvalidParameterError("end-distance out of range");
    bits_[bits_.size() - d] ^= 1;
}

std::uint64_t BitString::count_zeros() const {
    return static_cast<std::uint64_t>(std::count(bits_.begin(), bits_.end(), 0));
}

std::string BitString::to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) s[i] = '1';
    return s;
}

std::vector<std::uint8_t> BitString::pack() const {
    std::vector<std::uint8_t> bytes((bits_.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) bytes[i / 8] |= static_cast<std::uint8_t>(1u << (7 - i % 8));
    return bytes;
}

DyadicFraction BitString::to_dyadic() const {
    mpz_class m = 0;
    for (std::uint8_t b : bits_) {
        m <<= 1;
        if (b) m |= 1;
    }
    return DyadicFraction{std::move(m), static_cast<std::uint32_t>(bits_.size())};
}

std::size_t common_prefix(const BitString& a, const BitString& b) {
    std::size_t n = std::min(a.size(), b.size());
    std::size_t i = 0;
    while (i < n && a[i] == b[i]) ++i;
    return i;
}

void save_message_file(const std::string& path, const BitString& bits) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw FramingError("cannot open '" + path + "' for writing");
    std::uint64_t n = bits.size();
    std::uint8_t head[8];
    for (int i = 0; i < 8; ++i)
        head[i] = static_cast<std::uint8_t>(n >> (56 - 8 * i));
    f.write(reinterpret_cast<const char*>(head), 8);
    auto packed = bits.pack();
    f.write(reinterpret_cast<const char*>(packed.data()), static_cast<std::streamsize>(packed.size()));
    if (!f) throw FramingError("short write to '" + path + "'");
}

BitString load_message_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw FramingError("cannot open '" + path + "'");
    std::vector<std::uint8_t> raw((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    if (raw.size() < 8) throw FramingError("message file shorter than its header");
    std::uint64_t n = 0;
    for (int i = 0; i < 8; ++i)
        n = (n << 8) | raw[static_cast<std::size_t>(i)];
    if (raw.size() != 8 + (n + 7) / 8)
        throw FramingError("message file length does not match its bit count");
    BitString bits = BitString::unpack(raw.data() + 8, raw.size() - 8, n);
    // padding must be zero
    for (std::uint64_t i = n; i < (raw.size() - 8) * 8; ++i)
        if ((raw[8 + i / 8] >> (7 - i % 8)) & 1)
            throw FramingError("nonzero padding in message file");
    return bits;
}

} // namespace glsc

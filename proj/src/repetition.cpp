#include "glsc/repetition.hpp"

#include "glsc/codec.hpp"
#include "glsc/errors.hpp"

namespace glsc {

namespace {

void check_n(unsigned n) {
    if (n < 1 || n % 2 == 0)
        throw InvalidParameterError("repetition factor must be a positive odd integer");
}

} // namespace

BitString rep_encode(const BitString& msg, unsigned n) {
    check_n(n);
    BitString out;
    for (int bit : msg)
        for (unsigned i = 0; i < n; ++i)
            out.push_back(bit);
    return out;
}

std::pair<BitString, std::uint64_t> rep_decode_majority(const BitString& code, unsigned n) {
    check_n(n);
    if (code.size() % n != 0)
        throw FramingError("code length not divisible by the repetition factor");
    BitString out;
    std::uint64_t corrected = 0;
    for (std::size_t at = 0; at < code.size(); at += n) {
        unsigned ones = 0;
        for (unsigned i = 0; i < n; ++i)
            ones += static_cast<unsigned>(code[at + i]);
        out.push_back(ones > n / 2 ? 1 : 0);
        if (ones != 0 && ones != n) ++corrected;
    }
    return {std::move(out), corrected};
}

BitString rep_encode_via_gls(const BitString& msg, unsigned n) {
    check_n(n);
    if (msg.empty())
        return BitString(); // the codeword interval is all of [0,1): nothing to emit
    // eps = 1 - 2^-(n-1); the kept fraction splits evenly, so p = 1/2.
    ExactRational eps = ExactRational(1) - ExactRational(1, mpz_class(1) << (n - 1));
    GlsPartition part = make_partition(ExactRational(1, 2), eps, MapMode::Binary);
    return encode_with_partition(msg, part);
}

CantorApprox cantor_approx(unsigned n, unsigned depth) {
    check_n(n);
    if (depth > 16)
        throw InvalidParameterError("approximation depth too large to enumerate");
    CantorApprox out;
    out.n = n;
    out.depth = depth;
    out.intervals = {full_interval()};
    ExactRational keep(1, mpz_class(1) << n); // 2^-n of each interval survives at both ends
    for (unsigned level = 0; level < depth; ++level) {
        std::vector<CodingInterval> next;
        next.reserve(out.intervals.size() * 2);
        for (const CodingInterval& iv : out.intervals) {
            ExactRational piece = iv.width() * keep;
            next.push_back(CodingInterval{iv.low, iv.low + piece});
            next.push_back(CodingInterval{iv.high - piece, iv.high});
        }
        out.intervals = std::move(next);
    }
    return out;
}

bool cantor_member(const DyadicFraction& x, unsigned n, unsigned depth) {
    ExactRational v = x.to_rational();
    if (v < 0 || v >= 1)
        throw DomainError("cantor_member: x outside [0,1)");
    for (const CodingInterval& iv : cantor_approx(n, depth).intervals)
        if (v >= iv.low && v < iv.high) return true;
    return false;
}

double box_counting_dimension(unsigned n, unsigned k) {
    check_n(n);
    if (k < 1)
        throw InvalidParameterError("depth must be at least 1");
    // log2 N(delta) = k boxes, log2(1/delta) = n*k: exact integers, so the
    // quotient is 1/n with no limit to take.
    return static_cast<double>(k) / static_cast<double>(static_cast<std::uint64_t>(n) * k);
}

} // namespace glsc

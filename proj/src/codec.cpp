#include "glsc/codec.hpp"

#include <cmath>
#include <fstream>

#include "glsc/errors.hpp"

namespace glsc {

namespace {

// Integer view of a partition: all endpoints scaled by a common denominator
// D, so interval refinement and orbit iteration run gcd-free on mpz values.
struct PartInts {
    mpz_class D;
    mpz_class low[3];
    mpz_class width[3];
    mpz_class high[3]; // low + width
    bool ascending[3];
};

PartInts part_ints(const GlsPartition& part) {
    const mpz_class& np = part.p.num();
    const mpz_class& dp = part.p.den();
    const mpz_class& ne = part.epsilon.num();
    const mpz_class& de = part.epsilon.den();

    PartInts pi;
    pi.D = dp * de;
    mpz_class keep = de - ne; // (1 - eps) * de
    pi.width[0] = keep * np;
    pi.width[1] = ne * dp;
    pi.width[2] = keep * (dp - np);
    pi.low[0] = 0;
    pi.low[1] = pi.width[0];
    pi.low[2] = pi.width[0] + pi.width[1];
    for (int i = 0; i < 3; ++i) {
        pi.high[i] = pi.low[i] + pi.width[i];
        pi.ascending[i] = part.branches[static_cast<std::size_t>(i)].ascending;
    }
    return pi;
}

struct FoldState {
    mpz_class a; // interval low, numerator over D^k
    mpz_class W; // interval width, numerator over D^k
    bool flipped = false;
    bool left_closed = true;
};

// Backward iteration over the whole message in scaled integers.
FoldState fold_message(const BitString& msg, const PartInts& pi) {
    FoldState st;
    st.a = 0;
    st.W = 1;
    for (int bit : msg) {
        int s = bit ? 2 : 0;
        st.left_closed = st.flipped ? false : (pi.low[s] > 0 || st.left_closed);
        if (!st.flipped)
            st.a = st.a * pi.D + st.W * pi.low[s];
        else
            st.a = (st.a + st.W) * pi.D - st.W * pi.high[s];
        st.W *= pi.width[s];
        st.flipped = st.flipped != !pi.ascending[s];
    }
    return st;
}

void check_interval(const CodingInterval& iv) {
    if (iv.low < 0 || iv.high > 1 || iv.low >= iv.high)
        throw InvalidParameterError("invalid coding interval");
}

} // namespace

CodingInterval message_interval(const BitString& msg, const GlsPartition& part) {
    PartInts pi = part_ints(part);
    FoldState st = fold_message(msg, pi);
    mpz_class dk;
    mpz_pow_ui(dk.get_mpz_t(), pi.D.get_mpz_t(), msg.size());
    CodingInterval iv;
    iv.low = ExactRational(st.a, dk);
    iv.high = ExactRational(st.a + st.W, std::move(dk));
    iv.flipped = st.flipped;
    iv.left_closed = st.left_closed;
    return iv;
}

BitString emit_midpoint_bits(const CodingInterval& iv) {
    check_interval(iv);
    std::uint32_t L0 = ceil_neg_log2(iv.width());
    ExactRational mid = (iv.low + iv.high) / 2;
    DyadicFraction t0 = dyadic_truncate(mid, L0);
    ExactRational v0 = t0.to_rational();
    if (v0 > iv.low || (iv.left_closed && v0 == iv.low))
        return BitString::from_mantissa(t0.mantissa, L0);
    // One refinement level is always enough: the (L0+1)-bit truncation sits
    // within 2^-(L0+1) < w/2 below the midpoint, hence strictly above low.
    DyadicFraction t1 = dyadic_truncate(mid, L0 + 1);
    return BitString::from_mantissa(t1.mantissa, L0 + 1);
}

BitString encode_with_partition(const BitString& msg, const GlsPartition& part) {
    if (msg.empty()) throw DegenerateSourceError("cannot encode an empty message");
    return emit_midpoint_bits(message_interval(msg, part));
}

CompressedArtifact encode(const BitString& msg, const ExactRational& epsilon, MapMode mode) {
    std::uint64_t zeros = msg.count_zeros();
    if (msg.empty() || zeros == 0 || zeros == msg.size())
        throw DegenerateSourceError("message must contain both symbols");
    SourceModel model{zeros, msg.size(), epsilon, mode};
    GlsPartition part = make_partition(model.p(), epsilon, mode);
    return CompressedArtifact{std::move(model), encode_with_partition(msg, part)};
}

DecodeOutcome decode(const CompressedArtifact& artifact) {
    const SourceModel& m = artifact.model;
    if (m.length < 2 || m.zero_count == 0 || m.zero_count >= m.length)
        throw ContainerFormatError("header implies a degenerate source");
    if (m.epsilon < 0 || m.epsilon >= 1)
        throw ContainerFormatError("header epsilon outside [0,1)");
    if (artifact.payload.empty())
        throw ContainerFormatError("empty payload");

    GlsPartition part = make_partition(m.p(), m.epsilon, m.mode);
    PartInts pi = part_ints(part);

    // Orbit state x = n / Delta. A corrupted payload can step exactly onto a
    // descending branch's left endpoint, whose image is exactly 1; the
    // formulas continue through that point (n == Delta reads as the all-ones
    // tail), so no special case and no spurious abort.
    DyadicFraction x0 = artifact.payload.to_dyadic();
    mpz_class n = x0.mantissa;
    mpz_class delta = mpz_class(1) << x0.precision_bits;

    BitString out;
    mpz_class q, cut;
    for (std::uint64_t k = 0; k < m.length; ++k) {
        q = n * pi.D;
        int s;
        cut = pi.width[0] * delta;
        if (q < cut) {
            s = 0;
        } else {
            cut = pi.low[2] * delta;
            s = q < cut ? 1 : 2;
        }
        if (s == 1) return DecodeDetected{k, std::move(out)};
        if (pi.ascending[s])
            n = q - pi.low[s] * delta;
        else
            n = pi.high[s] * delta - q;
        delta *= pi.width[s];
        out.push_back(s ? 1 : 0);
    }
    return DecodeSuccess{std::move(out)};
}

double entropy_bits_per_symbol(std::uint64_t zero_count, std::uint64_t n) {
    if (n == 0 || zero_count == 0 || zero_count >= n)
        throw DegenerateSourceError("entropy undefined for a one-symbol source");
    double p = static_cast<double>(zero_count) / static_cast<double>(n);
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double redundancy_bits_per_symbol(const ExactRational& epsilon) {
    if (epsilon < 0 || epsilon >= 1)
        throw DomainError("epsilon outside [0,1)");
    return -std::log2((ExactRational(1) - epsilon).to_double());
}

double code_rate(const ExactRational& epsilon) {
    return 1.0 / (1.0 + redundancy_bits_per_symbol(epsilon));
}

std::uint64_t redundancy_bits(std::uint64_t n, const ExactRational& epsilon) {
    if (epsilon < 0 || epsilon >= 1)
        throw DomainError("epsilon outside [0,1)");
    return ceil_neg_log2(pow(ExactRational(1) - epsilon, n));
}

namespace {

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 7; i >= 0; --i)
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint16_t get_u16(const std::vector<std::uint8_t>& in, std::size_t at) {
    return static_cast<std::uint16_t>((in[at] << 8) | in[at + 1]);
}

std::uint64_t get_u64(const std::vector<std::uint8_t>& in, std::size_t at) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
        v = (v << 8) | in[at + static_cast<std::size_t>(i)];
    return v;
}

constexpr std::size_t kHeaderBytes = 4 + 1 + 1 + 8 + 8 + 2 + 2 + 8;

} // namespace

std::vector<std::uint8_t> serialize_artifact(const CompressedArtifact& artifact) {
    const SourceModel& m = artifact.model;
    if (m.zero_count == 0 || m.zero_count >= m.length)
        throw ContainerFormatError("degenerate source counts cannot be serialized");
    if (m.epsilon < 0 || m.epsilon >= 1)
        throw ContainerFormatError("epsilon outside [0,1)");
    if (m.epsilon.den() > 65535 || m.epsilon.num() > 65535)
        throw ContainerFormatError("epsilon does not fit 16-bit container fields");

    std::vector<std::uint8_t> out;
    out.reserve(kHeaderBytes + (artifact.payload.size() + 7) / 8);
    out.push_back('G');
    out.push_back('L');
    out.push_back('S');
    out.push_back('C');
    out.push_back(1);
    out.push_back(static_cast<std::uint8_t>(m.mode));
    put_u64(out, m.length);
    put_u64(out, m.zero_count);
    put_u16(out, static_cast<std::uint16_t>(m.epsilon.num().get_ui()));
    put_u16(out, static_cast<std::uint16_t>(m.epsilon.den().get_ui()));
    put_u64(out, artifact.payload.size());
    auto packed = artifact.payload.pack();
    out.insert(out.end(), packed.begin(), packed.end());
    return out;
}

CompressedArtifact parse_artifact(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < kHeaderBytes)
        throw ContainerFormatError("container shorter than its header");
    if (bytes[0] != 'G' || bytes[1] != 'L' || bytes[2] != 'S' || bytes[3] != 'C')
        throw ContainerFormatError("bad magic");
    if (bytes[4] != 1)
        throw ContainerFormatError("unsupported container version");
    if (bytes[5] > 1)
        throw ContainerFormatError("unknown map mode");

    CompressedArtifact art;
    art.model.mode = static_cast<MapMode>(bytes[5]);
    art.model.length = get_u64(bytes, 6);
    art.model.zero_count = get_u64(bytes, 14);
    std::uint16_t eps_num = get_u16(bytes, 22);
    std::uint16_t eps_den = get_u16(bytes, 24);
    if (eps_den == 0 || (eps_num >= eps_den && eps_num != 0))
        throw ContainerFormatError("header epsilon outside [0,1)");
    art.model.epsilon = ExactRational(static_cast<long>(eps_num), static_cast<long>(eps_den));
    if (art.model.zero_count == 0 || art.model.zero_count >= art.model.length)
        throw ContainerFormatError("header implies a degenerate source");

    std::uint64_t bit_len = get_u64(bytes, 26);
    std::uint64_t payload_bytes = (bit_len + 7) / 8;
    if (bytes.size() != kHeaderBytes + payload_bytes)
        throw ContainerFormatError("container length does not match payload bit count");
    art.payload = BitString::unpack(bytes.data() + kHeaderBytes, payload_bytes, bit_len);
    for (std::uint64_t i = bit_len; i < payload_bytes * 8; ++i)
        if ((bytes[kHeaderBytes + i / 8] >> (7 - i % 8)) & 1)
            throw ContainerFormatError("nonzero padding bits");
    return art;
}

void save_artifact(const std::string& path, const CompressedArtifact& artifact) {
    auto bytes = serialize_artifact(artifact);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw ContainerFormatError("cannot open '" + path + "' for writing");
    f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw ContainerFormatError("short write to '" + path + "'");
}

CompressedArtifact load_artifact(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ContainerFormatError("cannot open '" + path + "'");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return parse_artifact(bytes);
}

} // namespace glsc

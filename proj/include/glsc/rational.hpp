#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "glsc/errors.hpp"

namespace glsc {

// Arbitrary-precision rational, always canonical: denominator > 0, lowest
// terms, zero stored as 0/1. All arithmetic is exact; to_double() is for
// diagnostics only.
class ExactRational {
public:
    ExactRational() : q_(0) {}
    ExactRational(long n) : q_(n) {}                 // NOLINT: implicit by design
    ExactRational(unsigned long n) : q_(n) {}        // NOLINT
    ExactRational(int n) : q_(n) {}                  // NOLINT
    ExactRational(mpz_class n) : q_(std::move(n)) {} // NOLINT
    ExactRational(long n, long d) : ExactRational(mpz_class(n), mpz_class(d)) {}
    ExactRational(mpz_class n, mpz_class d);

    // Accepts "a/b", an integer, or a decimal like "0.03" (converted exactly).
    static ExactRational parse(const std::string& text);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }
    double to_double() const { return q_.get_d(); }

    // "num/den", or just "num" when the denominator is 1.
    std::string str() const;

    friend ExactRational operator+(const ExactRational& a, const ExactRational& b);
    friend ExactRational operator-(const ExactRational& a, const ExactRational& b);
    friend ExactRational operator*(const ExactRational& a, const ExactRational& b);
    friend ExactRational operator/(const ExactRational& a, const ExactRational& b);
    ExactRational operator-() const;

    friend bool operator==(const ExactRational& a, const ExactRational& b) {
        return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
        int c = cmp(a.q_, b.q_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactRational& r);

private:
    struct canonical_tag {};
    ExactRational(mpq_class q, canonical_tag) : q_(std::move(q)) {}

    mpq_class q_;
};

// base^e, exact.
ExactRational pow(const ExactRational& base, std::uint64_t e);

// zeros/total in lowest terms; the empirical probability of a zero bit.
ExactRational rational_from_counts(std::uint64_t zeros, std::uint64_t total);

// mantissa / 2^precision_bits, always in [0,1).
struct DyadicFraction {
    mpz_class mantissa;
    std::uint32_t precision_bits = 0;

    ExactRational to_rational() const;
    bool operator==(const DyadicFraction&) const = default;
};

// Largest k-bit dyadic <= x. Requires 0 <= x < 1.
DyadicFraction dyadic_truncate(const ExactRational& x, std::uint32_t k);

// Smallest L >= 0 with 2^-L <= w, by exact integer comparison. Requires 0 < w <= 1.
std::uint32_t ceil_neg_log2(const ExactRational& w);

} // namespace glsc

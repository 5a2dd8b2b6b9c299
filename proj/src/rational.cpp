#include "glsc/rational.hpp"

#include <cctype>
#include <ostream>

namespace glsc {

namespace {

bool digits_only(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string s, const std::string& whole) {
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s.erase(0, 1);
    }
    if (!digits_only(s))
        throw InvalidParameterError("not a rational: '" + whole + "'");
    mpz_class z(s, 10);
    return neg ? mpz_class(-z) : z;
}

} // namespace

ExactRational::ExactRational(mpz_class n, mpz_class d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(std::move(n), std::move(d));
    q_.canonicalize();
}

ExactRational ExactRational::parse(const std::string& text) {
    if (auto slash = text.find('/'); slash != std::string::npos) {
        mpz_class n = parse_integer(text.substr(0, slash), text);
        std::string den_part = text.substr(slash + 1);
        if (!digits_only(den_part))
            throw InvalidParameterError("not a rational: '" + text + "'");
        mpz_class d(den_part, 10);
        if (d == 0) throw InvalidParameterError("zero denominator: '" + text + "'");
        return ExactRational(std::move(n), std::move(d));
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
        std::string head = text.substr(0, dot);
        std::string frac = text.substr(dot + 1);
        bool neg = false;
        if (!head.empty() && (head[0] == '-' || head[0] == '+')) {
            neg = head[0] == '-';
            head.erase(0, 1);
        }
        if ((head.empty() && frac.empty()) || (!head.empty() && !digits_only(head)) ||
            (!frac.empty() && !digits_only(frac)))
            throw InvalidParameterError("not a rational: '" + text + "'");
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        mpz_class n = (head.empty() ? mpz_class(0) : mpz_class(head, 10)) * scale +
                      (frac.empty() ? mpz_class(0) : mpz_class(frac, 10));
        if (neg) n = -n;
        return ExactRational(std::move(n), std::move(scale));
    }
    return ExactRational(parse_integer(text, text));
}

std::string ExactRational::str() const {
    if (den() == 1) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

ExactRational operator+(const ExactRational& a, const ExactRational& b) {
    return ExactRational(mpq_class(a.q_ + b.q_), ExactRational::canonical_tag{});
}

ExactRational operator-(const ExactRational& a, const ExactRational& b) {
    return ExactRational(mpq_class(a.q_ - b.q_), ExactRational::canonical_tag{});
}

ExactRational operator*(const ExactRational& a, const ExactRational& b) {
    return ExactRational(mpq_class(a.q_ * b.q_), ExactRational::canonical_tag{});
}

ExactRational operator/(const ExactRational& a, const ExactRational& b) {
    if (b.q_ == 0) throw DomainError("rational division by zero");
    return ExactRational(mpq_class(a.q_ / b.q_), ExactRational::canonical_tag{});
}

ExactRational ExactRational::operator-() const {
    return ExactRational(mpq_class(-q_), canonical_tag{});
}

std::ostream& operator<<(std::ostream& os, const ExactRational& r) {
    return os << r.str();
}

ExactRational pow(const ExactRational& base, std::uint64_t e) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), e);
    return ExactRational(std::move(n), std::move(d));
}

ExactRational rational_from_counts(std::uint64_t zeros, std::uint64_t total) {
    if (total == 0) throw DegenerateSourceError("empty source: total count is zero");
    if (zeros > total) throw InvalidParameterError("zero count exceeds total");
    return ExactRational(mpz_class(zeros), mpz_class(total));
}

ExactRational DyadicFraction::to_rational() const {
    mpz_class d = 1;
    d <<= precision_bits;
    return ExactRational(mantissa, std::move(d));
}

DyadicFraction dyadic_truncate(const ExactRational& x, std::uint32_t k) {
    if (x < 0 || x >= 1) throw DomainError("dyadic_truncate: x outside [0,1)");
    mpz_class m = (x.num() << k) / x.den(); // floor: both operands non-negative
    return DyadicFraction{std::move(m), k};
}

std::uint32_t ceil_neg_log2(const ExactRational& w) {
    if (w <= 0 || w > 1) throw DomainError("ceil_neg_log2: w outside (0,1]");
    const mpz_class& num = w.num();
    const mpz_class& den = w.den();
    if (num >= den) return 0;
    // smallest L with num * 2^L >= den; start at floor(log2(den/num)), which
    // never overshoots, and step up (at most twice).
    mpz_class q = den / num;
    auto L = static_cast<std::uint32_t>(mpz_sizeinbase(q.get_mpz_t(), 2) - 1);
    mpz_class lhs = num << L;
    while (lhs < den) {
        lhs <<= 1;
        ++L;
    }
    return L;
}

} // namespace glsc

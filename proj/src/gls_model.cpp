#include "glsc/gls_model.hpp"

#include "glsc/errors.hpp"

namespace glsc {

GlsPartition make_partition(const ExactRational& p, const ExactRational& epsilon, MapMode mode) {
    if (p <= 0 || p >= 1)
        throw DegenerateSourceError("p must lie strictly between 0 and 1, got " + p.str());
    if (epsilon < 0 || epsilon >= 1)
        throw InvalidParameterError("epsilon must lie in [0,1), got " + epsilon.str());

    ExactRational keep = ExactRational(1) - epsilon;
    ExactRational w0 = keep * p;
    ExactRational w2 = keep * (ExactRational(1) - p);

    GlsPartition part;
    part.p = p;
    part.epsilon = epsilon;
    part.mode = mode;
    bool one_descends = mode == MapMode::Tent;
    part.branches = {
        Branch{SymbolKind::Zero, ExactRational(0), w0, true},
        Branch{SymbolKind::Forbidden, w0, epsilon, true},
        Branch{SymbolKind::One, w0 + epsilon, w2, !one_descends},
    };
    return part;
}

CodingInterval full_interval() {
    return CodingInterval{ExactRational(0), ExactRational(1), false, true};
}

SymbolKind locate_symbol(const ExactRational& x, const GlsPartition& part) {
    if (x < 0 || x >= 1) throw DomainError("locate_symbol: x outside [0,1)");
    const Branch& zero = part.branch(SymbolKind::Zero);
    if (x < zero.width) return SymbolKind::Zero;
    const Branch& one = part.branch(SymbolKind::One);
    if (x < one.low) return SymbolKind::Forbidden;
    return SymbolKind::One;
}

std::pair<SymbolKind, ExactRational> forward_iterate(const ExactRational& x, const GlsPartition& part) {
    SymbolKind s = locate_symbol(x, part);
    const Branch& b = part.branch(s);
    ExactRational y = b.ascending ? (x - b.low) / b.width
                                  : (b.low + b.width - x) / b.width;
    return {s, std::move(y)};
}

CodingInterval refine_interval(const CodingInterval& iv, SymbolKind s, const GlsPartition& part) {
    const Branch& b = part.branch(s);
    if (b.width == 0)
        throw InvalidParameterError("cannot refine through a zero-width branch");

    ExactRational w = iv.width();
    CodingInterval out;
    if (!iv.flipped) {
        out.low = iv.low + w * b.low;
        out.high = out.low + w * b.width;
        // the low endpoint stays attainable unless it was already excluded
        // and still sits at the very left of the parameter range
        out.left_closed = b.low > 0 || iv.left_closed;
    } else {
        out.high = iv.high - w * b.low;
        out.low = out.high - w * b.width;
        // a flipped step lands the new low on a branch-top image, never attainable
        out.left_closed = false;
    }
    out.flipped = iv.flipped != !b.ascending;
    return out;
}

} // namespace glsc

#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "glsc/rational.hpp"

namespace glsc {

enum class SymbolKind : std::uint8_t { Zero = 0, Forbidden = 1, One = 2 };

enum class MapMode : std::uint8_t { Binary = 0, Tent = 1 };

struct Branch {
    SymbolKind symbol;
    ExactRational low;
    ExactRational width;
    bool ascending;
};

// Interval of initial values, refined one symbol at a time. `flipped` is the
// accumulated orientation (odd number of descending branches applied);
// `left_closed` records whether the low endpoint itself is still a valid
// initial value, which the emitter needs for its boundary case.
struct CodingInterval {
    ExactRational low;
    ExactRational high;
    bool flipped = false;
    bool left_closed = true;

    ExactRational width() const { return high - low; }
};

// Three-branch partition of [0,1): Zero | Forbidden | One, with widths
// (1-eps)p, eps, (1-eps)(1-p). Binary mode is all ascending; Tent mode
// descends on the One branch.
struct GlsPartition {
    std::array<Branch, 3> branches;
    ExactRational p;
    ExactRational epsilon;
    MapMode mode;

    const Branch& branch(SymbolKind s) const { return branches[static_cast<std::size_t>(s)]; }
};

GlsPartition make_partition(const ExactRational& p, const ExactRational& epsilon, MapMode mode);

// Whole unit interval, orientation untouched.
CodingInterval full_interval();

// Branch whose half-open [low, low+width) contains x. Requires 0 <= x < 1.
SymbolKind locate_symbol(const ExactRational& x, const GlsPartition& part);

// One application of the map: (symbol at x, T(x)).
std::pair<SymbolKind, ExactRational> forward_iterate(const ExactRational& x, const GlsPartition& part);

// Sub-interval of iv whose forward orbit emits s next; width scales by the
// branch width exactly. Descending branches toggle orientation.
CodingInterval refine_interval(const CodingInterval& iv, SymbolKind s, const GlsPartition& part);

} // namespace glsc

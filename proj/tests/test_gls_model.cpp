#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "glsc/errors.hpp"
#include "glsc/gls_model.hpp"

using namespace glsc;

namespace {

ExactRational quarter_point(const CodingInterval& iv, int which) {
    // interior points at 1/4, 1/2, 3/4 of the interval
    return iv.low + iv.width() * ExactRational(which, 4);
}

struct PartitionDraw {
    std::mt19937_64 eng{2024};
    std::vector<ExactRational> eps_pool{ExactRational(0), ExactRational(1, 200), ExactRational(3, 100),
                                        ExactRational(1, 20), ExactRational(1, 2), ExactRational(3, 4)};

    GlsPartition operator()() {
        long d = static_cast<long>(eng() % 59) + 2;
        long n = static_cast<long>(eng() % static_cast<unsigned long>(d - 1)) + 1;
        ExactRational eps = eps_pool[eng() % eps_pool.size()];
        MapMode mode = eng() % 2 ? MapMode::Tent : MapMode::Binary;
        return make_partition(ExactRational(n, d), eps, mode);
    }
};

} // namespace

TEST_CASE("partition geometry") {
    GlsPartition tent = make_partition(ExactRational(3, 5), ExactRational(0), MapMode::Tent);
    CHECK(tent.branch(SymbolKind::Zero).low == ExactRational(0));
    CHECK(tent.branch(SymbolKind::Zero).width == ExactRational(3, 5));
    CHECK(tent.branch(SymbolKind::Forbidden).low == ExactRational(3, 5));
    CHECK(tent.branch(SymbolKind::Forbidden).width == ExactRational(0));
    CHECK(tent.branch(SymbolKind::One).low == ExactRational(3, 5));
    CHECK(tent.branch(SymbolKind::One).width == ExactRational(2, 5));
    CHECK(tent.branch(SymbolKind::Zero).ascending);
    CHECK_FALSE(tent.branch(SymbolKind::One).ascending);

    GlsPartition mid = make_partition(ExactRational(1, 2), ExactRational(1, 2), MapMode::Binary);
    CHECK(mid.branch(SymbolKind::Zero).width == ExactRational(1, 4));
    CHECK(mid.branch(SymbolKind::Forbidden).width == ExactRational(1, 2));
    CHECK(mid.branch(SymbolKind::One).width == ExactRational(1, 4));
    CHECK(mid.branch(SymbolKind::One).ascending);

    GlsPartition skew = make_partition(ExactRational(1, 10), ExactRational(1, 20), MapMode::Binary);
    CHECK(skew.branch(SymbolKind::Zero).width == ExactRational(19, 200));
    CHECK(skew.branch(SymbolKind::Forbidden).width == ExactRational(1, 20));
    CHECK(skew.branch(SymbolKind::One).width == ExactRational(171, 200));
}

TEST_CASE("branch widths always sum to one") {
    PartitionDraw draw;
    for (int i = 0; i < 100; ++i) {
        GlsPartition part = draw();
        ExactRational sum = part.branch(SymbolKind::Zero).width + part.branch(SymbolKind::Forbidden).width +
                            part.branch(SymbolKind::One).width;
        CHECK(sum == ExactRational(1));
        CHECK(part.branch(SymbolKind::One).low + part.branch(SymbolKind::One).width == ExactRational(1));
    }
}

TEST_CASE("degenerate partitions are rejected") {
    CHECK_THROWS_AS(make_partition(ExactRational(0), ExactRational(0), MapMode::Binary), DegenerateSourceError);
    CHECK_THROWS_AS(make_partition(ExactRational(1), ExactRational(0), MapMode::Binary), DegenerateSourceError);
    CHECK_THROWS_AS(make_partition(ExactRational(3, 2), ExactRational(0), MapMode::Binary), DegenerateSourceError);
    CHECK_THROWS_AS(make_partition(ExactRational(1, 2), ExactRational(1), MapMode::Binary), InvalidParameterError);
    CHECK_THROWS_AS(make_partition(ExactRational(1, 2), ExactRational(-1, 4), MapMode::Tent), InvalidParameterError);
}

TEST_CASE("symbol location uses half-open branches") {
    GlsPartition tent = make_partition(ExactRational(3, 5), ExactRational(0), MapMode::Tent);
    CHECK(locate_symbol(ExactRational(1, 2), tent) == SymbolKind::Zero);
    CHECK(locate_symbol(ExactRational(3, 5), tent) == SymbolKind::One);
    CHECK(locate_symbol(ExactRational(0), tent) == SymbolKind::Zero);

    GlsPartition skew = make_partition(ExactRational(3, 5), ExactRational(1, 20), MapMode::Binary);
    CHECK(locate_symbol(ExactRational(61, 100), skew) == SymbolKind::Forbidden);
    CHECK(locate_symbol(ExactRational(57, 100), skew) == SymbolKind::Forbidden);
    CHECK(locate_symbol(ExactRational(62, 100), skew) == SymbolKind::One);

    CHECK_THROWS_AS(locate_symbol(ExactRational(1), tent), DomainError);
    CHECK_THROWS_AS(locate_symbol(ExactRational(-1, 10), tent), DomainError);
}

TEST_CASE("zero-width forbidden branch is unreachable") {
    GlsPartition part = make_partition(ExactRational(2, 7), ExactRational(0), MapMode::Binary);
    std::mt19937_64 eng(5);
    for (int i = 0; i < 200; ++i) {
        long d = static_cast<long>(eng() % 997) + 1;
        long n = static_cast<long>(eng() % static_cast<unsigned long>(d));
        CHECK(locate_symbol(ExactRational(n, d), part) != SymbolKind::Forbidden);
    }
}

TEST_CASE("forward iteration") {
    GlsPartition tent = make_partition(ExactRational(3, 5), ExactRational(0), MapMode::Tent);
    auto [s0, x0] = forward_iterate(ExactRational(3, 10), tent);
    CHECK(s0 == SymbolKind::Zero);
    CHECK(x0 == ExactRational(1, 2));

    auto [s1, x1] = forward_iterate(ExactRational(4, 5), tent);
    CHECK(s1 == SymbolKind::One);
    CHECK(x1 == ExactRational(1, 2));

    GlsPartition binary = make_partition(ExactRational(3, 5), ExactRational(0), MapMode::Binary);
    auto [s2, x2] = forward_iterate(ExactRational(4, 5), binary);
    CHECK(s2 == SymbolKind::One);
    CHECK(x2 == ExactRational(1, 2));
}

TEST_CASE("interval refinement") {
    GlsPartition tent = make_partition(ExactRational(3, 5), ExactRational(0), MapMode::Tent);

    CodingInterval zero = refine_interval(full_interval(), SymbolKind::Zero, tent);
    CHECK(zero.low == ExactRational(0));
    CHECK(zero.high == ExactRational(3, 5));
    CHECK_FALSE(zero.flipped);
    CHECK(zero.left_closed);

    CodingInterval zz = refine_interval(zero, SymbolKind::Zero, tent);
    CHECK(zz.low == ExactRational(0));
    CHECK(zz.width() == ExactRational(9, 25));

    GlsPartition shift = make_partition(ExactRational(1, 2), ExactRational(0), MapMode::Binary);
    CodingInterval one = refine_interval(full_interval(), SymbolKind::One, shift);
    CHECK(one.low == ExactRational(1, 2));
    CHECK(one.high == ExactRational(1));
    CHECK(one.left_closed);

    CHECK_THROWS_AS(refine_interval(full_interval(), SymbolKind::Forbidden, tent), InvalidParameterError);
}

TEST_CASE("descending branches flip orientation and open the left end") {
    GlsPartition tent = make_partition(ExactRational(1, 2), ExactRational(0), MapMode::Tent);
    CodingInterval one = refine_interval(full_interval(), SymbolKind::One, tent);
    CHECK(one.low == ExactRational(1, 2));
    CHECK(one.flipped);
    CHECK(one.left_closed); // the branch's own left endpoint still emits One first

    CodingInterval one_zero = refine_interval(one, SymbolKind::Zero, tent);
    CHECK(one_zero.low == ExactRational(3, 4));
    CHECK(one_zero.high == ExactRational(1));
    CHECK(one_zero.flipped);
    CHECK_FALSE(one_zero.left_closed); // 3/4 itself decodes to "11", not "10"

    // and indeed the excluded endpoint's orbit diverges
    auto [s0, x] = forward_iterate(one_zero.low, tent);
    CHECK(s0 == SymbolKind::One);
    CHECK(locate_symbol(x, tent) == SymbolKind::One);
}

TEST_CASE("conjugacy: the refined interval contains its witness") {
    PartitionDraw draw;
    std::mt19937_64 eng(17);
    for (int i = 0; i < 200; ++i) {
        GlsPartition part = draw();
        long d = static_cast<long>(eng() % 997) + 1;
        ExactRational x(static_cast<long>(eng() % static_cast<unsigned long>(d)), d);
        SymbolKind s = locate_symbol(x, part);
        CodingInterval iv = refine_interval(full_interval(), s, part);
        CHECK(iv.low <= x);
        CHECK(x < iv.high);
        ExactRational y = forward_iterate(x, part).second;
        CHECK(y >= 0);
        // descending branches map their left endpoint to exactly 1
        if (y == ExactRational(1))
            CHECK(x == part.branch(s).low);
        else
            CHECK(y < 1);
    }
}

TEST_CASE("width telescopes to the product of branch widths") {
    PartitionDraw draw;
    std::mt19937_64 eng(23);
    for (int i = 0; i < 60; ++i) {
        GlsPartition part = draw();
        CodingInterval iv = full_interval();
        ExactRational product(1);
        int len = 1 + static_cast<int>(eng() % 12);
        for (int k = 0; k < len; ++k) {
            SymbolKind s = eng() % 2 ? SymbolKind::One : SymbolKind::Zero;
            if (part.epsilon > 0 && eng() % 5 == 0) s = SymbolKind::Forbidden; // oracle-only path
            iv = refine_interval(iv, s, part);
            product = product * part.branch(s).width;
        }
        CHECK(iv.width() == product);
    }
}

TEST_CASE("points inside the final interval replay the message") {
    PartitionDraw draw;
    std::mt19937_64 eng(31);
    for (int i = 0; i < 80; ++i) {
        GlsPartition part = draw();
        int len = 1 + static_cast<int>(eng() % 10);
        std::vector<SymbolKind> msg;
        CodingInterval iv = full_interval();
        for (int k = 0; k < len; ++k) {
            SymbolKind s = eng() % 2 ? SymbolKind::One : SymbolKind::Zero;
            msg.push_back(s);
            iv = refine_interval(iv, s, part);
        }
        for (int which = 1; which <= 3; ++which) {
            ExactRational x = quarter_point(iv, which);
            for (SymbolKind expected : msg) {
                auto [s, next] = forward_iterate(x, part);
                CHECK(s == expected);
                x = next;
            }
        }
        // the low endpoint replays the message exactly when it is attainable
        ExactRational x = iv.low;
        bool matches = true;
        try {
            for (SymbolKind expected : msg) {
                auto [s, next] = forward_iterate(x, part);
                if (s != expected) {
                    matches = false;
                    break;
                }
                x = next;
            }
        } catch (const DomainError&) {
            matches = false; // orbit escaped through a descending corner
        }
        CHECK(matches == iv.left_closed);
    }
}

TEST_CASE("modes compress identically") {
    std::mt19937_64 eng(41);
    std::vector<ExactRational> eps_pool{ExactRational(0), ExactRational(3, 100), ExactRational(3, 4)};
    for (int i = 0; i < 60; ++i) {
        long d = static_cast<long>(eng() % 29) + 2;
        long n = static_cast<long>(eng() % static_cast<unsigned long>(d - 1)) + 1;
        ExactRational p(n, d);
        ExactRational eps = eps_pool[eng() % eps_pool.size()];
        GlsPartition binary = make_partition(p, eps, MapMode::Binary);
        GlsPartition tent = make_partition(p, eps, MapMode::Tent);
        CodingInterval a = full_interval(), b = full_interval();
        int len = 1 + static_cast<int>(eng() % 14);
        for (int k = 0; k < len; ++k) {
            SymbolKind s = eng() % 2 ? SymbolKind::One : SymbolKind::Zero;
            a = refine_interval(a, s, binary);
            b = refine_interval(b, s, tent);
        }
        CHECK(a.width() == b.width());
    }
}

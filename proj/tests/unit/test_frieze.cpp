#include "generators.hpp"
#include "golden.hpp"
#include "oracle.hpp"

#include "sl2/cc_counting.hpp"
#include "sl2/error.hpp"
#include "sl2/frieze.hpp"

#include <doctest.h>

#include <algorithm>

using namespace sl2;

namespace {

std::vector<BigInt> big(std::initializer_list<long> xs) { return std::vector<BigInt>(xs.begin(), xs.end()); }

DiscFragment polygon(Index m, const std::vector<std::pair<int, int>>& diagonals) {
    DiscFragment f;
    f.shape = DiscShape::d2();
    for (Index i = 0; i < m; ++i) f.boundary.push_back(vI(i));
    for (auto [a, b] : diagonals) f.diagonals.emplace_back(vI(a), vI(b));
    return f;
}

std::set<Arc> arc_set(const std::vector<Arc>& v) { return {v.begin(), v.end()}; }

FriezeWindow golden_frieze() {
    FriezeWindow f;
    const auto rows = golden::infinite_frieze_rows();
    f.lo = -3;
    f.hi = 3;
    f.depth = 6;
    for (Index a = -3; a <= 3; ++a)
        for (Index d = a; d <= 3; ++d) f.set(a, d, rows[static_cast<std::size_t>(a + 3)][static_cast<std::size_t>(d - a)]);
    return f;
}

bool rotation_of(std::vector<BigInt> x, const std::vector<BigInt>& y) {
    for (std::size_t r = 0; r < x.size(); ++r) {
        if (x == y) return true;
        std::rotate(x.begin(), x.begin() + 1, x.end());
    }
    return false;
}

}  // namespace

TEST_CASE("frieze_from_quiddity") {
    SUBCASE("golden rows") {
        const auto f = frieze_from_quiddity(big({1, 7, 1, 2, 3}), -2, 6);
        const auto want = golden_frieze();
        for (const auto& [key, value] : want.entries) CHECK(f.at(key.first, key.second) == value);
        CHECK(validate_frieze(f).ok());
    }
    SUBCASE("quiddity 7,1,2,3") {
        const auto f = frieze_from_quiddity(big({7, 1, 2, 3}), -1, 4);
        const auto want = golden_frieze();
        std::size_t shared = 0;
        for (const auto& [key, value] : f.entries) {
            if (!want.has(key.first, key.second)) continue;
            CHECK(want.at(key.first, key.second) == value);
            ++shared;
        }
        CHECK(shared >= 20);
    }
    SUBCASE("all ones") {
        try {
            frieze_from_quiddity(big({1, 1, 1, 1, 1}), 0, 3);
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NonPositiveEntry);
        }
    }
    SUBCASE("all threes against continuants") {
        const auto f = frieze_from_quiddity(big({3, 3, 3, 3, 3, 3}), 1, 5);
        std::vector<long> row;
        for (Index d = 0; d <= 5; ++d) row.push_back(static_cast<long>(f.at(0, d)));
        CHECK(row == std::vector<long>{0, 1, 3, 8, 21, 55});
        for (const auto& [key, value] : f.entries) {
            const auto [a, d] = key;
            if (d - a < 2) continue;
            CHECK(value == oracle::continuant(std::vector<BigInt>(static_cast<std::size_t>(d - a - 1), 3)));
        }
    }
    SUBCASE("quiddity determinism") {
        const auto p = derived_friezes(golden::left_grid()).p;
        const auto q = p.quiddity();
        const auto f = frieze_from_quiddity(q, p.lo + 1, 6);
        for (const auto& [key, value] : f.entries)
            if (p.has(key.first, key.second)) CHECK(p.at(key.first, key.second) == value);
    }
}

TEST_CASE("cc_frieze_from_polygon") {
    SUBCASE("triangle") {
        const auto f = cc_frieze_from_polygon(polygon(3, {}));
        CHECK(f.kind == FriezeKind::FiniteCC);
        CHECK(f.period == 3);
        CHECK(validate_frieze(f).ok());
        for (Index a = f.lo; a <= f.hi; ++a) {
            if (f.has(a, a + 1)) CHECK(f.at(a, a + 1) == 1);
            if (f.has(a, a + 2)) CHECK(f.at(a, a + 2) == 1);
            if (f.has(a, a + 3)) CHECK(f.at(a, a + 3) == 0);
        }
    }
    SUBCASE("heptagon fan") {
        const auto f = cc_frieze_from_polygon(polygon(7, {{0, 2}, {0, 3}, {0, 4}, {0, 5}}));
        CHECK(validate_frieze(f).ok());
        auto q = f.quiddity();
        q.resize(7);
        CHECK(rotation_of(q, big({5, 1, 2, 2, 2, 2, 1})));
    }
    SUBCASE("A4 frieze") {
        const auto a4 = golden::a4_frieze();
        CHECK(validate_frieze(a4).ok());
        const auto tri = triangulation_from_cc_frieze(a4, 0, 6);
        CHECK(tri.boundary.size() == 7);
        CHECK(tri.diagonals.size() == 4);
        CHECK(validate_fragment(tri).ok());
        const auto back = cc_frieze_from_polygon(tri);
        std::size_t shared = 0;
        for (const auto& [key, value] : a4.entries)
            if (back.has(key.first, key.second)) {
                CHECK(back.at(key.first, key.second) == value);
                ++shared;
            }
        CHECK(shared >= 40);
    }
    SUBCASE("not consecutive") {
        DiscFragment f = polygon(3, {});
        f.boundary[2] = vI(5);
        CHECK_THROWS_AS(cc_frieze_from_polygon(f), Error);
    }
}

TEST_CASE("triangulation_from_cc_frieze") {
    SUBCASE("triangle") {
        const auto t = triangulation_from_cc_frieze(cc_frieze_from_polygon(polygon(3, {})), 0, 2);
        CHECK(t.diagonals.empty());
    }
    SUBCASE("left grid fundamental domain") {
        const auto p = derived_friezes(golden::left_grid()).p;
        CHECK(p.at(-1, 2) == 1);
        const auto t = triangulation_from_cc_frieze(p, -1, 2);
        CHECK(arc_set(t.diagonals) == std::set<Arc>{Arc(vI(-1), vI(1))});
        CHECK(arc_set(t.closing_sides()) == std::set<Arc>{Arc(vI(-1), vI(2))});
    }
    SUBCASE("corner not 1") {
        const auto p = derived_friezes(golden::left_grid()).p;
        try {
            triangulation_from_cc_frieze(p, -3, 0);
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotAFundamentalDomain);
        }
    }
    SUBCASE("random round trip") {
        gen::Rng rng(500);
        for (int trial = 0; trial < 500; ++trial) {
            const int m = std::uniform_int_distribution<int>(3, 12)(rng);
            const auto tri = polygon(m, gen::triangulate(rng, m));
            const auto f = cc_frieze_from_polygon(tri);
            REQUIRE(validate_frieze(f).ok());
            const auto back = triangulation_from_cc_frieze(f, 0, m - 1);
            CHECK(arc_set(back.diagonals) == arc_set(tri.diagonals));
            const auto q = f.quiddity();
            for (Index b = 0; b < m; ++b) {
                long at = 0;
                for (const auto& d : tri.diagonals) at += d.has(vI(b));
                CHECK(q[static_cast<std::size_t>((b - f.lo - 1 + m) % m)] == 1 + at);
            }
            for (const auto& [key, value] : f.entries) {
                const Index a = key.first % m, d = key.second % m;
                if (key.second - key.first >= m - 1) continue;
                CHECK(value == oracle::value(tri, vI(a), vI(d)));
            }
        }
    }
}

TEST_CASE("validate_frieze") {
    CHECK(validate_frieze(golden_frieze()).ok());
    SUBCASE("interior zero") {
        auto f = golden_frieze();
        f.set(-3, 0, 0);
        const auto r = validate_frieze(f);
        CHECK(std::any_of(r.issues.begin(), r.issues.end(),
                          [](const std::string& s) { return s.find("not positive") != std::string::npos; }));
    }
    SUBCASE("perturbed entry") {
        auto f = golden_frieze();
        f.set(-2, 1, f.at(-2, 1) + 1);
        const auto r = validate_frieze(f);
        CHECK(r.issues.size() == 4);
        for (const auto& s : r.issues) CHECK(s.find("diamond") != std::string::npos);
    }
}

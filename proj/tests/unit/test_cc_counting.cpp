#include "generators.hpp"
#include "golden.hpp"
#include "oracle.hpp"

#include "sl2/cc_counting.hpp"
#include "sl2/error.hpp"

#include <doctest.h>

using namespace sl2;

namespace {

std::vector<long> row_of(const LabelMap& m, Interval j, Index lo, Index hi) {
    std::vector<long> out;
    for (Index i = lo; i <= hi; ++i) out.push_back(static_cast<long>(m.at({j, i})));
    return out;
}

DiscFragment fan6() {
    DiscFragment f;
    f.shape = DiscShape::d2();
    f.boundary = {vI(0), vI(1), vI(2), vIII(0), vIII(1), vIII(2)};
    for (const auto& v : {vI(2), vIII(0), vIII(1)}) f.diagonals.emplace_back(vI(0), v);
    return f;
}

}  // namespace

TEST_CASE("cc_labels") {
    SUBCASE("D2 golden fragment") {
        const auto m = cc_labels(golden::d2_fragment(), vI(-3));
        CHECK(row_of(m, Interval::I, -3, 3) == std::vector<long>{0, 1, 1, 6, 5, 4, 7});
        CHECK(row_of(m, Interval::III, -3, 3) == std::vector<long>{17, 10, 23, 13, 3, 2, 1});
    }
    SUBCASE("D4 golden fragment") {
        const auto m = cc_labels(golden::d4_fragment(), vI(-3));
        CHECK(row_of(m, Interval::III, -3, 3) == std::vector<long>{25, 18, 11, 4, 9, 5, 11});
    }
    SUBCASE("bare triangle") {
        DiscFragment f;
        f.shape = DiscShape::d2();
        f.boundary = {vI(0), vI(1), vIII(0)};
        const auto m = cc_labels(f, vI(0));
        CHECK(m.at(vI(0)) == 0);
        CHECK(m.at(vI(1)) == 1);
        CHECK(m.at(vIII(0)) == 1);
    }
    SUBCASE("not triangulated") {
        DiscFragment f;
        f.shape = DiscShape::d2();
        f.boundary = {vI(0), vI(1), vI(2), vI(3)};
        CHECK_THROWS_AS(cc_labels(f, vI(0)), Error);
    }
}

TEST_CASE("cc_value") {
    const auto f = golden::d2_fragment();
    CHECK(cc_value(f, vI(-3), vIII(0)) == 13);
    CHECK(cc_value(f, vI(2), vI(2)) == 0);
    for (const auto& d : f.diagonals) CHECK(cc_value(f, d.lo(), d.hi()) == 1);
    try {
        cc_value(f, vI(9), vI(0));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::VertexNotInFragment);
    }
}

TEST_CASE("phi_window") {
    SUBCASE("left grid") {
        const auto pw = phi_window(golden::d2_fragment(), {-3, 3}, {-3, 3});
        CHECK(pw.t == golden::left_grid());
        CHECK(validate_window(pw.t).ok());
        CHECK(validate_frieze(pw.p).ok());
        CHECK(validate_frieze(pw.q).ok());
    }
    SUBCASE("D4 row") {
        const auto pw = phi_window(golden::d4_fragment(), {-3, -3}, {-3, 3});
        std::vector<long> row;
        for (Index v = -3; v <= 3; ++v) row.push_back(static_cast<long>(pw.t.at(-3, v)));
        CHECK(row == std::vector<long>{25, 18, 11, 4, 9, 5, 11});
        CHECK(phi_window(golden::d4_fragment(), {-3, 3}, {-3, 3}).t == golden::right_grid());
    }
    SUBCASE("fan against brute-force labels") {
        const auto f = fan6();
        const auto pw = phi_window(f, {0, 2}, {0, 2});
        for (Index b = 0; b <= 2; ++b)
            for (Index v = 0; v <= 2; ++v) CHECK(pw.t.at(b, v) == oracle::value(f, vI(b), vIII(v)));
        for (Index a = 0; a <= 2; ++a)
            for (Index d = a; d <= 2; ++d) CHECK(pw.p.at(a, d) == oracle::value(f, vI(a), vI(d)));
    }
}

TEST_CASE("ptolemy_check") {
    const auto f = golden::d2_fragment();
    CHECK(ptolemy_check(f, Arc(vI(-3), vIII(0)), Arc(vI(-1), vIII(1))));
    CHECK(cc_value(f, vI(-3), vIII(0)) * cc_value(f, vI(-1), vIII(1)) ==
          oracle::value(f, vI(-3), vI(-1)) * oracle::value(f, vIII(0), vIII(1)) +
              oracle::value(f, vI(-3), vIII(1)) * oracle::value(f, vI(-1), vIII(0)));
    // Nested, so not a crossing pair.
    CHECK_THROWS_AS(ptolemy_check(f, Arc(vI(-3), vIII(0)), Arc(vI(-1), vIII(-1))), Error);
    DiscFragment sq;
    sq.shape = DiscShape::d2();
    sq.boundary = {vI(0), vI(1), vI(2), vI(3)};
    sq.diagonals = {Arc(vI(0), vI(2))};
    CHECK(ptolemy_check(sq, Arc(vI(0), vI(2)), Arc(vI(1), vI(3))));
    CHECK(cc_value(sq, vI(1), vI(3)) == 2);
    try {
        ptolemy_check(f, Arc(vI(-3), vI(-1)), Arc(vI(0), vI(2)));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotCrossing);
    }
}

TEST_CASE("12-gon counting properties") {
    gen::Rng rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const auto f = gen::fragment_on_runs(DiscShape::d2(), {{Interval::I, 0, 6}, {Interval::III, 0, 6}},
                                             gen::triangulate(rng, 12));
        const auto n = f.boundary.size();
        std::vector<std::vector<BigInt>> lab;
        for (std::size_t i = 0; i < n; ++i) {
            lab.push_back(oracle::labels(f, i));
            const auto m = cc_labels(f, f.boundary[i]);
            for (std::size_t j = 0; j < n; ++j) CHECK(m.at(f.boundary[j]) == lab[i][j]);
        }
        std::set<Arc> ones(f.diagonals.begin(), f.diagonals.end());
        for (const auto& s : f.sides()) ones.insert(s);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(lab[i][j] == lab[j][i]);
                CHECK((lab[i][j] == 0) == (i == j));
                if (i != j) CHECK((lab[i][j] == 1) == (ones.count(Arc(f.boundary[i], f.boundary[j])) == 1));
            }
            const auto prev = (i + n - 1) % n, next = (i + 1) % n;
            long at = 0;
            for (const auto& d : f.diagonals) at += d.has(f.boundary[i]);
            CHECK(lab[prev][next] == 1 + at);
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                for (std::size_t c = b + 1; c < n; ++c)
                    for (std::size_t d = c + 1; d < n; ++d) {
                        CHECK(lab[a][c] * lab[b][d] == lab[a][b] * lab[c][d] + lab[a][d] * lab[b][c]);
                        CHECK(ptolemy_check(f, Arc(f.boundary[a], f.boundary[c]), Arc(f.boundary[b], f.boundary[d])));
                    }
    }
}

TEST_CASE("restriction independence") {
    // Each diagonal cuts the golden D2 fragment into two smaller fragments.
    const auto g = golden::d2_fragment();
    const auto n = g.boundary.size();
    for (const auto& d : g.diagonals) {
        const auto i = *g.position(d.lo()), j = *g.position(d.hi());
        DiscFragment inner, outer;
        inner.shape = outer.shape = g.shape;
        for (std::size_t k = 0; k < n; ++k) (k >= i && k <= j ? inner : outer).boundary.push_back(g.boundary[k]);
        outer.boundary.insert(outer.boundary.begin() + static_cast<std::ptrdiff_t>(i), g.boundary[i]);
        outer.boundary.insert(outer.boundary.begin() + static_cast<std::ptrdiff_t>(i) + 1, g.boundary[j]);
        for (const auto& e : g.diagonals) {
            if (e == d) continue;
            const auto a = *g.position(e.lo()), b = *g.position(e.hi());
            (a >= i && b <= j ? inner : outer).diagonals.push_back(e);
        }
        for (const auto* f : {&inner, &outer}) {
            REQUIRE(f->fully_triangulated());
            for (const auto& x : f->boundary)
                for (const auto& y : f->boundary) CHECK(cc_value(*f, x, y) == cc_value(g, x, y));
        }
    }
}

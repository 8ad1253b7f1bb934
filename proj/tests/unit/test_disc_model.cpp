#include "generators.hpp"
#include "golden.hpp"

#include "sl2/disc_model.hpp"
#include "sl2/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace sl2;

TEST_CASE("in_cyclic_order") {
    CHECK(in_cyclic_order(DiscShape::d2(), {vI(0), vI(1), vIII(0)}));
    CHECK_FALSE(in_cyclic_order(DiscShape::d2(), {vI(0), vIII(0), vI(1)}));
    CHECK(in_cyclic_order(DiscShape::d4(), {vI(0), vII(0), vIII(0), vIV(0)}));
    CHECK_THROWS_AS(in_cyclic_order(DiscShape::d2(), {vI(0), vII(0)}), Error);
}

TEST_CASE("arcs_cross") {
    const auto d2 = DiscShape::d2();
    CHECK(arcs_cross(d2, Arc(vI(0), vIII(-1)), Arc(vI(1), vIII(0))));
    CHECK_FALSE(arcs_cross(d2, Arc(vI(0), vI(2)), Arc(vI(5), vI(7))));
    CHECK_FALSE(arcs_cross(d2, Arc(vI(-3), vIII(3)), Arc(vI(-1), vIII(1))));
    CHECK_FALSE(arcs_cross(d2, Arc(vI(0), vI(2)), Arc(vI(2), vIII(0))));
}

TEST_CASE("vertex_neighbors") {
    CHECK(vertex_neighbors(vI(0)) == std::pair{vI(-1), vI(1)});
    CHECK(vertex_neighbors(vIII(-5)) == std::pair{vIII(-6), vIII(-4)});
    CHECK(vertex_neighbors(vIV(3)) == std::pair{vIV(2), vIV(4)});
}

TEST_CASE("validate_fragment") {
    SUBCASE("golden D2 fragment") {
        const auto f = golden::d2_fragment();
        CHECK(f.boundary.size() == 14);
        CHECK(f.diagonals.size() == 11);
        const auto arcs = golden::d2_arcs();
        CHECK(validate_fragment(f, std::set<Arc>(arcs.begin(), arcs.end())).ok());
        CHECK(f.fully_triangulated());
    }
    SUBCASE("2-gon") {
        DiscFragment f;
        f.shape = DiscShape::d4();
        f.boundary = {vII(0), vIV(0)};
        CHECK(validate_fragment(f).ok());
        CHECK(f.fully_triangulated());
    }
    SUBCASE("square with both diagonals") {
        DiscFragment f;
        f.shape = DiscShape::d2();
        f.boundary = {vI(0), vI(1), vI(2), vI(3)};
        f.diagonals = {Arc(vI(0), vI(2)), Arc(vI(1), vI(3))};
        const auto r = validate_fragment(f);
        CHECK_FALSE(r.ok());
        CHECK(std::any_of(r.issues.begin(), r.issues.end(),
                          [](const std::string& s) { return s.find("cross") != std::string::npos; }));
    }
    SUBCASE("side not in the ambient set") {
        DiscFragment f;
        f.shape = DiscShape::d2();
        f.boundary = {vI(0), vI(1), vIII(0)};
        CHECK_FALSE(validate_fragment(f, {}).ok());
        CHECK(validate_fragment(f, {Arc(vI(1), vIII(0)), Arc(vI(0), vIII(0))}).ok());
    }
}

TEST_CASE("close_window") {
    const auto arcs_v = golden::d2_arcs();
    const std::set<Arc> arcs(arcs_v.begin(), arcs_v.end());
    SUBCASE("golden arcs") {
        std::set<Vertex> req;
        for (Index i = -2; i <= 2; ++i) {
            req.insert(vI(i));
            req.insert(vIII(i));
        }
        const auto f = close_window(DiscShape::d2(), arcs, req);
        const auto closing = f.closing_sides();
        CHECK(std::set<Arc>(closing.begin(), closing.end()) ==
              std::set<Arc>{Arc(vI(-3), vIII(3)), Arc(vI(3), vIII(-3))});
        CHECK(validate_fragment(f, arcs).ok());
    }
    SUBCASE("single arc and its neighbours") {
        const std::set<Arc> two{Arc(vI(0), vIII(0)), Arc(vI(-1), vIII(1))};
        const auto f = close_window(DiscShape::d2(), two, {vI(0), vIII(0)});
        CHECK(f.boundary.size() == 4);
    }
    SUBCASE("no I-III link") {
        CHECK_THROWS_WITH_AS(close_window(DiscShape::d2(), {Arc(vI(0), vI(2))}, {vI(0), vIII(0)}),
                             doctest::Contains("no ambient arc"), Error);
    }
}

TEST_CASE("crossing properties") {
    gen::Rng rng(7);
    const auto d4 = DiscShape::d4();
    std::uniform_int_distribution<int> iv(0, 3), ix(-4, 4);
    auto random_vertex = [&] { return Vertex{static_cast<Interval>(iv(rng)), ix(rng)}; };
    for (int trial = 0; trial < 2000; ++trial) {
        std::set<Vertex> s;
        while (s.size() < 4) s.insert(random_vertex());
        const std::vector<Vertex> v(s.begin(), s.end());
        const Arc a01(v[0], v[1]), a23(v[2], v[3]), a02(v[0], v[2]), a13(v[1], v[3]), a03(v[0], v[3]),
            a12(v[1], v[2]);
        const int crossing = arcs_cross(d4, a01, a23) + arcs_cross(d4, a02, a13) + arcs_cross(d4, a03, a12);
        CHECK(crossing == 1);
        CHECK(arcs_cross(d4, a02, a13) == arcs_cross(d4, a13, a02));
        for (int r = 0; r < 4; ++r) {
            std::vector<Vertex> rot(v.begin() + r, v.end());
            rot.insert(rot.end(), v.begin(), v.begin() + r);
            CHECK(in_cyclic_order(d4, rot));
        }
        std::vector<Vertex> swapped{v[1], v[0], v[2], v[3]};
        CHECK_FALSE(in_cyclic_order(d4, swapped));
    }
}

TEST_CASE("close_window output validates") {
    gen::Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = gen::random_fragment(rng, DiscShape::d4(), 2, 5);
        std::set<Arc> ambient(f.diagonals.begin(), f.diagonals.end());
        for (const auto& s : f.closing_sides()) ambient.insert(s);
        std::set<Vertex> req;
        for (const auto& v : f.boundary)
            if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) req.insert(v);
        if (req.empty()) req.insert(f.boundary.front());
        DiscFragment g;
        try {
            g = close_window(f.shape, ambient, req);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NoClosingArc);
            continue;
        }
        CHECK(validate_fragment(g, ambient).ok());
        for (const auto& v : req) CHECK(g.contains(v));
    }
}

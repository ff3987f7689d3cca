#include <doctest.h>

#include "hexpath/construct.hpp"
#include "hexpath/search.hpp"
#include "hexpath/unitgrid.hpp"

using namespace hexpath;

namespace {

// Figure 2(a): the 46-stone path on 10x10 used for the worked example.
StoneSet fig2a() {
    return StoneSet(
        10, {{10, 1}, {10, 2}, {10, 3}, {10, 4}, {10, 5}, {10, 6}, {10, 7}, {10, 8}, {9, 9},
             {8, 9},  {7, 9},  {6, 9},  {5, 9},  {4, 9},  {3, 9},  {3, 8},  {3, 7},  {3, 6},
             {3, 5},  {4, 4},  {5, 4},  {6, 4},  {6, 5},  {5, 6},  {5, 7},  {6, 7},  {7, 7},
             {8, 6},  {8, 5},  {8, 4},  {8, 3},  {8, 2},  {7, 2},  {6, 2},  {5, 2},  {4, 2},
             {3, 2},  {2, 2},  {1, 3},  {1, 4},  {1, 5},  {1, 6},  {1, 7},  {1, 8},  {1, 9},
             {1, 10}});
}

StoneSet fig1a() {
    return StoneSet(5, {{3, 1}, {3, 2}, {3, 3}, {3, 4}, {2, 5}});
}

}  // namespace

TEST_CASE("triangle counts") {
    CHECK(all_triangles(10).size() == 198);
    CHECK(all_triangles(1).empty());
    auto t5 = all_triangles(5);
    CHECK(t5.size() == 48);
    int up = 0, down = 0;
    for (const auto& t : t5) (t.orient == Orient::Up ? up : down)++;
    CHECK(up == 24);
    CHECK(down == 24);
}

TEST_CASE("triangle vertex shapes") {
    UnitTriangle d{2, 3, Orient::Down};
    auto dv = d.vertices();
    CHECK(dv == std::array<Coord, 3>{{{2, 3}, {3, 3}, {2, 4}}});
    UnitTriangle u{0, 1, Orient::Up};
    auto uv = u.vertices();
    CHECK(uv == std::array<Coord, 3>{{{1, 1}, {0, 2}, {1, 2}}});
}

TEST_CASE("whole-grid waste") {
    auto w = wasted(fig2a(), Region::whole_grid(10));
    CHECK(w.t == 18);
    CHECK(w.t_down == 9);
    CHECK(w.t_up == 9);

    // a full board covers every triangle
    std::vector<Coord> full;
    for (int y = 1; y <= 5; ++y)
        for (int x = 1; x <= 5; ++x) full.push_back({x, y});
    CHECK(wasted(StoneSet(5, full), Region::whole_grid(5)).t == 0);

    CHECK(wasted(StoneSet(5, {}), Region::whole_grid(5)).t == 48);
}

TEST_CASE("eq1 identity") {
    auto r = eq1_check(fig2a());
    CHECK(r.k == 46);
    CHECK(r.t == 18);
    CHECK(r.holds);

    auto r5 = eq1_check(fig1a());
    CHECK(r5.k == 5);
    CHECK(r5.t == 32);
    CHECK(r5.holds);

    auto r1 = eq1_check(StoneSet(1, {{1, 1}}));
    CHECK(r1.k == 1);
    CHECK(r1.t == 0);
    CHECK(r1.holds);

    CHECK_THROWS_AS(eq1_check(StoneSet(5, {})), domain_error);

    for (int n = 1; n <= 20; ++n) CHECK(eq1_check(witness(n)).holds);
}

TEST_CASE("region A triangle counts and excess") {
    long down = 0, up = 0;
    auto ra = Region::a(10);
    for (const auto& t : all_triangles(10)) {
        if (!ra.contains(t)) continue;
        (t.orient == Orient::Up ? up : down)++;
    }
    CHECK(down == 45);
    CHECK(up == 36);
    CHECK(region_excess(ra) == 9);
    CHECK(region_excess(Region::a(5)) == 4);
    CHECK(region_excess(Region::b(10)) == 9);  // corner-local convention
    CHECK(region_excess(Region::whole_grid(7)) == 0);

    for (int n = 2; n <= 20; ++n) {
        long d = 0, u = 0;
        auto region = Region::a(n);
        for (const auto& t : all_triangles(n)) {
            if (!region.contains(t)) continue;
            (t.orient == Orient::Up ? u : d)++;
        }
        CHECK(d == static_cast<long>(n) * (n - 1) / 2);
        CHECK(u == static_cast<long>(n - 1) * (n - 2) / 2);
        CHECK(region_excess(region) == n - 1);
    }
}

TEST_CASE("regions A and B are disjoint") {
    for (int n : {2, 5, 10}) {
        auto ra = Region::a(n), rb = Region::b(n);
        for (const auto& t : all_triangles(n)) {
            const bool both = ra.contains(t) && rb.contains(t);
            CHECK_FALSE(both);
        }
    }
}

TEST_CASE("fig2a endpoints run corner to corner") {
    auto [a, b] = endpoints(fig2a());
    CHECK(a == Coord{10, 1});
    CHECK(b == Coord{1, 10});
    CHECK(is_corner_to_corner(fig2a()));
}

TEST_CASE("fig2a worked example in region A") {
    auto s = fig2a();
    auto w = wasted(s, Region::a(10));
    CHECK(w.t_down - w.t_up == 5);
    CHECK(w.t_down == 7);
    CHECK(w.t_up == 2);

    auto rep = boundary_components(s, Region::a(10));
    CHECK(rep.b() == 4);
    // every component here is a single stone
    for (const auto& c : rep.components) CHECK(c.stones.size() == 1);

    auto eq2 = eq2_check(s, Region::a(10));
    CHECK(eq2.e == 9);
    CHECK(eq2.b == 4);
    CHECK(eq2.t_down - eq2.t_up == 5);
    CHECK(eq2.holds);
}

TEST_CASE("region B mirrors region A under rotate180") {
    auto s = fig2a();
    auto rot = rotate180(s);
    auto a = eq2_check(s, Region::a(10));
    auto b = eq2_check(rot, Region::b(10));
    CHECK(a.e == b.e);
    CHECK(a.b == b.b);
    CHECK(a.t_down == b.t_down);
    CHECK(a.t_up == b.t_up);
    CHECK(b.holds);
}

TEST_CASE("custom regions keep raw orientation so rotation flips tallies") {
    auto s = witness(8);
    auto rot = rotate180(s);
    std::vector<UnitTriangle> tris, rot_tris;
    for (const auto& t : all_triangles(8))
        if (Region::a(8).contains(t)) {
            tris.push_back(t);
            rot_tris.push_back(rotate180(t, 8));
        }
    auto w = wasted(s, Region::custom(8, tris));
    auto wr = wasted(rot, Region::custom(8, rot_tris));
    CHECK(w.t == wr.t);
    CHECK(w.t_up == wr.t_down);
    CHECK(w.t_down == wr.t_up);
}

TEST_CASE("eq2 on witnesses") {
    auto w5a = wasted(witness(5), Region::a(5));
    CHECK(w5a.t_down == 3);
    CHECK(w5a.t_up == 1);
    CHECK(boundary_components(witness(5), Region::a(5)).b() == 2);
    // n = 3 is a genuine exception: the boundary component {a1, a2} wraps
    // from the top edge around to the hypotenuse and reduces the excess by
    // 2, not 1. Components of every path the excess argument is applied to
    // (n >= 4 here, and exhaustively the n = 5, 6 optima below) touch one
    // side each, which is what the identity counts.
    for (int n = 4; n <= 20; ++n) {
        CHECK(eq2_check(witness(n), Region::a(n)).holds);
        CHECK(eq2_check(witness(n), Region::b(n)).holds);
    }
    for (int n = 2; n <= 20; ++n) {
        // Lemma 2 proof: at most (n+1)/2 boundary components in region A
        CHECK(2 * boundary_components(witness(n), Region::a(n)).b() <= n + 1);
    }
    // stones-vs-components divergence diagnostic: log multi-stone components
    for (int n = 2; n <= 20; ++n) {
        auto rep = boundary_components(witness(n), Region::a(n));
        int stones = 0;
        for (const auto& c : rep.components) stones += static_cast<int>(c.stones.size());
        if (stones != rep.b())
            MESSAGE("witness(", n, "): ", stones, " boundary stones in ", rep.b(),
                    " components (notions diverge)");
    }
}

TEST_CASE("boundary components need a triangular region") {
    CHECK_THROWS_AS(boundary_components(witness(5), Region::whole_grid(5)), domain_error);
}

TEST_CASE("corner lemma witness") {
    // Figure 4(b): a1 and a2 empty leave the edge-overlap triangle wasted
    auto w6 = corner_lemma_witness(witness(6), Corner::TopLeftAcute);
    auto v = w6.vertices();
    CHECK(v == std::array<Coord, 3>{{{1, 1}, {0, 2}, {1, 2}}});

    for (int n = 5; n <= 20; ++n) {
        for (auto corner : {Corner::TopLeftAcute, Corner::BottomRightAcute}) {
            auto t = corner_lemma_witness(witness(n), corner);
            for (auto vert : t.vertices()) {
                CHECK_FALSE(witness(n).contains(vert));
                if (corner == Corner::TopLeftAcute)
                    CHECK(vert.y <= 5);
                else
                    CHECK(vert.y >= n - 4);
            }
        }
    }
    CHECK_THROWS_AS(corner_lemma_witness(witness(4), Corner::TopLeftAcute), domain_error);
}

TEST_CASE("corner lemma witness rotates symmetrically") {
    for (int n : {5, 6, 9, 13}) {
        auto s = witness(n);
        auto br = corner_lemma_witness(s, Corner::BottomRightAcute);
        auto tl_of_rot = corner_lemma_witness(rotate180(s), Corner::TopLeftAcute);
        CHECK(br == rotate180(tl_of_rot, n));
    }
}

TEST_CASE("lemma 3 case 2 divisibility, checked opportunistically") {
    // when region A carries the maximum (n+1)/2 boundary components, all
    // single stones with every hypotenuse component transversal, its wasted
    // count must be divisible by 4. No path below the first applicable
    // board size (n = 11) reaches that configuration, so this hook stays
    // opportunistic: it fires on qualifying paths and is vacuous otherwise
    // (exhaustively confirmed vacuous over every minimal path for n <= 7).
    SearchConfig cfg;
    cfg.mode = SearchMode::EnumerateAll;
    int hits = 0;
    for (int n : {5, 7}) {
        cfg.n = n;
        auto res = find_longest(cfg);
        REQUIRE(res.paths.has_value());
        for (const auto& p : *res.paths) {
            auto rep = boundary_components(p, Region::a(n));
            if (2 * rep.b() != n + 1) continue;
            bool qualifying = true;
            for (const auto& c : rep.components) {
                if (c.stones.size() != 1) qualifying = false;
                const bool on_hyp = c.stones[0].x + c.stones[0].y == n;
                if (on_hyp && !c.transversal) qualifying = false;
            }
            if (!qualifying) continue;
            ++hits;
            auto w = wasted(p, Region::a(n));
            CHECK((w.t_down + w.t_up) % 4 == 0);
        }
    }
    MESSAGE("opportunistic divisibility checks exercised: ", hits);
}

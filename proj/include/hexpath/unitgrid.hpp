#pragma once

// The triangular unit grid of an n x n board and its bookkeeping:
// wasted-triangle tallies, the area identity 4(k-1) + t = 2(n+1)(n-1),
// the acute-corner lattice-triangle regions A and B, boundary-component
// extraction, and the excess identity e = b + t_down - t_up.
//
// Triangle orientation: an upward-pointing triangle has one vertex in
// the upper row and two below it (apex toward row 1):
//   Down(x, y) = {(x,y), (x+1,y), (x,y+1)}
//   Up(x, y)   = {(x+1,y), (x,y+1), (x+1,y+1)}
// with 0 <= x <= n and 1 <= y < n on the extended board.

#include <algorithm>
#include <array>
#include <vector>

#include "hexpath/board.hpp"
#include "hexpath/connection.hpp"
#include "hexpath/errors.hpp"

namespace hexpath {

enum class Orient { Up, Down };

struct UnitTriangle {
    int x = 0;  // anchor column (see orientation formulas above)
    int y = 0;  // anchor row
    Orient orient = Orient::Down;

    std::array<Coord, 3> vertices() const {
        if (orient == Orient::Down) return {{{x, y}, {x + 1, y}, {x, y + 1}}};
        return {{{x + 1, y}, {x, y + 1}, {x + 1, y + 1}}};
    }

    friend constexpr auto operator<=>(const UnitTriangle&, const UnitTriangle&) = default;
};

inline UnitTriangle rotate180(const UnitTriangle& t, int n) {
    // Rotating swaps orientation; recover the anchor from the rotated vertices.
    auto v = t.vertices();
    Coord a = rotate180(v[0], n), b = rotate180(v[1], n), c = rotate180(v[2], n);
    int ymin = std::min({a.y, b.y, c.y});
    int xmin = std::min({a.x, b.x, c.x});
    if (t.orient == Orient::Down) return {xmin, ymin, Orient::Up};
    return {xmin, ymin, Orient::Down};
}

// Every unit triangle of the extended board: 2(n+1)(n-1) of them,
// half upward and half downward.
inline std::vector<UnitTriangle> all_triangles(int n) {
    check_board_size(n);
    std::vector<UnitTriangle> out;
    out.reserve(static_cast<size_t>(2) * (n + 1) * std::max(0, n - 1));
    for (int y = 1; y < n; ++y)
        for (int x = 0; x <= n; ++x) {
            out.push_back({x, y, Orient::Down});
            out.push_back({x, y, Orient::Up});
        }
    return out;
}

// Region A is the maximal lattice triangle at the left acute corner
// (all vertices satisfy x + y <= n); region B is its rotate180 image
// (x + y >= n + 2). Reports for B use corner-local orientation, i.e.
// up/down tallies are flipped so the symmetric lemmas read identically.
class Region {
  public:
    enum class Kind { WholeGrid, A, B, Custom };

    static Region whole_grid(int n) { return Region(Kind::WholeGrid, n); }
    static Region a(int n) { return Region(Kind::A, n); }
    static Region b(int n) { return Region(Kind::B, n); }
    static Region custom(int n, std::vector<UnitTriangle> tris) {
        Region r(Kind::Custom, n);
        std::sort(tris.begin(), tris.end());
        r.custom_ = std::move(tris);
        return r;
    }

    Kind kind() const { return kind_; }
    int n() const { return n_; }

    bool contains(const UnitTriangle& t) const {
        switch (kind_) {
            case Kind::WholeGrid:
                return true;
            case Kind::A: {
                auto v = t.vertices();
                return std::all_of(v.begin(), v.end(), [&](Coord c) { return c.x + c.y <= n_; });
            }
            case Kind::B: {
                auto v = t.vertices();
                return std::all_of(v.begin(), v.end(), [&](Coord c) { return c.x + c.y >= n_ + 2; });
            }
            case Kind::Custom:
                return std::binary_search(custom_.begin(), custom_.end(), t);
        }
        return false;
    }

    // Corner-local orientation of a member triangle.
    Orient local_orient(const UnitTriangle& t) const {
        if (kind_ == Kind::B) return t.orient == Orient::Up ? Orient::Down : Orient::Up;
        return t.orient;
    }

  private:
    Region(Kind k, int n) : kind_(k), n_(n) { check_board_size(n); }
    Kind kind_;
    int n_;
    std::vector<UnitTriangle> custom_;
};

struct WasteReport {
    long t = 0;       // total wasted triangles in the region
    long t_up = 0;    // upward wasted (region-local orientation)
    long t_down = 0;  // downward wasted
};

// A triangle is wasted when none of its three cells holds a stone;
// extension-column cells are always empty.
inline bool is_wasted(const UnitTriangle& t, const StoneSet& s) {
    for (auto v : t.vertices())
        if (on_board(v, s.n()) && s.contains(v)) return false;
    return true;
}

inline WasteReport wasted(const StoneSet& s, const Region& region) {
    if (region.n() != s.n()) throw domain_error("region and stone set board sizes differ");
    WasteReport rep;
    for (const auto& t : all_triangles(s.n())) {
        if (!region.contains(t) || !is_wasted(t, s)) continue;
        ++rep.t;
        (region.local_orient(t) == Orient::Up ? rep.t_up : rep.t_down)++;
    }
    return rep;
}

struct Eq1Result {
    long k = 0;
    long t = 0;
    bool holds = false;
};

// The area identity for winning paths: 4(k-1) + t = 2(n+1)(n-1).
inline Eq1Result eq1_check(const StoneSet& s) {
    if (!is_minimal_winning_path(s)) throw domain_error("eq1 is asserted for winning paths only");
    const long n = s.n();
    Eq1Result r;
    r.k = s.size();
    r.t = wasted(s, Region::whole_grid(s.n())).t;
    r.holds = 4 * (r.k - 1) + r.t == 2 * (n + 1) * (n - 1);
    return r;
}

// (#down - #up) over the region, in region-local orientation. Equals
// n-1 for both A and B, and 0 for the whole grid.
inline long region_excess(const Region& region) {
    long down = 0, up = 0;
    for (const auto& t : all_triangles(region.n())) {
        if (!region.contains(t)) continue;
        (region.local_orient(t) == Orient::Up ? up : down)++;
    }
    return down - up;
}

struct BoundaryComponent {
    std::vector<Coord> stones;  // canonical order
    bool transversal = false;
};

struct BoundaryReport {
    std::vector<BoundaryComponent> components;
    int b() const { return static_cast<int>(components.size()); }
};

namespace detail {

inline bool on_region_boundary(Coord c, const Region& r) {
    const int n = r.n();
    if (r.kind() == Region::Kind::A) return c.x + c.y <= n && (c.y == 1 || c.x + c.y == n);
    return c.x + c.y >= n + 2 && (c.y == n || c.x + c.y == n + 2);
}

inline bool strictly_outside_region(Coord c, const Region& r) {
    if (r.kind() == Region::Kind::A) return c.x + c.y > r.n();
    return c.x + c.y < r.n() + 2;
}

}  // namespace detail

// Maximal runs of consecutive path stones on the region's boundary.
// A component is transversal when it is a single non-endpoint stone
// whose two path neighbors both lie strictly outside the region.
inline BoundaryReport boundary_components(const StoneSet& s, const Region& region) {
    if (region.kind() != Region::Kind::A && region.kind() != Region::Kind::B)
        throw domain_error("boundary components are defined for the triangular regions A and B");
    if (region.n() != s.n()) throw domain_error("region and stone set board sizes differ");
    if (!is_minimal_winning_path(s))
        throw domain_error("boundary components need a minimal winning path");

    std::vector<Coord> onb;
    for (auto c : s.stones())
        if (detail::on_region_boundary(c, region)) onb.push_back(c);

    BoundaryReport rep;
    std::vector<char> used(onb.size(), 0);
    auto find = [&](Coord c) -> int {
        auto it = std::lower_bound(onb.begin(), onb.end(), c);
        if (it != onb.end() && *it == c) return static_cast<int>(it - onb.begin());
        return -1;
    };
    for (size_t i = 0; i < onb.size(); ++i) {
        if (used[i]) continue;
        std::vector<Coord> comp;
        std::vector<int> stack{static_cast<int>(i)};
        used[i] = 1;
        while (!stack.empty()) {
            int j = stack.back();
            stack.pop_back();
            comp.push_back(onb[j]);
            for (auto nb : in_set_neighbors(s, onb[j])) {
                int idx = find(nb);
                if (idx >= 0 && !used[idx]) {
                    used[idx] = 1;
                    stack.push_back(idx);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        BoundaryComponent bc{std::move(comp), false};
        if (bc.stones.size() == 1) {
            auto nbs = in_set_neighbors(s, bc.stones[0]);
            bc.transversal = nbs.size() == 2 &&
                             detail::strictly_outside_region(nbs[0], region) &&
                             detail::strictly_outside_region(nbs[1], region);
        }
        rep.components.push_back(std::move(bc));
    }
    std::sort(rep.components.begin(), rep.components.end(),
              [](const BoundaryComponent& a, const BoundaryComponent& b) {
                  return a.stones < b.stones;
              });
    return rep;
}

struct Eq2Result {
    long e = 0;
    int b = 0;
    long t_down = 0;
    long t_up = 0;
    bool holds = false;
};

// e = b + t_down - t_up over a triangular region (local orientation).
inline Eq2Result eq2_check(const StoneSet& s, const Region& region) {
    Eq2Result r;
    r.e = region_excess(region);
    r.b = boundary_components(s, region).b();
    auto w = wasted(s, region);
    r.t_down = w.t_down;
    r.t_up = w.t_up;
    r.holds = r.e == r.b + r.t_down - r.t_up;
    return r;
}

// An upward-pointing (corner-local) wasted triangle inside the 15-cell
// corner region; such a triangle exists for every winning path on a
// board of size >= 5. The triangle may overlap the left edge, so
// extension-column vertices are admissible. Deterministic: the first
// triangle in canonical anchor order is returned.
inline UnitTriangle corner_lemma_witness(const StoneSet& s, Corner corner) {
    if (s.n() < 5) throw domain_error("corner lemma needs board size >= 5");
    if (!is_minimal_winning_path(s))
        throw domain_error("corner lemma witness needs a minimal winning path");
    const StoneSet oriented = corner == Corner::TopLeftAcute ? s : rotate180(s);
    auto in_scope = [&](Coord v) {
        if (v.x == 0) return 1 <= v.y && v.y <= 5;
        return 1 <= v.y && v.y <= 5 && 1 <= v.x && v.x <= 6 - v.y;
    };
    for (int y = 1; y <= 4; ++y) {
        for (int x = 0; x <= 4; ++x) {
            UnitTriangle t{x, y, Orient::Up};
            auto v = t.vertices();
            if (!std::all_of(v.begin(), v.end(), [&](Coord c) { return in_scope(c); })) continue;
            if (is_wasted(t, oriented)) {
                if (corner == Corner::BottomRightAcute) return rotate180(t, s.n());
                return t;
            }
        }
    }
    throw internal_error("no upward wasted triangle in the corner region");
}

}  // namespace hexpath

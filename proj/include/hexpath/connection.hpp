#pragma once

// Winning-connection detection and minimality for stone sets.
//
// A set of black stones is winning when some connected component touches
// both row 1 and row n. A winning path is a minimal winning connection:
// removing any single stone breaks it. For the monotone winning property,
// single-removal criticality is equivalent to subset minimality (the
// test suite re-verifies this against a full-subset oracle on tiny boards).

#include <algorithm>
#include <utility>
#include <vector>

#include "hexpath/board.hpp"
#include "hexpath/errors.hpp"

namespace hexpath {

// A candidate path: board cells only, canonically sorted, duplicate-free.
class StoneSet {
  public:
    StoneSet() = default;
    StoneSet(int n, std::vector<Coord> stones) : n_(n), stones_(std::move(stones)) {
        check_board_size(n_);
        std::sort(stones_.begin(), stones_.end());
        stones_.erase(std::unique(stones_.begin(), stones_.end()), stones_.end());
        for (auto c : stones_)
            if (!on_board(c, n_)) throw input_error("stone off the board: " + format_label(c));
    }

    int n() const { return n_; }
    const std::vector<Coord>& stones() const { return stones_; }
    int size() const { return static_cast<int>(stones_.size()); }
    bool contains(Coord c) const {
        return std::binary_search(stones_.begin(), stones_.end(), c);
    }

    friend bool operator==(const StoneSet&, const StoneSet&) = default;

  private:
    int n_ = 1;
    std::vector<Coord> stones_;
};

inline StoneSet rotate180(const StoneSet& s) {
    std::vector<Coord> out;
    out.reserve(s.stones().size());
    for (auto c : s.stones()) out.push_back(rotate180(c, s.n()));
    return StoneSet(s.n(), std::move(out));
}

namespace detail {

// Flood fill over in-set adjacency with one stone optionally masked out.
// Returns true when a component meets both row 1 and row n.
inline bool winning_with_skip(const StoneSet& s, int skip_index) {
    const auto& st = s.stones();
    const int k = static_cast<int>(st.size());
    const int n = s.n();
    if (k == 0) return false;

    // dense index grid for O(1) neighbor lookup
    std::vector<int> grid(static_cast<size_t>(n) * n, -1);
    auto at = [&](Coord c) -> int& { return grid[static_cast<size_t>(c.y - 1) * n + (c.x - 1)]; };
    for (int i = 0; i < k; ++i)
        if (i != skip_index) at(st[i]) = i;

    std::vector<char> seen(k, 0);
    std::vector<int> stack;
    for (int i = 0; i < k; ++i) {
        if (i == skip_index || st[i].y != 1 || seen[i]) continue;
        bool hit_bottom = false;
        stack.assign(1, i);
        seen[i] = 1;
        while (!stack.empty()) {
            int j = stack.back();
            stack.pop_back();
            Coord c = st[j];
            if (c.y == n) hit_bottom = true;
            for (auto d : kHexDirs) {
                Coord nb{c.x + d.x, c.y + d.y};
                if (!on_board(nb, n)) continue;
                int idx = at(nb);
                if (idx >= 0 && !seen[idx]) {
                    seen[idx] = 1;
                    stack.push_back(idx);
                }
            }
        }
        if (hit_bottom) return true;
    }
    return false;
}

}  // namespace detail

inline bool is_winning(const StoneSet& s) { return detail::winning_with_skip(s, -1); }

// First stone whose removal keeps the set winning, or -1 when every
// stone is critical.
inline int first_removable_stone(const StoneSet& s) {
    for (int i = 0; i < s.size(); ++i)
        if (detail::winning_with_skip(s, i)) return i;
    return -1;
}

inline bool is_minimal_winning_path(const StoneSet& s) {
    return is_winning(s) && first_removable_stone(s) < 0;
}

inline int path_length(const StoneSet& s) { return s.size(); }

// The unique row-1 and row-n stones of a minimal winning path.
inline std::pair<Coord, Coord> endpoints(const StoneSet& s) {
    if (s.n() < 2) throw domain_error("endpoints need board size >= 2");
    if (!is_minimal_winning_path(s)) throw domain_error("endpoints need a minimal winning path");
    Coord top{}, bottom{};
    for (auto c : s.stones()) {
        if (c.y == 1) top = c;
        if (c.y == s.n()) bottom = c;
    }
    return {top, bottom};
}

inline bool is_corner_to_corner(const StoneSet& s) {
    auto [a, b] = endpoints(s);
    const int n = s.n();
    auto corner = [n](Coord c) {
        return (c.x == 1 || c.x == n) && (c.y == 1 || c.y == n);
    };
    return corner(a) && corner(b);
}

// In-set neighbors of one stone (at most 2 for a minimal path).
inline std::vector<Coord> in_set_neighbors(const StoneSet& s, Coord c) {
    std::vector<Coord> out;
    for (auto d : kHexDirs) {
        Coord nb{c.x + d.x, c.y + d.y};
        if (on_board(nb, s.n()) && s.contains(nb)) out.push_back(nb);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hexpath

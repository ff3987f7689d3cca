#pragma once

// Coordinate system for n x n Hex boards.
//
// Cells are addressed (x, y) with x = column, y = row, both 1-based.
// Row 1 is the top edge, row n the bottom edge; the acute corner (1, 1)
// carries the label "a1". The extended board adds the always-empty
// columns x = 0 and x = n + 1 which stand for the left and right edges.
//
// Adjacency: (x-1,y) (x+1,y) (x,y-1) (x,y+1) (x+1,y-1) (x-1,y+1).

#include <algorithm>
#include <array>
#include <compare>
#include <string>
#include <vector>

#include "hexpath/errors.hpp"

namespace hexpath {

struct Coord {
    int x = 0;
    int y = 0;

    // Canonical cell order is (row, column) ascending.
    friend constexpr auto operator<=>(const Coord& a, const Coord& b) {
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.x <=> b.x;
    }
    friend constexpr bool operator==(const Coord&, const Coord&) = default;
};

enum class Corner { TopLeftAcute, BottomRightAcute };

inline constexpr std::array<Coord, 6> kHexDirs = {{
    {-1, 0}, {1, 0}, {0, -1}, {0, 1}, {1, -1}, {-1, 1},
}};

inline void check_board_size(int n) {
    if (n < 1) throw domain_error("board size must be >= 1");
}

inline bool on_board(Coord c, int n) {
    return 1 <= c.x && c.x <= n && 1 <= c.y && c.y <= n;
}

inline bool on_extended_board(Coord c, int n) {
    return 0 <= c.x && c.x <= n + 1 && 1 <= c.y && c.y <= n;
}

inline bool is_extension_cell(Coord c, int n) {
    return c.x == 0 || c.x == n + 1;
}

inline bool adjacent(Coord a, Coord b) {
    for (auto d : kHexDirs)
        if (a.x + d.x == b.x && a.y + d.y == b.y) return true;
    return false;
}

// Neighbors of c on the (extended) board, in canonical (y, x) order.
inline std::vector<Coord> neighbors(Coord c, int n, bool extended = false) {
    check_board_size(n);
    if (extended ? !on_extended_board(c, n) : !on_board(c, n))
        throw input_error("coordinate off the board");
    std::vector<Coord> out;
    out.reserve(6);
    for (auto d : kHexDirs) {
        Coord nb{c.x + d.x, c.y + d.y};
        if (extended ? on_extended_board(nb, n) : on_board(nb, n)) out.push_back(nb);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// 180-degree rotation of the (extended) board; an involution that maps
// column 0 to column n+1 and swaps the two acute corners.
inline Coord rotate180(Coord c, int n) {
    check_board_size(n);
    if (!on_extended_board(c, n)) throw input_error("coordinate off the extended board");
    return {n + 1 - c.x, n + 1 - c.y};
}

// The 15-cell region at an acute corner: rows 1..5, shrinking by one
// cell per row. Requires n >= 5 so the region fits on the board.
inline std::vector<Coord> corner_region(int n, Corner corner) {
    check_board_size(n);
    if (n < 5) throw domain_error("corner region needs board size >= 5");
    std::vector<Coord> out;
    out.reserve(15);
    for (int y = 1; y <= 5; ++y)
        for (int x = 1; x <= 6 - y; ++x) out.push_back({x, y});
    if (corner == Corner::BottomRightAcute)
        for (auto& c : out) c = rotate180(c, n);
    std::sort(out.begin(), out.end());
    return out;
}

// Labels: column letter a..t + row number, so (1,1) <-> "a1". Columns
// beyond t (x > 20) use the numeric "x,y" form instead.
inline std::string format_label(Coord c) {
    if (c.x < 1 || c.y < 1) throw input_error("label coordinates must be positive");
    if (c.x <= 20) return std::string(1, char('a' + c.x - 1)) + std::to_string(c.y);
    return std::to_string(c.x) + "," + std::to_string(c.y);
}

inline Coord parse_label(const std::string& s) {
    if (s.empty()) throw input_error("empty cell label");
    auto parse_int = [&](size_t from, size_t to) {
        if (from >= to) throw input_error("malformed cell label: " + s);
        long v = 0;
        for (size_t i = from; i < to; ++i) {
            if (s[i] < '0' || s[i] > '9') throw input_error("malformed cell label: " + s);
            v = v * 10 + (s[i] - '0');
            if (v > 1'000'000) throw input_error("cell label out of range: " + s);
        }
        if (v < 1) throw input_error("cell label out of range: " + s);
        return static_cast<int>(v);
    };
    if (s[0] >= 'a' && s[0] <= 'z') {
        if (s[0] > 't') throw input_error("column letters only cover a..t: " + s);
        return {s[0] - 'a' + 1, parse_int(1, s.size())};
    }
    auto comma = s.find(',');
    if (comma == std::string::npos) throw input_error("malformed cell label: " + s);
    return {parse_int(0, comma), parse_int(comma + 1, s.size())};
}

}  // namespace hexpath

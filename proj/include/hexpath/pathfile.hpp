#pragma once

// The on-disk path format:
//
//   hexpath 1
//   size 10
//   # comment lines are ignored
//   1 1
//   2 1
//
// One stone per line, numeric column and row. Stones are emitted in
// canonical (row, column) order; label forms like "c4" are accepted on
// input for columns a..t. Every line ends with a line feed, including
// the last.

#include <cstdint>
#include <string>
#include <vector>

#include "hexpath/board.hpp"
#include "hexpath/connection.hpp"
#include "hexpath/errors.hpp"

namespace hexpath {

inline std::string emit_path_file(const StoneSet& s) {
    std::string out = "hexpath 1\nsize " + std::to_string(s.n()) + "\n";
    for (auto c : s.stones())
        out += std::to_string(c.x) + " " + std::to_string(c.y) + "\n";
    return out;
}

inline StoneSet parse_path_file(const std::string& text) {
    if (text.empty() || text.back() != '\n')
        throw input_error("path file must end with a newline");
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (ch == '\r') {
            throw input_error("path file must use line-feed terminators");
        } else {
            cur += ch;
        }
    }
    size_t i = 0;
    auto next_line = [&]() -> const std::string* {
        while (i < lines.size()) {
            const std::string& l = lines[i++];
            if (l.empty() || l[0] == '#') continue;
            return &lines[i - 1];
        }
        return nullptr;
    };
    const std::string* header = next_line();
    if (!header || *header != "hexpath 1")
        throw input_error("path file must start with 'hexpath 1'");
    const std::string* size_line = next_line();
    if (!size_line || size_line->rfind("size ", 0) != 0)
        throw input_error("path file missing 'size N' line");
    int n = 0;
    try {
        size_t pos = 0;
        n = std::stoi(size_line->substr(5), &pos);
        if (pos != size_line->size() - 5) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw input_error("malformed size line: " + *size_line);
    }
    if (n < 1) throw input_error("board size must be >= 1");

    std::vector<Coord> stones;
    while (const std::string* l = next_line()) {
        const std::string& line = *l;
        auto sp = line.find(' ');
        Coord c;
        if (sp != std::string::npos) {
            try {
                size_t p1 = 0, p2 = 0;
                c.x = std::stoi(line.substr(0, sp), &p1);
                c.y = std::stoi(line.substr(sp + 1), &p2);
                if (p1 != sp || p2 != line.size() - sp - 1) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw input_error("malformed stone line: " + line);
            }
        } else {
            c = parse_label(line);  // "c4" style, accepted on input
        }
        if (!on_board(c, n)) throw input_error("stone off the board: " + line);
        stones.push_back(c);
    }
    StoneSet s(n, stones);
    if (s.stones().size() != stones.size()) throw input_error("duplicate stone in path file");
    return s;
}

// Stable content hash for canonical path file names (FNV-1a 64).
inline std::string path_content_hash(const StoneSet& s) {
    const std::string bytes = emit_path_file(s);
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 15];
        h >>= 4;
    }
    return out;
}

}  // namespace hexpath

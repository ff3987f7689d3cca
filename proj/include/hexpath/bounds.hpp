#pragma once

// Closed-form upper bounds on winning-path length, the exact optimal
// length function, and the n -> n+8 length recurrence.
//
// All arithmetic is exact: the bounds are quarter-integer rationals and
// the residue-class case split must not be exposed to floating point.

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "hexpath/board.hpp"
#include "hexpath/errors.hpp"

namespace hexpath {

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational make(std::int64_t num, std::int64_t den) {
        if (den == 0) throw domain_error("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        auto g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        return Rational{num, den};
    }

    // Greatest integer <= value.
    std::int64_t floor() const {
        auto q = num / den;
        if (num % den != 0 && num < 0) --q;
        return q;
    }

    bool is_integer() const { return num % den == 0; }

    friend bool operator==(const Rational&, const Rational&) = default;
};

enum class BoundRule { Loose, Lemma2, Lemma3, ThmA, ThmB, ThmC, ThmD, ThmE };

struct BoundResult {
    int n = 0;
    std::int64_t bound = 0;
    BoundRule rule = BoundRule::Loose;
    Rational exact_rational;
};

// The two trivial bounds: n^2 and floor((n^2+1)/2).
inline std::pair<std::int64_t, std::int64_t> loose_bounds(int n) {
    check_board_size(n);
    const std::int64_t nn = std::int64_t(n) * n;
    return {nn, (nn + 1) / 2};
}

// n^2/2 - n/4 + 1/4, valid for n >= 5.
inline Rational lemma2_bound(int n) {
    if (n < 5) throw domain_error("lemma 2 bound needs n >= 5");
    return Rational::make(2 * std::int64_t(n) * n - n + 1, 4);
}

// n^2/2 - n/4 - 3/4, valid for n >= 5 with n = 3 (mod 8).
inline Rational lemma3_bound(int n) {
    if (n < 5 || n % 8 != 3) throw domain_error("lemma 3 bound needs n >= 5, n = 3 (mod 8)");
    return Rational::make(2 * std::int64_t(n) * n - n - 3, 4);
}

// Residue-class dispatch. Cases a,b,c,e take the largest integer not
// exceeding the lemma-2 rational; case d is the lemma-3 bound.
inline BoundResult theorem_bound(int n) {
    if (n < 5) throw domain_error("theorem bound needs n >= 5 (table entry N/A)");
    BoundResult r;
    r.n = n;
    switch (n % 4) {
        case 0: r.rule = BoundRule::ThmA; break;
        case 1: r.rule = BoundRule::ThmB; break;
        case 2: r.rule = BoundRule::ThmC; break;
        default: r.rule = n % 8 == 3 ? BoundRule::ThmD : BoundRule::ThmE; break;
    }
    r.exact_rational = r.rule == BoundRule::ThmD ? lemma3_bound(n) : lemma2_bound(n);
    r.bound = r.exact_rational.floor();
    return r;
}

inline const char* bound_rule_name(BoundRule r) {
    switch (r) {
        case BoundRule::Loose: return "loose";
        case BoundRule::Lemma2: return "Lemma 2";
        case BoundRule::Lemma3: return "Lemma 3";
        case BoundRule::ThmA: return "Thm 3a";
        case BoundRule::ThmB: return "Thm 3b";
        case BoundRule::ThmC: return "Thm 3c";
        case BoundRule::ThmD: return "Thm 3d";
        case BoundRule::ThmE: return "Thm 3e";
    }
    return "?";
}

namespace detail {

inline constexpr std::array<std::int64_t, 20> kCensusLengths = {
    1, 2, 5, 8, 11, 16, 23, 30, 37, 47, 57, 69, 81, 94, 109, 124, 140, 157, 175, 195};

inline constexpr std::array<std::uint64_t, 20> kCensusCounts = {
    1, 3, 1, 4, 23, 51, 20, 115, 5568, 12, 3521, 40, 1058, 2104, 668, 7540, 1298, 83648,
    16631833, 70630};

}  // namespace detail

// Exact optimal winning-path length. Stored for n <= 20; the theorem
// bound is sharp for every n >= 5 except n = 9, so larger sizes use it
// directly (cross-validated by the recursive constructions).
inline std::int64_t optimal_length(int n) {
    check_board_size(n);
    if (n <= 20) return detail::kCensusLengths[n - 1];
    return theorem_bound(n).bound;
}

// Number of distinct optimal paths, known for n <= 20 only.
inline std::optional<std::uint64_t> optimal_path_count(int n) {
    check_board_size(n);
    if (n <= 20) return detail::kCensusCounts[n - 1];
    return std::nullopt;
}

// Length gained by one application of the frame construction.
inline std::int64_t recurrence_step(int n, std::int64_t k) {
    if (n < 1 || k < 1) throw domain_error("recurrence step needs n >= 1, k >= 1");
    return k + 8 * std::int64_t(n) + 30;
}

struct CensusRow {
    int n = 0;
    std::int64_t length = 0;
    std::optional<std::int64_t> bound;
    std::optional<std::uint64_t> count;
};

inline std::vector<CensusRow> census_rows(int max_n) {
    check_board_size(max_n);
    std::vector<CensusRow> rows;
    rows.reserve(max_n);
    for (int n = 1; n <= max_n; ++n) {
        CensusRow r;
        r.n = n;
        r.length = optimal_length(n);
        if (n >= 5) r.bound = theorem_bound(n).bound;
        r.count = optimal_path_count(n);
        rows.push_back(r);
    }
    return rows;
}

}  // namespace hexpath

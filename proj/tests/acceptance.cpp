// Acceptance suite: one line per criterion, PASS or FAIL, nonzero exit
// on any failure. Criteria 3 and 10 enumerate the 9x9 and 10x10 boards
// and only run with --extended.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <map>
#include <string>
#include <vector>

#include "hexpath/hexpath.hpp"

using namespace hexpath;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("%s criterion %2d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string run_cli(const std::string& args, int* exit_code = nullptr) {
    const std::string cmd = std::string(HEXPATH_CLI_PATH) + " " + args;
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return "";
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    if (exit_code) *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

SearchOutcome count_all(int n, int workers = 2) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.mode = SearchMode::CountAll;
    cfg.worker_budget = workers;
    return find_longest(cfg);
}

std::vector<StoneSet> enumerate_optimal(int n, int workers = 2) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.mode = SearchMode::EnumerateAll;
    cfg.worker_budget = workers;
    auto res = find_longest(cfg);
    return res.paths ? *res.paths : std::vector<StoneSet>{};
}

void criteria_1_2() {
    const std::int64_t lengths[] = {1, 2, 5, 8, 11, 16, 23, 30};
    const std::uint64_t counts[] = {1, 3, 1, 4, 23, 51, 20, 115};
    auto t0 = Clock::now();
    bool len_ok = true, cnt_ok = true, proven_ok = true;
    std::string len_detail = "lengths n=1..8:", cnt_detail = "counts n=1..8:";
    for (int n = 1; n <= 8; ++n) {
        auto res = count_all(n);
        len_ok &= res.length == lengths[n - 1];
        cnt_ok &= res.count == counts[n - 1];
        proven_ok &= res.proven_optimal;
        len_detail += " " + std::to_string(res.length);
        cnt_detail += " " + std::to_string(res.count);
    }
    const double dt = seconds_since(t0);
    len_ok &= proven_ok && dt <= 300.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, " proven=%s (%.1fs, limit 300s)", proven_ok ? "true" : "false",
                  dt);
    report(1, len_ok, len_detail + buf);
    report(2, cnt_ok, cnt_detail);
}

void criterion_3_10() {
    {
        auto t0 = Clock::now();
        auto res9 = count_all(9);
        bool ok = res9.length == 37 && res9.count == 5568 && res9.proven_optimal &&
                  theorem_bound(9).bound == 38;
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "n=9: length=%d (bound 38) count=%llu nodes=%llu (%.1fs)", res9.length,
                      static_cast<unsigned long long>(res9.count),
                      static_cast<unsigned long long>(res9.nodes_expanded), seconds_since(t0));
        report(3, ok, buf);
    }
    {
        auto t0 = Clock::now();
        SearchConfig cfg;
        cfg.n = 10;
        cfg.mode = SearchMode::EnumerateAll;
        cfg.worker_budget = 2;
        auto res10 = find_longest(cfg);
        bool ok = res10.length == 47 && res10.count == 12 && res10.proven_optimal;
        char buf[160];
        std::snprintf(buf, sizeof buf, "n=10: length=%d count=%llu nodes=%llu (%.1fs)",
                      res10.length, static_cast<unsigned long long>(res10.count),
                      static_cast<unsigned long long>(res10.nodes_expanded), seconds_since(t0));
        report(3, ok, buf);

        std::uint64_t c2c = 0;
        if (res10.paths)
            for (const auto& p : *res10.paths)
                if (is_corner_to_corner(p)) ++c2c;
        report(10, res10.count == 12 && c2c == 2,
               "corner-to-corner among the 12 optimal 10x10 paths: " + std::to_string(c2c) +
                   " (expect 2)");
    }
}

void criterion_4() {
    bool ok = true;
    for (int n = 1; n <= 4 && ok; ++n) {
        auto oracle = brute_oracle(n);
        for (int L = 1; L <= search_upper_bound(n); ++L) {
            std::uint64_t expect = oracle.count(L) ? oracle.at(L) : 0;
            if (count_of_length(n, L) != expect) {
                ok = false;
                break;
            }
        }
    }
    report(4, ok, "pruned engine equals the subset oracle on the full length map, n=1..4");
}

void criterion_5() {
    const std::int64_t bounds[] = {11, 16, 23, 30, 38, 47, 57, 69,
                                   81, 94, 109, 124, 140, 157, 175, 195};
    bool ok = true;
    for (int n = 5; n <= 20; ++n) {
        ok &= theorem_bound(n).bound == bounds[n - 5];
        ok &= lemma2_bound(n) == Rational::make(2LL * n * n - n + 1, 4);
        if (n % 8 == 3) ok &= lemma3_bound(n) == Rational::make(2LL * n * n - n - 3, 4);
    }
    report(5, ok, "theorem bounds match the census table for n=5..20; rationals exact");
}

void criterion_6() {
    bool ok = true;
    for (int n = 1; n <= 20; ++n) ok &= eq1_check(witness(n)).holds;
    for (int n = 1; n <= 8; ++n)
        for (const auto& p : enumerate_optimal(n)) ok &= eq1_check(p).holds;
    for (int n : {21, 22, 25, 28, 36, 44, 52, 60}) {
        ok &= eq1_check(generate(n).first).holds;
    }
    report(6, ok, "eq1 on witnesses 1..20, every enumerated optimum n<=8, generated n up to 60");
}

void criterion_7() {
    StoneSet fig2a(
        10, {{10, 1}, {10, 2}, {10, 3}, {10, 4}, {10, 5}, {10, 6}, {10, 7}, {10, 8}, {9, 9},
             {8, 9},  {7, 9},  {6, 9},  {5, 9},  {4, 9},  {3, 9},  {3, 8},  {3, 7},  {3, 6},
             {3, 5},  {4, 4},  {5, 4},  {6, 4},  {6, 5},  {5, 6},  {5, 7},  {6, 7},  {7, 7},
             {8, 6},  {8, 5},  {8, 4},  {8, 3},  {8, 2},  {7, 2},  {6, 2},  {5, 2},  {4, 2},
             {3, 2},  {2, 2},  {1, 3},  {1, 4},  {1, 5},  {1, 6},  {1, 7},  {1, 8},  {1, 9},
             {1, 10}});
    auto whole = wasted(fig2a, Region::whole_grid(10));
    auto eq2 = eq2_check(fig2a, Region::a(10));
    bool ok = whole.t == 18 && eq2.e == 9 && eq2.b == 4 && eq2.t_down - eq2.t_up == 5 &&
              eq2.holds;
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "figure-2a path: t=%ld, region A e=%ld b=%d t_down-t_up=%ld eq2=%s", whole.t,
                  eq2.e, eq2.b, eq2.t_down - eq2.t_up, eq2.holds ? "holds" : "violated");
    report(7, ok, buf);
}

void criterion_8() {
    bool ok = true;
    int checked = 0;
    for (int n : {5, 6}) {
        auto paths = enumerate_optimal(n);
        ok &= paths.size() == (n == 5 ? 23u : 51u);
        for (const auto& p : paths) {
            for (auto corner : {Corner::TopLeftAcute, Corner::BottomRightAcute}) {
                try {
                    auto t = corner_lemma_witness(p, corner);
                    for (auto v : t.vertices()) ok &= !p.contains(v);
                } catch (const internal_error&) {
                    ok = false;
                }
                ++checked;
            }
        }
    }
    report(8, ok,
           "corner lemma witness found for all optimal paths, n=5 (23) and n=6 (51), "
           "both corners (" +
               std::to_string(checked) + " checks)");
}

void criterion_9() {
    bool ok = true;
    for (int n : {5, 6, 7, 8, 10, 11, 12}) {
        auto big = extend(witness(n));
        ok &= is_minimal_winning_path(big) && big.size() == optimal_length(n + 8);
    }
    auto seventeen = extend(witness(9));
    ok &= seventeen.size() == 139 && is_minimal_winning_path(seventeen);

    bool timing_ok = true;
    for (int n : {21, 22, 25, 28, 44}) {
        auto t0 = Clock::now();
        auto [s, trace] = generate(n);
        const double dt = seconds_since(t0);
        ok &= s.size() == theorem_bound(n).bound && is_minimal_winning_path(s);
        timing_ok &= dt <= 10.0;
    }
    report(9, ok && timing_ok,
           "extensions verified for all seeds (9 -> length 139, documented non-optimal); "
           "generate(21,22,25,28,44) bound-sharp within 10s each");
}

void criterion_11() {
    bool ok = true;
    for (int n = 1; n <= 8; ++n) {
        int code1 = 0;
        auto base = run_cli("search " + std::to_string(n) + " --count --workers 1", &code1);
        ok &= code1 == 0;
        for (int w : {2, 8}) {
            int code = 0;
            auto out =
                run_cli("search " + std::to_string(n) + " --count --workers " +
                            std::to_string(w),
                        &code);
            ok &= code == 0 && out == base;
        }
    }
    report(11, ok, "search 1..8 --count output byte-identical for worker budgets 1, 2, 8");
}

}  // namespace

int main(int argc, char** argv) {
    const bool extended = argc > 1 && std::strcmp(argv[1], "--extended") == 0;

    if (extended) {
        criterion_3_10();
    } else {
        criteria_1_2();
        criterion_4();
        criterion_5();
        criterion_6();
        criterion_7();
        criterion_8();
        criterion_9();
        criterion_11();
        std::printf("criteria 3 and 10 are the extended tier: run with --extended\n");
    }

    if (g_failures) {
        std::printf("%d criterion check(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all checks passed\n");
    return 0;
}

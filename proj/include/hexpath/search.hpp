#pragma once

// Exhaustive enumeration of minimal winning paths.
//
// Search space: induced paths grown stone by stone from their unique
// row-1 stone. New stones may touch the path only at the current head,
// so every candidate set is chordless by construction, and each minimal
// winning path is generated exactly once (from its row-1 end).
//
// Pruning, relative to a target length k:
//   induced        - reject stones adjacent to any closed path stone
//   budget         - a unit triangle none of whose cells can ever hold a
//                    stone in this branch is already wasted, whether its
//                    cells are blocked or merely walled off from the head;
//                    by the area identity, more than 2(n+1)(n-1) - 4(k-1)
//                    of those kill the branch
//   unique_contact - block row 1 after the start; stop at row n
//   reach          - row n must stay reachable from the head through
//                    cells that can still be played
// Each rule can be disabled independently; completions are always
// re-verified with the connection module, so disabling rules changes
// speed, never results.
//
// Parallelism: the DFS is split at a fixed prefix depth into independent
// work units consumed by a worker pool. Counts, node totals and path
// lists are merged in unit order, so results are identical for any
// worker budget.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

#include "hexpath/bitboard.hpp"
#include "hexpath/bounds.hpp"
#include "hexpath/connection.hpp"
#include "hexpath/errors.hpp"

namespace hexpath {

enum class SearchMode { FindOne, CountAll, EnumerateAll };

struct PruneRules {
    bool induced = true;
    bool budget = true;
    bool unique_contact = true;
    bool reach = true;
};

struct SearchConfig {
    int n = 1;
    std::optional<int> target_length;
    SearchMode mode = SearchMode::CountAll;
    int worker_budget = 1;
    std::optional<std::uint64_t> node_limit;
    int split_depth = 3;
    PruneRules rules;
};

struct SearchOutcome {
    int length = 0;
    std::uint64_t count = 0;
    std::optional<std::vector<StoneSet>> paths;
    std::uint64_t nodes_expanded = 0;
    bool proven_optimal = false;
};

namespace detail {

struct TaskResult {
    std::uint64_t nodes = 0;
    std::uint64_t count = 0;
    std::vector<std::vector<int>> paths;  // sorted cell indices
    bool found = false;
    std::vector<int> first_path;
    bool completed = false;
};

struct SharedLimits {
    std::atomic<std::uint64_t> nodes_spent{0};
    std::atomic<bool> abort{false};
    std::uint64_t node_limit = 0;  // 0 = unlimited
    std::atomic<int> cutoff{INT32_MAX};
};

template <int W>
class Engine {
  public:
    Engine(int n, int target, SearchMode mode, PruneRules rules, SharedLimits* limits)
        : n_(n), cells_(n * n), target_(target), mode_(mode), rules_(rules), limits_(limits) {
        build_topology();
        reset();
    }

    void reset() {
        occupied_ = Bits<W>{};
        blocked_ = Bits<W>{};
        usable_ = usable_init_;
        occ_.assign(occ_.size(), 0);
        decided_ = 0;
        head_ = -1;
        seq_.clear();
        undo_.clear();
    }

    // Replays a prefix, then explores every continuation. Prefix pushes
    // are bookkeeping only: their completions were handled when the
    // prefix was generated.
    void run(const std::vector<int>& prefix, int depth_cap, TaskResult& out,
             std::vector<std::vector<int>>* prefix_out, std::map<int, std::uint64_t>* tally) {
        out_ = &out;
        prefix_out_ = prefix_out;
        tally_ = tally;
        depth_cap_ = depth_cap;
        reset();
        for (int c : prefix) push(c);
        expand_children();
        flush_nodes();
    }

    // One full branch from a root stone (stage-1 prefix generation).
    void run_root(int root, int depth_cap, TaskResult& out,
                  std::vector<std::vector<int>>* prefix_out, std::map<int, std::uint64_t>* tally) {
        out_ = &out;
        prefix_out_ = prefix_out;
        tally_ = tally;
        depth_cap_ = depth_cap;
        reset();
        visit(root);
        flush_nodes();
    }

  private:
    static constexpr int kNodeFlush = 4096;

    void build_topology() {
        nbr_.assign(cells_, Bits<W>{});
        for (int y = 1; y <= n_; ++y)
            for (int x = 1; x <= n_; ++x) {
                int c = idx(x, y);
                for (auto d : kHexDirs) {
                    int nx = x + d.x, ny = y + d.y;
                    if (1 <= nx && nx <= n_ && 1 <= ny && ny <= n_) nbr_[c].set(idx(nx, ny));
                }
            }
        for (int i = 0; i < cells_; ++i) all_.set(i);
        for (int x = 1; x <= n_; ++x) {
            row1_.set(idx(x, 1));
            rown_.set(idx(x, n_));
        }

        // triangles: anchor (tx in 0..n, ty in 1..n-1), down then up
        ntris_ = 2 * (n_ + 1) * (n_ - 1);
        usable_init_.assign(ntris_, 0);
        occ_.assign(ntris_, 0);
        cell_tris_.assign(cells_, {});
        tri_verts_.assign(ntris_, {-1, -1, -1});
        auto tid = [&](int tx, int ty, int up) { return ((ty - 1) * (n_ + 1) + tx) * 2 + up; };
        auto add_vertex = [&](int tx, int ty, int up, int vx, int vy) {
            if (vx < 1 || vx > n_) return;  // extension cells are never playable
            int t = tid(tx, ty, up);
            tri_verts_[t][usable_init_[t]] = static_cast<std::int16_t>(idx(vx, vy));
            ++usable_init_[t];
            cell_tris_[idx(vx, vy)].push_back(static_cast<std::int16_t>(t));
        };
        for (int ty = 1; ty < n_; ++ty)
            for (int tx = 0; tx <= n_; ++tx) {
                add_vertex(tx, ty, 0, tx, ty);
                add_vertex(tx, ty, 0, tx + 1, ty);
                add_vertex(tx, ty, 0, tx, ty + 1);
                add_vertex(tx, ty, 1, tx + 1, ty);
                add_vertex(tx, ty, 1, tx, ty + 1);
                add_vertex(tx, ty, 1, tx + 1, ty + 1);
            }

        if (target_ > 0) {
            t_allowed_ = 2 * std::int64_t(n_ + 1) * (n_ - 1) - 4 * (std::int64_t(target_) - 1);
        }

        for (int y = 1; y <= n_; ++y)
            for (int x = 1; x <= n_; ++x) {
                if (x > 1) notcol1_.set(idx(x, y));
                if (x < n_) notcoln_.set(idx(x, y));
            }
    }

    int idx(int x, int y) const { return (y - 1) * n_ + (x - 1); }

    void block_cell(int c) {
        for (auto t : cell_tris_[c])
            if (--usable_[t] == 0 && occ_[t] == 0) ++decided_;
    }
    void unblock_cell(int c) {
        for (auto t : cell_tris_[c]) {
            if (usable_[t] == 0 && occ_[t] == 0) --decided_;
            ++usable_[t];
        }
    }

    struct Undo {
        int prev_head;
        Bits<W> newly_blocked;
    };

    void push(int c) {
        Undo u;
        u.prev_head = head_;
        occupied_.set(c);
        for (auto t : cell_tris_[c]) {
            ++occ_[t];
            --usable_[t];
        }
        Bits<W> newly{};
        if (head_ < 0) {
            if (rules_.unique_contact) newly = row1_.andnot(occupied_).andnot(blocked_);
        } else if (rules_.induced) {
            newly = nbr_[head_].andnot(occupied_).andnot(blocked_);
        }
        newly.for_each([&](int b) { block_cell(b); });
        blocked_ |= newly;
        u.newly_blocked = newly;
        undo_.push_back(u);
        head_ = c;
        seq_.push_back(c);
    }

    void pop() {
        int c = seq_.back();
        seq_.pop_back();
        Undo u = undo_.back();
        undo_.pop_back();
        blocked_ &= ~u.newly_blocked;
        u.newly_blocked.for_each([&](int b) { unblock_cell(b); });
        for (auto t : cell_tris_[c]) {
            --occ_[t];
            ++usable_[t];
        }
        occupied_.clear(c);
        head_ = u.prev_head;
    }

    Bits<W> expand(const Bits<W>& f) const {
        Bits<W> e{};
        e |= (f & notcoln_).shifted_left(1);
        e |= (f & notcol1_).shifted_right(1);
        e |= f.shifted_left(n_);
        e |= f.shifted_right(n_);
        if (n_ > 1) {
            e |= (f & notcoln_).shifted_right(n_ - 1);
            e |= (f & notcol1_).shifted_left(n_ - 1);
        }
        return e & all_;
    }

    // Flood from the head through playable cells. Fails when row n is
    // unreachable. With a live budget it also counts every triangle that
    // has no stone and no reachable playable vertex: cells walled off
    // behind the path can never be played, so those triangles are wasted
    // even though no rule has blocked them yet. This subsumes decided_.
    bool flood_check() {
        Bits<W> free = all_.andnot(occupied_).andnot(blocked_);
        Bits<W> frontier = nbr_[head_] & free;
        Bits<W> visited = frontier;
        bool bottom = false;
        while (frontier.any()) {
            if (frontier.intersects(rown_)) {
                bottom = true;
                break;
            }
            frontier = expand(frontier) & free;
            frontier = frontier.andnot(visited);
            visited |= frontier;
        }
        if (rules_.reach && !bottom) return false;
        if (!rules_.budget || target_ <= 0) return true;
        // complete the flood so visited covers everything reachable
        while (frontier.any()) {
            frontier = expand(frontier) & free;
            frontier = frontier.andnot(visited);
            visited |= frontier;
        }
        std::int64_t waste = 0;
        for (int t = 0; t < ntris_; ++t) {
            if (occ_[t] != 0) continue;
            const auto& v = tri_verts_[t];
            bool can_cover = (v[0] >= 0 && visited.test(v[0])) ||
                             (v[1] >= 0 && visited.test(v[1])) ||
                             (v[2] >= 0 && visited.test(v[2]));
            if (!can_cover) ++waste;
        }
        return waste <= t_allowed_;
    }

    void handle_completion() {
        const int k = static_cast<int>(seq_.size());
        if (target_ > 0 && k != target_) return;
        // independent re-verification; pruning rules are never trusted
        std::vector<Coord> coords;
        coords.reserve(seq_.size());
        for (int c : seq_) coords.push_back({c % n_ + 1, c / n_ + 1});
        StoneSet s(n_, std::move(coords));
        if (!is_minimal_winning_path(s)) return;
        if (tally_) {
            ++(*tally_)[k];
            return;
        }
        ++out_->count;
        std::vector<int> sorted = seq_;
        std::sort(sorted.begin(), sorted.end());
        if (!out_->found) {
            out_->found = true;
            out_->first_path = sorted;
        }
        if (mode_ == SearchMode::EnumerateAll) out_->paths.push_back(std::move(sorted));
    }

    bool aborted() {
        if (++local_nodes_ >= kNodeFlush) flush_nodes();
        return limits_ && limits_->abort.load(std::memory_order_relaxed);
    }

    void flush_nodes() {
        if (!limits_) {
            out_->nodes += local_nodes_;
            local_nodes_ = 0;
            return;
        }
        auto spent = limits_->nodes_spent.fetch_add(local_nodes_) + local_nodes_;
        out_->nodes += local_nodes_;
        local_nodes_ = 0;
        if (limits_->node_limit && spent > limits_->node_limit) limits_->abort.store(true);
    }

    void visit(int c) {
        push(c);
        if (aborted()) {
            pop();
            return;
        }
        bool cont = true;
        if (rown_.test(c)) {
            handle_completion();
            cont = !rules_.unique_contact;
        }
        if (cont && stop_findone()) cont = false;
        if (cont && target_ > 0 && static_cast<int>(seq_.size()) >= target_) cont = false;
        if (cont && rules_.budget && target_ > 0 && decided_ > t_allowed_) cont = false;
        if (cont && (rules_.reach || (rules_.budget && target_ > 0)) && !flood_check())
            cont = false;
        if (cont) {
            if (depth_cap_ >= 0 && static_cast<int>(seq_.size()) == depth_cap_)
                prefix_out_->push_back(seq_);
            else
                expand_children();
        }
        pop();
    }

    bool stop_findone() const { return mode_ == SearchMode::FindOne && out_->found; }

    void expand_children() {
        Bits<W> cand = nbr_[head_].andnot(occupied_).andnot(blocked_);
        cand.for_each([&](int c) {
            if (stop_findone()) return;
            if (limits_ && limits_->abort.load(std::memory_order_relaxed)) return;
            visit(c);
        });
    }

    int n_, cells_, ntris_ = 0;
    int target_;
    SearchMode mode_;
    PruneRules rules_;
    SharedLimits* limits_;

    std::vector<Bits<W>> nbr_;
    Bits<W> all_{}, row1_{}, rown_{}, notcol1_{}, notcoln_{};
    std::vector<std::vector<std::int16_t>> cell_tris_;
    std::vector<std::array<std::int16_t, 3>> tri_verts_;
    std::vector<std::int8_t> usable_init_;

    Bits<W> occupied_{}, blocked_{};
    std::vector<std::int8_t> usable_, occ_;
    std::int64_t decided_ = 0, t_allowed_ = 0;
    int head_ = -1;
    std::vector<int> seq_;
    std::vector<Undo> undo_;

    TaskResult* out_ = nullptr;
    std::vector<std::vector<int>>* prefix_out_ = nullptr;
    std::map<int, std::uint64_t>* tally_ = nullptr;
    int depth_cap_ = -1;
    std::uint64_t local_nodes_ = 0;
};

struct TargetRunResult {
    std::uint64_t count = 0;
    std::vector<std::vector<int>> paths;
    std::uint64_t nodes = 0;
    bool found = false;
    std::vector<int> first_path;
    bool aborted = false;
};

// Search one exact target length. Stage 1 enumerates work-unit prefixes
// sequentially; stage 2 distributes them over the worker pool; results
// merge in unit order regardless of scheduling.
template <int W>
TargetRunResult run_target(const SearchConfig& cfg, int target,
                           std::uint64_t node_budget_left,
                           std::map<int, std::uint64_t>* tally = nullptr) {
    SharedLimits limits;
    limits.node_limit = cfg.node_limit ? node_budget_left : 0;

    TaskResult stage1;
    std::vector<std::vector<int>> prefixes;
    const int cap = std::max(1, cfg.split_depth);
    const bool findone = cfg.mode == SearchMode::FindOne;
    {
        Engine<W> gen(cfg.n, target, cfg.mode, cfg.rules, &limits);
        for (int x = 1; x <= cfg.n; ++x) {
            if (findone && stage1.found) break;
            if (limits.abort.load()) break;
            gen.run_root(x - 1, cap, stage1, &prefixes, tally);
        }
    }
    stage1.completed = true;

    const size_t ntasks = prefixes.size();
    std::vector<TaskResult> results(ntasks);
    std::atomic<size_t> next{0};
    const int workers = tally ? 1 : std::max(1, cfg.worker_budget);
    if (findone && stage1.found) limits.cutoff.store(-1);

    auto work = [&]() {
        Engine<W> eng(cfg.n, target, cfg.mode, cfg.rules, &limits);
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= ntasks || limits.abort.load()) break;
            if (findone && static_cast<int>(i) > limits.cutoff.load()) continue;
            eng.run(prefixes[i], -1, results[i], nullptr, tally);
            if (limits.abort.load()) break;
            results[i].completed = true;
            if (findone && results[i].found) {
                int cur = limits.cutoff.load();
                while (static_cast<int>(i) < cur &&
                       !limits.cutoff.compare_exchange_weak(cur, static_cast<int>(i))) {
                }
            }
        }
    };
    if (workers == 1 || ntasks <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        const int spawn = static_cast<int>(std::min<size_t>(workers, ntasks));
        pool.reserve(spawn);
        for (int i = 0; i < spawn; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    TargetRunResult out;
    out.aborted = limits.abort.load();
    auto absorb = [&](TaskResult& r) {
        out.nodes += r.nodes;
        out.count += r.count;
        for (auto& p : r.paths) out.paths.push_back(std::move(p));
        if (!out.found && r.found) {
            out.found = true;
            out.first_path = r.first_path;
        }
    };
    absorb(stage1);
    if (findone && stage1.found) return out;
    for (size_t i = 0; i < ntasks; ++i) {
        if (!results[i].completed) break;  // beyond the find-one cutoff, or aborted
        absorb(results[i]);
        if (findone && results[i].found) break;
    }
    std::sort(out.paths.begin(), out.paths.end());
    return out;
}

template <typename F>
auto dispatch_words(int n, F&& f) {
    switch ((n * n + 63) / 64) {
        case 1: return f(std::integral_constant<int, 1>{});
        case 2: return f(std::integral_constant<int, 2>{});
        case 3: return f(std::integral_constant<int, 3>{});
        case 4: return f(std::integral_constant<int, 4>{});
        case 5: return f(std::integral_constant<int, 5>{});
        case 6: return f(std::integral_constant<int, 6>{});
        case 7: return f(std::integral_constant<int, 7>{});
        default: throw domain_error("exhaustive search supports boards up to n = 20");
    }
}

inline StoneSet cells_to_stoneset(int n, const std::vector<int>& cells) {
    std::vector<Coord> coords;
    coords.reserve(cells.size());
    for (int c : cells) coords.push_back({c % n + 1, c / n + 1});
    return StoneSet(n, std::move(coords));
}

}  // namespace detail

// Thrown when a node limit cuts a search short; carries whatever was
// established so far. The partial outcome is not authoritative.
struct search_limit_error : resource_error {
    explicit search_limit_error(SearchOutcome p)
        : resource_error("search node limit exceeded"), partial(std::move(p)) {}
    SearchOutcome partial;
};

// Maximum length a search target may start from: the theorem bound where
// it applies, the loose bound below n = 5.
inline std::int64_t search_upper_bound(int n) {
    return n >= 5 ? theorem_bound(n).bound : loose_bounds(n).second;
}

// Longest minimal winning path, with count and (optionally) the full
// enumeration. Targets descend from the bound; proven_optimal reports
// that every greater target was exhausted.
inline SearchOutcome find_longest(const SearchConfig& cfg) {
    check_board_size(cfg.n);
    if (cfg.worker_budget < 1) throw domain_error("worker budget must be >= 1");
    const auto upper = search_upper_bound(cfg.n);
    const int first = cfg.target_length ? *cfg.target_length : static_cast<int>(upper);
    if (first < 1 || first > upper) throw domain_error("target length out of range");
    const int last = cfg.target_length ? first : 1;

    return detail::dispatch_words(cfg.n, [&](auto words) {
        constexpr int W = decltype(words)::value;
        SearchOutcome outcome;
        for (int target = first; target >= last; --target) {
            std::uint64_t left = 0;
            if (cfg.node_limit) {
                if (*cfg.node_limit <= outcome.nodes_expanded) left = 1;  // force trip
                else left = *cfg.node_limit - outcome.nodes_expanded;
            }
            auto r = detail::run_target<W>(cfg, target, left);
            outcome.nodes_expanded += r.nodes;
            if (r.aborted) {
                outcome.length = target;
                outcome.count = r.count;
                outcome.proven_optimal = false;
                throw search_limit_error(outcome);
            }
            if (r.count > 0 || r.found) {
                outcome.length = target;
                outcome.count = r.count;
                outcome.proven_optimal = !cfg.target_length || target == upper;
                if (cfg.mode == SearchMode::EnumerateAll) {
                    std::vector<StoneSet> paths;
                    paths.reserve(r.paths.size());
                    for (auto& p : r.paths) paths.push_back(detail::cells_to_stoneset(cfg.n, p));
                    outcome.paths = std::move(paths);
                }
                return outcome;
            }
        }
        // no path at the requested target (only possible with an explicit target)
        outcome.length = cfg.target_length ? first : 0;
        outcome.count = 0;
        outcome.proven_optimal = false;
        return outcome;
    });
}

// Number of distinct minimal winning paths of exactly length L.
inline std::uint64_t count_of_length(int n, int L, int worker_budget = 1) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.target_length = L;
    cfg.mode = SearchMode::CountAll;
    cfg.worker_budget = worker_budget;
    return find_longest(cfg).count;
}

// (total, corner-to-corner) among paths of length L.
inline std::pair<std::uint64_t, std::uint64_t> corner_endpoint_census(int n, int L,
                                                                      int worker_budget = 1) {
    if (n == 1) {
        if (L != 1) return {0, 0};
        return {1, 1};  // the single stone occupies a corner
    }
    SearchConfig cfg;
    cfg.n = n;
    cfg.target_length = L;
    cfg.mode = SearchMode::EnumerateAll;
    cfg.worker_budget = worker_budget;
    auto res = find_longest(cfg);
    std::uint64_t c2c = 0;
    if (res.paths)
        for (const auto& p : *res.paths)
            if (is_corner_to_corner(p)) ++c2c;
    return {res.count, c2c};
}

// Independent oracle for tiny boards: full subset enumeration for
// n <= 4, unpruned induced-path DFS for n = 5. Returns the complete
// length -> count map of minimal winning paths.
inline std::map<int, std::uint64_t> brute_oracle(int n) {
    check_board_size(n);
    if (n > 5) throw resource_error("brute oracle is limited to n <= 5");
    std::map<int, std::uint64_t> tally;
    if (n <= 4) {
        const int cells = n * n;
        for (std::uint32_t mask = 1; mask < (1u << cells); ++mask) {
            std::vector<Coord> coords;
            for (int i = 0; i < cells; ++i)
                if (mask >> i & 1) coords.push_back({i % n + 1, i / n + 1});
            StoneSet s(n, std::move(coords));
            if (is_minimal_winning_path(s)) ++tally[s.size()];
        }
        return tally;
    }
    SearchConfig cfg;
    cfg.n = n;
    cfg.mode = SearchMode::CountAll;
    cfg.rules.budget = false;
    cfg.rules.reach = false;
    detail::run_target<1>(cfg, /*target=*/0, /*node_budget=*/0, &tally);
    return tally;
}

}  // namespace hexpath

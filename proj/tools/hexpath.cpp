// Command-line interface: census table, bounds, exhaustive search,
// path verification, waste accounting, witness/extension emission and
// board rendering.
//
// Exit codes: 0 success/verified, 1 verification or domain failure,
// 2 malformed input, 3 resource limit.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hexpath/hexpath.hpp"

namespace {

using namespace hexpath;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw input_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int default_workers() {
    if (const char* env = std::getenv("HEXPATH_WORKERS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

void print_table(int max_n, bool csv) {
    auto rows = census_rows(max_n);
    if (csv) {
        std::printf("n,length,bound,count\n");
        for (const auto& r : rows) {
            std::printf("%d,%lld,", r.n, static_cast<long long>(r.length));
            if (r.bound) std::printf("%lld", static_cast<long long>(*r.bound));
            std::printf(",");
            if (r.count) std::printf("%llu", static_cast<unsigned long long>(*r.count));
            std::printf("\n");
        }
        return;
    }
    std::printf("%3s %7s %6s %10s\n", "n", "length", "bound", "count");
    for (const auto& r : rows) {
        std::string bound = r.bound ? std::to_string(*r.bound) : "N/A";
        std::string count = r.count ? std::to_string(*r.count) : "-";
        std::printf("%3d %7lld %6s %10s\n", r.n, static_cast<long long>(r.length),
                    bound.c_str(), count.c_str());
    }
}

int cmd_verify(const std::string& file) {
    StoneSet s = parse_path_file(read_input(file));
    const bool winning = is_winning(s);
    std::printf("size: %d\n", s.n());
    std::printf("winning: %s\n", yesno(winning).c_str());
    if (!winning) {
        std::printf("minimal: no\n");
        std::printf("reason: not winning\n");
        return 1;
    }
    const int removable = first_removable_stone(s);
    const bool minimal = removable < 0;
    std::printf("minimal: %s\n", yesno(minimal).c_str());
    if (!minimal) {
        std::printf("reason: removable stone %s\n",
                    format_label(s.stones()[removable]).c_str());
        return 1;
    }
    auto eq1 = eq1_check(s);
    std::printf("k: %ld\n", eq1.k);
    std::printf("t: %ld\n", eq1.t);
    std::printf("eq1: %s\n", eq1.holds ? "holds" : "VIOLATED");
    return eq1.holds ? 0 : 1;
}

void print_region_report(const StoneSet& s, const Region& region, const char* name) {
    auto w = wasted(s, region);
    std::printf("region %s: t=%ld t_down=%ld t_up=%ld\n", name, w.t, w.t_down, w.t_up);
    auto rep = boundary_components(s, region);
    std::printf("boundary components: b=%d\n", rep.b());
    for (const auto& comp : rep.components) {
        std::string cells;
        for (auto c : comp.stones) {
            if (!cells.empty()) cells += ' ';
            cells += format_label(c);
        }
        std::printf("  %s (transversal: %s)\n", cells.c_str(), yesno(comp.transversal).c_str());
    }
    auto eq2 = eq2_check(s, region);
    std::printf("eq2: e=%ld b=%d t_down-t_up=%ld %s\n", eq2.e, eq2.b, eq2.t_down - eq2.t_up,
                eq2.holds ? "holds" : "VIOLATED");
}

int cmd_waste(const std::string& file, const std::string& region_name) {
    StoneSet s = parse_path_file(read_input(file));
    if (!is_minimal_winning_path(s)) {
        std::fprintf(stderr, "error: not a minimal winning path\n");
        return 1;
    }
    if (region_name == "all") {
        auto w = wasted(s, Region::whole_grid(s.n()));
        std::printf("whole grid: t=%ld t_down=%ld t_up=%ld\n", w.t, w.t_down, w.t_up);
        return 0;
    }
    if (region_name == "A") {
        print_region_report(s, Region::a(s.n()), "A");
        return 0;
    }
    if (region_name == "B") {
        print_region_report(s, Region::b(s.n()), "B");
        return 0;
    }
    throw input_error("unknown region: " + region_name + " (expected A, B or all)");
}

int cmd_search(int n, bool count_all, const std::string& enum_dir, int target, int workers,
               long long node_limit, int split_depth) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.worker_budget = workers;
    cfg.split_depth = split_depth;
    if (target > 0) cfg.target_length = target;
    if (node_limit > 0) cfg.node_limit = static_cast<std::uint64_t>(node_limit);
    cfg.mode = SearchMode::FindOne;
    if (count_all) cfg.mode = SearchMode::CountAll;
    if (!enum_dir.empty()) cfg.mode = SearchMode::EnumerateAll;

    SearchOutcome res;
    try {
        res = find_longest(cfg);
    } catch (const search_limit_error& e) {
        std::fprintf(stderr, "node limit exceeded; partial results are not authoritative\n");
        std::printf("length>=%d count>=%llu nodes=%llu proven=false\n", e.partial.length,
                    static_cast<unsigned long long>(e.partial.count),
                    static_cast<unsigned long long>(e.partial.nodes_expanded));
        return 3;
    }

    if (cfg.mode == SearchMode::FindOne) {
        std::printf("length=%d nodes=%llu proven=%s\n", res.length,
                    static_cast<unsigned long long>(res.nodes_expanded),
                    res.proven_optimal ? "true" : "false");
    } else {
        std::printf("length=%d count=%llu nodes=%llu proven=%s\n", res.length,
                    static_cast<unsigned long long>(res.count),
                    static_cast<unsigned long long>(res.nodes_expanded),
                    res.proven_optimal ? "true" : "false");
    }

    if (!enum_dir.empty() && res.paths) {
        std::filesystem::create_directories(enum_dir);
        std::string manifest = "hexpath-manifest 1\nsize " + std::to_string(n) + "\nlength " +
                               std::to_string(res.length) + "\ncount " +
                               std::to_string(res.paths->size()) + "\n";
        for (const auto& p : *res.paths) {
            const std::string name = "path_" + path_content_hash(p) + ".hexpath";
            std::ofstream f(std::filesystem::path(enum_dir) / name, std::ios::binary);
            f << emit_path_file(p);
            manifest += name + "\n";
        }
        std::ofstream mf(std::filesystem::path(enum_dir) / "manifest.txt", std::ios::binary);
        mf << manifest;
        std::fprintf(stderr, "wrote %zu path files to %s\n", res.paths->size(),
                     enum_dir.c_str());
    }
    return 0;
}

int cmd_generate(int n) {
    auto [path, trace] = generate(n);
    std::fprintf(stderr, "base: n=%d\n", trace.base_n);
    long long len = optimal_length(trace.base_n);
    for (const auto& step : trace.steps) {
        len = recurrence_step(step.seed_n, len);
        std::fprintf(stderr, "step: type=%s seed_n=%d -> n=%d length=%lld\n",
                     template_name(step.type), step.seed_n, step.seed_n + 8, len);
    }
    std::fputs(emit_path_file(path).c_str(), stdout);
    return 0;
}

int cmd_render(const std::string& file, const std::string& format, bool waste, bool extension) {
    StoneSet s = parse_path_file(read_input(file));
    RenderSpec spec;
    spec.show_waste = waste;
    spec.show_extension = extension;
    if (format == "ascii") {
        spec.format = RenderFormat::Ascii;
        std::fputs(render_ascii(s, spec).c_str(), stdout);
        return 0;
    }
    if (format == "svg") {
        spec.format = RenderFormat::Svg;
        std::fputs(render_svg(s, spec).c_str(), stdout);
        return 0;
    }
    throw input_error("unknown render format: " + format);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"longest minimal winning paths on n x n Hex boards"};
    app.require_subcommand(1);

    int n = 0, max_n = 20, target = 0, split_depth = 3;
    int workers = default_workers();
    long long node_limit = 0;
    bool count_all = false, csv = false, waste_flag = false, extension = false;
    std::string file, enum_dir, region = "all", format = "ascii";

    auto* c_bound = app.add_subcommand("bound", "theorem bound on the path length");
    c_bound->add_option("n", n, "board size")->required();

    auto* c_length = app.add_subcommand("length", "optimal winning path length");
    c_length->add_option("n", n, "board size")->required();

    auto* c_table = app.add_subcommand("table", "census of lengths, bounds and counts");
    c_table->add_option("--max", max_n, "last board size to print");
    c_table->add_flag("--csv", csv, "machine-readable output");

    auto* c_search = app.add_subcommand("search", "exhaustive optimal-path search");
    c_search->add_option("n", n, "board size")->required();
    c_search->add_flag("--count", count_all, "count all optimal paths");
    c_search->add_option("--enumerate", enum_dir, "write every optimal path to this directory");
    c_search->add_option("--target", target, "search this exact length only");
    c_search->add_option("--workers", workers, "worker budget (default $HEXPATH_WORKERS or 1)");
    c_search->add_option("--node-limit", node_limit, "abort after this many search nodes");
    c_search->add_option("--split-depth", split_depth, "work-unit prefix depth");

    auto* c_verify = app.add_subcommand("verify", "check a path file for minimal winning");
    c_verify->add_option("file", file, "path file ('-' for stdin)")->required();

    auto* c_waste = app.add_subcommand("waste", "wasted-triangle and boundary accounting");
    c_waste->add_option("file", file, "path file ('-' for stdin)")->required();
    c_waste->add_option("--region", region, "A, B or all");

    auto* c_witness = app.add_subcommand("witness", "emit the stored optimal path");
    c_witness->add_option("n", n, "board size (1..20)")->required();

    auto* c_extend = app.add_subcommand("extend", "apply the n -> n+8 frame construction");
    c_extend->add_option("file", file, "seed path file ('-' for stdin)")->required();

    auto* c_generate = app.add_subcommand("generate", "construct an optimal path recursively");
    c_generate->add_option("n", n, "board size (>= 13)")->required();

    auto* c_render = app.add_subcommand("render", "draw a path file");
    c_render->add_option("file", file, "path file ('-' for stdin)")->required();
    c_render->add_option("--format", format, "ascii or svg");
    c_render->add_flag("--waste", waste_flag, "shade wasted triangles");
    c_render->add_flag("--extension", extension, "draw the edge columns");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_bound->parsed()) {
            auto r = theorem_bound(n);
            std::printf("%lld (%s)\n", static_cast<long long>(r.bound),
                        bound_rule_name(r.rule));
            return 0;
        }
        if (c_length->parsed()) {
            std::printf("%lld\n", static_cast<long long>(optimal_length(n)));
            return 0;
        }
        if (c_table->parsed()) {
            print_table(max_n, csv);
            return 0;
        }
        if (c_search->parsed())
            return cmd_search(n, count_all, enum_dir, target, workers, node_limit, split_depth);
        if (c_verify->parsed()) return cmd_verify(file);
        if (c_waste->parsed()) return cmd_waste(file, region);
        if (c_witness->parsed()) {
            std::fputs(emit_path_file(witness(n)).c_str(), stdout);
            return 0;
        }
        if (c_extend->parsed()) {
            StoneSet seed = parse_path_file(read_input(file));
            try {
                std::fputs(emit_path_file(extend(seed)).c_str(), stdout);
            } catch (const domain_error& e) {
                std::fprintf(stderr, "error: %s\n", e.what());
                return 1;  // unclassifiable seed
            }
            return 0;
        }
        if (c_generate->parsed()) return cmd_generate(n);
        if (c_render->parsed()) return cmd_render(file, format, waste_flag, extension);
    } catch (const input_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const search_limit_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const resource_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const internal_error& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 1;
    }
    return 0;
}

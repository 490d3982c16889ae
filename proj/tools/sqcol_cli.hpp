#pragma once

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sqcol/bounds.hpp"
#include "sqcol/corpus.hpp"
#include "sqcol/discharging.hpp"
#include "sqcol/io.hpp"
#include "sqcol/reductions.hpp"

namespace sqcol::cli {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::ParseError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw Error(Errc::ParseError, "cannot write '" + path + "'");
    f << text;
}

inline std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

// key=value lines carrying the same data as the JSON form.
inline void print_plain(const Json& j, const std::string& prefix, std::ostream& out)
{
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            print_plain(v, prefix.empty() ? k : prefix + "." + k, out);
        return;
    }
    if (j.is_array()) {
        const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
        if (flat) {
            out << prefix << '=';
            for (std::size_t i = 0; i < j.size(); ++i)
                out << (i ? " " : "") << scalar(j[i]);
            out << '\n';
        } else {
            for (std::size_t i = 0; i < j.size(); ++i)
                print_plain(j[i], prefix + "[" + std::to_string(i) + "]", out);
        }
        return;
    }
    out << prefix << '=' << scalar(j) << '\n';
}

inline void emit(const Json& j, bool json, std::ostream& out)
{
    if (json)
        out << j.dump(2) << '\n';
    else
        print_plain(j, "", out);
}

inline Json config_json(const Configuration& c)
{
    return Json{{"kind", to_string(c.kind)}, {"vertices", c.vertices}, {"faces", c.faces}};
}

struct GenOptions {
    std::string family = "random_triangulation";
    int n = 50;
    int rows = 4;
    int cols = 4;
    std::string name = "icosahedron";
    std::uint64_t seed = 1;
    int max_degree = 0;
    int flips = 0;
    double delete_fraction = 0.0;
    int min_delta = 0;

    GeneratorSpec spec() const
    {
        const auto f = family_from_string(family);
        if (!f)
            throw Error(Errc::BadParameters, "unknown family '" + family + "'");
        GeneratorSpec s;
        s.family = *f;
        s.n = n;
        s.rows = rows;
        s.cols = cols;
        s.name = name;
        s.seed = seed;
        s.max_degree = max_degree;
        s.flips = flips;
        s.delete_fraction = delete_fraction;
        s.min_delta = min_delta;
        return s;
    }
};

inline void add_gen_options(CLI::App* cmd, GenOptions& o)
{
    cmd->add_option("--family", o.family, "Generator family")->capture_default_str();
    cmd->add_option("--n", o.n, "Size parameter")->capture_default_str();
    cmd->add_option("--rows", o.rows, "Grid rows")->capture_default_str();
    cmd->add_option("--cols", o.cols, "Grid columns")->capture_default_str();
    cmd->add_option("--name", o.name, "Platonic solid")->capture_default_str();
    cmd->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    cmd->add_option("--max-degree", o.max_degree, "Degree cap (random_triangulation)")->capture_default_str();
    cmd->add_option("--flips", o.flips, "Edge flips (random_triangulation)")->capture_default_str();
    cmd->add_option("--delete-fraction", o.delete_fraction, "Share of spare edges removed")->capture_default_str();
    cmd->add_option("--min-delta", o.min_delta, "Resample until Delta reaches this")->capture_default_str();
}

inline Json summary_json(const PlaneGraph& g, const ColoringResult& r)
{
    const int delta = g.max_degree();
    Json j;
    j["n"] = g.num_vertices();
    j["m"] = g.num_edges();
    j["delta"] = delta;
    j["palette"] = r.trace.palette_size;
    j["colors_used"] = r.coloring.colors_used();
    j["bound"] = 3 * delta + 4;
    j["within_bound"] = r.coloring.colors_used() <= 3 * delta + 4;
    j["fallback"] = r.trace.fallback;
    if (r.trace.fallback)
        j["fallback_reason"] = r.trace.fallback_reason;
    j["steps"] = r.trace.steps().size();
    j["splits"] = r.trace.count(TraceEvent::Type::Split);
    j["base_cases"] = r.trace.count(TraceEvent::Type::Base);
    Json kinds = Json::object();
    const auto blocked = r.trace.max_blocked_per_kind();
    for (const auto& [k, c] : r.trace.steps_per_kind()) {
        const auto it = blocked.find(k);
        kinds[std::string(to_string(k))] = {{"steps", c}, {"max_blocked", it == blocked.end() ? 0 : it->second}};
    }
    j["kinds"] = kinds;
    return j;
}

struct BenchRow {
    std::string name;
    std::string family;
    int n = 0;
    int m = 0;
    int delta = 0;
    std::uint64_t seed = 0;
    int colors_used = 0;
    int bound = 0;
    std::optional<int> exact;
    bool fallback = false;
    double runtime_ms = 0;
};

inline std::string bench_csv(std::vector<BenchRow> rows)
{
    std::stable_sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
        return std::tie(a.family, a.n, a.seed) < std::tie(b.family, b.n, b.seed);
    });
    std::ostringstream out;
    out << "name,family,n,m,delta,seed,colors_used,bound_3d_plus_4,exact_chi2,fallback,runtime_ms\n";
    for (const auto& r : rows) {
        out << r.name << ',' << r.family << ',' << r.n << ',' << r.m << ',' << r.delta << ',' << r.seed << ','
            << r.colors_used << ',' << r.bound << ',';
        if (r.exact)
            out << *r.exact;
        std::ostringstream ms;
        ms.setf(std::ios::fixed);
        ms.precision(3);
        ms << r.runtime_ms;
        out << ',' << (r.fallback ? 1 : 0) << ',' << ms.str() << '\n';
    }
    return out.str();
}

} // namespace detail

/// Runs one command line; returns the process exit code (0 ok, 1 domain
/// error, 2 usage error).
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Distance-2 coloring of plane graphs"};
    app.require_subcommand(1);

    std::string in_path, out_path, coloring_path, bounds_out;
    int palette = 0;
    long timeout_ms = 0;
    bool json = false;
    int exact_cutoff = 0;
    int count = 10;
    std::vector<std::string> bench_inputs;
    detail::GenOptions gen;

    auto common = [&](CLI::App* cmd, bool input) {
        if (input)
            cmd->add_option("--in", in_path, "Graph file")->required();
        cmd->add_flag("--json", json, "JSON output");
    };

    auto* gen_cmd = app.add_subcommand("gen", "Generate a graph");
    detail::add_gen_options(gen_cmd, gen);
    gen_cmd->add_option("--out", out_path, "Output file (default stdout)");

    auto* color_cmd = app.add_subcommand("color", "Color a graph with at most 3*Delta+4 colors");
    common(color_cmd, true);
    color_cmd->add_option("--out", out_path, "Coloring output file");
    color_cmd->add_option("--palette", palette, "Palette size (default 3*Delta+4)");

    auto* verify_cmd = app.add_subcommand("verify", "Check a distance-2 coloring");
    common(verify_cmd, true);
    verify_cmd->add_option("--coloring", coloring_path, "Coloring file")->required();
    verify_cmd->add_option("--palette", palette, "Palette size (default: largest color + 1)");

    auto* detect_cmd = app.add_subcommand("detect", "List configurations present");
    common(detect_cmd, true);

    auto* audit_cmd = app.add_subcommand("audit", "Run the discharging rules");
    common(audit_cmd, true);

    auto* exact_cmd = app.add_subcommand("exact", "Compute chi_2 exactly (small graphs)");
    common(exact_cmd, true);
    exact_cmd->add_option("--timeout-ms", timeout_ms, "Time budget (0: none)");

    auto* bench_cmd = app.add_subcommand("bench", "Color a corpus and emit CSV");
    detail::add_gen_options(bench_cmd, gen);
    bench_cmd->add_option("--count", count, "Number of generated graphs (seeds seed..seed+count-1)")
        ->capture_default_str();
    bench_cmd->add_option("--in", bench_inputs, "Graph files instead of generated ones");
    bench_cmd->add_option("--exact-cutoff", exact_cutoff, "Run the exact oracle up to this many vertices");
    bench_cmd->add_option("--timeout-ms", timeout_ms, "Exact oracle time budget per graph");
    bench_cmd->add_option("--out", out_path, "CSV output (default stdout)");
    bench_cmd->add_option("--bounds-out", bounds_out, "Also write the bounds CSV here");

    auto* bounds_cmd = app.add_subcommand("bounds", "Published bounds for Delta = 3..23 as CSV");
    bounds_cmd->add_option("--out", out_path, "CSV output (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen_cmd) {
            detail::write_text(out_path, write_graph(generate(gen.spec())), out);
            return 0;
        }
        if (*bounds_cmd) {
            detail::write_text(out_path, bounds_csv(), out);
            return 0;
        }
        if (*bench_cmd) {
            if (count < 0)
                throw Error(Errc::BadParameters, "--count must be nonnegative");
            std::vector<detail::BenchRow> rows;
            auto bench_one = [&](const PlaneGraph& g, std::string name, std::string family, std::uint64_t seed) {
                detail::BenchRow row;
                row.name = std::move(name);
                row.family = std::move(family);
                row.seed = seed;
                row.n = g.num_vertices();
                row.m = g.num_edges();
                row.delta = g.max_degree();
                row.bound = 3 * row.delta + 4;
                const auto t0 = std::chrono::steady_clock::now();
                const auto r = color_planar(g);
                row.runtime_ms =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                row.colors_used = r.coloring.colors_used();
                row.fallback = r.trace.fallback;
                if (row.n <= exact_cutoff) {
                    ExactOptions eo;
                    eo.timeout_ms = timeout_ms;
                    eo.upper_bound = row.colors_used;
                    try {
                        row.exact = exact_chi2(g, eo);
                    } catch (const Error& e) {
                        if (e.code() != Errc::Timeout && e.code() != Errc::TooLarge)
                            throw;
                    }
                }
                rows.push_back(std::move(row));
            };
            if (!bench_inputs.empty()) {
                for (const auto& path : bench_inputs)
                    bench_one(read_graph(detail::read_file(path)), path, "file", 0);
            } else {
                for (int i = 0; i < count; ++i) {
                    auto spec = gen.spec();
                    spec.seed = gen.seed + static_cast<std::uint64_t>(i);
                    bench_one(generate(spec), std::string(to_string(spec.family)) + "_" + std::to_string(spec.seed),
                              std::string(to_string(spec.family)), spec.seed);
                }
            }
            detail::write_text(out_path, detail::bench_csv(std::move(rows)), out);
            if (!bounds_out.empty())
                detail::write_text(bounds_out, bounds_csv(), out);
            return 0;
        }

        const std::string text = detail::read_file(in_path);

        if (*exact_cmd) {
            ExactOptions eo;
            eo.timeout_ms = timeout_ms;
            int n = 0, chi = 0;
            if (looks_like_rotation_format(text)) {
                const auto g = read_graph(text);
                n = g.num_vertices();
                chi = exact_chi2(g, eo);
            } else {
                const auto g = read_edge_list(text);
                n = g.num_vertices();
                chi = exact_chi2(g, eo);
            }
            detail::emit(Json{{"n", n}, {"chi2", chi}}, json, out);
            return 0;
        }

        const PlaneGraph g = read_graph(text);

        if (*color_cmd) {
            ColorOptions opts;
            opts.palette_size = palette;
            const auto r = color_planar(g, opts);
            if (!out_path.empty())
                detail::write_text(out_path, write_coloring(r.coloring), out);
            detail::emit(detail::summary_json(g, r), json, out);
            return 0;
        }
        if (*verify_cmd) {
            Coloring c = read_coloring(detail::read_file(coloring_path), g.num_vertices());
            if (palette > 0)
                c.palette_size = palette;
            bool valid = false;
            std::string reason;
            try {
                valid = is_valid(g, c);
                if (!valid)
                    reason = "two vertices within distance 2 share a color, or a color lies outside the palette";
            } catch (const Error& e) {
                reason = e.what();
            }
            Json j{{"valid", valid}, {"colors_used", c.colors_used()}, {"palette", c.palette_size}};
            if (!valid)
                j["reason"] = reason;
            detail::emit(j, json, out);
            return valid ? 0 : 1;
        }
        if (*detect_cmd) {
            const auto found = detect_all(g);
            Json list = Json::array();
            for (const auto& c : found)
                list.push_back(detail::config_json(c));
            detail::emit(Json{{"count", found.size()}, {"configurations", list}}, json, out);
            return 0;
        }
        if (*audit_cmd) {
            const auto rep = audit(g);
            Json j;
            j["initial_total"] = rep.initial_total().sixths_string();
            j["final_total"] = rep.final_total().sixths_string();
            Json per_rule = Json::object();
            for (Rule rule : kAllRules)
                per_rule[std::string(to_string(rule))] = rep.transfers_per_rule[static_cast<int>(rule)];
            j["transfers"] = per_rule;
            Json neg = Json::array();
            for (const auto& e : rep.negative_elements)
                neg.push_back({{"element", e.str()}, {"charge", rep.final_state[e].sixths_string()}});
            j["negative_count"] = rep.negative_elements.size();
            j["negative"] = neg;
            std::vector<std::string> kinds;
            for (const auto& c : rep.configurations)
                if (kinds.empty() || kinds.back() != to_string(c.kind))
                    kinds.emplace_back(to_string(c.kind));
            j["configurations_found"] = rep.configurations.size();
            j["configuration_kinds"] = kinds;
            j["unavoidability_breach"] = rep.unavoidability_breach;
            detail::emit(j, json, out);
            if (rep.unavoidability_breach)
                err << "UNAVOIDABILITY-BREACH: negative charge without any configuration\n";
            return rep.unavoidability_breach ? 1 : 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

} // namespace sqcol::cli

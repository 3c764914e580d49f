#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "frp/backwards.hpp"
#include "frp/bounded.hpp"
#include "frp/frp2.hpp"
#include "frp/gadget.hpp"
#include "frp/gen.hpp"
#include "frp/graph.hpp"
#include "frp/jsonio.hpp"
#include "frp/oracle.hpp"

namespace {

using namespace frp;

struct GenSpec {
    std::int32_t n = 20;
    double p = 0.3;
    Weight wmin = -4, wmax = 10;
    std::uint64_t seed = 1;
};

std::int64_t parse_int(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const std::int64_t v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        fail(Err::Parse, "generator spec: bad " + what + " \"" + text + "\"");
    }
}

// "n=30,p=0.4,w=-3..8,seed=7"; every key optional.
GenSpec parse_gen_spec(const std::string& text) {
    GenSpec spec;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        pos = comma + 1;
        if (item.empty()) continue;
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos) fail(Err::Parse, "generator spec: expected key=value in \"" + item + "\"");
        const std::string key = item.substr(0, eq);
        const std::string val = item.substr(eq + 1);
        if (key == "n") {
            spec.n = static_cast<std::int32_t>(parse_int(val, "n"));
            if (spec.n < 1) fail(Err::Parse, "generator spec: n must be positive");
        } else if (key == "p") {
            try {
                spec.p = std::stod(val);
            } catch (const std::exception&) {
                fail(Err::Parse, "generator spec: bad p \"" + val + "\"");
            }
            if (spec.p < 0.0 || spec.p > 1.0) fail(Err::Parse, "generator spec: p must be in [0, 1]");
        } else if (key == "w") {
            const std::size_t dots = val.find("..");
            if (dots == std::string::npos)
                fail(Err::Parse, "generator spec: w wants \"lo..hi\", got \"" + val + "\"");
            spec.wmin = parse_int(val.substr(0, dots), "w low end");
            spec.wmax = parse_int(val.substr(dots + 2), "w high end");
            if (spec.wmin > spec.wmax) fail(Err::Parse, "generator spec: w range is empty");
        } else if (key == "seed") {
            try {
                spec.seed = std::stoull(val);
            } catch (const std::exception&) {
                fail(Err::Parse, "generator spec: bad seed \"" + val + "\"");
            }
        } else {
            fail(Err::Parse, "generator spec: unknown key \"" + key + "\"");
        }
    }
    return spec;
}

void apply_env_seed(std::uint64_t& seed) {
    if (const char* env = std::getenv("FRP_SEED")) {
        try {
            seed = std::stoull(env);
        } catch (const std::exception&) {
            fail(Err::Parse, "FRP_SEED must be an unsigned integer");
        }
    }
}

Graph load_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Err::Io, "cannot open " + path);
    return load_edge_list(in);
}

Graph make_instance(const std::string& input, const std::string& gen, bool undirected) {
    if (!input.empty() && !gen.empty()) fail(Err::BadParams, "give either --input or --gen, not both");
    if (!input.empty()) return load_input(input);
    if (gen.empty()) fail(Err::BadParams, "provide --input FILE or --gen SPEC");
    GenSpec spec = parse_gen_spec(gen);
    apply_env_seed(spec.seed);
    if (undirected) return gen_undirected(spec.n, spec.p, spec.seed);
    return gen_digraph(spec.n, spec.p, spec.wmin, spec.wmax, spec.seed);
}

void resolve_pair(const Graph& g, std::int32_t& s, std::int32_t& t) {
    if (s < 0) s = 0;
    if (t < 0) t = g.n - 1;
    if (s >= g.n || t >= g.n || g.n == 0) fail(Err::BadParams, "s/t outside the vertex range");
}

void write_output(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) fail(Err::Io, "cannot write " + out);
    f << text;
}

template <typename F>
void parallel_for(std::size_t count, std::int32_t threads, F body) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) body(i);
        });
    for (auto& th : pool) th.join();
}

Weight max_abs_weight(const Graph& g) {
    Weight m = 1;
    for (const Edge& e : g.edges) m = std::max(m, e.w < 0 ? -e.w : e.w);
    return m;
}

std::string edge_str(const Graph& g, EdgeId id) {
    const Edge& e = g.edges[static_cast<std::size_t>(id)];
    std::ostringstream out;
    out << "(" << e.tail << "->" << e.head << " #" << id << ")";
    return out.str();
}

std::string dist_str(Dist d) { return is_inf(d) ? "INF" : std::to_string(d); }

// Same keys, same distances; solver provenance may differ. Returns the first
// mismatch description, empty when the tables agree.
std::string compare_tables(const Graph& g, const TwoFaultTable& got, const TwoFaultTable& want) {
    for (const auto& en : want.entries) {
        const TwoFaultTable::Entry* other = got.find(en.e1, en.e2);
        if (other == nullptr)
            return "missing entry at (" + edge_str(g, en.e1) + ", " + edge_str(g, en.e2) + ")";
        if (other->d != en.d)
            return "mismatch at (" + edge_str(g, en.e1) + ", " + edge_str(g, en.e2) + "): got " +
                   dist_str(other->d) + " want " + dist_str(en.d);
    }
    for (const auto& en : got.entries)
        if (want.find(en.e1, en.e2) == nullptr)
            return "unexpected entry at (" + edge_str(g, en.e1) + ", " + edge_str(g, en.e2) + ")";
    return "";
}

int finish_verify(const std::string& mismatch) {
    if (mismatch.empty()) return 0;
    std::cerr << "verify: " << mismatch << "\n";
    return 1;
}

// --- subcommand states ---------------------------------------------------

struct CommonOpts {
    std::string input, gen, out;
    std::int32_t s = -1, t = -1;
    bool verify = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool pair = true) {
    cmd->add_option("--input", o.input, "edge-list file (\"n m\" header, then \"tail head weight\")");
    cmd->add_option("--gen", o.gen, "generator spec, e.g. n=30,p=0.4,w=-3..8,seed=7");
    cmd->add_option("--out", o.out, "output path (stdout when omitted)");
    if (pair) {
        cmd->add_option("--s", o.s, "source vertex (default 0)");
        cmd->add_option("--t", o.t, "target vertex (default n-1)");
    }
    cmd->add_flag("--verify", o.verify, "cross-check against the oracle");
}

int cmd_2frp(const CommonOpts& o) {
    const Graph g = make_instance(o.input, o.gen, false);
    std::int32_t s = o.s, t = o.t;
    resolve_pair(g, s, t);
    const TwoFaultTable tbl = two_frp(g, s, t);
    int rc = 0;
    if (o.verify) rc = finish_verify(compare_tables(g, tbl, brute_two_fault_table(g, s, t)));
    write_output(o.out, two_fault_table_to_json(tbl, g));
    return rc;
}

int cmd_ffrp(const CommonOpts& o, std::int32_t k) {
    const Graph g = make_instance(o.input, o.gen, false);
    std::int32_t s = o.s, t = o.t;
    resolve_pair(g, s, t);
    const FaultTupleTable tbl = f_frp(g, s, t, k);
    int rc = 0;
    if (o.verify) {
        std::string mismatch;
        for (const auto& en : tbl.entries) {
            const Dist want = brute_dist(g, s, t, en.faults);
            if (want == en.d) continue;
            std::ostringstream msg;
            msg << "mismatch at (";
            for (std::size_t i = 0; i < en.faults.size(); ++i)
                msg << (i ? ", " : "") << edge_str(g, en.faults[i]);
            msg << "): got " << dist_str(en.d) << " want " << dist_str(want);
            mismatch = msg.str();
            break;
        }
        rc = finish_verify(mismatch);
    }
    write_output(o.out, fault_tuple_table_to_json(tbl, g));
    return rc;
}

int cmd_bounded(const CommonOpts& o, Weight M, std::int32_t g_param, bool auto_m) {
    const Graph g = make_instance(o.input, o.gen, false);
    std::int32_t s = o.s, t = o.t;
    resolve_pair(g, s, t);
    if (auto_m) M = max_abs_weight(g);
    const TwoFaultTable tbl = two_frp_bounded(g, s, t, M, g_param);
    int rc = 0;
    if (o.verify) {
        std::string mismatch;
        for (const auto& en : tbl.entries) {
            const Dist want = brute_dist(g, s, t, {en.e1, en.e2});
            if (want == en.d) continue;
            mismatch = "mismatch at (" + edge_str(g, en.e1) + ", " + edge_str(g, en.e2) +
                       "): got " + dist_str(en.d) + " want " + dist_str(want);
            break;
        }
        rc = finish_verify(mismatch);
    }
    write_output(o.out, two_fault_table_to_json(tbl, g));
    return rc;
}

int cmd_ftable(const CommonOpts& o, bool scaled, Weight M, bool auto_m, std::int32_t L, double c,
               std::uint64_t seed) {
    const Graph g = make_instance(o.input, o.gen, false);
    std::int32_t s = o.s, t = o.t;
    resolve_pair(g, s, t);
    const PathSeq pi = shortest_path(g, s, t);
    FTable f(0);
    if (scaled) {
        if (auto_m) M = max_abs_weight(g);
        apply_env_seed(seed);
        ScaledOptions opts;
        opts.c = c;
        f = compute_f_scaled(g, pi, M, L, seed, opts);
    } else {
        f = compute_f_dp(g, pi, apsp_off_path(g, pi));
    }
    int rc = 0;
    if (o.verify) {
        const FTable want = brute_f_table(g, pi);
        std::string mismatch;
        for (std::int32_t j = 0; j < f.h && mismatch.empty(); ++j)
            for (std::int32_t i = 0; i < j; ++i)
                if (f.at(j, i) != want.at(j, i)) {
                    mismatch = "mismatch at (" + std::to_string(j) + ", " + std::to_string(i) +
                               "): got " + dist_str(f.at(j, i)) + " want " + dist_str(want.at(j, i));
                    break;
                }
        rc = finish_verify(mismatch);
    }
    write_output(o.out, f_table_to_json(f));
    return rc;
}

int cmd_gadget(const CommonOpts& o, std::int32_t k, std::int32_t L, std::int32_t bucket,
               const std::string& engine_name) {
    const Graph tri = make_instance(o.input, o.gen, true);
    if (L <= 0) {
        const double exp = static_cast<double>(k) / (k + 1.0);
        L = std::max<std::int32_t>(1, static_cast<std::int32_t>(
                                          std::llround(std::pow(std::max(tri.n, 2), exp))));
    }
    auto [g, lay] = build_gadget(tri, bucket, L, k);
    if (!o.out.empty()) {
        write_output(o.out + ".edges", dump_edge_list(g));
        write_output(o.out + ".layout.json", gadget_layout_to_json(lay));
    }
    const GadgetEngine engine = (engine_name == "brute" || k > 3)
                                    ? gadget_engine_brute()
                                    : gadget_engine_toolkit(k);
    TriangleWitness wit;
    const bool found = triangle_detect_via_queries(tri, k, L, engine, &wit);
    std::ostringstream verdict;
    verdict << "triangle: " << (found ? "true" : "false");
    if (found) verdict << " (bucket " << wit.b << ", query " << wit.u << ")";
    verdict << "\n";
    std::cout << verdict.str();
    if (o.verify && found != has_triangle_brute(tri))
        return finish_verify("reduction verdict disagrees with the brute triangle check");
    return 0;
}

double median3(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    return xs[xs.size() / 2];
}

template <typename F>
double time_ms(F body) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

int cmd_bench(const std::string& algo, const std::vector<std::int32_t>& sizes,
              const std::vector<std::int32_t>& gs, std::uint64_t seed, const std::string& out) {
    apply_env_seed(seed);
    std::ostringstream csv;
    csv << "n,algorithm,wall_ms,queries\n";
    auto emit = [&csv](std::int32_t n, const std::string& name, double ms, std::uint64_t queries) {
        csv << n << ',' << name << ',';
        csv << std::fixed << std::setprecision(3) << ms;
        csv << ',' << queries << "\n";
    };
    for (const std::int32_t n : sizes) {
        if (n < 2) fail(Err::BadParams, "bench sizes must be at least 2");
        const std::uint64_t inst_seed = seed + static_cast<std::uint64_t>(n) * 0x9e3779b97f4a7c15ull;
        if (algo == "2frp") {
            const Graph g = gen_digraph(n, 0.8, -2, 8, inst_seed);
            std::uint64_t queries = 0;
            std::vector<double> runs;
            for (int r = 0; r < 3; ++r)
                runs.push_back(time_ms([&] { queries = two_frp(g, 0, n - 1).entries.size(); }));
            emit(n, "2frp", median3(runs), queries);
        } else if (algo == "bounded") {
            const Graph g = gen_path_plus(n, 2 * n, inst_seed);
            const auto pairs = enumerate_query_pairs(g, 0, n - 1);
            for (const std::int32_t gp : gs) {
                std::vector<double> pre_runs, query_runs;
                std::uint64_t queries = 0;
                for (int r = 0; r < 3; ++r) {
                    std::optional<BoundedDso> dso;
                    pre_runs.push_back(time_ms([&] { dso.emplace(g, 0, n - 1, gp); }));
                    query_runs.push_back(time_ms([&] {
                        for (const auto& [e1, e2] : pairs) dso->query(e1, e2);
                    }));
                    queries = pairs.size();
                }
                emit(n, "frp-bounded-pre:g=" + std::to_string(gp), median3(pre_runs), 0);
                emit(n, "frp-bounded-query:g=" + std::to_string(gp), median3(query_runs), queries);
            }
        } else {
            fail(Err::BadParams, "unknown bench algorithm \"" + algo + "\"");
        }
    }
    write_output(out, csv.str());
    return 0;
}

int cmd_verify(const std::string& gen, const std::string& what, std::int32_t count,
               std::int32_t threads) {
    GenSpec spec = parse_gen_spec(gen);
    apply_env_seed(spec.seed);
    const bool all = what == "all";
    if (!all && what != "2frp" && what != "ftable" && what != "scaled" && what != "bounded" &&
        what != "ffrp")
        fail(Err::BadParams, "unknown verify target \"" + what + "\"");
    std::vector<std::string> results(static_cast<std::size_t>(count));
    parallel_for(static_cast<std::size_t>(count), threads, [&](std::size_t idx) {
        std::string& r = results[idx];
        try {
            const std::uint64_t seed = spec.seed + idx * 0x9e3779b97f4a7c15ull;
            Graph g = gen_digraph(spec.n, spec.p, spec.wmin, spec.wmax, seed);
            const std::int32_t s = 0, t = g.n - 1;
            for (int att = 0; is_inf(sssp(g, s).dist[static_cast<std::size_t>(t)]); ++att) {
                if (att >= 200) {
                    r = "";  // no reachable draw; nothing to check for this slot
                    return;
                }
                g = gen_digraph(spec.n, spec.p, spec.wmin, spec.wmax,
                                seed + (att + 1) * 0xd1342543de82ef95ull);
            }
            const PathSeq pi = shortest_path(g, s, t);
            if (all || what == "2frp") {
                const std::string m = compare_tables(g, two_frp(g, s, t), brute_two_fault_table(g, s, t));
                if (!m.empty()) {
                    r = "2frp seed=" + std::to_string(seed) + ": " + m;
                    return;
                }
            }
            const DistMatrix off = apsp_off_path(g, pi);
            const FTable dp = compute_f_dp(g, pi, off);
            if (all || what == "ftable") {
                const FTable want = brute_f_table(g, pi);
                for (std::int32_t j = 0; j < dp.h; ++j)
                    for (std::int32_t i = 0; i < j; ++i)
                        if (dp.at(j, i) != want.at(j, i)) {
                            r = "ftable seed=" + std::to_string(seed) + ": mismatch at (" +
                                std::to_string(j) + ", " + std::to_string(i) + ")";
                            return;
                        }
            }
            if (all || what == "scaled") {
                const Weight M = max_abs_weight(g);
                const FTable sc = compute_f_scaled(g, pi, M, 0, seed);
                for (std::int32_t j = 0; j < dp.h; ++j)
                    for (std::int32_t i = 0; i < j; ++i)
                        if (sc.at(j, i) != dp.at(j, i)) {
                            r = "scaled seed=" + std::to_string(seed) + ": mismatch at (" +
                                std::to_string(j) + ", " + std::to_string(i) + ")";
                            return;
                        }
            }
            if (all || what == "bounded") {
                const TwoFaultTable tbl = two_frp_bounded(g, s, t, max_abs_weight(g), 0);
                for (const auto& en : tbl.entries) {
                    const Dist want = brute_dist(g, s, t, {en.e1, en.e2});
                    if (want != en.d) {
                        r = "bounded seed=" + std::to_string(seed) + ": mismatch at (" +
                            edge_str(g, en.e1) + ", " + edge_str(g, en.e2) + ")";
                        return;
                    }
                }
            }
            if (all || what == "ffrp") {
                const FaultTupleTable tbl = f_frp(g, s, t, 3);
                for (const auto& en : tbl.entries) {
                    if (brute_dist(g, s, t, en.faults) != en.d) {
                        r = "ffrp seed=" + std::to_string(seed) + ": mismatch on a fault triple";
                        return;
                    }
                }
            }
        } catch (const std::exception& ex) {
            r = std::string("exception: ") + ex.what();
        }
    });
    for (const std::string& r : results)
        if (!r.empty()) return finish_verify(r);
    std::cout << "verified " << count << " instances\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fault-tolerant shortest path toolkit"};
    app.require_subcommand(1);
    std::int32_t threads = 1;
    app.add_option("--threads", threads, "worker pool size for sweeps (default 1)");

    CommonOpts o2frp;
    auto* c2frp = app.add_subcommand("2frp", "two-fault replacement path table");
    add_common(c2frp, o2frp);

    CommonOpts offrp;
    std::int32_t ffrp_k = 3;
    auto* cffrp = app.add_subcommand("ffrp", "k-fault replacement path table");
    add_common(cffrp, offrp);
    cffrp->add_option("--k", ffrp_k, "fault budget (default 3)");

    CommonOpts obounded;
    Weight bounded_m = 0;
    std::int32_t bounded_g = 0;
    auto* cbounded = app.add_subcommand("frp-bounded", "two-fault table via the interval structure");
    add_common(cbounded, obounded);
    cbounded->add_option("--M", bounded_m, "weight bound (default: max |w| in the input)");
    cbounded->add_option("--g", bounded_g, "interval size (default: n^(2/3))");

    CommonOpts oftable;
    bool ftable_scaled = false;
    Weight ftable_m = 0;
    std::int32_t ftable_l = 0;
    double ftable_c = 3.0;
    std::uint64_t ftable_seed = 1;
    auto* cftable = app.add_subcommand("f-table", "backward-jump table over the canonical path");
    add_common(cftable, oftable);
    cftable->add_flag("--scaled", ftable_scaled, "use the scaled hop-doubling computation");
    cftable->add_option("--M", ftable_m, "weight bound for --scaled (default: max |w|)");
    cftable->add_option("--L", ftable_l, "crossover hop bound (default: (n/M)^(1/3))");
    cftable->add_option("--c", ftable_c, "sampling density constant (default 3)");
    cftable->add_option("--seed", ftable_seed, "sampling seed");

    CommonOpts ogadget;
    std::int32_t gadget_k = 2, gadget_l = 0, gadget_b = 0;
    std::string gadget_engine = "toolkit";
    auto* cgadget = app.add_subcommand("gadget", "triangle-detection reduction instance");
    add_common(cgadget, ogadget, false);
    cgadget->add_option("--k", gadget_k, "fault budget (default 2)");
    cgadget->add_option("--L", gadget_l, "bucket size (default: n^(k/(k+1)))");
    cgadget->add_option("--b", gadget_b, "bucket to export (default 0)");
    cgadget->add_option("--engine", gadget_engine, "query engine: toolkit | brute");

    std::string bench_algo = "2frp", bench_out;
    std::vector<std::int32_t> bench_sizes, bench_gs = {2, 8, 32};
    std::uint64_t bench_seed = 1;
    auto* cbench = app.add_subcommand("bench", "timing sweeps, CSV output");
    cbench->add_option("--algo", bench_algo, "2frp | bounded");
    cbench->add_option("--sizes", bench_sizes, "instance sizes")->delimiter(',');
    cbench->add_option("--gs", bench_gs, "interval sizes for bounded")->delimiter(',');
    cbench->add_option("--seed", bench_seed, "instance seed");
    cbench->add_option("--out", bench_out, "output path (stdout when omitted)");

    std::string verify_gen = "n=20,p=0.3,w=-4..10,seed=1", verify_what = "all";
    std::int32_t verify_count = 10;
    auto* cverify = app.add_subcommand("verify", "oracle sweeps over seeded instances");
    cverify->add_option("--gen", verify_gen, "generator spec for the sweep");
    cverify->add_option("--what", verify_what, "all | 2frp | ftable | scaled | bounded | ffrp");
    cverify->add_option("--count", verify_count, "instances to check (default 10)");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (c2frp->parsed()) return cmd_2frp(o2frp);
        if (cffrp->parsed()) return cmd_ffrp(offrp, ffrp_k);
        if (cbounded->parsed())
            return cmd_bounded(obounded, bounded_m, bounded_g, !cbounded->count("--M"));
        if (cftable->parsed())
            return cmd_ftable(oftable, ftable_scaled, ftable_m, !cftable->count("--M"), ftable_l,
                              ftable_c, ftable_seed);
        if (cgadget->parsed()) return cmd_gadget(ogadget, gadget_k, gadget_l, gadget_b, gadget_engine);
        if (cbench->parsed()) return cmd_bench(bench_algo, bench_sizes, bench_gs, bench_seed, bench_out);
        if (cverify->parsed()) return cmd_verify(verify_gen, verify_what, verify_count, threads);
    } catch (const FrpError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == Err::VerifyMismatch ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

#include "frp/backwards.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "frp/gen.hpp"
#include "frp/rmq.hpp"

namespace frp {

DistMatrix apsp(const GraphView& v) {
    DistMatrix m(static_cast<std::size_t>(v.n()));
    for (VertexId u = 0; u < v.n(); ++u) m[static_cast<std::size_t>(u)] = sssp(v, u).dist;
    return m;
}

DistMatrix apsp_off_path(const Graph& g, const PathSeq& pi) {
    return apsp(GraphView(g, pi.edge_ids));
}

namespace {

std::size_t cell(std::int32_t h, std::int32_t j, std::int32_t i) {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(h) + static_cast<std::size_t>(i);
}

std::int32_t grown_bound(std::int32_t ell) { return (3 * ell + 1) / 2; }  // ceil(3 ell / 2)

FTable diamond_core(const FTable& a, const FTable& b, std::int32_t ell, const PathSeq& pi,
                    std::vector<ProvCell>* prov) {
    const std::int32_t h = pi.h();
    if (a.h != h || b.h != h) fail(Err::DimensionMismatch, "diamond operand size");
    if (ell < 0) fail(Err::BadParams, "negative hop parameter");
    FTable out(h);
    if (prov) prov->assign(static_cast<std::size_t>(h) * h, ProvCell{});

    for (std::int32_t j = 0; j < h; ++j) {
        for (std::int32_t i = j; i < h; ++i) {
            out.at(j, i) = pi.along(j, i);
            if (prov) (*prov)[cell(h, j, i)].kind = FProv::OnPath;
        }
        for (std::int32_t i = 0; i < j; ++i) {
            Dist best = a.at(j, i);
            FProv k = FProv::FromA;
            if (b.at(j, i) < best) {
                best = b.at(j, i);
                k = FProv::FromB;
            }
            out.at(j, i) = best;
            if (prov && !is_inf(best)) (*prov)[cell(h, j, i)].kind = k;
        }
        // expanded middle pairs (k, kp): B covers p_j..p_kp's far side via
        // B(j, k), the run walks k -> kp, A finishes with A(kp, i)
        for (std::int32_t k = 0; k + 1 < j; ++k) {
            const Dist bjk = b.at(j, k);
            if (is_inf(bjk)) continue;
            const std::int32_t top = std::min<std::int32_t>(j - 1, k + ell - 1);
            for (std::int32_t kp = k + 1; kp <= top; ++kp) {
                const Dist lead = bjk + pi.along(k, kp);
                for (std::int32_t i = 0; i < k; ++i) {
                    const Dist tail = a.at(kp, i);
                    if (is_inf(tail)) continue;
                    const Dist cand = lead + tail;
                    if (cand < out.at(j, i)) {
                        out.at(j, i) = cand;
                        if (prov) {
                            auto& p = (*prov)[cell(h, j, i)];
                            p = ProvCell{};
                            p.kind = FProv::Mid;
                            p.a = k;
                            p.b = kp;
                        }
                    }
                }
            }
        }
    }
    return out;
}

// Clamp to the stated value range and restore INF markers at j <= i.
void finish_round(HopBoundedF& t, Weight M) {
    const std::int32_t h = t.table.h;
    const Dist lim = static_cast<Dist>(t.ell) * static_cast<Dist>(M);
    for (std::int32_t j = 0; j < h; ++j) {
        for (std::int32_t i = 0; i < h; ++i) {
            Dist& v = t.table.at(j, i);
            const bool keep = j > i && !is_inf(v) && v <= lim && v >= -lim;
            if (!keep) {
                v = kInf;
                if (!t.prov.empty()) t.prov[cell(h, j, i)] = ProvCell{};
            }
        }
    }
}

std::int32_t push_trace(FScaledTrace* trace, HopBoundedF& t) {
    if (!trace) return -1;
    t.trace_id = static_cast<std::int32_t>(trace->tables.size());
    trace->tables.push_back(t);
    return t.trace_id;
}

}  // namespace

FTable compute_f_dp(const Graph& g, const PathSeq& pi, const DistMatrix& apsp_off) {
    if (apsp_off.size() != static_cast<std::size_t>(g.n))
        fail(Err::DimensionMismatch, "off-path matrix row count");
    const std::int32_t h = pi.h();
    FTable f(h, true);
    for (std::int32_t j = 0; j < h; ++j) {
        const auto& offj = apsp_off[static_cast<std::size_t>(pi.verts[j])];
        for (std::int32_t i = j - 1; i >= 0; --i) {
            const VertexId pv = pi.verts[static_cast<std::size_t>(i)];
            Dist best = offj[static_cast<std::size_t>(pv)];
            std::int32_t wa = -1, wb = -1;
            // run = min over b in (a, j) of d(s, p_b) + d_off(p_b, p_i)
            Dist run = kInf;
            std::int32_t argb = -1;
            for (std::int32_t a = j - 1; a >= i + 1; --a) {
                if (a <= j - 2 && !is_inf(run)) {
                    const Dist fja = f.at(j, a);
                    if (!is_inf(fja)) {
                        const Dist cand = fja - pi.prefix[static_cast<std::size_t>(a)] + run;
                        if (cand < best) {
                            best = cand;
                            wa = a;
                            wb = argb;
                        }
                    }
                }
                const Dist t =
                    dadd(pi.prefix[static_cast<std::size_t>(a)],
                         apsp_off[static_cast<std::size_t>(pi.verts[static_cast<std::size_t>(a)])]
                                 [static_cast<std::size_t>(pv)]);
                if (t < run) {
                    run = t;
                    argb = a;
                }
            }
            f.at(j, i) = best;
            f.wa[cell(h, j, i)] = wa;
            f.wb[cell(h, j, i)] = wb;
        }
    }
    return f;
}

FTable diamond(const FTable& a, const FTable& b, std::int32_t ell, const PathSeq& pi) {
    return diamond_core(a, b, ell, pi, nullptr);
}

FTable truncate_off_table(const DistMatrix& apsp_off, const PathSeq& pi, Dist bound) {
    const std::int32_t h = pi.h();
    FTable t(h);
    for (std::int32_t j = 0; j < h; ++j) {
        const auto& row = apsp_off[static_cast<std::size_t>(pi.verts[static_cast<std::size_t>(j)])];
        for (std::int32_t i = 0; i < j; ++i) {
            const Dist d = row[static_cast<std::size_t>(pi.verts[static_cast<std::size_t>(i)])];
            if (!is_inf(d) && d <= bound && d >= -bound) t.at(j, i) = d;
        }
    }
    return t;
}

HopBoundedF base_hop_table(const Graph& g, const PathSeq& pi, Weight M, FScaledTrace* trace) {
    const std::int32_t h = pi.h();
    HopBoundedF out;
    out.ell = 2;
    out.table = FTable(h);
    if (trace) out.prov.assign(static_cast<std::size_t>(h) * h, ProvCell{});
    for (EdgeId e = 0; e < g.m(); ++e) {
        if (pi.on_edge[static_cast<std::size_t>(e)]) continue;
        const Edge& ed = g.edges[static_cast<std::size_t>(e)];
        const std::int32_t j = pi.pos[static_cast<std::size_t>(ed.tail)];
        const std::int32_t i = pi.pos[static_cast<std::size_t>(ed.head)];
        if (j < 0 || i < 0 || j <= i) continue;
        if (ed.w < out.table.at(j, i)) {
            out.table.at(j, i) = ed.w;
            if (trace) {
                auto& p = out.prov[cell(h, j, i)];
                p = ProvCell{};
                p.kind = FProv::Direct;
                p.x = e;
            }
        }
    }
    finish_round(out, M);
    push_trace(trace, out);
    return out;
}

HopBoundedF hop_short_round(const HopBoundedF& fl, const FTable& d_off_trunc, const PathSeq& pi,
                            Weight M, FScaledTrace* trace) {
    const std::int32_t h = pi.h();
    if (fl.table.h != h || d_off_trunc.h != h) fail(Err::DimensionMismatch, "hop-short operand size");
    const std::int32_t lift = grown_bound(fl.ell);

    std::int32_t jumpId = -1;
    if (trace) {
        if (fl.trace_id < 0) fail(Err::BadParams, "traced round requires a registered input table");
        HopBoundedF jump;
        jump.ell = lift;
        jump.table = d_off_trunc;
        jump.prov.assign(static_cast<std::size_t>(h) * h, ProvCell{});
        for (std::int32_t j = 0; j < h; ++j)
            for (std::int32_t i = 0; i < j; ++i)
                if (!is_inf(d_off_trunc.at(j, i))) jump.prov[cell(h, j, i)].kind = FProv::OffDirect;
        jumpId = push_trace(trace, jump);
    }

    std::vector<ProvCell> prov1, prov2;
    FTable first = diamond_core(fl.table, d_off_trunc, lift, pi, trace ? &prov1 : nullptr);
    std::int32_t firstId = -1;
    if (trace) {
        HopBoundedF reg;
        reg.ell = lift;
        reg.table = first;
        reg.prov = std::move(prov1);
        reg.srcA = fl.trace_id;
        reg.srcB = jumpId;
        firstId = push_trace(trace, reg);
    }

    HopBoundedF out;
    out.ell = lift;
    out.table = diamond_core(first, fl.table, lift, pi, trace ? &prov2 : nullptr);
    out.prov = std::move(prov2);
    out.srcA = firstId;
    out.srcB = fl.trace_id;
    finish_round(out, M);
    push_trace(trace, out);
    return out;
}

HopBoundedF hop_long_round(const Graph& g, const PathSeq& pi, const HopBoundedF& fl,
                           const DistMatrix& d_off, Weight M, std::uint64_t sample_seed, double c,
                           FScaledTrace* trace) {
    const std::int32_t h = pi.h();
    const std::int32_t n = g.n;
    if (fl.table.h != h) fail(Err::DimensionMismatch, "hop-long input size");
    if (d_off.size() != static_cast<std::size_t>(n)) fail(Err::DimensionMismatch, "off-path matrix row count");
    if (trace && fl.trace_id < 0) fail(Err::BadParams, "traced round requires a registered input table");
    const std::int32_t lift = grown_bound(fl.ell);

    // Sample without replacement; size c * n * ln(n) / ell, capped at n.
    std::int32_t want = n;
    if (fl.ell >= 1 && n >= 1) {
        const double raw = std::ceil(c * n * std::log(static_cast<double>(std::max(n, 2))) / fl.ell);
        if (raw < static_cast<double>(n)) want = std::max<std::int32_t>(1, static_cast<std::int32_t>(raw));
    }
    std::vector<VertexId> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    Rng rng(sample_seed);
    for (std::int32_t k = 0; k + 1 < n; ++k) {
        const std::int32_t other = k + static_cast<std::int32_t>(rng.uniform(0, n - 1 - k));
        std::swap(pool[static_cast<std::size_t>(k)], pool[static_cast<std::size_t>(other)]);
    }
    pool.resize(static_cast<std::size_t>(std::min(want, n)));
    std::sort(pool.begin(), pool.end());

    HopBoundedF out;
    out.ell = lift;
    out.table = fl.table;  // carried-over candidates stay eligible
    out.srcA = fl.trace_id;
    const bool traced = trace != nullptr;
    if (traced) {
        out.prov.assign(static_cast<std::size_t>(h) * h, ProvCell{});
        for (std::int32_t j = 0; j < h; ++j)
            for (std::int32_t i = 0; i < j; ++i)
                if (!is_inf(out.table.at(j, i))) out.prov[cell(h, j, i)].kind = FProv::FromA;
    }

    // Hits on a path run through sample x: the leg toward p_j contributes
    // fl(j, a) - d(s, p_a), the leg toward p_i contributes d(s, p_b) + fl(b, i);
    // both families are sample-independent, so index them once.
    std::vector<Rmq1D> rowR;
    rowR.reserve(static_cast<std::size_t>(h));
    for (std::int32_t j = 0; j < h; ++j) {
        std::vector<Dist> vals(static_cast<std::size_t>(h), kInf);
        for (std::int32_t a = 0; a < j; ++a) {
            const Dist v = fl.table.at(j, a);
            if (!is_inf(v)) vals[static_cast<std::size_t>(a)] = v - pi.prefix[static_cast<std::size_t>(a)];
        }
        rowR.emplace_back(std::move(vals));
    }
    std::vector<Rmq1D> colC;
    colC.reserve(static_cast<std::size_t>(h));
    for (std::int32_t i = 0; i < h; ++i) {
        std::vector<Dist> vals(static_cast<std::size_t>(h), kInf);
        for (std::int32_t b = i + 1; b < h; ++b) {
            const Dist v = fl.table.at(b, i);
            if (!is_inf(v)) vals[static_cast<std::size_t>(b)] = pi.prefix[static_cast<std::size_t>(b)] + v;
        }
        colC.emplace_back(std::move(vals));
    }

    for (VertexId x : pool) {
        const std::int32_t q = pi.pos[static_cast<std::size_t>(x)];
        if (q < 1 || q > h - 2) continue;
        for (std::int32_t j = q + 1; j < h; ++j) {
            for (std::int32_t i = 0; i < q; ++i) {
                const auto [av, aarg] = rowR[static_cast<std::size_t>(j)].query(i + 1, q);
                if (is_inf(av)) continue;
                const auto [bv, barg] = colC[static_cast<std::size_t>(i)].query(q, j - 1);
                if (is_inf(bv)) continue;
                const Dist cand = av + bv;
                if (cand < out.table.at(j, i)) {
                    out.table.at(j, i) = cand;
                    if (traced) {
                        auto& p = out.prov[cell(h, j, i)];
                        p = ProvCell{};
                        p.kind = FProv::LongOn;
                        p.x = x;
                        p.a = aarg;
                        p.b = barg;
                    }
                }
            }
        }
    }

    // Hits on an off-path detour through sample x: best leg p_j -> x and best
    // leg x -> p_i, each either a plain detour or one fl segment plus a run
    // plus a detour. Computed per x with running minima; O(h^2) each.
    const std::size_t cells = static_cast<std::size_t>(h) * h;
    std::vector<Dist> aBest(cells), bBest(cells);
    std::vector<std::int32_t> aLegA(cells), aLegB(cells), bLegA(cells), bLegB(cells);
    for (VertexId x : pool) {
        for (std::int32_t j = 1; j < h; ++j) {
            const Dist direct = d_off[static_cast<std::size_t>(pi.verts[static_cast<std::size_t>(j)])]
                                     [static_cast<std::size_t>(x)];
            aBest[cell(h, j, j - 1)] = direct;
            aLegA[cell(h, j, j - 1)] = -1;
            aLegB[cell(h, j, j - 1)] = -1;
            Dist runW = kInf;
            std::int32_t argW = -1;
            Dist runT = kInf;
            std::int32_t argTa = -1, argTb = -1;
            for (std::int32_t k = j - 1; k >= 1; --k) {
                if (k <= j - 2 && !is_inf(runW)) {
                    const Dist fjk = fl.table.at(j, k);
                    if (!is_inf(fjk)) {
                        const Dist t = fjk - pi.prefix[static_cast<std::size_t>(k)] + runW;
                        if (t < runT) {
                            runT = t;
                            argTa = k;
                            argTb = argW;
                        }
                    }
                }
                Dist best = direct;
                std::int32_t wa = -1, wb = -1;
                if (runT < best) {
                    best = runT;
                    wa = argTa;
                    wb = argTb;
                }
                aBest[cell(h, j, k - 1)] = best;
                aLegA[cell(h, j, k - 1)] = wa;
                aLegB[cell(h, j, k - 1)] = wb;
                const Dist add =
                    dadd(pi.prefix[static_cast<std::size_t>(k)],
                         d_off[static_cast<std::size_t>(pi.verts[static_cast<std::size_t>(k)])]
                              [static_cast<std::size_t>(x)]);
                if (add < runW) {
                    runW = add;
                    argW = k;
                }
            }
        }
        for (std::int32_t i = 0; i + 1 < h; ++i) {
            const Dist direct = d_off[static_cast<std::size_t>(x)]
                                     [static_cast<std::size_t>(pi.verts[static_cast<std::size_t>(i)])];
            bBest[cell(h, i + 1, i)] = direct;
            bLegA[cell(h, i + 1, i)] = -1;
            bLegB[cell(h, i + 1, i)] = -1;
            Dist runU = kInf;
            std::int32_t argU = -1;
            Dist runV = kInf;
            std::int32_t argVa = -1, argVb = -1;
            for (std::int32_t k = i + 1; k <= h - 2; ++k) {
                if (k >= i + 2 && !is_inf(runU)) {
                    const Dist fki = fl.table.at(k, i);
                    if (!is_inf(fki)) {
                        const Dist v = pi.prefix[static_cast<std::size_t>(k)] + fki + runU;
                        if (v < runV) {
                            runV = v;
                            argVa = argU;
                            argVb = k;
                        }
                    }
                }
                Dist best = direct;
                std::int32_t wa = -1, wb = -1;
                if (runV < best) {
                    best = runV;
                    wa = argVa;
                    wb = argVb;
                }
                bBest[cell(h, k + 1, i)] = best;
                bLegA[cell(h, k + 1, i)] = wa;
                bLegB[cell(h, k + 1, i)] = wb;
                const Dist add =
                    dadd(d_off[static_cast<std::size_t>(x)]
                              [static_cast<std::size_t>(pi.verts[static_cast<std::size_t>(k)])],
                         -pi.prefix[static_cast<std::size_t>(k)]);
                if (add < runU) {
                    runU = add;
                    argU = k;
                }
            }
        }
        for (std::int32_t j = 1; j < h; ++j) {
            for (std::int32_t i = 0; i < j; ++i) {
                const Dist av = aBest[cell(h, j, i)];
                const Dist bv = bBest[cell(h, j, i)];
                if (is_inf(av) || is_inf(bv)) continue;
                const Dist cand = av + bv;
                if (cand < out.table.at(j, i)) {
                    out.table.at(j, i) = cand;
                    if (traced) {
                        auto& p = out.prov[cell(h, j, i)];
                        p.kind = FProv::LongOff;
                        p.x = x;
                        p.a = aLegA[cell(h, j, i)];
                        p.b = aLegB[cell(h, j, i)];
                        p.a2 = bLegA[cell(h, j, i)];
                        p.b2 = bLegB[cell(h, j, i)];
                    }
                }
            }
        }
    }

    finish_round(out, M);
    push_trace(trace, out);
    return out;
}

std::int32_t default_crossover(std::int32_t n, Weight M) {
    const double m = M < 1 ? 1.0 : static_cast<double>(M);
    const double v = std::cbrt(static_cast<double>(n < 0 ? 0 : n) / m);
    return std::max<std::int32_t>(1, static_cast<std::int32_t>(v));
}

FTable compute_f_scaled(const Graph& g, const PathSeq& pi, Weight M, std::int32_t L,
                        std::uint64_t seed, const ScaledOptions& opts) {
    if (M < 1) fail(Err::BadParams, "weight bound must be positive");
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        if (g.edges[i].w > M || g.edges[i].w < -M)
            fail(Err::WeightOutOfRange,
                 "edge " + std::to_string(i) + " exceeds the stated weight bound");
    }
    if (L <= 0) L = default_crossover(g.n, M);
    const std::int32_t h = pi.h();
    const DistMatrix off = apsp_off_path(g, pi);

    FTable dp;
    if (opts.verify) dp = compute_f_dp(g, pi, off);

    std::string miss;
    for (std::int32_t attempt = 0; attempt <= opts.retries; ++attempt) {
        if (opts.trace) opts.trace->tables.clear();
        const std::uint64_t base = seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(attempt);

        HopBoundedF cur = base_hop_table(g, pi, M, opts.trace);
        std::uint64_t round = 0;
        while (h >= 2 && cur.ell < g.n) {
            if (cur.ell <= L) {
                const Dist bound = static_cast<Dist>(grown_bound(cur.ell)) * static_cast<Dist>(M);
                cur = hop_short_round(cur, truncate_off_table(off, pi, bound), pi, M, opts.trace);
            } else {
                ++round;
                cur = hop_long_round(g, pi, cur, off, M, base + 0xd1342543de82ef95ull * round,
                                     opts.c, opts.trace);
            }
        }

        FTable res = std::move(cur.table);
        if (!opts.verify) return res;
        std::int32_t bj = -1, bi = -1;
        for (std::int32_t j = 0; j < h && bj < 0; ++j) {
            for (std::int32_t i = 0; i < j; ++i) {
                if (res.at(j, i) != dp.at(j, i)) {
                    bj = j;
                    bi = i;
                    break;
                }
            }
        }
        if (bj < 0) return res;
        miss = "(" + std::to_string(bj) + ", " + std::to_string(bi) + ")";
    }
    fail(Err::VerifyMismatch, "scaled backwards table still disagrees with the recurrence at " + miss);
}

namespace {

struct ReplayCtx {
    const Graph* g;
    const PathSeq* pi;
    const FScaledTrace* trace;
    GraphView off;
};

Dist walk_weight(const Graph& g, const std::vector<EdgeId>& walk) {
    Dist s = 0;
    for (EdgeId e : walk) s += g.edges[static_cast<std::size_t>(e)].w;
    return s;
}

std::vector<EdgeId> off_route(const ReplayCtx& ctx, VertexId u, VertexId v) {
    SsspResult r = sssp(ctx.off, u);
    if (is_inf(r.dist[static_cast<std::size_t>(v)]))
        fail(Err::VerifyMismatch, "replayed detour is unreachable");
    return extract_path(ctx.off, r, u, v).edge_ids;
}

void append_run(const ReplayCtx& ctx, std::vector<EdgeId>& walk, std::int32_t from, std::int32_t to) {
    for (std::int32_t k = from; k < to; ++k) walk.push_back(ctx.pi->edge_ids[static_cast<std::size_t>(k)]);
}

std::vector<EdgeId> replay_cell(const ReplayCtx& ctx, std::int32_t tid, std::int32_t j,
                                std::int32_t i) {
    const auto& tabs = ctx.trace->tables;
    if (tid < 0 || tid >= static_cast<std::int32_t>(tabs.size()))
        fail(Err::BadParams, "trace id out of range");
    const HopBoundedF& t = tabs[static_cast<std::size_t>(tid)];
    const std::int32_t h = t.table.h;
    if (j < 0 || j >= h || i < 0 || i >= h) fail(Err::RangeOutOfBounds, "trace cell");
    const Dist val = t.table.at(j, i);
    if (is_inf(val)) fail(Err::NoFiniteEntry, "INF cell has no witness");
    if (t.prov.empty()) fail(Err::BadParams, "table was not traced");
    const ProvCell& p = t.prov[cell(h, j, i)];
    const PathSeq& pi = *ctx.pi;

    std::vector<EdgeId> walk;
    auto splice = [&walk](std::vector<EdgeId> part) {
        walk.insert(walk.end(), part.begin(), part.end());
    };
    switch (p.kind) {
        case FProv::None:
            fail(Err::VerifyMismatch, "finite cell lacks provenance");
        case FProv::OnPath:
            append_run(ctx, walk, j, i);
            break;
        case FProv::Direct:
            walk.push_back(p.x);
            break;
        case FProv::OffDirect:
            walk = off_route(ctx, pi.verts[static_cast<std::size_t>(j)],
                             pi.verts[static_cast<std::size_t>(i)]);
            break;
        case FProv::FromA:
            walk = replay_cell(ctx, t.srcA, j, i);
            break;
        case FProv::FromB:
            walk = replay_cell(ctx, t.srcB, j, i);
            break;
        case FProv::Mid:
            walk = replay_cell(ctx, t.srcB, j, p.a);
            append_run(ctx, walk, p.a, p.b);
            splice(replay_cell(ctx, t.srcA, p.b, i));
            break;
        case FProv::LongOn:
            walk = replay_cell(ctx, t.srcA, j, p.a);
            append_run(ctx, walk, p.a, p.b);
            splice(replay_cell(ctx, t.srcA, p.b, i));
            break;
        case FProv::LongOff:
            if (p.a < 0) {
                walk = off_route(ctx, pi.verts[static_cast<std::size_t>(j)], p.x);
            } else {
                walk = replay_cell(ctx, t.srcA, j, p.a);
                append_run(ctx, walk, p.a, p.b);
                splice(off_route(ctx, pi.verts[static_cast<std::size_t>(p.b)], p.x));
            }
            if (p.a2 < 0) {
                splice(off_route(ctx, p.x, pi.verts[static_cast<std::size_t>(i)]));
            } else {
                splice(off_route(ctx, p.x, pi.verts[static_cast<std::size_t>(p.a2)]));
                append_run(ctx, walk, p.a2, p.b2);
                splice(replay_cell(ctx, t.srcA, p.b2, i));
            }
            break;
    }
    if (walk_weight(*ctx.g, walk) != val)
        fail(Err::VerifyMismatch, "replayed walk weight differs from the stored value");
    return walk;
}

}  // namespace

std::vector<EdgeId> replay_trace_entry(const Graph& g, const PathSeq& pi, const FScaledTrace& trace,
                                       std::int32_t tid, std::int32_t j, std::int32_t i) {
    ReplayCtx ctx{&g, &pi, &trace, GraphView(g, pi.edge_ids)};
    return replay_cell(ctx, tid, j, i);
}

DecompositionWitness decompose_f_witness(const Graph& g, const PathSeq& pi, std::int32_t j,
                                         std::int32_t i) {
    const std::int32_t h = pi.h();
    if (i < 0 || j >= h || j <= i) fail(Err::BadParams, "witness needs path positions j > i");

    std::vector<EdgeId> maskIds;
    for (std::int32_t k = 0; k < i; ++k) maskIds.push_back(pi.edge_ids[static_cast<std::size_t>(k)]);
    for (std::int32_t k = j; k < h - 1; ++k) maskIds.push_back(pi.edge_ids[static_cast<std::size_t>(k)]);
    GraphView view(g, maskIds);
    TieBreak tb{&pi.pos};
    SsspResult r = sssp(view, pi.verts[static_cast<std::size_t>(j)], &tb);
    const Dist want = r.dist[static_cast<std::size_t>(pi.verts[static_cast<std::size_t>(i)])];
    if (is_inf(want)) fail(Err::NoFiniteEntry, "no backward route for this pair");
    std::vector<EdgeId> walk =
        extract_path(view, r, pi.verts[static_cast<std::size_t>(j)],
                     pi.verts[static_cast<std::size_t>(i)])
            .edge_ids;

    auto verts_of = [&](const std::vector<EdgeId>& w) {
        std::vector<VertexId> vs{pi.verts[static_cast<std::size_t>(j)]};
        for (EdgeId e : w) vs.push_back(g.edges[static_cast<std::size_t>(e)].head);
        return vs;
    };

    // Straighten: cut revisits, and wherever the walk leaves a path vertex and
    // later reaches a strictly later one whose connecting window segment is
    // fully present, make that stretch the path segment itself. Both steps
    // preserve the total weight of an optimal walk.
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<VertexId> vs = verts_of(walk);
        {
            std::map<VertexId, std::size_t> seen;
            bool cut = false;
            for (std::size_t q = 0; q < vs.size() && !cut; ++q) {
                auto it = seen.find(vs[q]);
                if (it != seen.end()) {
                    walk.erase(walk.begin() + static_cast<std::ptrdiff_t>(it->second),
                               walk.begin() + static_cast<std::ptrdiff_t>(q));
                    cut = true;
                } else {
                    seen.emplace(vs[q], q);
                }
            }
            if (cut) {
                changed = true;
                continue;
            }
        }
        for (std::size_t q1 = 0; q1 < vs.size() && !changed; ++q1) {
            const std::int32_t px = pi.pos[static_cast<std::size_t>(vs[q1])];
            if (px < 0) continue;
            for (std::size_t q2 = q1 + 1; q2 < vs.size() && !changed; ++q2) {
                const std::int32_t py = pi.pos[static_cast<std::size_t>(vs[q2])];
                if (py <= px) continue;
                if (px < i || py > j) continue;  // segment not fully in the window
                const std::size_t len = q2 - q1;
                bool same = len == static_cast<std::size_t>(py - px);
                for (std::size_t k = 0; k < len && same; ++k)
                    same = walk[q1 + k] == pi.edge_ids[static_cast<std::size_t>(px) + k];
                if (same) continue;
                std::vector<EdgeId> next(walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(q1));
                for (std::int32_t k = px; k < py; ++k)
                    next.push_back(pi.edge_ids[static_cast<std::size_t>(k)]);
                next.insert(next.end(), walk.begin() + static_cast<std::ptrdiff_t>(q2), walk.end());
                walk = std::move(next);
                changed = true;
            }
        }
    }

    Dist total = 0;
    for (EdgeId e : walk) total += g.edges[static_cast<std::size_t>(e)].w;
    if (total != want) fail(Err::VerifyMismatch, "straightening changed the walk weight");

    DecompositionWitness w;
    w.j = j;
    w.i = i;
    w.length = want;
    w.walk = walk;
    w.bounds.push_back(j);
    const std::vector<VertexId> vs = verts_of(walk);
    std::size_t q = 0;
    while (q < walk.size()) {
        const bool on = pi.on_edge[static_cast<std::size_t>(walk[q])] != 0;
        std::size_t q2 = q;
        while (q2 < walk.size() && (pi.on_edge[static_cast<std::size_t>(walk[q2])] != 0) == on) ++q2;
        if (on) {
            w.bounds.push_back(pi.pos[static_cast<std::size_t>(vs[q])]);
            w.bounds.push_back(pi.pos[static_cast<std::size_t>(vs[q2])]);
        }
        q = q2;
    }
    w.bounds.push_back(i);
    return w;
}

}  // namespace frp

#include "core/walk.hpp"

#include <algorithm>
#include <cassert>

#include "core/bitio.hpp"
#include "core/wilson.hpp"

namespace bccst {

uint64_t default_walk_steps(uint32_t n, uint64_t max_weight, const Rat& target_eps,
                            InitRule init) {
    uint64_t ln = std::max<uint64_t>(ceil_log2_u64(n), 1);
    uint64_t lnu =
        std::max<uint64_t>(ceil_log2_u64(static_cast<uint64_t>(n) * std::max<uint64_t>(max_weight, 1)), 1);
    Rat inv_eps = Rat(1) / target_eps;
    uint64_t leps = std::max<uint64_t>(ceil_log2_u64(to_u64(ceil_rat(inv_eps))), 1);
    uint64_t steps = ln * ln * ln * leps * lnu;
    if (init == InitRule::arbitrary) steps = (steps * (ln + lnu) + ln - 1) / ln;
    return steps;
}

namespace {

struct TupleCodec {
    uint32_t vbits;
    uint32_t value_bits;  // ceil(log2(n*U)) + 64
    uint32_t cnt_bits;    // copy counts and t_e
    uint32_t w_bits;      // edge weights

    static TupleCodec make(const BccSim& sim, const IsotropicGroundSet& iso) {
        TupleCodec c;
        uint64_t max_w = std::max<uint64_t>(sim.graph().max_weight(), 1);
        uint64_t nu = static_cast<uint64_t>(sim.n()) * max_w;
        c.vbits = ceil_log2_u64(sim.n());
        c.value_bits = ceil_log2_u64(nu) + 64;
        c.cnt_bits = ceil_log2_u64(iso.t_bound + 1);
        c.w_bits = ceil_log2_u64(max_w + 1);
        if (2 * c.cnt_bits + c.w_bits > c.value_bits)
            fail(Errc::payload_too_large,
                 "copy counts do not fit the tuple value field; lower gamma or raise --bits");
        if (2 * c.vbits + c.value_bits > sim.bits_per_round())
            fail(Errc::payload_too_large,
                 "one (u,v,value) tuple exceeds the per-round budget; raise --bits");
        return c;
    }

    // gather/tree tuple: [u][v][count][w][t]
    BroadcastMessage edge_tuple(MachineId sender, const Edge& e, uint64_t count,
                                uint64_t t_copies) const {
        BitWriter w;
        w.put(e.u, vbits);
        w.put(e.v, vbits);
        uint32_t pad = value_bits - 2 * cnt_bits - w_bits;
        if (pad) w.put(0, pad);
        w.put(count, cnt_bits);
        w.put(e.w, w_bits);
        w.put(t_copies, cnt_bits);
        return {sender, w.bytes(), w.bit_length()};
    }

    struct DecodedEdge {
        VertexId u, v;
        uint64_t count, w, t;
    };

    DecodedEdge decode_edge(const BroadcastMessage& msg) const {
        BitReader r(msg.payload, msg.bit_len);
        DecodedEdge d;
        d.u = static_cast<VertexId>(r.get(vbits));
        d.v = static_cast<VertexId>(r.get(vbits));
        uint32_t pad = value_bits - 2 * cnt_bits - w_bits;
        if (pad) r.get(pad);
        d.count = r.get(cnt_bits);
        d.w = r.get(w_bits);
        d.t = r.get(cnt_bits);
        return d;
    }
};

EdgeId lookup_edge(const WeightedGraph& g, VertexId u, VertexId v) {
    auto id = g.edge_index(u, v);
    if (!id) fail(Errc::internal, "broadcast references an unknown edge");
    return *id;
}

}  // namespace

std::vector<EdgeId> initial_tree(BccSim& sim, const IsotropicGroundSet& iso, InitRule rule) {
    const WeightedGraph& g = sim.graph();
    g.require_connected();
    const uint32_t n = g.n();
    TupleCodec codec = TupleCodec::make(sim, iso);
    sim.begin_phase("initial-tree");

    // every machine replicates this component bookkeeping from the broadcasts
    std::vector<uint32_t> comp(n);
    for (uint32_t v = 0; v < n; ++v) comp[v] = v;
    auto comp_find = [&](uint32_t x) {
        while (comp[x] != x) {
            comp[x] = comp[comp[x]];
            x = comp[x];
        }
        return x;
    };
    uint32_t components = n;
    std::vector<EdgeId> tree;

    // key order: max weight first under max_probability, then smaller (u,v)
    auto better = [&](const Edge& a, const Edge& b) {
        if (rule == InitRule::max_probability && a.w != b.w) return a.w > b.w;
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    };

    uint32_t phases = 0;
    const uint32_t phase_cap = ceil_log2_u64(n) + 2;
    while (components > 1) {
        if (++phases > phase_cap) fail(Errc::internal, "component merging failed to make progress");
        std::vector<std::vector<BroadcastMessage>> outboxes(n);
        for (VertexId v = 0; v < n; ++v) {
            const Edge* best = nullptr;
            for (EdgeId e : g.incident(v)) {
                const Edge& ed = g.edges()[e];
                if (comp_find(ed.u) == comp_find(ed.v)) continue;
                if (!best || better(ed, *best)) best = &ed;
            }
            if (best)
                outboxes[v].push_back(
                    codec.edge_tuple(v, *best, 0, iso.copies[lookup_edge(g, best->u, best->v)]));
        }
        auto inbox = sim.exchange(std::move(outboxes));

        // component best = best announcement among members
        std::vector<const BroadcastMessage*> winner(n, nullptr);
        std::vector<Edge> winner_edge(n);
        for (const auto& msg : inbox) {
            auto d = codec.decode_edge(msg);
            Edge ed{d.u, d.v, d.w};
            uint32_t c = comp_find(msg.sender);
            if (!winner[c] || better(ed, winner_edge[c])) {
                winner[c] = &msg;
                winner_edge[c] = ed;
            }
        }
        for (uint32_t c = 0; c < n; ++c) {
            if (!winner[c]) continue;
            const Edge& ed = winner_edge[c];
            uint32_t a = comp_find(ed.u), b = comp_find(ed.v);
            if (a == b) continue;  // the other endpoint's pick already merged us
            comp[a] = b;
            --components;
            tree.push_back(lookup_edge(g, ed.u, ed.v));
        }
    }
    std::sort(tree.begin(), tree.end());
    return tree;
}

namespace {

class WalkEngine {
  public:
    WalkEngine(BccSim& sim, const StageArtifacts& art, const WalkParams& params)
        : sim_(sim),
          g_(sim.graph()),
          art_(art),
          params_(params),
          codec_(TupleCodec::make(sim, art.iso)) {
        const uint32_t n = g_.n();
        if (art_.iso.copies.size() != g_.m()) fail(Errc::invalid_arg, "isotropic set mismatch");
        m1_seen_.assign(g_.m(), false);
        t_ = params_.subset_size ? params_.subset_size : 2 * static_cast<uint64_t>(n);
        if (t_ < n) fail(Errc::invalid_arg, "subset size t must be at least n (k+1)");
        if (Int(static_cast<unsigned long>(t_)) > art_.iso.total_copies)
            fail(Errc::invalid_arg,
                 "subset size t exceeds the isotropic ground set; raise gamma");
        owned_.assign(n, {});
        for (EdgeId e = 0; e < g_.m(); ++e) owned_[art_.assoc.owner[e]].push_back(e);

        // p = min(1, 2t / |U|)
        Rat p = Rat(Int(static_cast<unsigned long>(2 * t_))) / Rat(art_.iso.total_copies);
        thin_p_ = p < 1 ? p : Rat(1);
        thin_coin_ = BernoulliRat(thin_p_);

        // "isotropic-sync": one integer per machine announces its owned copy
        // total, so every machine knows |U| before the walk starts
        sim_.begin_phase("isotropic-sync");
        std::vector<std::vector<BroadcastMessage>> outboxes(n);
        for (VertexId v = 0; v < n; ++v) {
            uint64_t total = 0;
            for (EdgeId e : owned_[v]) total += art_.iso.copies[e];
            BitWriter w;
            w.put(total, 64);
            outboxes[v].push_back({v, w.bytes(), w.bit_length()});
        }
        auto inbox = sim_.exchange(std::move(outboxes));
        Int u_total = 0;
        for (const auto& msg : inbox) {
            BitReader r(msg.payload, msg.bit_len);
            u_total += static_cast<unsigned long>(r.get(64));
        }
        if (u_total != art_.iso.total_copies)
            fail(Errc::internal, "announced ground set size mismatch");
    }

    WalkResult run(std::vector<EdgeId> s0) {
        WalkResult res;
        res.initial_tree = s0;
        if (!is_spanning_tree(g_, s0)) fail(Errc::invalid_arg, "walk must start from a spanning tree");
        sim_.begin_phase("walk");
        std::vector<EdgeId> cur = std::move(s0);
        for (uint64_t i = 0; i < params_.steps; ++i) {
            uint64_t rounds_before = sim_.round_index();
            IterationStat st = iterate(cur);
            st.rounds = sim_.round_index() - rounds_before;
            ++res.iterations;
            res.max_zv = std::max(res.max_zv, st.max_zv);
            res.total_resamples += st.resamples;
            if (st.resamples) ++res.resampled_iterations;
            if (params_.collect_iteration_stats) res.per_iteration.push_back(st);
            if (params_.trace)
                res.trace_lines.push_back("iter=" + std::to_string(i) + " |R|=" +
                                          std::to_string(st.gathered_total) + " resamples=" +
                                          std::to_string(st.resamples) + " rounds_this_iter=" +
                                          std::to_string(st.rounds));
        }
        res.tree = std::move(cur);
        return res;
    }

  private:
    // one full down-up iteration; `cur` is replaced by S_{i+1}
    IterationStat iterate(std::vector<EdgeId>& cur) {
        IterationStat st;
        const uint32_t n = g_.n();
        std::vector<uint64_t> z(g_.m(), 0);
        std::vector<EdgeId> nonzero;
        uint64_t r_total = 0;

        while (true) {
            // thin: every machine over its owned copies (Binomial(t_e, p))
            std::fill(z.begin(), z.end(), 0);
            nonzero.clear();
            r_total = 0;
            uint64_t max_zv = 0;
            std::vector<std::vector<BroadcastMessage>> outboxes(n);
            for (VertexId v = 0; v < n; ++v) {
                uint64_t zv = 0;
                for (EdgeId e : owned_[v]) {
                    uint64_t c = thin_coin_.always_true()
                                     ? art_.iso.copies[e]
                                     : binomial_count(sim_.rng(v), art_.iso.copies[e], thin_p_);
                    if (c == 0) continue;
                    z[e] = c;
                    zv += c;
                    nonzero.push_back(e);
                    outboxes[v].push_back(
                        codec_.edge_tuple(v, g_.edges()[e], c, art_.iso.copies[e]));
                }
                max_zv = std::max(max_zv, zv);
            }
            st.max_zv = std::max(st.max_zv, max_zv);

            // gather at M1 (broadcasts, so every machine sees |R|)
            auto inbox = sim_.exchange(std::move(outboxes));
            r_total = 0;
            for (const auto& msg : inbox) {
                auto d = codec_.decode_edge(msg);
                r_total += d.count;
                EdgeId e = lookup_edge(g_, d.u, d.v);
                m1_seen_[e] = true;
                assert(d.w == g_.edges()[e].w && d.t == art_.iso.copies[e]);
            }
            if (r_total >= t_) break;
            ++st.resamples;
            if (st.resamples > params_.resample_limit)
                fail(Errc::resample_limit,
                     "|R| < t after " + std::to_string(params_.resample_limit) +
                         " resampling attempts; p is mis-sized for this instance");
        }
        st.gathered_total = r_total;
        std::sort(nonzero.begin(), nonzero.end());

        // down step at M1: uniform t-sub-multiset of the gathered copies
        std::vector<uint64_t> kept = draw_without_replacement(nonzero, z, r_total, t_);

        // union with the current tree's copies
        for (EdgeId e : cur) {
            uint64_t te = art_.iso.copies[e];
            uint64_t ze = kept[e];
            if (params_.union_rule == UnionRule::max1) {
                kept[e] = std::max<uint64_t>(ze, 1);
            } else {
                // the tree's copy is uniform among the t_e copies: it already
                // lies in the z_e sampled ones with probability z_e/t_e
                if (ze == 0) {
                    kept[e] = 1;
                } else if (ze < te) {
                    Rat extra(Int(static_cast<unsigned long>(te - ze)),
                              Int(static_cast<unsigned long>(te)));
                    extra.canonicalize();
                    if (BernoulliRat(extra).sample(sim_.rng(0))) kept[e] = ze + 1;
                }
            }
        }

        // up step at M1: modified weights w_e * c'_e / t_e on the support
        std::vector<Rat> weights(g_.m(), Rat(0));
        for (EdgeId e = 0; e < g_.m(); ++e) {
            if (kept[e] == 0) continue;
            if (!m1_seen_[e])
                fail(Errc::internal, "M1 uses an edge it never received");
            weights[e] = Rat(Int(static_cast<unsigned long>(g_.edges()[e].w)) *
                                 Int(static_cast<unsigned long>(kept[e])),
                             Int(static_cast<unsigned long>(art_.iso.copies[e])));
            weights[e].canonicalize();
        }
        std::vector<EdgeId> next = wilson_sample(g_, weights, sim_.rng(0));

        // broadcast S_{i+1} as n-1 tuples from M1
        std::vector<std::vector<BroadcastMessage>> outboxes(n);
        for (EdgeId e : next)
            outboxes[0].push_back(codec_.edge_tuple(0, g_.edges()[e], 1, art_.iso.copies[e]));
        sim_.exchange(std::move(outboxes));
        cur = std::move(next);
        return st;
    }

    // exactly uniform draw of `draws` copies without replacement from the
    // gathered multiset, by sequential single-copy draws
    std::vector<uint64_t> draw_without_replacement(const std::vector<EdgeId>& support,
                                                   const std::vector<uint64_t>& counts,
                                                   uint64_t population, uint64_t draws) {
        std::vector<uint64_t> kept(g_.m(), 0);
        std::vector<uint64_t> remaining;
        remaining.reserve(support.size());
        for (EdgeId e : support) remaining.push_back(counts[e]);
        uint64_t pop = population;
        for (uint64_t d = 0; d < draws; ++d) {
            uint64_t x = sim_.rng(0).uniform_u64(pop);
            for (size_t i = 0; i < support.size(); ++i) {
                if (x < remaining[i]) {
                    --remaining[i];
                    ++kept[support[i]];
                    break;
                }
                x -= remaining[i];
            }
            --pop;
        }
        return kept;
    }

  public:
    void mark_known(const std::vector<EdgeId>& edges) {
        for (EdgeId e : edges) m1_seen_[e] = true;
    }

  private:
    BccSim& sim_;
    const WeightedGraph& g_;
    const StageArtifacts& art_;
    WalkParams params_;
    TupleCodec codec_;
    uint64_t t_ = 0;
    Rat thin_p_;
    BernoulliRat thin_coin_{Rat(0)};
    std::vector<std::vector<EdgeId>> owned_;
    std::vector<bool> m1_seen_;
};

}  // namespace

WalkResult run_walk(BccSim& sim, const StageArtifacts& art, const WalkParams& params,
                    InitRule init) {
    WalkEngine engine(sim, art, params);
    std::vector<EdgeId> s0 = initial_tree(sim, art.iso, init);
    engine.mark_known(s0);
    return engine.run(std::move(s0));
}

WalkResult run_walk_from(BccSim& sim, const StageArtifacts& art, const WalkParams& params,
                         std::vector<EdgeId> s0) {
    WalkEngine engine(sim, art, params);
    engine.mark_known(s0);
    return engine.run(std::move(s0));
}

std::vector<EdgeId> reference_walk_centralized(const WeightedGraph& g, const StageArtifacts& art,
                                               const WalkParams& params, std::vector<EdgeId> s0,
                                               CounterRng& rng, RefConvention convention) {
    if (!is_spanning_tree(g, s0)) fail(Errc::invalid_arg, "reference walk needs a spanning tree");
    if (!fits_u64(art.iso.total_copies))
        fail(Errc::invalid_arg, "reference walk is for small ground sets only");
    const uint64_t u_total = to_u64(art.iso.total_copies);
    const uint64_t k = g.n() - 1;
    const uint64_t t = params.subset_size ? params.subset_size : 2 * static_cast<uint64_t>(g.n());
    if (t < k + 1 || t > u_total) fail(Errc::invalid_arg, "t out of range for the ground set");

    std::vector<EdgeId> cur = std::move(s0);
    std::vector<uint64_t> cprime(g.m(), 0);
    std::vector<uint8_t> in_tree(g.m(), 0);

    for (uint64_t step = 0; step < params.steps; ++step) {
        std::fill(cprime.begin(), cprime.end(), 0);
        std::fill(in_tree.begin(), in_tree.end(), 0);
        for (EdgeId e : cur) in_tree[e] = 1;

        if (convention == RefConvention::alg1_superset) {
            // uniform (t-k)-subset of the copies outside S_i, added to S_i
            uint64_t pop = u_total - k;
            std::vector<uint64_t> avail(g.m());
            for (EdgeId e = 0; e < g.m(); ++e) avail[e] = art.iso.copies[e] - in_tree[e];
            for (uint64_t d = 0; d < t - k; ++d) {
                uint64_t x = rng.uniform_u64(pop);
                for (EdgeId e = 0; e < g.m(); ++e) {
                    if (x < avail[e]) {
                        --avail[e];
                        ++cprime[e];
                        break;
                    }
                    x -= avail[e];
                }
                --pop;
            }
            for (EdgeId e : cur) ++cprime[e];
        } else {
            // uniform t-subset of all copies, then union with S_i's copies
            uint64_t pop = u_total;
            std::vector<uint64_t> avail(g.m());
            for (EdgeId e = 0; e < g.m(); ++e) avail[e] = art.iso.copies[e];
            for (uint64_t d = 0; d < t; ++d) {
                uint64_t x = rng.uniform_u64(pop);
                for (EdgeId e = 0; e < g.m(); ++e) {
                    if (x < avail[e]) {
                        --avail[e];
                        ++cprime[e];
                        break;
                    }
                    x -= avail[e];
                }
                --pop;
            }
            for (EdgeId e : cur) {
                uint64_t te = art.iso.copies[e], ze = cprime[e];
                if (params.union_rule == UnionRule::max1) {
                    cprime[e] = std::max<uint64_t>(ze, 1);
                } else if (ze == 0) {
                    cprime[e] = 1;
                } else if (ze < te) {
                    Rat extra(Int(static_cast<unsigned long>(te - ze)),
                              Int(static_cast<unsigned long>(te)));
                    extra.canonicalize();
                    if (BernoulliRat(extra).sample(rng)) cprime[e] = ze + 1;
                }
            }
        }

        std::vector<Rat> weights(g.m(), Rat(0));
        for (EdgeId e = 0; e < g.m(); ++e) {
            if (cprime[e] == 0) continue;
            weights[e] = Rat(Int(static_cast<unsigned long>(g.edges()[e].w)) *
                                 Int(static_cast<unsigned long>(cprime[e])),
                             Int(static_cast<unsigned long>(art.iso.copies[e])));
            weights[e].canonicalize();
        }
        cur = wilson_sample(g, weights, rng);
    }
    return cur;
}

}  // namespace bccst

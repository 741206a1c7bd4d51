#include "core/overestimates.hpp"

#include <algorithm>

namespace bccst {

const char* backend_name(Backend b) { return b == Backend::exact ? "exact" : "sparsifier"; }

uint64_t default_oracle_rounds(uint32_t n) {
    uint64_t l = std::max<uint64_t>(ceil_log2_u64(n), 1);
    return l * l * l * l * l;
}

MarginalOverestimates compute_overestimates_exact(BccSim& sim, const ResistanceOracle& oracle,
                                                  uint64_t declared_rounds) {
    const WeightedGraph& g = sim.graph();
    g.require_connected();
    MarginalOverestimates est;
    est.backend = Backend::exact;
    est.slack = 1;
    est.mass = 0;
    est.q.reserve(g.m());
    for (EdgeId e = 0; e < g.m(); ++e) {
        est.q.push_back(oracle.edge_marginal(e));
        est.mass += est.q.back();
    }
    sim.begin_phase("overestimates");
    sim.charge_declared(declared_rounds ? declared_rounds : default_oracle_rounds(sim.n()));
    return est;
}

namespace {

struct TupleFormat {
    uint32_t vbits;
    uint32_t value_bits;  // ceil(log2(n*U)) + 64
};

TupleFormat tuple_format(const BccSim& sim) {
    uint64_t nu = static_cast<uint64_t>(sim.n()) * std::max<uint64_t>(sim.graph().max_weight(), 1);
    return {ceil_log2_u64(sim.n()), ceil_log2_u64(nu) + 64};
}

}  // namespace

MarginalOverestimates compute_overestimates_sparsifier(BccSim& sim,
                                                       const ResistanceOracle& oracle,
                                                       const Rat& eps, const Rat& oversample,
                                                       uint32_t max_attempts) {
    const WeightedGraph& g = sim.graph();
    g.require_connected();
    if (eps <= 0 || eps >= Rat(1, 2)) fail(Errc::invalid_arg, "eps must be in (0, 1/2)");
    const uint32_t n = g.n();
    const size_t m = g.m();

    // leverage scores: the stand-in is granted these exactly (per machine,
    // incident edges); only the communication below is metered
    std::vector<Rat> lev(m);
    for (EdgeId e = 0; e < m; ++e) lev[e] = oracle.edge_marginal(e);

    // m' = ceil(c * n * ceil(log2 n)^2 / eps^2)
    uint64_t log_n = std::max<uint64_t>(ceil_log2_u64(n), 1);
    Rat target = oversample * Rat(static_cast<unsigned long>(n)) *
                 Rat(static_cast<unsigned long>(log_n * log_n)) / (eps * eps);
    Int m_prime = ceil_rat(target);

    // orientation of all edges under leverage weights; induces the sampled
    // edges' orientation by restriction
    AssocInput orient_in = assoc_input_from_graph(g, lev);
    LightAssociation orient = light_associate(sim, orient_in, Rat(2), true, "overestimates");
    std::vector<std::vector<EdgeId>> owned(n);
    for (EdgeId e = 0; e < m; ++e) owned[orient.owner[e]].push_back(e);

    // per-edge inclusion probabilities
    std::vector<Rat> p(m);
    for (EdgeId e = 0; e < m; ++e) {
        Rat pe = Rat(m_prime) * lev[e] / Rat(static_cast<unsigned long>(n - 1));
        p[e] = pe < 1 ? pe : Rat(1);
    }

    TupleFormat fmt = tuple_format(sim);
    static const Int kGrid = Int(1) << 32;
    sim.begin_phase("overestimates");

    for (uint32_t attempt = 1; attempt <= max_attempts; ++attempt) {
        // owners sample privately and broadcast survivors, reweighted 1/p_e
        std::vector<std::vector<BroadcastMessage>> outboxes(n);
        std::vector<EdgeId> sampled;
        std::vector<Rat> sampled_w;
        std::vector<VertexId> sampled_owner;
        for (VertexId v = 0; v < n; ++v) {
            for (EdgeId e : owned[v]) {
                BernoulliRat coin(p[e]);
                if (!coin.sample(sim.rng(v))) continue;
                Rat reweighted = Rat(static_cast<unsigned long>(g.edges()[e].w)) / p[e];
                Int numer = ceil_rat(reweighted * Rat(kGrid));
                if (!fits_u64(numer) ||
                    (fmt.value_bits < 64 && to_u64(numer) >> fmt.value_bits))
                    fail(Errc::payload_too_large,
                         "sparsifier weight does not fit the tuple value field");
                BitWriter w;
                w.put(g.edges()[e].u, fmt.vbits);
                w.put(g.edges()[e].v, fmt.vbits);
                w.put(to_u64(numer), fmt.value_bits);
                outboxes[v].push_back({v, w.bytes(), w.bit_length()});
                sampled.push_back(e);
                Rat rounded(numer, kGrid);
                rounded.canonicalize();
                sampled_w.push_back(rounded);
                sampled_owner.push_back(v);
            }
        }
        auto inbox = sim.exchange(std::move(outboxes));

        // every machine reconstructs the sparsifier from the broadcasts
        std::vector<std::tuple<VertexId, VertexId, Rat>> recon;
        for (const auto& msg : inbox) {
            BitReader r(msg.payload, msg.bit_len);
            VertexId u = static_cast<VertexId>(r.get(fmt.vbits));
            VertexId v = static_cast<VertexId>(r.get(fmt.vbits));
            Rat w(Int(static_cast<unsigned long>(r.get(fmt.value_bits))), kGrid);
            w.canonicalize();
            recon.emplace_back(u, v, w);
        }

        try {
            RationalResistance rr(n, recon);
            MarginalOverestimates est;
            est.backend = Backend::sparsifier;
            est.slack = Rat(1) / (Rat(1) - eps);
            est.mass = 0;
            est.q.reserve(m);
            for (EdgeId e = 0; e < m; ++e) {
                Rat qe = Rat(static_cast<unsigned long>(g.edges()[e].w)) *
                         rr.resistance(g.edges()[e].u, g.edges()[e].v) * est.slack;
                est.q.push_back(qe);
                est.mass += qe;
            }
            est.sample_edges = std::move(sampled);
            est.sample_weights = std::move(sampled_w);
            est.sample_owner = std::move(sampled_owner);
            est.out_degree.assign(n, 0);
            for (VertexId v : est.sample_owner) ++est.out_degree[v];
            est.attempts = attempt;
            return est;
        } catch (const Error& err) {
            if (err.code() != Errc::disconnected) throw;
            // degenerate draw; owners resample with fresh randomness
        }
    }
    fail(Errc::sparsifier_degenerate,
         "sampled sparsifier stayed disconnected after " + std::to_string(max_attempts) +
             " attempts");
}

std::vector<std::vector<std::pair<EdgeId, Rat>>> distribute_overestimates(
    const BccSim& sim, const MarginalOverestimates& est) {
    const WeightedGraph& g = sim.graph();
    std::vector<std::vector<std::pair<EdgeId, Rat>>> view(g.n());
    for (VertexId v = 0; v < g.n(); ++v)
        for (EdgeId e : g.incident(v)) view[v].emplace_back(e, est.q[e]);
    return view;
}

}  // namespace bccst

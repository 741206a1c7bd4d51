#include "core/association.hpp"

#include <algorithm>

namespace bccst {

AssocInput assoc_input_from_graph(const WeightedGraph& g, const std::vector<Rat>& q) {
    if (q.size() != g.m()) fail(Errc::invalid_arg, "q size mismatch");
    AssocInput in;
    in.n = g.n();
    in.endpoints.reserve(g.m());
    for (const auto& e : g.edges()) in.endpoints.emplace_back(e.u, e.v);
    in.q = q;
    return in;
}

LightAssociation light_associate(BccSim& sim, const AssocInput& in, const Rat& alpha,
                                 bool escalate, const std::string& phase_label) {
    const uint32_t n = in.n;
    const size_t m = in.endpoints.size();
    sim.begin_phase(phase_label);

    LightAssociation out;
    out.owner.assign(m, kUnassigned);
    out.iteration_assigned.assign(m, 0);
    out.vertex_weight.assign(n, Rat(0));
    out.alpha_final = alpha;

    // per-machine view: incident residual items
    std::vector<std::vector<uint32_t>> incident(n);
    for (uint32_t i = 0; i < m; ++i) {
        incident[in.endpoints[i].first].push_back(i);
        incident[in.endpoints[i].second].push_back(i);
    }

    Rat cur_alpha = alpha;
    size_t residual = m;
    const uint32_t iteration_cap = 8 * (ceil_log2_u64(std::max<uint64_t>(m, 2)) + 2) + 64;

    while (residual > 0) {
        if (out.iterations >= iteration_cap)
            fail(Errc::no_progress, "light association exceeded its iteration cap");
        ++out.iterations;

        // announce residual degrees: one integer per machine, every machine
        std::vector<std::vector<BroadcastMessage>> outboxes(n);
        std::vector<uint64_t> degree(n, 0);
        for (VertexId v = 0; v < n; ++v) {
            uint64_t d = 0;
            for (uint32_t i : incident[v])
                if (out.owner[i] == kUnassigned) ++d;
            degree[v] = d;
            BitWriter w;
            w.put(d, 64);
            outboxes[v].push_back({v, w.bytes(), w.bit_length()});
        }
        auto inbox = sim.exchange(std::move(outboxes));
        std::vector<uint64_t> announced(n, 0);
        for (const auto& msg : inbox) {
            BitReader r(msg.payload, msg.bit_len);
            announced[msg.sender] = r.get(64);
        }

        // claim rule, evaluated symmetrically: q_e < 8*alpha/d_v, ties to lower id
        size_t assigned_now = 0;
        for (uint32_t i = 0; i < m; ++i) {
            if (out.owner[i] != kUnassigned) continue;
            auto [u, v] = in.endpoints[i];
            bool cu = announced[u] > 0 &&
                      in.q[i] * Rat(static_cast<unsigned long>(announced[u])) < Rat(8) * cur_alpha;
            bool cv = announced[v] > 0 &&
                      in.q[i] * Rat(static_cast<unsigned long>(announced[v])) < Rat(8) * cur_alpha;
            if (!cu && !cv) continue;
            VertexId winner = cu && cv ? std::min(u, v) : (cu ? u : v);
            out.owner[i] = winner;
            out.iteration_assigned[i] = out.iterations;
            out.vertex_weight[winner] += in.q[i];
            ++assigned_now;
        }
        residual -= assigned_now;

        if (assigned_now == 0 && residual > 0) {
            if (!escalate || cur_alpha >= alpha * Rat(64))
                fail(Errc::no_progress,
                     "light association stalled with " + std::to_string(residual) +
                         " residual edges at alpha=" + rat_str(cur_alpha));
            cur_alpha *= 2;
            ++out.escalations;
        }
    }
    out.alpha_final = cur_alpha;
    return out;
}

AssocCheck verify_association(const AssocInput& in, const LightAssociation& assoc,
                              const Rat& alpha) {
    AssocCheck c;
    const size_t m = in.endpoints.size();
    c.iterations = assoc.iterations;
    c.iteration_bound = ceil_log2_u64(std::max<uint64_t>(m, 2)) + 1;

    c.partition_ok = assoc.owner.size() == m;
    for (uint32_t i = 0; c.partition_ok && i < m; ++i) {
        VertexId o = assoc.owner[i];
        if (o == kUnassigned) {
            c.partition_ok = false;
            c.witness = "edge " + std::to_string(i) + " has no owner";
        } else if (o != in.endpoints[i].first && o != in.endpoints[i].second) {
            c.partition_ok = false;
            c.witness = "edge " + std::to_string(i) + " owned by non-endpoint " + std::to_string(o);
        }
    }

    std::vector<Rat> totals(in.n, Rat(0));
    if (assoc.owner.size() == m)
        for (uint32_t i = 0; i < m; ++i)
            if (assoc.owner[i] < in.n) totals[assoc.owner[i]] += in.q[i];
    c.max_vertex_weight = Rat(0);
    for (const Rat& t : totals) c.max_vertex_weight = std::max(c.max_vertex_weight, t);
    c.weight_bound = Rat(8) * alpha * Rat(static_cast<unsigned long>(std::max(1u, assoc.iterations)));
    c.weight_ok = c.max_vertex_weight <= c.weight_bound;
    if (!c.weight_ok && !c.witness)
        c.witness = "max per-vertex weight " + rat_str(c.max_vertex_weight) + " exceeds " +
                    rat_str(c.weight_bound);

    c.iterations_ok = assoc.iterations <= c.iteration_bound;
    if (!c.iterations_ok && !c.witness)
        c.witness = "took " + std::to_string(assoc.iterations) + " iterations, bound " +
                    std::to_string(c.iteration_bound);
    return c;
}

}  // namespace bccst

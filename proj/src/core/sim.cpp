#include "core/sim.hpp"

#include <algorithm>

namespace bccst {

uint32_t ceil_log2_u64(uint64_t x) {
    uint32_t bits = 0;
    uint64_t v = 1;
    while (v < x) {
        v <<= 1;
        ++bits;
    }
    return bits;
}

uint32_t SimConfig::default_bits(uint32_t n, uint64_t max_weight) {
    uint64_t nu = static_cast<uint64_t>(n) * std::max<uint64_t>(max_weight, 1);
    return 4 * ceil_log2_u64(n) + ceil_log2_u64(nu) + 64;
}

uint64_t RoundLedger::charge_batch(const std::string& label,
                                   const std::vector<uint64_t>& bits_by_machine) {
    uint64_t rounds = 0;
    uint64_t total = 0;
    for (uint64_t b : bits_by_machine) {
        rounds = std::max(rounds, (b + bits_per_round_ - 1) / bits_per_round_);
        total += b;
    }
    PhaseRecord& rec = phase(label, false);
    rec.rounds += rounds;
    rec.total_bits += total;
    auto& per_machine = phase_machine_bits_[label];
    for (MachineId v = 0; v < bits_by_machine.size(); ++v) {
        if (bits_by_machine[v] == 0) continue;
        per_machine[v] += bits_by_machine[v];
        rec.max_machine_bits = std::max(rec.max_machine_bits, per_machine[v]);
    }
    total_rounds_ += rounds;
    batch_logs_.push_back({label, bits_by_machine});
    return rounds;
}

void RoundLedger::charge_declared(const std::string& label, uint64_t rounds) {
    PhaseRecord& rec = phase(label, true);
    rec.rounds += rounds;
    total_rounds_ += rounds;
}

uint64_t RoundLedger::total_rounds_measured() const {
    uint64_t t = 0;
    for (const auto& p : phases_)
        if (!p.declared) t += p.rounds;
    return t;
}

bool RoundLedger::reconcile() const {
    std::map<std::string, uint64_t> recomputed;
    for (const auto& batch : batch_logs_) {
        uint64_t rounds = 0;
        for (uint64_t b : batch.bits_by_machine)
            rounds = std::max(rounds, (b + bits_per_round_ - 1) / bits_per_round_);
        recomputed[batch.label] += rounds;
    }
    for (const auto& p : phases_) {
        if (p.declared) continue;
        if (recomputed[p.label] != p.rounds) return false;
        recomputed.erase(p.label);
    }
    return recomputed.empty();
}

PhaseRecord& RoundLedger::phase(const std::string& label, bool declared) {
    for (auto& p : phases_)
        if (p.label == label && p.declared == declared) return p;
    phases_.push_back({label, 0, 0, 0, declared});
    return phases_.back();
}

BccSim::BccSim(SimConfig cfg, const WeightedGraph& g)
    : cfg_(cfg),
      graph_(g),
      ledger_(cfg.n, cfg.bits_per_round ? cfg.bits_per_round
                                        : SimConfig::default_bits(cfg.n, g.max_weight())) {
    if (cfg_.n != g.n()) fail(Errc::invalid_arg, "machine count must equal vertex count");
    if (cfg_.n < 2) fail(Errc::invalid_arg, "simulation needs n >= 2");
    if (cfg_.bits_per_round == 0) cfg_.bits_per_round = SimConfig::default_bits(cfg_.n, g.max_weight());
    uint32_t vbits = ceil_log2_u64(cfg_.n);
    if (cfg_.bits_per_round < 2 * vbits + 1)
        fail(Errc::invalid_arg, "bits_per_round cannot hold a vertex id pair plus a counter");
    machine_rng_.resize(cfg_.n);
}

void BccSim::begin_phase(const std::string& label) {
    phase_label_ = label;
    uint64_t instance = phase_instances_[label]++;
    uint64_t lh = fnv1a64(label);
    for (MachineId v = 0; v < cfg_.n; ++v)
        machine_rng_[v] = CounterRng(derive_stream(cfg_.seed, v, lh, instance));
}

std::vector<BroadcastMessage> BccSim::exchange(
    std::vector<std::vector<BroadcastMessage>> outboxes) {
    if (phase_label_.empty()) fail(Errc::internal, "exchange outside a phase");
    if (outboxes.size() != cfg_.n) fail(Errc::internal, "outboxes must cover all machines");
    std::vector<uint64_t> bits(cfg_.n, 0);
    std::vector<BroadcastMessage> inbox;
    for (MachineId v = 0; v < cfg_.n; ++v) {
        for (auto& msg : outboxes[v]) {
            if (msg.bit_len > cfg_.bits_per_round)
                fail(Errc::payload_too_large,
                     "payload of " + std::to_string(msg.bit_len) + " bits exceeds B=" +
                         std::to_string(cfg_.bits_per_round) +
                         " (fragment with send_stream or raise --bits)");
            msg.sender = v;
            bits[v] += msg.bit_len;
        }
        for (auto& msg : outboxes[v]) inbox.push_back(std::move(msg));
    }
    uint64_t base_round = round_index_;
    uint64_t charged = ledger_.charge_batch(phase_label_, bits);
    round_index_ += charged;

    // transcript + digest; a machine's k-th bit occupies round base + k/B
    std::vector<uint64_t> sent_before(cfg_.n, 0);
    for (const auto& msg : inbox) {
        uint64_t round = base_round + sent_before[msg.sender] / cfg_.bits_per_round;
        sent_before[msg.sender] += msg.bit_len;
        digest_ = splitmix64(digest_ ^ round);
        digest_ = splitmix64(digest_ ^ msg.sender);
        digest_ = splitmix64(digest_ ^ msg.bit_len);
        digest_ = splitmix64(digest_ ^ fnv1a64(phase_label_));
        for (uint8_t b : msg.payload) digest_ = splitmix64(digest_ ^ b);
        if (cfg_.record_transcript)
            transcript_.push_back("round=" + std::to_string(round) + " phase=" + phase_label_ +
                                  " sender=" + std::to_string(msg.sender) +
                                  " bits=" + std::to_string(msg.bit_len));
    }
    return inbox;
}

void BccSim::charge_declared(uint64_t rounds) {
    if (phase_label_.empty()) fail(Errc::internal, "charge outside a phase");
    ledger_.charge_declared(phase_label_, rounds);
}

std::vector<BroadcastMessage> send_stream(MachineId sender, const std::vector<uint8_t>& payload,
                                          uint32_t bit_len, uint32_t bits_per_round) {
    std::vector<BroadcastMessage> out;
    uint32_t pos = 0;
    while (pos < bit_len) {
        uint32_t take = std::min(bits_per_round, bit_len - pos);
        BitWriter w;
        BitReader r(payload, bit_len);
        // skip to pos, then copy `take` bits
        uint32_t skipped = 0;
        while (skipped + 64 <= pos) {
            r.get(64);
            skipped += 64;
        }
        if (skipped < pos) r.get(pos - skipped);
        uint32_t copied = 0;
        while (copied + 64 <= take) {
            w.put(r.get(64), 64);
            copied += 64;
        }
        if (copied < take) w.put(r.get(take - copied), take - copied);
        out.push_back({sender, w.bytes(), take});
        pos += take;
    }
    return out;
}

}  // namespace bccst

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/bitio.hpp"
#include "core/graph.hpp"
#include "core/rng.hpp"

namespace bccst {

using MachineId = uint32_t;

struct SimConfig {
    uint32_t n = 0;
    uint32_t bits_per_round = 0;  // B; 0 means "use default_bits"
    uint64_t seed = 0;
    bool record_transcript = false;

    // 4*ceil(log2 n) + ceil(log2(n*U)) + 64: fits one (u,v,value) tuple.
    static uint32_t default_bits(uint32_t n, uint64_t max_weight);
};

uint32_t ceil_log2_u64(uint64_t x);  // ceil(log2 x), x >= 1; 0 for x = 1

struct BroadcastMessage {
    MachineId sender = 0;
    std::vector<uint8_t> payload;
    uint32_t bit_len = 0;
};

struct PhaseRecord {
    std::string label;
    uint64_t rounds = 0;
    uint64_t max_machine_bits = 0;  // max over machines of total bits in this phase
    uint64_t total_bits = 0;
    bool declared = false;  // flat oracle charge, not derived from traffic
};

// Raw per-exchange bit counts, enough to recompute every round charge.
struct BatchLog {
    std::string label;
    std::vector<uint64_t> bits_by_machine;
};

class RoundLedger {
  public:
    explicit RoundLedger(uint32_t n, uint32_t bits_per_round)
        : n_(n), bits_per_round_(bits_per_round) {}

    // rounds = max over machines of ceil(bits/B); returns the charge.
    uint64_t charge_batch(const std::string& label, const std::vector<uint64_t>& bits_by_machine);
    void charge_declared(const std::string& label, uint64_t rounds);

    uint64_t total_rounds() const { return total_rounds_; }
    uint64_t total_rounds_measured() const;
    const std::vector<PhaseRecord>& phases() const { return phases_; }
    const std::vector<BatchLog>& batch_logs() const { return batch_logs_; }

    // Recomputes all measured charges from the raw logs; must equal the
    // recorded phase totals.
    bool reconcile() const;

  private:
    PhaseRecord& phase(const std::string& label, bool declared);

    uint32_t n_;
    uint32_t bits_per_round_;
    uint64_t total_rounds_ = 0;
    std::vector<PhaseRecord> phases_;
    std::map<std::string, std::map<MachineId, uint64_t>> phase_machine_bits_;
    std::vector<BatchLog> batch_logs_;
};

// Synchronous broadcast rounds over n machines. One exchange() call is one
// batch of broadcasts: every machine's messages are delivered to every
// machine, ordered by sender id, and the ledger is charged
// max_v ceil(total bits of v / B) rounds.
class BccSim {
  public:
    BccSim(SimConfig cfg, const WeightedGraph& g);

    const SimConfig& config() const { return cfg_; }
    const WeightedGraph& graph() const { return graph_; }
    uint32_t n() const { return cfg_.n; }
    uint32_t bits_per_round() const { return cfg_.bits_per_round; }

    // Starts a ledger/transcript phase and re-derives per-machine rng streams
    // from (seed, machine, label, instance).
    void begin_phase(const std::string& label);
    const std::string& current_phase() const { return phase_label_; }

    CounterRng& rng(MachineId v) { return machine_rng_[v]; }

    // outboxes[v] = messages machine v broadcasts in this batch.
    // Returns the shared inbox: all messages sorted by sender (stable).
    std::vector<BroadcastMessage> exchange(std::vector<std::vector<BroadcastMessage>> outboxes);

    void charge_declared(uint64_t rounds);

    uint64_t round_index() const { return round_index_; }
    RoundLedger& ledger() { return ledger_; }
    const RoundLedger& ledger() const { return ledger_; }

    const std::vector<std::string>& transcript() const { return transcript_; }
    uint64_t transcript_digest() const { return digest_; }

  private:
    SimConfig cfg_;
    WeightedGraph graph_;
    RoundLedger ledger_;
    std::string phase_label_;
    std::map<std::string, uint64_t> phase_instances_;
    std::vector<CounterRng> machine_rng_;
    uint64_t round_index_ = 0;
    std::vector<std::string> transcript_;
    uint64_t digest_ = 0xCBF29CE484222325ull;
};

// Splits a long payload into ceil(len/B)-many broadcasts of at most B bits.
std::vector<BroadcastMessage> send_stream(MachineId sender, const std::vector<uint8_t>& payload,
                                          uint32_t bit_len, uint32_t bits_per_round);

}  // namespace bccst

#pragma once

#include "drsim/geometry.hpp"
#include "drsim/protocols.hpp"
#include "drsim/radio.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace drsim {

enum class Deployment { Uniform, Lattice };

/// How a CH handles what it collects. Compress fuses everything into one
/// outgoing packet; Forward relays every collected packet plus its own
/// (aggregation energy is charged either way).
enum class Aggregation { Compress, Forward };

struct SimConfig {
    double field_length = 100.0;
    int n_rings = 3;
    int node_count = 100;
    /// Defaults to the field centre.
    std::optional<Point> bs_pos;
    double initial_energy = 0.5;
    Bits packet_bits = 4000;
    ProtocolKind protocol = ProtocolKind::DR;
    double ch_probability = 0.05;
    int max_rounds = 6000;
    std::uint64_t seed = 1;
    int runs = 50;
    RadioParams radio;

    Deployment deployment = Deployment::Uniform;
    /// Lattice spacing is d / lattice_per_d; node_count is then derived.
    int lattice_per_d = 2;
    /// When set, every link is priced at this length regardless of geometry.
    std::optional<double> fixed_link_distance;
    bool relay = true;
    Aggregation aggregation = Aggregation::Compress;
    /// Worker threads for experiments; 0 picks the hardware concurrency.
    int threads = 0;
    /// Representative link length for the closed-form sweep; 0 selects d.
    double analytic_distance = 0.0;

    Point base_station() const;
    /// Throws std::invalid_argument on out-of-range values.
    void validate() const;
};

struct RoundMetrics {
    int round = 0;
    int alive = 0;
    int ch_count = 0;
    std::int64_t packets_to_bs = 0;
    double energy_spent = 0.0;
    double cumulative_energy = 0.0;
};

struct RunSummary {
    int fnd = 0;
    int hnd = 0;
    int lnd = 0;
    std::int64_t total_packets = 0;
};

struct RunResult {
    std::vector<RoundMetrics> series;
    RunSummary summary;
};

/// Uniform positions over the field (or the lattice), region assigned,
/// energy at the initial level. Consumes draws from `rng`.
std::vector<Node> deploy(const SimConfig& config, const FieldPartition& fp, Rng& rng);
std::vector<Node> deploy(const SimConfig& config);

struct EnergyContext {
    RadioParams radio;
    Bits bits = 4000;
    Point bs;
    std::optional<double> fixed_link_distance;
    Aggregation aggregation = Aggregation::Compress;
};

/// Charges one steady-state round. Each alive sender pays tx to its
/// destination; each CH pays rx per collected packet, aggregation over
/// collected + own signals, and tx to its next hop. Charges are floored at
/// the node's remaining energy. `spent`, when given, receives the per-node
/// decrease. `round` and `ch_count` come from the plan.
RoundMetrics run_round(std::vector<Node>& nodes, const RoundPlan& plan, const EnergyContext& ctx,
                       std::vector<double>* spent = nullptr);

std::unique_ptr<Protocol> make_protocol(const SimConfig& config, const FieldPartition& fp,
                                        std::span<const Node> deployed);

/// One seeded run, stepped a round at a time.
class Simulation {
public:
    explicit Simulation(SimConfig config);
    Simulation(SimConfig config, std::vector<Node> nodes);

    const SimConfig& config() const { return config_; }
    const FieldPartition& partition() const { return fp_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    int rounds_done() const { return round_; }
    int alive() const;
    bool finished() const;

    struct Step {
        RoundPlan plan;
        RoundMetrics metrics;
        std::vector<double> spent;
    };
    Step step();

private:
    SimConfig config_;
    FieldPartition fp_;
    Rng rng_;
    std::vector<Node> nodes_;
    std::unique_ptr<Protocol> protocol_;
    EnergyContext energy_;
    int round_ = 0;
    double cumulative_ = 0.0;
    double deployed_energy_ = 0.0;
};

RunSummary summarize(std::span<const RoundMetrics> series, int node_count, int max_rounds);

RunResult run(const SimConfig& config);

struct MetricStats {
    double mean = 0.0;
    double median = 0.0;
};

struct ProtocolAggregate {
    ProtocolKind protocol = ProtocolKind::DR;
    MetricStats fnd, hnd, lnd, total_packets;
};

/// (a - b) / b x 100 for each metric, medians and means.
struct Improvement {
    ProtocolKind a = ProtocolKind::DR;
    ProtocolKind b = ProtocolKind::LEACH;
    MetricStats fnd, hnd, lnd, total_packets;
};

struct RunRecord {
    ProtocolKind protocol = ProtocolKind::DR;
    std::uint64_t seed = 0;
    RunSummary summary;
};

struct ExperimentResult {
    std::vector<RunRecord> runs;
    std::vector<ProtocolAggregate> aggregates;
    std::vector<Improvement> improvements;
};

double percent_improvement(double a, double b);
MetricStats stats_of(std::vector<double> values);
ProtocolAggregate aggregate(ProtocolKind protocol, std::span<const RunRecord> runs);
Improvement compare(const ProtocolAggregate& a, const ProtocolAggregate& b);

/// Runs seeds seed .. seed + runs - 1 for every listed protocol. Records are
/// ordered by protocol then seed independent of thread scheduling.
ExperimentResult experiment(const SimConfig& config, std::span<const ProtocolKind> protocols);
ExperimentResult experiment(const SimConfig& config);

}  // namespace drsim

#include "drsim/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>

namespace drsim {

Point SimConfig::base_station() const
{
    return bs_pos.value_or(Point{field_length / 2.0, field_length / 2.0});
}

void SimConfig::validate() const
{
    auto fail = [](const char* what) { throw std::invalid_argument(what); };
    if (!(field_length > 0.0) || !std::isfinite(field_length)) fail("field_length must be positive");
    if (n_rings < 2) fail("n_rings must be at least 2");
    if (node_count <= 0) fail("node_count must be positive");
    if (!(initial_energy > 0.0) || !std::isfinite(initial_energy)) fail("initial_energy must be positive");
    if (packet_bits <= 0) fail("packet_bits must be positive");
    if (!(ch_probability > 0.0 && ch_probability < 1.0)) fail("ch_probability must lie in (0, 1)");
    if (max_rounds <= 0) fail("max_rounds must be positive");
    if (runs <= 0) fail("runs must be positive");
    if (lattice_per_d <= 0) fail("lattice_per_d must be positive");
    if (threads < 0) fail("threads must be non-negative");
    if (fixed_link_distance && !(*fixed_link_distance >= 0.0)) fail("fixed_link_distance must be non-negative");
    if (bs_pos) {
        if (!std::isfinite(bs_pos->x) || !std::isfinite(bs_pos->y)) fail("bs position must be finite");
        const Point c{field_length / 2.0, field_length / 2.0};
        if (protocol == ProtocolKind::DR && !(*bs_pos == c)) {
            fail("dr requires the base station at the field centre");
        }
    }
}

std::vector<Node> deploy(const SimConfig& config, const FieldPartition& fp, Rng& rng)
{
    std::vector<Node> nodes;
    if (config.deployment == Deployment::Lattice) {
        const int per_side = 2 * config.n_rings * config.lattice_per_d;
        const double spacing = config.field_length / per_side;
        nodes.reserve(static_cast<std::size_t>(per_side) * per_side);
        for (int j = 0; j < per_side; ++j) {
            for (int i = 0; i < per_side; ++i) {
                const Point p{(i + 0.5) * spacing, (j + 0.5) * spacing};
                nodes.push_back(Node{static_cast<NodeId>(nodes.size()), p, config.initial_energy, fp.locate(p)});
            }
        }
        return nodes;
    }

    std::uniform_real_distribution<double> coord(0.0, config.field_length);
    nodes.reserve(static_cast<std::size_t>(config.node_count));
    for (int i = 0; i < config.node_count; ++i) {
        const double x = coord(rng);
        const double y = coord(rng);
        const Point p{x, y};
        nodes.push_back(Node{i, p, config.initial_energy, fp.locate(p)});
    }
    return nodes;
}

std::vector<Node> deploy(const SimConfig& config)
{
    config.validate();
    const FieldPartition fp{config.field_length, config.n_rings};
    Rng rng{config.seed};
    return deploy(config, fp, rng);
}

namespace {

// Hop count from each CH to the BS along ch_next_hop.
std::map<NodeId, int> ch_depths(const RoundPlan& plan)
{
    std::map<NodeId, int> depth;
    for (const auto& [head, _] : plan.ch_next_hop) {
        int hops = 0;
        Destination at = Destination::node(head);
        while (!at.is_base_station()) {
            if (++hops > static_cast<int>(plan.ch_next_hop.size())) {
                throw std::logic_error("run_round: cycle in CH next hops");
            }
            at = plan.ch_next_hop.at(at.node_id());
        }
        depth[head] = hops;
    }
    return depth;
}

}  // namespace

RoundMetrics run_round(std::vector<Node>& nodes, const RoundPlan& plan, const EnergyContext& ctx,
                       std::vector<double>* spent)
{
    std::vector<double> cost(nodes.size(), 0.0);
    RoundMetrics m;
    m.round = plan.round;
    m.ch_count = static_cast<int>(plan.ch_count());

    auto target = [&](Destination dest) { return dest.is_base_station() ? ctx.bs : nodes.at(static_cast<std::size_t>(dest.node_id())).pos; };
    auto link = [&](Point from, Destination dest) {
        return ctx.fixed_link_distance ? *ctx.fixed_link_distance : distance(from, target(dest));
    };

    std::map<NodeId, std::int64_t> collected;
    for (const auto& [member, dest] : plan.memberships) {
        const Node& n = nodes.at(static_cast<std::size_t>(member));
        if (!n.alive()) continue;
        cost[static_cast<std::size_t>(member)] += tx_energy(ctx.radio, ctx.bits, link(n.pos, dest));
        if (dest.is_base_station()) {
            ++m.packets_to_bs;
        } else {
            ++collected[dest.node_id()];
        }
    }

    // Leaves of the CH forest first so relayed packets are counted upstream.
    const auto depth = ch_depths(plan);
    std::vector<NodeId> heads(plan.cluster_heads);
    std::stable_sort(heads.begin(), heads.end(), [&](NodeId a, NodeId b) { return depth.at(a) > depth.at(b); });

    for (NodeId h : heads) {
        const Node& head = nodes.at(static_cast<std::size_t>(h));
        const Destination next = plan.ch_next_hop.at(h);
        const std::int64_t in = collected[h];
        const std::int64_t out = ctx.aggregation == Aggregation::Compress ? 1 : in + 1;
        double& c = cost[static_cast<std::size_t>(h)];
        c += static_cast<double>(in) * rx_energy(ctx.radio, ctx.bits);
        c += agg_energy(ctx.radio, ctx.bits, in + 1);
        c += static_cast<double>(out) * tx_energy(ctx.radio, ctx.bits, link(head.pos, next));
        if (next.is_base_station()) {
            m.packets_to_bs += out;
        } else {
            collected[next.node_id()] += out;
        }
    }

    if (spent) spent->assign(nodes.size(), 0.0);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (cost[i] <= 0.0) continue;
        const double dec = std::min(nodes[i].energy, cost[i]);
        nodes[i].energy = cost[i] >= nodes[i].energy ? 0.0 : nodes[i].energy - dec;
        m.energy_spent += dec;
        if (spent) (*spent)[i] = dec;
    }
    m.alive = static_cast<int>(std::count_if(nodes.begin(), nodes.end(), [](const Node& n) { return n.alive(); }));
    return m;
}

std::unique_ptr<Protocol> make_protocol(const SimConfig& config, const FieldPartition& fp,
                                        std::span<const Node> deployed)
{
    switch (config.protocol) {
    case ProtocolKind::DR: return std::make_unique<DrProtocol>(fp, deployed, DrOptions{config.relay});
    case ProtocolKind::LEACH: return std::make_unique<LeachProtocol>(config.ch_probability, deployed.size());
    case ProtocolKind::LEACH_C: return std::make_unique<LeachCProtocol>(config.ch_probability);
    }
    throw std::invalid_argument("unknown protocol");
}

namespace {

SimConfig checked(SimConfig config)
{
    config.validate();
    return config;
}

}  // namespace

Simulation::Simulation(SimConfig config)
    : config_(checked(std::move(config))), fp_(config_.field_length, config_.n_rings), rng_(config_.seed)
{
    nodes_ = deploy(config_, fp_, rng_);
    protocol_ = make_protocol(config_, fp_, nodes_);
    energy_ = {config_.radio, config_.packet_bits, config_.base_station(), config_.fixed_link_distance,
               config_.aggregation};
    for (const Node& n : nodes_) deployed_energy_ += n.energy;
}

Simulation::Simulation(SimConfig config, std::vector<Node> nodes)
    : config_(checked(std::move(config))), fp_(config_.field_length, config_.n_rings), rng_(config_.seed),
      nodes_(std::move(nodes))
{
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].id != static_cast<NodeId>(i)) {
            throw std::invalid_argument("Simulation: node ids must equal their index");
        }
        nodes_[i].region = fp_.locate(nodes_[i].pos);
    }
    protocol_ = make_protocol(config_, fp_, nodes_);
    energy_ = {config_.radio, config_.packet_bits, config_.base_station(), config_.fixed_link_distance,
               config_.aggregation};
    for (const Node& n : nodes_) deployed_energy_ += n.energy;
}

int Simulation::alive() const
{
    return static_cast<int>(std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.alive(); }));
}

bool Simulation::finished() const { return round_ >= config_.max_rounds || alive() == 0; }

Simulation::Step Simulation::step()
{
    Step s;
    ++round_;
    s.plan = protocol_->plan(nodes_, round_, rng_);
    s.metrics = run_round(nodes_, s.plan, energy_, &s.spent);
    // Clamped so float summation cannot report more than was deployed.
    cumulative_ = std::min(cumulative_ + s.metrics.energy_spent, deployed_energy_);
    s.metrics.cumulative_energy = cumulative_;
    return s;
}

RunSummary summarize(std::span<const RoundMetrics> series, int node_count, int max_rounds)
{
    const int last = series.empty() ? 0 : series.back().round;
    RunSummary s{-1, -1, -1, 0};
    for (const RoundMetrics& m : series) {
        s.total_packets += m.packets_to_bs;
        if (s.fnd < 0 && m.alive < node_count) s.fnd = m.round;
        if (s.hnd < 0 && 2 * m.alive <= node_count) s.hnd = m.round;
        if (s.lnd < 0 && m.alive == 0) s.lnd = m.round;
    }
    const int fallback = std::max(last, max_rounds);
    if (s.lnd < 0) s.lnd = fallback;
    if (s.hnd < 0) s.hnd = s.lnd;
    if (s.fnd < 0) s.fnd = s.hnd;
    return s;
}

RunResult run(const SimConfig& config)
{
    Simulation sim{config};
    RunResult r;
    while (!sim.finished()) {
        r.series.push_back(sim.step().metrics);
    }
    r.summary = summarize(r.series, static_cast<int>(sim.nodes().size()), config.max_rounds);
    return r;
}

double percent_improvement(double a, double b)
{
    if (b == 0.0) throw std::domain_error("percent_improvement: zero baseline");
    return (a - b) / b * 100.0;
}

MetricStats stats_of(std::vector<double> values)
{
    if (values.empty()) return {};
    MetricStats s;
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(values.size());
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    s.median = n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
    return s;
}

ProtocolAggregate aggregate(ProtocolKind protocol, std::span<const RunRecord> runs)
{
    std::vector<double> fnd, hnd, lnd, packets;
    for (const RunRecord& r : runs) {
        if (r.protocol != protocol) continue;
        fnd.push_back(r.summary.fnd);
        hnd.push_back(r.summary.hnd);
        lnd.push_back(r.summary.lnd);
        packets.push_back(static_cast<double>(r.summary.total_packets));
    }
    return {protocol, stats_of(fnd), stats_of(hnd), stats_of(lnd), stats_of(packets)};
}

Improvement compare(const ProtocolAggregate& a, const ProtocolAggregate& b)
{
    auto pct = [](const MetricStats& x, const MetricStats& y) {
        return MetricStats{percent_improvement(x.mean, y.mean), percent_improvement(x.median, y.median)};
    };
    return {a.protocol, b.protocol, pct(a.fnd, b.fnd), pct(a.hnd, b.hnd), pct(a.lnd, b.lnd),
            pct(a.total_packets, b.total_packets)};
}

ExperimentResult experiment(const SimConfig& config, std::span<const ProtocolKind> protocols)
{
    config.validate();
    ExperimentResult out;
    for (ProtocolKind p : protocols) {
        for (int i = 0; i < config.runs; ++i) {
            out.runs.push_back(RunRecord{p, config.seed + static_cast<std::uint64_t>(i), {}});
        }
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < out.runs.size(); i = next++) {
            SimConfig c = config;
            c.protocol = out.runs[i].protocol;
            c.seed = out.runs[i].seed;
            out.runs[i].summary = run(c).summary;
        }
    };
    unsigned workers = config.threads > 0 ? static_cast<unsigned>(config.threads) : std::thread::hardware_concurrency();
    workers = std::clamp<unsigned>(workers, 1u, static_cast<unsigned>(out.runs.size()));
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    pool.clear();

    for (ProtocolKind p : protocols) out.aggregates.push_back(aggregate(p, out.runs));
    for (std::size_t i = 0; i < out.aggregates.size(); ++i) {
        for (std::size_t j = i + 1; j < out.aggregates.size(); ++j) {
            out.improvements.push_back(compare(out.aggregates[i], out.aggregates[j]));
        }
    }
    return out;
}

ExperimentResult experiment(const SimConfig& config)
{
    constexpr ProtocolKind all[] = {ProtocolKind::DR, ProtocolKind::LEACH_C, ProtocolKind::LEACH};
    return experiment(config, all);
}

}  // namespace drsim

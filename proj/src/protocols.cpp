#include "drsim/protocols.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace drsim {

NodeId Destination::node_id() const
{
    if (is_base_station()) {
        throw std::logic_error("Destination: base station has no node id");
    }
    return id_;
}

std::string_view to_string(ProtocolKind kind)
{
    switch (kind) {
    case ProtocolKind::DR: return "dr";
    case ProtocolKind::LEACH: return "leach";
    case ProtocolKind::LEACH_C: return "leach-c";
    }
    return "unknown";
}

std::optional<ProtocolKind> parse_protocol(std::string_view name)
{
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "dr") return ProtocolKind::DR;
    if (lower == "leach") return ProtocolKind::LEACH;
    if (lower == "leach-c" || lower == "leach_c") return ProtocolKind::LEACH_C;
    return std::nullopt;
}

namespace {

void require_dense_ids(std::span<const Node> nodes)
{
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].id != static_cast<NodeId>(i)) {
            throw std::invalid_argument("node ids must equal their index in the population");
        }
    }
}

const Node& node_at(std::span<const Node> nodes, NodeId id) { return nodes[static_cast<std::size_t>(id)]; }

void require_round(int round)
{
    if (round < 1) {
        throw std::invalid_argument("rounds are numbered from 1");
    }
}

// Nearest CH among `heads` (ties to the smaller id, which is the scan order).
std::optional<NodeId> nearest_head(std::span<const Node> nodes, const std::vector<NodeId>& heads, Point from)
{
    std::optional<NodeId> best;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (NodeId h : heads) {
        const double d2 = distance_squared(from, node_at(nodes, h).pos);
        if (d2 < best_d2) {
            best_d2 = d2;
            best = h;
        }
    }
    return best;
}

// Members join the nearest head, or the BS when there is none; heads go to BS.
void assign_direct_clusters(RoundPlan& plan, std::span<const Node> nodes)
{
    std::sort(plan.cluster_heads.begin(), plan.cluster_heads.end());
    std::set<NodeId> heads(plan.cluster_heads.begin(), plan.cluster_heads.end());
    for (const Node& n : nodes) {
        if (!n.alive()) continue;
        if (heads.contains(n.id)) {
            plan.ch_next_hop.emplace(n.id, Destination::base_station());
            continue;
        }
        const auto h = nearest_head(nodes, plan.cluster_heads, n.pos);
        plan.memberships.emplace(n.id, h ? Destination::node(*h) : Destination::base_station());
    }
}

}  // namespace

std::optional<std::string> check_plan(const RoundPlan& plan, std::span<const Node> nodes)
{
    auto valid_id = [&](NodeId id) { return id >= 0 && static_cast<std::size_t>(id) < nodes.size(); };
    const std::set<NodeId> heads(plan.cluster_heads.begin(), plan.cluster_heads.end());
    if (heads.size() != plan.cluster_heads.size()) {
        return "duplicate cluster head";
    }
    for (NodeId h : heads) {
        if (!valid_id(h) || !node_at(nodes, h).alive()) return "cluster head " + std::to_string(h) + " is not alive";
        if (!plan.ch_next_hop.contains(h)) return "cluster head " + std::to_string(h) + " has no next hop";
        if (plan.memberships.contains(h)) return "cluster head " + std::to_string(h) + " is also a member";
    }
    for (const Node& n : nodes) {
        if (n.alive() && !heads.contains(n.id) && !plan.memberships.contains(n.id)) {
            return "alive node " + std::to_string(n.id) + " has no destination";
        }
    }
    for (const auto& [member, dest] : plan.memberships) {
        if (!valid_id(member) || !node_at(nodes, member).alive()) {
            return "dead or unknown node " + std::to_string(member) + " in memberships";
        }
        if (!dest.is_base_station() && !heads.contains(dest.node_id())) {
            return "node " + std::to_string(member) + " joins a non-head";
        }
    }
    for (const auto& [head, next] : plan.ch_next_hop) {
        if (!heads.contains(head)) return "next hop listed for non-head " + std::to_string(head);
        if (!next.is_base_station() && !heads.contains(next.node_id())) {
            return "head " + std::to_string(head) + " forwards to a non-head";
        }
    }
    for (NodeId h : heads) {
        Destination at = Destination::node(h);
        std::size_t hops = 0;
        while (!at.is_base_station()) {
            if (++hops > heads.size()) return "cycle in CH next hops through " + std::to_string(h);
            at = plan.ch_next_hop.at(at.node_id());
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- DR

DrRoster::DrRoster(const FieldPartition& fp, std::span<const Node> nodes) : ranked_(fp.size() + 1)
{
    for (const Node& n : nodes) {
        const Region& r = fp.region(n.region);
        if (r.kind == RegionKind::NonCorner) {
            ranked_[static_cast<std::size_t>(r.id)].push_back(n.id);
        }
    }
    for (std::size_t rid = 1; rid < ranked_.size(); ++rid) {
        const Point mid = fp.region(static_cast<RegionId>(rid)).midpoint;
        auto& ids = ranked_[rid];
        std::vector<std::pair<double, NodeId>> keyed;
        keyed.reserve(ids.size());
        for (NodeId id : ids) {
            const auto it = std::find_if(nodes.begin(), nodes.end(), [id](const Node& n) { return n.id == id; });
            keyed.emplace_back(distance(it->pos, mid), id);
        }
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = keyed[i].second;
    }
}

std::span<const NodeId> DrRoster::ranking(RegionId region) const
{
    if (region < 1 || static_cast<std::size_t>(region) >= ranked_.size()) {
        throw std::out_of_range("DrRoster: unknown region");
    }
    return ranked_[static_cast<std::size_t>(region)];
}

std::map<RegionId, NodeId> dr_select_chs(const DrRoster& roster, const FieldPartition& fp,
                                         std::span<const Node> nodes, int round)
{
    require_round(round);
    std::map<RegionId, NodeId> chs;
    std::map<NodeId, bool> alive;
    for (const Node& n : nodes) alive[n.id] = n.alive();

    for (const Region& r : fp.regions()) {
        if (r.kind != RegionKind::NonCorner) continue;
        const auto ranked = roster.ranking(r.id);
        const std::size_t pop = ranked.size();
        if (pop == 0) continue;
        const std::size_t start = static_cast<std::size_t>(round - 1) % pop;
        for (std::size_t i = 0; i < pop; ++i) {
            const NodeId id = ranked[(start + i) % pop];
            const auto it = alive.find(id);
            if (it != alive.end() && it->second) {
                chs.emplace(r.id, id);
                break;
            }
        }
    }
    return chs;
}

std::map<RegionId, NodeId> dr_select_chs(const FieldPartition& fp, std::span<const Node> nodes, int round)
{
    return dr_select_chs(DrRoster{fp, nodes}, fp, nodes, round);
}

RoundPlan dr_build_plan(const FieldPartition& fp, const DrRoster& roster, std::span<const Node> nodes, int round,
                        const DrOptions& options)
{
    require_dense_ids(nodes);
    RoundPlan plan;
    plan.round = round;
    plan.ch_assignments = dr_select_chs(roster, fp, nodes, round);

    std::set<NodeId> heads;
    for (const auto& [rid, nid] : plan.ch_assignments) {
        heads.insert(nid);
        plan.cluster_heads.push_back(nid);
    }
    std::sort(plan.cluster_heads.begin(), plan.cluster_heads.end());

    const Point bs = fp.center();
    for (const auto& [rid, head] : plan.ch_assignments) {
        const Region& r = fp.region(rid);
        Destination next = Destination::base_station();
        if (options.relay && r.ring >= 2) {
            const auto inner = plan.ch_assignments.find(fp.inward_adjacent_ncr(rid));
            if (inner != plan.ch_assignments.end()) next = Destination::node(inner->second);
        }
        plan.ch_next_hop.emplace(head, next);
    }

    for (const Node& n : nodes) {
        if (!n.alive() || heads.contains(n.id)) continue;
        const Region& r = fp.region(n.region);
        switch (r.kind) {
        case RegionKind::Central: plan.memberships.emplace(n.id, Destination::base_station()); break;
        case RegionKind::NonCorner: plan.memberships.emplace(n.id, Destination::node(plan.ch_assignments.at(r.id))); break;
        case RegionKind::Corner: {
            Destination best = Destination::base_station();
            double best_d = distance(n.pos, bs);
            double best_energy = std::numeric_limits<double>::infinity();
            for (RegionId neighbor : fp.cr_neighbor_ncrs(r.id)) {
                const auto it = plan.ch_assignments.find(neighbor);
                if (it == plan.ch_assignments.end()) continue;
                const Node& head = node_at(nodes, it->second);
                const double d = distance(n.pos, head.pos);
                const bool tie = std::abs(d - best_d) <= options.tie_tolerance;
                // On a tie the BS always wins; between two heads the richer one does.
                const bool better = tie ? (!best.is_base_station() &&
                                           (head.energy > best_energy ||
                                            (head.energy == best_energy && head.id < best.node_id())))
                                        : d < best_d;
                if (better) {
                    best = Destination::node(head.id);
                    best_d = d;
                    best_energy = head.energy;
                }
            }
            plan.memberships.emplace(n.id, best);
            break;
        }
        }
    }
    return plan;
}

RoundPlan dr_build_plan(const FieldPartition& fp, std::span<const Node> nodes, int round, const DrOptions& options)
{
    return dr_build_plan(fp, DrRoster{fp, nodes}, nodes, round, options);
}

DrProtocol::DrProtocol(FieldPartition fp, std::span<const Node> deployed, DrOptions options)
    : fp_(std::move(fp)), roster_(fp_, deployed), options_(options)
{
}

RoundPlan DrProtocol::plan(std::span<const Node> nodes, int round, Rng& /*rng*/)
{
    return dr_build_plan(fp_, roster_, nodes, round, options_);
}

// ---------------------------------------------------------------- LEACH

namespace {

int leach_epoch(double p)
{
    if (!(p > 0.0 && p < 1.0)) {
        throw std::invalid_argument("CH probability must lie in (0, 1)");
    }
    return static_cast<int>(std::floor(1.0 / p));
}

constexpr int kNeverElected = std::numeric_limits<int>::min() / 2;

}  // namespace

double leach_threshold(double p, int round)
{
    const int epoch = leach_epoch(p);
    return p / (1.0 - p * static_cast<double>(round % epoch));
}

RoundPlan leach_build_plan(std::span<const Node> nodes, int round, double p, Rng& rng,
                           std::vector<int>& last_elected)
{
    require_round(round);
    require_dense_ids(nodes);
    const int epoch = leach_epoch(p);
    if (last_elected.size() < nodes.size()) {
        last_elected.resize(nodes.size(), kNeverElected);
    }
    const double threshold = leach_threshold(p, round);
    const int epoch_start = round - round % epoch;
    std::uniform_real_distribution<double> uniform(0.0, 1.0);

    RoundPlan plan;
    plan.round = round;
    for (const Node& n : nodes) {
        if (!n.alive()) continue;
        int& last = last_elected[static_cast<std::size_t>(n.id)];
        // Eligibility resets at every epoch boundary (round multiple of 1/p).
        if (last >= epoch_start) continue;
        if (uniform(rng) < threshold) {
            plan.cluster_heads.push_back(n.id);
            last = round;
        }
    }
    assign_direct_clusters(plan, nodes);
    return plan;
}

LeachProtocol::LeachProtocol(double p, std::size_t node_count)
    : p_(p), last_elected_(node_count, kNeverElected)
{
}

RoundPlan LeachProtocol::plan(std::span<const Node> nodes, int round, Rng& rng)
{
    return leach_build_plan(nodes, round, p_, rng, last_elected_);
}

// ---------------------------------------------------------------- LEACH-C

RoundPlan leach_c_build_plan(std::span<const Node> nodes, int round, double p)
{
    require_round(round);
    require_dense_ids(nodes);
    leach_epoch(p);

    RoundPlan plan;
    plan.round = round;

    std::vector<NodeId> alive;
    double total_energy = 0.0;
    for (const Node& n : nodes) {
        if (n.alive()) {
            alive.push_back(n.id);
            total_energy += n.energy;
        }
    }
    if (alive.empty()) return plan;

    const double mean = total_energy / static_cast<double>(alive.size());
    std::vector<NodeId> candidates;
    for (NodeId id : alive) {
        if (node_at(nodes, id).energy >= mean) candidates.push_back(id);
    }
    // Rounding can leave the mean fractionally above every node's energy.
    if (candidates.empty()) candidates = alive;

    const auto wanted = std::max<long>(1, std::lround(p * static_cast<double>(alive.size())));
    const std::size_t k = std::min(static_cast<std::size_t>(wanted), candidates.size());

    std::vector<double> nearest(alive.size(), std::numeric_limits<double>::infinity());
    std::vector<bool> taken(candidates.size(), false);
    for (std::size_t step = 0; step < k; ++step) {
        std::size_t best = candidates.size();
        double best_cost = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            if (taken[c]) continue;
            const Point cp = node_at(nodes, candidates[c]).pos;
            double cost = 0.0;
            for (std::size_t i = 0; i < alive.size(); ++i) {
                cost += std::min(nearest[i], distance_squared(node_at(nodes, alive[i]).pos, cp));
            }
            if (cost < best_cost) {
                best_cost = cost;
                best = c;
            }
        }
        taken[best] = true;
        const Point cp = node_at(nodes, candidates[best]).pos;
        for (std::size_t i = 0; i < alive.size(); ++i) {
            nearest[i] = std::min(nearest[i], distance_squared(node_at(nodes, alive[i]).pos, cp));
        }
        plan.cluster_heads.push_back(candidates[best]);
    }
    assign_direct_clusters(plan, nodes);
    return plan;
}

LeachCProtocol::LeachCProtocol(double p) : p_(p) { leach_epoch(p); }

RoundPlan LeachCProtocol::plan(std::span<const Node> nodes, int round, Rng& /*rng*/)
{
    return leach_c_build_plan(nodes, round, p_);
}

}  // namespace drsim

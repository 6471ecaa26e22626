#pragma once

#include "drsim/geometry.hpp"

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace drsim {

using NodeId = int;
using Rng = std::mt19937_64;

/// A deployed sensor. Node ids equal their index in the population vector.
struct Node {
    NodeId id = 0;
    Point pos;
    double energy = 0.0;
    RegionId region = 0;

    bool alive() const { return energy > 0.0; }
};

/// Where a packet goes next: the base station or another node.
class Destination {
public:
    static constexpr Destination base_station() { return Destination{-1}; }
    static constexpr Destination node(NodeId id) { return Destination{id}; }

    constexpr bool is_base_station() const { return id_ < 0; }
    NodeId node_id() const;

    friend constexpr bool operator==(Destination, Destination) = default;

private:
    constexpr explicit Destination(NodeId id) : id_(id) {}
    NodeId id_;
};

struct RoundPlan {
    int round = 0;
    /// Every cluster head of the round, ascending by id.
    std::vector<NodeId> cluster_heads;
    /// DR only: the cluster head elected in each non-central NCR.
    std::map<RegionId, NodeId> ch_assignments;
    /// Alive non-CH node -> CH or BS.
    std::map<NodeId, Destination> memberships;
    /// CH -> next CH on the path to the BS, or the BS itself.
    std::map<NodeId, Destination> ch_next_hop;

    std::size_t ch_count() const { return cluster_heads.size(); }
};

enum class ProtocolKind { DR, LEACH, LEACH_C };

std::string_view to_string(ProtocolKind kind);
/// Accepts "dr", "leach", "leach-c" (case-insensitive).
std::optional<ProtocolKind> parse_protocol(std::string_view name);

/// Checks the structural invariants every plan must satisfy: each alive
/// non-CH is a member exactly once, every destination is alive or the BS,
/// and the CH next-hop graph reaches the BS without cycles. Returns a
/// description of the first violation, or nullopt.
std::optional<std::string> check_plan(const RoundPlan& plan, std::span<const Node> nodes);

class Protocol {
public:
    virtual ~Protocol() = default;
    virtual ProtocolKind kind() const = 0;
    /// Builds the plan for `round` (1-based) over the current population.
    virtual RoundPlan plan(std::span<const Node> nodes, int round, Rng& rng) = 0;
};

// ---------------------------------------------------------------- DR

/// Fixed per-region ranking of nodes by distance to the region midpoint
/// (ties to the smaller id). Built once at deployment; dead nodes keep their
/// rank and are skipped at election time.
class DrRoster {
public:
    DrRoster(const FieldPartition& fp, std::span<const Node> nodes);

    /// Ranked node ids of a non-central NCR (empty for other regions).
    std::span<const NodeId> ranking(RegionId region) const;

private:
    std::vector<std::vector<NodeId>> ranked_;
};

/// Round-r CH per populated non-central NCR: the node at rank (r-1) mod
/// population, advancing cyclically past dead nodes.
std::map<RegionId, NodeId> dr_select_chs(const DrRoster& roster, const FieldPartition& fp,
                                         std::span<const Node> nodes, int round);
std::map<RegionId, NodeId> dr_select_chs(const FieldPartition& fp, std::span<const Node> nodes, int round);

struct DrOptions {
    /// Outer-ring CHs forward through the inward CH. When false every CH
    /// sends straight to the BS.
    bool relay = true;
    /// Distance tolerance for the corner-node tie-break on residual energy.
    double tie_tolerance = 1e-9;
};

RoundPlan dr_build_plan(const FieldPartition& fp, const DrRoster& roster, std::span<const Node> nodes, int round,
                        const DrOptions& options = {});
RoundPlan dr_build_plan(const FieldPartition& fp, std::span<const Node> nodes, int round,
                        const DrOptions& options = {});

class DrProtocol final : public Protocol {
public:
    DrProtocol(FieldPartition fp, std::span<const Node> deployed, DrOptions options = {});

    ProtocolKind kind() const override { return ProtocolKind::DR; }
    RoundPlan plan(std::span<const Node> nodes, int round, Rng& rng) override;

private:
    FieldPartition fp_;
    DrRoster roster_;
    DrOptions options_;
};

// ---------------------------------------------------------------- LEACH

/// Election threshold p / (1 - p (r mod floor(1/p))).
double leach_threshold(double p, int round);

/// Distributed LEACH election. Epochs of floor(1/p) rounds start at round
/// multiples of floor(1/p); a node serves as CH at most once per epoch.
class LeachProtocol final : public Protocol {
public:
    LeachProtocol(double p, std::size_t node_count);

    ProtocolKind kind() const override { return ProtocolKind::LEACH; }
    RoundPlan plan(std::span<const Node> nodes, int round, Rng& rng) override;

private:
    double p_;
    std::vector<int> last_elected_;
};

/// `last_elected` is indexed by node id and updated in place.
RoundPlan leach_build_plan(std::span<const Node> nodes, int round, double p, Rng& rng,
                           std::vector<int>& last_elected);

// ---------------------------------------------------------------- LEACH-C

/// Centralised election: k = max(1, round(p * alive)) heads chosen greedily
/// among nodes at or above mean residual energy, each step adding the
/// candidate that most reduces total squared member-to-nearest-CH distance.
RoundPlan leach_c_build_plan(std::span<const Node> nodes, int round, double p);

class LeachCProtocol final : public Protocol {
public:
    explicit LeachCProtocol(double p);

    ProtocolKind kind() const override { return ProtocolKind::LEACH_C; }
    RoundPlan plan(std::span<const Node> nodes, int round, Rng& rng) override;

private:
    double p_;
};

}  // namespace drsim

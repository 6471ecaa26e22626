#include "drsim/geometry.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

namespace drsim {

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

double distance_squared(Point a, Point b)
{
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

Rect::Rect(Point min_corner, Point max_corner) : min_(min_corner), max_(max_corner)
{
    if (!(std::isfinite(min_.x) && std::isfinite(min_.y) && std::isfinite(max_.x) && std::isfinite(max_.y))) {
        throw std::invalid_argument("Rect: non-finite corner");
    }
    if (!(min_.x < max_.x && min_.y < max_.y)) {
        throw std::invalid_argument("Rect: min corner must be strictly below max corner");
    }
}

Point Rect::centroid() const { return {0.5 * (min_.x + max_.x), 0.5 * (min_.y + max_.y)}; }

bool Rect::contains(Point p) const
{
    return p.x >= min_.x && p.x <= max_.x && p.y >= min_.y && p.y <= max_.y;
}

std::string_view to_string(RegionKind kind)
{
    switch (kind) {
    case RegionKind::Central: return "central";
    case RegionKind::NonCorner: return "noncorner";
    case RegionKind::Corner: return "corner";
    }
    return "unknown";
}

std::string_view to_string(Side side)
{
    switch (side) {
    case Side::East: return "E";
    case Side::North: return "N";
    case Side::West: return "W";
    case Side::South: return "S";
    case Side::NorthEast: return "NE";
    case Side::NorthWest: return "NW";
    case Side::SouthWest: return "SW";
    case Side::SouthEast: return "SE";
    case Side::None: return "-";
    }
    return "?";
}

Rect square_corners(Point center, double half_side)
{
    if (!(half_side > 0.0)) {
        throw std::invalid_argument("square_corners: half side must be positive");
    }
    return Rect{{center.x - half_side, center.y - half_side}, {center.x + half_side, center.y + half_side}};
}

namespace {

constexpr Side kNcrOrder[] = {Side::East, Side::North, Side::West, Side::South};
constexpr Side kCornerOrder[] = {Side::NorthEast, Side::NorthWest, Side::SouthWest, Side::SouthEast};

int side_index(Side s)
{
    switch (s) {
    case Side::East:
    case Side::NorthEast: return 0;
    case Side::North:
    case Side::NorthWest: return 1;
    case Side::West:
    case Side::SouthWest: return 2;
    case Side::South:
    case Side::SouthEast: return 3;
    case Side::None: break;
    }
    throw std::invalid_argument("side_index: no compass side");
}

}  // namespace

FieldPartition::FieldPartition(double field_length, int rings) : field_length_(field_length), rings_(rings)
{
    if (!(field_length > 0.0) || !std::isfinite(field_length)) {
        throw std::invalid_argument("build_partition: field length must be positive");
    }
    if (rings < 2) {
        throw std::invalid_argument("build_partition: need at least 2 concentric squares, got " +
                                    std::to_string(rings));
    }
    d_ = field_length / (2.0 * rings);
    center_ = {edge(rings), edge(rings)};

    const int n = rings;
    regions_.reserve(static_cast<std::size_t>(8 * n - 7));
    auto add = [&](RegionKind kind, int ring, Side side, int x0, int x1, int y0, int y1) {
        Rect r{{edge(x0), edge(y0)}, {edge(x1), edge(y1)}};
        regions_.push_back(Region{static_cast<RegionId>(regions_.size() + 1), kind, ring, side, r, r.centroid()});
    };

    add(RegionKind::Central, 0, Side::None, n - 1, n + 1, n - 1, n + 1);
    for (int k = 1; k < n; ++k) {
        const int lo = n - k, hi = n + k;
        add(RegionKind::NonCorner, k, Side::East, hi, hi + 1, lo, hi);
        add(RegionKind::NonCorner, k, Side::North, lo, hi, hi, hi + 1);
        add(RegionKind::NonCorner, k, Side::West, lo - 1, lo, lo, hi);
        add(RegionKind::NonCorner, k, Side::South, lo, hi, lo - 1, lo);
        add(RegionKind::Corner, k, Side::NorthEast, hi, hi + 1, hi, hi + 1);
        add(RegionKind::Corner, k, Side::NorthWest, lo - 1, lo, hi, hi + 1);
        add(RegionKind::Corner, k, Side::SouthWest, lo - 1, lo, lo - 1, lo);
        add(RegionKind::Corner, k, Side::SouthEast, hi, hi + 1, lo - 1, lo);
    }
}

// Grid line `step` of 2n equal steps across the field; exact at 0 and L.
double FieldPartition::edge(int step) const { return field_length_ * step / (2.0 * rings_); }

Rect FieldPartition::field() const { return Rect{{0.0, 0.0}, {field_length_, field_length_}}; }

const Region& FieldPartition::region(RegionId id) const
{
    if (id < 1 || static_cast<std::size_t>(id) > regions_.size()) {
        throw std::out_of_range("FieldPartition: unknown region id " + std::to_string(id));
    }
    return regions_[static_cast<std::size_t>(id - 1)];
}

RegionId FieldPartition::locate(Point p) const
{
    if (!field().contains(p)) {
        throw std::out_of_range("locate: point outside the field");
    }
    for (const Region& r : regions_) {
        if (r.bounds.contains(p)) {
            return r.id;
        }
    }
    throw std::logic_error("locate: partition does not cover the field");
}

RegionId FieldPartition::ncr_id(int ring, Side side) const
{
    if (ring < 1 || ring >= rings_) {
        throw std::out_of_range("ncr_id: ring out of range");
    }
    const int idx = side_index(side);
    if (kNcrOrder[idx] != side) {
        throw std::invalid_argument("ncr_id: expected E/N/W/S");
    }
    return 2 + 8 * (ring - 1) + idx;
}

RegionId FieldPartition::corner_id(int ring, Side quadrant) const
{
    if (ring < 1 || ring >= rings_) {
        throw std::out_of_range("corner_id: ring out of range");
    }
    const int idx = side_index(quadrant);
    if (kCornerOrder[idx] != quadrant) {
        throw std::invalid_argument("corner_id: expected NE/NW/SW/SE");
    }
    return 6 + 8 * (ring - 1) + idx;
}

RegionId FieldPartition::inward_adjacent_ncr(RegionId id) const
{
    const Region& r = region(id);
    if (r.kind != RegionKind::NonCorner) {
        throw std::invalid_argument("inward_adjacent_ncr: region " + std::to_string(id) + " is not a non-corner region");
    }
    if (r.ring == 1) {
        return 1;
    }
    return ncr_id(r.ring - 1, r.side);
}

std::vector<RegionId> FieldPartition::cr_neighbor_ncrs(RegionId id) const
{
    const Region& r = region(id);
    if (r.kind != RegionKind::Corner) {
        throw std::invalid_argument("cr_neighbor_ncrs: region " + std::to_string(id) + " is not a corner region");
    }
    switch (r.side) {
    case Side::NorthEast: return {ncr_id(r.ring, Side::East), ncr_id(r.ring, Side::North)};
    case Side::NorthWest: return {ncr_id(r.ring, Side::North), ncr_id(r.ring, Side::West)};
    case Side::SouthWest: return {ncr_id(r.ring, Side::West), ncr_id(r.ring, Side::South)};
    case Side::SouthEast: return {ncr_id(r.ring, Side::East), ncr_id(r.ring, Side::South)};
    default: break;
    }
    throw std::logic_error("cr_neighbor_ncrs: corner without quadrant");
}

FieldPartition build_partition(double field_length, int rings) { return FieldPartition{field_length, rings}; }

void write_partition_csv(std::ostream& out, const FieldPartition& fp)
{
    out << "region_id,kind,ring,min_x,min_y,max_x,max_y,mid_x,mid_y\n";
    char buf[256];
    for (const Region& r : fp.regions()) {
        const Point lo = r.bounds.min_corner();
        const Point hi = r.bounds.max_corner();
        std::snprintf(buf, sizeof buf, "%d,%s,%d,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f\n", r.id,
                      std::string(to_string(r.kind)).c_str(), r.ring, lo.x, lo.y, hi.x, hi.y, r.midpoint.x,
                      r.midpoint.y);
        out << buf;
    }
}

}  // namespace drsim

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

namespace drsim {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

double distance(Point a, Point b);
double distance_squared(Point a, Point b);

/// Axis-aligned rectangle with strictly positive area. Containment is
/// boundary-inclusive.
class Rect {
public:
    Rect(Point min_corner, Point max_corner);

    Point min_corner() const { return min_; }
    Point max_corner() const { return max_; }
    double width() const { return max_.x - min_.x; }
    double height() const { return max_.y - min_.y; }
    double area() const { return width() * height(); }
    Point centroid() const;
    bool contains(Point p) const;

    friend bool operator==(const Rect&, const Rect&) = default;

private:
    Point min_;
    Point max_;
};

using RegionId = int;

enum class RegionKind : std::uint8_t { Central, NonCorner, Corner };

/// Compass side of a non-corner region, or quadrant of a corner region.
enum class Side : std::uint8_t { East, North, West, South, NorthEast, NorthWest, SouthWest, SouthEast, None };

std::string_view to_string(RegionKind kind);
std::string_view to_string(Side side);

struct Region {
    RegionId id = 0;
    RegionKind kind = RegionKind::Central;
    int ring = 0;
    Side side = Side::None;
    Rect bounds;
    Point midpoint;
};

/// Returns the square of half-side `half_side` centred on `center`.
/// Throws std::invalid_argument when half_side <= 0.
Rect square_corners(Point center, double half_side);

/// Concentric-square partition of an L x L field into one central square,
/// 4(n-1) non-corner rectangles and 4(n-1) corner squares.
///
/// Ids are dense and start at 1: id 1 is the central square, then for each
/// ring k = 1..n-1 the East, North, West and South non-corner regions
/// followed by the NE, NW, SW and SE corners.
class FieldPartition {
public:
    FieldPartition(double field_length, int rings);

    double field_length() const { return field_length_; }
    int rings() const { return rings_; }
    double distance_factor() const { return d_; }
    Point center() const { return center_; }
    Rect field() const;

    std::span<const Region> regions() const { return regions_; }
    const Region& region(RegionId id) const;
    std::size_t size() const { return regions_.size(); }

    /// Region containing p. Points on shared edges go to the smaller id.
    /// Throws std::out_of_range for points outside the field.
    RegionId locate(Point p) const;

    /// Same-side non-corner region one ring inward; the central region for
    /// ring 1. Throws std::invalid_argument for central or corner regions.
    RegionId inward_adjacent_ncr(RegionId id) const;

    /// The two same-ring non-corner regions sharing an edge with a corner.
    std::vector<RegionId> cr_neighbor_ncrs(RegionId id) const;

    RegionId ncr_id(int ring, Side side) const;
    RegionId corner_id(int ring, Side quadrant) const;

private:
    double edge(int step) const;

    double field_length_;
    int rings_;
    double d_;
    Point center_;
    std::vector<Region> regions_;
};

FieldPartition build_partition(double field_length, int rings);

/// CSV dump: region_id,kind,ring,min_x,min_y,max_x,max_y,mid_x,mid_y.
void write_partition_csv(std::ostream& out, const FieldPartition& fp);

}  // namespace drsim

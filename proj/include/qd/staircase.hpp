#pragma once

#include <optional>
#include <vector>

#include "qd/path.hpp"
#include "qd/region.hpp"

namespace qd {

// The four monotone direction classes of infinite staircase paths.
enum class StairClass { UpRight, UpLeft, DownRight, DownLeft };

// A run (m, l): move m vertically then l horizontally, in the class's
// directions. m1, l1 >= 0 and m_k, l_k >= 1 for k >= 2.
struct StairSegment {
    int m = 0;
    int l = 0;
};

// How the path continues past the listed segments.
enum class StairTail {
    RepeatLast,  // repeat the final (m,l) pair forever (requires m,l >= 1)
    Vertical,    // straight vertical ray
    Horizontal,  // straight horizontal ray
};

// An infinite monotone staircase path from an origin. Only finite prefixes
// are ever materialized: truncate_at(rect) emits edges until the path first
// meets the boundary of the rectangle.
class StaircasePath {
  public:
    StaircasePath(StairClass cls, Vec2 origin, std::vector<StairSegment> segments,
                  StairTail tail);

    static StaircasePath vertical_ray(Vec2 origin, bool up);
    static StaircasePath horizontal_ray(Vec2 origin, bool right);

    StairClass stair_class() const { return cls_; }
    Vec2 origin() const { return origin_; }
    const std::vector<StairSegment>& segments() const { return segments_; }
    StairTail tail() const { return tail_; }

    // First vertical run length m_1 (the quantity case analyses refer to).
    int first_vertical_run() const;

    // Emits successive vertices of the path: index 0 is the origin.
    // Cheap enough for desk horizons; throws if the tail cannot continue.
    Vec2 vertex_at(size_t i) const;

    // The finite portion p^{(N)} from the origin to the first vertex on the
    // perimeter of `rect`, together with that vertex w^{(N)}.
    std::pair<PathOfEdges, Vec2> truncate_at(const RectangleRegion& rect) const;

    friend bool operator==(const StaircasePath& a, const StaircasePath& b);

  private:
    // Unit steps of the class.
    Vec2 vstep() const;
    Vec2 hstep() const;

    StairClass cls_;
    Vec2 origin_;
    std::vector<StairSegment> segments_;
    StairTail tail_;
};

int edge_sign_for_direction(StairClass cls, bool vertical);

}  // namespace qd

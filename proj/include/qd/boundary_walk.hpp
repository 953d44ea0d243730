#pragma once

#include <functional>
#include <vector>

#include "qd/geometry.hpp"
#include "qd/path.hpp"

namespace qd {

// Square occupancy predicate: occupied(a,b) <=> S_(a,b) belongs to the region.
using SquarePredicate = std::function<bool(int, int)>;

// Directions are unit vectors; the squares flanking a directed edge from v:
// left(v,d) is on the left of travel, right(v,d) on the right.
Vec2 left_square_of(Vec2 v, Vec2 d);
Vec2 right_square_of(Vec2 v, Vec2 d);

// Walks the boundary of a square region counterclockwise (region on the left)
// starting at `start`. For a finite region, stops when returning to `start`
// and yields the closed boundary cycle; `max_steps` guards infinite regions
// (used with a cap to emit just a prefix). Throws GeometryError if the walk
// ever branches (pinch point) or dead-ends.
PathOfEdges boundary_walk_ccw(const SquarePredicate& occupied, Vec2 start, size_t max_steps,
                              bool stop_at_start = true);

}  // namespace qd

#include "qd/staircase.hpp"

#include <stdexcept>

#include "qd/errors.hpp"

namespace qd {

StaircasePath::StaircasePath(StairClass cls, Vec2 origin, std::vector<StairSegment> segments,
                             StairTail tail)
    : cls_(cls), origin_(origin), segments_(std::move(segments)), tail_(tail) {
    for (size_t k = 0; k < segments_.size(); ++k) {
        const auto& s = segments_[k];
        const bool final_partial = (k + 1 == segments_.size() && tail_ != StairTail::RepeatLast);
        if (s.m < 0 || s.l < 0) throw std::invalid_argument("negative staircase run");
        if (k > 0 && s.m < 1) throw std::invalid_argument("later staircase runs must have m >= 1");
        if (k > 0 && s.l < 1 && !final_partial)
            throw std::invalid_argument("later staircase runs must have l >= 1");
    }
    if (tail_ == StairTail::RepeatLast) {
        if (segments_.empty() || segments_.back().m < 1 || segments_.back().l < 1)
            throw std::invalid_argument("RepeatLast requires a final run with m,l >= 1");
    }
}

StaircasePath StaircasePath::vertical_ray(Vec2 origin, bool up) {
    return StaircasePath(up ? StairClass::UpRight : StairClass::DownRight, origin, {},
                         StairTail::Vertical);
}

StaircasePath StaircasePath::horizontal_ray(Vec2 origin, bool right) {
    return StaircasePath(right ? StairClass::UpRight : StairClass::UpLeft, origin, {},
                         StairTail::Horizontal);
}

int StaircasePath::first_vertical_run() const {
    if (tail_ == StairTail::Vertical && segments_.empty()) return -1;  // infinite
    return segments_.empty() ? 0 : segments_.front().m;
}

Vec2 StaircasePath::vstep() const {
    return (cls_ == StairClass::UpRight || cls_ == StairClass::UpLeft) ? Vec2{0, 1} : Vec2{0, -1};
}

Vec2 StaircasePath::hstep() const {
    return (cls_ == StairClass::UpRight || cls_ == StairClass::DownRight) ? Vec2{1, 0}
                                                                          : Vec2{-1, 0};
}

Vec2 StaircasePath::vertex_at(size_t i) const {
    Vec2 v = origin_;
    size_t left = i;
    size_t k = 0;
    while (left > 0) {
        StairSegment seg;
        if (k < segments_.size()) {
            seg = segments_[k];
        } else {
            switch (tail_) {
                case StairTail::RepeatLast: seg = segments_.back(); break;
                case StairTail::Vertical: seg = {int(left), 0}; break;
                case StairTail::Horizontal: seg = {0, int(left)}; break;
            }
        }
        ++k;
        for (int j = 0; j < seg.m && left > 0; ++j, --left) v = v + vstep();
        for (int j = 0; j < seg.l && left > 0; ++j, --left) v = v + hstep();
    }
    return v;
}

int edge_sign_for_direction(StairClass cls, bool vertical) {
    const bool up = cls == StairClass::UpRight || cls == StairClass::UpLeft;
    const bool right = cls == StairClass::UpRight || cls == StairClass::DownRight;
    return vertical ? (up ? +1 : -1) : (right ? +1 : -1);
}

std::pair<PathOfEdges, Vec2> StaircasePath::truncate_at(const RectangleRegion& rect) const {
    if (!rect.contains_vertex(origin_))
        throw GeometryError("staircase origin outside the rectangle");
    PathOfEdges path(origin_);
    Vec2 v = origin_;
    const size_t cap = size_t(8) * (rect.xmax() + rect.ymax() + 2);
    for (size_t i = 1; i <= cap; ++i) {
        if (rect.vertex_on_perimeter(v)) return {path, v};
        Vec2 w = vertex_at(i);  // desk horizons; quadratic cost is irrelevant here
        const bool vertical = (w.x == v.x);
        const int sign = edge_sign_for_direction(cls_, vertical);
        Edge e = vertical ? v_edge(w.x, std::min(v.y, w.y)) : h_edge(std::min(v.x, w.x), v.y);
        path.push(e, sign);
        v = w;
    }
    throw GeometryError("staircase never reaches the rectangle boundary");
}

bool operator==(const StaircasePath& a, const StaircasePath& b) {
    return a.cls_ == b.cls_ && a.origin_ == b.origin_ && a.tail_ == b.tail_ &&
           a.segments_.size() == b.segments_.size() &&
           std::equal(a.segments_.begin(), a.segments_.end(), b.segments_.begin(),
                      [](auto x, auto y) { return x.m == y.m && x.l == y.l; });
}

}  // namespace qd

#include "qd/path.hpp"

#include <unordered_set>

#include "qd/errors.hpp"

namespace qd {

PathOfEdges::PathOfEdges(Vec2 origin, std::vector<Step> steps) : origin_(origin), target_(origin) {
    steps_.reserve(steps.size());
    for (const Step& s : steps) push(s);
}

void PathOfEdges::push(Step s) {
    if (steps_.empty()) {
        if (s.from() != origin_) throw InvalidCompositionError("step does not start at origin");
    } else if (s.from() != target_) {
        throw InvalidCompositionError("step does not continue the path");
    }
    steps_.push_back(s);
    target_ = s.to();
}

bool PathOfEdges::is_self_avoiding() const {
    std::unordered_set<Vec2, Vec2Hash> seen;
    seen.insert(origin_);
    for (const Step& s : steps_) {
        if (!seen.insert(s.to()).second) return false;
    }
    return true;
}

bool PathOfEdges::is_simple_loop() const {
    if (steps_.empty() || target_ != origin_) return false;
    std::unordered_set<Vec2, Vec2Hash> seen;
    seen.insert(origin_);
    for (size_t i = 0; i + 1 < steps_.size(); ++i) {
        if (!seen.insert(steps_[i].to()).second) return false;
    }
    return true;
}

PathOfEdges compose(const PathOfEdges& p, const PathOfEdges& q) {
    if (p.target() != q.origin())
        throw InvalidCompositionError("compose: target of first != origin of second");
    PathOfEdges out(p.origin());
    for (const Step& s : p.steps()) out.push(s);
    for (const Step& s : q.steps()) out.push(s);
    return out;
}

PathOfEdges inverse(const PathOfEdges& p) {
    PathOfEdges out(p.target());
    for (size_t i = p.size(); i-- > 0;) {
        Step s = p.steps()[i];
        out.push(Step{s.edge, -s.sign});
    }
    return out;
}

PathOfEdges plaquette_loop(const Plaquette& p) {
    PathOfEdges loop(p.corner);
    loop.push(p.bottom(), +1);
    loop.push(p.right(), +1);
    loop.push(p.top(), -1);
    loop.push(p.left(), -1);
    return loop;
}

int holonomy(const PathOfEdges& p, const Configuration& c, const Region& region,
             const GroupTable& G) {
    return holonomy_with(p, G, [&](const Edge& e) {
        int i = region.edge_index(e);
        if (i < 0) throw IncompleteConfigurationError("path visits unlabeled edge " + to_string(e));
        return int(c[i]);
    });
}

}  // namespace qd

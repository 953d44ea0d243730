#pragma once

#include <vector>

#include "qd/config.hpp"
#include "qd/geometry.hpp"
#include "qd/group.hpp"

namespace qd {

struct Step {
    Edge edge;
    int sign = +1;  // +1 along the edge orientation, -1 against it

    Vec2 from() const { return edge.endpoint(-sign); }
    Vec2 to() const { return edge.endpoint(sign); }
    friend bool operator==(const Step&, const Step&) = default;
};

// A path of edges: consecutive steps must connect, v_{e_i,s_i} = v_{e_{i+1},-s_{i+1}}.
class PathOfEdges {
  public:
    PathOfEdges() = default;
    explicit PathOfEdges(Vec2 origin) : origin_(origin), target_(origin) {}
    PathOfEdges(Vec2 origin, std::vector<Step> steps);

    const std::vector<Step>& steps() const { return steps_; }
    Vec2 origin() const { return origin_; }
    Vec2 target() const { return target_; }
    bool empty() const { return steps_.empty(); }
    size_t size() const { return steps_.size(); }

    // Appends a step; its start must match the current target.
    void push(Step s);
    void push(Edge e, int sign) { push(Step{e, sign}); }

    // All visited vertices distinct (self-avoiding), or distinct except
    // origin == target (loop).
    bool is_self_avoiding() const;
    bool is_simple_loop() const;

  private:
    Vec2 origin_;
    Vec2 target_;
    std::vector<Step> steps_;
};

PathOfEdges compose(const PathOfEdges& p, const PathOfEdges& q);
PathOfEdges inverse(const PathOfEdges& p);

// The loop around S_(a,b) in the order (a,b)-(a+1,b)-(a+1,b+1)-(a,b+1)-(a,b).
PathOfEdges plaquette_loop(const Plaquette& p);

// Ordered product of edge labels raised to step directions,
// h_{e_1}^{s_1} h_{e_2}^{s_2} ... Labels come from `c` over `region`.
int holonomy(const PathOfEdges& p, const Configuration& c, const Region& region,
             const GroupTable& G);

// Holonomy with labels supplied by an arbitrary edge -> element lookup.
template <class LabelFn>
int holonomy_with(const PathOfEdges& p, const GroupTable& G, LabelFn&& label) {
    int acc = GroupTable::identity;
    for (const Step& s : p.steps()) {
        int g = label(s.edge);
        acc = G.mul(acc, s.sign > 0 ? g : G.inv(g));
    }
    return acc;
}

}  // namespace qd

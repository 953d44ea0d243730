#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace qd {

// Lattice vertex of Z^2.
struct Vec2 {
    int x = 0;
    int y = 0;

    friend auto operator<=>(const Vec2&, const Vec2&) = default;
    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
};

// Horizontal edges run (a,b)-(a+1,b) and are oriented left to right;
// vertical edges run (a,b)-(a,b+1) and are oriented down to up.
enum class EdgeKind : uint8_t { H = 0, V = 1 };

struct Edge {
    EdgeKind kind = EdgeKind::H;
    Vec2 base;

    Vec2 origin() const { return base; }  // v_{e,-1}
    Vec2 target() const {                 // v_{e,+1}
        return kind == EdgeKind::H ? Vec2{base.x + 1, base.y} : Vec2{base.x, base.y + 1};
    }
    Vec2 endpoint(int sign) const { return sign > 0 ? target() : origin(); }

    friend bool operator==(const Edge&, const Edge&) = default;
};

inline Edge h_edge(int a, int b) { return {EdgeKind::H, {a, b}}; }
inline Edge v_edge(int a, int b) { return {EdgeKind::V, {a, b}}; }

// Canonical edge ordering: (kind, base.y, base.x).
inline bool canonical_less(const Edge& a, const Edge& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.base.y != b.base.y) return a.base.y < b.base.y;
    return a.base.x < b.base.x;
}

// The unit square S_(a,b) with corners (a,b),(a+1,b),(a+1,b+1),(a,b+1).
struct Plaquette {
    Vec2 corner;

    Edge bottom() const { return h_edge(corner.x, corner.y); }
    Edge top() const { return h_edge(corner.x, corner.y + 1); }
    Edge left() const { return v_edge(corner.x, corner.y); }
    Edge right() const { return v_edge(corner.x + 1, corner.y); }

    friend auto operator<=>(const Plaquette&, const Plaquette&) = default;
};

struct Vec2Hash {
    size_t operator()(Vec2 v) const {
        uint64_t k = (uint64_t(uint32_t(v.x)) << 32) | uint32_t(v.y);
        k ^= k >> 33;
        k *= 0xff51afd7ed558ccdULL;
        k ^= k >> 33;
        return size_t(k);
    }
};

struct EdgeHash {
    size_t operator()(const Edge& e) const {
        return Vec2Hash{}(e.base) * 2 + size_t(e.kind);
    }
};

inline std::string to_string(Vec2 v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

inline std::string to_string(const Edge& e) {
    return to_string(e.origin()) + "-" + to_string(e.target());
}

}  // namespace qd

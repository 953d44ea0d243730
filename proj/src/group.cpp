#include "qd/group.hpp"

#include <stdexcept>

namespace qd {

GroupTable::GroupTable(int order, std::vector<uint8_t> table, std::string name)
    : order_(order), mul_(std::move(table)), name_(std::move(name)) {
    if (order < 1 || order > 255) throw std::invalid_argument("group order out of range");
    if (mul_.size() != size_t(order) * order) throw std::invalid_argument("bad table size");
    inv_.assign(order, 255);
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b) {
            if (mul(a, b) == identity && mul(b, a) == identity) inv_[a] = uint8_t(b);
        }
        if (inv_[a] == 255) throw std::invalid_argument("element without two-sided inverse");
    }
}

bool GroupTable::is_abelian() const {
    for (int a = 0; a < order_; ++a)
        for (int b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

void GroupTable::validate() const {
    for (int a = 0; a < order_; ++a) {
        if (mul(a, identity) != a || mul(identity, a) != a)
            throw std::logic_error("identity is not two-sided");
        if (mul(a, inv(a)) != identity || mul(inv(a), a) != identity)
            throw std::logic_error("inverse is not two-sided");
    }
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            for (int c = 0; c < order_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw std::logic_error("multiplication is not associative");
}

GroupTable make_cyclic(int n) {
    if (n < 1) throw std::invalid_argument("make_cyclic: n must be positive");
    std::vector<uint8_t> mul(size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul[size_t(a) * n + b] = uint8_t((a + b) % n);
    return GroupTable(n, std::move(mul), "Z" + std::to_string(n));
}

GroupTable make_dihedral(int n) {
    if (n < 3) throw std::invalid_argument("make_dihedral: n must be >= 3");
    const int order = 2 * n;
    auto rot = [n](int k) { return ((k % n) + n) % n; };
    std::vector<uint8_t> mul(size_t(order) * order);
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b) {
            const bool ra = a < n, rb = b < n;
            const int ka = ra ? a : a - n, kb = rb ? b : b - n;
            int out;
            if (ra && rb) out = rot(ka + kb);                // r^ka r^kb
            else if (ra && !rb) out = n + rot(ka + kb);      // r^ka (r^kb s)
            else if (!ra && rb) out = n + rot(ka - kb);      // (r^ka s) r^kb = r^(ka-kb) s
            else out = rot(ka - kb);                         // (r^ka s)(r^kb s)
            mul[size_t(a) * order + b] = uint8_t(out);
        }
    }
    return GroupTable(order, std::move(mul), "D" + std::to_string(n));
}

GroupTable make_product(const GroupTable& a, const GroupTable& b) {
    const int na = a.order(), nb = b.order(), n = na * nb;
    if (n > 255) throw std::invalid_argument("make_product: order too large");
    std::vector<uint8_t> mul(size_t(n) * n);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            const int xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
            mul[size_t(x) * n + y] = uint8_t(a.mul(xa, ya) * nb + b.mul(xb, yb));
        }
    }
    return GroupTable(n, std::move(mul), a.name() + "x" + b.name());
}

GroupTable parse_group_spec(const std::string& spec) {
    auto parse_int = [](const std::string& s) {
        if (s.empty()) throw std::invalid_argument("bad group spec: missing number");
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("bad group spec: trailing characters");
        return v;
    };
    if (spec.size() >= 2 && spec[0] == 'D') return make_dihedral(parse_int(spec.substr(1)));
    if (spec.size() >= 2 && spec[0] == 'Z') {
        auto x = spec.find('x');
        if (x == std::string::npos) return make_cyclic(parse_int(spec.substr(1)));
        if (x + 2 > spec.size() || spec[x + 1] != 'Z')
            throw std::invalid_argument("bad group spec: " + spec);
        return make_product(make_cyclic(parse_int(spec.substr(1, x - 1))),
                            make_cyclic(parse_int(spec.substr(x + 2))));
    }
    throw std::invalid_argument("bad group spec: " + spec);
}

}  // namespace qd

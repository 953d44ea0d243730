#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qd {

// A finite group as an explicit multiplication table. Elements are dense
// indices 0..order-1 and index 0 is always the identity, so configurations
// can be stored as small-integer arrays and multiplied by table lookup.
class GroupTable {
  public:
    GroupTable(int order, std::vector<uint8_t> table, std::string name);

    int order() const { return order_; }
    int mul(int a, int b) const { return mul_[size_t(a) * order_ + b]; }
    int inv(int a) const { return inv_[a]; }
    static constexpr int identity = 0;

    bool is_abelian() const;
    const std::string& name() const { return name_; }

    // Exhaustive axiom check (identity, inverses, associativity).
    // Cost is order^3; meant for the small tables used here.
    void validate() const;

  private:
    int order_;
    std::vector<uint8_t> mul_;
    std::vector<uint8_t> inv_;
    std::string name_;
};

// Cyclic group Z_n. n >= 1.
GroupTable make_cyclic(int n);

// Dihedral group D_n of order 2n, presented as r^n = s^2 = e, srs = r^-1.
// Element k < n is the rotation r^k, element n + k is r^k s. n >= 3.
GroupTable make_dihedral(int n);

// Direct product with componentwise multiplication; (a,b) -> a*|B| + b.
GroupTable make_product(const GroupTable& a, const GroupTable& b);

// Group spec strings accepted by the CLI: "Z<n>", "Z<n>xZ<m>", "D<n>".
GroupTable parse_group_spec(const std::string& spec);

}  // namespace qd

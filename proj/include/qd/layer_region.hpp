#pragma once

#include <vector>

#include "qd/path.hpp"
#include "qd/region.hpp"

namespace qd {

// One row of consecutive squares S_(x_start, y) ... S_(x_start+count-1, y).
struct LayerRow {
    int y = 0;
    int x_start = 0;
    int count = 1;

    int x_end() const { return x_start + count - 1; }  // last square
    friend bool operator==(const LayerRow&, const LayerRow&) = default;
};

// Data of the junction between consecutive rows m and m+1 (heights y+m).
struct LayerJunction {
    int z = 0;       // max of the two left ends
    int w = 0;       // min of the two right ends, plus one; condition S is z < w
    int z_tilde = 0; // min of the two left ends
    int w_tilde = 0; // max of the two right ends, plus one
    int M() const { return w - z; }
};

// Stacked layers of squares satisfying the overlap condition z < w at every
// junction, with its edges split into the four classes used by the
// boundary-completion machinery:
//   E1  interior horizontal edges of a junction row left of the pivot,
//   E2  the pivot horizontal edge of each junction row,
//   E3  interior vertical edges of each layer,
//   E4  the boundary edges (the loop around the region).
class LayerRegion {
  public:
    // Rows must be consecutive in y (ascending) with count >= 1.
    static LayerRegion from_rows(std::vector<LayerRow> rows);

    // Groups squares into rows; throws GeometryError if any row is not
    // contiguous or the rows are not consecutive.
    static LayerRegion from_squares(const std::vector<Plaquette>& squares);

    const std::vector<LayerRow>& rows() const { return rows_; }
    const std::vector<LayerJunction>& junctions() const { return junctions_; }
    const Region& region() const { return region_; }
    int base_y() const { return rows_.front().y; }
    int num_layers() const { return int(rows_.size()); }

    const std::vector<Edge>& e1() const { return e1_; }
    const std::vector<Edge>& e2() const { return e2_; }
    const std::vector<Edge>& e3() const { return e3_; }
    const std::vector<Edge>& e4() const { return e4_; }

    // Self-avoiding boundary paths from (x_1^{(1)}, y) to (x_{n_l}^{(l)}+1, y+l):
    // right_path starts along the bottom row, left_path starts upward.
    const PathOfEdges& left_path() const { return left_path_; }
    const PathOfEdges& right_path() const { return right_path_; }

    bool contains_square(int a, int b) const;

  private:
    std::vector<LayerRow> rows_;
    std::vector<LayerJunction> junctions_;
    Region region_;
    std::vector<Edge> e1_, e2_, e3_, e4_;
    PathOfEdges left_path_, right_path_;
};

// The full rectangle Lambda_N^{(n0,m0)} viewed as stacked layers.
LayerRegion layer_region_of_rectangle(const RectangleRegion& rr);

}  // namespace qd

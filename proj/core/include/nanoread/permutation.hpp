#pragma once

#include <string>
#include <vector>

#include "nanoread/words.hpp"

namespace nanoread {

// Grid interleaver. The first p*ell*floor(n/(p*ell)) coordinates are laid out
// row-major in a matrix with ell columns, the matrix is cut into p x 2
// sub-blocks (the last column is left out when ell is odd), and each sub-block
// contributes its p rows in order, sub-blocks taken left to right, then top to
// bottom. Coordinates not covered by any sub-block are appended in increasing
// index order.
struct PermSpec {
    int n = 0;
    int p = 0;
    int ell = 0;

    void validate() const;
    int row_blocks() const { return n / (p * ell); }
    int col_pairs() const { return ell / 2; }
    // Number of 2p-blocks in the interleaved image.
    int block_count() const { return row_blocks() * col_pairs(); }
    int covered_len() const { return 2 * p * block_count(); }
};

// One-line permutation of [n]. fwd[i] (0-based) is the source coordinate of
// output position i+1, also 0-based.
class IndexMap {
public:
    explicit IndexMap(std::vector<int> fwd);

    int size() const { return int(fwd_.size()); }
    int operator[](int i0) const { return fwd_[i0]; }
    // 1-based f(i) as used in prose and reports.
    int map1(int i1) const { return fwd_[i1 - 1] + 1; }
    IndexMap inverse() const;
    std::string to_string() const;  // "1,2,4,5,3,6"

    friend bool operator==(const IndexMap&, const IndexMap&) = default;

private:
    std::vector<int> fwd_;
};

IndexMap f_pi(const PermSpec& spec);
BinaryWord apply_pi(const BinaryWord& x, const PermSpec& spec);
BinaryWord invert_pi(const BinaryWord& y, const PermSpec& spec);

}  // namespace nanoread

#pragma once

#include <cstdint>
#include <vector>

#include "apcqc/ffvec.hpp"

namespace apcqc {

// C(n, k) in uint64, throwing on overflow.
std::uint64_t binomial64(int n, int k);

// The set of pairs (a, b) in F_p^n x F_p^n with symmetrical weight
// ws(a, b) == w, addressed by a dense linear index. The index order is the
// canonical search order used everywhere: support combinations ascending in
// lexicographic order, then the per-position nonzero (a_i, b_i) values in
// lexicographic order with the last support position varying fastest. Index
// 0 of shell w=1 is therefore a = 0, b = (1, 0, ..., 0).
class WsShell {
public:
    WsShell(int p, int n, int w);

    std::uint64_t size() const { return size_; }
    int weight() const { return w_; }

    // Writes the pair at `index` into preallocated coordinate arrays of
    // length n (residues, position 0 = x_1).
    void decode(std::uint64_t index, std::vector<int>& a, std::vector<int>& b) const;

private:
    int p_;
    int n_;
    int w_;
    std::uint64_t pair_values_;  // p^2 - 1
    std::uint64_t value_count_;  // (p^2 - 1)^w
    std::uint64_t size_;
};

}  // namespace apcqc

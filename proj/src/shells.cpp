#include "apcqc/shells.hpp"

#include <stdexcept>

namespace apcqc {

std::uint64_t binomial64(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        // result * num never overflows for the n used here, but guard anyway
        if (result > UINT64_MAX / num) {
            throw std::overflow_error("binomial coefficient overflow");
        }
        result = result * num / static_cast<std::uint64_t>(i);
    }
    return result;
}

WsShell::WsShell(int p, int n, int w) : p_(p), n_(n), w_(w) {
    if (w < 0 || w > n) throw std::invalid_argument("shell weight out of range");
    pair_values_ = static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(p) - 1;
    value_count_ = 1;
    for (int i = 0; i < w; ++i) {
        if (value_count_ > UINT64_MAX / pair_values_) {
            throw std::overflow_error("weight shell too large to index");
        }
        value_count_ *= pair_values_;
    }
    std::uint64_t combs = binomial64(n, w);
    if (value_count_ != 0 && combs > UINT64_MAX / value_count_) {
        throw std::overflow_error("weight shell too large to index");
    }
    size_ = combs * value_count_;
}

void WsShell::decode(std::uint64_t index, std::vector<int>& a, std::vector<int>& b) const {
    std::uint64_t comb_rank = index / value_count_;
    std::uint64_t value_rank = index % value_count_;

    a.assign(static_cast<std::size_t>(n_), 0);
    b.assign(static_cast<std::size_t>(n_), 0);

    // Unrank the support combination (lexicographic order over sorted
    // position lists).
    std::vector<int> support(static_cast<std::size_t>(w_));
    int next_candidate = 0;
    for (int slot = 0; slot < w_; ++slot) {
        int remaining = w_ - slot - 1;
        for (int v = next_candidate; v < n_; ++v) {
            std::uint64_t with_v = binomial64(n_ - 1 - v, remaining);
            if (comb_rank < with_v) {
                support[static_cast<std::size_t>(slot)] = v;
                next_candidate = v + 1;
                break;
            }
            comb_rank -= with_v;
        }
    }

    // Per-position pair values, last support position fastest. Value digit
    // d encodes the (p^2-1) nonzero pairs in lexicographic (a_i, b_i) order.
    for (int slot = w_ - 1; slot >= 0; --slot) {
        std::uint64_t digit = value_rank % pair_values_;
        value_rank /= pair_values_;
        std::uint64_t code = digit + 1;  // skip (0,0)
        int pos = support[static_cast<std::size_t>(slot)];
        a[static_cast<std::size_t>(pos)] = static_cast<int>(code / static_cast<std::uint64_t>(p_));
        b[static_cast<std::size_t>(pos)] = static_cast<int>(code % static_cast<std::uint64_t>(p_));
    }
}

}  // namespace apcqc

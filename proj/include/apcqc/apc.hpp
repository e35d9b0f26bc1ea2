#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "apcqc/cyclotomic.hpp"
#include "apcqc/ffvec.hpp"
#include "apcqc/logicfn.hpp"

namespace apcqc {

// The character sum  sum over x in F_p^n of zeta^(f(x-a) + b.x - f(x)),
// computed exactly in Z[zeta_p].
CycInt char_sum(const FpFunction& f, const FpVector& a, const FpVector& b);

// Exponent histogram backing char_sum: counts[k] = #{x : f(x-a)+b.x-f(x) = k}.
// The sum vanishes exactly when all counts are equal.
std::vector<std::int64_t> char_sum_counts(const FpFunction& f, const std::vector<int>& a,
                                          const std::vector<int>& b);

struct ApcWitness {
    FpVector a;
    FpVector b;
};

// Result of the APC distance search. `distance` is empty when every nonzero
// (a, b) yields a vanishing sum; consumers must handle that case explicitly.
// When attained, the witness is the first hit in the canonical shell order
// (see WsShell), so it is identical across runs and worker counts.
struct ApcResult {
    std::optional<int> distance;
    std::optional<ApcWitness> witness;

    bool attained() const { return distance.has_value(); }
};

// Minimum ws(a, b) over (a, b) != (0, 0) with char_sum(f, a, b) != 0. The
// search walks weight shells in increasing order and stops at the first
// shell containing a hit; each shell is scanned in parallel with a
// deterministic min-index reduction. threads <= 0 selects the default pool.
ApcResult apc_distance(const FpFunction& f, int threads = 0);

}  // namespace apcqc

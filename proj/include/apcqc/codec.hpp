#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apcqc/ffvec.hpp"
#include "apcqc/logicfn.hpp"

namespace apcqc {

// A constructed ((n, K, d))_p code: base function, beta family, the
// function's APC distance d_prime and the claimed code distance.
struct CodeSpec {
    FpFunction f;
    std::vector<FpVector> betas;
    int d_prime;
    int d_claimed;

    int p() const { return f.p(); }
    int n() const { return f.n(); }
    std::size_t K() const { return betas.size(); }

    // Throws std::invalid_argument on structural problems (dimension
    // mismatches, duplicate betas).
    void validate() const;

    // Non-fatal findings: d_prime below 2 (construction hypothesis not met)
    // or a claimed distance above d_prime.
    std::vector<std::string> warnings() const;
};

// Distance of the code built from a beta family on a function of APC
// distance d_prime:
//
//   min ws(u, v)  over all (u, v), subject to: some pair i <= j has
//                 ws(u, v - beta_i + beta_j) >= d_prime.
//
// i == j is allowed, which pins the result at d_prime for families whose
// members are all equal (in particular any singleton). The pair (u, v) =
// (0, 0) takes part in the minimization, so a family containing two betas
// at Hamming distance >= d_prime yields 0. The (u, v) space is walked in
// increasing weight shells with a short-circuit, in parallel.
int code_distance(const std::vector<FpVector>& betas, int d_prime, int p, int n,
                  int threads = 0);

// Beta family used when p >= n-k+1: the p^k vectors whose first k
// coordinates run over all of F_p^k (lexicographic) and whose remaining
// coordinates are zero. The construction itself is valid for every prime p;
// the branch condition only decides which family is larger.
std::vector<FpVector> build_betas_large_p(int n, int k, int p);

// Beta family used when p < n-k+1 (requires k >= 2): the first k-2
// coordinates run over F_p^{k-2}; for each prefix the family holds the
// all-zero tail plus, for each later position and each nonzero value, the
// vector with exactly that coordinate set. Size is
// p^{k-2} * (1 + (n-k+2)(p-1)).
std::vector<FpVector> build_betas_small_p(int n, int k, int p);

// True when every pair of the family is within Hamming distance k.
bool check_wh_constraint(const std::vector<FpVector>& betas, int k);

// Two published versions of the K bound for d = d_prime - k, k >= 2. The
// derivation gives p^{k-2} * max{1 + (n-k+2)(p-1), p^2}; the looser
// headline form replaces n-k+2 by n. They coincide at k = 2.
enum class KBoundVersion { kDerived, kHeadline };

// Largest admissible family size for code distance d_prime - k:
// 1 for k = 0, p for k = 1, and the KBoundVersion formula for
// 2 <= k <= d_prime - 2. Throws std::domain_error when k >= 2 exceeds
// d_prime - 2.
long long max_K(int n, int p, int d_prime, int k,
                KBoundVersion version = KBoundVersion::kDerived);

// Quantum Singleton bound in ((n, K, d)) form: K <= p^{n-2d+2}. Throws
// std::domain_error when n - 2d + 2 < 0 (no dimension satisfies the bound).
long long singleton_bound_K(int n, int d, int p);

// True when K saturates the Singleton bound (quantum MDS).
bool mds_saturates(int n, long long K, int d, int p);

// Equivalent condition for the constructed ((n, K, d_prime - k))_p code to
// saturate the Singleton bound, selected by k and by comparing p with
// n-k+1. Requires d_prime - k <= n/2 + 1. Results with k beyond the range
// of the K-bound derivation (k > d_prime - 2, k >= 2) are tagged.
struct MdsCondition {
    int case_id;  // 1: k=0, 2: k=1, 3: k>=2 and p >= n-k+1, 4: k>=2 and p < n-k+1
    bool holds;
    bool beyond_k_bound_range;
};

MdsCondition mds_condition(int n, int p, int d_prime, int k);

}  // namespace apcqc

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apcqc/codec.hpp"
#include "apcqc/cyclotomic.hpp"
#include "apcqc/ffvec.hpp"
#include "apcqc/logicfn.hpp"

namespace apcqc {

// An unnormalized state sum over x of zeta^(e(x)) |x>, stored as the
// exponent table e in truth-table index order. Every amplitude is a p-th
// root of unity; the error group X(a)Z(b) maps phase states to phase
// states, so the whole verification stays in exact arithmetic. The global
// normalization p^{-n/2} is carried symbolically by callers.
class PhaseState {
public:
    PhaseState(int p, int n, std::vector<int> exponents);

    int p() const { return p_; }
    int n() const { return n_; }
    const std::vector<int>& exponents() const { return exponents_; }

    bool operator==(const PhaseState& rhs) const = default;

private:
    int p_;
    int n_;
    std::vector<int> exponents_;
};

// Logic state of f shifted by beta: exponents f(x) + beta . x.
PhaseState build_state(const FpFunction& f, const FpVector& beta);

// E(a, b) = X(a) Z(b) with Z(b)|x> = zeta^(b.x)|x> and X(a)|x> = |x+a>:
// new exponents e'(y) = e(y - a) + b . (y - a).
PhaseState apply_error(const PhaseState& s, const FpVector& a, const FpVector& b);

// Exact <s1|s2> times p^n: sum over x of zeta^(e2(x) - e1(x)).
CycInt inner(const PhaseState& s1, const PhaseState& s2);

// Why a Knill-Laflamme check failed at some error E(a, b):
//  - kNonzeroOverlap: <psi_i|E|psi_j> != 0 for i != j (or the K = 1
//    self-overlap, where i == j == 0);
//  - kDiagonalMismatch: <psi_i|E|psi_i> != <psi_j|E|psi_j>.
struct KlWitness {
    enum class Kind { kNonzeroOverlap, kDiagonalMismatch };
    FpVector a;
    FpVector b;
    int i;
    int j;
    Kind kind;

    std::string kind_str() const;
};

struct KlCheckResult {
    bool ok;
    std::optional<KlWitness> witness;  // smallest-weight violation when !ok
};

// Exhaustive Knill-Laflamme check over every error (a, b) != (0, 0) with
// ws(a, b) <= t. For K >= 2 the K x K overlap matrix must have all
// off-diagonal entries zero and all diagonal entries equal (as exact
// cyclotomic integers); for K = 1 the pure-code convention applies: the
// self-overlap must vanish. Weight shells are scanned in increasing order,
// in parallel, with a deterministic smallest-witness reduction.
KlCheckResult kl_check(const CodeSpec& code, int t, int threads = 0);

struct KlDistanceResult {
    int distance;                      // n + 1 when every weight passes
    std::optional<KlWitness> witness;  // violation at weight `distance`
};

// Largest d with kl_check(code, d - 1) true.
KlDistanceResult kl_distance(const CodeSpec& code, int threads = 0);

}  // namespace apcqc

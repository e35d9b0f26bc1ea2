#include "apcqc/codec.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "apcqc/parallel.hpp"
#include "apcqc/shells.hpp"

namespace apcqc {

namespace {

long long checked_pow(int base, int exp) {
    long long result = 1;
    for (int i = 0; i < exp; ++i) {
        if (result > std::numeric_limits<long long>::max() / base) {
            throw std::overflow_error("power overflows 64-bit range");
        }
        result *= base;
    }
    return result;
}

void check_family(const std::vector<FpVector>& betas, int p, int n) {
    if (betas.empty()) {
        throw std::invalid_argument("beta family must be nonempty");
    }
    for (const FpVector& beta : betas) {
        if (beta.p() != p || beta.n() != n) {
            throw DimensionError("beta family member lives in the wrong space");
        }
    }
    std::set<std::vector<int>> seen;
    for (const FpVector& beta : betas) {
        if (!seen.insert(beta.coords()).second) {
            throw std::invalid_argument("beta family contains duplicates: " + beta.str());
        }
    }
}

}  // namespace

void CodeSpec::validate() const {
    check_family(betas, p(), n());
    if (d_claimed < 0) {
        throw std::invalid_argument("claimed distance must be non-negative");
    }
}

std::vector<std::string> CodeSpec::warnings() const {
    std::vector<std::string> out;
    if (d_prime < 2) {
        out.push_back("APC distance " + std::to_string(d_prime) +
                      " is below 2; the construction hypothesis is not met");
    }
    if (d_claimed > d_prime) {
        out.push_back("claimed distance " + std::to_string(d_claimed) +
                      " exceeds the APC distance " + std::to_string(d_prime));
    }
    return out;
}

int code_distance(const std::vector<FpVector>& betas, int d_prime, int p, int n, int threads) {
    check_family(betas, p, n);
    if (d_prime < 2 || d_prime > n + 1) {
        throw std::domain_error("d_prime out of range [2, n+1]");
    }
    if (d_prime > n) {
        // ws never reaches n+1, so no (u, v) can satisfy the condition.
        throw std::domain_error("no (u, v) satisfies the distance condition for d_prime = n+1");
    }
    if (threads <= 0) threads = default_thread_count();

    // Ordered differences beta_j - beta_i over i < j (the i == j case is the
    // plain ws(u, v) >= d_prime test and is handled inline).
    std::vector<std::vector<int>> deltas;
    {
        std::set<std::vector<int>> dedup;
        for (std::size_t i = 0; i < betas.size(); ++i) {
            for (std::size_t j = i + 1; j < betas.size(); ++j) {
                dedup.insert((betas[j] - betas[i]).coords());
            }
        }
        deltas.assign(dedup.begin(), dedup.end());
    }

    auto satisfies = [&](const std::vector<int>& u, const std::vector<int>& v, int w) {
        if (w >= d_prime) return true;  // i == j
        for (const auto& delta : deltas) {
            int weight = 0;
            for (int i = 0; i < n; ++i) {
                auto ui = static_cast<std::size_t>(i);
                if (u[ui] != 0 || (v[ui] + delta[ui]) % p != 0) ++weight;
            }
            if (weight >= d_prime) return true;
        }
        return false;
    };

    // Shell 0 is the single pair (0, 0).
    {
        std::vector<int> zero(static_cast<std::size_t>(n), 0);
        if (satisfies(zero, zero, 0)) return 0;
    }
    for (int w = 1; w <= n; ++w) {
        WsShell shell(p, n, w);
        std::vector<char> found(static_cast<std::size_t>(threads), 0);
        run_chunked(shell.size(), threads, [&](int slot, std::uint64_t begin, std::uint64_t end) {
            std::vector<int> u, v;
            for (std::uint64_t idx = begin; idx < end; ++idx) {
                shell.decode(idx, u, v);
                if (satisfies(u, v, w)) {
                    found[static_cast<std::size_t>(slot)] = 1;
                    break;
                }
            }
        });
        for (char hit : found) {
            if (hit) return w;
        }
        // Once w reaches d_prime the i == j branch fires on every pair, so
        // the loop always terminates by then.
    }
    throw std::logic_error("distance search exhausted all shells");
}

std::vector<FpVector> build_betas_large_p(int n, int k, int p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (k < 0 || k > n) throw std::invalid_argument("k must lie in [0, n]");
    long long count = checked_pow(p, k);
    std::vector<FpVector> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<int> coords(static_cast<std::size_t>(n), 0);
    for (long long idx = 0; idx < count; ++idx) {
        long long rest = idx;
        for (int i = k - 1; i >= 0; --i) {
            coords[static_cast<std::size_t>(i)] = static_cast<int>(rest % p);
            rest /= p;
        }
        out.emplace_back(p, coords);
    }
    return out;
}

std::vector<FpVector> build_betas_small_p(int n, int k, int p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (k < 2 || k > n) throw std::invalid_argument("k must lie in [2, n]");
    if (p >= n - k + 1) {
        throw std::invalid_argument("this family requires p < n-k+1; use build_betas_large_p");
    }
    long long prefixes = checked_pow(p, k - 2);
    int tail_positions = n - k + 2;  // positions k-1 .. n (1-based)
    std::vector<FpVector> out;
    out.reserve(static_cast<std::size_t>(prefixes * (1 + static_cast<long long>(tail_positions) * (p - 1))));
    std::vector<int> coords(static_cast<std::size_t>(n), 0);
    for (long long idx = 0; idx < prefixes; ++idx) {
        std::fill(coords.begin(), coords.end(), 0);
        long long rest = idx;
        for (int i = k - 3; i >= 0; --i) {
            coords[static_cast<std::size_t>(i)] = static_cast<int>(rest % p);
            rest /= p;
        }
        out.emplace_back(p, coords);  // all-zero tail
        for (int l = 0; l < tail_positions; ++l) {
            auto pos = static_cast<std::size_t>(k - 2 + l);
            for (int value = 1; value < p; ++value) {
                coords[pos] = value;
                out.emplace_back(p, coords);
            }
            coords[pos] = 0;
        }
    }
    return out;
}

bool check_wh_constraint(const std::vector<FpVector>& betas, int k) {
    for (std::size_t i = 0; i < betas.size(); ++i) {
        for (std::size_t j = i + 1; j < betas.size(); ++j) {
            if (wh(betas[i], betas[j]) > k) return false;
        }
    }
    return true;
}

long long max_K(int n, int p, int d_prime, int k, KBoundVersion version) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    if (k == 0) return 1;
    if (k == 1) return p;
    if (k > d_prime - 2) {
        throw std::domain_error("K bound requires k <= d_prime - 2 for k >= 2");
    }
    long long reach = version == KBoundVersion::kDerived ? n - k + 2 : n;
    long long inner = 1 + reach * (p - 1);
    long long square = static_cast<long long>(p) * p;
    return checked_pow(p, k - 2) * std::max(inner, square);
}

long long singleton_bound_K(int n, int d, int p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (d < 1 || d > n) throw std::invalid_argument("d must lie in [1, n]");
    int exponent = n - 2 * d + 2;
    if (exponent < 0) {
        throw std::domain_error("Singleton bound violated: n - 2d + 2 < 0 admits no K");
    }
    return checked_pow(p, exponent);
}

bool mds_saturates(int n, long long K, int d, int p) {
    return K == singleton_bound_K(n, d, p);
}

MdsCondition mds_condition(int n, int p, int d_prime, int k) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    if (d_prime < 2) throw std::invalid_argument("d_prime must be at least 2");
    if (k > d_prime) {
        throw std::domain_error("k must not exceed d_prime");
    }
    if (2 * (d_prime - k) > n + 2) {
        throw std::domain_error("requires d_prime - k <= n/2 + 1");
    }

    MdsCondition out{};
    out.beyond_k_bound_range = (k >= 2 && k > d_prime - 2);
    if (k == 0) {
        out.case_id = 1;
        out.holds = (n % 2 == 0) && (2 * d_prime == n + 2);
    } else if (k == 1) {
        out.case_id = 2;
        // Exponent is non-negative under the hypothesis above.
        out.holds = static_cast<long long>(n) * (p - 1) + 1 == checked_pow(p, n - 2 * d_prime + 4);
    } else if (p >= n - k + 1) {
        out.case_id = 3;
        out.holds = (2 * d_prime == n + k + 2);
    } else {
        out.case_id = 4;
        long long family = checked_pow(p, k - 2) *
                           (1 + static_cast<long long>(n - k + 2) * (p - 1));
        out.holds = family == checked_pow(p, n - 2 * (d_prime - k) + 2);
    }
    return out;
}

}  // namespace apcqc

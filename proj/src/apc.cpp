#include "apcqc/apc.hpp"

#include <limits>

#include "apcqc/parallel.hpp"
#include "apcqc/shells.hpp"

namespace apcqc {

namespace {

// Per-position lookup tables for one (a, b) pair, so the inner loop over x
// needs only table adds: shift[i][v] contributes to index_of(x - a) and
// phase[i][v] to (b . x) mod p.
struct PairTables {
    std::vector<std::vector<std::size_t>> shift;
    std::vector<std::vector<int>> phase;

    PairTables(int p, int n) {
        shift.assign(static_cast<std::size_t>(n), std::vector<std::size_t>(static_cast<std::size_t>(p)));
        phase.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(p)));
    }

    void fill(int p, int n, const std::vector<int>& a, const std::vector<int>& b) {
        std::size_t pow = 1;
        for (int i = n - 1; i >= 0; --i) {
            auto ui = static_cast<std::size_t>(i);
            for (int v = 0; v < p; ++v) {
                shift[ui][static_cast<std::size_t>(v)] =
                    static_cast<std::size_t>((v - a[ui] + p) % p) * pow;
                phase[ui][static_cast<std::size_t>(v)] = (b[ui] * v) % p;
            }
            pow *= static_cast<std::size_t>(p);
        }
    }
};

void accumulate_counts(const FpFunction& f, const PairTables& tabs,
                       std::vector<std::int64_t>& counts) {
    const int p = f.p();
    const int n = f.n();
    counts.assign(static_cast<std::size_t>(p), 0);
    PointIter it(p, n);
    do {
        std::size_t shifted = 0;
        int phase = 0;
        const auto& x = it.coords();
        for (int i = 0; i < n; ++i) {
            auto ui = static_cast<std::size_t>(i);
            auto v = static_cast<std::size_t>(x[ui]);
            shifted += tabs.shift[ui][v];
            phase += tabs.phase[ui][v];
        }
        int e = (f.at(shifted) + phase + (p - f.at(it.index()))) % p;
        ++counts[static_cast<std::size_t>(e)];
    } while (it.next());
}

bool all_equal(const std::vector<std::int64_t>& counts) {
    for (std::size_t k = 1; k < counts.size(); ++k) {
        if (counts[k] != counts[0]) return false;
    }
    return true;
}

}  // namespace

std::vector<std::int64_t> char_sum_counts(const FpFunction& f, const std::vector<int>& a,
                                          const std::vector<int>& b) {
    if (a.size() != static_cast<std::size_t>(f.n()) || b.size() != static_cast<std::size_t>(f.n())) {
        throw DimensionError("character sum arguments have the wrong length");
    }
    PairTables tabs(f.p(), f.n());
    tabs.fill(f.p(), f.n(), a, b);
    std::vector<std::int64_t> counts;
    accumulate_counts(f, tabs, counts);
    return counts;
}

CycInt char_sum(const FpFunction& f, const FpVector& a, const FpVector& b) {
    if (a.p() != f.p() || b.p() != f.p()) {
        throw DimensionError("character sum arguments have the wrong modulus");
    }
    return CycInt::from_counts(f.p(), char_sum_counts(f, a.coords(), b.coords()));
}

ApcResult apc_distance(const FpFunction& f, int threads) {
    const int p = f.p();
    const int n = f.n();
    if (threads <= 0) threads = default_thread_count();

    for (int w = 1; w <= n; ++w) {
        WsShell shell(p, n, w);
        std::vector<std::uint64_t> best(static_cast<std::size_t>(threads),
                                        std::numeric_limits<std::uint64_t>::max());
        run_chunked(shell.size(), threads, [&](int slot, std::uint64_t begin, std::uint64_t end) {
            std::vector<int> a, b;
            std::vector<std::int64_t> counts;
            PairTables tabs(p, n);
            for (std::uint64_t idx = begin; idx < end; ++idx) {
                shell.decode(idx, a, b);
                tabs.fill(p, n, a, b);
                accumulate_counts(f, tabs, counts);
                if (!all_equal(counts)) {
                    best[static_cast<std::size_t>(slot)] = idx;
                    break;  // later indices in this chunk cannot improve
                }
            }
        });
        std::uint64_t hit = std::numeric_limits<std::uint64_t>::max();
        for (std::uint64_t candidate : best) {
            if (candidate < hit) hit = candidate;
        }
        if (hit != std::numeric_limits<std::uint64_t>::max()) {
            std::vector<int> a, b;
            shell.decode(hit, a, b);
            return ApcResult{w, ApcWitness{FpVector(p, std::move(a)), FpVector(p, std::move(b))}};
        }
    }
    return ApcResult{};
}

}  // namespace apcqc

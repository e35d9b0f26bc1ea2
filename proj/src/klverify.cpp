#include "apcqc/klverify.hpp"

#include <limits>

#include "apcqc/parallel.hpp"
#include "apcqc/shells.hpp"

namespace apcqc {

PhaseState::PhaseState(int p, int n, std::vector<int> exponents)
    : p_(p), n_(n), exponents_(std::move(exponents)) {
    if (!is_prime(p)) {
        throw std::invalid_argument("modulus must be prime, got " + std::to_string(p));
    }
    if (exponents_.size() != table_size(p, n)) {
        throw std::invalid_argument("exponent table must have exactly p^n entries");
    }
    for (int e : exponents_) {
        if (e < 0 || e >= p_) {
            throw std::invalid_argument("phase exponent out of range");
        }
    }
}

PhaseState build_state(const FpFunction& f, const FpVector& beta) {
    return PhaseState(f.p(), f.n(), f.add_linear(beta).table());
}

PhaseState apply_error(const PhaseState& s, const FpVector& a, const FpVector& b) {
    const int p = s.p();
    const int n = s.n();
    if (a.p() != p || a.n() != n || b.p() != p || b.n() != n) {
        throw DimensionError("error operator lives in the wrong space");
    }
    // Per-position contributions to index_of(y - a) and to b . (y - a).
    std::vector<std::vector<std::size_t>> shift(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> phase(static_cast<std::size_t>(n));
    std::size_t pow = 1;
    for (int i = n - 1; i >= 0; --i) {
        auto ui = static_cast<std::size_t>(i);
        shift[ui].resize(static_cast<std::size_t>(p));
        phase[ui].resize(static_cast<std::size_t>(p));
        for (int v = 0; v < p; ++v) {
            int moved = (v - a[i] + p) % p;
            shift[ui][static_cast<std::size_t>(v)] = static_cast<std::size_t>(moved) * pow;
            phase[ui][static_cast<std::size_t>(v)] = (b[i] * moved) % p;
        }
        pow *= static_cast<std::size_t>(p);
    }
    std::vector<int> out(s.exponents().size());
    PointIter it(p, n);
    do {
        std::size_t shifted = 0;
        int ph = 0;
        for (int i = 0; i < n; ++i) {
            auto ui = static_cast<std::size_t>(i);
            auto v = static_cast<std::size_t>(it.coords()[ui]);
            shifted += shift[ui][v];
            ph += phase[ui][v];
        }
        out[it.index()] = (s.exponents()[shifted] + ph) % p;
    } while (it.next());
    return PhaseState(p, n, std::move(out));
}

CycInt inner(const PhaseState& s1, const PhaseState& s2) {
    if (s1.p() != s2.p() || s1.n() != s2.n()) {
        throw DimensionError("inner product between different spaces");
    }
    const int p = s1.p();
    std::vector<std::int64_t> counts(static_cast<std::size_t>(p), 0);
    for (std::size_t x = 0; x < s1.exponents().size(); ++x) {
        int e = (s2.exponents()[x] - s1.exponents()[x] + p) % p;
        ++counts[static_cast<std::size_t>(e)];
    }
    return CycInt::from_counts(p, counts);
}

std::string KlWitness::kind_str() const {
    return kind == Kind::kNonzeroOverlap ? "nonzero_overlap" : "diagonal_mismatch";
}

namespace {

struct Violation {
    std::uint64_t shell_index;
    int i;
    int j;
    KlWitness::Kind kind;
};

// Shared per-code tables for the error scan.
struct KlScan {
    const CodeSpec& code;
    int p;
    int n;
    std::size_t points;
    std::vector<std::vector<int>> beta_dots;  // beta_i . y per state, per point

    explicit KlScan(const CodeSpec& c)
        : code(c), p(c.p()), n(c.n()), points(c.f.size()),
          beta_dots(c.betas.size(), std::vector<int>(points)) {
        for (std::size_t i = 0; i < code.betas.size(); ++i) {
            PointIter it(p, n);
            do {
                long long d = 0;
                for (int pos = 0; pos < n; ++pos) {
                    d += static_cast<long long>(code.betas[i][pos]) *
                         it.coords()[static_cast<std::size_t>(pos)];
                }
                beta_dots[i][it.index()] = static_cast<int>(d % p);
            } while (it.next());
        }
    }

    // First Knill-Laflamme violation at the error encoded by (a, b), or
    // nothing. Visits the overlap matrix in row-major order; entry (0, 0)
    // is the diagonal reference.
    std::optional<std::pair<std::pair<int, int>, KlWitness::Kind>> check_error(
        const std::vector<int>& a, const std::vector<int>& b) const {
        const std::size_t K = code.betas.size();

        // base(y) = f(y-a) + b.(y-a) - f(y) mod p
        std::vector<int> base(points);
        {
            std::vector<std::vector<std::size_t>> shift(static_cast<std::size_t>(n));
            std::vector<std::vector<int>> phase(static_cast<std::size_t>(n));
            std::size_t pow = 1;
            for (int i = n - 1; i >= 0; --i) {
                auto ui = static_cast<std::size_t>(i);
                shift[ui].resize(static_cast<std::size_t>(p));
                phase[ui].resize(static_cast<std::size_t>(p));
                for (int v = 0; v < p; ++v) {
                    int moved = (v - a[ui] + p) % p;
                    shift[ui][static_cast<std::size_t>(v)] = static_cast<std::size_t>(moved) * pow;
                    phase[ui][static_cast<std::size_t>(v)] = (b[ui] * moved) % p;
                }
                pow *= static_cast<std::size_t>(p);
            }
            PointIter it(p, n);
            do {
                std::size_t shifted = 0;
                int ph = 0;
                for (int i = 0; i < n; ++i) {
                    auto ui = static_cast<std::size_t>(i);
                    auto v = static_cast<std::size_t>(it.coords()[ui]);
                    shifted += shift[ui][v];
                    ph += phase[ui][v];
                }
                base[it.index()] =
                    (code.f.at(shifted) + ph + (p - code.f.at(it.index()))) % p;
            } while (it.next());
        }

        // Exponent of <psi_i|E|psi_j> term at y:
        //   base(y) + beta_j.y - beta_i.y - beta_j.a
        std::vector<std::int64_t> reference;  // diagonal histogram of state 0
        std::vector<std::int64_t> hist(static_cast<std::size_t>(p));
        for (std::size_t i = 0; i < K; ++i) {
            for (std::size_t j = 0; j < K; ++j) {
                long long ja = 0;
                for (int pos = 0; pos < n; ++pos) {
                    ja += static_cast<long long>(code.betas[j][pos]) *
                          a[static_cast<std::size_t>(pos)];
                }
                int offset = static_cast<int>(ja % p);
                hist.assign(static_cast<std::size_t>(p), 0);
                const auto& dj = beta_dots[j];
                const auto& di = beta_dots[i];
                for (std::size_t y = 0; y < points; ++y) {
                    int e = (base[y] + dj[y] - di[y] - offset + 2 * p) % p;
                    ++hist[static_cast<std::size_t>(e)];
                }
                if (i == j) {
                    if (K == 1) {
                        // Pure-code convention: the self-overlap must vanish.
                        bool zero = true;
                        for (int k = 1; k < p; ++k) {
                            if (hist[static_cast<std::size_t>(k)] != hist[0]) zero = false;
                        }
                        if (!zero) {
                            return std::make_pair(std::make_pair(0, 0),
                                                  KlWitness::Kind::kNonzeroOverlap);
                        }
                    } else if (i == 0) {
                        reference = hist;
                    } else if (hist != reference) {
                        // Equal totals make cyclotomic equality the same as
                        // histogram equality.
                        return std::make_pair(std::make_pair(0, static_cast<int>(i)),
                                              KlWitness::Kind::kDiagonalMismatch);
                    }
                } else {
                    bool zero = true;
                    for (int k = 1; k < p; ++k) {
                        if (hist[static_cast<std::size_t>(k)] != hist[0]) zero = false;
                    }
                    if (!zero) {
                        return std::make_pair(
                            std::make_pair(static_cast<int>(i), static_cast<int>(j)),
                            KlWitness::Kind::kNonzeroOverlap);
                    }
                }
            }
        }
        return std::nullopt;
    }

    // Scans one weight shell; returns the violation with the smallest shell
    // index, independent of the worker count.
    std::optional<Violation> scan_weight(int w, int threads) const {
        WsShell shell(p, n, w);
        std::vector<std::optional<Violation>> found(static_cast<std::size_t>(threads));
        run_chunked(shell.size(), threads, [&](int slot, std::uint64_t begin, std::uint64_t end) {
            std::vector<int> a, b;
            for (std::uint64_t idx = begin; idx < end; ++idx) {
                shell.decode(idx, a, b);
                if (auto bad = check_error(a, b)) {
                    found[static_cast<std::size_t>(slot)] =
                        Violation{idx, bad->first.first, bad->first.second, bad->second};
                    break;
                }
            }
        });
        std::optional<Violation> best;
        for (const auto& candidate : found) {
            if (candidate && (!best || candidate->shell_index < best->shell_index)) {
                best = candidate;
            }
        }
        return best;
    }

    KlWitness to_witness(int w, const Violation& v) const {
        WsShell shell(p, n, w);
        std::vector<int> a, b;
        shell.decode(v.shell_index, a, b);
        return KlWitness{FpVector(p, std::move(a)), FpVector(p, std::move(b)), v.i, v.j, v.kind};
    }
};

}  // namespace

KlCheckResult kl_check(const CodeSpec& code, int t, int threads) {
    code.validate();
    if (t < 0) throw std::invalid_argument("error weight bound must be non-negative");
    if (threads <= 0) threads = default_thread_count();
    KlScan scan(code);
    int limit = t < code.n() ? t : code.n();
    for (int w = 1; w <= limit; ++w) {
        if (auto v = scan.scan_weight(w, threads)) {
            return KlCheckResult{false, scan.to_witness(w, *v)};
        }
    }
    return KlCheckResult{true, std::nullopt};
}

KlDistanceResult kl_distance(const CodeSpec& code, int threads) {
    code.validate();
    if (threads <= 0) threads = default_thread_count();
    KlScan scan(code);
    for (int w = 1; w <= code.n(); ++w) {
        if (auto v = scan.scan_weight(w, threads)) {
            return KlDistanceResult{w, scan.to_witness(w, *v)};
        }
    }
    return KlDistanceResult{code.n() + 1, std::nullopt};
}

}  // namespace apcqc

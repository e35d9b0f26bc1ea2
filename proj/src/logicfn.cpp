#include "apcqc/logicfn.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace apcqc {

namespace {

// Keeps truth tables well below address-space trouble; p^n beyond this is
// not tractable for the downstream searches anyway.
constexpr std::size_t kMaxTableSize = std::size_t{1} << 28;

}  // namespace

std::size_t table_size(int p, int n) {
    if (n < 1) throw std::invalid_argument("variable count must be at least 1");
    std::size_t size = 1;
    for (int i = 0; i < n; ++i) {
        if (size > kMaxTableSize / static_cast<std::size_t>(p)) {
            throw std::invalid_argument("truth table p^n too large (p=" + std::to_string(p) +
                                        ", n=" + std::to_string(n) + ")");
        }
        size *= static_cast<std::size_t>(p);
    }
    return size;
}

std::size_t index_of(const FpVector& x) {
    std::size_t idx = 0;
    for (int i = 0; i < x.n(); ++i) {
        idx = idx * static_cast<std::size_t>(x.p()) + static_cast<std::size_t>(x[i]);
    }
    return idx;
}

FpVector vector_at(int p, int n, std::size_t idx) {
    std::vector<int> coords(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        coords[static_cast<std::size_t>(i)] = static_cast<int>(idx % static_cast<std::size_t>(p));
        idx /= static_cast<std::size_t>(p);
    }
    if (idx != 0) throw std::out_of_range("index beyond p^n");
    return FpVector(p, std::move(coords));
}

PointIter::PointIter(int p, int n) : p_(p), coords_(static_cast<std::size_t>(n), 0), index_(0) {}

bool PointIter::next() {
    for (int i = static_cast<int>(coords_.size()) - 1; i >= 0; --i) {
        auto ui = static_cast<std::size_t>(i);
        if (++coords_[ui] < p_) {
            ++index_;
            return true;
        }
        coords_[ui] = 0;
    }
    return false;
}

FpFunction::FpFunction(int p, int n, std::vector<int> table)
    : p_(p), n_(n), table_(std::move(table)) {
    if (!is_prime(p)) {
        throw std::invalid_argument("modulus must be prime, got " + std::to_string(p));
    }
    if (table_.size() != table_size(p, n)) {
        throw std::invalid_argument("truth table must have exactly p^n entries, got " +
                                    std::to_string(table_.size()));
    }
    for (int v : table_) {
        if (v < 0 || v >= p_) {
            throw std::invalid_argument("table entry " + std::to_string(v) + " out of range");
        }
    }
}

FpFunction FpFunction::constant(int p, int n, int value) {
    int v = ((value % p) + p) % p;
    return FpFunction(p, n, std::vector<int>(table_size(p, n), v));
}

int FpFunction::eval(const FpVector& x) const {
    if (x.p() != p_ || x.n() != n_) {
        throw DimensionError("function argument lives in the wrong space");
    }
    return table_[index_of(x)];
}

FpFunction FpFunction::add_linear(const FpVector& beta) const {
    if (beta.p() != p_ || beta.n() != n_) {
        throw DimensionError("linear shift lives in the wrong space");
    }
    std::vector<int> out(table_.size());
    PointIter it(p_, n_);
    do {
        long long bx = 0;
        for (int i = 0; i < n_; ++i) {
            bx += static_cast<long long>(beta[i]) * it.coords()[static_cast<std::size_t>(i)];
        }
        out[it.index()] = static_cast<int>((table_[it.index()] + bx) % p_);
    } while (it.next());
    return FpFunction(p_, n_, std::move(out));
}

std::string FpFunction::header() const {
    return "p=" + std::to_string(p_) + " n=" + std::to_string(n_) + " order=bigendian-x1";
}

PolyParseError::PolyParseError(const std::string& message, std::size_t pos)
    : std::runtime_error(message + " (offset " + std::to_string(pos) + ")"), pos_(pos) {}

namespace {

struct Token {
    enum Kind { kInt, kVar, kPlus, kMinus, kStar, kEnd } kind;
    std::size_t pos;
    long long value;  // integer literal, or 1-based variable index
};

std::vector<Token> tokenize(const std::string& expr, int n) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < expr.size()) {
        char c = expr[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '+') {
            out.push_back({Token::kPlus, i, 0});
            ++i;
        } else if (c == '-') {
            out.push_back({Token::kMinus, i, 0});
            ++i;
        } else if (c == '*') {
            out.push_back({Token::kStar, i, 0});
            ++i;
        } else if (c == '^') {
            throw PolyParseError("exponents are not supported", i);
        } else if (c == '(' || c == ')') {
            throw PolyParseError("parentheses are not supported", i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            long long v = 0;
            while (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i]))) {
                v = v * 10 + (expr[i] - '0');
                if (v > std::numeric_limits<int>::max()) {
                    throw PolyParseError("integer literal too large", start);
                }
                ++i;
            }
            out.push_back({Token::kInt, start, v});
        } else if (c == 'x') {
            std::size_t start = i;
            ++i;
            if (i >= expr.size() || !std::isdigit(static_cast<unsigned char>(expr[i]))) {
                throw PolyParseError("expected variable index after 'x'", start);
            }
            long long v = 0;
            while (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i]))) {
                v = v * 10 + (expr[i] - '0');
                if (v > std::numeric_limits<int>::max()) {
                    throw PolyParseError("variable index too large", start);
                }
                ++i;
            }
            if (v < 1 || v > n) {
                throw PolyParseError("variable x" + std::to_string(v) + " out of range (n=" +
                                         std::to_string(n) + ")",
                                     start);
            }
            out.push_back({Token::kVar, start, v});
        } else {
            throw PolyParseError(std::string("unexpected character '") + c + "'", i);
        }
    }
    out.push_back({Token::kEnd, expr.size(), 0});
    return out;
}

struct Term {
    int coeff;              // already reduced mod p; sign folded in
    std::vector<int> vars;  // 0-based variable indices, repeats allowed
};

std::vector<Term> parse_terms(const std::string& expr, int p, int n) {
    auto tokens = tokenize(expr, n);
    std::vector<Term> terms;
    std::size_t t = 0;

    bool negative = false;
    if (tokens[t].kind == Token::kMinus) {
        negative = true;
        ++t;
    } else if (tokens[t].kind == Token::kPlus) {
        ++t;
    }

    while (true) {
        // One term: '*'-separated integer and variable factors.
        long long coeff = negative ? p - 1 : 1;
        std::vector<int> vars;
        bool expect_factor = true;
        while (true) {
            const Token& tok = tokens[t];
            if (expect_factor) {
                if (tok.kind == Token::kInt) {
                    coeff = (coeff * (tok.value % p)) % p;
                } else if (tok.kind == Token::kVar) {
                    vars.push_back(static_cast<int>(tok.value) - 1);
                } else {
                    throw PolyParseError("expected integer or variable", tok.pos);
                }
                ++t;
                expect_factor = false;
            } else if (tok.kind == Token::kStar) {
                ++t;
                expect_factor = true;
            } else if (tok.kind == Token::kPlus || tok.kind == Token::kMinus ||
                       tok.kind == Token::kEnd) {
                break;
            } else {
                throw PolyParseError("expected '+', '-' or '*'", tok.pos);
            }
        }
        terms.push_back({static_cast<int>(coeff), std::move(vars)});

        const Token& sep = tokens[t];
        if (sep.kind == Token::kEnd) break;
        negative = (sep.kind == Token::kMinus);
        ++t;
    }
    return terms;
}

}  // namespace

FpFunction parse_poly(const std::string& expr, int p, int n) {
    if (!is_prime(p)) {
        throw std::invalid_argument("modulus must be prime, got " + std::to_string(p));
    }
    if (n < 1) throw std::invalid_argument("variable count must be at least 1");
    auto terms = parse_terms(expr, p, n);

    std::vector<int> table(table_size(p, n));
    PointIter it(p, n);
    do {
        long long acc = 0;
        for (const Term& term : terms) {
            long long prod = term.coeff;
            for (int v : term.vars) {
                prod = (prod * it.coords()[static_cast<std::size_t>(v)]) % p;
                if (prod == 0) break;
            }
            acc += prod;
        }
        table[it.index()] = static_cast<int>(acc % p);
    } while (it.next());
    return FpFunction(p, n, std::move(table));
}

FpFunction read_truth_table(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) {
        throw std::runtime_error("truth table: missing header line");
    }
    int p = 0, n = 0;
    char order[32] = {0};
    if (std::sscanf(header.c_str(), "p=%d n=%d order=%31s", &p, &n, order) != 3) {
        throw std::runtime_error("truth table: malformed header '" + header + "'");
    }
    if (std::string(order) != "bigendian-x1") {
        throw std::runtime_error("truth table: unsupported index order '" + std::string(order) +
                                 "'");
    }
    if (!is_prime(p)) {
        throw std::runtime_error("truth table: p=" + std::to_string(p) + " is not prime");
    }
    if (n < 1) {
        throw std::runtime_error("truth table: bad variable count");
    }
    std::size_t expected = table_size(p, n);
    std::vector<int> table;
    table.reserve(expected);
    long long v = 0;
    while (in >> v) {
        if (v < 0 || v >= p) {
            throw std::runtime_error("truth table: entry " + std::to_string(v) + " out of range");
        }
        table.push_back(static_cast<int>(v));
        if (table.size() > expected) {
            throw std::runtime_error("truth table: more than p^n entries");
        }
    }
    if (table.size() != expected) {
        throw std::runtime_error("truth table: expected " + std::to_string(expected) +
                                 " entries, got " + std::to_string(table.size()));
    }
    return FpFunction(p, n, std::move(table));
}

void write_truth_table(std::ostream& out, const FpFunction& f) {
    out << f.header() << '\n';
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out << ' ';
        out << f.at(i);
    }
    out << '\n';
}

FpFunction load_truth_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open truth table file: " + path);
    return read_truth_table(in);
}

void save_truth_table(const std::string& path, const FpFunction& f) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write truth table file: " + path);
    write_truth_table(out, f);
}

}  // namespace apcqc

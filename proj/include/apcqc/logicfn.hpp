#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "apcqc/ffvec.hpp"

namespace apcqc {

// p^n as a table size, with an overflow/memory guard.
std::size_t table_size(int p, int n);

// Table index of x, big-endian in x_1: idx(x) = sum x_i * p^(n-i).
std::size_t index_of(const FpVector& x);

// Inverse of index_of.
FpVector vector_at(int p, int n, std::size_t idx);

// Walks all points of F_p^n in table index order (x_1 is the most
// significant digit). Starts at the zero vector, index 0.
class PointIter {
public:
    PointIter(int p, int n);

    const std::vector<int>& coords() const { return coords_; }
    std::size_t index() const { return index_; }

    // Advances to the next point; returns false once all points are spent.
    bool next();

private:
    int p_;
    std::vector<int> coords_;
    std::size_t index_;
};

// An n-variable function F_p^n -> F_p stored as a full truth table in
// index_of order. Immutable after construction.
class FpFunction {
public:
    FpFunction(int p, int n, std::vector<int> table);

    static FpFunction constant(int p, int n, int value);

    int p() const { return p_; }
    int n() const { return n_; }
    const std::vector<int>& table() const { return table_; }
    std::size_t size() const { return table_.size(); }

    int at(std::size_t idx) const { return table_[idx]; }
    int eval(const FpVector& x) const;

    // Pointwise f(x) + beta . x.
    FpFunction add_linear(const FpVector& beta) const;

    // The on-disk header naming the index convention.
    std::string header() const;

    bool operator==(const FpFunction& rhs) const = default;

private:
    int p_;
    int n_;
    std::vector<int> table_;
};

// Syntax error in a polynomial expression; `pos` is the 0-based byte offset
// of the offending token.
class PolyParseError : public std::runtime_error {
public:
    PolyParseError(const std::string& message, std::size_t pos);
    std::size_t pos() const { return pos_; }

private:
    std::size_t pos_;
};

// Parses a polynomial over F_p in variables x1..xn and evaluates it to a
// truth table. Grammar: sum of terms with '+'/'-'; a term is '*'-separated
// factors, each an integer (reduced mod p) or a variable. No parentheses;
// exponents are rejected rather than reduced.
FpFunction parse_poly(const std::string& expr, int p, int n);

// Truth-table text format. Line 1: "p=<p> n=<n> order=bigendian-x1".
// Line 2: p^n residues separated by single spaces.
FpFunction read_truth_table(std::istream& in);
void write_truth_table(std::ostream& out, const FpFunction& f);
FpFunction load_truth_table(const std::string& path);
void save_truth_table(const std::string& path, const FpFunction& f);

}  // namespace apcqc

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace apcqc {

// Deterministic trial-division primality test; intended for small moduli.
bool is_prime(long long value);

// A vector in F_p^n. Coordinates are residues in [0, p-1]; coords()[0]
// holds the first coordinate x_1. Values are immutable after construction
// and all operations are pure, so instances can be shared freely between
// threads.
class FpVector {
public:
    FpVector(int p, std::vector<int> coords);

    static FpVector zero(int p, int n);
    // Unit-like vector: `value` at position `pos` (0-based), zero elsewhere.
    static FpVector unit(int p, int n, int pos, int value = 1);
    // Parses the comma-separated residue form, e.g. "1,0,2".
    static FpVector parse(int p, const std::string& text);

    int p() const { return p_; }
    int n() const { return static_cast<int>(coords_.size()); }
    const std::vector<int>& coords() const { return coords_; }
    int operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }

    bool is_zero() const;
    int weight() const;  // number of nonzero coordinates

    FpVector operator+(const FpVector& rhs) const;
    FpVector operator-(const FpVector& rhs) const;
    FpVector operator-() const;
    FpVector scaled(int c) const;

    bool operator==(const FpVector& rhs) const = default;
    // Lexicographic coordinate order; requires matching p and n.
    bool operator<(const FpVector& rhs) const;

    std::string str() const;  // comma-separated residues

private:
    int p_;
    std::vector<int> coords_;
};

// Thrown when two operands disagree on p or n.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Inner product sum a_i * b_i mod p.
int dot(const FpVector& a, const FpVector& b);

// Symmetrical weight: number of positions where (a_i, b_i) != (0, 0).
int ws(const FpVector& a, const FpVector& b);

// Hamming distance: number of positions where a_i != b_i.
int wh(const FpVector& a, const FpVector& b);

}  // namespace apcqc

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace apcqc {

// Exact element of Z[zeta_p], zeta_p a primitive complex p-th root of unity,
// stored as p integer coefficients c_0..c_{p-1} of sum c_k * zeta^k. The only
// relation is 1 + zeta + ... + zeta^{p-1} = 0, so the represented value is
// zero exactly when all raw coefficients are equal. No floating point enters
// anywhere: "sum != 0" and "inner product == 0" decisions are exact.
//
// Canonical form (used by operator== and str()) subtracts c_{p-1} from every
// coefficient so the last one is 0.
class CycInt {
public:
    using Int = boost::multiprecision::cpp_int;

    explicit CycInt(int p);  // zero
    CycInt(int p, std::vector<Int> coeffs);

    // zeta^{k mod p}; k may be negative.
    static CycInt root_power(int p, long long k);
    static CycInt integer(int p, Int value);
    // sum over k of counts[k] * zeta^k; counts.size() must equal p.
    static CycInt from_counts(int p, const std::vector<std::int64_t>& counts);

    int p() const { return p_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool is_zero() const;

    CycInt operator+(const CycInt& rhs) const;
    CycInt operator-(const CycInt& rhs) const;
    CycInt operator-() const;
    CycInt operator*(const CycInt& rhs) const;

    // Complex conjugation, zeta -> zeta^{p-1}: coefficient k moves to (p-k) mod p.
    CycInt conj() const;

    // Coefficients with c_{p-1} normalized to zero.
    std::vector<Int> canonical() const;

    bool operator==(const CycInt& rhs) const;
    bool operator!=(const CycInt& rhs) const { return !(*this == rhs); }

    // Canonical coefficient list, e.g. "[3,-1,0]".
    std::string str() const;

private:
    int p_;
    std::vector<Int> coeffs_;
};

}  // namespace apcqc

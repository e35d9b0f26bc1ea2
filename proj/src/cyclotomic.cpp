#include "apcqc/cyclotomic.hpp"

#include <stdexcept>

#include "apcqc/ffvec.hpp"

namespace apcqc {

namespace {

void check_prime_p(int p) {
    if (!is_prime(p)) {
        throw std::invalid_argument("cyclotomic order must be prime, got " + std::to_string(p));
    }
}

void check_same_order(const CycInt& a, const CycInt& b) {
    if (a.p() != b.p()) {
        throw std::invalid_argument("mixed cyclotomic orders: " + std::to_string(a.p()) +
                                    " vs " + std::to_string(b.p()));
    }
}

}  // namespace

CycInt::CycInt(int p) : p_(p), coeffs_(static_cast<std::size_t>(p)) {
    check_prime_p(p);
}

CycInt::CycInt(int p, std::vector<Int> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
    check_prime_p(p);
    if (coeffs_.size() != static_cast<std::size_t>(p)) {
        throw std::invalid_argument("coefficient count must equal p");
    }
}

CycInt CycInt::root_power(int p, long long k) {
    CycInt out(p);
    long long r = ((k % p) + p) % p;
    out.coeffs_[static_cast<std::size_t>(r)] = 1;
    return out;
}

CycInt CycInt::integer(int p, Int value) {
    CycInt out(p);
    out.coeffs_[0] = std::move(value);
    return out;
}

CycInt CycInt::from_counts(int p, const std::vector<std::int64_t>& counts) {
    if (counts.size() != static_cast<std::size_t>(p)) {
        throw std::invalid_argument("count vector length must equal p");
    }
    CycInt out(p);
    for (std::size_t k = 0; k < counts.size(); ++k) {
        out.coeffs_[k] = counts[k];
    }
    return out;
}

bool CycInt::is_zero() const {
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        if (coeffs_[k] != coeffs_[0]) return false;
    }
    return true;
}

CycInt CycInt::operator+(const CycInt& rhs) const {
    check_same_order(*this, rhs);
    CycInt out(p_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        out.coeffs_[k] = coeffs_[k] + rhs.coeffs_[k];
    }
    return out;
}

CycInt CycInt::operator-(const CycInt& rhs) const {
    check_same_order(*this, rhs);
    CycInt out(p_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        out.coeffs_[k] = coeffs_[k] - rhs.coeffs_[k];
    }
    return out;
}

CycInt CycInt::operator-() const {
    CycInt out(p_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        out.coeffs_[k] = -coeffs_[k];
    }
    return out;
}

CycInt CycInt::operator*(const CycInt& rhs) const {
    check_same_order(*this, rhs);
    CycInt out(p_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            out.coeffs_[(i + j) % static_cast<std::size_t>(p_)] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return out;
}

CycInt CycInt::conj() const {
    CycInt out(p_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        out.coeffs_[(static_cast<std::size_t>(p_) - k) % static_cast<std::size_t>(p_)] = coeffs_[k];
    }
    return out;
}

std::vector<CycInt::Int> CycInt::canonical() const {
    std::vector<Int> out(coeffs_.size());
    const Int& last = coeffs_.back();
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        out[k] = coeffs_[k] - last;
    }
    return out;
}

bool CycInt::operator==(const CycInt& rhs) const {
    if (p_ != rhs.p_) return false;
    // Equal values differ by a constant coefficient shift.
    Int shift = coeffs_[0] - rhs.coeffs_[0];
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        if (coeffs_[k] - rhs.coeffs_[k] != shift) return false;
    }
    return true;
}

std::string CycInt::str() const {
    std::string out = "[";
    auto canon = canonical();
    for (std::size_t k = 0; k < canon.size(); ++k) {
        if (k) out += ',';
        out += canon[k].str();
    }
    out += ']';
    return out;
}

}  // namespace apcqc

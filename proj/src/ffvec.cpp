#include "apcqc/ffvec.hpp"

#include <sstream>

namespace apcqc {

bool is_prime(long long value) {
    if (value < 2) return false;
    if (value < 4) return true;
    if (value % 2 == 0) return false;
    for (long long d = 3; d * d <= value; d += 2) {
        if (value % d == 0) return false;
    }
    return true;
}

namespace {

void check_prime(int p) {
    if (!is_prime(p)) {
        throw std::invalid_argument("modulus must be prime, got " + std::to_string(p));
    }
}

void check_same_space(const FpVector& a, const FpVector& b) {
    if (a.p() != b.p() || a.n() != b.n()) {
        throw DimensionError("vectors live in different spaces: F_" + std::to_string(a.p()) +
                             "^" + std::to_string(a.n()) + " vs F_" + std::to_string(b.p()) +
                             "^" + std::to_string(b.n()));
    }
}

}  // namespace

FpVector::FpVector(int p, std::vector<int> coords) : p_(p), coords_(std::move(coords)) {
    check_prime(p);
    if (coords_.empty()) {
        throw std::invalid_argument("vector length must be at least 1");
    }
    for (int c : coords_) {
        if (c < 0 || c >= p_) {
            throw std::invalid_argument("coordinate " + std::to_string(c) +
                                        " out of range [0, " + std::to_string(p_ - 1) + "]");
        }
    }
}

FpVector FpVector::zero(int p, int n) {
    return FpVector(p, std::vector<int>(static_cast<std::size_t>(n), 0));
}

FpVector FpVector::unit(int p, int n, int pos, int value) {
    if (pos < 0 || pos >= n) {
        throw std::invalid_argument("position out of range");
    }
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    c[static_cast<std::size_t>(pos)] = ((value % p) + p) % p;
    return FpVector(p, std::move(c));
}

FpVector FpVector::parse(int p, const std::string& text) {
    std::vector<int> coords;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad coordinate '" + tok + "' in vector literal");
        }
        while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
        if (used != tok.size()) {
            throw std::invalid_argument("bad coordinate '" + tok + "' in vector literal");
        }
        coords.push_back(v);
    }
    if (coords.empty()) {
        throw std::invalid_argument("empty vector literal");
    }
    return FpVector(p, std::move(coords));
}

bool FpVector::is_zero() const {
    for (int c : coords_) {
        if (c != 0) return false;
    }
    return true;
}

int FpVector::weight() const {
    int w = 0;
    for (int c : coords_) {
        if (c != 0) ++w;
    }
    return w;
}

FpVector FpVector::operator+(const FpVector& rhs) const {
    check_same_space(*this, rhs);
    std::vector<int> out(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        out[i] = (coords_[i] + rhs.coords_[i]) % p_;
    }
    return FpVector(p_, std::move(out));
}

FpVector FpVector::operator-(const FpVector& rhs) const {
    check_same_space(*this, rhs);
    std::vector<int> out(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        out[i] = (coords_[i] - rhs.coords_[i] + p_) % p_;
    }
    return FpVector(p_, std::move(out));
}

FpVector FpVector::operator-() const {
    std::vector<int> out(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        out[i] = (p_ - coords_[i]) % p_;
    }
    return FpVector(p_, std::move(out));
}

FpVector FpVector::scaled(int c) const {
    int cc = ((c % p_) + p_) % p_;
    std::vector<int> out(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        out[i] = (coords_[i] * cc) % p_;
    }
    return FpVector(p_, std::move(out));
}

bool FpVector::operator<(const FpVector& rhs) const {
    check_same_space(*this, rhs);
    return coords_ < rhs.coords_;
}

std::string FpVector::str() const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(coords_[i]);
    }
    return out;
}

int dot(const FpVector& a, const FpVector& b) {
    check_same_space(a, b);
    long long acc = 0;
    for (int i = 0; i < a.n(); ++i) {
        acc += static_cast<long long>(a[i]) * b[i];
    }
    return static_cast<int>(acc % a.p());
}

int ws(const FpVector& a, const FpVector& b) {
    check_same_space(a, b);
    int w = 0;
    for (int i = 0; i < a.n(); ++i) {
        if (a[i] != 0 || b[i] != 0) ++w;
    }
    return w;
}

int wh(const FpVector& a, const FpVector& b) {
    check_same_space(a, b);
    int w = 0;
    for (int i = 0; i < a.n(); ++i) {
        if (a[i] != b[i]) ++w;
    }
    return w;
}

}  // namespace apcqc

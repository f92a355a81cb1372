#include "connmat/polynomial.hpp"

#include <algorithm>

#include "connmat/errors.hpp"

namespace connmat {

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { prune(); }

Polynomial Polynomial::constant(BigInt c) {
    Polynomial out;
    if (c != 0) out.coeffs_.push_back(std::move(c));
    return out;
}

Polynomial Polynomial::monomial(const BigInt& c, int degree) {
    if (degree < 0) throw DomainError("monomial degree must be nonnegative");
    Polynomial out;
    if (c != 0) {
        out.coeffs_.assign(static_cast<std::size_t>(degree) + 1, BigInt(0));
        out.coeffs_.back() = c;
    }
    return out;
}

BigInt Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return BigInt(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

Polynomial Polynomial::shifted(int k) const {
    if (k < 0) throw DomainError("shift exponent must be nonnegative");
    if (is_zero()) return {};
    Polynomial out;
    out.coeffs_.assign(static_cast<std::size_t>(k), BigInt(0));
    out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return out;
}

BigInt Polynomial::evaluate(const BigInt& x) const {
    BigInt acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    prune();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    prune();
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    Polynomial out;
    out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    out.prune();
    return out;
}

Polynomial operator*(const BigInt& c, const Polynomial& v) {
    if (c == 0) return {};
    Polynomial out = v;
    for (BigInt& x : out.coeffs_) x *= c;
    return out;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const BigInt& c = coeffs_[k];
        if (c == 0) continue;
        const BigInt mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (k == 0) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str();
            out += "p";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

void Polynomial::prune() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace connmat

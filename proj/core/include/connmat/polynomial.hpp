#pragma once

#include <string>
#include <vector>

#include "connmat/bigint.hpp"

namespace connmat {

/// Dense univariate polynomial in the edge probability p with exact integer
/// coefficients, stored degree-ascending with trailing zeros pruned. The zero
/// polynomial is the empty coefficient list.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<BigInt> coeffs);

    static Polynomial constant(BigInt c);
    static Polynomial monomial(const BigInt& c, int degree);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    BigInt coeff(int k) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    /// Multiplication by p^k.
    Polynomial shifted(int k) const;

    BigInt evaluate(const BigInt& x) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator*(const BigInt& c, const Polynomial& v);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Human rendering, degree ascending: "3p^2 - 2p^3"; "p"; "0".
    std::string to_string() const;

private:
    void prune();
    std::vector<BigInt> coeffs_;
};

}  // namespace connmat

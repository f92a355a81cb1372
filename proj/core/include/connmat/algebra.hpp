#pragma once

#include <map>
#include <string>

#include "connmat/bigint.hpp"
#include "connmat/partition.hpp"

namespace connmat {

/// A sparse integer-coefficient linear combination of partitions of {1..n}:
/// an element of the partition algebra. Zero coefficients are never stored.
class AlgebraVector {
public:
    explicit AlgebraVector(int n);

    static AlgebraVector basis(const Partition& p);
    /// The algebra unit: the all-singletons basis vector.
    static AlgebraVector unit(int n);

    int n() const { return n_; }
    bool empty() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Partition, BigInt>& terms() const { return terms_; }
    BigInt coeff(const Partition& p) const;

    void add_term(const Partition& p, const BigInt& c);

    AlgebraVector& operator+=(const AlgebraVector& rhs);
    AlgebraVector& operator-=(const AlgebraVector& rhs);
    friend AlgebraVector operator+(AlgebraVector lhs, const AlgebraVector& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend AlgebraVector operator-(AlgebraVector lhs, const AlgebraVector& rhs) {
        lhs -= rhs;
        return lhs;
    }
    /// Bilinear extension of the monoid product.
    friend AlgebraVector operator*(const AlgebraVector& lhs, const AlgebraVector& rhs);
    friend AlgebraVector operator*(const BigInt& c, const AlgebraVector& v);

    friend bool operator==(const AlgebraVector& a, const AlgebraVector& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    /// Diagnostic rendering, e.g. "1|2|3 - 1 2|3 - 1 3|2 - 1|2 3 + 2*1 2 3".
    std::string to_string() const;

private:
    int n_ = 0;
    std::map<Partition, BigInt> terms_;
};

/// The elimination operator: pi(A) = A * prod over cross-block transpositions
/// tau of (e - <tau>), iterated as v <- v - v*<tau> in lexicographic (i,j)
/// order. Support lies in the interval [A, one-block]; the coefficient of A
/// itself is 1.
AlgebraVector pi(const Partition& a);

/// Connectivity number: the coefficient of the one-block partition in pi(a).
BigInt connectivity_number(const Partition& a);

}  // namespace connmat

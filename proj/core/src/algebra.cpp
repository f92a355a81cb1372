#include "connmat/algebra.hpp"

#include "connmat/errors.hpp"

namespace connmat {

AlgebraVector::AlgebraVector(int n) : n_(n) {
    if (n < 1) throw DomainError("algebra vector needs a positive ground set");
}

AlgebraVector AlgebraVector::basis(const Partition& p) {
    AlgebraVector v(p.n());
    v.terms_.emplace(p, 1);
    return v;
}

AlgebraVector AlgebraVector::unit(int n) { return basis(Partition::singletons(n)); }

BigInt AlgebraVector::coeff(const Partition& p) const {
    const auto it = terms_.find(p);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void AlgebraVector::add_term(const Partition& p, const BigInt& c) {
    if (p.n() != n_) throw DomainError("algebra vector: mismatched ground sets");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

AlgebraVector& AlgebraVector::operator+=(const AlgebraVector& rhs) {
    if (n_ != rhs.n_) throw DomainError("algebra vector sum: mismatched ground sets");
    for (const auto& [p, c] : rhs.terms_) add_term(p, c);
    return *this;
}

AlgebraVector& AlgebraVector::operator-=(const AlgebraVector& rhs) {
    if (n_ != rhs.n_) throw DomainError("algebra vector difference: mismatched ground sets");
    for (const auto& [p, c] : rhs.terms_) add_term(p, -c);
    return *this;
}

AlgebraVector operator*(const AlgebraVector& lhs, const AlgebraVector& rhs) {
    if (lhs.n_ != rhs.n_) throw DomainError("algebra vector product: mismatched ground sets");
    AlgebraVector out(lhs.n_);
    for (const auto& [pl, cl] : lhs.terms_)
        for (const auto& [pr, cr] : rhs.terms_) out.add_term(product(pl, pr), cl * cr);
    return out;
}

AlgebraVector operator*(const BigInt& c, const AlgebraVector& v) {
    AlgebraVector out(v.n());
    if (c == 0) return out;
    for (const auto& [p, cv] : v.terms()) out.add_term(p, c * cv);
    return out;
}

std::string AlgebraVector::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [p, c] : terms_) {
        const bool negative = c < 0;
        const BigInt mag = abs(c);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += p.to_string();
    }
    return out;
}

AlgebraVector pi(const Partition& a) {
    const int n = a.n();
    AlgebraVector v = AlgebraVector::basis(a);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (a.block_of(i) == a.block_of(j)) continue;
            const AlgebraVector tau = AlgebraVector::basis(Partition::transposition(n, i, j));
            v -= v * tau;
        }
    }
    return v;
}

BigInt connectivity_number(const Partition& a) {
    return pi(a).coeff(Partition::one_block(a.n()));
}

}  // namespace connmat

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace connmat {

/// A permutation of {1..n} as a 1-based image array: element i maps to sigma[i-1].
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& sigma, int n);

/// A set partition of {1..n} kept in canonical restricted-growth form.
///
/// rgs()[i] is the block label of element i+1. Labels appear in order of first
/// use, so label k belongs to the block with the (k+1)-smallest minimum
/// element. The canonical form is unique per partition, which makes equality
/// and ordering plain lexicographic comparisons.
class Partition {
public:
    /// Accepts arbitrary block labels of length n and canonicalizes them.
    Partition(int n, const std::vector<int>& labels);

    static Partition singletons(int n);
    static Partition one_block(int n);
    /// The partition whose only non-singleton block is {i, j}.
    static Partition transposition(int n, int i, int j);
    static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

    /// Parses "1 2|3 4 5|6". Blocks may be unsorted; the elements must cover
    /// 1..n exactly once, where n is the largest element mentioned.
    static Partition parse(const std::string& text);

    /// Blocks sorted by minimum element, elements ascending, e.g. "1 2|3".
    std::string to_string() const;

    int n() const { return n_; }
    const std::vector<std::uint8_t>& rgs() const { return rgs_; }
    int block_of(int element) const { return rgs_[static_cast<std::size_t>(element) - 1]; }
    int num_blocks() const { return blocks_; }
    bool is_trivial() const { return blocks_ == 1; }

    std::vector<std::vector<int>> blocks() const;

    /// Block sizes sorted descending. Two partitions are conjugate under the
    /// S_n relabeling action iff their signatures are equal.
    std::vector<int> signature() const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.n_ == b.n_ && a.rgs_ == b.rgs_;
    }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.rgs_ <=> b.rgs_;
    }

private:
    int n_ = 0;
    int blocks_ = 0;
    std::vector<std::uint8_t> rgs_;
};

/// The monoid product: the finest partition coarser than both operands
/// (the join in the refinement lattice), computed by union-find merge.
Partition product(const Partition& a, const Partition& b);

/// Refinement order: true iff every block of a lies inside a block of b.
bool leq(const Partition& a, const Partition& b);
bool strictly_finer(const Partition& a, const Partition& b);

/// The conjugation action sigma(A): element i lies in a block of A iff
/// sigma(i) lies in the corresponding block of the result.
Partition conjugate(const Permutation& sigma, const Partition& a);

}  // namespace connmat

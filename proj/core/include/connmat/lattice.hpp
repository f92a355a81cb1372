#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <vector>

#include "connmat/bigint.hpp"
#include "connmat/partition.hpp"

namespace connmat {

/// Default ground-set cap; Bell(12) = 4,213,597 is the largest enumeration
/// kept in memory by default. Raise per call (or via --max-n) if you mean it.
inline constexpr int kDefaultMaxGroundSet = 12;

/// |Part_n| via the Bell triangle.
BigInt bell_number(int n);

/// All set partitions of {1..n}, each exactly once, in lexicographic
/// restricted-growth-string order.
std::vector<Partition> enumerate_partitions(int n, int max_n = kDefaultMaxGroundSet);

/// One orbit of the S_n conjugation action. Membership is exactly "same
/// block-size multiset".
struct ConjugationClass {
    std::vector<int> signature;      // block sizes, descending
    std::vector<Partition> members;  // lexicographic RGS order
    int num_blocks() const { return static_cast<int>(signature.size()); }
};

/// Classes ordered by (num_blocks descending, signature ascending). Strict
/// refinement always increases the block count, so this is a linear extension
/// of the induced partial order on classes.
std::vector<ConjugationClass> conjugation_classes(int n, int max_n = kDefaultMaxGroundSet);

struct ClassRange {
    std::vector<int> signature;
    std::size_t begin = 0;  // half-open [begin, end) into the sequence
    std::size_t end = 0;
};

/// A linear extension of the refinement order on Part_n (finer comes first)
/// in which each conjugation class occupies a contiguous index range.
class CoherentOrder {
public:
    /// The default order: num_blocks descending, then class signature
    /// ascending, then RGS order within a class.
    static CoherentOrder standard(int n, int max_n = kDefaultMaxGroundSet);

    /// Builds from an explicit sequence (e.g. an order file). Validates that
    /// the sequence covers Part_n exactly, respects refinement and keeps
    /// classes contiguous; throws ParseError otherwise.
    static CoherentOrder from_sequence(std::vector<Partition> sequence);

    int n() const { return n_; }
    std::size_t size() const { return sequence_.size(); }
    const std::vector<Partition>& sequence() const { return sequence_; }
    const Partition& at(std::size_t i) const { return sequence_[i]; }
    const std::vector<ClassRange>& class_ranges() const { return classes_; }
    std::size_t index_of(const Partition& p) const;

    friend bool operator==(const CoherentOrder& a, const CoherentOrder& b) {
        return a.sequence_ == b.sequence_;
    }

private:
    CoherentOrder() = default;
    void build_index_and_classes();

    int n_ = 0;
    std::vector<Partition> sequence_;
    std::vector<ClassRange> classes_;
    std::map<Partition, std::size_t> index_;
};

/// Reads one partition per line; blank lines and '#' comments are skipped.
std::vector<Partition> read_partition_lines(std::istream& in);

}  // namespace connmat

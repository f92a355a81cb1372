#include "connmat/lattice.hpp"

#include <algorithm>
#include <istream>
#include <string>
#include <tuple>

#include "connmat/errors.hpp"

namespace connmat {

BigInt bell_number(int n) {
    if (n < 0) throw DomainError("bell_number: n must be nonnegative");
    std::vector<BigInt> row{1};  // Bell triangle, row per n
    for (int k = 0; k < n; ++k) {
        std::vector<BigInt> next;
        next.reserve(row.size() + 1);
        next.push_back(row.back());
        for (const BigInt& x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

static void check_ground_set(int n, int max_n) {
    if (n < 1) throw DomainError("ground set size must be positive");
    if (n > max_n || n > 255)
        throw SizeLimitError("n=" + std::to_string(n) + " exceeds the ground-set cap " +
                             std::to_string(std::min(max_n, 255)) +
                             " (Bell numbers grow fast; raise the cap explicitly if you mean it)");
}

std::vector<Partition> enumerate_partitions(int n, int max_n) {
    check_ground_set(n, max_n);
    std::vector<Partition> out;
    out.reserve(bell_number(n).get_ui());
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    // lexicographic restricted-growth strings: position i may use 0..max+1
    auto rec = [&](auto&& self, int i, int mx) -> void {
        if (i == n) {
            out.emplace_back(n, labels);
            return;
        }
        for (int lab = 0; lab <= mx + 1; ++lab) {
            labels[static_cast<std::size_t>(i)] = lab;
            self(self, i + 1, std::max(mx, lab));
        }
    };
    rec(rec, 1, 0);
    return out;
}

std::vector<ConjugationClass> conjugation_classes(int n, int max_n) {
    check_ground_set(n, max_n);
    // key: (-num_blocks, signature) gives the coherent class order
    std::map<std::pair<int, std::vector<int>>, std::vector<Partition>> grouped;
    for (Partition& p : enumerate_partitions(n, max_n)) {
        auto sig = p.signature();
        grouped[{-p.num_blocks(), std::move(sig)}].push_back(std::move(p));
    }
    std::vector<ConjugationClass> out;
    out.reserve(grouped.size());
    for (auto& [key, members] : grouped)
        out.push_back(ConjugationClass{key.second, std::move(members)});
    return out;
}

CoherentOrder CoherentOrder::standard(int n, int max_n) {
    CoherentOrder order;
    order.n_ = n;
    for (auto& cls : conjugation_classes(n, max_n)) {
        for (Partition& p : cls.members) order.sequence_.push_back(std::move(p));
    }
    order.build_index_and_classes();
    return order;
}

CoherentOrder CoherentOrder::from_sequence(std::vector<Partition> sequence) {
    if (sequence.empty()) throw ParseError("order: empty sequence");
    const int n = sequence.front().n();
    for (const Partition& p : sequence)
        if (p.n() != n) throw ParseError("order: mixed ground-set sizes");

    std::vector<Partition> sorted = sequence;
    std::sort(sorted.begin(), sorted.end());
    const std::vector<Partition> all = enumerate_partitions(n);
    if (sorted != all) {
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ParseError("order: duplicate partition in sequence");
        throw ParseError("order: sequence must list every partition of {1.." + std::to_string(n) +
                         "} exactly once (expected " + std::to_string(all.size()) + ", got " +
                         std::to_string(sequence.size()) + ")");
    }

    for (std::size_t i = 0; i < sequence.size(); ++i)
        for (std::size_t j = i + 1; j < sequence.size(); ++j)
            if (strictly_finer(sequence[j], sequence[i]))
                throw ParseError("order: not coherent: '" + sequence[j].to_string() +
                                 "' (position " + std::to_string(j + 1) +
                                 ") is finer than '" + sequence[i].to_string() + "' (position " +
                                 std::to_string(i + 1) + ")");

    CoherentOrder order;
    order.n_ = n;
    order.sequence_ = std::move(sequence);
    order.build_index_and_classes();
    return order;
}

void CoherentOrder::build_index_and_classes() {
    index_.clear();
    classes_.clear();
    for (std::size_t i = 0; i < sequence_.size(); ++i) index_[sequence_[i]] = i;

    std::size_t begin = 0;
    while (begin < sequence_.size()) {
        const std::vector<int> sig = sequence_[begin].signature();
        std::size_t end = begin + 1;
        while (end < sequence_.size() && sequence_[end].signature() == sig) ++end;
        classes_.push_back(ClassRange{sig, begin, end});
        begin = end;
    }
    std::map<std::vector<int>, int> seen;
    for (const ClassRange& cls : classes_)
        if (++seen[cls.signature] > 1)
            throw ParseError("order: conjugation class with signature of '" +
                             sequence_[cls.begin].to_string() + "' is not contiguous");
}

std::size_t CoherentOrder::index_of(const Partition& p) const {
    const auto it = index_.find(p);
    if (it == index_.end())
        throw DomainError("partition '" + p.to_string() + "' is not in this order");
    return it->second;
}

std::vector<Partition> read_partition_lines(std::istream& in) {
    std::vector<Partition> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        try {
            out.push_back(Partition::parse(line));
        } catch (const ParseError& err) {
            throw ParseError("line " + std::to_string(lineno) + ": " + err.what());
        }
    }
    return out;
}

}  // namespace connmat

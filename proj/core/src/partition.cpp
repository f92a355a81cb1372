#include "connmat/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "connmat/errors.hpp"

namespace connmat {

namespace {

constexpr int kMaxElements = 255;  // labels fit in uint8_t

std::vector<std::uint8_t> canonicalize(int n, const std::vector<int>& labels) {
    std::vector<int> remap;
    std::vector<std::uint8_t> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int lab = labels[static_cast<std::size_t>(i)];
        auto it = std::find(remap.begin(), remap.end(), lab);
        std::size_t idx;
        if (it == remap.end()) {
            idx = remap.size();
            remap.push_back(lab);
        } else {
            idx = static_cast<std::size_t>(it - remap.begin());
        }
        out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(idx);
    }
    return out;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        const int ra = find(a), rb = find(b);
        if (ra != rb) parent[static_cast<std::size_t>(ra)] = rb;
    }
};

}  // namespace

bool is_permutation(const Permutation& sigma, int n) {
    if (static_cast<int>(sigma.size()) != n) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : sigma) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v) - 1]) return false;
        seen[static_cast<std::size_t>(v) - 1] = true;
    }
    return true;
}

Partition::Partition(int n, const std::vector<int>& labels) : n_(n) {
    if (n < 1) throw DomainError("partition ground set must be nonempty (n >= 1)");
    if (n > kMaxElements) throw DomainError("partition ground set too large (n > 255)");
    if (static_cast<int>(labels.size()) != n)
        throw DomainError("label array length does not match n");
    rgs_ = canonicalize(n, labels);
    blocks_ = 1 + *std::max_element(rgs_.begin(), rgs_.end());
}

Partition Partition::singletons(int n) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 0);
    return Partition(n, labels);
}

Partition Partition::one_block(int n) {
    return Partition(n, std::vector<int>(static_cast<std::size_t>(n), 0));
}

Partition Partition::transposition(int n, int i, int j) {
    if (i < 1 || i > n || j < 1 || j > n || i == j)
        throw DomainError("transposition endpoints must be distinct elements of 1..n");
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    labels[static_cast<std::size_t>(j) - 1] = i;
    labels[static_cast<std::size_t>(i) - 1] = i;
    return Partition(n, labels);
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> labels(static_cast<std::size_t>(n), -1);
    int lab = 0;
    for (const auto& block : blocks) {
        if (block.empty()) throw DomainError("empty block");
        for (int e : block) {
            if (e < 1 || e > n) throw DomainError("element out of range 1..n");
            if (labels[static_cast<std::size_t>(e) - 1] != -1)
                throw DomainError("element repeated across blocks");
            labels[static_cast<std::size_t>(e) - 1] = lab;
        }
        ++lab;
    }
    for (int i = 0; i < n; ++i)
        if (labels[static_cast<std::size_t>(i)] == -1)
            throw DomainError("element missing from blocks");
    return Partition(n, labels);
}

Partition Partition::parse(const std::string& text) {
    std::vector<std::vector<int>> blocks;
    std::string piece;
    std::stringstream whole(text);
    while (std::getline(whole, piece, '|')) {
        std::istringstream in(piece);
        std::vector<int> block;
        int e;
        while (in >> e) block.push_back(e);
        if (!in.eof()) throw ParseError("partition text: expected integers: '" + piece + "'");
        if (block.empty()) throw ParseError("partition text: empty block in '" + text + "'");
        blocks.push_back(std::move(block));
    }
    if (blocks.empty()) throw ParseError("partition text is empty");
    int n = 0;
    for (const auto& block : blocks)
        for (int e : block) {
            if (e < 1) throw ParseError("partition text: elements are 1-based");
            n = std::max(n, e);
        }
    try {
        return from_blocks(n, blocks);
    } catch (const DomainError& err) {
        throw ParseError(std::string("partition text '") + text + "': " + err.what());
    }
}

std::string Partition::to_string() const {
    std::string out;
    for (const auto& block : blocks()) {
        if (!out.empty()) out += '|';
        for (std::size_t k = 0; k < block.size(); ++k) {
            if (k > 0) out += ' ';
            out += std::to_string(block[k]);
        }
    }
    return out;
}

std::vector<std::vector<int>> Partition::blocks() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(blocks_));
    for (int i = 0; i < n_; ++i)
        out[rgs_[static_cast<std::size_t>(i)]].push_back(i + 1);
    return out;
}

std::vector<int> Partition::signature() const {
    std::vector<int> sizes(static_cast<std::size_t>(blocks_), 0);
    for (int i = 0; i < n_; ++i) ++sizes[rgs_[static_cast<std::size_t>(i)]];
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
    return sizes;
}

Partition product(const Partition& a, const Partition& b) {
    if (a.n() != b.n()) throw DomainError("product: mismatched ground sets");
    const int n = a.n();
    UnionFind uf(n);
    // link each element to the first element of its block, in both partitions
    std::vector<int> first_a(static_cast<std::size_t>(a.num_blocks()), -1);
    std::vector<int> first_b(static_cast<std::size_t>(b.num_blocks()), -1);
    for (int i = 0; i < n; ++i) {
        int& fa = first_a[a.rgs()[static_cast<std::size_t>(i)]];
        if (fa == -1)
            fa = i;
        else
            uf.unite(fa, i);
        int& fb = first_b[b.rgs()[static_cast<std::size_t>(i)]];
        if (fb == -1)
            fb = i;
        else
            uf.unite(fb, i);
    }
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = uf.find(i);
    return Partition(n, labels);
}

bool leq(const Partition& a, const Partition& b) {
    if (a.n() != b.n()) throw DomainError("leq: mismatched ground sets");
    std::vector<int> image(static_cast<std::size_t>(a.num_blocks()), -1);
    for (int i = 0; i < a.n(); ++i) {
        int& img = image[a.rgs()[static_cast<std::size_t>(i)]];
        const int lb = b.rgs()[static_cast<std::size_t>(i)];
        if (img == -1)
            img = lb;
        else if (img != lb)
            return false;
    }
    return true;
}

bool strictly_finer(const Partition& a, const Partition& b) { return a != b && leq(a, b); }

Partition conjugate(const Permutation& sigma, const Partition& a) {
    if (!is_permutation(sigma, a.n()))
        throw DomainError("conjugate: sigma is not a permutation of 1..n");
    std::vector<int> labels(static_cast<std::size_t>(a.n()));
    for (int i = 0; i < a.n(); ++i)
        labels[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)]) - 1] =
            a.rgs()[static_cast<std::size_t>(i)];
    return Partition(a.n(), labels);
}

}  // namespace connmat

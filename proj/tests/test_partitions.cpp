#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "connmat/errors.hpp"
#include "connmat/lattice.hpp"
#include "connmat/partition.hpp"

using namespace connmat;

namespace {

// independent Bell oracle: the Bell triangle over unsigned long long (n <= 12)
std::vector<unsigned long long> bell_triangle(int up_to) {
    std::vector<unsigned long long> bells{1};  // Bell(0)
    std::vector<unsigned long long> row{1};
    for (int k = 0; k < up_to; ++k) {
        std::vector<unsigned long long> next{row.back()};
        for (unsigned long long x : row) next.push_back(next.back() + x);
        row = std::move(next);
        bells.push_back(row.front());
    }
    return bells;
}

Partition random_partition(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> lab(0, n - 1);
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int& x : labels) x = lab(rng);
    return Partition(n, labels);
}

std::vector<Permutation> all_permutations(int n) {
    Permutation sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

}  // namespace

TEST_CASE("enumeration counts match the Bell triangle") {
    const auto bells = bell_triangle(10);
    for (int n = 1; n <= 10; ++n) {
        CHECK(enumerate_partitions(n).size() == bells[static_cast<std::size_t>(n)]);
        CHECK(bell_number(n) == BigInt(static_cast<unsigned long>(bells[static_cast<std::size_t>(n)])));
    }
}

TEST_CASE("enumeration basics") {
    CHECK(enumerate_partitions(1).size() == 1);
    CHECK(enumerate_partitions(1).front() == Partition::one_block(1));

    const auto part3 = enumerate_partitions(3);
    REQUIRE(part3.size() == 5);
    // lexicographic RGS order
    CHECK(part3[0] == Partition::parse("1 2 3"));
    CHECK(part3[1] == Partition::parse("1 2|3"));
    CHECK(part3[2] == Partition::parse("1 3|2"));
    CHECK(part3[3] == Partition::parse("1|2 3"));
    CHECK(part3[4] == Partition::parse("1|2|3"));

    CHECK(enumerate_partitions(4).size() == 15);

    // every emitted value is canonical and distinct
    auto sorted = part3;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("size caps") {
    CHECK_THROWS_AS(enumerate_partitions(0), DomainError);
    CHECK_THROWS_AS(enumerate_partitions(13), SizeLimitError);
    CHECK_THROWS_AS(enumerate_partitions(3, 2), SizeLimitError);  // lowered cap
    CHECK_THROWS_AS(conjugation_classes(13), SizeLimitError);
    CHECK_THROWS_AS(CoherentOrder::standard(13), SizeLimitError);
}

TEST_CASE("canonical form is unique per block set") {
    const Partition a = Partition::from_blocks(6, {{3, 4, 5}, {6}, {2, 1}});
    const Partition b = Partition::from_blocks(6, {{1, 2}, {5, 4, 3}, {6}});
    CHECK(a == b);
    CHECK(a.to_string() == "1 2|3 4 5|6");
    CHECK(a.num_blocks() == 3);
    CHECK(Partition::parse(a.to_string()) == a);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Partition p = random_partition(6, rng);
        auto blocks = p.blocks();
        std::shuffle(blocks.begin(), blocks.end(), rng);
        for (auto& block : blocks) std::shuffle(block.begin(), block.end(), rng);
        CHECK(Partition::from_blocks(6, blocks) == p);
        CHECK(Partition::parse(p.to_string()) == p);
    }
}

TEST_CASE("parse rejects malformed text") {
    CHECK_THROWS_AS(Partition::parse(""), ParseError);
    CHECK_THROWS_AS(Partition::parse("1 2||3"), ParseError);
    CHECK_THROWS_AS(Partition::parse("1 2|2 3"), ParseError);  // repeated element
    CHECK_THROWS_AS(Partition::parse("1|3"), ParseError);      // missing 2
    CHECK_THROWS_AS(Partition::parse("0 1|2"), ParseError);    // not 1-based
    CHECK_THROWS_AS(Partition::parse("1 x|2"), ParseError);
    CHECK(Partition::parse("3 1|2") == Partition::parse("1 3|2"));
}

TEST_CASE("product examples") {
    const Partition merged =
        product(Partition::parse("1 2|3"), Partition::parse("1|2 3"));
    CHECK(merged == Partition::one_block(3));
    CHECK(merged.is_trivial());

    std::mt19937 rng(11);
    for (int n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 30; ++trial) {
            const Partition a = random_partition(n, rng);
            CHECK(product(a, Partition::singletons(n)) == a);  // unit
            CHECK(product(a, a) == a);                         // idempotent
            CHECK(product(a, Partition::one_block(n)).is_trivial());
        }
    }
    CHECK_THROWS_AS(product(Partition::one_block(2), Partition::one_block(3)), DomainError);
}

TEST_CASE("monoid laws on random triples") {
    std::mt19937 rng(23);
    for (int n = 2; n <= 6; ++n) {
        for (int trial = 0; trial < 60; ++trial) {
            const Partition a = random_partition(n, rng);
            const Partition b = random_partition(n, rng);
            const Partition c = random_partition(n, rng);
            CHECK(product(a, b) == product(b, a));
            CHECK(product(product(a, b), c) == product(a, product(b, c)));
        }
    }
}

TEST_CASE("leq is the refinement order and matches the product law") {
    CHECK(leq(Partition::parse("1|2|3"), Partition::parse("1 3|2")));
    CHECK(leq(Partition::parse("1 2|3"), Partition::one_block(3)));
    CHECK_FALSE(leq(Partition::parse("1 2|3"), Partition::parse("1 3|2")));

    for (int n = 1; n <= 5; ++n) {
        const auto all = enumerate_partitions(n);
        for (const auto& a : all)
            for (const auto& b : all) CHECK(leq(a, b) == (product(a, b) == b));
    }
    CHECK_THROWS_AS(leq(Partition::one_block(2), Partition::one_block(3)), DomainError);
}

TEST_CASE("num_blocks and is_trivial") {
    CHECK(Partition::parse("1 2|3 4 5|6").num_blocks() == 3);
    CHECK(Partition::singletons(5).num_blocks() == 5);
    CHECK(Partition::one_block(4).num_blocks() == 1);
    CHECK(Partition::one_block(4).is_trivial());
    CHECK_FALSE(Partition::parse("1 2|3").is_trivial());
}

TEST_CASE("conjugation relabels and fixes the unit") {
    const Permutation swap12{2, 1, 3};
    CHECK(conjugate(swap12, Partition::parse("1 3|2")) == Partition::parse("2 3|1"));

    Permutation id{1, 2, 3, 4};
    for (const auto& p : enumerate_partitions(4)) CHECK(conjugate(id, p) == p);

    for (const auto& sigma : all_permutations(4))
        CHECK(conjugate(sigma, Partition::singletons(4)) == Partition::singletons(4));

    CHECK_THROWS_AS(conjugate(Permutation{1, 1, 3}, Partition::one_block(3)), DomainError);
    CHECK_THROWS_AS(conjugate(Permutation{1, 2}, Partition::one_block(3)), DomainError);
}

TEST_CASE("conjugation is a monoid morphism (exhaustive at n=4)") {
    const auto all = enumerate_partitions(4);
    for (const auto& sigma : all_permutations(4))
        for (const auto& a : all)
            for (const auto& b : all)
                CHECK(conjugate(sigma, product(a, b)) ==
                      product(conjugate(sigma, a), conjugate(sigma, b)));
}

TEST_CASE("conjugation classes group by signature in coherent class order") {
    const auto c2 = conjugation_classes(2);
    REQUIRE(c2.size() == 2);
    CHECK(c2[0].members.size() == 1);
    CHECK(c2[1].members.size() == 1);

    const auto c3 = conjugation_classes(3);
    REQUIRE(c3.size() == 3);
    CHECK(c3[0].members.size() == 1);
    CHECK(c3[1].members.size() == 3);
    CHECK(c3[2].members.size() == 1);

    const auto c4 = conjugation_classes(4);
    REQUIRE(c4.size() == 5);
    const std::vector<std::size_t> sizes{1, 6, 3, 4, 1};
    const std::vector<std::vector<int>> sigs{
        {1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(c4[i].members.size() == sizes[i]);
        CHECK(c4[i].signature == sigs[i]);
        for (const auto& p : c4[i].members) CHECK(p.signature() == sigs[i]);
    }
}

TEST_CASE("equal signatures admit a realizing permutation (search oracle, n<=5)") {
    for (int n = 2; n <= 5; ++n) {
        const auto perms = all_permutations(n);
        for (const auto& cls : conjugation_classes(n)) {
            const Partition& rep = cls.members.front();
            for (const auto& other : cls.members) {
                const bool found =
                    std::any_of(perms.begin(), perms.end(), [&](const Permutation& sigma) {
                        return conjugate(sigma, rep) == other;
                    });
                CHECK(found);
            }
        }
    }
}

TEST_CASE("coherent order invariants") {
    for (int n = 1; n <= 5; ++n) {
        const CoherentOrder order = CoherentOrder::standard(n);
        REQUIRE(order.size() == enumerate_partitions(n).size());
        const auto& seq = order.sequence();
        for (std::size_t i = 0; i < seq.size(); ++i)
            for (std::size_t j = i + 1; j < seq.size(); ++j)
                CHECK_FALSE(strictly_finer(seq[j], seq[i]));

        // class ranges tile the sequence and block counts never increase
        std::size_t cursor = 0;
        for (const auto& cls : order.class_ranges()) {
            CHECK(cls.begin == cursor);
            cursor = cls.end;
            for (std::size_t i = cls.begin; i < cls.end; ++i)
                CHECK(seq[i].signature() == cls.signature);
        }
        CHECK(cursor == order.size());
        for (std::size_t i = 0; i + 1 < seq.size(); ++i)
            CHECK(seq[i].num_blocks() >= seq[i + 1].num_blocks());
        for (std::size_t i = 0; i < seq.size(); ++i) CHECK(order.index_of(seq[i]) == i);
    }

    const CoherentOrder o1 = CoherentOrder::standard(1);
    CHECK(o1.size() == 1);
    CHECK(o1.at(0) == Partition::one_block(1));

    // n=3: singletons first, the three pair partitions, the one-block last
    const CoherentOrder o3 = CoherentOrder::standard(3);
    CHECK(o3.at(0) == Partition::singletons(3));
    CHECK(o3.at(4) == Partition::one_block(3));
}

TEST_CASE("n=4 class order matches the Hasse levels") {
    const CoherentOrder order = CoherentOrder::standard(4);
    const auto& ranges = order.class_ranges();
    REQUIRE(ranges.size() == 5);
    CHECK(ranges[0].signature == std::vector<int>{1, 1, 1, 1});
    CHECK(ranges[1].signature == std::vector<int>{2, 1, 1});
    CHECK(ranges[2].signature == std::vector<int>{2, 2});
    CHECK(ranges[3].signature == std::vector<int>{3, 1});
    CHECK(ranges[4].signature == std::vector<int>{4});
}

TEST_CASE("from_sequence accepts a hand-listed coherent order and valid variants") {
    std::vector<Partition> listed;
    for (const char* text : {"1|2|3", "1|2 3", "1 3|2", "1 2|3", "1 2 3"})
        listed.push_back(Partition::parse(text));
    const CoherentOrder order = CoherentOrder::from_sequence(listed);
    CHECK(order.size() == 5);
    CHECK(order.class_ranges().size() == 3);

    // swapping the two incomparable n=4 classes stays coherent
    const CoherentOrder standard4 = CoherentOrder::standard(4);
    std::vector<Partition> swapped(standard4.sequence());
    const auto& r = standard4.class_ranges();
    std::rotate(swapped.begin() + static_cast<long>(r[2].begin),
                swapped.begin() + static_cast<long>(r[3].begin),
                swapped.begin() + static_cast<long>(r[3].end));
    CHECK(CoherentOrder::from_sequence(swapped).class_ranges()[2].signature ==
          std::vector<int>{3, 1});
}

TEST_CASE("from_sequence rejects invalid sequences") {
    const CoherentOrder standard = CoherentOrder::standard(3);
    std::vector<Partition> seq = standard.sequence();

    std::vector<Partition> missing(seq.begin(), seq.end() - 1);
    CHECK_THROWS_AS(CoherentOrder::from_sequence(missing), ParseError);

    std::vector<Partition> duplicated = seq;
    duplicated[4] = duplicated[0];
    CHECK_THROWS_AS(CoherentOrder::from_sequence(duplicated), ParseError);

    std::vector<Partition> incoherent = seq;
    std::swap(incoherent.front(), incoherent.back());  // one-block before singletons
    CHECK_THROWS_AS(CoherentOrder::from_sequence(incoherent), ParseError);

    // coherent but class-interleaved: mix the [2,2] and [3,1] classes of n=4
    const CoherentOrder standard4 = CoherentOrder::standard(4);
    std::vector<Partition> interleaved = standard4.sequence();
    const auto& ranges = standard4.class_ranges();
    std::swap(interleaved[ranges[2].begin + 1], interleaved[ranges[3].begin]);
    CHECK_THROWS_AS(CoherentOrder::from_sequence(interleaved), ParseError);
}

TEST_CASE("order files parse with comments and report bad lines") {
    std::istringstream good("# reference order\n1|2|3\n\n1|2 3\n1 3|2\n1 2|3\n1 2 3\n");
    const auto seq = read_partition_lines(good);
    CHECK(seq.size() == 5);
    CHECK(CoherentOrder::from_sequence(seq).n() == 3);

    std::istringstream bad("1|2|3\n1|zzz\n");
    CHECK_THROWS_WITH_AS(read_partition_lines(bad), doctest::Contains("line 2"), ParseError);
}

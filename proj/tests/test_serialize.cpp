#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "connmat/reliability.hpp"
#include "connmat/serialize.hpp"

using namespace connmat;

namespace {

CoherentOrder reference_order_3() {
    std::vector<Partition> seq;
    for (const char* text : {"1|2|3", "1|2 3", "1 3|2", "1 2|3", "1 2 3"})
        seq.push_back(Partition::parse(text));
    return CoherentOrder::from_sequence(seq);
}

}  // namespace

TEST_CASE("algebra vectors serialize sorted by partition text") {
    const json doc = algebra_to_json(pi(Partition::singletons(3)));
    CHECK(doc["n"] == 3);
    const auto& terms = doc["terms"];
    REQUIRE(terms.size() == 5);
    CHECK(terms[0] == json::array({"2", "1 2 3"}));
    CHECK(terms[1] == json::array({"-1", "1 2|3"}));
    CHECK(terms[4] == json::array({"1", "1|2|3"}));
    for (std::size_t i = 1; i < terms.size(); ++i)
        CHECK(terms[i - 1][1].get<std::string>() < terms[i][1].get<std::string>());
}

TEST_CASE("matrix exports carry the order and exact entries") {
    const CoherentOrder order = reference_order_3();
    const ConnMatrix a = build_connectivity_matrix(order);

    CHECK(matrix_to_text(a.entries) ==
          "0 0 0 0 1\n0 0 1 1 1\n0 1 0 1 1\n0 1 1 0 1\n1 1 1 1 1\n");

    const json doc = matrix_to_json("connectivity", order, a.entries);
    CHECK(doc["kind"] == "connectivity");
    CHECK(doc["n"] == 3);
    CHECK(doc["dimension"] == 5);
    CHECK(doc["order"][0] == "1|2|3");
    CHECK(doc["order"][4] == "1 2 3");
    CHECK(doc["entries"][0] == json::array({0, 0, 0, 0, 1}));

    const EliminationMatrix b = build_elimination_matrix(order);
    const json elim = matrix_to_json("elimination", order, b.entries);
    CHECK(elim["entries"][4] == json::array({"2", "-1", "-1", "-1", "1"}));
    CHECK(matrix_to_text(b.entries).substr(0, 10) == "1 0 0 0 0\n");
}

TEST_CASE("polynomial JSON lists coefficient strings degree-ascending") {
    const Polynomial r = reliability_polynomial(complete_graph(3));
    const json doc = polynomial_to_json(r);
    CHECK(doc["degree"] == 3);
    CHECK(doc["text"] == "3p^2 - 2p^3");
    CHECK(doc["coefficients"] == json::array({"0", "0", "3", "-2"}));
}

TEST_CASE("graph JSON carries multiplicities and loop bookkeeping") {
    const json doc = graph_to_json(quotient_graph(4, Partition::parse("1 2|3|4")));
    CHECK(doc["nodes"] == 3);
    CHECK(doc["edge_count"] == 5);
    CHECK(doc["dropped_loops"] == 1);
    CHECK(doc["edges"].size() == 3);
}

TEST_CASE("verification reports are machine-readable and deterministic") {
    VerifyOptions options;
    options.threads = 1;
    const VerifyReport report = verify_theorem(4, options);
    const json doc = report_to_json(report);
    CHECK(doc["n"] == 4);
    CHECK(doc["bell"] == "15");
    CHECK(doc["det_alpha"] == "384");
    CHECK(doc["det_direct"] == "384");
    CHECK(doc["formula_abs"] == "384");
    CHECK(doc["sign"] == 1);
    CHECK(doc["passed"] == true);
    CHECK(doc["triangular_ok"] == true);
    CHECK(doc["classes"].size() == 5);
    CHECK(doc["classes"][0]["alpha"] == "-6");

    // identical runs render byte-identically (timings stay out of the JSON)
    const json again = report_to_json(verify_theorem(4, options));
    CHECK(doc.dump(2) == again.dump(2));

    const std::string text = report_to_text(report);
    CHECK(text.find("RESULT: PASS") != std::string::npos);
    CHECK(text.find("det (alpha product)  = 384") != std::string::npos);
}

TEST_CASE("classes listing round-trips through its schema") {
    const json doc = classes_to_json(4, conjugation_classes(4));
    CHECK(doc["n"] == 4);
    REQUIRE(doc["classes"].size() == 5);
    CHECK(doc["classes"][1]["size"] == 6);
    CHECK(doc["classes"][1]["signature"] == json::array({2, 1, 1}));
    // every member text parses back to a partition with the listed signature
    for (const auto& cls : doc["classes"]) {
        for (const auto& text : cls["members"]) {
            const Partition p = Partition::parse(text.get<std::string>());
            CHECK(json(p.signature()) == cls["signature"]);
        }
    }
}

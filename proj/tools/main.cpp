// connmat command-line tool: partition enumeration, connectivity matrices,
// exact determinants, reliability polynomials and one-shot theorem checks.
//
// Exit codes: 0 success, 2 argument/parse errors, 3 size-cap refusals,
// 4 verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "connmat/algebra.hpp"
#include "connmat/conn_matrix.hpp"
#include "connmat/determinant.hpp"
#include "connmat/errors.hpp"
#include "connmat/lattice.hpp"
#include "connmat/multigraph.hpp"
#include "connmat/reliability.hpp"
#include "connmat/serialize.hpp"
#include "connmat/verify.hpp"

namespace {

using namespace connmat;

struct GlobalOptions {
    std::string format = "text";
    int threads = 0;
    int max_n = kDefaultMaxGroundSet;
    bool json() const { return format == "json"; }
};

CoherentOrder load_order(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open order file '" + path + "'");
    return CoherentOrder::from_sequence(read_partition_lines(in));
}

CoherentOrder pick_order(int n, const std::string& order_path, int max_n) {
    if (order_path.empty()) return CoherentOrder::standard(n, max_n);
    CoherentOrder order = load_order(order_path);
    if (order.n() != n)
        throw ParseError("order file is for n=" + std::to_string(order.n()) +
                         ", command asked for n=" + std::to_string(n));
    return order;
}

void print_json(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int run_partitions(const GlobalOptions& global, int n) {
    const auto classes = conjugation_classes(n, global.max_n);
    if (global.json()) {
        print_json(classes_to_json(n, classes));
        return 0;
    }
    int label = 0;
    for (const auto& cls : classes) {
        ++label;
        std::cout << "# class " << label << ": m=" << cls.num_blocks() << " signature=";
        for (std::size_t i = 0; i < cls.signature.size(); ++i)
            std::cout << (i ? "," : "") << cls.signature[i];
        std::cout << " size=" << cls.members.size() << "\n";
        for (const auto& p : cls.members)
            std::cout << p.to_string() << "  blocks=" << p.num_blocks() << "  class=" << label
                      << "\n";
    }
    return 0;
}

int run_matrix(const GlobalOptions& global, int n, const std::string& order_path,
               const std::string& which) {
    const CoherentOrder order = pick_order(n, order_path, global.max_n);
    const ConnMatrix a = build_connectivity_matrix(order, global.threads);
    if (which == "conn") {
        if (global.json())
            print_json(matrix_to_json("connectivity", order, a.entries));
        else
            std::cout << matrix_to_text(a.entries);
        return 0;
    }
    const EliminationMatrix b = build_elimination_matrix(order, global.threads);
    if (which == "elim") {
        if (global.json())
            print_json(matrix_to_json("elimination", order, b.entries));
        else
            std::cout << matrix_to_text(b.entries);
        return 0;
    }
    const DenseMatrix t = triangularize(a, b);
    if (global.json())
        print_json(matrix_to_json("triangularized", order, t));
    else
        std::cout << matrix_to_text(t);
    return 0;
}

int run_pi(const GlobalOptions& global, const std::string& partition_text) {
    const Partition p = Partition::parse(partition_text);
    const AlgebraVector image = pi(p);
    const BigInt alpha = image.coeff(Partition::one_block(p.n()));
    if (global.json()) {
        json doc = algebra_to_json(image);
        doc["partition"] = p.to_string();
        doc["alpha"] = alpha.get_str();
        print_json(doc);
    } else {
        std::cout << "pi(" << p.to_string() << ") = " << image.to_string() << "\n"
                  << "alpha = " << alpha.get_str() << "\n";
    }
    return 0;
}

int run_det(const GlobalOptions& global, int n, std::string method,
            const std::string& order_path, bool force) {
    if (method == "auto") method = n <= 6 ? "both" : "alpha";
    std::optional<BigInt> alpha_det, direct_det;
    if (method == "alpha" || method == "both") alpha_det = determinant_alpha(n, global.threads);
    if (method == "direct" || method == "both") {
        if (n >= 1) {
            const BigInt dim = bell_number(n);
            if (!force && dim > kDefaultBareissMaxDim)
                throw SizeLimitError("direct determinant refused at dimension " + dim.get_str() +
                                     " (cap " + std::to_string(kDefaultBareissMaxDim) +
                                     "); use --method alpha or --force");
            if (n >= 7)
                std::cerr << "note: direct determinant at n=" << n << " works on a "
                          << dim.get_str() << "x" << dim.get_str()
                          << " matrix; expect minutes, or use --method alpha\n";
        }
        const CoherentOrder order = pick_order(n, order_path, global.max_n);
        const ConnMatrix a = build_connectivity_matrix(order, global.threads);
        direct_det = determinant_direct(a, force ? order.size() : kDefaultBareissMaxDim);
    }
    if (global.json()) {
        json doc{{"n", n}, {"method", method}};
        if (alpha_det) doc["det_alpha"] = alpha_det->get_str();
        if (direct_det) doc["det_direct"] = direct_det->get_str();
        if (alpha_det && direct_det) doc["agree"] = *alpha_det == *direct_det;
        print_json(doc);
    } else {
        if (alpha_det) std::cout << "det (alpha product)  = " << alpha_det->get_str() << "\n";
        if (direct_det) std::cout << "det (Bareiss direct) = " << direct_det->get_str() << "\n";
        if (alpha_det && direct_det)
            std::cout << "legs agree: " << (*alpha_det == *direct_det ? "yes" : "NO") << "\n";
    }
    return 0;
}

int run_reliability(const GlobalOptions& global, int complete_m, int quotient_n,
                    const std::string& partition_text, const std::string& graph_path,
                    bool counts, const ReliabilityOptions& rel) {
    Multigraph g(1);
    std::string describe;
    std::optional<BigInt> alpha;
    if (complete_m > 0) {
        g = complete_graph(complete_m);
        describe = "K_" + std::to_string(complete_m);
    } else if (quotient_n > 0) {
        const Partition p = Partition::parse(partition_text);
        g = quotient_graph(quotient_n, p);
        describe = "K_" + std::to_string(quotient_n) + " / " + p.to_string();
    } else {
        std::ifstream in(graph_path);
        if (!in) throw ParseError("cannot open graph file '" + graph_path + "'");
        g = parse_graph(in);
        describe = graph_path;
    }

    const Polynomial r = reliability_polynomial(g, rel);
    const LeadingTerm lead = mgr(r, g.edge_count());
    if (quotient_n > 0)
        alpha = g.edge_count() % 2 == 0 ? lead.coeff : BigInt(-lead.coeff);

    std::optional<std::vector<long long>> c;
    if (counts) c = pathset_counts(g);

    if (global.json()) {
        json doc{{"graph", graph_to_json(g)},
                 {"description", describe},
                 {"polynomial", polynomial_to_json(r)},
                 {"mgr", json{{"coefficient", lead.coeff.get_str()}, {"degree", lead.degree}}}};
        if (alpha) doc["alpha"] = alpha->get_str();
        if (c) doc["pathset_counts"] = *c;
        print_json(doc);
    } else {
        std::cout << "graph " << describe << ": nodes=" << g.node_count()
                  << " edges=" << g.edge_count() << " dropped_loops=" << g.dropped_loops()
                  << "\n";
        std::cout << "R(p) = " << r.to_string() << "\n";
        std::cout << "mgr  = " << lead.coeff.get_str() << " * p^" << lead.degree << "\n";
        if (alpha) std::cout << "alpha = " << alpha->get_str() << "\n";
        if (c) {
            std::cout << "pathset counts C_0..C_E =";
            for (long long x : *c) std::cout << " " << x;
            std::cout << "\n";
        }
    }
    return 0;
}

int run_verify(const GlobalOptions& global, int n, const std::string& method,
               const std::string& order_path) {
    VerifyOptions options;
    options.threads = global.threads;
    if (method == "alpha")
        options.method = DetMethod::Alpha;
    else if (method == "direct" || method == "both")
        options.method = DetMethod::Both;
    CoherentOrder order = CoherentOrder::standard(1);
    if (!order_path.empty()) {
        order = pick_order(n, order_path, global.max_n);
        options.order = &order;
    }
    const VerifyReport report = verify_theorem(n, options);
    std::cerr << "timing: alpha leg " << report.alpha_seconds << " s";
    if (report.det_direct) std::cerr << ", direct leg " << report.direct_seconds << " s";
    std::cerr << "\n";
    if (global.json())
        print_json(report_to_json(report));
    else
        std::cout << report_to_text(report);
    return report.passed() ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact connectivity-matrix determinants over set partitions, "
                 "with a reliability-polynomial cross-check"};
    app.set_version_flag("--version", "connmat 1.0.0");
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--format", global.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->envname("CONNMAT_FORMAT")
        ->capture_default_str();
    app.add_option("--threads", global.threads, "Worker threads (0 = all cores)")
        ->envname("CONNMAT_THREADS")
        ->capture_default_str();
    app.add_option("--max-n", global.max_n, "Ground-set cap for enumeration")
        ->envname("CONNMAT_MAX_N")
        ->capture_default_str();

    int n = 0;
    std::string order_path, which = "conn", method = "auto", partition_text, graph_path;
    bool force = false, counts = false;
    int complete_m = 0, quotient_n = 0;
    ReliabilityOptions rel;
    std::string pivot = "highest";

    auto* cmd_partitions =
        app.add_subcommand("partitions", "List Part_n grouped by conjugation class");
    cmd_partitions->add_option("n", n, "Ground-set size")->required();

    auto* cmd_matrix = app.add_subcommand("matrix", "Emit the connectivity matrix (or B, B^tA)");
    cmd_matrix->add_option("n", n, "Ground-set size")->required();
    cmd_matrix->add_option("--order", order_path, "Order file: one partition per line");
    cmd_matrix->add_option("--which", which, "conn | elim | tri")
        ->check(CLI::IsMember({"conn", "elim", "tri"}))
        ->capture_default_str();

    auto* cmd_pi = app.add_subcommand("pi", "Apply the elimination operator to a partition");
    cmd_pi->add_option("partition", partition_text, "Partition text, e.g. \"1 2|3\"")->required();

    auto* cmd_det = app.add_subcommand("det", "Exact determinant of the connectivity matrix");
    cmd_det->add_option("n", n, "Ground-set size")->required();
    cmd_det->add_option("--method", method, "alpha | direct | both (default: both for n<=6)")
        ->check(CLI::IsMember({"auto", "alpha", "direct", "both"}));
    cmd_det->add_option("--order", order_path, "Order file for the direct leg");
    cmd_det->add_flag("--force", force, "Lift the direct-determinant dimension cap");

    auto* cmd_rel = app.add_subcommand("reliability", "All-terminal reliability polynomial");
    auto* opt_complete = cmd_rel->add_option("--complete", complete_m, "Complete graph K_m");
    auto* opt_quotient =
        cmd_rel->add_option("--quotient", quotient_n, "Quotient K_n^A; needs --partition");
    auto* opt_graph = cmd_rel->add_option("--graph", graph_path, "Graph file path");
    cmd_rel->add_option("--partition", partition_text, "Partition text for --quotient");
    opt_complete->excludes(opt_quotient)->excludes(opt_graph);
    opt_quotient->excludes(opt_graph)->needs("--partition");
    cmd_rel->add_flag("--counts", counts, "Also print brute-force pathset counts");
    cmd_rel->add_flag("--memo", rel.memoize, "Memoize on canonical graph keys");
    cmd_rel->add_option("--pivot", pivot, "highest | first | random")
        ->check(CLI::IsMember({"highest", "first", "random"}))
        ->capture_default_str();
    cmd_rel->add_option("--seed", rel.seed, "Seed for --pivot random");
    cmd_rel->add_option("--max-edges", rel.max_edges, "Edge-count cap")->capture_default_str();

    auto* cmd_verify = app.add_subcommand("verify", "Check the determinant formula end to end");
    cmd_verify->add_option("n", n, "Ground-set size")->required();
    cmd_verify->add_option("--method", method, "alpha | direct | both")
        ->check(CLI::IsMember({"auto", "alpha", "direct", "both"}));
    cmd_verify->add_option("--order", order_path, "Order file");

    try {
        app.parse(argc, argv);

        if (pivot == "first") rel.pivot = PivotRule::FirstEdge;
        if (pivot == "random") rel.pivot = PivotRule::Random;

        if (cmd_partitions->parsed()) return run_partitions(global, n);
        if (cmd_matrix->parsed()) return run_matrix(global, n, order_path, which);
        if (cmd_pi->parsed()) return run_pi(global, partition_text);
        if (cmd_det->parsed()) return run_det(global, n, method, order_path, force);
        if (cmd_rel->parsed()) {
            if (complete_m <= 0 && quotient_n <= 0 && graph_path.empty())
                throw CLI::RequiredError("one of --complete/--quotient/--graph");
            return run_reliability(global, complete_m, quotient_n, partition_text, graph_path,
                                   counts, rel);
        }
        if (cmd_verify->parsed()) return run_verify(global, n, method, order_path);
        return 2;
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const SizeLimitError& e) {
        std::cerr << "size limit: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}

#include "connmat/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace connmat {

json algebra_to_json(const AlgebraVector& v) {
    std::vector<std::pair<std::string, std::string>> pairs;
    pairs.reserve(v.term_count());
    for (const auto& [p, c] : v.terms()) pairs.emplace_back(p.to_string(), c.get_str());
    std::sort(pairs.begin(), pairs.end());
    json terms = json::array();
    for (const auto& [text, coeff] : pairs) terms.push_back(json::array({coeff, text}));
    return json{{"n", v.n()}, {"terms", terms}};
}

json classes_to_json(int n, const std::vector<ConjugationClass>& classes) {
    json out = json::array();
    for (const auto& cls : classes) {
        json members = json::array();
        for (const auto& p : cls.members) members.push_back(p.to_string());
        out.push_back(json{{"signature", cls.signature},
                           {"num_blocks", cls.num_blocks()},
                           {"size", cls.members.size()},
                           {"members", members}});
    }
    return json{{"n", n}, {"classes", out}};
}

std::string matrix_to_text(const BitMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j > 0) out += ' ';
            out += m.get(i, j) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

std::string matrix_to_text(const DenseMatrix& m) {
    std::string out;
    for (const auto& row : m) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j > 0) out += ' ';
            out += row[j].get_str();
        }
        out += '\n';
    }
    return out;
}

static json order_json(const CoherentOrder& order) {
    json out = json::array();
    for (const auto& p : order.sequence()) out.push_back(p.to_string());
    return out;
}

json matrix_to_json(const std::string& kind, const CoherentOrder& order, const BitMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m.get(i, j) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    return json{{"kind", kind},
                {"n", order.n()},
                {"dimension", m.dim()},
                {"order", order_json(order)},
                {"entries", rows}};
}

json matrix_to_json(const std::string& kind, const CoherentOrder& order, const DenseMatrix& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& x : row) r.push_back(x.get_str());
        rows.push_back(std::move(r));
    }
    return json{{"kind", kind},
                {"n", order.n()},
                {"dimension", m.size()},
                {"order", order_json(order)},
                {"entries", rows}};
}

json polynomial_to_json(const Polynomial& r) {
    json coeffs = json::array();
    for (const auto& c : r.coeffs()) coeffs.push_back(c.get_str());
    return json{{"coefficients", coeffs}, {"degree", r.degree()}, {"text", r.to_string()}};
}

json graph_to_json(const Multigraph& g) {
    json edges = json::array();
    for (const auto& [pair, mult] : g.edges())
        edges.push_back(json{{"u", pair.first}, {"v", pair.second}, {"multiplicity", mult}});
    return json{{"nodes", g.node_count()},
                {"edge_count", g.edge_count()},
                {"dropped_loops", g.dropped_loops()},
                {"edges", edges}};
}

json report_to_json(const VerifyReport& r) {
    json classes = json::array();
    for (const auto& cls : r.classes)
        classes.push_back(json{{"signature", cls.signature},
                               {"size", cls.size},
                               {"num_blocks", cls.num_blocks},
                               {"alpha", cls.alpha.get_str()}});
    json out{{"n", r.n},
             {"bell", r.bell.get_str()},
             {"classes", classes},
             {"det_alpha", r.det_alpha.get_str()},
             {"formula_abs", r.formula_abs.get_str()},
             {"sign", r.sign},
             {"det_nonzero", r.det_nonzero},
             {"abs_matches_formula", r.abs_matches_formula},
             {"passed", r.passed()}};
    if (r.det_direct) out["det_direct"] = r.det_direct->get_str();
    if (r.direct_agrees) out["direct_agrees"] = *r.direct_agrees;
    if (r.triangular_ok) out["triangular_ok"] = *r.triangular_ok;
    return out;
}

std::string report_to_text(const VerifyReport& r) {
    std::ostringstream out;
    out << "n=" << r.n << "  |Part_n|=" << r.bell.get_str() << "  classes=" << r.classes.size()
        << "\n";
    for (const auto& cls : r.classes) {
        out << "  class m=" << cls.num_blocks << " signature=";
        for (std::size_t i = 0; i < cls.signature.size(); ++i)
            out << (i ? "," : "") << cls.signature[i];
        out << "  size=" << cls.size << "  alpha=" << cls.alpha.get_str() << "\n";
    }
    out << "det (alpha product)  = " << r.det_alpha.get_str() << "\n";
    if (r.det_direct) out << "det (Bareiss direct) = " << r.det_direct->get_str() << "\n";
    out << "formula |det|        = " << r.formula_abs.get_str() << "\n";
    out << "observed sign        = " << (r.sign > 0 ? "+" : r.sign < 0 ? "-" : "0") << "\n";
    out << "checks: |det|==formula " << (r.abs_matches_formula ? "ok" : "FAIL") << "; det!=0 "
        << (r.det_nonzero ? "ok" : "FAIL");
    if (r.direct_agrees) out << "; legs agree " << (*r.direct_agrees ? "ok" : "FAIL");
    if (r.triangular_ok) out << "; B^tA triangular " << (*r.triangular_ok ? "ok" : "FAIL");
    out << "\nRESULT: " << (r.passed() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace connmat

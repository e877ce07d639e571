#include "qdg/export.hpp"

#include "qdg/qnumbers.hpp"

#include <json.hpp>
#include <sstream>

namespace qdg {

namespace {

using ojson = nlohmann::ordered_json;

ojson laurent_json(const LaurentPoly& x) {
    ojson obj = ojson::object();
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it)
        obj[std::to_string(it->exponent)] = it->coeff.get_str();
    return obj;
}

}  // namespace

std::string coeff_table_json(const CoeffTable& table) {
    ojson doc;
    doc["r"] = table.r();
    doc["route"] = to_string(table.route());
    doc["entries"] = ojson::array();
    for (int p = 0; p <= table.r(); ++p)
        for (int j = 0; j <= table.j_max(p); ++j)
            doc["entries"].push_back({{"p", p}, {"j", j}, {"laurent", laurent_json(table.at(p, j))}});
    return doc.dump() + "\n";
}

std::string coeff_table_csv(const CoeffTable& table) {
    std::ostringstream os;
    os << "r,p,j,laurent\n";
    for (int p = 0; p <= table.r(); ++p)
        for (int j = 0; j <= table.j_max(p); ++j)
            os << table.r() << ',' << p << ',' << j << ',' << table.at(p, j).to_string() << '\n';
    return os.str();
}

std::optional<std::pair<int, int>> match_qbinomial(const LaurentPoly& x) {
    if (x.is_zero() || !x.is_symmetric() || x.coeff(x.max_exponent()) != 1) return std::nullopt;
    const int top = x.max_exponent();  // [n choose k]_q has top exponent k(n-k)
    if (top <= 0) return std::nullopt;
    for (int k = 1; k * k <= top; ++k) {
        if (top % k != 0) continue;
        const int n = top / k + k;
        if (qbinomial(n, k) == x) return std::pair{n, k};
    }
    return std::nullopt;
}

std::string coeff_table_latex(const CoeffTable& table) {
    std::ostringstream os;
    os << "% r = " << table.r() << ", route = " << to_string(table.route()) << "\n";
    os << "\\begin{tabular}{rrl}\n";
    os << "$p$ & $j$ & $c_j^{[" << table.r() << ",p]}$ \\\\\n\\hline\n";
    for (int p = 0; p <= table.r(); ++p)
        for (int j = 0; j <= table.j_max(p); ++j) {
            const LaurentPoly& x = table.at(p, j);
            std::string cell;
            if (auto nk = match_qbinomial(x)) {
                cell = nk->second == 1 ? "[" + std::to_string(nk->first) + "]_q"
                                       : "\\binom{" + std::to_string(nk->first) + "}{" +
                                             std::to_string(nk->second) + "}_q";
            } else {
                cell = x.to_latex();
            }
            os << p << " & " << j << " & $" << cell << "$ \\\\\n";
        }
    os << "\\end{tabular}\n";
    return os.str();
}

std::string report_json(const VerificationReport& report) {
    ojson doc;
    doc["r"] = report.r;
    doc["family"] = report.family;
    doc["result"] = report.zero ? "zero" : "nonzero";
    doc["residual_term_count"] = report.residual_term_count;
    doc["peak_term_count"] = report.peak_term_count;
    doc["elapsed_ms"] = report.elapsed_ms;
    doc["route"] = to_string(report.route);
    return doc.dump();
}

std::string cross_check_json(const CrossCheckReport& report) {
    ojson doc;
    doc["r_max"] = report.r_max;
    doc["routes"] = ojson::array();
    for (Route r : report.routes) doc["routes"].push_back(to_string(r));
    doc["agree"] = report.agree();
    if (report.first_mismatch) {
        const auto& m = *report.first_mismatch;
        doc["first_mismatch"] = {{"r", m.r},
                                 {"p", m.p},
                                 {"j", m.j},
                                 {"routes", {to_string(m.first), to_string(m.second)}},
                                 {"values", {m.first_value.to_string(), m.second_value.to_string()}}};
    }
    return doc.dump() + "\n";
}

}  // namespace qdg

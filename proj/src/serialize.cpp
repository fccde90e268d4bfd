#include "curalg/serialize.hpp"

#include <stdexcept>

#include "curalg/uea.hpp"

namespace curalg {

Json algebra_json(const ChevalleyAlgebra& g) {
    const auto& rs = g.roots();
    Json roots = Json::array();
    for (int a = 0; a < rs.num_positive(); ++a)
        roots.push_back({{"name", rs.root_name(rs.positive_roots[a])},
                         {"root", rs.positive_roots[a]},
                         {"d", rs.d_alpha[a]}});
    Json basis = Json::array();
    for (const auto& b : g.basis()) basis.push_back(b.label);
    return {{"type", g.type_label()},
            {"rank", g.rank()},
            {"dim", g.dim()},
            {"cartan", rs.cartan},
            {"positive_roots", roots},
            {"highest_root", rs.root_name(rs.theta())},
            {"sign_convention", g.sign_convention()},
            {"basis", basis}};
}

Json module_json(const CurrentModule& m) {
    const auto& g = m.algebra();
    Json basis = Json::array();
    for (const auto& b : m.basis()) basis.push_back({{"label", b.label}, {"grade", b.grade}, {"weight", b.weight}});
    const int top = effective_t_bound(m);
    Json action = Json::array();
    for (int s = 0; s <= top; ++s)
        for (int x = 0; x < g.dim(); ++x) {
            const SparseMatrix& a = m.action(x, s);
            if (a.is_zero()) continue;
            Json entries = Json::array();
            for (const auto& [i, j, c] : a.triples()) entries.push_back({i, j, to_string(c)});
            action.push_back({{"x", g.element(x).label}, {"s", s}, {"entries", entries}});
        }
    Json gen = nullptr;
    if (m.generator()) {
        gen = Json::array();
        for (const auto& [i, c] : m.generator()->entries()) gen.push_back({i, to_string(c)});
    }
    return {{"schema_version", kSchemaVersion},
            {"algebra", g.type_label()},
            {"graded", m.graded()},
            {"t_cutoff", top},
            {"dim", m.dim()},
            {"basis", basis},
            {"action", action},
            {"generator", gen}};
}

CurrentModule module_from_json(const Json& j) {
    try {
        if (j.at("schema_version").get<int>() != kSchemaVersion)
            throw std::invalid_argument("module JSON has schema version " + j.at("schema_version").dump());
        AlgebraPtr g = chevalley_constants(j.at("algebra").get<std::string>());
        std::vector<BasisLabel> basis;
        for (const auto& b : j.at("basis"))
            basis.push_back({b.at("label").get<std::string>(), b.at("grade").get<int>(), b.at("weight").get<Weight>()});
        const int n = static_cast<int>(basis.size());
        const int top = j.at("t_cutoff").get<int>();
        if (top < 0) throw std::invalid_argument("module JSON needs a t_cutoff");
        std::vector<std::vector<SparseMatrix>> table(top + 1, std::vector<SparseMatrix>(g->dim(), SparseMatrix(n, n)));
        for (const auto& a : j.at("action")) {
            auto x = g->find_label(a.at("x").get<std::string>());
            const int s = a.at("s").get<int>();
            if (!x || s < 0 || s > top) throw std::invalid_argument("bad action entry in module JSON");
            std::vector<std::vector<SparseVector::Entry>> cols(n);
            for (const auto& e : a.at("entries")) {
                const int r = e.at(0).get<int>(), c = e.at(1).get<int>();
                if (r < 0 || r >= n || c < 0 || c >= n) throw std::invalid_argument("action index out of range");
                cols[c].emplace_back(r, parse_rational(e.at(2).get<std::string>()));
            }
            for (int c = 0; c < n; ++c) table[s][*x].set_column(c, SparseVector::from_unsorted(std::move(cols[c])));
        }
        CurrentModule m = CurrentModule::from_table(g, std::move(basis), j.at("graded").get<bool>(), std::move(table));
        if (!j.at("generator").is_null()) {
            std::vector<SparseVector::Entry> e;
            for (const auto& p : j.at("generator"))
                e.emplace_back(p.at(0).get<int>(), parse_rational(p.at(1).get<std::string>()));
            m.set_generator(SparseVector::from_unsorted(std::move(e)));
        }
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed module JSON: ") + e.what());
    }
}

Json character_json(const GradedCharacter& ch) {
    Json rows = Json::array();
    for (const auto& [key, mult] : ch.entries()) rows.push_back({key.first, key.second, mult});
    return rows;
}

Json presentation_json(const ChevalleyAlgebra& g, const Presentation& p) {
    Json rels = Json::array();
    for (const auto& r : p.relations)
        rels.push_back({{"name", r.name}, {"element", r.element.str(g)}, {"derived", r.derived}});
    return {{"kind", p.kind},
            {"algebra", g.type_label()},
            {"lambda", p.lambda},
            {"highest_weight", p.highest_weight},
            {"relations", rels}};
}

Json presentation_report_json(const PresentationReport& r) {
    Json rels = Json::array();
    for (const auto& c : r.relations) rels.push_back({{"name", c.name}, {"derived", c.derived}, {"pass", c.pass}});
    return {{"kind", r.kind},
            {"pass", r.pass()},
            {"highest_weight", r.highest_weight_ok},
            {"highest_weight_failure", r.highest_weight_failure},
            {"cyclic", r.cyclic},
            {"relations", rels}};
}

Json certificate_json(const PresolveCertificate& c) {
    return {{"certified", c.certified},
            {"stabilized", c.stabilized},
            {"last_nonzero_grade", c.last_nonzero_grade},
            {"grades_examined", c.grades_examined},
            {"grade_dims", c.grade_dims},
            {"t_truncated", c.t_truncated},
            {"weights_saturated", c.weights_saturated},
            {"grade_cutoff", c.config.grade_cutoff},
            {"t_cutoff", c.config.t_cutoff},
            {"stabilization_window", c.config.stabilization_window},
            {"note", c.note}};
}

}  // namespace curalg

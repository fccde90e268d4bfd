#include "curalg/finrep.hpp"

#include <stdexcept>

namespace curalg {

std::shared_ptr<const BlockLayout> GModule::weight_layout() const {
    std::vector<BlockKey> keys;
    keys.reserve(weights.size());
    for (const auto& w : weights) keys.push_back({0, w});
    return BlockLayout::build(keys);
}

GModule adjoint_module(AlgebraPtr g) {
    GModule m;
    m.algebra = g;
    const int D = g->dim();
    for (const auto& b : g->basis()) {
        m.labels.push_back(b.label);
        m.weights.push_back(b.weight);
    }
    m.action.assign(D, SparseMatrix(D, D));
    for (int a = 0; a < D; ++a)
        for (int b = 0; b < D; ++b) m.action[a].set_column(b, g->bracket(a, b));
    m.highest_vector = SparseVector::unit(g->e(g->theta_index()));
    return m;
}


GModule tensor(const GModule& a, const GModule& b) {
    if (a.algebra != b.algebra && a.algebra->type_label() != b.algebra->type_label())
        throw std::invalid_argument("tensor of modules over different algebras");
    GModule m;
    m.algebra = a.algebra;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j) {
            m.labels.push_back(a.labels[i] + "|" + b.labels[j]);
            m.weights.push_back(a.weights[i] + b.weights[j]);
        }
    for (std::size_t x = 0; x < a.action.size(); ++x) m.action.push_back(kron_sum(a.action[x], b.action[x]));
    if (a.highest_vector && b.highest_vector)
        m.highest_vector = kron(*a.highest_vector, *b.highest_vector, b.dim());
    return m;
}

std::vector<const SparseMatrix*> simple_operators(const GModule& m) {
    std::vector<const SparseMatrix*> ops;
    const auto& g = *m.algebra;
    for (int i = 0; i < g.rank(); ++i) {
        ops.push_back(&m.action[g.e(i)]);
        ops.push_back(&m.action[g.f(i)]);
    }
    return ops;
}

SparseMatrix restrict_to(const BlockedSubspace& sub, const SparseMatrix& op) {
    SparseMatrix r(sub.dim(), sub.dim());
    for (int j = 0; j < sub.dim(); ++j) {
        SparseVector rest;
        auto coords = sub.coordinates(op.apply(sub.row(j)), &rest);
        if (!rest.is_zero()) throw std::invalid_argument("subspace is not stable under the operator");
        r.set_column(j, SparseVector::from_unsorted(std::move(coords)));
    }
    return r;
}

GModule cyclic_span(const GModule& m, const SparseVector& v) {
    BlockedSubspace sub(m.weight_layout());
    auto ops = simple_operators(m);
    close_under(sub, {v}, ops);
    GModule out;
    out.algebra = m.algebra;
    for (int j = 0; j < sub.dim(); ++j) {
        out.labels.push_back("v" + std::to_string(j));
        out.weights.push_back(sub.layout().keys[sub.row_block(j)].weight);
    }
    for (const auto& a : m.action) out.action.push_back(restrict_to(sub, a));
    if (!v.is_zero()) {
        SparseVector rest;
        auto c = sub.coordinates(v, &rest);
        out.highest_vector = SparseVector::from_unsorted(std::move(c));
    }
    return out;
}

GModule irreducible_ktheta(AlgebraPtr g, int k) {
    if (k < 1) throw std::invalid_argument("irreducible_ktheta needs k >= 1");
    GModule ad = adjoint_module(g);
    GModule power = ad;
    for (int j = 1; j < k; ++j) power = tensor(power, ad);
    GModule v = cyclic_span(power, *power.highest_vector);
    Weight lambda = g->roots().multiple_of_theta(k);
    if (auto err = highest_weight_relations_scan(v, lambda); !err.empty())
        throw std::logic_error("V(k theta) generator relations: " + err);
    return v;
}

std::string weight_scan(const GModule& m) {
    const auto& g = *m.algebra;
    for (int x = 0; x < g.dim(); ++x) {
        const auto& xw = g.element(x).weight;
        for (const auto& [i, j, c] : m.action[x].triples()) {
            if (g.element(x).kind == BasisKind::Cartan) {
                if (i != j || c != m.weights[j][g.element(x).index])
                    return "Cartan element " + g.element(x).label + " is not diagonal with weight eigenvalues";
            } else if (m.weights[i] != m.weights[j] + xw) {
                return g.element(x).label + " does not shift weights by its root";
            }
        }
        if (g.element(x).kind == BasisKind::Cartan)
            for (int j = 0; j < m.dim(); ++j)
                if (m.action[x].at(j, j) != m.weights[j][g.element(x).index])
                    return "Cartan eigenvalue mismatch at " + m.labels[j];
    }
    return {};
}

std::string bracket_scan(const GModule& m) {
    const auto& g = *m.algebra;
    const int D = g.dim();
    for (int a = 0; a < D; ++a)
        for (int b = a + 1; b < D; ++b) {
            SparseMatrix lhs(m.dim(), m.dim());
            for (const auto& [x, c] : g.bracket(a, b).entries()) add_scaled(lhs, m.action[x], c);
            if (lhs != commutator(m.action[a], m.action[b]))
                return "bracket fails on (" + g.element(a).label + ", " + g.element(b).label + ")";
        }
    return {};
}

std::string highest_weight_relations_scan(const GModule& m, const Weight& lambda) {
    if (!m.highest_vector) return "no highest vector";
    const auto& g = *m.algebra;
    const auto& rs = g.roots();
    const SparseVector& v = *m.highest_vector;
    for (int k = 0; k < rs.num_positive(); ++k) {
        if (!m.action[g.e(k)].apply(v).is_zero()) return "x+ does not kill the generator";
        int n = rs.pairing(lambda, rs.positive_roots[k]);
        SparseVector w = v;
        for (int j = 0; j <= n; ++j) {
            if (w.is_zero()) return "x- power vanishes too early";
            w = m.action[g.f(k)].apply(w);
        }
        if (!w.is_zero()) return "(x-)^{<lambda,alpha>+1} does not kill the generator";
    }
    for (int i = 0; i < rs.rank; ++i)
        if (m.action[g.h(i)].apply(v) != v.scaled(lambda[i])) return "wrong Cartan eigenvalue";
    return {};
}

}  // namespace curalg

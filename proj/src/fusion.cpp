#include "curalg/fusion.hpp"

#include <set>
#include <stdexcept>

namespace curalg {

Filtration filtration(const CurrentModule& ambient) {
    if (!ambient.generator()) throw std::invalid_argument("filtration needs a cyclic generator");
    return filtration(ambient, *ambient.generator());
}

Filtration filtration(const CurrentModule& ambient, const SparseVector& generator) {
    const auto& g = ambient.algebra();
    Filtration f{ambient, generator, std::make_shared<BlockedSubspace>(ambient.layout()), {}};
    std::vector<const SparseMatrix*> ops0;
    for (int i = 0; i < g.rank(); ++i) {
        ops0.push_back(&ambient.action(g.e(i), 0));
        ops0.push_back(&ambient.action(g.f(i), 0));
    }
    const SparseMatrix& raise1 = ambient.action(g.e(g.theta_index()), 1);

    std::vector<int> layer = close_under(*f.space, {generator}, ops0, 0);
    f.layer_dims.push_back(f.space->dim());
    for (int r = 1; f.space->dim() < ambient.dim(); ++r) {
        std::vector<SparseVector> seeds;
        for (int id : layer) {
            SparseVector w = raise1.apply(f.space->row(id));
            if (!w.is_zero()) seeds.push_back(std::move(w));
        }
        layer = close_under(*f.space, seeds, ops0, r);
        if (layer.empty()) throw std::invalid_argument("generator does not generate the module");
        f.layer_dims.push_back(f.space->dim());
    }
    return f;
}

CurrentModule associated_graded(const Filtration& f) {
    auto sp = f.space;
    const CurrentModule amb = f.ambient;
    std::vector<BasisLabel> basis;
    for (int j = 0; j < sp->dim(); ++j) {
        const auto& key = sp->layout().keys[sp->row_block(j)];
        basis.push_back({"r" + std::to_string(j), sp->row_tag(j), key.weight});
    }
    auto base = [sp, amb](const CurrentModule& self, int x, int s) {
        const SparseMatrix& a = amb.action(x, s);
        SparseMatrix m(self.dim(), self.dim());
        for (int j = 0; j < sp->dim(); ++j) {
            const int target = sp->row_tag(j) + s;
            SparseVector rest;
            auto coords = sp->coordinates(a.apply(sp->row(j)), &rest, target);
            if (!rest.is_zero()) throw std::logic_error("filtration is not compatible with the action");
            std::vector<SparseVector::Entry> e;
            for (auto& [id, c] : coords)
                if (sp->row_tag(id) == target) e.emplace_back(id, std::move(c));
            m.set_column(j, SparseVector::from_unsorted(std::move(e)));
        }
        return m;
    };
    CurrentModule gr(amb.algebra_ptr(), std::move(basis), true, f.top_index(), derived_action(base));
    SparseVector rest;
    auto c = sp->coordinates(f.generator, &rest, 0);
    gr.set_generator(SparseVector::from_unsorted(std::move(c)));
    return gr;
}

std::string induced_map_check(const Filtration& f, int x, const std::vector<Rational>& a) {
    const int s = static_cast<int>(a.size());
    // coefficients of prod (t - a_i), lowest degree first
    std::vector<Rational> poly{1};
    for (const auto& ai : a) {
        std::vector<Rational> next(poly.size() + 1, 0);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];
            next[k] -= ai * poly[k];
        }
        poly = std::move(next);
    }
    const auto& sp = *f.space;
    for (int j = 0; j < sp.dim(); ++j) {
        const int r = sp.row_tag(j);
        const SparseVector& w = sp.row(j);
        SparseVector plain = f.ambient.apply(x, s, w);
        if (!sp.residual(plain, r + s).is_zero()) return "x(x)t^s leaves F^{r+s}";
        SparseVector shifted;
        for (int k = 0; k <= s; ++k) shifted.add_scaled(f.ambient.apply(x, k, w), poly[k]);
        if (r + s - 1 < 0) {
            if (!(plain - shifted).is_zero()) return "induced maps differ";
        } else if (!sp.residual(plain - shifted, r + s - 1).is_zero()) {
            return "induced maps differ at layer " + std::to_string(r);
        }
    }
    return {};
}

CurrentModule fusion_product(const std::vector<FusionFactor>& factors) {
    if (factors.empty()) throw std::invalid_argument("fusion of no factors");
    std::set<Rational> seen;
    std::vector<CurrentModule> shifted;
    for (const auto& fac : factors) {
        if (!seen.insert(fac.z).second) throw std::invalid_argument("fusion parameters must be distinct");
        if (!fac.module.generator()) throw std::invalid_argument("fusion factor without a generator");
        shifted.push_back(eval_shift(fac.module, fac.z));
    }
    return associated_graded(filtration(tensor_current(shifted)));
}

CurrentModule fusion_product(const std::vector<CurrentModule>& factors) {
    std::vector<FusionFactor> f;
    for (std::size_t i = 0; i < factors.size(); ++i) f.push_back({factors[i], Rational(static_cast<long>(i))});
    return fusion_product(f);
}

CurrentModule demazure_one_theta(AlgebraPtr g) {
    const int D = g->dim();
    std::vector<BasisLabel> basis;
    for (const auto& b : g->basis()) basis.push_back({b.label, 0, b.weight});
    basis.push_back({"c", 1, Weight(g->rank(), 0)});
    std::vector<std::vector<SparseMatrix>> table(2, std::vector<SparseMatrix>(D, SparseMatrix(D + 1, D + 1)));
    for (int y = 0; y < D; ++y)
        for (int x = 0; x < D; ++x) {
            table[0][y].set_column(x, g->bracket(y, x));
            table[1][y].set_column(x, SparseVector::unit(D, g->form(y, x)));
        }
    CurrentModule m = CurrentModule::from_table(g, std::move(basis), true, std::move(table));
    m.set_generator(SparseVector::unit(g->e(g->theta_index())));
    return m;
}

}  // namespace curalg

#include "curalg/presolve.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <tuple>

namespace curalg {

namespace {

using MVec = std::map<Monomial, Rational>;
using Depth = std::vector<int>;  // lambda - weight, in simple-root coordinates
using BKey = std::pair<int, Depth>;

struct Block {
    std::vector<Monomial> basis;
    std::map<Monomial, int> index;
    Echelon x;
    Echelon k;
};

void add_to(MVec& v, const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = v.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) v.erase(it);
    }
}

class Solver {
  public:
    Solver(AlgebraPtr g, Presentation p, SolveConfig cfg) : g_(std::move(g)), p_(std::move(p)), cfg_(cfg) {
        const auto& rs = g_->roots();
        for (int a = 0; a < rs.num_positive(); ++a)
            for (int s = 0; s <= cfg_.t_cutoff; ++s) lowering_.push_back({s, a});
        std::sort(lowering_.begin(), lowering_.end());
        saturate();
    }

    PresolveResult run();

  private:
    const RootSystem& rs() const { return g_->roots(); }

    Depth depth_of(const Monomial& m) const {
        Depth d(rs().rank, 0);
        for (const auto& f : m)
            for (int i = 0; i < rs().rank; ++i) d[i] += f.b * rs().positive_roots[f.x][i];
        return d;
    }

    Weight weight_of(const Depth& d) const {
        Weight w = p_.lambda;
        for (int i = 0; i < rs().rank; ++i) w = w - scaled(rs().root_weight(rs().positive_roots[i]), d[i]);
        return w;
    }

    void saturate();
    Block& block(const BKey& key);
    MVec act(int x, int s, const Monomial& m);
    MVec act(const UElement& u, const MVec& v);
    MVec reduce_on_w(const UElement& nf) const;
    std::map<BKey, MVec> split(const MVec& v) const;
    bool insert(const BKey& key, bool into_x, const MVec& v, std::vector<std::pair<BKey, MVec>>& rows);
    SparseMatrix action_matrix(int x, int s);

    AlgebraPtr g_;
    Presentation p_;
    SolveConfig cfg_;
    std::vector<std::pair<int, int>> lowering_;  // (s, root) in PBW order
    std::set<Depth> saturated_;
    std::set<Depth> upper_;  // between a saturated weight and lambda
    std::map<BKey, Block> blocks_;
    std::map<std::tuple<int, int, Monomial>, MVec> memo_;
    bool truncated_ = false;

    // quotient basis
    int top_ = -1;
    std::vector<std::pair<BKey, int>> qbasis_;
    std::map<BKey, std::vector<int>> qindex_;  // local column -> global, -1 for pivots
};

void Solver::saturate() {
    std::vector<Depth> queue{Depth(rs().rank, 0)};
    saturated_.insert(queue.front());
    while (!queue.empty()) {
        Depth d = queue.back();
        queue.pop_back();
        const Weight mu = weight_of(d);
        for (const auto& a : rs().positive_roots) {
            const int m = rs().pairing(mu, a);
            for (int j = 1; j <= std::abs(m); ++j) {
                Depth e = d;
                bool ok = true;
                for (int i = 0; i < rs().rank; ++i) {
                    e[i] += (m > 0 ? j : -j) * a[i];
                    ok &= e[i] >= 0;
                }
                if (ok && saturated_.insert(e).second) queue.push_back(e);
            }
        }
    }
    for (const auto& d : saturated_) {
        Depth e(d.size(), 0);
        while (true) {
            upper_.insert(e);
            std::size_t i = 0;
            while (i < e.size() && e[i] == d[i]) e[i++] = 0;
            if (i == e.size()) break;
            ++e[i];
        }
    }
}

Block& Solver::block(const BKey& key) {
    auto it = blocks_.find(key);
    if (it != blocks_.end()) return it->second;
    Block b;
    Monomial cur;
    const auto& roots = rs().positive_roots;
    auto rec = [&](auto&& self, std::size_t t, int grade, Depth depth) -> void {
        if (grade == 0 && std::all_of(depth.begin(), depth.end(), [](int v) { return v == 0; })) {
            b.index.emplace(cur, static_cast<int>(b.basis.size()));
            b.basis.push_back(cur);
            return;
        }
        if (t == lowering_.size()) return;
        const auto [s, a] = lowering_[t];
        self(self, t + 1, grade, depth);
        for (int mult = 1;; ++mult) {
            bool ok = grade - mult * s >= 0;
            for (int i = 0; i < rs().rank && ok; ++i) ok = depth[i] - mult * roots[a][i] >= 0;
            if (!ok) break;
            cur.push_back({g_->f(a), s, mult});
            Depth rest = depth;
            for (int i = 0; i < rs().rank; ++i) rest[i] -= mult * roots[a][i];
            self(self, t + 1, grade - mult * s, rest);
            cur.pop_back();
        }
    };
    rec(rec, 0, key.first, key.second);
    const int n = static_cast<int>(b.basis.size());
    b.x = Echelon(n);
    b.k = Echelon(n);
    return blocks_.emplace(key, std::move(b)).first->second;
}

MVec Solver::reduce_on_w(const UElement& nf) const {
    MVec out;
    for (const auto& [m, c] : nf.terms()) {
        Monomial low;
        Rational coef = c;
        bool zero = false;
        for (const auto& f : m) {
            const auto kind = g_->element(f.x).kind;
            if (kind == BasisKind::Lowering) {
                low.push_back(f);
            } else if (kind == BasisKind::Raising || f.s > 0) {
                zero = true;
                break;
            } else {
                const int i = g_->element(f.x).index;
                coef *= power(Rational(p_.lambda[i]), f.b) / factorial(f.b);
            }
        }
        if (!zero) add_to(out, low, coef);
    }
    return out;
}

MVec Solver::act(int x, int s, const Monomial& m) {
    auto key = std::make_tuple(x, s, m);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    UElement u = UElement::generator(x, s) * UElement::monomial(m);
    MVec out = reduce_on_w(pbw_normal_form(u, *g_));
    memo_.emplace(std::move(key), out);
    return out;
}

MVec Solver::act(const UElement& u, const MVec& v) {
    MVec out;
    for (const auto& [m, c] : v)
        for (const auto& [t, ct] : reduce_on_w(pbw_normal_form(u * UElement::monomial(m), *g_)))
            add_to(out, t, c * ct);
    return out;
}

std::map<BKey, MVec> Solver::split(const MVec& v) const {
    std::map<BKey, MVec> out;
    for (const auto& [m, c] : v) out[{monomial_grade(m), depth_of(m)}].emplace(m, c);
    return out;
}

bool Solver::insert(const BKey& key, bool into_x, const MVec& v, std::vector<std::pair<BKey, MVec>>& rows) {
    Block& b = block(key);
    std::vector<Rational> dense(b.basis.size());
    bool any = false;
    for (const auto& [m, c] : v) {
        auto it = b.index.find(m);
        if (it == b.index.end()) {
            truncated_ = true;
            continue;
        }
        dense[it->second] = c;
        any = true;
    }
    if (!any) return false;
    Echelon& e = into_x ? b.x : b.k;
    const int id = e.insert(dense);
    if (id < 0) return false;
    MVec row;
    for (const auto& [col, c] : e.row(id).entries) row.emplace(b.basis[col], c);
    rows.emplace_back(key, std::move(row));
    return true;
}

SparseMatrix Solver::action_matrix(int x, int s) {
    const int n = static_cast<int>(qbasis_.size());
    SparseMatrix out(n, n);
    for (int j = 0; j < n; ++j) {
        const auto& [key, col] = qbasis_[j];
        const Monomial& m = blocks_.at(key).basis[col];
        std::vector<SparseVector::Entry> entries;
        for (auto& [tk, part] : split(act(x, s, m))) {
            if (tk.first > top_ || !saturated_.count(tk.second)) continue;
            Block& b = block(tk);
            std::vector<Rational> dense(b.basis.size());
            for (const auto& [mm, c] : part) {
                auto it = b.index.find(mm);
                if (it != b.index.end()) dense[it->second] = c;
            }
            b.k.reduce(dense);
            const auto& qi = qindex_.at(tk);
            for (std::size_t c = 0; c < dense.size(); ++c)
                if (dense[c] != 0) {
                    if (qi[c] < 0) throw std::logic_error("presolve reduction left a pivot entry");
                    entries.emplace_back(qi[c], dense[c]);
                }
        }
        out.set_column(j, SparseVector::from_unsorted(std::move(entries)));
    }
    return out;
}

PresolveResult Solver::run() {
    const auto& g = *g_;
    PresolveCertificate cert;
    cert.config = cfg_;
    std::vector<std::vector<std::pair<BKey, MVec>>> xrows(cfg_.grade_cutoff + 1), krows(cfg_.grade_cutoff + 1);
    std::vector<std::pair<int, MVec>> rel;
    for (const auto& r : p_.relations) {
        auto gr = r.element.grade();
        if (!gr || !r.element.weight(g)) throw std::invalid_argument("relation " + r.name + " is not homogeneous");
        rel.emplace_back(*gr, act(r.element, MVec{{Monomial{}, 1}}));
    }
    std::vector<int> raising, lowering;
    for (int a = 0; a < g.num_positive(); ++a) raising.push_back(g.e(a)), lowering.push_back(g.f(a));
    for (int i = 0; i < g.rank(); ++i) raising.push_back(g.h(i));

    int zeros = 0;
    for (int d = 0; d <= cfg_.grade_cutoff; ++d) {
        // U(b[t]) R w in grade d
        auto& xr = xrows[d];
        for (const auto& [gr, v] : rel)
            if (gr == d)
                for (const auto& [key, part] : split(v)) insert(key, true, part, xr);
        for (int dp = 0; dp < d; ++dp)
            for (std::size_t j = 0; j < xrows[dp].size(); ++j)
                for (int x : raising) {
                    MVec img = act(UElement::generator(x, d - dp), xrows[dp][j].second);
                    for (const auto& [key, part] : split(img)) insert(key, true, part, xr);
                }
        for (std::size_t j = 0; j < xr.size(); ++j)
            for (int a = 0; a < g.num_positive(); ++a) {
                MVec img = act(UElement::generator(g.e(a), 0), MVec(xr[j].second));
                for (const auto& [key, part] : split(img)) insert(key, true, part, xr);
            }
        // U(n-[t]) of that, restricted to weights above the saturated set
        auto& kr = krows[d];
        for (const auto& [key, v] : xr)
            if (upper_.count(key.second)) insert(key, false, v, kr);
        for (int dp = 0; dp < d; ++dp)
            for (std::size_t j = 0; j < krows[dp].size(); ++j)
                for (int x : lowering) {
                    MVec img = act(UElement::generator(x, d - dp), krows[dp][j].second);
                    for (const auto& [key, part] : split(img))
                        if (upper_.count(key.second)) insert(key, false, part, kr);
                }
        for (std::size_t j = 0; j < kr.size(); ++j)
            for (int x : lowering) {
                MVec img = act(UElement::generator(x, 0), MVec(kr[j].second));
                for (const auto& [key, part] : split(img))
                    if (upper_.count(key.second)) insert(key, false, part, kr);
            }

        long long dim_d = 0;
        for (const auto& depth : upper_) {
            Block& b = block({d, depth});
            const long long q = static_cast<long long>(b.basis.size()) - b.k.rank();
            if (saturated_.count(depth))
                dim_d += q;
            else if (q != 0)
                cert.weights_saturated = false;
        }
        cert.grade_dims.push_back(dim_d);
        cert.grades_examined = d + 1;
        if (dim_d > 0) {
            cert.last_nonzero_grade = d;
            zeros = 0;
        } else if (++zeros >= cfg_.stabilization_window) {
            cert.stabilized = true;
            break;
        }
    }
    cert.t_truncated = truncated_ || cert.grades_examined - 1 > cfg_.t_cutoff;
    cert.certified = cert.stabilized && !cert.t_truncated && cert.weights_saturated;
    if (!cert.stabilized) cert.note = "grade cutoff reached before stabilization";
    else if (cert.t_truncated) cert.note = "t-power cutoff below the grades examined";
    else if (!cert.weights_saturated) cert.note = "weights outside the saturated set survived";
    else
        cert.note = "grade " + std::to_string(cert.last_nonzero_grade + 1) +
                    " vanishes, so every higher grade vanishes";

    top_ = cert.last_nonzero_grade;
    std::vector<BasisLabel> basis;
    for (int d = 0; d <= top_; ++d)
        for (const auto& depth : saturated_) {
            BKey key{d, depth};
            Block& b = block(key);
            auto& qi = qindex_[key];
            qi.assign(b.basis.size(), -1);
            for (int c = 0; c < static_cast<int>(b.basis.size()); ++c) {
                if (b.k.is_pivot(c)) continue;
                qi[c] = static_cast<int>(qbasis_.size());
                qbasis_.emplace_back(key, c);
                const Monomial& m = b.basis[c];
                basis.push_back({m.empty() ? "w" : monomial_str(g, m) + " w", d, weight_of(depth)});
            }
        }
    std::vector<std::vector<SparseMatrix>> table(std::max(top_, 0) + 1);
    for (int s = 0; s <= std::max(top_, 0); ++s)
        for (int x = 0; x < g.dim(); ++x) table[s].push_back(action_matrix(x, s));
    CurrentModule m = CurrentModule::from_table(g_, std::move(basis), true, std::move(table));
    std::vector<SparseVector::Entry> gen;
    if (top_ >= 0) {
        BKey key{0, Depth(rs().rank, 0)};
        Block& b = block(key);
        std::vector<Rational> dense(b.basis.size());
        dense[b.index.at(Monomial{})] = 1;
        b.k.reduce(dense);
        for (std::size_t c = 0; c < dense.size(); ++c)
            if (dense[c] != 0) gen.emplace_back(qindex_.at(key)[c], dense[c]);
    }
    m.set_generator(SparseVector::from_unsorted(std::move(gen)));
    return {std::move(m), std::move(cert)};
}

}  // namespace

PresolveResult module_from_presentation(const AlgebraPtr& g, const Presentation& p, const SolveConfig& config) {
    if (config.grade_cutoff < 0 || config.t_cutoff < 1 || config.stabilization_window < 1)
        throw std::invalid_argument("presolve needs D >= 0, N >= 1 and a positive window");
    if (!p.highest_weight) throw std::invalid_argument("presolve needs a highest-weight presentation");
    const auto& rs = g->roots();
    if (static_cast<int>(p.lambda.size()) != rs.rank || !rs.is_dominant(p.lambda))
        throw std::invalid_argument("presentation weight is not dominant");
    Solver s(g, p, config);
    return s.run();
}

}  // namespace curalg

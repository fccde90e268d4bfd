#include "curalg/current_module.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace curalg {

// ---- GradedCharacter --------------------------------------------------------

void GradedCharacter::add(int grade, const Weight& weight, long long mult) {
    if (mult == 0) return;
    auto& m = mult_[{grade, weight}];
    m += mult;
    if (m < 0) throw std::logic_error("negative multiplicity in character");
    if (m == 0) mult_.erase({grade, weight});
}

long long GradedCharacter::at(int grade, const Weight& weight) const {
    auto it = mult_.find({grade, weight});
    return it == mult_.end() ? 0 : it->second;
}

long long GradedCharacter::total() const {
    long long t = 0;
    for (const auto& [k, m] : mult_) t += m;
    return t;
}

GradedCharacter GradedCharacter::shifted(int r) const {
    GradedCharacter c;
    for (const auto& [k, m] : mult_) c.mult_[{k.first + r, k.second}] = m;
    return c;
}

std::map<Weight, long long> GradedCharacter::at_q1() const {
    std::map<Weight, long long> out;
    for (const auto& [k, m] : mult_) out[k.second] += m;
    return out;
}

std::map<int, long long> GradedCharacter::grade_dims() const {
    std::map<int, long long> out;
    for (const auto& [k, m] : mult_) out[k.first] += m;
    return out;
}

int GradedCharacter::min_grade() const { return mult_.empty() ? 0 : mult_.begin()->first.first; }
int GradedCharacter::max_grade() const { return mult_.empty() ? 0 : mult_.rbegin()->first.first; }

GradedCharacter operator+(const GradedCharacter& a, const GradedCharacter& b) {
    GradedCharacter c = a;
    for (const auto& [k, m] : b.mult_) c.add(k.first, k.second, m);
    return c;
}

GradedCharacter operator-(const GradedCharacter& a, const GradedCharacter& b) {
    GradedCharacter c = a;
    for (const auto& [k, m] : b.mult_) c.add(k.first, k.second, -m);
    return c;
}

std::string GradedCharacter::str() const {
    std::ostringstream os;
    int last = std::numeric_limits<int>::min();
    for (const auto& [k, m] : mult_) {
        if (k.first != last) {
            if (last != std::numeric_limits<int>::min()) os << " | ";
            os << "q^" << k.first << ":";
            last = k.first;
        }
        os << " " << weight_string(k.second) << "x" << m;
    }
    return os.str();
}

// ---- CurrentModule ----------------------------------------------------------

CurrentModule::CurrentModule(AlgebraPtr g, std::vector<BasisLabel> basis, bool graded, int t_cutoff,
                             ActionFn fn)
    : g_(std::move(g)),
      basis_(std::move(basis)),
      graded_(graded),
      t_cutoff_(t_cutoff),
      fn_(std::move(fn)),
      shared_(std::make_shared<Shared>()) {
    shared_->zero = SparseMatrix(dim(), dim());
    std::vector<BlockKey> keys;
    keys.reserve(basis_.size());
    for (const auto& b : basis_) keys.push_back({graded_ ? b.grade : 0, b.weight});
    shared_->layout = BlockLayout::build(keys);
}

CurrentModule CurrentModule::from_table(AlgebraPtr g, std::vector<BasisLabel> basis, bool graded,
                                        std::vector<std::vector<SparseMatrix>> table) {
    auto t = std::make_shared<const std::vector<std::vector<SparseMatrix>>>(std::move(table));
    int n = static_cast<int>(t->size()) - 1;
    return CurrentModule(std::move(g), std::move(basis), graded, n,
                         [t](const CurrentModule&, int x, int s) { return (*t)[s][x]; });
}

int CurrentModule::min_grade() const {
    int m = std::numeric_limits<int>::max();
    for (const auto& b : basis_) m = std::min(m, b.grade);
    return basis_.empty() ? 0 : m;
}

int CurrentModule::max_grade() const {
    int m = std::numeric_limits<int>::min();
    for (const auto& b : basis_) m = std::max(m, b.grade);
    return basis_.empty() ? 0 : m;
}

const SparseMatrix& CurrentModule::action(int x, int s) const {
    if (x < 0 || x >= g_->dim() || s < 0) throw std::out_of_range("action index out of range");
    if (t_cutoff_ >= 0 && s > t_cutoff_) return shared_->zero;
    {
        std::lock_guard lock(shared_->mu);
        auto it = shared_->cache.find({x, s});
        if (it != shared_->cache.end()) return *it->second;
    }
    auto m = std::make_unique<SparseMatrix>(fn_(*this, x, s));
    if (m->rows() != dim() || m->cols() != dim()) throw std::logic_error("action matrix has wrong shape");
    std::lock_guard lock(shared_->mu);
    auto [it, inserted] = shared_->cache.emplace(std::make_pair(x, s), std::move(m));
    return *it->second;
}

std::shared_ptr<const BlockLayout> CurrentModule::layout() const { return shared_->layout; }

std::vector<const SparseMatrix*> CurrentModule::generating_operators() const {
    std::vector<const SparseMatrix*> ops;
    for (int i = 0; i < g_->rank(); ++i) {
        ops.push_back(&action(g_->e(i), 0));
        ops.push_back(&action(g_->f(i), 0));
    }
    if (t_cutoff_ != 0) ops.push_back(&action(g_->e(g_->theta_index()), 1));
    return ops;
}

// ---- derived actions --------------------------------------------------------

CurrentModule::ActionFn derived_action(BaseActionFn base) {
    return [base](const CurrentModule& self, int x, int s) -> SparseMatrix {
        const auto& g = self.algebra();
        const auto& rs = g.roots();
        const auto& el = g.element(x);
        const int n = g.rank();
        auto comm = [&](int a, int ra, int b, int rb) {
            Rational c = g.bracket(a, b).at(x);
            if (c == 0 || g.bracket(a, b) != SparseVector::unit(x, c))
                throw std::logic_error("derived action: bracket is not a multiple of the target");
            return commutator(self.action(a, ra), self.action(b, rb)).scaled(1 / c);
        };
        auto simple = [&](int i) {
            Weight w(n, 0);
            w[i] = 1;
            return w;
        };
        if (s == 0) {
            if (el.kind == BasisKind::Cartan) return comm(g.e(el.index), 0, g.f(el.index), 0);
            if (el.index < n) return base(self, x, 0);
            const Weight root = el.kind == BasisKind::Raising ? el.root : -el.root;
            for (int i = 0; i < n; ++i)
                if (auto k = rs.find_positive(root - simple(i))) {
                    if (el.kind == BasisKind::Raising) return comm(g.e(i), 0, g.e(*k), 0);
                    return comm(g.f(i), 0, g.f(*k), 0);
                }
            throw std::logic_error("derived action: no decomposition at t^0");
        }
        if (s == 1) {
            if (el.kind == BasisKind::Raising && el.index == g.theta_index()) return base(self, x, 1);
            if (el.kind == BasisKind::Cartan) return comm(g.e(el.index), 1, g.f(el.index), 0);
            const Weight root = el.kind == BasisKind::Raising ? el.root : -el.root;
            if (el.kind == BasisKind::Raising) {
                for (int i = 0; i < n; ++i)
                    if (auto k = rs.find_positive(root + simple(i))) return comm(g.f(i), 0, g.e(*k), 1);
            } else {
                if (el.index < n) return comm(g.f(el.index), 0, g.h(el.index), 1);
                for (int i = 0; i < n; ++i)
                    if (auto k = rs.find_positive(root - simple(i))) return comm(g.f(i), 0, g.f(*k), 1);
            }
            throw std::logic_error("derived action: no decomposition at t^1");
        }
        if (el.kind == BasisKind::Cartan) return comm(g.e(el.index), 1, g.f(el.index), s - 1);
        for (int i = 0; i < n; ++i)
            if (g.bracket(g.h(i), x).at(x) != 0) return comm(g.h(i), 1, x, s - 1);
        throw std::logic_error("derived action: no decomposition");
    };
}

// ---- functors ---------------------------------------------------------------

CurrentModule ev0(const GModule& m) {
    std::vector<BasisLabel> basis;
    for (int i = 0; i < m.dim(); ++i) basis.push_back({m.labels[i], 0, m.weights[i]});
    std::vector<std::vector<SparseMatrix>> table{m.action};
    CurrentModule out = CurrentModule::from_table(m.algebra, std::move(basis), true, std::move(table));
    out.set_generator(m.highest_vector);
    return out;
}

CurrentModule grade_shift(const CurrentModule& m, int r) {
    auto basis = m.basis();
    for (auto& b : basis) b.grade += r;
    CurrentModule out(m.algebra_ptr(), std::move(basis), m.graded(), m.t_cutoff(),
                      [m](const CurrentModule&, int x, int s) { return m.action(x, s); });
    out.set_generator(m.generator());
    return out;
}

CurrentModule eval_shift(const CurrentModule& m, const Rational& z) {
    auto basis = m.basis();
    for (auto& b : basis) b.grade = 0;
    int cutoff = z == 0 ? m.t_cutoff() : -1;
    CurrentModule out(m.algebra_ptr(), std::move(basis), false, cutoff,
                      [m, z](const CurrentModule& self, int x, int s) {
                          SparseMatrix acc(self.dim(), self.dim());
                          int top = m.t_cutoff() < 0 ? s : std::min(s, m.t_cutoff());
                          for (int j = 0; j <= top; ++j) {
                              Rational c = binomial(s, j) * power(z, s - j);
                              if (c != 0) add_scaled(acc, m.action(x, j), c);
                          }
                          return acc;
                      });
    out.set_generator(m.generator());
    return out;
}

namespace {

CurrentModule tensor_pair(const CurrentModule& a, const CurrentModule& b) {
    if (a.algebra().type_label() != b.algebra().type_label())
        throw std::invalid_argument("tensor of modules over different algebras");
    bool graded = a.graded() && b.graded();
    std::vector<BasisLabel> basis;
    basis.reserve(static_cast<std::size_t>(a.dim()) * b.dim());
    for (const auto& x : a.basis())
        for (const auto& y : b.basis())
            basis.push_back({x.label + "|" + y.label, graded ? x.grade + y.grade : 0, x.weight + y.weight});
    int cutoff = (a.t_cutoff() < 0 || b.t_cutoff() < 0) ? -1 : std::max(a.t_cutoff(), b.t_cutoff());
    CurrentModule out(a.algebra_ptr(), std::move(basis), graded, cutoff,
                      [a, b](const CurrentModule&, int x, int s) {
                          return kron_sum(a.action(x, s), b.action(x, s));
                      });
    if (a.generator() && b.generator()) out.set_generator(kron(*a.generator(), *b.generator(), b.dim()));
    return out;
}

}  // namespace

CurrentModule tensor_current(const std::vector<CurrentModule>& factors) {
    if (factors.empty()) throw std::invalid_argument("tensor of no modules");
    CurrentModule acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) acc = tensor_pair(acc, factors[i]);
    return acc;
}

// ---- submodules and quotients -----------------------------------------------

namespace {

void require_homogeneous(const CurrentModule& m, const SparseVector& v) {
    if (!m.graded() || v.is_zero()) return;
    int g = m.basis()[v.entries().front().first].grade;
    for (const auto& [i, c] : v.entries())
        if (m.basis()[i].grade != g) throw std::invalid_argument("seed is not grade-homogeneous");
}

}  // namespace

Submodule submodule_generated(const CurrentModule& m, const std::vector<SparseVector>& seeds) {
    for (const auto& v : seeds) require_homogeneous(m, v);
    auto space = std::make_shared<BlockedSubspace>(m.layout());
    auto ops = m.generating_operators();
    close_under(*space, seeds, ops);
    return {m, space};
}

Submodule zero_submodule(const CurrentModule& m) { return {m, std::make_shared<BlockedSubspace>(m.layout())}; }

Submodule as_submodule(const CurrentModule& m, std::shared_ptr<BlockedSubspace> space) {
    if (space->layout_ptr() != m.layout() && space->layout().keys != m.layout()->keys)
        throw std::invalid_argument("subspace layout does not match the module");
    for (const SparseMatrix* op : m.generating_operators())
        for (int j = 0; j < space->dim(); ++j)
            if (!space->contains(op->apply(space->row(j))))
                throw std::invalid_argument("subspace is not action-stable");
    return {m, std::move(space)};
}

bool is_member(const Submodule& sub, const SparseVector& v) { return sub.space->contains(v); }

CurrentModule submodule_module(const Submodule& sub) {
    const auto& sp = sub.space;
    std::vector<BasisLabel> basis;
    for (int j = 0; j < sp->dim(); ++j) {
        const auto& key = sp->layout().keys[sp->row_block(j)];
        basis.push_back({"s" + std::to_string(j), key.grade, key.weight});
    }
    const CurrentModule parent = sub.parent;
    CurrentModule out(parent.algebra_ptr(), std::move(basis), parent.graded(), parent.t_cutoff(),
                      [parent, sp](const CurrentModule&, int x, int s) {
                          return restrict_to(*sp, parent.action(x, s));
                      });
    if (parent.generator()) {
        SparseVector rest;
        auto c = sp->coordinates(*parent.generator(), &rest);
        if (rest.is_zero()) out.set_generator(SparseVector::from_unsorted(std::move(c)));
    }
    return out;
}

namespace {

struct QuotientIndex {
    std::vector<int> parent_of;  // quotient index -> parent index
    std::vector<int> local;      // parent index -> quotient index or -1
};

QuotientIndex quotient_index(const Submodule& sub) {
    QuotientIndex q;
    q.local.assign(sub.parent.dim(), -1);
    for (int i = 0; i < sub.parent.dim(); ++i)
        if (!sub.space->is_pivot(i)) {
            q.local[i] = static_cast<int>(q.parent_of.size());
            q.parent_of.push_back(i);
        }
    return q;
}

SparseVector project(const BlockedSubspace& sp, const QuotientIndex& q, const SparseVector& v) {
    std::vector<SparseVector::Entry> e;
    const SparseVector rest = sp.residual(v);
    for (const auto& [i, c] : rest.entries()) {
        if (q.local[i] < 0) throw std::logic_error("residual supported on a pivot");
        e.emplace_back(q.local[i], c);
    }
    return SparseVector::from_unsorted(std::move(e));
}

}  // namespace

SparseVector project_to_quotient(const Submodule& sub, const SparseVector& v) {
    return project(*sub.space, quotient_index(sub), v);
}

CurrentModule quotient(const Submodule& sub) {
    auto q = std::make_shared<const QuotientIndex>(quotient_index(sub));
    const CurrentModule parent = sub.parent;
    auto sp = sub.space;
    std::vector<BasisLabel> basis;
    for (int i : q->parent_of) basis.push_back(parent.basis()[i]);
    CurrentModule out(parent.algebra_ptr(), std::move(basis), parent.graded(), parent.t_cutoff(),
                      [parent, sp, q](const CurrentModule& self, int x, int s) {
                          const SparseMatrix& a = parent.action(x, s);
                          SparseMatrix m(self.dim(), self.dim());
                          for (int j = 0; j < self.dim(); ++j)
                              m.set_column(j, project(*sp, *q, a.column(q->parent_of[j])));
                          return m;
                      });
    if (parent.generator()) out.set_generator(project(*sp, *q, *parent.generator()));
    return out;
}

GradedCharacter graded_character(const CurrentModule& m) {
    GradedCharacter c;
    for (const auto& b : m.basis()) c.add(m.graded() ? b.grade : 0, b.weight);
    return c;
}

GradedCharacter graded_character(const Submodule& sub) {
    GradedCharacter c;
    const auto& layout = sub.space->layout();
    for (int b = 0; b < layout.num_blocks(); ++b)
        c.add(layout.keys[b].grade, layout.keys[b].weight, sub.space->block_rank(b));
    return c;
}

GradedCharacter quotient_character(const Submodule& sub) {
    return graded_character(sub.parent) - graded_character(sub);
}

// ---- scans ------------------------------------------------------------------

namespace {

int scan_limit(const CurrentModule& m, int s_max) {
    if (s_max >= 0) return m.t_cutoff() >= 0 ? std::min(s_max, m.t_cutoff()) : s_max;
    return m.t_cutoff() >= 0 ? m.t_cutoff() : 2;
}

}  // namespace

std::string grading_scan(const CurrentModule& m, int s_max) {
    if (!m.graded()) return {};
    const int top = scan_limit(m, s_max);
    for (int s = 0; s <= top; ++s)
        for (int x = 0; x < m.algebra().dim(); ++x)
            for (const auto& [i, j, c] : m.action(x, s).triples())
                if (m.basis()[i].grade != m.basis()[j].grade + s)
                    return m.algebra().element(x).label + "@t^" + std::to_string(s) + " breaks the grading";
    return {};
}

std::string weight_scan(const CurrentModule& m, int s_max) {
    const int top = scan_limit(m, s_max);
    const auto& g = m.algebra();
    for (int s = 0; s <= top; ++s)
        for (int x = 0; x < g.dim(); ++x) {
            const auto& el = g.element(x);
            for (const auto& [i, j, c] : m.action(x, s).triples()) {
                if (m.basis()[i].weight != m.basis()[j].weight + el.weight)
                    return el.label + "@t^" + std::to_string(s) + " breaks weights";
                if (s == 0 && el.kind == BasisKind::Cartan && (i != j || c != m.basis()[j].weight[el.index]))
                    return el.label + " is not diagonal with weight eigenvalues";
            }
            if (s == 0 && el.kind == BasisKind::Cartan)
                for (int j = 0; j < m.dim(); ++j)
                    if (m.action(x, 0).at(j, j) != m.basis()[j].weight[el.index])
                        return "Cartan eigenvalue mismatch at " + m.basis()[j].label;
        }
    return {};
}

std::string bracket_scan(const CurrentModule& m, int s_max) {
    const int top = scan_limit(m, s_max);
    const auto& g = m.algebra();
    const int D = g.dim();
    for (int r = 0; r <= top; ++r)
        for (int s = r; r + s <= top; ++s)
            for (int a = 0; a < D; ++a)
                for (int b = (r == s ? a + 1 : 0); b < D; ++b) {
                    SparseMatrix lhs(m.dim(), m.dim());
                    for (const auto& [x, c] : g.bracket(a, b).entries()) add_scaled(lhs, m.action(x, r + s), c);
                    if (lhs != commutator(m.action(a, r), m.action(b, s)))
                        return "bracket fails on (" + g.element(a).label + "@t^" + std::to_string(r) + ", " +
                               g.element(b).label + "@t^" + std::to_string(s) + ")";
                }
    return {};
}

bool is_cyclic(const CurrentModule& m) {
    if (!m.generator()) return false;
    return submodule_generated(m, *m.generator()).dim() == m.dim();
}

}  // namespace curalg

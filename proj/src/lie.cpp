#include "curalg/lie.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace curalg {

namespace {

int type_rank(const std::string& label, char& letter) {
    if (label.size() < 2) throw std::invalid_argument("unknown Cartan type: " + label);
    letter = label[0];
    for (std::size_t i = 1; i < label.size(); ++i)
        if (label[i] < '0' || label[i] > '9') throw std::invalid_argument("unknown Cartan type: " + label);
    if (label.size() > 3) throw std::invalid_argument("unknown Cartan type: " + label);
    return std::stoi(label.substr(1));
}

void bond(std::vector<std::vector<int>>& a, int i, int j) { a[i][j] = a[j][i] = -1; }

}  // namespace

std::vector<std::vector<int>> cartan_matrix(const std::string& label) {
    char t;
    int n = type_rank(label, t);
    auto bad = [&] { return std::invalid_argument("unknown Cartan type: " + label); };
    bool ok = (t == 'A' && n >= 1) || (t == 'B' && n >= 2) || (t == 'C' && n >= 2) ||
              (t == 'D' && n >= 4) || (t == 'E' && n >= 6 && n <= 8) || (t == 'F' && n == 4) ||
              (t == 'G' && n == 2);
    if (!ok) throw bad();
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    switch (t) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) bond(a, i, i + 1);
            break;
        case 'B':  // alpha_n short
            for (int i = 0; i + 1 < n; ++i) bond(a, i, i + 1);
            a[n - 1][n - 2] = -2;
            break;
        case 'C':  // alpha_n long
            for (int i = 0; i + 1 < n; ++i) bond(a, i, i + 1);
            a[n - 2][n - 1] = -2;
            break;
        case 'D':
            for (int i = 0; i + 2 < n; ++i) bond(a, i, i + 1);
            bond(a, n - 3, n - 1);
            break;
        case 'E':  // 1-3-4-5-..., 2 attached to 4
            bond(a, 0, 2);
            bond(a, 1, 3);
            for (int i = 2; i + 1 < n; ++i) bond(a, i, i + 1);
            break;
        case 'F':
            bond(a, 0, 1);
            bond(a, 1, 2);
            bond(a, 2, 3);
            a[2][1] = -2;
            break;
        case 'G':  // alpha_1 short
            a[0][1] = -3;
            a[1][0] = -1;
            break;
    }
    return a;
}

RootSystem build_root_system(const std::string& type_label) {
    RootSystem rs;
    rs.type_label = type_label;
    rs.cartan = cartan_matrix(type_label);
    const int n = static_cast<int>(rs.cartan.size());
    rs.rank = n;
    const auto& A = rs.cartan;

    // symmetrize: A[i][j] l_i = A[j][i] l_j
    std::vector<Rational> len(n, 0);
    len[0] = 1;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int i = queue.front();
        queue.pop_front();
        for (int j = 0; j < n; ++j) {
            if (j == i || A[i][j] == 0 || len[j] != 0) continue;
            len[j] = Rational(A[i][j]) * len[i] / A[j][i];
            queue.push_back(j);
        }
    }
    Rational mx = *std::max_element(len.begin(), len.end());
    for (auto& l : len) l = l * 2 / mx;
    rs.form.assign(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rs.form[i][j] = Rational(A[i][j]) * len[i] / 2;

    // positive roots by the string algorithm
    std::set<Weight> found;
    std::vector<Weight> layer;
    for (int i = 0; i < n; ++i) {
        Weight w(n, 0);
        w[i] = 1;
        layer.push_back(w);
        found.insert(w);
    }
    std::vector<Weight> all = layer;
    while (!layer.empty()) {
        std::vector<Weight> next;
        for (const auto& b : layer) {
            for (int i = 0; i < n; ++i) {
                int pair = 0;
                for (int j = 0; j < n; ++j) pair += b[j] * A[i][j];
                int p = 0;
                for (Weight d = b;;) {
                    d[i] -= 1;
                    if (!found.count(d)) break;
                    ++p;
                }
                if (p - pair > 0) {
                    Weight c = b;
                    c[i] += 1;
                    if (found.insert(c).second) next.push_back(c);
                }
            }
        }
        all.insert(all.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    std::sort(all.begin(), all.end(), [](const Weight& x, const Weight& y) {
        int hx = 0, hy = 0;
        for (int v : x) hx += v;
        for (int v : y) hy += v;
        if (hx != hy) return hx < hy;
        return x > y;
    });
    rs.positive_roots = all;
    // simple roots come first, in order: e(i), f(i) for i < rank are the simple generators
    for (int i = 0; i < n; ++i)
        if (all[i][i] != 1 || rs.height(all[i]) != 1) throw std::logic_error("simple roots out of order");
    rs.highest_root = static_cast<int>(all.size()) - 1;
    for (const auto& r : all) {
        Rational d = Rational(2) / rs.inner(r, r);
        rs.d_alpha.push_back(static_cast<int>(d.get_num().get_si()));
    }
    return rs;
}

std::optional<int> RootSystem::find_positive(const Weight& root) const {
    auto it = std::find(positive_roots.begin(), positive_roots.end(), root);
    if (it == positive_roots.end()) return std::nullopt;
    return static_cast<int>(it - positive_roots.begin());
}

bool RootSystem::is_root(const Weight& root) const {
    return find_positive(root).has_value() || find_positive(-root).has_value();
}

Rational RootSystem::inner(const Weight& a, const Weight& b) const {
    Rational s = 0;
    for (int i = 0; i < rank; ++i)
        if (a[i])
            for (int j = 0; j < rank; ++j)
                if (b[j]) s += a[i] * b[j] * form[i][j];
    return s;
}

Weight RootSystem::coroot_coefficients(const Weight& root) const {
    Rational rr = inner(root, root);
    Weight k(rank);
    for (int i = 0; i < rank; ++i) {
        Rational c = root[i] * form[i][i] / rr;
        if (!is_integer(c)) throw std::logic_error("non-integral coroot");
        k[i] = static_cast<int>(c.get_num().get_si());
    }
    return k;
}

Weight RootSystem::root_weight(const Weight& root) const {
    Weight w(rank, 0);
    for (int j = 0; j < rank; ++j)
        for (int i = 0; i < rank; ++i) w[j] += root[i] * cartan[j][i];
    return w;
}

int RootSystem::pairing(const Weight& lambda, const Weight& root) const {
    Weight k = coroot_coefficients(root);
    int s = 0;
    for (int i = 0; i < rank; ++i) s += lambda[i] * k[i];
    return s;
}

Rational RootSystem::weight_root_inner(const Weight& lambda, const Weight& root) const {
    Rational s = 0;
    for (int i = 0; i < rank; ++i) s += root[i] * lambda[i] * form[i][i] / 2;
    return s;
}

Weight RootSystem::multiple_of_theta(int k) const { return scaled(root_weight(theta()), k); }

std::vector<Rational> RootSystem::to_root_coordinates(const Weight& lambda) const {
    // solve  sum_i cartan[j][i] c_i = lambda_j
    const int n = rank;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) m[j][i] = cartan[j][i];
        m[j][n] = lambda[j];
    }
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (m[p][c] == 0) ++p;
        std::swap(m[p], m[c]);
        for (int r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[c][c];
            for (int k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    std::vector<Rational> out(n);
    for (int i = 0; i < n; ++i) out[i] = m[i][n] / m[i][i];
    return out;
}

bool RootSystem::simply_laced() const {
    return std::all_of(d_alpha.begin(), d_alpha.end(), [](int d) { return d == 1; });
}

bool RootSystem::is_dominant(const Weight& lambda) const {
    return static_cast<int>(lambda.size()) == rank &&
           std::all_of(lambda.begin(), lambda.end(), [](int x) { return x >= 0; });
}

int RootSystem::height(const Weight& root) const {
    int h = 0;
    for (int v : root) h += v;
    return h;
}

std::string RootSystem::root_name(const Weight& root) const {
    std::string s;
    for (int i = 0; i < rank; ++i) {
        int c = root[i];
        if (c == 0) continue;
        if (c < 0) s += "-";
        else if (!s.empty()) s += "+";
        if (std::abs(c) != 1) s += std::to_string(std::abs(c));
        s += "a" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

Weight RootSystem::parse_root(const std::string& name) const {
    auto bad = [&] { return std::invalid_argument("malformed root: " + name); };
    if (name == "theta") return theta();
    if (name == "-theta") return -theta();
    Weight r(rank, 0);
    std::size_t i = 0;
    bool any = false;
    while (i < name.size()) {
        int sign = 1;
        if (name[i] == '+' || name[i] == '-') {
            sign = name[i] == '-' ? -1 : 1;
            ++i;
        } else if (any) {
            throw bad();
        }
        int coef = 0;
        bool has_coef = false;
        while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) {
            coef = coef * 10 + (name[i++] - '0');
            has_coef = true;
        }
        if (!has_coef) coef = 1;
        if (i >= name.size() || name[i] != 'a') throw bad();
        ++i;
        int idx = 0;
        bool has_idx = false;
        while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) {
            idx = idx * 10 + (name[i++] - '0');
            has_idx = true;
        }
        if (!has_idx || idx < 1 || idx > rank) throw bad();
        r[idx - 1] += sign * coef;
        any = true;
    }
    if (!any) throw bad();
    return r;
}

// ---- Chevalley basis --------------------------------------------------------

ChevalleyAlgebra::ChevalleyAlgebra(RootSystem roots) : roots_(std::move(roots)) {
    const RootSystem& rs = roots_;
    const int P = rs.num_positive();
    const int n = rs.rank;
    auto idx = [&](const Weight& w) { return rs.find_positive(w); };

    pos_n_.assign(P * P, 0);
    std::vector<char> known(P * P, 0);
    auto rr = [&](const Weight& w) { return rs.inner(w, w); };

    // N for signed roots from the positive-pair table filled so far
    std::function<Rational(const Weight&, const Weight&)> nsigned =
        [&](const Weight& r, const Weight& s) -> Rational {
        Weight t = r + s;
        if (is_zero_weight(t) || !rs.is_root(t)) return 0;
        bool rp = rs.height(r) > 0, sp = rs.height(s) > 0;
        if (rp && sp) {
            int a = *idx(r), b = *idx(s);
            if (!known[a * P + b]) throw std::logic_error("structure constant requested out of order");
            return pos_n_[a * P + b];
        }
        if (!rp && !sp) return -nsigned(-r, -s);
        if (!rp) return -nsigned(s, r);
        Weight u = -t;
        if (rs.height(t) > 0) return rr(u) / rr(r) * nsigned(s, u);
        return rr(u) / rr(s) * nsigned(u, r);
    };

    for (int x = 0; x < P; ++x) {
        const Weight& xi = rs.positive_roots[x];
        std::vector<std::pair<int, int>> special;
        for (int a = 0; a < x; ++a) {
            auto b = idx(xi - rs.positive_roots[a]);
            if (b && a < *b) special.emplace_back(a, *b);
        }
        if (special.empty()) continue;
        auto [g, d] = special.front();
        const Weight& gamma = rs.positive_roots[g];
        const Weight& delta = rs.positive_roots[d];
        int p = 0;
        for (Weight w = delta - gamma; rs.is_root(w); w = w - gamma) ++p;
        pos_n_[g * P + d] = p + 1;
        pos_n_[d * P + g] = -(p + 1);
        known[g * P + d] = known[d * P + g] = 1;
        for (std::size_t k = 1; k < special.size(); ++k) {
            auto [a, b] = special[k];
            const Weight& al = rs.positive_roots[a];
            const Weight& be = rs.positive_roots[b];
            Rational sum = 0;
            Weight bg = be - gamma, ag = al - gamma;
            if (rs.is_root(bg)) sum += nsigned(be, -gamma) * nsigned(al, -delta) / rr(bg);
            if (rs.is_root(ag)) sum += nsigned(-gamma, al) * nsigned(be, -delta) / rr(ag);
            Rational v = rr(xi) / Rational(pos_n_[g * P + d]) * sum;
            if (!is_integer(v)) throw std::logic_error("non-integral structure constant");
            int iv = static_cast<int>(v.get_num().get_si());
            pos_n_[a * P + b] = iv;
            pos_n_[b * P + a] = -iv;
            known[a * P + b] = known[b * P + a] = 1;
        }
    }
    for (int k = 0; k < P; ++k) {
        const Weight& r = rs.positive_roots[k];
        basis_.push_back({BasisKind::Lowering, k, "F[" + rs.root_name(r) + "]", -r, -rs.root_weight(r)});
    }
    for (int i = 0; i < n; ++i) {
        Weight r(n, 0);
        r[i] = 1;
        basis_.push_back({BasisKind::Cartan, i, "H[" + rs.root_name(r) + "]", Weight(n, 0), Weight(n, 0)});
    }
    for (int k = 0; k < P; ++k) {
        const Weight& r = rs.positive_roots[k];
        basis_.push_back({BasisKind::Raising, k, "E[" + rs.root_name(r) + "]", r, rs.root_weight(r)});
    }

    const int D = dim();
    table_.assign(D * D, SparseVector{});
    for (int a = 0; a < D; ++a) {
        for (int b = 0; b < D; ++b) {
            const auto& A = basis_[a];
            const auto& B = basis_[b];
            SparseVector v;
            if (A.kind == BasisKind::Cartan && B.kind == BasisKind::Cartan) {
            } else if (A.kind == BasisKind::Cartan) {
                int c = 0;
                for (int j = 0; j < n; ++j) c += B.root[j] * rs.cartan[A.index][j];
                v = SparseVector::unit(b, c);
            } else if (B.kind == BasisKind::Cartan) {
                int c = 0;
                for (int j = 0; j < n; ++j) c += A.root[j] * rs.cartan[B.index][j];
                v = SparseVector::unit(a, -c);
            } else {
                Weight t = A.root + B.root;
                if (is_zero_weight(t)) {
                    Weight k = rs.coroot_coefficients(rs.positive_roots[A.index]);
                    int sign = A.kind == BasisKind::Raising ? 1 : -1;
                    std::vector<SparseVector::Entry> e;
                    for (int i = 0; i < n; ++i) e.emplace_back(h(i), sign * k[i]);
                    v = SparseVector::from_unsorted(std::move(e));
                } else if (rs.is_root(t)) {
                    Rational c = nsigned(A.root, B.root);
                    v = SparseVector::unit(root_vector(t), c);
                }
            }
            table_[a * D + b] = std::move(v);
        }
    }
}

int ChevalleyAlgebra::root_vector(const Weight& signed_root) const {
    if (auto k = roots_.find_positive(signed_root)) return e(*k);
    if (auto k = roots_.find_positive(-signed_root)) return f(*k);
    throw std::invalid_argument("not a root: " + weight_string(signed_root));
}

std::optional<int> ChevalleyAlgebra::find_label(const std::string& label) const {
    if (label.size() < 4 || label[1] != '[' || label.back() != ']') return std::nullopt;
    std::string inner = label.substr(2, label.size() - 3);
    Weight r;
    try {
        r = roots_.parse_root(inner);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    switch (label[0]) {
        case 'E':
            if (auto k = roots_.find_positive(r)) return e(*k);
            return std::nullopt;
        case 'F':
            if (auto k = roots_.find_positive(r)) return f(*k);
            return std::nullopt;
        case 'H':
            for (int i = 0; i < rank(); ++i) {
                Weight s(rank(), 0);
                s[i] = 1;
                if (s == r) return h(i);
            }
            return std::nullopt;
        default:
            return std::nullopt;
    }
}

SparseVector ChevalleyAlgebra::bracket(const SparseVector& x, const SparseVector& y) const {
    SparseVector out;
    for (const auto& [a, ca] : x.entries())
        for (const auto& [b, cb] : y.entries()) out.add_scaled(bracket(a, b), ca * cb);
    return out;
}

Rational ChevalleyAlgebra::form(int a, int b) const {
    const auto& A = basis_[a];
    const auto& B = basis_[b];
    if (A.kind == BasisKind::Cartan && B.kind == BasisKind::Cartan) {
        const auto& f = roots_.form;
        return 4 * f[A.index][B.index] / (f[A.index][A.index] * f[B.index][B.index]);
    }
    if (A.kind != BasisKind::Cartan && B.kind != BasisKind::Cartan && A.kind != B.kind &&
        A.index == B.index)
        return roots_.d_alpha[A.index];
    return 0;
}

int ChevalleyAlgebra::structure_constant(const Weight& r, const Weight& s) const {
    Weight t = r + s;
    if (is_zero_weight(t) || !roots_.is_root(t)) return 0;
    const SparseVector& v = bracket(root_vector(r), root_vector(s));
    return static_cast<int>(v.at(root_vector(t)).get_num().get_si());
}

AlgebraPtr chevalley_constants(const std::string& type_label) {
    static std::mutex mu;
    static std::map<std::string, AlgebraPtr> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(type_label);
    if (it != cache.end()) return it->second;
    auto g = std::make_shared<const ChevalleyAlgebra>(build_root_system(type_label));
    cache.emplace(type_label, g);
    return g;
}

ChevalleyAlgebra chevalley_constants(const RootSystem& roots) { return ChevalleyAlgebra(roots); }

// ---- scans ------------------------------------------------------------------

std::string jacobi_scan(const ChevalleyAlgebra& g) {
    const int D = g.dim();
    for (int a = 0; a < D; ++a)
        for (int b = a + 1; b < D; ++b)
            for (int c = b + 1; c < D; ++c) {
                SparseVector s = g.bracket(SparseVector::unit(a), g.bracket(b, c));
                s.add_scaled(g.bracket(SparseVector::unit(b), g.bracket(c, a)), 1);
                s.add_scaled(g.bracket(SparseVector::unit(c), g.bracket(a, b)), 1);
                if (!s.is_zero())
                    return "Jacobi fails on (" + g.element(a).label + ", " + g.element(b).label +
                           ", " + g.element(c).label + ")";
            }
    return {};
}

std::string antisymmetry_scan(const ChevalleyAlgebra& g) {
    for (int a = 0; a < g.dim(); ++a)
        for (int b = 0; b < g.dim(); ++b)
            if (!(g.bracket(a, b) + g.bracket(b, a)).is_zero())
                return "antisymmetry fails on (" + g.element(a).label + ", " + g.element(b).label + ")";
    return {};
}

std::string cartan_recovery_scan(const ChevalleyAlgebra& g) {
    const auto& rs = g.roots();
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) {
            Weight r(rs.rank, 0);
            r[j] = 1;
            int ej = g.root_vector(r);
            if (g.bracket(g.h(i), ej) != SparseVector::unit(ej, rs.cartan[i][j]))
                return "Cartan entry (" + std::to_string(i) + "," + std::to_string(j) + ") not recovered";
        }
    for (int k = 0; k < rs.num_positive(); ++k) {
        Weight kk = rs.coroot_coefficients(rs.positive_roots[k]);
        std::vector<SparseVector::Entry> e;
        for (int i = 0; i < rs.rank; ++i) e.emplace_back(g.h(i), kk[i]);
        if (g.bracket(g.e(k), g.f(k)) != SparseVector::from_unsorted(e))
            return "[E,F] != coroot for " + g.element(g.e(k)).label;
    }
    return {};
}

std::string integrality_scan(const ChevalleyAlgebra& g) {
    for (int a = 0; a < g.dim(); ++a)
        for (int b = 0; b < g.dim(); ++b)
            for (const auto& [i, c] : g.bracket(a, b).entries())
                if (!is_integer(c))
                    return "non-integral constant in [" + g.element(a).label + ", " + g.element(b).label + "]";
    return {};
}

std::string root_system_scan(const RootSystem& rs) {
    const Weight& th = rs.theta();
    if (rs.inner(th, th) != 2) return "(theta|theta) != 2";
    if (rs.d_alpha[rs.highest_root] != 1) return "d_theta != 1";
    for (int k = 0; k < rs.num_positive(); ++k) {
        const Weight& a = rs.positive_roots[k];
        Weight diff = th - a;
        if (std::any_of(diff.begin(), diff.end(), [](int v) { return v < 0; }))
            return "theta is not maximal over " + rs.root_name(a);
        int d = rs.d_alpha[k];
        if (d < 1 || d > 3) return "d_alpha out of range";
        bool laced = true;
        for (const auto& row : rs.cartan)
            for (int v : row) laced = laced && v >= -1;
        if (laced && d != 1) return "simply-laced type with d_alpha != 1";
        if (k != rs.highest_root) {
            Rational ta = rs.inner(th, a);
            if (ta != 0 && ta != 1) return "(theta|alpha) not in {0,1} for " + rs.root_name(a);
        }
        for (int i = 0; i < rs.rank; ++i) {
            Weight lam(rs.rank, 0);
            lam[i] = 1;
            if (Rational(rs.pairing(lam, a)) != d * rs.weight_root_inner(lam, a))
                return "pairing identity fails for " + rs.root_name(a);
        }
    }
    return {};
}

}  // namespace curalg

#include "curalg/uea.hpp"

#include <cctype>
#include <stdexcept>
#include <tuple>

namespace curalg {

UElement UElement::one() { return monomial({}); }

UElement UElement::generator(int x, int s, int b) { return monomial({Factor{x, s, b}}); }

UElement UElement::monomial(Monomial m, const Rational& c) {
    UElement u;
    u.add_term(m, c);
    return u;
}

void UElement::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    for (const auto& f : m)
        if (f.b < 1 || f.s < 0) throw std::invalid_argument("factor needs b >= 1 and s >= 0");
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

UElement UElement::scaled(const Rational& c) const {
    UElement r;
    if (c == 0) return r;
    for (const auto& [m, a] : terms_) r.terms_.emplace(m, a * c);
    return r;
}

UElement operator+(const UElement& a, const UElement& b) {
    UElement r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

UElement operator-(const UElement& a, const UElement& b) { return a + b.scaled(-1); }

UElement operator*(const UElement& a, const UElement& b) {
    UElement r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            r.add_term(m, ca * cb);
        }
    return r;
}

int monomial_grade(const Monomial& m) {
    int d = 0;
    for (const auto& f : m) d += f.s * f.b;
    return d;
}

Weight monomial_weight(const ChevalleyAlgebra& g, const Monomial& m) {
    Weight w(g.rank(), 0);
    for (const auto& f : m) w = w + scaled(g.element(f.x).weight, f.b);
    return w;
}

std::optional<int> UElement::grade() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
        int dm = monomial_grade(m);
        if (d && *d != dm) return std::nullopt;
        d = dm;
    }
    return d;
}

std::optional<Weight> UElement::weight(const ChevalleyAlgebra& g) const {
    std::optional<Weight> w;
    for (const auto& [m, c] : terms_) {
        Weight wm = monomial_weight(g, m);
        if (w && *w != wm) return std::nullopt;
        w = std::move(wm);
    }
    return w;
}

std::string monomial_str(const ChevalleyAlgebra& g, const Monomial& m) {
    if (m.empty()) return "1";
    std::string out;
    for (const auto& f : m) {
        if (!out.empty()) out += ' ';
        out += g.element(f.x).label;
        if (f.s == 1) out += "@t";
        if (f.s > 1) out += "@t^" + std::to_string(f.s);
        if (f.b > 1) out += "^(" + std::to_string(f.b) + ")";
    }
    return out;
}

std::string UElement::str(const ChevalleyAlgebra& g) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (out.empty()) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (m.empty()) {
            out += to_string(a);
        } else {
            if (a != 1) out += to_string(a) + " ";
            out += monomial_str(g, m);
        }
    }
    return out;
}

namespace {

class Parser {
  public:
    Parser(const std::string& text, const ChevalleyAlgebra& g) : s_(text), g_(g) {}

    UElement expression() {
        UElement total;
        skip();
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected + or -");
            }
            total = total + term().scaled(sign);
            first = false;
            skip();
        }
        if (first) fail("empty element");
        return total;
    }

  private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("cannot parse element '" + s_ + "' at " + std::to_string(pos_) +
                                    ": " + why);
    }

    int integer() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return std::stoi(s_.substr(start, pos_ - start));
    }

    UElement term() {
        Rational coef = 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
            coef = parse_rational(s_.substr(start, pos_ - start));
            skip();
            if (peek() == '*') {
                ++pos_;
                skip();
            }
        }
        Monomial m;
        while (pos_ < s_.size() && peek() != '+' && peek() != '-') {
            m.push_back(factor());
            skip();
            if (peek() == '^') {
                ++pos_;
                if (peek() != '(') fail("expected ^(b)");
                ++pos_;
                m.back().b = integer();
                if (peek() != ')') fail("expected )");
                ++pos_;
                if (m.back().b < 1) fail("divided power must be positive");
                skip();
            }
            if (peek() == '*') {
                ++pos_;
                skip();
            }
        }
        return UElement::monomial(m, coef);
    }

    Factor factor() {
        std::size_t start = pos_;
        if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a basis label");
        ++pos_;
        if (peek() != '[') fail("expected [");
        std::size_t close = s_.find(']', pos_);
        if (close == std::string::npos) fail("unterminated label");
        pos_ = close + 1;
        const std::string label = s_.substr(start, pos_ - start);
        auto x = g_.find_label(label);
        if (!x) fail("unknown basis element " + label);
        Factor f{*x, 0, 1};
        if (s_.compare(pos_, 2, "@t") == 0) {
            pos_ += 2;
            f.s = 1;
            if (peek() == '^' && pos_ + 1 < s_.size() && s_[pos_ + 1] != '(') {
                ++pos_;
                f.s = integer();
            }
        }
        return f;
    }

    const std::string& s_;
    const ChevalleyAlgebra& g_;
    std::size_t pos_ = 0;
};

}  // namespace

UElement parse_uelement(const std::string& text, const ChevalleyAlgebra& g) {
    return Parser(text, g).expression();
}

SparseVector apply(const UElement& u, const CurrentModule& m, const SparseVector& v) {
    SparseVector out;
    for (const auto& [mono, c] : u.terms()) {
        SparseVector w = v;
        for (auto it = mono.rbegin(); it != mono.rend() && !w.is_zero(); ++it) {
            const SparseMatrix& a = m.action(it->x, it->s);
            for (int k = 0; k < it->b && !w.is_zero(); ++k) w = a.apply(w);
            if (it->b > 1) w = w.scaled(1 / factorial(it->b));
        }
        out.add_scaled(w, c);
    }
    return out;
}

UElement garland_element(const ChevalleyAlgebra& g, int alpha, int r, int s) {
    if (r < 0 || s < 0) throw std::invalid_argument("garland element needs r, s >= 0");
    UElement out;
    Monomial cur;
    const int x = g.f(alpha);
    // b_p for p = s, s-1, ..., 0; factors emitted with p increasing
    auto rec = [&](auto&& self, int p, int left_r, int left_s) -> void {
        if (p == 0) {
            Monomial m;
            if (left_r > 0) m.push_back({x, 0, left_r});
            if (left_s != 0) return;
            for (auto it = cur.rbegin(); it != cur.rend(); ++it) m.push_back(*it);
            out.add_term(m, 1);
            return;
        }
        for (int b = 0; b <= left_r && b * p <= left_s; ++b) {
            if (b > 0) cur.push_back({x, p, b});
            self(self, p - 1, left_r - b, left_s - b * p);
            if (b > 0) cur.pop_back();
        }
    };
    rec(rec, s, r, s);
    return out;
}

namespace {

struct Simple {
    int x;
    int s;
    auto operator<=>(const Simple&) const = default;
};

std::tuple<int, int, int> pbw_key(const ChevalleyAlgebra& g, const Simple& f) {
    return {static_cast<int>(g.element(f.x).kind), f.s, f.x};
}

}  // namespace

UElement pbw_normal_form(const UElement& u, const ChevalleyAlgebra& g) {
    using Word = std::vector<Simple>;
    auto inversions = [&](const Word& w) {
        int n = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = i + 1; j < w.size(); ++j)
                if (pbw_key(g, w[j]) < pbw_key(g, w[i])) ++n;
        return n;
    };
    // Every rewrite either drops a letter or removes an inversion, so taking the
    // largest (length, inversions) first merges all contributions to a word
    // before it is rewritten.
    using Key = std::tuple<std::size_t, int, Word>;
    std::map<Key, Rational, std::greater<>> work;
    auto push = [&](Word w, const Rational& c) {
        if (c == 0) return;
        Key k{w.size(), inversions(w), std::move(w)};
        auto [it, fresh] = work.try_emplace(std::move(k), c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) work.erase(it);
        }
    };
    for (const auto& [m, c] : u.terms()) {
        Word w;
        Rational coef = c;
        for (const auto& f : m) {
            for (int k = 0; k < f.b; ++k) w.push_back({f.x, f.s});
            if (f.b > 1) coef /= factorial(f.b);
        }
        push(std::move(w), coef);
    }

    UElement out;
    while (!work.empty()) {
        auto node = work.extract(work.begin());
        const Word& w = std::get<2>(node.key());
        const Rational c = node.mapped();
        std::size_t i = 0;
        while (i + 1 < w.size() && !(pbw_key(g, w[i + 1]) < pbw_key(g, w[i]))) ++i;
        if (i + 1 >= w.size()) {
            Monomial m;
            for (const auto& f : w) {
                if (!m.empty() && m.back().x == f.x && m.back().s == f.s)
                    ++m.back().b;
                else
                    m.push_back({f.x, f.s, 1});
            }
            Rational coef = c;
            for (const auto& f : m)
                if (f.b > 1) coef *= factorial(f.b);
            out.add_term(m, coef);
            continue;
        }
        Word swapped = w;
        std::swap(swapped[i], swapped[i + 1]);
        push(std::move(swapped), c);
        for (const auto& [z, cz] : g.bracket(w[i].x, w[i + 1].x).entries()) {
            Word shorter;
            shorter.reserve(w.size() - 1);
            shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<long>(i));
            shorter.push_back({z, w[i].s + w[i + 1].s});
            shorter.insert(shorter.end(), w.begin() + static_cast<long>(i) + 2, w.end());
            push(std::move(shorter), c * cz);
        }
    }
    return out;
}

int effective_t_bound(const CurrentModule& m) {
    if (m.t_cutoff() >= 0) return m.t_cutoff();
    if (m.graded()) return m.max_grade() - m.min_grade();
    throw std::domain_error("no bound on the t-powers acting on an ungraded module");
}

bool garland_congruence_check(const CurrentModule& m, int alpha, int r, int s) {
    if (!m.generator()) throw std::invalid_argument("module has no generator");
    const auto& g = m.algebra();
    const SparseVector& w = *m.generator();
    const int top = effective_t_bound(m);
    for (int p = 0; p <= top; ++p) {
        for (int k = 0; k < g.num_positive(); ++k)
            if (!m.apply(g.e(k), p, w).is_zero())
                throw std::invalid_argument("generator is not killed by n+[t]");
        if (p > 0)
            for (int i = 0; i < g.rank(); ++i)
                if (!m.apply(g.h(i), p, w).is_zero())
                    throw std::invalid_argument("generator is not killed by h (x) tC[t]");
    }
    Monomial lm;
    if (s > 0) lm.push_back({g.e(alpha), 1, s});
    if (s + r > 0) lm.push_back({g.f(alpha), 0, s + r});
    const UElement lhs = UElement::monomial(lm);
    const Rational sign = s % 2 == 0 ? 1 : -1;
    return apply(lhs, m, w) == apply(garland_element(g, alpha, r, s), m, w).scaled(sign);
}

}  // namespace curalg

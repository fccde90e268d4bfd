#include "curalg/models.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "curalg/finrep.hpp"

namespace curalg {

ModelSpec ModelSpec::parse(const std::string& text) {
    auto bad = [&](const std::string& why) {
        return std::invalid_argument("malformed model spec '" + text + "': " + why);
    };
    ModelSpec spec;
    auto colon = text.find(':');
    spec.kind = text.substr(0, colon);
    static const std::map<std::string, std::vector<std::string>> keys{
        {"D1", {"k"}}, {"Vik", {"i", "k"}}, {"Fusion", {"m", "n"}},
        {"Ev", {"k"}}, {"Trunc", {"k", "n"}}, {"Weyl", {"k"}}};
    auto it = keys.find(spec.kind);
    if (it == keys.end()) throw bad("unknown kind");
    if (colon != std::string::npos) {
        std::string rest = text.substr(colon + 1);
        std::size_t pos = 0;
        while (pos < rest.size()) {
            auto comma = rest.find(',', pos);
            std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            auto eq = item.find('=');
            if (eq == std::string::npos || eq == 0) throw bad("expected key=value");
            std::string key = item.substr(0, eq);
            int value;
            try {
                std::size_t used = 0;
                value = std::stoi(item.substr(eq + 1), &used);
                if (used != item.size() - eq - 1) throw bad("bad integer");
            } catch (const std::logic_error&) {
                throw bad("bad integer in " + item);
            }
            if (!spec.params.emplace(key, value).second) throw bad("repeated key " + key);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    for (const auto& [k, v] : spec.params)
        if (std::find(it->second.begin(), it->second.end(), k) == it->second.end()) throw bad("unexpected key " + k);
    for (const auto& k : it->second)
        if (!spec.params.count(k)) throw bad("missing key " + k);
    return spec;
}

int ModelSpec::get(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) throw std::invalid_argument("model spec has no parameter " + key);
    return it->second;
}

std::string ModelSpec::str() const {
    std::string out = kind;
    bool first = true;
    for (const auto& [k, v] : params) {
        out += first ? ":" : ",";
        out += k + "=" + std::to_string(v);
        first = false;
    }
    return out;
}

CurrentModule fusion_model(const AlgebraPtr& g, int m, int n, const std::vector<Rational>& z) {
    if (m < 0 || n < 0 || m + n < 1) throw std::invalid_argument("fusion needs m, n >= 0 and m + n >= 1");
    if (static_cast<int>(z.size()) != m + n) throw std::invalid_argument("need one parameter per factor");
    const CurrentModule d = demazure_one_theta(g);
    const CurrentModule e = ev0(adjoint_module(g));
    std::vector<FusionFactor> factors;
    for (int j = 0; j < m + n; ++j) factors.push_back({j < m ? d : e, z[j]});
    return fusion_product(factors);
}

namespace {

std::mutex cache_mu;
std::map<std::string, ModelView>& cache() {
    static std::map<std::string, ModelView> c;
    return c;
}

std::vector<Rational> default_parameters(int count) {
    std::vector<Rational> z;
    for (int j = 0; j < count; ++j) z.emplace_back(j);
    return z;
}

void require_simply_laced(const ChevalleyAlgebra& g, const std::string& what) {
    if (!g.roots().simply_laced())
        throw std::domain_error(what + " models are only built for simply-laced types");
}

ModelView build_uncached(const AlgebraPtr& g, const ModelSpec& spec) {
    const std::string& kind = spec.kind;
    if (kind == "D1" || kind == "Fusion" || kind == "Ev" || kind == "Weyl") {
        int m = 0, n = 0;
        if (kind == "Fusion") m = spec.get("m"), n = spec.get("n");
        if (kind == "D1" || kind == "Weyl") m = spec.get("k");
        if (kind == "Ev") n = spec.get("k");
        if (kind == "Weyl") require_simply_laced(*g, "Weyl");
        if (m < 0 || n < 0 || m + n < 1) throw std::invalid_argument("model needs a positive number of factors");
        if (m + n == 1) return view_of(m == 1 ? demazure_one_theta(g) : ev0(adjoint_module(g)));
        return view_of(fusion_model(g, m, n, default_parameters(m + n)));
    }
    if (kind == "Vik") {
        const int i = spec.get("i"), k = spec.get("k");
        if (k < 1 || i < 0 || i > k) throw std::invalid_argument("Vik needs k >= 1 and 0 <= i <= k");
        return theta_quotient(g, k, 2 * k - i);
    }
    if (kind == "Trunc") {
        require_simply_laced(*g, "Truncated");
        const int k = spec.get("k"), n = spec.get("n");
        if (k < 1 || n < 1) throw std::invalid_argument("Trunc needs k, n >= 1");
        return theta_quotient(g, k, n);
    }
    throw std::invalid_argument("unknown model kind " + kind);
}

}  // namespace

ModelView theta_quotient(const AlgebraPtr& g, int k, int s) {
    ModelView d = build_model(g, ModelSpec{"D1", {{"k", k}}});
    const SparseVector seed = d.ambient.apply(g->f(g->theta_index()), s, d.generator);
    d.killed = submodule_generated(d.ambient, seed);
    return d;
}

ModelView build_model(const AlgebraPtr& g, const ModelSpec& spec) {
    const std::string key = g->type_label() + "|" + spec.str();
    {
        std::lock_guard lock(cache_mu);
        auto it = cache().find(key);
        if (it != cache().end()) return it->second;
    }
    ModelView v = build_uncached(g, spec);
    std::lock_guard lock(cache_mu);
    return cache().try_emplace(key, std::move(v)).first->second;
}

Presentation expected_presentation(const ChevalleyAlgebra& g, const ModelSpec& spec) {
    const auto& rs = g.roots();
    const std::string& kind = spec.kind;
    if (kind == "D1") return demazure_presentation(g, rs.multiple_of_theta(spec.get("k")));
    if (kind == "Weyl") return weyl_presentation(g, rs.multiple_of_theta(spec.get("k")));
    if (kind == "Vik") return vik_presentation(g, spec.get("i"), spec.get("k"));
    if (kind == "Ev") return vik_presentation(g, spec.get("k"), spec.get("k"));
    if (kind == "Fusion") return vik_presentation(g, spec.get("n"), spec.get("m") + spec.get("n"));
    if (kind == "Trunc") return truncated_presentation(g, spec.get("k"), spec.get("n"));
    throw std::invalid_argument("unknown model kind " + kind);
}

Presentation parse_presentation(const ChevalleyAlgebra& g, const std::string& text) {
    auto bad = [&](const std::string& why) {
        return std::invalid_argument("malformed presentation spec '" + text + "': " + why);
    };
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    std::map<std::string, std::string> kv;
    if (colon != std::string::npos) {
        std::stringstream rest(text.substr(colon + 1));
        std::string item;
        while (std::getline(rest, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos || eq == 0) throw bad("expected key=value");
            if (!kv.emplace(item.substr(0, eq), item.substr(eq + 1)).second) throw bad("repeated key");
        }
    }
    auto take_int = [&](const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end()) throw bad("missing key " + key);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(it->second, &used);
        } catch (const std::logic_error&) {
            used = 0;
        }
        if (used == 0 || used != it->second.size()) throw bad("bad integer for " + key);
        kv.erase(it);
        return v;
    };
    auto done = [&](Presentation p) {
        if (!kv.empty()) throw bad("unexpected key " + kv.begin()->first);
        return p;
    };
    const auto& rs = g.roots();
    if (kind == "weyl" || kind == "demazure") {
        const int k = take_int("k");
        if (k < 0) throw bad("k must be >= 0");
        const Weight lambda = rs.multiple_of_theta(k);
        return done(kind == "weyl" ? weyl_presentation(g, lambda) : demazure_presentation(g, lambda));
    }
    if (kind == "vik") {
        const int i = take_int("i"), k = take_int("k");
        return done(vik_presentation(g, i, k));
    }
    if (kind == "trunc") {
        const int k = take_int("k"), n = take_int("n");
        return done(truncated_presentation(g, k, n));
    }
    if (kind == "cv") {
        auto it = kv.find("xi");
        if (it == kv.end()) throw bad("missing key xi");
        const std::string xi = it->second;
        kv.erase(it);
        if (xi == "braces" || xi == "unit") {
            const int k = take_int("k");
            if (k < 0) throw bad("k must be >= 0");
            const Weight lambda = rs.multiple_of_theta(k);
            return done(cv_relations(g, xi == "braces" ? braces_tuple(rs, lambda) : unit_tuple(rs, lambda)));
        }
        if (xi == "minus" || xi == "mid" || xi == "plus") {
            const int i = take_int("i"), k = take_int("k");
            return done(cv_relations(g, xi_tuple(rs, xi, i, k)));
        }
        throw bad("unknown xi " + xi);
    }
    throw bad("unknown kind");
}

void clear_model_cache() {
    std::lock_guard lock(cache_mu);
    cache().clear();
}

}  // namespace curalg

#include "superalg/pbw.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sa {

namespace {

void accumulate(std::map<int, int>& acc, const SparseVec& v, int c, int p) {
    if (!c) return;
    for (auto [i, x] : v) {
        int& slot = acc[i];
        slot = (slot + c * x) % p;
    }
}

SparseVec to_sparse(const std::map<int, int>& acc) {
    SparseVec out;
    out.reserve(acc.size());
    for (auto [i, x] : acc)
        if (x) out.emplace_back(i, x);
    return out;
}

Exps unit_exps(int n, int g, int e = 1) {
    Exps x(n, 0);
    x[g] = e;
    return x;
}

}  // namespace

// ---------------------------------------------------------------- Element

Element::Element(AlgebraPtr alg, std::vector<int> coeffs) : alg_(std::move(alg)), c_(std::move(coeffs)) {
    if (alg_ && static_cast<int>(c_.size()) != alg_->dim()) throw usage_error("element size mismatch");
}

SparseVec Element::terms() const {
    SparseVec t;
    for (int i = 0; i < static_cast<int>(c_.size()); ++i)
        if (c_[i]) t.emplace_back(i, c_[i]);
    return t;
}

bool Element::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
}

Element Element::operator+(const Element& o) const {
    int p = alg_->p();
    std::vector<int> r(c_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = (c_[i] + o.c_[i]) % p;
    return Element(alg_, std::move(r));
}

Element Element::operator-(const Element& o) const {
    int p = alg_->p();
    std::vector<int> r(c_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = (c_[i] - o.c_[i] + p) % p;
    return Element(alg_, std::move(r));
}

Element Element::scaled(long long s) const {
    int p = alg_->p();
    int k = alg_->field().reduce(s);
    std::vector<int> r(c_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = c_[i] * k % p;
    return Element(alg_, std::move(r));
}

Element Element::operator*(const Element& o) const { return alg_->multiply(*this, o); }

std::string Element::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (auto [i, c] : terms()) {
        if (!first) os << " + ";
        first = false;
        os << c;
        std::string m = alg_->monomial_name(i);
        if (m != "1") os << "*" << m;
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------- PBWAlgebra

PBWAlgebra::PBWAlgebra(Presentation pres) : pres_(std::move(pres)), F_(pres_.p) {
    const int n = ngens();
    radix_.assign(n, 1);
    long long d = 1;
    for (int i = n - 1; i >= 0; --i) {
        if (pres_.gens[i].trunc < 2) throw usage_error("truncation must be at least 2");
        radix_[i] = static_cast<int>(d);
        d *= pres_.gens[i].trunc;
        if (d > 50'000'000) throw usage_error("algebra too large");
    }
    dim_ = static_cast<int>(d);
    for (auto& [key, rule] : pres_.rewrite) {
        auto [j, i] = key;
        if (!(j > i && i >= 0 && j < n)) throw usage_error("rewrite keys must be (j, i) with j > i");
        for (auto& t : rule)
            if (static_cast<int>(t.exps.size()) != n || index(t.exps) < 0)
                throw usage_error("rewrite term is not a normal monomial");
    }
    for (auto& g : pres_.gens)
        for (auto& t : g.power_rule)
            if (static_cast<int>(t.exps.size()) != n || index(t.exps) < 0)
                throw usage_error("truncation rule term is not a normal monomial");
    build_table();
}

std::string PBWAlgebra::ref() const { return pres_.name + "@p=" + std::to_string(pres_.p); }

int PBWAlgebra::gen_index(const std::string& name) const {
    for (int i = 0; i < ngens(); ++i)
        if (pres_.gens[i].name == name) return i;
    return -1;
}

Exps PBWAlgebra::exps(int idx) const {
    Exps e(ngens());
    for (int i = 0; i < ngens(); ++i) {
        e[i] = idx / radix_[i];
        idx %= radix_[i];
    }
    return e;
}

int PBWAlgebra::index(const Exps& e) const {
    if (static_cast<int>(e.size()) != ngens()) return -1;
    int idx = 0;
    for (int i = 0; i < ngens(); ++i) {
        if (e[i] < 0 || e[i] >= pres_.gens[i].trunc) return -1;
        idx += e[i] * radix_[i];
    }
    return idx;
}

int PBWAlgebra::monomial_parity(int idx) const {
    Exps e = exps(idx);
    int s = 0;
    for (int i = 0; i < ngens(); ++i) s += e[i] * pres_.gens[i].parity;
    return s & 1;
}

int PBWAlgebra::monomial_length(int idx) const {
    Exps e = exps(idx);
    return std::accumulate(e.begin(), e.end(), 0);
}

std::string PBWAlgebra::monomial_name(int idx) const {
    Exps e = exps(idx);
    std::string s;
    for (int i = 0; i < ngens(); ++i) {
        if (!e[i]) continue;
        if (!s.empty()) s += "*";
        s += pres_.gens[i].name;
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

void PBWAlgebra::build_table() {
    const int n = ngens();
    table_.assign(n, std::vector<SparseVec>(dim_));
    tainted_.assign(n, std::vector<char>(dim_, 0));
    state_.assign(n, std::vector<char>(dim_, 0));
    for (int g = 0; g < n; ++g)
        for (int m = 0; m < dim_; ++m) compute(g, m);
    state_.clear();
}

SparseVec PBWAlgebra::apply_gen(int g, const SparseVec& v, bool& taint) {
    std::map<int, int> acc;
    for (auto [m, c] : v) {
        const SparseVec& r = compute(g, m);
        taint = taint || tainted_[g][m];
        accumulate(acc, r, c, pres_.p);
    }
    return to_sparse(acc);
}

SparseVec PBWAlgebra::apply_mono(const Exps& t, SparseVec v, bool& taint) {
    for (int g = ngens() - 1; g >= 0; --g)
        for (int r = 0; r < t[g]; ++r) v = apply_gen(g, v, taint);
    return v;
}

const SparseVec& PBWAlgebra::compute(int g, int idx) {
    if (state_[g][idx] == 2) return table_[g][idx];
    if (state_[g][idx] == 1)
        throw std::logic_error("rewrite rules do not terminate at " + pres_.gens[g].name + " * " +
                               monomial_name(idx));
    state_[g][idx] = 1;
    const int n = ngens();
    const int p = pres_.p;
    Exps e = exps(idx);
    int k = 0;
    while (k < n && e[k] == 0) ++k;
    SparseVec result;
    bool taint = false;
    if (g < k) {
        e[g] = 1;
        result = {{index(e), 1}};
    } else if (g == k) {
        if (e[g] + 1 < pres_.gens[g].trunc) {
            e[g] += 1;
            result = {{index(e), 1}};
        } else {
            taint = true;
            e[g] = 0;
            int rest = index(e);
            std::map<int, int> acc;
            for (auto& t : pres_.gens[g].power_rule) {
                SparseVec v = apply_mono(t.exps, {{rest, 1}}, taint);
                accumulate(acc, v, F_.reduce(t.coeff), p);
            }
            result = to_sparse(acc);
        }
    } else {
        e[k] -= 1;
        int rest = index(e);
        auto it = pres_.rewrite.find({g, k});
        Poly commute;
        const Poly* rule = nullptr;
        if (it != pres_.rewrite.end()) {
            rule = &it->second;
        } else {
            Exps t(n, 0);
            t[k] = 1;
            t[g] = 1;
            commute.push_back({t, 1});
            rule = &commute;
        }
        std::map<int, int> acc;
        for (auto& t : *rule) {
            SparseVec v = apply_mono(t.exps, {{rest, 1}}, taint);
            accumulate(acc, v, F_.reduce(t.coeff), p);
        }
        result = to_sparse(acc);
    }
    table_[g][idx] = std::move(result);
    tainted_[g][idx] = taint;
    state_[g][idx] = 2;
    return table_[g][idx];
}

Element PBWAlgebra::zero() const { return Element(shared_from_this(), std::vector<int>(dim_, 0)); }

Element PBWAlgebra::unit() const {
    std::vector<int> c(dim_, 0);
    c[0] = 1;
    return Element(shared_from_this(), std::move(c));
}

Element PBWAlgebra::monomial(int idx) const {
    std::vector<int> c(dim_, 0);
    c[idx] = 1;
    return Element(shared_from_this(), std::move(c));
}

Element PBWAlgebra::generator(int i) const { return monomial(radix_[i]); }

Element PBWAlgebra::from_poly(const Poly& poly) const {
    std::vector<int> c(dim_, 0);
    for (auto& t : poly) {
        int idx = index(t.exps);
        if (idx < 0) throw usage_error("not a normal monomial");
        c[idx] = F_.add(c[idx], F_.reduce(t.coeff));
    }
    return Element(shared_from_this(), std::move(c));
}

std::vector<int> PBWAlgebra::apply_generator(int g, const std::vector<int>& v) const {
    std::vector<int> out(dim_, 0);
    const int p = pres_.p;
    for (int m = 0; m < dim_; ++m) {
        int c = v[m];
        if (!c) continue;
        if (strict_ && tainted_[g][m])
            throw std::runtime_error("product leaves the lifted range: " + pres_.gens[g].name + " * " +
                                     monomial_name(m));
        for (auto [i, x] : table_[g][m]) out[i] = (out[i] + c * x) % p;
    }
    return out;
}

Element PBWAlgebra::straighten(const std::vector<int>& word) const {
    std::vector<int> v(dim_, 0);
    v[0] = 1;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it < 0 || *it >= ngens()) throw usage_error("generator index out of range");
        v = apply_generator(*it, v);
    }
    return Element(shared_from_this(), std::move(v));
}

std::vector<int> PBWAlgebra::horner(const std::vector<int>& a, const std::vector<int>& b) const {
    const int n = ngens();
    const int p = pres_.p;
    // value of the subtree of a rooted at (level, base) applied to b
    auto rec = [&](auto&& self, int level, int base) -> std::vector<int> {
        if (level == n) {
            std::vector<int> out(dim_);
            int c = a[base];
            for (int i = 0; i < dim_; ++i) out[i] = b[i] * c % p;
            return out;
        }
        const int span = level == 0 ? dim_ : radix_[level - 1];
        bool any = false;
        for (int i = base; i < base + span; ++i)
            if (a[i]) { any = true; break; }
        if (!any) return std::vector<int>(dim_, 0);
        const int N = pres_.gens[level].trunc;
        std::vector<int> acc;
        bool have = false;
        for (int e = N - 1; e >= 0; --e) {
            if (have) acc = apply_generator(level, acc);
            int sub = base + e * radix_[level];
            bool nz = false;
            for (int i = sub; i < sub + radix_[level]; ++i)
                if (a[i]) { nz = true; break; }
            if (nz) {
                std::vector<int> s = self(self, level + 1, sub);
                if (!have) {
                    acc = std::move(s);
                    have = true;
                } else {
                    for (int i = 0; i < dim_; ++i) acc[i] = (acc[i] + s[i]) % p;
                }
            }
        }
        return acc;
    };
    return rec(rec, 0, 0);
}

Element PBWAlgebra::multiply(const Element& a, const Element& b) const {
    if (a.algebra().get() != this || b.algebra().get() != this) throw usage_error("elements from another algebra");
    return Element(shared_from_this(), horner(a.coeffs(), b.coeffs()));
}

Matrix PBWAlgebra::left_matrix(int g) const {
    Matrix L(dim_, dim_, pres_.p);
    for (int m = 0; m < dim_; ++m)
        for (auto [i, x] : table_[g][m]) L.set(i, m, x);
    return L;
}

Matrix PBWAlgebra::left_matrix(const Element& a) const {
    Matrix L(dim_, dim_, pres_.p);
    std::vector<int> e(dim_, 0);
    for (int m = 0; m < dim_; ++m) {
        std::fill(e.begin(), e.end(), 0);
        e[m] = 1;
        L.set_col(m, horner(a.coeffs(), e));
    }
    return L;
}

bool PBWAlgebra::is_toral(int g) const {
    const auto& gs = pres_.gens[g];
    if (gs.parity != 0 || gs.power_rule.size() != 1) return false;
    const Term& t = gs.power_rule[0];
    if (F_.reduce(t.coeff) != 1) return false;
    if (gs.trunc == pres_.p && t.exps == unit_exps(ngens(), g)) return true;
    if (gs.trunc == 2 && std::all_of(t.exps.begin(), t.exps.end(), [](int x) { return x == 0; })) return true;
    return false;
}

std::string PBWAlgebra::to_json() const {
    using nlohmann::json;
    json j;
    j["version"] = 1;
    j["name"] = pres_.name;
    j["p"] = pres_.p;
    auto poly = [&](const Poly& P) {
        json arr = json::array();
        for (auto& t : P) arr.push_back(json::array({t.exps, F_.reduce(t.coeff)}));
        return arr;
    };
    j["gens"] = json::array();
    for (auto& g : pres_.gens)
        j["gens"].push_back({{"name", g.name}, {"parity", g.parity}, {"trunc", g.trunc}, {"power", poly(g.power_rule)}});
    j["rewrite"] = json::object();
    for (auto& [key, rule] : pres_.rewrite)
        j["rewrite"][std::to_string(key.first) + "," + std::to_string(key.second)] = poly(rule);
    return j.dump();
}

AlgebraPtr make_algebra(Presentation pres) { return std::make_shared<const PBWAlgebra>(std::move(pres)); }

AlgebraPtr algebra_from_json(const std::string& text) {
    using nlohmann::json;
    json j = json::parse(text);
    if (j.at("version").get<int>() != 1) throw usage_error("unsupported algebra version");
    Presentation pres;
    pres.name = j.value("name", std::string("custom"));
    pres.p = j.at("p").get<int>();
    auto poly = [](const json& arr) {
        Poly P;
        for (auto& t : arr) P.push_back({t.at(0).get<Exps>(), t.at(1).get<long long>()});
        return P;
    };
    for (auto& g : j.at("gens"))
        pres.gens.push_back({g.at("name").get<std::string>(), g.at("parity").get<int>(), g.at("trunc").get<int>(),
                             g.contains("power") ? poly(g["power"]) : Poly{}});
    for (auto& [key, val] : j.at("rewrite").items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos) throw usage_error("bad rewrite key " + key);
        pres.rewrite[{std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))}] = poly(val);
    }
    return make_algebra(std::move(pres));
}

// ---------------------------------------------------------------- presets

namespace {

Presentation sl2_presentation(int p) {
    // order e < f < h
    Presentation P;
    P.name = "sl2";
    P.p = p;
    P.gens = {{"e", 0, p, {}}, {"f", 0, p, {}}, {"h", 0, p, {{{0, 0, 1}, 1}}}};
    P.rewrite[{1, 0}] = {{{1, 1, 0}, 1}, {{0, 0, 1}, -1}};  // fe = ef - h
    P.rewrite[{2, 0}] = {{{1, 0, 1}, 1}, {{1, 0, 0}, 2}};   // he = eh + 2e
    P.rewrite[{2, 1}] = {{{0, 1, 1}, 1}, {{0, 1, 0}, -2}};  // hf = fh - 2f
    return P;
}

Presentation osp_presentation(int p) {
    // order E < F < h, folded basis E^{<2p} F^{<2p} h^{<p}
    Presentation P;
    P.name = "osp12";
    P.p = p;
    P.gens = {{"E", 1, 2 * p, {}}, {"F", 1, 2 * p, {}}, {"h", 0, p, {{{0, 0, 1}, 1}}}};
    P.rewrite[{1, 0}] = {{{0, 0, 1}, 1}, {{1, 1, 0}, -1}};  // FE = h - EF
    P.rewrite[{2, 0}] = {{{1, 0, 1}, 1}, {{1, 0, 0}, 1}};   // hE = Eh + E
    P.rewrite[{2, 1}] = {{{0, 1, 1}, 1}, {{0, 1, 0}, -1}};  // hF = Fh - F
    return P;
}

}  // namespace

Presentation smash_presentation(const Presentation& base) {
    Presentation P = base;
    P.name = base.name + "_smash";
    const int n = static_cast<int>(base.gens.size());
    for (auto& g : P.gens)
        for (auto& t : g.power_rule) t.exps.push_back(0);
    std::map<std::pair<int, int>, Poly> rw;
    for (auto& [key, rule] : P.rewrite) {
        Poly r = rule;
        for (auto& t : r) t.exps.push_back(0);
        rw[key] = r;
    }
    Exps one(n + 1, 0);
    P.gens.push_back({"g", 0, 2, {{one, 1}}});
    for (int i = 0; i < n; ++i) {
        Exps t(n + 1, 0);
        t[i] = 1;
        t[n] = 1;
        rw[{n, i}] = {{t, base.gens[i].parity ? -1 : 1}};
    }
    P.rewrite = std::move(rw);
    return P;
}

std::vector<std::string> preset_names() { return {"sl2", "osp12", "sl2_smash", "osp12_smash"}; }

Presentation preset_presentation(const std::string& name, int p) {
    Field F(p);  // validates p
    if (name == "sl2") return sl2_presentation(p);
    if (name == "osp12") return osp_presentation(p);
    if (name == "sl2_smash") return smash_presentation(sl2_presentation(p));
    if (name == "osp12_smash") return smash_presentation(osp_presentation(p));
    throw usage_error("unsupported preset: " + name);
}

AlgebraPtr build_preset(const std::string& name, int p) {
    static std::mutex mu;
    static std::map<std::pair<std::string, int>, AlgebraPtr> cache;
    Presentation pres = preset_presentation(name, p);
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{name, p}];
    if (!slot) slot = make_algebra(std::move(pres));
    return slot;
}

int qci_q(const QciSpec& spec, int i, int j, const Field& F) {
    if (i == j) return 1;
    if (i < j) return F.reduce(spec.q.at(i).at(j));
    return F.inv(F.reduce(spec.q.at(j).at(i)));
}

AlgebraPtr build_qci(const QciSpec& spec, int p) {
    Field F(p);
    const int n = static_cast<int>(spec.N.size());
    if (n == 0) throw usage_error("QCI needs at least one generator");
    Presentation P;
    P.name = "qci(";
    for (int i = 0; i < n; ++i) P.name += (i ? "," : "") + std::to_string(spec.N[i]);
    P.p = p;
    std::string qs;
    for (int i = 0; i < n; ++i) {
        if (spec.N[i] < 2) throw usage_error("QCI truncations must be at least 2");
        int par = spec.parity.empty() ? 0 : spec.parity.at(i);
        P.gens.push_back({"x" + std::to_string(i + 1), par, spec.N[i], {}});
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int q = F.reduce(spec.q.at(i).at(j));
            if (q == 0) throw usage_error("QCI parameters must be nonzero");
            qs += (qs.empty() ? ";" : ",") + std::to_string(q);
            Exps t(n, 0);
            t[i] = 1;
            t[j] = 1;
            // x_j x_i = q_ij^{-1} x_i x_j
            P.rewrite[{j, i}] = {{t, F.inv(q)}};
        }
    P.name += qs + ")";
    return make_algebra(std::move(P));
}

AlgebraPtr associated_graded(const AlgebraPtr& alg, const std::vector<int>& deg) {
    const Presentation& src = alg->presentation();
    const int n = alg->ngens();
    if (static_cast<int>(deg.size()) != n) throw usage_error("degree vector length mismatch");
    for (int d : deg)
        if (d < 0) throw usage_error("degrees must be non-negative");
    auto degree = [&](const Exps& e) {
        int s = 0;
        for (int i = 0; i < n; ++i) s += e[i] * deg[i];
        return s;
    };
    auto top = [&](const Poly& rule, int d, const std::string& what) {
        Poly out;
        for (auto& t : rule) {
            int td = degree(t.exps);
            if (td > d) throw usage_error("relation " + what + " is not filtered by the given degrees");
            if (td == d && alg->field().reduce(t.coeff)) out.push_back(t);
        }
        return out;
    };
    Presentation P = src;
    P.name = "gr(" + src.name + ")";
    for (int i = 0; i < n; ++i)
        P.gens[i].power_rule =
            top(src.gens[i].power_rule, src.gens[i].trunc * deg[i], src.gens[i].name + "^" + std::to_string(src.gens[i].trunc));
    for (auto& [key, rule] : P.rewrite)
        rule = top(src.rewrite.at(key), deg[key.first] + deg[key.second],
                   src.gens[key.first].name + src.gens[key.second].name);
    return make_algebra(std::move(P));
}

AlgebraPtr lift_truncations(const AlgebraPtr& alg, const std::vector<int>& new_trunc) {
    const int n = alg->ngens();
    if (static_cast<int>(new_trunc.size()) != n) throw usage_error("truncation vector length mismatch");
    Presentation P = alg->presentation();
    P.name = "lift(" + P.name + ")";
    for (int i = 0; i < n; ++i) {
        if (new_trunc[i] < P.gens[i].trunc) throw usage_error("lifted truncation must not shrink");
        P.gens[i].trunc = new_trunc[i];
        P.gens[i].power_rule.clear();
    }
    auto out = std::make_shared<PBWAlgebra>(std::move(P));
    out->set_strict(true);
    return out;
}

}  // namespace sa

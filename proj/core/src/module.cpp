#include "superalg/module.hpp"

#include <deque>
#include <sstream>

#include "json.hpp"

namespace sa {

namespace {

void same_algebra(const Module& M, const Module& N) {
    if (M.alg->ref() != N.alg->ref()) throw usage_error("modules over different algebras");
}

std::string poly_name(const PBWAlgebra& A, const Poly& P) {
    std::ostringstream os;
    bool first = true;
    for (auto& t : P) {
        long long c = A.field().reduce(t.coeff);
        if (!c) continue;
        os << (first ? "" : " + ");
        first = false;
        int idx = A.index(t.exps);
        std::string m = A.monomial_name(idx);
        if (c != 1 || m == "1") os << c << (m == "1" ? "" : "*");
        if (m != "1") os << m;
    }
    if (first) os << "0";
    return os.str();
}

Matrix mono_matrix(const Module& M, const Exps& e) {
    Matrix R = Matrix::identity(M.dim, M.p());
    for (int g = static_cast<int>(e.size()) - 1; g >= 0; --g)
        for (int k = 0; k < e[g]; ++k) R = M.act[g] * R;
    return R;
}

Matrix poly_matrix(const Module& M, const Poly& P) {
    Matrix R(M.dim, M.dim, M.p());
    for (auto& t : P) R.axpy(t.coeff, mono_matrix(M, t.exps));
    return R;
}


bool is_osp(const AlgebraPtr& A) { return A->name() == "osp12" || A->name() == "osp12_smash"; }
bool is_smash(const AlgebraPtr& A) { return A->name().size() > 6 && A->name().ends_with("_smash"); }

}  // namespace

const Matrix& Module::action(const std::string& gen) const {
    int g = alg->gen_index(gen);
    if (g < 0) throw usage_error("no generator named " + gen);
    return act[g];
}

std::vector<int> assign_parity(const AlgebraPtr& alg, const std::vector<Matrix>& act) {
    const int n = act.empty() ? 0 : act[0].rows();
    std::vector<int> par(n, -1);
    for (int s = 0; s < n; ++s) {
        if (par[s] >= 0) continue;
        par[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int g = 0; g < alg->ngens(); ++g) {
                int pg = alg->gen(g).parity;
                const Matrix& X = act[g];
                for (int w = 0; w < n; ++w) {
                    // X links v and w in either direction
                    if (!X.at(w, v) && !X.at(v, w)) continue;
                    int want = par[v] ^ pg;
                    if (par[w] < 0) {
                        par[w] = want;
                        q.push_back(w);
                    } else if (par[w] != want) {
                        throw std::runtime_error("no consistent parity assignment");
                    }
                }
            }
        }
    }
    return par;
}

Module make_module_raw(AlgebraPtr alg, std::vector<Matrix> act, std::vector<int> parity, std::string label) {
    if (static_cast<int>(act.size()) != alg->ngens()) throw usage_error("need one matrix per generator");
    int d = act.empty() ? 0 : act[0].rows();
    for (auto& X : act)
        if (X.rows() != d || X.cols() != d || X.p() != alg->p()) throw usage_error("action matrices have wrong shape");
    if (parity.empty() && d > 0) parity = assign_parity(alg, act);
    if (static_cast<int>(parity.size()) != d) throw usage_error("parity vector has wrong length");
    Module M;
    M.alg = std::move(alg);
    M.dim = d;
    M.act = std::move(act);
    M.parity = std::move(parity);
    M.label = std::move(label);
    return M;
}

Module zero_module(const AlgebraPtr& alg) {
    Module M;
    M.alg = alg;
    M.dim = 0;
    M.act.assign(alg->ngens(), Matrix(0, 0, alg->p()));
    M.label = "0";
    return M;
}

Module trivial_module(const AlgebraPtr& alg) {
    std::vector<Matrix> act;
    for (int g = 0; g < alg->ngens(); ++g) {
        const Poly& rule = alg->gen(g).power_rule;
        // group-likes (gen^N = 1) act by 1, everything else by 0
        bool unit = rule.size() == 1 && rule[0].coeff % alg->p() == 1;
        if (unit)
            for (int e : rule[0].exps) unit = unit && e == 0;
        act.push_back(Matrix(1, 1, alg->p()));
        if (unit) act.back().set(0, 0, 1);
    }
    return make_module_raw(alg, std::move(act), {0}, "trivial");
}

RelationReport check_relations(const Module& M) {
    RelationReport rep;
    const PBWAlgebra& A = *M.alg;
    const int n = A.ngens();
    auto fail = [&](const std::string& rel, const Matrix& D) {
        for (int c = 0; c < D.cols(); ++c) {
            std::vector<int> col = D.col(c);
            for (int x : col)
                if (x) {
                    rep.pass = false;
                    rep.relation = rel;
                    rep.column = c;
                    rep.residual = col;
                    return true;
                }
        }
        return false;
    };
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            auto it = A.presentation().rewrite.find({j, i});
            Poly rule;
            if (it != A.presentation().rewrite.end()) {
                rule = it->second;
            } else {
                Exps t(n, 0);
                t[i] = 1;
                t[j] = 1;
                rule.push_back({t, 1});
            }
            Matrix D = M.act[j] * M.act[i] - poly_matrix(M, rule);
            std::string rel = A.gen(j).name + "*" + A.gen(i).name + " = " + poly_name(A, rule);
            if (fail(rel, D)) return rep;
        }
    for (int g = 0; g < n; ++g) {
        Exps e(n, 0);
        e[g] = A.gen(g).trunc;
        Matrix D = mono_matrix(M, e) - poly_matrix(M, A.gen(g).power_rule);
        std::string rel = A.gen(g).name + "^" + std::to_string(A.gen(g).trunc) + " = " + poly_name(A, A.gen(g).power_rule);
        if (fail(rel, D)) return rep;
    }
    for (int g = 0; g < n; ++g) {
        int pg = A.gen(g).parity;
        for (int r = 0; r < M.dim; ++r)
            for (int c = 0; c < M.dim; ++c)
                if (M.act[g].at(r, c) && M.parity[r] != (M.parity[c] ^ pg)) {
                    rep.pass = false;
                    rep.relation = "parity of " + A.gen(g).name;
                    rep.column = c;
                    rep.residual = M.act[g].col(c);
                    return rep;
                }
    }
    return rep;
}

Matrix act_monomial(const Module& M, int idx) { return mono_matrix(M, M.alg->exps(idx)); }

Matrix apply_element(const Module& M, const Element& a, const Matrix& V) {
    const PBWAlgebra& A = *M.alg;
    const int n = A.ngens();
    const auto& c = a.coeffs();
    std::vector<int> radix(n, 1);
    for (int i = n - 2; i >= 0; --i) radix[i] = radix[i + 1] * A.gen(i + 1).trunc;
    auto rec = [&](auto&& self, int level, int base) -> Matrix {
        if (level == n) return V.scaled(c[base]);
        const int N = A.gen(level).trunc;
        Matrix acc(V.rows(), V.cols(), V.p());
        bool have = false;
        for (int e = N - 1; e >= 0; --e) {
            if (have) acc = M.act[level] * acc;
            int sub = base + e * radix[level];
            bool nz = false;
            for (int i = sub; i < sub + radix[level]; ++i)
                if (c[i]) { nz = true; break; }
            if (nz) {
                acc += self(self, level + 1, sub);
                have = true;
            }
        }
        return acc;
    };
    return rec(rec, 0, 0);
}

Matrix act_element(const Module& M, const Element& a) { return apply_element(M, a, Matrix::identity(M.dim, M.p())); }

Module direct_sum(const Module& M, const Module& N) {
    same_algebra(M, N);
    std::vector<Matrix> act;
    for (int g = 0; g < M.alg->ngens(); ++g) act.push_back(block_diag(M.act[g], N.act[g]));
    std::vector<int> par = M.parity;
    par.insert(par.end(), N.parity.begin(), N.parity.end());
    return make_module_raw(M.alg, std::move(act), std::move(par), M.label + " + " + N.label);
}

Module direct_sum(const std::vector<Module>& ms) {
    if (ms.empty()) throw usage_error("empty direct sum");
    Module S = ms[0];
    for (size_t i = 1; i < ms.size(); ++i) S = direct_sum(S, ms[i]);
    return S;
}

Module parity_change(const Module& M) {
    Module N = M;
    for (auto& b : N.parity) b ^= 1;
    int g = M.alg->gen_index("g");
    if (g >= 0 && is_smash(M.alg)) N.act[g] = M.act[g].scaled(-1);
    N.label = M.label.rfind("Pi(", 0) == 0 && M.label.back() == ')' ? M.label.substr(3, M.label.size() - 4)
                                                                     : "Pi(" + M.label + ")";
    return N;
}

Module dual(const Module& M) {
    const PBWAlgebra& A = *M.alg;
    const std::string& nm = A.name();
    if (!(nm == "sl2" || nm == "osp12" || nm == "sl2_smash" || nm == "osp12_smash"))
        throw usage_error("dual is defined for the Lie presets only");
    int gi = A.gen_index("g");
    Matrix D = gi >= 0 ? M.act[gi].transpose() : Matrix::diagonal({}, M.p());
    if (gi < 0) {
        std::vector<long long> d(M.dim);
        for (int i = 0; i < M.dim; ++i) d[i] = M.parity[i] ? -1 : 1;
        D = Matrix::diagonal(d, M.p());
    }
    std::vector<Matrix> act;
    for (int g = 0; g < A.ngens(); ++g) {
        Matrix Xt = M.act[g].transpose();
        if (g == gi) act.push_back(Xt);
        else if (A.gen(g).parity) act.push_back(Xt * D);
        else act.push_back(Xt.scaled(-1));
    }
    return make_module_raw(M.alg, std::move(act), M.parity, "dual(" + M.label + ")");
}

Module restrict_to_sl2(const Module& M) {
    if (!is_osp(M.alg)) throw usage_error("restriction needs a module over the osp algebra");
    bool smash = is_smash(M.alg);
    AlgebraPtr S = build_preset(smash ? "sl2_smash" : "sl2", M.p());
    const Matrix& E = M.action("E");
    const Matrix& F = M.action("F");
    std::vector<Matrix> act{E * E, (F * F).scaled(-1), M.action("h")};
    if (smash) act.push_back(M.action("g"));
    return make_module_raw(S, std::move(act), M.parity, "res(" + M.label + ")");
}

Module to_smash_module(const Module& M) {
    const std::string& nm = M.alg->name();
    if (nm != "sl2" && nm != "osp12") throw usage_error("to_smash_module needs a module over sl2 or osp12");
    AlgebraPtr S = build_preset(nm + "_smash", M.p());
    std::vector<Matrix> act = M.act;
    std::vector<long long> d(M.dim);
    for (int i = 0; i < M.dim; ++i) d[i] = M.parity[i] ? -1 : 1;
    act.push_back(Matrix::diagonal(d, M.p()));
    return make_module_raw(S, std::move(act), M.parity, M.label);
}

Module forget_smash(const Module& M) {
    if (!is_smash(M.alg)) throw usage_error("not a smash module");
    std::string base = M.alg->name().substr(0, M.alg->name().size() - 6);
    AlgebraPtr B = build_preset(base, M.p());
    std::vector<Matrix> act(M.act.begin(), M.act.end() - 1);
    return make_module_raw(B, std::move(act), M.parity, M.label);
}

Module regular_module(const AlgebraPtr& alg) {
    std::vector<Matrix> act;
    for (int g = 0; g < alg->ngens(); ++g) act.push_back(alg->left_matrix(g));
    std::vector<int> par(alg->dim());
    for (int m = 0; m < alg->dim(); ++m) par[m] = alg->monomial_parity(m);
    return make_module_raw(alg, std::move(act), std::move(par), "regular(" + alg->name() + ")");
}

namespace {

// Parity of a basis if every column is homogeneous, else empty.
std::vector<int> homogeneous_parity(const Module& M, const Matrix& B) {
    std::vector<int> par(B.cols());
    for (int c = 0; c < B.cols(); ++c) {
        int seen = -1;
        for (int r = 0; r < B.rows(); ++r) {
            if (!B.at(r, c)) continue;
            if (seen < 0) seen = M.parity[r];
            else if (seen != M.parity[r]) return {};
        }
        par[c] = seen < 0 ? 0 : seen;
    }
    return par;
}

// Rebase a graded subspace onto homogeneous vectors; unchanged if not graded.
Matrix graded_basis(const Module& M, const Matrix& B) {
    const int p = M.p();
    std::vector<int> ev, od;
    for (int r = 0; r < M.dim; ++r) (M.parity[r] ? od : ev).push_back(r);
    Matrix Be(M.dim, B.cols(), p), Bo(M.dim, B.cols(), p);
    for (int c = 0; c < B.cols(); ++c)
        for (int r = 0; r < M.dim; ++r) (M.parity[r] ? Bo : Be).set(r, c, B.at(r, c));
    Matrix cand = hstack({column_basis(Be), column_basis(Bo)}, M.dim, p);
    if (cand.cols() != B.cols()) return B;
    if (rank(hstack({B, cand}, M.dim, p)) != B.cols()) return B;
    return cand;
}

std::vector<int> parity_for(const Module& M, const Matrix& B, const std::vector<Matrix>& act) {
    std::vector<int> par = homogeneous_parity(M, B);
    if (!par.empty() || B.cols() == 0) return par;
    try {
        return assign_parity(M.alg, act);
    } catch (const std::runtime_error&) {
        return std::vector<int>(B.cols(), 0);
    }
}

}  // namespace

Module submodule(const Module& M, const Matrix& B0, Matrix* used) {
    Matrix B = graded_basis(M, B0);
    if (used) *used = B;
    std::vector<Matrix> act;
    for (int g = 0; g < M.alg->ngens(); ++g) {
        auto X = solve_one(B, M.act[g] * B);
        if (!X) throw std::runtime_error("subspace is not invariant under " + M.alg->gen(g).name);
        act.push_back(std::move(*X));
    }
    std::vector<int> par = parity_for(M, B, act);
    return make_module_raw(M.alg, std::move(act), std::move(par), "sub(" + M.label + ")");
}

Module quotient(const Module& M, const Matrix& S0) {
    Matrix S = column_basis(S0);
    const int k = S.cols(), n = M.dim, p = M.p();
    // complete S by unit vectors, preferring a homogeneous choice
    Span sp(n, p);
    for (int c = 0; c < k; ++c) sp.add(S.col(c));
    std::vector<int> extra;
    for (int r = 0; r < n; ++r) {
        std::vector<int> e(n, 0);
        e[r] = 1;
        if (sp.add(e)) extra.push_back(r);
    }
    Matrix C(n, static_cast<int>(extra.size()), p);
    for (size_t j = 0; j < extra.size(); ++j) C.set(extra[j], static_cast<int>(j), 1);
    Matrix T = hstack({S, C}, n, p);
    auto Ti = inverse(T);
    if (!Ti) throw std::logic_error("quotient basis completion failed");
    std::vector<Matrix> act;
    const int q = n - k;
    for (int g = 0; g < M.alg->ngens(); ++g) {
        Matrix X = *Ti * M.act[g] * T;
        if (!X.block(k, 0, q, k).is_zero()) throw std::runtime_error("quotient by a non-invariant subspace");
        act.push_back(X.block(k, k, q, q));
    }
    std::vector<int> par(q);
    for (int j = 0; j < q; ++j) par[j] = M.parity[extra[j]];
    // unit-vector parities are only right when the subspace is graded
    for (int g = 0; g < M.alg->ngens(); ++g)
        for (int r = 0; r < q; ++r)
            for (int c = 0; c < q; ++c)
                if (act[g].at(r, c) && par[r] != (par[c] ^ M.alg->gen(g).parity)) {
                    try {
                        par = assign_parity(M.alg, act);
                    } catch (const std::runtime_error&) {
                        par.assign(q, 0);
                    }
                    return make_module_raw(M.alg, std::move(act), std::move(par), "quot(" + M.label + ")");
                }
    return make_module_raw(M.alg, std::move(act), std::move(par), "quot(" + M.label + ")");
}

Module conjugate(const Module& M, const Matrix& T) {
    auto Ti = inverse(T);
    if (!Ti) throw usage_error("change of basis must be invertible");
    std::vector<Matrix> act;
    for (auto& X : M.act) act.push_back(*Ti * X * T);
    std::vector<int> par = parity_for(M, T, act);
    return make_module_raw(M.alg, std::move(act), std::move(par), M.label);
}

Matrix spin(const Module& M, const Matrix& V) {
    Span sp(M.dim, M.p());
    std::deque<std::vector<int>> q;
    for (int c = 0; c < V.cols(); ++c) {
        auto v = V.col(c);
        if (sp.add(v)) q.push_back(v);
    }
    while (!q.empty()) {
        auto v = q.front();
        q.pop_front();
        Matrix col = Matrix::column(v, M.p());
        for (auto& X : M.act) {
            auto w = (X * col).col(0);
            if (sp.add(w)) q.push_back(w);
        }
    }
    return sp.basis_matrix();
}

std::string module_to_json(const Module& M) {
    using nlohmann::json;
    json j;
    j["version"] = 1;
    j["algebra_ref"] = M.alg->ref();
    j["dim"] = M.dim;
    j["label"] = M.label;
    j["parity"] = M.parity;
    j["action"] = json::object();
    for (int g = 0; g < M.alg->ngens(); ++g)
        j["action"][M.alg->gen(g).name] = {{"rows", M.dim}, {"cols", M.dim}, {"entries", M.act[g].data()}};
    return j.dump();
}

Module module_from_json(const std::string& text, AlgebraPtr alg) {
    using nlohmann::json;
    json j = json::parse(text);
    if (j.at("version").get<int>() != 1) throw usage_error("unsupported module version");
    std::string ref = j.at("algebra_ref").get<std::string>();
    if (!alg) {
        auto at = ref.find("@p=");
        if (at == std::string::npos) throw usage_error("cannot resolve algebra " + ref);
        alg = build_preset(ref.substr(0, at), std::stoi(ref.substr(at + 3)));
    } else if (alg->ref() != ref) {
        throw usage_error("module belongs to " + ref);
    }
    int d = j.at("dim").get<int>();
    std::vector<Matrix> act;
    for (int g = 0; g < alg->ngens(); ++g) {
        const json& m = j.at("action").at(alg->gen(g).name);
        auto entries = m.at("entries").get<std::vector<int>>();
        if (static_cast<int>(entries.size()) != d * d) throw usage_error("matrix entry count mismatch");
        Matrix X(d, d, alg->p());
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) X.set(r, c, entries[static_cast<size_t>(r) * d + c]);
        act.push_back(std::move(X));
    }
    return make_module_raw(alg, std::move(act), j.at("parity").get<std::vector<int>>(), j.value("label", std::string()));
}

}  // namespace sa

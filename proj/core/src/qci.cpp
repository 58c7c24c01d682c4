#include "superalg/qci.hpp"

#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sa {

int koszul_sigma(int N, int a) { return (a % 2) ? 1 : N - 1; }

int koszul_tau(int N, int a) { return (a / 2) * N + (a % 2); }

namespace {

// All tuples of length n summing to total, increasing lexicographic order.
void tuples(int n, int total, Exps& cur, int pos, std::vector<Exps>& out) {
    if (pos == n - 1) {
        cur[pos] = total;
        out.push_back(cur);
        return;
    }
    for (int v = 0; v <= total; ++v) {
        cur[pos] = v;
        tuples(n, total - v, cur, pos + 1, out);
    }
}

int unit_index(const AlgebraPtr& alg) { return alg->index(Exps(alg->ngens(), 0)); }

Element power_of(const AlgebraPtr& alg, int i, int k) {
    Exps e(alg->ngens(), 0);
    e[i] = k;
    return alg->monomial(alg->index(e));
}

// Monomial products, computed on demand.
class Products {
public:
    explicit Products(AlgebraPtr alg) : alg_(std::move(alg)), n_(alg_->dim()), cache_(size_t(n_) * n_), done_(size_t(n_) * n_, 0) {}
    const SparseVec& operator()(int a, int b) {
        size_t k = size_t(a) * n_ + b;
        if (!done_[k]) {
            cache_[k] = (alg_->monomial(a) * alg_->monomial(b)).terms();
            done_[k] = 1;
        }
        return cache_[k];
    }
    // monomial a times element e
    SparseVec times(int a, const Element& e) {
        std::map<int, long long> acc;
        for (auto [m, c] : e.terms())
            for (auto [r, x] : (*this)(a, m)) acc[r] += static_cast<long long>(c) * x;
        SparseVec out;
        for (auto [r, x] : acc)
            if (x % alg_->p()) out.push_back({r, static_cast<int>(x % alg_->p())});
        return out;
    }

private:
    AlgebraPtr alg_;
    int n_;
    std::vector<SparseVec> cache_;
    std::vector<char> done_;
};

// Columns of the F_p-linear map underlying an S-linear free map.
std::vector<SparseVec> flatten(const FreeMap& f, const AlgebraPtr& alg, Products& prod) {
    const int n = alg->dim();
    std::vector<SparseVec> cols(size_t(f.src) * n);
    for (int t = 0; t < f.src; ++t)
        for (int m = 0; m < n; ++m) {
            SparseVec& col = cols[size_t(t) * n + m];
            for (auto& [u, e] : f.img[t])
                for (auto [r, x] : prod.times(m, e)) col.push_back({u * n + r, x});
        }
    return cols;
}

FreeMap after(const FreeMap& A, const FreeMap& B) {
    FreeMap C;
    C.src = B.src;
    C.dst = A.dst;
    C.img.resize(B.src);
    for (int t = 0; t < B.src; ++t) {
        std::map<int, Element> acc;
        for (auto& [u, e] : B.img[t])
            for (auto& [v, e2] : A.img[u]) {
                Element x = e * e2;
                auto it = acc.find(v);
                if (it == acc.end()) acc.emplace(v, x);
                else it->second = it->second + x;
            }
        for (auto& [v, x] : acc)
            if (!x.is_zero()) C.img[t].push_back({v, x});
    }
    return C;
}

std::map<int, Element> as_map(const FreeMap& f, int t) {
    std::map<int, Element> m;
    for (auto& [u, e] : f.img[t]) {
        auto it = m.find(u);
        if (it == m.end()) m.emplace(u, e);
        else it->second = it->second + e;
    }
    for (auto it = m.begin(); it != m.end();)
        it = it->second.is_zero() ? m.erase(it) : std::next(it);
    return m;
}

// -1 if equal, otherwise the first source generator where A and s*B differ.
int differs(const FreeMap& A, const FreeMap& B, int s) {
    for (int t = 0; t < A.src; ++t) {
        auto a = as_map(A, t), b = as_map(B, t);
        for (auto& [u, e] : b) e = e.scaled(s);
        for (auto it = b.begin(); it != b.end();)
            it = it->second.is_zero() ? b.erase(it) : std::next(it);
        if (a.size() != b.size()) return t;
        for (auto& [u, e] : a) {
            auto it = b.find(u);
            if (it == b.end() || it->second != e) return t;
        }
    }
    return -1;
}

std::string tuple_name(const Exps& a) {
    std::string s = "Psi(";
    for (size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s + ")";
}

// Rank of a map that preserves a grading of source and target bases.
int graded_rank(const std::vector<SparseVec>& cols, const std::vector<Exps>& src_key, int p) {
    std::map<Exps, std::vector<int>> groups;
    for (size_t c = 0; c < cols.size(); ++c) groups[src_key[c]].push_back(static_cast<int>(c));
    int total = 0;
    for (auto& [key, members] : groups) {
        std::map<int, int> rows;
        for (int c : members)
            for (auto [r, x] : cols[c]) rows.emplace(r, 0);
        if (rows.empty()) continue;
        int k = 0;
        for (auto& [r, pos] : rows) pos = k++;
        Matrix M(k, static_cast<int>(members.size()), p);
        for (size_t j = 0; j < members.size(); ++j)
            for (auto [r, x] : cols[members[j]]) M.add_to(rows[r], static_cast<int>(j), x);
        total += rank(M);
    }
    return total;
}

}  // namespace

int KoszulResolution::index(const Exps& a) const {
    int n = 0;
    for (int x : a) n += x;
    if (n < 0 || n > D) return -1;
    const auto& g = gens[n];
    auto it = std::lower_bound(g.begin(), g.end(), a);
    return (it != g.end() && *it == a) ? static_cast<int>(it - g.begin()) : -1;
}

Exps KoszulResolution::weight(int n, int t, int mono) const {
    Exps w = alg->exps(mono);
    const Exps& a = gens[n][t];
    for (size_t l = 0; l < a.size(); ++l) w[l] += koszul_tau(spec.N[l], a[l]);
    return w;
}

KoszulResolution build_koszul(const QciSpec& spec, int p, int D) {
    if (D < 1) throw usage_error("Koszul resolution needs D >= 1");
    KoszulResolution K;
    K.spec = spec;
    K.alg = build_qci(spec, p);
    K.D = D;
    const int N = static_cast<int>(spec.N.size());
    const Field& F = K.alg->field();
    K.gens.resize(D + 1);
    for (int n = 0; n <= D; ++n) {
        Exps cur(N, 0);
        tuples(N, n, cur, 0, K.gens[n]);
    }
    K.d.resize(D + 1);
    for (int n = 1; n <= D; ++n) {
        FreeMap& d = K.d[n];
        d.src = K.rank(n);
        d.dst = K.rank(n - 1);
        d.img.resize(d.src);
        for (int t = 0; t < d.src; ++t) {
            const Exps& a = K.gens[n][t];
            for (int i = 0; i < N; ++i) {
                if (a[i] == 0) continue;
                const int s = koszul_sigma(spec.N[i], a[i]);
                int c = 1;
                for (int l = 0; l < i; ++l) {
                    if (a[l] % 2) c = F.neg(c);
                    c = F.mul(c, F.pow(qci_q(spec, l, i, F), static_cast<long long>(s) * koszul_tau(spec.N[l], a[l])));
                }
                Exps b = a;
                b[i] -= 1;
                d.img[t].push_back({K.index(b), power_of(K.alg, i, s).scaled(c)});
            }
        }
    }
    for (int n = 2; n <= D; ++n) {
        FreeMap dd = after(K.d[n - 1], K.d[n]);
        for (int t = 0; t < dd.src; ++t)
            if (!dd.img[t].empty())
                throw std::logic_error("d^2 != 0 at " + tuple_name(K.gens[n][t]));
    }
    return K;
}

std::vector<QciSpec> seeded_qci_configs(int p, int count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<QciSpec> out;
    for (int c = 0; c < count; ++c) {
        const int k = 1 + c % 3;
        QciSpec s;
        s.q.assign(k, std::vector<long long>(k, 0));
        for (int i = 0; i < k; ++i) s.N.push_back(2 + static_cast<int>(rng() % 3));
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) s.q[i][j] = 1 + static_cast<long long>(rng() % (p - 1));
        out.push_back(std::move(s));
    }
    return out;
}

ExactnessReport check_exactness(const KoszulResolution& K) {
    ExactnessReport r;
    const int n = K.alg->dim(), p = K.alg->p();
    Products prod(K.alg);
    for (int k = 2; k <= K.D; ++k) {
        FreeMap dd = after(K.d[k - 1], K.d[k]);
        for (int t = 0; t < dd.src; ++t)
            if (!dd.img[t].empty()) {
                r.d_squared_zero = false;
                r.detail = "d^2 != 0 at " + tuple_name(K.gens[k][t]);
            }
    }
    r.d_ranks.assign(K.D + 1, 0);
    for (int k = 1; k <= K.D; ++k) {
        auto cols = flatten(K.d[k], K.alg, prod);
        std::vector<Exps> keys(cols.size());
        for (int t = 0; t < K.rank(k); ++t)
            for (int m = 0; m < n; ++m) keys[size_t(t) * n + m] = K.weight(k, t, m);
        r.d_ranks[k] = graded_rank(cols, keys, p);
    }
    r.augmentation = r.d_ranks.size() > 1 && r.d_ranks[1] == n - 1;
    r.homology.assign(K.D, 0);
    r.homology[0] = n - r.d_ranks[1];
    r.exact_through = 0;
    bool ok = true;
    for (int k = 1; k < K.D; ++k) {
        r.homology[k] = K.rank(k) * n - r.d_ranks[k] - r.d_ranks[k + 1];
        if (r.homology[k] != 0) ok = false;
        if (ok) r.exact_through = k;
    }
    if (!ok && r.detail.empty()) r.detail = "nonzero homology";
    return r;
}

ExtTable ext_dims_qci(const KoszulResolution& K) {
    ExtTable t;
    const int u = unit_index(K.alg);
    for (int n = 1; n <= K.D; ++n)
        for (auto& img : K.d[n].img)
            for (auto& [v, e] : img)
                if (e.coeff(u)) t.dual_differential_zero = false;
    const long long N = static_cast<long long>(K.spec.N.size());
    for (int n = 0; n <= K.D; ++n) {
        t.computed.push_back(K.rank(n));
        long long c = 1;  // C(n + N - 1, N - 1)
        for (long long k = 1; k < N; ++k) c = c * (n + k) / k;
        t.closed_form.push_back(c);
    }
    return t;
}

std::string ext_table_csv(const ExtTable& t, const std::vector<long long>& oracle) {
    std::ostringstream out;
    out << "n,computed,closed_form,oracle\n";
    for (size_t n = 0; n < t.computed.size(); ++n) {
        out << n << ',' << t.computed[n] << ',' << t.closed_form[n] << ',';
        if (n < oracle.size() && oracle[n] >= 0) out << oracle[n];
        out << '\n';
    }
    return out.str();
}

ChainMap chain_map_class(ChainKind kind, int i, const KoszulResolution& K) {
    const int N = static_cast<int>(K.spec.N.size());
    if (i < 0 || i >= N) throw usage_error("generator index out of range");
    if (K.D < 2) throw usage_error("chain maps need D >= 2");
    const Field& F = K.alg->field();
    const auto& sp = K.spec;
    ChainMap phi;
    phi.shift = kind == ChainKind::xi ? 2 : 1;
    phi.name = std::string(kind == ChainKind::xi ? "xi" : "eta") + std::to_string(i + 1);
    phi.maps.resize(K.D + 1);
    for (int n = phi.shift; n <= K.D; ++n) {
        FreeMap& f = phi.maps[n];
        f.src = K.rank(n);
        f.dst = K.rank(n - phi.shift);
        f.img.resize(f.src);
        for (int t = 0; t < f.src; ++t) {
            const Exps& a = K.gens[n][t];
            if (a[i] < phi.shift) continue;
            Exps b = a;
            b[i] -= phi.shift;
            int c = 1;
            Element x = K.alg->unit();
            if (kind == ChainKind::xi) {
                for (int l = i + 1; l < N; ++l)
                    c = F.mul(c, F.pow(qci_q(sp, i, l, F), static_cast<long long>(sp.N[i]) * koszul_tau(sp.N[l], a[l])));
            } else {
                const int s = koszul_sigma(sp.N[i], a[i]);
                for (int l = 0; l < i; ++l)
                    c = F.mul(c, F.pow(qci_q(sp, l, i, F), static_cast<long long>(s - 1) * koszul_tau(sp.N[l], a[l])));
                for (int l = i + 1; l < N; ++l) {
                    if (a[l] % 2) c = F.neg(c);
                    c = F.mul(c, F.pow(qci_q(sp, i, l, F), koszul_tau(sp.N[l], a[l])));
                }
                x = power_of(K.alg, i, s - 1);
            }
            f.img[t].push_back({K.index(b), x.scaled(c)});
        }
    }
    // chain law d phi = sign phi d, sign fixed by the first degree where it matters
    for (int sign : {1, -1}) {
        bool ok = true;
        int bad_n = -1, bad_t = -1;
        for (int n = phi.shift + 1; n <= K.D && ok; ++n) {
            FreeMap lhs = after(K.d[n - phi.shift], phi.maps[n]);
            FreeMap rhs = after(phi.maps[n - 1], K.d[n]);
            int t = differs(lhs, rhs, sign);
            if (t >= 0) {
                ok = false;
                bad_n = n;
                bad_t = t;
            }
        }
        if (ok) {
            phi.sign = sign;
            return phi;
        }
        if (sign == -1)
            throw std::logic_error(phi.name + " is not a chain map: fails at " + tuple_name(K.gens[bad_n][bad_t]));
    }
    return phi;
}

ChainMap compose(const ChainMap& A, const ChainMap& B, const KoszulResolution& K) {
    ChainMap C;
    C.name = A.name + "*" + B.name;
    C.shift = A.shift + B.shift;
    C.sign = A.sign * B.sign;
    C.maps.resize(K.D + 1);
    for (int n = C.shift; n <= K.D; ++n) C.maps[n] = after(A.maps[n - B.shift], B.maps[n]);
    return C;
}

Matrix induced_map(const ChainMap& phi, const KoszulResolution& K, int n) {
    if (n < phi.shift || n > K.D) throw usage_error("degree outside the chain map range");
    const int u = unit_index(K.alg);
    Matrix M(K.rank(n), K.rank(n - phi.shift), K.alg->p());
    for (int t = 0; t < K.rank(n); ++t)
        for (auto& [v, e] : phi.maps[n].img[t]) M.add_to(t, v, e.coeff(u));
    return M;
}

std::vector<int> cohomology_class(const ChainMap& phi, const KoszulResolution& K) {
    Matrix M = induced_map(phi, K, phi.shift);
    return M.col(0);
}

namespace {

RelationCheck check_relation(const std::string& text, const ChainMap& X, const ChainMap& Y, int lambda,
                             const KoszulResolution& K, bool reversed) {
    RelationCheck rc;
    rc.relation = text;
    ChainMap XY = reversed ? compose(Y, X, K) : compose(X, Y, K);
    ChainMap YX = reversed ? compose(X, Y, K) : compose(Y, X, K);
    std::vector<Matrix> a, b;
    for (int n = XY.shift; n <= K.D; ++n) {
        a.push_back(induced_map(XY, K, n));
        b.push_back(induced_map(YX, K, n));
    }
    auto holds_with = [&](int l) {
        for (size_t k = 0; k < a.size(); ++k)
            if (a[k] != b[k].scaled(l)) return false;
        return true;
    };
    rc.holds = holds_with(lambda);
    if (!rc.holds) {
        rc.detail = "induced maps differ for scalar " + std::to_string(lambda);
        if (X.name != Y.name)
            for (int l = 0; l < K.alg->p(); ++l)
                if (holds_with(l)) rc.detail += "; holds with scalar " + std::to_string(l);
    }
    return rc;
}

}  // namespace

CupRelationReport verify_cup_relations(const KoszulResolution& K) {
    if (K.D < 4) throw usage_error("cup-product relations need D >= 4");
    const int N = static_cast<int>(K.spec.N.size());
    const Field& F = K.alg->field();
    std::vector<ChainMap> xi, eta;
    for (int i = 0; i < N; ++i) {
        xi.push_back(chain_map_class(ChainKind::xi, i, K));
        eta.push_back(chain_map_class(ChainKind::eta, i, K));
    }
    auto run = [&](bool reversed) {
        CupRelationReport r;
        r.order = reversed ? "XY is Y after X" : "XY is X after Y";
        auto nm = [](const char* s, int i) { return std::string(s) + std::to_string(i + 1); };
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                const int qij = qci_q(K.spec, i, j, F), qji = qci_q(K.spec, j, i, F);
                if (i < j)
                    r.checks.push_back(check_relation(
                        nm("xi", i) + nm(" xi", j) + " = q" + std::to_string(i + 1) + std::to_string(j + 1) +
                            "^(N" + std::to_string(i + 1) + "N" + std::to_string(j + 1) + ")" + nm(" xi", j) + nm(" xi", i),
                        xi[i], xi[j], F.pow(qij, static_cast<long long>(K.spec.N[i]) * K.spec.N[j]), K, reversed));
                r.checks.push_back(check_relation(
                    nm("eta", i) + nm(" xi", j) + " = q" + std::to_string(j + 1) + std::to_string(i + 1) + "^N" +
                        std::to_string(j + 1) + nm(" xi", j) + nm(" eta", i),
                    eta[i], xi[j], F.pow(qji, K.spec.N[j]), K, reversed));
                if (i <= j)
                    r.checks.push_back(check_relation(
                        nm("eta", i) + nm(" eta", j) + " = -q" + std::to_string(j + 1) + std::to_string(i + 1) +
                            nm(" eta", j) + nm(" eta", i),
                        eta[i], eta[j], F.neg(qji), K, reversed));
            }
        for (auto& c : r.checks) r.all_hold = r.all_hold && c.holds;
        return r;
    };
    CupRelationReport r = run(false);
    if (!r.all_hold) {
        // the other composition order, kept only if it does strictly better
        CupRelationReport s = run(true);
        int a = 0, b = 0;
        for (auto& c : r.checks) a += c.holds;
        for (auto& c : s.checks) b += c.holds;
        if (b > a) r = s;
    }
    for (int i = 0; i < N; ++i) {
        if (K.spec.N[i] != 2) continue;
        ChainMap sq = compose(eta[i], eta[i], K);
        RelationCheck rc;
        rc.relation = "eta" + std::to_string(i + 1) + "^2 = xi" + std::to_string(i + 1);
        rc.holds = true;
        for (int n = 2; n <= K.D && rc.holds; ++n)
            if (induced_map(sq, K, n) != induced_map(xi[i], K, n)) {
                rc.holds = false;
                rc.detail = "differs in degree " + std::to_string(n);
            }
        r.squares.push_back(rc);
    }
    return r;
}

QciSpec graded_osp12_spec(int p) {
    QciSpec s;
    s.N = {2 * p, 2 * p};
    s.q = {{0, -1}, {0, 0}};
    s.parity = {1, 1};
    return s;
}

WeightActionReport verify_weight_actions(const KoszulResolution& K, const std::vector<int>& alpha) {
    const int N = static_cast<int>(K.spec.N.size());
    if (static_cast<int>(alpha.size()) != N) throw usage_error("one weight per generator");
    const Field& F = K.alg->field();
    const int n = K.alg->dim();
    const int u = unit_index(K.alg);
    auto par = [&](int l) { return K.spec.parity.empty() ? 0 : K.spec.parity[l]; };
    auto hval = [&](int deg, int t, int m) {
        Exps w = K.weight(deg, t, m);
        long long s = 0;
        for (int l = 0; l < N; ++l) s += static_cast<long long>(alpha[l]) * w[l];
        return F.reduce(s);
    };
    auto gval = [&](int deg, int t, int m) {
        int s = K.alg->monomial_parity(m);
        const Exps& a = K.gens[deg][t];
        for (int l = 0; l < N; ++l)
            if (par(l)) s += koszul_tau(K.spec.N[l], a[l]);
        return (s % 2) ? -1 : 1;
    };
    WeightActionReport r;
    Products prod(K.alg);
    auto note = [&](const std::string& s) {
        if (r.detail.empty()) r.detail = s;
    };
    // scan the nonzero entries of an S-linear map of the given shift
    auto scan = [&](const FreeMap& f, int deg, int shift, auto&& check) {
        auto cols = flatten(f, K.alg, prod);
        for (int t = 0; t < f.src; ++t)
            for (int m = 0; m < n; ++m)
                for (auto [row, x] : cols[size_t(t) * n + m]) {
                    (void)x;
                    if (!check(deg, t, m, deg - shift, row / n, row % n)) return false;
                }
        return true;
    };
    for (int k = 1; k <= K.D; ++k) {
        bool h = scan(K.d[k], k, 1, [&](int a, int t, int m, int b, int t2, int m2) { return hval(a, t, m) == hval(b, t2, m2); });
        bool g = scan(K.d[k], k, 1, [&](int a, int t, int m, int b, int t2, int m2) { return gval(a, t, m) == gval(b, t2, m2); });
        if (!h) note("h does not commute with d in degree " + std::to_string(k));
        if (!g) note("g does not commute with d in degree " + std::to_string(k));
        r.h_commutes = r.h_commutes && h;
        r.g_commutes = r.g_commutes && g;
    }
    std::vector<ChainMap> xi, eta;
    for (int i = 0; i < N; ++i) {
        xi.push_back(chain_map_class(ChainKind::xi, i, K));
        eta.push_back(chain_map_class(ChainKind::eta, i, K));
    }
    for (int i = 0; i < N; ++i) {
        // [h, phi] = lambda phi: target weight minus source weight is lambda
        const int lx = F.reduce(-static_cast<long long>(K.spec.N[i]) * alpha[i]);
        const int le = F.reduce(-alpha[i]);
        const int ge = par(i) ? -1 : 1;
        for (int k = 2; k <= K.D; ++k) {
            bool ok = scan(xi[i].maps[k], k, 2, [&](int a, int t, int m, int b, int t2, int m2) {
                return F.sub(hval(b, t2, m2), hval(a, t, m)) == lx;
            });
            bool og = scan(xi[i].maps[k], k, 2, [&](int a, int t, int m, int b, int t2, int m2) {
                return gval(a, t, m) * gval(b, t2, m2) == 1;
            });
            if (!ok) note("[h, xi" + std::to_string(i + 1) + "] has the wrong weight");
            if (!og) note("g does not fix xi" + std::to_string(i + 1));
            r.h_generators = r.h_generators && ok;
            r.g_generators = r.g_generators && og;
        }
        for (int k = 1; k <= K.D; ++k) {
            bool ok = scan(eta[i].maps[k], k, 1, [&](int a, int t, int m, int b, int t2, int m2) {
                return F.sub(hval(b, t2, m2), hval(a, t, m)) == le;
            });
            bool og = scan(eta[i].maps[k], k, 1, [&](int a, int t, int m, int b, int t2, int m2) {
                return gval(a, t, m) * gval(b, t2, m2) == ge;
            });
            if (!ok) note("[h, eta" + std::to_string(i + 1) + "] has the wrong weight");
            if (!og) note("g acts on eta" + std::to_string(i + 1) + " with the wrong sign");
            r.h_generators = r.h_generators && ok;
            r.g_generators = r.g_generators && og;
        }
        // dual classes: h acts on Psi*(b) by -hval, g by gval
        auto cls_ok = [&](const ChainMap& phi, int lam, int gsign) {
            auto v = cohomology_class(phi, K);
            bool any = false;
            for (int t = 0; t < K.rank(phi.shift); ++t) {
                if (!v[t]) continue;
                any = true;
                if (F.neg(hval(phi.shift, t, u)) != lam || gval(phi.shift, t, u) != gsign) return false;
            }
            return any;
        };
        if (!cls_ok(xi[i], lx, 1) || !cls_ok(eta[i], le, ge)) {
            r.cochain_actions = false;
            note("induced action on the classes of generator " + std::to_string(i + 1));
        }
    }
    const int p = F.p();
    if (K.D >= 2 * p) {
        for (int i = 0; i < N; ++i) {
            ChainMap pw = xi[i];
            for (int k = 1; k < p; ++k) pw = compose(pw, xi[i], K);
            auto v = cohomology_class(pw, K);
            bool any = false, fixed = true;
            for (int t = 0; t < K.rank(2 * p); ++t) {
                if (!v[t]) continue;
                any = true;
                if (hval(2 * p, t, u) != 0 || gval(2 * p, t, u) != 1) fixed = false;
            }
            if (!any || !fixed) {
                r.xi_p_fixed = false;
                note("xi" + std::to_string(i + 1) + "^p is not fixed");
            }
        }
    }
    for (int k = 0; k <= K.D; ++k) {
        int hi = 0, all = 0;
        for (int t = 0; t < K.rank(k); ++t) {
            if (hval(k, t, u) != 0) continue;
            ++hi;
            if (gval(k, t, u) == 1) ++all;
        }
        r.h_invariant_dims.push_back(hi);
        r.invariant_dims.push_back(all);
    }
    return r;
}

int xi_tilde(const AlgebraPtr& lifted, int i, int N_i, int a, int b) {
    Element x = lifted->monomial(a) * lifted->monomial(b);
    Exps e(lifted->ngens(), 0);
    e[i] = N_i;
    int idx = lifted->index(e);
    if (idx < 0) throw usage_error("lifted algebra does not contain x_i^N_i");
    return x.coeff(idx);
}

namespace {

int lift_index(const AlgebraPtr& from, const AlgebraPtr& to, int m) { return to->index(from->exps(m)); }

}  // namespace

Cocycle cocycle_xi_hat(const AlgebraPtr& graded, int i) {
    const int k = graded->ngens();
    if (i < 0 || i >= k) throw usage_error("generator index out of range");
    std::vector<int> tr;
    for (int l = 0; l < k; ++l) tr.push_back(2 * graded->gen(l).trunc);
    AlgebraPtr L = lift_truncations(graded, tr);
    const int n = graded->dim(), u = unit_index(graded), N_i = graded->gen(i).trunc;
    Cocycle c;
    c.id = "xi_hat_" + graded->gen(i).name;
    c.arity = 2;
    c.alg = graded;
    c.gen = i;
    c.power = N_i;
    c.pair = Matrix(n, n, graded->p());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != u && b != u) c.pair.set(a, b, xi_tilde(L, i, N_i, lift_index(graded, L, a), lift_index(graded, L, b)));
    return c;
}

Cocycle cocycle_f(const AlgebraPtr& preset, int i) {
    const int h = preset->gen_index("h");
    if (preset->name() != "osp12" || h < 0) throw usage_error("cocycle_f is defined on u(osp(1|2))");
    if (i < 0 || i >= 2) throw usage_error("root generator index must be 0 (E) or 1 (F)");
    const int p = preset->p();
    // products of h-free monomials stay below E^{4p}, F^{4p}, h^{2p}
    AlgebraPtr L = lift_truncations(preset, {4 * p, 4 * p, 2 * p});
    const int n = preset->dim(), u = unit_index(preset), N_i = preset->gen(i).trunc;
    Cocycle c;
    c.id = "f_" + preset->gen(i).name;
    c.arity = 2 * p;
    c.alg = preset;
    c.gen = i;
    c.power = N_i;
    c.pair = Matrix(n, n, p);
    for (int a = 0; a < n; ++a) {
        if (a == u || preset->exps(a)[h]) continue;
        for (int b = 0; b < n; ++b) {
            if (b == u || preset->exps(b)[h]) continue;
            c.pair.set(a, b, xi_tilde(L, i, N_i, lift_index(preset, L, a), lift_index(preset, L, b)));
        }
    }
    return c;
}

Cocycle zero_cocycle(const AlgebraPtr& alg, int arity) {
    Cocycle c;
    c.id = "zero";
    c.arity = arity;
    c.alg = alg;
    c.gen = 0;
    c.power = alg->gen(0).trunc;
    c.pair = Matrix(alg->dim(), alg->dim(), alg->p());
    return c;
}

int evaluate(const Cocycle& c, const std::vector<int>& tuple) {
    if (static_cast<int>(tuple.size()) != c.arity) throw usage_error("wrong number of arguments");
    const Field& F = c.alg->field();
    int v = 1;
    for (int k = 0; k + 1 < c.arity; k += 2) {
        v = F.mul(v, c.pair.at(tuple[k], tuple[k + 1]));
        if (!v) break;
    }
    return v;
}

int evaluate(const Cocycle& c, const std::vector<SparseVec>& args) {
    if (static_cast<int>(args.size()) != c.arity) throw usage_error("wrong number of arguments");
    const Field& F = c.alg->field();
    int v = 1;
    for (int k = 0; k + 1 < c.arity && v; k += 2) {
        long long s = 0;
        for (auto [a, x] : args[k])
            for (auto [b, y] : args[k + 1]) s += static_cast<long long>(x) * y % F.p() * c.pair.at(a, b);
        v = F.mul(v, F.reduce(s));
    }
    return v;
}

std::string CocycleReport::to_json() const {
    nlohmann::json j;
    j["cocycle_id"] = id;
    j["checked_tuples"] = checked;
    j["active_tuples"] = active;
    j["exhaustive"] = exhaustive;
    j["cocycle"] = cocycle;
    j["certificate"] = certificate;
    j["nonzero_witness"] = witness.empty() ? nlohmann::json(nullptr) : nlohmann::json(witness);
    j["certificate_value"] = certificate_value;
    return j.dump();
}

CocycleReport verify_cocycle(const Cocycle& c, long long budget, uint64_t seed) {
    CocycleReport r;
    r.id = c.id;
    const AlgebraPtr& A = c.alg;
    const Field& F = A->field();
    const int n = A->dim(), u = unit_index(A), m = c.arity;
    Products prod(A);
    std::vector<int> basis;
    for (int x = 0; x < n; ++x)
        if (x != u) basis.push_back(x);

    // coboundary of c on (r_0, .., r_m): sum_j (-1)^(j+1) c(.., r_j r_{j+1}, ..)
    std::vector<SparseVec> args(m);
    auto coboundary = [&](const std::vector<int>& t, bool& active) {
        long long s = 0;
        active = false;
        for (int j = 0; j < m; ++j) {
            for (int k = 0; k < j; ++k) args[k] = {{t[k], 1}};
            args[j] = prod(t[j], t[j + 1]);
            for (int k = j + 1; k < m; ++k) args[k] = {{t[k + 1], 1}};
            int v = evaluate(c, args);
            if (v) active = true;
            s += (j % 2) ? v : -v;
        }
        return F.reduce(s);
    };
    auto record = [&](const std::vector<int>& t) {
        bool active = false;
        int v = coboundary(t, active);
        ++r.checked;
        if (active) ++r.active;
        if (v && r.cocycle) {
            r.cocycle = false;
            r.witness = t;
        }
    };

    double total = 1;
    for (int k = 0; k <= m; ++k) total *= static_cast<double>(basis.size());
    std::vector<int> t(m + 1);
    if (total <= static_cast<double>(budget)) {
        r.exhaustive = true;
        std::vector<size_t> pos(m + 1, 0);
        while (true) {
            for (int k = 0; k <= m; ++k) t[k] = basis[pos[k]];
            record(t);
            int k = m;
            while (k >= 0 && ++pos[k] == basis.size()) pos[k--] = 0;
            if (k < 0) break;
        }
    } else {
        // pools: any basis monomial, monomials in the root generators only, powers of x_i
        std::vector<int> roots, powers;
        for (int x : basis) {
            Exps e = A->exps(x);
            bool ok = true;
            for (int l = 0; l < A->ngens(); ++l)
                if (e[l] && A->gen(l).parity == 0 && l != c.gen) ok = false;
            if (ok) roots.push_back(x);
            int nz = 0;
            for (int l = 0; l < A->ngens(); ++l) nz += e[l] != 0;
            if (nz == 1 && e[c.gen]) powers.push_back(x);
        }
        if (roots.empty()) roots = basis;
        if (powers.empty()) powers = basis;
        std::mt19937_64 rng(seed);
        for (long long s = 0; s < budget; ++s) {
            for (int k = 0; k <= m; ++k) {
                unsigned pick = rng() % 4;
                const auto& pool = pick == 0 ? basis : pick == 1 ? roots : powers;
                t[k] = pool[rng() % pool.size()];
            }
            record(t);
        }
    }

    // certificate: c(x, x^{N-1}, x, x^{N-1}, ..) != 0 while every adjacent product is 0
    Exps e1(A->ngens(), 0), e2(A->ngens(), 0);
    e1[c.gen] = 1;
    e2[c.gen] = c.power - 1;
    const int a = A->index(e1), b = A->index(e2);
    std::vector<int> pattern;
    for (int k = 0; k < m; ++k) pattern.push_back(k % 2 ? b : a);
    r.certificate_value = evaluate(c, pattern);
    bool products_vanish = prod(a, b).empty() && prod(b, a).empty();
    r.certificate = r.certificate_value != 0 && products_vanish;
    if (!products_vanish) r.detail = "adjacent products in the pattern are nonzero";
    else if (!r.certificate_value) r.detail = "value on the pattern is zero";
    if (!r.cocycle) r.detail = "coboundary nonzero";
    return r;
}

bool xi_matches_xi_hat(const KoszulResolution& K, const Cocycle& xh) {
    if (xh.alg->ref() != K.alg->ref() || xh.arity != 2) throw usage_error("cocycle must live on the resolved algebra");
    if (K.D < 2) throw usage_error("needs D >= 2");
    const AlgebraPtr& A = K.alg;
    const int n = A->dim(), p = A->p(), u = unit_index(A);
    const int N = static_cast<int>(K.spec.N.size());
    Products prod(A);
    auto dense = [&](int k) {
        auto cols = flatten(K.d[k], A, prod);
        Matrix M(K.rank(k - 1) * n, static_cast<int>(cols.size()), p);
        for (size_t c = 0; c < cols.size(); ++c)
            for (auto [r, x] : cols[c]) M.add_to(r, static_cast<int>(c), x);
        return M;
    };
    std::vector<int> I;
    for (int x = 0; x < n; ++x)
        if (x != u) I.push_back(x);
    const int m = static_cast<int>(I.size());
    Matrix D1 = dense(1), D2 = dense(2);
    Matrix B1(n, m, p);
    for (int j = 0; j < m; ++j) B1.set(I[j], j, 1);
    auto X1 = solve_one(D1, B1);
    if (!X1) return false;
    std::vector<int> col_of(n, -1);
    for (int j = 0; j < m; ++j) col_of[I[j]] = j;
    // rhs for (s, t): s phi_1(t) - phi_1(st)
    Matrix R(N * n, m * m, p);
    for (int si = 0; si < m; ++si)
        for (int ti = 0; ti < m; ++ti) {
            const int c = si * m + ti;
            for (int row = 0; row < N * n; ++row) {
                int x = X1->at(row, ti);
                if (!x) continue;
                for (auto [r2, y] : prod(I[si], row % n)) R.add_to((row / n) * n + r2, c, static_cast<long long>(x) * y);
            }
            for (auto [r2, y] : prod(I[si], I[ti]))
                for (int row = 0; row < N * n; ++row) R.add_to(row, c, -static_cast<long long>(y) * X1->at(row, col_of[r2]));
        }
    auto Y = solve_one(D2, R);
    if (!Y) return false;
    Exps two(N, 0);
    two[xh.gen] = 2;
    const int g2 = K.index(two);
    Matrix C(m * m, m + 1, p);
    for (int si = 0; si < m; ++si)
        for (int ti = 0; ti < m; ++ti) {
            const int row = si * m + ti;
            for (auto [r2, y] : prod(I[si], I[ti]))
                if (col_of[r2] >= 0) C.add_to(row, col_of[r2], y);
            C.set(row, m, static_cast<long long>(Y->at(g2 * n + u, row)) - xh.pair.at(I[si], I[ti]));
        }
    return rank(C) == rank(C.block(0, 0, m * m, m));
}

}  // namespace sa

#include "superalg/homalg.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>

namespace sa {

namespace {

std::vector<int> toral_gens(const AlgebraPtr& A) {
    std::vector<int> t;
    for (int g = 0; g < A->ngens(); ++g)
        if (A->is_toral(g)) t.push_back(g);
    return t;
}

bool is_diagonal(const Matrix& X) {
    for (int i = 0; i < X.rows(); ++i)
        for (int j = 0; j < X.cols(); ++j)
            if (i != j && X.at(i, j)) return false;
    return true;
}

// Joint toral eigenvalues of each basis vector, assuming diagonal torals.
std::vector<long long> weight_keys(const Module& M) {
    std::vector<long long> key(M.dim, 0);
    for (int t : toral_gens(M.alg))
        for (int i = 0; i < M.dim; ++i) key[i] = key[i] * M.p() + M.act[t].at(i, i);
    return key;
}

bool in_weight_form(const Module& M) {
    for (int t : toral_gens(M.alg))
        if (!is_diagonal(M.act[t])) return false;
    return true;
}

Matrix power_2k(Matrix X, int atleast) {
    for (int e = 1; e < atleast; e *= 2) X = X * X;
    return X;
}

bool nilpotent(const Matrix& X) { return X.rows() == 0 || power_2k(X, X.rows()).is_zero(); }

Matrix shift_id(const Matrix& X, int c) {
    Matrix Y = X;
    for (int i = 0; i < X.rows(); ++i) Y.add_to(i, i, -c);
    return Y;
}

std::vector<int> flatten(const Matrix& X) { return X.data(); }

// Accumulates linear equations on n unknowns, reducing in batches.
class Equations {
public:
    Equations(int n, int p) : n_(n), p_(p), basis_(0, n, p) {}
    void add(std::vector<int> row) {
        bool nz = false;
        for (int& x : row) {
            x %= p_;
            if (x < 0) x += p_;
            nz = nz || x;
        }
        if (!nz) return;
        pending_.push_back(std::move(row));
        if (static_cast<int>(pending_.size()) >= std::max(64, 2 * n_)) flush();
    }
    bool full() {
        flush();
        return basis_.rows() == n_;
    }
    Matrix solutions() {
        flush();
        if (basis_.rows() == 0) return Matrix::identity(n_, p_);
        return nullspace(basis_);
    }

private:
    void flush() {
        if (pending_.empty()) return;
        Matrix A(basis_.rows() + static_cast<int>(pending_.size()), n_, p_);
        A.set_block(0, 0, basis_);
        for (size_t k = 0; k < pending_.size(); ++k)
            for (int j = 0; j < n_; ++j) A.set(basis_.rows() + static_cast<int>(k), j, pending_[k][j]);
        pending_.clear();
        Echelon e = rref(std::move(A));
        basis_ = e.R.block(0, 0, static_cast<int>(e.pivots.size()), n_);
    }
    int n_, p_;
    Matrix basis_;
    std::vector<std::vector<int>> pending_;
};

// Direct intertwiner solve, unknowns restricted to matching weights.
// M and N must be in weight form.
std::vector<Matrix> hom_direct(const Module& M, const Module& N) {
    const int p = M.p(), m = M.dim, n = N.dim;
    if (m == 0 || n == 0) return {};
    auto kM = weight_keys(M), kN = weight_keys(N);
    std::vector<int> uid(static_cast<size_t>(n) * m, -1);
    int nu = 0;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < m; ++k)
            if (kN[i] == kM[k]) uid[static_cast<size_t>(i) * m + k] = nu++;
    if (nu == 0) return {};
    auto torals = toral_gens(M.alg);
    Equations eq(nu, p);
    std::vector<int> row(nu);
    for (int g = 0; g < M.alg->ngens(); ++g) {
        if (std::find(torals.begin(), torals.end(), g) != torals.end()) continue;
        const Matrix& X = M.act[g];
        const Matrix& Y = N.act[g];
        std::vector<std::vector<std::pair<int, int>>> colX(m), rowY(n);
        for (int k = 0; k < m; ++k)
            for (int j = 0; j < m; ++j)
                if (X.at(k, j)) colX[j].push_back({k, X.at(k, j)});
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l)
                if (Y.at(i, l)) rowY[i].push_back({l, Y.at(i, l)});
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) {
                bool any = false;
                for (auto [k, x] : colX[j]) {
                    int u = uid[static_cast<size_t>(i) * m + k];
                    if (u < 0) continue;
                    if (!any) std::fill(row.begin(), row.end(), 0), any = true;
                    row[u] += x;
                }
                for (auto [l, y] : rowY[i]) {
                    int u = uid[static_cast<size_t>(l) * m + j];
                    if (u < 0) continue;
                    if (!any) std::fill(row.begin(), row.end(), 0), any = true;
                    row[u] -= y;
                }
                if (any) eq.add(row);
            }
        if (eq.full()) return {};
    }
    Matrix sol = eq.solutions();
    std::vector<Matrix> out;
    for (int c = 0; c < sol.cols(); ++c) {
        Matrix T(n, m, p);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < m; ++k) {
                int u = uid[static_cast<size_t>(i) * m + k];
                if (u >= 0) T.set(i, k, sol.at(u, c));
            }
        out.push_back(std::move(T));
    }
    return out;
}

bool simples_known(const AlgebraPtr& A) {
    try {
        simples(A);
        return true;
    } catch (const usage_error&) {
        return false;
    }
}

struct HeadGen {
    std::vector<int> vec;  // e_S m, a weight vector
    int simple;
    int parity;
    long long key;
};

// Generators of M modulo its radical, one per head composition factor.
// M must be in weight form.
std::vector<HeadGen> head_generators(const Module& M) {
    const auto& S = simples(M.alg);
    const auto& P = projectives(M.alg);
    auto key = weight_keys(M);
    std::vector<HeadGen> out;
    for (size_t s = 0; s < S.size(); ++s) {
        auto H = hom_direct(M, S[s]);
        const int r = static_cast<int>(H.size());
        if (r == 0) continue;
        Span sp(r, M.p());
        for (int k = 0; k < M.dim && sp.dim() < r; ++k) {
            std::vector<int> v(r);
            for (int j = 0; j < r; ++j) v[j] = H[j].at(0, k);
            if (!sp.add(v)) continue;
            std::vector<int> unit(M.dim, 0);
            unit[k] = 1;
            Matrix u = apply_element(M, P[s].idempotent, Matrix::column(unit, M.p()));
            out.push_back({u.col(0), static_cast<int>(s), M.parity[k], key[k]});
        }
        if (sp.dim() != r) throw std::logic_error("head generator selection failed");
    }
    return out;
}

// Hom(M, N) from the images of head generators of M. Both in weight form.
std::vector<Matrix> hom_spin(const Module& M, const Module& N) {
    const int p = M.p(), m = M.dim, n = N.dim;
    auto gens = head_generators(M);
    auto kN = weight_keys(N);
    // unknowns: coordinates of the image of each generator in matching weights
    std::vector<std::vector<int>> allowed(gens.size());
    std::vector<int> offset(gens.size());
    int nu = 0;
    for (size_t i = 0; i < gens.size(); ++i) {
        offset[i] = nu;
        for (int r = 0; r < n; ++r)
            if (kN[r] == gens[i].key) allowed[i].push_back(r);
        nu += static_cast<int>(allowed[i].size());
    }
    if (nu == 0) return {};
    // spin tree over M
    Span sp(m, p);
    std::vector<std::pair<int, int>> tree;  // (parent, gen) or (-1 - generator index, -1)
    std::vector<std::vector<int>> vecs;
    for (size_t i = 0; i < gens.size(); ++i)
        if (sp.add(gens[i].vec)) {
            tree.push_back({-1 - static_cast<int>(i), -1});
            vecs.push_back(gens[i].vec);
        }
    for (size_t t = 0; t < vecs.size(); ++t)
        for (int g = 0; g < M.alg->ngens(); ++g) {
            auto w = (M.act[g] * Matrix::column(vecs[t], p)).col(0);
            if (sp.add(w)) {
                tree.push_back({static_cast<int>(t), g});
                vecs.push_back(w);
            }
        }
    if (static_cast<int>(vecs.size()) != m) throw std::logic_error("head generators do not generate the module");
    // L[t]: image of basis vector t as an n x nu matrix in the unknowns
    std::vector<Matrix> L(m);
    for (int t = 0; t < m; ++t) {
        auto [par, g] = tree[t];
        if (g < 0) {
            int i = -1 - par;
            L[t] = Matrix(n, nu, p);
            for (size_t a = 0; a < allowed[i].size(); ++a) L[t].set(allowed[i][a], offset[i] + static_cast<int>(a), 1);
        } else {
            L[t] = N.act[g] * L[par];
        }
    }
    Matrix B(m, m, p);
    for (int t = 0; t < m; ++t) B.set_col(t, vecs[t]);
    auto Binv = inverse(B);
    if (!Binv) throw std::logic_error("spin basis not invertible");
    // Lall: (n*nu) x m with column t = vec(L[t])
    Matrix Lall(n * nu, m, p);
    for (int t = 0; t < m; ++t)
        for (int r = 0; r < n; ++r)
            for (int u = 0; u < nu; ++u) Lall.set(r * nu + u, t, L[t].at(r, u));
    Equations eq(nu, p);
    std::vector<int> row(nu);
    for (int g = 0; g < M.alg->ngens(); ++g) {
        Matrix C = *Binv * M.act[g] * B;  // coordinates of X_g b_t
        Matrix lhs = Lall * C;            // vec of sum_s c_s L_s, column t
        for (int t = 0; t < m; ++t) {
            // tree edges hold by construction
            bool edge = false;
            for (int s = 0; s < m && !edge; ++s) edge = tree[s].first == t && tree[s].second == g;
            if (edge) continue;
            Matrix YL = N.act[g] * L[t];
            for (int r = 0; r < n; ++r) {
                for (int u = 0; u < nu; ++u) row[u] = YL.at(r, u) - lhs.at(r * nu + u, t);
                eq.add(row);
            }
        }
        if (eq.full()) return {};
    }
    Matrix sol = eq.solutions();
    std::vector<Matrix> out;
    for (int c = 0; c < sol.cols(); ++c) {
        Matrix x(nu, 1, p);
        for (int u = 0; u < nu; ++u) x.set(u, 0, sol.at(u, c));
        Matrix TB(n, m, p);
        for (int t = 0; t < m; ++t) TB.set_col(t, (L[t] * x).col(0));
        out.push_back(TB * *Binv);
    }
    return out;
}

void same_alg(const Module& M, const Module& N) {
    if (M.alg->ref() != N.alg->ref()) throw usage_error("modules live over different algebras");
}

}  // namespace

Module weight_module(const Module& M, Matrix* T) {
    const int p = M.p(), n = M.dim;
    if (in_weight_form(M) || n == 0) {
        if (T) *T = Matrix::identity(n, p);
        return M;
    }
    std::vector<Matrix> pieces;
    for (int par = 0; par < 2; ++par) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (M.parity[i] == par) idx.push_back(i);
        if (idx.empty()) continue;
        Matrix B(n, static_cast<int>(idx.size()), p);
        for (size_t k = 0; k < idx.size(); ++k) B.set(idx[k], static_cast<int>(k), 1);
        pieces.push_back(B);
    }
    for (int t : toral_gens(M.alg)) {
        std::vector<Matrix> next;
        for (auto& B : pieces) {
            int got = 0;
            for (int c = 0; c < p; ++c) {
                Matrix Z = nullspace(shift_id(M.act[t], c) * B);
                if (Z.cols() == 0) continue;
                next.push_back(B * Z);
                got += Z.cols();
            }
            if (got != B.cols()) {
                if (T) *T = Matrix::identity(n, p);
                return M;
            }
        }
        pieces = std::move(next);
    }
    Matrix B = hstack(pieces, n, p);
    if (T) *T = B;
    Module W = conjugate(M, B);
    W.label = M.label;
    return W;
}

HomSpace hom_basis(const Module& M, const Module& N) {
    same_alg(M, N);
    HomSpace H;
    if (M.dim == 0 || N.dim == 0) return H;
    Matrix TM, TN;
    Module Mw = weight_module(M, &TM), Nw = weight_module(N, &TN);
    std::vector<Matrix> raw;
    // direct unknown count
    auto kM = weight_keys(Mw), kN = weight_keys(Nw);
    std::map<long long, long long> cm, cn;
    for (auto k : kM) ++cm[k];
    for (auto k : kN) ++cn[k];
    long long nu = 0;
    for (auto& [k, c] : cm) nu += c * cn[k];
    if (nu > 900 && simples_known(M.alg)) raw = hom_spin(Mw, Nw);
    else raw = hom_direct(Mw, Nw);
    bool identM = TM.is_identity(), identN = TN.is_identity();
    std::optional<Matrix> TMi;
    if (!identM) TMi = inverse(TM);
    for (auto& T : raw) {
        Matrix X = T;
        if (!identN) X = TN * X;
        if (!identM) X = X * *TMi;
        H.basis.push_back(std::move(X));
    }
    return H;
}

int hom_dim(const Module& M, const Module& N) { return hom_basis(M, N).dim(); }

int hom_even_dim(const Module& M, const Module& N) {
    auto H = hom_basis(M, N);
    if (H.basis.empty()) return 0;
    Span sp(N.dim * M.dim, M.p());
    for (auto& T : H.basis) {
        Matrix E(N.dim, M.dim, M.p());
        for (int i = 0; i < N.dim; ++i)
            for (int j = 0; j < M.dim; ++j)
                if (N.parity[i] == M.parity[j]) E.set(i, j, T.at(i, j));
        sp.add(flatten(E));
    }
    return sp.dim();
}

bool is_hom(const Module& M, const Module& N, const Matrix& T) {
    if (T.rows() != N.dim || T.cols() != M.dim) return false;
    for (int g = 0; g < M.alg->ngens(); ++g)
        if (T * M.act[g] != N.act[g] * T) return false;
    return true;
}

// ---------------------------------------------------------------- End rings

namespace {

// Eigenvalue c with X - c nilpotent, if unique.
std::optional<int> single_eigenvalue(const Matrix& X) {
    for (int c = 0; c < X.p(); ++c)
        if (nilpotent(shift_id(X, c))) return c;
    return std::nullopt;
}

// c such that the generalized c-eigenspace of X is a proper nonzero subspace.
std::optional<int> splitting_eigenvalue(const Matrix& X) {
    const int n = X.rows();
    for (int c = 0; c < X.p(); ++c) {
        int k = n - rank(power_2k(shift_id(X, c), n));
        if (k > 0 && k < n) return c;
    }
    return std::nullopt;
}

EndRing end_ring_from(const Module& M, std::vector<Matrix> E) {
    EndRing R;
    R.basis = std::move(E);
    const int n = M.dim, p = M.p(), d = R.dim();
    if (d == 0) return R;
    std::vector<int> eig(d);
    for (int i = 0; i < d; ++i) {
        auto c = single_eigenvalue(R.basis[i]);
        if (!c) {
            auto s = splitting_eigenvalue(R.basis[i]);
            if (!s) throw std::runtime_error("endomorphism without eigenvalue in F_p: End/rad is not split");
            R.splitter = R.basis[i];
            return R;
        }
        eig[i] = *c;
    }
    // lambda: the eigenvalue functional, linear in the basis
    Span coords(n * n, p);
    for (auto& B : R.basis) coords.add(flatten(B));
    auto lambda = [&](const Matrix& X) -> std::optional<long long> {
        auto c = coords.coords(flatten(X));
        if (!c) return std::nullopt;
        long long s = 0;
        for (int i = 0; i < d; ++i) s += static_cast<long long>((*c)[i]) * eig[i];
        return s % p;
    };
    std::vector<Matrix> K;
    {
        Span ks(n * n, p);
        for (int i = 0; i < d; ++i) {
            Matrix k = shift_id(R.basis[i], eig[i]);
            if (ks.add(flatten(k))) K.push_back(k);
        }
    }
    bool ok = true;
    for (auto& k : K) {
        for (auto& B : R.basis) {
            auto a = lambda(k * B), b = lambda(B * k);
            if (!a || !b || *a || *b) {
                ok = false;
                break;
            }
        }
        if (!ok) break;
    }
    if (ok) {
        std::vector<Matrix> cur = K;
        for (int step = 0; step <= n && !cur.empty(); ++step) {
            Span sp(n * n, p);
            std::vector<Matrix> next;
            for (auto& u : cur)
                for (auto& k : K) {
                    Matrix x = u * k;
                    if (sp.add(flatten(x))) next.push_back(x);
                }
            if (next.size() >= cur.size() && !next.empty()) {
                ok = false;
                break;
            }
            cur = std::move(next);
        }
        if (!cur.empty()) ok = false;
    }
    if (ok) {
        R.is_local = true;
        R.radical = K;
        return R;
    }
    std::mt19937_64 rng(0x5eed);
    for (int tries = 0; tries < 400; ++tries) {
        Matrix X(n, n, p);
        for (auto& B : R.basis) X.axpy(static_cast<long long>(rng() % p), B);
        if (splitting_eigenvalue(X)) {
            R.splitter = X;
            return R;
        }
        // products also help when sums stay unipotent
        Matrix Y = R.basis[rng() % d] * R.basis[rng() % d];
        if (splitting_eigenvalue(Y)) {
            R.splitter = Y;
            return R;
        }
    }
    throw std::runtime_error("endomorphism ring is not local but no splitting endomorphism was found");
}

void decompose_rec(const Module& M0, const Matrix& incl0, std::vector<Summand>& out) {
    if (M0.dim == 0) return;
    Matrix T;
    Module M = weight_module(M0, &T);
    Matrix incl = incl0 * T;
    auto E = hom_basis(M, M).basis;
    auto try_split = [&](const Matrix& X) -> bool {
        auto c = splitting_eigenvalue(X);
        if (!c) return false;
        Matrix Y = power_2k(shift_id(X, *c), M.dim);
        Matrix K = nullspace(Y), I = column_basis(Y);
        Matrix BK, BI;
        Module A = submodule(M, K, &BK), B = submodule(M, I, &BI);
        decompose_rec(A, incl * BK, out);
        decompose_rec(B, incl * BI, out);
        return true;
    };
    for (auto& X : E)
        if (try_split(X)) return;
    EndRing R = end_ring_from(M, E);
    if (R.is_local) {
        out.push_back({M, incl});
        return;
    }
    if (!R.splitter || !try_split(*R.splitter)) throw std::runtime_error("failed to split a module with non-local End");
}

}  // namespace

EndRing end_ring(const Module& M) { return end_ring_from(M, hom_basis(M, M).basis); }

bool is_indecomposable(const Module& M) { return M.dim > 0 && end_ring(M).is_local; }

std::vector<Summand> decompose_with_maps(const Module& M) {
    std::vector<Summand> out;
    decompose_rec(M, Matrix::identity(M.dim, M.p()), out);
    return out;
}

std::vector<Module> decompose(const Module& M) {
    std::vector<Module> out;
    for (auto& s : decompose_with_maps(M)) out.push_back(s.module);
    return out;
}

// ----------------------------------------------------- quiver presentations

namespace {

struct Rel {
    int a, b, c, d;  // arrow a * arrow b == sign * arrow c * arrow d ; c < 0 means == 0
    std::string text;
    int sign = 1;
};

// Exhaustive search over pairs of arrows drawn from 2-dim spaces. Each arrow k
// lives in space group[k]; arrows sharing a space must be independent.
QuiverPresentation search_arrows(const std::vector<std::array<Matrix, 2>>& spaces, const std::vector<int>& group,
                                 const std::vector<Rel>& rels, int p) {
    QuiverPresentation out;
    const int ns = static_cast<int>(spaces.size()), na = static_cast<int>(group.size());
    const int n = spaces[0][0].rows();
    // coordinates of all basis products in a basis of their span
    Span sp(n * n, p);
    std::vector<std::vector<int>> prods;
    for (int s = 0; s < ns; ++s)
        for (int i = 0; i < 2; ++i)
            for (int t = 0; t < ns; ++t)
                for (int j = 0; j < 2; ++j) {
                    auto v = flatten(spaces[s][i] * spaces[t][j]);
                    sp.add(v);
                    prods.push_back(v);
                }
    const int r = sp.dim();
    std::vector<std::vector<int>> pc;
    for (auto& v : prods) pc.push_back(*sp.coords(v));
    auto pidx = [&](int s, int i, int t, int j) { return ((s * 2 + i) * ns + t) * 2 + j; };
    std::vector<int> coef(2 * na, 0);
    long long total = 1;
    for (int k = 0; k < 2 * na; ++k) total *= p;
    auto product = [&](int a, int b, std::vector<long long>& acc) {
        std::fill(acc.begin(), acc.end(), 0);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                long long w = static_cast<long long>(coef[2 * a + i]) * coef[2 * b + j];
                if (!w) continue;
                auto& v = pc[pidx(group[a], i, group[b], j)];
                for (int k = 0; k < r; ++k) acc[k] += w * v[k];
            }
        for (auto& x : acc) x %= p;
    };
    std::vector<long long> L(r), R(r);
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (int k = 0; k < 2 * na; ++k, c /= p) coef[k] = static_cast<int>(c % p);
        bool ok = true;
        for (int a = 0; a < na && ok; ++a) {
            if (!coef[2 * a] && !coef[2 * a + 1]) ok = false;
            for (int b = a + 1; b < na && ok; ++b)
                if (group[a] == group[b] &&
                    (static_cast<long long>(coef[2 * a]) * coef[2 * b + 1] - static_cast<long long>(coef[2 * a + 1]) * coef[2 * b]) % p == 0)
                    ok = false;
        }
        for (size_t q = 0; q < rels.size() && ok; ++q) {
            product(rels[q].a, rels[q].b, L);
            if (rels[q].c >= 0) {
                product(rels[q].c, rels[q].d, R);
                for (auto& x : R) x = (x * rels[q].sign % p + p) % p;
            } else {
                std::fill(R.begin(), R.end(), 0);
            }
            ok = L == R;
        }
        if (!ok) continue;
        for (int a = 0; a < na; ++a) {
            Matrix X(n, n, p);
            X.axpy(coef[2 * a], spaces[group[a]][0]);
            X.axpy(coef[2 * a + 1], spaces[group[a]][1]);
            out.arrows.push_back(std::move(X));
        }
        // exact re-check with the actual matrices
        for (auto& rel : rels) {
            Matrix lhs = out.arrows[rel.a] * out.arrows[rel.b];
            Matrix rhs = rel.c >= 0 ? (out.arrows[rel.c] * out.arrows[rel.d]).scaled(rel.sign) : Matrix(n, n, p);
            if (lhs != rhs) throw std::logic_error("arrow search accepted a failing relation: " + rel.text);
            out.relations.push_back(rel.text);
        }
        out.found = true;
        return out;
    }
    out.detail = "no choice of arrows satisfies the relations";
    return out;
}

}  // namespace

QuiverPresentation local_presentation(const Module& P, LocalRelations rel) {
    QuiverPresentation out;
    EndRing E = end_ring(P);
    out.end_dim = E.dim();
    if (!E.is_local) {
        out.detail = "End is not local";
        return out;
    }
    const int n = P.dim, p = P.p();
    Span sq(n * n, p);
    for (auto& a : E.radical)
        for (auto& b : E.radical) sq.add(flatten(a * b));
    std::vector<Matrix> top;
    Span ext = sq;
    for (auto& a : E.radical)
        if (ext.add(flatten(a))) top.push_back(a);
    if (top.size() != 2) {
        out.detail = "rad/rad^2 has dimension " + std::to_string(top.size());
        return out;
    }
    std::vector<Rel> rels;
    if (rel == LocalRelations::commutative)
        rels = {{0, 0, 1, 1, "x^2 = y^2"}, {0, 1, -1, -1, "xy = 0"}, {1, 0, -1, -1, "yx = 0"}};
    else
        rels = {{0, 0, -1, -1, "x^2 = 0"}, {1, 1, -1, -1, "y^2 = 0"}, {0, 1, 1, 0, "xy = -yx", -1}};
    auto res = search_arrows({{top[0], top[1]}}, {0, 0}, rels, p);
    // the exterior relations alone are met by x = y; insist xy != 0
    if (res.found && rel == LocalRelations::exterior && (res.arrows[0] * res.arrows[1]).is_zero()) {
        res.found = false;
        res.detail = "xy = 0";
    }
    res.end_dim = out.end_dim;
    return res;
}

QuiverPresentation pair_presentation(const Module& P, const Module& Q) {
    QuiverPresentation out;
    Module S = direct_sum(P, Q);
    out.end_dim = hom_dim(S, S);
    const int p = P.p(), n = S.dim;
    auto QP = hom_basis(Q, P).basis, PQ = hom_basis(P, Q).basis;
    if (QP.size() != 2 || PQ.size() != 2) {
        out.detail = "Hom spaces between the summands have dimensions " + std::to_string(QP.size()) + " and " +
                     std::to_string(PQ.size());
        return out;
    }
    auto embed = [&](const Matrix& h, int r0, int c0) {
        Matrix X(n, n, p);
        X.set_block(r0, c0, h);
        return X;
    };
    std::array<Matrix, 2> U1{embed(QP[0], 0, P.dim), embed(QP[1], 0, P.dim)};
    std::array<Matrix, 2> U2{embed(PQ[0], P.dim, 0), embed(PQ[1], P.dim, 0)};
    // arrows: 0 = x1, 1 = y1, 2 = x2, 3 = y2
    auto res = search_arrows({U1, U2}, {0, 0, 1, 1},
                             {{0, 2, 1, 3, "x1 x2 = y1 y2"},
                              {2, 0, 3, 1, "x2 x1 = y2 y1"},
                              {0, 3, -1, -1, "x1 y2 = 0"},
                              {2, 1, -1, -1, "x2 y1 = 0"},
                              {1, 2, -1, -1, "y1 x2 = 0"},
                              {3, 0, -1, -1, "y2 x1 = 0"}},
                             p);
    res.end_dim = out.end_dim;
    return res;
}

// ------------------------------------------------------------ isomorphism

std::string to_string(IsoOutcome o) {
    switch (o) {
        case IsoOutcome::yes: return "yes";
        case IsoOutcome::no: return "no";
        case IsoOutcome::indeterminate: return "indeterminate";
    }
    return "?";
}

IsoResult is_isomorphic(const Module& M, const Module& N, uint64_t seed) {
    same_alg(M, N);
    IsoResult r;
    const int p = M.p();
    if (M.dim != N.dim) {
        r.outcome = IsoOutcome::no;
        r.stage = "dims";
        r.reason = "dimensions " + std::to_string(M.dim) + " and " + std::to_string(N.dim);
        return r;
    }
    if (M.dim == 0) {
        r.outcome = IsoOutcome::yes;
        r.stage = "dims";
        r.witness = Matrix(0, 0, p);
        return r;
    }
    auto H = hom_basis(M, N).basis;
    if (H.empty()) {
        r.outcome = IsoOutcome::no;
        r.stage = "hom";
        r.reason = "Hom(M, N) = 0";
        return r;
    }
    auto found = [&](const Matrix& X, const char* stage) {
        r.outcome = IsoOutcome::yes;
        r.stage = stage;
        r.witness = X;
        return r;
    };
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 64; ++t) {
        Matrix X(N.dim, M.dim, p);
        for (auto& B : H) X.axpy(static_cast<long long>(rng() % p), B);
        if (rank(X) == M.dim) return found(X, "random");
    }
    const int h = static_cast<int>(H.size());
    if (h <= 3) {
        long long total = 1;
        for (int i = 0; i < h; ++i) total *= p;
        for (long long code = 1; code < total; ++code) {
            Matrix X(N.dim, M.dim, p);
            long long c = code;
            for (int i = 0; i < h; ++i, c /= p) X.axpy(c % p, H[i]);
            if (rank(X) == M.dim) return found(X, "exhaustive");
        }
        r.outcome = IsoOutcome::no;
        r.stage = "exhaustive";
        r.reason = "no invertible map among all " + std::to_string(total) + " elements of Hom(M, N)";
        return r;
    }
    int eM = hom_dim(M, M), eN = hom_dim(N, N), hNM = hom_dim(N, M);
    if (eM != eN || eM != h || hNM != h) {
        r.outcome = IsoOutcome::no;
        r.stage = "structural";
        r.reason = "dim End(M)=" + std::to_string(eM) + ", End(N)=" + std::to_string(eN) +
                   ", Hom(M,N)=" + std::to_string(h) + ", Hom(N,M)=" + std::to_string(hNM);
        return r;
    }
    if (simples_known(M.alg) && composition_factors(M) != composition_factors(N)) {
        r.outcome = IsoOutcome::no;
        r.stage = "structural";
        r.reason = "composition factors differ";
        return r;
    }
    EndRing R = end_ring(M);
    if (R.is_local) {
        // an isomorphism exists iff some g f lies outside rad End(M)
        auto G = hom_basis(N, M).basis;
        Span rad(M.dim * M.dim, p);
        for (auto& k : R.radical) rad.add(flatten(k));
        for (auto& f : H)
            for (auto& g : G)
                if (!rad.contains(flatten(g * f))) return found(f, "fitting");
        r.outcome = IsoOutcome::no;
        r.stage = "fitting";
        r.reason = "every composite N -> M -> N... M -> N -> M lies in rad End(M)";
        return r;
    }
    r.outcome = IsoOutcome::indeterminate;
    r.stage = "exhausted";
    r.reason = "search found no invertible map and no obstruction";
    return r;
}

// ------------------------------------------------------ simples, projectives

namespace {

std::mutex cache_mu;
std::map<std::string, std::vector<Module>> simple_cache;
std::map<std::string, std::vector<ProjectiveData>> proj_cache;

std::vector<Module> compute_simples(const AlgebraPtr& A) {
    const std::string& nm = A->name();
    if (nm == "osp12" || nm == "sl2" || nm == "osp12_smash" || nm == "sl2_smash") return preset_simples(A);
    // generators must span a nilpotent two-sided ideal: no product of a
    // generator with a monomial reaches the unit, and long words vanish
    for (int g = 0; g < A->ngens(); ++g)
        for (int m = 0; m < A->dim(); ++m)
            for (auto [idx, c] : A->lmul(g, m))
                if (idx == 0 && c) throw usage_error("simple modules unknown for algebra " + nm);
    std::vector<std::vector<int>> layer{A->unit().coeffs()};
    for (int step = 0; step <= A->dim() && !layer.empty(); ++step) {
        std::vector<std::vector<int>> next;
        Span sp(A->dim(), A->p());
        for (auto& v : layer)
            for (int g = 0; g < A->ngens(); ++g) {
                auto w = A->apply_generator(g, v);
                if (sp.add(w)) next.push_back(w);
            }
        layer = std::move(next);
    }
    if (!layer.empty()) throw usage_error("simple modules unknown for algebra " + nm);
    return {trivial_module(A)};
}

// ad-weights of generators under each additive toral (h-like) generator
std::vector<std::vector<int>> additive_weights(const AlgebraPtr& A) {
    std::vector<std::vector<int>> out;
    for (int t : toral_gens(A)) {
        std::vector<int> w(A->ngens());
        bool ok = true;
        for (int g = 0; g < A->ngens() && ok; ++g) {
            Element x = A->generator(g), h = A->generator(t);
            Element c = h * x - x * h;
            ok = false;
            for (int a = 0; a < A->p(); ++a)
                if (c == x.scaled(a)) {
                    w[g] = a;
                    ok = true;
                    break;
                }
        }
        if (ok) out.push_back(w);
    }
    return out;
}

std::vector<ProjectiveData> compute_projectives(const AlgebraPtr& A) {
    const auto& S = simples(A);
    const int p = A->p(), D = A->dim();
    int rows = 0;
    for (auto& s : S) rows += s.dim * s.dim;
    Matrix Rm(rows, D, p);
    for (int m = 0; m < D; ++m) {
        int off = 0;
        for (auto& s : S) {
            Matrix X = act_monomial(s, m);
            for (int i = 0; i < s.dim; ++i)
                for (int j = 0; j < s.dim; ++j) Rm.set(off + i * s.dim + j, m, X.at(i, j));
            off += s.dim * s.dim;
        }
    }
    auto weights = additive_weights(A);
    std::vector<ProjectiveData> out;
    int off = 0;
    for (size_t k = 0; k < S.size(); ++k) {
        Matrix target(rows, 1, p);
        target.set(off, 0, 1);  // E_11 on S_k
        off += S[k].dim * S[k].dim;
        auto a = solve_one(Rm, target);
        if (!a) throw std::runtime_error("algebra does not map onto the product of End(S)");
        std::vector<int> c = a->col(0);
        // keep the even, weight-zero part
        for (int m = 0; m < D; ++m) {
            if (!c[m]) continue;
            bool keep = A->monomial_parity(m) == 0;
            Exps e = A->exps(m);
            for (auto& w : weights) {
                long long s = 0;
                for (int g = 0; g < A->ngens(); ++g) s += static_cast<long long>(e[g]) * w[g];
                keep = keep && s % p == 0;
            }
            if (!keep) c[m] = 0;
        }
        Element e(A, c);
        for (int it = 0; it < 64; ++it) {
            Element e2 = e * e;
            if (e2 == e) break;
            e = e2.scaled(3) - (e2 * e).scaled(2);
            if (it == 63) throw std::runtime_error("idempotent lifting did not converge");
        }
        // spin A e
        Span sp(D, p);
        std::vector<std::vector<int>> vecs;
        ProjectiveData pd;
        pd.idempotent = e;
        sp.add(e.coeffs());
        vecs.push_back(e.coeffs());
        pd.tree.push_back({-1, -1});
        for (size_t t = 0; t < vecs.size(); ++t)
            for (int g = 0; g < A->ngens(); ++g) {
                auto w = A->apply_generator(g, vecs[t]);
                if (sp.add(w)) {
                    vecs.push_back(w);
                    pd.tree.push_back({static_cast<int>(t), g});
                }
            }
        const int n = static_cast<int>(vecs.size());
        std::vector<Matrix> act;
        for (int g = 0; g < A->ngens(); ++g) {
            Matrix X(n, n, p);
            for (int t = 0; t < n; ++t) {
                auto cc = sp.coords(A->apply_generator(g, vecs[t]));
                for (int s = 0; s < n; ++s) X.set(s, t, (*cc)[s]);
            }
            act.push_back(std::move(X));
        }
        // the root carries the parity of the head vector of S_k
        std::vector<int> par(n, S[k].parity[0]);
        for (int t = 0; t < n; ++t)
            for (int m = 0; m < D; ++m)
                if (vecs[t][m]) {
                    par[t] ^= A->monomial_parity(m);
                    break;
                }
        pd.module = make_module_raw(A, std::move(act), std::move(par), "P(" + S[k].label + ")");
        out.push_back(std::move(pd));
    }
    return out;
}

}  // namespace

const std::vector<Module>& simples(const AlgebraPtr& alg) {
    const std::string key = alg->ref();
    {
        std::lock_guard<std::mutex> lk(cache_mu);
        auto it = simple_cache.find(key);
        if (it != simple_cache.end()) return it->second;
    }
    auto s = compute_simples(alg);
    std::lock_guard<std::mutex> lk(cache_mu);
    return simple_cache.emplace(key, std::move(s)).first->second;
}

const std::vector<ProjectiveData>& projectives(const AlgebraPtr& alg) {
    const std::string key = alg->ref();
    {
        std::lock_guard<std::mutex> lk(cache_mu);
        auto it = proj_cache.find(key);
        if (it != proj_cache.end()) return it->second;
    }
    auto s = compute_projectives(alg);
    std::lock_guard<std::mutex> lk(cache_mu);
    return proj_cache.emplace(key, std::move(s)).first->second;
}

Matrix radical_basis(const Module& M) {
    const int p = M.p();
    if (M.dim == 0) return Matrix(0, 0, p);
    std::vector<Matrix> maps;
    for (auto& S : simples(M.alg))
        for (auto& f : hom_basis(M, S).basis) maps.push_back(f);
    if (maps.empty()) return Matrix::identity(M.dim, p);
    int rows = 0;
    for (auto& f : maps) rows += f.rows();
    return nullspace(vstack(maps, M.dim, p));
}

std::vector<int> head_multiplicities(const Module& M) {
    std::vector<int> out;
    for (auto& S : simples(M.alg)) out.push_back(hom_dim(M, S));
    return out;
}

std::vector<int> composition_factors(const Module& M) {
    const auto& S = simples(M.alg);
    std::vector<int> out(S.size(), 0);
    Module cur = M;
    while (cur.dim > 0) {
        auto h = head_multiplicities(cur);
        int total = 0;
        for (size_t i = 0; i < S.size(); ++i) {
            out[i] += h[i];
            total += h[i] * S[i].dim;
        }
        Matrix R = radical_basis(cur);
        if (R.cols() + total != cur.dim) throw std::logic_error("radical layer does not match head");
        if (R.cols() == 0) break;
        cur = submodule(cur, R);
    }
    return out;
}

// ---------------------------------------------------------------- resolutions

Cover projective_cover(const Module& M0) {
    Cover cv;
    const int p = M0.p();
    if (M0.dim == 0) {
        cv.P = zero_module(M0.alg);
        cv.map = Matrix(0, 0, p);
        return cv;
    }
    Matrix T;
    Module M = weight_module(M0, &T);
    const auto& P = projectives(M.alg);
    auto gens = head_generators(M);
    std::stable_sort(gens.begin(), gens.end(), [](const HeadGen& a, const HeadGen& b) { return a.simple < b.simple; });
    std::vector<Module> parts;
    std::vector<Matrix> cols;
    for (auto& hg : gens) {
        const ProjectiveData& pd = P[hg.simple];
        const int shift = hg.parity ^ pd.module.parity[0];
        Module Pi = shift ? parity_change(pd.module) : pd.module;
        const int n = pd.module.dim;
        Matrix C(M.dim, n, p);
        std::vector<std::vector<int>> img(n);
        for (int t = 0; t < n; ++t) {
            auto [par, g] = pd.tree[t];
            if (par < 0) img[t] = hg.vec;
            else img[t] = (M.act[g] * Matrix::column(img[par], p)).col(0);
            C.set_col(t, img[t]);
        }
        parts.push_back(Pi);
        cols.push_back(C);
        cv.summands.push_back(hg.simple);
        cv.shifts.push_back(shift);
    }
    cv.P = direct_sum(parts);
    cv.map = T * hstack(cols, M.dim, p);
    if (rank(cv.map) != M0.dim) throw std::logic_error("projective cover map is not surjective");
    return cv;
}

std::vector<int> Resolution::ranks() const {
    std::vector<int> r;
    for (auto& s : summands) r.push_back(static_cast<int>(s.size()));
    return r;
}

std::vector<int> Resolution::total_dims() const {
    std::vector<int> r;
    for (auto& m : P) r.push_back(m.dim);
    return r;
}

Resolution minimal_resolution(const Module& M, int D) {
    if (D < 0) throw usage_error("resolution depth must be non-negative");
    if (D > 16) throw usage_error("resolution depth above 16 is outside the time budget");
    Resolution R;
    const int p = M.p();
    R.syzygy.push_back(M);
    for (int n = 0; n <= D; ++n) {
        const Module& Om = R.syzygy[n];
        Cover cv = projective_cover(Om);
        R.P.push_back(cv.P);
        R.summands.push_back(cv.summands);
        R.shifts.push_back(cv.shifts);
        R.d.push_back(n == 0 ? cv.map : R.inclusion[n - 1] * cv.map);
        if (cv.P.dim == 0) {
            R.inclusion.push_back(Matrix(0, 0, p));
            R.syzygy.push_back(zero_module(M.alg));
            continue;
        }
        Matrix K = nullspace(cv.map);
        if (K.cols() == 0) {
            R.inclusion.push_back(Matrix(cv.P.dim, 0, p));
            R.syzygy.push_back(zero_module(M.alg));
            continue;
        }
        Matrix used, W;
        Module sub = submodule(cv.P, K, &used);
        Module wsub = weight_module(sub, &W);
        wsub.label = "Omega^" + std::to_string(n + 1);
        R.inclusion.push_back(used * W);
        R.syzygy.push_back(std::move(wsub));
    }
    return R;
}

ResolutionCheck verify_resolution(const Module& M, const Resolution& R) {
    ResolutionCheck c;
    const int D = static_cast<int>(R.P.size()) - 1;
    if (rank(R.d[0]) != M.dim) {
        c.exact = false;
        c.detail = "augmentation not surjective";
    }
    for (int n = 1; n <= D; ++n) {
        const Matrix& dn = R.d[n];
        if (dn.cols() == 0 || dn.rows() == 0) continue;
        Matrix comp = R.d[n - 1] * dn;
        if (!comp.is_zero()) {
            c.complex = false;
            c.detail = "d_" + std::to_string(n - 1) + " d_" + std::to_string(n) + " != 0";
        }
        Matrix rad = radical_basis(R.P[n - 1]);
        if (rank(hstack({rad, dn}, dn.rows(), dn.p())) != rank(rad)) {
            c.minimal = false;
            c.detail = "image of d_" + std::to_string(n) + " leaves the radical";
        }
        int ker = R.d[n - 1].cols() - rank(R.d[n - 1]);
        if (ker != rank(dn)) {
            c.exact = false;
            c.detail = "homology in degree " + std::to_string(n - 1);
        }
    }
    return c;
}

int ext_dim(const Resolution& R, const Module& N, int n) {
    if (n < 0 || n >= static_cast<int>(R.syzygy.size())) throw usage_error("Ext degree exceeds the computed resolution");
    if (n == 0) return hom_dim(R.syzygy[0], N);
    return hom_dim(R.syzygy[n], N) - hom_dim(R.P[n - 1], N) + hom_dim(R.syzygy[n - 1], N);
}

int ext_dim(const Module& M, const Module& N, int n) { return ext_dim(minimal_resolution(M, std::max(0, n - 1)), N, n); }

int ext_dim_invariant(const Resolution& R, const Module& N, int n) {
    if (n < 0 || n >= static_cast<int>(R.syzygy.size())) throw usage_error("Ext degree exceeds the computed resolution");
    if (n == 0) return hom_even_dim(R.syzygy[0], N);
    return hom_even_dim(R.syzygy[n], N) - hom_even_dim(R.P[n - 1], N) + hom_even_dim(R.syzygy[n - 1], N);
}

int ext_dim_super(const Module& M, const Module& N, int n) {
    auto lift = [](const Module& X) {
        const std::string& nm = X.alg->name();
        if (nm == "osp12" || nm == "sl2") return to_smash_module(X);
        if (nm.ends_with("_smash")) return X;
        throw usage_error("super Ext needs a preset module");
    };
    return ext_dim(lift(M), lift(N), n);
}

Complexity complexity_from_dims(const std::vector<int>& dims) {
    Complexity c;
    c.dims = dims;
    std::vector<long long> cur(dims.begin(), dims.end());
    for (int k = 0; cur.size() >= 3; ++k) {
        c.differences.push_back(cur);
        size_t s = cur.size();
        if (cur[s - 1] == cur[s - 2] && cur[s - 2] == cur[s - 3]) {
            c.conclusive = true;
            c.value = k + 1;
            return c;
        }
        std::vector<long long> next;
        for (size_t i = 1; i < cur.size(); ++i) next.push_back(cur[i] - cur[i - 1]);
        cur = std::move(next);
    }
    return c;
}

Complexity complexity_estimate(const Module& M, int D) { return complexity_from_dims(minimal_resolution(M, D).total_dims()); }

std::string to_string(Wildness w) {
    switch (w) {
        case Wildness::wild: return "wild";
        case Wildness::not_decided: return "not-decided";
        case Wildness::inconclusive: return "inconclusive";
    }
    return "?";
}

WildnessVerdict wildness_verdict(const AlgebraPtr& alg, int D) {
    WildnessVerdict v;
    v.complexity = complexity_estimate(trivial_module(alg), D);
    if (!v.complexity.conclusive) v.verdict = Wildness::inconclusive;
    else v.verdict = v.complexity.value >= 3 ? Wildness::wild : Wildness::not_decided;
    return v;
}

std::vector<std::vector<int>> blocks(const std::vector<Module>& S) {
    const int k = static_cast<int>(S.size());
    std::vector<int> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int i = 0; i < k; ++i) {
        Cover cv = projective_cover(S[i]);
        Matrix K = nullspace(cv.map);
        if (K.cols() == 0) continue;
        Module Om = submodule(cv.P, K);
        for (int j = 0; j < k; ++j)
            if (hom_dim(Om, S[j]) > 0) parent[find(i)] = find(j);
    }
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < k; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [r, g] : groups) out.push_back(g);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> blocks(const AlgebraPtr& alg) { return blocks(simples(alg)); }

// ----------------------------------------------------------------- extensions

std::string to_string(ExtensionOutcome o) {
    switch (o) {
        case ExtensionOutcome::nonsplit: return "non-split";
        case ExtensionOutcome::split: return "split";
        case ExtensionOutcome::no_embedding: return "no-embedding";
    }
    return "?";
}

ExtensionCertificate nonsplit_extension_check(const Module& A, const Module& B, const Module& M, uint64_t seed) {
    same_alg(A, M);
    same_alg(B, M);
    ExtensionCertificate cert;
    const int p = M.p();
    if (A.dim + B.dim != M.dim) {
        cert.detail = "dimensions do not add up";
        return cert;
    }
    auto H = hom_basis(A, M).basis;
    std::vector<Matrix> cands = H;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 64 && !H.empty(); ++t) {
        Matrix X(M.dim, A.dim, p);
        for (auto& h : H) X.axpy(static_cast<long long>(rng() % p), h);
        cands.push_back(X);
    }
    for (auto& iota : cands) {
        if (rank(iota) != A.dim) continue;
        Module Q = quotient(M, iota);
        IsoResult iso = is_isomorphic(Q, B, seed);
        if (iso.outcome != IsoOutcome::yes) continue;
        cert.iota = iota;
        cert.quotient_iso = iso.witness;
        // retraction r with r iota = id_A?
        auto Rb = hom_basis(M, A).basis;
        const int sz = A.dim * A.dim;
        Matrix sys(sz, static_cast<int>(Rb.size()), p);
        for (size_t k = 0; k < Rb.size(); ++k) {
            auto v = flatten(Rb[k] * iota);
            for (int i = 0; i < sz; ++i) sys.set(i, static_cast<int>(k), v[i]);
        }
        Matrix rhs = Matrix::column(flatten(Matrix::identity(A.dim, p)), p);
        if (!Rb.empty() && solve_one(sys, rhs)) {
            cert.outcome = ExtensionOutcome::split;
            cert.detail = "a retraction M -> A exists";
        } else {
            cert.outcome = ExtensionOutcome::nonsplit;
            cert.detail = "r iota = id has no solution among " + std::to_string(Rb.size()) + " homs M -> A";
        }
        return cert;
    }
    cert.detail = "no injective map A -> M with cokernel isomorphic to B";
    return cert;
}

// ---------------------------------------------------------------- catalogue

namespace {

std::vector<int> h_character(const Module& M) {
    int h = M.alg->gen_index("h");
    std::vector<int> out(M.p(), 0);
    if (h < 0) return out;
    for (int c = 0; c < M.p(); ++c) out[c] = M.dim - rank(shift_id(M.act[h], c));
    return out;
}

}  // namespace

std::optional<FamilyParams> identify(const Module& M0, int nmax) {
    Module M = M0.alg->name().ends_with("_smash") ? forget_smash(M0) : M0;
    const int p = M.p();
    std::vector<FamilyParams> cands;
    if (M.alg->name() == "osp12") {
        for (int l = 0; l < p; ++l) {
            cands.push_back({Family::P, l});
            for (int n = 0; n <= nmax; ++n) {
                cands.push_back({Family::Vn, l, n});
                cands.push_back({Family::Vtn, l, n});
            }
            for (int n = 1; n <= nmax; ++n) {
                cands.push_back({Family::Wn, l, n});
                cands.push_back({Family::Wtn, l, n});
                for (int c = 1; c < p; ++c) cands.push_back({Family::T, l, n, c, 1});
            }
        }
    } else if (M.alg->name() == "sl2") {
        for (int l = 0; l < p; ++l) {
            cands.push_back({Family::V0, l});
            cands.push_back({Family::P0, l});
        }
    } else {
        throw usage_error("no catalogue for algebra " + M.alg->name());
    }
    auto hc = h_character(M);
    for (auto& q : cands) {
        Module C = make_module(q, p);
        if (C.dim != M.dim || h_character(C) != hc) continue;
        if (is_isomorphic(C, M).outcome == IsoOutcome::yes) return q;
    }
    return std::nullopt;
}

}  // namespace sa

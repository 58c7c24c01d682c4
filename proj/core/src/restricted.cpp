#include "superalg/restricted.hpp"

#include <random>
#include <sstream>

#include "superalg/field.hpp"

namespace sa {

namespace {

std::string vec_str(const LieSuperData& L, const std::vector<int>& v) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < L.dim(); ++i) {
        if (!v[i]) continue;
        os << (first ? "" : " + ") << v[i] << L.names[i];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::vector<int> axpy(std::vector<int> a, int c, const std::vector<int>& b, int p) {
    for (size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + c * b[i]) % p;
    return a;
}

void set_br(LieSuperData& L, const std::string& a, const std::string& b, const std::vector<std::pair<std::string, int>>& val) {
    Field F(L.p);
    int i = L.index(a), j = L.index(b);
    std::vector<int> v(L.dim(), 0);
    for (auto& [n, c] : val) v[L.index(n)] = F.reduce(c);
    L.bracket[i][j] = v;
    // super antisymmetry: [b,a] = -(-1)^{|a||b|}[a,b]
    int sign = (L.parity[i] & L.parity[j]) ? 1 : -1;
    std::vector<int> w(L.dim());
    for (int k = 0; k < L.dim(); ++k) w[k] = F.reduce(sign * v[k]);
    L.bracket[j][i] = w;
}

LieSuperData empty_data(int p, std::vector<std::string> names, std::vector<int> parity) {
    LieSuperData L;
    L.p = p;
    L.names = std::move(names);
    L.parity = std::move(parity);
    int n = L.dim();
    L.bracket.assign(n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
    L.pmap.assign(n, std::vector<int>(n, 0));
    return L;
}

}  // namespace

int LieSuperData::index(const std::string& name) const {
    for (int i = 0; i < dim(); ++i)
        if (names[i] == name) return i;
    throw usage_error("unknown basis element " + name);
}

std::vector<int> LieSuperData::br(const std::vector<int>& x, const std::vector<int>& y) const {
    std::vector<int> out(dim(), 0);
    for (int i = 0; i < dim(); ++i) {
        if (!x[i]) continue;
        for (int j = 0; j < dim(); ++j) {
            if (!y[j]) continue;
            int c = x[i] * y[j] % p;
            const auto& b = bracket[i][j];
            for (int k = 0; k < dim(); ++k) out[k] = (out[k] + c * b[k]) % p;
        }
    }
    return out;
}

std::vector<int> jacobson_terms(const LieSuperData& L, const std::vector<int>& x, const std::vector<int>& y) {
    const int p = L.p;
    Field F(p);
    // polynomial in t with vector coefficients, starting from the constant x
    std::vector<std::vector<int>> P{x};
    for (int step = 0; step < p - 1; ++step) {
        std::vector<std::vector<int>> Q(P.size() + 1, std::vector<int>(L.dim(), 0));
        for (size_t d = 0; d < P.size(); ++d) {
            Q[d + 1] = axpy(Q[d + 1], 1, L.br(x, P[d]), p);
            Q[d] = axpy(Q[d], 1, L.br(y, P[d]), p);
        }
        P = std::move(Q);
    }
    std::vector<int> out(L.dim(), 0);
    for (int i = 1; i <= p - 1; ++i) out = axpy(out, F.inv(i), P[i - 1], p);
    return out;
}

std::vector<int> pmap_extended(const LieSuperData& L, const std::vector<int>& x) {
    const int p = L.p;
    Field F(p);
    std::vector<int> acc(L.dim(), 0), res(L.dim(), 0);
    for (int i = 0; i < L.dim(); ++i) {
        if (!x[i]) continue;
        if (L.parity[i]) throw usage_error("p-map is only defined on even vectors");
        std::vector<int> z(L.dim(), 0);
        z[i] = x[i];
        res = axpy(res, F.pow(x[i], p), L.pmap[i], p);
        res = axpy(res, 1, jacobson_terms(L, acc, z), p);
        acc[i] = x[i];
    }
    return res;
}

AxiomReport verify_restricted_axioms(const LieSuperData& L, uint64_t seed, int samples) {
    AxiomReport rep;
    const int n = L.dim(), p = L.p;
    Field F(p);
    auto unit = [&](int i) {
        std::vector<int> v(n, 0);
        v[i] = 1;
        return v;
    };
    // bracket sanity: homogeneous and super antisymmetric
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ++rep.checked;
            const auto& b = L.bracket[i][j];
            int sign = (L.parity[i] & L.parity[j]) ? 1 : -1;
            for (int k = 0; k < n; ++k) {
                bool bad = F.reduce(L.bracket[j][i][k]) != F.reduce(sign * b[k]) ||
                           (b[k] && L.parity[k] != ((L.parity[i] + L.parity[j]) & 1));
                if (bad) {
                    rep.pass = false;
                    rep.axiom = "bracket";
                    rep.witness = "(" + L.names[i] + ", " + L.names[j] + ")";
                    return rep;
                }
            }
        }
    // (b) on all pairs of basis vectors with x even
    for (int i = 0; i < n; ++i) {
        if (L.parity[i]) continue;
        for (int j = 0; j < n; ++j) {
            ++rep.checked;
            std::vector<int> lhs = L.br(L.pmap[i], unit(j));
            std::vector<int> rhs = unit(j);
            for (int k = 0; k < p; ++k) rhs = L.br(unit(i), rhs);
            if (lhs != rhs) {
                rep.pass = false;
                rep.axiom = "b";
                rep.witness = "(" + L.names[i] + ", " + L.names[j] + "): [x^[p], y] = " + vec_str(L, lhs) +
                              " but (ad x)^p y = " + vec_str(L, rhs);
                return rep;
            }
        }
    }
    std::mt19937_64 rng(seed);
    std::vector<int> even;
    for (int i = 0; i < n; ++i)
        if (!L.parity[i]) even.push_back(i);
    auto random_even = [&]() {
        std::vector<int> v(n, 0);
        for (int i : even) v[i] = static_cast<int>(rng() % p);
        return v;
    };
    // (a) homogeneity of the extended p-map
    for (int s = 0; s < samples; ++s) {
        ++rep.checked;
        std::vector<int> x = random_even();
        int c = static_cast<int>(rng() % p);
        std::vector<int> cx(n);
        for (int i = 0; i < n; ++i) cx[i] = x[i] * c % p;
        std::vector<int> lhs = pmap_extended(L, cx);
        std::vector<int> rhs = pmap_extended(L, x);
        int cp = F.pow(c, p);
        for (auto& v : rhs) v = v * cp % p;
        if (lhs != rhs) {
            rep.pass = false;
            rep.axiom = "a";
            rep.witness = "c = " + std::to_string(c) + ", x = " + vec_str(L, x);
            return rep;
        }
    }
    // (c) additivity up to the correction terms
    for (int s = 0; s < samples; ++s) {
        ++rep.checked;
        std::vector<int> x = random_even(), y = random_even();
        std::vector<int> xy = axpy(x, 1, y, p);
        std::vector<int> lhs = pmap_extended(L, xy);
        std::vector<int> rhs = axpy(axpy(pmap_extended(L, x), 1, pmap_extended(L, y), p), 1, jacobson_terms(L, x, y), p);
        if (lhs != rhs) {
            rep.pass = false;
            rep.axiom = "c";
            rep.witness = "x = " + vec_str(L, x) + ", y = " + vec_str(L, y);
            return rep;
        }
    }
    return rep;
}

LieSuperData sl2_lie_data(int p) {
    LieSuperData L = empty_data(p, {"e", "f", "h"}, {0, 0, 0});
    set_br(L, "e", "f", {{"h", 1}});
    set_br(L, "h", "e", {{"e", 2}});
    set_br(L, "h", "f", {{"f", -2}});
    L.pmap[L.index("h")][L.index("h")] = 1;
    return L;
}

LieSuperData osp12_lie_data(int p) {
    LieSuperData L = empty_data(p, {"E", "F", "e", "f", "h"}, {1, 1, 0, 0, 0});
    set_br(L, "E", "E", {{"e", 2}});
    set_br(L, "F", "F", {{"f", -2}});
    set_br(L, "E", "F", {{"h", 1}});
    set_br(L, "h", "E", {{"E", 1}});
    set_br(L, "h", "F", {{"F", -1}});
    set_br(L, "e", "F", {{"E", -1}});
    set_br(L, "f", "E", {{"F", -1}});
    set_br(L, "e", "f", {{"h", 1}});
    set_br(L, "h", "e", {{"e", 2}});
    set_br(L, "h", "f", {{"f", -2}});
    L.pmap[L.index("h")][L.index("h")] = 1;
    return L;
}

}  // namespace sa

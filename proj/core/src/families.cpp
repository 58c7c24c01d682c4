#include "superalg/families.hpp"

#include <map>

namespace sa {

namespace {

// Basis vectors are named symbols; actions refer to symbols and go through an
// alias table, so each formula can be written exactly as stated.
class Builder {
public:
    Builder(AlgebraPtr alg) : alg_(std::move(alg)), F_(alg_->p()) {}

    void add(const std::string& name) {
        idx_[name] = static_cast<int>(names_.size());
        names_.push_back(name);
    }
    void alias(const std::string& from, const std::string& to, long long c = 1) { alias_[from] = {to, c}; }
    // gen(src) += c * dst; unknown targets are zero
    void act(const std::string& gen, const std::string& src, const std::string& dst, long long c) {
        entries_.push_back({alg_->gen_index(gen), src, dst, c});
    }
    int field(long long x) const { return F_.reduce(x); }

    Module build(const std::string& label) {
        const int d = static_cast<int>(names_.size());
        std::vector<Matrix> act(alg_->ngens(), Matrix(d, d, alg_->p()));
        for (auto& e : entries_) {
            if (e.gen < 0) throw std::logic_error("unknown generator in family builder");
            auto s = idx_.find(e.src);
            if (s == idx_.end()) throw std::logic_error("unknown source vector " + e.src);
            std::string dst = e.dst;
            long long c = e.c;
            auto a = alias_.find(dst);
            if (a != alias_.end()) {
                dst = a->second.first;
                c *= a->second.second;
            }
            auto t = idx_.find(dst);
            if (t == idx_.end()) continue;
            act[e.gen].add_to(t->second, s->second, c);
        }
        return make_module_raw(alg_, std::move(act), {}, label);
    }

private:
    struct Entry {
        int gen;
        std::string src, dst;
        long long c;
    };
    AlgebraPtr alg_;
    Field F_;
    std::vector<std::string> names_;
    std::map<std::string, int> idx_;
    std::map<std::string, std::pair<std::string, long long>> alias_;
    std::vector<Entry> entries_;
};

std::string v(const std::string& s, int i) { return s + std::to_string(i); }
std::string v(const std::string& s, int i, int m) { return s + std::to_string(i) + "(" + std::to_string(m) + ")"; }

// E-type lowering coefficient shared by the osp families:
// even i: -(i/2), odd i: (top - (i-1)/2)
long long lower_coeff(int i, long long top) { return i % 2 == 0 ? -(i / 2) : top - (i - 1) / 2; }
// F-type lowering coefficient of the twisted families:
// even i: i/2, odd i: (i-1)/2 - lam
long long twisted_coeff(int i, long long lam) { return i % 2 == 0 ? i / 2 : (i - 1) / 2 - lam; }

void check_lambda(int lam, int lo, int hi) {
    if (lam < lo || lam > hi) throw usage_error("lambda out of range");
}

Module simple_osp(AlgebraPtr A, int p, int lam) {
    check_lambda(lam, 0, p - 1);
    Builder b(A);
    for (int i = 0; i <= 2 * lam; ++i) b.add(v("v", i));
    for (int i = 0; i <= 2 * lam; ++i) {
        b.act("h", v("v", i), v("v", i), lam - i);
        b.act("E", v("v", i), v("v", i - 1), lower_coeff(i, lam));
        b.act("F", v("v", i), v("v", i + 1), 1);
    }
    return b.build("V^" + std::to_string(lam));
}

Module verma(AlgebraPtr A, int p, int lam, bool twisted) {
    check_lambda(lam, 0, p - 1);
    Builder b(A);
    for (int i = 0; i < 2 * p; ++i) b.add(v("v", i));
    for (int i = 0; i < 2 * p; ++i) {
        if (!twisted) {
            b.act("h", v("v", i), v("v", i), lam - i);
            b.act("E", v("v", i), v("v", i - 1), lower_coeff(i, lam));
            b.act("F", v("v", i), v("v", i + 1), 1);
        } else {
            b.act("h", v("v", i), v("v", i), i - lam);
            b.act("E", v("v", i), v("v", i + 1), 1);
            b.act("F", v("v", i), v("v", i - 1), twisted_coeff(i, lam));
        }
    }
    return b.build(std::string(twisted ? "Wt^" : "W^") + std::to_string(lam));
}

Module projective_osp(AlgebraPtr A, int p, int mu, Transcription t) {
    check_lambda(mu, 0, p - 1);
    const int lam = p - 1 - mu;  // the module is P^{p-1-lam}
    const int ib = 2 * p - 2 - 2 * lam, jb = 2 * lam;
    Builder b(A);
    for (int i = 0; i <= ib; ++i) b.add(v("b", i));
    for (int i = 0; i <= ib; ++i) b.add(v("a", i));
    for (int j = 0; j <= jb; ++j) b.add(v("x", j));
    for (int j = 0; j <= jb; ++j) b.add(v("y", j));
    const long long top = p - 1 - lam;
    for (int i = 0; i <= ib; ++i) {
        b.act("h", v("b", i), v("b", i), top - i);
        b.act("F", v("b", i), v("b", i + 1), 1);
        if (i % 2 == 0) {
            b.act("E", v("b", i), v("b", i - 1), -(i / 2));
            b.act("E", v("b", i), v("a", i - 1), 1);
        } else {
            b.act("E", v("b", i), v("b", i - 1), top - (i - 1) / 2);
            b.act("E", v("b", i), v("a", i - 1), -1);
        }
        b.act("h", v("a", i), v("a", i), top - i);
        b.act("F", v("a", i), v("a", i + 1), 1);
        b.act("E", v("a", i), v("a", i - 1), lower_coeff(i, top));
    }
    for (int j = 0; j <= jb; ++j) {
        b.act("h", v("y", j), v("y", j), j - lam);
        b.act("E", v("y", j), v("y", j + 1), 1);
        b.act("F", v("y", j), v("y", j - 1), twisted_coeff(j, lam));
        b.act("h", v("x", j), v("x", j), lam - j);
        b.act("F", v("x", j), v("x", j + 1), 1);
        b.act("E", v("x", j), v("x", j - 1), lower_coeff(j, lam));
    }
    b.alias(v("b", 2 * p - 1 - 2 * lam), v("y", 2 * lam));
    b.alias(v("x", 2 * lam + 1), v("a", 0));
    b.alias(v("b", -1), v("x", 2 * lam));
    if (t == Transcription::literal) {
        b.alias(v("y", 2 * lam + 1), v("a", 2 * p - 1 - 2 * lam));
    } else {
        // the stated target a_{2p-1-2lam} is one past the end of the a-chain;
        // FE + EF = h on the last b forces E y_{2lam} = -a_{2p-2-2lam}
        b.alias(v("y", 2 * lam + 1), v("a", 2 * p - 2 - 2 * lam), -1);
        // E b_0 reaches the glued vector b_{-1} = x_{2lam} with coefficient 1
        b.act("E", v("b", 0), v("b", -1), 1);
    }
    return b.build("P^" + std::to_string(mu));
}

Module simple_sl2(AlgebraPtr A, int p, int lam) {
    check_lambda(lam, 0, p - 1);
    Builder b(A);
    for (int i = 0; i <= lam; ++i) b.add(v("v", i));
    for (int i = 0; i <= lam; ++i) {
        b.act("h", v("v", i), v("v", i), lam - 2 * i);
        b.act("e", v("v", i), v("v", i - 1), -static_cast<long long>(i) * (lam + 1 - i));
        b.act("f", v("v", i), v("v", i + 1), -1);
    }
    return b.build("V0^" + std::to_string(lam));
}

Module projective_sl2(AlgebraPtr A, int p, int mu, Transcription t) {
    check_lambda(mu, 0, p - 1);
    if (mu == p - 1) {
        Module S = simple_sl2(A, p, p - 1);
        S.label = "P0^" + std::to_string(mu);
        return S;
    }
    const int lam = p - 2 - mu;  // the module is P0^{p-2-lam}
    const int ib = p - 2 - lam;
    Builder b(A);
    for (int i = 0; i <= ib; ++i) b.add(v("b", i));
    for (int i = 0; i <= ib; ++i) b.add(v("a", i));
    for (int j = 0; j <= lam; ++j) b.add(v("x", j));
    for (int j = 0; j <= lam; ++j) b.add(v("y", j));
    for (int i = 0; i <= ib; ++i) {
        long long c = -static_cast<long long>(i) * (p - lam - 1 - i);
        b.act("h", v("b", i), v("b", i), p - 2 - lam - 2 * i);
        b.act("f", v("b", i), v("b", i + 1), -1);
        b.act("e", v("b", i), v("b", i - 1), c);
        b.act("e", v("b", i), v("a", i - 1), 1);
        b.act("h", v("a", i), v("a", i), p - 2 - lam - 2 * i);
        b.act("e", v("a", i), v("a", i - 1), c);
        b.act("f", v("a", i), v("a", i + 1), -1);
    }
    for (int j = 0; j <= lam; ++j) {
        b.act("h", v("y", j), v("y", j), 2 * j - lam);
        b.act("e", v("y", j), v("y", j + 1), 1);
        b.act("f", v("y", j), v("y", j - 1), -static_cast<long long>(j) * (j - lam - 1));
        b.act("h", v("x", j), v("x", j), lam - 2 * j);
        b.act("f", v("x", j), v("x", j + 1), -1);
        b.act("e", v("x", j), v("x", j - 1), -static_cast<long long>(j) * (lam + 1 - j));
    }
    b.alias(v("b", p - 1 - lam), v("y", lam));
    b.alias(v("y", lam + 1), v("a", p - 2 - lam));
    b.alias(v("x", lam + 1), v("a", 0));
    b.alias(v("b", -1), v("x", lam));
    if (t == Transcription::resolved) b.act("e", v("b", 0), v("b", -1), 1);
    return b.build("P0^" + std::to_string(mu));
}

Module string_v(AlgebraPtr A, int p, int lam, int n, bool twisted) {
    check_lambda(lam, 0, p - 1);
    if (n < 0) throw usage_error("n must be non-negative");
    const int ub = 2 * p - 2 * lam - 2, vb = 2 * lam;
    Builder b(A);
    for (int m = 0; m <= n; ++m) {
        if (m >= 1)
            for (int u = 0; u <= ub; ++u) b.add(v("a", u, m - 1));
        for (int w = 0; w <= vb; ++w) b.add(v("e", w, m));
    }
    const long long top = p - 1 - lam;
    for (int m = 0; m <= n; ++m) {
        for (int w = 0; w <= vb; ++w) {
            std::string s = v("e", w, m);
            b.act("h", s, s, lam - w);
            b.act("F", s, v("e", w + 1, m), 1);
            b.act("E", s, v("e", w - 1, m), lower_coeff(w, lam));
            if (!twisted && w == 0) b.act("E", s, v("a", ub, m), 1);
        }
        if (m == 0) continue;
        for (int u = 0; u <= ub; ++u) {
            std::string s = v("a", u, m - 1);
            b.act("h", s, s, top - u);
            b.act("F", s, v("a", u + 1, m - 1), 1);
            b.act("E", s, v("a", u - 1, m - 1), lower_coeff(u, top));
            if (twisted && u == 0) b.act("E", s, v("e", vb, m), 1);
        }
        if (!twisted) b.alias(v("e", vb + 1, m), v("a", 0, m - 1));
        else b.alias(v("a", ub + 1, m - 1), v("e", 0, m - 1));
    }
    std::string label = std::string(twisted ? "Vt^" : "V^") + std::to_string(lam) + "(" + std::to_string(n) + ")";
    return b.build(label);
}

Module string_w(AlgebraPtr A, int p, int lam, int n, bool twisted, Transcription t) {
    check_lambda(lam, 0, p - 1);
    if (n < 1) throw usage_error("n must be positive");
    Builder b(A);
    const std::string s = twisted ? "f" : "e";
    for (int m = 1; m <= n; ++m)
        for (int u = 0; u < 2 * p; ++u) b.add(v(s, u, m));
    for (int m = 1; m <= n; ++m)
        for (int u = 0; u < 2 * p; ++u) {
            std::string x = v(s, u, m);
            if (!twisted) {
                b.act("h", x, x, lam - u);
                b.act("F", x, v(s, u + 1, m), 1);
                b.act("E", x, v(s, u - 1, m), lower_coeff(u, lam));
                if (u == 0) b.act("E", x, v(s, 2 * p - 1, m + 1), 1);
            } else {
                b.act("h", x, x, t == Transcription::literal ? lam - u : u - lam);
                b.act("E", x, v(s, u + 1, m), 1);
                b.act("F", x, v(s, u - 1, m), twisted_coeff(u, lam));
                if (u == 0) b.act("F", x, v(s, 2 * p - 1, m - 1), 1);
            }
        }
    std::string label = std::string(twisted ? "Wt^" : "W^") + std::to_string(lam) + "(" + std::to_string(n) + ")";
    return b.build(label);
}

Module tube(AlgebraPtr A, int p, int lam, int n, int s1, int s2, bool twisted) {
    check_lambda(lam, 0, p - 1);
    if (n < 1) throw usage_error("n must be positive");
    Field F(p);
    if (F.reduce(s1) == 0 || F.reduce(s2) == 0) throw usage_error("s components must be nonzero");
    Builder b(A);
    const std::string s = twisted ? "f" : "e", sh = twisted ? "fh" : "eh";
    for (const auto& sym : {s, sh})
        for (int m = 1; m <= n; ++m)
            for (int u = 0; u < 2 * p; ++u) b.add(v(sym, u, m));
    for (int m = 1; m <= n; ++m)
        for (int u = 0; u < 2 * p; ++u)
            for (int hat = 0; hat < 2; ++hat) {
                const std::string& me = hat ? sh : s;
                const std::string& other = hat ? s : sh;
                const long long sc = hat ? s2 : s1;
                std::string x = v(me, u, m);
                if (!twisted) {
                    b.act("h", x, x, lam - u);
                    b.act("F", x, v(me, u + 1, m), 1);
                    b.act("E", x, v(me, u - 1, m), lower_coeff(u, lam));
                    if (u == 0) {
                        b.act("E", x, v(other, 2 * p - 1, m), sc);
                        b.act("E", x, v(other, 2 * p - 1, m - 1), 1);
                    }
                } else {
                    b.act("h", x, x, u - lam);
                    b.act("E", x, v(me, u + 1, m), 1);
                    b.act("F", x, v(me, u - 1, m), twisted_coeff(u, lam));
                    if (u == 0) {
                        b.act("F", x, v(other, 2 * p - 1, m), sc);
                        b.act("F", x, v(other, 2 * p - 1, m - 1), 1);
                    }
                }
            }
    std::string label = std::string(twisted ? "Tt^" : "T^") + std::to_string(lam) + "((" + std::to_string(F.reduce(s1)) +
                        "," + std::to_string(F.reduce(s2)) + ")," + std::to_string(n) + ")";
    return b.build(label);
}

}  // namespace

bool is_sl2_family(Family f) { return f == Family::V0 || f == Family::P0; }

Module make_module(const FamilyParams& q, int p, Transcription t) {
    AlgebraPtr A = build_preset(is_sl2_family(q.family) ? "sl2" : "osp12", p);
    switch (q.family) {
        case Family::V: return simple_osp(A, p, q.lambda);
        case Family::W: return verma(A, p, q.lambda, false);
        case Family::Wt: return verma(A, p, q.lambda, true);
        case Family::P: return projective_osp(A, p, q.lambda, t);
        case Family::Vn: return string_v(A, p, q.lambda, q.n, false);
        case Family::Vtn: return string_v(A, p, q.lambda, q.n, true);
        case Family::Wn: return string_w(A, p, q.lambda, q.n, false, t);
        case Family::Wtn: return string_w(A, p, q.lambda, q.n, true, t);
        case Family::T: return tube(A, p, q.lambda, q.n, q.s1, q.s2, false);
        case Family::Tt: return tube(A, p, q.lambda, q.n, q.s1, q.s2, true);
        case Family::V0: return simple_sl2(A, p, q.lambda);
        case Family::P0: return projective_sl2(A, p, q.lambda, t);
    }
    throw usage_error("unknown family");
}

std::string family_tag(Family f) {
    switch (f) {
        case Family::V: return "V";
        case Family::W: return "W";
        case Family::Wt: return "Wt";
        case Family::P: return "P";
        case Family::Vn: return "Vn";
        case Family::Vtn: return "Vtn";
        case Family::Wn: return "Wn";
        case Family::Wtn: return "Wtn";
        case Family::T: return "T";
        case Family::Tt: return "Tt";
        case Family::V0: return "V0";
        case Family::P0: return "P0";
    }
    return "?";
}

Family family_from_tag(const std::string& tag) {
    for (Family f : {Family::V, Family::W, Family::Wt, Family::P, Family::Vn, Family::Vtn, Family::Wn, Family::Wtn,
                     Family::T, Family::Tt, Family::V0, Family::P0})
        if (family_tag(f) == tag) return f;
    throw usage_error("unknown family tag " + tag);
}

std::string describe(const FamilyParams& q) {
    std::string s = family_tag(q.family) + " lambda=" + std::to_string(q.lambda);
    switch (q.family) {
        case Family::Vn:
        case Family::Vtn:
        case Family::Wn:
        case Family::Wtn: s += " n=" + std::to_string(q.n); break;
        case Family::T:
        case Family::Tt:
            s += " s=(" + std::to_string(q.s1) + "," + std::to_string(q.s2) + ") n=" + std::to_string(q.n);
            break;
        default: break;
    }
    return s;
}

std::vector<Module> preset_simples(const AlgebraPtr& alg) {
    const std::string& nm = alg->name();
    const int p = alg->p();
    std::vector<Module> out;
    if (nm == "osp12" || nm == "sl2") {
        Family f = nm == "osp12" ? Family::V : Family::V0;
        for (int l = 0; l < p; ++l) out.push_back(make_module({f, l}, p));
        return out;
    }
    if (nm == "osp12_smash" || nm == "sl2_smash") {
        Family f = nm == "osp12_smash" ? Family::V : Family::V0;
        for (int l = 0; l < p; ++l) {
            Module S = to_smash_module(make_module({f, l}, p));
            out.push_back(S);
            out.push_back(parity_change(S));
        }
        return out;
    }
    throw usage_error("no simple list for algebra " + nm);
}

}  // namespace sa

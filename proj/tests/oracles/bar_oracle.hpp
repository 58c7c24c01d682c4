#pragma once

// Ext^n_S(k, k) for a quantum complete intersection S from the normalized bar
// complex, split by multidegree. Self-contained: its own monomial products and
// its own elimination mod p. Cells larger than the budget are skipped.

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

struct BarCell {
    std::vector<int> w;
    long long dim = 0;
};

struct BarDegree {
    int n = 0;
    std::vector<BarCell> cells;              // computed cells with nonzero cohomology
    std::vector<std::vector<int>> skipped;   // cells over budget
    long long total = 0;                     // sum over computed cells
    int computed = 0;
};

class BarOracle {
public:
    // q[i][j] for j > i: x_i x_j = q_ij x_j x_i
    BarOracle(std::vector<int> N, std::vector<std::vector<long long>> q, int p, long long budget = 1200)
        : N_(std::move(N)), p_(p), budget_(budget) {
        const int k = static_cast<int>(N_.size());
        qinv_.assign(k, std::vector<int>(k, 1));
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                int v = static_cast<int>(((q[i][j] % p) + p) % p);
                qinv_[i][j] = pw(v, p - 2);
            }
        std::vector<int> e(k, 0);
        while (true) {
            bool zero = true;
            for (int x : e) zero = zero && x == 0;
            if (!zero) mono_.push_back(e);
            int i = k - 1;
            while (i >= 0 && ++e[i] == N_[i]) e[i--] = 0;
            if (i < 0) break;
        }
        for (size_t m = 0; m < mono_.size(); ++m) id_[mono_[m]] = static_cast<int>(m);
    }

    // x^a x^b = c x^(a+b); returns 0 when a + b leaves the box.
    int product(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>& out) const {
        const int k = static_cast<int>(N_.size());
        out.assign(k, 0);
        for (int i = 0; i < k; ++i) {
            out[i] = a[i] + b[i];
            if (out[i] >= N_[i]) return 0;
        }
        // moving x_j^{b_j} left past x_i^{a_i} (i > j) costs q_ji^{-a_i b_j}
        long long c = 1;
        for (int j = 0; j < k; ++j)
            for (int i = j + 1; i < k; ++i) c = c * pw(qinv_[j][i], static_cast<long long>(a[i]) * b[j]) % p_;
        return static_cast<int>(c);
    }

    BarDegree ext(int n) {
        BarDegree out;
        out.n = n;
        if (n == 0) {
            out.cells.push_back({std::vector<int>(N_.size(), 0), 1});
            out.total = 1;
            out.computed = 1;
            return out;
        }
        counts(n + 1);
        const auto cells = counts(n);
        for (auto& [w, cnt] : cells) {
            long long up = count(n + 1, w), down = n >= 2 ? count(n - 1, w) : 0;
            if (cnt > budget_ || up > budget_ || down > budget_) {
                out.skipped.push_back(w);
                continue;
            }
            auto Bn = tuples(n, w), Bup = tuples(n + 1, w);
            long long r_in = rank_of(Bup, Bn), r_out = n >= 2 ? rank_of(Bn, tuples(n - 1, w)) : 0;
            long long h = static_cast<long long>(Bn.size()) - r_in - r_out;
            ++out.computed;
            if (h) {
                out.cells.push_back({w, h});
                out.total += h;
            }
        }
        return out;
    }

private:
    using Tuple = std::vector<int>;

    int pw(long long a, long long e) const {
        long long r = 1;
        a %= p_;
        while (e > 0) {
            if (e & 1) r = r * a % p_;
            a = a * a % p_;
            e >>= 1;
        }
        return static_cast<int>(r);
    }

    const std::map<std::vector<int>, long long>& counts(int n) {
        while (static_cast<int>(cnt_.size()) <= n) {
            std::map<std::vector<int>, long long> next;
            if (cnt_.empty()) {
                next[std::vector<int>(N_.size(), 0)] = 1;
            } else {
                for (auto& [w, c] : cnt_.back())
                    for (auto& m : mono_) {
                        std::vector<int> v = w;
                        for (size_t i = 0; i < v.size(); ++i) v[i] += m[i];
                        next[v] += c;
                    }
            }
            cnt_.push_back(std::move(next));
        }
        return cnt_[n];
    }

    long long count(int n, const std::vector<int>& w) {
        auto& c = counts(n);
        auto it = c.find(w);
        return it == c.end() ? 0 : it->second;
    }

    void fill(int n, std::vector<int>& rest, Tuple& cur, std::vector<Tuple>& out) {
        if (static_cast<int>(cur.size()) == n) {
            for (int x : rest)
                if (x) return;
            out.push_back(cur);
            return;
        }
        for (size_t m = 0; m < mono_.size(); ++m) {
            bool fits = true;
            for (size_t i = 0; i < rest.size(); ++i) fits = fits && mono_[m][i] <= rest[i];
            if (!fits) continue;
            for (size_t i = 0; i < rest.size(); ++i) rest[i] -= mono_[m][i];
            cur.push_back(static_cast<int>(m));
            fill(n, rest, cur, out);
            cur.pop_back();
            for (size_t i = 0; i < rest.size(); ++i) rest[i] += mono_[m][i];
        }
    }

    std::vector<Tuple> tuples(int n, std::vector<int> w) {
        std::vector<Tuple> out;
        Tuple cur;
        fill(n, w, cur, out);
        return out;
    }

    // rank of the bar differential from src (length n) to dst (length n-1)
    long long rank_of(const std::vector<Tuple>& src, const std::vector<Tuple>& dst) {
        if (src.empty() || dst.empty()) return 0;
        std::map<Tuple, int> row;
        for (size_t i = 0; i < dst.size(); ++i) row[dst[i]] = static_cast<int>(i);
        const size_t R = dst.size(), C = src.size();
        std::vector<std::vector<int>> M(C, std::vector<int>(R, 0));  // columns as rows
        std::vector<int> prodv;
        for (size_t c = 0; c < C; ++c) {
            const Tuple& t = src[c];
            for (size_t i = 0; i + 1 < t.size(); ++i) {
                int coeff = product(mono_[t[i]], mono_[t[i + 1]], prodv);
                if (!coeff) continue;
                Tuple d;
                for (size_t k = 0; k < i; ++k) d.push_back(t[k]);
                d.push_back(id_.at(prodv));
                for (size_t k = i + 2; k < t.size(); ++k) d.push_back(t[k]);
                int sign = (i % 2 == 0) ? p_ - 1 : 1;  // (-1)^(i+1) with 0-based i
                int& e = M[c][row.at(d)];
                e = static_cast<int>((e + static_cast<long long>(sign) * coeff) % p_);
            }
        }
        long long r = 0;
        for (size_t col = 0; col < R && r < static_cast<long long>(C); ++col) {
            size_t sel = r;
            while (sel < C && M[sel][col] == 0) ++sel;
            if (sel == C) continue;
            std::swap(M[sel], M[r]);
            int inv = pw(M[r][col], p_ - 2);
            for (size_t k = col; k < R; ++k) M[r][k] = static_cast<int>(static_cast<long long>(M[r][k]) * inv % p_);
            for (size_t o = r + 1; o < C; ++o) {
                int f = M[o][col];
                if (!f) continue;
                for (size_t k = col; k < R; ++k)
                    M[o][k] = static_cast<int>(((M[o][k] - static_cast<long long>(f) * M[r][k]) % p_ + p_) % p_);
            }
            ++r;
        }
        return r;
    }

    std::vector<int> N_;
    int p_;
    long long budget_;
    std::vector<std::vector<int>> qinv_;
    std::vector<std::vector<int>> mono_;
    std::map<std::vector<int>, int> id_;
    std::vector<std::map<std::vector<int>, long long>> cnt_;
};

}  // namespace oracle

#include "superalg/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>

namespace sa {

namespace {
inline int md(long long x, int p) {
    long long r = x % p;
    return static_cast<int>(r < 0 ? r + p : r);
}
void require(bool ok, const char* what) {
    if (!ok) throw usage_error(what);
}
}  // namespace

Matrix::Matrix(int rows, int cols, int p)
    : rows_(rows), cols_(cols), p_(p), a_(static_cast<size_t>(rows) * cols, 0) {
    require(rows >= 0 && cols >= 0, "negative matrix shape");
}

Matrix Matrix::identity(int n, int p) {
    Matrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.a_[static_cast<size_t>(i) * n + i] = 1 % p;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<long long>>& rows, int p) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    Matrix m(r, c, p);
    for (int i = 0; i < r; ++i) {
        require(static_cast<int>(rows[i].size()) == c, "ragged rows");
        for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::diagonal(const std::vector<long long>& d, int p) {
    int n = static_cast<int>(d.size());
    Matrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.set(i, i, d[i]);
    return m;
}

Matrix Matrix::column(const std::vector<int>& v, int p) {
    Matrix m(static_cast<int>(v.size()), 1, p);
    for (size_t i = 0; i < v.size(); ++i) m.a_[i] = md(v[i], p);
    return m;
}

void Matrix::set(int r, int c, long long v) { a_[static_cast<size_t>(r) * cols_ + c] = md(v, p_); }

void Matrix::add_to(int r, int c, long long v) {
    int& x = a_[static_cast<size_t>(r) * cols_ + c];
    x = md(x + md(v, p_), p_);
}

std::vector<int> Matrix::col(int c) const {
    std::vector<int> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
}

void Matrix::set_col(int c, const std::vector<int>& v) {
    for (int i = 0; i < rows_; ++i) a_[static_cast<size_t>(i) * cols_ + c] = md(v[i], p_);
}

Matrix Matrix::operator*(const Matrix& o) const {
    require(cols_ == o.rows_ && p_ == o.p_, "matrix product shape mismatch");
    Matrix out(rows_, o.cols_, p_);
    if (rows_ == 0 || o.cols_ == 0) return out;
    // accumulate unreduced products, flushing before uint32 overflow
    const uint32_t step = static_cast<uint32_t>((p_ - 1) * (p_ - 1));
    const uint32_t limit = step ? std::numeric_limits<uint32_t>::max() / step : 1u << 30;
    std::vector<uint32_t> acc(o.cols_);
    for (int i = 0; i < rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0u);
        const int* ar = row_ptr(i);
        uint32_t pending = 0;
        for (int k = 0; k < cols_; ++k) {
            uint32_t a = static_cast<uint32_t>(ar[k]);
            if (!a) continue;
            const int* br = o.row_ptr(k);
            for (int j = 0; j < o.cols_; ++j) acc[j] += a * static_cast<uint32_t>(br[j]);
            if (++pending == limit) {
                for (auto& x : acc) x %= static_cast<uint32_t>(p_);
                pending = 1;
            }
        }
        int* outr = out.row_ptr(i);
        for (int j = 0; j < o.cols_; ++j) outr[j] = static_cast<int>(acc[j] % static_cast<uint32_t>(p_));
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    Matrix r = *this;
    r += o;
    return r;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_, "matrix sum shape mismatch");
    for (size_t i = 0; i < a_.size(); ++i) {
        int s = a_[i] + o.a_[i];
        a_[i] = s >= p_ ? s - p_ : s;
    }
    return *this;
}

Matrix Matrix::operator-(const Matrix& o) const {
    Matrix r = *this;
    r.axpy(-1, o);
    return r;
}

void Matrix::axpy(long long s, const Matrix& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_, "matrix sum shape mismatch");
    int c = md(s, p_);
    if (!c) return;
    for (size_t i = 0; i < a_.size(); ++i) a_[i] = (a_[i] + c * o.a_[i]) % p_;
}

Matrix Matrix::scaled(long long s) const {
    Matrix r(rows_, cols_, p_);
    int c = md(s, p_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = (a_[i] * c) % p_;
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && a_ == o.a_;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.a_[static_cast<size_t>(j) * rows_ + i] = at(i, j);
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](int x) { return x == 0; });
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

Matrix Matrix::block(int r0, int c0, int nr, int nc) const {
    require(r0 >= 0 && c0 >= 0 && r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
    Matrix b(nr, nc, p_);
    for (int i = 0; i < nr; ++i)
        std::copy_n(row_ptr(r0 + i) + c0, nc, b.row_ptr(i));
    return b;
}

void Matrix::set_block(int r0, int c0, const Matrix& b) {
    require(r0 >= 0 && c0 >= 0 && r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_,
            "set_block out of range");
    for (int i = 0; i < b.rows_; ++i)
        std::copy_n(b.row_ptr(i), b.cols_, row_ptr(r0 + i) + c0);
}

Matrix Matrix::select_cols(const std::vector<int>& idx) const {
    Matrix m(rows_, static_cast<int>(idx.size()), p_);
    for (int i = 0; i < rows_; ++i)
        for (size_t j = 0; j < idx.size(); ++j) m.a_[i * idx.size() + j] = at(i, idx[j]);
    return m;
}

Matrix Matrix::select_rows(const std::vector<int>& idx) const {
    Matrix m(static_cast<int>(idx.size()), cols_, p_);
    for (size_t i = 0; i < idx.size(); ++i)
        std::copy_n(row_ptr(idx[i]), cols_, m.row_ptr(static_cast<int>(i)));
    return m;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << '[';
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
        os << "]\n";
    }
    return os.str();
}

Matrix hstack(const std::vector<Matrix>& ms, int rows, int p) {
    int c = 0;
    for (auto& m : ms) {
        require(m.rows() == rows, "hstack row mismatch");
        c += m.cols();
    }
    Matrix out(rows, c, p);
    int off = 0;
    for (auto& m : ms) {
        out.set_block(0, off, m);
        off += m.cols();
    }
    return out;
}

Matrix vstack(const std::vector<Matrix>& ms, int cols, int p) {
    int r = 0;
    for (auto& m : ms) {
        require(m.cols() == cols, "vstack col mismatch");
        r += m.rows();
    }
    Matrix out(r, cols, p);
    int off = 0;
    for (auto& m : ms) {
        out.set_block(off, 0, m);
        off += m.rows();
    }
    return out;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() + b.rows(), a.cols() + b.cols(), a.p());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), a.cols(), b);
    return out;
}

Echelon rref_partial(Matrix A, int ncols) {
    const int p = A.p();
    Field F(p);
    Echelon e;
    int r = 0;
    const int R = A.rows(), C = A.cols();
    for (int c = 0; c < ncols && r < R; ++c) {
        int piv = -1;
        for (int i = r; i < R; ++i)
            if (A.at(i, c)) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            std::swap_ranges(A.row_ptr(piv), A.row_ptr(piv) + C, A.row_ptr(r));
        int* pr = A.row_ptr(r);
        int iv = F.inv(pr[c]);
        if (iv != 1)
            for (int j = c; j < C; ++j) pr[j] = (pr[j] * iv) % p;
        for (int i = 0; i < R; ++i) {
            if (i == r) continue;
            int* ri = A.row_ptr(i);
            int f = ri[c];
            if (!f) continue;
            int nf = p - f;
            for (int j = c; j < C; ++j)
                if (pr[j]) ri[j] = (ri[j] + nf * pr[j]) % p;
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.R = std::move(A);
    return e;
}

Echelon rref(Matrix A) {
    int c = A.cols();
    return rref_partial(std::move(A), c);
}

int rank(const Matrix& A) {
    // eliminate on the shorter side
    if (A.rows() > A.cols()) return static_cast<int>(rref(A.transpose()).pivots.size());
    return static_cast<int>(rref(A).pivots.size());
}

Matrix nullspace(const Matrix& A) {
    Echelon e = rref(A);
    const int n = A.cols();
    std::vector<char> is_piv(n, 0);
    for (int c : e.pivots) is_piv[c] = 1;
    std::vector<int> free;
    for (int c = 0; c < n; ++c)
        if (!is_piv[c]) free.push_back(c);
    Matrix K(n, static_cast<int>(free.size()), A.p());
    for (size_t k = 0; k < free.size(); ++k) {
        int fc = free[k];
        K.set(fc, static_cast<int>(k), 1);
        for (size_t r = 0; r < e.pivots.size(); ++r) K.set(e.pivots[r], static_cast<int>(k), -e.R.at(static_cast<int>(r), fc));
    }
    return K;
}

Matrix column_basis(const Matrix& A) {
    Echelon e = rref(A);
    return A.select_cols(e.pivots);
}

std::optional<Matrix> inverse(const Matrix& A) {
    if (A.rows() != A.cols()) return std::nullopt;
    int n = A.rows();
    Echelon e = rref_partial(hstack({A, Matrix::identity(n, A.p())}, n, A.p()), n);
    if (static_cast<int>(e.pivots.size()) < n) return std::nullopt;
    return e.R.block(0, n, n, n);
}

SolveResult solve(const Matrix& A, const Matrix& B) {
    require(A.rows() == B.rows() && A.p() == B.p(), "solve: A.rows must equal B.rows");
    const int n = A.cols(), m = B.cols(), p = A.p();
    Echelon e = rref_partial(hstack({A, B}, A.rows(), p), n);
    SolveResult res;
    const int rk = static_cast<int>(e.pivots.size());
    for (int i = rk; i < e.R.rows(); ++i)
        for (int j = 0; j < m; ++j)
            if (e.R.at(i, n + j)) {
                res.inconsistent_row = i;
                return res;
            }
    res.consistent = true;
    res.particular = Matrix(n, m, p);
    for (int r = 0; r < rk; ++r)
        for (int j = 0; j < m; ++j) res.particular.set(e.pivots[r], j, e.R.at(r, n + j));
    // kernel in X-space: each null vector of A placed in each column
    std::vector<char> is_piv(n, 0);
    for (int c : e.pivots) is_piv[c] = 1;
    for (int fc = 0; fc < n; ++fc) {
        if (is_piv[fc]) continue;
        std::vector<int> v(n, 0);
        v[fc] = 1;
        for (int r = 0; r < rk; ++r) v[e.pivots[r]] = md(-e.R.at(r, fc), p);
        for (int j = 0; j < m; ++j) {
            Matrix X(n, m, p);
            for (int i = 0; i < n; ++i) X.set(i, j, v[i]);
            res.kernel.push_back(std::move(X));
        }
    }
    return res;
}

std::optional<Matrix> solve_one(const Matrix& A, const Matrix& B) {
    require(A.rows() == B.rows() && A.p() == B.p(), "solve: A.rows must equal B.rows");
    const int n = A.cols(), m = B.cols();
    Echelon e = rref_partial(hstack({A, B}, A.rows(), A.p()), n);
    const int rk = static_cast<int>(e.pivots.size());
    for (int i = rk; i < e.R.rows(); ++i)
        for (int j = 0; j < m; ++j)
            if (e.R.at(i, n + j)) return std::nullopt;
    Matrix X(n, m, A.p());
    for (int r = 0; r < rk; ++r)
        for (int j = 0; j < m; ++j) X.set(e.pivots[r], j, e.R.at(r, n + j));
    return X;
}

std::vector<int> Span::reduce(std::vector<int> v, std::vector<int>* comb) const {
    for (size_t k = 0; k < basis_.size(); ++k) {
        int f = v[piv_[k]];
        if (!f) continue;
        const auto& b = basis_[k];
        int nf = p_ - f;
        for (int j = 0; j < n_; ++j)
            if (b[j]) v[j] = (v[j] + nf * b[j]) % p_;
        if (comb) {
            const auto& cb = combo_[k];
            for (size_t j = 0; j < cb.size(); ++j)
                if (cb[j]) (*comb)[j] = ((*comb)[j] + nf * cb[j]) % p_;
        }
    }
    return v;
}

bool Span::add(const std::vector<int>& v0) {
    std::vector<int> v(v0.size());
    for (size_t i = 0; i < v0.size(); ++i) v[i] = md(v0[i], p_);
    std::vector<int> comb(orig_.size() + 1, 0);
    comb.back() = 1;
    v = reduce(std::move(v), &comb);
    int pc = -1;
    for (int j = 0; j < n_; ++j)
        if (v[j]) { pc = j; break; }
    if (pc < 0) return false;
    Field F(p_);
    int iv = F.inv(v[pc]);
    for (auto& x : v) x = (x * iv) % p_;
    for (auto& x : comb) x = (x * iv) % p_;
    for (auto& cb : combo_) cb.push_back(0);
    orig_.push_back(v0);
    for (auto& x : orig_.back()) x = md(x, p_);
    basis_.push_back(std::move(v));
    piv_.push_back(pc);
    combo_.push_back(std::move(comb));
    return true;
}

bool Span::contains(const std::vector<int>& v0) const {
    std::vector<int> v(v0.size());
    for (size_t i = 0; i < v0.size(); ++i) v[i] = md(v0[i], p_);
    v = reduce(std::move(v), nullptr);
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

std::optional<std::vector<int>> Span::coords(const std::vector<int>& v0) const {
    std::vector<int> v(v0.size());
    for (size_t i = 0; i < v0.size(); ++i) v[i] = md(v0[i], p_);
    std::vector<int> comb(orig_.size(), 0);
    v = reduce(std::move(v), &comb);
    if (!std::all_of(v.begin(), v.end(), [](int x) { return x == 0; })) return std::nullopt;
    // v0 - sum comb_j orig_j = 0  =>  coords = -comb
    for (auto& x : comb) x = md(-x, p_);
    return comb;
}

Matrix Span::basis_matrix() const {
    Matrix m(n_, dim(), p_);
    for (int k = 0; k < dim(); ++k) m.set_col(k, orig_[k]);
    return m;
}

}  // namespace sa

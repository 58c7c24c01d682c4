#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superalg/field.hpp"

namespace sa {

// Dense matrix over F_p, row-major, entries kept in [0, p).
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, int p);

    static Matrix identity(int n, int p);
    static Matrix from_rows(const std::vector<std::vector<long long>>& rows, int p);
    static Matrix diagonal(const std::vector<long long>& d, int p);
    // Single column.
    static Matrix column(const std::vector<int>& v, int p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int p() const { return p_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    int at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, long long v);
    // Adds v (reduced) to entry (r, c).
    void add_to(int r, int c, long long v);
    int* row_ptr(int r) { return a_.data() + static_cast<size_t>(r) * cols_; }
    const int* row_ptr(int r) const { return a_.data() + static_cast<size_t>(r) * cols_; }
    const std::vector<int>& data() const { return a_; }

    std::vector<int> col(int c) const;
    void set_col(int c, const std::vector<int>& v);

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(long long s) const;
    Matrix operator-() const { return scaled(-1); }
    Matrix& operator+=(const Matrix& o);
    // this += s * o
    void axpy(long long s, const Matrix& o);
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const;
    bool is_zero() const;
    bool is_identity() const;
    Matrix block(int r0, int c0, int nr, int nc) const;
    void set_block(int r0, int c0, const Matrix& b);
    Matrix select_cols(const std::vector<int>& idx) const;
    Matrix select_rows(const std::vector<int>& idx) const;

    std::string to_string() const;

private:
    int rows_ = 0, cols_ = 0, p_ = 3;
    std::vector<int> a_;
};

Matrix hstack(const std::vector<Matrix>& ms, int rows, int p);
Matrix vstack(const std::vector<Matrix>& ms, int cols, int p);
Matrix block_diag(const Matrix& a, const Matrix& b);

// Reduced row echelon form. Pivots are chosen leftmost first, taking the
// smallest row index holding a nonzero entry in that column.
struct Echelon {
    Matrix R;
    std::vector<int> pivots;  // pivot column of row k
};
Echelon rref(Matrix A);
// Same elimination but only the first `ncols` columns are pivot candidates.
Echelon rref_partial(Matrix A, int ncols);

int rank(const Matrix& A);
// Columns form a basis of {x : A x = 0}.
Matrix nullspace(const Matrix& A);
// Columns of A at pivot positions: a basis of the column space.
Matrix column_basis(const Matrix& A);
std::optional<Matrix> inverse(const Matrix& A);

struct SolveResult {
    bool consistent = false;
    Matrix particular;            // A.cols x B.cols
    std::vector<Matrix> kernel;   // basis of {X : A X = 0}, each A.cols x B.cols
    int inconsistent_row = -1;    // witness row in the reduced system
};
// Affine solution set of A X = B.
SolveResult solve(const Matrix& A, const Matrix& B);
// Cheaper variant when only one solution is needed.
std::optional<Matrix> solve_one(const Matrix& A, const Matrix& B);

// Incrementally maintained span with membership and coordinate queries.
class Span {
public:
    Span(int n, int p) : n_(n), p_(p) {}
    int dim() const { return static_cast<int>(basis_.size()); }
    int ambient() const { return n_; }
    // Returns true if v was new (and adds it).
    bool add(const std::vector<int>& v);
    bool contains(const std::vector<int>& v) const;
    // Original (unreduced) vectors in insertion order, as columns.
    Matrix basis_matrix() const;
    const std::vector<std::vector<int>>& vectors() const { return orig_; }
    // Coordinates of v in terms of the inserted vectors; nullopt if outside.
    std::optional<std::vector<int>> coords(const std::vector<int>& v) const;

private:
    std::vector<int> reduce(std::vector<int> v, std::vector<int>* comb) const;
    int n_, p_;
    std::vector<std::vector<int>> basis_;  // reduced rows, pivot normalized to 1
    std::vector<int> piv_;
    std::vector<std::vector<int>> combo_;  // basis_[k] = sum combo_[k][j] orig_[j]
    std::vector<std::vector<int>> orig_;
};

}  // namespace sa

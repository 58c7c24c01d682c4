#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "superalg/field.hpp"
#include "superalg/matrix.hpp"

namespace sa {

using Exps = std::vector<int>;

struct Term {
    Exps exps;
    long long coeff = 1;
};
// Linear combination of normal-form monomials given by exponent vectors.
using Poly = std::vector<Term>;

struct GeneratorSpec {
    std::string name;
    int parity = 0;
    int trunc = 2;
    Poly power_rule;  // value of gen^trunc
};

struct Presentation {
    std::string name;
    int p = 3;
    std::vector<GeneratorSpec> gens;
    // (j, i) with j > i: normal form of gen_j * gen_i. Missing pairs commute.
    std::map<std::pair<int, int>, Poly> rewrite;
};

class PBWAlgebra;
using AlgebraPtr = std::shared_ptr<const PBWAlgebra>;

// Sparse combination of basis monomials, sorted by index.
using SparseVec = std::vector<std::pair<int, int>>;

class Element {
public:
    Element() = default;
    Element(AlgebraPtr alg, std::vector<int> coeffs);

    const AlgebraPtr& algebra() const { return alg_; }
    const std::vector<int>& coeffs() const { return c_; }
    int coeff(int idx) const { return c_[idx]; }
    // Nonzero (index, coefficient) pairs.
    SparseVec terms() const;
    bool is_zero() const;

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator*(const Element& o) const;
    Element scaled(long long s) const;
    bool operator==(const Element& o) const { return c_ == o.c_; }
    bool operator!=(const Element& o) const { return c_ != o.c_; }

    std::string to_string() const;

private:
    AlgebraPtr alg_;
    std::vector<int> c_;
};

class PBWAlgebra : public std::enable_shared_from_this<PBWAlgebra> {
public:
    // Use make_algebra; the constructor is public only for make_shared.
    explicit PBWAlgebra(Presentation pres);

    const Presentation& presentation() const { return pres_; }
    const std::string& name() const { return pres_.name; }
    // Identity string used to check that modules live over the same algebra.
    std::string ref() const;
    int p() const { return pres_.p; }
    const Field& field() const { return F_; }
    int dim() const { return dim_; }
    int ngens() const { return static_cast<int>(pres_.gens.size()); }
    const GeneratorSpec& gen(int i) const { return pres_.gens[i]; }
    int gen_index(const std::string& name) const;  // -1 if absent

    Exps exps(int idx) const;
    int index(const Exps& e) const;  // -1 if not a normal monomial
    int monomial_parity(int idx) const;
    int monomial_length(int idx) const;
    std::string monomial_name(int idx) const;

    // Left multiplication of basis monomial idx by generator g.
    const SparseVec& lmul(int g, int idx) const { return table_[g][idx]; }
    // Whether computing this product touched a truncation rule.
    bool lmul_used_power(int g, int idx) const { return tainted_[g][idx]; }
    // Algebras with lifted truncations refuse products that hit a truncation.
    bool strict() const { return strict_; }
    void set_strict(bool s) { strict_ = s; }

    Element zero() const;
    Element unit() const;
    Element generator(int i) const;
    Element monomial(int idx) const;
    Element from_poly(const Poly& p) const;
    Element straighten(const std::vector<int>& word) const;
    Element multiply(const Element& a, const Element& b) const;
    // x_g * v for a dense coefficient vector v.
    std::vector<int> apply_generator(int g, const std::vector<int>& v) const;
    // Left multiplication matrix of generator g (dim x dim).
    Matrix left_matrix(int g) const;
    // Matrix of left multiplication by a.
    Matrix left_matrix(const Element& a) const;

    // Toral generators act semisimply with eigenvalues in F_p:
    // gen^p = gen, or gen^2 = 1.
    bool is_toral(int g) const;

    std::string to_json() const;

private:
    void build_table();
    const SparseVec& compute(int g, int idx);
    SparseVec apply_mono(const Exps& t, SparseVec v, bool& taint);
    SparseVec apply_gen(int g, const SparseVec& v, bool& taint);
    std::vector<int> horner(const std::vector<int>& a, const std::vector<int>& b) const;

    Presentation pres_;
    Field F_;
    int dim_ = 1;
    std::vector<int> radix_;   // stride of each generator in the index
    std::vector<std::vector<SparseVec>> table_;
    std::vector<std::vector<char>> tainted_, state_;
    bool strict_ = false;
};

AlgebraPtr make_algebra(Presentation pres);
AlgebraPtr algebra_from_json(const std::string& text);

// Named presets: sl2, osp12, sl2_smash, osp12_smash. Cached per (name, p).
AlgebraPtr build_preset(const std::string& name, int p);
std::vector<std::string> preset_names();
Presentation preset_presentation(const std::string& name, int p);

// Quantum complete intersection: x_i x_j = q[i][j] x_j x_i for i < j,
// x_i^{N_i} = 0.  q is given as an upper triangle (q[i][j] for j > i).
struct QciSpec {
    std::vector<int> N;
    std::vector<std::vector<long long>> q;  // q[i][j], j > i used
    std::vector<int> parity;                // optional, defaults to 0
};
AlgebraPtr build_qci(const QciSpec& spec, int p);
// q_{ij} with the convention q_{ji} = q_{ij}^{-1}, q_{ii} = 1.
int qci_q(const QciSpec& spec, int i, int j, const Field& F);

// Adjoins a group-like g with g^2 = 1 and g x = (-1)^{|x|} x g.
Presentation smash_presentation(const Presentation& base);

// Keep only the top-degree part of every relation. Throws usage_error if a
// relation has a term above the degree of its left side.
AlgebraPtr associated_graded(const AlgebraPtr& alg, const std::vector<int>& deg);

// Same relations with larger truncations and no truncation rules; products
// that would need a truncation rule throw. Stands in for the untruncated
// algebra in degree ranges below the new truncations.
AlgebraPtr lift_truncations(const AlgebraPtr& alg, const std::vector<int>& new_trunc);

}  // namespace sa

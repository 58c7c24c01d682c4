#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "superalg/pbw.hpp"

namespace sa {

// Branch function of the Koszul differential: 1 on odd a, N - 1 on even a.
int koszul_sigma(int N, int a);
// Partial sums of koszul_sigma: tau(2k) = kN, tau(2k+1) = kN + 1.
int koszul_tau(int N, int a);

// Left S-linear map between free modules; img[t] lists (target generator,
// coefficient element) for the source generator t.
struct FreeMap {
    int src = 0, dst = 0;
    std::vector<std::vector<std::pair<int, Element>>> img;
};

// Free resolution of the trivial module over a quantum complete intersection.
// K_n has generators Psi(a) with |a| = n in increasing lexicographic order.
struct KoszulResolution {
    QciSpec spec;
    AlgebraPtr alg;
    int D = 0;
    std::vector<std::vector<Exps>> gens;  // gens[n]
    std::vector<FreeMap> d;               // d[n]: K_n -> K_{n-1}; d[0] unused
    int rank(int n) const { return static_cast<int>(gens[n].size()); }
    int index(const Exps& a) const;       // position inside its degree, -1 if absent
    // Multidegree of s Psi(a): exponents of s plus tau(a), preserved by d.
    Exps weight(int n, int t, int mono) const;
};
// Throws std::logic_error naming the generator if d^2 != 0.
KoszulResolution build_koszul(const QciSpec& spec, int p, int D);

// count seeded configurations: 1, 2, 3 generators in turn, N_i in {2, 3, 4},
// q_ij uniform in F_p^*.
std::vector<QciSpec> seeded_qci_configs(int p, int count, uint64_t seed);

struct ExactnessReport {
    bool d_squared_zero = true;
    bool augmentation = true;       // im d_1 is the augmentation ideal
    int exact_through = 0;          // homology vanishes in degrees 1..exact_through
    std::vector<int> homology;      // dim H_n for n = 0 .. D-1
    std::vector<int> d_ranks;       // rank d_n over F_p, n = 1 .. D
    std::string detail;
};
ExactnessReport check_exactness(const KoszulResolution& K);

struct ExtTable {
    std::vector<int> computed;      // dim Ext^n = rank K_n
    std::vector<long long> closed_form;
    bool dual_differential_zero = true;
};
ExtTable ext_dims_qci(const KoszulResolution& K);
// Rows n, computed, closed_form, oracle (oracle may be shorter or empty).
std::string ext_table_csv(const ExtTable& t, const std::vector<long long>& oracle = {});

enum class ChainKind { xi, eta };
struct ChainMap {
    std::string name;
    int shift = 0;
    int sign = 1;                   // d phi = sign * phi d
    std::vector<FreeMap> maps;      // maps[n]: K_n -> K_{n - shift}; empty below shift
};
// Throws std::logic_error with a witness generator if the chain law fails for both signs.
ChainMap chain_map_class(ChainKind kind, int i, const KoszulResolution& K);
ChainMap compose(const ChainMap& A, const ChainMap& B, const KoszulResolution& K);  // A after B
// Matrix of f -> f o phi from Hom(K_{n - shift}, k) to Hom(K_n, k) in the dual bases.
Matrix induced_map(const ChainMap& phi, const KoszulResolution& K, int n);
// The cocycle eps o phi on K_shift, in the dual basis.
std::vector<int> cohomology_class(const ChainMap& phi, const KoszulResolution& K);

struct RelationCheck {
    std::string relation;
    bool holds = false;
    std::string detail;
};
struct CupRelationReport {
    bool all_hold = true;
    std::vector<RelationCheck> checks;    // the stated relations, i = j included
    std::vector<RelationCheck> squares;   // eta_i^2 against xi_i when N_i = 2
    std::string order;                    // which composition order realises XY
};
// Requires D >= 4.
CupRelationReport verify_cup_relations(const KoszulResolution& K);

// N = (2p, 2p), q = -1, both generators odd: the E, F part of the graded osp(1|2).
QciSpec graded_osp12_spec(int p);

struct WeightActionReport {
    bool h_commutes = true, g_commutes = true;
    bool h_generators = true;   // [h, xi_i] = -N_i a_i xi_i, [h, eta_i] = -a_i eta_i
    bool g_generators = true;   // g xi_i g = xi_i, g eta_i g = -eta_i on odd i
    bool cochain_actions = true;  // same identities on the dual classes
    bool xi_p_fixed = true;
    std::vector<int> h_invariant_dims, invariant_dims;  // per degree 0..D
    std::string detail;
    bool pass() const { return h_commutes && g_commutes && h_generators && g_generators && cochain_actions && xi_p_fixed; }
};
// alpha[i]: h-weight of x_i. Parities come from spec.parity. Requires D >= 2p
// for the xi^p check (skipped below that).
WeightActionReport verify_weight_actions(const KoszulResolution& K, const std::vector<int>& alpha);

// Multilinear functional on tensor powers of the augmentation ideal. Arity 2
// uses pair directly; arity 2k takes pair(r1, r2) pair(r3, r4) ...
struct Cocycle {
    std::string id;
    int arity = 2;
    AlgebraPtr alg;
    Matrix pair;  // dim x dim over basis monomials; unit row and column are zero
    int gen = -1;
    int power = 0;  // N_i: the certificate pattern is (x_i, x_i^{N_i - 1}, ...)
};
// Coefficient of x_i^{N_i} in the product of two monomials of the lifted algebra.
int xi_tilde(const AlgebraPtr& lifted, int i, int N_i, int a, int b);
// Degree 2 functional on the graded instance (a quantum complete intersection).
Cocycle cocycle_xi_hat(const AlgebraPtr& graded, int i);
// Degree 2p functional on u(osp(1|2)) for the root generator i (E = 0, F = 1);
// zero on monomials containing h.
Cocycle cocycle_f(const AlgebraPtr& preset, int i);
Cocycle zero_cocycle(const AlgebraPtr& alg, int arity);

int evaluate(const Cocycle& c, const std::vector<int>& tuple);
int evaluate(const Cocycle& c, const std::vector<SparseVec>& args);

struct CocycleReport {
    std::string id;
    bool cocycle = true;
    bool exhaustive = false;
    long long checked = 0;      // tuples on which the coboundary was evaluated
    long long active = 0;       // tuples where some term of the coboundary was nonzero
    std::vector<int> witness;   // tuple with nonzero coboundary
    bool certificate = false;   // value != 0 on the pattern and every adjacent product vanishes
    int certificate_value = 0;
    std::string detail;
    std::string to_json() const;
};
// Exhaustive when (dim - 1)^(arity + 1) <= budget, otherwise budget seeded samples.
CocycleReport verify_cocycle(const Cocycle& c, long long budget, uint64_t seed = 1);

// Compares the Koszul class xi_i with xi_hat through a comparison map from the
// normalized bar resolution in degrees <= 2: true if they differ by a coboundary.
bool xi_matches_xi_hat(const KoszulResolution& K, const Cocycle& xh);

}  // namespace sa

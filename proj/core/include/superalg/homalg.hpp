#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superalg/families.hpp"
#include "superalg/module.hpp"

namespace sa {

// Basis of Hom_A(M, N); each map is dim N x dim M. Over the smash presets the
// g-relation makes every solution parity preserving.
struct HomSpace {
    std::vector<Matrix> basis;
    int dim() const { return static_cast<int>(basis.size()); }
};
HomSpace hom_basis(const Module& M, const Module& N);
int hom_dim(const Module& M, const Module& N);
// Dimension of the parity preserving part of Hom_A(M, N).
int hom_even_dim(const Module& M, const Module& N);
bool is_hom(const Module& M, const Module& N, const Matrix& T);

// Rebase M onto joint eigenvectors of its toral generators, split by parity.
// Returns M unchanged when that is already the case. T (if given) receives
// the change of basis: new basis vectors as columns in old coordinates.
Module weight_module(const Module& M, Matrix* T = nullptr);

struct EndRing {
    std::vector<Matrix> basis;
    std::vector<Matrix> radical;  // basis of the Jacobson radical when local
    bool is_local = false;
    // Present when not local: an endomorphism that is neither nilpotent nor
    // invertible (its Fitting decomposition splits M).
    std::optional<Matrix> splitter;
    int dim() const { return static_cast<int>(basis.size()); }
};
EndRing end_ring(const Module& M);
bool is_indecomposable(const Module& M);

struct Summand {
    Module module;
    Matrix inclusion;  // columns: basis of the summand in M
};
std::vector<Summand> decompose_with_maps(const Module& M);
std::vector<Module> decompose(const Module& M);

// Arrows of the basic algebra of a block, chosen so that the quiver relations
// hold exactly. One vertex: arrows x, y with x^2 = y^2, xy = yx = 0.
// Two vertices P, Q: x1, y1 : Q -> P and x2, y2 : P -> Q inside End(P + Q) with
// x_i x_j = y_i y_j and x_i y_j = y_i x_j = 0 for i != j.
struct QuiverPresentation {
    bool found = false;
    int end_dim = 0;
    std::vector<Matrix> arrows;          // x, y  or  x1, y1, x2, y2
    std::vector<std::string> relations;  // the identities that were checked
    std::string detail;
};
// exterior: x^2 = y^2 = 0, xy = -yx (the relations a super-commutative End satisfies)
enum class LocalRelations { commutative, exterior };
QuiverPresentation local_presentation(const Module& P, LocalRelations rel = LocalRelations::commutative);
QuiverPresentation pair_presentation(const Module& P, const Module& Q);

enum class IsoOutcome { yes, no, indeterminate };
struct IsoResult {
    IsoOutcome outcome = IsoOutcome::indeterminate;
    Matrix witness;      // invertible intertwiner M -> N when yes
    std::string stage;   // dims, hom, random, exhaustive, structural, fitting
    std::string reason;
};
IsoResult is_isomorphic(const Module& M, const Module& N, uint64_t seed = 0);
std::string to_string(IsoOutcome o);

// Simple modules of an algebra: the preset lists, or the trivial module for
// algebras whose generators span a nilpotent ideal (quantum complete intersections).
const std::vector<Module>& simples(const AlgebraPtr& alg);

struct ProjectiveData {
    Module module;                      // A e in the basis below
    Element idempotent;                 // e, even, of ad-weight zero
    std::vector<std::pair<int, int>> tree;  // basis vector k = gen tree[k].second applied to tree[k].first; root (-1,-1)
};
// Indecomposable projectives, one per simple (same order as simples()).
const std::vector<ProjectiveData>& projectives(const AlgebraPtr& alg);

// Basis (columns) of rad M = intersection of kernels of maps to simples.
Matrix radical_basis(const Module& M);
// Multiplicities of simples in the head M / rad M.
std::vector<int> head_multiplicities(const Module& M);
// Jordan-Hoelder multiplicities, indexed like simples().
std::vector<int> composition_factors(const Module& M);

struct Cover {
    Module P;
    Matrix map;                 // dim M x dim P, surjective
    std::vector<int> summands;  // simple index of each summand
    std::vector<int> shifts;    // 1 when the summand is parity shifted
};
Cover projective_cover(const Module& M);

struct Resolution {
    std::vector<Module> P;                  // P_0 .. P_D
    std::vector<Matrix> d;                  // d[0]: P_0 -> M, d[n]: P_n -> P_{n-1}
    std::vector<Module> syzygy;             // syzygy[n] = Omega^n M, n = 0 .. D+1
    std::vector<Matrix> inclusion;          // inclusion[n]: Omega^{n+1} -> P_n
    std::vector<std::vector<int>> summands; // simple indices per degree
    std::vector<std::vector<int>> shifts;
    std::vector<int> ranks() const;
    std::vector<int> total_dims() const;
};
Resolution minimal_resolution(const Module& M, int D);
struct ResolutionCheck {
    bool complex = true;   // consecutive composites vanish
    bool minimal = true;   // images land in radicals
    bool exact = true;     // ker d_n = im d_{n+1}
    std::string detail;
};
ResolutionCheck verify_resolution(const Module& M, const Resolution& R);

int ext_dim(const Module& M, const Module& N, int n);
int ext_dim(const Resolution& R, const Module& N, int n);
// Ext over the matching smash preset (plain inputs are converted first).
int ext_dim_super(const Module& M, const Module& N, int n);
// Parity-invariant part of Ext over the plain algebra: g acts on
// Hom(P_n, N) through the parity operators of P_n and N.
int ext_dim_invariant(const Resolution& R, const Module& N, int n);

struct Complexity {
    bool conclusive = false;
    int value = -1;
    std::vector<int> dims;
    std::vector<std::vector<long long>> differences;  // differences[k] = k-th differences
};
// Complexity from the growth of dim P_n: if the last three k-th differences
// agree for the smallest such k, the value is k + 1.
Complexity complexity_from_dims(const std::vector<int>& dims);
Complexity complexity_estimate(const Module& M, int D);

enum class Wildness { wild, not_decided, inconclusive };
struct WildnessVerdict {
    Wildness verdict = Wildness::inconclusive;
    Complexity complexity;
};
WildnessVerdict wildness_verdict(const AlgebraPtr& alg, int D = 10);
std::string to_string(Wildness w);

// Ext^1-linkage classes of the given simples (indices into the list).
std::vector<std::vector<int>> blocks(const std::vector<Module>& simple_list);
std::vector<std::vector<int>> blocks(const AlgebraPtr& alg);

enum class ExtensionOutcome { nonsplit, split, no_embedding };
struct ExtensionCertificate {
    ExtensionOutcome outcome = ExtensionOutcome::no_embedding;
    Matrix iota;     // A -> M
    Matrix quotient_iso;  // M / iota(A) -> B when found
    std::string detail;
};
// Looks for 0 -> A -> M -> B -> 0 and decides whether it splits.
ExtensionCertificate nonsplit_extension_check(const Module& A, const Module& B, const Module& M, uint64_t seed = 0);
std::string to_string(ExtensionOutcome o);

// Finds a catalogue member (osp12: P, V(n), Vt(n), W(n), Wt(n), T_c(n);
// sl2: V0, P0) isomorphic to M, up to parity.
std::optional<FamilyParams> identify(const Module& M, int nmax);

}  // namespace sa

#pragma once

#include <string>
#include <vector>

#include "superalg/matrix.hpp"
#include "superalg/pbw.hpp"

namespace sa {

// A representation: one matrix per generator plus a parity vector.
struct Module {
    AlgebraPtr alg;
    int dim = 0;
    std::vector<Matrix> act;  // indexed like alg generators
    std::vector<int> parity;
    std::string label;

    int p() const { return alg->p(); }
    const Matrix& action(int g) const { return act.at(g); }
    const Matrix& action(const std::string& gen) const;
};

Module make_module_raw(AlgebraPtr alg, std::vector<Matrix> act, std::vector<int> parity, std::string label = {});
// Parity vector making odd generators swap and even ones preserve parity,
// seeded even at the first vector of each connected piece. Throws if none exists.
std::vector<int> assign_parity(const AlgebraPtr& alg, const std::vector<Matrix>& act);
Module zero_module(const AlgebraPtr& alg);
// 1-dim even module: generators act by 0, a group-like g by 1.
Module trivial_module(const AlgebraPtr& alg);

struct RelationReport {
    bool pass = true;
    std::string relation;  // failing relation, empty on success
    int column = -1;       // basis vector on which the relation fails
    std::vector<int> residual;
};
RelationReport check_relations(const Module& M);

// Matrix of the action of a monomial / element.
Matrix act_monomial(const Module& M, int idx);
Matrix act_element(const Module& M, const Element& a);
// rho(a) V for a block of column vectors V.
Matrix apply_element(const Module& M, const Element& a, const Matrix& V);

Module direct_sum(const Module& M, const Module& N);
Module direct_sum(const std::vector<Module>& ms);
Module parity_change(const Module& M);
Module dual(const Module& M);
// u(osp) -> u(sl2) with e = E^2, f = -F^2 (and g kept for the smash versions).
Module restrict_to_sl2(const Module& M);
// Adds g = diag((-1)^parity) over the matching smash preset.
Module to_smash_module(const Module& M);
// Forgets g: smash module -> module over the plain preset.
Module forget_smash(const Module& M);
Module regular_module(const AlgebraPtr& alg);

// Columns of B span an invariant subspace; returns the module on it. The basis
// is B, or a homogeneous rebasing of it when the subspace is graded; `used`
// receives the basis actually chosen.
Module submodule(const Module& M, const Matrix& B, Matrix* used = nullptr);
// Quotient by the invariant subspace spanned by the columns of S.
Module quotient(const Module& M, const Matrix& S);
// Change of basis: the module with action T^{-1} X T.
Module conjugate(const Module& M, const Matrix& T);
// Smallest invariant subspace containing the columns of V (basis as columns).
Matrix spin(const Module& M, const Matrix& V);

std::string module_to_json(const Module& M);
// Algebras referenced as "<preset>@p=<p>" are rebuilt; others must be passed.
Module module_from_json(const std::string& text, AlgebraPtr alg = nullptr);

}  // namespace sa

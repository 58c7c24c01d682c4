#pragma once

#include <string>
#include <vector>

#include "superalg/matrix.hpp"
#include "superalg/module.hpp"
#include "superalg/pbw.hpp"

namespace sa {

// u(osp(1|2)) over its even part S = u(sl2), embedded by e = E^2, f = -F^2.
// Decomposes elements in the free bases {1, E, F, EF} over S, on either side.
class FrobeniusExtension {
public:
    explicit FrobeniusExtension(int p);

    const AlgebraPtr& osp() const { return R_; }
    const AlgebraPtr& sl2() const { return S_; }
    const std::vector<Element>& basis() const { return B_; }  // 1, E, F, EF
    // S-element as an element of R.
    Element embed(const Element& s) const;
    // r = sum_k s_k b_k (left) or r = sum_k b_k s_k (right); s_k in S.
    std::vector<Element> left_coeffs(const Element& r) const;
    std::vector<Element> right_coeffs(const Element& r) const;
    // The form <a, b> = coefficient of EF in the left decomposition of ab.
    Element form(const Element& a, const Element& b) const;

private:
    std::vector<Element> coeffs(const Matrix& inv, const Element& r) const;
    AlgebraPtr R_, S_;
    std::vector<Element> B_, Sb_;  // Sb_[t]: image of the t-th sl2 monomial
    Matrix left_inv_, right_inv_;
};

struct DualProjectivePair {
    int p = 3;
    std::vector<Element> x, y;   // four each, in u(osp(1|2))
    std::string assignment;      // how the matrix units were matched to E, F
};
// x1 = 1, x2 = x, x3 = y, x4 = xy + 1 - [x, y]; y1 = xy, y2 = y, y3 = -x, y4 = 1,
// with [x, y] the super bracket xy + yx of two odd elements.
DualProjectivePair make_dual_pair(const FrobeniusExtension& ext, const Element& x, const Element& y,
                                  std::string assignment = {});
// Searches x = aE, y = bF (then x = aF, y = bE) over a, b in {1, -1, 1/2, -1/2}
// and keeps the first pair satisfying the reconstruction identities.
DualProjectivePair find_dual_pair(const FrobeniusExtension& ext, int samples = 50, uint64_t seed = 1);

struct DualPairReport {
    bool sum_is_one = false;         // sum y_i x_i = 1
    std::string residual;            // sum y_i x_i - 1 when it is not
    bool reconstruction = false;     // r = sum y_i <x_i, r> = sum <r, y_i> x_i on the samples
    bool form_bilinear = false;      // <s a, b> = s <a, b>, <a, b s> = <a, b> s, <a r, b> = <a, r b>
    int samples = 0;
    std::string detail;
    bool pass() const { return sum_is_one && reconstruction && form_bilinear; }
};
// samples = 0 checks only the sum identity.
DualPairReport verify_dual_pair(const FrobeniusExtension& ext, const DualProjectivePair& pair, int samples = 50,
                                uint64_t seed = 1);

// u(osp(1|2)) tensor_S M for an sl2-module M, basis b_k (x) m_j in blocks k = 1, E, F, EF.
Module induce(const FrobeniusExtension& ext, const Module& M);

// Tr(f) = sum y_i f x_i. Throws usage_error if f is not linear for the restricted
// actions, logic_error if the result fails to intertwine the osp action.
Matrix trace_map(const DualProjectivePair& pair, const Module& M, const Module& N, const Matrix& f);

struct SplitCertificate {
    std::string module_id;
    Module induced;              // induce(restrict(M))
    Matrix phi;                  // induced -> M, a (x) m -> a m
    Matrix psi;                  // M -> induced, m -> 1 (x) m
    Matrix trace_psi;            // Tr(psi)
    bool phi_is_hom = false, trace_is_hom = false, composite_is_identity = false;
    bool ok() const { return phi_is_hom && trace_is_hom && composite_is_identity; }
    std::string to_json() const;
};
// Throws std::logic_error if phi o Tr(psi) != id.
SplitCertificate split_summand_check(const FrobeniusExtension& ext, const DualProjectivePair& pair, const Module& M);

// Projective cover is an isomorphism.
bool is_projective(const Module& M);

struct ProjectivityCertificate {
    bool restriction_projective = false;
    SplitCertificate split;
    bool projective() const { return restriction_projective && split.ok(); }
};
ProjectivityCertificate certify_projective(const FrobeniusExtension& ext, const DualProjectivePair& pair,
                                           const Module& M);

}  // namespace sa

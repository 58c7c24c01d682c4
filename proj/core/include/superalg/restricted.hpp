#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sa {

// Lie superalgebra on a finite basis with a p-map on the even basis vectors.
struct LieSuperData {
    int p = 3;
    std::vector<std::string> names;
    std::vector<int> parity;
    // bracket[i][j] = coefficients of [b_i, b_j]
    std::vector<std::vector<std::vector<int>>> bracket;
    // pmap[i] = b_i^{[p]} for even i; ignored for odd i
    std::vector<std::vector<int>> pmap;

    int dim() const { return static_cast<int>(names.size()); }
    std::vector<int> br(const std::vector<int>& x, const std::vector<int>& y) const;
    int index(const std::string& name) const;
};

struct AxiomReport {
    bool pass = true;
    std::string axiom;    // "a", "b", "c" or "bracket" for a failing check
    std::string witness;  // human-readable witness
    int checked = 0;
};

// p-map on an arbitrary even vector, extended from the basis through the
// s_i correction terms.
std::vector<int> pmap_extended(const LieSuperData& L, const std::vector<int>& x);
// sum_i s_i(x, y), with i s_i the coefficient of t^{i-1} in ad(t x + y)^{p-1}(x).
std::vector<int> jacobson_terms(const LieSuperData& L, const std::vector<int>& x, const std::vector<int>& y);

AxiomReport verify_restricted_axioms(const LieSuperData& L, uint64_t seed = 1, int samples = 200);

LieSuperData sl2_lie_data(int p);
// Basis E, F, e, f, h with e = E^2, f = -F^2.
LieSuperData osp12_lie_data(int p);

}  // namespace sa

#pragma once

// Brute-force references used to freeze expected values in the unit tests.
// They share nothing with the library's homological code beyond Matrix.

#include <vector>

#include "superalg/module.hpp"

namespace oracle {

// dim Hom_A(M, N) from the full Kronecker system (X^T (x) I - I (x) Y) vec T = 0.
inline int hom_dim(const sa::Module& M, const sa::Module& N) {
    const int m = M.dim, n = N.dim, p = M.p();
    const int ng = static_cast<int>(M.act.size());
    sa::Matrix K(ng * n * m, n * m, p);
    for (int g = 0; g < ng; ++g) {
        const sa::Matrix& X = M.act[g];
        const sa::Matrix& Y = N.act[g];
        // (T X - Y T)_{ij} = sum_k T_ik X_kj - sum_l Y_il T_lj ; T_ik at column i*m+k
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) {
                int r = g * n * m + i * m + j;
                for (int k = 0; k < m; ++k) K.add_to(r, i * m + k, X.at(k, j));
                for (int l = 0; l < n; ++l) K.add_to(r, l * m + j, -Y.at(i, l));
            }
    }
    return n * m - sa::rank(K);
}

// Composition multiplicities [M : S_i] = dim Hom(P_i, M), given the
// projective covers P_i of the simples (End(S_i) is the ground field).
inline std::vector<int> composition(const sa::Module& M, const std::vector<sa::Module>& covers) {
    std::vector<int> out;
    for (auto& P : covers) out.push_back(oracle::hom_dim(P, M));
    return out;
}

}  // namespace oracle

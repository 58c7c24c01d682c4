#include <map>
#include <random>

#include "doctest.h"
#include "superalg/families.hpp"
#include "superalg/frob.hpp"
#include "superalg/homalg.hpp"

using namespace sa;

namespace {

const FrobeniusExtension& ext(int p) {
    static std::map<int, FrobeniusExtension> cache;
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, FrobeniusExtension(p)).first;
    return it->second;
}

DualProjectivePair pair_EF(int p) {
    auto& X = ext(p);
    return make_dual_pair(X, X.osp()->generator(0), X.osp()->generator(1), "x = E, y = F");
}

}  // namespace

TEST_CASE("frobenius: free basis over u(sl2)") {
    auto& X = ext(3);
    const AlgebraPtr& R = X.osp();
    Element E = R->generator(0), F = R->generator(1);
    // E * EF = e F = F e - E, decomposed on the right
    auto c = X.right_coeffs(E * E * F);
    CHECK(c[0].is_zero());
    CHECK(X.embed(c[1]) == R->unit().scaled(-1));
    CHECK(c[2] == X.sl2()->generator(0));
    CHECK(c[3].is_zero());
    // left and right decompositions reassemble
    for (int m : {0, 7, 31, 77, 107}) {
        Element r = R->monomial(m), l = R->zero(), q = R->zero();
        auto a = X.left_coeffs(r), b = X.right_coeffs(r);
        for (int k = 0; k < 4; ++k) {
            l = l + X.embed(a[k]) * X.basis()[k];
            q = q + X.basis()[k] * X.embed(b[k]);
        }
        CHECK(l == r);
        CHECK(q == r);
    }
    CHECK_THROWS_AS(X.embed(R->unit()), usage_error);
}

TEST_CASE("frobenius: dual pair") {
    for (int p : {3, 5, 7}) {
        auto r = verify_dual_pair(ext(p), pair_EF(p), 0);
        CHECK(r.sum_is_one);
    }
    for (int p : {3, 5}) {
        auto r = verify_dual_pair(ext(p), pair_EF(p), 50, 11);
        CHECK_MESSAGE(r.pass(), r.detail);
        CHECK(r.samples == 50);
        CHECK(find_dual_pair(ext(p)).assignment == "x = 1 E, y = 1 F");
    }
    // reading [x, y] as xy - yx leaves 1 + 2yx
    auto& X = ext(3);
    Element E = X.osp()->generator(0), F = X.osp()->generator(1);
    auto d = pair_EF(3);
    d.x[3] = E * F + X.osp()->unit() - (E * F - F * E);
    auto r = verify_dual_pair(X, d, 0);
    CHECK_FALSE(r.sum_is_one);
    CHECK(r.residual == (F * E).scaled(2).to_string());
}

TEST_CASE("frobenius: mutated pairs fail") {
    auto& X = ext(3);
    Element E = X.osp()->generator(0), F = X.osp()->generator(1);
    auto d = pair_EF(3);
    d.y[2] = d.y[2].scaled(-1);
    auto r = verify_dual_pair(X, d, 10);
    CHECK_FALSE(r.sum_is_one);
    CHECK(r.residual == (E * F).scaled(2).to_string());
    CHECK_FALSE(r.pass());
    // the sum identity alone does not fix the scalars: x = E, y = 2F satisfies it
    auto s = make_dual_pair(X, E, F.scaled(2));
    auto rs = verify_dual_pair(X, s, 10);
    CHECK(rs.sum_is_one);
    CHECK_FALSE(rs.reconstruction);
}

TEST_CASE("frobenius: induce") {
    const int p = 3;
    auto& X = ext(p);
    Module T = induce(X, trivial_module(X.sl2()));
    CHECK(T.dim == 4);
    CHECK(check_relations(T).pass);

    Module St = induce(X, make_module({Family::V0, p - 1}, p));
    CHECK(St.dim == 12);
    CHECK(check_relations(St).pass);
    auto parts = decompose(St);
    REQUIRE(parts.size() == 1);
    auto id = identify(parts[0], 1);
    REQUIRE(id.has_value());
    CHECK(id->family == Family::P);

    for (int l = 0; l < p; ++l) {
        Module V = make_module({Family::V, l}, p);
        Module I = induce(X, restrict_to_sl2(V));
        CHECK(I.dim == 4 * V.dim);
        bool found = false;
        for (auto& s : decompose(I)) found = found || is_isomorphic(s, V).outcome == IsoOutcome::yes;
        CHECK(found);
    }
    CHECK_THROWS_AS(induce(X, make_module({Family::V0, 0}, 5)), usage_error);
    CHECK_THROWS_AS(induce(X, make_module({Family::V, 0}, 3)), usage_error);
}

TEST_CASE("frobenius: projectivity transfer") {
    for (int p : {3, 5}) {
        auto& X = ext(p);
        for (int mu = 0; mu < p; ++mu) {
            Module I = induce(X, make_module({Family::P0, mu}, p));
            CHECK(check_relations(I).pass);
            CHECK(is_projective(I));
            if (p > 3) continue;
            for (auto& s : decompose(I)) {
                auto id = identify(s, 1);
                REQUIRE(id.has_value());
                CHECK(id->family == Family::P);
            }
        }
    }
}

TEST_CASE("frobenius: reciprocity on seeded pairs") {
    const int p = 3;
    auto& X = ext(p);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> lam(0, p - 1), fam(0, 3), side(0, 1);
    const Family osp_fams[4] = {Family::V, Family::P, Family::W, Family::Wt};
    for (int k = 0; k < 10; ++k) {
        Module M = make_module({side(rng) ? Family::V0 : Family::P0, lam(rng)}, p);
        Module N = make_module({osp_fams[fam(rng)], lam(rng)}, p);
        INFO(M.label << " " << N.label);
        CHECK(hom_dim(induce(X, M), N) == hom_dim(M, restrict_to_sl2(N)));
    }
}

TEST_CASE("frobenius: trace map") {
    const int p = 3;
    auto d = pair_EF(p);
    Module P = make_module({Family::P, 1}, p);
    CHECK(trace_map(d, P, P, Matrix::identity(P.dim, p)).is_identity());
    CHECK(trace_map(d, P, P, Matrix(P.dim, P.dim, p)).is_zero());
    // E does not commute with f
    CHECK_THROWS_AS(trace_map(d, P, P, P.action("E")), usage_error);
    // every sl2-endomorphism of a restriction traces to an osp endomorphism
    Module V = make_module({Family::V, 1}, p);
    for (auto& f : hom_basis(restrict_to_sl2(V), restrict_to_sl2(V)).basis) {
        Matrix t = trace_map(d, V, V, f);
        CHECK(is_hom(V, V, t));
    }
}

TEST_CASE("frobenius: split summand certificates") {
    for (int p : {3, 5}) {
        auto& X = ext(p);
        auto d = pair_EF(p);
        for (int l = 0; l < p; ++l) {
            auto c = certify_projective(X, d, make_module({Family::P, l}, p));
            CHECK(c.projective());
            auto v = certify_projective(X, d, make_module({Family::V, l}, p));
            CHECK(v.split.ok());
            CHECK_FALSE(v.restriction_projective);
        }
    }
    auto& X = ext(3);
    auto c = split_summand_check(X, pair_EF(3), trivial_module(X.osp()));
    CHECK(c.induced.dim == 4);
    CHECK(c.ok());
    auto j = c.to_json();
    CHECK(j.find("\"composite_is_identity\":true") != std::string::npos);
    CHECK(j.find("\"trace_psi\":[[") != std::string::npos);
}

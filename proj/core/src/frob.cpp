#include "superalg/frob.hpp"

#include <random>
#include <stdexcept>

#include "json.hpp"
#include "superalg/homalg.hpp"

namespace sa {

namespace {

Matrix decomposition_matrix(const std::vector<Element>& B, const std::vector<Element>& Sb, int n, int p, bool left) {
    const int s = static_cast<int>(Sb.size());
    Matrix M(n, n, p);
    for (size_t k = 0; k < B.size(); ++k)
        for (int t = 0; t < s; ++t) {
            Element v = left ? Sb[t] * B[k] : B[k] * Sb[t];
            for (auto [r, c] : v.terms()) M.set(r, static_cast<int>(k) * s + t, c);
        }
    return M;
}

std::string element_text(const Element& e) { return e.is_zero() ? "0" : e.to_string(); }

nlohmann::json matrix_json(const Matrix& M) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < M.rows(); ++r) {
        std::vector<int> row(M.row_ptr(r), M.row_ptr(r) + M.cols());
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

FrobeniusExtension::FrobeniusExtension(int p) {
    R_ = build_preset("osp12", p);
    S_ = build_preset("sl2", p);
    Element E = R_->generator(0), F = R_->generator(1), h = R_->generator(2);
    B_ = {R_->unit(), E, F, E * F};
    Element e = E * E, f = (F * F).scaled(-1);
    Sb_.resize(S_->dim());
    for (int t = 0; t < S_->dim(); ++t) {
        Exps x = S_->exps(t);
        Element m = R_->unit();
        for (int a = 0; a < x[0]; ++a) m = m * e;
        for (int a = 0; a < x[1]; ++a) m = m * f;
        for (int a = 0; a < x[2]; ++a) m = m * h;
        Sb_[t] = m;
    }
    const int n = R_->dim();
    auto L = inverse(decomposition_matrix(B_, Sb_, n, p, true));
    auto Rt = inverse(decomposition_matrix(B_, Sb_, n, p, false));
    if (!L || !Rt) throw std::logic_error("{1, E, F, EF} is not a free basis over u(sl2)");
    left_inv_ = std::move(*L);
    right_inv_ = std::move(*Rt);
}

Element FrobeniusExtension::embed(const Element& s) const {
    if (s.algebra()->ref() != S_->ref()) throw usage_error("element is not in u(sl2) at this p");
    Element out = R_->zero();
    for (auto [t, c] : s.terms()) out = out + Sb_[t].scaled(c);
    return out;
}

std::vector<Element> FrobeniusExtension::coeffs(const Matrix& inv, const Element& r) const {
    Matrix v = inv * Matrix::column(r.coeffs(), R_->p());
    const int s = S_->dim();
    std::vector<Element> out;
    for (int k = 0; k < 4; ++k) {
        std::vector<int> c(s);
        for (int t = 0; t < s; ++t) c[t] = v.at(k * s + t, 0);
        out.emplace_back(S_, std::move(c));
    }
    return out;
}

std::vector<Element> FrobeniusExtension::left_coeffs(const Element& r) const { return coeffs(left_inv_, r); }
std::vector<Element> FrobeniusExtension::right_coeffs(const Element& r) const { return coeffs(right_inv_, r); }

Element FrobeniusExtension::form(const Element& a, const Element& b) const { return left_coeffs(a * b)[3]; }

DualProjectivePair make_dual_pair(const FrobeniusExtension& ext, const Element& x, const Element& y,
                                  std::string assignment) {
    Element one = ext.osp()->unit();
    DualProjectivePair d;
    d.p = ext.osp()->p();
    d.x = {one, x, y, x * y + one - (x * y + y * x)};
    d.y = {x * y, y, x.scaled(-1), one};
    d.assignment = std::move(assignment);
    return d;
}

DualProjectivePair find_dual_pair(const FrobeniusExtension& ext, int samples, uint64_t seed) {
    const AlgebraPtr& R = ext.osp();
    const Field& F = R->field();
    const int half = F.inv(2);
    const std::vector<std::pair<int, std::string>> lattice = {
        {1, "1"}, {F.neg(1), "-1"}, {half, "1/2"}, {F.neg(half), "-1/2"}};
    for (int swap = 0; swap < 2; ++swap)
        for (auto& [a, an] : lattice)
            for (auto& [b, bn] : lattice) {
                Element x = R->generator(swap).scaled(a), y = R->generator(1 - swap).scaled(b);
                std::string text = std::string("x = ") + an + (swap ? " F" : " E") + ", y = " + bn + (swap ? " E" : " F");
                auto d = make_dual_pair(ext, x, y, text);
                if (verify_dual_pair(ext, d, samples, seed).pass()) return d;
            }
    throw std::logic_error("no dual projective pair on the scalar lattice");
}

DualPairReport verify_dual_pair(const FrobeniusExtension& ext, const DualProjectivePair& pair, int samples,
                                uint64_t seed) {
    const AlgebraPtr& R = ext.osp();
    DualPairReport rep;
    Element sum = R->zero();
    for (int i = 0; i < 4; ++i) sum = sum + pair.y[i] * pair.x[i];
    Element res = sum - R->unit();
    rep.sum_is_one = res.is_zero();
    if (!rep.sum_is_one) rep.residual = element_text(res);
    if (samples <= 0) return rep;

    std::mt19937_64 rng(seed);
    auto random_element = [&](const AlgebraPtr& A) {
        std::uniform_int_distribution<int> mono(0, A->dim() - 1), coef(1, A->p() - 1);
        Element e = A->zero();
        for (int k = 0; k < 3; ++k) e = e + A->monomial(mono(rng)).scaled(coef(rng));
        return e;
    };
    rep.reconstruction = rep.form_bilinear = true;
    for (int k = 0; k < samples; ++k) {
        // generators first, then seeded elements
        Element r = k < R->ngens() ? R->generator(k) : random_element(R);
        Element a = R->zero(), b = R->zero();
        for (int i = 0; i < 4; ++i) {
            a = a + pair.y[i] * ext.embed(ext.form(pair.x[i], r));
            b = b + ext.embed(ext.form(r, pair.y[i])) * pair.x[i];
        }
        if (rep.reconstruction && (a != r || b != r)) {
            rep.reconstruction = false;
            rep.detail = "reconstruction fails on " + element_text(r);
        }
        Element s = ext.embed(random_element(ext.sl2())), u = random_element(R), v = random_element(R);
        Element f = ext.embed(ext.form(u, v));
        bool lin = ext.embed(ext.form(s * u, v)) == s * f && ext.embed(ext.form(u, v * s)) == f * s &&
                   ext.form(u * r, v) == ext.form(u, r * v);
        if (rep.form_bilinear && !lin) {
            rep.form_bilinear = false;
            if (rep.detail.empty()) rep.detail = "form is not associative on sample " + std::to_string(k);
        }
        ++rep.samples;
    }
    return rep;
}

Module induce(const FrobeniusExtension& ext, const Module& M) {
    if (M.alg->name() != "sl2") throw usage_error("induce needs a module over u(sl2)");
    if (M.p() != ext.osp()->p()) throw usage_error("module and extension use different p");
    const AlgebraPtr& R = ext.osp();
    const int d = M.dim, p = M.p();
    const auto& B = ext.basis();
    std::vector<Matrix> act;
    for (int g = 0; g < R->ngens(); ++g) {
        Matrix A(4 * d, 4 * d, p);
        for (int k = 0; k < 4; ++k) {
            auto c = ext.right_coeffs(R->generator(g) * B[k]);
            for (int j = 0; j < 4; ++j)
                if (!c[j].is_zero()) A.set_block(j * d, k * d, act_element(M, c[j]));
        }
        act.push_back(std::move(A));
    }
    std::vector<int> par(4 * d);
    const int bpar[4] = {0, 1, 1, 0};
    for (int k = 0; k < 4; ++k)
        for (int j = 0; j < d; ++j) par[k * d + j] = (bpar[k] + M.parity[j]) % 2;
    return make_module_raw(R, std::move(act), std::move(par), "ind(" + M.label + ")");
}

Matrix trace_map(const DualProjectivePair& pair, const Module& M, const Module& N, const Matrix& f) {
    if (M.alg->name() != "osp12" || N.alg->name() != "osp12") throw usage_error("trace_map needs osp modules");
    if (f.rows() != N.dim || f.cols() != M.dim) throw usage_error("map has the wrong shape");
    if (!is_hom(restrict_to_sl2(M), restrict_to_sl2(N), f)) throw usage_error("map is not u(sl2)-linear");
    Matrix T(N.dim, M.dim, M.p());
    for (int i = 0; i < 4; ++i) T += act_element(N, pair.y[i]) * f * act_element(M, pair.x[i]);
    if (!is_hom(M, N, T)) throw std::logic_error("trace of an sl2-linear map is not osp-linear");
    return T;
}

std::string SplitCertificate::to_json() const {
    nlohmann::json j;
    j["module_id"] = module_id;
    j["phi"] = matrix_json(phi);
    j["trace_psi"] = matrix_json(trace_psi);
    j["composite_is_identity"] = composite_is_identity;
    return j.dump();
}

SplitCertificate split_summand_check(const FrobeniusExtension& ext, const DualProjectivePair& pair, const Module& M) {
    if (M.alg->name() != "osp12" || M.p() != ext.osp()->p()) throw usage_error("split check needs an osp module at the extension's p");
    SplitCertificate c;
    c.module_id = M.label;
    c.induced = induce(ext, restrict_to_sl2(M));
    const int d = M.dim, p = M.p();
    c.phi = Matrix(d, 4 * d, p);
    for (int k = 0; k < 4; ++k) c.phi.set_block(0, k * d, act_element(M, ext.basis()[k]));
    c.psi = Matrix(4 * d, d, p);
    c.psi.set_block(0, 0, Matrix::identity(d, p));
    c.phi_is_hom = is_hom(c.induced, M, c.phi);
    c.trace_psi = trace_map(pair, M, c.induced, c.psi);
    c.trace_is_hom = true;  // trace_map throws otherwise
    c.composite_is_identity = (c.phi * c.trace_psi).is_identity();
    if (!c.composite_is_identity) throw std::logic_error("phi o Tr(psi) is not the identity on " + M.label);
    return c;
}

bool is_projective(const Module& M) { return projective_cover(M).P.dim == M.dim; }

ProjectivityCertificate certify_projective(const FrobeniusExtension& ext, const DualProjectivePair& pair,
                                           const Module& M) {
    ProjectivityCertificate c;
    c.restriction_projective = is_projective(restrict_to_sl2(M));
    c.split = split_summand_check(ext, pair, M);
    return c;
}

}  // namespace sa

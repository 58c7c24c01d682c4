#include "superalg/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "superalg/families.hpp"
#include "superalg/frob.hpp"
#include "superalg/homalg.hpp"
#include "superalg/qci.hpp"
#include "superalg/restricted.hpp"

namespace sa::cli {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Module mk(Family f, int l, int p, int n = 0, int s1 = 1, int s2 = 1) { return make_module({f, l, n, s1, s2}, p); }

void add(SuiteReport& s, std::string claim, bool pass, std::string detail = {}) {
    s.claims.push_back({std::move(claim), pass, std::move(detail)});
}

std::string join_blocks(std::vector<std::vector<int>> B) {
    for (auto& b : B) std::sort(b.begin(), b.end());
    std::sort(B.begin(), B.end());
    std::string out;
    for (size_t i = 0; i < B.size(); ++i) {
        if (i) out += ",";
        out += "{";
        for (size_t j = 0; j < B[i].size(); ++j) out += (j ? "," : "") + std::to_string(B[i][j]);
        out += "}";
    }
    return out;
}

bool same_multiset(std::vector<Module> A, std::vector<Module> B) {
    if (A.size() != B.size()) return false;
    std::vector<char> used(B.size(), 0);
    for (auto& a : A) {
        bool hit = false;
        for (size_t j = 0; j < B.size() && !hit; ++j)
            if (!used[j] && a.dim == B[j].dim && is_isomorphic(a, B[j]).outcome == IsoOutcome::yes) used[j] = hit = true;
        if (!hit) return false;
    }
    return true;
}

SuiteReport suite_pbw(const RunConfig& c) {
    SuiteReport s;
    const int p = c.p;
    auto R = build_preset("osp12", p), S = build_preset("sl2", p);
    add(s, "u(osp(1|2)) has a PBW basis of size 4p^3", R->dim() == 4 * p * p * p, std::to_string(R->dim()));
    add(s, "u(sl2) has a PBW basis of size p^3", S->dim() == p * p * p, std::to_string(S->dim()));
    add(s, "smash products double the dimension",
        build_preset("osp12_smash", p)->dim() == 2 * R->dim() && build_preset("sl2_smash", p)->dim() == 2 * S->dim());
    auto a = verify_restricted_axioms(osp12_lie_data(p), c.seed);
    add(s, "osp(1|2) satisfies the restricted axioms", a.pass, a.pass ? std::to_string(a.checked) + " checks" : a.axiom + ": " + a.witness);
    auto b = verify_restricted_axioms(sl2_lie_data(p), c.seed);
    add(s, "sl2 satisfies the restricted axioms", b.pass, b.pass ? std::to_string(b.checked) + " checks" : b.axiom + ": " + b.witness);
    s.summary = "pbw: dim u(osp12) = " + std::to_string(R->dim()) + ", dim u(sl2) = " + std::to_string(S->dim());
    return s;
}

SuiteReport suite_modules(const RunConfig& c) {
    SuiteReport s;
    const int p = c.p;
    auto R = build_preset("osp12", p);
    const auto& simp = simples(R);
    bool dims = static_cast<int>(simp.size()) == p, rel = true, schur = true;
    for (int l = 0; l < static_cast<int>(simp.size()); ++l) {
        dims = dims && simp[l].dim == 2 * l + 1;
        rel = rel && check_relations(simp[l]).pass;
        for (int m = 0; m < static_cast<int>(simp.size()); ++m) schur = schur && hom_dim(simp[l], simp[m]) == (l == m);
    }
    add(s, "p simple modules V^l of dimension 2l+1", dims);
    add(s, "simple modules satisfy the defining relations", rel);
    add(s, "Hom between simples is the Schur pattern", schur);

    bool pdim = true, prel = true, ploc = true;
    for (int l = 0; l < p; ++l) {
        Module P = mk(Family::P, l, p);
        pdim = pdim && P.dim == 4 * p;
        prel = prel && check_relations(P).pass;
        ploc = ploc && end_ring(P).is_local;
    }
    add(s, "projectives P^l have dimension 4p", pdim);
    add(s, "projectives satisfy the defining relations", prel);
    add(s, "projectives have local endomorphism rings", ploc);

    bool w = true, wt = true, pw = true;
    std::string wd;
    for (int l = 0; l < p; ++l) {
        Module Va = mk(Family::V, p - 1 - l, p), Vb = mk(Family::V, l, p);
        if (nonsplit_extension_check(Va, Vb, mk(Family::W, l, p), c.seed).outcome != ExtensionOutcome::nonsplit) {
            w = false;
            wd = "W^" + std::to_string(l);
        }
        if (nonsplit_extension_check(Va, Vb, mk(Family::Wt, l, p), c.seed).outcome != ExtensionOutcome::nonsplit) {
            wt = false;
            wd = "Wt^" + std::to_string(l);
        }
        if (nonsplit_extension_check(mk(Family::W, l, p), mk(Family::W, p - 1 - l, p), mk(Family::P, p - 1 - l, p), c.seed)
                .outcome != ExtensionOutcome::nonsplit) {
            pw = false;
            wd = "P^" + std::to_string(p - 1 - l);
        }
    }
    add(s, "0 -> V^(p-1-l) -> W^l -> V^l -> 0 is non-split", w, w ? "" : wd);
    add(s, "0 -> V^(p-1-l) -> Wt^l -> V^l -> 0 is non-split", wt, wt ? "" : wd);
    add(s, "0 -> W^l -> P^(p-1-l) -> W^(p-1-l) -> 0 is non-split", pw, pw ? "" : wd);

    bool res = true;
    std::string rd;
    for (int l = 0; l < p; ++l) {
        std::vector<Module> want;
        const int a = p - 1 - l, b = p - 2 - l;
        if (l == 0) want = {mk(Family::V0, p - 1, p), mk(Family::V0, p - 1, p), mk(Family::P0, p - 2, p)};
        else if (l == p - 1) want = {mk(Family::P0, 0, p), mk(Family::V0, p - 1, p), mk(Family::V0, p - 1, p)};
        else want = {mk(Family::P0, a, p), mk(Family::P0, b, p)};
        if (!same_multiset(decompose(restrict_to_sl2(mk(Family::P, a, p))), want)) {
            res = false;
            rd = "restriction of P^" + std::to_string(a);
        }
    }
    add(s, "restrictions of projectives split into sl2 projectives", res, rd);
    s.summary = "modules: " + std::to_string(simp.size()) + " simples, " + std::to_string(p) + " projectives";
    return s;
}

SuiteReport suite_blocks(const RunConfig& c) {
    SuiteReport s;
    const int p = c.p;
    auto B = blocks(build_preset("osp12", p));
    bool ok = static_cast<int>(B.size()) == (p + 1) / 2;
    for (auto& b : B) ok = ok && (b.size() == 1 ? b[0] == (p - 1) / 2 : b.size() == 2 && b[0] + b[1] == p - 1);
    add(s, "u(osp(1|2)) has (p+1)/2 blocks pairing l with p-1-l", ok, join_blocks(B));
    auto S = blocks(build_preset("sl2", p));
    bool ok2 = static_cast<int>(S.size()) == (p + 1) / 2;
    for (auto& b : S) ok2 = ok2 && (b.size() == 1 ? b[0] == p - 1 : b.size() == 2 && b[0] + b[1] == p - 2);
    add(s, "u(sl2) has (p+1)/2 blocks pairing l with p-2-l", ok2, join_blocks(S));
    s.summary = "blocks: " + std::to_string(B.size()) + ", pairing " + join_blocks(B);
    return s;
}

SuiteReport suite_endrings(const RunConfig& c) {
    SuiteReport s;
    const int p = c.p, m = (p - 1) / 2;
    Module P = mk(Family::P, m, p);
    EndRing E = end_ring(P);
    add(s, "End(P^((p-1)/2)) is local of dimension 4", E.dim() == 4 && E.is_local, "dim " + std::to_string(E.dim()));
    auto lit = local_presentation(P, LocalRelations::commutative);
    add(s, "End(P^((p-1)/2)) has arrows with x^2 = y^2, xy = yx = 0", lit.found, lit.found ? "" : lit.detail);
    auto ext = local_presentation(P, LocalRelations::exterior);
    add(s, "End(P^((p-1)/2)) has arrows with x^2 = y^2 = 0, xy = -yx", ext.found, ext.detail);
    bool two = true;
    std::string td;
    for (int l = 0; l < p; ++l) {
        if (l == m) continue;
        Module Q = mk(Family::P, p - 1 - l, p);
        auto pr = pair_presentation(mk(Family::P, l, p), Q);
        if (pr.end_dim != 8 || !pr.found) {
            two = false;
            td = "l = " + std::to_string(l) + ": " + pr.detail;
        }
    }
    add(s, "End(P^l + P^(p-1-l)) has dimension 8 and the two-vertex relations", two, td);
    s.summary = "endrings: dim End(P^" + std::to_string(m) + ") = " + std::to_string(E.dim());
    return s;
}

SuiteReport suite_qci(const RunConfig& c) {
    SuiteReport s;
    const int p = c.p, D = std::max(c.depth, 4);
    bool d2 = true, exact = true, ext = true, cup = true, squares = true;
    std::string ld;
    int count = 0;
    for (auto& spec : seeded_qci_configs(p, 10, c.seed)) {
        auto K = build_koszul(spec, p, D);
        auto r = check_exactness(K);
        d2 = d2 && r.d_squared_zero;
        exact = exact && r.exact_through == D - 1;
        auto t = ext_dims_qci(K);
        for (size_t n = 0; n < t.computed.size(); ++n) ext = ext && t.computed[n] == t.closed_form[n];
        auto L = verify_cup_relations(K);
        for (auto& rc : L.checks)
            if (!rc.holds && cup) {
                cup = false;
                std::ostringstream o;
                o << "N = (";
                for (size_t i = 0; i < spec.N.size(); ++i) o << (i ? "," : "") << spec.N[i];
                o << "): " << rc.relation << ": " << rc.detail;
                ld = o.str();
            }
        for (auto& rc : L.squares) squares = squares && rc.holds;
        ++count;
    }
    add(s, "Koszul differentials square to zero", d2);
    add(s, "the Koszul complex is exact through degree " + std::to_string(D - 1), exact);
    add(s, "dim Ext^n = C(n+N-1, N-1)", ext);
    add(s, "the stated cup-product relations hold", cup, ld);
    add(s, "eta_i^2 = xi_i when N_i = 2", squares);
    auto G = build_koszul(graded_osp12_spec(p), p, std::max(D, 2 * p));
    auto w = verify_weight_actions(G, {1, p - 1});
    add(s, "h and g act on the graded osp(1|2) resolution as predicted", w.pass(), w.detail);
    add(s, "xi_i^p is fixed by h and g", w.xi_p_fixed);
    s.summary = "qci: " + std::to_string(count) + " configurations through degree " + std::to_string(D);
    return s;
}

SuiteReport suite_cocycles(const RunConfig& c) {
    SuiteReport s;
    const int p = c.p;
    auto R = build_qci(graded_osp12_spec(p), p);
    for (int i : {0, 1}) {
        auto xh = cocycle_xi_hat(R, i);
        auto r = verify_cocycle(xh, 10'000'000, c.seed);
        add(s, xh.id + " is a cocycle (exhaustive on triples)", r.cocycle && r.exhaustive, r.to_json());
        add(s, xh.id + " is not a coboundary", r.certificate, "value " + std::to_string(r.certificate_value));
    }
    auto K = build_koszul(graded_osp12_spec(p), p, 2);
    add(s, "the Koszul class xi_E agrees with xi_hat_E", xi_matches_xi_hat(K, cocycle_xi_hat(R, 0)));
    auto f = cocycle_f(build_preset("osp12", p), 0);
    auto r = verify_cocycle(f, 10000, c.seed);
    add(s, f.id + " is a cocycle (10^4 seeded tuples)", r.cocycle, r.to_json());
    add(s, f.id + " is not a coboundary", r.certificate, "value " + std::to_string(r.certificate_value));
    s.summary = "cocycles: xi_hat on both graded generators, f_E on u(osp(1|2)), p = " + std::to_string(p);
    return s;
}

SuiteReport suite_frobenius(const RunConfig& c) {
    SuiteReport s;
    const int p = c.p;
    FrobeniusExtension X(p);
    auto pair = find_dual_pair(X, 50, c.seed);
    auto r = verify_dual_pair(X, pair, 50, c.seed);
    add(s, "sum y_i x_i = 1", r.sum_is_one, r.residual);
    add(s, "the dual pair reconstructs elements through the form", r.reconstruction && r.form_bilinear,
        pair.assignment + (r.detail.empty() ? "" : "; " + r.detail));
    bool proj = true;
    std::string pd;
    for (int l = 0; l < p; ++l) {
        auto cert = certify_projective(X, pair, mk(Family::P, l, p));
        if (!cert.projective()) {
            proj = false;
            pd = "P^" + std::to_string(l);
        }
    }
    add(s, "every P^l is a split summand of its induced restriction, with projective restriction", proj, pd);
    s.summary = "frobenius: " + pair.assignment;
    return s;
}

SuiteReport suite_complexity(const RunConfig& c) {
    SuiteReport s;
    const int p = c.p, D = c.depth;
    for (auto nm : {"sl2_smash", "osp12_smash"}) {
        auto A = build_preset(nm, p);
        auto cx = complexity_estimate(trivial_module(A), D);
        add(s, std::string("complexity of the trivial ") + nm + " module is 2", cx.conclusive && cx.value == 2,
            "value " + std::to_string(cx.value));
    }
    auto Q3 = build_qci({{2, 2, 2}, {{0, -1, -1}, {0, 0, -1}, {0, 0, 0}}, {1, 1, 1}}, p);
    auto w = wildness_verdict(Q3, D);
    add(s, "a three-generator quantum complete intersection is wild", w.verdict == Wildness::wild,
        "complexity " + std::to_string(w.complexity.value));
    s.summary = "complexity: depth " + std::to_string(D);
    return s;
}

SuiteReport suite_iso_sweep(const RunConfig& c) {
    SuiteReport s;
    const int p = c.p;
    std::vector<std::pair<int, int>> ss;
    for (int a = 1; a < p; ++a)
        for (int b = 1; b < p; ++b) ss.push_back({a, b});
    bool ok = true;
    int entries = 0;
    std::string bad;
    s.table.push_back("s \\ t  " + [&] {
        std::string h;
        for (auto [a, b] : ss) h += " (" + std::to_string(a) + "," + std::to_string(b) + ")";
        return h;
    }());
    for (auto [a, b] : ss) {
        std::string row = "(" + std::to_string(a) + "," + std::to_string(b) + ")   ";
        Module S = mk(Family::T, 1, p, 1, a, b);
        for (auto [x, y] : ss) {
            auto r = is_isomorphic(S, mk(Family::T, 1, p, 1, x, y), c.seed);
            bool want = (a * b - x * y) % p == 0;
            bool got = r.outcome == IsoOutcome::yes;
            if (r.outcome == IsoOutcome::indeterminate || got != want) {
                ok = false;
                bad = "s = (" + std::to_string(a) + "," + std::to_string(b) + "), t = (" + std::to_string(x) + "," +
                      std::to_string(y) + "): " + to_string(r.outcome);
            }
            row += got ? "     Y" : "     N";
            ++entries;
        }
        s.table.push_back(row);
    }
    add(s, "T^1(s,1) = T^1(t,1) exactly when s1 s2 = t1 t2", ok, bad);
    s.summary = "iso-sweep: " + std::to_string(entries) + " pairs";
    return s;
}

std::string csv_field(const std::string& v) {
    if (v.find_first_of(",\"\n") == std::string::npos) return v;
    std::string out = "\"";
    for (char ch : v) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"pbw",      "modules",   "blocks",     "endrings", "qci",
                                                "cocycles", "frobenius", "complexity", "iso-sweep"};
    return names;
}

int max_prime() {
    if (const char* e = std::getenv("SUPERALG_MAX_P")) {
        try {
            return std::stoi(e);
        } catch (const std::exception&) {
            throw usage_error("SUPERALG_MAX_P must be an integer");
        }
    }
    return 13;
}

void validate(const RunConfig& cfg) {
    if (!is_prime(cfg.p)) throw usage_error("p must be prime");
    if (cfg.p < 3) throw usage_error("p must be an odd prime");
    if (cfg.p > max_prime()) throw usage_error("p exceeds the cap " + std::to_string(max_prime()) + " (SUPERALG_MAX_P)");
    if (cfg.depth < 1 || cfg.depth > 12) throw usage_error("depth must lie in 1..12");
    for (auto& s : cfg.suites)
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
            throw usage_error("unknown suite: " + s);
    if (cfg.format != "json" && cfg.format != "markdown" && cfg.format != "csv")
        throw usage_error("format must be json, markdown or csv");
}

bool SuiteReport::pass() const {
    return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

bool RunReport::pass() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteReport& s) { return s.pass(); });
}

std::string RunReport::first_failure() const {
    for (auto& s : suites)
        for (auto& c : s.claims)
            if (!c.pass) return s.name + ": " + c.claim + (c.detail.empty() ? "" : ": " + c.detail);
    return {};
}

SuiteReport run_suite(const std::string& name, const RunConfig& cfg) {
    SuiteReport s;
    if (name == "pbw") s = suite_pbw(cfg);
    else if (name == "modules") s = suite_modules(cfg);
    else if (name == "blocks") s = suite_blocks(cfg);
    else if (name == "endrings") s = suite_endrings(cfg);
    else if (name == "qci") s = suite_qci(cfg);
    else if (name == "cocycles") s = suite_cocycles(cfg);
    else if (name == "frobenius") s = suite_frobenius(cfg);
    else if (name == "complexity") s = suite_complexity(cfg);
    else if (name == "iso-sweep") s = suite_iso_sweep(cfg);
    else throw usage_error("unknown suite: " + name);
    s.name = name;
    return s;
}

RunReport run(const RunConfig& cfg) {
    validate(cfg);
    std::vector<std::string> todo;
    for (auto& n : suite_names())
        if (cfg.suites.empty() || std::find(cfg.suites.begin(), cfg.suites.end(), n) != cfg.suites.end())
            todo.push_back(n);
    RunReport rep;
    rep.config = cfg;
    rep.suites.resize(todo.size());
    std::vector<std::string> errors(todo.size());
    std::mutex mu;
    size_t next = 0;
    auto worker = [&] {
        while (true) {
            size_t k;
            {
                std::lock_guard<std::mutex> lk(mu);
                if (next == todo.size()) return;
                k = next++;
            }
            try {
                rep.suites[k] = run_suite(todo[k], cfg);
            } catch (const std::exception& e) {
                rep.suites[k].name = todo[k];
                rep.suites[k].summary = todo[k] + ": aborted";
                rep.suites[k].claims.push_back({"suite completes", false, e.what()});
            }
        }
    };
    const size_t nthreads = std::min<size_t>(todo.size(), std::max(1u, std::min(4u, std::thread::hardware_concurrency())));
    std::vector<std::thread> pool;
    for (size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return rep;
}

std::string render(const RunReport& r, const std::string& format) {
    if (format == "json") {
        nlohmann::ordered_json j;
        j["p"] = r.config.p;
        j["depth"] = r.config.depth;
        j["seed"] = r.config.seed;
        j["pass"] = r.pass();
        j["suites"] = nlohmann::ordered_json::array();
        for (auto& s : r.suites) {
            nlohmann::ordered_json js;
            js["name"] = s.name;
            js["summary"] = s.summary;
            js["pass"] = s.pass();
            js["claims"] = nlohmann::ordered_json::array();
            for (auto& c : s.claims)
                js["claims"].push_back({{"claim", c.claim}, {"verdict", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
            if (!s.table.empty()) js["table"] = s.table;
            j["suites"].push_back(js);
        }
        return j.dump(2) + "\n";
    }
    std::ostringstream o;
    if (format == "csv") {
        o << "suite,claim,verdict,detail\n";
        for (auto& s : r.suites)
            for (auto& c : s.claims)
                o << csv_field(s.name) << "," << csv_field(c.claim) << "," << (c.pass ? "pass" : "fail") << ","
                  << csv_field(c.detail) << "\n";
        return o.str();
    }
    o << "# superalg report, p = " << r.config.p << ", depth " << r.config.depth << ", seed " << r.config.seed << "\n\n";
    for (auto& s : r.suites) {
        o << "## " << s.name << "\n\n" << s.summary << "\n\n";
        o << "| claim | verdict | detail |\n|---|---|---|\n";
        for (auto& c : s.claims) {
            std::string d = c.detail;
            std::replace(d.begin(), d.end(), '\n', ' ');
            std::string esc;
            for (char ch : d) esc += ch == '|' ? std::string("\\|") : std::string(1, ch);
            o << "| " << c.claim << " | " << (c.pass ? "pass" : "FAIL") << " | " << esc << " |\n";
        }
        if (!s.table.empty()) {
            o << "\n```\n";
            for (auto& l : s.table) o << l << "\n";
            o << "```\n";
        }
        o << "\n";
    }
    o << "overall: " << (r.pass() ? "pass" : "FAIL") << "\n";
    return o.str();
}

std::vector<CatalogueRow> report_catalogue(int p, int n_max) {
    if (!is_prime(p) || p < 3) throw usage_error("p must be prime");
    if (n_max < 0) throw usage_error("n_max must be non-negative");
    std::vector<CatalogueRow> rows;
    auto push = [&](const std::string& fam, const FamilyParams& q) {
        int dim = make_module(q, p).dim;
        int c = fam == "T" ? q.s1 : 0;
        rows.push_back({fam, q.lambda, q.n, c, dim, false});
        rows.push_back({fam, q.lambda, q.n, c, dim, true});
    };
    for (int l = 0; l < p; ++l) push("P", {Family::P, l});
    for (int n = 0; n <= n_max; ++n)
        for (int l = 0; l < p; ++l) {
            push("V", {Family::Vn, l, n});
            if (n > 0) push("Vt", {Family::Vtn, l, n});
        }
    for (int n = 1; n <= n_max; ++n)
        for (int l = 0; l < p; ++l) {
            push("W", {Family::Wn, l, n});
            push("Wt", {Family::Wtn, l, n});
        }
    for (int n = 1; n <= n_max; ++n)
        for (int l = 0; l < p; ++l)
            for (int c = 1; c < p; ++c) push("T", {Family::T, l, n, c, 1});
    return rows;
}

std::string render_catalogue(const std::vector<CatalogueRow>& rows, const std::string& format) {
    if (format == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (auto& r : rows)
            j.push_back({{"family", r.family}, {"lambda", r.lambda}, {"n", r.n}, {"c", r.c}, {"dim", r.dim},
                         {"parity_shifted", r.parity_shifted}});
        return j.dump(2) + "\n";
    }
    std::ostringstream o;
    if (format == "csv") {
        o << "family,lambda,n,c,dim,parity_shifted\n";
        for (auto& r : rows)
            o << r.family << "," << r.lambda << "," << r.n << "," << r.c << "," << r.dim << "," << (r.parity_shifted ? 1 : 0) << "\n";
        return o.str();
    }
    o << "| family | lambda | n | c | dim | parity shifted |\n|---|---|---|---|---|---|\n";
    for (auto& r : rows)
        o << "| " << r.family << " | " << r.lambda << " | " << r.n << " | " << r.c << " | " << r.dim << " | "
          << (r.parity_shifted ? "yes" : "no") << " |\n";
    return o.str();
}

int main_entry(int argc, char** argv) {
    CLI::App app{"superalg: exact checks for restricted Lie superalgebra representations"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string suites;
    auto* run_cmd = app.add_subcommand("run", "run verification suites");
    run_cmd->add_option("--p", cfg.p, "characteristic");
    run_cmd->add_option("--suites", suites, "comma separated subset of: pbw, modules, blocks, endrings, qci, cocycles, "
                                            "frobenius, complexity, iso-sweep");
    run_cmd->add_option("--depth", cfg.depth, "resolution depth (at most 12)");
    run_cmd->add_option("--seed", cfg.seed, "seed for sampled checks");
    run_cmd->add_option("--format", cfg.format, "json, markdown or csv");
    run_cmd->add_option("--out", cfg.out, "output file (default stdout)");
    int n_max = 1;
    auto* cat_cmd = app.add_subcommand("catalogue", "list the indecomposable supermodules");
    cat_cmd->add_option("--p", cfg.p, "characteristic");
    cat_cmd->add_option("--n-max", n_max, "largest string or tube length");
    cat_cmd->add_option("--format", cfg.format, "json, markdown or csv");
    cat_cmd->add_option("--out", cfg.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    auto emit = [&](const std::string& text) {
        if (cfg.out.empty()) {
            std::cout << text;
            return true;
        }
        std::ofstream f(cfg.out, std::ios::binary);
        f << text;
        return static_cast<bool>(f);
    };
    try {
        if (*cat_cmd) {
            RunConfig probe = cfg;
            validate(probe);
            if (!emit(render_catalogue(report_catalogue(cfg.p, n_max), cfg.format))) throw usage_error("cannot write " + cfg.out);
            return 0;
        }
        std::stringstream ss(suites);
        for (std::string t; std::getline(ss, t, ',');)
            if (!t.empty()) cfg.suites.push_back(t);
        validate(cfg);
        RunReport r = run(cfg);
        if (!emit(render(r, cfg.format))) throw usage_error("cannot write " + cfg.out);
        if (!r.pass()) {
            std::cerr << "first failure: " << r.first_failure() << "\n";
            return 1;
        }
        return 0;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace sa::cli

// Orchestrated verification: every claim produces a machine-readable
// pass/fail report. Expected values are frozen golden data; computed values
// never overwrite them.
#pragma once

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "jkl/johnson.hpp"
#include "jkl/json_io.hpp"
#include "jkl/parse.hpp"

namespace jkl {

// ---- golden decomposition tables ---------------------------------------

using LabelMultiset = std::map<Lambda, int64_t>;

struct PatternTerm {
    LambdaPattern pattern;
    int64_t multiplicity;
};

inline LabelMultiset instantiate_terms(const std::vector<PatternTerm>& terms, int n) {
    LabelMultiset out;
    for (const auto& t : terms)
        if (t.pattern.instantiable(n)) out[t.pattern.instantiate(n)] += t.multiplicity;
    return out;
}

// U* decomposes as Phi_{1,0,..,0,1,0,-1} + Phi_{0,..,0,1,-1} for every n >= 3
// (the printed n=3 row is the same pair of labels).
inline LabelMultiset golden_decomp(int n) {
    return instantiate_terms({{{{1}, {-1, -1}}, 1}, {{{}, {-1}}, 1}}, n);
}

// The six generic constituents of wedge2(U*).
inline const std::vector<PatternTerm>& wedge2_generic_terms() {
    static const std::vector<PatternTerm> terms{
        {{{1, 1}, {-1, -1, -1, -1}}, 1},  // Phi_{0,1,0,..,0,1,0,0,0,-1}
        {{{1}, {-1, -1, -1}}, 2},         // Phi_{1,0,..,0,1,0,0,-1}
        {{{}, {-1, -1}}, 3},              // Phi_{0,..,0,1,0,-1}
        {{{1, 1}, {-2, -2}}, 1},          // Phi_{0,1,0,..,0,2,0,-2}
        {{{2}, {-1, -1, -2}}, 1},         // Phi_{2,0,..,0,1,0,1,-2}
        {{{1}, {-1, -2}}, 2},             // Phi_{1,0,..,0,1,1,-2}
    };
    return terms;
}

inline LabelMultiset golden_wedge2(int n) {
    switch (n) {
        case 3:
            return {{{0, -1, -1}, 2}, {{1, -1, -2}, 2}};
        case 4:
            return {{{1, -1, -1, -1}, 1},
                    {{0, 0, -1, -1}, 3},
                    {{1, 1, -2, -2}, 1},
                    {{2, -1, -1, -2}, 1},
                    {{1, 0, -1, -2}, 2}};
        case 5:
            return {{{1, 0, -1, -1, -1}, 2},
                    {{0, 0, 0, -1, -1}, 3},
                    {{1, 1, 0, -2, -2}, 1},
                    {{2, 0, -1, -1, -2}, 1},
                    {{1, 0, 0, -1, -2}, 2}};
        case 6:
            return {{{1, 1, -1, -1, -1, -1}, 1},
                    {{1, 0, 0, -1, -1, -1}, 2},
                    {{0, 0, 0, 0, -1, -1}, 3},
                    {{1, 1, 0, 0, -2, -2}, 1},
                    {{2, 0, 0, -1, -1, -2}, 1},
                    {{1, 0, 0, 0, -1, -2}, 2}};
        default:
            if (n < 7) throw error("wedge2 table starts at n=3");
            return instantiate_terms(wedge2_generic_terms(), n);
    }
}

inline LabelMultiset decomposition_to_multiset(const Decomposition& d) {
    LabelMultiset out;
    for (const auto& c : d) out[c.lambda] += c.multiplicity;
    return out;
}

inline Json multiset_to_json(const LabelMultiset& ms) {
    Json out = Json::array();
    for (const auto& [l, m] : ms)
        out.push_back(Json{{"lambda", l}, {"phi", lambda_to_phi(l)}, {"multiplicity", m}});
    return out;
}

// ---- claim reports -------------------------------------------------------

struct SubCheck {
    std::string name;
    std::string status;  // pass | fail | na
    Json detail = Json::object();
};

struct ClaimReport {
    std::string id;
    std::string status;  // pass | fail
    Json expected;
    Json computed;
    int64_t runtime_ms = 0;
    std::vector<SubCheck> checks;

    bool passed() const { return status == "pass"; }
};

inline ClaimReport finish_report(std::string id, Json expected, Json computed,
                                 std::vector<SubCheck> checks) {
    bool ok = true;
    for (const auto& c : checks) ok = ok && c.status != "fail";
    return ClaimReport{std::move(id), ok ? "pass" : "fail", std::move(expected),
                       std::move(computed), 0, std::move(checks)};
}

inline Json claim_to_json(const ClaimReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json j{{"name", c.name}, {"status", c.status}};
        if (!c.detail.empty()) j["detail"] = c.detail;
        checks.push_back(std::move(j));
    }
    return Json{{"id", r.id},          {"status", r.status},
                {"expected", r.expected}, {"computed", r.computed},
                {"runtime_ms", r.runtime_ms}, {"checks", checks}};
}

namespace detail {

inline void check_eq(std::vector<SubCheck>& checks, const std::string& name, bool ok,
                     Json detail = Json::object()) {
    checks.push_back(SubCheck{name, ok ? "pass" : "fail", std::move(detail)});
}

inline void check_elements_equal(std::vector<SubCheck>& checks, const std::string& name,
                                 const ModuleElement& got, const ModuleElement& want) {
    if (got == want) {
        checks.push_back(SubCheck{name, "pass", Json::object()});
    } else {
        checks.push_back(SubCheck{
            name, "fail",
            Json{{"expected", element_to_json(want)}, {"computed", element_to_json(got)}}});
    }
}

}  // namespace detail

// ---- generator images and the rank of H_1(IA_n) -------------------------

inline ClaimReport verify_theorem_jf(int n) {
    JohnsonCtx ctx(n);
    std::vector<SubCheck> checks;

    bool images_ok = true;
    std::vector<ModuleElement> images;
    for (const auto& l : magnus_letters(n)) {
        ModuleElement t = tau(ctx, single(n, l));
        ModuleElement want = (l.kind == AutLetter::G) ? ctx.u_elem(l.i, l.j, l.j)
                                                      : ctx.u_elem(l.i, l.j, l.k);
        images_ok = images_ok && t == want;
        images.push_back(std::move(t));
    }
    detail::check_eq(checks, "generator-images", images_ok);

    std::vector<SparseVec> coords;
    for (const auto& e : images) coords.push_back(e.coords);
    int64_t rank = static_cast<int64_t>(rank_of(coords));
    int64_t want_rank = static_cast<int64_t>(n) * n * (n - 1) / 2;
    detail::check_eq(checks, "span-rank", rank == want_rank,
                     Json{{"expected", want_rank}, {"computed", rank}});
    detail::check_eq(checks, "span-is-whole-module", rank == ctx.U->dim());

    return finish_report("theorem-jf-n" + std::to_string(n), Json{{"rank", want_rank}},
                         Json{{"rank", rank}}, std::move(checks));
}

// ---- decomposition tables for U* and wedge2(U*) --------------------------

inline ClaimReport verify_lemma_decomp(int n) {
    JohnsonCtx ctx(n);
    Decomposition d = decompose(dual(ctx.U));
    LabelMultiset computed = decomposition_to_multiset(d);
    LabelMultiset expected = golden_decomp(n);

    std::vector<SubCheck> checks;
    detail::check_eq(checks, "labels-and-multiplicities", computed == expected);
    if (n == 3) {
        // the generic row instantiated at n=3 coincides with the printed
        // n=3 row, so both readings of the table agree
        LabelMultiset printed{{{1, -1, -1}, 1}, {{0, 0, -1}, 1}};
        detail::check_eq(checks, "n3-row-matches-generic-row", printed == expected);
    }
    return finish_report("lemma-decomp-n" + std::to_string(n), multiset_to_json(expected),
                         decomposition_to_json(d), std::move(checks));
}

inline ClaimReport verify_lemma_wedge2(int n) {
    JohnsonCtx ctx(n);
    Decomposition d = decompose(wedge2(dual(ctx.U)));
    LabelMultiset computed = decomposition_to_multiset(d);
    LabelMultiset expected = golden_wedge2(n);

    std::vector<SubCheck> checks;
    detail::check_eq(checks, "labels-and-multiplicities", computed == expected);
    Integer total = 0;
    for (const auto& c : d) total += c.dimension * c.multiplicity;
    Integer dimU(ctx.U->dim());
    detail::check_eq(checks, "dimension-accounting", total == dimU * (dimU - 1) / 2,
                     Json{{"total", integer_to_json(total)}});
    return finish_report("lemma-wedge2-n" + std::to_string(n), multiset_to_json(expected),
                         decomposition_to_json(d), std::move(checks));
}

// ---- kernel bounds (the lower/upper bound computations for ker tau*) ----

namespace detail {

struct BulletResult {
    std::string name;
    ModuleElement value;
    Lambda target;     // wedge2(U*)-side label (the dual of the value's weight)
    bool hwv_claimed;  // the h-pair only detects membership in the image
};

// Applies E_{i,j} factors right-to-left, the way compositions are written.
inline ModuleElement e_chain(const ModuleElement& v,
                             const std::vector<std::pair<int, int>>& ops) {
    ModuleElement out = v;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it)
        out = apply_eij({it->first, it->second}, out);
    return out;
}

}  // namespace detail

inline ClaimReport verify_kernel_bounds(int n) {
    JohnsonCtx ctx(n);
    std::vector<SubCheck> checks;
    const LambdaPattern T1{{1, 1}, {-1, -1, -1, -1}};
    const LambdaPattern T2{{1}, {-1, -1, -1}};
    const LambdaPattern T3{{}, {-1, -1}};
    const LambdaPattern T4{{1, 1}, {-2, -2}};
    const LambdaPattern T5{{2}, {-1, -1, -2}};
    const LambdaPattern T6{{1}, {-1, -2}};

    // (a) lower bound: the two hwv values of the tau2 image
    AutWord g12g21 = aut_commutator(single(n, AutLetter::g(1, 2)), single(n, AutLetter::g(2, 1)));
    ModuleElement t2 = tau2(ctx, g12g21);
    ModuleElement expected_t2 = [&] {
        const ModulePtr& inner = ctx.L3Q->children()[0];
        auto [w, s] = ctx.W2H->wedge_ord({0, 1});
        SparseVec child{{inner->tensor_ord(w, 0), Rational(s)}};
        SparseVec a = ctx.L3Q->quotient_project(child);
        SparseVec child2{{inner->tensor_ord(w, 1), Rational(s)}};
        SparseVec b = ctx.L3Q->quotient_project(child2);
        SparseVec out;
        for (const auto& [o, c] : a) out.emplace_back(ctx.Tau2->tensor_ord(o, 0), c);
        for (const auto& [o, c] : b) out.emplace_back(ctx.Tau2->tensor_ord(o, 1), c);
        sv_normalize(out);
        return ModuleElement{ctx.Tau2, std::move(out)};
    }();
    detail::check_elements_equal(checks, "tau2-of-[g12,g21]", t2, expected_t2);

    ModuleElement lifted = lift_tau2(ctx, t2);
    ModuleElement sixv = map_contract3(ctx, map_alt(ctx, lifted));
    ModuleElement two_e12 = [&] {
        auto [w, s] = ctx.W2H->wedge_ord({0, 1});
        return basis_element(ctx.W2H, w, Rational(s));
    }();
    detail::check_elements_equal(checks, "contract3-alt-is-6(e1^e2)", sixv, two_e12 * Rational(6));
    detail::check_eq(checks, "6(e1^e2)-is-hwv",
                     is_highest_weight_vector(sixv) &&
                         lambda_dual(sixv.weight().to_lambda()) == T3.instantiate(n));

    ModuleElement twisted =
        map_wedge12(ctx, apply_eij({1, n}, map_alt(ctx, lifted)));
    ModuleElement expected_twisted = [&] {
        auto [w, s] = ctx.W2H->wedge_ord({0, 1});
        int32_t ord = ctx.Lift->tensor_ord(ctx.Lift->children()[0]->tensor_ord(w, 0), n - 1);
        return basis_element(ctx.Lift, ord, Rational(-4 * s));
    }();
    detail::check_elements_equal(checks, "E1n-twist-is-minus4(e1^e2)(x)e1(x)en*", twisted,
                                 expected_twisted);
    detail::check_eq(checks, "twist-is-hwv",
                     is_highest_weight_vector(twisted) &&
                         lambda_dual(twisted.weight().to_lambda()) == T6.instantiate(n));

    // (b) upper bound: abelian cycles and the detection compositions
    AutWord w1u = single(n, AutLetter::g(1, 2)) * single(n, AutLetter::g(1, n));
    AutWord w1v = single(n, AutLetter::g(2, n));
    ModuleElement cyc1 = abelian_cycle_image(ctx, w1u, w1v);
    {
        ModuleElement expect =
            wedge_pair(ctx.W2U, ctx.u_elem(1, 2, 2) + ctx.u_elem(1, n, n), ctx.u_elem(2, n, n));
        detail::check_elements_equal(checks, "tau*-omega1", cyc1, expect);
    }
    ModuleElement cyc2 = zero_element(ctx.W2U);
    if (n > 3) {
        cyc2 = abelian_cycle_image(ctx, single(n, AutLetter::g(1, 3)),
                                   single(n, AutLetter::g(2, n)));
        ModuleElement expect = wedge_pair(ctx.W2U, ctx.u_elem(1, 3, 3), ctx.u_elem(2, n, n));
        detail::check_elements_equal(checks, "tau*-omega2", cyc2, expect);
    }
    ModuleElement cyc3 = zero_element(ctx.W2U);
    if (n >= 5)
        cyc3 = abelian_cycle_image(ctx, single(n, AutLetter::f(1, 2, n)),
                                    single(n, AutLetter::g(3, n - 1)));

    std::vector<detail::BulletResult> bullets;
    bullets.push_back({"g1-f-omega1", map_g1(ctx, map_f(ctx, cyc1)), T3.instantiate(n), true});
    if (n > 3)
        bullets.push_back(
            {"g2-f-omega2", map_g2(ctx, map_f(ctx, cyc2)), T3.instantiate(n), true});
    if (n > 3)
        bullets.push_back({"h2-f-E3n-omega1",
                           map_h2(ctx, map_f(ctx, detail::e_chain(cyc1, {{3, n}}))),
                           T2.instantiate(n), false});
    if (n >= 5)
        bullets.push_back(
            {"h1-f-omega3", map_h1(ctx, map_f(ctx, cyc3)), T2.instantiate(n), false});
    if (n > 3)
        bullets.push_back({"k-f-E2(n-1)-E1n-omega1",
                           map_k(ctx, map_f(ctx, detail::e_chain(cyc1, {{2, n - 1}, {1, n}}))),
                           T4.instantiate(n), true});
    if (n > 3)
        bullets.push_back({"l-f-E3n-E1n-omega2",
                           map_l(ctx, map_f(ctx, detail::e_chain(cyc2, {{3, n}, {1, n}}))),
                           T5.instantiate(n), true});
    {
        // route the e_n content of omega1 to e_1; at small rank the chain
        // through e_4 degenerates and a single raising operator does the job
        std::vector<std::pair<int, int>> chain;
        if (n >= 5)
            chain = {{1, 4}, {4, n}};
        else if (n == 4)
            chain = {{1, 4}};
        else
            chain = {{1, 3}};
        bullets.push_back({"m-f-E14-E4n-omega1",
                           map_m(ctx, map_f(ctx, detail::e_chain(cyc1, chain))),
                           T6.instantiate(n), true});
    }
    if (n >= 6)
        bullets.push_back({"n-f-E3(n-1)-E4n-omega2",
                           map_nmap(ctx, map_f(ctx, detail::e_chain(cyc2, {{3, n - 1}, {4, n}}))),
                           T1.instantiate(n), true});
    else
        checks.push_back({"n-f-E3(n-1)-E4n-omega2", "na",
                          Json{{"reason", "target class is not realizable at this rank"}}});
    if (n == 3)
        checks.push_back(
            {"g2-f-omega2", "na", Json{{"reason", "omega2 and omega3 need n > 3"}}});
    if (n < 5 && n > 3)
        checks.push_back({"h1-f-omega3", "na",
                          Json{{"reason", "omega3 = {f_{12n}, g_{3(n-1)}} needs n >= 5"}}});

    // pinned values for the two worked compositions
    {
        const ModuleElement& g1v = bullets[0].value;
        detail::check_elements_equal(checks, "g1-f-omega1-is-2(e1^e2)", g1v,
                                     two_e12 * Rational(2));
        if (n > 3) {
            detail::check_elements_equal(checks, "g2-f-omega2-is-2(e1^e2)", bullets[1].value,
                                         two_e12 * Rational(2));
            detail::check_eq(checks, "g1-f-omega2-is-zero",
                             map_g1(ctx, map_f(ctx, cyc2)).is_zero());
        }
    }

    LabelMultiset accounted;
    accounted[T3.instantiate(n)] += 1;  // kernel part, lower bound
    accounted[T6.instantiate(n)] += 1;
    for (const auto& b : bullets) {
        if (b.hwv_claimed) {
            bool ok = !b.value.is_zero() && is_highest_weight_vector(b.value) &&
                      lambda_dual(b.value.weight().to_lambda()) == b.target;
            detail::check_eq(checks, b.name + "-hwv-with-dual-label", ok,
                             Json{{"dual_label", b.target}});
        } else {
            // detections of the multiplicity-two class: nonzero of the right
            // weight; the recorded vectors need not be highest weight
            bool ok = !b.value.is_zero() &&
                      lambda_dual(b.value.weight().to_lambda()) == b.target;
            detail::check_eq(checks, b.name + "-detects-dual-label", ok,
                             Json{{"dual_label", b.target},
                                  {"vector", element_to_json(b.value)}});
        }
        accounted[b.target] += 1;
    }

    // the two detections of the multiplicity-two class are independent
    if (n >= 5) {
        const ModuleElement* h2v = nullptr;
        const ModuleElement* h1v = nullptr;
        for (const auto& b : bullets) {
            if (b.name == "h2-f-E3n-omega1") h2v = &b.value;
            if (b.name == "h1-f-omega3") h1v = &b.value;
        }
        detail::check_eq(checks, "h-detections-independent",
                         rank_of({h2v->coords, h1v->coords}) == 2);
    }

    LabelMultiset expected = golden_wedge2(n);
    detail::check_eq(checks, "accounting-closes", accounted == expected,
                     Json{{"accounted", multiset_to_json(accounted)}});

    return finish_report("kernel-bounds-n" + std::to_string(n), multiset_to_json(expected),
                         multiset_to_json(accounted), std::move(checks));
}

// ---- rank of K^(2)/K^(3) --------------------------------------------------

inline int64_t corollary_rank_formula(int64_t n) {
    return n * n * (n * n - 4) / 3 + n * (n - 1) / 2;
}

inline std::vector<ModuleElement> magnus_commutator_tau2_images(const JohnsonCtx& ctx) {
    auto letters = magnus_letters(ctx.n);
    std::vector<ModuleElement> images;
    for (size_t p = 0; p < letters.size(); ++p)
        for (size_t q = p + 1; q < letters.size(); ++q) {
            AutWord c = aut_commutator(single(ctx.n, letters[p]), single(ctx.n, letters[q]));
            images.push_back(tau2(ctx, c));
        }
    return images;
}

inline ClaimReport verify_corollary_rank(int n) {
    JohnsonCtx ctx(n);
    std::vector<SubCheck> checks;
    auto images = magnus_commutator_tau2_images(ctx);
    std::vector<SparseVec> coords;
    for (const auto& e : images) coords.push_back(e.coords);
    // the brute-force span rank is the oracle; the closed formula is the
    // claim under test
    int64_t rank = static_cast<int64_t>(rank_of(coords));
    int64_t formula = corollary_rank_formula(n);
    detail::check_eq(checks, "rank-matches-formula", rank == formula,
                     Json{{"formula", formula}, {"computed", rank}});
    if (n == 3) detail::check_eq(checks, "rank-is-18", rank == 18);

    Decomposition d = decompose_span(images, ctx.Tau2);
    LabelMultiset expected{{LambdaPattern{{1, 1}, {}}.instantiate(n), 1},
                           {LambdaPattern{{2, 1}, {-1}}.instantiate(n), 1}};
    detail::check_eq(checks, "image-decomposition", decomposition_to_multiset(d) == expected,
                     Json{{"computed", decomposition_to_json(d)}});

    return finish_report(
        "corollary-rank-n" + std::to_string(n),
        Json{{"rank", formula}, {"decomposition", multiset_to_json(expected)}},
        Json{{"rank", rank}, {"decomposition", decomposition_to_json(d)}}, std::move(checks));
}

// ---- IA_3 relations -------------------------------------------------------

inline ClaimReport verify_ia3_relations() {
    const int n = 3;
    JohnsonCtx ctx(n);
    std::vector<SubCheck> checks;
    auto g = [&](int i, int j) { return single(n, AutLetter::g(i, j)); };
    auto f = [&](int i, int j, int k) { return single(n, AutLetter::f(i, j, k)); };
    auto t2c = [&](const AutWord& a, const AutWord& b) {
        return tau2(ctx, aut_commutator(a, b));
    };

    bool fam1 = true, fam2 = true, fam3 = true, fam4 = true, fam5 = true;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i == j) continue;
            int k = 6 - i - j;
            fam1 = fam1 && t2c(g(i, j), g(i, k)).is_zero();
            fam2 = fam2 && (t2c(g(i, j), g(k, i)) + t2c(g(i, j), g(k, j))).is_zero();
            if (i < j) {
                fam3 = fam3 && (t2c(f(i, j, k), g(i, j)) + t2c(f(i, j, k), g(i, k))).is_zero();
                fam4 = fam4 && (t2c(f(i, j, k), g(j, i)) + t2c(f(i, j, k), g(j, k))).is_zero();
                // the orientation [g_ij,g_ji] + [g_ik,g_ji] does not
                // vanish; reversing those two commutators (subtracting them
                // in additive notation) gives the actual relation
                fam5 = fam5 && (t2c(f(i, j, k), g(k, i)) + t2c(f(i, j, k), g(k, j)) +
                                t2c(g(j, i), g(i, j)) + t2c(g(j, i), g(i, k)))
                                   .is_zero();
            }
        }
    detail::check_eq(checks, "family-[gij,gik]", fam1);
    detail::check_eq(checks, "family-[gij,gki]+[gij,gkj]", fam2);
    detail::check_eq(checks, "family-[fijk,gij]+[fijk,gik]", fam3);
    detail::check_eq(checks, "family-[fijk,gji]+[fijk,gjk]", fam4);
    detail::check_eq(checks, "family-[fijk,gki]+[fijk,gkj]+[gji,gij]+[gji,gik]", fam5,
                     Json{{"note", "the orientation [gij,gji]+[gik,gji] does not vanish; "
                                   "the reversed commutators do"}});

    // span of the 36 commutator images
    auto letters = magnus_letters(n);
    std::vector<std::pair<size_t, size_t>> pairs;
    std::vector<ModuleElement> images;
    std::vector<ModuleElement> taus;
    for (const auto& l : letters) taus.push_back(tau(ctx, single(n, l)));
    for (size_t p = 0; p < letters.size(); ++p)
        for (size_t q = p + 1; q < letters.size(); ++q) {
            pairs.emplace_back(p, q);
            images.push_back(
                tau2(ctx, aut_commutator(single(n, letters[p]), single(n, letters[q]))));
        }
    std::vector<SparseVec> coords;
    for (const auto& e : images) coords.push_back(e.coords);
    int64_t rank = static_cast<int64_t>(rank_of(coords));
    detail::check_eq(checks, "span-rank-18", rank == 18,
                     Json{{"expected", 18}, {"computed", rank}});

    // the bracket map B on wedge2(U), written in the basis tau(u) ^ tau(v)
    {
        std::vector<SparseVec> tau_coords;
        for (const auto& t : taus) tau_coords.push_back(t.coords);
        detail::check_eq(checks, "tau-images-form-a-basis", rank_of(tau_coords) == 9);

        auto kernel = kernel_of_columns(coords);  // ker B in pair coordinates
        detail::check_eq(checks, "ker-B-dimension", kernel.size() == 36 - 18);

        // the five families generate the whole relation space, so the list
        // of relations is complete
        {
            std::map<std::pair<size_t, size_t>, int32_t> pair_index;
            for (size_t t = 0; t < pairs.size(); ++t) pair_index[pairs[t]] = static_cast<int32_t>(t);
            auto letter_index = [&](const AutLetter& l) {
                for (size_t t = 0; t < letters.size(); ++t)
                    if (letters[t] == l) return t;
                throw internal_error("letter not in the Magnus list");
            };
            auto add_pair = [&](SparseVec& v, const AutLetter& a, const AutLetter& b, int sign) {
                size_t p = letter_index(a), q = letter_index(b);
                if (p < q)
                    v.emplace_back(pair_index.at({p, q}), Rational(sign));
                else
                    v.emplace_back(pair_index.at({q, p}), Rational(-sign));
            };
            std::vector<SparseVec> fams;
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j) {
                    if (i == j) continue;
                    int k = 6 - i - j;
                    SparseVec v1, v2;
                    add_pair(v1, AutLetter::g(i, j), AutLetter::g(i, k), 1);
                    add_pair(v2, AutLetter::g(i, j), AutLetter::g(k, i), 1);
                    add_pair(v2, AutLetter::g(i, j), AutLetter::g(k, j), 1);
                    sv_normalize(v1);
                    sv_normalize(v2);
                    fams.push_back(std::move(v1));
                    fams.push_back(std::move(v2));
                    if (i < j) {
                        SparseVec v3, v4, v5;
                        AutLetter fl = AutLetter::f(i, j, k);
                        add_pair(v3, fl, AutLetter::g(i, j), 1);
                        add_pair(v3, fl, AutLetter::g(i, k), 1);
                        add_pair(v4, fl, AutLetter::g(j, i), 1);
                        add_pair(v4, fl, AutLetter::g(j, k), 1);
                        add_pair(v5, fl, AutLetter::g(k, i), 1);
                        add_pair(v5, fl, AutLetter::g(k, j), 1);
                        add_pair(v5, AutLetter::g(i, j), AutLetter::g(j, i), -1);
                        add_pair(v5, AutLetter::g(i, k), AutLetter::g(j, i), -1);
                        sv_normalize(v3);
                        sv_normalize(v4);
                        sv_normalize(v5);
                        fams.push_back(std::move(v3));
                        fams.push_back(std::move(v4));
                        fams.push_back(std::move(v5));
                    }
                }
            detail::check_eq(checks, "families-span-all-relations", rank_of(fams) == 18,
                             Json{{"family_instances", fams.size()}});
        }

        // the displayed functional: 1 on each of the two listed wedges, 0 on
        // every other standard basis element of wedge2(U)
        ModuleElement c1 = wedge_pair(ctx.W2U, ctx.u_elem(2, 3, 3), ctx.u_elem(3, 2, 2));
        ModuleElement c2 = wedge_pair(ctx.W2U, ctx.u_elem(2, 3, 1), ctx.u_elem(1, 3, 3));
        if (c1.coords.size() != 1 || c2.coords.size() != 1)
            throw internal_error("functional anchors are not basis vectors");
        auto functional_on = [&](const ModuleElement& w2u_elt) -> Rational {
            // value of the functional on an element of wedge2(U)
            return sv_get(w2u_elt.coords, c1.coords[0].first) / c1.coords[0].second +
                   sv_get(w2u_elt.coords, c2.coords[0].first) / c2.coords[0].second;
        };
        std::vector<Rational> fvec(pairs.size());
        for (size_t t = 0; t < pairs.size(); ++t)
            fvec[t] = functional_on(wedge_pair(ctx.W2U, taus[pairs[t].first], taus[pairs[t].second]));
        bool vanishes = true;
        for (const auto& kv : kernel) {
            Rational acc(0);
            for (const auto& [idx, c] : kv) acc += c * fvec[idx];
            vanishes = vanishes && is_zero(acc);
        }
        detail::check_eq(checks, "kernel-functional-vanishes-on-ker-B", vanishes);
    }

    return finish_report("ia3-relations", Json{{"rank", 18}}, Json{{"rank", rank}},
                         std::move(checks));
}

// ---- OA -------------------------------------------------------------------

inline ClaimReport verify_oa(int n) {
    JohnsonCtx ctx(n);
    std::vector<SubCheck> checks;

    std::vector<SparseVec> inner1;
    for (int k = 1; k <= n; ++k) inner1.push_back(ctx.inner_embed(k).coords);
    detail::check_eq(checks, "inner-embed-injective",
                     rank_of(inner1) == static_cast<size_t>(n));

    std::vector<SparseVec> inner2;
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) inner2.push_back(ctx.inner_embed2(j, k).coords);
    detail::check_eq(checks, "inner-embed2-injective",
                     rank_of(inner2) == static_cast<size_t>(n * (n - 1) / 2));

    bool gen_ok = true;
    for (int k = 1; k <= n; ++k)
        gen_ok = gen_ok && tau(ctx, inner_autword(n, k)) == ctx.inner_embed(k);
    detail::check_eq(checks, "tau-of-gk1..gkn-is-inner-embed", gen_ok);

    Decomposition dq = decompose(ctx.Ubar);
    LabelMultiset expected_q{{LambdaPattern{{1, 1}, {-1}}.instantiate(n), 1}};
    detail::check_eq(checks, "U-mod-H-decomposition",
                     decomposition_to_multiset(dq) == expected_q,
                     Json{{"computed", decomposition_to_json(dq)}});

    auto images = magnus_commutator_tau2_images(ctx);
    std::vector<ModuleElement> reduced;
    for (const auto& e : images) reduced.push_back(tau2_bar_of(ctx, e));
    std::vector<SparseVec> coords;
    for (const auto& e : reduced) coords.push_back(e.coords);
    int64_t rank = static_cast<int64_t>(rank_of(coords));
    int64_t want = n * static_cast<int64_t>(n) * (n * n - 4) / 3;
    detail::check_eq(checks, "oa-image-rank", rank == want,
                     Json{{"expected", want}, {"computed", rank}});

    Decomposition ds = decompose_span(reduced, ctx.Tau2bar);
    LabelMultiset expected_s{{LambdaPattern{{2, 1}, {-1}}.instantiate(n), 1}};
    detail::check_eq(checks, "oa-image-decomposition",
                     decomposition_to_multiset(ds) == expected_s,
                     Json{{"computed", decomposition_to_json(ds)}});

    return finish_report("oa-n" + std::to_string(n),
                         Json{{"rank", want}, {"decomposition", multiset_to_json(expected_s)}},
                         Json{{"rank", rank}, {"decomposition", decomposition_to_json(ds)}},
                         std::move(checks));
}

// ---- registry and runner --------------------------------------------------

struct ClaimSpec {
    std::string id;
    int n;  // 0 when not rank-specific
    std::function<ClaimReport()> run;
};

inline std::vector<ClaimSpec> all_claims() {
    std::vector<ClaimSpec> out;
    for (int n = 3; n <= 8; ++n)
        out.push_back({"theorem-jf-n" + std::to_string(n), n,
                       [n] { return verify_theorem_jf(n); }});
    for (int n = 3; n <= 8; ++n)
        out.push_back({"lemma-decomp-n" + std::to_string(n), n,
                       [n] { return verify_lemma_decomp(n); }});
    for (int n = 3; n <= 8; ++n)
        out.push_back({"lemma-wedge2-n" + std::to_string(n), n,
                       [n] { return verify_lemma_wedge2(n); }});
    for (int n = 3; n <= 6; ++n)
        out.push_back({"kernel-bounds-n" + std::to_string(n), n,
                       [n] { return verify_kernel_bounds(n); }});
    for (int n = 3; n <= 5; ++n)
        out.push_back({"corollary-rank-n" + std::to_string(n), n,
                       [n] { return verify_corollary_rank(n); }});
    out.push_back({"ia3-relations", 3, [] { return verify_ia3_relations(); }});
    for (int n = 3; n <= 5; ++n)
        out.push_back({"oa-n" + std::to_string(n), n, [n] { return verify_oa(n); }});
    return out;
}

inline int thread_cap() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("JKL_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) hw = std::min(hw, static_cast<unsigned>(v));
    }
    return static_cast<int>(hw);
}

struct Report {
    std::vector<ClaimReport> claims;
    int64_t pass = 0, fail = 0, skipped = 0;

    bool all_passed() const { return fail == 0; }
};

// Claims run concurrently (capped by JKL_THREADS); reports are merged back
// in registry order, so the output is deterministic.
inline Report run_claims(const std::vector<ClaimSpec>& specs) {
    Report report;
    report.claims.resize(specs.size());
    std::vector<std::thread> workers;
    std::atomic<size_t> next{0};
    int nthreads = std::min<int>(thread_cap(), static_cast<int>(specs.size()));
    auto work = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= specs.size()) return;
            auto t0 = std::chrono::steady_clock::now();
            ClaimReport r;
            try {
                r = specs[i].run();
            } catch (const std::exception& e) {
                r = ClaimReport{specs[i].id, "fail", Json::object(),
                                Json{{"exception", e.what()}}, 0, {}};
            }
            auto t1 = std::chrono::steady_clock::now();
            r.runtime_ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
            report.claims[i] = std::move(r);
        }
    };
    if (nthreads <= 1) {
        work();
    } else {
        for (int t = 0; t < nthreads; ++t) workers.emplace_back(work);
        for (auto& w : workers) w.join();
    }
    for (const auto& c : report.claims) (c.passed() ? report.pass : report.fail) += 1;
    return report;
}

inline Json report_to_json(const Report& r) {
    Json claims = Json::array();
    for (const auto& c : r.claims) claims.push_back(claim_to_json(c));
    return Json{{"claims", claims},
                {"summary", Json{{"pass", r.pass}, {"fail", r.fail}, {"skipped", r.skipped}}}};
}

}  // namespace jkl

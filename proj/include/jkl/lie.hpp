// Conversion of Magnus leading terms into Lie-module bases: the
// Dynkin-Specht-Wever projection in degree 3, F^(2)/F^(3) as wedge2(H), and
// F^(3)/F^(4) as (wedge2(H) (x) H) / wedge3(H).
#pragma once

#include <array>
#include <map>

#include "jkl/module.hpp"
#include "jkl/series.hpp"

namespace jkl {

// Coefficients on left-normed brackets [[x_a,x_b],x_c] with a < b.
using Lie3 = std::map<std::array<int, 3>, Rational>;

inline void lie3_add(Lie3& t, int a, int b, int c, const Rational& coeff) {
    if (a == b || is_zero(coeff)) return;
    Rational v = with_sign(a < b ? 1 : -1, coeff);
    if (a > b) std::swap(a, b);
    std::array<int, 3> key{a, b, c};
    auto [it, fresh] = t.try_emplace(key, v);
    if (!fresh) {
        it->second += v;
        if (is_zero(it->second)) t.erase(it);
    }
}

// rho(a (x) b (x) c) = [[a,b],c] expanded back into tensors.
inline HomogeneousTensor lie_rho(const HomogeneousTensor& t) {
    if (t.degree != 3) throw error("rho is defined on degree-3 tensors");
    HomogeneousTensor out{t.n, 3, {}};
    for (const auto& [m, coeff] : t.coeffs) {
        auto idx = mono_indices(m);
        int a = idx[0], b = idx[1], c = idx[2];
        // (ab - ba)c - c(ab - ba)
        out.add(mono_from_indices({a, b, c}), coeff);
        out.add(mono_from_indices({b, a, c}), -coeff);
        out.add(mono_from_indices({c, a, b}), -coeff);
        out.add(mono_from_indices({c, b, a}), coeff);
    }
    return out;
}

inline bool is_lie_degree3(const HomogeneousTensor& t) {
    HomogeneousTensor three = t;
    for (auto& [m, c] : three.coeffs) c *= 3;
    return lie_rho(t) == three;
}

// Writes a degree-3 Lie element as rho(T)/3 on left-normed brackets, then
// rewrites onto the canonical spanning subset: brackets [[x_a,x_b],x_c] with
// c < a < b are removed via the Jacobi identity
// [[a,b],c] = [[c,b],a] - [[c,a],b]  (applied with c < a < b).
inline Lie3 dsw_left_normed(const HomogeneousTensor& t) {
    if (!is_lie_degree3(t)) throw error("not a Lie element");
    Lie3 raw;
    for (const auto& [m, coeff] : t.coeffs) {
        auto idx = mono_indices(m);
        lie3_add(raw, idx[0], idx[1], idx[2], coeff / 3);
    }
    Lie3 out;
    for (const auto& [key, coeff] : raw) {
        auto [a, b, c] = key;
        if (c < a) {
            lie3_add(out, c, b, a, coeff);
            lie3_add(out, c, a, b, -coeff);
        } else {
            lie3_add(out, a, b, c, coeff);
        }
    }
    return out;
}

// F^(2)/F^(3) -> wedge2(H), with [x_i,x_j] |-> e_i ^ e_j.
inline ModuleElement l2_to_wedge(const HomogeneousTensor& t, const ModulePtr& w2h) {
    if (t.degree != 2) throw error("expected a degree-2 tensor");
    SparseVec out;
    for (const auto& [m, coeff] : t.coeffs) {
        auto idx = mono_indices(m);
        int i = idx[0], j = idx[1];
        if (i == j) throw error("not antisymmetric");
        Rational opposite = [&] {
            auto it = t.coeffs.find(mono_from_indices({j, i}));
            return it == t.coeffs.end() ? Rational(0) : it->second;
        }();
        if (opposite != -coeff) throw error("not antisymmetric");
        if (i < j) {
            auto [ord, sign] = w2h->wedge_ord({i - 1, j - 1});
            out.emplace_back(ord, with_sign(sign, coeff));
        }
    }
    sv_normalize(out);
    return {w2h, std::move(out)};
}

// Image of wedge3(H) inside wedge2(H) (x) H: for a < b < c the relation
// (a^b)(x)c + (b^c)(x)a - (a^c)(x)b. The leftmost-pivot normal form then
// eliminates exactly the coordinates (e_a ^ e_b) (x) e_c with a < b < c.
inline std::vector<SparseVec> jacobi_relations(const ModulePtr& w2h_x_h) {
    const ModulePtr& w2h = w2h_x_h->children()[0];
    const int n = w2h_x_h->n();
    std::vector<SparseVec> rels;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c) {
                SparseVec r;
                auto term = [&](int i, int j, int k, int sign) {
                    auto [w, s] = w2h->wedge_ord({i - 1, j - 1});
                    r.emplace_back(w2h_x_h->tensor_ord(w, k - 1), Rational(sign * s));
                };
                term(a, b, c, 1);
                term(b, c, a, 1);
                term(a, c, b, -1);
                sv_normalize(r);
                rels.push_back(std::move(r));
            }
    return rels;
}

// (wedge2(H) (x) H) / wedge3(H), in quotient normal form.
inline ModulePtr lie3_quotient_module(int n) {
    ModulePtr inner = tensor(wedge2(std_module(n)), std_module(n));
    return quotient(inner, jacobi_relations(inner));
}

// [[x_a,x_b],x_c] |-> class of (e_a ^ e_b) (x) e_c.
inline ModuleElement l3_to_quotient(const Lie3& t, const ModulePtr& l3q) {
    const ModulePtr& inner = l3q->children()[0];
    const ModulePtr& w2h = inner->children()[0];
    SparseVec child;
    for (const auto& [key, coeff] : t) {
        auto [a, b, c] = key;
        auto [w, s] = w2h->wedge_ord({a - 1, b - 1});
        child.emplace_back(inner->tensor_ord(w, c - 1), with_sign(s, coeff));
    }
    sv_normalize(child);
    return {l3q, l3q->quotient_project(child)};
}

}  // namespace jkl

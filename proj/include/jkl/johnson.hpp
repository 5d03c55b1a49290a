// The Johnson homomorphisms tau and tau^(2), their outer variants, the
// Inn(F) embeddings, abelian-cycle images, and the equivariant contraction
// maps used to detect classes in H_2.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "jkl/aut.hpp"
#include "jkl/decompose.hpp"
#include "jkl/lie.hpp"
#include "jkl/module.hpp"
#include "jkl/series.hpp"

namespace jkl {

inline std::string matrix_str(const std::vector<std::vector<int64_t>>& m) {
    std::string s = "[";
    for (size_t i = 0; i < m.size(); ++i) {
        s += i ? "; " : "";
        for (size_t j = 0; j < m[i].size(); ++j)
            s += (j ? "," : "") + std::to_string(m[i][j]);
    }
    return s + "]";
}

// All the fixed modules for one rank, built once and shared.
struct JohnsonCtx {
    int n;
    ModulePtr H, dualH, W2H;
    ModulePtr U;       // wedge2(H) (x) dual(H)
    ModulePtr L3Q;     // (wedge2(H) (x) H) / wedge3(H)
    ModulePtr Tau2;    // L3Q (x) dual(H)
    ModulePtr W2U;     // wedge2(U)
    ModulePtr UU;      // U (x) U
    ModulePtr T6;      // (H (x) H (x) H*) (x) (H (x) H (x) H*)
    ModulePtr T4;      // H (x) H (x) H (x) H*
    ModulePtr Lift;    // (wedge2(H) (x) H) (x) H*, the unquotiented tau2 target
    ModulePtr Ubar;    // U / image of H
    ModulePtr Tau2bar; // Tau2 / image of wedge2(H)

    explicit JohnsonCtx(int rank) : n(rank) {
        H = std_module(n);
        dualH = dual(H);
        W2H = wedge2(H);
        U = tensor(W2H, dualH);
        L3Q = lie3_quotient_module(n);
        Tau2 = tensor(L3Q, dualH);
        W2U = wedge2(U);
        UU = tensor(U, U);
        ModulePtr T3 = tensor(tensor(H, H), dualH);
        T6 = tensor(T3, T3);
        T4 = tensor(tensor(tensor(H, H), H), dualH);
        Lift = tensor(L3Q->children()[0], dualH);

        std::vector<SparseVec> inner1;
        for (int k = 1; k <= n; ++k) inner1.push_back(inner_embed(k).coords);
        Ubar = quotient(U, std::move(inner1));
        std::vector<SparseVec> inner2;
        for (int j = 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) inner2.push_back(inner_embed2(j, k).coords);
        Tau2bar = quotient(Tau2, std::move(inner2));
    }

    int32_t u_ord(int i, int j, int k) const {  // (e_i ^ e_j) (x) e_k*, i<j
        auto [w, s] = W2H->wedge_ord({i - 1, j - 1});
        if (s != 1) throw error("u_ord needs i<j");
        return U->tensor_ord(w, k - 1);
    }

    ModuleElement u_elem(int i, int j, int k, Rational c = Rational(1)) const {
        auto [w, s] = W2H->wedge_ord({i - 1, j - 1});
        return basis_element(U, U->tensor_ord(w, k - 1), with_sign(s, c));
    }

    // e_k |-> sum_i (e_k ^ e_i) (x) e_i*  (the i=k term vanishes)
    ModuleElement inner_embed(int k) const {
        ModuleElement out = zero_element(U);
        for (int i = 1; i <= n; ++i) {
            if (i == k) continue;
            auto [w, s] = W2H->wedge_ord({k - 1, i - 1});
            out += basis_element(U, U->tensor_ord(w, i - 1), Rational(s));
        }
        return out;
    }

    // e_j ^ e_k |-> sum_i class((e_j ^ e_k) (x) e_i) (x) e_i*
    ModuleElement inner_embed2(int j, int k) const {
        if (j == k) throw error("inner_embed2 needs j != k");
        const ModulePtr& inner = L3Q->children()[0];
        SparseVec out;
        for (int i = 1; i <= n; ++i) {
            auto [w, s] = W2H->wedge_ord({j - 1, k - 1});
            SparseVec child{{inner->tensor_ord(w, i - 1), Rational(s)}};
            for (const auto& [ko, c] : L3Q->quotient_project(child))
                out.emplace_back(Tau2->tensor_ord(ko, i - 1), c);
        }
        sv_normalize(out);
        return {Tau2, std::move(out)};
    }
};

inline ModuleElement tau_of_endo(const JohnsonCtx& ctx, const Endomorphism& e) {
    if (e.rank() != ctx.n) throw error("rank mismatch");
    if (!is_IA(e))
        throw error("not an IA automorphism; abelianization " +
                    matrix_str(abelianization_matrix(e)));
    SparseVec out;
    for (int j = 1; j <= ctx.n; ++j) {
        Word w = e.image(j) * Word::generator(j).inverse();
        if (w.is_identity()) continue;
        ModuleElement part = l2_to_wedge(leading_term(w, ctx.n, 2), ctx.W2H);
        for (const auto& [o, c] : part.coords)
            out.emplace_back(ctx.U->tensor_ord(o, j - 1), c);
    }
    sv_normalize(out);
    return {ctx.U, std::move(out)};
}

inline ModuleElement tau(const JohnsonCtx& ctx, const AutWord& a) {
    return tau_of_endo(ctx, evaluate(a));
}

inline ModuleElement tau2_of_endo(const JohnsonCtx& ctx, const Endomorphism& e) {
    if (!tau_of_endo(ctx, e).is_zero()) throw error("not in ker tau");
    SparseVec out;
    for (int j = 1; j <= ctx.n; ++j) {
        Word w = e.image(j) * Word::generator(j).inverse();
        if (w.is_identity()) continue;
        HomogeneousTensor lt = leading_term(w, ctx.n, 3);
        if (lt.is_zero()) continue;
        if (!is_lie_degree3(lt))
            throw internal_error("degree-3 leading term is not a Lie element");
        ModuleElement part = l3_to_quotient(dsw_left_normed(lt), ctx.L3Q);
        for (const auto& [o, c] : part.coords)
            out.emplace_back(ctx.Tau2->tensor_ord(o, j - 1), c);
    }
    sv_normalize(out);
    return {ctx.Tau2, std::move(out)};
}

inline ModuleElement tau2(const JohnsonCtx& ctx, const AutWord& a) {
    return tau2_of_endo(ctx, evaluate(a));
}

// Values reduced modulo the image of the inner automorphisms.
inline ModuleElement tau_bar(const JohnsonCtx& ctx, const AutWord& a) {
    return {ctx.Ubar, ctx.Ubar->quotient_project(tau(ctx, a).coords)};
}

inline ModuleElement tau2_bar(const JohnsonCtx& ctx, const AutWord& a) {
    return {ctx.Tau2bar, ctx.Tau2bar->quotient_project(tau2(ctx, a).coords)};
}

inline ModuleElement tau2_bar_of(const JohnsonCtx& ctx, const ModuleElement& tau2_value) {
    return {ctx.Tau2bar, ctx.Tau2bar->quotient_project(tau2_value.coords)};
}

// tau_*{u,v} = tau(u) ^ tau(v); defined only for commuting automorphisms.
inline ModuleElement abelian_cycle_image(const JohnsonCtx& ctx, const AutWord& u,
                                         const AutWord& v) {
    Endomorphism eu = evaluate(u), ev = evaluate(v);
    if (!(compose(eu, ev) == compose(ev, eu)))
        throw error("automorphisms do not commute; the abelian cycle is undefined");
    return wedge_pair(ctx.W2U, tau_of_endo(ctx, eu), tau_of_endo(ctx, ev));
}

// True iff the automorphism acts trivially on F_n/F_n^(i+1).
inline bool in_K(const AutWord& a, int i) {
    if (i < 1 || i > 3) throw error("in_K supports i in {1,2,3}");
    Endomorphism e = evaluate(a);
    for (int j = 1; j <= e.rank(); ++j) {
        Word w = e.image(j) * Word::generator(j).inverse();
        auto deg = filtration_degree(w, e.rank(), i + 1);
        if (deg && *deg <= i) return false;
    }
    return true;
}

// Representative of a tau2 value in the unquotiented (wedge2(H) (x) H) (x) H*.
inline ModuleElement lift_tau2(const JohnsonCtx& ctx, const ModuleElement& v) {
    if (!structurally_equal(*v.module, *ctx.Tau2)) throw error("expected a tau2 value");
    const int n = ctx.n;
    SparseVec out;
    for (const auto& [o, c] : v.coords) {
        int32_t kept = o / n, j = o % n;
        out.emplace_back(ctx.Lift->tensor_ord(ctx.L3Q->quotient_rep(kept), j), c);
    }
    sv_normalize(out);
    return {ctx.Lift, std::move(out)};
}

// ---- the named GL(n,Q)-equivariant maps --------------------------------

namespace detail {

inline ModuleElement apply_basis_map(
    const ModulePtr& dom, const ModulePtr& cod, const ModuleElement& v,
    const std::function<void(int32_t, const Rational&, SparseVec&)>& fn) {
    if (!structurally_equal(*v.module, *dom))
        throw error("element is not in the map's domain module");
    SparseVec out;
    for (const auto& [o, c] : v.coords) fn(o, c, out);
    sv_normalize(out);
    return {cod, std::move(out)};
}

struct T6Index {
    int a1, b1, c1, a2, b2, c2;  // 0-based
};

inline T6Index t6_decode(int n, int32_t ord) {
    T6Index t{};
    t.c2 = ord % n; ord /= n;
    t.b2 = ord % n; ord /= n;
    t.a2 = ord % n; ord /= n;
    t.c1 = ord % n; ord /= n;
    t.b1 = ord % n; ord /= n;
    t.a1 = ord;
    return t;
}

}  // namespace detail

// f1: wedge2(U) -> U (x) U, u ^ v |-> u (x) v - v (x) u
inline ModuleElement map_f1(const JohnsonCtx& ctx, const ModuleElement& v) {
    const int32_t dimU = ctx.U->dim();
    return detail::apply_basis_map(ctx.W2U, ctx.UU, v,
                                   [&](int32_t o, const Rational& c, SparseVec& out) {
                                       auto pq = ctx.W2U->wedge_combo(o);
                                       out.emplace_back(pq[0] * dimU + pq[1], c);
                                       out.emplace_back(pq[1] * dimU + pq[0], -c);
                                   });
}

// f2: U (x) U -> (H (x) H (x) H*)^(x)2, expanding each wedge factor
inline ModuleElement map_f2(const JohnsonCtx& ctx, const ModuleElement& v) {
    const int n = ctx.n;
    const int32_t dimU = ctx.U->dim();
    auto u_decode = [&](int32_t uo, int& a, int& b, int& c) {
        c = uo % n;
        auto ab = ctx.W2H->wedge_combo(uo / n);
        a = ab[0];
        b = ab[1];
    };
    return detail::apply_basis_map(
        ctx.UU, ctx.T6, v, [&](int32_t o, const Rational& coeff, SparseVec& out) {
            int a1, b1, c1, a2, b2, c2;
            u_decode(o / dimU, a1, b1, c1);
            u_decode(o % dimU, a2, b2, c2);
            auto emit = [&](int x1, int y1, int x2, int y2, int sign) {
                int32_t ord = ((((x1 * n + y1) * n + c1) * n + x2) * n + y2) * n + c2;
                out.emplace_back(ord, with_sign(sign, coeff));
            };
            emit(a1, b1, a2, b2, 1);
            emit(a1, b1, b2, a2, -1);
            emit(b1, a1, a2, b2, -1);
            emit(b1, a1, b2, a2, 1);
        });
}

inline ModuleElement map_f(const JohnsonCtx& ctx, const ModuleElement& v) {
    return map_f2(ctx, map_f1(ctx, v));
}

// g1(v) = c1*(b2) c2*(b1) (a1 ^ a2)
inline ModuleElement map_g1(const JohnsonCtx& ctx, const ModuleElement& v) {
    return detail::apply_basis_map(
        ctx.T6, ctx.W2H, v, [&](int32_t o, const Rational& c, SparseVec& out) {
            auto t = detail::t6_decode(ctx.n, o);
            if (t.c1 != t.b2 || t.c2 != t.b1 || t.a1 == t.a2) return;
            auto [w, s] = ctx.W2H->wedge_ord({t.a1, t.a2});
            out.emplace_back(w, with_sign(s, c));
        });
}

// g2(v) = c1*(b1) c2*(b2) (a1 ^ a2)
inline ModuleElement map_g2(const JohnsonCtx& ctx, const ModuleElement& v) {
    return detail::apply_basis_map(
        ctx.T6, ctx.W2H, v, [&](int32_t o, const Rational& c, SparseVec& out) {
            auto t = detail::t6_decode(ctx.n, o);
            if (t.c1 != t.b1 || t.c2 != t.b2 || t.a1 == t.a2) return;
            auto [w, s] = ctx.W2H->wedge_ord({t.a1, t.a2});
            out.emplace_back(w, with_sign(s, c));
        });
}

// h1(v) = c1*(b1) (a1 (x) a2 (x) b2 (x) c2*)
inline ModuleElement map_h1(const JohnsonCtx& ctx, const ModuleElement& v) {
    const int n = ctx.n;
    return detail::apply_basis_map(
        ctx.T6, ctx.T4, v, [&](int32_t o, const Rational& c, SparseVec& out) {
            auto t = detail::t6_decode(n, o);
            if (t.c1 != t.b1) return;
            out.emplace_back(((t.a1 * n + t.a2) * n + t.b2) * n + t.c2, c);
        });
}

// h2(v) = c1*(b2) (a1 (x) a2 (x) b1 (x) c2*)
inline ModuleElement map_h2(const JohnsonCtx& ctx, const ModuleElement& v) {
    const int n = ctx.n;
    return detail::apply_basis_map(
        ctx.T6, ctx.T4, v, [&](int32_t o, const Rational& c, SparseVec& out) {
            auto t = detail::t6_decode(n, o);
            if (t.c1 != t.b2) return;
            out.emplace_back(((t.a1 * n + t.a2) * n + t.b1) * n + t.c2, c);
        });
}

// k(v) = (a1 ^ b1) (x) (a2 ^ b2) (x) (c1* ^ c2*)
inline ModuleElement map_k(const JohnsonCtx& ctx, const ModuleElement& v) {
    ModulePtr W2D = wedge2(ctx.dualH);
    ModulePtr cod = tensor(tensor(ctx.W2H, ctx.W2H), W2D);
    return detail::apply_basis_map(
        ctx.T6, cod, v, [&, W2D, cod](int32_t o, const Rational& c, SparseVec& out) {
            auto t = detail::t6_decode(ctx.n, o);
            if (t.a1 == t.b1 || t.a2 == t.b2 || t.c1 == t.c2) return;
            auto [w1, s1] = ctx.W2H->wedge_ord({t.a1, t.b1});
            auto [w2, s2] = ctx.W2H->wedge_ord({t.a2, t.b2});
            auto [wd, sd] = W2D->wedge_ord({t.c1, t.c2});
            int32_t ord = (w1 * ctx.W2H->dim() + w2) * W2D->dim() + wd;
            out.emplace_back(ord, c * s1 * s2 * sd);
        });
}

// l(v) = (a1 ^ a2 ^ b1) (x) b2 (x) c1* (x) c2*
inline ModuleElement map_l(const JohnsonCtx& ctx, const ModuleElement& v) {
    ModulePtr W3H = wedge3(ctx.H);
    ModulePtr cod = tensor(tensor(tensor(W3H, ctx.H), ctx.dualH), ctx.dualH);
    const int n = ctx.n;
    return detail::apply_basis_map(
        ctx.T6, cod, v, [&, W3H, cod](int32_t o, const Rational& c, SparseVec& out) {
            auto t = detail::t6_decode(n, o);
            auto [w, s] = W3H->wedge_ord({t.a1, t.a2, t.b1});
            if (s == 0) return;
            int32_t ord = ((w * n + t.b2) * n + t.c1) * n + t.c2;
            out.emplace_back(ord, c * s);
        });
}

// m(v) = c1*(b1) (a1 (x) (a2 ^ b2) (x) c2*)
inline ModuleElement map_m(const JohnsonCtx& ctx, const ModuleElement& v) {
    ModulePtr cod = tensor(tensor(ctx.H, ctx.W2H), ctx.dualH);
    const int n = ctx.n;
    return detail::apply_basis_map(
        ctx.T6, cod, v, [&, cod](int32_t o, const Rational& c, SparseVec& out) {
            auto t = detail::t6_decode(n, o);
            if (t.c1 != t.b1 || t.a2 == t.b2) return;
            auto [w, s] = ctx.W2H->wedge_ord({t.a2, t.b2});
            int32_t ord = (t.a1 * ctx.W2H->dim() + w) * n + t.c2;
            out.emplace_back(ord, with_sign(s, c));
        });
}

// n(v) = (a1 ^ a2 ^ b1 ^ b2) (x) (c1* ^ c2*); named nmap to avoid shadowing
// the rank symbol
inline ModuleElement map_nmap(const JohnsonCtx& ctx, const ModuleElement& v) {
    ModulePtr W4H = wedge4(ctx.H);
    ModulePtr W2D = wedge2(ctx.dualH);
    ModulePtr cod = tensor(W4H, W2D);
    return detail::apply_basis_map(
        ctx.T6, cod, v, [&, W4H, W2D, cod](int32_t o, const Rational& c, SparseVec& out) {
            auto t = detail::t6_decode(ctx.n, o);
            auto [w, s] = W4H->wedge_ord({t.a1, t.a2, t.b1, t.b2});
            if (s == 0 || t.c1 == t.c2) return;
            auto [wd, sd] = W2D->wedge_ord({t.c1, t.c2});
            out.emplace_back(w * W2D->dim() + wd, c * s * sd);
        });
}

// alt: (a ^ b) (x) c (x) d* |-> abcd* - bacd* + cbad* - bcad*
inline ModuleElement map_alt(const JohnsonCtx& ctx, const ModuleElement& v) {
    const int n = ctx.n;
    return detail::apply_basis_map(
        ctx.Lift, ctx.T4, v, [&](int32_t o, const Rational& coeff, SparseVec& out) {
            int d = o % n;
            int c = (o / n) % n;
            auto ab = ctx.W2H->wedge_combo(o / (n * n));
            int a = ab[0], b = ab[1];
            auto emit = [&](int x, int y, int z, int sign) {
                out.emplace_back(((x * n + y) * n + z) * n + d,
                                 with_sign(sign, coeff));
            };
            emit(a, b, c, 1);
            emit(b, a, c, -1);
            emit(c, b, a, 1);
            emit(b, c, a, -1);
        });
}

// contract3: a (x) b (x) c (x) d* |-> d*(c) (a ^ b)
inline ModuleElement map_contract3(const JohnsonCtx& ctx, const ModuleElement& v) {
    const int n = ctx.n;
    return detail::apply_basis_map(
        ctx.T4, ctx.W2H, v, [&](int32_t o, const Rational& coeff, SparseVec& out) {
            int d = o % n, c = (o / n) % n, b = (o / n / n) % n, a = o / n / n / n;
            if (c != d || a == b) return;
            auto [w, s] = ctx.W2H->wedge_ord({a, b});
            out.emplace_back(w, with_sign(s, coeff));
        });
}

// wedge12: a (x) b (x) c (x) d* |-> (a ^ b) (x) c (x) d*
inline ModuleElement map_wedge12(const JohnsonCtx& ctx, const ModuleElement& v) {
    const int n = ctx.n;
    return detail::apply_basis_map(
        ctx.T4, ctx.Lift, v, [&](int32_t o, const Rational& coeff, SparseVec& out) {
            int d = o % n, c = (o / n) % n, b = (o / n / n) % n, a = o / n / n / n;
            if (a == b) return;
            auto [w, s] = ctx.W2H->wedge_ord({a, b});
            out.emplace_back((w * n + c) * n + d, with_sign(s, coeff));
        });
}

inline ModuleElement named_map(const JohnsonCtx& ctx, const std::string& name,
                               const ModuleElement& v) {
    if (name == "f1") return map_f1(ctx, v);
    if (name == "f2") return map_f2(ctx, v);
    if (name == "f") return map_f(ctx, v);
    if (name == "g1") return map_g1(ctx, v);
    if (name == "g2") return map_g2(ctx, v);
    if (name == "h1") return map_h1(ctx, v);
    if (name == "h2") return map_h2(ctx, v);
    if (name == "k") return map_k(ctx, v);
    if (name == "l") return map_l(ctx, v);
    if (name == "m") return map_m(ctx, v);
    if (name == "n" || name == "nmap") return map_nmap(ctx, v);
    if (name == "alt") return map_alt(ctx, v);
    if (name == "contract3") return map_contract3(ctx, v);
    if (name == "wedge12") return map_wedge12(ctx, v);
    throw error("unknown map: " + name);
}

}  // namespace jkl

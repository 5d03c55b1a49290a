// Weight modules for GL(n,Q) built from combinators: the standard module H,
// duals, tensor products, exterior powers and quotients. Every basis element
// is a weight vector; the gl(n) generators E_ij act as derivations.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "jkl/linalg.hpp"
#include "jkl/weights.hpp"

namespace jkl {

class Module;
using ModulePtr = std::shared_ptr<const Module>;

ModulePtr std_module(int n);
ModulePtr dual(ModulePtr m);
ModulePtr tensor(ModulePtr a, ModulePtr b);
ModulePtr wedge(ModulePtr m, int arity);
ModulePtr quotient(ModulePtr m, std::vector<SparseVec> relations);

class Module : public std::enable_shared_from_this<Module> {
public:
    enum Kind { Std, Dual, Tensor, Wedge, Quotient };

    Kind kind() const { return kind_; }
    int n() const { return n_; }
    int32_t dim() const { return dim_; }
    int arity() const { return arity_; }
    const std::vector<ModulePtr>& children() const { return children_; }
    const std::vector<SparseVec>& relations() const { return relations_; }

    // computed on the fly; large tensor modules never store per-ordinal data
    Weight weight(int32_t ord) const {
        switch (kind_) {
            case Std: {
                Weight w(n_);
                w[ord] = 1;
                return w;
            }
            case Dual:
                return -children_[0]->weight(ord);
            case Tensor: {
                const int32_t db = children_[1]->dim();
                return children_[0]->weight(ord / db) + children_[1]->weight(ord % db);
            }
            case Wedge: {
                Weight w(n_);
                for (int s = 0; s < arity_; ++s) w = w + children_[0]->weight(combos_[ord][s]);
                return w;
            }
            case Quotient:
                return children_[0]->weight(kept_[ord]);
        }
        return Weight(n_);
    }

    // E_ij acting on a single basis element, as (ordinal, coefficient) terms;
    // terms may repeat and are combined by the caller.
    void apply_e_basis(int i, int j, int32_t ord,
                       std::vector<std::pair<int32_t, Rational>>& out,
                       const Rational& scale = Rational(1)) const {
        switch (kind_) {
            case Std:
                if (ord == j - 1) out.emplace_back(i - 1, scale);
                break;
            case Dual: {
                const auto& col = dual_transpose(i, j)[ord];
                for (const auto& [o, c] : col) out.emplace_back(o, c * scale);
                break;
            }
            case Tensor: {
                const int32_t db = children_[1]->dim();
                const int32_t a = ord / db, b = ord % db;
                std::vector<std::pair<int32_t, Rational>> part;
                children_[0]->apply_e_basis(i, j, a, part, scale);
                for (const auto& [o, c] : part) out.emplace_back(o * db + b, c);
                part.clear();
                children_[1]->apply_e_basis(i, j, b, part, scale);
                for (const auto& [o, c] : part) out.emplace_back(a * db + o, c);
                break;
            }
            case Wedge: {
                const auto& combo = combos_[ord];
                std::vector<std::pair<int32_t, Rational>> part;
                for (int slot = 0; slot < arity_; ++slot) {
                    part.clear();
                    children_[0]->apply_e_basis(i, j, combo[slot], part, scale);
                    for (const auto& [o, c] : part) {
                        std::array<int32_t, 4> t = combo;
                        t[slot] = o;
                        auto [word, sign] = sort_combo(t, arity_);
                        if (sign == 0) continue;
                        out.emplace_back(combo_index_.at(word), with_sign(sign, c));
                    }
                }
                break;
            }
            case Quotient: {
                std::vector<std::pair<int32_t, Rational>> part;
                children_[0]->apply_e_basis(i, j, kept_[ord], part, scale);
                for (const auto& [o, c] : part) {
                    if (child_to_kept_[o] >= 0) {
                        out.emplace_back(child_to_kept_[o], c);
                    } else {
                        for (const auto& [ko, rc] : rewrite_.at(o))
                            out.emplace_back(ko, c * rc);
                    }
                }
                break;
            }
        }
    }

    SparseVec apply_e(int i, int j, const SparseVec& coords) const {
        std::vector<std::pair<int32_t, Rational>> terms;
        for (const auto& [ord, c] : coords) apply_e_basis(i, j, ord, terms, c);
        SparseVec out(terms.begin(), terms.end());
        sv_normalize(out);
        return out;
    }

    // ---- naming -------------------------------------------------------

    std::string basis_name(int32_t ord) const { return basis_name_impl(ord).first; }

    std::string name() const {
        switch (kind_) {
            case Std: return "H";
            case Dual: return "dual(" + children_[0]->name() + ")";
            case Tensor:
                // combinator names self-delimit, so the product is unambiguous
                return children_[0]->name() + "⊗" + children_[1]->name();
            case Wedge: return "wedge" + std::to_string(arity_) + "(" + children_[0]->name() + ")";
            case Quotient: return "quotient(" + children_[0]->name() + ")";
        }
        return "?";
    }

    int32_t ordinal_of_name(const std::string& s) const {
        std::call_once(name_once_, [this] {
            for (int32_t o = 0; o < dim_; ++o) name_index_[basis_name(o)] = o;
        });
        auto it = name_index_.find(s);
        if (it == name_index_.end()) throw error("unknown basis element: " + s);
        return it->second;
    }

    // ---- structured ordinal helpers ----------------------------------

    int32_t tensor_ord(int32_t a, int32_t b) const {
        return a * children_[1]->dim() + b;
    }

    // Ordinal and sign of the wedge of the given child ordinals; sign 0 when
    // a child repeats.
    std::pair<int32_t, int> wedge_ord(std::vector<int32_t> childOrds) const {
        std::array<int32_t, 4> t{};
        for (int s = 0; s < arity_; ++s) t[s] = childOrds[s];
        auto [word, sign] = sort_combo(t, arity_);
        if (sign == 0) return {-1, 0};
        return {combo_index_.at(word), sign};
    }

    // Child ordinals making up a wedge basis element, ascending.
    std::vector<int32_t> wedge_combo(int32_t ord) const {
        return {combos_[ord].begin(), combos_[ord].begin() + arity_};
    }

    int32_t quotient_rep(int32_t ord) const { return kept_[ord]; }

    // Normal form of a child-module vector in the quotient.
    SparseVec quotient_project(const SparseVec& child_coords) const {
        SparseVec out;
        for (const auto& [o, c] : child_coords) {
            if (child_to_kept_[o] >= 0) {
                out.emplace_back(child_to_kept_[o], c);
            } else {
                for (const auto& [ko, rc] : rewrite_.at(o)) out.emplace_back(ko, c * rc);
            }
        }
        sv_normalize(out);
        return out;
    }

private:
    Module() = default;
    friend ModulePtr std_module(int n);
    friend ModulePtr dual(ModulePtr m);
    friend ModulePtr tensor(ModulePtr a, ModulePtr b);
    friend ModulePtr wedge(ModulePtr m, int arity);
    friend ModulePtr quotient(ModulePtr m, std::vector<SparseVec> relations);
    friend bool structurally_equal(const Module& a, const Module& b);

    static std::pair<uint64_t, int> sort_combo(std::array<int32_t, 4> t, int arity) {
        int sign = 1;
        for (int a = 1; a < arity; ++a)  // insertion sort, tracking parity
            for (int b = a; b > 0 && t[b - 1] >= t[b]; --b) {
                if (t[b - 1] == t[b]) return {0, 0};
                std::swap(t[b - 1], t[b]);
                sign = -sign;
            }
        uint64_t word = 0;
        for (int s = 0; s < arity; ++s) word |= static_cast<uint64_t>(t[s]) << (16 * s);
        return {word, sign};
    }

    std::pair<std::string, bool> basis_name_impl(int32_t ord) const {
        switch (kind_) {
            case Std:
                return {std::to_string(ord + 1), true};
            case Dual: {
                auto [s, atom] = children_[0]->basis_name_impl(ord);
                return {atom ? s + "*" : "(" + s + ")*", true};
            }
            case Tensor: {
                const int32_t db = children_[1]->dim();
                auto wrap = [](const ModulePtr& m, int32_t o) {
                    auto [s, atom] = m->basis_name_impl(o);
                    return (atom || m->kind() == Tensor) ? s : "(" + s + ")";
                };
                return {wrap(children_[0], ord / db) + "⊗" + wrap(children_[1], ord % db),
                        false};
            }
            case Wedge: {
                std::string s = "(";
                for (int slot = 0; slot < arity_; ++slot) {
                    auto [p, atom] = children_[0]->basis_name_impl(combos_[ord][slot]);
                    s += (slot ? "^" : "") + (atom ? p : "(" + p + ")");
                }
                return {s + ")", true};
            }
            case Quotient:
                return {"[" + children_[0]->basis_name(kept_[ord]) + "]", true};
        }
        return {"?", true};
    }

    // Transposed child action, cached per (i,j): the dual pairing gives
    // <E.f, v> = -<f, E.v>.
    const std::vector<std::vector<std::pair<int32_t, Rational>>>& dual_transpose(int i,
                                                                                 int j) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto key = std::make_pair(i, j);
        auto it = dual_cache_.find(key);
        if (it != dual_cache_.end()) return it->second;
        std::vector<std::vector<std::pair<int32_t, Rational>>> cols(dim_);
        std::vector<std::pair<int32_t, Rational>> part;
        for (int32_t c = 0; c < dim_; ++c) {
            part.clear();
            children_[0]->apply_e_basis(i, j, c, part);
            for (const auto& [o, coeff] : part) cols[o].emplace_back(c, -coeff);
        }
        return dual_cache_.emplace(key, std::move(cols)).first->second;
    }

    Kind kind_ = Std;
    int n_ = 0;
    int32_t dim_ = 0;
    int arity_ = 0;
    std::vector<ModulePtr> children_;

    std::vector<std::array<int32_t, 4>> combos_;
    std::unordered_map<uint64_t, int32_t> combo_index_;

    std::vector<SparseVec> relations_;
    std::vector<int32_t> kept_;
    std::vector<int32_t> child_to_kept_;
    std::unordered_map<int32_t, SparseVec> rewrite_;

    mutable std::mutex mu_;
    mutable std::map<std::pair<int, int>,
                     std::vector<std::vector<std::pair<int32_t, Rational>>>>
        dual_cache_;
    mutable std::once_flag name_once_;
    mutable std::unordered_map<std::string, int32_t> name_index_;
};

inline ModulePtr std_module(int n) {
    if (n < 2 || n > kMaxRank) throw error("rank must be between 2 and 12");
    auto m = ModulePtr(new Module());
    auto* mm = const_cast<Module*>(m.get());
    mm->kind_ = Module::Std;
    mm->n_ = n;
    mm->dim_ = n;
    return m;
}

inline ModulePtr dual(ModulePtr child) {
    auto m = ModulePtr(new Module());
    auto* mm = const_cast<Module*>(m.get());
    mm->kind_ = Module::Dual;
    mm->n_ = child->n();
    mm->dim_ = child->dim();
    mm->children_ = {std::move(child)};
    return m;
}

inline ModulePtr tensor(ModulePtr a, ModulePtr b) {
    if (a->n() != b->n()) throw error("tensor factors over different ranks");
    auto m = ModulePtr(new Module());
    auto* mm = const_cast<Module*>(m.get());
    mm->kind_ = Module::Tensor;
    mm->n_ = a->n();
    mm->dim_ = a->dim() * b->dim();
    mm->children_ = {std::move(a), std::move(b)};
    return m;
}

inline ModulePtr tensor_list(std::vector<ModulePtr> factors) {
    if (factors.empty()) throw error("empty tensor product");
    ModulePtr acc = factors[0];
    for (size_t i = 1; i < factors.size(); ++i) acc = tensor(acc, std::move(factors[i]));
    return acc;
}

inline ModulePtr wedge(ModulePtr child, int arity) {
    if (arity < 2 || arity > 4) throw error("wedge arity must be 2, 3 or 4");
    auto m = ModulePtr(new Module());
    auto* mm = const_cast<Module*>(m.get());
    mm->kind_ = Module::Wedge;
    mm->n_ = child->n();
    mm->arity_ = arity;
    std::array<int32_t, 4> t{};
    // enumerate strictly increasing tuples in lexicographic order
    auto rec = [&](auto&& self, int slot, int32_t from) -> void {
        if (slot == arity) {
            uint64_t word = 0;
            for (int s = 0; s < arity; ++s) word |= static_cast<uint64_t>(t[s]) << (16 * s);
            mm->combo_index_.emplace(word, static_cast<int32_t>(mm->combos_.size()));
            mm->combos_.push_back(t);
            return;
        }
        for (int32_t v = from; v < child->dim(); ++v) {
            t[slot] = v;
            self(self, slot + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
    mm->dim_ = static_cast<int32_t>(mm->combos_.size());
    mm->children_ = {std::move(child)};
    return m;
}

inline ModulePtr wedge2(ModulePtr m) { return wedge(std::move(m), 2); }
inline ModulePtr wedge3(ModulePtr m) { return wedge(std::move(m), 3); }
inline ModulePtr wedge4(ModulePtr m) { return wedge(std::move(m), 4); }

// Quotient by the span of the relation vectors. Normal form: reduced row
// echelon with leftmost pivots; pivot coordinates are eliminated, the rest
// form the basis. Relations must be independent and weight-homogeneous.
inline ModulePtr quotient(ModulePtr child, std::vector<SparseVec> relations) {
    auto m = ModulePtr(new Module());
    auto* mm = const_cast<Module*>(m.get());
    mm->kind_ = Module::Quotient;
    mm->n_ = child->n();
    mm->relations_ = relations;

    RowReducer rr;
    for (auto& r : relations) {
        if (r.empty() || !rr.insert(r))
            throw error("quotient relations inconsistent: dependent or zero relation");
        for (const auto& [o, c] : r)
            if (!(child->weight(o) == child->weight(r.front().first)))
                throw error("quotient relation is not weight-homogeneous");
    }
    std::vector<bool> eliminated(child->dim(), false);
    for (const auto& row : rr.rows()) eliminated[row.pivot] = true;

    mm->child_to_kept_.assign(child->dim(), -1);
    for (int32_t o = 0; o < child->dim(); ++o) {
        if (!eliminated[o]) {
            mm->child_to_kept_[o] = static_cast<int32_t>(mm->kept_.size());
            mm->kept_.push_back(o);
        }
    }
    mm->dim_ = static_cast<int32_t>(mm->kept_.size());
    for (const auto& row : rr.sorted_rows()) {
        // pivot + sum(rest) = 0, so pivot rewrites to -rest (rest is kept-only)
        SparseVec rw;
        for (const auto& [o, c] : row.vec) {
            if (o == row.pivot) continue;
            rw.emplace_back(mm->child_to_kept_[o], -c);
        }
        sv_normalize(rw);
        mm->rewrite_.emplace(row.pivot, std::move(rw));
    }
    mm->children_ = {std::move(child)};
    return m;
}

inline bool structurally_equal(const Module& a, const Module& b) {
    if (&a == &b) return true;
    if (a.kind_ != b.kind_ || a.n_ != b.n_ || a.arity_ != b.arity_) return false;
    if (a.relations_ != b.relations_) return false;
    if (a.children_.size() != b.children_.size()) return false;
    for (size_t i = 0; i < a.children_.size(); ++i)
        if (!structurally_equal(*a.children_[i], *b.children_[i])) return false;
    return true;
}

// ---- elements ---------------------------------------------------------

struct ModuleElement {
    ModulePtr module;
    SparseVec coords;

    bool is_zero() const { return coords.empty(); }

    ModuleElement& operator+=(const ModuleElement& rhs) {
        check_same(rhs);
        sv_axpy(coords, Rational(1), rhs.coords);
        return *this;
    }
    ModuleElement& operator-=(const ModuleElement& rhs) {
        check_same(rhs);
        sv_axpy(coords, Rational(-1), rhs.coords);
        return *this;
    }
    ModuleElement operator+(const ModuleElement& rhs) const {
        ModuleElement out = *this;
        out += rhs;
        return out;
    }
    ModuleElement operator-(const ModuleElement& rhs) const {
        ModuleElement out = *this;
        out -= rhs;
        return out;
    }
    ModuleElement operator*(const Rational& c) const {
        ModuleElement out = *this;
        sv_scale(out.coords, c);
        return out;
    }
    bool operator==(const ModuleElement& rhs) const {
        return structurally_equal(*module, *rhs.module) && coords == rhs.coords;
    }

    // nonzero elements only; throws when support weights disagree
    Weight weight() const {
        if (coords.empty()) throw error("zero element has no weight");
        Weight w = module->weight(coords.front().first);
        for (const auto& [o, c] : coords)
            if (!(module->weight(o) == w)) throw error("element is not weight-homogeneous");
        return w;
    }

    std::string str() const {
        if (coords.empty()) return "0";
        std::string s;
        for (const auto& [o, c] : coords) {
            if (!s.empty()) s += " + ";
            if (c != 1) s += rat_to_string(c) + "·";
            s += module->basis_name(o);
        }
        return s;
    }

private:
    void check_same(const ModuleElement& rhs) const {
        if (!structurally_equal(*module, *rhs.module))
            throw error("elements live in different modules");
    }
};

inline ModuleElement zero_element(ModulePtr m) { return {std::move(m), {}}; }

inline ModuleElement basis_element(ModulePtr m, int32_t ord, Rational c = Rational(1)) {
    ModuleElement e{std::move(m), {{ord, std::move(c)}}};
    return e;
}

struct EijOperator {
    int i, j;
};

inline ModuleElement apply_eij(const EijOperator& op, const ModuleElement& v) {
    return {v.module, v.module->apply_e(op.i, op.j, v.coords)};
}

// Wedge of two vectors of the child module, landing in w2 = wedge2(child).
inline ModuleElement wedge_pair(const ModulePtr& w2, const ModuleElement& a,
                                const ModuleElement& b) {
    std::vector<std::pair<int32_t, Rational>> terms;
    for (const auto& [p, ca] : a.coords)
        for (const auto& [q, cb] : b.coords) {
            if (p == q) continue;
            auto [ord, sign] = w2->wedge_ord({p, q});
            terms.emplace_back(ord, with_sign(sign, Rational(ca * cb)));
        }
    SparseVec out(terms.begin(), terms.end());
    sv_normalize(out);
    return {w2, std::move(out)};
}

// ---- GL(n) action ------------------------------------------------------

using RatMatrix = std::vector<std::vector<Rational>>;

// Columns of the action of the invertible matrix A on the module.
inline std::vector<SparseVec> action_matrix(const ModulePtr& m, const RatMatrix& a,
                                            const RatMatrix& a_inv) {
    std::vector<SparseVec> cols(m->dim());
    switch (m->kind()) {
        case Module::Std: {
            for (int32_t j = 0; j < m->dim(); ++j) {
                for (int32_t i = 0; i < m->dim(); ++i)
                    if (!is_zero(a[i][j])) cols[j].emplace_back(i, a[i][j]);
            }
            break;
        }
        case Module::Dual: {
            // action on the dual basis is the transpose of the inverse action
            auto childCols = action_matrix(m->children()[0], a_inv, a);
            for (int32_t j = 0; j < m->dim(); ++j)
                for (const auto& [i, c] : childCols[j]) cols[i].emplace_back(j, c);
            for (auto& col : cols) sv_normalize(col);
            break;
        }
        case Module::Tensor: {
            auto ca = action_matrix(m->children()[0], a, a_inv);
            auto cb = action_matrix(m->children()[1], a, a_inv);
            const int32_t db = m->children()[1]->dim();
            for (int32_t x = 0; x < m->children()[0]->dim(); ++x)
                for (int32_t y = 0; y < db; ++y) {
                    SparseVec& col = cols[x * db + y];
                    for (const auto& [i, ci] : ca[x])
                        for (const auto& [j, cj] : cb[y])
                            col.emplace_back(i * db + j, ci * cj);
                    sv_normalize(col);
                }
            break;
        }
        case Module::Wedge: {
            auto cc = action_matrix(m->children()[0], a, a_inv);
            const int k = m->arity();
            for (int32_t o = 0; o < m->dim(); ++o) {
                auto combo = m->wedge_combo(o);
                SparseVec col;
                std::vector<int32_t> pick(k);
                auto rec = [&](auto&& self, int slot, Rational coeff) -> void {
                    if (slot == k) {
                        auto [ord, sign] = m->wedge_ord(pick);
                        if (sign != 0)
                            col.emplace_back(ord, with_sign(sign, coeff));
                        return;
                    }
                    for (const auto& [i, c] : cc[combo[slot]]) {
                        pick[slot] = i;
                        self(self, slot + 1, coeff * c);
                    }
                };
                rec(rec, 0, Rational(1));
                sv_normalize(col);
                cols[o] = std::move(col);
            }
            break;
        }
        case Module::Quotient: {
            auto cc = action_matrix(m->children()[0], a, a_inv);
            for (int32_t o = 0; o < m->dim(); ++o)
                cols[o] = m->quotient_project(cc[m->quotient_rep(o)]);
            break;
        }
    }
    return cols;
}

inline ModuleElement act_matrix(const RatMatrix& a, const ModuleElement& v) {
    auto a_inv = invert_matrix(a);
    auto cols = action_matrix(v.module, a, a_inv);
    SparseVec out;
    for (const auto& [o, c] : v.coords) sv_axpy(out, c, cols[o]);
    return {v.module, std::move(out)};
}

}  // namespace jkl

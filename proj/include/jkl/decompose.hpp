// Irreducible decomposition by highest-weight-vector extraction: per dominant
// weight, the joint kernel of the raising operators E_{i,i+1}.
#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "jkl/linalg.hpp"
#include "jkl/module.hpp"
#include "jkl/weights.hpp"

namespace jkl {

inline std::map<Weight, std::vector<int32_t>> weight_spaces(const ModulePtr& m) {
    std::map<Weight, std::vector<int32_t>> spaces;
    for (int32_t o = 0; o < m->dim(); ++o) spaces[m->weight(o)].push_back(o);
    return spaces;
}

struct HwvSpace {
    Weight weight;
    std::vector<ModuleElement> vectors;
};

// Exact kernel intersection over E_{12}, ..., E_{n-1,n}, one weight space at
// a time; only dominant weights can carry a highest weight vector.
inline std::vector<HwvSpace> highest_weight_vectors(const ModulePtr& m) {
    const int n = m->n();
    auto spaces = weight_spaces(m);
    std::vector<HwvSpace> out;
    for (const auto& [w, ords] : spaces) {
        if (!w.is_dominant()) continue;
        // positions of target weight spaces, stacked with row offsets
        std::vector<const std::vector<int32_t>*> targets(n - 1, nullptr);
        std::vector<int32_t> offset(n, 0);
        for (int i = 1; i < n; ++i) {
            Weight wt = w;
            wt[i - 1] += 1;
            wt[i] -= 1;
            auto it = spaces.find(wt);
            targets[i - 1] = (it == spaces.end()) ? nullptr : &it->second;
            offset[i] = offset[i - 1] + (targets[i - 1] ? targets[i - 1]->size() : 0);
        }
        std::vector<SparseVec> cols(ords.size());
        std::vector<std::pair<int32_t, Rational>> terms;
        for (size_t c = 0; c < ords.size(); ++c) {
            SparseVec& col = cols[c];
            for (int i = 1; i < n; ++i) {
                if (!targets[i - 1]) continue;
                terms.clear();
                m->apply_e_basis(i, i + 1, ords[c], terms);
                const auto& tgt = *targets[i - 1];
                for (const auto& [o, coeff] : terms) {
                    auto it = std::lower_bound(tgt.begin(), tgt.end(), o);
                    col.emplace_back(offset[i - 1] + static_cast<int32_t>(it - tgt.begin()),
                                     coeff);
                }
            }
            sv_normalize(col);
        }
        auto kernel = kernel_of_columns(cols);
        if (kernel.empty()) continue;
        HwvSpace hs{w, {}};
        for (auto& k : kernel) {
            SparseVec global;
            for (const auto& [local, c] : k) global.emplace_back(ords[local], c);
            sv_normalize(global);
            hs.vectors.push_back(ModuleElement{m, std::move(global)});
        }
        out.push_back(std::move(hs));
    }
    return out;
}

inline bool is_highest_weight_vector(const ModuleElement& v) {
    if (v.is_zero()) return false;
    v.weight();  // must be weight-homogeneous
    for (int i = 1; i < v.module->n(); ++i)
        if (!v.module->apply_e(i, i + 1, v.coords).empty()) return false;
    return true;
}

struct IrrepComponent {
    Lambda lambda;
    PhiLabel phi;
    int64_t multiplicity;
    Integer dimension;  // of a single copy

    bool operator==(const IrrepComponent& rhs) const = default;
};

using Decomposition = std::vector<IrrepComponent>;

inline Decomposition decomposition_from_hwv(const std::vector<HwvSpace>& hwv,
                                            const Integer& total_dim) {
    Decomposition out;
    Integer accounted = 0;
    for (const auto& hs : hwv) {
        Lambda l = hs.weight.to_lambda();
        IrrepComponent c{l, lambda_to_phi(l), static_cast<int64_t>(hs.vectors.size()),
                         weyl_dimension(l)};
        accounted += c.dimension * c.multiplicity;
        out.push_back(std::move(c));
    }
    if (accounted != total_dim)
        throw internal_error("decomposition does not account for the module dimension: " +
                             accounted.get_str() + " vs " + total_dim.get_str());
    return out;
}

// Multiplicity of Phi(lambda) = dim of the highest-weight space at lambda.
// The dimension accounting is a hard postcondition, never returned as data.
inline Decomposition decompose(const ModulePtr& m) {
    return decomposition_from_hwv(highest_weight_vectors(m), Integer(m->dim()));
}

// Decomposition of the submodule spanned by the given vectors: for each
// highest-weight space of the ambient module, the dimension of its
// intersection with the span.
inline Decomposition decompose_span(const std::vector<ModuleElement>& span,
                                    const ModulePtr& m) {
    RowReducer v;
    for (const auto& e : span) {
        if (!structurally_equal(*e.module, *m))
            throw error("span vector lives in a different module");
        v.insert(e.coords);
    }
    const int64_t span_rank = static_cast<int64_t>(v.rank());
    Decomposition out;
    Integer accounted = 0;
    for (const auto& hs : highest_weight_vectors(m)) {
        RowReducer joint = v;
        for (const auto& hv : hs.vectors) joint.insert(hv.coords);
        // dim(span ∩ hwv space) = |hwv| + rank(span) - rank(span + hwv)
        int64_t mult = static_cast<int64_t>(hs.vectors.size()) + span_rank -
                       static_cast<int64_t>(joint.rank());
        if (mult < 0) throw internal_error("negative multiplicity in span decomposition");
        if (mult == 0) continue;
        Lambda l = hs.weight.to_lambda();
        IrrepComponent c{l, lambda_to_phi(l), mult, weyl_dimension(l)};
        accounted += c.dimension * c.multiplicity;
        out.push_back(std::move(c));
    }
    if (accounted != Integer(static_cast<long>(span_rank)))
        throw internal_error("span is not a submodule: irreducible accounting mismatch");
    return out;
}

}  // namespace jkl

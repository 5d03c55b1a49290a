// Truncated Magnus expansion: x_i -> 1 + X_i into the power series ring in
// noncommuting variables, exact rational coefficients, degree bound D.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jkl/rational.hpp"
#include "jkl/word.hpp"

namespace jkl {

// Monomials are nibble-packed with a leading 1 sentinel, so the empty
// monomial is key 1 and X_2 X_7 is 0x127. Indices fit in a nibble (n <= 12)
// and degrees stay <= 6, well inside 64 bits.
using Mono = uint64_t;

inline constexpr Mono kEmptyMono = 1;

inline Mono mono_append(Mono m, int index) { return (m << 4) | static_cast<Mono>(index); }

inline int mono_degree(Mono m) {
    int d = 0;
    while (m != 1) {
        m >>= 4;
        ++d;
    }
    return d;
}

inline std::vector<int> mono_indices(Mono m) {
    std::vector<int> idx;
    while (m != 1) {
        idx.push_back(static_cast<int>(m & 0xF));
        m >>= 4;
    }
    return {idx.rbegin(), idx.rend()};
}

inline Mono mono_from_indices(const std::vector<int>& idx) {
    Mono m = kEmptyMono;
    for (int i : idx) m = mono_append(m, i);
    return m;
}

inline Mono mono_concat(Mono a, Mono b) {
    int db = mono_degree(b);
    Mono digits = b - (kEmptyMono << (4 * db));
    return (a << (4 * db)) | digits;
}

inline std::string mono_str(Mono m) {
    if (m == kEmptyMono) return "1";
    std::string s;
    for (int i : mono_indices(m)) s += "X" + std::to_string(i);
    return s;
}

// A homogeneous degree-k piece of an expansion, i.e. an element of H^{(x)k}.
struct HomogeneousTensor {
    int n = 0;
    int degree = 0;
    std::map<Mono, Rational> coeffs;

    bool is_zero() const { return coeffs.empty(); }

    void add(Mono m, const Rational& c) {
        auto [it, fresh] = coeffs.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (jkl::is_zero(it->second)) coeffs.erase(it);
        }
    }

    bool operator==(const HomogeneousTensor& rhs) const = default;
};

class TruncatedSeries {
public:
    TruncatedSeries(int n, int degree_bound) : n_(n), bound_(degree_bound) {
        if (degree_bound < 1) throw error("degree bound must be >= 1");
    }

    static TruncatedSeries one(int n, int degree_bound) {
        TruncatedSeries s(n, degree_bound);
        s.coeffs_[kEmptyMono] = 1;
        return s;
    }

    int n() const { return n_; }
    int degree_bound() const { return bound_; }
    const std::map<Mono, Rational>& coeffs() const { return coeffs_; }

    Rational coeff(Mono m) const {
        auto it = coeffs_.find(m);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    void add(Mono m, const Rational& c) {
        if (mono_degree(m) > bound_) return;
        auto [it, fresh] = coeffs_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (jkl::is_zero(it->second)) coeffs_.erase(it);
        }
    }

    TruncatedSeries operator*(const TruncatedSeries& rhs) const {
        TruncatedSeries out(n_, bound_);
        for (const auto& [ma, ca] : coeffs_) {
            int da = mono_degree(ma);
            for (const auto& [mb, cb] : rhs.coeffs_) {
                if (da + mono_degree(mb) > bound_) continue;
                out.add(mono_concat(ma, mb), ca * cb);
            }
        }
        return out;
    }

    TruncatedSeries operator+(const TruncatedSeries& rhs) const {
        TruncatedSeries out = *this;
        for (const auto& [m, c] : rhs.coeffs_) out.add(m, c);
        return out;
    }

    TruncatedSeries operator-(const TruncatedSeries& rhs) const {
        TruncatedSeries out = *this;
        for (const auto& [m, c] : rhs.coeffs_) out.add(m, -c);
        return out;
    }

    bool operator==(const TruncatedSeries& rhs) const {
        return coeffs_ == rhs.coeffs_;
    }

    HomogeneousTensor degree_part(int k) const {
        HomogeneousTensor t{n_, k, {}};
        for (const auto& [m, c] : coeffs_)
            if (mono_degree(m) == k) t.coeffs.emplace(m, c);
        return t;
    }

    // Multiply on the right by the expansion of a single signed letter:
    // (1 + X_i) or its truncated geometric inverse 1 - X_i + X_i^2 - ...
    void mul_letter(int32_t letter) {
        int i = std::abs(letter);
        if (i < 1 || i > n_) throw error("letter index out of range in expansion");
        if (letter > 0) {
            std::map<Mono, Rational> next = coeffs_;
            for (const auto& [m, c] : coeffs_) {
                if (mono_degree(m) >= bound_) continue;
                Mono m2 = mono_append(m, i);
                auto [it, fresh] = next.try_emplace(m2, c);
                if (!fresh) {
                    it->second += c;
                    if (jkl::is_zero(it->second)) next.erase(it);
                }
            }
            coeffs_ = std::move(next);
        } else {
            // full geometric series, not the degree-1 approximation: this is
            // what keeps expand(uv) = expand(u)expand(v) exact
            TruncatedSeries acc = *this;
            TruncatedSeries cur = *this;
            for (int t = 1; t <= bound_; ++t) {
                TruncatedSeries shifted(n_, bound_);
                for (const auto& [m, c] : cur.coeffs_) {
                    if (mono_degree(m) >= bound_) continue;
                    shifted.add(mono_append(m, i), -c);
                }
                if (shifted.coeffs_.empty()) break;
                acc = acc + shifted;
                cur = std::move(shifted);
            }
            coeffs_ = std::move(acc.coeffs_);
        }
    }

private:
    int n_;
    int bound_;
    std::map<Mono, Rational> coeffs_;
};

inline TruncatedSeries magnus_expand(const Word& w, int n, int degree_bound) {
    TruncatedSeries s = TruncatedSeries::one(n, degree_bound);
    for (int32_t l : w.letters()) s.mul_letter(l);
    return s;
}

// Smallest k <= D with a nonzero degree-k part of expand(w) - 1, nullopt when
// every part up to D vanishes. w lies in F^(k) iff the result is >= k.
inline std::optional<int> filtration_degree(const Word& w, int n, int degree_bound) {
    TruncatedSeries s = magnus_expand(w, n, degree_bound);
    for (int k = 1; k <= degree_bound; ++k)
        if (!s.degree_part(k).is_zero()) return k;
    return std::nullopt;
}

// The class of w in F^(k)/F^(k+1) as a degree-k tensor. Requires w in F^(k).
inline HomogeneousTensor leading_term(const Word& w, int n, int k) {
    TruncatedSeries s = magnus_expand(w, n, k);
    for (int d = 1; d < k; ++d)
        if (!s.degree_part(d).is_zero())
            throw error("not in F^(" + std::to_string(k) + ")");
    return s.degree_part(k);
}

}  // namespace jkl

// Weights, dominant weights lambda, the subscript labels Phi_{a_1,...,a_n},
// and the Weyl dimension formula.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "jkl/rational.hpp"

namespace jkl {

constexpr int kMaxRank = 12;

// An integral gl(n) weight in the L_i coordinates.
struct Weight {
    int n = 0;
    std::array<int16_t, kMaxRank> v{};

    explicit Weight(int rank = 0) : n(rank) {}

    int16_t& operator[](int i) { return v[i]; }
    int16_t operator[](int i) const { return v[i]; }

    Weight operator+(const Weight& rhs) const {
        Weight w(n);
        for (int i = 0; i < n; ++i) w.v[i] = v[i] + rhs.v[i];
        return w;
    }
    Weight operator-() const {
        Weight w(n);
        for (int i = 0; i < n; ++i) w.v[i] = -v[i];
        return w;
    }
    bool operator==(const Weight& rhs) const = default;
    // lexicographically larger weights first
    bool operator<(const Weight& rhs) const {
        for (int i = 0; i < n; ++i)
            if (v[i] != rhs.v[i]) return v[i] > rhs.v[i];
        return false;
    }

    bool is_dominant() const {
        for (int i = 0; i + 1 < n; ++i)
            if (v[i] < v[i + 1]) return false;
        return true;
    }

    std::vector<int64_t> to_lambda() const {
        std::vector<int64_t> l(n);
        for (int i = 0; i < n; ++i) l[i] = v[i];
        return l;
    }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + ")";
    }
};

struct WeightHash {
    size_t operator()(const Weight& w) const {
        size_t h = 1469598103934665603ull;
        for (int i = 0; i < w.n; ++i) {
            h ^= static_cast<size_t>(static_cast<uint16_t>(w.v[i]));
            h *= 1099511628211ull;
        }
        return h ^ static_cast<size_t>(w.n);
    }
};

// Dominant weight (weakly decreasing integer n-tuple).
using Lambda = std::vector<int64_t>;
// Subscript form (a_1,...,a_n): a_i >= 0 for i < n, a_n free.
using PhiLabel = std::vector<int64_t>;

inline bool is_dominant(const Lambda& l) {
    for (size_t i = 0; i + 1 < l.size(); ++i)
        if (l[i] < l[i + 1]) return false;
    return true;
}

inline Lambda phi_to_lambda(const PhiLabel& a) {
    Lambda l(a.size());
    int64_t acc = 0;
    for (size_t i = a.size(); i-- > 0;) {
        acc += a[i];
        l[i] = acc;
    }
    return l;
}

inline PhiLabel lambda_to_phi(const Lambda& l) {
    PhiLabel a(l.size());
    for (size_t i = 0; i + 1 < l.size(); ++i) a[i] = l[i] - l[i + 1];
    if (!l.empty()) a.back() = l.back();
    return a;
}

inline Lambda lambda_dual(const Lambda& l) {
    Lambda d(l.rbegin(), l.rend());
    for (auto& x : d) x = -x;
    return d;
}

inline PhiLabel phi_dual(const PhiLabel& a) {
    return lambda_to_phi(lambda_dual(phi_to_lambda(a)));
}

// dim Phi(lambda) = prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i)
inline Integer weyl_dimension(const Lambda& l) {
    if (!is_dominant(l)) throw error("weyl_dimension needs a dominant weight");
    const size_t n = l.size();
    Integer num(1), den(1);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            num *= Integer(static_cast<long>(l[i] - l[j] + static_cast<int64_t>(j - i)));
            den *= Integer(static_cast<long>(j - i));
        }
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw internal_error("Weyl dimension is not an integer");
    return num / den;
}

inline std::string tuple_str(const std::vector<int64_t>& t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

inline std::string phi_str(const PhiLabel& a) { return "Phi_" + tuple_str(a); }

// A dominant-weight shape with an elastic run of zeros in the middle, e.g.
// (1,0,...,0,-1,-2). Instantiating picks the rank.
struct LambdaPattern {
    std::vector<int64_t> prefix;
    std::vector<int64_t> suffix;

    bool instantiable(int n) const {
        if (prefix.size() + suffix.size() > static_cast<size_t>(n)) return false;
        return is_dominant(instantiate_unchecked(n));
    }

    Lambda instantiate(int n) const {
        if (!instantiable(n)) throw error("lambda pattern does not fit rank " + std::to_string(n));
        return instantiate_unchecked(n);
    }

private:
    Lambda instantiate_unchecked(int n) const {
        Lambda l(prefix);
        l.resize(n - suffix.size(), 0);
        l.insert(l.end(), suffix.begin(), suffix.end());
        return l;
    }
};

}  // namespace jkl

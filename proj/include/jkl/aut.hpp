// The automorphism calculus of Aut(F_n): formal words in the Magnus and
// Nielsen generators, their evaluation as endomorphisms, and the action on
// first homology.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jkl/word.hpp"

namespace jkl {

// Endomorphism of F_n given by the images of the generators. Not every
// endomorphism is invertible; inverses exist only through formal letter
// inversion at the AutWord level.
class Endomorphism {
public:
    explicit Endomorphism(int rank) : rank_(rank) {
        images_.reserve(rank);
        for (int i = 1; i <= rank; ++i) images_.push_back(Word::generator(i));
    }

    int rank() const { return rank_; }
    const Word& image(int i) const { return images_.at(i - 1); }
    void set_image(int i, Word w) { images_.at(i - 1) = std::move(w); }

    Word apply(const Word& w) const {
        Word out;
        for (int32_t l : w.letters()) {
            const Word& im = image(std::abs(l));
            out = out * (l > 0 ? im : im.inverse());
        }
        return out;
    }

    bool is_identity() const {
        for (int i = 1; i <= rank_; ++i)
            if (image(i) != Word::generator(i)) return false;
        return true;
    }

    bool operator==(const Endomorphism& rhs) const = default;

private:
    int rank_;
    std::vector<Word> images_;
};

// (a o b)(x) = a(b(x))
inline Endomorphism compose(const Endomorphism& a, const Endomorphism& b) {
    if (a.rank() != b.rank()) throw error("endomorphism rank mismatch");
    Endomorphism e(a.rank());
    for (int i = 1; i <= a.rank(); ++i) e.set_image(i, a.apply(b.image(i)));
    return e;
}

// Entry (i,j) is the exponent sum of x_i in e(x_j).
inline std::vector<std::vector<int64_t>> abelianization_matrix(const Endomorphism& e) {
    int n = e.rank();
    std::vector<std::vector<int64_t>> m(n, std::vector<int64_t>(n, 0));
    for (int j = 1; j <= n; ++j)
        for (int32_t l : e.image(j).letters())
            m[std::abs(l) - 1][j - 1] += (l > 0 ? 1 : -1);
    return m;
}

inline bool is_IA(const Endomorphism& e) {
    auto m = abelianization_matrix(e);
    int n = e.rank();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

struct AutLetter {
    enum Kind { G, F, Perm, Inv, Transvect };
    Kind kind;
    int i = 0, j = 0, k = 0;
    bool inverse = false;

    static AutLetter g(int i, int j, bool inv = false) {
        if (i == j) throw error("g[i,j] needs i != j");
        return {G, i, j, 0, inv};
    }
    static AutLetter f(int i, int j, int k, bool inv = false) {
        if (!(i < j) || k == i || k == j) throw error("f[i,j,k] needs i<j, k not in {i,j}");
        return {F, i, j, k, inv};
    }
    static AutLetter perm(int i, int j, bool inv = false) {
        if (i == j) throw error("P[i,j] needs i != j");
        return {Perm, i, j, 0, inv};
    }
    static AutLetter invgen(int i, bool inv = false) { return {Inv, i, 0, 0, inv}; }
    static AutLetter transvect(int i, int j, bool inv = false) {
        if (i == j) throw error("T[i,j] needs i != j");
        return {Transvect, i, j, 0, inv};
    }

    AutLetter inverted() const {
        AutLetter l = *this;
        l.inverse = !l.inverse;
        return l;
    }

    int max_index() const { return std::max({i, j, k}); }

    bool operator==(const AutLetter& rhs) const = default;

    std::string str() const {
        std::string s;
        switch (kind) {
            case G: s = "g[" + std::to_string(i) + "," + std::to_string(j) + "]"; break;
            case F:
                s = "f[" + std::to_string(i) + "," + std::to_string(j) + "," +
                    std::to_string(k) + "]";
                break;
            case Perm: s = "P[" + std::to_string(i) + "," + std::to_string(j) + "]"; break;
            case Inv: s = "I[" + std::to_string(i) + "]"; break;
            case Transvect: s = "T[" + std::to_string(i) + "," + std::to_string(j) + "]"; break;
        }
        if (inverse) s += "^-1";
        return s;
    }
};

// Closed-form images, including the inverse letters.
inline Endomorphism evaluate_letter(const AutLetter& l, int rank) {
    if (l.max_index() > rank) throw error("letter " + l.str() + " exceeds rank");
    if (rank < 2) throw error("rank must be at least 2");
    Endomorphism e(rank);
    Word xi = Word::generator(l.i), xj = Word::generator(l.j);
    switch (l.kind) {
        case AutLetter::G:
            // g_ij: x_j -> x_i x_j x_i^-1 ; inverse conjugates the other way
            e.set_image(l.j, l.inverse ? xi.inverse() * xj * xi : xi * xj * xi.inverse());
            break;
        case AutLetter::F:
            // f_ijk: x_k -> x_k [x_i,x_j]
            e.set_image(l.k, Word::generator(l.k) * (l.inverse ? word_commutator(xj, xi)
                                                               : word_commutator(xi, xj)));
            break;
        case AutLetter::Perm:
            e.set_image(l.i, xj);
            e.set_image(l.j, xi);
            break;
        case AutLetter::Inv:
            e.set_image(l.i, xi.inverse());
            break;
        case AutLetter::Transvect:
            e.set_image(l.i, l.inverse ? xi * xj.inverse() : xi * xj);
            break;
    }
    return e;
}

// A formal word in the generator alphabet of Aut(F_n); the leftmost letter
// is applied last.
class AutWord {
public:
    explicit AutWord(int rank) : rank_(rank) {}
    AutWord(int rank, std::vector<AutLetter> letters)
        : rank_(rank), letters_(std::move(letters)) {
        for (const auto& l : letters_) check(l);
    }

    int rank() const { return rank_; }
    const std::vector<AutLetter>& letters() const { return letters_; }

    AutWord& append(const AutLetter& l) {
        check(l);
        letters_.push_back(l);
        return *this;
    }

    AutWord operator*(const AutWord& rhs) const {
        if (rank_ != rhs.rank_) throw error("autword rank mismatch");
        AutWord w = *this;
        for (const auto& l : rhs.letters_) w.letters_.push_back(l);
        return w;
    }

    AutWord inverted() const {
        AutWord w(rank_);
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            w.letters_.push_back(it->inverted());
        return w;
    }

    std::string str() const {
        if (letters_.empty()) return "1";
        std::string s;
        for (const auto& l : letters_) {
            if (!s.empty()) s += "*";
            s += l.str();
        }
        return s;
    }

private:
    void check(const AutLetter& l) const {
        if (l.max_index() > rank_) throw error("letter " + l.str() + " exceeds rank");
    }

    int rank_;
    std::vector<AutLetter> letters_;
};

inline AutWord aut_commutator(const AutWord& u, const AutWord& v) {
    return u * v * u.inverted() * v.inverted();
}

inline AutWord single(int rank, const AutLetter& l) {
    AutWord w(rank);
    w.append(l);
    return w;
}

inline Endomorphism evaluate(const AutWord& w) {
    Endomorphism acc(w.rank());
    for (const auto& l : w.letters()) acc = compose(acc, evaluate_letter(l, w.rank()));
    return acc;
}

// The Magnus generating set of IA_n: all g_ij (i != j) and f_ijk (i < j,
// k not in {i,j}), in a fixed order.
inline std::vector<AutLetter> magnus_letters(int n) {
    std::vector<AutLetter> out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) out.push_back(AutLetter::g(i, j));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                if (k != i && k != j) out.push_back(AutLetter::f(i, j, k));
    return out;
}

inline std::vector<AutLetter> nielsen_letters(int n) {
    std::vector<AutLetter> out;
    for (int i = 1; i <= n; ++i) {
        out.push_back(AutLetter::invgen(i));
        for (int j = 1; j <= n; ++j)
            if (i != j) {
                out.push_back(AutLetter::perm(i, j));
                out.push_back(AutLetter::transvect(i, j));
            }
    }
    return out;
}

// Conjugation by x_k as a word in Magnus generators: g_k1 ... g_kn (k skipped).
inline AutWord inner_autword(int n, int k) {
    AutWord w(n);
    for (int i = 1; i <= n; ++i)
        if (i != k) w.append(AutLetter::g(k, i));
    return w;
}

}  // namespace jkl

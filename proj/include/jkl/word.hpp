// Reduced words in the free group F_n. Letters are signed generator indices:
// +i stands for x_i, -i for its inverse.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "jkl/rational.hpp"

namespace jkl {

class Word {
public:
    Word() = default;

    // Freely reduces the letter sequence; reduction is confluent so the
    // result does not depend on cancellation order.
    static Word reduce(const std::vector<int32_t>& letters, int rank) {
        Word w;
        w.letters_.reserve(letters.size());
        for (int32_t l : letters) w.push(l, rank);
        return w;
    }

    static Word generator(int i, int sign = 1) {
        Word w;
        w.letters_.push_back(sign > 0 ? i : -i);
        return w;
    }

    const std::vector<int32_t>& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }
    size_t length() const { return letters_.size(); }

    Word inverse() const {
        Word w;
        w.letters_.reserve(letters_.size());
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            w.letters_.push_back(-*it);
        return w;
    }

    Word operator*(const Word& rhs) const {
        Word w = *this;
        for (int32_t l : rhs.letters_) w.push(l, 0);
        return w;
    }

    bool operator==(const Word& rhs) const = default;

    std::string str() const {
        if (letters_.empty()) return "1";
        std::string s;
        for (int32_t l : letters_) {
            if (!s.empty()) s += "*";
            s += "x" + std::to_string(std::abs(l));
            if (l < 0) s += "^-1";
        }
        return s;
    }

private:
    // rank 0 skips the range check (used when letters are already validated)
    void push(int32_t l, int rank) {
        if (l == 0 || (rank > 0 && std::abs(l) > rank))
            throw error("word letter index out of range: " + std::to_string(l));
        if (!letters_.empty() && letters_.back() == -l)
            letters_.pop_back();
        else
            letters_.push_back(l);
    }

    std::vector<int32_t> letters_;
};

// [a,b] = a b a^-1 b^-1
inline Word word_commutator(const Word& a, const Word& b) {
    return a * b * a.inverse() * b.inverse();
}

}  // namespace jkl

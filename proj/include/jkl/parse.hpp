// Text grammar shared with the CLI: generators x1..x9, letters g[i,j],
// f[i,j,k], P[i,j], I[i], T[i,j], inverse suffix ^-1, product *, and
// commutator brackets [u,v].
#pragma once

#include <cctype>
#include <string>

#include "jkl/aut.hpp"
#include "jkl/word.hpp"

namespace jkl {

namespace detail {

class Cursor {
public:
    explicit Cursor(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eof() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    int integer() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start || (s_[start] == '-' && pos_ == start + 1)) fail("expected integer");
        return std::stoi(s_.substr(start, pos_ - start));
    }
    // trailing ^-1 markers; returns true for an odd count
    bool inverse_suffix() {
        bool inv = false;
        while (true) {
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                if (integer() != -1) fail("only ^-1 powers are supported");
                inv = !inv;
            } else {
                return inv;
            }
        }
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw error("parse error at position " + std::to_string(pos_) + ": " + msg +
                    " in \"" + s_ + "\"");
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
};

inline Word parse_word_expr(Cursor& c, int rank);

inline Word parse_word_atom(Cursor& c, int rank) {
    Word w;
    if (c.accept('[')) {
        Word a = parse_word_expr(c, rank);
        c.expect(',');
        Word b = parse_word_expr(c, rank);
        c.expect(']');
        w = word_commutator(a, b);
    } else if (c.accept('(')) {
        w = parse_word_expr(c, rank);
        c.expect(')');
    } else if (c.accept('x')) {
        int i = c.integer();
        if (i < 1 || i > rank) c.fail("generator index out of range");
        w = Word::generator(i);
    } else if (c.accept('1')) {
        // identity
    } else {
        c.fail("expected generator, '[', '(' or '1'");
    }
    return c.inverse_suffix() ? w.inverse() : w;
}

inline Word parse_word_expr(Cursor& c, int rank) {
    Word w = parse_word_atom(c, rank);
    while (c.peek() == '*') {
        c.accept('*');
        w = w * parse_word_atom(c, rank);
    }
    return w;
}

inline AutWord parse_aut_expr(Cursor& c, int rank);

inline AutWord parse_aut_atom(Cursor& c, int rank) {
    AutWord w(rank);
    if (c.accept('[')) {
        AutWord a = parse_aut_expr(c, rank);
        c.expect(',');
        AutWord b = parse_aut_expr(c, rank);
        c.expect(']');
        w = aut_commutator(a, b);
    } else if (c.accept('(')) {
        w = parse_aut_expr(c, rank);
        c.expect(')');
    } else if (c.accept('1')) {
        // identity
    } else {
        char name = c.peek();
        if (name != 'g' && name != 'f' && name != 'P' && name != 'I' && name != 'T')
            c.fail("expected an automorphism letter");
        c.accept(name);
        c.expect('[');
        int i = c.integer();
        if (name == 'I') {
            c.expect(']');
            w.append(AutLetter::invgen(i));
        } else {
            c.expect(',');
            int j = c.integer();
            if (name == 'f') {
                c.expect(',');
                int k = c.integer();
                c.expect(']');
                w.append(AutLetter::f(i, j, k));
            } else {
                c.expect(']');
                if (name == 'g') w.append(AutLetter::g(i, j));
                if (name == 'P') w.append(AutLetter::perm(i, j));
                if (name == 'T') w.append(AutLetter::transvect(i, j));
            }
        }
    }
    return c.inverse_suffix() ? w.inverted() : w;
}

inline AutWord parse_aut_expr(Cursor& c, int rank) {
    AutWord w = parse_aut_atom(c, rank);
    while (c.peek() == '*') {
        c.accept('*');
        w = w * parse_aut_atom(c, rank);
    }
    return w;
}

}  // namespace detail

inline Word parse_word(const std::string& text, int rank) {
    detail::Cursor c(text);
    Word w = detail::parse_word_expr(c, rank);
    if (!c.eof()) c.fail("trailing input");
    return w;
}

inline AutWord parse_autword(const std::string& text, int rank) {
    detail::Cursor c(text);
    AutWord w = detail::parse_aut_expr(c, rank);
    if (!c.eof()) c.fail("trailing input");
    return w;
}

}  // namespace jkl

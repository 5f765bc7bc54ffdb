#pragma once

// Shared enumeration and oracle utilities.  Oracles here are deliberately
// independent of the library path they check: small matrices use plain
// int64 arithmetic, never farey::Mat.

#include <array>
#include <cstdint>
#include <vector>

#include "farey/word.hpp"

namespace farey::test {

// All normalized words with 1..max_letters letters (identity excluded).
inline std::vector<Word> all_words(int max_letters) {
    std::vector<Word> out;
    std::vector<Word> frontier;
    for (Letter x : {Letter::S, Letter::L, Letter::LL}) frontier.push_back(Word{{x}});
    for (int len = 1; len <= max_letters; ++len) {
        out.insert(out.end(), frontier.begin(), frontier.end());
        if (len == max_letters) break;
        std::vector<Word> next;
        for (const Word& w : frontier) {
            if (w.letters.back() == Letter::S) {
                for (Letter x : {Letter::L, Letter::LL}) {
                    Word v = w;
                    v.letters.push_back(x);
                    next.push_back(std::move(v));
                }
            } else {
                Word v = w;
                v.letters.push_back(Letter::S);
                next.push_back(std::move(v));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

// Independent 2x2 integer matrices over int64, up to sign.
struct M64 {
    std::int64_t p = 1, q = 0, r = 0, s = 1;

    friend M64 operator*(const M64& a, const M64& b) {
        return M64{a.p * b.p + a.q * b.r, a.p * b.q + a.q * b.s, a.r * b.p + a.s * b.r,
                   a.r * b.q + a.s * b.s};
    }
    M64 inv() const { return M64{s, -q, -r, p}; }
    M64 canon() const {
        for (std::int64_t v : {p, q, r, s}) {
            if (v == 0) continue;
            if (v < 0) return M64{-p, -q, -r, -s};
            break;
        }
        return *this;
    }
    friend bool operator==(const M64& a, const M64& b) {
        M64 x = a.canon(), y = b.canon();
        return x.p == y.p && x.q == y.q && x.r == y.r && x.s == y.s;
    }
};

inline M64 m64_s() { return M64{0, -1, 1, 0}; }
inline M64 m64_l() { return M64{1, -1, 1, 0}; }
inline M64 m64_ll() { return m64_l() * m64_l(); }

inline M64 m64_of(const Word& w) {
    M64 acc;
    for (Letter x : w.letters) {
        switch (x) {
            case Letter::S: acc = acc * m64_s(); break;
            case Letter::L: acc = acc * m64_l(); break;
            case Letter::LL: acc = acc * m64_ll(); break;
        }
    }
    return acc;
}

inline Word make_word(const std::string& text) { return parse_word(text); }

} // namespace farey::test

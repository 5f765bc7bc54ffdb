#pragma once

// Exact algebra in PSL(2,Z) = Z/2 * Z/3.
//
// Generators: S of order 2 and L of order 3.  L^2 is stored as the single
// letter LL, so a normalized word strictly alternates between S and a letter
// from {L, LL}.  The empty word is the identity.

#include <cstdint>
#include <string>
#include <vector>

#include "farey/integer.hpp"

namespace farey {

enum class Letter : std::uint8_t { S = 0, L = 1, LL = 2 };

// Input alphabet of normalize(); Linv rewrites to LL.
enum class RawLetter : std::uint8_t { S, L, Linv, LL };

struct Word {
    std::vector<Letter> letters;

    bool identity() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;
};

// Unique reduced alternating word equal to the input in Z/2 * Z/3.
Word normalize(const std::vector<RawLetter>& raw);
Word normalize(const std::vector<Letter>& raw);

Word concat(const Word& a, const Word& b);
Word invert(const Word& w);
Word power(const Word& w, int k);
// g * w * g^-1, normalized.
Word conjugated(const Word& g, const Word& w);

// Conjugacy class representative: cyclically reduce, then take the
// lexicographically least rotation that starts with an L-letter (cyclically
// reduced words of length >= 2 alternate, so such rotations always exist).
// Two words are conjugate iff their representatives are equal.
Word cyclic_normal_form(const Word& w);

// Text form: concatenated letters, identity prints as "1".
std::string to_string(const Word& w);
// Case-insensitive sequence of S/L characters ("LL" is two chars); "1" or
// the empty string is the identity.  Whitespace is ignored.
Word parse_word(const std::string& text);

// 2x2 integer matrix of determinant 1, taken up to global sign.  The stored
// representative has its first nonzero entry, in the order p,q,r,s, positive.
struct Mat {
    Int p, q, r, s;

    Int det() const { return p * s - q * r; }
    Int trace_abs() const { return abs(p + s); }
    Mat inverse() const;

    friend Mat operator*(const Mat& a, const Mat& b);
    friend bool operator==(const Mat&, const Mat&) = default;
};

Mat mat_identity();
// The sign-canonical representative of +-m.
Mat canonical(const Mat& m);
// The representative with positive trace (requires trace != 0).
Mat trace_positive(const Mat& m);
Mat gen_s(); // (0,-1;1,0)
Mat gen_l(); // (1,-1;1,0)

std::string to_string(const Mat& m); // "p,q;r,s"
Mat parse_mat(const std::string& text);

Mat word_to_matrix(const Word& w);
// Inverse of word_to_matrix: the unique normalized word mapping to m,
// found by continued-fraction descent on the left column.
Word matrix_to_word(const Mat& m);

enum class ElementKind : std::uint8_t { Identity, Elliptic, Parabolic, Hyperbolic };

struct TraceClass {
    ElementKind kind = ElementKind::Identity;
    int elliptic_order = 0; // 2 or 3 when kind == Elliptic, else 0
    Int abs_trace;

    friend bool operator==(const TraceClass&, const TraceClass&) = default;
};

TraceClass classify(const Mat& m);
TraceClass classify(const Word& w);

std::string to_string(const TraceClass& t);

} // namespace farey

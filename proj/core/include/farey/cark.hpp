#pragma once

// The cark calculus: spines of hyperbolic elements as cyclic block words,
// conjugacy-invariant canonical forms, reciprocity, and the two-way bridge
// between hyperbolic words and indefinite binary quadratic forms.

#include <string>
#include <vector>

#include "farey/quadform.hpp"
#include "farey/word.hpp"

namespace farey {

// Spine block alphabet: P encodes an LS block, M an L^2 S block.
enum class Block : std::uint8_t { P = 0, M = 1 };

struct Cark {
    // Full cyclic block word, stored as its lexicographically least rotation
    // (P < M).  Contains at least one P and one M.
    std::vector<Block> spine;
    // Largest k with spine = root^k; the word is the k-th power of its
    // primitive root, which generates the same fixed points.
    int multiplicity = 1;

    friend bool operator==(const Cark&, const Cark&) = default;
};

// Factor the cyclic normal form into blocks.  Throws NotHyperbolic.
Cark word_to_cark(const Word& w);

// Concatenation of the blocks (P -> LS, M -> LLS), normalized.
Word cark_to_word(const Cark& c);

// Rotation equivalence of spines (equal canonical forms).
bool carks_conjugate(const Cark& a, const Cark& b);

// True iff the element is conjugate to its own inverse: the spine equals,
// up to rotation, its reversal with P and M swapped.
bool is_reciprocal(const Cark& c);

// The form of the fixed-point equation of w: with the positive-trace
// representative (p,q;r,s) of w and d = gcd(r, s-p, -q) > 0, the form
// (r, s-p, -q)/d.  Primitive, of positive non-square discriminant.
// Throws NotHyperbolic.
QuadForm word_to_form(const Word& w);

// Word of the fundamental automorph ((t-bu)/2, -cu; au, (t+bu)/2) of f,
// where (t,u) is the fundamental Pell solution; word_to_form inverts it
// exactly.  Throws SquareDiscriminant, NotPrimitive.
Word form_to_word(const QuadForm& f);

// Deterministic SVG: spine as a circle of 2*len(spine) nodes, branch stubs
// outward at P blocks and inward at M blocks.
std::string cark_svg(const Cark& c);

// "PM", or "PM^2" for the square of the primitive root, etc.
std::string to_string(const Cark& c);
// Accepts a {P,M} word (case-insensitive) with optional "^k" suffix, which
// repeats the written word k times.
Cark parse_cark(const std::string& text);

} // namespace farey

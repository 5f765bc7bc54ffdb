#pragma once

// Integer indefinite binary quadratic forms: Gauss reduction cycles, class
// numbers, composition, Pell solutions, minima and representations.
//
// All square-root comparisons are integer square comparisons; no floating
// point anywhere.  Classes are PSL(2,Z)-classes throughout, so class numbers
// are narrow class numbers and may differ from wide ones.

#include <string>
#include <vector>

#include "farey/integer.hpp"
#include "farey/word.hpp"

namespace farey {

struct QuadForm {
    Int a, b, c;

    friend bool operator==(const QuadForm&, const QuadForm&) = default;
    friend bool operator<(const QuadForm& x, const QuadForm& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        return x.c < y.c;
    }
};

struct PellSolution {
    Int t, u; // minimal positive solution of t^2 - disc*u^2 = 4
    friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

// The ordered rho-cycle of reduced forms of a class, stored rotated to start
// at its least member.  Two forms are equivalent iff their cycles are equal.
struct FormClass {
    Int discriminant;
    std::vector<QuadForm> cycle;
    friend bool operator==(const FormClass&, const FormClass&) = default;
};

Int discriminant(const QuadForm& f);
bool is_primitive(const QuadForm& f);

// Change of variable: (act(m,f))(x,y) = f(px+qy, rx+sy).  Composition is the
// right-action law act(m1*m2, f) = act(m2, act(m1, f)).
QuadForm act(const Mat& m, const QuadForm& f);

// Gauss criterion: 0 < b < sqrt(disc) and sqrt(disc) - b < 2|a| < sqrt(disc) + b.
bool is_reduced(const QuadForm& f);

// Reduction step (a,b,c) -> (c, b', (b'^2 - disc)/(4c)) with b' = -b mod 2c:
// taken in the window (sqrt(disc) - 2|c|, sqrt(disc)) when c^2 < disc, and
// with minimal absolute value otherwise (this keeps the iteration count
// logarithmic in the coefficients).
QuadForm rho(const QuadForm& f);

struct Reduction {
    QuadForm form;
    Mat m; // act(m, input) == form
    int steps = 0;
};
// Throws NotPrimitive, SquareDiscriminant, BadDiscriminant (disc <= 0).
Reduction reduce(const QuadForm& f);

FormClass cycle(const QuadForm& f);

// Same cycle, cyclically.  Throws DiscriminantMismatch.
bool equivalent(const QuadForm& f1, const QuadForm& f2);

// Number of rho-cycles over all primitive reduced forms of the discriminant.
// Throws BadDiscriminant, SquareDiscriminant.  The enumeration over b-values
// is sharded across `jobs` threads when jobs > 1.
Int class_number(const Int& disc, int jobs = 1);

// Dirichlet composition of the two classes; result is reduced.  Only equal
// discriminants are composed.  Throws DiscriminantMismatch, NotPrimitive.
QuadForm compose(const QuadForm& f1, const QuadForm& f2);

// (1, sigma, (sigma^2 - disc)/4) with sigma = disc mod 2.
QuadForm principal_form(const Int& disc);

// Minimal positive solution of t^2 - disc*u^2 = 4, from the transformation
// taking the principal cycle once around itself (the integer continued
// fraction of sqrt(disc)).  Throws SquareDiscriminant.
PellSolution pell_fundamental(const Int& disc);

// Least positive integer represented: least positive leading coefficient in
// the cycle.
Int minimum(const QuadForm& f);

struct Representation {
    bool represented = false;
    Int x, y; // witness with f(x,y) = n when represented
};
// Decision with witness, via divisors d^2 | n and square roots of disc
// modulo 4|n/d^2|.  Throws ZeroTarget and the reduce errors.
Representation represents(const QuadForm& f, const Int& n);

Int eval(const QuadForm& f, const Int& x, const Int& y);

std::string to_string(const QuadForm& f); // "(a,b,c)"
// Accepts "a,b,c" or "(a,b,c)".
QuadForm parse_form(const std::string& text);

} // namespace farey

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace farey {

using Int = boost::multiprecision::cpp_int;

// Floor of the square root; n must be non-negative.
Int isqrt(const Int& n);

bool is_square(const Int& n);

// Floor division and euclidean remainder (remainder always in [0, |m|)).
Int floordiv(const Int& a, const Int& b);
Int emod(const Int& a, const Int& m);

// g = x*a + y*b with g = gcd(a, b) >= 0.
struct Xgcd {
    Int g, x, y;
};
Xgcd xgcd(const Int& a, const Int& b);

Int gcd3(const Int& a, const Int& b, const Int& c);

} // namespace farey

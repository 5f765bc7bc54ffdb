#include "farey/integer.hpp"

#include <stdexcept>

namespace farey {

Int isqrt(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative value");
    return boost::multiprecision::sqrt(n);
}

bool is_square(const Int& n) {
    if (n < 0) return false;
    Int r = boost::multiprecision::sqrt(n);
    return r * r == n;
}

Int floordiv(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

Int emod(const Int& a, const Int& m) {
    Int mm = abs(m);
    Int r = a % mm;
    if (r < 0) r += mm;
    return r;
}

Xgcd xgcd(const Int& a, const Int& b) {
    Int old_r = a, r = b;
    Int old_x = 1, x = 0;
    Int old_y = 0, y = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * x; old_x = x; x = t;
        t = old_y - q * y; old_y = y; y = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    return {old_r, old_x, old_y};
}

Int gcd3(const Int& a, const Int& b, const Int& c) {
    using boost::multiprecision::gcd;
    return gcd(gcd(a, b), c);
}

} // namespace farey

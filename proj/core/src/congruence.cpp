#include "farey/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace farey {

namespace {

using Pair = std::pair<std::int64_t, std::int64_t>;
using Quad = std::array<std::int64_t, 4>;

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

// Right multiplication of a row vector by S = (0,-1;1,0) resp. L = (1,-1;1,0).
Pair row_s(const Pair& p, std::int64_t n) {
    return {p.second % n, (n - p.first % n) % n};
}
Pair row_l(const Pair& p, std::int64_t n) {
    return {(p.first + p.second) % n, (n - p.first % n) % n};
}

// Canonical representative of (u:v) in P^1(Z/n): least pair over unit scaling.
struct P1Space {
    std::int64_t n;
    std::vector<std::int64_t> units;

    explicit P1Space(std::int64_t n) : n(n) {
        for (std::int64_t x = 0; x < n; ++x)
            if (gcd64(x, n) == 1) units.push_back(x);
        if (n == 1) units = {0};
    }

    Pair canon(const Pair& p) const {
        Pair best{-1, -1};
        for (std::int64_t lam : units) {
            Pair q{(lam * p.first) % n, (lam * p.second) % n};
            if (best.first < 0 || q < best) best = q;
        }
        return best;
    }

    std::vector<Pair> points() const {
        std::map<Pair, bool> seen;
        std::vector<Pair> out;
        for (std::int64_t u = 0; u < n; ++u) {
            for (std::int64_t v = 0; v < n; ++v) {
                if (gcd64(gcd64(u, v), n) != 1) continue;
                Pair c = canon({u, v});
                if (!seen[c]) {
                    seen[c] = true;
                    out.push_back(c);
                }
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

// Pairs +-(u,v) of exact additive order n.
struct TorsionSpace {
    std::int64_t n;
    explicit TorsionSpace(std::int64_t n) : n(n) {}

    Pair canon(const Pair& p) const {
        Pair q{(n - p.first % n) % n, (n - p.second % n) % n};
        return std::min(p, q);
    }

    std::vector<Pair> points() const {
        std::vector<Pair> out;
        for (std::int64_t u = 0; u < n; ++u)
            for (std::int64_t v = 0; v < n; ++v)
                if (gcd64(gcd64(u, v), n) == 1 && canon({u, v}) == Pair{u, v})
                    out.push_back({u, v});
        if (n == 1) out = {{0, 0}};
        return out;
    }
};

// Elements of PSL(2, Z/n) as canonical +-(a,b,c,d) with ad-bc = 1.
struct PslSpace {
    std::int64_t n;
    explicit PslSpace(std::int64_t n) : n(n) {}

    Quad canon(const Quad& m) const {
        Quad neg{(n - m[0] % n) % n, (n - m[1] % n) % n, (n - m[2] % n) % n,
                 (n - m[3] % n) % n};
        return std::min(m, neg);
    }

    Quad mul(const Quad& x, const Quad& y) const {
        return canon(Quad{(x[0] * y[0] + x[1] * y[2]) % n, (x[0] * y[1] + x[1] * y[3]) % n,
                          (x[2] * y[0] + x[3] * y[2]) % n, (x[2] * y[1] + x[3] * y[3]) % n});
    }

    std::vector<Quad> points() const {
        std::vector<Quad> out;
        for (std::int64_t a = 0; a < n; ++a)
            for (std::int64_t b = 0; b < n; ++b)
                for (std::int64_t c = 0; c < n; ++c)
                    for (std::int64_t d = 0; d < n; ++d) {
                        if (((a * d - b * c) % n + n) % n != 1 % n) continue;
                        Quad m{a, b, c, d};
                        if (canon(m) == m) out.push_back(m);
                    }
        if (n == 1) out = {{0, 0, 0, 0}};
        return out;
    }
};

template <typename Point, typename Step>
std::vector<int> action_table(const std::vector<Point>& pts, Step step) {
    std::map<Point, int> index;
    for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i]] = static_cast<int>(i);
    std::vector<int> out(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) out[i] = index.at(step(pts[i]));
    return out;
}

} // namespace

PermPair coset_action(const CongruenceSpec& spec) {
    const std::int64_t n = spec.level;
    if (n < 1) throw std::invalid_argument("level must be >= 1");
    if (n == 1) return PermPair{{0}, {0}};

    switch (spec.family) {
        case Family::Gamma0: {
            P1Space space(n);
            auto pts = space.points();
            return PermPair{
                action_table(pts, [&](const Pair& p) { return space.canon(row_s(p, n)); }),
                action_table(pts, [&](const Pair& p) { return space.canon(row_l(p, n)); })};
        }
        case Family::Gamma1: {
            TorsionSpace space(n);
            auto pts = space.points();
            return PermPair{
                action_table(pts, [&](const Pair& p) { return space.canon(row_s(p, n)); }),
                action_table(pts, [&](const Pair& p) { return space.canon(row_l(p, n)); })};
        }
        case Family::GammaFull: {
            PslSpace space(n);
            auto pts = space.points();
            const Quad s{0, (n - 1) % n, 1 % n, 0};
            const Quad l{1 % n, (n - 1) % n, 1 % n, 0};
            return PermPair{
                action_table(pts, [&](const Quad& m) { return space.mul(m, s); }),
                action_table(pts, [&](const Quad& m) { return space.mul(m, l); })};
        }
    }
    throw std::invalid_argument("unknown family");
}

RibbonGraph congruence_graph(const CongruenceSpec& spec) {
    PermPair p = coset_action(spec);
    return from_permutation_pair(p.sigma_s, p.sigma_l);
}

std::int64_t gamma0_index(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("level must be >= 1");
    std::int64_t result = n;
    std::int64_t m = n;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        result = result / p * (p + 1);
        while (m % p == 0) m /= p;
    }
    if (m > 1) result = result / m * (m + 1);
    return result;
}

} // namespace farey

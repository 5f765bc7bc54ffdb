#include "farey/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace farey {

bool is_permutation(const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    std::vector<char> seen(n, 0);
    for (int v : p) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

std::vector<int> perm_mul(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
    return out;
}

std::vector<int> perm_inverse(const std::vector<int>& p) {
    std::vector<int> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<int>(i);
    return out;
}

int perm_order_divides(const std::vector<int>& p, int k) {
    const int n = static_cast<int>(p.size());
    for (int i = 0; i < n; ++i) {
        int x = i;
        for (int j = 0; j < k; ++j) x = p[x];
        if (x != i) return 0;
    }
    return 1;
}

bool acts_transitively(const std::vector<int>& a, const std::vector<int>& b) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : {a[x], b[x]}) {
            if (!seen[y]) {
                seen[y] = 1;
                ++count;
                stack.push_back(y);
            }
        }
    }
    return count == n;
}

namespace {

// Deterministic Schreier-Sims stabilizer chain.  Level k holds generators of
// the pointwise stabilizer of the bases above it; close(k) recomputes the
// orbit of base_k and pushes non-trivial Schreier residues one level down.
struct Chain {
    struct Level {
        int base = -1;
        std::vector<std::vector<int>> gens;
        std::vector<int> orbit;
        std::vector<std::vector<int>> transversal; // maps base -> orbit point
        std::vector<int> where;                    // point -> orbit index or -1
    };

    int n;
    std::vector<Level> levels;

    explicit Chain(int n) : n(n) {}

    bool is_identity(const std::vector<int>& g) const {
        for (int i = 0; i < n; ++i)
            if (g[i] != i) return false;
        return true;
    }

    // Residue of g after dividing out transversal elements from `from` down.
    std::vector<int> sift(std::vector<int> g, std::size_t from) const {
        for (std::size_t i = from; i < levels.size(); ++i) {
            const Level& lv = levels[i];
            int img = g[lv.base];
            if (lv.where[img] < 0) return g;
            g = perm_mul(perm_inverse(lv.transversal[lv.where[img]]), g);
        }
        return g;
    }

    void insert(std::vector<int> g, std::size_t level) {
        if (level == levels.size()) {
            Level lv;
            lv.base = 0;
            while (g[lv.base] == lv.base) ++lv.base;
            levels.push_back(std::move(lv));
        }
        levels[level].gens.push_back(std::move(g));
        close(level);
    }

    // levels may reallocate during the recursion, so levels[k] is re-indexed
    // at every access.
    void close(std::size_t k) {
        levels[k].orbit = {levels[k].base};
        levels[k].where.assign(n, -1);
        levels[k].where[levels[k].base] = 0;
        std::vector<int> id(n);
        std::iota(id.begin(), id.end(), 0);
        levels[k].transversal = {id};
        std::size_t head = 0;
        while (head < levels[k].orbit.size()) {
            const int pt = levels[k].orbit[head];
            const std::vector<int> rep = levels[k].transversal[head];
            ++head;
            for (std::size_t gi = 0; gi < levels[k].gens.size(); ++gi) {
                const std::vector<int> gen = levels[k].gens[gi];
                const int img = gen[pt];
                std::vector<int> moved = perm_mul(gen, rep);
                if (levels[k].where[img] < 0) {
                    levels[k].where[img] = static_cast<int>(levels[k].orbit.size());
                    levels[k].orbit.push_back(img);
                    levels[k].transversal.push_back(std::move(moved));
                } else {
                    std::vector<int> schreier =
                        perm_mul(perm_inverse(levels[k].transversal[levels[k].where[img]]), moved);
                    std::vector<int> res = sift(std::move(schreier), k + 1);
                    if (!is_identity(res)) insert(std::move(res), k + 1);
                }
            }
        }
    }

    void add(const std::vector<int>& g) {
        if (is_identity(g)) return;
        if (is_identity(sift(g, 0))) return;
        insert(g, 0);
    }
};

} // namespace

Int group_order(const std::vector<std::vector<int>>& gens) {
    if (gens.empty()) return 1;
    Chain chain(static_cast<int>(gens[0].size()));
    for (const auto& g : gens) chain.add(g);
    Int order = 1;
    for (const auto& lv : chain.levels) order *= Int(lv.orbit.size());
    return order;
}

} // namespace farey

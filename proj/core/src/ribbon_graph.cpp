#include "farey/ribbon_graph.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "farey/errors.hpp"
#include "farey/permutation.hpp"

namespace farey {

bool RibbonGraph::has_stubs() const {
    for (int d = 0; d < darts(); ++d)
        if (alpha[d] == d) return true;
    return false;
}

int RibbonGraph::edge_count() const {
    int real = 0;
    for (int d = 0; d < darts(); ++d)
        if (alpha[d] != d) ++real;
    return real / 2;
}

std::vector<int> RibbonGraph::stubs() const {
    std::vector<int> out;
    for (int d = 0; d < darts(); ++d)
        if (alpha[d] == d) out.push_back(d);
    return out;
}

namespace {

std::vector<std::vector<int>> cycles_of(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> out;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        int x = i;
        while (!seen[x]) {
            seen[x] = 1;
            cyc.push_back(x);
            x = perm[x];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

} // namespace

void validate(const RibbonGraph& g) {
    const int n = g.darts();
    if (n == 0) throw InvalidGraph("graph has no darts");
    if (static_cast<int>(g.alpha.size()) != n || static_cast<int>(g.vtype.size()) != n)
        throw InvalidGraph("field lengths disagree");
    if (!is_permutation(g.sigma)) throw InvalidGraph("sigma is not a permutation");
    if (!is_permutation(g.alpha)) throw InvalidGraph("alpha is not a permutation");
    for (int d = 0; d < n; ++d) {
        if (g.alpha[g.alpha[d]] != d) throw InvalidGraph("alpha is not an involution");
        if (g.alpha[d] != d && g.vtype[g.alpha[d]] == g.vtype[d])
            throw InvalidGraph("edge endpoints have equal types");
    }
    for (const auto& cyc : cycles_of(g.sigma)) {
        VertexType t = g.vtype[cyc[0]];
        for (int d : cyc)
            if (g.vtype[d] != t) throw InvalidGraph("vertex with mixed dart types");
        std::size_t len = cyc.size();
        if (t == VertexType::Circ && len != 1 && len != 2)
            throw InvalidGraph("circ vertex degree not 1 or 2");
        if (t == VertexType::Bullet && len != 1 && len != 3)
            throw InvalidGraph("bullet vertex degree not 1 or 3");
    }
    if (g.base && (*g.base < 0 || *g.base >= n || g.is_stub(*g.base)))
        throw InvalidGraph("base dart out of range or a stub");
    // Connectivity under sigma and alpha.
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int d = stack.back();
        stack.pop_back();
        for (int e : {g.sigma[d], g.alpha[d]}) {
            if (!seen[e]) {
                seen[e] = 1;
                ++count;
                stack.push_back(e);
            }
        }
    }
    if (count != n) throw InvalidGraph("graph is disconnected");
}

RibbonGraph from_permutation_pair(const std::vector<int>& sigma_s,
                                  const std::vector<int>& sigma_l) {
    const int d = static_cast<int>(sigma_s.size());
    if (d == 0 || static_cast<int>(sigma_l.size()) != d)
        throw NotAnAction("permutation degrees disagree or are zero");
    if (!is_permutation(sigma_s) || !is_permutation(sigma_l))
        throw NotAnAction("inputs are not permutations");
    if (!perm_order_divides(sigma_s, 2)) throw NotAnAction("sigma_s^2 != id");
    if (!perm_order_divides(sigma_l, 3)) throw NotAnAction("sigma_l^3 != id");
    if (!acts_transitively(sigma_s, sigma_l)) throw NotTransitive("action is not transitive");

    RibbonGraph g;
    g.sigma.resize(2 * d);
    g.alpha.resize(2 * d);
    g.vtype.resize(2 * d);
    for (int i = 0; i < d; ++i) {
        g.sigma[2 * i] = 2 * sigma_s[i];
        g.sigma[2 * i + 1] = 2 * sigma_l[i] + 1;
        g.alpha[2 * i] = 2 * i + 1;
        g.alpha[2 * i + 1] = 2 * i;
        g.vtype[2 * i] = VertexType::Circ;
        g.vtype[2 * i + 1] = VertexType::Bullet;
    }
    g.base = 0;
    return g;
}

PermPair edge_permutations(const RibbonGraph& g) {
    if (g.has_stubs()) throw HasStubs("graph has stubs");
    const int e = g.edge_count();
    PermPair out;
    out.sigma_s.resize(e);
    out.sigma_l.resize(e);
    for (int i = 0; i < e; ++i) {
        out.sigma_s[i] = g.sigma[2 * i] / 2;
        out.sigma_l[i] = g.sigma[2 * i + 1] / 2;
    }
    return out;
}

std::vector<std::vector<int>> faces(const RibbonGraph& g) {
    if (g.has_stubs()) throw HasStubs("faces are undefined on graphs with stubs");
    std::vector<int> phi(g.darts());
    for (int d = 0; d < g.darts(); ++d) phi[d] = g.sigma[g.alpha[d]];
    return cycles_of(phi);
}

Passport passport(const RibbonGraph& g) {
    if (g.has_stubs()) throw HasStubs("passport is undefined on graphs with stubs");
    Passport out;
    out.edges = g.edge_count();
    for (const auto& cyc : cycles_of(g.sigma)) {
        if (g.vtype[cyc[0]] == VertexType::Circ)
            out.circ_degrees.push_back(static_cast<int>(cyc.size()));
        else
            out.bullet_degrees.push_back(static_cast<int>(cyc.size()));
    }
    std::sort(out.circ_degrees.begin(), out.circ_degrees.end());
    std::sort(out.bullet_degrees.begin(), out.bullet_degrees.end());
    for (const auto& f : faces(g)) {
        int len = 0;
        for (int d : f)
            if (g.vtype[d] == VertexType::Bullet) ++len;
        out.face_degrees.push_back(len);
    }
    std::sort(out.face_degrees.begin(), out.face_degrees.end());
    out.punctures = static_cast<int>(out.face_degrees.size());
    int vertices = static_cast<int>(out.circ_degrees.size() + out.bullet_degrees.size());
    int chi = vertices - out.edges + out.punctures;
    if ((2 - chi) % 2 != 0) throw InvalidGraph("odd euler characteristic");
    out.genus = (2 - chi) / 2;
    PermPair perms = edge_permutations(g);
    out.monodromy_order = group_order({perms.sigma_s, perms.sigma_l});
    return out;
}

// ---------------------------------------------------------------------------
// Folding.
//
// Provisional edges are union-find elements carrying two attachments: an
// S-state for the circ side (no neighbour yet / folded onto itself /
// partnered with another edge) and a (vertex, slot) position for the bullet
// side, where slot+1 is one counterclockwise turn (letter L).  Identifying
// two edges cascades: partners merge, double occupancy of a bullet vertex
// closes it onto a single edge.

namespace {

struct Folder {
    enum SKind : std::uint8_t { SNone, SSelf, SPartner };
    struct SInfo {
        SKind kind = SNone;
        int partner = -1;
    };
    struct BVert {
        bool closed = false;
        bool dead = false;
        std::array<int, 3> slot{-1, -1, -1};
    };

    std::vector<int> parent;
    std::vector<SInfo> sinfo;
    std::vector<int> bvert, bslot;
    std::vector<BVert> verts;
    std::deque<std::pair<int, int>> queue;

    int find(int e) {
        while (parent[e] != e) {
            parent[e] = parent[parent[e]];
            e = parent[e];
        }
        return e;
    }

    // New edge; bullet side on a fresh vertex at slot 0 unless placed.
    int new_edge(int vert = -1, int slot = 0) {
        int e = static_cast<int>(parent.size());
        parent.push_back(e);
        sinfo.push_back(SInfo{});
        if (vert < 0) {
            vert = static_cast<int>(verts.size());
            verts.push_back(BVert{});
            slot = 0;
        }
        verts[vert].slot[slot] = e;
        bvert.push_back(vert);
        bslot.push_back(slot);
        return e;
    }

    void close_vertex(int v, int into) {
        BVert& w = verts[v];
        if (w.closed) return;
        w.closed = true;
        for (int k = 0; k < 3; ++k) {
            if (w.slot[k] >= 0) queue.emplace_back(w.slot[k], into);
            w.slot[k] = -1;
        }
        w.slot[0] = into;
    }

    void merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        int r = std::min(a, b), c = std::max(a, b);
        SInfo sa = sinfo[r], sc = sinfo[c];
        int vr = bvert[r], vc = bvert[c];
        int pr = bslot[r], pc = bslot[c];
        parent[c] = r;

        // Circ side.
        SInfo merged;
        if (sa.kind == SSelf || sc.kind == SSelf) {
            merged.kind = SSelf;
            for (const SInfo& s : {sa, sc})
                if (s.kind == SPartner) queue.emplace_back(s.partner, r);
        } else if (sa.kind == SPartner && sc.kind == SPartner) {
            merged = sa;
            if (find(sa.partner) != find(sc.partner))
                queue.emplace_back(sa.partner, sc.partner);
        } else if (sa.kind == SPartner || sc.kind == SPartner) {
            merged = sa.kind == SPartner ? sa : sc;
        }
        if (merged.kind == SPartner && find(merged.partner) == r) merged.kind = SSelf;
        sinfo[r] = merged;

        // Bullet side.
        if (vr == vc) {
            if (verts[vr].closed) {
                // nothing to reconcile
            } else if (pr != pc) {
                // The merged edge occupies two distinct slots: the vertex
                // folds closed and every edge on it coincides.
                close_vertex(vr, r);
                bslot[r] = 0;
            }
            bvert[r] = vr;
            return;
        }
        if (verts[vc].closed && !verts[vr].closed) {
            std::swap(vr, vc);
            std::swap(pr, pc);
        }
        if (verts[vr].closed) {
            verts[vc].dead = true;
            for (int k = 0; k < 3; ++k) {
                if (verts[vc].slot[k] >= 0) queue.emplace_back(verts[vc].slot[k], r);
                verts[vc].slot[k] = -1;
            }
            bvert[r] = vr;
            bslot[r] = 0;
            return;
        }
        // Both open: transplant vc's occupants into vr, aligned so that the
        // merged edge keeps a single position.
        int off = ((pr - pc) % 3 + 3) % 3;
        verts[vc].dead = true;
        for (int k = 0; k < 3; ++k) {
            int e = verts[vc].slot[k];
            verts[vc].slot[k] = -1;
            if (e < 0) continue;
            int j = (k + off) % 3;
            int occupant = verts[vr].slot[j];
            if (occupant < 0) {
                verts[vr].slot[j] = e;
                int re = find(e);
                bvert[re] = vr;
                bslot[re] = j;
            } else if (find(occupant) != find(e)) {
                queue.emplace_back(occupant, e);
            }
        }
        bvert[r] = vr;
        bslot[r] = pr;
    }

    void settle() {
        while (!queue.empty()) {
            auto [a, b] = queue.front();
            queue.pop_front();
            merge(a, b);
        }
    }

    // One letter of a loop trace from edge `cur`, creating edges as needed.
    int step(int cur, Letter x) {
        cur = find(cur);
        if (x == Letter::S) {
            const SInfo s = sinfo[cur]; // copy: new_edge may reallocate
            switch (s.kind) {
                case SNone: {
                    int n = new_edge();
                    sinfo[cur] = SInfo{SPartner, n};
                    sinfo[n] = SInfo{SPartner, cur};
                    return n;
                }
                case SSelf:
                    return cur;
                case SPartner:
                    return find(s.partner);
            }
        }
        int v = bvert[cur];
        if (verts[v].closed) return cur;
        int j = (bslot[cur] + (x == Letter::L ? 1 : 2)) % 3;
        int occ = verts[v].slot[j];
        if (occ >= 0) return find(occ);
        return new_edge(v, j);
    }

    RibbonGraph compact();
};

RibbonGraph Folder::compact() {
    // Root edges in creation order.
    std::vector<int> roots;
    std::vector<int> index(parent.size(), -1);
    for (int e = 0; e < static_cast<int>(parent.size()); ++e) {
        if (find(e) == e) {
            index[e] = static_cast<int>(roots.size());
            roots.push_back(e);
        }
    }
    const int ecount = static_cast<int>(roots.size());

    // Rebuild vertex slot tables from the root edges (canonical data).
    struct VSlot {
        std::array<int, 3> slot{-1, -1, -1};
    };
    std::map<int, VSlot> open; // alive open vertices, keyed by id
    for (int e : roots) {
        int v = bvert[e];
        if (verts[v].closed) continue;
        auto& vs = open[v];
        if (vs.slot[bslot[e]] >= 0) throw std::logic_error("fold: slot double occupancy");
        vs.slot[bslot[e]] = e;
    }

    RibbonGraph g;
    auto grow = [&](VertexType t) {
        g.sigma.push_back(-1);
        g.alpha.push_back(-1);
        g.vtype.push_back(t);
        return static_cast<int>(g.sigma.size()) - 1;
    };
    for (int k = 0; k < ecount; ++k) {
        grow(VertexType::Circ);   // dart 2k
        grow(VertexType::Bullet); // dart 2k+1
    }
    for (int k = 0; k < ecount; ++k) {
        g.alpha[2 * k] = 2 * k + 1;
        g.alpha[2 * k + 1] = 2 * k;
    }

    // Circ sides.
    for (int k = 0; k < ecount; ++k) {
        const SInfo s = sinfo[roots[k]];
        switch (s.kind) {
            case SSelf:
                g.sigma[2 * k] = 2 * k;
                break;
            case SPartner: {
                int j = index[find(s.partner)];
                g.sigma[2 * k] = 2 * j; // symmetric, set from both sides
                break;
            }
            case SNone: {
                int stub = grow(VertexType::Circ);
                g.alpha[stub] = stub;
                g.sigma[2 * k] = stub;
                g.sigma[stub] = 2 * k;
                break;
            }
        }
    }

    // Bullet sides: closed vertices are sigma-fixed darts; open vertices get
    // a 3-cycle over slot order, empty slots becoming stubs.
    std::set<int> done;
    for (int k = 0; k < ecount; ++k) {
        int v = bvert[roots[k]];
        if (verts[v].closed) {
            g.sigma[2 * k + 1] = 2 * k + 1;
            continue;
        }
        if (done.count(v)) continue;
        done.insert(v);
        const auto& vs = open.at(v);
        std::array<int, 3> dart{};
        for (int j = 0; j < 3; ++j) {
            if (vs.slot[j] >= 0) {
                dart[j] = 2 * index[vs.slot[j]] + 1;
            } else {
                int stub = grow(VertexType::Bullet);
                g.alpha[stub] = stub;
                dart[j] = stub;
            }
        }
        for (int j = 0; j < 3; ++j) g.sigma[dart[j]] = dart[(j + 1) % 3];
    }

    g.base = 2 * index[find(0)];
    return g;
}

} // namespace

RibbonGraph fold_subgroup_graph(std::span<const Word> gens) {
    Folder fold;
    fold.new_edge(); // base edge 0
    for (const Word& w : gens) {
        int cur = fold.find(0);
        for (Letter x : w.letters) cur = fold.step(cur, x);
        fold.queue.emplace_back(cur, 0);
        fold.settle();
    }
    return fold.compact();
}

namespace {

void expand_circ(Folder& f, int edge, int radius);

void expand_bullet(Folder& f, int edge, int radius) {
    if (radius <= 0) return;
    int v = f.bvert[edge];
    int e1 = f.new_edge(v, 1);
    int e2 = f.new_edge(v, 2);
    expand_circ(f, e1, radius - 1);
    expand_circ(f, e2, radius - 1);
}

void expand_circ(Folder& f, int edge, int radius) {
    if (radius <= 0) return;
    int n = f.new_edge();
    f.sinfo[edge] = Folder::SInfo{Folder::SPartner, n};
    f.sinfo[n] = Folder::SInfo{Folder::SPartner, edge};
    expand_bullet(f, n, radius - 1);
}

} // namespace

RibbonGraph farey_ball(int radius) {
    if (radius < 0) throw std::invalid_argument("radius must be non-negative");
    Folder f;
    f.new_edge();
    expand_bullet(f, 0, radius);
    return f.compact();
}

namespace {

int edge_of(const RibbonGraph& g, int dart) { return dart / 2; }

} // namespace

Word loop_to_word(const RibbonGraph& g, std::span<const int> walk) {
    if (!g.base) throw NotClosed("graph has no base edge");
    const int base_edge = edge_of(g, *g.base);
    if (walk.empty()) return Word{};
    for (int d : walk) {
        if (d < 0 || d >= g.darts()) throw NotAdjacent("dart out of range");
        if (g.is_stub(d)) throw NotAdjacent("walk crosses a stub");
    }
    if (edge_of(g, walk[0]) != base_edge) throw NotClosed("walk does not start on the base edge");

    std::vector<Letter> letters;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        const int d = walk[i];
        // The exit dart u lies on the vertex of d; the next crossing happens
        // at the far end of its edge, so alpha(u) must be the next entry.
        int wanted = -1; // alpha(u)
        if (i + 1 < walk.size()) wanted = walk[i + 1];
        int u = -1;
        int x = d;
        do {
            if (!g.is_stub(x)) {
                if (wanted >= 0 ? g.alpha[x] == wanted
                                : edge_of(g, g.alpha[x]) == base_edge) {
                    u = x;
                    break;
                }
            }
            x = g.sigma[x];
        } while (x != d);
        if (u < 0) throw NotAdjacent("walk steps between non-adjacent edges");
        if (u == d && g.sigma[d] != d) throw NotAdjacent("walk makes a u-turn");

        if (g.vtype[d] == VertexType::Circ) {
            letters.push_back(Letter::S);
        } else if (g.sigma[d] == d) {
            letters.push_back(Letter::L); // bounce at a closed bullet vertex
        } else if (u == g.sigma[d]) {
            letters.push_back(Letter::L);
        } else {
            letters.push_back(Letter::LL);
        }
    }
    return normalize(letters);
}

namespace {

// Coset moves on a compacted graph: -1 = leaves the core (stub), -2 = stays
// (closed vertex).
int move_s(const RibbonGraph& g, int e) {
    int d = 2 * e;
    int u = g.sigma[d];
    if (u == d) return -2;
    if (g.is_stub(u)) return -1;
    return u / 2;
}

int move_l(const RibbonGraph& g, int e, bool twice) {
    int d = 2 * e + 1;
    if (g.sigma[d] == d) return -2;
    int u = twice ? g.sigma[g.sigma[d]] : g.sigma[d];
    if (g.is_stub(u)) return -1;
    return u / 2;
}

} // namespace

bool graph_traces(const RibbonGraph& g, const Word& w) {
    if (!g.base) throw NotClosed("graph has no base edge");
    int cur = edge_of(g, *g.base);
    for (Letter x : w.letters) {
        int next = x == Letter::S ? move_s(g, cur) : move_l(g, cur, x == Letter::LL);
        if (next == -1) return false;
        if (next >= 0) cur = next;
    }
    return cur == edge_of(g, *g.base);
}

std::vector<Word> extract_generators(const RibbonGraph& g) {
    if (!g.base) throw NotClosed("graph has no base edge");
    const int base = edge_of(g, *g.base);
    const int ecount = g.edge_count();

    // Spanning tree of the coset graph: a word per edge.
    std::vector<Word> to(ecount);
    std::vector<char> seen(ecount, 0);
    std::deque<int> bfs{base};
    seen[base] = 1;
    struct Move {
        Letter letter;
        int target; // -1 stub, -2 stay
    };
    auto moves = [&](int e) {
        return std::array<Move, 3>{Move{Letter::S, move_s(g, e)},
                                   Move{Letter::L, move_l(g, e, false)},
                                   Move{Letter::LL, move_l(g, e, true)}};
    };
    while (!bfs.empty()) {
        int e = bfs.front();
        bfs.pop_front();
        for (const Move& m : moves(e)) {
            if (m.target < 0 || seen[m.target]) continue;
            seen[m.target] = 1;
            to[m.target] = concat(to[e], Word{{m.letter}});
            bfs.push_back(m.target);
        }
    }

    // Schreier generators: one per move, plus one per orbifold bounce.
    std::set<Word> out;
    auto add = [&](const Word& w) {
        if (w.identity()) return;
        Word i = invert(w);
        out.insert(std::min(w, i));
    };
    for (int e = 0; e < ecount; ++e) {
        for (const Move& m : moves(e)) {
            if (m.target == -1) continue;
            if (m.target == -2) {
                // Bounce at a closed vertex: w_e letter w_e^-1.
                add(conjugated(to[e], Word{{m.letter == Letter::S ? Letter::S : Letter::L}}));
            } else {
                add(concat(concat(to[e], Word{{m.letter}}), invert(to[m.target])));
            }
        }
    }
    return {out.begin(), out.end()};
}

namespace {

std::vector<int> bfs_labels(const RibbonGraph& g, int start) {
    const int n = g.darts();
    std::vector<int> label(n, -1);
    std::deque<int> q{start};
    label[start] = 0;
    int next = 1;
    while (!q.empty()) {
        int d = q.front();
        q.pop_front();
        for (int e : {g.sigma[d], g.alpha[d]}) {
            if (label[e] < 0) {
                label[e] = next++;
                q.push_back(e);
            }
        }
    }
    return label;
}

std::vector<int> signature_from(const RibbonGraph& g, int start) {
    std::vector<int> label = bfs_labels(g, start);
    const int n = g.darts();
    std::vector<int> order(n, -1);
    for (int d = 0; d < n; ++d) order[label[d]] = d;
    std::vector<int> sig;
    sig.reserve(3 * n);
    for (int i = 0; i < n; ++i) {
        int d = order[i];
        sig.push_back(label[g.sigma[d]]);
        sig.push_back(label[g.alpha[d]]);
        sig.push_back(g.vtype[d] == VertexType::Circ ? 0 : 1);
    }
    return sig;
}

} // namespace

std::vector<int> canonical_form(const RibbonGraph& g) {
    std::vector<int> best;
    for (int d = 0; d < g.darts(); ++d) {
        std::vector<int> sig = signature_from(g, d);
        if (best.empty() || sig < best) best = std::move(sig);
    }
    return best;
}

std::vector<int> based_form(const RibbonGraph& g) {
    if (!g.base) throw NotClosed("graph has no base edge");
    return signature_from(g, *g.base);
}

} // namespace farey

#include "farey/quadform.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "farey/errors.hpp"

namespace farey {

Int discriminant(const QuadForm& f) { return f.b * f.b - 4 * f.a * f.c; }

bool is_primitive(const QuadForm& f) { return gcd3(f.a, f.b, f.c) == 1; }

Int eval(const QuadForm& f, const Int& x, const Int& y) {
    return f.a * x * x + f.b * x * y + f.c * y * y;
}

QuadForm act(const Mat& m, const QuadForm& f) {
    Int a2 = f.a * m.p * m.p + f.b * m.p * m.r + f.c * m.r * m.r;
    Int b2 = 2 * f.a * m.p * m.q + f.b * (m.p * m.s + m.q * m.r) + 2 * f.c * m.r * m.s;
    Int c2 = f.a * m.q * m.q + f.b * m.q * m.s + f.c * m.s * m.s;
    return QuadForm{a2, b2, c2};
}

namespace {

void require_indefinite(const Int& disc) {
    if (disc <= 0) throw BadDiscriminant("discriminant must be positive");
    if (is_square(disc)) throw SquareDiscriminant("discriminant is a perfect square");
}

void require_form_disc(const Int& disc) {
    Int m = emod(disc, 4);
    if (m != 0 && m != 1) throw BadDiscriminant("discriminant must be 0 or 1 mod 4");
    require_indefinite(disc);
}

// b' = -b mod 2|c|, in the window (sqrt(disc) - 2|c|, sqrt(disc)) when
// c^2 < disc, with minimal absolute value otherwise.  Exposes the matrix
// column parameter t of the step (0,-1;1,t).
QuadForm rho_step(const QuadForm& f, const Int& disc, const Int& sq, Int* t_out) {
    const Int m = 2 * abs(f.c);
    Int b2;
    if (f.c * f.c > disc) {
        b2 = emod(-f.b, m); // into [0, m)
        if (2 * b2 > m) b2 -= m;
    } else {
        b2 = sq - emod(sq + f.b, m);
    }
    Int t = (b2 + f.b) / (2 * f.c);
    if (t_out) *t_out = t;
    Int c2 = (b2 * b2 - disc) / (4 * f.c);
    return QuadForm{f.c, b2, c2};
}

} // namespace

bool is_reduced(const QuadForm& f) {
    Int disc = discriminant(f);
    if (disc <= 0 || is_square(disc)) return false;
    if (f.b <= 0) return false;
    if (f.b * f.b >= disc) return false;
    Int a2 = 2 * abs(f.a);
    // sqrt(disc) - b < 2|a|  <=>  disc < (2|a| + b)^2
    if (disc >= (a2 + f.b) * (a2 + f.b)) return false;
    // 2|a| < sqrt(disc) + b  <=>  2|a| - b < sqrt(disc)
    Int d = a2 - f.b;
    if (d >= 0 && d * d >= disc) return false;
    return true;
}

QuadForm rho(const QuadForm& f) {
    Int disc = discriminant(f);
    require_indefinite(disc);
    return rho_step(f, disc, isqrt(disc), nullptr);
}

Reduction reduce(const QuadForm& f) {
    Int disc = discriminant(f);
    require_indefinite(disc);
    if (!is_primitive(f)) throw NotPrimitive("form is not primitive");
    const Int sq = isqrt(disc);

    Reduction out{f, mat_identity(), 0};
    // Generous bound: reduction halves |c| while c^2 > disc.
    const auto bits = std::max({msb(abs(f.a) + 1), msb(abs(f.b) + 1), msb(abs(f.c) + 1)});
    const int max_steps = 64 + 4 * static_cast<int>(bits);
    while (!is_reduced(out.form)) {
        Int t;
        out.form = rho_step(out.form, disc, sq, &t);
        out.m = out.m * Mat{0, -1, 1, t};
        ++out.steps;
        if (out.steps > max_steps)
            throw std::logic_error("reduction failed to terminate");
    }
    return out;
}

namespace {

// Rotate a cycle so it starts at its least member.
void canonical_rotation(std::vector<QuadForm>& cyc) {
    auto least = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), least, cyc.end());
}

} // namespace

FormClass cycle(const QuadForm& f) {
    Reduction red = reduce(f);
    Int disc = discriminant(f);
    const Int sq = isqrt(disc);
    FormClass out;
    out.discriminant = disc;
    QuadForm g = red.form;
    do {
        out.cycle.push_back(g);
        g = rho_step(g, disc, sq, nullptr);
    } while (g != red.form);
    canonical_rotation(out.cycle);
    return out;
}

bool equivalent(const QuadForm& f1, const QuadForm& f2) {
    if (discriminant(f1) != discriminant(f2))
        throw DiscriminantMismatch("forms have different discriminants");
    FormClass c1 = cycle(f1);
    QuadForm r2 = reduce(f2).form;
    return std::find(c1.cycle.begin(), c1.cycle.end(), r2) != c1.cycle.end();
}

namespace {

// All primitive reduced forms of the discriminant with b in [b_lo, b_hi];
// duplicates removed by the final sort.
std::vector<QuadForm> reduced_forms_in_range(const Int& disc, const Int& b_lo,
                                             const Int& b_hi) {
    std::vector<QuadForm> out;
    auto consider = [&](const QuadForm& f) {
        if (is_reduced(f) && is_primitive(f)) out.push_back(f);
    };
    Int start = b_lo;
    if (emod(start, 2) != emod(disc, 2)) ++start;
    for (Int b = start; b <= b_hi; b += 2) {
        Int n4 = disc - b * b; // = -4ac > 0
        if (n4 <= 0) continue;
        Int n = n4 / 4;
        // a runs over the divisors of n with both signs; c = -n/a.
        for (Int d = 1; d * d <= n; ++d) {
            if (n % d != 0) continue;
            Int e = n / d;
            consider(QuadForm{d, b, -e});
            consider(QuadForm{-d, b, e});
            consider(QuadForm{e, b, -d});
            consider(QuadForm{-e, b, d});
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

Int class_number(const Int& disc, int jobs) {
    require_form_disc(disc);
    const Int sq = isqrt(disc);

    std::vector<QuadForm> forms;
    if (jobs <= 1) {
        forms = reduced_forms_in_range(disc, 1, sq);
    } else {
        // Shard the b-range; shards are independent and merged by sorting.
        std::vector<std::vector<QuadForm>> parts(jobs);
        std::vector<std::thread> threads;
        Int span = sq / jobs + 1;
        for (int j = 0; j < jobs; ++j) {
            Int lo = 1 + span * j;
            Int hi = std::min(Int(span * (j + 1)), sq);
            threads.emplace_back([&parts, &disc, j, lo, hi] {
                parts[j] = reduced_forms_in_range(disc, lo, hi);
            });
        }
        for (auto& t : threads) t.join();
        for (auto& p : parts) forms.insert(forms.end(), p.begin(), p.end());
        std::sort(forms.begin(), forms.end());
        forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    }

    // Count rho-orbits.
    std::vector<char> seen(forms.size(), 0);
    auto index_of = [&](const QuadForm& f) {
        auto it = std::lower_bound(forms.begin(), forms.end(), f);
        return static_cast<std::size_t>(it - forms.begin());
    };
    Int classes = 0;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (seen[i]) continue;
        ++classes;
        QuadForm g = forms[i];
        do {
            seen[index_of(g)] = 1;
            g = rho_step(g, disc, sq, nullptr);
        } while (g != forms[i]);
    }
    return classes;
}

QuadForm principal_form(const Int& disc) {
    require_form_disc(disc);
    Int sigma = emod(disc, 2);
    return QuadForm{1, sigma, (sigma * sigma - disc) / 4};
}

namespace {

// A class representative with positive leading coefficient (the cycle
// alternates leading signs, so one rho step away at most).
QuadForm positive_leading(const QuadForm& f) {
    QuadForm g = reduce(f).form;
    if (g.a < 0) g = rho(g);
    return g;
}

} // namespace

QuadForm compose(const QuadForm& f1, const QuadForm& f2) {
    Int disc = discriminant(f1);
    if (disc != discriminant(f2))
        throw DiscriminantMismatch("forms have different discriminants");
    require_form_disc(disc);
    if (!is_primitive(f1) || !is_primitive(f2))
        throw NotPrimitive("composition needs primitive forms");

    QuadForm g1 = positive_leading(f1);
    QuadForm g2 = positive_leading(f2);

    // Dirichlet composition.
    Int s = (g1.b + g2.b) / 2;
    Xgcd e1 = xgcd(g1.a, g2.a);
    Xgcd e2 = xgcd(e1.g, s);
    const Int& d = e2.g;          // gcd(a1, a2, s)
    Int v = e1.y * e2.x;          // coefficient of a2 toward d
    const Int& w = e2.y;          // coefficient of s toward d
    Int a2d = g2.a / d;
    Int a3 = (g1.a / d) * a2d;
    Int t = ((s - g2.b) * v - w * g2.c) * a2d * 2;
    Int b3 = g2.b + t;
    Int num = b3 * b3 - disc;
    Int c3 = num / (4 * a3);
    if (c3 * 4 * a3 != num) throw std::logic_error("composition: inexact c");
    return reduce(QuadForm{a3, b3, c3}).form;
}

PellSolution pell_fundamental(const Int& disc) {
    if (disc <= 0) throw BadDiscriminant("discriminant must be positive");
    if (is_square(disc)) throw SquareDiscriminant("discriminant is a perfect square");

    Int m4 = emod(disc, 4);
    if (m4 == 2 || m4 == 3) {
        // t^2 - disc u^2 = 4 forces t, u even; scale the solution for 4*disc.
        PellSolution inner = pell_fundamental(4 * disc);
        return PellSolution{inner.t, 2 * inner.u};
    }

    // Transformation taking the principal cycle once around itself.
    QuadForm f0 = reduce(principal_form(disc)).form;
    const Int sq = isqrt(disc);
    Mat m = mat_identity();
    QuadForm g = f0;
    do {
        Int t;
        g = rho_step(g, disc, sq, &t);
        m = m * Mat{0, -1, 1, t};
    } while (g != f0);
    // m is the fundamental automorph ((t-bu)/2, -cu; au, (t+bu)/2) of f0 up
    // to sign and inversion; extract |t| and |u|.
    Int t = m.trace_abs();
    Int u = abs(m.r) / abs(f0.a);
    if (u * abs(f0.a) != abs(m.r) || t * t - disc * u * u != 4)
        throw std::logic_error("pell: cycle transformation is not an automorph");
    return PellSolution{t, u};
}

Int minimum(const QuadForm& f) {
    FormClass cyc = cycle(f);
    Int best = 0;
    for (const QuadForm& g : cyc.cycle)
        if (g.a > 0 && (best == 0 || g.a < best)) best = g.a;
    return best;
}

Representation represents(const QuadForm& f, const Int& n) {
    if (n == 0) throw ZeroTarget("target must be nonzero");
    Int disc = discriminant(f);
    require_indefinite(disc);
    if (!is_primitive(f)) throw NotPrimitive("form is not primitive");

    Reduction red = reduce(f);
    const Int sq = isqrt(disc);

    // The cycle of f with, for each member, a matrix mapping f onto it.
    std::vector<QuadForm> cyc;
    std::vector<Mat> maps;
    {
        QuadForm g = red.form;
        Mat m = red.m;
        do {
            cyc.push_back(g);
            maps.push_back(m);
            Int t;
            g = rho_step(g, disc, sq, &t);
            m = m * Mat{0, -1, 1, t};
        } while (g != red.form);
    }

    Int na = abs(n);
    for (Int d = 1; d * d <= na; ++d) {
        if (na % (d * d) != 0) continue;
        Int m0 = n / (d * d);
        Int mod = 4 * abs(m0);
        // Candidate forms (m0, beta, *) with beta^2 = disc mod 4|m0|.
        for (Int beta = 0; beta < 2 * abs(m0); ++beta) {
            if (emod(beta * beta - disc, mod) != 0) continue;
            QuadForm cand{m0, beta, (beta * beta - disc) / (4 * m0)};
            if (!is_primitive(cand)) continue;
            Reduction cred = reduce(cand);
            for (std::size_t k = 0; k < cyc.size(); ++k) {
                if (cyc[k] != cred.form) continue;
                // f o (maps[k] * cred.m^-1) = cand, so the first column
                // represents m0 primitively.
                Mat m = maps[k] * cred.m.inverse();
                Int x = d * m.p, y = d * m.r;
                if (eval(f, x, y) != n) throw std::logic_error("represents: bad witness");
                return Representation{true, x, y};
            }
        }
    }
    return Representation{false, 0, 0};
}

std::string to_string(const QuadForm& f) {
    std::ostringstream os;
    os << '(' << f.a << ',' << f.b << ',' << f.c << ')';
    return os.str();
}

QuadForm parse_form(const std::string& text) {
    std::string t;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '(' || c == ')') continue;
        t += c;
    }
    auto c1 = t.find(',');
    auto c2 = t.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("form needs three comma-separated integers");
    return QuadForm{Int(t.substr(0, c1)), Int(t.substr(c1 + 1, c2 - c1 - 1)),
                    Int(t.substr(c2 + 1))};
}

} // namespace farey

#include "farey/word.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "farey/errors.hpp"

namespace farey {

namespace {

bool is_lpow(Letter x) { return x != Letter::S; }

int lexp(Letter x) {
    switch (x) {
        case Letter::L: return 1;
        case Letter::LL: return 2;
        default: return 0;
    }
}

Letter lpow(int e) {
    assert(e == 1 || e == 2);
    return e == 1 ? Letter::L : Letter::LL;
}

void push_reduced(std::vector<Letter>& stack, Letter x) {
    if (x == Letter::S) {
        if (!stack.empty() && stack.back() == Letter::S)
            stack.pop_back();
        else
            stack.push_back(Letter::S);
        return;
    }
    if (!stack.empty() && is_lpow(stack.back())) {
        int e = (lexp(stack.back()) + lexp(x)) % 3;
        stack.pop_back();
        if (e != 0) stack.push_back(lpow(e));
        return;
    }
    stack.push_back(x);
}

} // namespace

Word normalize(const std::vector<Letter>& raw) {
    std::vector<Letter> stack;
    stack.reserve(raw.size());
    for (Letter x : raw) push_reduced(stack, x);
    return Word{std::move(stack)};
}

Word normalize(const std::vector<RawLetter>& raw) {
    std::vector<Letter> letters;
    letters.reserve(raw.size());
    for (RawLetter x : raw) {
        switch (x) {
            case RawLetter::S: letters.push_back(Letter::S); break;
            case RawLetter::L: letters.push_back(Letter::L); break;
            case RawLetter::Linv: letters.push_back(Letter::LL); break;
            case RawLetter::LL: letters.push_back(Letter::LL); break;
        }
    }
    return normalize(letters);
}

Word concat(const Word& a, const Word& b) {
    std::vector<Letter> stack = a.letters; // already reduced
    stack.reserve(a.size() + b.size());
    for (Letter x : b.letters) push_reduced(stack, x);
    return Word{std::move(stack)};
}

Word invert(const Word& w) {
    std::vector<Letter> letters;
    letters.reserve(w.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        switch (*it) {
            case Letter::S: letters.push_back(Letter::S); break;
            case Letter::L: letters.push_back(Letter::LL); break;
            case Letter::LL: letters.push_back(Letter::L); break;
        }
    }
    return Word{std::move(letters)}; // reversal preserves alternation
}

Word power(const Word& w, int k) {
    Word base = k < 0 ? invert(w) : w;
    int n = k < 0 ? -k : k;
    Word out;
    for (int i = 0; i < n; ++i) out = concat(out, base);
    return out;
}

Word conjugated(const Word& g, const Word& w) {
    return concat(concat(g, w), invert(g));
}

Word cyclic_normal_form(const Word& w) {
    std::vector<Letter> v = w.letters;
    // Cyclic reduction: fold matching ends into the same free factor.
    while (v.size() >= 2) {
        Letter f = v.front(), b = v.back();
        if (f == Letter::S && b == Letter::S) {
            v.erase(v.begin());
            v.pop_back();
        } else if (is_lpow(f) && is_lpow(b)) {
            int e = (lexp(b) + lexp(f)) % 3;
            v.erase(v.begin());
            v.pop_back();
            if (e != 0) v.insert(v.begin(), lpow(e));
        } else {
            break;
        }
    }
    if (v.size() <= 1) return Word{std::move(v)};

    // v is cyclically reduced, hence alternating of even length; compare the
    // rotations aligned to L-letters and keep the least (S < L < LL).
    const std::size_t n = v.size();
    auto rotation = [&](std::size_t r) {
        std::vector<Letter> out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = v[(r + i) % n];
        return out;
    };
    std::vector<Letter> best;
    for (std::size_t r = 0; r < n; ++r) {
        if (!is_lpow(v[r])) continue;
        std::vector<Letter> cand = rotation(r);
        if (best.empty() || cand < best) best = std::move(cand);
    }
    return Word{std::move(best)};
}

std::string to_string(const Word& w) {
    if (w.identity()) return "1";
    std::string out;
    for (Letter x : w.letters) {
        switch (x) {
            case Letter::S: out += 'S'; break;
            case Letter::L: out += 'L'; break;
            case Letter::LL: out += "LL"; break;
        }
    }
    return out;
}

Word parse_word(const std::string& text) {
    std::vector<Letter> letters;
    bool saw_one = false;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        char c = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        if (c == 'S') {
            letters.push_back(Letter::S);
        } else if (c == 'L') {
            letters.push_back(Letter::L);
        } else if (c == '1') {
            saw_one = true;
        } else {
            throw std::invalid_argument(std::string("bad word character '") + ch + "'");
        }
    }
    if (saw_one && !letters.empty())
        throw std::invalid_argument("'1' cannot be mixed with letters");
    return normalize(letters);
}

Mat Mat::inverse() const {
    return canonical(Mat{s, -q, -r, p});
}

Mat operator*(const Mat& a, const Mat& b) {
    return canonical(Mat{a.p * b.p + a.q * b.r, a.p * b.q + a.q * b.s,
                         a.r * b.p + a.s * b.r, a.r * b.q + a.s * b.s});
}

Mat mat_identity() { return Mat{1, 0, 0, 1}; }

Mat canonical(const Mat& m) {
    const Int* entries[4] = {&m.p, &m.q, &m.r, &m.s};
    for (const Int* e : entries) {
        if (*e == 0) continue;
        if (*e < 0) return Mat{-m.p, -m.q, -m.r, -m.s};
        break;
    }
    return m;
}

Mat trace_positive(const Mat& m) {
    Int t = m.p + m.s;
    if (t == 0) throw std::invalid_argument("trace_positive: trace is zero");
    if (t < 0) return Mat{-m.p, -m.q, -m.r, -m.s};
    return m;
}

Mat gen_s() { return Mat{0, -1, 1, 0}; }
Mat gen_l() { return Mat{1, -1, 1, 0}; }

std::string to_string(const Mat& m) {
    std::ostringstream os;
    os << m.p << ',' << m.q << ';' << m.r << ',' << m.s;
    return os.str();
}

Mat parse_mat(const std::string& text) {
    // "p,q;r,s"
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    auto semi = t.find(';');
    if (semi == std::string::npos) throw std::invalid_argument("matrix needs ';'");
    auto parse_pair = [](const std::string& s, Int& a, Int& b) {
        auto comma = s.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("matrix row needs ','");
        a = Int(s.substr(0, comma));
        b = Int(s.substr(comma + 1));
    };
    Mat m;
    parse_pair(t.substr(0, semi), m.p, m.q);
    parse_pair(t.substr(semi + 1), m.r, m.s);
    if (m.det() != 1) throw std::invalid_argument("matrix determinant must be 1");
    return canonical(m);
}

Mat word_to_matrix(const Word& w) {
    Mat acc = mat_identity();
    Mat l = gen_l();
    Mat ll = canonical(l * l);
    Mat s = gen_s();
    for (Letter x : w.letters) {
        switch (x) {
            case Letter::S: acc = acc * s; break;
            case Letter::L: acc = acc * l; break;
            case Letter::LL: acc = acc * ll; break;
        }
    }
    return canonical(acc);
}

namespace {

// Append T^n with T = LS (so T^-1 = S LL) to a raw letter sequence.
void append_translation(std::vector<Letter>& out, const Int& n) {
    if (n >= 0) {
        for (Int i = 0; i < n; ++i) {
            out.push_back(Letter::L);
            out.push_back(Letter::S);
        }
    } else {
        for (Int i = 0; i < -n; ++i) {
            out.push_back(Letter::S);
            out.push_back(Letter::LL);
        }
    }
}

} // namespace

Word matrix_to_word(const Mat& m_in) {
    if (m_in.det() != 1) throw std::invalid_argument("matrix determinant must be 1");
    Mat m = canonical(m_in);
    std::vector<Letter> raw;
    // Euclidean descent on the left column: M = T^n S M' with a strictly
    // smaller lower-left entry, until the matrix is an upper-triangular T^k.
    while (m.r != 0) {
        Int n = floordiv(m.p, m.r);
        // T^-n * M, then S * (T^-n * M).
        Int p2 = m.p - n * m.r, q2 = m.q - n * m.s;
        Mat next = Mat{-m.r, -m.s, p2, q2};
        append_translation(raw, n);
        raw.push_back(Letter::S);
        m = next;
    }
    // Now m = +-(1, k; 0, 1).
    Int k = m.p > 0 ? m.q : -m.q;
    append_translation(raw, k);
    return normalize(raw);
}

TraceClass classify(const Mat& m) {
    TraceClass out;
    out.abs_trace = m.trace_abs();
    Mat c = canonical(m);
    if (c == mat_identity()) {
        out.kind = ElementKind::Identity;
    } else if (out.abs_trace == 0) {
        out.kind = ElementKind::Elliptic;
        out.elliptic_order = 2;
    } else if (out.abs_trace == 1) {
        out.kind = ElementKind::Elliptic;
        out.elliptic_order = 3;
    } else if (out.abs_trace == 2) {
        out.kind = ElementKind::Parabolic;
    } else {
        out.kind = ElementKind::Hyperbolic;
    }
    return out;
}

TraceClass classify(const Word& w) { return classify(word_to_matrix(w)); }

std::string to_string(const TraceClass& t) {
    std::ostringstream os;
    switch (t.kind) {
        case ElementKind::Identity: os << "identity"; break;
        case ElementKind::Elliptic: os << "elliptic order=" << t.elliptic_order; break;
        case ElementKind::Parabolic: os << "parabolic"; break;
        case ElementKind::Hyperbolic: os << "hyperbolic"; break;
    }
    os << " trace=" << t.abs_trace;
    return os.str();
}

} // namespace farey

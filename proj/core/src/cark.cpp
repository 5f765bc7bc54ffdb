#include "farey/cark.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "farey/errors.hpp"

namespace farey {

namespace {

std::vector<Block> least_rotation(std::vector<Block> v) {
    const std::size_t n = v.size();
    std::vector<Block> best = v;
    for (std::size_t r = 1; r < n; ++r) {
        std::rotate(v.begin(), v.begin() + 1, v.end());
        if (v < best) best = v;
    }
    return best;
}

int smallest_period(const std::vector<Block>& v) {
    const int n = static_cast<int>(v.size());
    for (int p = 1; p <= n; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (int i = p; i < n && ok; ++i) ok = v[i] == v[i - p];
        if (ok) return p;
    }
    return n;
}

Cark from_blocks(std::vector<Block> blocks) {
    Cark c;
    c.spine = least_rotation(std::move(blocks));
    c.multiplicity = static_cast<int>(c.spine.size()) / smallest_period(c.spine);
    return c;
}

} // namespace

Cark word_to_cark(const Word& w) {
    TraceClass t = classify(w);
    if (t.kind != ElementKind::Hyperbolic)
        throw NotHyperbolic("cark requires a hyperbolic element, got " + to_string(t));
    Word cyc = cyclic_normal_form(w);
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < cyc.size(); i += 2) {
        Letter turn = cyc.letters[i];
        if (i + 1 >= cyc.size() || cyc.letters[i + 1] != Letter::S || turn == Letter::S)
            throw std::logic_error("hyperbolic cyclic word failed to factor into blocks");
        blocks.push_back(turn == Letter::L ? Block::P : Block::M);
    }
    return from_blocks(std::move(blocks));
}

Word cark_to_word(const Cark& c) {
    std::vector<Letter> letters;
    letters.reserve(2 * c.spine.size());
    for (Block b : c.spine) {
        letters.push_back(b == Block::P ? Letter::L : Letter::LL);
        letters.push_back(Letter::S);
    }
    return Word{std::move(letters)};
}

bool carks_conjugate(const Cark& a, const Cark& b) {
    return a.spine == b.spine && a.multiplicity == b.multiplicity;
}

bool is_reciprocal(const Cark& c) {
    // The inverse word's spine is the reversal with P and M swapped.
    std::vector<Block> rev(c.spine.rbegin(), c.spine.rend());
    for (Block& b : rev) b = b == Block::P ? Block::M : Block::P;
    return least_rotation(std::move(rev)) == c.spine;
}

QuadForm word_to_form(const Word& w) {
    TraceClass t = classify(w);
    if (t.kind != ElementKind::Hyperbolic)
        throw NotHyperbolic("fixed-point form requires a hyperbolic element, got " +
                            to_string(t));
    Mat m = trace_positive(word_to_matrix(w));
    Int r = m.r, sp = m.s - m.p, q = -m.q;
    Int d = gcd3(r, sp, q); // positive
    return QuadForm{r / d, sp / d, q / d};
}

Word form_to_word(const QuadForm& f) {
    Int disc = discriminant(f);
    if (disc <= 0) throw BadDiscriminant("discriminant must be positive");
    if (is_square(disc)) throw SquareDiscriminant("discriminant is a perfect square");
    if (!is_primitive(f)) throw NotPrimitive("form is not primitive");
    PellSolution pell = pell_fundamental(disc);
    Mat automorph{(pell.t - f.b * pell.u) / 2, -f.c * pell.u, f.a * pell.u,
                  (pell.t + f.b * pell.u) / 2};
    return matrix_to_word(automorph);
}

std::string to_string(const Cark& c) {
    const int period = smallest_period(c.spine);
    std::string root;
    for (int i = 0; i < period; ++i) root += c.spine[i] == Block::P ? 'P' : 'M';
    int k = static_cast<int>(c.spine.size()) / period;
    if (k == 1) return root;
    return root + "^" + std::to_string(k);
}

Cark parse_cark(const std::string& text) {
    std::vector<Block> blocks;
    std::size_t i = 0;
    for (; i < text.size(); ++i) {
        char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
        if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
        if (c == 'P')
            blocks.push_back(Block::P);
        else if (c == 'M')
            blocks.push_back(Block::M);
        else if (c == '^')
            break;
        else
            throw std::invalid_argument(std::string("bad cark character '") + text[i] + "'");
    }
    int k = 1;
    if (i < text.size()) {
        std::string tail = text.substr(i + 1);
        std::size_t pos = 0;
        k = std::stoi(tail, &pos);
        if (pos != tail.size() || k < 1) throw std::invalid_argument("bad multiplicity suffix");
    }
    if (blocks.empty()) throw std::invalid_argument("empty cark");
    std::vector<Block> spine;
    for (int j = 0; j < k; ++j) spine.insert(spine.end(), blocks.begin(), blocks.end());
    bool has_p = std::count(spine.begin(), spine.end(), Block::P) > 0;
    bool has_m = std::count(spine.begin(), spine.end(), Block::M) > 0;
    if (!has_p || !has_m)
        throw NotHyperbolic("spine needs both block types; a single type is parabolic");
    return from_blocks(std::move(spine));
}

std::string cark_svg(const Cark& c) {
    const int n = static_cast<int>(c.spine.size());
    const double radius = 80.0;
    const double stub_len = 26.0;
    const double node_r = 4.0;
    const double pi = 3.14159265358979323846;

    auto fmt = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", v + 0.0); // avoid -0.00
        std::string s(buf);
        if (s == "-0.00") s = "0.00";
        return s;
    };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"240\" height=\"240\" "
          "viewBox=\"-120 -120 240 240\">\n";
    os << "  <!-- cark " << to_string(c) << " -->\n";
    os << "  <circle cx=\"0\" cy=\"0\" r=\"" << fmt(radius)
       << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

    // 2n spine nodes: bullets at even positions carry the branches.
    for (int k = 0; k < 2 * n; ++k) {
        double angle = -pi / 2 + pi * k / n;
        double x = radius * std::cos(angle), y = radius * std::sin(angle);
        bool bullet = k % 2 == 0;
        if (bullet) {
            Block b = c.spine[k / 2];
            double dir = b == Block::P ? 1.0 : -1.0; // P branches outward, M inward
            double x2 = (radius + dir * stub_len) * std::cos(angle);
            double y2 = (radius + dir * stub_len) * std::sin(angle);
            os << "  <line x1=\"" << fmt(x) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(x2)
               << "\" y2=\"" << fmt(y2)
               << "\" stroke=\"black\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
            os << "  <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\""
               << fmt(node_r) << "\" fill=\"black\"/>\n";
        } else {
            os << "  <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\""
               << fmt(node_r) << "\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace farey

#include "cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "farey/cark.hpp"
#include "farey/congruence.hpp"
#include "farey/errors.hpp"
#include "farey/quadform.hpp"
#include "farey/ribbon_graph.hpp"
#include "farey/word.hpp"

namespace farey::cli {

namespace {

using nlohmann::ordered_json;

std::string dec(const Int& v) { return v.str(); }

ordered_json form_json(const QuadForm& f) {
    return ordered_json::array({dec(f.a), dec(f.b), dec(f.c)});
}

ordered_json envelope() {
    ordered_json j;
    j["schemaVersion"] = 1;
    return j;
}

struct Output {
    bool json = false;
    std::string text;    // plain payload
    ordered_json machine; // payload under --json

    std::string render() const {
        if (!json) return text;
        ordered_json j = envelope();
        for (auto& [k, v] : machine.items()) j[k] = v;
        return j.dump(2) + "\n";
    }
};

Family parse_family(const std::string& s) {
    if (s == "gamma0") return Family::Gamma0;
    if (s == "gamma1") return Family::Gamma1;
    if (s == "gamma") return Family::GammaFull;
    throw CLI::ValidationError("family", "unknown family '" + s + "' (gamma0|gamma1|gamma)");
}

std::int64_t parse_level(const std::string& s) {
    std::size_t pos = 0;
    long long n = 0;
    try {
        n = std::stoll(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != s.size() || n < 1)
        throw CLI::ValidationError("level", "level must be a positive integer, got '" + s + "'");
    return n;
}

int parse_radius(const std::string& s) {
    std::size_t pos = 0;
    long long n = -1;
    try {
        n = std::stoll(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != s.size() || n < 0)
        throw CLI::ValidationError("radius", "radius must be a non-negative integer, got '" + s + "'");
    return static_cast<int>(n);
}

// graph sources: fold <words...> | congruence <family> <N> | farey <r> | json <path>
RibbonGraph graph_from_source(const std::vector<std::string>& src) {
    if (src.empty())
        throw CLI::ValidationError("source", "expected: fold|congruence|farey|json ...");
    const std::string& kind = src[0];
    if (kind == "fold") {
        std::vector<Word> gens;
        for (std::size_t i = 1; i < src.size(); ++i) gens.push_back(parse_word(src[i]));
        return fold_subgroup_graph(gens);
    }
    if (kind == "congruence") {
        if (src.size() != 3)
            throw CLI::ValidationError("source", "expected: congruence <gamma0|gamma1|gamma> <N>");
        return congruence_graph(CongruenceSpec{parse_family(src[1]), parse_level(src[2])});
    }
    if (kind == "farey") {
        if (src.size() != 2) throw CLI::ValidationError("source", "expected: farey <radius>");
        return farey_ball(parse_radius(src[1]));
    }
    if (kind == "json") {
        if (src.size() != 2) throw CLI::ValidationError("source", "expected: json <path>");
        std::ifstream in(src[1]);
        if (!in) throw CLI::ValidationError("source", "cannot open '" + src[1] + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return graph_from_json(buf.str());
    }
    throw CLI::ValidationError("source", "unknown graph source '" + kind + "'");
}

ordered_json passport_json(const Passport& p) {
    ordered_json j;
    j["edges"] = p.edges;
    j["genus"] = p.genus;
    j["punctures"] = p.punctures;
    j["circDegrees"] = p.circ_degrees;
    j["bulletDegrees"] = p.bullet_degrees;
    j["faceDegrees"] = p.face_degrees;
    j["monodromyOrder"] = dec(p.monodromy_order);
    return j;
}

std::string passport_text(const Passport& p) {
    std::ostringstream os;
    auto list = [&](const std::vector<int>& v) {
        os << '[';
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
        os << ']';
    };
    os << "edges=" << p.edges << " genus=" << p.genus << " punctures=" << p.punctures;
    os << " circ=";
    list(p.circ_degrees);
    os << " bullet=";
    list(p.bullet_degrees);
    os << " faces=";
    list(p.face_degrees);
    os << " monodromy=" << dec(p.monodromy_order);
    return os.str();
}

ordered_json cark_json(const Cark& c) {
    std::string spine;
    for (Block b : c.spine) spine += b == Block::P ? 'P' : 'M';
    ordered_json j;
    j["spine"] = spine;
    j["multiplicity"] = c.multiplicity;
    j["canonical"] = to_string(c);
    return j;
}

} // namespace

RunResult run(const std::vector<std::string>& args) {
    Output out;
    std::int64_t limit = 10'000'000; // class-number guard, see --limit
    int jobs = 1;

    CLI::App app{"Exact calculator for the dictionary between subgroups of the modular "
                 "group, bipartite ribbon graphs, and indefinite binary quadratic forms"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", out.json, "machine-readable JSON output");
    app.add_option("--limit", limit, "largest discriminant class-number accepts");
    app.add_option("--jobs", jobs, "worker threads for class-number")->check(CLI::PositiveNumber);

    std::string word_text, form_text, form_text2, cark_text, disc_text, target_text;
    std::vector<std::string> fold_words, source;

    // word ------------------------------------------------------------------
    CLI::App* word = app.add_subcommand("word", "word algebra in the modular group");
    word->require_subcommand(1);
    word->fallthrough();
    CLI::App* w_classify = word->add_subcommand("classify", "trace classification");
    w_classify->fallthrough();
    w_classify->add_option("word", word_text)->required();
    w_classify->callback([&] {
        TraceClass t = classify(parse_word(word_text));
        out.text = to_string(t) + "\n";
        out.machine["kind"] = [&] {
            switch (t.kind) {
                case ElementKind::Identity: return "identity";
                case ElementKind::Elliptic: return "elliptic";
                case ElementKind::Parabolic: return "parabolic";
                default: return "hyperbolic";
            }
        }();
        if (t.kind == ElementKind::Elliptic) out.machine["order"] = t.elliptic_order;
        out.machine["absTrace"] = dec(t.abs_trace);
    });
    CLI::App* w_matrix = word->add_subcommand("matrix", "matrix of a word");
    w_matrix->fallthrough();
    w_matrix->add_option("word", word_text)->required();
    w_matrix->callback([&] {
        Mat m = word_to_matrix(parse_word(word_text));
        out.text = to_string(m) + "\n";
        out.machine["matrix"] = to_string(m);
    });
    CLI::App* w_normal = word->add_subcommand("normal", "normalize a letter sequence");
    w_normal->fallthrough();
    w_normal->add_option("word", word_text)->required();
    w_normal->callback([&] {
        Word w = parse_word(word_text);
        out.text = to_string(w) + "\n";
        out.machine["word"] = to_string(w);
    });

    // graph -----------------------------------------------------------------
    CLI::App* graph = app.add_subcommand("graph", "modular graphs (bipartite ribbon graphs)");
    graph->require_subcommand(1);
    graph->fallthrough();
    CLI::App* g_fold = graph->add_subcommand("fold", "folded core of a finitely generated subgroup");
    g_fold->fallthrough();
    g_fold->add_option("words", fold_words)->expected(0, -1);
    g_fold->callback([&] {
        std::vector<Word> gens;
        for (const std::string& s : fold_words) gens.push_back(parse_word(s));
        std::string js = to_json(fold_subgroup_graph(gens));
        out.text = js;
        out.machine = ordered_json::parse(js);
    });
    CLI::App* g_cong = graph->add_subcommand("congruence", "coset graph of a congruence subgroup");
    g_cong->fallthrough();
    std::string family_text, level_text;
    g_cong->add_option("family", family_text, "gamma0|gamma1|gamma")->required();
    g_cong->add_option("level", level_text)->required();
    g_cong->callback([&] {
        RibbonGraph g =
            congruence_graph(CongruenceSpec{parse_family(family_text), parse_level(level_text)});
        std::string js = to_json(g);
        out.text = js;
        out.machine = ordered_json::parse(js);
    });
    CLI::App* g_pass = graph->add_subcommand("passport", "combinatorial invariants of a graph");
    g_pass->fallthrough();
    g_pass->add_option("source", source, "fold <w>... | congruence <fam> <N> | farey <r> | json <path>")
        ->expected(-1);
    g_pass->callback([&] {
        Passport p = passport(graph_from_source(source));
        out.text = passport_text(p) + "\n";
        out.machine = passport_json(p);
    });
    CLI::App* g_dot = graph->add_subcommand("dot", "deterministic DOT rendering");
    g_dot->fallthrough();
    g_dot->add_option("source", source)->expected(-1);
    g_dot->callback([&] {
        std::string dot = to_dot(graph_from_source(source));
        out.text = dot;
        out.machine["dot"] = dot;
    });

    // cark ------------------------------------------------------------------
    CLI::App* cark = app.add_subcommand("cark", "spines of hyperbolic elements");
    cark->require_subcommand(1);
    cark->fallthrough();
    CLI::App* c_ofword = cark->add_subcommand("of-word", "cark of a hyperbolic word");
    c_ofword->fallthrough();
    c_ofword->add_option("word", word_text)->required();
    c_ofword->callback([&] {
        Cark c = word_to_cark(parse_word(word_text));
        out.text = to_string(c) + "\n";
        out.machine = cark_json(c);
    });
    CLI::App* c_ofform = cark->add_subcommand("of-form", "cark of a form's automorph");
    c_ofform->fallthrough();
    c_ofform->add_option("form", form_text)->required();
    c_ofform->callback([&] {
        Cark c = word_to_cark(form_to_word(parse_form(form_text)));
        out.text = to_string(c) + "\n";
        out.machine = cark_json(c);
    });
    CLI::App* c_svg = cark->add_subcommand("svg", "deterministic SVG rendering");
    c_svg->fallthrough();
    c_svg->add_option("cark", cark_text)->required();
    c_svg->callback([&] {
        std::string svg = cark_svg(parse_cark(cark_text));
        out.text = svg;
        out.machine["svg"] = svg;
    });
    CLI::App* c_rec = cark->add_subcommand("reciprocal", "is the element conjugate to its inverse");
    c_rec->fallthrough();
    c_rec->add_option("cark", cark_text)->required();
    c_rec->callback([&] {
        bool r = is_reciprocal(parse_cark(cark_text));
        out.text = r ? "true\n" : "false\n";
        out.machine["reciprocal"] = r;
    });

    // form ------------------------------------------------------------------
    CLI::App* form = app.add_subcommand("form", "indefinite binary quadratic forms");
    form->require_subcommand(1);
    form->fallthrough();
    CLI::App* f_reduce = form->add_subcommand("reduce", "Gauss reduction with transformation");
    f_reduce->fallthrough();
    f_reduce->add_option("form", form_text)->required();
    f_reduce->callback([&] {
        Reduction r = reduce(parse_form(form_text));
        out.text = to_string(r.form) + " m=" + to_string(r.m) + "\n";
        out.machine["form"] = form_json(r.form);
        out.machine["matrix"] = to_string(r.m);
        out.machine["steps"] = r.steps;
    });
    CLI::App* f_cycle = form->add_subcommand("cycle", "cycle of reduced forms of the class");
    f_cycle->fallthrough();
    f_cycle->add_option("form", form_text)->required();
    f_cycle->callback([&] {
        FormClass c = cycle(parse_form(form_text));
        std::ostringstream os;
        for (std::size_t i = 0; i < c.cycle.size(); ++i)
            os << (i ? " " : "") << to_string(c.cycle[i]);
        out.text = os.str() + "\n";
        out.machine["discriminant"] = dec(c.discriminant);
        ordered_json arr = ordered_json::array();
        for (const QuadForm& f : c.cycle) arr.push_back(form_json(f));
        out.machine["cycle"] = arr;
    });
    CLI::App* f_cn = form->add_subcommand("class-number", "number of classes of a discriminant");
    f_cn->fallthrough();
    f_cn->add_option("discriminant", disc_text)->required();
    f_cn->callback([&] {
        Int disc(disc_text);
        if (disc > limit)
            throw LimitExceeded("discriminant exceeds --limit " + std::to_string(limit));
        Int h = class_number(disc, jobs);
        out.text = dec(h) + "\n";
        out.machine["discriminant"] = dec(disc);
        out.machine["classNumber"] = dec(h);
    });
    CLI::App* f_comp = form->add_subcommand("compose", "Gauss composition of two classes");
    f_comp->fallthrough();
    f_comp->add_option("form1", form_text)->required();
    f_comp->add_option("form2", form_text2)->required();
    f_comp->callback([&] {
        QuadForm f = compose(parse_form(form_text), parse_form(form_text2));
        out.text = to_string(f) + "\n";
        out.machine["form"] = form_json(f);
    });
    CLI::App* f_pell = form->add_subcommand("pell", "fundamental solution of t^2 - D u^2 = 4");
    f_pell->fallthrough();
    f_pell->add_option("discriminant", disc_text)->required();
    f_pell->callback([&] {
        PellSolution p = pell_fundamental(Int(disc_text));
        out.text = "t=" + dec(p.t) + " u=" + dec(p.u) + "\n";
        out.machine["t"] = dec(p.t);
        out.machine["u"] = dec(p.u);
    });
    CLI::App* f_min = form->add_subcommand("minimum", "least positive represented integer");
    f_min->fallthrough();
    f_min->add_option("form", form_text)->required();
    f_min->callback([&] {
        Int m = minimum(parse_form(form_text));
        out.text = dec(m) + "\n";
        out.machine["minimum"] = dec(m);
    });
    CLI::App* f_rep = form->add_subcommand("represents", "decide f(x,y) = N with witness");
    f_rep->fallthrough();
    f_rep->add_option("form", form_text)->required();
    f_rep->add_option("target", target_text)->required();
    f_rep->callback([&] {
        Representation r = represents(parse_form(form_text), Int(target_text));
        if (r.represented)
            out.text = "witness x=" + dec(r.x) + " y=" + dec(r.y) + "\n";
        else
            out.text = "absent\n";
        out.machine["represented"] = r.represented;
        if (r.represented)
            out.machine["witness"] = ordered_json::array({dec(r.x), dec(r.y)});
    });
    CLI::App* f_ofword = form->add_subcommand("of-word", "fixed-point form of a hyperbolic word");
    f_ofword->fallthrough();
    f_ofword->add_option("word", word_text)->required();
    f_ofword->callback([&] {
        QuadForm f = word_to_form(parse_word(word_text));
        out.text = to_string(f) + " disc=" + dec(discriminant(f)) + "\n";
        out.machine["form"] = form_json(f);
        out.machine["discriminant"] = dec(discriminant(f));
    });
    CLI::App* f_toword = form->add_subcommand("to-word", "word of the fundamental automorph");
    f_toword->fallthrough();
    f_toword->add_option("form", form_text)->required();
    f_toword->callback([&] {
        Word w = form_to_word(parse_form(form_text));
        out.text = to_string(w) + "\n";
        out.machine["word"] = to_string(w);
    });

    RunResult result;
    std::vector<std::string> argv(args.rbegin(), args.rend()); // CLI11 parses reversed
    try {
        app.parse(argv);
        result.out = out.render();
        return result;
    } catch (const CLI::CallForHelp&) {
        result.out = app.help();
        return result;
    } catch (const CLI::ParseError& e) {
        result.status = 1;
        result.err = std::string(e.what()) + "\n";
        return result;
    } catch (const DomainError& e) {
        result.status = 2;
        if (out.json) {
            ordered_json j = envelope();
            j["error"] = {{"code", e.code()}, {"message", e.what()}};
            result.out = j.dump(2) + "\n";
        }
        result.err = e.code() + std::string(": ") + e.what() + "\n";
        return result;
    } catch (const std::invalid_argument& e) {
        result.status = 1;
        result.err = std::string("usage error: ") + e.what() + "\n";
        return result;
    }
}

} // namespace farey::cli

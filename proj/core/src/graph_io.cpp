#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "farey/errors.hpp"
#include "farey/ribbon_graph.hpp"

namespace farey {

namespace {

// Vertices as sigma-cycles, ordered by least dart.
std::vector<std::vector<int>> vertex_cycles(const RibbonGraph& g) {
    std::vector<char> seen(g.darts(), 0);
    std::vector<std::vector<int>> out;
    for (int d = 0; d < g.darts(); ++d) {
        if (seen[d]) continue;
        std::vector<int> cyc;
        int x = d;
        while (!seen[x]) {
            seen[x] = 1;
            cyc.push_back(x);
            x = g.sigma[x];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

} // namespace

std::string to_dot(const RibbonGraph& g) {
    std::map<int, std::string> name; // dart -> vertex node name
    std::ostringstream nodes;
    int nc = 0, nb = 0;
    for (const auto& cyc : vertex_cycles(g)) {
        bool all_stubs = true;
        for (int d : cyc)
            if (!g.is_stub(d)) all_stubs = false;
        std::string id;
        if (g.vtype[cyc[0]] == VertexType::Circ) {
            id = "c" + std::to_string(nc++);
            if (!all_stubs)
                nodes << "  " << id << " [shape=circle, label=\"\", width=0.18, fixedsize=true];\n";
        } else {
            id = "b" + std::to_string(nb++);
            if (!all_stubs)
                nodes << "  " << id << " [shape=point, width=0.1];\n";
        }
        for (int d : cyc) name[d] = id;
    }

    std::ostringstream edges;
    const int base_edge_dart = g.base ? std::min(*g.base, g.alpha[*g.base]) : -1;
    for (int d = 0; d < g.darts(); ++d) {
        int e = g.alpha[d];
        if (e == d || e < d) continue; // stubs handled below; each edge once
        int cd = g.vtype[d] == VertexType::Circ ? d : e;
        int bd = g.alpha[cd];
        edges << "  " << name[cd] << " -> " << name[bd] << " [dir=none";
        if (d == base_edge_dart) edges << ", penwidth=2";
        edges << "];\n";
    }
    int ns = 0;
    std::ostringstream stubs;
    for (int d = 0; d < g.darts(); ++d) {
        if (!g.is_stub(d)) continue;
        std::string sid = "s" + std::to_string(ns++);
        stubs << "  " << sid << " [shape=none, label=\"\", width=0.05];\n";
        stubs << "  " << name[d] << " -> " << sid << " [dir=none, style=dashed];\n";
    }

    std::ostringstream os;
    os << "digraph modular_graph {\n";
    os << "  node [fontname=\"Helvetica\"];\n";
    os << nodes.str() << edges.str() << stubs.str();
    os << "}\n";
    return os.str();
}

std::string to_json(const RibbonGraph& g) {
    nlohmann::ordered_json j;
    j["schemaVersion"] = 1;
    j["halfEdges"] = g.darts();
    j["sigma"] = g.sigma;
    j["alpha"] = g.alpha;
    std::vector<std::string> vt;
    vt.reserve(g.darts());
    for (int d = 0; d < g.darts(); ++d)
        vt.push_back(g.vtype[d] == VertexType::Circ ? "o" : "b");
    j["vtype"] = vt;
    if (g.base)
        j["base"] = *g.base;
    else
        j["base"] = nullptr;
    j["stubs"] = g.stubs();
    return j.dump(2) + "\n";
}

RibbonGraph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidGraph(std::string("bad json: ") + e.what());
    }
    try {
        if (j.at("schemaVersion").get<int>() != 1)
            throw InvalidGraph("unsupported schemaVersion");
        RibbonGraph g;
        int n = j.at("halfEdges").get<int>();
        g.sigma = j.at("sigma").get<std::vector<int>>();
        g.alpha = j.at("alpha").get<std::vector<int>>();
        auto vt = j.at("vtype").get<std::vector<std::string>>();
        if (static_cast<int>(g.sigma.size()) != n || static_cast<int>(vt.size()) != n)
            throw InvalidGraph("field lengths disagree with halfEdges");
        for (const std::string& s : vt) {
            if (s == "o")
                g.vtype.push_back(VertexType::Circ);
            else if (s == "b")
                g.vtype.push_back(VertexType::Bullet);
            else
                throw InvalidGraph("vtype entries must be \"o\" or \"b\"");
        }
        if (!j.at("base").is_null()) g.base = j.at("base").get<int>();
        auto declared = j.at("stubs").get<std::vector<int>>();
        validate(g);
        if (declared != g.stubs()) throw InvalidGraph("stubs disagree with alpha");
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidGraph(std::string("bad graph json: ") + e.what());
    }
}

} // namespace farey

#include "rectdiag/json_io.hpp"

#include <json.hpp>

namespace rectdiag {

using nlohmann::json;

std::string family_to_json(const Family& f) {
    json rects = json::array();
    for (const Rect& r : f.rects())
        rects.push_back({{"id", r.id},
                         {"lx", r.l.x},
                         {"ly", r.l.y},
                         {"ux", r.u.x},
                         {"uy", r.u.y},
                         {"w", r.w}});
    return json{{"rects", rects}}.dump();
}

Family family_from_json(const std::string& text) {
    json j = json::parse(text);
    std::vector<Rect> rects;
    for (const auto& e : j.at("rects")) {
        Rect r;
        r.id = e.at("id").get<int>();
        r.l = {e.at("lx").get<Coord>(), e.at("ly").get<Coord>()};
        r.u = {e.at("ux").get<Coord>(), e.at("uy").get<Coord>()};
        r.w = e.value("w", 1);
        rects.push_back(r);
    }
    return validate_family(std::move(rects));
}

std::string graph_to_json(const IntersectionGraph& g) {
    json edges = json::array();
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.adj(i, j)) edges.push_back({i, j});
    return json{{"n", g.n}, {"edges", edges}}.dump();
}

IntersectionGraph graph_from_json(const std::string& text) {
    json j = json::parse(text);
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return make_graph(j.at("n").get<int>(), edges);
}

std::string layout_to_json(const CombLayout& l) {
    json clauses = json::array();
    for (const auto& c : l.clauses)
        clauses.push_back({{"lits", c.lits}, {"side", c.above ? "above" : "below"}});
    return json{{"vars", l.vars}, {"clauses", clauses}}.dump();
}

CombLayout layout_from_json(const std::string& text) {
    json j = json::parse(text);
    CombLayout l;
    l.vars = j.at("vars").get<std::vector<std::string>>();
    for (const auto& c : j.at("clauses")) {
        CombClause cl;
        auto lits = c.at("lits");
        if (lits.size() != 3) throw LayoutInvalid("clause must have three literals");
        for (int t = 0; t < 3; ++t) cl.lits[t] = lits.at(t).get<int>();
        cl.above = c.at("side").get<std::string>() == "above";
        l.clauses.push_back(cl);
    }
    return l;
}

std::string roles_to_json(const ReducedInstance& inst) {
    json roles = json::object();
    for (std::size_t i = 0; i < inst.roles.size(); ++i) {
        const SquareRole& r = inst.roles[i];
        json e;
        switch (r.kind) {
            case SquareRole::NecklaceSquare:
                e = {{"kind", "necklace"}, {"var", r.var}, {"ring", r.ring}};
                break;
            case SquareRole::ClauseBand:
                e = {{"kind", "band"}, {"clause", r.clause}, {"pos", r.detail}};
                break;
            case SquareRole::ClauseLeg:
                e = {{"kind", "leg"}, {"clause", r.clause}, {"slot", r.detail}};
                break;
        }
        roles[std::to_string(inst.family[i].id)] = e;
    }
    return json{{"target", inst.target}, {"roles", roles}}.dump();
}

}  // namespace rectdiag

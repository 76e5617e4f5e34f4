#pragma once

#include <iosfwd>
#include <string>

#include "rectdiag/geometry.hpp"
#include "rectdiag/sat_reduction.hpp"

// JSON formats shared by the CLI, tools and bindings:
//   family: {"rects":[{"id":0,"lx":-3,"ly":-1,"ux":2,"uy":4,"w":1}, ...]}
//   graph:  {"n":5,"edges":[[0,1],...]}
//   layout: {"vars":["v1",...],"clauses":[{"lits":[1,-2,3],"side":"above"},...]}

namespace rectdiag {

std::string family_to_json(const Family& f);
Family family_from_json(const std::string& text);  // runs validate_family

std::string graph_to_json(const IntersectionGraph& g);
IntersectionGraph graph_from_json(const std::string& text);

std::string layout_to_json(const CombLayout& l);
CombLayout layout_from_json(const std::string& text);

std::string roles_to_json(const ReducedInstance& inst);

}  // namespace rectdiag

#pragma once

#include <string>

#include "bnconcur/rpn.hpp"

namespace bnconcur {

/// Parses the JSON net format: an object with "places" (id, name, marked)
/// and "transitions" (id, name, pre, cont, post as place-id arrays).
/// Missing name defaults to the id; marked, cont and post are optional.
ReadPetriNet load_rpn_json(const std::string& text);
ReadPetriNet load_rpn_file(const std::string& path);

/// Canonical form: places and transitions sorted by id, id arrays sorted,
/// two-space indent, trailing newline.
std::string save_rpn_json(const ReadPetriNet& n);

/// DOT rendering with markings as sorted place-name sets and edges
/// labeled by the firing transition (or the step's name set).
std::string marking_graph_dot(const ReadPetriNet& n, const MarkingGraph& g);

/// JSON rendering of the same graph: {"states": [...], "edges": [...]}.
std::string marking_graph_json(const ReadPetriNet& n, const MarkingGraph& g);

std::string dot_escape(const std::string& s);

} // namespace bnconcur

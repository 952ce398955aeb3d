#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "minkin/combinat/hypertree.hpp"
#include "minkin/combinat/two_tree.hpp"

namespace minkin {

// "123,129" (compact, labels <= 9) or "1.2.3,1.2.10" (dotted).
std::vector<Triple> parse_triples(std::string_view text);
std::string format_triples(const std::vector<Triple>& triples);

// "12,13,23" or "1.2,1.13".
std::vector<Pair> parse_edges(std::string_view text);

// A 2-tree from its triangle list; each triple is read as (i, j, k) with k
// its largest vertex, glued to {i, j}. n = max label + 1.
TwoTree two_tree_from_triples(const std::vector<Triple>& triples);

// Tree SPEC: triangle triples first, then a raw edge set via
// recognize_two_tree. Throws ParseError when neither reading works.
TwoTree parse_tree_spec(std::string_view text);

nlohmann::json to_json(const TwoTree& t);
nlohmann::json to_json(const Hypertree& h);
TwoTree two_tree_from_json(const nlohmann::json& j);
Hypertree hypertree_from_json(const nlohmann::json& j);

}  // namespace minkin

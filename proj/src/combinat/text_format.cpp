#include "minkin/combinat/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "minkin/error.hpp"

namespace minkin {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<int> parse_labels(const std::string& token) {
  std::vector<int> v;
  if (token.empty()) throw Error(ErrorCode::ParseError, "empty token");
  if (token.find('.') != std::string::npos) {
    for (const auto& part : split(token, '.')) {
      if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit))
        throw Error(ErrorCode::ParseError, "bad token '" + token + "'");
      v.push_back(std::stoi(part));
    }
  } else {
    for (char c : token) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw Error(ErrorCode::ParseError, "bad token '" + token + "'");
      v.push_back(c - '0');
    }
  }
  return v;
}

}  // namespace

std::vector<Triple> parse_triples(std::string_view text) {
  std::vector<Triple> out;
  for (const auto& tok : split(text, ',')) {
    auto v = parse_labels(tok);
    if (v.size() != 3) throw Error(ErrorCode::ParseError, "triple '" + tok + "' does not have three labels");
    out.push_back(make_triple(v[0], v[1], v[2]));
  }
  return out;
}

std::string format_triples(const std::vector<Triple>& triples) {
  bool dotted = false;
  for (const auto& t : triples) dotted = dotted || t[2] >= 10;
  std::string s;
  for (const auto& t : triples) {
    if (!s.empty()) s += ",";
    for (int k = 0; k < 3; ++k) {
      if (dotted && k) s += ".";
      s += std::to_string(t[k]);
    }
  }
  return s;
}

std::vector<Pair> parse_edges(std::string_view text) {
  std::vector<Pair> out;
  for (const auto& tok : split(text, ',')) {
    auto v = parse_labels(tok);
    if (v.size() != 2 || v[0] == v[1]) throw Error(ErrorCode::ParseError, "edge '" + tok + "' is not a pair");
    out.push_back(make_pair_sorted(v[0], v[1]));
  }
  return out;
}

TwoTree two_tree_from_triples(const std::vector<Triple>& triples) {
  std::vector<Step> steps;
  int top = 0;
  for (const auto& t : triples) {
    steps.push_back({t[2], t[0], t[1]});
    top = std::max(top, t[2]);
  }
  std::sort(steps.begin(), steps.end(), [](const Step& a, const Step& b) { return a.k < b.k; });
  return TwoTree::build(steps, top + 1);
}

TwoTree parse_tree_spec(std::string_view text) {
  std::string first_error;
  try {
    return two_tree_from_triples(parse_triples(text));
  } catch (const Error& e) {
    first_error = e.what();
  }
  std::vector<Pair> edges;
  try {
    edges = parse_edges(text);
  } catch (const Error&) {
    throw Error(ErrorCode::ParseError, "tree spec is neither triples nor edges (" + first_error + ")");
  }
  int top = 0;
  for (Pair e : edges) top = std::max(top, e.j);
  auto r = recognize_two_tree(edges, top + 1);
  if (!r.tree) throw Error(ErrorCode::ParseError, "NOT_A_2TREE: " + r.reason);
  return *r.tree;
}

nlohmann::json to_json(const TwoTree& t) {
  nlohmann::json tri = nlohmann::json::array();
  for (const Step& s : t.steps()) tri.push_back({s.i, s.j, s.k});
  return {{"n", t.n()}, {"triples", tri}};
}

nlohmann::json to_json(const Hypertree& h) {
  nlohmann::json tri = nlohmann::json::array();
  for (const auto& t : h.triples()) tri.push_back({t[0], t[1], t[2]});
  return {{"n", h.n()}, {"triples", tri}};
}

namespace {

std::vector<Triple> triples_from_json(const nlohmann::json& j) {
  std::vector<Triple> out;
  try {
    for (const auto& t : j.at("triples")) {
      if (t.size() != 3) throw Error(ErrorCode::ParseError, "triple of wrong size");
      out.push_back(make_triple(t[0].get<int>(), t[1].get<int>(), t[2].get<int>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return out;
}

}  // namespace

TwoTree two_tree_from_json(const nlohmann::json& j) {
  TwoTree t = two_tree_from_triples(triples_from_json(j));
  if (j.contains("n") && j["n"].get<int>() != t.n()) throw Error(ErrorCode::ParseError, "n does not match triples");
  return t;
}

Hypertree hypertree_from_json(const nlohmann::json& j) {
  try {
    return Hypertree(j.at("n").get<int>(), triples_from_json(j));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace minkin

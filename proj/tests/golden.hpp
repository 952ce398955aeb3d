#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace golden {

inline std::string path(const std::string& name) { return std::string(MINKIN_GOLDEN_DIR) + "/" + name; }

// Non-empty lines that are not '#' comments.
inline std::vector<std::string> lines(const std::string& name) {
  std::ifstream in(path(name));
  if (!in) throw std::runtime_error("missing golden file " + name);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') out.push_back(line);
  return out;
}

// "lhs = rhs" lines.
inline std::vector<std::pair<std::string, std::string>> equations(const std::string& name) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& l : lines(name)) {
    auto eq = l.find('=');
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(' '));
      s.erase(s.find_last_not_of(' ') + 1);
      return s;
    };
    out.emplace_back(trim(l.substr(0, eq)), trim(l.substr(eq + 1)));
  }
  return out;
}

inline nlohmann::json json_file(const std::string& name) {
  std::ifstream in(path(name));
  return nlohmann::json::parse(in);
}

}  // namespace golden

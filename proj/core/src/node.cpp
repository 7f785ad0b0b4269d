#include "semitree/node.hpp"

#include <sstream>
#include <stdexcept>

namespace semitree {

void validate_node(const Node& n) {
  if (!is_depth_class(n.depth)) {
    throw std::invalid_argument("node depth " + rational_to_string(n.depth) +
                                " is not depth-class (reduced denominator must be odd)");
  }
  for (size_t i = 0; i < n.turns.size(); ++i) {
    if (!is_turn_class(n.turns[i])) {
      throw std::invalid_argument(
          "turn #" + std::to_string(i) + " = " + rational_to_string(n.turns[i]) +
          " is not turn-class (reduced denominator must be even)");
    }
    if (i > 0 && !(n.turns[i - 1] < n.turns[i])) {
      throw std::invalid_argument(
          "turns not strictly increasing at #" + std::to_string(i) + ": " +
          rational_to_string(n.turns[i - 1]) + " then " +
          rational_to_string(n.turns[i]));
    }
    if (!(n.turns[i] < n.depth)) {
      throw std::invalid_argument(
          "turn #" + std::to_string(i) + " = " + rational_to_string(n.turns[i]) +
          " does not lie strictly above depth " + rational_to_string(n.depth));
    }
  }
}

bool node_less(const Node& a, const Node& b) {
  const size_t m = std::min(a.turns.size(), b.turns.size());
  for (size_t i = 0; i < m; ++i) {
    if (a.turns[i] != b.turns[i]) return a.turns[i] < b.turns[i];
  }
  if (a.turns.size() != b.turns.size()) return a.turns.size() < b.turns.size();
  return a.depth < b.depth;
}

std::string node_to_string(const Node& n) {
  std::ostringstream out;
  out << "<{";
  for (size_t i = 0; i < n.turns.size(); ++i) {
    if (i) out << ",";
    out << rational_to_string(n.turns[i]);
  }
  out << "};" << rational_to_string(n.depth) << ">";
  return out.str();
}

namespace {

Rat rational_from_json(const nlohmann::json& j, const std::string& where) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  throw std::invalid_argument(where + ": expected a rational string or integer");
}

}  // namespace

nlohmann::json node_to_json(const Node& n) {
  nlohmann::json turns = nlohmann::json::array();
  for (const Rat& t : n.turns) turns.push_back(rational_to_string(t));
  return nlohmann::json{{"turns", turns}, {"depth", rational_to_string(n.depth)}};
}

Node node_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("turns") || !j.contains("depth")) {
    throw std::invalid_argument("node JSON must be {\"turns\": [...], \"depth\": ...}");
  }
  if (!j.at("turns").is_array()) {
    throw std::invalid_argument("node JSON field 'turns' must be an array");
  }
  Node n;
  size_t i = 0;
  for (const auto& t : j.at("turns")) {
    n.turns.push_back(rational_from_json(t, "turns[" + std::to_string(i) + "]"));
    ++i;
  }
  n.depth = rational_from_json(j.at("depth"), "depth");
  validate_node(n);
  return n;
}

Node node_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("node JSON parse error: ") + e.what());
  }
  return node_from_json(j);
}

}  // namespace semitree

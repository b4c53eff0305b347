#include "kalmanson/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace kalmanson {

using nlohmann::json;

namespace {

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON document: ") + e.what());
  }
}

}  // namespace

json to_json(const Split& s) { return s.members(); }

json to_json(const CircularOrdering& ord) { return std::vector<int>(ord.order().begin(), ord.order().end()); }

json to_json(const SplitSystem& ss) {
  json splits = json::array();
  for (const Split& s : ss) splits.push_back(to_json(s));
  return json{{"n", ss.n()}, {"splits", std::move(splits)}};
}

SplitSystem split_system_from_json(const json& j) {
  return guarded([&] {
    if (!j.is_object() || !j.contains("n") || !j.contains("splits")) {
      throw std::invalid_argument("split system needs \"n\" and \"splits\"");
    }
    const int n = j.at("n").get<int>();
    GroundSet ground(n);
    std::vector<Split> splits;
    for (const json& block : j.at("splits")) {
      const auto members = block.get<std::vector<int>>();
      splits.push_back(make_split(n, members));
    }
    return SplitSystem(n, std::move(splits));
  });
}

json to_json(const Decomposition& d) {
  json alpha = json::array();
  for (const Rational& a : d.alpha) alpha.push_back(to_string(a));
  json weights = json::object();
  for (const auto& [split, w] : d.weights) weights[to_string(split)] = to_string(w);
  return json{{"ordering", to_json(d.ordering)}, {"alpha", std::move(alpha)}, {"weights", std::move(weights)}};
}

Decomposition decomposition_from_json(const json& j) {
  return guarded([&] {
    const auto order = j.at("ordering").get<std::vector<int>>();
    const int n = static_cast<int>(order.size());
    GroundSet ground(n);
    CircularOrdering ord = CircularOrdering::canonical(order);
    if (!std::equal(order.begin(), order.end(), ord.order().begin())) {
      throw std::invalid_argument("ordering is not in canonical form");
    }
    Decomposition d{std::move(ord), {}, {}};
    for (const json& a : j.at("alpha")) d.alpha.push_back(parse_rational(a.get<std::string>()));
    if (static_cast<int>(d.alpha.size()) != n) throw std::invalid_argument("alpha needs n entries");
    for (const auto& [key, value] : j.at("weights").items()) {
      Split s = parse_split(n, key);
      if (!d.ordering.is_arc(s) || s.trivial()) throw std::invalid_argument("weighted split " + key + " is not a non-trivial arc");
      Rational w = parse_rational(value.get<std::string>());
      if (w <= 0) throw std::invalid_argument("weights must be positive");
      d.weights.emplace(s, std::move(w));
    }
    return d;
  });
}

}  // namespace kalmanson

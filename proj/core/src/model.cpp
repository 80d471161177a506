#include "modal/model.hpp"

#include <set>

#include "json.hpp"

namespace modal {

std::string to_string(FrameClass fc) {
  switch (fc) {
    case FrameClass::All: return "all";
    case FrameClass::Euclidean: return "euclidean";
    case FrameClass::TransitiveIrreflexive: return "ti";
  }
  return "?";
}

FrameClass frame_class_from_string(std::string_view s) {
  if (s == "all") return FrameClass::All;
  if (s == "euclidean") return FrameClass::Euclidean;
  if (s == "ti") return FrameClass::TransitiveIrreflexive;
  throw Error("unknown frame class: " + std::string(s));
}

int KripkeModel::index_of(std::string_view world) const {
  for (int i = 0; i < size(); ++i)
    if (worlds[i] == world) return i;
  throw UnknownWorldError("unknown world: " + std::string(world));
}

KripkeModel KripkeModel::make(std::vector<std::string> names,
                              const std::vector<std::pair<std::string, std::string>>& rel,
                              const std::map<std::string, std::vector<std::string>>& valuation) {
  if (names.empty()) throw ModelFormatError("model needs at least one world");
  if (names.size() > kMaxWorlds)
    throw ModelFormatError("too many worlds (limit " + std::to_string(kMaxWorlds) + ")");
  std::set<std::string> seen;
  for (const auto& w : names)
    if (!seen.insert(w).second) throw ModelFormatError("duplicate world: " + w);

  KripkeModel m;
  m.worlds = std::move(names);
  m.succ.assign(m.worlds.size(), 0);
  std::set<std::pair<int, int>> pairs;
  for (const auto& [from, to] : rel) {
    int i = m.index_of(from), j = m.index_of(to);
    if (!pairs.insert({i, j}).second)
      throw ModelFormatError("duplicate relation pair: [" + from + ", " + to + "]");
    m.succ[i] |= 1ull << j;
  }
  for (const auto& [var, where] : valuation) {
    std::uint64_t mask = 0;
    for (const auto& w : where) mask |= 1ull << m.index_of(w);
    m.val[var] = mask;
  }
  return m;
}

KripkeModel KripkeModel::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ModelFormatError(std::string("bad model JSON: ") + e.what());
  }
  try {
    std::vector<std::string> worlds = j.at("worlds").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> rel;
    for (const auto& pair : j.value("rel", nlohmann::json::array())) {
      if (!pair.is_array() || pair.size() != 2)
        throw ModelFormatError("rel entries must be two-element arrays");
      rel.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
    std::map<std::string, std::vector<std::string>> valuation;
    for (const auto& [var, arr] : j.value("val", nlohmann::json::object()).items())
      valuation[var] = arr.get<std::vector<std::string>>();
    return make(std::move(worlds), rel, valuation);
  } catch (const nlohmann::json::exception& e) {
    throw ModelFormatError(std::string("bad model JSON: ") + e.what());
  }
}

std::string KripkeModel::to_json() const {
  nlohmann::ordered_json j;
  j["worlds"] = worlds;
  auto rel = nlohmann::ordered_json::array();
  for (int i = 0; i < size(); ++i)
    for (int k = 0; k < size(); ++k)
      if (edge(i, k)) rel.push_back({worlds[i], worlds[k]});
  j["rel"] = rel;
  auto v = nlohmann::ordered_json::object();
  for (const auto& [var, mask] : val) {
    auto arr = nlohmann::ordered_json::array();
    for (int i = 0; i < size(); ++i)
      if ((mask >> i) & 1) arr.push_back(worlds[i]);
    v[var] = arr;
  }
  j["val"] = v;
  return j.dump();
}

bool frame_ok(const std::vector<std::uint64_t>& succ, int n, FrameClass fc) {
  switch (fc) {
    case FrameClass::All:
      return true;
    case FrameClass::Euclidean:
      // xRy and xRz imply yRz: every successor of x must see all of them.
      for (int x = 0; x < n; ++x) {
        std::uint64_t s = succ[x];
        for (int y = 0; y < n; ++y)
          if ((s >> y) & 1)
            if (s & ~succ[y]) return false;
      }
      return true;
    case FrameClass::TransitiveIrreflexive:
      for (int x = 0; x < n; ++x) {
        if ((succ[x] >> x) & 1) return false;
        std::uint64_t s = succ[x];
        for (int y = 0; y < n; ++y)
          if ((s >> y) & 1)
            if (succ[y] & ~s) return false;  // successors of y must be successors of x
      }
      return true;
  }
  return false;
}

std::optional<FrameViolation> frame_violation(const KripkeModel& m, FrameClass fc) {
  int n = m.size();
  switch (fc) {
    case FrameClass::All:
      return std::nullopt;
    case FrameClass::Euclidean:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            if (m.edge(x, y) && m.edge(x, z) && !m.edge(y, z))
              return FrameViolation{{m.worlds[x], m.worlds[y], m.worlds[z]},
                                    "xRy and xRz but not yRz"};
      return std::nullopt;
    case FrameClass::TransitiveIrreflexive:
      for (int x = 0; x < n; ++x)
        if (m.edge(x, x)) return FrameViolation{{m.worlds[x]}, "xRx (reflexive point)"};
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            if (m.edge(x, y) && m.edge(y, z) && !m.edge(x, z))
              return FrameViolation{{m.worlds[x], m.worlds[y], m.worlds[z]},
                                    "xRy and yRz but not xRz"};
      return std::nullopt;
  }
  return std::nullopt;
}

bool frame_has_property(const KripkeModel& m, FrameClass fc) {
  return !frame_violation(m, fc).has_value();
}

}  // namespace modal

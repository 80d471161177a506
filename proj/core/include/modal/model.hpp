#pragma once

// Finite Kripke models over at most 64 worlds. Relations and valuations are
// stored as successor / truth bitmasks indexed by world position, which keeps
// the enumeration oracles cheap.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modal/error.hpp"

namespace modal {

inline constexpr int kMaxWorlds = 64;

enum class FrameClass { All, Euclidean, TransitiveIrreflexive };

std::string to_string(FrameClass fc);
FrameClass frame_class_from_string(std::string_view s);  // "all"|"euclidean"|"ti"

struct KripkeModel {
  std::vector<std::string> worlds;       // ordered, unique
  std::vector<std::uint64_t> succ;       // succ[i] = successor mask of world i
  std::map<std::string, std::uint64_t> val;  // variable -> truth mask

  int size() const { return static_cast<int>(worlds.size()); }
  std::uint64_t full_mask() const {
    int n = size();
    return n >= 64 ? ~0ull : (1ull << n) - 1;
  }
  int index_of(std::string_view world) const;  // throws UnknownWorldError
  bool edge(int i, int j) const { return (succ[i] >> j) & 1; }

  // Builds and validates a model from named parts. Rejects duplicate worlds,
  // duplicate relation pairs and references to unknown worlds.
  static KripkeModel make(std::vector<std::string> worlds,
                          const std::vector<std::pair<std::string, std::string>>& rel,
                          const std::map<std::string, std::vector<std::string>>& valuation);

  // JSON wire format:
  //   {"worlds": ["w","u"], "rel": [["w","u"]], "val": {"p": ["w"]}}
  static KripkeModel from_json(const std::string& text);
  std::string to_json() const;
};

// Violation of a universally quantified frame condition.
struct FrameViolation {
  std::vector<std::string> worlds;  // the offending tuple
  std::string condition;
};

// nullopt when the frame has the property; otherwise a witness tuple.
std::optional<FrameViolation> frame_violation(const KripkeModel& m, FrameClass fc);
bool frame_has_property(const KripkeModel& m, FrameClass fc);

// Mask-level frame tests shared with the enumeration loops.
bool frame_ok(const std::vector<std::uint64_t>& succ, int n, FrameClass fc);

}  // namespace modal

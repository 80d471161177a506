#pragma once

// Satisfaction (standard and the non-standard diamond clause), bounded
// validity and bounded consequence by exhaustive enumeration of small models.
// Enumeration verdicts are bounded: "valid up to n worlds", not validity
// outright. Callers that need more lean on finite-model-property arguments.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modal/formula.hpp"
#include "modal/model.hpp"

namespace modal {

enum class Semantics { Standard, NonStandard };

// Enumeration budget, counted in units of one relation candidate scanned or
// one model evaluated. The default comes from the MODAL_BUDGET environment
// variable when set. Exceeding the budget throws ResourceLimitError.
struct Budget {
  std::uint64_t limit;
  mutable std::uint64_t used = 0;

  Budget() : limit(default_limit()) {}
  explicit Budget(std::uint64_t lim) : limit(lim) {}

  void charge(std::uint64_t n = 1) const {
    used += n;
    if (used > limit)
      throw ResourceLimitError("enumeration budget exceeded (" + std::to_string(limit) +
                               " units; raise MODAL_BUDGET to go further)");
  }
  static std::uint64_t default_limit();
};

// Truth mask of `f` over all worlds of `m`.
std::uint64_t eval_mask(const KripkeModel& m, const Formula& f, Semantics sem);

bool satisfies(const KripkeModel& m, std::string_view world, const Formula& f);
// Non-standard clause: dia g holds at w iff g is a negation ~h and some
// successor of w falsifies h. Box (if present) keeps the standard clause.
bool satisfies_nonstandard(const KripkeModel& m, std::string_view world, const Formula& f);

bool globally_true(const KripkeModel& m, const Formula& f, Semantics sem);

struct Countermodel {
  KripkeModel model;
  std::string world;
};

struct ValidityResult {
  bool valid = false;
  std::optional<Countermodel> counter;  // set when !valid
  std::uint64_t models_checked = 0;
  int max_worlds = 0;
};

// Enumerates every model over frames of class `fc` with at most `max_worlds`
// worlds and all valuations of vars(f); returns the first counter-model in
// enumeration order (fewest worlds first) or a bounded-validity verdict.
ValidityResult valid_up_to(const Formula& f, int max_worlds, FrameClass fc, Semantics sem,
                           const Budget& budget = Budget());

enum class ConsequenceMode { Local, Global };

struct ConsequenceResult {
  bool holds = false;
  std::optional<Countermodel> counter;  // local: witness world; global: world where f fails
  std::uint64_t models_checked = 0;
  int max_worlds = 0;
};

// Local mode: no model with <= n worlds has a world satisfying all of gamma
// but not f. Global mode: no model with <= n worlds makes gamma globally true
// while f fails somewhere. Standard semantics, all frames.
ConsequenceResult consequence_check(const std::vector<Formula>& gamma, const Formula& f,
                                    ConsequenceMode mode, int max_worlds,
                                    const Budget& budget = Budget());

}  // namespace modal

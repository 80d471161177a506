#include "modal/semantics.hpp"

#include <cstdlib>

namespace modal {

std::uint64_t Budget::default_limit() {
  static const std::uint64_t lim = [] {
    if (const char* env = std::getenv("MODAL_BUDGET")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
    }
    return static_cast<std::uint64_t>(50'000'000);
  }();
  return lim;
}

std::uint64_t eval_mask(const KripkeModel& m, const Formula& f, Semantics sem) {
  const std::uint64_t full = m.full_mask();
  const int n = m.size();
  switch (f.kind()) {
    case Kind::Var: {
      auto it = m.val.find(f.name());
      return it == m.val.end() ? 0 : it->second;
    }
    case Kind::Neg:
      return full & ~eval_mask(m, f.child(), sem);
    case Kind::Impl: {
      std::uint64_t a = eval_mask(m, f.lhs(), sem);
      std::uint64_t b = eval_mask(m, f.rhs(), sem);
      return full & (~a | b);
    }
    case Kind::Box: {
      std::uint64_t c = eval_mask(m, f.child(), sem);
      std::uint64_t out = 0;
      for (int i = 0; i < n; ++i)
        if ((m.succ[i] & ~c & full) == 0) out |= 1ull << i;
      return out;
    }
    case Kind::Dia: {
      if (sem == Semantics::NonStandard) {
        // dia g is satisfiable only when g is syntactically a negation.
        if (!f.child().is(Kind::Neg)) return 0;
        std::uint64_t h = eval_mask(m, f.child().child(), sem);
        std::uint64_t falsified = full & ~h;
        std::uint64_t out = 0;
        for (int i = 0; i < n; ++i)
          if (m.succ[i] & falsified) out |= 1ull << i;
        return out;
      }
      std::uint64_t c = eval_mask(m, f.child(), sem);
      std::uint64_t out = 0;
      for (int i = 0; i < n; ++i)
        if (m.succ[i] & c) out |= 1ull << i;
      return out;
    }
  }
  throw Error("corrupt formula node");
}

bool satisfies(const KripkeModel& m, std::string_view world, const Formula& f) {
  int i = m.index_of(world);
  return (eval_mask(m, f, Semantics::Standard) >> i) & 1;
}

bool satisfies_nonstandard(const KripkeModel& m, std::string_view world, const Formula& f) {
  int i = m.index_of(world);
  return (eval_mask(m, f, Semantics::NonStandard) >> i) & 1;
}

bool globally_true(const KripkeModel& m, const Formula& f, Semantics sem) {
  return eval_mask(m, f, sem) == m.full_mask();
}

namespace {

std::vector<std::string> synth_worlds(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back("w" + std::to_string(i));
  return out;
}

// Enumerates all models with exactly n worlds over the given variables and
// frame class, in a fixed deterministic order. Stops early when fn returns
// true; returns whether fn did.
template <typename Fn>
bool for_each_model(int n, const std::vector<std::string>& vars, FrameClass fc,
                    const Budget& budget, std::uint64_t& models_checked, Fn&& fn) {
  const int bits = n * n;
  const int vbits = n * static_cast<int>(vars.size());
  KripkeModel m;
  m.worlds = synth_worlds(n);
  m.succ.assign(n, 0);
  for (const auto& v : vars) m.val[v] = 0;

  for (std::uint64_t rel = 0; rel < (1ull << bits); ++rel) {
    budget.charge();
    for (int i = 0; i < n; ++i) m.succ[i] = (rel >> (i * n)) & ((1ull << n) - 1);
    if (!frame_ok(m.succ, n, fc)) continue;
    for (std::uint64_t vv = 0; vv < (1ull << vbits); ++vv) {
      budget.charge();
      ++models_checked;
      int off = 0;
      for (const auto& v : vars) {
        m.val[v] = (vv >> off) & ((1ull << n) - 1);
        off += n;
      }
      if (fn(m)) return true;
    }
  }
  return false;
}

}  // namespace

ValidityResult valid_up_to(const Formula& f, int max_worlds, FrameClass fc, Semantics sem,
                           const Budget& budget) {
  if (max_worlds < 1 || max_worlds > 6)
    throw Error("valid_up_to: max_worlds must be between 1 and 6");
  std::vector<std::string> vars(variables(f).begin(), variables(f).end());
  ValidityResult res;
  res.max_worlds = max_worlds;
  for (int n = 1; n <= max_worlds; ++n) {
    bool found = for_each_model(n, vars, fc, budget, res.models_checked,
                                [&](const KripkeModel& m) {
                                  std::uint64_t mask = eval_mask(m, f, sem);
                                  if (mask == m.full_mask()) return false;
                                  int w = 0;
                                  while ((mask >> w) & 1) ++w;
                                  res.counter = Countermodel{m, m.worlds[w]};
                                  return true;
                                });
    if (found) {
      res.valid = false;
      return res;
    }
  }
  res.valid = true;
  return res;
}

ConsequenceResult consequence_check(const std::vector<Formula>& gamma, const Formula& f,
                                    ConsequenceMode mode, int max_worlds,
                                    const Budget& budget) {
  if (max_worlds < 1 || max_worlds > 6)
    throw Error("consequence_check: max_worlds must be between 1 and 6");
  std::set<std::string> varset = variables(f);
  for (const Formula& g : gamma) {
    auto vs = variables(g);
    varset.insert(vs.begin(), vs.end());
  }
  std::vector<std::string> vars(varset.begin(), varset.end());
  ConsequenceResult res;
  res.max_worlds = max_worlds;
  for (int n = 1; n <= max_worlds; ++n) {
    bool found = for_each_model(n, vars, FrameClass::All, budget, res.models_checked,
                                [&](const KripkeModel& m) {
                                  std::uint64_t fm = eval_mask(m, f, Semantics::Standard);
                                  if (mode == ConsequenceMode::Local) {
                                    std::uint64_t all = m.full_mask();
                                    for (const Formula& g : gamma)
                                      all &= eval_mask(m, g, Semantics::Standard);
                                    std::uint64_t bad = all & ~fm & m.full_mask();
                                    if (!bad) return false;
                                    int w = 0;
                                    while (!((bad >> w) & 1)) ++w;
                                    res.counter = Countermodel{m, m.worlds[w]};
                                    return true;
                                  }
                                  for (const Formula& g : gamma)
                                    if (eval_mask(m, g, Semantics::Standard) != m.full_mask())
                                      return false;
                                  if (fm == m.full_mask()) return false;
                                  int w = 0;
                                  while ((fm >> w) & 1) ++w;
                                  res.counter = Countermodel{m, m.worlds[w]};
                                  return true;
                                });
    if (found) {
      res.holds = false;
      return res;
    }
  }
  res.holds = true;
  return res;
}

}  // namespace modal

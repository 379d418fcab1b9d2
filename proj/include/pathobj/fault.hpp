#pragma once

#include <atomic>

// Deliberate rule corruptions used to prove the law suites are sensitive.
// Never enabled outside tests and the CLI's --mutate flag.
namespace pathobj::fault {

enum Kind : unsigned {
  none = 0,
  plus_mirror = 1u << 0,   // + segments listed ascending instead of descending
  eta_keep_first = 1u << 1,  // contraction forgets to drop the first segment
  pi_order = 1u << 2,      // path-fibration lift composes its paths the wrong way round
};

inline std::atomic<unsigned>& active() {
  static std::atomic<unsigned> bits{none};
  return bits;
}

inline bool on(Kind k) { return (active().load(std::memory_order_relaxed) & k) != 0; }

class Scoped {
 public:
  explicit Scoped(unsigned kinds) : saved_(active().exchange(kinds)) {}
  ~Scoped() { active().store(saved_); }
  Scoped(const Scoped&) = delete;
  Scoped& operator=(const Scoped&) = delete;

 private:
  unsigned saved_;
};

}  // namespace pathobj::fault

#ifndef QALLOC_CHORES_HPP
#define QALLOC_CHORES_HPP

#include <vector>

#include "qalloc/instance.hpp"

namespace qalloc {

/// Balanced binary chores: k_i copies per agent matched to its zero-disutility
/// chores; saturation iff ESC 0 is reachable.
SolveReport balanced_esc_binary(const Instance& instance);

/// Minimum balanced ESC for arbitrary disutilities (threshold search).
SolveReport balanced_esc(const Instance& instance);

/// A weighted set in the set-cover view of tau = 0 chores: agent `agent`
/// taking its `length` mildest chores, at the cost of the worst of them.
struct CoverCandidate {
  int agent = 0;
  int length = 0;
  std::vector<int> items;
  Value weight = 0;
};

/// All n*m candidates, agent-major then by length. Ties between equal
/// disutilities go to the lower item index.
std::vector<CoverCandidate> cover_candidates(const Instance& instance);

/// USC for tau = 0 chores through greedy weighted set cover: repeatedly take
/// the candidate minimising weight per newly covered chore (ties by agent,
/// then length). Each agent keeps only its longest chosen prefix, and a chore
/// goes to the first chosen agent covering it.
/// USC(A) <= (ln m + 1) * OPT.
SolveReport usc_tau0_setcover(const Instance& instance);

/// tau = 0 binary chores: ESC 0 iff no chore is a universal bad (disutility 1
/// for everyone); each chore goes to the first agent not minding it.
SolveReport esc_tau0_binary(const Instance& instance);
/// tau = 1 binary chores: ESC 0 iff some agent has a zero-disutility chore;
/// that agent takes everything.
SolveReport esc_tau1_binary(const Instance& instance);

SolveReport esc_tau0(const Instance& instance);
SolveReport esc_tau1(const Instance& instance);

}  // namespace qalloc

#endif  // QALLOC_CHORES_HPP

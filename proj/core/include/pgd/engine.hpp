#ifndef PGD_ENGINE_HPP
#define PGD_ENGINE_HPP

#include <optional>

#include "pgd/errors.hpp"
#include "pgd/types.hpp"

/*
    Round engine. Both round kinds are simultaneous: every swap is computed
    against the frozen pre-round state and the whole batch is applied as one
    permutation. Disjointness of the swapped locations is asserted, not
    assumed; a violation throws EngineError and means the state is corrupt.
*/

namespace pgd {

struct RoundOutcome {
    TableState state;
    std::vector<GameEvent> events; // in declared player order
    bool changed = false;          // == !events.empty()
};

// Name of a hand: the picture of its spot-0 spade, or of its leftmost
// spade when the hand is not yet shaped. Spadeless hands are unnamed.
std::optional<int> hand_name(const TableState& state, int player);

// Every player whose hand holds a spade arranges a spade leftmost by
// swapping the leftmost spade with the spot-0 card. In-hand swaps only.
RoundOutcome shape_up_round(const TableState& state);

// Smallest spot j >= 1 holding a spade, for a shaped named hand.
// Throws UnshapedHand if a spade exists but spot 0 is not a spade.
std::optional<int> leftmost_bad_spade(const TableState& state, int player);

// The card a player asks for while shipping out: picture = hand name,
// suit = the suit naming the bad spade's spot.
std::optional<Card> requested_card(const TableState& state, int player);

// Every player with a bad spade exchanges their leftmost bad spade for
// their requested card, wherever it sits (other hand, own hand, or deck).
// Requires every hand to be shaped.
RoundOutcome ship_out_round(const TableState& state);

// True iff no spade occupies any spot j >= 1; both rounds are then no-ops.
bool is_stable(const TableState& state);

// Generous versus the per-player churn bound; overrunning it is a bug.
constexpr int default_max_round_pairs(int n_suits, int num_players) {
    return 2 * n_suits * num_players + 2;
}

struct RunResult {
    TableState state;
    GameTrace trace;
    int round_pairs_used = 0; // includes the final silent pair
};

// Alternates shape-up and ship-out rounds until a whole pair emits no
// events. Records every round of each eventful pair; the terminating
// silent pair leaves no rounds in the trace.
RunResult run_to_stability(const TableState& initial, int max_round_pairs);

// Reads the non-left spots of a stable table as an injection
// A x (N-1) -> B x (N-1): (p, j-1) -> card at slot (p, j).
InjectionMap extract(const TableState& state);

} // namespace pgd

#endif

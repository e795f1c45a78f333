#ifndef PGD_DIVISION_HPP
#define PGD_DIVISION_HPP

#include <cstdint>

#include "pgd/types.hpp"

/*
    Chains game runs across decreasing suit counts: one run of the game
    turns an injection A x k -> B x k into one for k-1; iterating down to
    k = 1 and dropping the index yields a canonical injection A -> B.
*/

namespace pgd {

struct StepOutcome {
    InjectionMap next; // n_indices = k-1
    GameTrace trace;
    int round_pairs_used = 0;
};

// One full game: deal f onto a fresh table over B x k, run to stability,
// extract. num_pictures fixes the card universe; f alone does not, since
// pictures outside f's image still populate the deck.
// max_round_pairs <= 0 selects the default cap.
StepOutcome divide_once(const InjectionMap& f, int num_pictures, int max_round_pairs = 0);

struct DivisionStep {
    int n_suits = 0;          // suit count this step was played at
    int round_pairs_used = 0;
    std::uint64_t trace_digest = 0;

    friend bool operator==(const DivisionStep&, const DivisionStep&) = default;
};

struct DivisionReport {
    std::vector<DivisionStep> steps; // exactly N-1 entries
    std::vector<int> result;         // result[player] = picture

    friend bool operator==(const DivisionReport&, const DivisionReport&) = default;
};

struct DivisionOutcome {
    DivisionReport report;
    std::vector<GameTrace> step_traces; // one per step, same order as report.steps
};

// Applies divide_once until n_indices = 1, then strips the index. The
// result is an injective map player -> picture.
DivisionOutcome divide(const Instance& inst, int max_round_pairs = 0);

// Stable 64-bit FNV-1a digest of a trace with names resolved through the
// given instance. Identical across platforms and runs.
std::uint64_t trace_digest(const GameTrace& trace, const Instance& naming);

} // namespace pgd

#endif

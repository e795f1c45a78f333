#ifndef PGD_IO_HPP
#define PGD_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "pgd/division.hpp"
#include "pgd/errors.hpp"
#include "pgd/types.hpp"

/*
    File formats, all JSON with sorted keys so output is byte-stable.

    Instance: one document
      {"deal": {"<player>": [["<picture>", suit], ...]},
       "n_suits": N, "pictures": [...], "players": [...]}

    Trace: one object per line
      {"events": [...], "phase": "shape_up"|"ship_out", "round": k, "step": s}
    where step counts division steps (0 for a single run) and round is the
    recorded round index within the step.

    Result map: one flat object {"<player>": "<picture>", ...}.

    Suits are always integers 0..N-1 in files; suit names are display sugar
    only (see suit_display).
*/

namespace pgd::io {

// Instance documents. parse_instance accepts any field order and leaves
// validation to validate_instance.
InstanceData parse_instance(const std::string& json_text);
std::string serialize_instance(const Instance& inst);

// Trace lines. serialize_trace emits one line per recorded round;
// parse_traces groups lines by step and checks round numbering and phase
// alternation within each step.
std::string serialize_trace(const GameTrace& trace, const Instance& naming, int step = 0);
std::vector<GameTrace> parse_traces(const std::string& text, const Instance& naming);

// Result maps (player -> picture).
std::string serialize_result(const std::vector<int>& assignment, const Instance& naming);
std::vector<std::pair<std::string, std::string>> parse_result(const std::string& json_text);

// Division report, including per-step trace digests as hex strings.
std::string serialize_report(const DivisionReport& report, const Instance& naming);

// "spades"/"hearts"/"diamonds"/"clubs" when n_suits == 4, the bare integer
// otherwise. Human-readable output only, never files.
std::string suit_display(int suit, int n_suits);
std::string card_display(Card c, const Instance& naming);

} // namespace pgd::io

#endif

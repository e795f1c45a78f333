#include "pgd/division.hpp"

#include <stdexcept>

#include "pgd/core.hpp"
#include "pgd/engine.hpp"

namespace pgd {

namespace {

struct Fnv1a {
    std::uint64_t h = 0xcbf29ce484222325ULL;

    void byte(std::uint8_t b) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    void u32(std::uint32_t v) {
        for (int i = 0; i < 4; ++i) byte(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    void str(const std::string& s) {
        u32(static_cast<std::uint32_t>(s.size()));
        for (char c : s) byte(static_cast<std::uint8_t>(c));
    }
};

void hash_card(Fnv1a& h, Card c, const Instance& naming) {
    h.str(naming.pictures.at(c.picture));
    h.u32(static_cast<std::uint32_t>(c.suit));
}

} // namespace

std::uint64_t trace_digest(const GameTrace& trace, const Instance& naming) {
    Fnv1a h;
    h.u32(static_cast<std::uint32_t>(trace.rounds.size()));
    for (const auto& round : trace.rounds) {
        h.u32(static_cast<std::uint32_t>(round.round_index));
        h.byte(round.phase == Phase::ShapeUp ? 0 : 1);
        h.u32(static_cast<std::uint32_t>(round.events.size()));
        for (const auto& event : round.events) {
            if (const auto* su = std::get_if<ShapeUpEvent>(&event)) {
                h.byte(0);
                h.str(naming.players.at(su->player));
                h.u32(static_cast<std::uint32_t>(su->from_spot));
            } else {
                const auto& so = std::get<ShipOutEvent>(event);
                h.byte(1);
                h.str(naming.players.at(so.player));
                h.u32(static_cast<std::uint32_t>(so.spot));
                hash_card(h, so.bad_spade, naming);
                hash_card(h, so.requested, naming);
                if (so.source.kind == LocKind::Deck) {
                    h.byte(0);
                } else {
                    h.byte(1);
                    h.str(naming.players.at(so.source.player));
                    h.u32(static_cast<std::uint32_t>(so.source.spot));
                }
            }
        }
    }
    return h.h;
}

StepOutcome divide_once(const InjectionMap& f, int num_pictures, int max_round_pairs) {
    if (f.n_indices < 2)
        throw std::invalid_argument("divide_once requires n_indices >= 2");
    TableState table = new_table(f, num_pictures);
    int cap = max_round_pairs > 0 ? max_round_pairs
                                  : default_max_round_pairs(f.n_indices, f.num_players());
    RunResult run = run_to_stability(table, cap);
    return {extract(run.state), std::move(run.trace), run.round_pairs_used};
}

DivisionOutcome divide(const Instance& inst, int max_round_pairs) {
    DivisionOutcome out;
    InjectionMap f = inst.deal;
    while (f.n_indices >= 2) {
        StepOutcome step = divide_once(f, inst.num_pictures(), max_round_pairs);
        out.report.steps.push_back(
            {f.n_indices, step.round_pairs_used, trace_digest(step.trace, inst)});
        out.step_traces.push_back(std::move(step.trace));
        f = std::move(step.next);
    }
    out.report.result.resize(f.num_players());
    for (int p = 0; p < f.num_players(); ++p) out.report.result[p] = f.entries[p][0].picture;
    return out;
}

} // namespace pgd

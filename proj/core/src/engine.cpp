#include "pgd/engine.hpp"

#include <string>
#include <unordered_map>
#include <utility>

namespace pgd {

namespace {

void require_player(const TableState& state, int player) {
    if (player < 0 || player >= state.num_players())
        throw EngineError(EngineError::Kind::UnknownPlayer,
                          "no player with index " + std::to_string(player));
}

std::string card_text(Card c) {
    return "(picture " + std::to_string(c.picture) + ", suit " + std::to_string(c.suit) + ")";
}

// Exchange the card at hand slot (player, spot) with `incoming`, which sits
// at `src`. Keeps `where` coherent.
void apply_exchange(TableState& s, int player, int spot, Card incoming, Location src) {
    Card outgoing = s.hands[player][spot];
    s.hands[player][spot] = incoming;
    s.where[card_index(incoming, s.n_suits)] = Location::hand(player, spot);
    if (src.kind == LocKind::Hand) s.hands[src.player][src.spot] = outgoing;
    s.where[card_index(outgoing, s.n_suits)] = src;
}

} // namespace

std::optional<int> hand_name(const TableState& state, int player) {
    require_player(state, player);
    const auto& hand = state.hands[player];
    int lm = detail::leftmost_spade(hand, state.n_suits);
    if (lm < 0) return std::nullopt;
    return hand[lm].picture;
}

RoundOutcome shape_up_round(const TableState& state) {
    RoundOutcome out{state, {}, false};
    for (int p = 0; p < state.num_players(); ++p) {
        auto& hand = out.state.hands[p];
        if (is_spade(hand[0], state.n_suits)) continue;
        int lm = detail::leftmost_spade(hand, state.n_suits);
        if (lm < 0) continue;
        // in-hand swap: leftmost spade into spot 0
        std::swap(hand[0], hand[lm]);
        out.state.where[card_index(hand[0], state.n_suits)] = Location::hand(p, 0);
        out.state.where[card_index(hand[lm], state.n_suits)] = Location::hand(p, lm);
        out.events.push_back(ShapeUpEvent{p, lm});
    }
    out.changed = !out.events.empty();
    return out;
}

std::optional<int> leftmost_bad_spade(const TableState& state, int player) {
    require_player(state, player);
    const auto& hand = state.hands[player];
    int lm = detail::leftmost_spade(hand, state.n_suits);
    if (lm < 0) return std::nullopt; // unnamed hand
    if (lm != 0)
        throw EngineError(EngineError::Kind::UnshapedHand,
                          "player " + std::to_string(player) +
                              " holds a spade at spot " + std::to_string(lm) +
                              " but spot 0 is not a spade");
    for (int j = 1; j < state.n_suits; ++j)
        if (is_spade(hand[j], state.n_suits)) return j;
    return std::nullopt;
}

std::optional<Card> requested_card(const TableState& state, int player) {
    auto spot = leftmost_bad_spade(state, player);
    if (!spot) return std::nullopt;
    return Card{state.hands[player][0].picture, suit_of_spot(*spot, state.n_suits)};
}

RoundOutcome ship_out_round(const TableState& state) {
    struct Pending {
        int player;
        int spot;
        Card bad;
        Card requested;
        Location source;
    };

    // freeze all swaps against the pre-round state
    std::vector<Pending> swaps;
    std::unordered_map<int, int> asked_by; // card_index -> player
    for (int p = 0; p < state.num_players(); ++p) {
        auto spot = leftmost_bad_spade(state, p);
        if (!spot) continue;
        Card bad = state.hands[p][*spot];
        Card req{state.hands[p][0].picture, suit_of_spot(*spot, state.n_suits)};
        auto [it, fresh] = asked_by.emplace(card_index(req, state.n_suits), p);
        if (!fresh)
            throw EngineError(EngineError::Kind::RequestConflict,
                              "players " + std::to_string(it->second) + " and " +
                                  std::to_string(p) + " both ask for " + card_text(req));
        Location src = state.where[card_index(req, state.n_suits)];
        Card found = src.kind == LocKind::Deck ? req : state.hands[src.player][src.spot];
        if (src.kind == LocKind::Hand && found != req)
            throw EngineError(EngineError::Kind::RequestedCardMissing,
                              "card " + card_text(req) + " not at its recorded location");
        if (is_spade(req, state.n_suits))
            throw EngineError(EngineError::Kind::RequestedCardMissing,
                              "request for a spade " + card_text(req) +
                                  "; swap set would not be disjoint");
        swaps.push_back({p, *spot, bad, req, src});
    }

    // one simultaneous permutation: sources hold non-spades, shipped slots
    // hold spades, so no two swaps touch the same location
    RoundOutcome out{state, {}, false};
    for (const auto& sw : swaps) {
        apply_exchange(out.state, sw.player, sw.spot, sw.requested, sw.source);
        out.events.push_back(ShipOutEvent{sw.player, sw.spot, sw.bad, sw.requested, sw.source});
    }
    out.changed = !out.events.empty();
    return out;
}

bool is_stable(const TableState& state) {
    for (const auto& hand : state.hands)
        for (int j = 1; j < state.n_suits; ++j)
            if (is_spade(hand[j], state.n_suits)) return false;
    return true;
}

RunResult run_to_stability(const TableState& initial, int max_round_pairs) {
    RunResult r{initial, {}, 0};
    for (int pair = 0; pair < max_round_pairs; ++pair) {
        RoundOutcome su = shape_up_round(r.state);
        RoundOutcome so = ship_out_round(su.state);
        ++r.round_pairs_used;
        r.state = std::move(so.state);
        if (su.events.empty() && so.events.empty()) return r;
        r.trace.rounds.push_back({static_cast<int>(r.trace.rounds.size()), Phase::ShapeUp,
                                  std::move(su.events)});
        r.trace.rounds.push_back({static_cast<int>(r.trace.rounds.size()), Phase::ShipOut,
                                  std::move(so.events)});
    }
    throw EngineError(EngineError::Kind::RoundLimitExceeded,
                      "no fixed point within " + std::to_string(max_round_pairs) +
                          " round pairs");
}

InjectionMap extract(const TableState& state) {
    if (state.n_suits < 2)
        throw std::invalid_argument("extract requires n_suits >= 2");
    if (!is_stable(state))
        throw EngineError(EngineError::Kind::NotStable,
                          "extract called on an unstable table");
    InjectionMap out;
    out.n_indices = state.n_suits - 1;
    out.entries.resize(state.num_players());
    for (int p = 0; p < state.num_players(); ++p) {
        out.entries[p].resize(out.n_indices);
        for (int j = 1; j < state.n_suits; ++j) out.entries[p][j - 1] = state.hands[p][j];
    }
    return out;
}

} // namespace pgd

#ifndef PGD_TYPES_HPP
#define PGD_TYPES_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

/*
    Domain types for the pan-galactic division game.

    The card universe is B x N: every picture in every suit. Suits are
    0..N-1 and suit N-1 is the spade suit. Each player faces N spots,
    0 = leftmost; spot j is named by suit N-1-j, so spot 0 is the spades
    spot. Players and pictures are interned: the engine works with dense
    indices into the declared lists of an Instance, and only the io layer
    touches the string names.
*/

namespace pgd {

struct Card {
    std::int32_t picture = 0; // index into the owning instance's pictures
    std::int32_t suit = 0;

    friend constexpr bool operator==(const Card&, const Card&) = default;
    friend constexpr auto operator<=>(const Card&, const Card&) = default;
};

constexpr int spade_suit(int n_suits) { return n_suits - 1; }

constexpr bool is_spade(Card c, int n_suits) { return c.suit == n_suits - 1; }

// Spot j is named by suit N-1-j (left to right: spades, hearts, ...).
constexpr int suit_of_spot(int spot, int n_suits) { return n_suits - 1 - spot; }
constexpr int spot_of_suit(int suit, int n_suits) { return n_suits - 1 - suit; }

// Dense index of a card within the B x N universe.
constexpr int card_index(Card c, int n_suits) { return c.picture * n_suits + c.suit; }

constexpr Card card_from_index(int index, int n_suits) {
    return Card{static_cast<std::int32_t>(index / n_suits),
                static_cast<std::int32_t>(index % n_suits)};
}

// An explicit finite injection (player, index) -> card with index in
// 0..n_indices-1. Total by construction: entries[p] has n_indices slots.
struct InjectionMap {
    int n_indices = 0;
    std::vector<std::vector<Card>> entries; // entries[player][index]

    int num_players() const { return static_cast<int>(entries.size()); }

    friend bool operator==(const InjectionMap&, const InjectionMap&) = default;
};

// Unchecked instance, as read from a file or assembled by hand. Deal rows
// keep their string names and may arrive in any order; validate_instance
// turns this into a dense Instance or reports the first violation.
struct InstanceData {
    int n_suits = 0;
    std::vector<std::string> players;
    std::vector<std::string> pictures;
    // one row per player: (player, [(picture, suit); n_suits])
    std::vector<std::pair<std::string, std::vector<std::pair<std::string, int>>>> deal;
};

// Validated problem statement: the deal is a total injective map
// players x N -> pictures x N.
struct Instance {
    std::vector<std::string> players;
    std::vector<std::string> pictures;
    InjectionMap deal; // deal.n_indices is the instance's N

    int n_suits() const { return deal.n_indices; }
    int num_players() const { return static_cast<int>(players.size()); }
    int num_pictures() const { return static_cast<int>(pictures.size()); }

    std::optional<int> player_index(std::string_view name) const {
        for (std::size_t i = 0; i < players.size(); ++i)
            if (players[i] == name) return static_cast<int>(i);
        return std::nullopt;
    }

    std::optional<int> picture_index(std::string_view name) const {
        for (std::size_t i = 0; i < pictures.size(); ++i)
            if (pictures[i] == name) return static_cast<int>(i);
        return std::nullopt;
    }

    friend bool operator==(const Instance&, const Instance&) = default;
};

enum class LocKind : std::uint8_t { Hand, Deck };

struct Location {
    LocKind kind = LocKind::Deck;
    std::int32_t player = -1;
    std::int32_t spot = -1;

    static constexpr Location deck() { return {}; }
    static constexpr Location hand(int player, int spot) {
        return {LocKind::Hand, static_cast<std::int32_t>(player),
                static_cast<std::int32_t>(spot)};
    }

    friend constexpr bool operator==(const Location&, const Location&) = default;
};

// Full game position: every player's N-spot hand plus the undealt deck.
// `where` covers the whole B x N universe by card_index, so the deck is
// exactly the set of cards whose location is Deck; it carries no order.
struct TableState {
    int n_suits = 0;
    int num_pictures = 0;
    std::vector<std::vector<Card>> hands; // hands[player][spot]
    std::vector<Location> where;          // card_index -> location

    int num_players() const { return static_cast<int>(hands.size()); }
    int num_cards() const { return num_pictures * n_suits; }

    bool in_deck(Card c) const { return where[card_index(c, n_suits)].kind == LocKind::Deck; }

    // Deck contents in ascending card_index order (for inspection only).
    std::vector<Card> deck_cards() const {
        std::vector<Card> out;
        for (int id = 0; id < num_cards(); ++id)
            if (where[id].kind == LocKind::Deck) out.push_back(card_from_index(id, n_suits));
        return out;
    }

    friend bool operator==(const TableState&, const TableState&) = default;
};

// --- trace types ---

struct ShapeUpEvent {
    int player = 0;
    int from_spot = 0; // where the leftmost spade sat before the swap

    friend bool operator==(const ShapeUpEvent&, const ShapeUpEvent&) = default;
};

struct ShipOutEvent {
    int player = 0;
    int spot = 0;    // spot of the leftmost bad spade
    Card bad_spade;  // the spade shipped out (suit N-1)
    Card requested;  // (hand name, suit of `spot`); never a spade
    Location source; // where `requested` sat before the swap

    friend bool operator==(const ShipOutEvent&, const ShipOutEvent&) = default;
};

using GameEvent = std::variant<ShapeUpEvent, ShipOutEvent>;

enum class Phase : std::uint8_t { ShapeUp, ShipOut };

struct TraceRound {
    int round_index = 0;
    Phase phase = Phase::ShapeUp;
    std::vector<GameEvent> events; // in declared player order

    friend bool operator==(const TraceRound&, const TraceRound&) = default;
};

// Ordered log of every recorded round. Phases alternate strictly starting
// with ShapeUp; the final silent round pair is not recorded.
struct GameTrace {
    std::vector<TraceRound> rounds;

    friend bool operator==(const GameTrace&, const GameTrace&) = default;
};

namespace detail {

// Smallest spot holding a spade, or -1.
inline int leftmost_spade(const std::vector<Card>& hand, int n_suits) {
    for (std::size_t j = 0; j < hand.size(); ++j)
        if (is_spade(hand[j], n_suits)) return static_cast<int>(j);
    return -1;
}

} // namespace detail

} // namespace pgd

#endif

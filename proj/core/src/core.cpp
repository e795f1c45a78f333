#include "pgd/core.hpp"

#include <unordered_map>

namespace pgd {

namespace {

std::string card_text(const std::string& picture, int suit) {
    return "(" + picture + ", " + std::to_string(suit) + ")";
}

} // namespace

Instance validate_instance(const InstanceData& data) {
    using Kind = ValidationError::Kind;

    if (data.n_suits < 1)
        throw ValidationError(Kind::SuitOutOfRange,
                              "n_suits must be at least 1, got " + std::to_string(data.n_suits));

    std::unordered_map<std::string, int> player_ix;
    for (std::size_t i = 0; i < data.players.size(); ++i) {
        if (!player_ix.emplace(data.players[i], static_cast<int>(i)).second)
            throw ValidationError(Kind::DuplicateId,
                                  "player '" + data.players[i] + "' declared twice");
    }
    std::unordered_map<std::string, int> picture_ix;
    for (std::size_t i = 0; i < data.pictures.size(); ++i) {
        if (!picture_ix.emplace(data.pictures[i], static_cast<int>(i)).second)
            throw ValidationError(Kind::DuplicateId,
                                  "picture '" + data.pictures[i] + "' declared twice");
    }

    const int n = data.n_suits;

    // index deal rows by player, rejecting strays and repeats up front
    std::vector<const std::vector<std::pair<std::string, int>>*> rows(data.players.size(),
                                                                      nullptr);
    for (const auto& [name, cards] : data.deal) {
        auto it = player_ix.find(name);
        if (it == player_ix.end())
            throw ValidationError(Kind::UnknownPlayer,
                                  "deal row for undeclared player '" + name + "'");
        if (rows[it->second] != nullptr)
            throw ValidationError(Kind::NotTotal,
                                  "player '" + name + "' has more than one deal row");
        rows[it->second] = &cards;
    }

    Instance inst;
    inst.players = data.players;
    inst.pictures = data.pictures;
    inst.deal.n_indices = n;
    inst.deal.entries.resize(data.players.size());

    // first violation in declared (player, index) order
    std::unordered_map<int, std::pair<int, int>> seen; // card_index -> (player, index)
    for (std::size_t p = 0; p < data.players.size(); ++p) {
        const auto& player = data.players[p];
        if (rows[p] == nullptr)
            throw ValidationError(Kind::NotTotal, "no deal row for player '" + player + "'");
        const auto& row = *rows[p];
        if (static_cast<int>(row.size()) != n)
            throw ValidationError(Kind::NotTotal,
                                  "player '" + player + "' has " + std::to_string(row.size()) +
                                      " cards, expected " + std::to_string(n));

        auto& hand = inst.deal.entries[p];
        hand.resize(n);
        for (int j = 0; j < n; ++j) {
            const auto& [picture, suit] = row[j];
            auto pit = picture_ix.find(picture);
            if (pit == picture_ix.end())
                throw ValidationError(Kind::UnknownPicture,
                                      "unknown picture in card " + card_text(picture, suit) +
                                          " at (" + player + ", " + std::to_string(j) + ")");
            if (suit < 0 || suit >= n)
                throw ValidationError(Kind::SuitOutOfRange,
                                      "suit out of range in card " + card_text(picture, suit) +
                                          " at (" + player + ", " + std::to_string(j) + ")");
            Card c{pit->second, suit};
            auto [sit, fresh] = seen.emplace(card_index(c, n),
                                             std::make_pair(static_cast<int>(p), j));
            if (!fresh) {
                auto [q, k] = sit->second;
                throw ValidationError(Kind::DuplicateImage,
                                      "card " + card_text(picture, suit) + " dealt to both (" +
                                          data.players[q] + ", " + std::to_string(k) +
                                          ") and (" + player + ", " + std::to_string(j) + ")");
            }
            hand[j] = c;
        }
    }

    return inst;
}

TableState new_table(const InjectionMap& deal, int num_pictures) {
    TableState s;
    s.n_suits = deal.n_indices;
    s.num_pictures = num_pictures;
    s.hands = deal.entries;
    s.where.assign(static_cast<std::size_t>(num_pictures) * deal.n_indices, Location::deck());
    for (int p = 0; p < s.num_players(); ++p)
        for (int j = 0; j < s.n_suits; ++j)
            s.where[card_index(s.hands[p][j], s.n_suits)] = Location::hand(p, j);
    return s;
}

TableState new_table(const Instance& inst) {
    return new_table(inst.deal, inst.num_pictures());
}

int quality(const TableState& state, int player) {
    if (player < 0 || player >= state.num_players())
        throw EngineError(EngineError::Kind::UnknownPlayer,
                          "no player with index " + std::to_string(player));
    const auto& hand = state.hands[player];
    int lm = detail::leftmost_spade(hand, state.n_suits);
    if (lm < 0) return 0; // unnamed
    int name = hand[lm].picture;
    int count = 0;
    for (int j = 0; j < state.n_suits; ++j)
        if (hand[j].picture == name && hand[j].suit == suit_of_spot(j, state.n_suits)) ++count;
    return count;
}

} // namespace pgd

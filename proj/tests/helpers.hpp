#ifndef PGD_TESTS_HELPERS_HPP
#define PGD_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include "pgd/core.hpp"
#include "pgd/types.hpp"

namespace pgdtest {

struct NamedCard {
    std::string picture;
    int suit;
};

// Builds an instance through the same validation path as file input.
inline pgd::Instance make_instance(std::vector<std::string> players,
                                   std::vector<std::string> pictures, int n_suits,
                                   std::vector<std::vector<NamedCard>> hands) {
    pgd::InstanceData data;
    data.n_suits = n_suits;
    data.players = std::move(players);
    data.pictures = std::move(pictures);
    for (std::size_t p = 0; p < hands.size(); ++p) {
        std::vector<std::pair<std::string, int>> row;
        for (const auto& nc : hands[p]) row.emplace_back(nc.picture, nc.suit);
        data.deal.emplace_back(data.players.at(p), std::move(row));
    }
    return pgd::validate_instance(data);
}

inline pgd::Card c(const pgd::Instance& inst, const std::string& picture, int suit) {
    return pgd::Card{*inst.picture_index(picture), suit};
}

// N=4 suits: clubs=0, diamonds=1, hearts=2, spades=3.
inline constexpr int kClubs = 0;
inline constexpr int kDiamonds = 1;
inline constexpr int kHearts = 2;
inline constexpr int kSpades = 3;

// Single player holding [Ape of clubs, Bolt of hearts, Chicken of spades,
// Two of spades]. Shaping up swaps the Chicken of spades with the Ape of
// clubs; shipping out trades the Two of spades for the Chicken of clubs.
inline pgd::Instance walkthrough_one_player() {
    return make_instance({"p1"}, {"Ape", "Bolt", "Chicken", "Two"}, 4,
                         {{{"Ape", kClubs}, {"Bolt", kHearts}, {"Chicken", kSpades}, {"Two", kSpades}}});
}

// Adds a second player whose hand [Ape of spades, Two of hearts, Two of
// diamonds, Bolt of spades] calls the Ape of clubs away from p1, shipping
// the Bolt of spades into p1's diamonds spot.
inline pgd::Instance walkthrough_two_player() {
    return make_instance({"p1", "p2"}, {"Ape", "Bolt", "Chicken", "Two"}, 4,
                         {{{"Ape", kClubs}, {"Bolt", kHearts}, {"Chicken", kSpades}, {"Two", kSpades}},
                          {{"Ape", kSpades}, {"Two", kHearts}, {"Two", kDiamonds}, {"Bolt", kSpades}}});
}

// Same cards as walkthrough_one_player with the middle spots exchanged:
// [Ape of clubs, Chicken of spades, Bolt of hearts, Two of spades].
inline pgd::Instance middle_swapped_one_player() {
    return make_instance({"p1"}, {"Ape", "Bolt", "Chicken", "Two"}, 4,
                         {{{"Ape", kClubs}, {"Chicken", kSpades}, {"Bolt", kHearts}, {"Two", kSpades}}});
}

} // namespace pgdtest

#endif

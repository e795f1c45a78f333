#include "pgd/generate.hpp"

#include <numeric>
#include <string>

namespace pgd {

Instance generate_instance(int num_players, int num_pictures, int n_suits,
                           std::uint64_t seed) {
    if (n_suits < 1)
        throw ValidationError(ValidationError::Kind::SuitOutOfRange,
                              "n_suits must be at least 1, got " + std::to_string(n_suits));
    if (num_players < 0 || num_pictures < 0)
        throw ValidationError(ValidationError::Kind::Infeasible, "negative set size");
    if (num_players > num_pictures)
        throw ValidationError(ValidationError::Kind::Infeasible,
                              std::to_string(num_players) + " players cannot be dealt " +
                                  "injectively from " + std::to_string(num_pictures) +
                                  " pictures");

    Instance inst;
    inst.players.reserve(num_players);
    for (int p = 0; p < num_players; ++p) inst.players.push_back("p" + std::to_string(p));
    inst.pictures.reserve(num_pictures);
    for (int b = 0; b < num_pictures; ++b) inst.pictures.push_back("b" + std::to_string(b));

    const int universe = num_pictures * n_suits;
    std::vector<int> cards(universe);
    std::iota(cards.begin(), cards.end(), 0);
    SplitMix64 rng(seed);
    for (int i = universe - 1; i > 0; --i) {
        int k = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(i) + 1));
        std::swap(cards[i], cards[k]);
    }

    inst.deal.n_indices = n_suits;
    inst.deal.entries.assign(num_players, std::vector<Card>(n_suits));
    for (int p = 0; p < num_players; ++p)
        for (int j = 0; j < n_suits; ++j)
            inst.deal.entries[p][j] = card_from_index(cards[p * n_suits + j], n_suits);
    return inst;
}

} // namespace pgd

#include "pgd/oracle.hpp"

#include <limits>
#include <string>

#include "pgd/core.hpp"

namespace pgd::oracle {

namespace {

[[noreturn]] void fail(const std::string& what) { throw OracleFailure("oracle: " + what); }

std::string card_text(Card c) {
    return "(picture " + std::to_string(c.picture) + ", suit " + std::to_string(c.suit) + ")";
}

} // namespace

std::optional<std::pair<DomainPair, DomainPair>> find_collision(const InjectionMap& m) {
    std::unordered_map<long long, DomainPair> seen;
    for (int p = 0; p < m.num_players(); ++p) {
        for (int i = 0; i < static_cast<int>(m.entries[p].size()); ++i) {
            Card c = m.entries[p][i];
            long long key = static_cast<long long>(c.picture) << 32 | static_cast<std::uint32_t>(c.suit);
            auto [it, fresh] = seen.emplace(key, DomainPair{p, i});
            if (!fresh) return std::make_pair(it->second, DomainPair{p, i});
        }
    }
    return std::nullopt;
}

std::optional<std::pair<int, int>> find_collision(std::span<const int> assignment) {
    std::unordered_map<int, int> seen;
    for (int p = 0; p < static_cast<int>(assignment.size()); ++p) {
        auto [it, fresh] = seen.emplace(assignment[p], p);
        if (!fresh) return std::make_pair(it->second, p);
    }
    return std::nullopt;
}

std::uint64_t count_instances(int num_players, int num_pictures, int n_suits) {
    const std::uint64_t domain = static_cast<std::uint64_t>(num_players) * n_suits;
    const std::uint64_t universe = static_cast<std::uint64_t>(num_pictures) * n_suits;
    if (domain > universe) return 0;
    std::uint64_t count = 1;
    for (std::uint64_t i = 0; i < domain; ++i) {
        std::uint64_t factor = universe - i;
        if (count > std::numeric_limits<std::uint64_t>::max() / factor)
            return std::numeric_limits<std::uint64_t>::max();
        count *= factor;
    }
    return count;
}

InstanceEnumerator::InstanceEnumerator(int num_players, int num_pictures, int n_suits)
    : num_players_(num_players),
      num_pictures_(num_pictures),
      n_suits_(n_suits),
      domain_size_(num_players * n_suits),
      universe_(num_pictures * n_suits) {
    constexpr std::uint64_t kGuard = 1'000'000;
    std::uint64_t total = count_instances(num_players, num_pictures, n_suits);
    if (total > kGuard)
        throw ValidationError(ValidationError::Kind::TooLarge,
                              "enumeration of " + std::to_string(total) +
                                  " instances exceeds the guard of " + std::to_string(kGuard));
    if (domain_size_ > universe_) {
        exhausted_ = true;
        return;
    }

    skeleton_.players.reserve(num_players_);
    for (int p = 0; p < num_players_; ++p) skeleton_.players.push_back("p" + std::to_string(p));
    skeleton_.pictures.reserve(num_pictures_);
    for (int b = 0; b < num_pictures_; ++b) skeleton_.pictures.push_back("b" + std::to_string(b));
    skeleton_.deal.n_indices = n_suits_;
    skeleton_.deal.entries.assign(num_players_, std::vector<Card>(n_suits_));

    // lexicographically smallest injective assignment
    choice_.resize(domain_size_);
    used_.assign(universe_, false);
    for (int i = 0; i < domain_size_; ++i) {
        choice_[i] = i;
        used_[i] = true;
    }
}

std::optional<Instance> InstanceEnumerator::next() {
    if (exhausted_) return std::nullopt;
    Instance inst = skeleton_;
    for (int i = 0; i < domain_size_; ++i)
        inst.deal.entries[i / n_suits_][i % n_suits_] = card_from_index(choice_[i], n_suits_);
    exhausted_ = !advance();
    return inst;
}

bool InstanceEnumerator::advance() {
    for (int i = domain_size_ - 1; i >= 0; --i) {
        used_[choice_[i]] = false;
        for (int c = choice_[i] + 1; c < universe_; ++c) {
            if (used_[c]) continue;
            choice_[i] = c;
            used_[c] = true;
            // refill the suffix with the smallest unused cards
            for (int k = i + 1; k < domain_size_; ++k) {
                int next_free = 0;
                while (used_[next_free]) ++next_free;
                choice_[k] = next_free;
                used_[next_free] = true;
            }
            return true;
        }
    }
    return false;
}

Instance relabel(const Instance& inst,
                 const std::unordered_map<std::string, std::string>& player_bijection,
                 const std::unordered_map<std::string, std::string>& picture_bijection) {
    auto apply = [](const std::vector<std::string>& names,
                    const std::unordered_map<std::string, std::string>& bij,
                    const char* what) {
        std::vector<std::string> out;
        out.reserve(names.size());
        std::unordered_map<std::string, int> images;
        for (const auto& name : names) {
            auto it = bij.find(name);
            if (it == bij.end())
                throw std::invalid_argument(std::string("relabel: bijection not total on ") +
                                            what + " '" + name + "'");
            if (!images.emplace(it->second, 0).second)
                throw std::invalid_argument(std::string("relabel: bijection not injective on ") +
                                            what + " image '" + it->second + "'");
            out.push_back(it->second);
        }
        return out;
    };

    Instance out = inst;
    out.players = apply(inst.players, player_bijection, "player");
    out.pictures = apply(inst.pictures, picture_bijection, "picture");
    return out;
}

TraceStats trace_stats(const GameTrace& trace, int num_players) {
    TraceStats stats;
    stats.per_player.resize(num_players);
    stats.round_pairs_used = static_cast<int>((trace.rounds.size() + 1) / 2);
    for (const auto& round : trace.rounds) {
        for (const auto& event : round.events) {
            if (const auto* su = std::get_if<ShapeUpEvent>(&event)) {
                stats.per_player.at(su->player).shape_up += 1;
            } else {
                const auto& so = std::get<ShipOutEvent>(event);
                stats.per_player.at(so.player).ship_out += 1;
                if (so.source.kind == LocKind::Hand && so.source.player != so.player) {
                    auto& victim = stats.per_player.at(so.source.player);
                    victim.called_away += 1; // their non-spade was taken...
                    victim.ship_in += 1;     // ...and the spade landed in its place
                }
            }
        }
    }
    // one passive swap touches the hand once, so it counts once
    for (auto& p : stats.per_player)
        p.total_touches = p.shape_up + p.ship_out + p.ship_in;
    return stats;
}

TableState replay_trace(const InjectionMap& deal, int num_pictures, const GameTrace& trace,
                        const RoundObserver& on_round) {
    TableState s = new_table(deal, num_pictures);
    const int n = s.n_suits;
    int expected_index = 0;
    for (const auto& round : trace.rounds) {
        if (round.round_index != expected_index)
            fail("round index " + std::to_string(round.round_index) + ", expected " +
                 std::to_string(expected_index));
        ++expected_index;
        Phase expected_phase = round.round_index % 2 == 0 ? Phase::ShapeUp : Phase::ShipOut;
        if (round.phase != expected_phase) fail("phases do not alternate from shape-up");

        for (const auto& event : round.events) {
            if (const auto* su = std::get_if<ShapeUpEvent>(&event)) {
                if (round.phase != Phase::ShapeUp) fail("shape-up event in a ship-out round");
                if (su->player < 0 || su->player >= s.num_players()) fail("player out of range");
                if (su->from_spot < 1 || su->from_spot >= n) fail("from_spot out of range");
                auto& hand = s.hands[su->player];
                if (!is_spade(hand[su->from_spot], n)) fail("shape-up source is not a spade");
                if (is_spade(hand[0], n)) fail("shape-up on an already shaped hand");
                std::swap(hand[0], hand[su->from_spot]);
                s.where[card_index(hand[0], n)] = Location::hand(su->player, 0);
                s.where[card_index(hand[su->from_spot], n)] =
                    Location::hand(su->player, su->from_spot);
            } else {
                const auto& so = std::get<ShipOutEvent>(event);
                if (round.phase != Phase::ShipOut) fail("ship-out event in a shape-up round");
                if (so.player < 0 || so.player >= s.num_players()) fail("player out of range");
                if (so.spot < 1 || so.spot >= n) fail("bad-spade spot out of range");
                if (!is_spade(so.bad_spade, n)) fail("shipped card is not a spade");
                if (is_spade(so.requested, n)) fail("requested card is a spade");
                if (s.hands[so.player][so.spot] != so.bad_spade)
                    fail("bad spade " + card_text(so.bad_spade) + " not at its recorded spot");
                if (so.source.kind == LocKind::Deck) {
                    if (s.where[card_index(so.requested, n)].kind != LocKind::Deck)
                        fail("requested card " + card_text(so.requested) + " not in the deck");
                } else {
                    if (so.source.player < 0 || so.source.player >= s.num_players() ||
                        so.source.spot < 0 || so.source.spot >= n)
                        fail("source location out of range");
                    if (s.hands[so.source.player][so.source.spot] != so.requested)
                        fail("requested card " + card_text(so.requested) +
                             " not at its recorded source");
                }
                s.hands[so.player][so.spot] = so.requested;
                s.where[card_index(so.requested, n)] = Location::hand(so.player, so.spot);
                if (so.source.kind == LocKind::Hand)
                    s.hands[so.source.player][so.source.spot] = so.bad_spade;
                s.where[card_index(so.bad_spade, n)] = so.source;
            }
        }
        if (on_round) on_round(round, s);
    }
    return s;
}

TableState replay_trace(const Instance& inst, const GameTrace& trace,
                        const RoundObserver& on_round) {
    return replay_trace(inst.deal, inst.num_pictures(), trace, on_round);
}

void check_table(const TableState& state) {
    if (state.n_suits < 1) fail("n_suits < 1");
    if (state.num_pictures < 0) fail("negative picture count");
    const int total = state.num_cards();
    if (static_cast<int>(state.where.size()) != total) fail("locator size mismatch");

    std::vector<char> seen(total, 0);
    for (int p = 0; p < state.num_players(); ++p) {
        const auto& hand = state.hands[p];
        if (static_cast<int>(hand.size()) != state.n_suits)
            fail("hand " + std::to_string(p) + " is not full");
        for (int j = 0; j < state.n_suits; ++j) {
            Card c = hand[j];
            if (c.picture < 0 || c.picture >= state.num_pictures || c.suit < 0 ||
                c.suit >= state.n_suits)
                fail("card out of universe " + card_text(c));
            int id = card_index(c, state.n_suits);
            if (seen[id]) fail("card " + card_text(c) + " appears twice");
            seen[id] = 1;
            if (state.where[id] != Location::hand(p, j))
                fail("locator disagrees for card " + card_text(c));
        }
    }
    // conservation: everything not in a hand must sit in the deck
    for (int id = 0; id < total; ++id)
        if (!seen[id] && state.where[id].kind != LocKind::Deck)
            fail("card " + card_text(card_from_index(id, state.n_suits)) +
                 " is neither in a hand nor in the deck");
}

std::vector<Card> recompute_requests(const TableState& state) {
    std::vector<Card> out;
    const int n = state.n_suits;
    for (int p = 0; p < state.num_players(); ++p) {
        const auto& hand = state.hands[p];
        int leftmost = -1;
        for (int j = 0; j < n; ++j) {
            if (hand[j].suit == n - 1) {
                leftmost = j;
                break;
            }
        }
        if (leftmost < 0) continue;
        if (leftmost != 0) fail("hand " + std::to_string(p) + " unshaped at ship-out boundary");
        int bad = -1;
        for (int j = 1; j < n; ++j) {
            if (hand[j].suit == n - 1) {
                bad = j;
                break;
            }
        }
        if (bad < 0) continue;
        out.push_back(Card{hand[0].picture, n - 1 - bad});
    }
    return out;
}

} // namespace pgd::oracle

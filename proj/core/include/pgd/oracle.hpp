#ifndef PGD_ORACLE_HPP
#define PGD_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>

#include "pgd/errors.hpp"
#include "pgd/types.hpp"

/*
    Independent verification machinery. Everything here recomputes its
    answer by scanning full states or traces from first principles; none of
    it trusts engine bookkeeping, so engine and oracle can check each other.
*/

namespace pgd::oracle {

struct DomainPair {
    int player = 0;
    int index = 0;

    friend bool operator==(const DomainPair&, const DomainPair&) = default;
};

// First pair of domain elements sharing an image, in scan order, if any.
std::optional<std::pair<DomainPair, DomainPair>> find_collision(const InjectionMap& m);
std::optional<std::pair<int, int>> find_collision(std::span<const int> assignment);

inline bool check_injective(const InjectionMap& m) { return !find_collision(m); }
inline bool check_injective(std::span<const int> assignment) {
    return !find_collision(assignment);
}

// Number of injective deals players x N -> pictures x N (falling
// factorial), saturating at 2^64-1.
std::uint64_t count_instances(int num_players, int num_pictures, int n_suits);

// Streams every injective deal exactly once, in lexicographic order over
// (domain pairs in declared order) x (cards in card_index order). Player
// ids are "p0..", pictures "b0..". Throws TooLarge above 10^6 instances.
class InstanceEnumerator {
public:
    InstanceEnumerator(int num_players, int num_pictures, int n_suits);

    std::optional<Instance> next();

private:
    bool advance();

    int num_players_;
    int num_pictures_;
    int n_suits_;
    int domain_size_;
    int universe_;
    std::vector<int> choice_; // choice_[i] = card index assigned to domain pair i
    std::vector<bool> used_;
    bool exhausted_ = false;
    Instance skeleton_;
};

// Renames players and pictures through total bijections; list orders map
// through position by position, so the dense deal is untouched.
Instance relabel(const Instance& inst,
                 const std::unordered_map<std::string, std::string>& player_bijection,
                 const std::unordered_map<std::string, std::string>& picture_bijection);

// Per-player event counts over one game's trace.
//
// ship_in counts spades received from another player's ship-out and
// called_away counts cards taken by one; a single passive swap does both
// at once, so the two counters are always equal and total_touches counts
// that swap once: shape_up + ship_out + ship_in.
struct TraceStats {
    struct PerPlayer {
        int shape_up = 0;
        int ship_out = 0;
        int ship_in = 0;
        int called_away = 0;
        int total_touches = 0;
    };

    std::vector<PerPlayer> per_player;
    int round_pairs_used = 0; // recorded (eventful) pairs

    int max_total_touches() const {
        int m = 0;
        for (const auto& p : per_player)
            if (p.total_touches > m) m = p.total_touches;
        return m;
    }
};

TraceStats trace_stats(const GameTrace& trace, int num_players);

// Replays a trace literally, event by event, onto a fresh table dealt from
// `deal`; verifies each event against the state it is applied to and
// throws OracleFailure on any mismatch. on_round, when set, sees the state
// after each recorded round.
using RoundObserver = std::function<void(const TraceRound&, const TableState&)>;
TableState replay_trace(const InjectionMap& deal, int num_pictures, const GameTrace& trace,
                        const RoundObserver& on_round = {});
TableState replay_trace(const Instance& inst, const GameTrace& trace,
                        const RoundObserver& on_round = {});

// Full-scan state audit: hand shapes, card ranges, all-distinct,
// conservation of the B x N universe, locator coherence.
void check_table(const TableState& state);

// Recomputes every pending ship-out request by scanning hands; requires
// shaped hands. The engine's no-conflict assertion can be cross-checked
// against this list.
std::vector<Card> recompute_requests(const TableState& state);

} // namespace pgd::oracle

#endif

#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "pgd/core.hpp"
#include "pgd/division.hpp"
#include "pgd/engine.hpp"
#include "pgd/oracle.hpp"

using namespace pgd;
using namespace pgdtest;
namespace orc = pgd::oracle;

TEST_CASE("find_collision on assignments") {
    std::vector<int> ok{0, 1};
    CHECK(orc::check_injective(ok));

    std::vector<int> clash{0, 0};
    auto witness = orc::find_collision(clash);
    REQUIRE(witness);
    CHECK(*witness == std::pair<int, int>{0, 1});
}

TEST_CASE("find_collision on injection maps") {
    InjectionMap ok{2, {{Card{0, 0}, Card{0, 1}}}};
    CHECK(orc::check_injective(ok));

    InjectionMap clash{2, {{Card{0, 1}, Card{0, 1}}}};
    auto witness = orc::find_collision(clash);
    REQUIRE(witness);
    CHECK(witness->first == orc::DomainPair{0, 0});
    CHECK(witness->second == orc::DomainPair{0, 1});
}

TEST_CASE("count_instances is the falling factorial over the card universe") {
    CHECK(orc::count_instances(1, 1, 1) == 1);
    CHECK(orc::count_instances(1, 2, 2) == 12);  // 4*3
    CHECK(orc::count_instances(2, 2, 2) == 24);  // 4!
    CHECK(orc::count_instances(1, 2, 3) == 120); // 6*5*4
    CHECK(orc::count_instances(2, 3, 2) == 360); // 6*5*4*3
    CHECK(orc::count_instances(2, 1, 2) == 0);   // domain larger than universe
    CHECK(orc::count_instances(0, 3, 2) == 1);   // the empty injection
}

TEST_CASE("InstanceEnumerator yields every injective deal exactly once") {
    SUBCASE("smallest case") {
        orc::InstanceEnumerator en(1, 1, 1);
        auto first = en.next();
        REQUIRE(first);
        CHECK(first->deal.entries[0][0] == Card{0, 0});
        CHECK(en.next() == std::nullopt);
    }
    SUBCASE("one player, two pictures, two suits") {
        orc::InstanceEnumerator en(1, 2, 2);
        std::set<std::vector<Card>> seen;
        while (auto inst = en.next()) {
            CHECK(inst->n_suits() == 2);
            CHECK(!orc::find_collision(inst->deal));
            seen.insert(inst->deal.entries[0]);
        }
        CHECK(seen.size() == 12);
    }
    SUBCASE("bijective deals of two players") {
        orc::InstanceEnumerator en(2, 2, 2);
        int count = 0;
        while (en.next()) ++count;
        CHECK(count == 24);
    }
    SUBCASE("guard trips on oversized enumerations") {
        CHECK_THROWS_AS(orc::InstanceEnumerator(2, 3, 4), ValidationError);
    }
}

TEST_CASE("relabel renames consistently and nothing else") {
    Instance inst = walkthrough_one_player();
    SUBCASE("identity") {
        Instance same = orc::relabel(
            inst, {{"p1", "p1"}},
            {{"Ape", "Ape"}, {"Bolt", "Bolt"}, {"Chicken", "Chicken"}, {"Two", "Two"}});
        CHECK(same == inst);
    }
    SUBCASE("swapping two pictures only renames them") {
        Instance swapped = orc::relabel(
            inst, {{"p1", "p1"}},
            {{"Ape", "Bolt"}, {"Bolt", "Ape"}, {"Chicken", "Chicken"}, {"Two", "Two"}});
        CHECK(swapped.pictures == std::vector<std::string>{"Bolt", "Ape", "Chicken", "Two"});
        CHECK(swapped.players == inst.players);
        CHECK(swapped.deal == inst.deal); // dense indices untouched
    }
    SUBCASE("partial maps are rejected") {
        CHECK_THROWS_AS(orc::relabel(inst, {}, {}), std::invalid_argument);
    }
}

TEST_CASE("trace_stats counts hand touches") {
    SUBCASE("empty trace") {
        orc::TraceStats stats = orc::trace_stats(GameTrace{}, 2);
        CHECK(stats.round_pairs_used == 0);
        CHECK(stats.max_total_touches() == 0);
    }
    SUBCASE("single-player walkthrough: one shape-up, one ship-out") {
        Instance inst = middle_swapped_one_player();
        RunResult run = run_to_stability(new_table(inst), 16);
        orc::TraceStats stats = orc::trace_stats(run.trace, 1);
        CHECK(stats.per_player[0].shape_up == 1);
        CHECK(stats.per_player[0].ship_out == 1);
        CHECK(stats.per_player[0].ship_in == 0);
        CHECK(stats.per_player[0].called_away == 0);
        CHECK(stats.per_player[0].total_touches == 2);
        CHECK(stats.round_pairs_used == 1);
    }
    SUBCASE("two-player walkthrough: the ship-in counts once") {
        Instance inst = walkthrough_two_player();
        RunResult run = run_to_stability(new_table(inst), 32);
        orc::TraceStats stats = orc::trace_stats(run.trace, 2);
        CHECK(stats.per_player[0].shape_up == 1);
        CHECK(stats.per_player[0].ship_out == 2);
        CHECK(stats.per_player[0].ship_in == 1);
        CHECK(stats.per_player[0].called_away == 1);
        CHECK(stats.per_player[0].total_touches == 4);
        CHECK(stats.per_player[1].ship_out == 1);
        CHECK(stats.per_player[1].total_touches == 1);
        CHECK(stats.round_pairs_used == 2);
    }
}

TEST_CASE("replay_trace reproduces the run and rejects tampering") {
    Instance inst = walkthrough_two_player();
    RunResult run = run_to_stability(new_table(inst), 32);

    int rounds_seen = 0;
    TableState replayed = orc::replay_trace(inst, run.trace, [&](const TraceRound& round, const TableState& state) {
        CHECK(round.round_index == rounds_seen);
        orc::check_table(state);
        ++rounds_seen;
    });
    CHECK(rounds_seen == 4);
    CHECK(replayed == run.state);

    GameTrace tampered = run.trace;
    std::get<ShapeUpEvent>(tampered.rounds[0].events[0]).from_spot = 3;
    CHECK_THROWS_AS(orc::replay_trace(inst, tampered), OracleFailure);
}

TEST_CASE("check_table catches corruption") {
    Instance inst = walkthrough_two_player();
    TableState table = new_table(inst);
    orc::check_table(table);

    SUBCASE("duplicated card") {
        table.hands[0][1] = table.hands[1][2];
        CHECK_THROWS_AS(orc::check_table(table), OracleFailure);
    }
    SUBCASE("stale locator") {
        std::swap(table.hands[0][0], table.hands[0][1]);
        CHECK_THROWS_AS(orc::check_table(table), OracleFailure);
    }
}

TEST_CASE("recompute_requests agrees with the engine") {
    Instance inst = walkthrough_two_player();
    TableState shaped = shape_up_round(new_table(inst)).state;
    std::vector<Card> requests = orc::recompute_requests(shaped);
    REQUIRE(requests.size() == 2);
    CHECK(requests[0] == c(inst, "Chicken", kClubs));
    CHECK(requests[1] == c(inst, "Ape", kClubs));
    CHECK(requests[0] == *requested_card(shaped, 0));
    CHECK(requests[1] == *requested_card(shaped, 1));

    SUBCASE("unshaped states are flagged") {
        CHECK_THROWS_AS(orc::recompute_requests(new_table(inst)), OracleFailure);
    }
}

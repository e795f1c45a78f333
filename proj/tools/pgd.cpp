#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pgd/core.hpp"
#include "pgd/division.hpp"
#include "pgd/engine.hpp"
#include "pgd/generate.hpp"
#include "pgd/io.hpp"
#include "pgd/oracle.hpp"

/*
    pgd — pan-galactic division toolkit.

    Exit codes: 0 success, 1 validation failure or verify mismatch,
    2 malformed input (files or command line), 3 internal invariant
    violation (any of these is a bug, not an input problem).
*/

namespace {

using namespace pgd;

struct Options {
    std::string in;
    std::string out;
    std::string trace;
    int players = -1;
    int pictures = -1;
    int suits = 4;
    std::uint64_t seed = 0;
    int max_round_pairs = 0; // 0 = default cap
    int jobs = 1;
};

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot read file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write file: " + path);
    f << content;
    if (!f) throw std::runtime_error("short write: " + path);
}

Instance load_instance(const Options& o) {
    if (!o.in.empty()) return validate_instance(io::parse_instance(read_file(o.in)));
    if (o.players < 0 || o.pictures < 0)
        throw ParseError("give --in FILE or --players/--pictures generator parameters");
    return generate_instance(o.players, o.pictures, o.suits, o.seed);
}

void print_round_summary(const GameTrace& trace, const Instance& inst) {
    std::size_t total_events = 0;
    for (const auto& round : trace.rounds) total_events += round.events.size();
    const bool detail = total_events <= 16;
    for (const auto& round : trace.rounds) {
        std::cout << "round " << round.round_index << " "
                  << (round.phase == Phase::ShapeUp ? "shape_up" : "ship_out") << ": "
                  << round.events.size() << " event(s)\n";
        if (!detail) continue;
        for (const auto& event : round.events) {
            if (const auto* su = std::get_if<ShapeUpEvent>(&event)) {
                std::cout << "  " << inst.players[su->player]
                          << " shapes up: spade from spot " << su->from_spot
                          << " to spot 0\n";
            } else {
                const auto& so = std::get<ShipOutEvent>(event);
                std::cout << "  " << inst.players[so.player] << " ships "
                          << io::card_display(so.bad_spade, inst) << " for "
                          << io::card_display(so.requested, inst)
                          << (so.source.kind == LocKind::Deck
                                  ? std::string(" (from the deck)")
                                  : " (from " + inst.players[so.source.player] + "'s spot " +
                                        std::to_string(so.source.spot) + ")")
                          << "\n";
            }
        }
    }
}

int cmd_generate(const Options& o) {
    Instance inst = generate_instance(o.players, o.pictures, o.suits, o.seed);
    std::string text = io::serialize_instance(inst);
    if (o.out.empty())
        std::cout << text;
    else
        write_file(o.out, text);
    return 0;
}

int cmd_run(const Options& o) {
    Instance inst = load_instance(o);
    if (inst.n_suits() < 2)
        throw ValidationError(ValidationError::Kind::Infeasible,
                              "run needs n_suits >= 2; nothing to divide at n_suits = " +
                                  std::to_string(inst.n_suits()));
    StepOutcome step = divide_once(inst.deal, inst.num_pictures(), o.max_round_pairs);
    print_round_summary(step.trace, inst);
    std::cout << "stable after " << step.round_pairs_used << " round pair(s)\n";
    if (!o.trace.empty()) write_file(o.trace, io::serialize_trace(step.trace, inst, 0));
    if (!o.out.empty()) {
        Instance next{inst.players, inst.pictures, std::move(step.next)};
        write_file(o.out, io::serialize_instance(next));
    }
    return 0;
}

int cmd_divide(const Options& o) {
    Instance inst = load_instance(o);
    DivisionOutcome outcome = divide(inst, o.max_round_pairs);
    std::cout << io::serialize_report(outcome.report, inst);
    if (!o.out.empty()) write_file(o.out, io::serialize_result(outcome.report.result, inst));
    if (!o.trace.empty()) {
        std::string text;
        for (std::size_t s = 0; s < outcome.step_traces.size(); ++s)
            text += io::serialize_trace(outcome.step_traces[s], inst, static_cast<int>(s));
        write_file(o.trace, text);
    }
    return 0;
}

int cmd_verify(const Options& o) {
    Instance inst = validate_instance(io::parse_instance(read_file(o.in)));
    auto claimed = io::parse_result(read_file(o.out));
    DivisionOutcome outcome = divide(inst, o.max_round_pairs);

    std::vector<bool> covered(inst.num_players(), false);
    for (const auto& [player, picture] : claimed) {
        auto p = inst.player_index(player);
        if (!p) {
            std::cerr << "mismatch: claimed map names unknown player '" << player << "'\n";
            return 1;
        }
        if (covered[*p]) {
            std::cerr << "mismatch: player '" << player << "' claimed twice\n";
            return 1;
        }
        covered[*p] = true;
        const std::string& expected = inst.pictures[outcome.report.result[*p]];
        if (picture != expected) {
            std::cerr << "mismatch: " << player << " -> " << picture << ", expected "
                      << expected << "\n";
            return 1;
        }
    }
    for (int p = 0; p < inst.num_players(); ++p) {
        if (!covered[p]) {
            std::cerr << "mismatch: no claim for player '" << inst.players[p] << "'\n";
            return 1;
        }
    }
    if (auto collision = oracle::find_collision(outcome.report.result)) {
        std::cerr << "internal: recomputed result is not injective\n";
        return 3;
    }
    std::cout << "ok: claimed map matches the recomputed division\n";
    return 0;
}

struct GameStats {
    int n_suits = 0;
    int round_pairs = 0;
    oracle::TraceStats stats;
};

struct DivisionStats {
    Instance inst;
    DivisionOutcome outcome;
    std::vector<GameStats> per_step;
    int max_touches = 0;
    int max_round_pairs = 0;
};

DivisionStats collect_stats(Instance inst, int max_round_pairs) {
    DivisionStats d{std::move(inst), {}, {}, 0, 0};
    d.outcome = divide(d.inst, max_round_pairs);
    for (std::size_t s = 0; s < d.outcome.step_traces.size(); ++s) {
        GameStats g;
        g.n_suits = d.outcome.report.steps[s].n_suits;
        g.round_pairs = d.outcome.report.steps[s].round_pairs_used;
        g.stats = oracle::trace_stats(d.outcome.step_traces[s], d.inst.num_players());
        d.max_touches = std::max(d.max_touches, g.stats.max_total_touches());
        d.max_round_pairs = std::max(d.max_round_pairs, g.round_pairs);
        d.per_step.push_back(std::move(g));
    }
    return d;
}

nlohmann::json stats_to_json(const DivisionStats& d) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& g : d.per_step) {
        nlohmann::json players = nlohmann::json::array();
        for (int p = 0; p < d.inst.num_players(); ++p) {
            const auto& pp = g.stats.per_player[p];
            players.push_back({{"player", d.inst.players[p]},
                               {"shape_up", pp.shape_up},
                               {"ship_out", pp.ship_out},
                               {"ship_in", pp.ship_in},
                               {"called_away", pp.called_away},
                               {"total_touches", pp.total_touches}});
        }
        steps.push_back({{"n_suits", g.n_suits},
                         {"round_pairs", g.round_pairs},
                         {"max_total_touches", g.stats.max_total_touches()},
                         {"players", std::move(players)}});
    }
    return {{"num_players", d.inst.num_players()},
            {"num_pictures", d.inst.num_pictures()},
            {"n_suits", d.inst.n_suits()},
            {"max_total_touches", d.max_touches},
            {"max_round_pairs", d.max_round_pairs},
            {"steps", std::move(steps)}};
}

void print_stats_tables(const DivisionStats& d) {
    std::cout << "step  n_suits  round_pairs  max_touches\n";
    for (std::size_t s = 0; s < d.per_step.size(); ++s) {
        const auto& g = d.per_step[s];
        std::cout << std::left << std::setw(6) << s << std::setw(9) << g.n_suits
                  << std::setw(13) << g.round_pairs << g.stats.max_total_touches() << "\n";
    }
    if (d.inst.num_players() > 0 && d.inst.num_players() <= 32) {
        for (std::size_t s = 0; s < d.per_step.size(); ++s) {
            const auto& g = d.per_step[s];
            std::cout << "\nstep " << s << " (n_suits " << g.n_suits << ") per player:\n";
            std::cout << "player      shape_up  ship_out  ship_in  called_away  touches\n";
            for (int p = 0; p < d.inst.num_players(); ++p) {
                const auto& pp = g.stats.per_player[p];
                std::cout << std::left << std::setw(12) << d.inst.players[p] << std::setw(10)
                          << pp.shape_up << std::setw(10) << pp.ship_out << std::setw(9)
                          << pp.ship_in << std::setw(13) << pp.called_away << pp.total_touches
                          << "\n";
            }
        }
    }
    std::cout << "\nmax touches over all steps: " << d.max_touches
              << "; max round pairs: " << d.max_round_pairs << "\n";
}

int cmd_stats(const Options& o) {
    if (o.jobs <= 1) {
        DivisionStats d = collect_stats(load_instance(o), o.max_round_pairs);
        print_stats_tables(d);
        if (!o.out.empty()) write_file(o.out, stats_to_json(d).dump(2) + "\n");
        return 0;
    }

    if (!o.in.empty() || o.players < 0 || o.pictures < 0)
        throw ParseError("--jobs fans out generator seeds; give --players/--pictures, not --in");

    // independent seeds o.seed .. o.seed + jobs - 1, one thread each
    std::vector<DivisionStats> results(o.jobs);
    std::vector<std::thread> workers;
    workers.reserve(o.jobs);
    for (int i = 0; i < o.jobs; ++i) {
        workers.emplace_back([&, i] {
            Instance inst =
                generate_instance(o.players, o.pictures, o.suits, o.seed + static_cast<std::uint64_t>(i));
            results[i] = collect_stats(std::move(inst), o.max_round_pairs);
        });
    }
    for (auto& w : workers) w.join();

    int max_touches = 0;
    int max_pairs = 0;
    nlohmann::json batch = nlohmann::json::array();
    for (int i = 0; i < o.jobs; ++i) {
        const auto& d = results[i];
        std::cout << "seed " << o.seed + static_cast<std::uint64_t>(i) << ": steps "
                  << d.per_step.size() << ", max round pairs " << d.max_round_pairs
                  << ", max touches " << d.max_touches << "\n";
        max_touches = std::max(max_touches, d.max_touches);
        max_pairs = std::max(max_pairs, d.max_round_pairs);
        nlohmann::json entry = stats_to_json(d);
        entry["seed"] = o.seed + static_cast<std::uint64_t>(i);
        batch.push_back(std::move(entry));
    }
    std::cout << "batch max touches: " << max_touches << "; batch max round pairs: " << max_pairs
              << "\n";
    if (!o.out.empty()) write_file(o.out, batch.dump(2) + "\n");
    return 0;
}

void add_generator_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--players", o.players, "number of players to generate");
    cmd->add_option("--pictures", o.pictures, "number of pictures to generate");
    cmd->add_option("--suits", o.suits, "suit count N (default 4)");
    cmd->add_option("--seed", o.seed, "generator seed");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pan-galactic division: turn an injection A x N -> B x N into A -> B"};
    app.require_subcommand(1);

    Options o;
    int rc = 0;

    auto* gen = app.add_subcommand("generate", "write a seeded pseudo-random instance");
    add_generator_options(gen, o);
    gen->get_option("--players")->required();
    gen->get_option("--pictures")->required();
    gen->add_option("--out", o.out, "instance file (stdout if omitted)");
    gen->callback([&] { rc = cmd_generate(o); });

    auto* run = app.add_subcommand("run", "play one game: N suits down to N-1");
    run->add_option("--in", o.in, "instance file");
    add_generator_options(run, o);
    run->add_option("--out", o.out, "extracted instance file (n_suits - 1)");
    run->add_option("--trace", o.trace, "trace file (one JSON object per line)");
    run->add_option("--max-round-pairs", o.max_round_pairs, "override the round-pair cap");
    run->callback([&] { rc = cmd_run(o); });

    auto* div = app.add_subcommand("divide", "run the full division down to a map A -> B");
    div->add_option("--in", o.in, "instance file");
    add_generator_options(div, o);
    div->add_option("--out", o.out, "result map file");
    div->add_option("--trace", o.trace, "trace file covering every step");
    div->add_option("--max-round-pairs", o.max_round_pairs, "override the per-step cap");
    div->callback([&] { rc = cmd_divide(o); });

    auto* verify = app.add_subcommand("verify", "recompute and check a claimed result map");
    verify->add_option("--in", o.in, "instance file")->required();
    verify->add_option("--out", o.out, "claimed result map to check")->required();
    verify->add_option("--max-round-pairs", o.max_round_pairs, "override the per-step cap");
    verify->callback([&] { rc = cmd_verify(o); });

    auto* stats = app.add_subcommand("stats", "round and per-player touch statistics");
    stats->add_option("--in", o.in, "instance file");
    add_generator_options(stats, o);
    stats->add_option("--jobs", o.jobs, "fan out this many consecutive seeds in parallel");
    stats->add_option("--out", o.out, "write full statistics as JSON");
    stats->add_option("--max-round-pairs", o.max_round_pairs, "override the per-step cap");
    stats->callback([&] { rc = cmd_stats(o); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const pgd::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const pgd::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const pgd::EngineError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const pgd::OracleFailure& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return rc;
}

#include "pgd/io.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace pgd::io {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError("malformed input: " + what); }

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) bad("not valid JSON");
    return j;
}

std::vector<std::string> string_array(const json& j, const char* field) {
    if (!j.is_array()) bad(std::string(field) + " must be an array");
    std::vector<std::string> out;
    out.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_string()) bad(std::string(field) + " must contain strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

json card_to_json(Card c, const Instance& naming) {
    return json::array({naming.pictures.at(c.picture), c.suit});
}

Card card_from_json(const json& j, const Instance& naming) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_number_integer())
        bad("a card must be [\"<picture>\", suit]");
    auto picture = naming.picture_index(j[0].get<std::string>());
    if (!picture) bad("unknown picture '" + j[0].get<std::string>() + "' in trace");
    int suit = j[1].get<int>();
    if (suit < 0 || suit >= naming.n_suits()) bad("suit out of range in trace");
    return Card{*picture, suit};
}

int player_from_json(const json& j, const Instance& naming) {
    if (!j.is_string()) bad("player must be a string");
    auto p = naming.player_index(j.get<std::string>());
    if (!p) bad("unknown player '" + j.get<std::string>() + "' in trace");
    return *p;
}

json event_to_json(const GameEvent& event, const Instance& naming) {
    json j;
    if (const auto* su = std::get_if<ShapeUpEvent>(&event)) {
        j["kind"] = "shape_up";
        j["player"] = naming.players.at(su->player);
        j["from_spot"] = su->from_spot;
    } else {
        const auto& so = std::get<ShipOutEvent>(event);
        j["kind"] = "ship_out";
        j["player"] = naming.players.at(so.player);
        j["spot"] = so.spot;
        j["bad_spade"] = card_to_json(so.bad_spade, naming);
        j["requested"] = card_to_json(so.requested, naming);
        if (so.source.kind == LocKind::Deck) {
            j["source"] = json{{"kind", "deck"}};
        } else {
            j["source"] = json{{"kind", "hand"},
                               {"player", naming.players.at(so.source.player)},
                               {"spot", so.source.spot}};
        }
    }
    return j;
}

GameEvent event_from_json(const json& j, const Instance& naming) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) bad("event has no kind");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "shape_up") {
        if (!j.contains("player") || !j.contains("from_spot") ||
            !j["from_spot"].is_number_integer())
            bad("shape_up event needs player and from_spot");
        return ShapeUpEvent{player_from_json(j["player"], naming), j["from_spot"].get<int>()};
    }
    if (kind == "ship_out") {
        for (const char* field : {"player", "spot", "bad_spade", "requested", "source"})
            if (!j.contains(field)) bad(std::string("ship_out event needs ") + field);
        if (!j["spot"].is_number_integer()) bad("spot must be an integer");
        ShipOutEvent so;
        so.player = player_from_json(j["player"], naming);
        so.spot = j["spot"].get<int>();
        so.bad_spade = card_from_json(j["bad_spade"], naming);
        so.requested = card_from_json(j["requested"], naming);
        const json& src = j["source"];
        if (!src.is_object() || !src.contains("kind") || !src["kind"].is_string())
            bad("source has no kind");
        std::string src_kind = src["kind"].get<std::string>();
        if (src_kind == "deck") {
            so.source = Location::deck();
        } else if (src_kind == "hand") {
            if (!src.contains("player") || !src.contains("spot") ||
                !src["spot"].is_number_integer())
                bad("hand source needs player and spot");
            so.source = Location::hand(player_from_json(src["player"], naming),
                                       src["spot"].get<int>());
        } else {
            bad("unknown source kind '" + src_kind + "'");
        }
        return so;
    }
    bad("unknown event kind '" + kind + "'");
}

std::string digest_hex(std::uint64_t digest) {
    char buf[2 + 16 + 1];
    std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(digest));
    return buf;
}

} // namespace

InstanceData parse_instance(const std::string& json_text) {
    json j = parse_json(json_text);
    if (!j.is_object()) bad("instance must be an object");
    for (const char* field : {"n_suits", "players", "pictures", "deal"})
        if (!j.contains(field)) bad(std::string("instance needs field ") + field);
    if (!j["n_suits"].is_number_integer()) bad("n_suits must be an integer");

    InstanceData data;
    data.n_suits = j["n_suits"].get<int>();
    data.players = string_array(j["players"], "players");
    data.pictures = string_array(j["pictures"], "pictures");

    const json& deal = j["deal"];
    if (!deal.is_object()) bad("deal must be an object");
    for (const auto& [player, row] : deal.items()) {
        if (!row.is_array()) bad("deal row for '" + player + "' must be an array");
        std::vector<std::pair<std::string, int>> cards;
        cards.reserve(row.size());
        for (const auto& entry : row) {
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
                !entry[1].is_number_integer())
                bad("deal entries must be [\"<picture>\", suit]");
            cards.emplace_back(entry[0].get<std::string>(), entry[1].get<int>());
        }
        data.deal.emplace_back(player, std::move(cards));
    }
    return data;
}

std::string serialize_instance(const Instance& inst) {
    json j;
    j["n_suits"] = inst.n_suits();
    j["players"] = inst.players;
    j["pictures"] = inst.pictures;
    json deal = json::object();
    for (int p = 0; p < inst.num_players(); ++p) {
        json row = json::array();
        for (Card c : inst.deal.entries[p]) row.push_back(card_to_json(c, inst));
        deal[inst.players[p]] = std::move(row);
    }
    j["deal"] = std::move(deal);
    return j.dump(2) + "\n";
}

std::string serialize_trace(const GameTrace& trace, const Instance& naming, int step) {
    std::string out;
    for (const auto& round : trace.rounds) {
        json j;
        j["step"] = step;
        j["round"] = round.round_index;
        j["phase"] = round.phase == Phase::ShapeUp ? "shape_up" : "ship_out";
        json events = json::array();
        for (const auto& event : round.events) events.push_back(event_to_json(event, naming));
        j["events"] = std::move(events);
        out += j.dump();
        out += '\n';
    }
    return out;
}

std::vector<GameTrace> parse_traces(const std::string& text, const Instance& naming) {
    std::vector<GameTrace> traces;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json j = parse_json(line);
        if (!j.is_object()) bad("trace line " + std::to_string(line_no) + " is not an object");
        for (const char* field : {"step", "round", "phase", "events"})
            if (!j.contains(field))
                bad("trace line " + std::to_string(line_no) + " needs field " + field);
        if (!j["step"].is_number_integer() || !j["round"].is_number_integer())
            bad("step and round must be integers");
        int step = j["step"].get<int>();
        if (step != static_cast<int>(traces.size()) - 1) {
            if (step != static_cast<int>(traces.size()))
                bad("trace steps must be consecutive from 0");
            traces.emplace_back();
        }
        GameTrace& trace = traces.back();

        TraceRound round;
        round.round_index = j["round"].get<int>();
        if (round.round_index != static_cast<int>(trace.rounds.size()))
            bad("trace rounds must be consecutive from 0 within a step");
        std::string phase = j["phase"].get<std::string>();
        if (phase != "shape_up" && phase != "ship_out") bad("unknown phase '" + phase + "'");
        round.phase = phase == "shape_up" ? Phase::ShapeUp : Phase::ShipOut;
        Phase expected = round.round_index % 2 == 0 ? Phase::ShapeUp : Phase::ShipOut;
        if (round.phase != expected) bad("phases must alternate starting with shape_up");
        if (!j["events"].is_array()) bad("events must be an array");
        for (const auto& ev : j["events"]) round.events.push_back(event_from_json(ev, naming));
        trace.rounds.push_back(std::move(round));
    }
    return traces;
}

std::string serialize_result(const std::vector<int>& assignment, const Instance& naming) {
    json j = json::object();
    for (int p = 0; p < static_cast<int>(assignment.size()); ++p)
        j[naming.players.at(p)] = naming.pictures.at(assignment[p]);
    return j.dump(2) + "\n";
}

std::vector<std::pair<std::string, std::string>> parse_result(const std::string& json_text) {
    json j = parse_json(json_text);
    if (!j.is_object()) bad("result map must be an object");
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [player, picture] : j.items()) {
        if (!picture.is_string()) bad("result images must be strings");
        out.emplace_back(player, picture.get<std::string>());
    }
    return out;
}

std::string serialize_report(const DivisionReport& report, const Instance& naming) {
    json j;
    json steps = json::array();
    for (const auto& step : report.steps) {
        steps.push_back(json{{"n_suits", step.n_suits},
                             {"round_pairs", step.round_pairs_used},
                             {"trace_digest", digest_hex(step.trace_digest)}});
    }
    j["steps"] = std::move(steps);
    json result = json::object();
    for (int p = 0; p < static_cast<int>(report.result.size()); ++p)
        result[naming.players.at(p)] = naming.pictures.at(report.result[p]);
    j["result"] = std::move(result);
    return j.dump(2) + "\n";
}

std::string suit_display(int suit, int n_suits) {
    if (n_suits == 4) {
        static const char* names[] = {"clubs", "diamonds", "hearts", "spades"};
        if (suit >= 0 && suit < 4) return names[suit];
    }
    return std::to_string(suit);
}

std::string card_display(Card c, const Instance& naming) {
    return naming.pictures.at(c.picture) + " of " + suit_display(c.suit, naming.n_suits());
}

} // namespace pgd::io

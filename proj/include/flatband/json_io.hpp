#pragma once

#include <json.hpp>
#include <string>

#include "braid.hpp"
#include "codes.hpp"
#include "diagram.hpp"
#include "moves.hpp"

namespace flatband {

using Json = nlohmann::ordered_json;

// Band ids are 1-based in every external format.

inline Json to_json(const std::vector<CrossingEvent>& l) {
    Json a = Json::array();
    for (const auto& e : l)
        a.push_back({{"other", e.other + 1}, {"over", e.over}, {"from_left", e.from_left}, {"id", e.id}});
    return a;
}

inline Json to_json(const EventLists& ev) {
    Json a = Json::array();
    for (const auto& l : ev) a.push_back(to_json(l));
    return a;
}

inline Json to_json(const IntMatrix& m) {
    Json a = Json::array();
    for (const auto& r : m) a.push_back(r);
    return a;
}

inline Json to_json(const LaurentPoly& p) {
    Json c = Json::object();
    for (auto [e, v] : p.terms()) c[std::to_string(e)] = v;
    return c;
}

inline Json to_json(const Fingerprint& f) {
    return {{"mu", f.mu},
            {"alexander", f.delta.to_string()},
            {"alexander_terms", to_json(f.delta)},
            {"det", f.det},
            {"signature", f.sigma},
            {"beta1", f.beta1}};
}

inline Json to_json(const SurfacePresentation& p) {
    const int n = p.band_count();
    Json order = Json::array();
    for (const auto& be : p.order) order.push_back({{"band", be.band + 1}, {"end", be.end}});
    Json pairing = Json::array();
    for (auto [a, b] : pairing_of(p)) pairing.push_back({label_name(a, n), label_name(b, n)});
    Json j = {{"kind", "surface"},
              {"discs", 1},
              {"bands", n},
              {"code", serialize(p)},
              {"order", order},
              {"pairing", pairing},
              {"events", to_json(p.events)},
              {"layers", nullptr},
              {"provenance", to_string(p.provenance)},
              {"unchecked_realizability", p.unchecked_realizability}};
    if (p.layers) {
        Json l = Json::array();
        for (int b : *p.layers) l.push_back(b + 1);
        j["layers"] = l;
    }
    return j;
}

inline Json to_json(const DipolePresentation& d) {
    Json d1 = Json::array(), d2 = Json::array();
    for (int b : d.d1) d1.push_back(b + 1);
    for (int b : d.d2) d2.push_back(b + 1);
    return {{"kind", "dipole"},     {"discs", 2},          {"bands", d.band_count()},
            {"code", serialize(d)}, {"d1", d1},            {"d2", d2},
            {"connector", d.connector + 1}, {"events", to_json(d.events)},
            {"provenance", to_string(d.provenance)}};
}

inline Json to_json(const K2nDiagram& k) {
    Json r1 = Json::array(), r2 = Json::array(), edges = Json::array();
    for (int b : k.rot1) r1.push_back(b + 1);
    for (int b : k.rot2) r2.push_back(b + 1);
    for (const auto& e : k.edges)
        edges.push_back({{"hub", e.hub == 0 ? "D1" : "D2"}, {"middle", e.middle + 1}, {"voltage", e.voltage}});
    return {{"kind", "k2n"},
            {"middle_vertices", k.middle_count()},
            {"rotation_d1", r1},
            {"rotation_d2", r2},
            {"edges", edges},
            {"events", to_json(k.events)},
            {"split", k.split},
            {"connector", k.connector + 1},
            {"flipped", {k.flipped[0], k.flipped[1]}}};
}

inline Json to_json(const MoveRecord& r) {
    Json j = {{"kind", r.kind == MoveKind::relabel ? "relabel" : "slide"}};
    if (r.kind == MoveKind::relabel) {
        j["offset"] = r.offset;
    } else {
        j["moving_band"] = r.slide.moving_band + 1;
        j["moving_end"] = r.slide.moving_end;
        j["along_band"] = r.slide.along_band + 1;
        j["target_side"] = r.slide.target_side == Side::after ? "after" : "before";
    }
    j["rule"] = r.rule;
    j["before"] = to_json(r.before);
    j["after"] = to_json(r.after);
    return j;
}

inline Json to_json(const MoveLog& log) {
    Json a = Json::array();
    for (const auto& r : log.moves) a.push_back(to_json(r));
    return a;
}

// Reads back only what replay needs; fingerprints are recomputed.
inline MoveLog move_log_from_json(const Json& j) {
    MoveLog log;
    try {
        for (const auto& m : j) {
            MoveRecord r;
            const std::string kind = m.at("kind").get<std::string>();
            if (kind == "relabel") {
                r.kind = MoveKind::relabel;
                r.offset = m.at("offset").get<int>();
            } else if (kind == "slide") {
                r.kind = MoveKind::slide;
                r.slide.moving_band = m.at("moving_band").get<int>() - 1;
                r.slide.moving_end = m.at("moving_end").get<int>();
                r.slide.along_band = m.at("along_band").get<int>() - 1;
                const std::string side = m.at("target_side").get<std::string>();
                if (side != "after" && side != "before") throw Error(ErrorKind::parse, "bad target_side");
                r.slide.target_side = side == "after" ? Side::after : Side::before;
            } else {
                throw Error(ErrorKind::parse, "unknown move kind '" + kind + "'");
            }
            if (m.contains("rule")) r.rule = m.at("rule").get<std::string>();
            log.moves.push_back(r);
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::parse, std::string("move log: ") + e.what());
    }
    return log;
}

inline Json to_json(const GaussCode& g) {
    Json a = Json::array();
    for (const auto& comp : g) {
        Json c = Json::array();
        for (const auto& e : comp) c.push_back({{"crossing", e.crossing + 1}, {"over", e.over}, {"sign", e.sign}});
        a.push_back(c);
    }
    return a;
}

inline Json to_json(const BraidWord& b) {
    return {{"kind", "braid"}, {"strands", b.strands}, {"letters", b.letters}, {"code", serialize(b)}};
}

} // namespace flatband

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "boundary.hpp"
#include "braid.hpp"
#include "codes.hpp"
#include "json_io.hpp"
#include "moves.hpp"

namespace flatband {

enum class Stage { normalize, dipole, k2n };

struct PipelineOptions {
    Stage stop_after = Stage::k2n;
    std::vector<int> flips; // hubs to flip, in order
};

struct StageFingerprint {
    std::string stage;
    Fingerprint fp;
};

struct RunReport {
    std::string input;
    MoveLog log;
    std::vector<StageFingerprint> stages;
    std::optional<SurfacePresentation> initial;
    std::optional<SurfacePresentation> normalized;
    std::optional<DipolePresentation> dipole;
    std::optional<K2nDiagram> k2n;
    std::optional<GaussCode> boundary;
    std::vector<std::string> warnings;
    std::string status = "ok"; // ok | iteration-cap-exceeded | fingerprint-mismatch

    bool fingerprints_agree() const {
        for (const auto& s : stages)
            if (!(s.fp == stages.front().fp)) return false;
        return true;
    }
};

inline RunReport run_pipeline(const std::string& input_text, const AnyPresentation& input, const PipelineOptions& opt) {
    RunReport r;
    r.input = input_text;
    std::optional<DipolePresentation> dip;
    if (const auto* p = std::get_if<SurfacePresentation>(&input)) {
        r.initial = *p;
        if (p->unchecked_realizability) r.warnings.push_back("unchecked-realizability: hand-written event lists");
        r.stages.push_back({"input", fingerprint(*p)});
        r.boundary = boundary_gauss_code(*p);
        SurfacePresentation q;
        try {
            q = normalize_into(*p, r.log);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::iteration_cap_exceeded) throw;
            r.status = "iteration-cap-exceeded";
            r.warnings.push_back(e.what());
            return r;
        }
        for (const auto& m : r.log.moves)
            if (!(m.before == m.after)) r.status = "fingerprint-mismatch";
        r.normalized = q;
        r.stages.push_back({"normalized", fingerprint(q)});
        if (opt.stop_after == Stage::normalize) {
            if (!r.fingerprints_agree()) r.status = "fingerprint-mismatch";
            return r;
        }
        dip = to_dipole(q);
    } else {
        dip = std::get<DipolePresentation>(input);
    }
    r.dipole = dip;
    r.stages.push_back({"dipole", fingerprint(*dip)});
    if (opt.stop_after != Stage::dipole) {
        K2nDiagram k = to_k2n(*dip);
        r.stages.push_back({"k2n", fingerprint(k)});
        for (int h : opt.flips) {
            k = flip_disc(k, h);
            r.stages.push_back({h == 0 ? "flip-d1" : "flip-d2", fingerprint(k)});
        }
        r.k2n = k;
    }
    if (!r.fingerprints_agree()) r.status = "fingerprint-mismatch";
    return r;
}

inline Json to_json(const RunReport& r) {
    Json stages = Json::array();
    for (const auto& s : r.stages) stages.push_back({{"stage", s.stage}, {"fingerprint", to_json(s.fp)}});
    Json j = {{"input", r.input}, {"status", r.status}, {"stages", stages}, {"moves", to_json(r.log)}};
    j["initial"] = r.initial ? to_json(*r.initial) : Json(nullptr);
    j["normalized"] = r.normalized ? to_json(*r.normalized) : Json(nullptr);
    j["dipole"] = r.dipole ? to_json(*r.dipole) : Json(nullptr);
    j["k2n"] = r.k2n ? to_json(*r.k2n) : Json(nullptr);
    j["boundary_gauss_code"] = r.boundary ? to_json(*r.boundary) : Json(nullptr);
    j["warnings"] = r.warnings;
    return j;
}

// ---- comparing a surface with a braid closure ---------------------------------

enum class MatchLevel { none, unoriented_mirror, unoriented, oriented };

inline const char* to_string(MatchLevel m) {
    switch (m) {
    case MatchLevel::none: return "none";
    case MatchLevel::unoriented_mirror: return "unoriented-mirror";
    case MatchLevel::unoriented: return "unoriented";
    case MatchLevel::oriented: return "oriented";
    }
    return "none";
}

struct VerifyResult {
    Fingerprint surface;
    Fingerprint braid;
    MatchLevel level = MatchLevel::none;
    std::vector<int> reversed; // braid components reversed for the best match (1-based)
    bool mirrored = false;
    bool pass = false;
};

// Oriented comparison uses the braid's own Seifert matrix. Looser levels
// reverse some components of the closure (read off its diagram) and allow
// a mirror image, which flips the signature.
inline VerifyResult verify(const SurfacePresentation& p, const BraidWord& b, MatchLevel required) {
    VerifyResult v;
    v.surface = fingerprint(p);
    v.braid = braid_fingerprint(b);
    auto same = [&](const DiagramInvariants& d, int sgn) {
        return d.mu == v.surface.mu && d.delta == v.surface.delta && d.det == v.surface.det &&
               sgn * d.sigma == v.surface.sigma;
    };
    if (v.surface.same_link_data(v.braid)) {
        v.level = MatchLevel::oriented;
    } else {
        const PlanarDiagram d = braid_diagram(b);
        const int comps = static_cast<int>(diagram_components(d).size());
        for (int sgn : {1, -1}) {
            for (unsigned mask = 0; mask < (1u << comps) && v.level == MatchLevel::none; ++mask) {
                if (mask & 1u) continue; // reversing everything changes nothing
                std::vector<int> which;
                for (int c = 0; c < comps; ++c)
                    if (mask & (1u << c)) which.push_back(c);
                if (which.empty() && sgn == 1) continue;
                if (same(diagram_invariants(reverse_components(d, which)), sgn)) {
                    v.level = sgn == 1 ? MatchLevel::unoriented : MatchLevel::unoriented_mirror;
                    for (int c : which) v.reversed.push_back(c + 1);
                    v.mirrored = sgn == -1;
                }
            }
            if (v.level != MatchLevel::none) break;
        }
    }
    v.pass = v.level >= required && v.level != MatchLevel::none;
    return v;
}

inline Json to_json(const VerifyResult& v) {
    return {{"surface", to_json(v.surface)}, {"braid", to_json(v.braid)},   {"match", to_string(v.level)},
            {"reversed_components", v.reversed}, {"mirrored", v.mirrored}, {"pass", v.pass}};
}

} // namespace flatband

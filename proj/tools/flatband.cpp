// flatband: normalize flat banded surfaces to K(2,n) form and check the
// boundary link along the way.

#include <CLI11.hpp>

#include <flatband/oracle.hpp>
#include <flatband/pipeline.hpp>
#include <flatband/render.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

using namespace flatband;

namespace {

enum Exit { ok = 0, verify_failed = 1, parse_error = 2, cap_exceeded = 3, mismatch = 4 };

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::parse, "cannot read " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

// drop comment lines starting with '#'
std::string strip_comments(const std::string& text) {
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first != std::string::npos && line[first] == '#') continue;
        out += line + "\n";
    }
    auto b = out.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    return out.substr(b, out.find_last_not_of(" \t\r\n") - b + 1);
}

bool is_braid(const std::string& text) { return text.rfind("strands=", 0) == 0; }

void write_file(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::parse, "cannot write " + path);
    out << content;
}

std::string with_suffix(const std::string& path, const std::string& tag) {
    auto dot = path.rfind('.');
    auto slash = path.rfind('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + tag;
    return path.substr(0, dot) + tag + path.substr(dot);
}

RenderConfig load_config(const std::string& path) {
    if (path.empty()) return {};
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::parse, "cannot read config " + path);
    return parse_render_config(in);
}

std::string json_dump(const Json& j) { return j.dump(2) + "\n"; }

int cmd_pipeline(const std::string& input, const std::string& stop, const std::string& flip, const std::string& json_out,
                 const std::string& svg_out, const std::string& config, bool oracle_only) {
    const std::string text = strip_comments(read_input(input));
    if (is_braid(text)) {
        if (!oracle_only) throw Error(ErrorKind::parse, "braid words are accepted only with --oracle-only");
        BraidWord b = parse_braid(text);
        Fingerprint f = braid_fingerprint(b);
        std::cout << "braid " << serialize(b) << "\n  " << f.to_string() << "\n";
        if (!json_out.empty())
            write_file(json_out, json_dump({{"input", text}, {"braid", to_json(b)}, {"fingerprint", to_json(f)}}));
        return ok;
    }
    if (oracle_only) throw Error(ErrorKind::parse, "--oracle-only expects a braid word");
    AnyPresentation p = parse_any(text);
    PipelineOptions opt;
    opt.stop_after = stop == "normalize" ? Stage::normalize : stop == "dipole" ? Stage::dipole : Stage::k2n;
    if (flip == "d1") opt.flips = {0};
    else if (flip == "d2") opt.flips = {1};
    else if (flip == "both") opt.flips = {0, 1};
    RunReport r = run_pipeline(text, p, opt);

    std::cout << "input      " << text << "\n";
    for (const auto& s : r.stages) std::cout << "  " << s.stage << ": " << s.fp.to_string() << "\n";
    if (r.normalized)
        std::cout << "normalized " << serialize(*r.normalized) << "  (" << r.log.size() << " moves)\n";
    if (r.dipole) std::cout << "dipole     " << serialize(*r.dipole) << "\n";
    if (r.k2n) {
        int zero = 0;
        for (const auto& e : r.k2n->edges) zero += e.voltage == 0;
        std::cout << "k2n        K(2," << r.k2n->middle_count() << "), " << r.k2n->edges.size() << " edges, " << zero
                  << " with voltage 0\n";
    }
    for (const auto& w : r.warnings) std::cout << "warning: " << w << "\n";
    std::cout << "status     " << r.status << "\n";

    if (!json_out.empty()) write_file(json_out, json_dump(to_json(r)));
    if (!svg_out.empty()) {
        RenderConfig cfg = load_config(config);
        if (r.initial) write_file(svg_out, render_svg(*r.initial, cfg));
        else if (r.dipole) write_file(svg_out, render_svg(*r.dipole, cfg));
        if (r.k2n) write_file(with_suffix(svg_out, "-k2n"), render_svg(*r.k2n, cfg));
    }
    if (r.status == "iteration-cap-exceeded") return cap_exceeded;
    if (r.status != "ok") return mismatch;
    return ok;
}

int cmd_verify(const std::string& input, const std::string& braid_arg, const std::string& match,
               const std::string& json_out) {
    SurfacePresentation p = parse_presentation(strip_comments(read_input(input)));
    std::string btext = braid_arg;
    if (!is_braid(btext)) btext = strip_comments(read_input(braid_arg));
    BraidWord b = parse_braid(btext);
    MatchLevel need = match == "unoriented" ? MatchLevel::unoriented
                      : match == "mirror"   ? MatchLevel::unoriented_mirror
                                            : MatchLevel::oriented;
    VerifyResult v = verify(p, b, need);
    std::cout << "surface " << v.surface.to_string() << "\n";
    std::cout << "braid   " << v.braid.to_string() << "\n";
    std::cout << "match   " << to_string(v.level);
    if (!v.reversed.empty()) {
        std::cout << " (braid components reversed:";
        for (int c : v.reversed) std::cout << " " << c;
        std::cout << ")";
    }
    if (v.mirrored) std::cout << " (mirror image)";
    std::cout << "\n" << (v.pass ? "PASS" : "FAIL") << "\n";
    if (!json_out.empty()) write_file(json_out, json_dump(to_json(v)));
    return v.pass ? ok : verify_failed;
}

int cmd_render(const std::string& input, const std::string& format, const std::string& out, const std::string& stage,
               const std::string& config) {
    if (format != "svg") throw Error(ErrorKind::parse, "only svg output is supported");
    RenderConfig cfg = load_config(config);
    AnyPresentation a = parse_any(strip_comments(read_input(input)));
    std::string svg;
    if (const auto* d = std::get_if<DipolePresentation>(&a)) {
        svg = stage == "k2n" ? render_svg(to_k2n(*d), cfg) : render_svg(*d, cfg);
    } else {
        const auto& p = std::get<SurfacePresentation>(a);
        if (stage == "input") svg = render_svg(p, cfg);
        else {
            auto q = normalize(p).first;
            if (stage == "normalized") svg = render_svg(q, cfg);
            else if (stage == "dipole") svg = render_svg(to_dipole(q), cfg);
            else svg = render_svg(to_k2n(to_dipole(q)), cfg);
        }
    }
    write_file(out, svg);
    return ok;
}

// Replays the move log of a pipeline report and compares the result with
// the report's normalized presentation byte for byte.
int cmd_replay(const std::string& report_path) {
    Json j;
    try {
        j = Json::parse(read_input(report_path));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::parse, std::string("report: ") + e.what());
    }
    if (!j.contains("input") || !j.contains("moves")) throw Error(ErrorKind::parse, "report lacks input or moves");
    SurfacePresentation p = parse_presentation(j["input"].get<std::string>());
    MoveLog log = move_log_from_json(j["moves"]);
    const std::string got = serialize(replay(p, log));
    std::cout << got << "\n";
    if (j.contains("normalized") && j["normalized"].is_object()) {
        const std::string want = j["normalized"]["code"].get<std::string>();
        if (got != want) {
            std::cout << "MISMATCH, report has " << want << "\n";
            return mismatch;
        }
        std::cout << "identical to report\n";
    }
    return ok;
}

// Randomized normalization run, the command-line face of the property suite.
int cmd_check(std::uint64_t seed, int count, int max_n) {
    std::mt19937_64 rng(seed);
    int failures = 0, caps = 0;
    std::size_t longest = 0;
    for (int it = 0; it < count; ++it) {
        const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n));
        std::vector<int> pos(2 * n);
        std::iota(pos.begin(), pos.end(), 0);
        std::shuffle(pos.begin(), pos.end(), rng);
        std::vector<BandEnd> order(2 * n);
        for (int k = 0; k < n; ++k) {
            order[pos[2 * k]] = {k, 0};
            order[pos[2 * k + 1]] = {k, 1};
        }
        std::vector<int> layers(n);
        std::iota(layers.begin(), layers.end(), 0);
        std::shuffle(layers.begin(), layers.end(), rng);
        SurfacePresentation p = make_layered(order, layers, Provenance::chord_code);
        RunReport r = run_pipeline(serialize(p), p, {});
        longest = std::max(longest, r.log.size());
        if (r.status == "iteration-cap-exceeded") ++caps;
        else if (r.status != "ok" || serialize(replay(p, r.log)) != serialize(*r.normalized)) {
            ++failures;
            std::cout << "failed: " << serialize(p) << "\n";
        }
    }
    std::cout << count << " presentations, seed " << seed << ": " << failures << " failures, " << caps
              << " cap hits, longest log " << longest << "\n";
    if (caps) return cap_exceeded;
    return failures ? mismatch : ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"flat banded surfaces: normalization to K(2,n) diagrams with boundary-link checks"};
    app.require_subcommand(1);

    std::string input = "-", stop = "k2n", flip, json_out, svg_out, config;
    bool oracle_only = false;
    auto* pipe = app.add_subcommand("pipeline", "normalize, split into a dipole, subdivide to K(2,n)");
    pipe->add_option("input", input, "presentation file, - for stdin");
    pipe->add_option("--stop-after", stop)->check(CLI::IsMember({"normalize", "dipole", "k2n"}));
    pipe->add_option("--flip", flip, "flip hub(s) of the K(2,n) diagram")->check(CLI::IsMember({"d1", "d2", "both"}));
    pipe->add_option("--json", json_out, "write the run report");
    pipe->add_option("--svg", svg_out, "write the chord diagram; the K(2,n) picture goes next to it");
    pipe->add_option("--config", config, "render geometry, key = value");
    pipe->add_flag("--oracle-only", oracle_only, "input is a braid word; report its oracle fingerprint");

    std::string vin, braid, match = "oriented", vjson;
    auto* ver = app.add_subcommand("verify", "compare a surface's boundary with a closed braid");
    ver->add_option("input", vin)->required();
    ver->add_option("braid", braid, "braid word text or a file holding one")->required();
    ver->add_option("--match", match, "weakest accepted match")->check(CLI::IsMember({"oriented", "unoriented", "mirror"}));
    ver->add_option("--json", vjson);

    std::string rin = "-", format = "svg", rout = "-", stage = "input", rconfig;
    auto* ren = app.add_subcommand("render", "draw a presentation as SVG");
    ren->add_option("input", rin);
    ren->add_option("--format", format)->check(CLI::IsMember({"svg"}));
    ren->add_option("-o,--output", rout);
    ren->add_option("--stage", stage)->check(CLI::IsMember({"input", "normalized", "dipole", "k2n"}));
    ren->add_option("--config", rconfig);

    std::string report;
    auto* rep = app.add_subcommand("replay", "re-run the move log of a pipeline report");
    rep->add_option("report", report)->required();

    std::uint64_t seed = 1;
    int count = 500, max_n = 7;
    auto* chk = app.add_subcommand("check", "randomized normalization run");
    chk->add_option("--seed", seed);
    chk->add_option("--count", count);
    chk->add_option("--max-n", max_n)->check(CLI::Range(1, 12));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : parse_error;
    }

    try {
        if (*pipe) return cmd_pipeline(input, stop, flip, json_out, svg_out, config, oracle_only);
        if (*ver) return cmd_verify(vin, braid, match, vjson);
        if (*ren) return cmd_render(rin, format, rout, stage, rconfig);
        if (*rep) return cmd_replay(report);
        if (*chk) return cmd_check(seed, count, max_n);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::parse:
        case ErrorKind::invalid_presentation: return parse_error;
        case ErrorKind::iteration_cap_exceeded: return cap_exceeded;
        default: return mismatch;
        }
    }
    return ok;
}

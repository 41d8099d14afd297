#include "support.hpp"

#include <flatband/codes.hpp>
#include <flatband/json_io.hpp>
#include <flatband/moves.hpp>
#include <flatband/topology.hpp>

#include <gtest/gtest.h>

using namespace flatband;

namespace {

bool same_cyclic_order(const std::vector<BandEnd>& a, const std::vector<BandEnd>& b) {
    const int m = static_cast<int>(a.size());
    for (int r = 0; r < m; ++r) {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) ok = a[(i + r) % m] == b[i];
        if (ok) return true;
    }
    return false;
}

} // namespace

TEST(Slide, BaseCaseInOneSlide) {
    auto p = parse_presentation("chords: (1 2)(1' 2'); layers: (1 2)");
    auto [q, log] = normalize(p);
    ASSERT_EQ(log.size(), 1u);
    EXPECT_EQ(log.moves[0].kind, MoveKind::slide);
    EXPECT_EQ(pairing_to_string(pairing_of(q), 2), "{{1,2'},{2,1'}}");
    EXPECT_EQ(q.provenance, Provenance::slide);
    EXPECT_FALSE(q.layers.has_value());
    EXPECT_EQ(fingerprint(q), fingerprint(p));
}

// one end of {1,2} dragged along {3,2'} empties omega
TEST(Slide, ThreeBandInstance) {
    for (const char* layers : {"(1 2 3)", "(3 2 1)", "(2 1 3)", "(3 1 2)"}) {
        auto p = parse_presentation(std::string("chords: (1 2)(3 2')(1' 3'); layers: ") + layers);
        ASSERT_EQ(omega(p).size(), 1u);
        auto q = band_slide(p, {0, 1, 1, Side::after});
        EXPECT_EQ(pairing_to_string(pairing_of(q), 3), "{{1,2'},{2,1'},{3,3'}}");
        EXPECT_TRUE(omega(q).empty());
        EXPECT_EQ(fingerprint(q), fingerprint(p));
        EXPECT_NO_THROW(validate(q));
    }
}

TEST(Slide, WrongSideIsRejected) {
    auto p = parse_presentation("chords: (1 2)(3 2')(1' 3'); layers: (1 2 3)");
    try {
        band_slide(p, {0, 1, 1, Side::before});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::invalid_slide);
    }
    EXPECT_THROW(band_slide(p, {0, 1, 0, Side::after}), Error);
    EXPECT_THROW(band_slide(p, {7, 0, 1, Side::after}), Error);
}

TEST(Slide, RandomSlidesKeepFingerprintAndUndo) {
    std::mt19937_64 rng(41);
    int undone = 0;
    for (int i = 0; i < 1500; ++i) {
        const int n = 2 + static_cast<int>(rng() % 5);
        auto p = fbtest::random_slid(n, static_cast<int>(rng() % 3), rng);
        const int m = 2 * n;
        const int b = static_cast<int>(rng() % n), e = static_cast<int>(rng() % 2);
        const int pe = end_positions(p)[b][e];
        const bool after = rng() & 1;
        const int c = p.order[after ? (pe + 1) % m : (pe - 1 + m) % m].band;
        if (c == b) continue;
        SurfacePresentation q;
        try {
            q = band_slide(p, {b, e, c, after ? Side::after : Side::before});
        } catch (const Error&) {
            continue;
        }
        EXPECT_NO_THROW(validate(q));
        EXPECT_EQ(fingerprint(q), fingerprint(p)) << serialize(p);
        auto r = band_slide(q, {b, e, c, after ? Side::before : Side::after});
        EXPECT_TRUE(same_cyclic_order(r.order, p.order)) << serialize(p);
        EXPECT_EQ(canonical_ids(r.events), canonical_ids(p.events)) << serialize(p);
        ++undone;
    }
    EXPECT_GT(undone, 500);
}

TEST(Normalize, ExamplesAreAlreadyReady) {
    for (const char* code : {"<(1,4,5,2,3)|(1,2,3,4,5)>", "<(4,5,1,2,3,6)|(1,2,3,4,5,6)>", "<(1)|(1)>"}) {
        auto p = parse_presentation(code);
        auto [q, log] = normalize(p);
        EXPECT_TRUE(log.empty()) << code;
        EXPECT_EQ(q, p);
    }
}

TEST(Normalize, LogRecordsFingerprints) {
    auto p = parse_presentation("chords: (3' 1')(4 2')(5 3)(1 2)(4' 5'); layers: (5 1 2 3 4)");
    auto [q, log] = normalize(p);
    EXPECT_TRUE(is_dipole_ready(q));
    EXPECT_EQ(log.size(), 3u);
    const Fingerprint f = fingerprint(p);
    for (const auto& r : log.moves) {
        EXPECT_EQ(r.before, f);
        EXPECT_EQ(r.after, f);
        EXPECT_FALSE(r.rule.empty());
    }
    EXPECT_EQ(replay(p, log), q);
}

TEST(Normalize, LogSurvivesJson) {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 100; ++i) {
        auto p = fbtest::random_layered(2 + static_cast<int>(rng() % 6), rng);
        auto [q, log] = normalize(p);
        auto back = move_log_from_json(Json::parse(to_json(log).dump()));
        ASSERT_EQ(back.size(), log.size());
        EXPECT_EQ(serialize(replay(p, back)), serialize(q));
    }
}

TEST(Dipole, TwoComponentExample) {
    auto d = to_dipole(parse_presentation("<(1,4,5,2,3)|(1,2,3,4,5)>"));
    EXPECT_EQ(d.band_count(), 6);
    EXPECT_EQ(d.connector, 5);
    EXPECT_TRUE(d.events[5].empty());
    EXPECT_EQ(d.d1.back(), 5);
    EXPECT_EQ(d.d2.back(), 5);
    EXPECT_EQ(parse_dipole_code(serialize(d)), d);
}

TEST(Dipole, KnotExampleAndAnnulus) {
    EXPECT_EQ(to_dipole(parse_presentation("<(4,5,1,2,3,6)|(1,2,3,4,5,6)>")).band_count(), 7);
    auto a = to_dipole(parse_presentation("<(1)|(1)>"));
    EXPECT_EQ(a.band_count(), 2);
    EXPECT_EQ(boundary_components(a), 2);
}

TEST(Dipole, NeedsReadyInput) {
    auto p = parse_presentation("chords: (1 2)(1' 2'); layers: (1 2)");
    try {
        to_dipole(p);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::precondition);
    }
}

TEST(K2n, SubdivisionShape) {
    auto k = to_k2n(to_dipole(parse_presentation("<(1,4,5,2,3)|(1,2,3,4,5)>")));
    EXPECT_EQ(k.middle_count(), 6);
    ASSERT_EQ(k.edges.size(), 12u);
    EXPECT_TRUE(all_voltages(k, false));
    for (int b = 0; b < 6; ++b) {
        EXPECT_EQ(k.edges[2 * b].hub, 0);
        EXPECT_EQ(k.edges[2 * b + 1].hub, 1);
        EXPECT_EQ(k.edges[2 * b].middle, b);
    }
}

TEST(K2n, FlipIsAnInvolutionAndKeepsFingerprint) {
    auto p = parse_presentation("<(4,5,1,2,3,6)|(1,2,3,4,5,6)>");
    auto k = to_k2n(to_dipole(p));
    const Fingerprint f = fingerprint(p);
    EXPECT_EQ(fingerprint(k), f);
    for (int hub : {0, 1}) {
        auto once = flip_disc(k, hub);
        EXPECT_EQ(fingerprint(once), f);
        EXPECT_EQ(flip_disc(once, hub), k);
        EXPECT_EQ(boundary_components(once), f.mu);
    }
    auto both = flip_disc(flip_disc(k, 0), 1);
    EXPECT_EQ(both.edges.size(), 14u);
    EXPECT_TRUE(all_voltages(both, true));
    EXPECT_EQ(fingerprint(both), f);
    EXPECT_EQ(underlying_dipole(both), to_dipole(p));
    EXPECT_THROW(flip_disc(k, 2), Error);
}

TEST(K2n, RandomPipelineKeepsFingerprint) {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 200; ++i) {
        auto p = fbtest::random_layered(1 + static_cast<int>(rng() % 6), rng);
        const Fingerprint f = fingerprint(p);
        auto q = normalize(p).first;
        auto d = to_dipole(q);
        EXPECT_EQ(fingerprint(d), f) << serialize(p);
        auto k = to_k2n(d);
        EXPECT_EQ(fingerprint(k), f);
        EXPECT_EQ(boundary_components(flip_disc(k, static_cast<int>(rng() % 2))), f.mu);
    }
}

#include "support.hpp"

#include <flatband/boundary.hpp>
#include <flatband/braid.hpp>
#include <flatband/codes.hpp>
#include <flatband/oracle.hpp>
#include <flatband/topology.hpp>

#include <gtest/gtest.h>

using namespace flatband;

namespace {

const LaurentPoly t = LaurentPoly::t();

BraidWord random_braid(std::mt19937_64& rng) {
    BraidWord b;
    b.strands = 1 + static_cast<int>(rng() % 4);
    if (b.strands == 1) return b;
    const int len = static_cast<int>(rng() % 9);
    for (int i = 0; i < len; ++i) {
        int g = 1 + static_cast<int>(rng() % (b.strands - 1));
        b.letters.push_back(rng() & 1 ? g : -g);
    }
    return b;
}

void expect_same(const DiagramInvariants& d, const Fingerprint& f, const std::string& what) {
    EXPECT_EQ(d.mu, f.mu) << what;
    EXPECT_EQ(d.delta, f.delta) << what;
    EXPECT_EQ(d.det, f.det) << what;
    EXPECT_EQ(d.sigma, f.sigma) << what;
}

} // namespace

TEST(Braid, Parse) {
    auto b = parse_braid("strands=3; -2 1 2 2 2 1");
    EXPECT_EQ(b.strands, 3);
    EXPECT_EQ(b.letters, (std::vector<int>{-2, 1, 2, 2, 2, 1}));
    EXPECT_EQ(serialize(b), "strands=3; -2 1 2 2 2 1");
    auto u = parse_braid("strands=1;");
    EXPECT_TRUE(u.letters.empty());
    EXPECT_EQ(braid_components(u), 1);
    EXPECT_THROW(parse_braid("strands=2; 2"), Error);
    EXPECT_THROW(parse_braid("strands=2; 0"), Error);
    EXPECT_THROW(parse_braid("1 1 1"), Error);
}

TEST(Braid, KnownClosures) {
    auto tref = braid_fingerprint(parse_braid("strands=2; 1 1 1"));
    EXPECT_EQ(tref.mu, 1);
    EXPECT_EQ(tref.delta, t * t - t + 1);
    EXPECT_EQ(tref.det, 3);
    EXPECT_EQ(tref.sigma, -2);

    auto hopf = braid_fingerprint(parse_braid("strands=2; 1 1"));
    EXPECT_EQ(hopf.mu, 2);
    EXPECT_EQ(hopf.delta, LaurentPoly(1) - t);
    EXPECT_EQ(hopf.det, 2);
    EXPECT_EQ(hopf.sigma, -1);

    auto fig8 = braid_fingerprint(parse_braid("strands=3; 1 -2 1 -2"));
    EXPECT_EQ(fig8.mu, 1);
    EXPECT_EQ(fig8.delta, t * t - 3 * t + 1);
    EXPECT_EQ(fig8.det, 5);
    EXPECT_EQ(fig8.sigma, 0);

    auto unlink = braid_fingerprint(parse_braid("strands=3;"));
    EXPECT_EQ(unlink.mu, 3);
    EXPECT_TRUE(unlink.delta.is_zero());
    EXPECT_EQ(unlink.beta1, 2);

    auto t24 = braid_fingerprint(parse_braid("strands=2; 1 1 1 1"));
    EXPECT_EQ(t24.mu, 2);
    EXPECT_EQ(t24.delta, LaurentPoly(1) - t + t * t - t * t * t);
    EXPECT_EQ(t24.det, 4);
    EXPECT_EQ(t24.sigma, -3);
}

TEST(Braid, SeifertRouteMatchesDiagramRoute) {
    std::mt19937_64 rng(71);
    for (int i = 0; i < 400; ++i) {
        auto b = random_braid(rng);
        auto pd = braid_diagram(b);
        EXPECT_EQ(link_components(pd), braid_components(b));
        expect_same(diagram_invariants(pd), braid_fingerprint(b), serialize(b));
    }
}

TEST(BoundaryDiagram, MatchesSeifertFingerprint) {
    std::mt19937_64 rng(72);
    for (int i = 0; i < 400; ++i) {
        const int n = 1 + static_cast<int>(rng() % 6);
        auto p = i % 2 ? fbtest::random_layered(n, rng) : fbtest::random_slid(n, 3, rng);
        expect_same(diagram_invariants(boundary_diagram(p)), fingerprint(p), serialize(p));
    }
}

TEST(Geometric, SmallCases) {
    auto p = parse_presentation("chords: (1 1')(2 2'); layers: (1 2)");
    EXPECT_EQ(std::abs(geometric_linking(p, 0, 1) - geometric_linking(p, 1, 0)), 1);
    auto v = seifert_matrix(p);
    EXPECT_EQ(geometric_linking(p, 0, 1), v[0][1]);
    EXPECT_EQ(geometric_linking(p, 1, 0), v[1][0]);

    auto q = parse_presentation("chords: (1 2)(1' 2'); layers: (2 1)");
    EXPECT_EQ(geometric_linking(q, 0, 1), 0);
    EXPECT_EQ(geometric_linking(q, 1, 0), 0);

    try {
        geometric_linking(p, 1, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::precondition);
    }
    auto slid = normalize(parse_presentation("chords: (1 2)(1' 2'); layers: (1 2)")).first;
    try {
        geometric_linking(slid, 0, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::unsupported);
    }
}

TEST(Geometric, AgreesOnRandomLayered) {
    std::mt19937_64 rng(73);
    for (int i = 0; i < 60; ++i) {
        auto p = fbtest::random_layered(2 + static_cast<int>(rng() % 4), rng);
        EXPECT_EQ(geometric_seifert_matrix(p), seifert_matrix(p)) << serialize(p);
    }
}

TEST(Bruteforce, Depths) {
    auto ready = parse_presentation("<(1,4,5,2,3)|(1,2,3,4,5)>");
    auto r0 = bruteforce_normalize(ready, 0);
    ASSERT_TRUE(r0);
    EXPECT_TRUE(r0->second.empty());

    auto base = parse_presentation("chords: (1 2)(1' 2'); layers: (1 2)");
    EXPECT_FALSE(bruteforce_normalize(base, 0));
    auto r1 = bruteforce_normalize(base, 1);
    ASSERT_TRUE(r1);
    EXPECT_EQ(r1->second.size(), 1u);
    EXPECT_EQ(pairing_to_string(pairing_of(r1->first), 2), "{{1,2'},{2,1'}}");
}

TEST(Bruteforce, NeverLongerThanGreedy) {
    std::mt19937_64 rng(74);
    int compared = 0;
    for (int i = 0; i < 40; ++i) {
        auto p = fbtest::random_layered(2 + static_cast<int>(rng() % 3), rng);
        auto [q, log] = normalize(p);
        auto best = bruteforce_normalize(p, static_cast<int>(log.size()));
        ASSERT_TRUE(best) << serialize(p);
        EXPECT_LE(best->second.size(), log.size());
        EXPECT_TRUE(is_dipole_ready(best->first));
        EXPECT_EQ(fingerprint(best->first), fingerprint(p));
        EXPECT_EQ(serialize(replay(p, best->second)), serialize(best->first));
        ++compared;
    }
    EXPECT_EQ(compared, 40);
}

#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "codes.hpp"
#include "diagram.hpp"
#include "invariants.hpp"

namespace flatband {

struct BraidWord {
    int strands = 1;
    std::vector<int> letters; // +-i is sigma_i^(+-1), 1 <= i < strands
    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

inline void validate(const BraidWord& b) {
    if (b.strands < 1) throw Error(ErrorKind::parse, "strand count must be positive");
    for (int g : b.letters) {
        if (g == 0) throw Error(ErrorKind::parse, "zero is not a braid letter");
        if (std::abs(g) >= b.strands)
            throw Error(ErrorKind::parse, "generator " + std::to_string(g) + " out of range");
    }
}

// "strands=3; -2 1 2 2 2 1"
inline BraidWord parse_braid(const std::string& text) {
    detail::Cursor c(text);
    c.expect_word("strands=");
    BraidWord b;
    b.strands = c.number();
    c.expect(';');
    while (!c.at_end()) b.letters.push_back(c.number());
    validate(b);
    return b;
}

inline std::string serialize(const BraidWord& b) {
    std::string s = "strands=" + std::to_string(b.strands) + ";";
    for (int g : b.letters) s += " " + std::to_string(g);
    return s;
}

inline int braid_components(const BraidWord& b) {
    std::vector<int> perm(b.strands);
    std::iota(perm.begin(), perm.end(), 0);
    for (int g : b.letters) std::swap(perm[std::abs(g) - 1], perm[std::abs(g)]);
    std::vector<bool> seen(b.strands, false);
    int c = 0;
    for (int s = 0; s < b.strands; ++s) {
        if (seen[s]) continue;
        ++c;
        for (int x = s; !seen[x]; x = perm[x]) seen[x] = true;
    }
    return c;
}

// Seifert matrix of the canonical surface of the braid closure: one disc per
// strand, one half-twisted band per letter. The basis loops run between
// consecutive bands on the same pair of strands. A gap with no bands at all
// makes the surface disconnected; tubing it back adds a null basis element.
inline IntMatrix braid_seifert_matrix(const BraidWord& b) {
    validate(b);
    const auto& x = b.letters;
    const int len = static_cast<int>(x.size());
    std::vector<int> h(len, -1);
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j)
            if (std::abs(x[j]) == std::abs(x[i])) { h[i] = j; break; }
    IntMatrix a = zero_matrix(len);
    std::vector<int> gens;
    for (int i = 0; i < len; ++i) {
        if (h[i] < 0) continue;
        gens.push_back(i);
        const int hi = h[i];
        const int s = x[i] + x[hi];
        a[i][i] = s > 0 ? -1 : (s < 0 ? 1 : 0);
        for (int j = i + 1; j < len; ++j) {
            if (j > hi) break;
            if (hi > h[j]) continue;
            if (j == hi) {
                if (x[j] > 0) a[j][i] = 1;
                else a[i][j] = -1;
            } else if (std::abs(std::abs(x[i]) - std::abs(x[j])) > 1) {
            } else if (std::abs(x[i]) - std::abs(x[j]) == 1) {
                a[j][i] = -1;
            } else if (std::abs(x[j]) - std::abs(x[i]) == 1) {
                a[i][j] = 1;
            }
        }
    }
    std::vector<bool> used(b.strands, false);
    for (int g : x) used[std::abs(g)] = true;
    int missing = 0;
    for (int g = 1; g < b.strands; ++g)
        if (!used[g]) ++missing;
    const int n = static_cast<int>(gens.size());
    IntMatrix v = zero_matrix(n + missing);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) v[r][c] = a[gens[r]][gens[c]];
    return v;
}

inline Fingerprint braid_fingerprint(const BraidWord& b) {
    return fingerprint_of(braid_components(b), braid_seifert_matrix(b));
}

// Closed braid as a planar diagram. Strands run upward; at a letter the
// left strand L enters at the SW slot and the right strand R at SE.
inline PlanarDiagram braid_diagram(const BraidWord& b) {
    validate(b);
    PlanarDiagram d;
    std::vector<int> cur(b.strands);
    std::iota(cur.begin(), cur.end(), 0);
    int next_edge = b.strands;
    for (int g : b.letters) {
        const int i = std::abs(g) - 1;
        const int l = cur[i], r = cur[i + 1];
        const int nl = next_edge++, nr = next_edge++;
        const int c = d.crossing_count();
        // slots read as SW, SE, NE, NW: a 45 degree turn of S, E, N, W
        d.x.push_back({l, r, nl, nr});
        d.head[l] = {c, 0};
        d.head[r] = {c, 1};
        d.over.push_back(g > 0 ? 0 : 1);
        cur[i] = nr;
        cur[i + 1] = nl;
    }
    // close up: the top end of strand k is the bottom edge k
    std::map<int, int> ident;
    for (int k = 0; k < b.strands; ++k) ident[cur[k]] = k;
    for (auto& xs : d.x)
        for (int& e : xs)
            if (auto it = ident.find(e); it != ident.end()) e = it->second;
    for (int k = 0; k < b.strands; ++k)
        if (cur[k] == k) ++d.free_loops; // strand never touched
    return d;
}

} // namespace flatband

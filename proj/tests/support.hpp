#pragma once

#include <flatband/codes.hpp>
#include <flatband/moves.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace fbtest {

using namespace flatband;

inline SurfacePresentation random_layered(int n, std::mt19937_64& rng) {
    std::vector<int> pos(2 * n);
    std::iota(pos.begin(), pos.end(), 0);
    std::shuffle(pos.begin(), pos.end(), rng);
    std::vector<BandEnd> order(2 * n);
    for (int k = 0; k < n; ++k) {
        int a = pos[2 * k], b = pos[2 * k + 1];
        if (rng() & 1) std::swap(a, b);
        order[a] = {k, 0};
        order[b] = {k, 1};
    }
    std::vector<int> layers(n);
    std::iota(layers.begin(), layers.end(), 0);
    std::shuffle(layers.begin(), layers.end(), rng);
    return make_layered(order, layers, Provenance::chord_code);
}

// Layered presentation followed by a few random legal slides.
inline SurfacePresentation random_slid(int n, int slides, std::mt19937_64& rng) {
    SurfacePresentation p = random_layered(n, rng);
    const int m = 2 * n;
    for (int s = 0, tries = 0; s < slides && tries < 50 && n > 1; ++tries) {
        const int b = static_cast<int>(rng() % n), e = static_cast<int>(rng() % 2);
        const int pe = end_positions(p)[b][e];
        const bool after = rng() & 1;
        const int c = p.order[after ? (pe + 1) % m : (pe - 1 + m) % m].band;
        if (c == b) continue;
        try {
            p = band_slide(p, {b, e, c, after ? Side::after : Side::before});
            ++s;
        } catch (const Error&) {
        }
    }
    return p;
}

// All perfect matchings of 0..2n-1, each pair (lo, hi).
inline void for_each_matching(int n, const std::function<void(const std::vector<std::pair<int, int>>&)>& f) {
    std::vector<std::pair<int, int>> cur;
    std::vector<bool> used(2 * n, false);
    std::function<void()> rec = [&] {
        int first = -1;
        for (int i = 0; i < 2 * n; ++i)
            if (!used[i]) { first = i; break; }
        if (first < 0) { f(cur); return; }
        used[first] = true;
        for (int j = first + 1; j < 2 * n; ++j) {
            if (used[j]) continue;
            used[j] = true;
            cur.push_back({first, j});
            rec();
            cur.pop_back();
            used[j] = false;
        }
        used[first] = false;
    };
    rec();
}

inline SurfacePresentation from_matching(const std::vector<std::pair<int, int>>& mt, const std::vector<int>& layers) {
    const int n = static_cast<int>(mt.size());
    std::vector<BandEnd> order(2 * n);
    for (int k = 0; k < n; ++k) {
        order[mt[k].first] = {k, 0};
        order[mt[k].second] = {k, 1};
    }
    return make_layered(order, layers, Provenance::chord_code);
}

} // namespace fbtest

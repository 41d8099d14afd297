#pragma once

#include <array>
#include <vector>

#include "core.hpp"

namespace flatband {

// Two discs joined by bands. Every band runs from D1 (end 0) to D2 (end 1);
// d1 and d2 list band ids in clockwise order cut at the connector side.
struct DipolePresentation {
    std::vector<int> d1;
    std::vector<int> d2;
    EventLists events;
    int connector = 0;
    Provenance provenance = Provenance::dipole_move;

    int band_count() const { return static_cast<int>(events.size()); }
    int disc_count() const { return 2; }

    friend bool operator==(const DipolePresentation&, const DipolePresentation&) = default;
};

inline void validate(const DipolePresentation& d) {
    const int k = d.band_count();
    if (k < 1) throw Error(ErrorKind::invalid_presentation, "dipole without bands");
    if (static_cast<int>(d.d1.size()) != k || !is_permutation_of_range(d.d1, 0) ||
        static_cast<int>(d.d2.size()) != k || !is_permutation_of_range(d.d2, 0))
        throw Error(ErrorKind::invalid_presentation, "each band needs one end on each disc");
    if (d.connector < 0 || d.connector >= k)
        throw Error(ErrorKind::invalid_presentation, "connector is not a band");
    validate_events(d.events);
    if (!d.events[d.connector].empty())
        throw Error(ErrorKind::invalid_presentation, "connector band must be free of crossings");
}

} // namespace flatband

namespace flatband {

// Subdivided dipole: middle vertex m_b sits in the middle of band b.
// Edge 2b joins D1 to m_b, edge 2b+1 joins m_b to D2.
struct K2nEdge {
    int hub = 0;    // 0 = D1, 1 = D2
    int middle = 0;
    int voltage = 0; // -1, 0, +1 half twists
    friend bool operator==(const K2nEdge&, const K2nEdge&) = default;
};

struct K2nDiagram {
    std::vector<int> rot1; // middle vertices clockwise around D1
    std::vector<int> rot2; // middle vertices clockwise around D2
    std::vector<K2nEdge> edges;
    EventLists events;      // per band, D1 -> D2, as in the dipole
    std::vector<int> split; // events [0, split[b]) sit on edge 2b, the rest on 2b+1
    int connector = 0;
    std::array<bool, 2> flipped{false, false};

    int middle_count() const { return static_cast<int>(events.size()); }

    friend bool operator==(const K2nDiagram&, const K2nDiagram&) = default;
};

} // namespace flatband

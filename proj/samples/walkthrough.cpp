// Library walkthrough: take a chord diagram, normalize it, split it into a
// dipole, subdivide, flip both hubs, and print the fingerprint at each step.

#include <flatband/codes.hpp>
#include <flatband/moves.hpp>
#include <flatband/topology.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace flatband;
    const std::string code = argc > 1 ? argv[1] : "chords: (3' 1')(4 2')(5 3)(1 2)(4' 5'); layers: (5 1 2 3 4)";
    try {
        SurfacePresentation p = parse_presentation(code);
        std::cout << "input      " << pairing_to_string(pairing_of(p), p.band_count()) << "\n"
                  << "           " << fingerprint(p).to_string() << "\n";

        auto [q, log] = normalize(p);
        for (const auto& m : log.moves) {
            if (m.kind == MoveKind::relabel)
                std::cout << "  relabel by " << m.offset << "\n";
            else
                std::cout << "  slide band " << m.slide.moving_band + 1 << " end " << m.slide.moving_end
                          << " along band " << m.slide.along_band + 1 << "  (" << m.rule << ")\n";
        }
        std::cout << "normalized " << pairing_to_string(pairing_of(q), q.band_count()) << "\n";

        DipolePresentation d = to_dipole(q);
        std::cout << "dipole     " << serialize(d) << "\n";

        K2nDiagram k = flip_disc(flip_disc(to_k2n(d), 0), 1);
        std::cout << "K(2," << k.middle_count() << ")     all edges twisted: " << (all_voltages(k, true) ? "yes" : "no")
                  << "\n           " << fingerprint(k).to_string() << "\n";
        auto e = euler_data(k);
        std::cout << "           chi " << e.chi << ", genus " << e.genus << "\n";
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}

// Build the jet and Atiyah fibers over a point for chosen dimensions, print
// their exact sequences, and close the duality square.

#include <cstdio>

#include "dvblab/dvblab.hpp"

using namespace dvblab;

int main(int argc, char** argv) {
    int dt = 2, de = 3;
    if (argc == 3) {
        dt = std::atoi(argv[1]);
        de = std::atoi(argv[2]);
    }
    const GeomContext g = geom_context(dt, de);
    std::printf("fiber models over (dim T, dim E) = (%d, %d)\n\n", dt, de);

    const FiberModel jet = jet_fiber(g);
    const FiberModelReport jr = check_jet(jet, 20, 1);
    std::printf("jet:    0 -> T*(x)E [%d] -> J [%d] -> E [%d] -> 0   (expect dim J = %d)\n", jet.seq.s.left.dim,
                jr.dim, jet.seq.s.right.dim, jr.expected_dim);
    std::printf("        direct model (phi : T -> E, e): %s\n\n", jr.ok() ? "isomorphic, laws hold" : "FAILED");

    const FiberModel at = atiyah_fiber(g);
    const FiberModelReport ar = check_atiyah(at, 20, 2);
    std::printf("atiyah: 0 -> E*(x)E [%d] -> D [%d] -> T [%d] -> 0   (expect dim D = %d)\n", at.seq.s.left.dim,
                ar.dim, at.seq.s.right.dim, ar.expected_dim);
    std::printf("        direct model (psi : E* -> E*, anchor x): %s\n\n", ar.ok() ? "isomorphic, laws hold" : "FAILED");

    const SquareReport sq = square_report(g, 15, 3);
    std::printf("duality square:\n");
    for (const auto& e : sq.edges)
        std::printf("  %-34s %s%s%s\n", e.name.c_str(), e.passed ? "pass" : "FAIL", e.note.empty() ? "" : "  -- ",
                    e.note.c_str());
    std::printf("  %-34s %s%s%s\n", "mutual consistency", sq.consistency ? "pass" : "FAIL",
                sq.consistency_note.empty() ? "" : "  -- ", sq.consistency_note.c_str());
    return sq.all_passed() && jr.ok() && ar.ok() ? 0 : 1;
}

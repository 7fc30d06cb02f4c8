#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dvblab/dualization.hpp"

namespace dvblab {

/// Fiber data for the tangent/cotangent/jet/Atiyah examples: the tangent
/// space of the base at the chosen point and the fiber of the bundle.
struct GeomContext {
    Space T, E;
};

inline GeomContext geom_context(int dim_t, int dim_e) {
    return GeomContext{Space(dim_t, "T"), Space(dim_e, "E")};
}

/// Slice model of the tangent double of E: sides (T, E), core E.
inline TrivialDVB tangent_double(const GeomContext& g) { return TrivialDVB(g.T, g.E, g.E); }

/// Slice model of the tangent double of E*: sides (T, E*), core E*.
inline TrivialDVB tangent_double_dual_side(const GeomContext& g) {
    return TrivialDVB(g.T, dual(g.E), dual(g.E));
}

/// Cotangent double of E, the dual of the tangent double over E:
/// sides (E, E*), core T*.
inline TrivialDVB cotangent_double(const GeomContext& g) {
    return flip(dual_over_B(tangent_double(g)).dual);
}

/// Cotangent double of E*: sides (E*, E), core T*.
inline TrivialDVB cotangent_double_of_dual(const GeomContext& g) {
    return flip(dual_over_B(tangent_double_dual_side(g)).dual);
}

// ---------------------------------------------------------------------------
// Jet and Atiyah fibers
// ---------------------------------------------------------------------------

/// A fiber model built as the double-linear function space of one of the
/// tangent/cotangent doubles, together with its direct description and the
/// certified isomorphism between the two.
struct FiberModel {
    GeomContext ctx;
    TrivialDVB model;  // the double whose function space realizes the fiber
    XSpace xs;
    DVBStarSeq seq;    // in the printed kernel order
    LinMap reorder;    // printed kernel -> natural kernel of the function space
    Space direct;      // coordinates of the direct model, (hom | side) blocks
    LinMap iso;        // function-space coordinates -> direct coordinates
};

/// First-order jet fiber: 0 -> T*(x)E -> JE -> E -> 0, realized as the
/// function space of the tangent double of E*. The direct model is the set
/// of pairs (phi, e) with phi : T -> E the trivialized horizontal lift.
inline FiberModel jet_fiber(const GeomContext& g) {
    FiberModel f;
    f.ctx = g;
    f.model = tangent_double_dual_side(g);
    f.xs = xspace(f.model);
    f.seq = f.xs.seq; // kernel T*(x)E already in the printed order
    f.reorder = identity(f.seq.s.left);
    f.direct = Space(g.T.dim * g.E.dim + g.E.dim, "J(" + g.E.label + ")");
    f.iso = identity(f.xs.seq.pi());
    f.iso.cod = f.direct; // the direct coordinates coincide blockwise
    return f;
}

/// Atiyah fiber: 0 -> E*(x)E -> DE -> T -> 0, realized as the function
/// space of the cotangent double of E*. Its natural kernel E(x)E* is
/// reordered to the printed E*(x)E through the explicit swap. The direct
/// model is the set of pairs (psi, x) with psi : E* -> E* the trivialized
/// vertical part of a derivation-like element over the anchor x.
inline FiberModel atiyah_fiber(const GeomContext& g) {
    FiberModel f;
    f.ctx = g;
    f.model = cotangent_double_of_dual(g);
    f.xs = xspace(f.model);
    const Space Es = dual(g.E);
    const Space printed = tensor(Es, g.E);
    f.reorder = swap_map(Es, g.E); // E*(x)E -> E(x)E*
    LinMap e = compose(f.xs.seq.i(), f.reorder);
    f.seq = DVBStarSeq(Es, g.E, g.T,
                       ShortExactSeq(printed, f.xs.seq.pi(), f.xs.seq.s.right, std::move(e), f.xs.seq.j()));
    f.direct = Space(g.E.dim * g.E.dim + g.T.dim, "D(" + g.E.label + ")");
    // theta in E(x)E* reshapes (transposed) into psi : E* -> E*; the anchor
    // coordinate passes through unchanged.
    LinMap iso(f.xs.seq.pi(), f.direct);
    const int de = g.E.dim;
    for (int i = 0; i < de; ++i)
        for (int k = 0; k < de; ++k) iso.at(k * de + i, i * de + k) = 1;
    for (int t = 0; t < g.T.dim; ++t) iso.at(de * de + t, de * de + t) = 1;
    f.iso = std::move(iso);
    return f;
}

struct FiberModelReport {
    int dim = 0;
    int expected_dim = 0;
    bool iso_invertible = false;
    bool kernel_square = false;
    bool quotient_square = false;
    bool evaluation = true;
    bool structure_law = true;

    bool ok() const {
        return dim == expected_dim && iso_invertible && kernel_square && quotient_square && evaluation && structure_law;
    }
};

/// Certify the jet model: dimension count, the isomorphism with the direct
/// model, evaluation consistency sigma(x, e*, de*) = <de*, e> + <e*, phi(x)>,
/// and the jet addition law evaluated pointwise in the tangent double.
inline FiberModelReport check_jet(const FiberModel& f, int trials, std::uint64_t seed) {
    const int dt = f.ctx.T.dim, de = f.ctx.E.dim;
    FiberModelReport rep;
    rep.dim = f.seq.pi().dim;
    rep.expected_dim = dt * de + de;
    rep.iso_invertible = rank(f.iso) == f.iso.rows() && f.iso.rows() == f.iso.cols();

    // direct kernel map: phi-block inclusion; direct quotient: e-block projection
    LinMap e_direct(f.seq.s.left, f.direct);
    for (int t = 0; t < dt * de; ++t) e_direct.at(t, t) = 1;
    LinMap p_direct(f.direct, f.seq.s.right);
    for (int k = 0; k < de; ++k) p_direct.at(k, dt * de + k) = 1;
    rep.kernel_square = compose(f.iso, f.seq.i()) == e_direct;
    rep.quotient_square = compose(p_direct, f.iso) == f.seq.j();

    const TrivialDVB te = tangent_double(f.ctx); // where horizontal lifts take values
    for (int n = 0; n < trials; ++n) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(n));
        const Vec sigma = rng.vec(f.seq.pi().dim);
        const Vec dir = f.iso.apply(sigma);
        const LinMap phi = hom_from_tensor(Vec(dir.begin(), dir.begin() + dt * de), f.ctx.T, f.ctx.E);
        const Vec e_pt(dir.begin() + dt * de, dir.end());
        const Vec x = rng.vec(dt), estar = rng.vec(de), destar = rng.vec(de);
        // function-space evaluation on the tangent double of E*
        const Rat lhs = f.xs.eval(sigma, DVBElement{x, estar, destar});
        const Rat rhs = dot(destar, e_pt) + dot(estar, phi.apply(x));
        if (lhs != rhs) rep.evaluation = false;

        // r (mu1, e1) + (mu2, e2) = (r mu1 + mu2, r e1 + e2), with the sum of
        // lifts defined pointwise by the prolonged structure of TE
        const Vec s1 = rng.vec(f.seq.pi().dim), s2 = rng.vec(f.seq.pi().dim);
        const Rat r = rng.scalar();
        const Vec d1 = f.iso.apply(s1), d2 = f.iso.apply(s2);
        const LinMap phi1 = hom_from_tensor(Vec(d1.begin(), d1.begin() + dt * de), f.ctx.T, f.ctx.E);
        const LinMap phi2 = hom_from_tensor(Vec(d2.begin(), d2.begin() + dt * de), f.ctx.T, f.ctx.E);
        const Vec e1(d1.begin() + dt * de, d1.end()), e2(d2.begin() + dt * de, d2.end());
        const Vec dsum = f.iso.apply(add(scale(r, s1), s2));
        const LinMap phis = hom_from_tensor(Vec(dsum.begin(), dsum.begin() + dt * de), f.ctx.T, f.ctx.E);
        const Vec es(dsum.begin() + dt * de, dsum.end());
        if (es != add(scale(r, e1), e2)) rep.structure_law = false;
        const Vec xp = rng.vec(dt);
        const DVBElement mu1{xp, e1, phi1.apply(xp)};
        const DVBElement mu2{xp, e2, phi2.apply(xp)};
        const DVBElement pointwise = combine_A(te, r, mu1, mu2);
        const DVBElement direct{xp, es, phis.apply(xp)};
        if (!(pointwise == direct)) rep.structure_law = false;
    }
    return rep;
}

/// Certify the Atiyah model: dimension count, the isomorphism with the
/// direct (psi, x) model, evaluation consistency
/// sigma(e*, e, w) = <psi(e*), e> + <w, x>, and the anchor being the plain
/// projection to T.
inline FiberModelReport check_atiyah(const FiberModel& f, int trials, std::uint64_t seed) {
    const int dt = f.ctx.T.dim, de = f.ctx.E.dim;
    const Space Es = dual(f.ctx.E);
    FiberModelReport rep;
    rep.dim = f.seq.pi().dim;
    rep.expected_dim = de * de + dt;
    rep.iso_invertible = rank(f.iso) == f.iso.rows() && f.iso.rows() == f.iso.cols();

    // direct kernel: zeta in E*(x)E becomes the matrix unit action on E*
    LinMap e_direct(f.seq.s.left, f.direct);
    for (int i = 0; i < de; ++i)
        for (int j = 0; j < de; ++j) e_direct.at(i * de + j, i * de + j) = 1;
    LinMap p_direct(f.direct, f.seq.s.right);
    for (int t = 0; t < dt; ++t) p_direct.at(t, de * de + t) = 1;
    rep.kernel_square = compose(f.iso, f.seq.i()) == e_direct;
    rep.quotient_square = compose(p_direct, f.iso) == f.seq.j(); // anchor = projection

    for (int n = 0; n < trials; ++n) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(n));
        const Vec sigma = rng.vec(f.seq.pi().dim);
        const Vec dir = f.iso.apply(sigma);
        LinMap psi(Es, Es); // the direct block stores psi row-major
        for (int r = 0; r < de; ++r)
            for (int c = 0; c < de; ++c) psi.at(r, c) = dir[static_cast<std::size_t>(r) * de + c];
        const Vec x(dir.begin() + de * de, dir.end());
        const Vec estar = rng.vec(de), e = rng.vec(de), w = rng.vec(dt);
        const Rat lhs = f.xs.eval(sigma, DVBElement{estar, e, w});
        const Rat rhs = dot(psi.apply(estar), e) + dot(w, x);
        if (lhs != rhs) rep.evaluation = false;
        if (f.seq.j().apply(sigma) != x) rep.evaluation = false;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// The closing square
// ---------------------------------------------------------------------------

struct EdgeReport {
    std::string name;
    bool passed = false;
    std::string note;
};

struct SquareReport {
    GeomContext ctx;
    std::vector<EdgeReport> edges;
    ValuedPairing jet_jet;     // J(E*) x J(E) -> T*
    ValuedPairing jet_atiyah;  // D(E) x J(E)-flavoured -> E
    ValuedPairing jet_atiyah_dual; // D(E*) x J(E*)-flavoured -> E*
    bool consistency = false;
    std::string consistency_note;

    bool all_passed() const {
        for (const auto& e : edges)
            if (!e.passed) return false;
        return consistency;
    }
};

namespace detail {

/// The swap-isomorphism X(flip(D)) -> X(D): (theta, chi) -> (swap theta, chi).
inline LinMap xspace_flip_iso(const XSpace& from_flip, const XSpace& to) {
    const TrivialDVB& D = to.D;
    const LinMap sw = swap_map(dual(D.B), dual(D.A)); // B*(x)A* -> A*(x)B*
    LinMap phi(from_flip.seq.pi(), to.seq.pi());
    const int ab = D.A.dim * D.B.dim;
    for (int r = 0; r < ab; ++r)
        for (int c = 0; c < ab; ++c) phi.at(r, c) = sw.at(r, c);
    for (int k = 0; k < D.C.dim; ++k) phi.at(ab + k, ab + k) = 1;
    return phi;
}

} // namespace detail

/// Certify the four relations between the jet and Atiyah fibers of E and E*:
/// the transposition between the two Atiyah fibers, the T*-valued duality of
/// the two jet fibers, and the E- and E*-valued dualities pairing each jet
/// fiber with the matching Atiyah fiber. Afterwards the machinery is closed:
/// the doubles of the two cotangent models are isomorphic, and the lift
/// construction reproduces the section-built pairings (commutation of the
/// pairing matrices through the derived identifications).
inline SquareReport square_report(const GeomContext& g, int trials, std::uint64_t seed) {
    SquareReport rep;
    rep.ctx = g;
    const GeomContext gstar{g.T, dual(g.E)};
    const int dt = g.T.dim, de = g.E.dim;

    const FiberModel je = jet_fiber(g);
    const FiberModel jestar = jet_fiber(gstar);
    const FiberModel de_fiber = atiyah_fiber(g);
    const FiberModel destar = atiyah_fiber(gstar);

    // Edge 1: the transposition of the Atiyah sequence of E is the Atiyah
    // sequence of E*, through (theta, chi) -> (s1 swap(theta), s2 chi).
    int s1 = 0, s2 = 0; // derived transposition signs, reused by the closing check
    {
        EdgeReport e{"transposition D(E*) <-> D(E)", false, ""};
        const DVBStarSeq t = transpose_seq(de_fiber.seq); // kernel E(x)E*
        for (int a : {1, -1}) {
            for (int b : {1, -1}) {
                LinMap phi(de_fiber.xs.seq.pi(), destar.xs.seq.pi());
                const LinMap sw = swap_map(g.E, dual(g.E)); // E(x)E* -> E*(x)E
                const int ee = de * de;
                for (int r = 0; r < ee; ++r)
                    for (int c = 0; c < ee; ++c) phi.at(r, c) = Rat(a) * sw.at(r, c);
                for (int k = 0; k < dt; ++k) phi.at(ee + k, ee + k) = Rat(b);
                const bool kernel_sq = compose(phi, t.i()) == destar.seq.i();
                const bool quot_sq = compose(destar.seq.j(), phi) == t.j();
                const bool iso = phi.rows() == phi.cols() && rank(phi) == phi.rows();
                if (kernel_sq && quot_sq && iso) {
                    s1 = a;
                    s2 = b;
                    e.passed = true;
                    e.note = "derived signs (" + std::to_string(a) + ", " + std::to_string(b) + ")";
                    break;
                }
            }
            if (e.passed) break;
        }
        if (!e.passed && de * de + dt == 0) {
            e.passed = true;
            e.note = "degenerate: zero fibers";
        }
        if (s1 == 0) { s1 = 1; s2 = 1; } // unconstrained at degenerate dims
        rep.edges.push_back(std::move(e));
    }

    // Edge 2: J(E*) and J(E) in T*-duality. The vertical dual of the tangent
    // double of E is the tangent double of E*, so the section pairing of its
    // function spaces applies directly.
    const ADualReport edge2 = adual_compare(tangent_double(g));
    rep.edges.push_back(EdgeReport{"T*-duality J(E*) <-> J(E)", edge2.ok(), ""});
    rep.jet_jet = edge2.pairing;

    // Edge 3: J(E) and D(E) in E-duality, via the common side E* of the
    // tangent and cotangent doubles of E*.
    const ADualReport edge3 = adual_compare(flip(tangent_double_dual_side(g)));
    rep.edges.push_back(EdgeReport{"E-duality J(E) <-> D(E)", edge3.ok(), ""});
    rep.jet_atiyah = edge3.pairing;

    // Edge 4: J(E*) and D(E*) in E*-duality, the mirror of edge 3.
    const ADualReport edge4 = adual_compare(flip(tangent_double(g)));
    rep.edges.push_back(EdgeReport{"E*-duality J(E*) <-> D(E*)", edge4.ok(), ""});
    rep.jet_atiyah_dual = edge4.pairing;

    // The doubles of the two cotangent models are isomorphic: the derived
    // (e, chi, w) -> (chi, e, -w) style map, certified as a DVB morphism
    // between the trivial models (after a flip) with derived core sign.
    {
        EdgeReport e{"cotangent doubles isomorphic", false, ""};
        const TrivialDVB m1 = cotangent_double(g);        // (E, E*; T*)
        const TrivialDVB m2 = cotangent_double_of_dual(g); // (E*, E; T*)
        const TrivialDVB m2f = flip(m2);                   // (E, E*; T*)
        // characterize through the tangent pairing: <R(frke), xi*> =
        // <<xi, xi*>> - <frke, xi> for all compatible xi, xi*
        const TrivialDVB te = tangent_double(g);
        const TrivialDVB tes = tangent_double_dual_side(g);
        const DualOverB d1 = dual_over_B(te);  // pairs m1-flavored elements with TE
        const DualOverB d2 = dual_over_B(tes); // pairs m2-flavored elements with TE*
        for (int sign : {-1, 1}) {
            const DVBMorphism cand(m1, m2f, identity(g.E), identity(dual(g.E)), scale(Rat(sign), identity(dual(g.T))),
                                   zero_map(tensor(g.E, dual(g.E)), dual(g.T)));
            bool good = morphism_is_iso(cand) || (g.E.dim == 0 && g.T.dim == 0);
            for (int n = 0; n < trials && good; ++n) {
                Rng rng = Rng::substream(seed ^ 0x51f5u, static_cast<std::uint64_t>(n));
                const Vec x = rng.vec(dt), ept = rng.vec(de), edot = rng.vec(de);
                const Vec es = rng.vec(de), esdot = rng.vec(de), w = rng.vec(dt);
                const DVBElement frke{ept, es, w}; // element of m1
                const DVBElement img = morphism_apply(cand, frke); // element of flip(m2)
                // tangent-pairing of xi in TE and xi* in TE* over shared x
                const Rat tangent_pair = dot(esdot, ept) + dot(es, edot);
                const Rat lhs_pair = d2.fiber_pair(img, DVBElement{x, es, esdot});
                const Rat rhs_pair = tangent_pair - d1.fiber_pair(DVBElement{es /*chi*/, ept, w}, DVBElement{x, ept, edot});
                if (lhs_pair != rhs_pair) good = false;
            }
            if (good) {
                e.passed = true;
                e.note = "derived core sign " + std::to_string(sign);
                break;
            }
        }
        rep.edges.push_back(std::move(e));
    }

    // Mutual consistency: run the three-step construction on the Atiyah
    // sequence and check that its pairings coincide with the section-built
    // edge pairings through the derived identifications.
    if (dt >= 1 && de >= 1) {
        bool ok = true;
        std::string note;
        const Triality tri = triality_pairing(de_fiber.seq);

        // identify J(E*) with Delta: sigma* = (theta*, chi*) gives the
        // E*-valued evaluation against the Atiyah fiber
        const XSpace& xje_star = jestar.xs; // functions on (T, E; E)
        LinMap iota_delta(xje_star.seq.pi(), tri.delta.seq.pi());
        {
            const int dpi = de_fiber.xs.seq.pi().dim;
            for (int c = 0; c < xje_star.seq.pi().dim; ++c) {
                const DoubleLinearFunctional f = xje_star.functional_of(basis_vec(xje_star.seq.pi().dim, c));
                // theta* in T*(x)E*... for ctx* the kernel of X(TE) is T*(x)E*
                Vec flat = zero_vec(de * dpi + de);
                for (int t = 0; t < dpi; ++t) {
                    const DoubleLinearFunctional eps = de_fiber.xs.functional_of(basis_vec(dpi, t));
                    // h(sigma*)(eps) in E*: e -> <theta* -| e, chi_eps> + <chi*, theta_eps -| e>
                    for (int ei = 0; ei < de; ++ei) {
                        const Vec e = basis_vec(de, ei);
                        const Rat v = dot(contract_second(f.theta, e, dt, de), eps.chi) +
                                      dot(f.chi, contract_second(eps.theta, e, de, de));
                        flat[static_cast<std::size_t>(ei) * dpi + t] = v;
                    }
                }
                for (int q = 0; q < de; ++q) flat[static_cast<std::size_t>(de * dpi + q)] = f.chi[static_cast<std::size_t>(q)];
                Vec coords;
                try {
                    coords = tri.delta.coords_of_pair(flat);
                } catch (const SingularMatrix&) {
                    ok = false;
                    note = "jet(E*) section element is not a member of the first dual";
                    break;
                }
                for (int r = 0; r < tri.delta.seq.pi().dim; ++r) iota_delta.at(r, c) = coords[static_cast<std::size_t>(r)];
            }
        }
        ok = ok && rank(iota_delta) == iota_delta.rows() && iota_delta.rows() == iota_delta.cols();

        // identify J(E) with Xi through the T*-pairing of the jets
        LinMap iota_xi(je.xs.seq.pi(), tri.xi.seq.pi());
        if (ok) {
            const LinMap iota_delta_inv = inverse(iota_delta);
            // edge-2 pairing takes X(TE)-coordinates on the left; X(TE) for
            // the starred context is exactly jestar's function space
            for (int c = 0; c < je.xs.seq.pi().dim; ++c) {
                const Vec sj = basis_vec(je.xs.seq.pi().dim, c);
                Vec flat = zero_vec(dt * tri.delta.seq.pi().dim + de);
                for (int t = 0; t < tri.delta.seq.pi().dim; ++t) {
                    const Vec sig_star = iota_delta_inv.apply(basis_vec(tri.delta.seq.pi().dim, t));
                    const Vec w = edge2.pairing.pair(sj, sig_star); // element of T*
                    for (int u = 0; u < dt; ++u) flat[static_cast<std::size_t>(u) * tri.delta.seq.pi().dim + t] = w[static_cast<std::size_t>(u)];
                }
                const Vec jq = je.xs.seq.j().apply(sj); // element of E
                for (int q = 0; q < de; ++q) flat[static_cast<std::size_t>(dt * tri.delta.seq.pi().dim + q)] = jq[static_cast<std::size_t>(q)];
                Vec coords;
                try {
                    coords = tri.xi.coords_of_pair(flat);
                } catch (const SingularMatrix&) {
                    ok = false;
                    note = "jet(E) pairing element is not a member of the second dual";
                    break;
                }
                for (int r = 0; r < tri.xi.seq.pi().dim; ++r) iota_xi.at(r, c) = coords[static_cast<std::size_t>(r)];
            }
        }
        ok = ok && rank(iota_xi) == iota_xi.rows() && iota_xi.rows() == iota_xi.cols();

        // commutation: the lift-built V-pairing (a duality against the
        // TRANSPOSED Atiyah sequence) equals the section-built E-duality of
        // edge 3 once composed with the edge-1 transposition, up to a
        // derived sign
        if (ok) {
            const XSpace xflip = xspace(flip(tangent_double_dual_side(g)));
            // X(TE*) -> X(flip TE*), used to feed edge 3's right factor
            const LinMap to_flip = detail::xspace_flip_iso(je.xs, xflip);
            // edge-1 mid map followed by the canonical kernel swap: the
            // block automorphism (theta, chi) -> (s1 theta, s2 chi)
            LinMap nu = identity(de_fiber.xs.seq.pi());
            for (int t = 0; t < de * de; ++t) nu.at(t, t) = Rat(s1);
            for (int t = 0; t < dt; ++t) nu.at(de * de + t, de * de + t) = Rat(s2);
            int derived = 0;
            for (int sign : {1, -1}) {
                bool match = true;
                for (int l = 0; l < je.xs.seq.pi().dim && match; ++l)
                    for (int r = 0; r < de_fiber.xs.seq.pi().dim && match; ++r) {
                        const Vec sj = basis_vec(je.xs.seq.pi().dim, l);
                        const Vec ed = basis_vec(de_fiber.xs.seq.pi().dim, r);
                        const Vec lhs = tri.pair(iota_xi.apply(sj), nu.apply(ed));
                        const Vec rhs = edge3.pairing.pair(ed, to_flip.apply(sj));
                        if (lhs != scale(Rat(sign), rhs)) match = false;
                    }
                if (match) {
                    derived = sign;
                    break;
                }
            }
            if (derived == 0) {
                ok = false;
                note = "lift-built pairing does not match the section-built E-duality";
            } else {
                note = "pairing matrices commute through the transposition (derived sign " + std::to_string(derived) + ")";
            }
        }
        rep.consistency = ok;
        rep.consistency_note = note;
    } else {
        rep.consistency = true;
        rep.consistency_note = "degenerate fibers: duals reduce to ordinary duals, checks vacuous";
    }
    return rep;
}

} // namespace dvblab

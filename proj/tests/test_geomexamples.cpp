#include <catch2/catch_amalgamated.hpp>

#include "dvblab/geomexamples.hpp"

using namespace dvblab;

TEST_CASE("tangent and cotangent doubles") {
    const GeomContext g = geom_context(2, 3);
    const TrivialDVB te = tangent_double(g);
    CHECK(te.A.dim == 2);
    CHECK(te.B.dim == 3);
    CHECK(te.C.dim == 3); // core is the fiber itself
    CHECK(check_interchange(te, 60, 1).all_passed());

    const TrivialDVB tes = tangent_double_dual_side(g);
    CHECK(tes.B.label == "E*");
    CHECK(tes.C.label == "E*");
    CHECK(check_interchange(tes, 60, 2).all_passed());

    const TrivialDVB ct = cotangent_double(g);
    CHECK(ct.A.label == "E");
    CHECK(ct.B.label == "E*");
    CHECK(ct.C.label == "T*");
    CHECK(ct.C.dim == 2);
    CHECK(check_interchange(ct, 60, 3).all_passed());

    const TrivialDVB cts = cotangent_double_of_dual(g);
    CHECK(cts.A.label == "E*");
    CHECK(cts.B.label == "E");
    CHECK(cts.C.label == "T*");
    CHECK(check_interchange(cts, 60, 4).all_passed());

    // nondegenerate pairing of the cotangent model with the tangent double
    // over the shared side E
    const DualOverB db = dual_over_B(te);
    LinMap form(Space(te.A.dim + te.C.dim, "d"), Space(db.dual.A.dim + db.dual.C.dim, "phi"));
    // fiber over a fixed e: free coordinates (chi, phi) against (x, edot)
    for (int i = 0; i < db.dual.A.dim + db.dual.C.dim; ++i)
        for (int j = 0; j < te.A.dim + te.C.dim; ++j) {
            Vec chi = zero_vec(db.dual.A.dim), phiv = zero_vec(db.dual.C.dim);
            if (i < db.dual.A.dim) chi[static_cast<std::size_t>(i)] = 1;
            else phiv[static_cast<std::size_t>(i - db.dual.A.dim)] = 1;
            Vec x = zero_vec(te.A.dim), edot = zero_vec(te.C.dim);
            if (j < te.A.dim) x[static_cast<std::size_t>(j)] = 1;
            else edot[static_cast<std::size_t>(j - te.A.dim)] = 1;
            const Vec e = zero_vec(te.B.dim);
            form.at(i, j) = db.fiber_pair(DVBElement{chi, e, phiv}, DVBElement{x, e, edot});
        }
    CHECK(rank(form) == te.A.dim + te.C.dim);
}

TEST_CASE("the r-map of the cotangent model") {
    const GeomContext g = geom_context(2, 3);
    const TrivialDVB te = tangent_double(g);
    const DualOverB db = dual_over_B(te);
    Rng rng(5);
    for (int t = 0; t < 25; ++t) {
        const Vec e = rng.vec(3), ep = rng.vec(3), phi = rng.vec(2), chi = rng.vec(3);
        const DVBElement frke{chi, e, phi}; // cotangent element over e, r-image chi
        const DVBElement probe = combine_A(te, Rat(1), zero_over_b(te, e), core_embed(te, ep));
        CHECK(db.fiber_pair(frke, probe) == dot(chi, ep));
    }
}

TEST_CASE("jet fibers") {
    for (int dt = 0; dt <= 3; ++dt)
        for (int de = 0; de <= 3; ++de) {
            const FiberModelReport rep = check_jet(jet_fiber(geom_context(dt, de)), 10, 100 + dt * 4 + de);
            CHECK(rep.dim == dt * de + de);
            CHECK(rep.ok());
        }
    // no horizontal directions: the jet fiber is the fiber itself
    const FiberModel f = jet_fiber(geom_context(0, 3));
    CHECK(f.seq.pi().dim == 3);
    CHECK(f.seq.s.left.dim == 0);
}

TEST_CASE("atiyah fibers") {
    for (int dt = 0; dt <= 3; ++dt)
        for (int de = 0; de <= 3; ++de) {
            const FiberModelReport rep = check_atiyah(atiyah_fiber(geom_context(dt, de)), 10, 200 + dt * 4 + de);
            CHECK(rep.dim == de * de + dt);
            CHECK(rep.ok());
        }
    // zero bundle: only the anchor remains
    const FiberModel f = atiyah_fiber(geom_context(2, 0));
    CHECK(f.seq.pi().dim == 2);
    // anchor is the plain projection in the direct model
    const FiberModel g = atiyah_fiber(geom_context(2, 2));
    Rng rng(7);
    for (int t = 0; t < 10; ++t) {
        const Vec sigma = rng.vec(g.seq.pi().dim);
        const Vec dir = g.iso.apply(sigma);
        CHECK(g.seq.j().apply(sigma) == Vec(dir.begin() + 4, dir.end()));
    }
}

TEST_CASE("the closing square") {
    for (const auto& [dt, de] : {std::pair<int, int>{1, 1}, {2, 2}, {2, 3}}) {
        const SquareReport rep = square_report(geom_context(dt, de), 10, 4000 + dt * 10 + de);
        INFO("dims (" << dt << ", " << de << ")");
        for (const auto& e : rep.edges) {
            INFO(e.name << ": " << e.note);
            CHECK(e.passed);
        }
        CHECK(rep.consistency);
        CHECK(rep.all_passed());
    }
    // degenerate contexts reduce or vanish
    CHECK(square_report(geom_context(1, 0), 5, 1).all_passed());
    CHECK(square_report(geom_context(0, 1), 5, 2).all_passed());
}

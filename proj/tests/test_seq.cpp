#include <catch2/catch_amalgamated.hpp>

#include "dvblab/equivalence.hpp"
#include "dvblab/seq.hpp"

using namespace dvblab;

TEST_CASE("exactness certification") {
    const Space C(1, "C"), Omega(2, "Omega"), AB(1, "AB");
    // split sequence
    const LinMap e(C, Omega, {Rat(1), Rat(0)});
    const LinMap p(Omega, AB, {Rat(0), Rat(1)});
    CHECK(check_exact(e, p).exact());
    // designed failure: p o e != 0
    const LinMap bad_p(Omega, AB, {Rat(1), Rat(0)});
    const ExactnessReport rep = check_exact(e, bad_p);
    CHECK_FALSE(rep.exact());
    CHECK_FALSE(rep.composite_zero);
    CHECK_THROWS_AS(ShortExactSeq(C, Omega, AB, e, bad_p), SequenceNotExact);
}

TEST_CASE("random sequences are exact and deterministic") {
    for (int t = 0; t < 10; ++t) {
        const DVBSeq s = random_seq(2, 2, 1, 100 + t);
        CHECK(check_exact(s.s).exact());
        CHECK(s.omega().dim == 2 * 2 + 1);
    }
    const DVBSeq a = random_seq(2, 3, 1, 7);
    const DVBSeq b = random_seq(2, 3, 1, 7);
    CHECK(a.e() == b.e());
    CHECK(a.p() == b.p());
    CHECK(check_exact(random_seq(2, 2, 1, 7).s).exact());
    // degenerate dimensions are fine
    CHECK(check_exact(random_seq(0, 0, 0, 1).s).exact());
    CHECK(check_exact(random_star_seq(0, 2, 1, 3).s).exact());
}

TEST_CASE("sequence morphism checks") {
    const DVBSeq s = random_seq(2, 1, 2, 5);
    const SeqMorphism id = identity_seq_morphism(s);
    CHECK(seq_morphism_check(id).ok());

    // scaling the middle map alone breaks both squares
    SeqMorphism bad = id;
    bad.varpi = scale(Rat(2), bad.varpi);
    const SeqMorphismReport rep = seq_morphism_check(bad);
    CHECK_FALSE(rep.ok());

    // the combining functor produces valid morphisms
    Rng rng(17);
    const TrivialDVB D0 = random_trivial_dvb(2, rng, "0");
    const TrivialDVB D1 = random_trivial_dvb(2, rng, "1");
    const DVBMorphism phi = random_morphism(D0, D1, rng);
    const Combining c0 = combining(D0), c1 = combining(D1);
    CHECK(seq_morphism_check(combining_on_morphism(phi, c0, c1)).ok());
}

TEST_CASE("sequence morphisms are closed under composition") {
    Rng rng(29);
    for (int t = 0; t < 8; ++t) {
        const DVBSeq s0 = random_seq(static_cast<int>(rng.int_in(0, 2)), static_cast<int>(rng.int_in(0, 2)),
                                     static_cast<int>(rng.int_in(0, 2)), 200 + t, "0");
        const DVBSeq s1 = random_seq(static_cast<int>(rng.int_in(0, 2)), static_cast<int>(rng.int_in(0, 2)),
                                     static_cast<int>(rng.int_in(0, 2)), 300 + t, "1");
        const DVBSeq s2 = random_seq(static_cast<int>(rng.int_in(0, 2)), static_cast<int>(rng.int_in(0, 2)),
                                     static_cast<int>(rng.int_in(0, 2)), 400 + t, "2");
        const SeqMorphism m = random_seq_morphism(s0, s1, rng);
        const SeqMorphism n = random_seq_morphism(s1, s2, rng);
        REQUIRE(seq_morphism_check(m).ok());
        REQUIRE(seq_morphism_check(n).ok());
        CHECK(seq_morphism_check(seq_morphism_compose(n, m)).ok());
    }
}

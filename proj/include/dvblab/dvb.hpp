#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dvblab/linmap.hpp"
#include "dvblab/rng.hpp"

namespace dvblab {

/// The trivial double vector bundle over A and B with core C, restricted to
/// a single base point: the element carrier is A x B x C and both linear
/// structures act componentwise.
struct TrivialDVB {
    Space A, B, C;

    TrivialDVB() = default;
    TrivialDVB(Space a, Space b, Space c) : A(std::move(a)), B(std::move(b)), C(std::move(c)) {}
};

inline bool operator==(const TrivialDVB& x, const TrivialDVB& y) {
    return x.A == y.A && x.B == y.B && x.C == y.C;
}

/// Reverse the two side bundles. Elements transpose accordingly.
inline TrivialDVB flip(const TrivialDVB& d) { return TrivialDVB(d.B, d.A, d.C); }

struct DVBElement {
    Vec a, b, c;
};

inline bool operator==(const DVBElement& x, const DVBElement& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c;
}

inline DVBElement flip(const DVBElement& d) { return DVBElement{d.b, d.a, d.c}; }

inline void check_element(const TrivialDVB& D, const DVBElement& d) {
    if (static_cast<int>(d.a.size()) != D.A.dim || static_cast<int>(d.b.size()) != D.B.dim ||
        static_cast<int>(d.c.size()) != D.C.dim)
        throw ShapeMismatch("element does not live in the given trivial DVB");
}

/// r *_A d1 +_A d2 = (a, r b1 + b2, r c1 + c2); requires equal a-components.
inline DVBElement combine_A(const TrivialDVB& D, const Rat& r, const DVBElement& d1, const DVBElement& d2) {
    check_element(D, d1);
    check_element(D, d2);
    if (d1.a != d2.a) throw FiberMismatch("combine_A: elements sit over different points of A");
    return DVBElement{d1.a, add(scale(r, d1.b), d2.b), add(scale(r, d1.c), d2.c)};
}

/// r *_B d1 +_B d2 = (r a1 + a2, b, r c1 + c2); requires equal b-components.
inline DVBElement combine_B(const TrivialDVB& D, const Rat& r, const DVBElement& d1, const DVBElement& d2) {
    check_element(D, d1);
    check_element(D, d2);
    if (d1.b != d2.b) throw FiberMismatch("combine_B: elements sit over different points of B");
    return DVBElement{add(scale(r, d1.a), d2.a), d1.b, add(scale(r, d1.c), d2.c)};
}

/// Zero of the bundle over A above the point a.
inline DVBElement zero_over_a(const TrivialDVB& D, const Vec& a) {
    return DVBElement{a, zero_vec(D.B.dim), zero_vec(D.C.dim)};
}

/// Zero of the bundle over B above the point b.
inline DVBElement zero_over_b(const TrivialDVB& D, const Vec& b) {
    return DVBElement{zero_vec(D.A.dim), b, zero_vec(D.C.dim)};
}

/// Core embedding: the intersection of the two projection kernels is
/// exactly {(0, 0, c)}.
inline DVBElement core_embed(const TrivialDVB& D, const Vec& c) {
    return DVBElement{zero_vec(D.A.dim), zero_vec(D.B.dim), c};
}

// ---------------------------------------------------------------------------
// Interchange laws
// ---------------------------------------------------------------------------

struct LawResult {
    std::string name;
    int trials = 0;
    int failures = 0;
    std::string first_counterexample;
};

struct InterchangeReport {
    std::vector<LawResult> laws;

    bool all_passed() const {
        for (const auto& l : laws)
            if (l.failures != 0) return false;
        return true;
    }
};

/// Operation table so that checks can also run against deliberately
/// corrupted operations (mutation hook) or against a doubled model through
/// its (a, b, c) coordinates.
template <class Elem>
struct DoubleOps {
    int dimA = 0, dimB = 0, dimC = 0;
    std::function<Elem(const Vec&, const Vec&, const Vec&)> from_abc;
    std::function<Elem(const Rat&, const Elem&, const Elem&)> comb_a;
    std::function<Elem(const Rat&, const Elem&, const Elem&)> comb_b;
    std::function<Elem(const Vec&)> zero_a;
    std::function<Elem(const Vec&)> zero_b;
    std::function<bool(const Elem&, const Elem&)> eq;
};

inline DoubleOps<DVBElement> trivial_ops(const TrivialDVB& D) {
    DoubleOps<DVBElement> ops;
    ops.dimA = D.A.dim;
    ops.dimB = D.B.dim;
    ops.dimC = D.C.dim;
    ops.from_abc = [](const Vec& a, const Vec& b, const Vec& c) { return DVBElement{a, b, c}; };
    ops.comb_a = [D](const Rat& r, const DVBElement& x, const DVBElement& y) { return combine_A(D, r, x, y); };
    ops.comb_b = [D](const Rat& r, const DVBElement& x, const DVBElement& y) { return combine_B(D, r, x, y); };
    ops.zero_a = [D](const Vec& a) { return zero_over_a(D, a); };
    ops.zero_b = [D](const Vec& b) { return zero_over_b(D, b); };
    ops.eq = [](const DVBElement& x, const DVBElement& y) { return x == y; };
    return ops;
}

/// Check the eight interchange laws on random compatible samples.
/// Failures are recorded, not thrown. The published list carries a typo in
/// the seventh law (a B-zero written as an A-zero); the well-typed form is
/// checked here.
template <class Elem>
InterchangeReport check_interchange_ops(const DoubleOps<Elem>& ops, int trials, std::uint64_t seed) {
    InterchangeReport rep;
    const char* names[8] = {
        "(d1 +B d2) +A (d3 +B d4) = (d1 +A d3) +B (d2 +A d4)",
        "t *A (d1 +B d2) = t *A d1 +B t *A d2",
        "t *B (d1 +A d2) = t *B d1 +A t *B d2",
        "t *A (s *B d) = s *B (t *A d)",
        "0A_{a1+a2} = 0A_{a1} +B 0A_{a2}",
        "0A_{t a} = t *B 0A_a",
        "0B_{b1+b2} = 0B_{b1} +A 0B_{b2}",
        "0B_{t b} = t *A 0B_b",
    };
    for (int law = 0; law < 8; ++law) rep.laws.push_back(LawResult{names[law], trials, 0, ""});

    auto comb_plain_a = [&](const Elem& x, const Elem& y) { return ops.comb_a(Rat(1), x, y); };
    auto comb_plain_b = [&](const Elem& x, const Elem& y) { return ops.comb_b(Rat(1), x, y); };
    auto scale_a = [&](const Rat& t, const Elem& x, const Vec& a) { return ops.comb_a(t, x, ops.zero_a(a)); };
    auto scale_b = [&](const Rat& t, const Elem& x, const Vec& b) { return ops.comb_b(t, x, ops.zero_b(b)); };

    for (int trial = 0; trial < trials; ++trial) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(trial));
        const Vec a1 = rng.vec(ops.dimA), a2 = rng.vec(ops.dimA);
        const Vec b1 = rng.vec(ops.dimB), b2 = rng.vec(ops.dimB);
        const Vec c1 = rng.vec(ops.dimC), c2 = rng.vec(ops.dimC);
        const Vec c3 = rng.vec(ops.dimC), c4 = rng.vec(ops.dimC);
        const Rat t = rng.scalar(), s = rng.scalar();

        auto fail = [&](int law, const std::string& what) {
            auto& l = rep.laws[static_cast<std::size_t>(law)];
            ++l.failures;
            if (l.first_counterexample.empty())
                l.first_counterexample = what + " (trial " + std::to_string(trial) + ")";
        };
        // a broken operation may also surface as a fiber mismatch downstream;
        // that is a recorded failure, never an escaping exception
        auto law = [&](int idx, const char* what, auto&& body) {
            try {
                if (!body()) fail(idx, what);
            } catch (const Error& ex) {
                fail(idx, std::string(what) + ": " + ex.what());
            }
        };

        // Law 1: mixed additions; samples are crossed so that both sides
        // are defined.
        law(0, "mixed addition", [&] {
            const Elem d1 = ops.from_abc(a1, b1, c1);
            const Elem d2 = ops.from_abc(a2, b1, c2);
            const Elem d3 = ops.from_abc(a1, b2, c3);
            const Elem d4 = ops.from_abc(a2, b2, c4);
            const Elem lhs = ops.comb_a(Rat(1), comb_plain_b(d1, d2), comb_plain_b(d3, d4));
            const Elem rhs = ops.comb_b(Rat(1), comb_plain_a(d1, d3), comb_plain_a(d2, d4));
            return ops.eq(lhs, rhs);
        });
        // Law 2: t *A distributes over +B.
        law(1, "A-scaling over +B", [&] {
            const Elem d1 = ops.from_abc(a1, b1, c1);
            const Elem d2 = ops.from_abc(a2, b1, c2);
            const Elem sum = comb_plain_b(d1, d2);
            const Elem lhs = scale_a(t, sum, add(a1, a2));
            const Elem rhs = comb_plain_b(scale_a(t, d1, a1), scale_a(t, d2, a2));
            return ops.eq(lhs, rhs);
        });
        // Law 3: t *B distributes over +A.
        law(2, "B-scaling over +A", [&] {
            const Elem d1 = ops.from_abc(a1, b1, c1);
            const Elem d2 = ops.from_abc(a1, b2, c2);
            const Elem sum = comb_plain_a(d1, d2);
            const Elem lhs = scale_b(t, sum, add(b1, b2));
            const Elem rhs = comb_plain_a(scale_b(t, d1, b1), scale_b(t, d2, b2));
            return ops.eq(lhs, rhs);
        });
        // Law 4: the two scalar actions commute.
        law(3, "scalar actions commute", [&] {
            const Elem d = ops.from_abc(a1, b1, c1);
            const Elem lhs = scale_a(t, scale_b(s, d, b1), scale(s, a1));
            const Elem rhs = scale_b(s, scale_a(t, d, a1), scale(t, b1));
            return ops.eq(lhs, rhs);
        });
        // Laws 5-8: zero sections are additive and homogeneous for the
        // opposite structure.
        law(4, "A-zeros add over B", [&] {
            return ops.eq(ops.zero_a(add(a1, a2)), comb_plain_b(ops.zero_a(a1), ops.zero_a(a2)));
        });
        law(5, "A-zero scales over B", [&] {
            return ops.eq(ops.zero_a(scale(t, a1)), scale_b(t, ops.zero_a(a1), zero_vec(ops.dimB)));
        });
        law(6, "B-zeros add over A", [&] {
            return ops.eq(ops.zero_b(add(b1, b2)), comb_plain_a(ops.zero_b(b1), ops.zero_b(b2)));
        });
        law(7, "B-zero scales over A", [&] {
            return ops.eq(ops.zero_b(scale(t, b1)), scale_a(t, ops.zero_b(b1), zero_vec(ops.dimA)));
        });
    }
    return rep;
}

inline InterchangeReport check_interchange(const TrivialDVB& D, int trials, std::uint64_t seed) {
    return check_interchange_ops(trivial_ops(D), trials, seed);
}

// ---------------------------------------------------------------------------
// Morphisms
// ---------------------------------------------------------------------------

/// Morphism of trivialized fibers over the identity base map, in canonical
/// form: d = (a, b, c) maps to (fA a, fB b, fC c + omega(a (x) b)). For the
/// trivial model this form is forced by double-linearity; the test suite
/// certifies completeness at small dimensions by an independent solver.
struct DVBMorphism {
    TrivialDVB src, dst;
    LinMap fA, fB, fC;
    LinMap omega; // A (x) B -> C'

    DVBMorphism() = default;
    DVBMorphism(TrivialDVB s, TrivialDVB d, LinMap fa, LinMap fb, LinMap fc, LinMap w)
        : src(std::move(s)), dst(std::move(d)), fA(std::move(fa)), fB(std::move(fb)), fC(std::move(fc)), omega(std::move(w)) {
        if (fA.cols() != src.A.dim || fA.rows() != dst.A.dim || fB.cols() != src.B.dim || fB.rows() != dst.B.dim ||
            fC.cols() != src.C.dim || fC.rows() != dst.C.dim || omega.cols() != src.A.dim * src.B.dim ||
            omega.rows() != dst.C.dim)
            throw ShapeMismatch("DVBMorphism components do not match source/target");
    }
};

inline DVBMorphism identity_morphism(const TrivialDVB& D) {
    return DVBMorphism(D, D, identity(D.A), identity(D.B), identity(D.C), zero_map(tensor(D.A, D.B), D.C));
}

inline DVBElement morphism_apply(const DVBMorphism& phi, const DVBElement& d) {
    check_element(phi.src, d);
    Vec c = phi.fC.apply(d.c);
    c = add(c, phi.omega.apply(tensor_vec(d.a, d.b)));
    return DVBElement{phi.fA.apply(d.a), phi.fB.apply(d.b), c};
}

/// Composite in canonical form: omega = fC'' o omega' + omega'' o (fA' (x) fB').
inline DVBMorphism morphism_compose(const DVBMorphism& psi, const DVBMorphism& phi) {
    if (!(phi.dst == psi.src)) throw ShapeMismatch("morphism_compose: target/source mismatch");
    LinMap w = add(compose(psi.fC, phi.omega), compose(psi.omega, tensor_map(phi.fA, phi.fB)));
    return DVBMorphism(phi.src, psi.dst, compose(psi.fA, phi.fA), compose(psi.fB, phi.fB), compose(psi.fC, phi.fC),
                       std::move(w));
}

inline bool morphism_equal(const DVBMorphism& x, const DVBMorphism& y) {
    return x.fA == y.fA && x.fB == y.fB && x.fC == y.fC && x.omega == y.omega;
}

/// Whether the canonical-form data is invertible as a DVB morphism; true
/// iff all three component maps are.
inline bool morphism_is_iso(const DVBMorphism& phi) {
    return phi.fA.rows() == phi.fA.cols() && rank(phi.fA) == phi.fA.rows() && phi.fB.rows() == phi.fB.cols() &&
           rank(phi.fB) == phi.fB.rows() && phi.fC.rows() == phi.fC.cols() && rank(phi.fC) == phi.fC.rows();
}

inline DVBMorphism morphism_inverse(const DVBMorphism& phi) {
    if (!morphism_is_iso(phi)) throw SingularMatrix("morphism_inverse: not an isomorphism");
    LinMap fa = inverse(phi.fA), fb = inverse(phi.fB), fc = inverse(phi.fC);
    // (a', b', c') pulls back through c = fC^{-1}(c' - omega(fA^{-1} a' (x) fB^{-1} b')).
    LinMap w = scale(Rat(-1), compose(fc, compose(phi.omega, tensor_map(fa, fb))));
    return DVBMorphism(phi.dst, phi.src, std::move(fa), std::move(fb), std::move(fc), std::move(w));
}

inline DVBMorphism random_morphism(const TrivialDVB& src, const TrivialDVB& dst, Rng& rng) {
    return DVBMorphism(src, dst, rng.map(src.A, dst.A), rng.map(src.B, dst.B), rng.map(src.C, dst.C),
                       rng.map(tensor(src.A, src.B), dst.C));
}

inline DVBElement random_element(const TrivialDVB& D, Rng& rng) {
    return DVBElement{rng.vec(D.A.dim), rng.vec(D.B.dim), rng.vec(D.C.dim)};
}

inline TrivialDVB random_trivial_dvb(int max_dim, Rng& rng, const std::string& tag = "D") {
    const int da = static_cast<int>(rng.int_in(0, max_dim));
    const int db = static_cast<int>(rng.int_in(0, max_dim));
    const int dc = static_cast<int>(rng.int_in(0, max_dim));
    return TrivialDVB(Space(da, "A" + tag), Space(db, "B" + tag), Space(dc, "C" + tag));
}

} // namespace dvblab

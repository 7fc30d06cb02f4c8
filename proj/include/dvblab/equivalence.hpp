#pragma once

#include <utility>
#include <vector>

#include "dvblab/ansatz.hpp"
#include "dvblab/dvb.hpp"
#include "dvblab/seq.hpp"

namespace dvblab {

// ---------------------------------------------------------------------------
// Doubling: from a DVB sequence to a double vector bundle
// ---------------------------------------------------------------------------

struct DoubledElement {
    Vec omega, a, b;
};

inline bool operator==(const DoubledElement& x, const DoubledElement& y) {
    return x.omega == y.omega && x.a == y.a && x.b == y.b;
}

/// The double vector bundle realized from a DVB sequence: the carrier is
/// {(omega, a, b) : p(omega) = a (x) b}. Membership is decided exactly.
/// The deterministic splitting s of p is kept for lifting (a, b, c)
/// coordinates; it never enters the bundle operations themselves.
struct DoubledDVB {
    DVBSeq seq;
    LinMap split;  // right inverse of p
    LinMap e_left; // left inverse of e

    bool member(const DoubledElement& x) const {
        return seq.p().apply(x.omega) == tensor_vec(x.a, x.b);
    }

    void require_member(const DoubledElement& x) const {
        if (!member(x)) throw FiberMismatch("element does not satisfy p(omega) = a (x) b");
    }

    /// r *_A (w1, a, b1) +_A (w2, a, b2) = (r w1 + w2, a, r b1 + b2).
    DoubledElement combine_a(const Rat& r, const DoubledElement& x, const DoubledElement& y) const {
        if (x.a != y.a) throw FiberMismatch("doubled combine_a: different a");
        return DoubledElement{add(scale(r, x.omega), y.omega), x.a, add(scale(r, x.b), y.b)};
    }

    /// r *_B (w1, a1, b) +_B (w2, a2, b) = (r w1 + w2, r a1 + a2, b).
    DoubledElement combine_b(const Rat& r, const DoubledElement& x, const DoubledElement& y) const {
        if (x.b != y.b) throw FiberMismatch("doubled combine_b: different b");
        return DoubledElement{add(scale(r, x.omega), y.omega), add(scale(r, x.a), y.a), x.b};
    }

    DoubledElement zero_a(const Vec& a) const { return DoubledElement{zero_vec(seq.omega().dim), a, zero_vec(seq.B.dim)}; }
    DoubledElement zero_b(const Vec& b) const { return DoubledElement{zero_vec(seq.omega().dim), zero_vec(seq.A.dim), b}; }

    /// Core embedding c -> (e(c), 0, 0).
    DoubledElement core(const Vec& c) const {
        return DoubledElement{seq.e().apply(c), zero_vec(seq.A.dim), zero_vec(seq.B.dim)};
    }

    /// Lift of trivial coordinates through the deterministic splitting;
    /// a bijection onto the carrier.
    DoubledElement from_abc(const Vec& a, const Vec& b, const Vec& c) const {
        Vec w = add(split.apply(tensor_vec(a, b)), seq.e().apply(c));
        return DoubledElement{std::move(w), a, b};
    }

    /// The core coordinate of a member: e^{-1}(omega - s(a (x) b)).
    Vec core_coord(const DoubledElement& x) const {
        return e_left.apply(sub(x.omega, split.apply(tensor_vec(x.a, x.b))));
    }
};

inline DoubledDVB doubling(const DVBSeq& s) {
    DoubledDVB d;
    d.seq = s;
    d.split = right_inverse(s.p());
    d.e_left = left_inverse(s.e());
    return d;
}

inline DoubledElement random_member(const DoubledDVB& d, Rng& rng) {
    return d.from_abc(rng.vec(d.seq.A.dim), rng.vec(d.seq.B.dim), rng.vec(d.seq.C.dim));
}

/// Trivialization (omega, a, b) -> (a, b, e^{-1}(omega - s(a (x) b))), a DVB
/// isomorphism onto the trivial model. Different splittings give different
/// but isomorphic trivializations; only splitting-independent statements
/// are ever asserted on top of this.
struct Trivialization {
    DoubledDVB doubled;
    TrivialDVB triv;

    DVBElement to_trivial(const DoubledElement& x) const {
        return DVBElement{x.a, x.b, doubled.core_coord(x)};
    }
    DoubledElement from_trivial(const DVBElement& d) const { return doubled.from_abc(d.a, d.b, d.c); }
};

inline Trivialization doubled_to_trivial(const DoubledDVB& d) {
    return Trivialization{d, TrivialDVB(d.seq.A, d.seq.B, d.seq.C)};
}

inline DoubleOps<DoubledElement> doubled_ops(const DoubledDVB& d) {
    DoubleOps<DoubledElement> ops;
    ops.dimA = d.seq.A.dim;
    ops.dimB = d.seq.B.dim;
    ops.dimC = d.seq.C.dim;
    ops.from_abc = [d](const Vec& a, const Vec& b, const Vec& c) { return d.from_abc(a, b, c); };
    ops.comb_a = [d](const Rat& r, const DoubledElement& x, const DoubledElement& y) { return d.combine_a(r, x, y); };
    ops.comb_b = [d](const Rat& r, const DoubledElement& x, const DoubledElement& y) { return d.combine_b(r, x, y); };
    ops.zero_a = [d](const Vec& a) { return d.zero_a(a); };
    ops.zero_b = [d](const Vec& b) { return d.zero_b(b); };
    ops.eq = [](const DoubledElement& x, const DoubledElement& y) { return x == y; };
    return ops;
}

// ---------------------------------------------------------------------------
// Combining: from a double vector bundle to a DVB sequence
// ---------------------------------------------------------------------------

/// The associated sequence of a trivial DVB, realized on A(x)B (+) C with
/// [(a, b, c)] = a (x) b (+) c. The free-space quotient itself is infinite-
/// dimensional; this closed form is certified against the independent
/// generators-and-relations realization below.
struct Combining {
    TrivialDVB D;
    DVBSeq seq;

    Vec class_of(const DVBElement& d) const {
        check_element(D, d);
        Vec w = tensor_vec(d.a, d.b);
        w.insert(w.end(), d.c.begin(), d.c.end());
        return w;
    }
};

inline Combining combining(const TrivialDVB& D) {
    const Space AB = tensor(D.A, D.B);
    const Space Omega(AB.dim + D.C.dim, "C(" + D.A.label + "," + D.B.label + "," + D.C.label + ")");
    LinMap e(D.C, Omega);
    for (int k = 0; k < D.C.dim; ++k) e.at(AB.dim + k, k) = 1;
    LinMap p(Omega, AB);
    for (int t = 0; t < AB.dim; ++t) p.at(t, t) = 1;
    return Combining{D, DVBSeq(D.A, D.B, D.C, ShortExactSeq(D.C, Omega, AB, std::move(e), std::move(p)))};
}

/// Independent realization of the associated sequence: compute the space of
/// double-linear functions X(D) by the brute-force ansatz, set Omega to its
/// dual, and let the class of d be the evaluation functional at d. The
/// kernel map embeds C by evaluation at core elements; the quotient map is
/// the transpose of expressing the functions <theta, a (x) b> in the solved
/// basis.
struct CombiningOracle {
    TrivialDVB D;
    MonomialBasis mb;
    std::vector<Vec> basis; // of X(D), monomial coefficients
    DVBSeq seq;

    Vec class_of(const DVBElement& d) const {
        check_element(D, d);
        const Vec mono = mb.eval_all(d.a, d.b, d.c);
        Vec out = zero_vec(static_cast<int>(basis.size()));
        for (std::size_t i = 0; i < basis.size(); ++i) out[i] = dot(basis[i], mono);
        return out;
    }
};

inline CombiningOracle combining_oracle(const TrivialDVB& D, std::uint64_t seed) {
    CombiningOracle orc;
    orc.D = D;
    orc.mb = MonomialBasis(D.A.dim, D.B.dim, D.C.dim);
    orc.basis = double_linear_function_space(D, seed);

    const int n = static_cast<int>(orc.basis.size());
    const Space AB = tensor(D.A, D.B);
    const Space Omega(n, "X(D)*");

    // e: C -> Omega, evaluation at core elements.
    LinMap e(D.C, Omega);
    for (int k = 0; k < D.C.dim; ++k) {
        const Vec col = orc.class_of(core_embed(D, basis_vec(D.C.dim, k)));
        for (int i = 0; i < n; ++i) e.at(i, k) = col[static_cast<std::size_t>(i)];
    }

    // p = transpose of the coordinate matrix of theta -> <theta, a (x) b>.
    // Solve for the coordinates of each monomial a_i b_j in the solved basis.
    LinMap basis_cols(Space(n, "coords"), Space(orc.mb.count(), "monomials"));
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < orc.mb.count(); ++r) basis_cols.at(r, i) = orc.basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];
    LinMap p(Omega, AB);
    for (int i = 0; i < D.A.dim; ++i)
        for (int j = 0; j < D.B.dim; ++j) {
            Vec target = zero_vec(orc.mb.count());
            target[static_cast<std::size_t>(orc.mb.ab_index(i, j))] = 1;
            const Vec coords = solve_consistent(basis_cols, target); // throws if the span is wrong
            for (int t = 0; t < n; ++t) p.at(i * D.B.dim + j, t) = coords[static_cast<std::size_t>(t)];
        }

    orc.seq = DVBSeq(D.A, D.B, D.C, ShortExactSeq(D.C, Omega, AB, std::move(e), std::move(p)));
    return orc;
}

struct OracleComparison {
    LinMap phi; // C(D) -> X(D)*
    bool invertible = false;
    bool kernel_square = false;
    bool quotient_square = false;
    int class_mismatches = 0;

    bool ok() const { return invertible && kernel_square && quotient_square && class_mismatches == 0; }
};

/// The canonical comparison between the two realizations of the associated
/// sequence: on the basis of A(x)B (+) C send a decomposable a (x) b to the
/// evaluation functional at (a, b, 0) and a core generator to the evaluation
/// functional at (0, 0, c).
inline OracleComparison compare_combining_routes(const Combining& com, const CombiningOracle& orc, int trials,
                                                 std::uint64_t seed) {
    const TrivialDVB& D = com.D;
    OracleComparison rep;
    const int n = orc.seq.omega().dim;
    LinMap phi(com.seq.omega(), orc.seq.omega());
    const int ab = D.A.dim * D.B.dim;
    for (int i = 0; i < D.A.dim; ++i)
        for (int j = 0; j < D.B.dim; ++j) {
            const Vec col = orc.class_of(DVBElement{basis_vec(D.A.dim, i), basis_vec(D.B.dim, j), zero_vec(D.C.dim)});
            for (int r = 0; r < n; ++r) phi.at(r, i * D.B.dim + j) = col[static_cast<std::size_t>(r)];
        }
    for (int k = 0; k < D.C.dim; ++k) {
        const Vec col = orc.class_of(core_embed(D, basis_vec(D.C.dim, k)));
        for (int r = 0; r < n; ++r) phi.at(r, ab + k) = col[static_cast<std::size_t>(r)];
    }

    rep.invertible = (phi.rows() == phi.cols()) && rank(phi) == phi.rows();
    rep.kernel_square = compose(phi, com.seq.e()) == orc.seq.e();
    rep.quotient_square = compose(orc.seq.p(), phi) == com.seq.p();
    for (int t = 0; t < trials; ++t) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(t));
        const DVBElement d = random_element(D, rng);
        if (phi.apply(com.class_of(d)) != orc.class_of(d)) ++rep.class_mismatches;
    }
    rep.phi = std::move(phi);
    return rep;
}

// ---------------------------------------------------------------------------
// Functor action on morphisms
// ---------------------------------------------------------------------------

/// Doubling applied to a sequence morphism, acting on carrier elements:
/// (omega, a, b) -> (varpi(omega), fA(a), fB(b)).
struct DoubledMorphism {
    LinMap varpi, fA, fB;

    DoubledElement apply(const DoubledElement& x) const {
        return DoubledElement{varpi.apply(x.omega), fA.apply(x.a), fB.apply(x.b)};
    }
};

inline DoubledMorphism doubling_on_morphism(const SeqMorphism& m) {
    return DoubledMorphism{m.varpi, m.fA, m.fB};
}

/// Combining applied to a DVB morphism: on A(x)B (+) C coordinates the
/// middle map is the block matrix [[fA (x) fB, 0], [omega, fC]].
inline SeqMorphism combining_on_morphism(const DVBMorphism& phi, const Combining& src, const Combining& dst) {
    if (!(src.D == phi.src) || !(dst.D == phi.dst)) throw ShapeMismatch("combining_on_morphism: wrong realizations");
    const LinMap fab = tensor_map(phi.fA, phi.fB);
    LinMap w(src.seq.omega(), dst.seq.omega());
    const int ab_src = phi.src.A.dim * phi.src.B.dim;
    const int ab_dst = phi.dst.A.dim * phi.dst.B.dim;
    for (int r = 0; r < ab_dst; ++r)
        for (int c = 0; c < ab_src; ++c) w.at(r, c) = fab.at(r, c);
    for (int r = 0; r < phi.dst.C.dim; ++r) {
        for (int c = 0; c < ab_src; ++c) w.at(ab_dst + r, c) = phi.omega.at(r, c);
        for (int c = 0; c < phi.src.C.dim; ++c) w.at(ab_dst + r, ab_src + c) = phi.fC.at(r, c);
    }
    return SeqMorphism(src.seq, dst.seq, std::move(w), phi.fA, phi.fB, phi.fC);
}

/// Canonical form of the doubled morphism between the trivializations of
/// source and target: fC = e'^{-1} varpi e and the twist
/// e'^{-1}(varpi s - s'(fA (x) fB)) induced by the two splittings.
inline DVBMorphism doubling_on_morphism_trivialized(const SeqMorphism& m, const Trivialization& src,
                                                    const Trivialization& dst) {
    const LinMap fC = compose(dst.doubled.e_left, compose(m.varpi, src.doubled.seq.e()));
    const LinMap w = compose(dst.doubled.e_left,
                             sub(compose(m.varpi, src.doubled.split), compose(dst.doubled.split, tensor_map(m.fA, m.fB))));
    return DVBMorphism(src.triv, dst.triv, m.fA, m.fB, fC, w);
}

// ---------------------------------------------------------------------------
// The natural isomorphisms of the equivalence
// ---------------------------------------------------------------------------

/// t_D : D -> doubling(combining(D)), d -> ([d], a, b).
struct NatT {
    TrivialDVB D;
    Combining comb;
    DoubledDVB doubled;
    DVBMorphism canonical; // through the deterministic trivialization

    DoubledElement apply(const DVBElement& d) const { return DoubledElement{comb.class_of(d), d.a, d.b}; }

    DVBElement invert(const DoubledElement& x) const {
        Trivialization tv{doubled, TrivialDVB(D.A, D.B, D.C)};
        return tv.to_trivial(x);
    }

    bool is_iso() const { return morphism_is_iso(canonical); }
};

inline NatT nat_t(const TrivialDVB& D) {
    NatT t;
    t.D = D;
    t.comb = combining(D);
    t.doubled = doubling(t.comb.seq);
    const Trivialization tv = doubled_to_trivial(t.doubled);
    // canonical form of d -> trivialize(t_D(d)); components read off columnwise
    LinMap fC(D.C, D.C);
    for (int k = 0; k < D.C.dim; ++k) {
        const DVBElement img = tv.to_trivial(t.apply(core_embed(D, basis_vec(D.C.dim, k))));
        for (int r = 0; r < D.C.dim; ++r) fC.at(r, k) = img.c[static_cast<std::size_t>(r)];
    }
    LinMap w(tensor(D.A, D.B), D.C);
    for (int i = 0; i < D.A.dim; ++i)
        for (int j = 0; j < D.B.dim; ++j) {
            const DVBElement img =
                tv.to_trivial(t.apply(DVBElement{basis_vec(D.A.dim, i), basis_vec(D.B.dim, j), zero_vec(D.C.dim)}));
            for (int r = 0; r < D.C.dim; ++r) w.at(r, i * D.B.dim + j) = img.c[static_cast<std::size_t>(r)];
        }
    t.canonical = DVBMorphism(D, tv.triv, identity(D.A), identity(D.B), fC, w);
    return t;
}

/// pi_Omega : combining(doubling(Omega)) -> Omega, [(omega, a, b)] -> omega.
/// On the A(x)B (+) C realization this is the matrix [s | e].
struct NatPi {
    DVBSeq src;
    Trivialization triv;
    Combining comb; // of the trivialized double
    SeqMorphism pi;

    Vec class_of_member(const DoubledElement& x) const { return comb.class_of(triv.to_trivial(x)); }

    bool is_iso() const { return rank(pi.varpi) == pi.varpi.rows() && pi.varpi.rows() == pi.varpi.cols(); }
};

inline NatPi nat_pi(const DVBSeq& s) {
    NatPi np;
    np.src = s;
    np.triv = doubled_to_trivial(doubling(s));
    np.comb = combining(np.triv.triv);
    LinMap varpi = hcat(np.triv.doubled.split, s.e(), np.comb.seq.omega(), s.omega());
    np.pi = SeqMorphism(np.comb.seq, s, std::move(varpi), identity(s.A), identity(s.B), identity(s.C));
    return np;
}

inline SeqMorphism random_seq_morphism(const DVBSeq& src, const DVBSeq& dst, Rng& rng) {
    // A generic triple (fA, fB, fC) plus an arbitrary lift of the induced
    // block map through the splittings; the commuting squares hold by
    // construction.
    const LinMap fA = rng.map(src.A, dst.A);
    const LinMap fB = rng.map(src.B, dst.B);
    const LinMap fC = rng.map(src.C, dst.C);
    const LinMap twist = rng.map(tensor(src.A, src.B), dst.C);
    const LinMap s_src = right_inverse(src.p());
    // varpi = e' fC e^{-1} on the core part, plus (s' (fA(x)fB) + e' twist) p on a complement
    const LinMap e_left = left_inverse(src.e());
    const LinMap s_dst = right_inverse(dst.p());
    const LinMap core_part = compose(dst.e(), compose(fC, e_left));
    const LinMap rest = compose(add(compose(s_dst, tensor_map(fA, fB)), compose(dst.e(), twist)), src.p());
    // core_part must only act on im(e): subtract its action through the splitting
    const LinMap correction = compose(core_part, compose(s_src, src.p()));
    const LinMap varpi = add(sub(core_part, correction), rest);
    return SeqMorphism(src, dst, varpi, fA, fB, fC);
}

} // namespace dvblab

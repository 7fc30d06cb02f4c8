#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dvblab/dvb.hpp"
#include "dvblab/linmap.hpp"
#include "dvblab/rng.hpp"

namespace dvblab {

struct ExactnessReport {
    bool e_injective = false;
    bool p_surjective = false;
    bool composite_zero = false;
    bool ranks_fill_mid = false;

    bool exact() const { return e_injective && p_surjective && composite_zero && ranks_fill_mid; }

    std::string describe() const {
        std::string s;
        s += e_injective ? "e injective; " : "e NOT injective; ";
        s += p_surjective ? "p surjective; " : "p NOT surjective; ";
        s += composite_zero ? "p o e = 0; " : "p o e != 0; ";
        s += ranks_fill_mid ? "rank(e) + rank(p) = dim mid" : "rank(e) + rank(p) != dim mid";
        return s;
    }
};

/// Certify 0 -> left -> mid -> right -> 0. Injectivity and surjectivity by
/// rank, p o e = 0 exactly, and the rank count that forces im(e) = ker(p).
inline ExactnessReport check_exact(const LinMap& e, const LinMap& p) {
    ExactnessReport r;
    if (e.cod.dim != p.dom.dim) return r;
    r.e_injective = rank(e) == e.dom.dim;
    r.p_surjective = rank(p) == p.cod.dim;
    r.composite_zero = is_zero(compose(p, e));
    r.ranks_fill_mid = rank(e) + rank(p) == e.cod.dim;
    return r;
}

/// A short exact sequence 0 -> left -e-> mid -p-> right -> 0 of rational
/// spaces. Exactness is certified at construction; building a non-exact
/// candidate throws.
struct ShortExactSeq {
    Space left, mid, right;
    LinMap e; // left -> mid
    LinMap p; // mid -> right

    ShortExactSeq() = default;
    ShortExactSeq(Space l, Space m, Space r, LinMap e_, LinMap p_)
        : left(std::move(l)), mid(std::move(m)), right(std::move(r)), e(std::move(e_)), p(std::move(p_)) {
        if (e.dom.dim != left.dim || e.cod.dim != mid.dim || p.dom.dim != mid.dim || p.cod.dim != right.dim)
            throw ShapeMismatch("sequence maps do not match the declared spaces");
        if (mid.dim != left.dim + right.dim)
            throw SequenceNotExact("dim mid != dim left + dim right");
        const ExactnessReport rep = check_exact(e, p);
        if (!rep.exact()) throw SequenceNotExact("sequence is not exact: " + rep.describe());
    }
};

inline ExactnessReport check_exact(const ShortExactSeq& s) { return check_exact(s.e, s.p); }

/// DVB sequence: 0 -> C -> Omega -> A (x) B -> 0.
struct DVBSeq {
    Space A, B, C;
    ShortExactSeq s;

    DVBSeq() = default;
    DVBSeq(Space a, Space b, Space c, ShortExactSeq seq) : A(std::move(a)), B(std::move(b)), C(std::move(c)), s(std::move(seq)) {
        if (s.left.dim != C.dim || s.right.dim != A.dim * B.dim)
            throw ShapeMismatch("DVB sequence: left must be C and right must be A(x)B");
    }

    const Space& omega() const { return s.mid; }
    const LinMap& e() const { return s.e; }
    const LinMap& p() const { return s.p; }
};

/// DVB* sequence: 0 -> U (x) V -i-> Pi -j-> K -> 0.
struct DVBStarSeq {
    Space U, V, K;
    ShortExactSeq s;

    DVBStarSeq() = default;
    DVBStarSeq(Space u, Space v, Space k, ShortExactSeq seq) : U(std::move(u)), V(std::move(v)), K(std::move(k)), s(std::move(seq)) {
        if (s.left.dim != U.dim * V.dim || s.right.dim != K.dim)
            throw ShapeMismatch("DVB* sequence: left must be U(x)V and right must be K");
    }

    const Space& pi() const { return s.mid; }
    const LinMap& i() const { return s.e; }
    const LinMap& j() const { return s.p; }
};

/// Morphism of DVB sequences. The middle map runs Omega -> Omega', the
/// direction that makes the combining functor covariant.
struct SeqMorphism {
    DVBSeq src, dst;
    LinMap varpi; // Omega -> Omega'
    LinMap fA, fB, fC;

    SeqMorphism() = default;
    SeqMorphism(DVBSeq s_, DVBSeq d_, LinMap w, LinMap fa, LinMap fb, LinMap fc)
        : src(std::move(s_)), dst(std::move(d_)), varpi(std::move(w)), fA(std::move(fa)), fB(std::move(fb)), fC(std::move(fc)) {
        if (varpi.dom.dim != src.omega().dim || varpi.cod.dim != dst.omega().dim || fA.dom.dim != src.A.dim ||
            fA.cod.dim != dst.A.dim || fB.dom.dim != src.B.dim || fB.cod.dim != dst.B.dim ||
            fC.dom.dim != src.C.dim || fC.cod.dim != dst.C.dim)
            throw ShapeMismatch("SeqMorphism components do not match source/target");
    }
};

struct SeqMorphismReport {
    bool right_square = false; // p' o varpi = (fA (x) fB) o p
    bool left_square = false;  // varpi o e = e' o fC

    bool ok() const { return right_square && left_square; }
};

inline SeqMorphismReport seq_morphism_check(const SeqMorphism& m) {
    SeqMorphismReport r;
    r.right_square = compose(m.dst.p(), m.varpi) == compose(tensor_map(m.fA, m.fB), m.src.p());
    r.left_square = compose(m.varpi, m.src.e()) == compose(m.dst.e(), m.fC);
    return r;
}

inline SeqMorphism seq_morphism_compose(const SeqMorphism& n, const SeqMorphism& m) {
    if (n.src.omega().dim != m.dst.omega().dim) throw ShapeMismatch("seq_morphism_compose: shapes");
    return SeqMorphism(m.src, n.dst, compose(n.varpi, m.varpi), compose(n.fA, m.fA), compose(n.fB, m.fB),
                       compose(n.fC, m.fC));
}

inline SeqMorphism identity_seq_morphism(const DVBSeq& s) {
    return SeqMorphism(s, s, identity(s.omega()), identity(s.A), identity(s.B), identity(s.C));
}

/// Random DVB sequence: Omega = C (+) A(x)B (core coordinates first) twisted
/// by a random invertible automorphism T with pooled integer entries.
/// e = T o inclusion, p = projection o T^{-1}. Deterministic in the seed.
inline DVBSeq random_seq(int da, int db, int dc, std::uint64_t seed, const std::string& tag = "") {
    const Space A(da, "A" + tag), B(db, "B" + tag), C(dc, "C" + tag);
    const Space AB = tensor(A, B);
    const Space Omega(dc + da * db, "Omega" + tag);

    LinMap incl(C, Omega);
    for (int k = 0; k < dc; ++k) incl.at(k, k) = 1;
    LinMap proj(Omega, AB);
    for (int t = 0; t < AB.dim; ++t) proj.at(t, dc + t) = 1;

    Rng rng = Rng::substream(seed, 0);
    const LinMap T = rng.invertible(Omega);
    LinMap e = compose(T, incl);
    LinMap p = compose(proj, inverse(T));
    return DVBSeq(A, B, C, ShortExactSeq(C, Omega, AB, std::move(e), std::move(p)));
}

/// Split DVB sequence (T = identity): e is the inclusion of C into the
/// leading coordinates, p the projection onto the trailing A(x)B block.
inline DVBSeq split_seq(int da, int db, int dc, const std::string& tag = "") {
    const Space A(da, "A" + tag), B(db, "B" + tag), C(dc, "C" + tag);
    const Space AB = tensor(A, B);
    const Space Omega(dc + da * db, "Omega" + tag);
    LinMap incl(C, Omega);
    for (int k = 0; k < dc; ++k) incl.at(k, k) = 1;
    LinMap proj(Omega, AB);
    for (int t = 0; t < AB.dim; ++t) proj.at(t, dc + t) = 1;
    return DVBSeq(A, B, C, ShortExactSeq(C, Omega, AB, std::move(incl), std::move(proj)));
}

/// Random DVB* sequence: Pi = U(x)V (+) K twisted by a random invertible
/// automorphism; i = T o inclusion, j = projection o T^{-1}.
inline DVBStarSeq random_star_seq(int du, int dv, int dk, std::uint64_t seed, const std::string& tag = "") {
    const Space U(du, "U" + tag), V(dv, "V" + tag), K(dk, "K" + tag);
    const Space UV = tensor(U, V);
    const Space Pi(du * dv + dk, "Pi" + tag);

    LinMap incl(UV, Pi);
    for (int t = 0; t < UV.dim; ++t) incl.at(t, t) = 1;
    LinMap proj(Pi, K);
    for (int k = 0; k < dk; ++k) proj.at(k, UV.dim + k) = 1;

    Rng rng = Rng::substream(seed, 0);
    const LinMap T = rng.invertible(Pi);
    LinMap i = compose(T, incl);
    LinMap j = compose(proj, inverse(T));
    return DVBStarSeq(U, V, K, ShortExactSeq(UV, Pi, K, std::move(i), std::move(j)));
}

} // namespace dvblab

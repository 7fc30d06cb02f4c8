#pragma once

// Test-only brute force: the space of maps D -> D' that are linear for both
// bundle structures, solved on a degree-<= 2 monomial ansatz per output
// coordinate. Used to certify that the canonical morphism form
// (fA, fB, fC, omega) is complete at small dimensions. Kept independent of
// the morphism code it checks.

#include <vector>

#include "dvblab/ansatz.hpp"
#include "dvblab/dvb.hpp"

namespace dvblab::testing {

struct MorphismAnsatz {
    MonomialBasis mb;
    int out_a = 0, out_b = 0, out_c = 0;
    std::vector<Vec> solutions;     // coefficient vectors, one block per output coordinate
    std::vector<Rat> constraint;    // the constraint matrix, for membership checks
    int constraint_rows = 0;

    int blocks() const { return out_a + out_b + out_c; }
    int cols() const { return blocks() * mb.count(); }
};

/// Solve the two-structure linearity constraints on sampled points. Every
/// row is a consequence of the morphism axioms, so the solved space always
/// contains the true space of degree-<= 2 double-linear maps.
inline MorphismAnsatz solve_morphism_ansatz(const TrivialDVB& src, const TrivialDVB& dst, std::uint64_t seed) {
    MorphismAnsatz out;
    out.mb = MonomialBasis(src.A.dim, src.B.dim, src.C.dim);
    out.out_a = dst.A.dim;
    out.out_b = dst.B.dim;
    out.out_c = dst.C.dim;
    const int mcount = out.mb.count();
    const int cols = out.cols();

    std::vector<Rat> rows;
    int nrows = 0;
    // row schema: the constraint applies to one output coordinate; its
    // coefficients land in that coordinate's monomial block
    auto push_block_row = [&](int block, const Vec& coeffs) {
        Vec row = zero_vec(cols);
        for (int m = 0; m < mcount; ++m) row[static_cast<std::size_t>(block * mcount + m)] = coeffs[static_cast<std::size_t>(m)];
        rows.insert(rows.end(), row.begin(), row.end());
        ++nrows;
    };

    const Rat rpool[6] = {Rat(0), Rat(1), Rat(2), Rat(-1), Rat(1, 2), Rat(3)};
    int stable = 0, last_rank = -1, batch = 0;
    while (stable < 2 || batch < 3) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(batch));
        for (int k = 0; k < cols / std::max(1, out.blocks()) + 4; ++k) {
            const Rat r = rpool[static_cast<std::size_t>(rng.int_in(0, 5))];
            const Vec a1 = rng.vec(src.A.dim), a2 = rng.vec(src.A.dim);
            const Vec b1 = rng.vec(src.B.dim), b2 = rng.vec(src.B.dim);
            const Vec c1 = rng.vec(src.C.dim), c2 = rng.vec(src.C.dim);

            const Vec m_d1 = out.mb.eval_all(a1, b1, c1);
            const Vec m_d2a = out.mb.eval_all(a1, b2, c2); // shares a with d1
            const Vec m_d2b = out.mb.eval_all(a2, b1, c2); // shares b with d1
            const Vec m_acomb = out.mb.eval_all(a1, add(scale(r, b1), b2), add(scale(r, c1), c2));
            const Vec m_bcomb = out.mb.eval_all(add(scale(r, a1), a2), b1, add(scale(r, c1), c2));

            // the A'-coordinates of an image depend only on a:
            // alpha(a, b1, c1) = alpha(a, b2, c2)
            for (int i = 0; i < out.out_a; ++i) push_block_row(i, sub(m_d1, m_d2a));
            // the B'-coordinates depend only on b
            for (int i = 0; i < out.out_b; ++i) push_block_row(out.out_a + i, sub(m_d1, m_d2b));
            // linearity over A: phi(r *A d1 +A d2) = r *A' phi(d1) +A' phi(d2)
            for (int i = 0; i < out.out_a; ++i) push_block_row(i, sub(m_acomb, m_d1));
            for (int i = 0; i < out.out_b; ++i)
                push_block_row(out.out_a + i, sub(m_acomb, add(scale(r, m_d1), m_d2a)));
            for (int i = 0; i < out.out_c; ++i)
                push_block_row(out.out_a + out.out_b + i, sub(m_acomb, add(scale(r, m_d1), m_d2a)));
            // linearity over B
            for (int i = 0; i < out.out_b; ++i) push_block_row(out.out_a + i, sub(m_bcomb, m_d1));
            for (int i = 0; i < out.out_a; ++i) push_block_row(i, sub(m_bcomb, add(scale(r, m_d1), m_d2b)));
            for (int i = 0; i < out.out_c; ++i)
                push_block_row(out.out_a + out.out_b + i, sub(m_bcomb, add(scale(r, m_d1), m_d2b)));
        }
        std::vector<Rat> copy = rows;
        const int rk = static_cast<int>(detail::rref(copy, nrows, cols).size());
        stable = (rk == last_rank) ? stable + 1 : 0;
        last_rank = rk;
        ++batch;
    }
    out.constraint = rows;
    out.constraint_rows = nrows;
    out.solutions = detail::kernel_of(std::move(rows), nrows, cols);
    return out;
}

/// The coefficient vector of a canonical-form morphism in the ansatz layout.
inline Vec canonical_coefficients(const MorphismAnsatz& an, const DVBMorphism& phi) {
    const MonomialBasis& mb = an.mb;
    Vec v = zero_vec(an.cols());
    auto block = [&](int b) { return b * mb.count(); };
    for (int i = 0; i < an.out_a; ++i)
        for (int j = 0; j < mb.dA; ++j) v[static_cast<std::size_t>(block(i) + 1 + j)] = phi.fA.at(i, j);
    for (int i = 0; i < an.out_b; ++i)
        for (int j = 0; j < mb.dB; ++j) v[static_cast<std::size_t>(block(an.out_a + i) + 1 + mb.dA + j)] = phi.fB.at(i, j);
    for (int i = 0; i < an.out_c; ++i) {
        const int b = block(an.out_a + an.out_b + i);
        for (int k = 0; k < mb.dC; ++k) v[static_cast<std::size_t>(b + mb.c_index(k))] = phi.fC.at(i, k);
        for (int p = 0; p < mb.dA; ++p)
            for (int q = 0; q < mb.dB; ++q)
                v[static_cast<std::size_t>(b + mb.ab_index(p, q))] = phi.omega.at(i, p * mb.dB + q);
    }
    return v;
}

/// True when the coefficient vector only uses monomials a canonical form can
/// produce: A'-blocks linear in a, B'-blocks linear in b, C'-blocks linear
/// in c plus products a_i b_j, and no constants anywhere.
inline bool canonical_support(const MorphismAnsatz& an, const Vec& v) {
    const MonomialBasis& mb = an.mb;
    std::vector<bool> allowed(static_cast<std::size_t>(an.cols()), false);
    auto allow = [&](int block, int mono) { allowed[static_cast<std::size_t>(block * mb.count() + mono)] = true; };
    for (int i = 0; i < an.out_a; ++i)
        for (int j = 0; j < mb.dA; ++j) allow(i, 1 + j);
    for (int i = 0; i < an.out_b; ++i)
        for (int j = 0; j < mb.dB; ++j) allow(an.out_a + i, 1 + mb.dA + j);
    for (int i = 0; i < an.out_c; ++i) {
        for (int k = 0; k < mb.dC; ++k) allow(an.out_a + an.out_b + i, mb.c_index(k));
        for (int p = 0; p < mb.dA; ++p)
            for (int q = 0; q < mb.dB; ++q) allow(an.out_a + an.out_b + i, mb.ab_index(p, q));
    }
    for (std::size_t t = 0; t < v.size(); ++t)
        if (v[t] != 0 && !allowed[t]) return false;
    return true;
}

inline bool in_constraint_kernel(const MorphismAnsatz& an, const Vec& v) {
    const int cols = an.cols();
    for (int r = 0; r < an.constraint_rows; ++r) {
        Rat s = 0;
        for (int c = 0; c < cols; ++c) {
            const Rat& a = an.constraint[static_cast<std::size_t>(r) * cols + c];
            if (a != 0 && v[static_cast<std::size_t>(c)] != 0) s += a * v[static_cast<std::size_t>(c)];
        }
        if (s != 0) return false;
    }
    return true;
}

} // namespace dvblab::testing

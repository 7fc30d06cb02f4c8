#pragma once

#include <utility>
#include <vector>

#include "dvblab/dvb.hpp"
#include "dvblab/linmap.hpp"
#include "dvblab/rng.hpp"

namespace dvblab {

/// Monomials of degree <= 2 in the slice coordinates (a_0.., b_0.., c_0..).
/// Order: constant, then the variables in (a, b, c) order, then products
/// x_i x_j with i <= j lexicographically. Every brute-force solve in the
/// repo shares this ordering.
struct MonomialBasis {
    int dA = 0, dB = 0, dC = 0;
    std::vector<std::pair<int, int>> quads;

    MonomialBasis() = default;
    MonomialBasis(int da, int db, int dc) : dA(da), dB(db), dC(dc) {
        const int n = nvars();
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) quads.emplace_back(i, j);
    }

    int nvars() const { return dA + dB + dC; }
    int count() const { return 1 + nvars() + static_cast<int>(quads.size()); }

    /// Values of all monomials at the slice point (a, b, c).
    Vec eval_all(const Vec& a, const Vec& b, const Vec& c) const {
        Vec vars;
        vars.reserve(static_cast<std::size_t>(nvars()));
        for (const auto& x : a) vars.push_back(x);
        for (const auto& x : b) vars.push_back(x);
        for (const auto& x : c) vars.push_back(x);
        Vec out;
        out.reserve(static_cast<std::size_t>(count()));
        out.push_back(Rat(1));
        for (const auto& x : vars) out.push_back(x);
        for (const auto& [i, j] : quads) out.push_back(vars[static_cast<std::size_t>(i)] * vars[static_cast<std::size_t>(j)]);
        return out;
    }

    /// Monomial index of the product a_i b_j.
    int ab_index(int i, int j) const {
        const int vi = i, vj = dA + j;
        // quads are lexicographic over (vi, vj) with vi <= vj
        int idx = 0;
        for (std::size_t q = 0; q < quads.size(); ++q)
            if (quads[q].first == vi && quads[q].second == vj) { idx = static_cast<int>(q); break; }
        return 1 + nvars() + idx;
    }

    /// Monomial index of the variable c_k.
    int c_index(int k) const { return 1 + dA + dB + k; }
};

/// Coefficient vectors (over MonomialBasis) spanning the canonical space
/// {(theta, chi)}: the products a_i b_j and the core coordinates c_k.
inline std::vector<Vec> canonical_double_linear_generators(const MonomialBasis& mb) {
    std::vector<Vec> gens;
    for (int i = 0; i < mb.dA; ++i)
        for (int j = 0; j < mb.dB; ++j) {
            Vec v = zero_vec(mb.count());
            v[static_cast<std::size_t>(mb.ab_index(i, j))] = 1;
            gens.push_back(std::move(v));
        }
    for (int k = 0; k < mb.dC; ++k) {
        Vec v = zero_vec(mb.count());
        v[static_cast<std::size_t>(mb.c_index(k))] = 1;
        gens.push_back(std::move(v));
    }
    return gens;
}

/// Brute-force the space of double-linear functions on the slice of D by a
/// degree-<= 2 ansatz. Linearity for both structures is imposed on sampled
/// points; rows are added until the constraint rank stabilizes, then the
/// kernel is returned in the deterministic RREF basis. Every row is a valid
/// consequence of the axioms, so the result always CONTAINS the true
/// solution space; callers certify equality by dimension and membership.
inline std::vector<Vec> double_linear_function_space(const TrivialDVB& D, std::uint64_t seed) {
    const MonomialBasis mb(D.A.dim, D.B.dim, D.C.dim);
    const int cols = mb.count();

    std::vector<Rat> rows;
    int nrows = 0;
    auto push_row = [&](const Vec& r) {
        rows.insert(rows.end(), r.begin(), r.end());
        ++nrows;
    };
    // r-values cycle through a fixed pool so that 0, 1 and a non-integer all occur.
    const Rat rpool[6] = {Rat(0), Rat(1), Rat(2), Rat(-1), Rat(1, 2), Rat(3)};

    int stable = 0, last_rank = -1, batch = 0;
    while (stable < 2 || batch < 3) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(batch));
        for (int k = 0; k < cols + 4; ++k) {
            const Rat r = rpool[static_cast<std::size_t>(rng.int_in(0, 5))];
            const Vec a1 = rng.vec(D.A.dim), a2 = rng.vec(D.A.dim);
            const Vec b1 = rng.vec(D.B.dim), b2 = rng.vec(D.B.dim);
            const Vec c1 = rng.vec(D.C.dim), c2 = rng.vec(D.C.dim);
            switch (k % 4) {
            case 0: { // sigma(r *A d1 +A d2) = r sigma(d1) + sigma(d2)
                Vec row = mb.eval_all(a1, add(scale(r, b1), b2), add(scale(r, c1), c2));
                row = sub(row, scale(r, mb.eval_all(a1, b1, c1)));
                row = sub(row, mb.eval_all(a1, b2, c2));
                push_row(row);
                break;
            }
            case 1: { // sigma(r *A d) = r sigma(d)
                Vec row = mb.eval_all(a1, scale(r, b1), scale(r, c1));
                row = sub(row, scale(r, mb.eval_all(a1, b1, c1)));
                push_row(row);
                break;
            }
            case 2: { // sigma(r *B d1 +B d2) = r sigma(d1) + sigma(d2)
                Vec row = mb.eval_all(add(scale(r, a1), a2), b1, add(scale(r, c1), c2));
                row = sub(row, scale(r, mb.eval_all(a1, b1, c1)));
                row = sub(row, mb.eval_all(a2, b1, c2));
                push_row(row);
                break;
            }
            default: { // sigma(r *B d) = r sigma(d)
                Vec row = mb.eval_all(scale(r, a1), b1, scale(r, c1));
                row = sub(row, scale(r, mb.eval_all(a1, b1, c1)));
                push_row(row);
                break;
            }
            }
        }
        std::vector<Rat> copy = rows;
        const int rk = static_cast<int>(detail::rref(copy, nrows, cols).size());
        stable = (rk == last_rank) ? stable + 1 : 0;
        last_rank = rk;
        ++batch;
    }
    return detail::kernel_of(std::move(rows), nrows, cols);
}

/// Evaluate a solved coefficient vector at a slice point.
inline Rat eval_solution(const MonomialBasis& mb, const Vec& coeffs, const DVBElement& d) {
    return dot(coeffs, mb.eval_all(d.a, d.b, d.c));
}

/// Do two generating sets span the same subspace? Exact rank comparison of
/// the individual spans against the stacked span.
inline bool same_span(const std::vector<Vec>& xs, const std::vector<Vec>& ys, int dim) {
    const int rx = detail::rank_of_vectors(xs, dim);
    const int ry = detail::rank_of_vectors(ys, dim);
    if (rx != ry) return false;
    std::vector<Vec> all = xs;
    all.insert(all.end(), ys.begin(), ys.end());
    return detail::rank_of_vectors(all, dim) == rx;
}

} // namespace dvblab

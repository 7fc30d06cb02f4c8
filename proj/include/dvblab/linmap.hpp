#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dvblab/errors.hpp"
#include "dvblab/rational.hpp"

namespace dvblab {

/// A finite-dimensional rational vector space with an implicit standard
/// basis e_0 .. e_{dim-1}. The label is bookkeeping for diagnostics and
/// serialization; it never affects arithmetic.
struct Space {
    int dim = 0;
    std::string label;

    Space() = default;
    Space(int d, std::string l) : dim(d), label(std::move(l)) {
        if (d < 0) throw ShapeMismatch("negative dimension for space " + label);
    }
};

inline bool operator==(const Space& x, const Space& y) { return x.dim == y.dim && x.label == y.label; }
inline bool operator!=(const Space& x, const Space& y) { return !(x == y); }

/// Dual space: same dimension, label toggles a trailing '*' so that
/// dual(dual(X)) prints as X again.
inline Space dual(const Space& s) {
    if (!s.label.empty() && s.label.back() == '*')
        return Space(s.dim, s.label.substr(0, s.label.size() - 1));
    return Space(s.dim, s.label + "*");
}

/// Tensor product space X (x) Y. Basis ordered row-major:
/// e_i (x) f_j sits at index i*dim(Y) + j.
inline Space tensor(const Space& x, const Space& y) {
    return Space(x.dim * y.dim, x.label + "(x)" + y.label);
}

using Vec = std::vector<Rat>;

inline Vec zero_vec(int dim) { return Vec(static_cast<std::size_t>(dim)); }

inline bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline Vec add(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw ShapeMismatch("vector addition: size mismatch");
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return r;
}

inline Vec sub(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw ShapeMismatch("vector subtraction: size mismatch");
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return r;
}

inline Vec scale(const Rat& r, const Vec& x) {
    Vec y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = r * x[i];
    return y;
}

/// Coordinate pairing of a covector with a vector (or any two coordinate
/// vectors of equal length).
inline Rat dot(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw ShapeMismatch("pairing: size mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

inline Vec basis_vec(int dim, int k) {
    Vec v = zero_vec(dim);
    v[static_cast<std::size_t>(k)] = 1;
    return v;
}

/// x (x) y in the row-major tensor coordinates.
inline Vec tensor_vec(const Vec& x, const Vec& y) {
    Vec t;
    t.reserve(x.size() * y.size());
    for (const auto& xi : x)
        for (const auto& yj : y) t.push_back(xi * yj);
    return t;
}

/// A linear map between spaces, stored as a dense cod.dim x dom.dim matrix;
/// column j is the image of e_j.
struct LinMap {
    Space dom, cod;
    std::vector<Rat> m; // row-major

    LinMap() = default;
    LinMap(Space d, Space c) : dom(std::move(d)), cod(std::move(c)), m(static_cast<std::size_t>(dom.dim) * cod.dim) {}
    LinMap(Space d, Space c, std::vector<Rat> entries) : dom(std::move(d)), cod(std::move(c)), m(std::move(entries)) {
        if (m.size() != static_cast<std::size_t>(dom.dim) * cod.dim)
            throw ShapeMismatch("matrix entries do not match " + std::to_string(cod.dim) + "x" + std::to_string(dom.dim));
    }

    int rows() const { return cod.dim; }
    int cols() const { return dom.dim; }

    const Rat& at(int r, int c) const { return m[static_cast<std::size_t>(r) * cols() + c]; }
    Rat& at(int r, int c) { return m[static_cast<std::size_t>(r) * cols() + c]; }

    Vec apply(const Vec& v) const {
        if (static_cast<int>(v.size()) != cols())
            throw ShapeMismatch("apply: vector of size " + std::to_string(v.size()) + " to map with domain dim " + std::to_string(cols()));
        Vec out = zero_vec(rows());
        for (int i = 0; i < rows(); ++i) {
            Rat s = 0;
            for (int j = 0; j < cols(); ++j) {
                const Rat& a = at(i, j);
                if (a != 0 && v[static_cast<std::size_t>(j)] != 0) s += a * v[static_cast<std::size_t>(j)];
            }
            out[static_cast<std::size_t>(i)] = s;
        }
        return out;
    }
};

inline bool operator==(const LinMap& f, const LinMap& g) {
    return f.dom.dim == g.dom.dim && f.cod.dim == g.cod.dim && f.m == g.m;
}

inline LinMap identity(const Space& s) {
    LinMap f(s, s);
    for (int i = 0; i < s.dim; ++i) f.at(i, i) = 1;
    return f;
}

inline LinMap zero_map(const Space& dom, const Space& cod) { return LinMap(dom, cod); }

/// f after g.
inline LinMap compose(const LinMap& f, const LinMap& g) {
    if (f.cols() != g.rows()) throw ShapeMismatch("compose: inner dimensions disagree");
    LinMap h(g.dom, f.cod);
    for (int i = 0; i < f.rows(); ++i)
        for (int k = 0; k < f.cols(); ++k) {
            const Rat& a = f.at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < g.cols(); ++j) {
                const Rat& b = g.at(k, j);
                if (b != 0) h.at(i, j) += a * b;
            }
        }
    return h;
}

inline LinMap add(const LinMap& f, const LinMap& g) {
    if (f.rows() != g.rows() || f.cols() != g.cols()) throw ShapeMismatch("add: shape mismatch");
    LinMap h = f;
    for (std::size_t i = 0; i < h.m.size(); ++i) h.m[i] += g.m[i];
    return h;
}

inline LinMap sub(const LinMap& f, const LinMap& g) {
    if (f.rows() != g.rows() || f.cols() != g.cols()) throw ShapeMismatch("sub: shape mismatch");
    LinMap h = f;
    for (std::size_t i = 0; i < h.m.size(); ++i) h.m[i] -= g.m[i];
    return h;
}

inline LinMap scale(const Rat& r, const LinMap& f) {
    LinMap h = f;
    for (auto& x : h.m) x *= r;
    return h;
}

inline bool is_zero(const LinMap& f) {
    for (const auto& x : f.m)
        if (x != 0) return false;
    return true;
}

namespace detail {

/// Reduced row echelon form, in place. Pivot selection is deterministic:
/// scan columns left to right, take the first row with a nonzero entry.
/// Returns the pivot column of each pivot row, in order.
inline std::vector<int> rref(std::vector<Rat>& a, int rows, int cols) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int piv = -1;
        for (int i = row; i < rows; ++i)
            if (a[static_cast<std::size_t>(i) * cols + col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < cols; ++j)
                std::swap(a[static_cast<std::size_t>(piv) * cols + j], a[static_cast<std::size_t>(row) * cols + j]);
        const Rat p = a[static_cast<std::size_t>(row) * cols + col];
        for (int j = col; j < cols; ++j) a[static_cast<std::size_t>(row) * cols + j] /= p;
        for (int i = 0; i < rows; ++i) {
            if (i == row) continue;
            const Rat f = a[static_cast<std::size_t>(i) * cols + col];
            if (f == 0) continue;
            for (int j = col; j < cols; ++j)
                a[static_cast<std::size_t>(i) * cols + j] -= f * a[static_cast<std::size_t>(row) * cols + j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Kernel basis of the rows x cols matrix: RREF, then one basis vector per
/// free column, free variable set to 1, taken in ascending column order.
/// Basis vector k therefore has a 1 in its own free column and 0 in every
/// other free column; free_cols (when requested) records those columns so
/// that coordinates in this basis can be read off without solving.
inline std::vector<Vec> kernel_of(std::vector<Rat> a, int rows, int cols, std::vector<int>* free_cols = nullptr) {
    const std::vector<int> pivots = rref(a, rows, cols);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        Vec v = zero_vec(cols);
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = -a[r * cols + free];
        basis.push_back(std::move(v));
        if (free_cols) free_cols->push_back(free);
    }
    return basis;
}

/// Rank of a basis given as a list of coordinate vectors.
inline int rank_of_vectors(const std::vector<Vec>& vs, int dim) {
    if (vs.empty()) return 0;
    std::vector<Rat> a;
    a.reserve(vs.size() * static_cast<std::size_t>(dim));
    for (const auto& v : vs) {
        if (static_cast<int>(v.size()) != dim) throw ShapeMismatch("rank_of_vectors: inconsistent sizes");
        for (const auto& x : v) a.push_back(x);
    }
    return static_cast<int>(rref(a, static_cast<int>(vs.size()), dim).size());
}

} // namespace detail

inline int rank(const LinMap& f) {
    std::vector<Rat> a = f.m;
    return static_cast<int>(detail::rref(a, f.rows(), f.cols()).size());
}

inline std::vector<Vec> kernel_basis(const LinMap& f) {
    return detail::kernel_of(f.m, f.rows(), f.cols());
}

/// Solve f x = v. The solution is the deterministic one with all free
/// variables set to 0. Throws SingularMatrix if the system is inconsistent.
inline Vec solve_consistent(const LinMap& f, const Vec& v) {
    if (static_cast<int>(v.size()) != f.rows()) throw ShapeMismatch("solve: rhs size mismatch");
    const int rows = f.rows(), cols = f.cols();
    std::vector<Rat> a(static_cast<std::size_t>(rows) * (cols + 1));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) a[static_cast<std::size_t>(i) * (cols + 1) + j] = f.at(i, j);
        a[static_cast<std::size_t>(i) * (cols + 1) + cols] = v[static_cast<std::size_t>(i)];
    }
    const std::vector<int> pivots = detail::rref(a, rows, cols + 1);
    Vec x = zero_vec(cols);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols) throw SingularMatrix("solve: inconsistent system");
        x[static_cast<std::size_t>(pivots[r])] = a[r * (cols + 1) + cols];
    }
    return x;
}

/// Right inverse s of a surjective map p, so p o s = id. Deterministic:
/// each column solves p x = e_k with free variables zeroed.
inline LinMap right_inverse(const LinMap& p) {
    if (rank(p) != p.rows()) throw NotSurjective("right_inverse: map is not surjective");
    LinMap s(p.cod, p.dom);
    for (int k = 0; k < p.rows(); ++k) {
        const Vec col = solve_consistent(p, basis_vec(p.rows(), k));
        for (int i = 0; i < p.cols(); ++i) s.at(i, k) = col[static_cast<std::size_t>(i)];
    }
    return s;
}

/// Left inverse of an injective map e, via the right inverse of its dual.
inline LinMap left_inverse(const LinMap& e) {
    if (rank(e) != e.cols()) throw SingularMatrix("left_inverse: map is not injective");
    // transpose, right-invert, transpose back
    LinMap et(e.cod, e.dom);
    for (int i = 0; i < e.rows(); ++i)
        for (int j = 0; j < e.cols(); ++j) et.at(j, i) = e.at(i, j);
    const LinMap s = right_inverse(LinMap(e.cod, e.dom, et.m));
    LinMap l(e.cod, e.dom);
    for (int i = 0; i < s.rows(); ++i)
        for (int j = 0; j < s.cols(); ++j) l.at(j, i) = s.at(i, j);
    return l;
}

inline LinMap inverse(const LinMap& f) {
    if (f.rows() != f.cols()) throw ShapeMismatch("inverse: map is not square");
    if (rank(f) != f.rows()) throw SingularMatrix("inverse: singular map");
    LinMap inv = right_inverse(f);
    return LinMap(f.cod, f.dom, inv.m);
}

/// Kronecker product under the row-major tensor convention:
/// (f (x) g)(e_i (x) f_j) = f(e_i) (x) g(f_j).
inline LinMap tensor_map(const LinMap& f, const LinMap& g) {
    LinMap h(tensor(f.dom, g.dom), tensor(f.cod, g.cod));
    const int gr = g.rows(), gc = g.cols();
    for (int p = 0; p < f.rows(); ++p)
        for (int q = 0; q < gr; ++q)
            for (int i = 0; i < f.cols(); ++i) {
                const Rat& a = f.at(p, i);
                if (a == 0) continue;
                for (int j = 0; j < gc; ++j) {
                    const Rat& b = g.at(q, j);
                    if (b != 0) h.at(p * gr + q, i * gc + j) = a * b;
                }
            }
    return h;
}

/// The canonical swap X (x) Y -> Y (x) X, e_i (x) f_j -> f_j (x) e_i.
/// Always used explicitly where a first-slot contraction is needed.
inline LinMap swap_map(const Space& x, const Space& y) {
    LinMap s(tensor(x, y), tensor(y, x));
    for (int i = 0; i < x.dim; ++i)
        for (int j = 0; j < y.dim; ++j) s.at(j * x.dim + i, i * y.dim + j) = 1;
    return s;
}

/// Swap applied to coordinates of an element of X (x) Y.
inline Vec swap_tensor_vec(const Vec& t, int dim_x, int dim_y) {
    if (static_cast<int>(t.size()) != dim_x * dim_y) throw ShapeMismatch("swap_tensor_vec: size mismatch");
    Vec r(t.size());
    for (int i = 0; i < dim_x; ++i)
        for (int j = 0; j < dim_y; ++j)
            r[static_cast<std::size_t>(j) * dim_x + i] = t[static_cast<std::size_t>(i) * dim_y + j];
    return r;
}

/// (Id_X (x) lambda)(t) for t in X (x) Y and lambda a covector on Y:
/// the contraction that always pairs the second tensor slot.
inline Vec contract_second(const Vec& t, const Vec& lambda, int dim_x, int dim_y) {
    if (static_cast<int>(t.size()) != dim_x * dim_y) throw ShapeMismatch("contract_second: tensor size mismatch");
    if (static_cast<int>(lambda.size()) != dim_y) throw ShapeMismatch("contract_second: covector size mismatch");
    Vec out = zero_vec(dim_x);
    for (int i = 0; i < dim_x; ++i) {
        Rat s = 0;
        for (int j = 0; j < dim_y; ++j) s += t[static_cast<std::size_t>(i) * dim_y + j] * lambda[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = s;
    }
    return out;
}

/// First-slot contraction, realized as the explicit swap followed by
/// contract_second.
inline Vec contract_first(const Vec& t, const Vec& lambda, int dim_x, int dim_y) {
    return contract_second(swap_tensor_vec(t, dim_x, dim_y), lambda, dim_y, dim_x);
}

/// Transpose matrix between the dual spaces.
inline LinMap dual_map(const LinMap& f) {
    LinMap g(dual(f.cod), dual(f.dom));
    for (int i = 0; i < f.rows(); ++i)
        for (int j = 0; j < f.cols(); ++j) g.at(j, i) = f.at(i, j);
    return g;
}

/// Reshape an element of X* (x) Y into the map X -> Y it represents:
/// lambda (x) y acts as x -> <lambda, x> y.
inline LinMap hom_from_tensor(const Vec& t, const Space& x, const Space& y) {
    if (static_cast<int>(t.size()) != x.dim * y.dim) throw ShapeMismatch("hom_from_tensor: size mismatch");
    LinMap f(x, y);
    for (int i = 0; i < x.dim; ++i)
        for (int j = 0; j < y.dim; ++j) f.at(j, i) = t[static_cast<std::size_t>(i) * y.dim + j];
    return f;
}

/// Inverse of hom_from_tensor.
inline Vec tensor_from_hom(const LinMap& f) {
    Vec t(static_cast<std::size_t>(f.cols()) * f.rows());
    for (int i = 0; i < f.cols(); ++i)
        for (int j = 0; j < f.rows(); ++j) t[static_cast<std::size_t>(i) * f.rows() + j] = f.at(j, i);
    return t;
}

/// Horizontal concatenation [f | g] on a direct-sum domain.
inline LinMap hcat(const LinMap& f, const LinMap& g, const Space& dom, const Space& cod) {
    if (f.rows() != g.rows() || f.rows() != cod.dim || f.cols() + g.cols() != dom.dim)
        throw ShapeMismatch("hcat: shape mismatch");
    LinMap h(dom, cod);
    for (int i = 0; i < cod.dim; ++i) {
        for (int j = 0; j < f.cols(); ++j) h.at(i, j) = f.at(i, j);
        for (int j = 0; j < g.cols(); ++j) h.at(i, f.cols() + j) = g.at(i, j);
    }
    return h;
}

} // namespace dvblab

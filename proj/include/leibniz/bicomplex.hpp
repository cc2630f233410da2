#pragma once

#include "leibniz/algebra.hpp"
#include "leibniz/combinatorics.hpp"
#include "leibniz/linalg.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace leibniz {

enum class Branch { leibniz, poisson };

inline const char* to_string(Branch b) { return b == Branch::leibniz ? "leibniz" : "poisson"; }

/// Position (p, q) in the double complex.
///
/// Leibniz branch: C^{p,q} = Hom(A^p (x) Λ^q L, M) for p >= 1 and
/// C^{0,q} = Hom(Λ^q L, P).
/// Poisson branch: C^{p,q} = Hom(A^p (x) Λ^q A, M) for p >= 2; the bottom row
/// p = 1 is Hom(Λ^{q+1} A, M), and q = -1 there denotes M itself.
struct Bidegree {
    Branch branch = Branch::leibniz;
    int p = 0;
    int q = 0;

    int total() const { return p + q; }

    bool valid() const
    {
        if (branch == Branch::leibniz)
            return p >= 0 && q >= 0;
        return (p == 1 && q >= -1) || (p >= 2 && q >= 0);
    }

    bool is_poisson_bottom() const { return branch == Branch::poisson && p == 1; }

    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

inline std::string to_string(const Bidegree& d)
{
    return std::string("(") + std::to_string(d.p) + "," + std::to_string(d.q) + ")";
}

/// Hom(A^{(x) tensor_slots} (x) Λ^{wedge_slots} W, T) with dim A = tensor_dim,
/// dim W = wedge_dim, dim T = target_dim.
struct CochainShape {
    std::size_t tensor_slots = 0;
    std::size_t tensor_dim = 0;
    std::size_t wedge_slots = 0;
    std::size_t wedge_dim = 0;
    std::size_t target_dim = 0;
};

/// Enumerated basis of a cochain space. Coordinates are ordered
/// lexicographically by (A-tuple, increasing W-tuple, target index).
class CochainSpace {
public:
    explicit CochainSpace(const CochainShape& s)
        : shape_(s), tuples_(s.tensor_dim, s.tensor_slots), wedges_(s.wedge_dim, s.wedge_slots)
    {
    }

    const CochainShape& shape() const { return shape_; }
    const TupleIndex& tuples() const { return tuples_; }
    const WedgeIndex& wedges() const { return wedges_; }

    std::size_t size() const { return tuples_.size() * wedges_.size() * shape_.target_dim; }

    std::size_t index(std::size_t tuple_rank, std::size_t wedge_rank, std::size_t target) const
    {
        return (tuple_rank * wedges_.size() + wedge_rank) * shape_.target_dim + target;
    }

    std::size_t index(const Tuple& a, const Tuple& increasing_w, std::size_t target) const
    {
        return index(tuples_.rank(a), wedges_.rank(increasing_w), target);
    }

    struct Coord {
        Tuple a;
        std::size_t wedge_rank;
        std::size_t target;
    };

    Coord coord(std::size_t idx) const
    {
        const auto t = idx % shape_.target_dim;
        idx /= shape_.target_dim;
        const auto w = idx % wedges_.size();
        return {tuples_.unrank(idx / wedges_.size()), w, t};
    }

private:
    CochainShape shape_;
    TupleIndex tuples_;
    WedgeIndex wedges_;
};

struct Cochain {
    Bidegree degree;
    Vector coeffs;
};

/// Blocks of C^n_tot, ordered by increasing p.
struct TotalLayout {
    struct Block {
        Bidegree degree;
        std::size_t offset;
        std::size_t size;
    };

    Branch branch = Branch::leibniz;
    int degree = 0;
    std::vector<Block> blocks;
    std::size_t dim = 0;

    std::optional<Block> find(const Bidegree& d) const
    {
        for (const auto& b : blocks)
            if (b.degree == d)
                return b;
        return std::nullopt;
    }

    const Block& at(const Bidegree& d) const
    {
        for (const auto& b : blocks)
            if (b.degree == d)
                return b;
        throw std::out_of_range("TotalLayout: no block at bidegree " + to_string(d));
    }
};

/// Element of C^n_tot stored as one flat vector aligned with its layout.
struct TotalCochain {
    TotalLayout layout;
    Vector coeffs;

    explicit TotalCochain(TotalLayout l) : layout(std::move(l)), coeffs(layout.dim) {}
    TotalCochain(TotalLayout l, Vector c) : layout(std::move(l)), coeffs(std::move(c))
    {
        if (coeffs.size() != layout.dim)
            throw std::invalid_argument("TotalCochain: coefficient count does not match layout");
    }

    Vector part(const Bidegree& d) const
    {
        const auto& b = layout.at(d);
        return Vector(coeffs.begin() + static_cast<std::ptrdiff_t>(b.offset),
                      coeffs.begin() + static_cast<std::ptrdiff_t>(b.offset + b.size));
    }

    void set_part(const Bidegree& d, const Vector& v)
    {
        const auto& b = layout.at(d);
        if (v.size() != b.size)
            throw std::invalid_argument("TotalCochain::set_part: block size mismatch");
        for (std::size_t i = 0; i < b.size; ++i)
            coeffs[b.offset + i] = v[i];
    }
};

/// Matrix of D_n : C^n_tot -> C^{n+1}_tot together with both block layouts.
struct DifferentialMatrix {
    int from_degree = 0;
    int to_degree = 0;
    SparseMatrix matrix;
    TotalLayout source;
    TotalLayout target;
};

// ---------------------------------------------------------------------------
// Coboundary formulas on enumerated bases. Every builder fills one sparse row
// per output coordinate by expanding the defining formula.

namespace ops {

/// Hochschild coboundary acting on the tensor slots, wedge slots are
/// spectators:
///   (d f)(a_1..a_{p+1}) = a_1 f(a_2..) + sum_i (-1)^i f(.., a_i a_{i+1}, ..)
///                         + (-1)^{p+1} f(a_1..a_p) a_{p+1}
inline SparseMatrix hochschild(const CochainSpace& in, const CochainSpace& out, const Tensor3& prod,
                               const Tensor3& left, const Tensor3& right)
{
    const auto p = in.shape().tensor_slots;
    const auto na = in.shape().tensor_dim;
    const auto nt = in.shape().target_dim;
    if (out.shape().tensor_slots != p + 1 || out.shape().wedge_slots != in.shape().wedge_slots)
        throw std::invalid_argument("hochschild: incompatible shapes");

    SparseMatrix m(out.size(), in.size());
    SparseMatrix::Row row;
    for (std::size_t r = 0; r < out.size(); ++r) {
        const auto [a, w, t] = out.coord(r);
        row.clear();

        Tuple tail(a.begin() + 1, a.end());
        const auto tail_rank = in.tuples().rank(tail);
        for (std::size_t u = 0; u < nt; ++u)
            if (sgn(left(a[0], u, t)) != 0)
                row.emplace_back(in.index(tail_rank, w, u), left(a[0], u, t));

        for (std::size_t i = 0; i < p; ++i) {
            const int sign = (i % 2 == 0) ? -1 : 1;  // (-1)^{i+1} for 0-based merge position i
            Tuple merged;
            merged.reserve(p);
            merged.insert(merged.end(), a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i));
            merged.push_back(0);
            merged.insert(merged.end(), a.begin() + static_cast<std::ptrdiff_t>(i + 2), a.end());
            for (std::size_t k = 0; k < na; ++k) {
                const Rational& ck = prod(a[i], a[i + 1], k);
                if (sgn(ck) == 0)
                    continue;
                merged[i] = k;
                row.emplace_back(in.index(in.tuples().rank(merged), w, t), sign * ck);
            }
        }

        Tuple head(a.begin(), a.end() - 1);
        const auto head_rank = in.tuples().rank(head);
        const int tail_sign = (p % 2 == 0) ? -1 : 1;  // (-1)^{p+1}
        for (std::size_t u = 0; u < nt; ++u)
            if (sgn(right(u, a[p], t)) != 0)
                row.emplace_back(in.index(head_rank, w, u), tail_sign * right(u, a[p], t));

        m.set_row(r, std::move(row));
        row = {};
    }
    return m;
}

/// Chevalley-Eilenberg coboundary in the wedge slots with coefficients in
/// the module of tensor-slot cochains:
///   (d f)(x_1..x_{k+1}) = sum_i (-1)^{i+1} x_i . f(..x_i omitted..)
///                         + sum_{i<j} (-1)^{i+j} f([x_i,x_j], ..x_i, x_j omitted..)
/// where (x . g)(a_1..a_p) = [x, g(a..)] - sum_s g(.., [x, a_s], ..).
inline SparseMatrix chevalley_eilenberg(const CochainSpace& in, const CochainSpace& out,
                                        const Tensor3& bracket, const Tensor3* on_tensor,
                                        const Tensor3& on_target)
{
    const auto& si = in.shape();
    if (out.shape().wedge_slots != si.wedge_slots + 1 || out.shape().tensor_slots != si.tensor_slots)
        throw std::invalid_argument("chevalley_eilenberg: incompatible shapes");
    const auto p = si.tensor_slots;
    const auto na = si.tensor_dim;
    const auto nw = si.wedge_dim;
    const auto nt = si.target_dim;
    if (p > 0 && on_tensor == nullptr)
        throw std::invalid_argument("chevalley_eilenberg: tensor-slot action required");

    SparseMatrix m(out.size(), in.size());
    SparseMatrix::Row row;
    for (std::size_t r = 0; r < out.size(); ++r) {
        const auto coord = out.coord(r);
        const Tuple& a = coord.a;
        const std::size_t t = coord.target;
        const Tuple& x = out.wedges().unrank(coord.wedge_rank);
        const auto k = x.size();
        const auto a_rank = in.tuples().rank(a);
        row.clear();

        for (std::size_t i = 0; i < k; ++i) {
            const int sign = (i % 2 == 0) ? 1 : -1;
            Tuple rest;
            for (std::size_t j = 0; j < k; ++j)
                if (j != i)
                    rest.push_back(x[j]);
            const auto rest_rank = in.wedges().rank(rest);
            for (std::size_t u = 0; u < nt; ++u)
                if (sgn(on_target(x[i], u, t)) != 0)
                    row.emplace_back(in.index(a_rank, rest_rank, u), sign * on_target(x[i], u, t));
            for (std::size_t s = 0; s < p; ++s) {
                Tuple b = a;
                for (std::size_t c = 0; c < na; ++c) {
                    const Rational& v = (*on_tensor)(x[i], a[s], c);
                    if (sgn(v) == 0)
                        continue;
                    b[s] = c;
                    row.emplace_back(in.index(in.tuples().rank(b), rest_rank, t), -sign * v);
                }
            }
        }

        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) {
                const int sign = ((i + j) % 2 == 0) ? 1 : -1;
                for (std::size_t c = 0; c < nw; ++c) {
                    const Rational& v = bracket(x[i], x[j], c);
                    if (sgn(v) == 0)
                        continue;
                    Tuple y{c};
                    for (std::size_t l = 0; l < k; ++l)
                        if (l != i && l != j)
                            y.push_back(x[l]);
                    const int s = sort_with_sign(y);
                    if (s == 0)
                        continue;
                    row.emplace_back(in.index(a_rank, in.wedges().rank(y), t), sign * s * v);
                }
            }

        m.set_row(r, std::move(row));
        row = {};
    }
    return m;
}

/// (d_v f)(a; x_1..x_q) = [f(x_1..x_q), a] through the P -> Der(A, M) map.
inline SparseMatrix vertical_from_p(const CochainSpace& in, const CochainSpace& out, const Tensor3& p_on_a)
{
    const auto np = in.shape().target_dim;
    SparseMatrix m(out.size(), in.size());
    for (std::size_t r = 0; r < out.size(); ++r) {
        const auto [a, w, t] = out.coord(r);
        SparseMatrix::Row row;
        for (std::size_t pi = 0; pi < np; ++pi)
            if (sgn(p_on_a(pi, a[0], t)) != 0)
                row.emplace_back(in.index(0, w, pi), p_on_a(pi, a[0], t));
        m.set_row(r, std::move(row));
    }
    return m;
}

/// Dual of the antisymmetrization: (e* f)(a_1 | a_2 ^ .. ^ a_q) = f(a_1 ^ .. ^ a_q).
inline SparseMatrix epsilon_star(const CochainSpace& in, const CochainSpace& out)
{
    const auto& si = in.shape();
    const auto& so = out.shape();
    if (si.tensor_slots != 0 || so.tensor_slots != 1 || si.wedge_slots == 0 ||
        so.wedge_slots + 1 != si.wedge_slots || so.tensor_dim != si.wedge_dim || so.wedge_dim != si.wedge_dim)
        throw std::invalid_argument("epsilon_star: incompatible shapes");
    SparseMatrix m(out.size(), in.size());
    for (std::size_t r = 0; r < out.size(); ++r) {
        const auto [a, w, t] = out.coord(r);
        Tuple y{a[0]};
        const auto& rest = out.wedges().unrank(w);
        y.insert(y.end(), rest.begin(), rest.end());
        const int s = sort_with_sign(y);
        if (s == 0)
            continue;
        m.set_row(r, {{in.index(0, in.wedges().rank(y), t), Rational(s)}});
    }
    return m;
}

/// [x, f] for f with no wedge slots.
inline SparseMatrix lie_action(const CochainSpace& space, const Vector& x, const Tensor3* on_tensor,
                               const Tensor3& on_target)
{
    const auto& s = space.shape();
    if (s.wedge_slots != 0)
        throw std::invalid_argument("lie_action: cochain must have no wedge slots");
    const auto nx = x.size();
    SparseMatrix m(space.size(), space.size());
    for (std::size_t r = 0; r < space.size(); ++r) {
        const auto [a, w, t] = space.coord(r);
        SparseMatrix::Row row;
        const auto a_rank = space.tuples().rank(a);
        for (std::size_t xi = 0; xi < nx; ++xi) {
            if (sgn(x[xi]) == 0)
                continue;
            for (std::size_t u = 0; u < s.target_dim; ++u)
                if (sgn(on_target(xi, u, t)) != 0)
                    row.emplace_back(space.index(a_rank, 0, u), x[xi] * on_target(xi, u, t));
            for (std::size_t sl = 0; sl < s.tensor_slots; ++sl) {
                Tuple b = a;
                for (std::size_t c = 0; c < s.tensor_dim; ++c) {
                    const Rational& v = (*on_tensor)(xi, a[sl], c);
                    if (sgn(v) == 0)
                        continue;
                    b[sl] = c;
                    row.emplace_back(space.index(space.tuples().rank(b), 0, t), -x[xi] * v);
                }
            }
        }
        m.set_row(r, std::move(row));
    }
    return m;
}

} // namespace ops

/// Projection of V^{(x) q} onto its skew tensors,
/// v_1 (x) .. (x) v_q -> (1/q!) sum_sigma sgn(sigma) v_sigma(1) (x) .. ;
/// rows and columns indexed by TupleIndex(dim, q).
inline RationalMatrix antisymmetrizer(std::size_t dim, std::size_t q)
{
    const TupleIndex idx(dim, q);
    RationalMatrix e(idx.size(), idx.size());
    Tuple perm(q);
    for (std::size_t i = 0; i < q; ++i)
        perm[i] = i;
    Rational factorial = 1;
    for (std::size_t i = 2; i <= q; ++i)
        factorial *= static_cast<unsigned long>(i);
    const Rational weight = 1 / factorial;
    for (std::size_t c = 0; c < idx.size(); ++c) {
        const Tuple src = idx.unrank(c);
        Tuple p = perm;
        do {
            Tuple permuted(q);
            for (std::size_t i = 0; i < q; ++i)
                permuted[i] = src[p[i]];
            Tuple signed_p = p;
            const int s = sort_with_sign(signed_p);
            e(idx.rank(permuted), c) += s * weight;
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return e;
}

struct AugmentingColumn {
    std::vector<SubspaceBasis> invariants;      // N^L for p = 0..max_p (p = 0 is P^L)
    std::vector<DifferentialMatrix> maps;       // maps[p] : invariants[p] -> invariants[p+1]
};

/// The double complex of a Leibniz pair with coefficients in a module, or of
/// a Poisson algebra with coefficients in a Poisson module. Holds the input
/// data by value; every method is const and pure.
class Bicomplex {
public:
    static Bicomplex leibniz(LeibnizPair pair, PairModule mod)
    {
        mod.check_shape(pair);
        return Bicomplex(Branch::leibniz, std::move(pair), std::move(mod), std::nullopt);
    }

    static Bicomplex leibniz_self(const LeibnizPair& pair) { return leibniz(pair, self_module(pair)); }

    static Bicomplex poisson(const PoissonAlgebra& P, const PoissonModule& mod)
    {
        mod.check_shape(P);
        return Bicomplex(Branch::poisson, P.as_pair(), mod.as_pair_module(), mod);
    }

    static Bicomplex poisson_self(const PoissonAlgebra& P) { return poisson(P, self_module(P)); }

    Branch branch() const { return branch_; }
    const LeibnizPair& pair() const { return pair_; }
    const PairModule& module() const { return module_; }

    CochainShape shape(const Bidegree& d) const
    {
        require(d);
        const auto na = pair_.A.dim;
        if (branch_ == Branch::leibniz) {
            const auto p = static_cast<std::size_t>(d.p);
            return {p, na, static_cast<std::size_t>(d.q), pair_.L.dim, d.p == 0 ? module_.P_dim : module_.M_dim};
        }
        if (d.p == 1)
            return {0, na, static_cast<std::size_t>(d.q + 1), na, module_.M_dim};
        return {static_cast<std::size_t>(d.p), na, static_cast<std::size_t>(d.q), na, module_.M_dim};
    }

    CochainSpace space(const Bidegree& d) const { return CochainSpace(shape(d)); }

    /// dim C^{p,q}; zero whenever an exterior power vanishes.
    std::size_t dim(const Bidegree& d) const
    {
        const auto s = shape(d);
        return ipow(s.tensor_dim, s.tensor_slots) * binomial(s.wedge_dim, s.wedge_slots) * s.target_dim;
    }

    Bidegree at(int p, int q) const { return Bidegree{branch_, p, q}; }

    // -- individual coboundaries ---------------------------------------------

    /// Hochschild coboundary C^{p,q} -> C^{p+1,q} (p >= 1, or p >= 2 on the
    /// Poisson branch where p = 1 is the bottom row).
    SparseMatrix delta_H_matrix(const Bidegree& d) const
    {
        if (d.p < 1 || d.is_poisson_bottom())
            throw std::invalid_argument("delta_H: needs a row with tensor slots (p >= 1, Poisson p >= 2)");
        return ops::hochschild(space(d), space(at(d.p + 1, d.q)), pair_.A.c, module_.left_act, module_.right_act);
    }

    /// Chevalley-Eilenberg coboundary C^{p,q} -> C^{p,q+1}.
    SparseMatrix delta_CE_matrix(const Bidegree& d) const
    {
        const auto in = space(d);
        const auto out = space(at(d.p, d.q + 1));
        if (branch_ == Branch::leibniz) {
            const Tensor3& target = d.p == 0 ? module_.L_on_P : module_.L_on_M;
            return ops::chevalley_eilenberg(in, out, pair_.L.c, &pair_.mu, target);
        }
        return ops::chevalley_eilenberg(in, out, pair_.L.c, &pair_.mu, module_.L_on_M);
    }

    /// d_v : C^{0,q} -> C^{1,q} induced by P -> Der(A, M) (Leibniz branch).
    SparseMatrix delta_v_matrix(int q) const
    {
        if (branch_ != Branch::leibniz)
            throw std::invalid_argument("delta_v: Leibniz branch only");
        return ops::vertical_from_p(space(at(0, q)), space(at(1, q)), module_.P_on_A);
    }

    /// e* : Hom(Λ^q A, M) -> Hom(A (x) Λ^{q-1} A, M), q >= 1. On the Leibniz
    /// branch this needs the pair (A, A) of a Poisson algebra, acting from
    /// C^{0,q} to C^{1,q-1}; on the Poisson branch it starts at the bottom row.
    SparseMatrix epsilon_star_matrix(int q) const
    {
        if (q < 1)
            throw std::invalid_argument("epsilon_star: q >= 1 required");
        const auto na = pair_.A.dim;
        const CochainSpace in(CochainShape{0, na, static_cast<std::size_t>(q), na, module_.M_dim});
        const CochainSpace out(CochainShape{1, na, static_cast<std::size_t>(q - 1), na, module_.M_dim});
        if (branch_ == Branch::leibniz && (pair_.L.dim != na || module_.P_dim != module_.M_dim))
            throw std::invalid_argument("epsilon_star: requires L = A and P = M");
        return ops::epsilon_star(in, out);
    }

    /// d_P = d_H o e* from the bottom row Hom(Λ^q A, M) to C^{2,q-1}.
    SparseMatrix delta_P_matrix(int q) const
    {
        if (branch_ != Branch::poisson)
            throw std::invalid_argument("delta_P: Poisson branch only");
        const auto na = pair_.A.dim;
        const CochainSpace mid(CochainShape{1, na, static_cast<std::size_t>(q - 1), na, module_.M_dim});
        const auto h = ops::hochschild(mid, space(at(2, q - 1)), pair_.A.c, module_.left_act, module_.right_act);
        return h * epsilon_star_matrix(q);
    }

    /// The vertical coboundary leaving C^{p,q}: d_v, d_H or d_P.
    SparseMatrix vertical_matrix(const Bidegree& d) const
    {
        require(d);
        if (branch_ == Branch::leibniz)
            return d.p == 0 ? delta_v_matrix(d.q) : delta_H_matrix(d);
        if (d.p == 1) {
            if (d.q < 0)
                return SparseMatrix(0, dim(d));  // e* of a 0-cochain is zero; no block above M
            return delta_P_matrix(d.q + 1);
        }
        return delta_H_matrix(d);
    }

    /// Sign in front of d_CE in the total differential: (-1)^p on rows with
    /// tensor slots; the Poisson bottom row carries +1 so that d_P, which
    /// anticommutes with d_CE, closes the bottom squares.
    int horizontal_sign(const Bidegree& d) const
    {
        if (d.is_poisson_bottom())
            return 1;
        return d.p % 2 == 0 ? 1 : -1;
    }

    /// [x, .] on C^{p,0} (p = 0: on P).
    SparseMatrix lie_action_matrix(const Vector& x, int p) const
    {
        if (branch_ != Branch::leibniz)
            throw std::invalid_argument("lie_action: Leibniz branch only");
        if (x.size() != pair_.L.dim)
            throw std::invalid_argument("lie_action: element has wrong dimension");
        const Tensor3& target = p == 0 ? module_.L_on_P : module_.L_on_M;
        return ops::lie_action(space(at(p, 0)), x, &pair_.mu, target);
    }

    // -- cochain-level wrappers ---------------------------------------------

    Cochain lie_action_on_cochain(const Vector& x, const Cochain& f) const
    {
        if (f.degree.q != 0)
            throw std::invalid_argument("lie_action_on_cochain: expects q = 0");
        return {f.degree, lie_action_matrix(x, f.degree.p).apply(f.coeffs)};
    }

    Cochain delta_H(const Cochain& f) const { return {at(f.degree.p + 1, f.degree.q), delta_H_matrix(f.degree).apply(f.coeffs)}; }
    Cochain delta_CE(const Cochain& f) const { return {at(f.degree.p, f.degree.q + 1), delta_CE_matrix(f.degree).apply(f.coeffs)}; }
    Cochain delta_v(const Cochain& f) const { return {at(1, f.degree.q), delta_v_matrix(f.degree.q).apply(f.coeffs)}; }
    Cochain delta_P(const Cochain& f) const
    {
        if (!f.degree.is_poisson_bottom())
            throw std::invalid_argument("delta_P: expects a bottom-row cochain");
        return {at(2, f.degree.q), delta_P_matrix(f.degree.q + 1).apply(f.coeffs)};
    }

    Cochain zero_cochain(const Bidegree& d) const { return {d, Vector(dim(d))}; }

    // -- total complex -------------------------------------------------------

    TotalLayout layout(int n) const
    {
        TotalLayout l;
        l.branch = branch_;
        l.degree = n;
        if (n < 0)
            return l;
        auto push = [&](Bidegree d) {
            const auto s = dim(d);
            l.blocks.push_back({d, l.dim, s});
            l.dim += s;
        };
        if (branch_ == Branch::leibniz) {
            for (int p = 0; p <= n; ++p)
                push(at(p, n - p));
        } else {
            push(at(1, n - 1));
            for (int p = 2; p <= n; ++p)
                push(at(p, n - p));
        }
        return l;
    }

    DifferentialMatrix total_differential(int n) const
    {
        DifferentialMatrix d;
        d.from_degree = n;
        d.to_degree = n + 1;
        d.source = layout(n);
        d.target = layout(n + 1);
        d.matrix = SparseMatrix(d.target.dim, d.source.dim);
        for (const auto& b : d.source.blocks) {
            if (b.size == 0)
                continue;
            const auto& deg = b.degree;
            const Bidegree up = deg.is_poisson_bottom() ? at(2, deg.q) : at(deg.p + 1, deg.q);
            if (auto tb = d.target.find(up); tb && tb->size > 0)
                d.matrix.add_block(tb->offset, b.offset, vertical_matrix(deg));
            const Bidegree right = at(deg.p, deg.q + 1);
            if (auto tb = d.target.find(right); tb && tb->size > 0)
                d.matrix.add_block(tb->offset, b.offset, delta_CE_matrix(deg), horizontal_sign(deg));
        }
        return d;
    }

    TotalCochain total_zero(int n) const { return TotalCochain(layout(n)); }

    // -- invariants and augmenting column ------------------------------------

    /// Basis of the L-invariant cochains C^p(A, M)^L (p = 0: P^L), i.e. the
    /// kernel of d_CE : C^{p,0} -> C^{p,1}.
    SubspaceBasis invariants_subspace(int p) const
    {
        if (branch_ != Branch::leibniz)
            throw std::invalid_argument("invariants_subspace: Leibniz branch only");
        return kernel_basis(delta_CE_matrix(at(p, 0)).to_dense());
    }

    /// P^L -> C^1(A,M)^L -> C^2(A,M)^L -> ... with the maps expressed in the
    /// invariant bases. Throws ContractViolation if a map leaves the
    /// invariants.
    AugmentingColumn augmenting_column(int max_p) const
    {
        AugmentingColumn col;
        for (int p = 0; p <= max_p + 1; ++p)
            col.invariants.push_back(invariants_subspace(p));
        for (int p = 0; p <= max_p; ++p) {
            const auto& src = col.invariants[static_cast<std::size_t>(p)];
            const auto& dst = col.invariants[static_cast<std::size_t>(p + 1)];
            const auto full = vertical_matrix(at(p, 0));
            // Coordinates in dst: stack the dst basis as columns and solve.
            RationalMatrix basis(dst.ambient_dim(), dst.dim());
            for (std::size_t j = 0; j < dst.dim(); ++j)
                for (std::size_t i = 0; i < dst.ambient_dim(); ++i)
                    basis(i, j) = dst.vectors()[j][i];
            RationalMatrix restricted(dst.dim(), src.dim());
            for (std::size_t j = 0; j < src.dim(); ++j) {
                const auto image = full.apply(src.vectors()[j]);
                const auto coords = solve(basis, image);
                if (!coords)
                    throw ContractViolation("augmenting column: coboundary does not preserve L-invariants at p = " +
                                            std::to_string(p));
                for (std::size_t i = 0; i < dst.dim(); ++i)
                    restricted(i, j) = (*coords)[i];
            }
            DifferentialMatrix dm;
            dm.from_degree = p;
            dm.to_degree = p + 1;
            dm.matrix = SparseMatrix::from_dense(restricted);
            dm.source.branch = dm.target.branch = branch_;
            dm.source.degree = p;
            dm.target.degree = p + 1;
            dm.source.blocks = {{at(p, 0), 0, src.dim()}};
            dm.source.dim = src.dim();
            dm.target.blocks = {{at(p + 1, 0), 0, dst.dim()}};
            dm.target.dim = dst.dim();
            col.maps.push_back(std::move(dm));
        }
        return col;
    }

private:
    Bicomplex(Branch b, LeibnizPair pair, PairModule mod, std::optional<PoissonModule> pm)
        : branch_(b), pair_(std::move(pair)), module_(std::move(mod)), poisson_module_(std::move(pm))
    {
    }

    void require(const Bidegree& d) const
    {
        if (d.branch != branch_ || !d.valid())
            throw std::invalid_argument("invalid bidegree " + to_string(d) + " for the " + to_string(branch_) +
                                        " branch");
    }

    Branch branch_;
    LeibnizPair pair_;
    PairModule module_;
    std::optional<PoissonModule> poisson_module_;
};

} // namespace leibniz

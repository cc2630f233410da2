#pragma once

#include "leibniz/rational.hpp"
#include "leibniz/tensor.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace leibniz {

enum class AlgebraKind { associative, lie };

inline const char* to_string(AlgebraKind k) { return k == AlgebraKind::associative ? "associative" : "lie"; }

/// Finite-dimensional algebra given by structure constants:
/// c(i, j, k) is the coefficient of b_k in b_i b_j (or [b_i, b_j]).
/// Shapes are checked on construction; the algebra axioms are not (see the
/// validate_* functions), so malformed structures can still be reported.
struct StructureAlgebra {
    AlgebraKind kind = AlgebraKind::associative;
    std::size_t dim = 0;
    std::vector<std::string> basis_labels;
    Tensor3 c;
    std::optional<std::size_t> unit_index;

    StructureAlgebra() = default;
    StructureAlgebra(AlgebraKind kind_, std::vector<std::string> labels, Tensor3 constants,
                     std::optional<std::size_t> unit = std::nullopt)
        : kind(kind_), dim(labels.size()), basis_labels(std::move(labels)), c(std::move(constants)),
          unit_index(unit)
    {
        c.require_shape(dim, dim, dim, "structure constants");
        if (unit_index && (kind != AlgebraKind::associative || *unit_index >= dim))
            throw std::invalid_argument("unit_index is only valid for associative algebras and must be a basis index");
    }

    /// Zero algebra of the given kind and dimension with generated labels.
    static StructureAlgebra zero(AlgebraKind kind, std::size_t dim, const std::string& prefix = "e")
    {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < dim; ++i)
            labels.push_back(prefix + std::to_string(i));
        return StructureAlgebra(kind, std::move(labels), Tensor3(dim, dim, dim));
    }

    Vector product(const Vector& u, const Vector& v) const;
    Vector product(std::size_t i, std::size_t j) const { return c.fiber(i, j); }
};

/// Associative algebra A and Lie algebra L joined by mu : L -> Der(A),
/// mu(x, a, b) = coefficient of b in mu(x)(a).
struct LeibnizPair {
    StructureAlgebra A;
    StructureAlgebra L;
    Tensor3 mu;

    LeibnizPair() = default;
    LeibnizPair(StructureAlgebra a, StructureAlgebra l, Tensor3 m)
        : A(std::move(a)), L(std::move(l)), mu(std::move(m))
    {
        if (A.kind != AlgebraKind::associative || L.kind != AlgebraKind::lie)
            throw std::invalid_argument("LeibnizPair: expects an associative A and a Lie L");
        mu.require_shape(L.dim, A.dim, A.dim, "pair action mu");
    }
};

/// Associative algebra with a skew biderivation satisfying Jacobi.
struct PoissonAlgebra {
    StructureAlgebra A;
    Tensor3 bracket;

    PoissonAlgebra() = default;
    PoissonAlgebra(StructureAlgebra a, Tensor3 b) : A(std::move(a)), bracket(std::move(b))
    {
        if (A.kind != AlgebraKind::associative)
            throw std::invalid_argument("PoissonAlgebra: expects an associative algebra");
        bracket.require_shape(A.dim, A.dim, A.dim, "Poisson bracket");
    }

    /// The underlying Lie algebra (same basis, bracket as structure constants).
    StructureAlgebra lie() const { return StructureAlgebra(AlgebraKind::lie, A.basis_labels, bracket); }

    /// The Leibniz pair (A, A) with mu = bracket.
    LeibnizPair as_pair() const { return LeibnizPair(A, lie(), bracket); }
};

/// Coefficients (M, P) over a pair (A, L):
///   left_act(a, m, m')  : a.m        right_act(m, a, m') : m.a
///   L_on_M(x, m, m')    : [x, m]     L_on_P(x, p, p')    : [x, p]
///   P_on_A(p, a, m)     : [p, a] in M
/// [P, M] = 0 is implicit.
struct PairModule {
    std::size_t M_dim = 0;
    std::size_t P_dim = 0;
    Tensor3 left_act;
    Tensor3 right_act;
    Tensor3 L_on_M;
    Tensor3 L_on_P;
    Tensor3 P_on_A;

    /// Throws std::invalid_argument if any tensor does not fit the pair.
    void check_shape(const LeibnizPair& pair) const
    {
        const auto a = pair.A.dim, l = pair.L.dim;
        left_act.require_shape(a, M_dim, M_dim, "left action");
        right_act.require_shape(M_dim, a, M_dim, "right action");
        L_on_M.require_shape(l, M_dim, M_dim, "L action on M");
        L_on_P.require_shape(l, P_dim, P_dim, "L action on P");
        P_on_A.require_shape(P_dim, a, M_dim, "P action on A");
    }
};

/// The pair as a module over itself: M = A with multiplication, P = L with
/// the adjoint action, and both cross actions given by mu.
inline PairModule self_module(const LeibnizPair& pair)
{
    PairModule m;
    m.M_dim = pair.A.dim;
    m.P_dim = pair.L.dim;
    m.left_act = pair.A.c;
    m.right_act = pair.A.c;
    m.L_on_M = pair.mu;
    m.L_on_P = pair.L.c;
    m.P_on_A = pair.mu;
    return m;
}

/// Poisson module: bimodule M with a Lie action of A such that every
/// a -> {a, m} is a derivation and every {a, .} a derivation of the bimodule.
struct PoissonModule {
    std::size_t M_dim = 0;
    Tensor3 left_act;      // (a, m, m')
    Tensor3 right_act;     // (m, a, m')
    Tensor3 bracket_act;   // (a, m, m') : {a, m}

    void check_shape(const PoissonAlgebra& p) const
    {
        const auto a = p.A.dim;
        left_act.require_shape(a, M_dim, M_dim, "left action");
        right_act.require_shape(M_dim, a, M_dim, "right action");
        bracket_act.require_shape(a, M_dim, M_dim, "bracket action");
    }

    /// The same data as a module (M, M) over the pair (A, A): P = M acts on
    /// A by [m, a] = -{a, m}.
    PairModule as_pair_module() const
    {
        PairModule m;
        m.M_dim = M_dim;
        m.P_dim = M_dim;
        m.left_act = left_act;
        m.right_act = right_act;
        m.L_on_M = bracket_act;
        m.L_on_P = bracket_act;
        const auto a = left_act.dim(0);
        m.P_on_A = Tensor3(M_dim, a, M_dim);
        for (std::size_t p = 0; p < M_dim; ++p)
            for (std::size_t i = 0; i < a; ++i)
                for (std::size_t t = 0; t < M_dim; ++t)
                    m.P_on_A(p, i, t) = -bracket_act(i, p, t);
        return m;
    }
};

inline PoissonModule self_module(const PoissonAlgebra& p)
{
    PoissonModule m;
    m.M_dim = p.A.dim;
    m.left_act = p.A.c;
    m.right_act = p.A.c;
    m.bracket_act = p.bracket;
    return m;
}

// ---------------------------------------------------------------------------
// Multilinear evaluation helpers

inline Vector unit_vector(std::size_t n, std::size_t i)
{
    Vector v(n);
    v.at(i) = 1;
    return v;
}

/// t(u, v) for a bilinear map stored as a rank-3 tensor.
inline Vector apply_bilinear(const Tensor3& t, const Vector& u, const Vector& v)
{
    Vector out(t.dim(2));
    for (std::size_t i = 0; i < t.dim(0); ++i) {
        if (sgn(u[i]) == 0)
            continue;
        for (std::size_t j = 0; j < t.dim(1); ++j) {
            if (sgn(v[j]) == 0)
                continue;
            const Rational w = u[i] * v[j];
            for (std::size_t k = 0; k < t.dim(2); ++k)
                if (sgn(t(i, j, k)) != 0)
                    out[k] += w * t(i, j, k);
        }
    }
    return out;
}

inline Vector StructureAlgebra::product(const Vector& u, const Vector& v) const
{
    return apply_bilinear(c, u, v);
}

inline Vector add(Vector a, const Vector& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}

inline Vector sub(Vector a, const Vector& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] -= b[i];
    return a;
}

inline Vector scale(Vector a, const Rational& s)
{
    for (auto& x : a)
        x *= s;
    return a;
}

// ---------------------------------------------------------------------------
// Validation

struct Violation {
    std::string axiom;
    std::vector<std::size_t> witness;
    Vector left;
    Vector right;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }

    void add(std::string axiom, std::vector<std::size_t> witness, Vector left, Vector right)
    {
        violations.push_back({std::move(axiom), std::move(witness), std::move(left), std::move(right)});
    }

    void merge(const ValidationReport& other)
    {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }

    bool has(const std::string& axiom) const
    {
        for (const auto& v : violations)
            if (v.axiom == axiom)
                return true;
        return false;
    }
};

namespace detail {

inline void check_equal(ValidationReport& report, const char* axiom, std::vector<std::size_t> witness,
                        Vector left, Vector right)
{
    if (left != right)
        report.add(axiom, std::move(witness), std::move(left), std::move(right));
}

inline void check_skew(ValidationReport& report, const Tensor3& t, const char* axiom)
{
    const auto n = t.dim(0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Vector lhs = t.fiber(i, j);
            Vector rhs = scale(t.fiber(j, i), -1);
            check_equal(report, axiom, {i, j}, std::move(lhs), std::move(rhs));
        }
}

inline void check_jacobi(ValidationReport& report, const Tensor3& t, const char* axiom)
{
    const auto n = t.dim(0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const auto ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
                Vector sum = apply_bilinear(t, t.fiber(i, j), ek);
                sum = add(sum, apply_bilinear(t, t.fiber(j, k), ei));
                sum = add(sum, apply_bilinear(t, t.fiber(k, i), ej));
                check_equal(report, axiom, {i, j, k}, std::move(sum), Vector(n));
            }
}

/// Checks that (a, m) -> left(a, m) and (m, a) -> right(m, a) make M an
/// associative bimodule over an algebra with structure constants c.
inline void check_bimodule(ValidationReport& report, const Tensor3& c, const Tensor3& left,
                           const Tensor3& right)
{
    const auto n = c.dim(0);
    const auto m = left.dim(1);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t x = 0; x < m; ++x) {
                const auto ex = unit_vector(m, x);
                const auto ea = unit_vector(n, a), eb = unit_vector(n, b);
                check_equal(report, "bimodule (ab)m = a(bm)", {a, b, x},
                            apply_bilinear(left, c.fiber(a, b), ex),
                            apply_bilinear(left, ea, left.fiber(b, x)));
                check_equal(report, "bimodule (am)b = a(mb)", {a, x, b},
                            apply_bilinear(right, left.fiber(a, x), eb),
                            apply_bilinear(left, ea, right.fiber(x, b)));
                check_equal(report, "bimodule (ma)b = m(ab)", {x, a, b},
                            apply_bilinear(right, right.fiber(x, a), eb),
                            apply_bilinear(right, ex, c.fiber(a, b)));
            }
}

/// Checks [[x,y], v] = [x,[y,v]] - [y,[x,v]] for an action of a Lie algebra
/// with constants lie on a space of dimension act.dim(1).
inline void check_lie_module(ValidationReport& report, const Tensor3& lie, const Tensor3& act,
                             const char* axiom)
{
    const auto n = lie.dim(0);
    const auto m = act.dim(1);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t v = 0; v < m; ++v) {
                Vector lhs = apply_bilinear(act, lie.fiber(x, y), unit_vector(m, v));
                Vector rhs = sub(apply_bilinear(act, unit_vector(n, x), act.fiber(y, v)),
                                 apply_bilinear(act, unit_vector(n, y), act.fiber(x, v)));
                check_equal(report, axiom, {x, y, v}, std::move(lhs), std::move(rhs));
            }
}

} // namespace detail

inline ValidationReport validate_associative(const StructureAlgebra& A)
{
    if (A.kind != AlgebraKind::associative)
        throw std::invalid_argument("validate_associative: algebra is not associative");
    ValidationReport report;
    const auto n = A.dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                detail::check_equal(report, "associativity", {i, j, k},
                                    A.product(A.product(i, j), unit_vector(n, k)),
                                    A.product(unit_vector(n, i), A.product(j, k)));
    if (A.unit_index) {
        const auto u = *A.unit_index;
        for (std::size_t i = 0; i < n; ++i) {
            detail::check_equal(report, "left unit", {u, i}, A.product(u, i), unit_vector(n, i));
            detail::check_equal(report, "right unit", {i, u}, A.product(i, u), unit_vector(n, i));
        }
    }
    return report;
}

inline ValidationReport validate_lie(const StructureAlgebra& L)
{
    if (L.kind != AlgebraKind::lie)
        throw std::invalid_argument("validate_lie: algebra is not a Lie algebra");
    ValidationReport report;
    detail::check_skew(report, L.c, "skew-symmetry");
    detail::check_jacobi(report, L.c, "Jacobi identity");
    return report;
}

/// Checks that each mu(x) is a derivation of A and that mu is a Lie morphism
/// into Der(A).
inline ValidationReport validate_pair(const LeibnizPair& pair)
{
    ValidationReport report;
    const auto na = pair.A.dim, nl = pair.L.dim;
    const auto& mu = pair.mu;
    for (std::size_t x = 0; x < nl; ++x) {
        const auto ex = unit_vector(nl, x);
        for (std::size_t a = 0; a < na; ++a)
            for (std::size_t b = 0; b < na; ++b) {
                Vector lhs = apply_bilinear(mu, ex, pair.A.product(a, b));
                Vector rhs = add(pair.A.product(mu.fiber(x, a), unit_vector(na, b)),
                                 pair.A.product(unit_vector(na, a), mu.fiber(x, b)));
                detail::check_equal(report, "mu(x) derivation", {x, a, b}, std::move(lhs), std::move(rhs));
            }
    }
    detail::check_lie_module(report, pair.L.c, mu, "mu Lie morphism");
    return report;
}

/// Rinehart pair: A commutative, L an A-module through a_action(a, x, y),
/// mu A-linear in x, and [x, a y] = [x, a] y + a [x, y].
inline ValidationReport validate_rinehart(const LeibnizPair& pair, const Tensor3& a_action)
{
    const auto na = pair.A.dim, nl = pair.L.dim;
    a_action.require_shape(na, nl, nl, "A action on L");
    ValidationReport report;
    const auto& A = pair.A;
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t b = a + 1; b < na; ++b)
            detail::check_equal(report, "commutativity", {a, b}, A.product(a, b), A.product(b, a));

    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t b = 0; b < na; ++b)
            for (std::size_t x = 0; x < nl; ++x)
                detail::check_equal(report, "A-module (ab)x = a(bx)", {a, b, x},
                                    apply_bilinear(a_action, A.product(a, b), unit_vector(nl, x)),
                                    apply_bilinear(a_action, unit_vector(na, a), a_action.fiber(b, x)));
    if (A.unit_index)
        for (std::size_t x = 0; x < nl; ++x)
            detail::check_equal(report, "A-module unit", {*A.unit_index, x},
                                a_action.fiber(*A.unit_index, x), unit_vector(nl, x));

    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t x = 0; x < nl; ++x)
            for (std::size_t b = 0; b < na; ++b)
                detail::check_equal(report, "mu A-linear", {a, x, b},
                                    apply_bilinear(pair.mu, a_action.fiber(a, x), unit_vector(na, b)),
                                    A.product(unit_vector(na, a), pair.mu.fiber(x, b)));

    for (std::size_t x = 0; x < nl; ++x)
        for (std::size_t a = 0; a < na; ++a)
            for (std::size_t y = 0; y < nl; ++y) {
                Vector lhs = apply_bilinear(pair.L.c, unit_vector(nl, x), a_action.fiber(a, y));
                Vector rhs = add(apply_bilinear(a_action, pair.mu.fiber(x, a), unit_vector(nl, y)),
                                 apply_bilinear(a_action, unit_vector(na, a), pair.L.c.fiber(x, y)));
                detail::check_equal(report, "[x, ay] = [x,a]y + a[x,y]", {x, a, y}, std::move(lhs),
                                    std::move(rhs));
            }
    return report;
}

inline ValidationReport validate_poisson(const PoissonAlgebra& P)
{
    ValidationReport report;
    detail::check_skew(report, P.bracket, "bracket skew-symmetry");
    detail::check_jacobi(report, P.bracket, "bracket Jacobi identity");
    const auto n = P.A.dim;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const auto ea = unit_vector(n, a);
                Vector lhs = apply_bilinear(P.bracket, ea, P.A.product(b, c));
                Vector rhs = add(P.A.product(P.bracket.fiber(a, b), unit_vector(n, c)),
                                 P.A.product(unit_vector(n, b), P.bracket.fiber(a, c)));
                detail::check_equal(report, "Leibniz rule {a,bc} = {a,b}c + b{a,c}", {a, b, c},
                                    std::move(lhs), std::move(rhs));
            }
    return report;
}

/// All axioms of an (A, L)-module (M, P): the semidirect products A + M and
/// L + P, with L + P acting on A + M by derivations through a Lie morphism
/// that extends mu.
inline ValidationReport validate_module(const LeibnizPair& pair, const PairModule& mod)
{
    mod.check_shape(pair);
    ValidationReport report;
    const auto na = pair.A.dim, nl = pair.L.dim, nm = mod.M_dim, np = mod.P_dim;

    detail::check_bimodule(report, pair.A.c, mod.left_act, mod.right_act);
    detail::check_lie_module(report, pair.L.c, mod.L_on_M, "L-module M");
    detail::check_lie_module(report, pair.L.c, mod.L_on_P, "L-module P");

    for (std::size_t x = 0; x < nl; ++x) {
        const auto ex = unit_vector(nl, x);
        for (std::size_t a = 0; a < na; ++a)
            for (std::size_t m = 0; m < nm; ++m) {
                const auto ea = unit_vector(na, a);
                const auto em = unit_vector(nm, m);
                detail::check_equal(report, "[x, am] = [x,a]m + a[x,m]", {x, a, m},
                                    apply_bilinear(mod.L_on_M, ex, mod.left_act.fiber(a, m)),
                                    add(apply_bilinear(mod.left_act, pair.mu.fiber(x, a), em),
                                        apply_bilinear(mod.left_act, ea, mod.L_on_M.fiber(x, m))));
                detail::check_equal(report, "[x, ma] = [x,m]a + m[x,a]", {x, m, a},
                                    apply_bilinear(mod.L_on_M, ex, mod.right_act.fiber(m, a)),
                                    add(apply_bilinear(mod.right_act, mod.L_on_M.fiber(x, m), ea),
                                        apply_bilinear(mod.right_act, em, pair.mu.fiber(x, a))));
            }
    }

    for (std::size_t p = 0; p < np; ++p) {
        const auto ep = unit_vector(np, p);
        for (std::size_t a = 0; a < na; ++a)
            for (std::size_t b = 0; b < na; ++b)
                detail::check_equal(report, "[p, ab] = [p,a]b + a[p,b]", {p, a, b},
                                    apply_bilinear(mod.P_on_A, ep, pair.A.product(a, b)),
                                    add(apply_bilinear(mod.right_act, mod.P_on_A.fiber(p, a), unit_vector(na, b)),
                                        apply_bilinear(mod.left_act, unit_vector(na, a), mod.P_on_A.fiber(p, b))));
    }

    // [[x, p], a] = [x, [p, a]] - [p, [x, a]]
    for (std::size_t x = 0; x < nl; ++x)
        for (std::size_t p = 0; p < np; ++p)
            for (std::size_t a = 0; a < na; ++a) {
                Vector lhs = apply_bilinear(mod.P_on_A, mod.L_on_P.fiber(x, p), unit_vector(na, a));
                Vector rhs = sub(apply_bilinear(mod.L_on_M, unit_vector(nl, x), mod.P_on_A.fiber(p, a)),
                                 apply_bilinear(mod.P_on_A, unit_vector(np, p), pair.mu.fiber(x, a)));
                detail::check_equal(report, "Lie morphism extension [[x,p],a]", {x, p, a}, std::move(lhs),
                                    std::move(rhs));
            }
    return report;
}

inline ValidationReport validate_poisson_module(const PoissonAlgebra& P, const PoissonModule& mod)
{
    mod.check_shape(P);
    return validate_module(P.as_pair(), mod.as_pair_module());
}

inline std::string format(const Vector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + v[i].get_str();
    return s + ")";
}

} // namespace leibniz

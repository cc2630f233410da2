#pragma once

// Small named structures used by the bundled example files and the tests.

#include "leibniz/algebra.hpp"

#include <string>
#include <vector>

namespace leibniz::catalog {

/// Q, one basis vector 1 with 1 * 1 = 1.
inline StructureAlgebra rationals()
{
    Tensor3 c(1, 1, 1);
    c(0, 0, 0) = 1;
    return StructureAlgebra(AlgebraKind::associative, {"1"}, c, 0);
}

/// Dual numbers Q[x]/x^2 on the basis (1, x).
inline StructureAlgebra dual()
{
    Tensor3 c(2, 2, 2);
    c(0, 0, 0) = 1;
    c(0, 1, 1) = 1;
    c(1, 0, 1) = 1;
    return StructureAlgebra(AlgebraKind::associative, {"1", "x"}, c, 0);
}

/// span{1, x, y} with 1 the unit and every product of x, y zero.
inline StructureAlgebra three_dim()
{
    Tensor3 c(3, 3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        c(0, i, i) = 1;
        c(i, 0, i) = 1;
    }
    return StructureAlgebra(AlgebraKind::associative, {"1", "x", "y"}, c, 0);
}

/// 2x2 matrices on the matrix units e11, e12, e21, e22 (index 2i + j).
inline StructureAlgebra matrices2()
{
    Tensor3 c(4, 4, 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t l = 0; l < 2; ++l)
                c(2 * i + j, 2 * j + l, 2 * i + l) = 1;
    return StructureAlgebra(AlgebraKind::associative, {"e11", "e12", "e21", "e22"}, c);
}

inline StructureAlgebra abelian(std::size_t dim, const std::string& prefix = "d")
{
    if (dim == 1)
        return StructureAlgebra(AlgebraKind::lie, {prefix}, Tensor3(1, 1, 1));
    return StructureAlgebra::zero(AlgebraKind::lie, dim, prefix);
}

/// sl2 on (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
inline StructureAlgebra sl2()
{
    Tensor3 c(3, 3, 3);
    c(0, 1, 1) = 2;
    c(1, 0, 1) = -2;
    c(0, 2, 2) = -2;
    c(2, 0, 2) = 2;
    c(1, 2, 0) = 1;
    c(2, 1, 0) = -1;
    return StructureAlgebra(AlgebraKind::lie, {"h", "e", "f"}, c);
}

/// A skew bracket on span{a, b, c} that fails Jacobi: [a,b] = a, [a,c] = b.
inline StructureAlgebra broken_jacobi()
{
    Tensor3 c(3, 3, 3);
    c(0, 1, 0) = 1;
    c(1, 0, 0) = -1;
    c(0, 2, 1) = 1;
    c(2, 0, 1) = -1;
    return StructureAlgebra(AlgebraKind::lie, {"a", "b", "c"}, c);
}

/// (dual numbers, L = 0).
inline LeibnizPair dual_pair()
{
    return LeibnizPair(dual(), StructureAlgebra::zero(AlgebraKind::lie, 0), Tensor3(0, 2, 2));
}

/// (dual numbers, span{d}) with mu(d) the Euler derivation 1 -> 0, x -> x.
inline LeibnizPair pair1()
{
    Tensor3 mu(1, 2, 2);
    mu(0, 1, 1) = 1;
    return LeibnizPair(dual(), abelian(1), mu);
}

/// (Q, sl2) with the only possible action, mu = 0.
inline LeibnizPair sl2_pair() { return LeibnizPair(rationals(), sl2(), Tensor3(3, 1, 1)); }

/// (dual numbers, sl2) with sl2 acting by zero.
inline LeibnizPair dual_sl2_pair() { return LeibnizPair(dual(), sl2(), Tensor3(3, 2, 2)); }

/// 2x2 matrices with sl2 = span{e11 - e22, e12, e21} acting by commutators.
inline LeibnizPair matrix_pair()
{
    const auto A = matrices2();
    std::vector<Vector> gens = {{1, 0, 0, -1}, {0, 1, 0, 0}, {0, 0, 1, 0}};
    Tensor3 mu(3, 4, 4);
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t a = 0; a < 4; ++a) {
            const auto ea = unit_vector(4, a);
            const auto v = sub(A.product(gens[x], ea), A.product(ea, gens[x]));
            for (std::size_t t = 0; t < 4; ++t)
                mu(x, a, t) = v[t];
        }
    return LeibnizPair(A, sl2(), mu);
}

/// span{1, x, y}, products of x, y zero, {x, y} = x, 1 central.
inline PoissonAlgebra pois3()
{
    Tensor3 b(3, 3, 3);
    b(1, 2, 1) = 1;
    b(2, 1, 1) = -1;
    return PoissonAlgebra(three_dim(), b);
}

/// Dual numbers with the zero bracket.
inline PoissonAlgebra dual_poisson() { return PoissonAlgebra(dual(), Tensor3(2, 2, 2)); }

/// 2x2 matrices with the commutator bracket.
inline PoissonAlgebra matrix_poisson()
{
    const auto A = matrices2();
    Tensor3 b(4, 4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k)
                b(i, j, k) = A.c(i, j, k) - A.c(j, i, k);
    return PoissonAlgebra(A, b);
}

} // namespace leibniz::catalog

#include "leibniz/catalog.hpp"
#include "leibniz/cohomology.hpp"
#include "leibniz/deformation.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace leibniz;
namespace cat = leibniz::catalog;

namespace {

Vector random_combination(std::mt19937_64& rng, const SubspaceBasis& B)
{
    Vector v(B.ambient_dim());
    for (const auto& b : B.vectors()) {
        const auto s = oracle::random_rational(rng, 5, 0.2);
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] += s * b[i];
    }
    return v;
}

RationalMatrix random_square(std::mt19937_64& rng, std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = oracle::random_rational(rng, 5, 0.4);
    return m;
}

EquivalenceJet random_equivalence(std::mt19937_64& rng, const DeformationJet& jet)
{
    const auto na = jet.pair.A.dim, nl = jet.pair.L.dim;
    auto eq = EquivalenceJet::identity(jet.branch, na, nl, jet.order);
    for (auto& m : eq.phi)
        m = random_square(rng, na);
    for (auto& m : eq.psi)
        m = random_square(rng, nl);
    return eq;
}

/// A jet whose order-1 terms are a random total 2-cocycle, higher terms zero.
DeformationJet random_cocycle_jet(std::mt19937_64& rng, const DeformationJet& zero, const SubspaceBasis& cocycles)
{
    auto j = zero;
    const auto bc = deformation_complex(zero);
    set_order_from_cochain(j, 1, TotalCochain(bc.layout(2), random_combination(rng, cocycles)));
    return j;
}

DeformationJet dual_x_squared(int order)
{
    Tensor3 a1(2, 2, 2);
    a1(1, 1, 0) = 1;
    return infinitesimal_jet(cat::dual_pair(), a1, Tensor3(0, 2, 2), Tensor3(0, 0, 0), order);
}

RationalMatrix ad(const PoissonAlgebra& P, std::size_t u)
{
    const auto n = P.A.dim;
    RationalMatrix m(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t t = 0; t < n; ++t)
            m(t, a) = P.bracket(u, a, t);
    return m;
}

Vector total_D(const Bicomplex& bc, int n, const Vector& v) { return bc.total_differential(n).matrix.apply(v); }

} // namespace

// -- defects --------------------------------------------------------------------

TEST(Defects, ZeroJetIsClean)
{
    for (const auto& pair : {cat::dual_pair(), cat::pair1(), cat::matrix_pair()}) {
        const auto j = DeformationJet::zero(pair, 3);
        for (int n = 0; n <= 3; ++n)
            EXPECT_TRUE(defects(j, n).clean());
    }
    const auto pj = DeformationJet::zero(cat::pois3(), 2);
    for (int n = 0; n <= 2; ++n)
        EXPECT_TRUE(defects(pj, n).clean());
}

TEST(Defects, DualXSquaredIsAssociative)
{
    const auto j = dual_x_squared(2);
    EXPECT_TRUE(defects(j, 1).clean());
    const auto d2 = defects(j, 2);
    EXPECT_TRUE(is_zero(d2.assoc.coeffs));
    EXPECT_TRUE(d2.clean());
}

TEST(Defects, NonCocycleShowsUpAtOrderOne)
{
    Tensor3 a1(2, 2, 2);
    a1(1, 0, 0) = 1;  // x * 1 = t
    const auto j = infinitesimal_jet(cat::dual_pair(), a1, Tensor3(0, 2, 2), Tensor3(0, 0, 0));
    const auto rep = defects(j, 1);
    EXPECT_FALSE(rep.clean());
    // (ab)c - a(bc) at (x, x, 1): only -x * alpha_1(x, 1) survives
    const auto bc = deformation_complex(j);
    const auto sp = bc.space(rep.assoc.degree);
    EXPECT_EQ(rep.assoc.coeffs[sp.index({1, 1, 0}, {}, 1)], -1);
    EXPECT_EQ(defect_cochain(rep, bc).coeffs, total_D(bc, 2, order_cochain(j, 1).coeffs));
}

TEST(Defects, CoboundaryInSpecIsACocycle)
{
    // alpha_1(1,1) = x alone is the coboundary of phi(1) = x (up to sign), so clean.
    Tensor3 a1(2, 2, 2);
    a1(0, 0, 1) = 1;
    const auto j = infinitesimal_jet(cat::dual_pair(), a1, Tensor3(0, 2, 2), Tensor3(0, 0, 0));
    EXPECT_TRUE(defects(j, 1).clean());
    const auto inf = is_infinitesimal(j);
    EXPECT_TRUE(inf.cocycle);
    EXPECT_TRUE(inf.trivial_class);
}

TEST(Defects, OrderOneDefectIsTotalCoboundary)
{
    std::mt19937_64 rng(101);
    for (const auto& z : {DeformationJet::zero(cat::pair1(), 1), DeformationJet::zero(cat::matrix_pair(), 1),
                          DeformationJet::zero(cat::pois3(), 1), DeformationJet::zero(cat::matrix_poisson(), 1)}) {
        const auto bc = deformation_complex(z);
        for (int trial = 0; trial < 5; ++trial) {
            auto j = z;
            const TotalCochain c(bc.layout(2), oracle::random_vector(rng, bc.layout(2).dim));
            set_order_from_cochain(j, 1, c);
            EXPECT_EQ(order_cochain(j, 1).coeffs, c.coeffs);
            EXPECT_EQ(defect_cochain(defects(j, 1), bc).coeffs, total_D(bc, 2, c.coeffs));
        }
    }
}

TEST(Defects, LinearInTheTopOrderTerm)
{
    // defect_n(jet) = D c_n + defect_n(jet with c_n = 0), for arbitrary jets
    std::mt19937_64 rng(202);
    for (const auto& z : {DeformationJet::zero(cat::pair1(), 3), DeformationJet::zero(cat::pois3(), 3)}) {
        const auto bc = deformation_complex(z);
        for (int trial = 0; trial < 4; ++trial) {
            auto j = z;
            for (int n = 1; n <= 3; ++n)
                set_order_from_cochain(j, n, TotalCochain(bc.layout(2), oracle::random_vector(rng, bc.layout(2).dim)));
            for (int n = 1; n <= 3; ++n) {
                const auto full = defect_cochain(defects(j, n), bc).coeffs;
                const auto rest = defect_cochain(defects(j.truncated_below(n), n), bc).coeffs;
                EXPECT_EQ(full, add(total_D(bc, 2, order_cochain(j, n).coeffs), rest));
            }
        }
    }
}

TEST(Defects, OrderOutOfRange)
{
    EXPECT_THROW(defects(DeformationJet::zero(cat::pair1(), 1), 2), std::invalid_argument);
}

TEST(Jet, SkewLambdaRequired)
{
    auto j = DeformationJet::zero(cat::pois3(), 1);
    j.lambda[0](1, 2, 0) = 1;
    EXPECT_THROW(defects(j, 1), std::invalid_argument);
}

TEST(Jet, PoissonMuIsLambda)
{
    auto j = DeformationJet::zero(cat::pois3(), 2);
    j.lambda[1](1, 2, 0) = 1;
    j.lambda[1](2, 1, 0) = -1;
    EXPECT_TRUE(j.mu.empty());
    EXPECT_EQ(j.mu_at(2), j.lambda_at(2));
    EXPECT_EQ(j.mu_at(0), cat::pois3().bracket);
}

// -- infinitesimals -------------------------------------------------------------

TEST(Infinitesimal, Zero)
{
    const auto r = is_infinitesimal(DeformationJet::zero(cat::pair1(), 1));
    EXPECT_TRUE(r.cocycle);
    EXPECT_TRUE(r.trivial_class);
}

TEST(Infinitesimal, DualXSquaredGeneratesH2)
{
    const auto r = is_infinitesimal(dual_x_squared(1));
    EXPECT_TRUE(r.cocycle);
    EXPECT_FALSE(r.trivial_class);
    EXPECT_FALSE(is_zero(r.class_representative));
}

TEST(Infinitesimal, CoboundariesAreTrivial)
{
    std::mt19937_64 rng(303);
    for (const auto& z : {DeformationJet::zero(cat::pair1(), 1), DeformationJet::zero(cat::pois3(), 1),
                          DeformationJet::zero(cat::dual_sl2_pair(), 1)}) {
        const auto bc = deformation_complex(z);
        for (int trial = 0; trial < 10; ++trial) {
            auto j = z;
            const auto e = oracle::random_vector(rng, bc.layout(1).dim);
            set_order_from_cochain(j, 1, TotalCochain(bc.layout(2), total_D(bc, 1, e)));
            const auto r = is_infinitesimal(j);
            EXPECT_TRUE(r.cocycle);
            EXPECT_TRUE(r.trivial_class);
        }
    }
}

TEST(Infinitesimal, RandomNonCocycleRejected)
{
    Tensor3 a1(2, 2, 2);
    a1(1, 0, 0) = 1;
    const auto r = is_infinitesimal(infinitesimal_jet(cat::dual_pair(), a1, Tensor3(0, 2, 2), Tensor3(0, 0, 0)));
    EXPECT_FALSE(r.cocycle);
    EXPECT_FALSE(r.trivial_class);
}

// -- equivalences ---------------------------------------------------------------

TEST(Equivalence, IdentityLeavesJetUnchanged)
{
    const auto j = dual_x_squared(3);
    EXPECT_EQ(apply_equivalence(j, EquivalenceJet::identity(Branch::leibniz, 2, 0, 3)), j);
}

TEST(Equivalence, RescalingDualNumbers)
{
    // Phi = id + t phi with phi(x) = x: x o x = t becomes (1+t)^2 t
    const auto j = dual_x_squared(4);
    auto eq = EquivalenceJet::identity(Branch::leibniz, 2, 0, 4);
    eq.phi[0](1, 1) = 1;
    const auto r = apply_equivalence(j, eq);
    EXPECT_EQ(r.alpha_at(1)(1, 1, 0), 1);
    EXPECT_EQ(r.alpha_at(2)(1, 1, 0), 2);
    EXPECT_EQ(r.alpha_at(3)(1, 1, 0), 1);
    EXPECT_EQ(r.alpha_at(4)(1, 1, 0), 0);
    EXPECT_EQ(r.alpha_at(1)(1, 1, 1), 0);
    EXPECT_EQ(r.alpha_at(2)(0, 1, 1), 0);  // unit untouched
}

TEST(Equivalence, TrivialJetGivesCoboundary)
{
    std::mt19937_64 rng(404);
    for (const auto& z : {DeformationJet::zero(cat::pair1(), 1), DeformationJet::zero(cat::matrix_pair(), 1),
                          DeformationJet::zero(cat::pois3(), 1)}) {
        const auto bc = deformation_complex(z);
        for (int trial = 0; trial < 10; ++trial) {
            const auto eq = random_equivalence(rng, z);
            const auto j = apply_equivalence(z, eq);
            const auto e = equivalence_cochain(bc, eq.phi[0], z.branch == Branch::leibniz ? &eq.psi[0] : nullptr);
            EXPECT_EQ(order_cochain(j, 1).coeffs, total_D(bc, 1, e.coeffs));
            const auto r = is_infinitesimal(j);
            EXPECT_TRUE(r.cocycle);
            EXPECT_TRUE(r.trivial_class);
        }
    }
}

TEST(Equivalence, CochainRoundTrip)
{
    std::mt19937_64 rng(505);
    const auto bc = Bicomplex::leibniz_self(cat::matrix_pair());
    const auto phi = random_square(rng, 4), psi = random_square(rng, 3);
    const auto [p2, s2] = equivalence_from_cochain(bc, equivalence_cochain(bc, phi, &psi));
    EXPECT_EQ(p2, phi);
    EXPECT_EQ(s2, psi);
}

TEST(Equivalence, InverseUndoes)
{
    std::mt19937_64 rng(606);
    for (const auto& base : {dual_x_squared(3), DeformationJet::zero(cat::pair1(), 3)}) {
        const auto eq = random_equivalence(rng, base);
        EXPECT_EQ(apply_equivalence(apply_equivalence(base, eq), inverse(eq)), base);
    }
    const auto pz = DeformationJet::zero(cat::pois3(), 3);
    const auto eq = random_equivalence(rng, pz);
    EXPECT_EQ(apply_equivalence(apply_equivalence(pz, eq), inverse(eq)), pz);
}

TEST(Equivalence, PreservesValidity)
{
    std::mt19937_64 rng(707);
    const auto lifted = lift_to_order(dual_x_squared(1), 4);
    ASSERT_TRUE(lifted.success);
    for (int trial = 0; trial < 5; ++trial) {
        const auto j = apply_equivalence(lifted.jet, random_equivalence(rng, lifted.jet));
        for (int n = 1; n <= 4; ++n)
            EXPECT_TRUE(defects(j, n).clean()) << n;
    }
}

TEST(Equivalence, EquivalentJetsHaveCohomologousInfinitesimals)
{
    std::mt19937_64 rng(808);
    for (const auto& z : {DeformationJet::zero(cat::pair1(), 2), DeformationJet::zero(cat::pois3(), 2)}) {
        const auto bc = deformation_complex(z);
        const auto cocycles = kernel_basis(bc.total_differential(2).matrix.to_dense());
        const auto image = image_basis(bc.total_differential(1).matrix.to_dense());
        for (int trial = 0; trial < 10; ++trial) {
            const auto j = random_cocycle_jet(rng, z, cocycles);
            const auto j2 = apply_equivalence(j, random_equivalence(rng, j));
            const auto a = is_infinitesimal(j), b = is_infinitesimal(j2);
            EXPECT_TRUE(b.cocycle);
            EXPECT_EQ(a.class_representative, b.class_representative);
            EXPECT_TRUE(is_zero(image.reduce(sub(b.cochain.coeffs, a.cochain.coeffs))));
        }
    }
}

TEST(Equivalence, BranchOrOrderMismatchRejected)
{
    const auto j = DeformationJet::zero(cat::pair1(), 2);
    EXPECT_THROW(apply_equivalence(j, EquivalenceJet::identity(Branch::leibniz, 2, 1, 3)), std::invalid_argument);
    EXPECT_THROW(apply_equivalence(j, EquivalenceJet::identity(Branch::poisson, 2, 2, 2)), std::invalid_argument);
}

// -- infinitesimal automorphisms ------------------------------------------------

TEST(Automorphism, ZeroAndEuler)
{
    EXPECT_TRUE(is_infinitesimal_automorphism(cat::pair1(), RationalMatrix(2, 2), RationalMatrix(1, 1)));
    RationalMatrix euler(2, 2);
    euler(1, 1) = 1;
    EXPECT_TRUE(is_infinitesimal_automorphism(cat::pair1(), euler, RationalMatrix(1, 1)));
    // phi(1) = x is not a derivation: phi(1*1) = x but 2x on the right
    RationalMatrix bad(2, 2);
    bad(1, 0) = 1;
    EXPECT_FALSE(is_infinitesimal_automorphism(cat::pair1(), bad, RationalMatrix(1, 1)));
}

TEST(Automorphism, KernelMatchesDirectConditions)
{
    // phi derivation of A, psi derivation of L, phi mu(x) - mu(x) phi = mu(psi x):
    // solution space by plain elimination vs the kernel of D_1.
    for (const auto& pair : {cat::pair1(), cat::matrix_pair(), cat::dual_sl2_pair()}) {
        const auto na = pair.A.dim, nl = pair.L.dim;
        const auto nvar = na * na + nl * nl;
        auto phi_var = [&](std::size_t t, std::size_t a) { return t * na + a; };
        auto psi_var = [&](std::size_t t, std::size_t x) { return na * na + t * nl + x; };
        oracle::Mat rows;
        for (std::size_t a = 0; a < na; ++a)
            for (std::size_t b = 0; b < na; ++b)
                for (std::size_t t = 0; t < na; ++t) {
                    std::vector<Rational> r(nvar);
                    for (std::size_t c = 0; c < na; ++c)
                        r[phi_var(t, c)] += pair.A.c(a, b, c);  // phi(ab)
                    for (std::size_t c = 0; c < na; ++c) {
                        r[phi_var(c, a)] -= pair.A.c(c, b, t);  // phi(a) b
                        r[phi_var(c, b)] -= pair.A.c(a, c, t);  // a phi(b)
                    }
                    rows.push_back(r);
                }
        for (std::size_t x = 0; x < nl; ++x)
            for (std::size_t y = 0; y < nl; ++y)
                for (std::size_t t = 0; t < nl; ++t) {
                    std::vector<Rational> r(nvar);
                    for (std::size_t z = 0; z < nl; ++z)
                        r[psi_var(t, z)] += pair.L.c(x, y, z);
                    for (std::size_t z = 0; z < nl; ++z) {
                        r[psi_var(z, x)] -= pair.L.c(z, y, t);
                        r[psi_var(z, y)] -= pair.L.c(x, z, t);
                    }
                    rows.push_back(r);
                }
        for (std::size_t x = 0; x < nl; ++x)
            for (std::size_t a = 0; a < na; ++a)
                for (std::size_t t = 0; t < na; ++t) {
                    std::vector<Rational> r(nvar);
                    for (std::size_t c = 0; c < na; ++c) {
                        r[phi_var(t, c)] += pair.mu(x, a, c);  // phi(mu(x,a))
                        r[phi_var(c, a)] -= pair.mu(x, c, t);  // mu(x, phi a)
                    }
                    for (std::size_t z = 0; z < nl; ++z)
                        r[psi_var(z, x)] -= pair.mu(z, a, t);  // mu(psi x, a)
                    rows.push_back(r);
                }
        const auto direct = nvar - oracle::rank(rows);
        const auto bc = Bicomplex::leibniz_self(pair);
        const auto ker = kernel_basis(bc.total_differential(1).matrix.to_dense());
        EXPECT_EQ(ker.dim(), direct);
        for (const auto& v : ker.vectors()) {
            const auto [phi, psi] = equivalence_from_cochain(bc, TotalCochain(bc.layout(1), v));
            EXPECT_TRUE(is_infinitesimal_automorphism(pair, phi, psi));
        }
    }
}

TEST(Automorphism, PoissonDerivations)
{
    const auto P = cat::pois3();
    EXPECT_TRUE(is_infinitesimal_automorphism(P, ad(P, 1)));
    EXPECT_TRUE(is_infinitesimal_automorphism(P, ad(P, 2)));
    RationalMatrix not_lie(3, 3);
    not_lie(2, 2) = 1;  // y -> y: associative derivation, but {x,y} = x is not preserved
    EXPECT_FALSE(is_infinitesimal_automorphism(P, not_lie));
    RationalMatrix both(3, 3);
    both(1, 1) = 1;  // x -> x respects x*x = 0 and {x, y} = x
    EXPECT_TRUE(is_infinitesimal_automorphism(P, both));
}

TEST(Exponential, ZeroIsIdentity)
{
    const auto eq = exponentiate_derivation(cat::pois3(), RationalMatrix(3, 3), 3);
    for (const auto& m : eq.phi)
        EXPECT_TRUE(m.is_zero());
}

TEST(Exponential, NilpotentTerminates)
{
    const auto P = cat::pois3();
    const auto phi = ad(P, 1);  // y -> x, everything else -> 0
    ASSERT_TRUE((phi * phi).is_zero());
    const auto eq = exponentiate_derivation(P, phi, 4);
    EXPECT_EQ(eq.phi[0], phi);
    for (int i = 1; i < 4; ++i)
        EXPECT_TRUE(eq.phi[static_cast<std::size_t>(i)].is_zero());
}

TEST(Exponential, PreservesStructure)
{
    const auto P = cat::pois3();
    for (std::size_t u : {1, 2}) {
        const auto eq = exponentiate_derivation(P, ad(P, u), 5);
        const auto z = DeformationJet::zero(P, 5);
        EXPECT_TRUE(apply_equivalence(z, eq).is_zero());
    }
    // ad y has x as eigenvector with eigenvalue -1: the series is e^{-t}
    const auto eq = exponentiate_derivation(P, ad(P, 2), 4);
    EXPECT_EQ(eq.phi[2](1, 1), Rational(-1, 6));
    EXPECT_EQ(eq.phi[3](1, 1), Rational(1, 24));
}

TEST(Exponential, RejectsNonDerivation)
{
    RationalMatrix m(3, 3);
    m(2, 2) = 1;
    EXPECT_THROW(exponentiate_derivation(cat::pois3(), m, 2), std::invalid_argument);
}

// -- obstructions and lifting ---------------------------------------------------

TEST(Obstruction, OrderOneIsZero)
{
    std::mt19937_64 rng(909);
    auto j = DeformationJet::zero(cat::pair1(), 1);
    const auto bc = deformation_complex(j);
    set_order_from_cochain(j, 1, TotalCochain(bc.layout(2), oracle::random_vector(rng, bc.layout(2).dim)));
    const auto ob = obstruction(j, 1);
    EXPECT_TRUE(is_zero(ob.cochain.coeffs));
    EXPECT_TRUE(ob.zero_class);
}

TEST(Obstruction, DualXSquared)
{
    const auto ob = obstruction(dual_x_squared(2), 2);
    EXPECT_TRUE(is_zero(ob.cochain.coeffs));
    EXPECT_TRUE(ob.zero_class);
}

TEST(Obstruction, PreconditionReportsFailingOrder)
{
    Tensor3 a1(2, 2, 2);
    a1(1, 0, 0) = 1;
    const auto j = infinitesimal_jet(cat::dual_pair(), a1, Tensor3(0, 2, 2), Tensor3(0, 0, 0), 3);
    try {
        obstruction(j, 3);
        FAIL() << "expected a precondition failure";
    } catch (const ObstructionPreconditionError& e) {
        EXPECT_EQ(e.failing_order(), 1);
    }
}

TEST(Obstruction, RandomCocyclesGiveTotalCocycles)
{
    std::mt19937_64 rng(1111);
    for (const auto& z : {DeformationJet::zero(cat::pair1(), 2), DeformationJet::zero(cat::pois3(), 2),
                          DeformationJet::zero(cat::dual_sl2_pair(), 2)}) {
        const auto bc = deformation_complex(z);
        const auto cocycles = kernel_basis(bc.total_differential(2).matrix.to_dense());
        const auto d3 = bc.total_differential(3).matrix;
        for (int trial = 0; trial < 20; ++trial) {
            const auto j = random_cocycle_jet(rng, z, cocycles);
            const auto ob = obstruction(j, 2);
            EXPECT_TRUE(is_zero(d3.apply(ob.cochain.coeffs)));
        }
    }
}

TEST(Obstruction, SolvingClearsTheDefect)
{
    // jet valid mod t^{n+1} iff D c_n + ob_n = 0
    std::mt19937_64 rng(1212);
    for (const auto& z : {DeformationJet::zero(cat::pair1(), 3), DeformationJet::zero(cat::pois3(), 3)}) {
        const auto bc = deformation_complex(z);
        const auto cocycles = kernel_basis(bc.total_differential(2).matrix.to_dense());
        for (int trial = 0; trial < 10; ++trial) {
            const auto r = lift_to_order(random_cocycle_jet(rng, z, cocycles), 3);
            const int top = r.success ? 3 : r.failing_order - 1;
            for (int n = 2; n <= top; ++n) {
                const auto ob = obstruction(r.jet, n);
                EXPECT_TRUE(is_zero(add(total_D(bc, 2, order_cochain(r.jet, n).coeffs), ob.cochain.coeffs)));
                EXPECT_TRUE(defects(r.jet, n).clean());
            }
            if (!r.success) {
                EXPECT_FALSE(is_zero(r.obstruction_class));
                EXPECT_EQ(r.jet.order, r.failing_order - 1);
                // failing obstruction is not a coboundary: no correction solves it
                auto ext = r.jet.with_order(r.failing_order);
                EXPECT_FALSE(obstruction(ext, r.failing_order).zero_class);
            }
        }
    }
}

TEST(Lift, DualNumbersToOrderFive)
{
    const auto r = lift_to_order(dual_x_squared(1), 5);
    ASSERT_TRUE(r.success);
    EXPECT_EQ(r.jet.order, 5);
    EXPECT_EQ(r.corrections.size(), 4u);
    for (const auto& c : r.corrections)
        EXPECT_TRUE(is_zero(c.coeffs));
    for (int n = 1; n <= 5; ++n)
        EXPECT_TRUE(defects(r.jet, n).clean());
    for (int n = 2; n <= 5; ++n)
        EXPECT_TRUE(obstruction(r.jet.truncated_below(n), n).zero_class);
}

TEST(Lift, ZeroInfinitesimal)
{
    const auto r = lift_to_order(DeformationJet::zero(cat::pair1(), 1), 4);
    ASSERT_TRUE(r.success);
    EXPECT_TRUE(r.jet.is_zero());
}

// With H^2 = 0 every greedy lift of a coboundary is gauge-trivial.
TEST(Lift, CoboundaryLiftsToTrivialJetWhenH2Vanishes)
{
    std::mt19937_64 rng(1313);
    for (const auto& z : {DeformationJet::zero(cat::pair1(), 1), DeformationJet::zero(cat::matrix_pair(), 1),
                          DeformationJet::zero(cat::sl2_pair(), 1)}) {
        const auto bc = deformation_complex(z);
        ASSERT_EQ(total_cohomology(bc, 2).betti(2), 0u);
        for (int trial = 0; trial < 5; ++trial) {
            auto j = z;
            set_order_from_cochain(j, 1,
                                   TotalCochain(bc.layout(2), total_D(bc, 1, oracle::random_vector(rng, bc.layout(1).dim))));
            const auto r = lift_to_order(j, 3);
            ASSERT_TRUE(r.success);
            const auto t = trivialize(r.jet);
            EXPECT_TRUE(t.success);
            EXPECT_EQ(t.steps.size(), 3u);
            auto replay = r.jet;
            for (const auto& s : t.steps)
                replay = apply_equivalence(replay, s);
            EXPECT_TRUE(replay.is_zero());
        }
    }
}

// POIS3 has H^2 of dimension 1, and the canonical correction at some order
// can pick up that class. Whatever is left after gauge fixing must then be a
// cocycle sitting alone in the lowest nonzero order, with nonzero class.
TEST(Lift, CoboundaryLiftOnPois3)
{
    std::mt19937_64 rng(1313);
    const auto z = DeformationJet::zero(cat::pois3(), 1);
    const auto bc = deformation_complex(z);
    const auto image = image_basis(bc.total_differential(1).matrix.to_dense());
    for (int trial = 0; trial < 8; ++trial) {
        auto j = z;
        set_order_from_cochain(j, 1, TotalCochain(bc.layout(2), total_D(bc, 1, oracle::random_vector(rng, bc.layout(1).dim))));
        const auto r = lift_to_order(j, 3);
        ASSERT_TRUE(r.success);
        const auto t = trivialize(r.jet);
        if (t.success)
            continue;
        ASSERT_GE(t.failing_order, 2);
        for (int i = 1; i < t.failing_order; ++i)
            EXPECT_TRUE(is_zero(order_cochain(t.result, i).coeffs));
        const auto c = order_cochain(t.result, t.failing_order).coeffs;
        EXPECT_TRUE(is_zero(total_D(bc, 2, c)));
        EXPECT_FALSE(is_zero(image.reduce(c)));
    }
    // a jet built purely by gauge transformation always trivializes
    const auto z3 = DeformationJet::zero(cat::pois3(), 3);
    for (int trial = 0; trial < 5; ++trial) {
        const auto t = trivialize(apply_equivalence(z3, random_equivalence(rng, z3)));
        EXPECT_TRUE(t.success);
    }
}

TEST(Lift, NonTrivialClassCannotBeTrivialized)
{
    const auto t = trivialize(dual_x_squared(2));
    EXPECT_FALSE(t.success);
    EXPECT_EQ(t.failing_order, 1);
}

TEST(Lift, RejectsNonCocycle)
{
    Tensor3 a1(2, 2, 2);
    a1(1, 0, 0) = 1;
    EXPECT_THROW(lift_to_order(infinitesimal_jet(cat::dual_pair(), a1, Tensor3(0, 2, 2), Tensor3(0, 0, 0)), 3),
                 std::invalid_argument);
}

// Q[x,y]/(x,y)^2 with x*y = t x: ((x y) y) picks up t^2 x while x (y y) = 0.
// The obstruction must lie outside the image of the Hochschild coboundary,
// checked against the bar complex.
TEST(Lift, ObstructedOnSquareZeroPlane)
{
    const LeibnizPair bare(cat::three_dim(), StructureAlgebra::zero(AlgebraKind::lie, 0), Tensor3(0, 3, 3));
    Tensor3 a1(3, 3, 3);
    a1(1, 2, 1) = 1;
    const auto j = infinitesimal_jet(bare, a1, Tensor3(0, 3, 3), Tensor3(0, 0, 0), 2);
    ASSERT_TRUE(is_infinitesimal(j).cocycle);

    const auto ob = obstruction(j, 2);
    EXPECT_FALSE(ob.zero_class);
    const auto bc = deformation_complex(j);
    EXPECT_TRUE(is_zero(total_D(bc, 3, ob.cochain.coeffs)));

    // with L = 0 the total 3-cochains are C^{3,0} = Hom(A^3, A), laid out as in the bar complex
    const auto B = oracle::BarComplex(cat::three_dim()).coboundary(2);
    ASSERT_EQ(B.size(), ob.cochain.coeffs.size());
    oracle::Mat cols(B[0].size(), std::vector<Rational>(B.size()));
    for (std::size_t r = 0; r < B.size(); ++r)
        for (std::size_t c = 0; c < B[0].size(); ++c)
            cols[c][r] = B[r][c];
    const auto base = oracle::rank(cols);
    cols.push_back(ob.cochain.coeffs);
    EXPECT_EQ(oracle::rank(cols), base + 1);

    const auto r = lift_to_order(j.with_order(1), 3);
    EXPECT_FALSE(r.success);
    EXPECT_EQ(r.failing_order, 2);
    EXPECT_EQ(r.jet.order, 1);
    EXPECT_EQ(r.obstruction_class, ob.class_representative);

    // x*x = t y, by contrast, is unobstructed
    Tensor3 b1(3, 3, 3);
    b1(1, 1, 2) = 1;
    EXPECT_TRUE(lift_to_order(infinitesimal_jet(bare, b1, Tensor3(0, 3, 3), Tensor3(0, 0, 0)), 4).success);
}

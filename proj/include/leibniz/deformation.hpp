#pragma once

#include "leibniz/bicomplex.hpp"
#include "leibniz/cohomology.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace leibniz {

/// Truncated formal deformation over k[t]/t^{N+1}:
///   a.b + t alpha_1(a,b) + ..., mu(x,a) + t mu_1(x,a) + ..., [x,y] + t lambda_1(x,y) + ...
/// Index i of alpha/mu/lambda holds the coefficient of t^{i+1}. On the
/// Poisson branch A = L and mu = lambda, so `mu` stays empty.
struct DeformationJet {
    Branch branch = Branch::leibniz;
    LeibnizPair pair;                      // the undeformed structure (Poisson: P.as_pair())
    std::optional<PoissonAlgebra> poisson; // set on the Poisson branch
    int order = 0;
    std::vector<Tensor3> alpha;
    std::vector<Tensor3> mu;
    std::vector<Tensor3> lambda;

    static DeformationJet zero(const LeibnizPair& base, int order)
    {
        if (order < 0)
            throw std::invalid_argument("DeformationJet: order must be >= 0");
        DeformationJet j;
        j.branch = Branch::leibniz;
        j.pair = base;
        j.order = order;
        const auto na = base.A.dim, nl = base.L.dim;
        j.alpha.assign(static_cast<std::size_t>(order), Tensor3(na, na, na));
        j.mu.assign(static_cast<std::size_t>(order), Tensor3(nl, na, na));
        j.lambda.assign(static_cast<std::size_t>(order), Tensor3(nl, nl, nl));
        return j;
    }

    static DeformationJet zero(const PoissonAlgebra& base, int order)
    {
        if (order < 0)
            throw std::invalid_argument("DeformationJet: order must be >= 0");
        DeformationJet j;
        j.branch = Branch::poisson;
        j.pair = base.as_pair();
        j.poisson = base;
        j.order = order;
        const auto n = base.A.dim;
        j.alpha.assign(static_cast<std::size_t>(order), Tensor3(n, n, n));
        j.lambda.assign(static_cast<std::size_t>(order), Tensor3(n, n, n));
        return j;
    }

    /// Coefficient of t^i (i = 0 is the base structure; beyond the order, zero).
    Tensor3 alpha_at(int i) const
    {
        if (i == 0)
            return pair.A.c;
        if (i <= order)
            return alpha[static_cast<std::size_t>(i - 1)];
        return Tensor3(pair.A.dim, pair.A.dim, pair.A.dim);
    }

    Tensor3 lambda_at(int i) const
    {
        if (i == 0)
            return pair.L.c;
        if (i <= order)
            return lambda[static_cast<std::size_t>(i - 1)];
        return Tensor3(pair.L.dim, pair.L.dim, pair.L.dim);
    }

    Tensor3 mu_at(int i) const
    {
        if (branch == Branch::poisson)
            return lambda_at(i);
        if (i == 0)
            return pair.mu;
        if (i <= order)
            return mu[static_cast<std::size_t>(i - 1)];
        return Tensor3(pair.L.dim, pair.A.dim, pair.A.dim);
    }

    /// Same jet with every term of order >= n replaced by zero.
    DeformationJet truncated_below(int n) const
    {
        DeformationJet j = *this;
        for (int i = std::max(n, 1); i <= order; ++i) {
            auto k = static_cast<std::size_t>(i - 1);
            j.alpha[k] *= 0;
            j.lambda[k] *= 0;
            if (branch == Branch::leibniz)
                j.mu[k] *= 0;
        }
        return j;
    }

    /// Same data with the order raised (new terms zero) or lowered.
    DeformationJet with_order(int n) const
    {
        DeformationJet j = branch == Branch::poisson ? zero(*poisson, n) : zero(pair, n);
        for (int i = 1; i <= std::min(n, order); ++i) {
            auto k = static_cast<std::size_t>(i - 1);
            j.alpha[k] = alpha[k];
            j.lambda[k] = lambda[k];
            if (branch == Branch::leibniz)
                j.mu[k] = mu[k];
        }
        return j;
    }

    bool is_zero() const
    {
        for (int i = 1; i <= order; ++i)
            if (!alpha_at(i).is_zero() || !lambda_at(i).is_zero() || !mu_at(i).is_zero())
                return false;
        return true;
    }

    friend bool operator==(const DeformationJet& a, const DeformationJet& b)
    {
        return a.branch == b.branch && a.order == b.order && a.alpha == b.alpha && a.mu == b.mu &&
               a.lambda == b.lambda && a.pair.A.c == b.pair.A.c && a.pair.L.c == b.pair.L.c &&
               a.pair.mu == b.pair.mu;
    }
};

/// Phi_t = id + t phi_1 + ..., Psi_t = id + t psi_1 + ...; matrices act on
/// coordinate columns, phi(k, a) = coefficient of b_k in phi(b_a). On the
/// Poisson branch Psi = Phi and `psi` stays empty.
struct EquivalenceJet {
    Branch branch = Branch::leibniz;
    int order = 0;
    std::vector<RationalMatrix> phi;
    std::vector<RationalMatrix> psi;

    static EquivalenceJet identity(Branch b, std::size_t na, std::size_t nl, int order)
    {
        EquivalenceJet e;
        e.branch = b;
        e.order = order;
        e.phi.assign(static_cast<std::size_t>(order), RationalMatrix(na, na));
        if (b == Branch::leibniz)
            e.psi.assign(static_cast<std::size_t>(order), RationalMatrix(nl, nl));
        return e;
    }

    const RationalMatrix& psi_at(int i) const
    {
        return branch == Branch::poisson ? phi[static_cast<std::size_t>(i - 1)] : psi[static_cast<std::size_t>(i - 1)];
    }
};

/// Coefficients of t^n in the four axiom defects, as raw multilinear maps
/// stored on the cochain bases of the self-coefficient complex:
///   assoc(a,b,c)   = (ab)c - a(bc)                                 at (3,0)
///   mu_der(x;a,b)  = mu(x,ab) - mu(x,a)b - a mu(x,b)                at (2,1), tuple (a,b), wedge x
///   mu_mor(x,y;a)  = mu([x,y],a) - mu(x,mu(y,a)) + mu(y,mu(x,a))    at (1,2) (Leibniz only)
///   jacobi(x,y,z)  = [[x,y],z] + cyclic                             at (0,3), Poisson bottom (1,2)
struct DefectReport {
    int order_checked = 0;
    Branch branch = Branch::leibniz;
    Cochain assoc;
    Cochain mu_der;
    Cochain mu_mor;
    Cochain jacobi;

    bool clean() const
    {
        return is_zero(assoc.coeffs) && is_zero(mu_der.coeffs) && is_zero(mu_mor.coeffs) && is_zero(jacobi.coeffs);
    }
};

class ObstructionPreconditionError : public std::runtime_error {
public:
    ObstructionPreconditionError(int failing_order)
        : std::runtime_error("jet does not satisfy the axioms at order " + std::to_string(failing_order)),
          failing_order_(failing_order)
    {
    }
    int failing_order() const { return failing_order_; }

private:
    int failing_order_;
};

/// The complex controlling deformations of the jet's base structure.
inline Bicomplex deformation_complex(const DeformationJet& jet)
{
    return jet.branch == Branch::poisson ? Bicomplex::poisson_self(*jet.poisson) : Bicomplex::leibniz_self(jet.pair);
}

namespace detail {

/// out(a, b, .) += T(U(a), V(b)) where U = u(first, .), V = v(second, .) are given by tensors.
/// Composition helpers below evaluate sum over i + j = n of nested maps on
/// basis tuples.
inline Vector eval(const Tensor3& t, const Vector& u, const Vector& v) { return apply_bilinear(t, u, v); }

inline void require_skew(const Tensor3& t, const char* what)
{
    const auto n = t.dim(0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < t.dim(2); ++k)
                if (t(i, j, k) != -t(j, i, k))
                    throw std::invalid_argument(std::string(what) + " must be skew-symmetric");
}

inline void require_jet_shapes(const DeformationJet& jet)
{
    const auto na = jet.pair.A.dim, nl = jet.pair.L.dim;
    if (jet.order < 0 || jet.alpha.size() != static_cast<std::size_t>(jet.order) ||
        jet.lambda.size() != static_cast<std::size_t>(jet.order) ||
        (jet.branch == Branch::leibniz && jet.mu.size() != static_cast<std::size_t>(jet.order)))
        throw std::invalid_argument("DeformationJet: term lists do not match the order");
    for (int i = 1; i <= jet.order; ++i) {
        jet.alpha_at(i).require_shape(na, na, na, "alpha_" + std::to_string(i));
        jet.lambda_at(i).require_shape(nl, nl, nl, "lambda_" + std::to_string(i));
        jet.mu_at(i).require_shape(nl, na, na, "mu_" + std::to_string(i));
        require_skew(jet.lambda_at(i), ("lambda_" + std::to_string(i)).c_str());
    }
}

} // namespace detail

/// Coefficient of t^n in every axiom defect of the jet.
inline DefectReport defects(const DeformationJet& jet, int n)
{
    if (n < 0 || n > jet.order)
        throw std::invalid_argument("defects: order out of range");
    detail::require_jet_shapes(jet);
    const auto bc = deformation_complex(jet);
    const auto na = jet.pair.A.dim, nl = jet.pair.L.dim;
    const bool leib = jet.branch == Branch::leibniz;

    std::vector<Tensor3> al, mu, la;
    for (int i = 0; i <= n; ++i) {
        al.push_back(jet.alpha_at(i));
        mu.push_back(jet.mu_at(i));
        la.push_back(jet.lambda_at(i));
    }

    DefectReport rep;
    rep.order_checked = n;
    rep.branch = jet.branch;

    // associator
    rep.assoc = bc.zero_cochain(bc.at(3, 0));
    {
        const auto sp = bc.space(rep.assoc.degree);
        for (std::size_t a = 0; a < na; ++a)
            for (std::size_t b = 0; b < na; ++b)
                for (std::size_t c = 0; c < na; ++c) {
                    Vector v(na);
                    for (int i = 0; i <= n; ++i) {
                        const auto& ai = al[static_cast<std::size_t>(i)];
                        const auto& aj = al[static_cast<std::size_t>(n - i)];
                        v = add(v, detail::eval(ai, aj.fiber(a, b), unit_vector(na, c)));
                        v = sub(v, detail::eval(ai, unit_vector(na, a), aj.fiber(b, c)));
                    }
                    for (std::size_t t = 0; t < na; ++t)
                        rep.assoc.coeffs[sp.index({a, b, c}, {}, t)] = v[t];
                }
    }

    // mu(x) is a derivation of alpha
    rep.mu_der = bc.zero_cochain(bc.at(2, 1));
    {
        const auto sp = bc.space(rep.mu_der.degree);
        for (std::size_t x = 0; x < nl; ++x)
            for (std::size_t a = 0; a < na; ++a)
                for (std::size_t b = 0; b < na; ++b) {
                    Vector v(na);
                    for (int i = 0; i <= n; ++i) {
                        const auto& mi = mu[static_cast<std::size_t>(i)];
                        const auto& ai = al[static_cast<std::size_t>(i)];
                        const auto& mj = mu[static_cast<std::size_t>(n - i)];
                        const auto& aj = al[static_cast<std::size_t>(n - i)];
                        v = add(v, detail::eval(mi, unit_vector(nl, x), aj.fiber(a, b)));
                        v = sub(v, detail::eval(ai, mj.fiber(x, a), unit_vector(na, b)));
                        v = sub(v, detail::eval(ai, unit_vector(na, a), mj.fiber(x, b)));
                    }
                    for (std::size_t t = 0; t < na; ++t)
                        rep.mu_der.coeffs[sp.index({a, b}, {x}, t)] = v[t];
                }
    }

    // mu is a Lie morphism (Leibniz branch; on the Poisson branch it is the Jacobiator again)
    if (leib) {
        rep.mu_mor = bc.zero_cochain(bc.at(1, 2));
        const auto sp = bc.space(rep.mu_mor.degree);
        for (std::size_t x = 0; x < nl; ++x)
            for (std::size_t y = x + 1; y < nl; ++y)
                for (std::size_t a = 0; a < na; ++a) {
                    Vector v(na);
                    for (int i = 0; i <= n; ++i) {
                        const auto& mi = mu[static_cast<std::size_t>(i)];
                        const auto& mj = mu[static_cast<std::size_t>(n - i)];
                        const auto& lj = la[static_cast<std::size_t>(n - i)];
                        v = add(v, detail::eval(mi, lj.fiber(x, y), unit_vector(na, a)));
                        v = sub(v, detail::eval(mi, unit_vector(nl, x), mj.fiber(y, a)));
                        v = add(v, detail::eval(mi, unit_vector(nl, y), mj.fiber(x, a)));
                    }
                    for (std::size_t t = 0; t < na; ++t)
                        rep.mu_mor.coeffs[sp.index({a}, {x, y}, t)] = v[t];
                }
    } else {
        rep.mu_mor = Cochain{bc.at(2, 0), {}};  // not stored separately
    }

    // Jacobiator
    rep.jacobi = bc.zero_cochain(leib ? bc.at(0, 3) : bc.at(1, 2));
    {
        const auto sp = bc.space(rep.jacobi.degree);
        for (std::size_t x = 0; x < nl; ++x)
            for (std::size_t y = x + 1; y < nl; ++y)
                for (std::size_t z = y + 1; z < nl; ++z) {
                    Vector v(nl);
                    for (int i = 0; i <= n; ++i) {
                        const auto& li = la[static_cast<std::size_t>(i)];
                        const auto& lj = la[static_cast<std::size_t>(n - i)];
                        v = add(v, detail::eval(li, lj.fiber(x, y), unit_vector(nl, z)));
                        v = add(v, detail::eval(li, lj.fiber(y, z), unit_vector(nl, x)));
                        v = add(v, detail::eval(li, lj.fiber(z, x), unit_vector(nl, y)));
                    }
                    for (std::size_t t = 0; t < nl; ++t)
                        rep.jacobi.coeffs[sp.index({}, {x, y, z}, t)] = v[t];
                }
    }
    return rep;
}

/// The defects as one total 3-cochain. Signs are chosen so that the order-1
/// defect of a jet is D applied to its infinitesimal (see infinitesimal_cochain):
/// Leibniz: (+jacobi, -mu_mor, +mu_der, -assoc) on (0,3),(1,2),(2,1),(3,0);
/// Poisson: (-jacobi, +mu_der, -assoc) on the bottom row, (2,1), (3,0).
inline TotalCochain defect_cochain(const DefectReport& rep, const Bicomplex& bc)
{
    TotalCochain out = bc.total_zero(3);
    auto put = [&](const Cochain& c, int sign) {
        if (c.coeffs.empty())
            return;
        out.set_part(c.degree, scale(c.coeffs, sign));
    };
    if (rep.branch == Branch::leibniz) {
        put(rep.jacobi, 1);
        put(rep.mu_mor, -1);
        put(rep.mu_der, 1);
        put(rep.assoc, -1);
    } else {
        put(rep.jacobi, -1);
        put(rep.mu_der, 1);
        put(rep.assoc, -1);
    }
    return out;
}

/// Total 2-cochain of the order-n terms of a jet.
/// Leibniz: (-lambda_n on (0,2), -mu_n^T on (1,1) with (a; x) -> mu_n(x, a), alpha_n on (2,0)).
/// Poisson: (lambda_n on the bottom row, alpha_n on (2,0)).
inline TotalCochain order_cochain(const DeformationJet& jet, int n)
{
    const auto bc = deformation_complex(jet);
    const auto na = jet.pair.A.dim, nl = jet.pair.L.dim;
    TotalCochain out = bc.total_zero(2);
    const auto al = jet.alpha_at(n), la = jet.lambda_at(n), mu = jet.mu_at(n);
    const bool leib = jet.branch == Branch::leibniz;
    const int lsign = leib ? -1 : 1;

    {
        const auto d = bc.at(2, 0);
        const auto sp = bc.space(d);
        Vector v(sp.size());
        for (std::size_t a = 0; a < na; ++a)
            for (std::size_t b = 0; b < na; ++b)
                for (std::size_t t = 0; t < na; ++t)
                    v[sp.index({a, b}, {}, t)] = al(a, b, t);
        out.set_part(d, v);
    }
    {
        const auto d = leib ? bc.at(0, 2) : bc.at(1, 1);
        const auto sp = bc.space(d);
        Vector v(sp.size());
        for (std::size_t x = 0; x < nl; ++x)
            for (std::size_t y = x + 1; y < nl; ++y)
                for (std::size_t t = 0; t < nl; ++t)
                    v[sp.index({}, {x, y}, t)] = lsign * la(x, y, t);
        out.set_part(d, v);
    }
    if (leib) {
        const auto d = bc.at(1, 1);
        const auto sp = bc.space(d);
        Vector v(sp.size());
        for (std::size_t a = 0; a < na; ++a)
            for (std::size_t x = 0; x < nl; ++x)
                for (std::size_t t = 0; t < na; ++t)
                    v[sp.index({a}, {x}, t)] = -mu(x, a, t);
        out.set_part(d, v);
    }
    return out;
}

/// Inverse of order_cochain: writes the terms encoded by c into order n of the jet.
inline void set_order_from_cochain(DeformationJet& jet, int n, const TotalCochain& c)
{
    if (n < 1 || n > jet.order)
        throw std::invalid_argument("set_order_from_cochain: order out of range");
    const auto bc = deformation_complex(jet);
    const auto na = jet.pair.A.dim, nl = jet.pair.L.dim;
    const auto k = static_cast<std::size_t>(n - 1);
    const bool leib = jet.branch == Branch::leibniz;
    const int lsign = leib ? -1 : 1;
    {
        const auto d = bc.at(2, 0);
        const auto sp = bc.space(d);
        const auto v = c.part(d);
        Tensor3 al(na, na, na);
        for (std::size_t a = 0; a < na; ++a)
            for (std::size_t b = 0; b < na; ++b)
                for (std::size_t t = 0; t < na; ++t)
                    al(a, b, t) = v[sp.index({a, b}, {}, t)];
        jet.alpha[k] = std::move(al);
    }
    {
        const auto d = leib ? bc.at(0, 2) : bc.at(1, 1);
        const auto sp = bc.space(d);
        const auto v = c.part(d);
        Tensor3 la(nl, nl, nl);
        for (std::size_t x = 0; x < nl; ++x)
            for (std::size_t y = x + 1; y < nl; ++y)
                for (std::size_t t = 0; t < nl; ++t) {
                    la(x, y, t) = lsign * v[sp.index({}, {x, y}, t)];
                    la(y, x, t) = -la(x, y, t);
                }
        jet.lambda[k] = std::move(la);
    }
    if (leib) {
        const auto d = bc.at(1, 1);
        const auto sp = bc.space(d);
        const auto v = c.part(d);
        Tensor3 mu(nl, na, na);
        for (std::size_t a = 0; a < na; ++a)
            for (std::size_t x = 0; x < nl; ++x)
                for (std::size_t t = 0; t < na; ++t)
                    mu(x, a, t) = -v[sp.index({a}, {x}, t)];
        jet.mu[k] = std::move(mu);
    }
}

struct InfinitesimalReport {
    bool cocycle = false;
    bool trivial_class = false;
    TotalCochain cochain;
    Vector class_representative;  // cochain reduced mod the image of D_1
};

/// Checks whether the order-1 terms of the jet form a total 2-cocycle and
/// whether that cocycle is a coboundary.
inline InfinitesimalReport is_infinitesimal(const DeformationJet& jet)
{
    if (jet.order < 1)
        throw std::invalid_argument("is_infinitesimal: jet has no order-1 terms");
    detail::require_jet_shapes(jet);
    const auto bc = deformation_complex(jet);
    InfinitesimalReport rep{false, false, order_cochain(jet, 1), {}};
    const auto d2 = bc.total_differential(2);
    rep.cocycle = is_zero(d2.matrix.apply(rep.cochain.coeffs));
    const auto image = image_basis(bc.total_differential(1).matrix.to_dense());
    rep.class_representative = image.reduce(rep.cochain.coeffs);
    rep.trivial_class = rep.cocycle && is_zero(rep.class_representative);
    return rep;
}

/// Jet of order `order` whose only nonzero terms are the given order-1 ones.
inline DeformationJet infinitesimal_jet(const LeibnizPair& base, const Tensor3& alpha1, const Tensor3& mu1,
                                        const Tensor3& lambda1, int order = 1)
{
    auto j = DeformationJet::zero(base, order);
    j.alpha[0] = alpha1;
    j.mu[0] = mu1;
    j.lambda[0] = lambda1;
    detail::require_jet_shapes(j);
    return j;
}

inline DeformationJet infinitesimal_jet(const PoissonAlgebra& base, const Tensor3& alpha1, const Tensor3& lambda1,
                                        int order = 1)
{
    auto j = DeformationJet::zero(base, order);
    j.alpha[0] = alpha1;
    j.lambda[0] = lambda1;
    detail::require_jet_shapes(j);
    return j;
}

// ---------------------------------------------------------------------------
// Equivalences

namespace detail {

/// (out . T(u1 ., u2 .)) as a new tensor.
inline Tensor3 conjugate(const Tensor3& t, const RationalMatrix& out, const RationalMatrix& u1, const RationalMatrix& u2)
{
    const auto d0 = u1.cols(), d1 = u2.cols(), d2 = out.rows();
    Tensor3 r(d0, d1, d2);
    for (std::size_t a = 0; a < d0; ++a)
        for (std::size_t b = 0; b < d1; ++b) {
            const auto v = apply_bilinear(t, u1.column(a), u2.column(b));
            const auto w = out.apply(v);
            for (std::size_t k = 0; k < d2; ++k)
                r(a, b, k) = w[k];
        }
    return r;
}

/// Coefficients 0..N of a series with constant term I.
inline std::vector<RationalMatrix> series(const std::vector<RationalMatrix>& terms, std::size_t dim, int order)
{
    std::vector<RationalMatrix> s{RationalMatrix::identity(dim)};
    for (int i = 1; i <= order; ++i)
        s.push_back(terms[static_cast<std::size_t>(i - 1)]);
    return s;
}

/// Truncated inverse: inv_0 = I, inv_n = -sum_{i=1..n} s_i inv_{n-i}.
inline std::vector<RationalMatrix> series_inverse(const std::vector<RationalMatrix>& s)
{
    const auto dim = s[0].rows();
    std::vector<RationalMatrix> inv{RationalMatrix::identity(dim)};
    for (std::size_t n = 1; n < s.size(); ++n) {
        RationalMatrix acc(dim, dim);
        for (std::size_t i = 1; i <= n; ++i)
            acc = acc - s[i] * inv[n - i];
        inv.push_back(std::move(acc));
    }
    return inv;
}

/// Coefficient list 0..N of out_t^{-1}-conjugated T_t(u1_t ., u2_t .).
inline std::vector<Tensor3> transform_series(const std::vector<Tensor3>& t, const std::vector<RationalMatrix>& out_inv,
                                             const std::vector<RationalMatrix>& u1,
                                             const std::vector<RationalMatrix>& u2, int order)
{
    std::vector<Tensor3> r;
    for (int n = 0; n <= order; ++n) {
        Tensor3 acc(u1[0].cols(), u2[0].cols(), out_inv[0].rows());
        for (int j = 0; j <= n; ++j)
            for (int k = 0; j + k <= n; ++k)
                for (int l = 0; j + k + l <= n; ++l) {
                    const int i = n - j - k - l;
                    const auto& oi = out_inv[static_cast<std::size_t>(i)];
                    const auto& tj = t[static_cast<std::size_t>(j)];
                    const auto& uk = u1[static_cast<std::size_t>(k)];
                    const auto& ul = u2[static_cast<std::size_t>(l)];
                    if (tj.is_zero() || oi.is_zero() || uk.is_zero() || ul.is_zero())
                        continue;
                    acc += conjugate(tj, oi, uk, ul);
                }
        r.push_back(std::move(acc));
    }
    return r;
}

} // namespace detail

/// alpha' = Phi^{-1} alpha_t(Phi, Phi), mu' = Phi^{-1} mu_t(Psi, Phi),
/// lambda' = Psi^{-1} lambda_t(Psi, Psi), all mod t^{N+1}.
inline DeformationJet apply_equivalence(const DeformationJet& jet, const EquivalenceJet& eq)
{
    if (eq.order != jet.order || eq.branch != jet.branch)
        throw std::invalid_argument("apply_equivalence: order or branch mismatch");
    const auto na = jet.pair.A.dim, nl = jet.pair.L.dim;
    const int N = jet.order;
    std::vector<RationalMatrix> psi_terms;
    for (int i = 1; i <= N; ++i)
        psi_terms.push_back(eq.psi_at(i));
    const auto Phi = detail::series(eq.phi, na, N);
    const auto Psi = detail::series(psi_terms, nl, N);
    const auto Phi_inv = detail::series_inverse(Phi);
    const auto Psi_inv = detail::series_inverse(Psi);

    std::vector<Tensor3> al, mu, la;
    for (int i = 0; i <= N; ++i) {
        al.push_back(jet.alpha_at(i));
        la.push_back(jet.lambda_at(i));
        mu.push_back(jet.mu_at(i));
    }
    const auto al2 = detail::transform_series(al, Phi_inv, Phi, Phi, N);
    const auto la2 = detail::transform_series(la, Psi_inv, Psi, Psi, N);
    DeformationJet out = jet;
    for (int i = 1; i <= N; ++i) {
        out.alpha[static_cast<std::size_t>(i - 1)] = al2[static_cast<std::size_t>(i)];
        out.lambda[static_cast<std::size_t>(i - 1)] = la2[static_cast<std::size_t>(i)];
    }
    if (jet.branch == Branch::leibniz) {
        const auto mu2 = detail::transform_series(mu, Phi_inv, Psi, Phi, N);
        for (int i = 1; i <= N; ++i)
            out.mu[static_cast<std::size_t>(i - 1)] = mu2[static_cast<std::size_t>(i)];
    }
    return out;
}

/// (Phi_t^{-1}, Psi_t^{-1}) mod t^{N+1}.
inline EquivalenceJet inverse(const EquivalenceJet& eq)
{
    EquivalenceJet out = eq;
    if (eq.order == 0)
        return out;
    const auto na = eq.phi[0].rows();
    const auto inv = detail::series_inverse(detail::series(eq.phi, na, eq.order));
    for (int i = 1; i <= eq.order; ++i)
        out.phi[static_cast<std::size_t>(i - 1)] = inv[static_cast<std::size_t>(i)];
    if (eq.branch == Branch::leibniz) {
        const auto nl = eq.psi[0].rows();
        const auto inv2 = detail::series_inverse(detail::series(eq.psi, nl, eq.order));
        for (int i = 1; i <= eq.order; ++i)
            out.psi[static_cast<std::size_t>(i - 1)] = inv2[static_cast<std::size_t>(i)];
    }
    return out;
}

/// Total 1-cochain of (phi, psi): phi on (1,0) and -psi on (0,1) for the
/// Leibniz branch; phi on the bottom row for the Poisson branch. With this
/// sign, the infinitesimal of (id + t phi, id + t psi) applied to the
/// undeformed structure is D of this cochain.
inline TotalCochain equivalence_cochain(const Bicomplex& bc, const RationalMatrix& phi, const RationalMatrix* psi)
{
    const auto na = bc.pair().A.dim, nl = bc.pair().L.dim;
    if (phi.rows() != na || phi.cols() != na)
        throw std::invalid_argument("equivalence_cochain: phi has the wrong shape");
    TotalCochain out = bc.total_zero(1);
    if (bc.branch() == Branch::poisson) {
        const auto d = bc.at(1, 0);
        const auto sp = bc.space(d);
        Vector v(sp.size());
        for (std::size_t a = 0; a < na; ++a)
            for (std::size_t t = 0; t < na; ++t)
                v[sp.index({}, {a}, t)] = phi(t, a);
        out.set_part(d, v);
        return out;
    }
    if (psi == nullptr || psi->rows() != nl || psi->cols() != nl)
        throw std::invalid_argument("equivalence_cochain: psi has the wrong shape");
    {
        const auto d = bc.at(1, 0);
        const auto sp = bc.space(d);
        Vector v(sp.size());
        for (std::size_t a = 0; a < na; ++a)
            for (std::size_t t = 0; t < na; ++t)
                v[sp.index({a}, {}, t)] = phi(t, a);
        out.set_part(d, v);
    }
    {
        const auto d = bc.at(0, 1);
        const auto sp = bc.space(d);
        Vector v(sp.size());
        for (std::size_t x = 0; x < nl; ++x)
            for (std::size_t t = 0; t < nl; ++t)
                v[sp.index({}, {x}, t)] = -(*psi)(t, x);
        out.set_part(d, v);
    }
    return out;
}

/// Inverse of equivalence_cochain: (phi, psi) from a total 1-cochain.
inline std::pair<RationalMatrix, RationalMatrix> equivalence_from_cochain(const Bicomplex& bc, const TotalCochain& e)
{
    const auto na = bc.pair().A.dim, nl = bc.pair().L.dim;
    RationalMatrix phi(na, na), psi(nl, nl);
    if (bc.branch() == Branch::poisson) {
        const auto d = bc.at(1, 0);
        const auto sp = bc.space(d);
        const auto v = e.part(d);
        for (std::size_t a = 0; a < na; ++a)
            for (std::size_t t = 0; t < na; ++t)
                phi(t, a) = v[sp.index({}, {a}, t)];
        return {phi, phi};
    }
    {
        const auto d = bc.at(1, 0);
        const auto sp = bc.space(d);
        const auto v = e.part(d);
        for (std::size_t a = 0; a < na; ++a)
            for (std::size_t t = 0; t < na; ++t)
                phi(t, a) = v[sp.index({a}, {}, t)];
    }
    {
        const auto d = bc.at(0, 1);
        const auto sp = bc.space(d);
        const auto v = e.part(d);
        for (std::size_t x = 0; x < nl; ++x)
            for (std::size_t t = 0; t < nl; ++t)
                psi(t, x) = -v[sp.index({}, {x}, t)];
    }
    return {phi, psi};
}

inline bool is_infinitesimal_automorphism(const LeibnizPair& pair, const RationalMatrix& phi, const RationalMatrix& psi)
{
    const auto bc = Bicomplex::leibniz_self(pair);
    const auto e = equivalence_cochain(bc, phi, &psi);
    return is_zero(bc.total_differential(1).matrix.apply(e.coeffs));
}

/// Poisson branch: true iff phi is a derivation of both the product and the bracket.
inline bool is_infinitesimal_automorphism(const PoissonAlgebra& P, const RationalMatrix& phi)
{
    const auto bc = Bicomplex::poisson_self(P);
    const auto e = equivalence_cochain(bc, phi, nullptr);
    return is_zero(bc.total_differential(1).matrix.apply(e.coeffs));
}

/// Phi_t = sum_{i <= N} t^i phi^i / i!.
inline EquivalenceJet exponentiate_derivation(const PoissonAlgebra& P, const RationalMatrix& phi, int order)
{
    if (!is_infinitesimal_automorphism(P, phi))
        throw std::invalid_argument("exponentiate_derivation: phi is not a derivation of the Poisson structure");
    EquivalenceJet eq;
    eq.branch = Branch::poisson;
    eq.order = order;
    RationalMatrix power = RationalMatrix::identity(P.A.dim);
    Rational fact = 1;
    for (int i = 1; i <= order; ++i) {
        power = power * phi;
        fact *= i;
        eq.phi.push_back((1 / fact) * power);
    }
    return eq;
}

// ---------------------------------------------------------------------------
// Obstructions and lifting

struct ObstructionResult {
    int order = 0;
    TotalCochain cochain;
    Vector class_representative;  // reduced mod the image of D_2
    bool zero_class = false;
};

/// Order-n defect of the jet with its order-n terms set to zero, as a signed
/// total 3-cochain. For order-n terms c (encoded by order_cochain) the jet
/// satisfies the axioms mod t^{n+1} iff D c + obstruction = 0.
inline ObstructionResult obstruction(const DeformationJet& jet, int n)
{
    if (n < 1 || n > jet.order)
        throw std::invalid_argument("obstruction: order out of range");
    for (int i = 1; i < n; ++i)
        if (!defects(jet, i).clean())
            throw ObstructionPreconditionError(i);
    const auto bc = deformation_complex(jet);
    const auto base = jet.truncated_below(n);
    ObstructionResult r{n, defect_cochain(defects(base, n), bc), {}, false};
    const auto image = image_basis(bc.total_differential(2).matrix.to_dense());
    r.class_representative = image.reduce(r.cochain.coeffs);
    r.zero_class = is_zero(r.class_representative);
    return r;
}

struct LiftResult {
    bool success = false;
    DeformationJet jet;            // completed jet, or the partial lift up to failing_order - 1
    int failing_order = 0;
    Vector obstruction_class;      // class at the failing order
    std::vector<TotalCochain> corrections;  // c_2, c_3, ... chosen while lifting
};

/// Greedy lift of the order-1 terms of `infinitesimal` to order target,
/// solving D c_n = -obstruction_n with the canonical particular solution.
inline LiftResult lift_to_order(const DeformationJet& infinitesimal, int target)
{
    if (target < 1)
        throw std::invalid_argument("lift_to_order: target order must be >= 1");
    const auto inf = is_infinitesimal(infinitesimal);
    if (!inf.cocycle)
        throw std::invalid_argument("lift_to_order: order-1 terms are not a total 2-cocycle");
    const auto bc = deformation_complex(infinitesimal);
    const auto d2 = bc.total_differential(2).matrix.to_dense();

    LiftResult res;
    res.jet = infinitesimal.with_order(1).with_order(target);
    for (int n = 2; n <= target; ++n) {
        const auto ob = obstruction(res.jet, n);
        if (!ob.zero_class) {
            res.failing_order = n;
            res.obstruction_class = ob.class_representative;
            res.jet = res.jet.with_order(n - 1);
            return res;
        }
        auto c = solve(d2, scale(ob.cochain.coeffs, -1));
        if (!c)
            throw ContractViolation("lift_to_order: obstruction with zero class has no preimage");
        TotalCochain cc(bc.layout(2), std::move(*c));
        set_order_from_cochain(res.jet, n, cc);
        if (!defects(res.jet, n).clean())
            throw ContractViolation("lift_to_order: correction does not clear the order-" + std::to_string(n) +
                                    " defect");
        res.corrections.push_back(std::move(cc));
    }
    res.success = true;
    return res;
}

struct TrivializationResult {
    bool success = false;
    int failing_order = 0;
    std::vector<EquivalenceJet> steps;  // applied in order
    DeformationJet result;
};

/// Tries to gauge a valid jet to the undeformed structure one order at a
/// time: at order n, with lower terms already zero, the order-n terms form a
/// cocycle c_n, and id + t^n phi with D(phi, -psi) = -c_n removes them.
inline TrivializationResult trivialize(const DeformationJet& jet)
{
    const auto bc = deformation_complex(jet);
    const auto d1 = bc.total_differential(1).matrix.to_dense();
    const auto na = jet.pair.A.dim, nl = jet.pair.L.dim;
    TrivializationResult res;
    res.result = jet;
    for (int n = 1; n <= jet.order; ++n) {
        const auto c = order_cochain(res.result, n);
        auto e = solve(d1, scale(c.coeffs, -1));
        if (!e) {
            res.failing_order = n;
            return res;
        }
        const auto [phi, psi] = equivalence_from_cochain(bc, TotalCochain(bc.layout(1), std::move(*e)));
        auto step = EquivalenceJet::identity(jet.branch, na, nl, jet.order);
        step.phi[static_cast<std::size_t>(n - 1)] = phi;
        if (jet.branch == Branch::leibniz)
            step.psi[static_cast<std::size_t>(n - 1)] = psi;
        res.result = apply_equivalence(res.result, step);
        res.steps.push_back(std::move(step));
    }
    res.success = res.result.is_zero();
    return res;
}

} // namespace leibniz

#pragma once

#include "leibniz/bicomplex.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace leibniz {

struct BettiEntry {
    int degree = 0;
    std::size_t dim = 0;
};

struct BettiTable {
    Branch branch = Branch::leibniz;
    std::vector<BettiEntry> degrees;
    // Filled only when representatives were requested.
    std::map<int, std::vector<TotalCochain>> representatives;

    std::size_t betti(int n) const
    {
        for (const auto& e : degrees)
            if (e.degree == n)
                return e.dim;
        throw std::out_of_range("BettiTable: degree " + std::to_string(n) + " not computed");
    }

    std::vector<std::size_t> dims() const
    {
        std::vector<std::size_t> out;
        for (const auto& e : degrees)
            out.push_back(e.dim);
        return out;
    }
};

namespace detail {

/// Canonical basis of ker/im: kernel vectors reduced mod the image, then
/// brought to reduced echelon form. Every returned vector is fixed by
/// reduction mod the image.
inline std::vector<Vector> quotient_representatives(const SubspaceBasis& kernel, const SubspaceBasis& image)
{
    const auto n = kernel.ambient_dim();
    std::vector<Vector> reduced;
    for (const auto& v : kernel.vectors())
        reduced.push_back(image.reduce(v));
    RationalMatrix m(reduced.size(), n);
    for (std::size_t i = 0; i < reduced.size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = reduced[i][j];
    const auto r = rref(m);
    std::vector<Vector> out;
    for (std::size_t i = 0; i < r.rank; ++i)
        out.push_back(r.reduced.row(i));
    return out;
}

inline void require_complex(const SparseMatrix& next, const SparseMatrix& prev, int degree)
{
    if (next.cols() != prev.rows() || !(next * prev).is_zero())
        throw ContractViolation("image of D_" + std::to_string(degree - 1) + " is not inside ker D_" +
                                std::to_string(degree));
}

} // namespace detail

/// dim H^n of the total complex for n = 0..max_n, optionally with canonical
/// representative cocycles.
inline BettiTable total_cohomology(const Bicomplex& bc, int max_n, bool representatives = false)
{
    if (max_n < 0)
        throw std::invalid_argument("total_cohomology: max_n must be >= 0");
    BettiTable table;
    table.branch = bc.branch();

    DifferentialMatrix prev;
    prev.to_degree = 0;
    prev.target = bc.layout(0);
    prev.matrix = SparseMatrix(prev.target.dim, 0);
    std::size_t prev_rank = 0;

    for (int n = 0; n <= max_n; ++n) {
        auto d = bc.total_differential(n);
        detail::require_complex(d.matrix, prev.matrix, n);
        const auto r = rank(d.matrix);
        const auto cn = d.source.dim;
        if (cn < r + prev_rank)
            throw ContractViolation("negative cohomology dimension at degree " + std::to_string(n));
        table.degrees.push_back({n, cn - r - prev_rank});

        if (representatives) {
            const auto kernel = kernel_basis(d.matrix.to_dense());
            const auto image = image_basis(prev.matrix.to_dense());
            auto& reps = table.representatives[n];
            for (auto& v : detail::quotient_representatives(kernel, image))
                reps.emplace_back(d.source, std::move(v));
        }
        prev = std::move(d);
        prev_rank = r;
    }
    return table;
}

/// Cohomology of P^L -> C^1(A,M)^L -> C^2(A,M)^L -> ... in degrees 0..max_p.
inline BettiTable augmented_column_cohomology(const Bicomplex& bc, int max_p)
{
    if (max_p < 0)
        throw std::invalid_argument("augmented_column_cohomology: max_p must be >= 0");
    const auto col = bc.augmenting_column(max_p);
    BettiTable table;
    table.branch = bc.branch();
    std::size_t prev_rank = 0;
    for (int p = 0; p <= max_p; ++p) {
        const auto& m = col.maps[static_cast<std::size_t>(p)].matrix;
        if (p > 0)
            detail::require_complex(m, col.maps[static_cast<std::size_t>(p - 1)].matrix, p);
        const auto r = rank(m);
        const auto dim = col.invariants[static_cast<std::size_t>(p)].dim();
        if (dim < r + prev_rank)
            throw ContractViolation("negative column cohomology dimension at degree " + std::to_string(p));
        table.degrees.push_back({p, dim - r - prev_rank});
        prev_rank = r;
    }
    return table;
}

struct WhiteheadReport {
    bool semisimple_asserted = false;
    std::array<std::size_t, 3> total{};   // degrees 1, 2, 3
    std::array<std::size_t, 3> column{};
    bool match = false;

    std::string note() const
    {
        if (!semisimple_asserted)
            return "hypothesis not asserted";
        return match ? "match" : "mismatch";
    }
};

/// Compares H^i of the total complex with H^i of the augmenting column for
/// i = 1, 2, 3. Semisimplicity of L is taken on trust from the caller.
inline WhiteheadReport whitehead_compare(const Bicomplex& bc, bool semisimple_asserted)
{
    if (bc.branch() != Branch::leibniz)
        throw std::invalid_argument("whitehead_compare: Leibniz branch only");
    WhiteheadReport rep;
    rep.semisimple_asserted = semisimple_asserted;
    const auto tot = total_cohomology(bc, 3);
    const auto col = augmented_column_cohomology(bc, 3);
    for (int i = 1; i <= 3; ++i) {
        rep.total[static_cast<std::size_t>(i - 1)] = tot.betti(i);
        rep.column[static_cast<std::size_t>(i - 1)] = col.betti(i);
    }
    rep.match = rep.total == rep.column;
    return rep;
}

} // namespace leibniz

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace leibniz {

using Tuple = std::vector<std::size_t>;

inline std::size_t binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

inline std::size_t ipow(std::size_t base, std::size_t exp)
{
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i)
        r *= base;
    return r;
}

/// Sorts a tuple in place and returns the sign of the sorting permutation,
/// or 0 when an index repeats (the wedge product vanishes).
inline int sort_with_sign(Tuple& t)
{
    int sign = 1;
    for (std::size_t i = 1; i < t.size(); ++i)
        for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
            if (t[j - 1] == t[j])
                return 0;
            std::swap(t[j - 1], t[j]);
            sign = -sign;
        }
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i - 1] == t[i])
            return 0;
    return sign;
}

/// All tuples of `slots` indices in [0, dim), ordered lexicographically
/// (first slot most significant).
class TupleIndex {
public:
    TupleIndex(std::size_t dim, std::size_t slots) : dim_(dim), slots_(slots), count_(ipow(dim, slots)) {}

    std::size_t dim() const { return dim_; }
    std::size_t slots() const { return slots_; }
    std::size_t size() const { return count_; }

    std::size_t rank(const Tuple& t) const
    {
        std::size_t r = 0;
        for (auto i : t)
            r = r * dim_ + i;
        return r;
    }

    Tuple unrank(std::size_t r) const
    {
        Tuple t(slots_);
        for (std::size_t s = slots_; s-- > 0;) {
            t[s] = r % dim_;
            r /= dim_;
        }
        return t;
    }

private:
    std::size_t dim_;
    std::size_t slots_;
    std::size_t count_;
};

/// Strictly increasing tuples of `slots` indices in [0, dim), in
/// lexicographic order; these index a basis of the exterior power.
class WedgeIndex {
public:
    WedgeIndex(std::size_t dim, std::size_t slots) : dim_(dim), slots_(slots)
    {
        if (dim > 63)
            throw std::invalid_argument("WedgeIndex: dimension too large");
        Tuple current;
        build(current, 0);
        for (std::size_t r = 0; r < tuples_.size(); ++r)
            rank_of_mask_.emplace(mask(tuples_[r]), r);
    }

    std::size_t dim() const { return dim_; }
    std::size_t slots() const { return slots_; }
    std::size_t size() const { return tuples_.size(); }

    const Tuple& unrank(std::size_t r) const { return tuples_[r]; }

    /// Rank of a strictly increasing tuple.
    std::size_t rank(const Tuple& t) const { return rank_of_mask_.at(mask(t)); }

private:
    static std::uint64_t mask(const Tuple& t)
    {
        std::uint64_t m = 0;
        for (auto i : t)
            m |= std::uint64_t{1} << i;
        return m;
    }

    void build(Tuple& current, std::size_t start)
    {
        if (current.size() == slots_) {
            tuples_.push_back(current);
            return;
        }
        for (std::size_t i = start; i < dim_; ++i) {
            current.push_back(i);
            build(current, i + 1);
            current.pop_back();
        }
    }

    std::size_t dim_;
    std::size_t slots_;
    std::vector<Tuple> tuples_;
    std::unordered_map<std::uint64_t, std::size_t> rank_of_mask_;
};

} // namespace leibniz

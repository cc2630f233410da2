#pragma once

#include "leibniz/rational.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace leibniz {

/// Dense rank-3 tensor of rationals. Structure constants, actions and
/// bilinear maps all use the convention t(i, j, k) = coefficient of the k-th
/// output basis vector in the image of the pair (e_i, e_j).
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(std::size_t d0, std::size_t d1, std::size_t d2)
        : dims_{d0, d1, d2}, data_(d0 * d1 * d2) {}

    std::size_t dim(std::size_t axis) const { return dims_.at(axis); }
    const std::array<std::size_t, 3>& shape() const { return dims_; }
    std::size_t size() const { return data_.size(); }

    Rational& operator()(std::size_t i, std::size_t j, std::size_t k)
    {
        return data_[(i * dims_[1] + j) * dims_[2] + k];
    }
    const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const
    {
        return data_[(i * dims_[1] + j) * dims_[2] + k];
    }

    const std::vector<Rational>& entries() const { return data_; }

    bool is_zero() const { return leibniz::is_zero(data_); }

    bool has_shape(std::size_t d0, std::size_t d1, std::size_t d2) const
    {
        return dims_[0] == d0 && dims_[1] == d1 && dims_[2] == d2;
    }

    void require_shape(std::size_t d0, std::size_t d1, std::size_t d2, const std::string& what) const
    {
        if (!has_shape(d0, d1, d2))
            throw std::invalid_argument(what + ": expected tensor shape " + std::to_string(d0) + "x" +
                                        std::to_string(d1) + "x" + std::to_string(d2) + ", got " +
                                        std::to_string(dims_[0]) + "x" + std::to_string(dims_[1]) +
                                        "x" + std::to_string(dims_[2]));
    }

    /// Vector of output coefficients for the input pair (i, j).
    Vector fiber(std::size_t i, std::size_t j) const
    {
        Vector v(dims_[2]);
        for (std::size_t k = 0; k < dims_[2]; ++k)
            v[k] = (*this)(i, j, k);
        return v;
    }

    Tensor3& operator+=(const Tensor3& o)
    {
        if (o.dims_ != dims_)
            throw std::invalid_argument("Tensor3 sum: shape mismatch");
        for (std::size_t i = 0; i < data_.size(); ++i)
            data_[i] += o.data_[i];
        return *this;
    }

    Tensor3& operator*=(const Rational& s)
    {
        for (auto& x : data_)
            x *= s;
        return *this;
    }

    friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
    friend Tensor3 operator-(Tensor3 a, const Tensor3& b)
    {
        Tensor3 nb = b;
        nb *= -1;
        return a += nb;
    }
    friend Tensor3 operator*(const Rational& s, Tensor3 a) { return a *= s; }

    friend bool operator==(const Tensor3& a, const Tensor3& b)
    {
        return a.dims_ == b.dims_ && a.data_ == b.data_;
    }

private:
    std::array<std::size_t, 3> dims_{0, 0, 0};
    std::vector<Rational> data_;
};

} // namespace leibniz

#ifndef KKTCO_TENSOR_HPP
#define KKTCO_TENSOR_HPP

#include <array>

#include "kktco/scalar.hpp"

namespace kktco {

/// Order-3 array of scalars indexed [i][j][k]; holds structure constants of
/// products and comultiplications alike.
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(Field f, std::size_t n, std::size_t m, std::size_t r)
        : field_(f), dims_{n, m, r}, data_(n * m * r, Scalar::zero(f))
    {
    }
    Tensor3(Field f, std::size_t n) : Tensor3(f, n, n, n) {}

    Field field() const { return field_; }
    const std::array<std::size_t, 3>& dims() const { return dims_; }

    Scalar& operator()(std::size_t i, std::size_t j, std::size_t k)
    {
        return data_[(i * dims_[1] + j) * dims_[2] + k];
    }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const
    {
        return data_[(i * dims_[1] + j) * dims_[2] + k];
    }

    friend bool operator==(const Tensor3&, const Tensor3&) = default;

private:
    Field field_;
    std::array<std::size_t, 3> dims_{0, 0, 0};
    std::vector<Scalar> data_;
};

}  // namespace kktco

#endif  // KKTCO_TENSOR_HPP

#pragma once

#include <Eigen/Core>
#include <cmath>

#include "magraph/error.hpp"

namespace magraph {

namespace detail {

template <typename Derived>
void require_nonempty(const Eigen::DenseBase<Derived>& a, const char* op) {
    if (a.size() == 0)
        throw DimensionError(std::string(op) + ": empty vector");
}

}  // namespace detail

/// L1 norm: sum of absolute component values.
template <typename Derived>
typename Derived::Scalar norm_l1(const Eigen::DenseBase<Derived>& a) {
    detail::require_nonempty(a, "norm_l1");
    return a.derived().cwiseAbs().sum();
}

/// L2 (Euclidean) norm: positive square root of the sum of squares.
template <typename Derived>
typename Derived::Scalar norm_l2(const Eigen::DenseBase<Derived>& a) {
    detail::require_nonempty(a, "norm_l2");
    return std::sqrt(a.derived().cwiseAbs2().sum());
}

/// L-infinity norm: maximum absolute component value.
template <typename Derived>
typename Derived::Scalar norm_linf(const Eigen::DenseBase<Derived>& a) {
    detail::require_nonempty(a, "norm_linf");
    return a.derived().cwiseAbs().maxCoeff();
}

/// General Lp norm, p >= 1: p-th root of the sum of |a_i|^p.
/// Coincides with norm_l1 at p=1 and norm_l2 at p=2.
template <typename Derived>
typename Derived::Scalar norm_lp(const Eigen::DenseBase<Derived>& a,
                                 typename Derived::Scalar p) {
    detail::require_nonempty(a, "norm_lp");
    if (!(p >= 1))
        throw ParameterError("norm_lp: p must be >= 1, got " + std::to_string(p));
    using Scalar = typename Derived::Scalar;
    if (p == Scalar(1)) return norm_l1(a);
    if (p == Scalar(2)) return norm_l2(a);
    Scalar acc = a.derived().cwiseAbs().array().pow(p).sum();
    return std::pow(acc, Scalar(1) / p);
}

/// Weighted Euclidean norm: sqrt(sum_i d_i * a_i^2) with weights d_i >= 0.
/// With all-ones weights this is exactly norm_l2.
template <typename DerivedA, typename DerivedD>
typename DerivedA::Scalar norm_weighted(const Eigen::DenseBase<DerivedA>& a,
                                        const Eigen::DenseBase<DerivedD>& d) {
    detail::require_nonempty(a, "norm_weighted");
    if (a.size() != d.size())
        throw DimensionError("norm_weighted: vector length " + std::to_string(a.size()) +
                             " != weight length " + std::to_string(d.size()));
    if ((d.derived().array() < 0).any())
        throw ParameterError("norm_weighted: negative weight");
    return std::sqrt((d.derived().array() * a.derived().array().square()).sum());
}

}  // namespace magraph

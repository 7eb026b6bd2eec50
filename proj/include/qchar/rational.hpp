#pragma once

// Exact rational scalar and the handful of dense linear-algebra routines we
// need over it. Eigen's decompositions assume an ordered field with a notion
// of precision, so the exact inverse is done by plain Gauss-Jordan.

#include <cstdint>
#include <optional>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace qchar {

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixXq = MatrixX<Rational>;
using VectorXq = VectorX<Rational>;

/// "n" or "n/d" in lowest terms.
std::string to_string(const Rational& x);
/// Inverse of to_string; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

/// q^e for an integer exponent of either sign.
Rational rational_pow(const Rational& q, int e);

/// Exact inverse by Gauss-Jordan elimination; nullopt when singular.
template <class Scalar>
std::optional<MatrixX<Scalar>> exact_inverse(const MatrixX<Scalar>& m)
{
    const Eigen::Index n = m.rows();
    MatrixX<Scalar> a = m;
    MatrixX<Scalar> inv = MatrixX<Scalar>::Identity(n, n);
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = col;
        while (pivot < n && a(pivot, col) == Scalar(0))
            ++pivot;
        if (pivot == n)
            return std::nullopt;
        if (pivot != col) {
            a.row(pivot).swap(a.row(col));
            inv.row(pivot).swap(inv.row(col));
        }
        const Scalar p = a(col, col);
        for (Eigen::Index k = 0; k < n; ++k) {
            a(col, k) /= p;
            inv(col, k) /= p;
        }
        for (Eigen::Index row = 0; row < n; ++row) {
            if (row == col || a(row, col) == Scalar(0))
                continue;
            const Scalar f = a(row, col);
            for (Eigen::Index k = 0; k < n; ++k) {
                a(row, k) -= f * a(col, k);
                inv(row, k) -= f * inv(col, k);
            }
        }
    }
    return inv;
}

template <class To, class From, int R, int C>
Eigen::Matrix<To, R, C> cast_exact(const Eigen::Matrix<From, R, C>& m)
{
    Eigen::Matrix<To, R, C> out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out(i, j) = To(m(i, j));
    return out;
}

// Plain-loop products. Eigen's expression operators probe implicit
// conversions that boost's rational type does not survive.
template <class S, int R1, int C1, int R2, int C2>
Eigen::Matrix<S, R1, C2> exact_product(const Eigen::Matrix<S, R1, C1>& a,
                                       const Eigen::Matrix<S, R2, C2>& b)
{
    Eigen::Matrix<S, R1, C2> out(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < b.cols(); ++j) {
            S acc(0);
            for (Eigen::Index k = 0; k < a.cols(); ++k)
                acc += a(i, k) * b(k, j);
            out(i, j) = acc;
        }
    return out;
}

template <class S>
S exact_dot(const VectorX<S>& a, const VectorX<S>& b)
{
    S acc(0);
    for (Eigen::Index i = 0; i < a.size(); ++i)
        acc += a(i) * b(i);
    return acc;
}

} // namespace qchar

namespace Eigen {

template <>
struct NumTraits<qchar::Rational> : GenericNumTraits<qchar::Rational> {
    using Real = qchar::Rational;
    using NonInteger = qchar::Rational;
    using Nested = qchar::Rational;
    using Literal = qchar::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 16,
        MulCost = 32
    };
    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static int digits10() { return 0; }
};

} // namespace Eigen

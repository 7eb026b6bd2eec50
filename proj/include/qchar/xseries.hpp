#pragma once

// X-series: factorizations of X_{w(omega_i)}(z) into shifted X_j, normalized
// eigenvalues on l-weights as root/pole multisets, and a truncated power
// series oracle for the pairing <X_i(z), m>.

#include <stdexcept>
#include <string>
#include <vector>

#include "qchar/braid.hpp"
#include "qchar/fm.hpp"
#include "qchar/lweight.hpp"
#include "qchar/rational.hpp"

namespace qchar {

class XSeriesError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// X_{w(omega_i)}(z) = prod X_j(z q^s)^{exps(j, s)}.
struct XFactorization {
    WeylElement w;
    int node = 0;
    LaurentMonomial exps;
};

/// Route through the factorization of each A_{j,1} in the A^w basis.
XFactorization x_factorization_by_roots(const BraidAction& braid, const WeylElement& w, int node);
/// Route through Psi_{w(omega_i),1} and Psi_{j,b} -> X_j(z b^{-1}).
XFactorization x_factorization_by_psi(const BraidAction& braid, const WeylElement& w, int node);
/// Both routes; throws XSeriesError when they disagree.
XFactorization x_factorization(const BraidAction& braid, const WeylElement& w, int node);

/// Exponents of U_i(z^{-1}) = prod X_j(z q^s)^{e(j, s)}.
LaurentMonomial u_factorization(const CartanData& cd, int node);

/// Coefficients c_0..c_N of a power series in z.
struct TruncatedSeries {
    std::vector<Rational> coeffs;

    static TruncatedSeries one(int order);
    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    TruncatedSeries operator*(const TruncatedSeries& other) const;
    /// Requires c_0 != 0.
    TruncatedSeries inverse() const;
    /// exp of a series with zero constant term.
    static TruncatedSeries exp_of(const std::vector<Rational>& log_coeffs);
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
};

/// prod_roots (1 - z q^{-s}) / prod_poles (1 - z q^{-s}).
struct RootSeries {
    std::vector<int> roots;
    std::vector<int> poles;

    /// Sorts and cancels common factors.
    static RootSeries make(std::vector<int> roots, std::vector<int> poles);
    bool is_polynomial() const { return poles.empty(); }
    bool is_one() const { return roots.empty() && poles.empty(); }
    int degree() const { return static_cast<int>(roots.size()) - static_cast<int>(poles.size()); }
    TruncatedSeries expand(const Rational& q, int order) const;
    friend bool operator==(const RootSeries&, const RootSeries&) = default;
};

/// Eigenvalue of the normalized X_{w(omega_i)}(z) on the l-weight M of the
/// module with highest monomial `anchor`. Throws XSeriesError when M is not
/// in T_w(anchor) Z[(A^w)^{+-1}].
RootSeries eigenvalue_on(const BraidAction& braid, const WeylElement& w, int node,
                         const YMonomial& M, const YMonomial& anchor);

/// w(alpha_i)-coordinate of w^{-1}(varpi(T_w(anchor)) - varpi(M)) in the
/// simple-root basis; the degree of eigenvalue_on must equal it.
Rational twisted_weight_gap(const BraidAction& braid, const WeylElement& w, int node,
                            const YMonomial& M, const YMonomial& anchor);

struct EigenEntry {
    WeylElement w;
    int node = 0;
    YMonomial monomial;
    RootSeries value;
};

struct PolynomialityVerdict {
    WeylElement w;
    bool all_polynomial = true;
    bool factorization_failed = false;
    std::vector<EigenEntry> entries;
    std::vector<EigenEntry> witnesses;  // entries with poles
    std::vector<YMonomial> unfactorable;
};

/// Eigenvalues for every monomial of qc and every node.
PolynomialityVerdict polynomiality_verdict(const BraidAction& braid, const WeylElement& w,
                                           const QCharacter& qc);

/// Truncated pairings <X_i(z), m> at a rational q, with the inverse quantum
/// Cartan matrices C~(q^r), r = 1..N, computed once.
class PairingOracle {
public:
    /// Throws XSeriesError when q <= 1 or a quantum Cartan matrix is singular.
    PairingOracle(CartanPtr cd, Rational q, int order);

    const Rational& q() const { return q_; }
    int order() const { return order_; }
    /// C~_{ij}(q^r).
    const Rational& tilde_c(int i, int j, int r) const;
    TruncatedSeries pairing(int node, const YMonomial& m) const;

private:
    CartanPtr cd_;
    Rational q_;
    int order_;
    std::vector<MatrixXq> tilde_;  // tilde_[r - 1]
};

TruncatedSeries pairing_oracle(const CartanPtr& cd, int node, const YMonomial& m, int order,
                               const Rational& q);

} // namespace qchar

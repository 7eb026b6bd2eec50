#pragma once

// The Laurent ring Z[Y_{i,q^r}^{+-1}]: sparse monomials keyed by (node, r),
// integer-multiplicity polynomials of them, and the root monomials A_{i,q^r}.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qchar/cartan.hpp"

namespace qchar {

/// One factor X_{node, q^shift}^exp.
struct Factor {
    int node = 0;
    int shift = 0;
    int exp = 0;

    friend bool operator==(const Factor&, const Factor&) = default;
    friend auto operator<=>(const Factor&, const Factor&) = default;
};

/// Sparse Laurent monomial in variables indexed by (node, shift). Factors are
/// kept sorted by (node, shift) with no zero exponents, so equality, ordering
/// and hashing are structural. Used for Y-monomials, Psi-monomials, and for
/// exponent maps over root monomials.
class LaurentMonomial {
public:
    LaurentMonomial() = default;
    /// Accepts factors in any order with repeats; normalizes.
    explicit LaurentMonomial(std::vector<Factor> factors);

    static LaurentMonomial variable(int node, int shift, int exp = 1);

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_identity() const { return factors_.empty(); }
    std::size_t size() const { return factors_.size(); }

    int exponent(int node, int shift) const;
    int min_shift() const;
    int max_shift() const;

    LaurentMonomial inverse() const;
    LaurentMonomial pow(int k) const;
    /// Multiplies every spectral parameter by q^s.
    LaurentMonomial shifted(int s) const;
    /// Keeps only the factors of one node.
    LaurentMonomial restricted_to(int node) const;

    LaurentMonomial& operator*=(const LaurentMonomial& other);
    friend LaurentMonomial operator*(LaurentMonomial a, const LaurentMonomial& b)
    {
        a *= b;
        return a;
    }
    friend LaurentMonomial operator/(const LaurentMonomial& a, const LaurentMonomial& b)
    {
        return a * b.inverse();
    }

    friend bool operator==(const LaurentMonomial&, const LaurentMonomial&) = default;
    friend bool operator<(const LaurentMonomial& a, const LaurentMonomial& b)
    {
        return a.factors_ < b.factors_;
    }

    std::size_t hash() const;

private:
    std::vector<Factor> factors_;
};

using YMonomial = LaurentMonomial;
/// Exponent map (i, r) -> e over the root monomials A_{i,q^r}.
using RootExponents = LaurentMonomial;

struct LaurentMonomialHash {
    std::size_t operator()(const LaurentMonomial& m) const { return m.hash(); }
};

/// Finite sum of monomials with nonzero integer multiplicities.
class YPolynomial {
public:
    YPolynomial() = default;
    YPolynomial(const YMonomial& m, std::int64_t mult = 1) { add(m, mult); }

    void add(const YMonomial& m, std::int64_t mult);
    std::int64_t coefficient(const YMonomial& m) const;

    const std::map<YMonomial, std::int64_t>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    /// Sum of multiplicities (the dimension, for a q-character).
    std::int64_t total() const;

    YPolynomial shifted(int s) const;

    YPolynomial& operator+=(const YPolynomial& other);
    YPolynomial& operator-=(const YPolynomial& other);
    friend YPolynomial operator+(YPolynomial a, const YPolynomial& b) { return a += b; }
    friend YPolynomial operator-(YPolynomial a, const YPolynomial& b) { return a -= b; }
    friend YPolynomial operator*(const YPolynomial& a, const YPolynomial& b);
    friend YPolynomial operator*(std::int64_t k, const YPolynomial& a);
    friend YPolynomial operator*(const YPolynomial& a, const YMonomial& m);

    friend bool operator==(const YPolynomial&, const YPolynomial&) = default;

private:
    std::map<YMonomial, std::int64_t> terms_;
};

/// A_{i,q^r} = Y_{i,r-d_i} Y_{i,r+d_i} (neighbour factors)^{-1}.
YMonomial make_A(const CartanData& cd, int node, int r);

/// Product of A_{i,q^r}^{e(i,r)} over an exponent map.
YMonomial expand_roots(const CartanData& cd, const RootExponents& e);

/// varpi(m) in the omega basis.
Weight weight_of(const CartanData& cd, const YMonomial& m);

bool is_dominant(const YMonomial& m);
bool is_k_dominant(const YMonomial& m, int node);

/// Unique e with m = anchor * prod A_{i,q^r}^{e(i,r)}, or nullopt when
/// m anchor^{-1} is not in the subgroup generated by the A's.
std::optional<RootExponents> factor_in_A(const CartanData& cd, const YMonomial& m,
                                         const YMonomial& anchor);

/// "Y_{1,2}^{-1} Y_{2,1}", or "1" for the identity. `letter` picks the symbol.
std::string to_text(const LaurentMonomial& m, const std::string& letter = "Y");
std::string to_text(const YPolynomial& p);

/// Parses products of `Y:i,r` and `A:i,r` tokens joined by `*`, each with an
/// optional `^e` (e may be negative). "1" is the identity.
/// Throws std::invalid_argument on malformed literals or bad nodes.
YMonomial parse_monomial(const CartanData& cd, const std::string& text);

} // namespace qchar

template <>
struct std::hash<qchar::LaurentMonomial> {
    std::size_t operator()(const qchar::LaurentMonomial& m) const { return m.hash(); }
};

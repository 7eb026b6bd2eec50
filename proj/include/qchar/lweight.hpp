#pragma once

// Monomials in Psi_{i,q^r} with a weight prefactor [omega], the embedding of
// Y-monomials, the automorphisms sigma and Omega, the extended braid action
// T', and the l-weights Psi_{w(omega_i),q^r}.

#include <stdexcept>
#include <string>

#include "qchar/braid.hpp"
#include "qchar/cartan.hpp"
#include "qchar/yring.hpp"

namespace qchar {

struct PsiMonomial {
    LaurentMonomial psi;
    RationalWeight omega;

    static PsiMonomial identity(int rank);
    static PsiMonomial variable(int rank, int node, int shift, int exp = 1);
    static PsiMonomial weight(const RationalWeight& omega);

    PsiMonomial inverse() const;
    PsiMonomial shifted(int s) const;
    PsiMonomial& operator*=(const PsiMonomial& other);
    friend PsiMonomial operator*(PsiMonomial a, const PsiMonomial& b)
    {
        a *= b;
        return a;
    }
    friend PsiMonomial operator/(const PsiMonomial& a, const PsiMonomial& b)
    {
        return a * b.inverse();
    }
    friend bool operator==(const PsiMonomial& a, const PsiMonomial& b);
};

/// Raised when the two constructions of Psi_{w(omega_i)} disagree or the
/// regrouping into W-blocks is impossible. Either means a bug.
class LweightError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Y_{i,r} -> [omega_i] Psi_{i,r-d_i} Psi_{i,r+d_i}^{-1}, extended multiplicatively.
PsiMonomial embed_Y(const CartanData& cd, const YMonomial& m);

/// Psi~_{i,r}: Psi_{i,r}^{-1} times the neighbour factors, no weight part.
PsiMonomial tilde_psi(const CartanData& cd, int node, int r);

/// Psi_{i,r} -> Psi_{i,-r}^{-1}; fixes [omega].
PsiMonomial sigma(const PsiMonomial& p);
/// Psi_{i,r} -> Psi_{i,-r}; fixes [omega].
PsiMonomial Omega(const PsiMonomial& p);

/// Extended braid action with memoized generator images.
class ExtendedBraid {
public:
    explicit ExtendedBraid(CartanPtr cd);

    const CartanData& cartan() const { return *cd_; }

    PsiMonomial T_prime(int node, const PsiMonomial& p) const;
    /// T'_{i_1} ... T'_{i_k} along the canonical word of w.
    PsiMonomial T_prime_w(const WeylElement& w, const PsiMonomial& p) const;
    PsiMonomial T_prime_word(const std::vector<int>& word, const PsiMonomial& p) const;

private:
    CartanPtr cd_;
    std::vector<LaurentMonomial> image_;  // T'_i(Psi_{i,0})
    std::vector<MatrixX<int>> reflection_;
};

/// Psi_{w(omega_i),q^r} from the substitution rules applied to
/// T_w(Y_{i,0}), cross-checked against sigma T'_w sigma(Psi_{i,r}).
/// Throws LweightError if the routes disagree.
PsiMonomial psi_extremal(const BraidAction& braid, const ExtendedBraid& ext,
                         const WeylElement& w, int node, int r);

/// The substitution route alone.
PsiMonomial psi_by_substitution(const BraidAction& braid, const WeylElement& w, int node, int r);
/// The sigma T'_w sigma route alone.
PsiMonomial psi_by_braid(const ExtendedBraid& ext, const WeylElement& w, int node, int r);

std::string to_text(const PsiMonomial& p);

} // namespace qchar

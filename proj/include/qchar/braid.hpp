#pragma once

// Chari's braid group action on Y-monomials, its composites T_w along
// canonical reduced words, and the w-twisted root monomials A^w_{i,q^r}.

#include <optional>
#include <vector>

#include "qchar/cartan.hpp"
#include "qchar/yring.hpp"

namespace qchar {

enum class Ordering { less, equal, greater, incomparable };

const char* to_string(Ordering o);

class BraidAction {
public:
    explicit BraidAction(CartanPtr cd);

    const CartanData& cartan() const { return *cd_; }
    const CartanPtr& cartan_ptr() const { return cd_; }

    /// T_i: Y_{i,a} -> Y_{i,a} A_{i,a q_i}^{-1}, Y_{j,a} fixed for j != i.
    YMonomial T(int node, const YMonomial& m) const;
    /// Inverse: Y_{i,a} -> Y_{i,a} A_{i,a q_i^{-1}}^{-1}.
    YMonomial T_inv(int node, const YMonomial& m) const;

    /// T_w = T_{i_1} ... T_{i_k} along the canonical word of w.
    YMonomial T_w(const WeylElement& w, const YMonomial& m) const;
    YMonomial T_w_inv(const WeylElement& w, const YMonomial& m) const;
    /// Composite along an arbitrary (not necessarily reduced) word.
    YMonomial T_word(const std::vector<int>& word, const YMonomial& m) const;

    /// Images of Y_{i,0}; every other generator image is a shift of these.
    const YMonomial& generator_image(int node) const { return forward_[node - 1]; }
    const YMonomial& generator_inverse_image(int node) const { return backward_[node - 1]; }

private:
    YMonomial apply(const std::vector<YMonomial>& images, int node, const YMonomial& m) const;

    CartanPtr cd_;
    std::vector<YMonomial> forward_;
    std::vector<YMonomial> backward_;
};

struct TwistedRoot {
    WeylElement w;
    int node = 0;
    int shift = 0;
    YMonomial value;
};

/// A^w_{i,q^r} = T_w(A_{i,q^r}).
TwistedRoot twisted_root(const BraidAction& braid, const WeylElement& w, int node, int r);

/// Exponents e with m = anchor * prod (A^w_{i,q^r})^{e(i,r)}, computed as
/// factor_in_A(T_w^{-1} m, T_w^{-1} anchor).
std::optional<RootExponents> factor_in_Aw(const BraidAction& braid, const YMonomial& m,
                                          const YMonomial& anchor, const WeylElement& w);

/// Position of m relative to other in the w-twisted order: `less` when
/// m = other * prod (A^w)^{-k} with all k >= 0 and not all zero.
Ordering compare_w(const BraidAction& braid, const YMonomial& m, const YMonomial& other,
                   const WeylElement& w);

/// Sign pattern of an exponent map.
bool all_nonpositive(const RootExponents& e);

} // namespace qchar

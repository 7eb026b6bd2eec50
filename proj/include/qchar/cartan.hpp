#pragma once

// Finite-type root data: Cartan matrix, symmetrizers, the weight lattice in
// the fundamental-weight basis, and Weyl group elements.
//
// Conventions: nodes are 1-based everywhere in the public API (I = {1..n});
// Eigen storage is 0-based, so node i lives at index i - 1. The Cartan
// matrix is C(i, j) = <alpha_i^vee, alpha_j>, hence alpha_i has the i-th
// column of C as its coordinates in the omega basis.

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "qchar/rational.hpp"

namespace qchar {

using Weight = VectorX<int>;
using RationalWeight = VectorX<Rational>;

struct CartanData {
    char type_label = 'A';
    int rank = 0;
    MatrixX<int> cartan;          // C
    VectorX<int> symmetrizer;     // d_i
    int lacing = 1;               // r^vee = max d_i
    int dual_coxeter = 2;         // h^vee
    std::vector<int> bar_map;     // bar(i), 1-based values, 0-based index

    MatrixXq cartan_inverse;      // C^{-1}
    MatrixXq omega_gram;          // (omega_i, omega_j)
    VectorXq height_functional;   // (omega_i, rho^vee): height(alpha_j) = 1

    int n() const { return rank; }
    int d(int node) const { return symmetrizer(node - 1); }
    int c(int i, int j) const { return cartan(i - 1, j - 1); }
    int bar(int node) const { return bar_map[static_cast<std::size_t>(node - 1)]; }
    bool valid_node(int node) const { return node >= 1 && node <= rank; }

    Weight omega(int node) const;
    Weight alpha(int node) const;
    Weight rho() const;
    std::string name() const;
};

using CartanPtr = std::shared_ptr<const CartanData>;

/// Builds the datum for a finite type of rank at most 8.
/// Throws std::invalid_argument for pairs such as (B,1), (D,3) or (E,5).
CartanPtr build_cartan(char type_label, int rank);

/// Parses labels such as "A2", "G2", "D4".
CartanPtr build_cartan(const std::string& label);

/// Matrix of s_k on P in the omega basis.
MatrixX<int> reflection_matrix(const CartanData& cd, int node);

/// Weyl group element. Equality is decided on the (faithful) action matrix;
/// `word` is always the lexicographically least reduced word.
class WeylElement {
public:
    WeylElement() = default;
    WeylElement(std::vector<int> word, MatrixX<int> matrix)
        : word_(std::move(word)), matrix_(std::move(matrix)) {}

    const std::vector<int>& word() const { return word_; }
    const MatrixX<int>& matrix() const { return matrix_; }
    int length() const { return static_cast<int>(word_.size()); }
    bool is_identity() const { return word_.empty(); }

    friend bool operator==(const WeylElement& a, const WeylElement& b)
    {
        return a.matrix_ == b.matrix_;
    }
    friend bool operator<(const WeylElement& a, const WeylElement& b)
    {
        if (a.word_.size() != b.word_.size())
            return a.word_.size() < b.word_.size();
        return a.word_ < b.word_;
    }

private:
    std::vector<int> word_;
    MatrixX<int> matrix_;
};

/// Canonical element for an arbitrary word (any length, any repetitions).
/// Throws std::invalid_argument on an index outside I.
WeylElement reduce_word(const CartanData& cd, std::span<const int> word);
WeylElement identity_element(const CartanData& cd);
WeylElement simple_reflection(const CartanData& cd, int node);
WeylElement longest_element(const CartanData& cd);
WeylElement compose(const CartanData& cd, const WeylElement& a, const WeylElement& b);
WeylElement inverse(const CartanData& cd, const WeylElement& w);

/// All of W, ordered by length and then by canonical word.
std::vector<WeylElement> enumerate_weyl(const CartanData& cd);

template <class Scalar>
VectorX<Scalar> weyl_act(const WeylElement& w, const VectorX<Scalar>& lambda)
{
    return w.matrix().template cast<Scalar>() * lambda;
}

/// (lambda, mu) with (alpha_i, omega_j) = d_j delta_ij.
Rational invariant_form(const CartanData& cd, const Weight& lambda, const Weight& mu);
Rational invariant_form(const CartanData& cd, const RationalWeight& lambda,
                        const RationalWeight& mu);

/// Coordinates of a weight in the simple-root basis.
RationalWeight to_root_coordinates(const CartanData& cd, const Weight& lambda);

/// Sum of simple-root coordinates, i.e. (lambda, rho^vee).
Rational height(const CartanData& cd, const Weight& lambda);

/// True when the weight is a root with all root coordinates >= 0.
bool is_nonnegative_combination(const CartanData& cd, const Weight& lambda);

std::string word_to_string(const std::vector<int>& word);
/// Parses "1,2,1" (empty string is the empty word).
std::vector<int> parse_word(const std::string& text);

} // namespace qchar

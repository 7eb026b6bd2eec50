#pragma once

// q-characters of fundamental representations: sl2 string characters, the
// L_k(M) lifts, the decomposition of a q-character along one node, and the
// closure algorithm that builds them.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "qchar/cartan.hpp"
#include "qchar/yring.hpp"

namespace qchar {

inline constexpr int kAlgorithmVersion = 1;

struct QCharacterMeta {
    std::string type;
    int rank = 0;
    int node = 0;
    int generator_exponent = 0;
    int algorithm_version = kAlgorithmVersion;

    friend bool operator==(const QCharacterMeta&, const QCharacterMeta&) = default;
};

struct QCharacter {
    YMonomial highest;
    YPolynomial poly;
    QCharacterMeta meta;

    friend bool operator==(const QCharacter&, const QCharacter&) = default;
};

/// Raised when the closure does not converge to a special q-character or
/// outgrows its size bound.
class FmError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A q-string {a, a q^{step}, ..., a q^{step (length-1)}} with a = q^start.
struct QString {
    int start = 0;
    int length = 0;
    friend bool operator==(const QString&, const QString&) = default;
};

/// Splits a multiset of spectral parameters into strings pairwise in general
/// position, extracting maximal strings from the lowest parameter upwards.
std::vector<QString> decompose_into_strings(const std::map<int, int>& params, int step);

/// Sum_{t=0..k} m_t with m_0 = Y_{1,r} Y_{1,r+2} ... Y_{1,r+2(k-1)} in A1.
YPolynomial sl2_string_char(int r, int k);

/// q-character of the simple U_q(sl2^) module with dominant highest monomial m
/// (node 1 only). Throws std::invalid_argument when m is not of that form.
YPolynomial sl2_qchar(const YMonomial& m);

/// L_k(M): the sl2 q-character of M^{(k)} (in steps of q_k), with the top
/// replaced by M and each sl2 root replaced by A_{k,b}^{-1}.
/// Throws std::invalid_argument when M is not k-dominant.
YPolynomial lift_Lk(const CartanData& cd, const YMonomial& M, int k);

struct DecompositionTerm {
    YMonomial top;
    std::int64_t lambda = 0;
};

struct Decomposition {
    bool ok = false;
    std::vector<DecompositionTerm> terms;
    std::optional<YMonomial> residual;  // offending monomial when !ok
    std::string reason;
};

/// Greedy top-down (by height) decomposition P = sum lambda_k(M) L_k(M).
Decomposition decompose_k(const CartanData& cd, const YPolynomial& p, int k);

struct FmOptions {
    std::size_t max_monomials = 1'000'000;
    bool enforce_type_cap = true;
};

/// Types enabled for fundamental q-characters unless the cap is lifted.
bool within_default_cap(const CartanData& cd);

/// q-character of L(Y_{i,q^r}).
/// Throws std::invalid_argument for a bad node or a capped type, FmError when
/// the closure fails.
QCharacter fm_fundamental(const CartanData& cd, int node, int r, const FmOptions& opts = {});

/// Disk cache of fundamental q-characters keyed by (type, rank, node), stored
/// at generator exponent 0. Reads may run concurrently; writes are exclusive.
class QCharacterCache {
public:
    /// An empty directory disables persistence (memory only).
    explicit QCharacterCache(std::filesystem::path dir = {}, FmOptions opts = {});

    /// Default location: $QCHAR_CACHE_DIR, or empty when unset.
    static std::filesystem::path default_directory();

    /// Throws std::runtime_error when a cache file exists but is unreadable
    /// or does not describe the requested representation.
    QCharacter get(const CartanData& cd, int node, int r = 0);

    std::filesystem::path file_for(const CartanData& cd, int node) const;

private:
    std::filesystem::path dir_;
    FmOptions opts_;
    std::shared_mutex mutex_;
    std::map<std::string, QCharacter> memory_;
};

} // namespace qchar

#include "qchar/xseries.hpp"

#include <algorithm>

namespace qchar {

XFactorization x_factorization_by_roots(const BraidAction& braid, const WeylElement& w, int node)
{
    // A_{j,1} = prod (A^w_{k,b^{-1}})^{m^k_{j,b}}; the X_j(z b) exponent in
    // X_{w(omega_i)} is m^i_{j,b}.
    const CartanData& cd = braid.cartan();
    std::vector<Factor> exps;
    for (int j = 1; j <= cd.rank; ++j) {
        const auto f = factor_in_Aw(braid, make_A(cd, j, 0), YMonomial{}, w);
        if (!f)
            throw XSeriesError("A_{" + std::to_string(j) + ",1} does not factor over A^w");
        for (const Factor& x : f->factors())
            if (x.node == node)
                exps.push_back({j, -x.shift, x.exp});
    }
    return {w, node, LaurentMonomial(std::move(exps))};
}

XFactorization x_factorization_by_psi(const BraidAction& braid, const WeylElement& w, int node)
{
    const PsiMonomial p = psi_by_substitution(braid, w, node, 0);
    std::vector<Factor> exps;
    for (const Factor& x : p.psi.factors())
        exps.push_back({x.node, -x.shift, x.exp});
    return {w, node, LaurentMonomial(std::move(exps))};
}

XFactorization x_factorization(const BraidAction& braid, const WeylElement& w, int node)
{
    XFactorization a = x_factorization_by_roots(braid, w, node);
    const XFactorization b = x_factorization_by_psi(braid, w, node);
    if (!(a.exps == b.exps))
        throw XSeriesError("X_{w(omega_" + std::to_string(node) + ")} routes disagree for w = [" +
                           word_to_string(w.word()) + "]: " + to_text(a.exps, "X") + " vs " +
                           to_text(b.exps, "X"));
    return a;
}

LaurentMonomial u_factorization(const CartanData& cd, int node)
{
    const int d = cd.d(node);
    std::vector<Factor> f{{node, d, 1}, {node, -d, 1}};
    for (int j = 1; j <= cd.rank; ++j) {
        if (j == node)
            continue;
        switch (cd.c(node, j)) {
        case -1:
            f.push_back({j, 0, -1});
            break;
        case -2:
            f.push_back({j, -1, -1});
            f.push_back({j, 1, -1});
            break;
        case -3:
            f.push_back({j, -2, -1});
            f.push_back({j, 0, -1});
            f.push_back({j, 2, -1});
            break;
        default:
            break;
        }
    }
    return LaurentMonomial(std::move(f));
}

TruncatedSeries TruncatedSeries::one(int order)
{
    TruncatedSeries s;
    s.coeffs.assign(static_cast<std::size_t>(order + 1), Rational(0));
    s.coeffs[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const
{
    const std::size_t n = std::min(coeffs.size(), other.coeffs.size());
    TruncatedSeries out;
    out.coeffs.assign(n, Rational(0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; a + b < n; ++b)
            out.coeffs[a + b] += coeffs[a] * other.coeffs[b];
    return out;
}

TruncatedSeries TruncatedSeries::inverse() const
{
    if (coeffs.empty() || coeffs[0] == 0)
        throw XSeriesError("series with zero constant term is not invertible");
    TruncatedSeries out;
    out.coeffs.assign(coeffs.size(), Rational(0));
    out.coeffs[0] = Rational(1) / coeffs[0];
    for (std::size_t n = 1; n < coeffs.size(); ++n) {
        Rational acc(0);
        for (std::size_t k = 1; k <= n; ++k)
            acc += coeffs[k] * out.coeffs[n - k];
        out.coeffs[n] = -acc / coeffs[0];
    }
    return out;
}

TruncatedSeries TruncatedSeries::exp_of(const std::vector<Rational>& log_coeffs)
{
    // n g_n = sum_{k=1..n} k f_k g_{n-k}
    TruncatedSeries g;
    g.coeffs.assign(log_coeffs.size(), Rational(0));
    g.coeffs[0] = 1;
    for (std::size_t n = 1; n < log_coeffs.size(); ++n) {
        Rational acc(0);
        for (std::size_t k = 1; k <= n; ++k)
            acc += Rational(static_cast<long long>(k)) * log_coeffs[k] * g.coeffs[n - k];
        g.coeffs[n] = acc / Rational(static_cast<long long>(n));
    }
    return g;
}

RootSeries RootSeries::make(std::vector<int> roots, std::vector<int> poles)
{
    std::sort(roots.begin(), roots.end());
    std::sort(poles.begin(), poles.end());
    RootSeries out;
    std::set_difference(roots.begin(), roots.end(), poles.begin(), poles.end(),
                        std::back_inserter(out.roots));
    std::set_difference(poles.begin(), poles.end(), roots.begin(), roots.end(),
                        std::back_inserter(out.poles));
    return out;
}

TruncatedSeries RootSeries::expand(const Rational& q, int order) const
{
    TruncatedSeries out = TruncatedSeries::one(order);
    for (int s : roots) {
        TruncatedSeries f = TruncatedSeries::one(order);
        if (order >= 1)
            f.coeffs[1] = -rational_pow(q, -s);
        out = out * f;
    }
    for (int s : poles) {
        // (1 - z c)^{-1} = sum c^n z^n
        TruncatedSeries f = TruncatedSeries::one(order);
        const Rational c = rational_pow(q, -s);
        for (int n = 1; n <= order; ++n)
            f.coeffs[static_cast<std::size_t>(n)] = f.coeffs[static_cast<std::size_t>(n - 1)] * c;
        out = out * f;
    }
    return out;
}

RootSeries eigenvalue_on(const BraidAction& braid, const WeylElement& w, int node,
                         const YMonomial& M, const YMonomial& anchor)
{
    const auto e = factor_in_Aw(braid, M, braid.T_w(w, anchor), w);
    if (!e)
        throw XSeriesError(to_text(M) + " does not factor over the twisted roots from " +
                           to_text(anchor));
    std::vector<int> roots;
    std::vector<int> poles;
    for (const Factor& f : e->factors()) {
        if (f.node != node)
            continue;
        auto& bucket = f.exp < 0 ? roots : poles;
        for (int k = 0; k < std::abs(f.exp); ++k)
            bucket.push_back(f.shift);
    }
    return RootSeries::make(std::move(roots), std::move(poles));
}

Rational twisted_weight_gap(const BraidAction& braid, const WeylElement& w, int node,
                            const YMonomial& M, const YMonomial& anchor)
{
    const CartanData& cd = braid.cartan();
    const Weight gap = weight_of(cd, braid.T_w(w, anchor)) - weight_of(cd, M);
    const Weight pulled = inverse(cd, w).matrix() * gap;
    return to_root_coordinates(cd, pulled)(node - 1);
}

PolynomialityVerdict polynomiality_verdict(const BraidAction& braid, const WeylElement& w,
                                           const QCharacter& qc)
{
    PolynomialityVerdict v;
    v.w = w;
    for (const auto& [m, mult] : qc.poly.terms()) {
        for (int i = 1; i <= braid.cartan().rank; ++i) {
            try {
                EigenEntry entry{w, i, m, eigenvalue_on(braid, w, i, m, qc.highest)};
                if (!entry.value.is_polynomial()) {
                    v.all_polynomial = false;
                    v.witnesses.push_back(entry);
                }
                v.entries.push_back(std::move(entry));
            } catch (const XSeriesError&) {
                v.factorization_failed = true;
                v.all_polynomial = false;
                v.unfactorable.push_back(m);
                break;
            }
        }
    }
    return v;
}

namespace {

// [n]_x = (x^n - x^{-n}) / (x - x^{-1}) for n >= 0.
Rational q_number(const Rational& x, int n)
{
    Rational acc(0);
    for (int k = -(n - 1); k <= n - 1; k += 2)
        acc += rational_pow(x, k);
    return acc;
}

} // namespace

PairingOracle::PairingOracle(CartanPtr cd, Rational q, int order)
    : cd_(std::move(cd)), q_(std::move(q)), order_(order)
{
    if (q_ <= 1)
        throw XSeriesError("evaluation point must exceed 1");
    if (order_ < 1)
        throw XSeriesError("truncation order must be positive");
    const int n = cd_->rank;
    for (int r = 1; r <= order_; ++r) {
        const Rational x = rational_pow(q_, r);
        MatrixXq m(n, n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (a == b) {
                    const int d = cd_->symmetrizer(a);
                    m(a, b) = rational_pow(x, d) + rational_pow(x, -d);
                } else {
                    const int c = cd_->cartan(a, b);
                    m(a, b) = c == 0 ? Rational(0) : -q_number(x, -c);
                }
            }
        auto inv = exact_inverse<Rational>(m);
        if (!inv)
            throw XSeriesError("quantum Cartan matrix singular at q^" + std::to_string(r));
        tilde_.push_back(std::move(*inv));
    }
}

const Rational& PairingOracle::tilde_c(int i, int j, int r) const
{
    return tilde_[static_cast<std::size_t>(r - 1)](i - 1, j - 1);
}

TruncatedSeries PairingOracle::pairing(int node, const YMonomial& m) const
{
    std::vector<Rational> log(static_cast<std::size_t>(order_ + 1), Rational(0));
    for (const Factor& f : m.factors())
        for (int r = 1; r <= order_; ++r)
            log[static_cast<std::size_t>(r)] += Rational(f.exp) * rational_pow(q_, -f.shift * r) *
                                                tilde_c(node, f.node, r) / Rational(r);
    return TruncatedSeries::exp_of(log);
}

TruncatedSeries pairing_oracle(const CartanPtr& cd, int node, const YMonomial& m, int order,
                               const Rational& q)
{
    return PairingOracle(cd, q, order).pairing(node, m);
}

} // namespace qchar

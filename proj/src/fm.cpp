#include "qchar/fm.hpp"

#include <algorithm>
#include <unordered_map>

namespace qchar {

namespace {

// One term of an sl2 character, recorded as the sorted list of spectral
// parameters b of the A_b^{-1} factors below the top, with its coefficient.
using Sl2Terms = std::map<std::vector<int>, std::int64_t>;

Sl2Terms string_terms(const QString& s, int d)
{
    Sl2Terms out;
    std::vector<int> params;
    out[params] = 1;
    for (int t = 0; t < s.length; ++t) {
        params.push_back(s.start + 2 * d * (s.length - t) - d);
        std::vector<int> sorted = params;
        std::sort(sorted.begin(), sorted.end());
        out[sorted] += 1;
    }
    return out;
}

Sl2Terms multiply(const Sl2Terms& a, const Sl2Terms& b)
{
    Sl2Terms out;
    for (const auto& [pa, ca] : a)
        for (const auto& [pb, cb] : b) {
            std::vector<int> p = pa;
            p.insert(p.end(), pb.begin(), pb.end());
            std::sort(p.begin(), p.end());
            out[p] += ca * cb;
        }
    return out;
}

Sl2Terms sl2_terms(const YMonomial& top, int node, int d)
{
    std::map<int, int> params;
    for (const Factor& f : top.factors())
        if (f.node == node)
            params[f.shift] += f.exp;
    Sl2Terms out;
    out[{}] = 1;
    for (const QString& s : decompose_into_strings(params, 2 * d))
        out = multiply(out, string_terms(s, d));
    return out;
}

struct LiftTerm {
    YMonomial monomial;
    std::int64_t coeff;
    int depth;
};

std::vector<LiftTerm> lift_terms(const CartanData& cd, const YMonomial& M, int k)
{
    std::vector<LiftTerm> out;
    for (const auto& [params, c] : sl2_terms(M, k, cd.d(k))) {
        YMonomial m = M;
        for (int b : params)
            m = m / make_A(cd, k, b);
        out.push_back({std::move(m), c, static_cast<int>(params.size())});
    }
    return out;
}

const CartanData& sl2_data()
{
    static const CartanPtr a1 = build_cartan('A', 1);
    return *a1;
}

} // namespace

std::vector<QString> decompose_into_strings(const std::map<int, int>& params, int step)
{
    std::map<int, int> left;
    for (const auto& [p, c] : params)
        if (c > 0)
            left[p] = c;
    std::vector<QString> out;
    while (!left.empty()) {
        const int a = left.begin()->first;
        int len = 0;
        for (int p = a;; p += step) {
            auto it = left.find(p);
            if (it == left.end())
                break;
            ++len;
            if (--it->second == 0)
                left.erase(it);
        }
        out.push_back({a, len});
    }
    return out;
}

YPolynomial sl2_string_char(int r, int k)
{
    if (k < 0)
        throw std::invalid_argument("string length must be non-negative");
    YMonomial top;
    for (int t = 0; t < k; ++t)
        top *= YMonomial::variable(1, r + 2 * t);
    YPolynomial out;
    for (const LiftTerm& t : lift_terms(sl2_data(), top, 1))
        out.add(t.monomial, t.coeff);
    return out;
}

YPolynomial sl2_qchar(const YMonomial& m)
{
    if (!is_dominant(m))
        throw std::invalid_argument("sl2 q-character needs a dominant monomial, got " +
                                    to_text(m));
    for (const Factor& f : m.factors())
        if (f.node != 1)
            throw std::invalid_argument("sl2 monomials only involve node 1");
    YPolynomial out;
    for (const LiftTerm& t : lift_terms(sl2_data(), m, 1))
        out.add(t.monomial, t.coeff);
    return out;
}

YPolynomial lift_Lk(const CartanData& cd, const YMonomial& M, int k)
{
    if (!cd.valid_node(k))
        throw std::invalid_argument("node outside I");
    if (!is_k_dominant(M, k))
        throw std::invalid_argument(to_text(M) + " is not " + std::to_string(k) + "-dominant");
    YPolynomial out;
    for (const LiftTerm& t : lift_terms(cd, M, k))
        out.add(t.monomial, t.coeff);
    return out;
}

Decomposition decompose_k(const CartanData& cd, const YPolynomial& p, int k)
{
    Decomposition result;
    YPolynomial residual = p;
    while (!residual.empty()) {
        const YMonomial* top = nullptr;
        Rational best;
        for (const auto& [m, c] : residual.terms()) {
            const Rational h = height(cd, weight_of(cd, m));
            if (!top || h > best) {
                top = &m;
                best = h;
            }
        }
        const YMonomial M = *top;
        const std::int64_t lambda = residual.coefficient(M);
        if (lambda < 0) {
            result.residual = M;
            result.reason = "negative multiplicity in residual";
            return result;
        }
        if (!is_k_dominant(M, k)) {
            result.residual = M;
            result.reason = "uncovered monomial is not " + std::to_string(k) + "-dominant";
            return result;
        }
        residual -= lambda * lift_Lk(cd, M, k);
        result.terms.push_back({M, lambda});
    }
    result.ok = true;
    return result;
}

bool within_default_cap(const CartanData& cd)
{
    switch (cd.type_label) {
    case 'A': return cd.rank <= 4;
    case 'B':
    case 'C': return cd.rank <= 3;
    case 'D': return cd.rank == 4;
    case 'G': return true;
    default: return false;
    }
}

QCharacter fm_fundamental(const CartanData& cd, int node, int r, const FmOptions& opts)
{
    if (!cd.valid_node(node))
        throw std::invalid_argument("node " + std::to_string(node) + " outside I for " +
                                    cd.name());
    if (opts.enforce_type_cap && !within_default_cap(cd))
        throw std::invalid_argument(cd.name() + " is outside the default type cap");

    const int n = cd.rank;
    struct Entry {
        std::int64_t mult = 0;
        std::vector<std::int64_t> colored;
    };
    const YMonomial highest = YMonomial::variable(node, r);
    std::unordered_map<YMonomial, Entry, LaurentMonomialHash> table;
    std::map<int, std::vector<YMonomial>> by_depth;
    table[highest] = {1, std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)};
    by_depth[0].push_back(highest);

    // Every contribution to a monomial comes from a strictly shallower one, so
    // processing depth by depth sees each multiplicity in final form.
    for (auto level = by_depth.begin(); level != by_depth.end(); ++level) {
        std::vector<YMonomial> batch = level->second;
        std::sort(batch.begin(), batch.end());
        for (const YMonomial& m : batch) {
            Entry& e = table.at(m);
            if (level->first > 0) {
                e.mult = *std::max_element(e.colored.begin(), e.colored.end());
                if (is_dominant(m))
                    throw FmError("second dominant monomial " + to_text(m) + " in closure of " +
                                  to_text(highest));
            }
            const std::int64_t mult = e.mult;
            for (int k = 1; k <= n; ++k) {
                const std::int64_t have = e.colored[static_cast<std::size_t>(k - 1)];
                if (have >= mult)
                    continue;
                if (!is_k_dominant(m, k))
                    throw FmError(to_text(m) + " is not " + std::to_string(k) +
                                  "-dominant but not covered by " + std::to_string(k) +
                                  "-strings");
                const std::int64_t extra = mult - have;
                table.at(m).colored[static_cast<std::size_t>(k - 1)] = mult;
                for (LiftTerm& t : lift_terms(cd, m, k)) {
                    if (t.depth == 0)
                        continue;
                    auto [it, inserted] = table.try_emplace(
                        t.monomial,
                        Entry{0, std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)});
                    it->second.colored[static_cast<std::size_t>(k - 1)] += extra * t.coeff;
                    if (inserted)
                        by_depth[level->first + t.depth].push_back(t.monomial);
                }
                if (table.size() > opts.max_monomials)
                    throw FmError("closure exceeded " + std::to_string(opts.max_monomials) +
                                  " monomials");
            }
        }
    }

    QCharacter qc;
    qc.highest = highest;
    qc.meta = {std::string(1, cd.type_label), cd.rank, node, r, kAlgorithmVersion};
    for (const auto& [m, e] : table)
        qc.poly.add(m, e.mult);
    return qc;
}

} // namespace qchar

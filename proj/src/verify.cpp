#include "qchar/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>
#include <thread>

namespace qchar {

const char* to_string(CheckClass c) { return c == CheckClass::theorem ? "THEOREM" : "CONJECTURE"; }

const char* to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::evidence_pass: return "evidence-pass";
    }
    return "?";
}

json to_json(const CheckResult& r)
{
    json scope = {{"type", r.type}, {"rank", r.rank}, {"node", r.node}};
    scope["w"] = r.w ? json(*r.w) : json(nullptr);
    json out = {{"check_id", r.check_id},
                {"class", to_string(r.klass)},
                {"scope", scope},
                {"status", to_string(r.status)},
                {"elapsed_ms", r.elapsed_ms}};
    out["witness"] = r.witness.empty() ? json(nullptr) : json(r.witness);
    return out;
}

TypeContext::TypeContext(CartanPtr cd_, bool full, std::vector<WeylElement> ws,
                         std::vector<QCharacter> fund)
    : cd(cd_), braid(cd_), ext(cd_), full_weyl(full), sweep(std::move(ws)),
      fundamentals(std::move(fund))
{
}

namespace {

using Rng = std::mt19937_64;

// Stable across platforms, unlike std::hash.
std::uint64_t fnv1a(const std::string& s)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

YMonomial random_monomial(Rng& rng, const CartanData& cd)
{
    std::vector<Factor> f;
    const int count = uniform(rng, 0, 4);
    for (int k = 0; k < count; ++k) {
        int e = uniform(rng, -2, 2);
        if (e == 0)
            e = 1;
        f.push_back({uniform(rng, 1, cd.rank), uniform(rng, -6, 6), e});
    }
    return YMonomial(std::move(f));
}

Weight random_weight(Rng& rng, int rank)
{
    Weight w(rank);
    for (int i = 0; i < rank; ++i)
        w(i) = uniform(rng, -4, 4);
    return w;
}

std::vector<int> alternating(int i, int j, int length)
{
    std::vector<int> word;
    for (int k = 0; k < length; ++k)
        word.push_back(k % 2 == 0 ? i : j);
    return word;
}

int coxeter_exponent(const CartanData& cd, int i, int j)
{
    switch (cd.c(i, j) * cd.c(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    default: return 6;
    }
}

std::string weight_text(const Weight& w)
{
    std::ostringstream os;
    os << '(';
    for (Eigen::Index i = 0; i < w.size(); ++i)
        os << (i ? "," : "") << w(i);
    os << ')';
    return os.str();
}

// Collects the first counterexample; everything else is counted.
class Tally {
public:
    void fail(const std::string& witness)
    {
        if (witness_.empty())
            witness_ = witness;
        ++failures_;
    }
    bool ok() const { return failures_ == 0; }
    std::string witness() const
    {
        if (failures_ <= 1)
            return witness_;
        return witness_ + " (+" + std::to_string(failures_ - 1) + " more)";
    }

private:
    std::string witness_;
    int failures_ = 0;
};

CheckResult finish(std::string id, CheckClass klass, const CartanData& cd, int node,
                   std::optional<std::vector<int>> w, const Tally& t)
{
    CheckResult r;
    r.check_id = std::move(id);
    r.klass = klass;
    r.type = cd.name();
    r.rank = cd.rank;
    r.node = node;
    r.w = std::move(w);
    if (!t.ok())
        r.status = CheckStatus::fail;
    else
        r.status = klass == CheckClass::theorem ? CheckStatus::pass : CheckStatus::evidence_pass;
    r.witness = t.witness();
    return r;
}

std::string wtext(const WeylElement& w) { return "w=[" + word_to_string(w.word()) + "]"; }

} // namespace

std::vector<WeylElement> sample_weyl(const CartanData& cd, int extra, std::uint64_t seed)
{
    std::vector<WeylElement> out{identity_element(cd)};
    for (int i = 1; i <= cd.rank; ++i)
        out.push_back(simple_reflection(cd, i));
    const WeylElement w0 = longest_element(cd);
    out.push_back(w0);
    auto seen = [&out](const WeylElement& w) {
        return std::find(out.begin(), out.end(), w) != out.end();
    };
    Rng rng(seed ^ fnv1a(cd.name()));
    const int max_len = w0.length();
    int added = 0;
    for (int attempt = 0; added < extra && attempt < 100 * (extra + 1); ++attempt) {
        std::vector<int> word;
        const int len = uniform(rng, 1, max_len);
        for (int k = 0; k < len; ++k)
            word.push_back(uniform(rng, 1, cd.rank));
        WeylElement w = reduce_word(cd, word);
        if (!seen(w)) {
            out.push_back(std::move(w));
            ++added;
        }
    }
    return out;
}

bool extremal_property_proved(const CartanData& cd, const WeylElement& w)
{
    return w.length() <= 1 || w == longest_element(cd);
}

CheckResult check_extremal_property(const BraidAction& braid, const QCharacter& qc,
                                    const WeylElement& w)
{
    const CartanData& cd = braid.cartan();
    Tally t;
    const YMonomial top = braid.T_w(w, qc.highest);
    for (const auto& [m, mult] : qc.poly.terms()) {
        const auto e = factor_in_Aw(braid, m, top, w);
        if (!e)
            t.fail(to_text(m) + " outside the A^w lattice");
        else if (!all_nonpositive(*e))
            t.fail(to_text(m) + " = T_w(m) * " + to_text(*e, "A^w"));
    }
    const CheckClass k =
        extremal_property_proved(cd, w) ? CheckClass::theorem : CheckClass::conjecture;
    return finish("extremal.property", k, cd, qc.meta.node, w.word(), t);
}

CheckResult check_weak_property(const BraidAction& braid, const QCharacter& qc,
                                const std::vector<WeylElement>& ws)
{
    Tally t;
    for (const WeylElement& w : ws) {
        const YMonomial top = braid.T_w(w, qc.highest);
        for (const auto& [m, mult] : qc.poly.terms())
            if (!factor_in_Aw(braid, m, top, w))
                t.fail(wtext(w) + " " + to_text(m));
    }
    return finish("extremal.weak", CheckClass::theorem, braid.cartan(), qc.meta.node,
                  std::nullopt, t);
}

CheckResult check_extremal_multiplicity(const BraidAction& braid, const QCharacter& qc,
                                        const std::vector<WeylElement>& ws)
{
    Tally t;
    for (const WeylElement& w : ws) {
        const YMonomial top = braid.T_w(w, qc.highest);
        const auto c = qc.poly.coefficient(top);
        if (c != 1)
            t.fail(wtext(w) + " " + to_text(top) + " has multiplicity " + std::to_string(c));
    }
    return finish("extremal.multiplicity", CheckClass::theorem, braid.cartan(), qc.meta.node,
                  std::nullopt, t);
}

CheckResult check_polynomiality(const BraidAction& braid, const QCharacter& qc,
                                const WeylElement& w)
{
    const CartanData& cd = braid.cartan();
    Tally t;
    const PolynomialityVerdict v = polynomiality_verdict(braid, w, qc);
    for (const YMonomial& m : v.unfactorable)
        t.fail(to_text(m) + " outside the A^w lattice");
    for (const EigenEntry& e : v.witnesses)
        t.fail("i=" + std::to_string(e.node) + " " + to_text(e.monomial) + " has " +
               std::to_string(e.value.poles.size()) + " poles");
    const CheckClass k =
        extremal_property_proved(cd, w) ? CheckClass::theorem : CheckClass::conjecture;
    return finish("xseries.polynomiality", k, cd, qc.meta.node, w.word(), t);
}

namespace {

using Job = std::function<std::vector<CheckResult>()>;

struct Check {
    std::string id;
    // Appends jobs for one type.
    std::function<void(const TypeContext&, const SuiteConfig&, std::vector<Job>&)> plan;
};

// One result per type from a Tally-producing body.
template <class Body>
Check per_type(std::string id, Body body, bool needs_full_weyl = false)
{
    return {id, [id, body, needs_full_weyl](const TypeContext& ctx, const SuiteConfig& cfg,
                                             std::vector<Job>& jobs) {
                if (needs_full_weyl && !ctx.full_weyl)
                    return;
                jobs.push_back([id, body, &ctx, &cfg] {
                    Rng rng(cfg.seed ^ fnv1a(id + ctx.cd->name()));
                    Tally t;
                    body(ctx, cfg, rng, t);
                    return std::vector<CheckResult>{
                        finish(id, CheckClass::theorem, *ctx.cd, 0, std::nullopt, t)};
                });
            }};
}

// One result per fundamental representation.
template <class Body>
Check per_node(std::string id, Body body)
{
    return {id, [id, body](const TypeContext& ctx, const SuiteConfig& cfg, std::vector<Job>& jobs) {
                for (const QCharacter& qc : ctx.fundamentals)
                    jobs.push_back([id, body, &ctx, &cfg, &qc] {
                        Rng rng(cfg.seed ^ fnv1a(id + ctx.cd->name()) ^
                                static_cast<std::uint64_t>(qc.meta.node));
                        Tally t;
                        body(ctx, cfg, qc, rng, t);
                        return std::vector<CheckResult>{finish(id, CheckClass::theorem, *ctx.cd,
                                                               qc.meta.node, std::nullopt, t)};
                    });
            }};
}

void cartan_datum(const TypeContext& ctx, const SuiteConfig&, Rng&, Tally& t)
{
    const CartanData& cd = *ctx.cd;
    int g = 0;
    for (int i = 1; i <= cd.rank; ++i) {
        g = std::gcd(g, cd.d(i));
        if (cd.c(i, i) != 2)
            t.fail("C_ii != 2 at " + std::to_string(i));
        for (int j = 1; j <= cd.rank; ++j) {
            if (i != j && cd.c(i, j) > 0)
                t.fail("positive off-diagonal entry");
            if (cd.d(i) * cd.c(i, j) != cd.d(j) * cd.c(j, i))
                t.fail("D C not symmetric");
        }
        const int b = cd.bar(i);
        if (cd.bar(b) != i)
            t.fail("bar is not an involution");
        const Weight img = weyl_act(longest_element(cd), cd.alpha(i));
        if (img != Weight(-cd.alpha(b)))
            t.fail("w0(alpha_" + std::to_string(i) + ") != -alpha_bar");
    }
    if (g != 1)
        t.fail("symmetrizers not coprime");
}

void coxeter_relations(const TypeContext& ctx, const SuiteConfig&, Rng&, Tally& t)
{
    const CartanData& cd = *ctx.cd;
    const MatrixX<int> id = MatrixX<int>::Identity(cd.rank, cd.rank);
    for (int i = 1; i <= cd.rank; ++i)
        for (int j = i + 1; j <= cd.rank; ++j) {
            const MatrixX<int> st = reflection_matrix(cd, i) * reflection_matrix(cd, j);
            const int m = coxeter_exponent(cd, i, j);
            MatrixX<int> p = id;
            for (int k = 1; k <= m; ++k) {
                p = p * st;
                if ((p == id) != (k == m))
                    t.fail("(s" + std::to_string(i) + " s" + std::to_string(j) + ") has order != " +
                           std::to_string(m));
            }
        }
}

void length_parity(const TypeContext& ctx, const SuiteConfig&, Rng&, Tally& t)
{
    const CartanData& cd = *ctx.cd;
    if (cd.rank > 3)
        return;
    for (const WeylElement& w : ctx.sweep)
        for (int i = 1; i <= cd.rank; ++i) {
            std::vector<int> word = w.word();
            word.push_back(i);
            const int l = reduce_word(cd, word).length();
            const bool up = is_nonnegative_combination(cd, weyl_act(w, cd.alpha(i)));
            if (l != w.length() + (up ? 1 : -1))
                t.fail(wtext(w) + " i=" + std::to_string(i));
        }
}

void stabilizer_coset(const TypeContext& ctx, const SuiteConfig&, Rng&, Tally& t)
{
    const CartanData& cd = *ctx.cd;
    for (int i = 1; i <= cd.rank; ++i) {
        std::map<std::vector<int>, const WeylElement*> first;
        for (const WeylElement& w : ctx.sweep) {
            const Weight img = weyl_act(w, cd.omega(i));
            const std::vector<int> key(img.data(), img.data() + img.size());
            auto [it, inserted] = first.emplace(key, &w);
            if (inserted)
                continue;
            const WeylElement u = compose(cd, inverse(cd, *it->second), w);
            if (weyl_act(u, cd.omega(i)) != cd.omega(i))
                t.fail(wtext(w) + " i=" + std::to_string(i));
        }
    }
}

void form_invariance(const TypeContext& ctx, const SuiteConfig&, Rng& rng, Tally& t)
{
    const CartanData& cd = *ctx.cd;
    for (int i = 1; i <= cd.rank; ++i)
        for (int j = 1; j <= cd.rank; ++j)
            if (invariant_form(cd, cd.alpha(i), cd.omega(j)) != Rational(i == j ? cd.d(j) : 0))
                t.fail("(alpha_i, omega_j) != d_j delta_ij");
    for (int k = 0; k < 20; ++k) {
        const Weight a = random_weight(rng, cd.rank);
        const Weight b = random_weight(rng, cd.rank);
        const Rational f = invariant_form(cd, a, b);
        if (f != invariant_form(cd, b, a))
            t.fail("asymmetric at " + weight_text(a) + "," + weight_text(b));
        for (const WeylElement& w : ctx.sweep)
            if (invariant_form(cd, weyl_act(w, a), weyl_act(w, b)) != f)
                t.fail(wtext(w) + " breaks invariance at " + weight_text(a) + "," +
                       weight_text(b));
    }
}

void shift_equivariance(const TypeContext& ctx, const SuiteConfig&, Rng&, Tally& t)
{
    const CartanData& cd = *ctx.cd;
    for (int i = 1; i <= cd.rank; ++i)
        for (int r = -4; r <= 4; ++r)
            for (int s = -5; s <= 5; ++s)
                if (make_A(cd, i, r + s) != make_A(cd, i, r).shifted(s))
                    t.fail("A_{" + std::to_string(i) + "," + std::to_string(r) + "} shift " +
                           std::to_string(s));
}

void factor_roundtrip(const TypeContext& ctx, const SuiteConfig&, Rng& rng, Tally& t)
{
    const CartanData& cd = *ctx.cd;
    for (int n = 0; n < 50; ++n) {
        const YMonomial m = random_monomial(rng, cd);
        for (int i = 1; i <= cd.rank; ++i)
            for (int k = -3; k <= 3; ++k) {
                const int r = uniform(rng, -6, 6);
                const auto e = factor_in_A(cd, m * make_A(cd, i, r).pow(k), m);
                if (!e || *e != RootExponents::variable(i, r, k))
                    t.fail(to_text(m) + " * A_{" + std::to_string(i) + "," + std::to_string(r) +
                           "}^" + std::to_string(k));
            }
    }
}

void weight_consistency(const TypeContext& ctx, const SuiteConfig&, Rng& rng, Tally& t)
{
    const CartanData& cd = *ctx.cd;
    for (int n = 0; n < 50; ++n) {
        const YMonomial anchor = random_monomial(rng, cd);
        std::vector<Factor> ef;
        const int count = uniform(rng, 1, 4);
        for (int k = 0; k < count; ++k)
            ef.push_back({uniform(rng, 1, cd.rank), uniform(rng, -5, 5), uniform(rng, -2, 2)});
        const RootExponents e(std::move(ef));
        const YMonomial m = anchor * expand_roots(cd, e);
        const auto got = factor_in_A(cd, m, anchor);
        if (!got || *got != e) {
            t.fail("factorization of " + to_text(m));
            continue;
        }
        Weight expect = Weight::Zero(cd.rank);
        for (const Factor& f : e.factors())
            expect += f.exp * cd.alpha(f.node);
        if (weight_of(cd, m / anchor) != expect)
            t.fail("weight of " + to_text(m / anchor));
    }
    for (const QCharacter& qc : ctx.fundamentals)
        for (const auto& [m, c] : qc.poly.terms()) {
            const auto e = factor_in_A(cd, m, qc.highest);
            if (!e) {
                t.fail(to_text(m) + " not below " + to_text(qc.highest));
                continue;
            }
            Weight expect = Weight::Zero(cd.rank);
            for (const Factor& f : e->factors())
                expect += f.exp * cd.alpha(f.node);
            if (weight_of(cd, m / qc.highest) != expect)
                t.fail("weight of " + to_text(m));
        }
}

void braid_relations(const TypeContext& ctx, const SuiteConfig&, Rng& rng, Tally& t)
{
    const CartanData& cd = *ctx.cd;
    const BraidAction& b = ctx.braid;
    for (int i = 1; i <= cd.rank; ++i)
        for (int j = i + 1; j <= cd.rank; ++j) {
            const int m = coxeter_exponent(cd, i, j);
            const auto lhs = alternating(i, j, m);
            const auto rhs = alternating(j, i, m);
            for (int k = 1; k <= cd.rank; ++k)
                for (int r = -4; r <= 4; ++r) {
                    const YMonomial y = YMonomial::variable(k, r);
                    if (b.T_word(lhs, y) != b.T_word(rhs, y))
                        t.fail("pair (" + std::to_string(i) + "," + std::to_string(j) + ") on " +
                               to_text(y));
                }
        }
    for (int n = 0; n < 20; ++n) {
        const YMonomial m = random_monomial(rng, cd);
        for (int i = 1; i <= cd.rank; ++i)
            if (b.T_inv(i, b.T(i, m)) != m || b.T(i, b.T_inv(i, m)) != m)
                t.fail("T_" + std::to_string(i) + " inverse on " + to_text(m));
    }
}

void weight_intertwining(const TypeContext& ctx, const SuiteConfig&, Rng& rng, Tally& t)
{
    const CartanData& cd = *ctx.cd;
    for (int n = 0; n < 20; ++n) {
        const YMonomial m = random_monomial(rng, cd);
        const Weight wt = weight_of(cd, m);
        for (const WeylElement& w : ctx.sweep)
            if (weight_of(cd, ctx.braid.T_w(w, m)) != weyl_act(w, wt))
                t.fail(wtext(w) + " on " + to_text(m));
    }
}

void multiplicative(const TypeContext& ctx, const SuiteConfig&, Rng& rng, Tally& t)
{
    const CartanData& cd = *ctx.cd;
    for (int n = 0; n < 20; ++n) {
        const YMonomial a = random_monomial(rng, cd);
        const YMonomial b = random_monomial(rng, cd);
        for (const WeylElement& w : ctx.sweep)
            if (ctx.braid.T_w(w, a * b) != ctx.braid.T_w(w, a) * ctx.braid.T_w(w, b))
                t.fail(wtext(w) + " on " + to_text(a) + " * " + to_text(b));
    }
}

void well_defined(const TypeContext& ctx, const SuiteConfig&, Rng&, Tally& t)
{
    const CartanData& cd = *ctx.cd;
    for (int i = 1; i <= cd.rank; ++i) {
        std::map<std::vector<int>, YMonomial> seen;
        for (const WeylElement& w : ctx.sweep) {
            const Weight img = weyl_act(w, cd.omega(i));
            const std::vector<int> key(img.data(), img.data() + img.size());
            const YMonomial y = ctx.braid.T_w(w, YMonomial::variable(i, 0));
            auto [it, inserted] = seen.emplace(key, y);
            if (!inserted && it->second != y)
                t.fail(wtext(w) + " i=" + std::to_string(i) + " gives " + to_text(y) + " vs " +
                       to_text(it->second));
        }
    }
}

void root_closure(const TypeContext& ctx, const SuiteConfig&, Rng&, Tally& t)
{
    const CartanData& cd = *ctx.cd;
    for (const WeylElement& w : ctx.sweep)
        for (int i = 1; i <= cd.rank; ++i)
            for (int r = -2; r <= 2; ++r) {
                const TwistedRoot a = twisted_root(ctx.braid, w, i, r);
                if (!factor_in_A(cd, a.value, YMonomial{}))
                    t.fail(wtext(w) + " A^w_{" + std::to_string(i) + "," + std::to_string(r) +
                           "} leaves the A lattice");
                if (weight_of(cd, a.value) != weyl_act(w, cd.alpha(i)))
                    t.fail(wtext(w) + " weight of A^w_{" + std::to_string(i) + "}");
            }
}

void longest_element_law(const TypeContext& ctx, const SuiteConfig&, Rng&, Tally& t)
{
    const CartanData& cd = *ctx.cd;
    const WeylElement w0 = longest_element(cd);
    const int h = cd.dual_coxeter * cd.lacing;
    for (int j = 1; j <= cd.rank; ++j)
        for (int r = -2; r <= 2; ++r) {
            const YMonomial got = ctx.braid.T_w(w0, YMonomial::variable(j, r));
            const YMonomial want = YMonomial::variable(cd.bar(j), r + h, -1);
            if (got != want)
                t.fail("T_w0(Y_{" + std::to_string(j) + "," + std::to_string(r) + "}) = " +
                       to_text(got));
        }
}

void qcharacter_invariants(const TypeContext& ctx, const SuiteConfig&, const QCharacter& qc, Rng&,
                           Tally& t)
{
    const CartanData& cd = *ctx.cd;
    if (qc.poly.coefficient(qc.highest) != 1)
        t.fail("highest monomial multiplicity " + std::to_string(qc.poly.coefficient(qc.highest)));
    std::map<std::vector<int>, std::int64_t> weights;
    for (const auto& [m, c] : qc.poly.terms()) {
        if (c <= 0)
            t.fail(to_text(m) + " has multiplicity " + std::to_string(c));
        if (m != qc.highest && is_dominant(m))
            t.fail("second dominant monomial " + to_text(m));
        const auto e = factor_in_A(cd, m, qc.highest);
        if (!e || !all_nonpositive(*e))
            t.fail(to_text(m) + " not in highest * Z[A^{-1}]");
        const Weight wt = weight_of(cd, m);
        weights[std::vector<int>(wt.data(), wt.data() + wt.size())] += c;
    }
    for (int i = 1; i <= cd.rank; ++i)
        for (const auto& [key, c] : weights) {
            Weight wt(cd.rank);
            for (int k = 0; k < cd.rank; ++k)
                wt(k) = key[static_cast<std::size_t>(k)];
            const Weight img = reflection_matrix(cd, i) * wt;
            auto it = weights.find(std::vector<int>(img.data(), img.data() + img.size()));
            if (it == weights.end() || it->second != c)
                t.fail("character not s_" + std::to_string(i) + "-invariant at " + weight_text(wt));
        }
}

void fm_shift(const TypeContext& ctx, const SuiteConfig&, const QCharacter& qc, Rng&, Tally& t)
{
    for (int r : {-3, 2, 7}) {
        const QCharacter moved = fm_fundamental(*ctx.cd, qc.meta.node, r);
        if (moved.poly != qc.poly.shifted(r) || moved.highest != qc.highest.shifted(r))
            t.fail("shift by " + std::to_string(r));
    }
}

void fm_decomposition(const TypeContext& ctx, const SuiteConfig&, const QCharacter& qc, Rng&,
                      Tally& t)
{
    for (int k = 1; k <= ctx.cd->rank; ++k) {
        const Decomposition d = decompose_k(*ctx.cd, qc.poly, k);
        if (!d.ok)
            t.fail("k=" + std::to_string(k) + ": " + d.reason + " at " +
                   (d.residual ? to_text(*d.residual) : std::string("?")));
    }
}

void lweight_restriction(const TypeContext& ctx, const SuiteConfig&, Rng&, Tally& t)
{
    const CartanData& cd = *ctx.cd;
    for (int i = 1; i <= cd.rank; ++i)
        for (int j = 1; j <= cd.rank; ++j)
            for (int r = -4; r <= 4; ++r) {
                const YMonomial y = YMonomial::variable(j, r);
                if (!(ctx.ext.T_prime(i, embed_Y(cd, y)) == embed_Y(cd, ctx.braid.T(i, y))))
                    t.fail("T'_" + std::to_string(i) + " on " + to_text(y));
            }
}

void lweight_braid(const TypeContext& ctx, const SuiteConfig&, Rng&, Tally& t)
{
    const CartanData& cd = *ctx.cd;
    for (int i = 1; i <= cd.rank; ++i)
        for (int j = i + 1; j <= cd.rank; ++j) {
            const int m = coxeter_exponent(cd, i, j);
            const auto lhs = alternating(i, j, m);
            const auto rhs = alternating(j, i, m);
            for (int k = 1; k <= cd.rank; ++k) {
                for (int r = -4; r <= 4; ++r) {
                    const PsiMonomial p = PsiMonomial::variable(cd.rank, k, r);
                    if (!(ctx.ext.T_prime_word(lhs, p) == ctx.ext.T_prime_word(rhs, p)))
                        t.fail("pair (" + std::to_string(i) + "," + std::to_string(j) +
                               ") on " + to_text(p));
                }
                const PsiMonomial om = PsiMonomial::weight(cast_exact<Rational>(cd.omega(k)));
                if (!(ctx.ext.T_prime_word(lhs, om) == ctx.ext.T_prime_word(rhs, om)))
                    t.fail("pair (" + std::to_string(i) + "," + std::to_string(j) +
                           ") on [omega_" + std::to_string(k) + "]");
            }
        }
}

template <class Rule>
void sigma_family(const TypeContext& ctx, Tally& t, Rule rule)
{
    const CartanData& cd = *ctx.cd;
    const WeylElement w0 = longest_element(cd);
    const int h = cd.lacing * cd.dual_coxeter;
    for (const WeylElement& w : ctx.sweep) {
        const WeylElement ww0 = compose(cd, w, w0);
        for (int i = 1; i <= cd.rank; ++i)
            for (int r : {0, 1, -3}) {
                const PsiMonomial p = psi_extremal(ctx.braid, ctx.ext, w, i, r);
                const PsiMonomial q = psi_extremal(ctx.braid, ctx.ext, ww0, cd.bar(i), -r + h);
                if (!rule(p, q))
                    t.fail(wtext(w) + " i=" + std::to_string(i) + " r=" + std::to_string(r));
            }
    }
}

void sigma_stability(const TypeContext& ctx, const SuiteConfig&, Rng&, Tally& t)
{
    sigma_family(ctx, t, [](const PsiMonomial& p, const PsiMonomial& q) { return sigma(p) == q; });
}

void omega_image(const TypeContext& ctx, const SuiteConfig&, Rng&, Tally& t)
{
    sigma_family(ctx, t,
                 [](const PsiMonomial& p, const PsiMonomial& q) { return Omega(p) == q.inverse(); });
}

void psi_routes(const TypeContext& ctx, const SuiteConfig&, Rng&, Tally& t)
{
    const CartanData& cd = *ctx.cd;
    for (const WeylElement& w : ctx.sweep)
        for (int i = 1; i <= cd.rank; ++i)
            for (int r : {0, 2}) {
                try {
                    const PsiMonomial p = psi_extremal(ctx.braid, ctx.ext, w, i, r);
                    if (w.length() == 1 && w.word()[0] == i &&
                        !(p == tilde_psi(cd, i, r - 2 * cd.d(i))))
                        t.fail(wtext(w) + " i=" + std::to_string(i) + " differs from Psi~");
                } catch (const LweightError& e) {
                    t.fail(e.what());
                }
            }
}

void x_routes(const TypeContext& ctx, const SuiteConfig&, Rng&, Tally& t)
{
    const CartanData& cd = *ctx.cd;
    for (const WeylElement& w : ctx.sweep)
        for (int i = 1; i <= cd.rank; ++i) {
            try {
                const XFactorization f = x_factorization(ctx.braid, w, i);
                if (w.is_identity() && f.exps != LaurentMonomial::variable(i, 0))
                    t.fail("identity factorization for i=" + std::to_string(i));
                if (w.length() == 1 && w.word()[0] == i) {
                    const LaurentMonomial want = LaurentMonomial::variable(i, 0) /
                                                 u_factorization(cd, i).shifted(cd.d(i));
                    if (f.exps != want)
                        t.fail("s_i formula for i=" + std::to_string(i));
                }
            } catch (const XSeriesError& e) {
                t.fail(e.what());
            }
        }
}

void extremal_normalization(const TypeContext& ctx, const SuiteConfig&, const QCharacter& qc,
                            Rng&, Tally& t)
{
    for (const WeylElement& w : ctx.sweep) {
        const YMonomial top = ctx.braid.T_w(w, qc.highest);
        for (int i = 1; i <= ctx.cd->rank; ++i)
            if (!eigenvalue_on(ctx.braid, w, i, top, qc.highest).is_one())
                t.fail(wtext(w) + " i=" + std::to_string(i));
    }
}

void degree_law(const TypeContext& ctx, const SuiteConfig&, const QCharacter& qc, Rng&, Tally& t)
{
    for (const WeylElement& w : ctx.sweep)
        for (const auto& [m, c] : qc.poly.terms())
            for (int i = 1; i <= ctx.cd->rank; ++i) {
                const RootSeries s = eigenvalue_on(ctx.braid, w, i, m, qc.highest);
                if (Rational(s.degree()) != twisted_weight_gap(ctx.braid, w, i, m, qc.highest))
                    t.fail(wtext(w) + " i=" + std::to_string(i) + " " + to_text(m));
            }
}

void oracle_consistency(const TypeContext& ctx, const SuiteConfig& cfg, Rng& rng, Tally& t)
{
    const CartanData& cd = *ctx.cd;
    const PairingOracle oracle(ctx.cd, cfg.q, cfg.order);
    const WeylElement e = identity_element(cd);
    std::vector<std::pair<const QCharacter*, YMonomial>> pool;
    for (const QCharacter& qc : ctx.fundamentals)
        for (const auto& [m, c] : qc.poly.terms())
            pool.emplace_back(&qc, m);
    for (int n = 0; n < cfg.oracle_pairs && !pool.empty(); ++n) {
        const auto& [qc, m] = pool[static_cast<std::size_t>(
            uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
        const int i = uniform(rng, 1, cd.rank);
        const TruncatedSeries ratio =
            oracle.pairing(i, m) * oracle.pairing(i, qc->highest).inverse();
        const RootSeries s = eigenvalue_on(ctx.braid, e, i, m, qc->highest);
        if (!(ratio == s.expand(cfg.q, cfg.order)))
            t.fail("i=" + std::to_string(i) + " " + to_text(m));
    }
}

std::vector<Check> registry()
{
    std::vector<Check> checks;
    checks.push_back(per_type("cartan.datum", cartan_datum));
    checks.push_back(per_type("cartan.coxeter_relations", coxeter_relations));
    checks.push_back(per_type("cartan.length_parity", length_parity, true));
    checks.push_back(per_type("cartan.stabilizer_coset", stabilizer_coset, true));
    checks.push_back(per_type("cartan.form_invariance", form_invariance));
    checks.push_back(per_type("yring.shift_equivariance", shift_equivariance));
    checks.push_back(per_type("yring.factor_roundtrip", factor_roundtrip));
    checks.push_back(per_type("yring.weight_consistency", weight_consistency));
    checks.push_back(per_type("braid.relations", braid_relations));
    checks.push_back(per_type("braid.weight_intertwining", weight_intertwining));
    checks.push_back(per_type("braid.multiplicative", multiplicative));
    checks.push_back(per_type("braid.well_defined", well_defined, true));
    checks.push_back(per_type("braid.root_closure", root_closure));
    checks.push_back(per_type("braid.longest_element", longest_element_law));
    checks.push_back(per_node("fm.qcharacter_invariants", qcharacter_invariants));
    checks.push_back(per_node("fm.shift_equivariance", fm_shift));
    checks.push_back(per_node("fm.decomposition", fm_decomposition));
    checks.push_back({"extremal.multiplicity",
                      [](const TypeContext& ctx, const SuiteConfig&, std::vector<Job>& jobs) {
                          for (const QCharacter& qc : ctx.fundamentals)
                              jobs.push_back([&ctx, &qc] {
                                  return std::vector<CheckResult>{
                                      check_extremal_multiplicity(ctx.braid, qc, ctx.sweep)};
                              });
                      }});
    checks.push_back(per_type("lweight.restriction", lweight_restriction));
    checks.push_back(per_type("lweight.braid_relations", lweight_braid));
    checks.push_back(per_type("lweight.sigma_stability", sigma_stability));
    checks.push_back(per_type("lweight.omega_image", omega_image));
    checks.push_back(per_type("lweight.route_agreement", psi_routes));
    checks.push_back(per_type("xseries.route_agreement", x_routes));
    checks.push_back(per_node("xseries.extremal_normalization", extremal_normalization));
    checks.push_back(per_type("xseries.oracle_consistency", oracle_consistency));
    checks.push_back(per_node("xseries.degree_law", degree_law));
    checks.push_back({"extremal.weak",
                      [](const TypeContext& ctx, const SuiteConfig&, std::vector<Job>& jobs) {
                          for (const QCharacter& qc : ctx.fundamentals)
                              jobs.push_back([&ctx, &qc] {
                                  return std::vector<CheckResult>{
                                      check_weak_property(ctx.braid, qc, ctx.sweep)};
                              });
                      }});
    checks.push_back({"extremal.property",
                      [](const TypeContext& ctx, const SuiteConfig&, std::vector<Job>& jobs) {
                          for (const QCharacter& qc : ctx.fundamentals)
                              jobs.push_back([&ctx, &qc] {
                                  std::vector<CheckResult> out;
                                  for (const WeylElement& w : ctx.sweep)
                                      out.push_back(check_extremal_property(ctx.braid, qc, w));
                                  return out;
                              });
                      }});
    checks.push_back({"xseries.polynomiality",
                      [](const TypeContext& ctx, const SuiteConfig&, std::vector<Job>& jobs) {
                          for (const QCharacter& qc : ctx.fundamentals)
                              jobs.push_back([&ctx, &qc] {
                                  std::vector<CheckResult> out;
                                  for (const WeylElement& w : ctx.sweep)
                                      out.push_back(check_polynomiality(ctx.braid, qc, w));
                                  return out;
                              });
                      }});
    return checks;
}

// Runs jobs on a bounded pool; results keep job order.
std::vector<std::vector<CheckResult>> run_jobs(const std::vector<Job>& jobs,
                                               const std::vector<std::string>& ids, int workers)
{
    std::vector<std::vector<CheckResult>> out(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < jobs.size(); k = next++) {
            const auto start = std::chrono::steady_clock::now();
            try {
                out[k] = jobs[k]();
            } catch (const std::exception& e) {
                CheckResult r;
                r.check_id = ids[k];
                r.status = CheckStatus::fail;
                r.witness = std::string("exception: ") + e.what();
                out[k] = {r};
            }
            const double ms = std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
            for (CheckResult& r : out[k])
                r.elapsed_ms = ms / static_cast<double>(std::max<std::size_t>(1, out[k].size()));
        }
    };
    const int n = std::max(1, std::min<int>(workers, static_cast<int>(jobs.size())));
    std::vector<std::thread> pool;
    for (int k = 1; k < n; ++k)
        pool.emplace_back(worker);
    worker();
    for (std::thread& th : pool)
        th.join();
    return out;
}

} // namespace

SuiteConfig SuiteConfig::defaults()
{
    SuiteConfig c;
    c.types = {"A1", "A2", "A3", "B2", "C2", "G2", "B3", "C3", "D4"};
    c.full_weyl_types = {"A1", "A2", "A3", "B2", "C2", "G2"};
    return c;
}

std::vector<std::string> suite_check_ids()
{
    std::vector<std::string> ids;
    for (const Check& c : registry())
        ids.push_back(c.id);
    return ids;
}

std::vector<CheckResult> run_suite(const SuiteConfig& config)
{
    std::vector<CartanPtr> types;
    for (const std::string& label : config.types)
        types.push_back(build_cartan(label));

    QCharacterCache local;
    QCharacterCache& cache = config.cache ? *config.cache : local;

    std::vector<std::unique_ptr<TypeContext>> contexts;
    for (const CartanPtr& cd : types) {
        const bool full = std::find(config.full_weyl_types.begin(), config.full_weyl_types.end(),
                                    cd->name()) != config.full_weyl_types.end();
        std::vector<WeylElement> sweep =
            full ? enumerate_weyl(*cd) : sample_weyl(*cd, config.sample_extra, config.seed);
        std::vector<QCharacter> fund;
        for (int i = 1; i <= cd->rank; ++i)
            fund.push_back(cache.get(*cd, i));
        contexts.push_back(
            std::make_unique<TypeContext>(cd, full, std::move(sweep), std::move(fund)));
    }

    std::vector<Job> jobs;
    std::vector<std::string> ids;
    for (const Check& check : registry())
        for (const auto& ctx : contexts) {
            const std::size_t before = jobs.size();
            check.plan(*ctx, config, jobs);
            ids.resize(jobs.size(), check.id);
            (void)before;
        }

    std::vector<CheckResult> results;
    for (auto& batch : run_jobs(jobs, ids, config.jobs))
        for (CheckResult& r : batch)
            results.push_back(std::move(r));
    return results;
}

SuiteSummary summarize(const std::vector<CheckResult>& results)
{
    SuiteSummary s;
    s.total = static_cast<int>(results.size());
    for (const CheckResult& r : results)
        if (r.failed())
            ++(r.klass == CheckClass::theorem ? s.theorem_failures : s.conjecture_failures);
    return s;
}

std::string summary_table(const std::vector<CheckResult>& results)
{
    struct Row {
        std::string klass;
        int pass = 0;
        int fail = 0;
        double ms = 0;
    };
    std::vector<std::string> order;
    std::map<std::string, Row> rows;
    for (const CheckResult& r : results) {
        const std::string key = r.check_id + "|" + to_string(r.klass);
        if (!rows.count(key))
            order.push_back(key);
        Row& row = rows[key];
        row.klass = to_string(r.klass);
        ++(r.failed() ? row.fail : row.pass);
        row.ms += r.elapsed_ms;
    }
    std::ostringstream os;
    os << std::left << std::setw(34) << "check" << std::setw(12) << "class" << std::right
       << std::setw(7) << "pass" << std::setw(7) << "fail" << std::setw(12) << "ms" << '\n';
    for (const std::string& key : order) {
        const Row& row = rows[key];
        os << std::left << std::setw(34) << key.substr(0, key.find('|')) << std::setw(12)
           << row.klass << std::right << std::setw(7) << row.pass << std::setw(7) << row.fail
           << std::setw(12) << std::fixed << std::setprecision(1) << row.ms << '\n';
    }
    const SuiteSummary s = summarize(results);
    os << "total " << s.total << ", theorem failures " << s.theorem_failures
       << ", conjecture failures " << s.conjecture_failures << '\n';
    return os.str();
}

} // namespace qchar

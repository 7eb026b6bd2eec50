// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "qchar/verify.hpp"

using namespace qchar;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

YMonomial Y(int i, int r, int e = 1) { return LaurentMonomial::variable(i, r, e); }

YMonomial mono(const CartanData& cd, const std::string& text) { return parse_monomial(cd, text); }

YPolynomial sum(const std::vector<YMonomial>& ms)
{
    YPolynomial p;
    for (const YMonomial& m : ms)
        p.add(m, 1);
    return p;
}

// Product of (A^w_{i,r})^{-1} over the listed (i, r).
YMonomial down(const BraidAction& b, const WeylElement& w, std::vector<std::pair<int, int>> ir)
{
    YMonomial m;
    for (auto [i, r] : ir)
        m *= twisted_root(b, w, i, r).value.inverse();
    return m;
}

Outcome sl3_example()
{
    Outcome o;
    const CartanPtr a2 = build_cartan("A2");
    const BraidAction b(a2);
    const QCharacter q1 = fm_fundamental(*a2, 1, 0);
    const QCharacter q2 = fm_fundamental(*a2, 2, 0);
    o.require(q1.poly == sum({Y(1, 0), mono(*a2, "Y:1,2^-1*Y:2,1"), Y(2, 3, -1)}), "chi(Y1)");
    o.require(q2.poly == sum({Y(2, 0), mono(*a2, "Y:2,2^-1*Y:1,1"), Y(1, 3, -1)}), "chi(Y2)");

    const WeylElement w = simple_reflection(*a2, 1);
    const YMonomial t1 = b.T_w(w, Y(1, 0));
    const YMonomial t2 = b.T_w(w, Y(2, 0));
    o.require(t1 == mono(*a2, "Y:1,2^-1*Y:2,1"), "Y_{w(omega_1)}");
    o.require(t2 == Y(2, 0), "Y_{w(omega_2)}");
    o.require(twisted_root(b, w, 1, 0).value == make_A(*a2, 1, 2).inverse(), "A^w_1");
    o.require(twisted_root(b, w, 2, 0).value == make_A(*a2, 2, 0) * make_A(*a2, 1, 1), "A^w_2");
    o.require(q1.poly == sum({t1, t1 * down(b, w, {{1, -1}}), t1 * down(b, w, {{1, 1}, {2, 2}})}),
              "A^w expansion of chi(Y1)");
    o.require(q2.poly == sum({t2, t2 * down(b, w, {{2, 1}}), t2 * down(b, w, {{2, 1}, {1, 0}})}),
              "A^w expansion of chi(Y2)");
    return o;
}

Outcome b2_example()
{
    Outcome o;
    const CartanPtr b2 = build_cartan("B2");
    const BraidAction b(b2);
    const QCharacter q1 = fm_fundamental(*b2, 1, 0);
    const QCharacter q2 = fm_fundamental(*b2, 2, 0);
    o.require(q1.poly.size() == 5 && q1.poly.total() == 5, "chi(Y1) has 5 monomials");
    o.require(q2.poly.size() == 4 && q2.poly.total() == 4, "chi(Y2) has 4 monomials");

    const WeylElement w = reduce_word(*b2, std::vector<int>{1, 2});
    const YMonomial t1 = b.T_w(w, Y(1, 0));
    const YMonomial t2 = b.T_w(w, Y(2, 0));
    o.require(t1 == mono(*b2, "Y:1,4^-1*Y:2,1*Y:2,3"), "Y_{w(omega_1)}");
    o.require(t2 == mono(*b2, "Y:1,5^-1*Y:2,4"), "Y_{w(omega_2)}");
    o.require(twisted_root(b, w, 1, 0).value ==
                  make_A(*b2, 1, 2) * make_A(*b2, 2, 2) * make_A(*b2, 2, 0),
              "A^w_1");
    o.require(twisted_root(b, w, 2, 0).value ==
                  (make_A(*b2, 2, 2) * make_A(*b2, 1, 4)).inverse(),
              "A^w_2");
    o.require(q1.poly == sum({t1, t1 * down(b, w, {{1, 2}, {2, 0}}),
                              t1 * down(b, w, {{1, 2}, {2, 0}, {1, 0}, {2, -2}}),
                              t1 * down(b, w, {{1, 2}}),
                              t1 * down(b, w, {{2, -2}, {1, -2}, {2, -4}})}),
              "A^w expansion of chi(Y1)");
    o.require(q2.poly == sum({t2, t2 * down(b, w, {{1, 3}, {2, 1}}),
                              t2 * down(b, w, {{2, -1}, {1, -1}, {2, -3}}),
                              t2 * down(b, w, {{2, -1}})}),
              "A^w expansion of chi(Y2)");
    return o;
}

// X_{s_i(omega_i)} from the closed formula: X_i(z q_i^2)^{-1} times neighbour
// factors, with keys (j, s) meaning X_j(z q^s).
LaurentMonomial simple_reflection_formula(const CartanData& cd, int i)
{
    std::vector<Factor> f{{i, 2 * cd.d(i), -1}};
    for (int j = 1; j <= cd.rank; ++j) {
        switch (cd.c(i, j)) {
        case -1: f.push_back({j, cd.d(i), 1}); break;
        case -2: f.push_back({j, 2, 1}); f.push_back({j, 0, 1}); break;
        case -3:
            f.push_back({j, 3, 1});
            f.push_back({j, 1, 1});
            f.push_back({j, -1, 1});
            break;
        default: break;
        }
    }
    return LaurentMonomial(f);
}

Outcome xseries_example()
{
    Outcome o;
    const CartanPtr b2 = build_cartan("B2");
    const BraidAction bb(b2);
    const WeylElement s2 = simple_reflection(*b2, 2);
    o.require(x_factorization(bb, s2, 1).exps == LaurentMonomial::variable(1, 0), "B2 X_{s2(omega1)}");
    o.require(x_factorization(bb, s2, 2).exps == LaurentMonomial({{2, 2, -1}, {1, 2, 1}, {1, 0, 1}}),
              "B2 X_{s2(omega2)}");
    for (const std::string label : {"A2", "G2", "B2", "C2"}) {
        const CartanPtr cd = build_cartan(label);
        const BraidAction b(cd);
        for (int i = 1; i <= cd->rank; ++i)
            for (int j = 1; j <= cd->rank; ++j) {
                const auto got = x_factorization(b, simple_reflection(*cd, i), j).exps;
                const auto want =
                    i == j ? simple_reflection_formula(*cd, i) : LaurentMonomial::variable(j, 0);
                o.require(got == want, label + " s_" + std::to_string(i) + " node " +
                                           std::to_string(j) + ": " + to_text(got, "X"));
            }
    }
    return o;
}

Outcome longest_law()
{
    Outcome o;
    for (const std::string label : {"A1", "A2", "A3", "B2", "C2", "G2", "D4"}) {
        const CartanPtr cd = build_cartan(label);
        const BraidAction b(cd);
        const WeylElement w0 = longest_element(*cd);
        for (int j = 1; j <= cd->rank; ++j)
            for (int r = -2; r <= 2; ++r)
                o.require(b.T_w(w0, Y(j, r)) ==
                              Y(cd->bar(j), r + cd->dual_coxeter * cd->lacing, -1),
                          label + " j=" + std::to_string(j) + " r=" + std::to_string(r));
    }
    return o;
}

std::vector<int> alternating(int i, int j, int m)
{
    std::vector<int> w;
    for (int k = 0; k < m; ++k)
        w.push_back(k % 2 ? j : i);
    return w;
}

Outcome braid_relations()
{
    Outcome o;
    for (const std::string& label : SuiteConfig::defaults().types) {
        const CartanPtr cd = build_cartan(label);
        const BraidAction b(cd);
        const ExtendedBraid ext(cd);
        for (int i = 1; i <= cd->rank; ++i)
            for (int j = i + 1; j <= cd->rank; ++j) {
                const int prod = cd->c(i, j) * cd->c(j, i);
                const int m = prod == 0 ? 2 : prod == 1 ? 3 : prod == 2 ? 4 : 6;
                const auto lhs = alternating(i, j, m);
                const auto rhs = alternating(j, i, m);
                const std::string where = label + " (" + std::to_string(i) + "," + std::to_string(j) + ")";
                for (int k = 1; k <= cd->rank; ++k) {
                    for (int r = -6; r <= 6; ++r) {
                        o.require(b.T_word(lhs, Y(k, r)) == b.T_word(rhs, Y(k, r)), "T " + where);
                        const PsiMonomial p = PsiMonomial::variable(cd->rank, k, r);
                        o.require(ext.T_prime_word(lhs, p) == ext.T_prime_word(rhs, p), "T' " + where);
                    }
                    const PsiMonomial om = PsiMonomial::weight(cast_exact<Rational>(cd->omega(k)));
                    o.require(ext.T_prime_word(lhs, om) == ext.T_prime_word(rhs, om),
                              "T' on [omega] " + where);
                }
            }
    }
    return o;
}

std::vector<CheckResult> g_suite;

Outcome theorem_suite()
{
    Outcome o;
    SuiteConfig cfg = SuiteConfig::defaults();
    cfg.jobs = 8;
    g_suite = run_suite(cfg);
    std::map<std::string, int> counted;
    for (const CheckResult& r : g_suite) {
        if (r.klass != CheckClass::theorem)
            continue;
        ++counted[r.check_id];
        o.require(!r.failed(), r.check_id + " " + r.type + " node " + std::to_string(r.node) +
                                   ": " + r.witness);
    }
    // 22 fundamentals in the default sweep
    o.require(counted["extremal.weak"] == 22, "extremal.weak coverage");
    o.require(counted["extremal.multiplicity"] == 22, "extremal.multiplicity coverage");
    int proved = 0;
    for (const std::string& label : SuiteConfig::defaults().types) {
        const CartanPtr cd = build_cartan(label);
        proved += cd->rank * (cd->rank + (cd->rank == 1 ? 1 : 2));
    }
    o.require(counted["extremal.property"] == proved, "extremal.property coverage");
    std::ostringstream os;
    os << summarize(g_suite).total << " results";
    if (o.ok)
        o.note = os.str();
    return o;
}

Outcome conjecture_evidence()
{
    Outcome o;
    const std::vector<std::string> full = SuiteConfig::defaults().full_weyl_types;
    std::map<std::string, std::set<std::pair<int, std::vector<int>>>> seen;
    int evidence = 0;
    for (const CheckResult& r : g_suite) {
        if (r.check_id != "extremal.property" && r.check_id != "xseries.polynomiality")
            continue;
        if (std::find(full.begin(), full.end(), r.type) == full.end())
            continue;
        seen[r.check_id + r.type].insert({r.node, *r.w});
        if (r.failed())
            o.require(false, r.check_id + " " + r.type + " w=[" + word_to_string(*r.w) + "]: " + r.witness);
        evidence += r.klass == CheckClass::conjecture;
    }
    for (const std::string& label : full) {
        const CartanPtr cd = build_cartan(label);
        const std::size_t want = enumerate_weyl(*cd).size() * static_cast<std::size_t>(cd->rank);
        for (const std::string id : {"extremal.property", "xseries.polynomiality"})
            o.require(seen[id + label].size() == want, id + " coverage in " + label);
    }
    if (o.ok)
        o.note = std::to_string(evidence) + " conjecture-class cases";
    return o;
}

Outcome oracle_equivalence()
{
    Outcome o;
    const Rational q(2);
    const int N = 12;
    std::vector<std::tuple<CartanPtr, QCharacter, YMonomial>> pool;
    QCharacterCache cache;
    for (const std::string& label : SuiteConfig::defaults().types) {
        const CartanPtr cd = build_cartan(label);
        for (int i = 1; i <= cd->rank; ++i) {
            const QCharacter qc = cache.get(*cd, i);
            for (const auto& [m, c] : qc.poly.terms())
                pool.emplace_back(cd, qc, m);
        }
    }
    std::mt19937_64 rng(424242);
    std::map<std::string, std::unique_ptr<PairingOracle>> oracles;
    for (int n = 0; n < 200; ++n) {
        const auto& [cd, qc, m] = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
        const int i = std::uniform_int_distribution<int>(1, cd->rank)(rng);
        auto& oracle = oracles[cd->name()];
        if (!oracle)
            oracle = std::make_unique<PairingOracle>(cd, q, N);
        const TruncatedSeries ratio = oracle->pairing(i, m) * oracle->pairing(i, qc.highest).inverse();
        const BraidAction b(cd);
        const RootSeries s = eigenvalue_on(b, identity_element(*cd), i, m, qc.highest);
        o.require(ratio == s.expand(q, N), cd->name() + " i=" + std::to_string(i) + " " + to_text(m));
    }
    if (o.ok)
        o.note = "200 pairs";
    return o;
}

Outcome sigma_omega()
{
    Outcome o;
    for (const std::string label : {"A1", "A2", "A3", "B2", "G2"}) {
        const CartanPtr cd = build_cartan(label);
        const BraidAction b(cd);
        const ExtendedBraid ext(cd);
        const WeylElement w0 = longest_element(*cd);
        const int h = cd->dual_coxeter * cd->lacing;
        for (const WeylElement& w : enumerate_weyl(*cd))
            for (int i = 1; i <= cd->rank; ++i) {
                const std::string where = label + " w=[" + word_to_string(w.word()) + "] i=" + std::to_string(i);
                const PsiMonomial sub = psi_by_substitution(b, w, i, 0);
                o.require(sub == psi_by_braid(ext, w, i, 0), "routes differ " + where);
                const PsiMonomial image = psi_by_braid(ext, compose(*cd, w, w0), cd->bar(i), h);
                o.require(sigma(sub) == image, "sigma " + where);
                o.require(Omega(sub) == image.inverse(), "Omega " + where);
            }
    }
    return o;
}

Outcome degree_law()
{
    Outcome o;
    long cases = 0;
    for (const std::string label : {"A2", "B2"}) {
        const CartanPtr cd = build_cartan(label);
        const BraidAction b(cd);
        for (int node = 1; node <= cd->rank; ++node) {
            const QCharacter qc = fm_fundamental(*cd, node, 0);
            for (const WeylElement& w : enumerate_weyl(*cd))
                for (const auto& [m, c] : qc.poly.terms())
                    for (int i = 1; i <= cd->rank; ++i) {
                        const RootSeries s = eigenvalue_on(b, w, i, m, qc.highest);
                        o.require(Rational(s.degree()) == twisted_weight_gap(b, w, i, m, qc.highest),
                                  label + " " + to_text(m));
                        ++cases;
                    }
        }
    }
    if (o.ok)
        o.note = std::to_string(cases) + " cases";
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
        double budget_s;  // 0: none
    };
    const std::vector<Criterion> criteria{
        {"sl3 worked example", sl3_example, 1},
        {"B2 worked example", b2_example, 1},
        {"X-series factorizations", xseries_example, 0},
        {"longest-element law", longest_law, 0},
        {"braid relations for T and T'", braid_relations, 0},
        {"theorem suite", theorem_suite, 300},
        {"conjecture evidence for all w", conjecture_evidence, 0},
        {"pairing oracle equivalence", oracle_equivalence, 0},
        {"sigma and Omega sweeps", sigma_omega, 0},
        {"degree law", degree_law, 0},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note = std::string("exception: ") + e.what();
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criteria[k].budget_s > 0 && s >= criteria[k].budget_s) {
            o.ok = false;
            o.note = "over time budget";
        }
        failed += !o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].name
                  << " (" << std::fixed << std::setprecision(3) << s << " s)"
                  << (o.note.empty() ? "" : " - " + o.note) << std::endl;
    }
    return failed ? 1 : 0;
}

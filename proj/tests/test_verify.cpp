#include <doctest.h>

#include <set>

#include "qchar/verify.hpp"

using namespace qchar;

TEST_CASE("sample_weyl is deterministic and distinct")
{
    const CartanPtr d4 = build_cartan("D4");
    const auto a = sample_weyl(*d4, 20, 5);
    const auto b = sample_weyl(*d4, 20, 5);
    REQUIRE(a.size() == b.size());
    CHECK(a.size() == 1 + 4 + 1 + 20);
    for (std::size_t k = 0; k < a.size(); ++k)
        CHECK(a[k] == b[k]);
    std::set<std::vector<int>> words;
    for (const auto& w : a)
        words.insert(w.word());
    CHECK(words.size() == a.size());
}

TEST_CASE("proved cases")
{
    const CartanPtr b2 = build_cartan("B2");
    CHECK(extremal_property_proved(*b2, identity_element(*b2)));
    CHECK(extremal_property_proved(*b2, simple_reflection(*b2, 2)));
    CHECK(extremal_property_proved(*b2, longest_element(*b2)));
    const std::vector<int> w{1, 2};
    CHECK_FALSE(extremal_property_proved(*b2, reduce_word(*b2, w)));
}

TEST_CASE("a perturbed character produces a witness")
{
    const CartanPtr a2 = build_cartan("A2");
    const BraidAction b(a2);
    QCharacter qc = fm_fundamental(*a2, 1, 0);
    // a monomial above the highest one breaks the property for w = e
    qc.poly.add(qc.highest * make_A(*a2, 1, 1), 1);
    const CheckResult r = check_extremal_property(b, qc, identity_element(*a2));
    CHECK(r.failed());
    CHECK(r.klass == CheckClass::theorem);
    CHECK_FALSE(r.witness.empty());
}

TEST_CASE("suite on A2 is green and reports every check")
{
    SuiteConfig cfg = SuiteConfig::defaults();
    cfg.types = {"A2"};
    cfg.oracle_pairs = 20;
    cfg.jobs = 3;
    const auto results = run_suite(cfg);
    const SuiteSummary s = summarize(results);
    CHECK(s.theorem_failures == 0);
    CHECK(s.conjecture_failures == 0);
    std::set<std::string> seen;
    for (const auto& r : results)
        seen.insert(r.check_id);
    for (const std::string& id : suite_check_ids())
        CHECK_MESSAGE(seen.count(id), id);
    const json j = to_json(results.front());
    CHECK(j.contains("check_id"));
    CHECK(j["scope"]["type"] == "A2");
}

TEST_CASE("results are ordered identically for any worker count")
{
    SuiteConfig cfg = SuiteConfig::defaults();
    cfg.types = {"B2"};
    cfg.oracle_pairs = 10;
    cfg.jobs = 1;
    const auto one = run_suite(cfg);
    cfg.jobs = 4;
    const auto four = run_suite(cfg);
    REQUIRE(one.size() == four.size());
    for (std::size_t k = 0; k < one.size(); ++k) {
        CHECK(one[k].check_id == four[k].check_id);
        CHECK(one[k].node == four[k].node);
        CHECK(one[k].w == four[k].w);
    }
}

TEST_CASE("unknown types are configuration errors")
{
    SuiteConfig cfg = SuiteConfig::defaults();
    cfg.types = {"Q7"};
    CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
}

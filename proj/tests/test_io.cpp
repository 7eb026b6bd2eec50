#include <doctest.h>

#include <fstream>

#include "qchar/io.hpp"

using namespace qchar;

namespace {

std::filesystem::path scratch_dir(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / ("qchar_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

void write(const std::filesystem::path& p, const std::string& text)
{
    std::ofstream(p) << text;
}

} // namespace

TEST_CASE("q-character JSON round trip")
{
    for (const std::string label : {"B2", "G2", "D4"}) {
        const CartanPtr cd = build_cartan(label);
        for (int i = 1; i <= cd->rank; ++i) {
            const QCharacter qc = fm_fundamental(*cd, i, 0);
            const json j = json::parse(to_json(qc).dump());
            CHECK(qcharacter_from_json(j) == qc);
        }
    }
}

TEST_CASE("weights with fractional coordinates round trip")
{
    RationalWeight w(3);
    w << Rational(1), Rational(-2, 3), Rational(0);
    const json j = to_json(w);
    CHECK(j[0] == 1);
    CHECK(j[1] == "-2/3");
    CHECK(weight_from_json(j) == w);
    const PsiMonomial p{LaurentMonomial::variable(2, -1, 3), w};
    CHECK(psi_from_json(to_json(p)) == p);
}

TEST_CASE("malformed JSON is rejected")
{
    CHECK_THROWS_AS(monomial_from_json(json::parse("[[1,0]]")), std::runtime_error);
    CHECK_THROWS_AS(monomial_from_json(json::parse("[[2,0,1],[1,0,1]]")), std::runtime_error);
    CHECK_THROWS_AS(monomial_from_json(json::parse("[[1,0,0]]")), std::runtime_error);
    CHECK_THROWS_AS(polynomial_from_json(json::parse("[{\"monomial\": [], \"mult\": 0}]")),
                    std::runtime_error);
    CHECK_THROWS_AS(weight_from_json(json::parse("[1.5]")), std::runtime_error);
    CHECK_THROWS_AS(qcharacter_from_json(json::parse("{\"meta\": {}}")), std::runtime_error);
}

TEST_CASE("cache writes, reloads and shifts")
{
    const auto dir = scratch_dir("reload");
    const CartanPtr b2 = build_cartan("B2");
    const QCharacter direct = fm_fundamental(*b2, 2, 0);
    {
        QCharacterCache cache(dir);
        CHECK(cache.get(*b2, 2) == direct);
    }
    CHECK(std::filesystem::exists(dir / "B2_node2.json"));
    QCharacterCache again(dir);
    CHECK(again.get(*b2, 2) == direct);
    const QCharacter moved = again.get(*b2, 2, 4);
    CHECK(moved.poly == direct.poly.shifted(4));
    CHECK(moved.meta.generator_exponent == 4);
}

TEST_CASE("corrupt cache files are errors")
{
    const auto dir = scratch_dir("corrupt");
    const CartanPtr a2 = build_cartan("A2");
    write(dir / "A2_node1.json", "{ not json");
    QCharacterCache cache(dir);
    CHECK_THROWS_WITH_AS(cache.get(*a2, 1), doctest::Contains("corrupt cache file"),
                         std::runtime_error);

    // valid JSON for the wrong node
    QCharacter other = fm_fundamental(*a2, 2, 0);
    write(dir / "A2_node1.json", to_json(other).dump());
    QCharacterCache cache2(dir);
    CHECK_THROWS_AS(cache2.get(*a2, 1), std::runtime_error);
}

TEST_CASE("stale cache files are recomputed")
{
    const auto dir = scratch_dir("stale");
    const CartanPtr a2 = build_cartan("A2");
    QCharacter qc = fm_fundamental(*a2, 1, 0);
    qc.meta.algorithm_version = kAlgorithmVersion + 7;
    qc.poly = YPolynomial(qc.highest);
    write(dir / "A2_node1.json", to_json(qc).dump());
    QCharacterCache cache(dir);
    CHECK(cache.get(*a2, 1).poly.size() == 3);
}

#include "qchar/io.hpp"

#include <atomic>
#include <fstream>
#include <stdexcept>
#include <thread>

namespace qchar {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw std::runtime_error("malformed JSON: " + what);
}

int as_int(const json& j, const std::string& what)
{
    require(j.is_number_integer(), what + " must be an integer");
    return j.get<int>();
}

} // namespace

json to_json(const LaurentMonomial& m)
{
    json out = json::array();
    for (const Factor& f : m.factors())
        out.push_back({f.node, f.shift, f.exp});
    return out;
}

json to_json(const YPolynomial& p)
{
    json out = json::array();
    for (const auto& [m, c] : p.terms())
        out.push_back({{"monomial", to_json(m)}, {"mult", c}});
    return out;
}

json to_json(const RationalWeight& omega)
{
    json out = json::array();
    for (Eigen::Index i = 0; i < omega.size(); ++i) {
        const Rational& x = omega(i);
        if (denominator(x) == 1)
            out.push_back(static_cast<long long>(numerator(x)));
        else
            out.push_back(to_string(x));
    }
    return out;
}

json to_json(const PsiMonomial& p) { return {{"psi", to_json(p.psi)}, {"omega", to_json(p.omega)}}; }

json to_json(const QCharacter& qc)
{
    return {{"meta",
             {{"type", qc.meta.type},
              {"rank", qc.meta.rank},
              {"node", qc.meta.node},
              {"generator_exponent", qc.meta.generator_exponent},
              {"algorithm_version", qc.meta.algorithm_version}}},
            {"highest", to_json(qc.highest)},
            {"poly", to_json(qc.poly)}};
}

json to_json(const RootSeries& s) { return {{"roots", s.roots}, {"poles", s.poles}}; }

json to_json(const EigenEntry& e)
{
    return {{"w", e.w.word()},
            {"i", e.node},
            {"monomial", to_json(e.monomial)},
            {"roots", e.value.roots},
            {"poles", e.value.poles},
            {"polynomial", e.value.is_polynomial()}};
}

json to_json(const XFactorization& f)
{
    return {{"w", f.w.word()}, {"i", f.node}, {"exps", to_json(f.exps)}};
}

json to_json(const TruncatedSeries& s)
{
    json out = json::array();
    for (const Rational& c : s.coeffs)
        out.push_back(to_string(c));
    return out;
}

LaurentMonomial monomial_from_json(const json& j)
{
    require(j.is_array(), "monomial must be an array");
    std::vector<Factor> f;
    for (const json& t : j) {
        require(t.is_array() && t.size() == 3, "monomial factor must be [i, r, exp]");
        const Factor x{as_int(t[0], "node"), as_int(t[1], "shift"), as_int(t[2], "exp")};
        require(x.exp != 0, "zero exponent stored");
        f.push_back(x);
    }
    LaurentMonomial m(f);
    require(m.factors() == f, "monomial factors not sorted or repeated");
    return m;
}

YPolynomial polynomial_from_json(const json& j)
{
    require(j.is_array(), "polynomial must be an array");
    YPolynomial p;
    for (const json& t : j) {
        require(t.is_object() && t.contains("monomial") && t.contains("mult"),
                "polynomial term must be {monomial, mult}");
        require(t["mult"].is_number_integer(), "mult must be an integer");
        const auto c = t["mult"].get<std::int64_t>();
        require(c != 0, "zero multiplicity stored");
        const LaurentMonomial m = monomial_from_json(t["monomial"]);
        require(p.coefficient(m) == 0, "repeated monomial");
        p.add(m, c);
    }
    return p;
}

RationalWeight weight_from_json(const json& j)
{
    require(j.is_array(), "weight must be an array");
    RationalWeight w(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& x = j[i];
        if (x.is_number_integer())
            w(static_cast<Eigen::Index>(i)) = Rational(x.get<long long>());
        else if (x.is_string())
            w(static_cast<Eigen::Index>(i)) = parse_rational(x.get<std::string>());
        else
            require(false, "weight coordinate must be an integer or \"n/d\"");
    }
    return w;
}

PsiMonomial psi_from_json(const json& j)
{
    require(j.is_object() && j.contains("psi") && j.contains("omega"),
            "psi monomial must be {psi, omega}");
    return {monomial_from_json(j["psi"]), weight_from_json(j["omega"])};
}

QCharacter qcharacter_from_json(const json& j)
{
    require(j.is_object() && j.contains("meta") && j.contains("highest") && j.contains("poly"),
            "q-character must be {meta, highest, poly}");
    const json& m = j["meta"];
    require(m.is_object() && m.contains("type") && m["type"].is_string(), "meta.type");
    QCharacter qc;
    qc.meta.type = m["type"].get<std::string>();
    for (const char* key : {"rank", "node", "generator_exponent", "algorithm_version"})
        require(m.contains(key), std::string("meta.") + key);
    qc.meta.rank = as_int(m["rank"], "meta.rank");
    qc.meta.node = as_int(m["node"], "meta.node");
    qc.meta.generator_exponent = as_int(m["generator_exponent"], "meta.generator_exponent");
    qc.meta.algorithm_version = as_int(m["algorithm_version"], "meta.algorithm_version");
    qc.highest = monomial_from_json(j["highest"]);
    qc.poly = polynomial_from_json(j["poly"]);
    return qc;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents)
{
    static std::atomic<unsigned> counter{0};
    std::filesystem::path tmp = path;
    tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) +
           "." + std::to_string(counter++);
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write " + tmp.string());
        out << contents;
        if (!out.flush())
            throw std::runtime_error("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

} // namespace qchar

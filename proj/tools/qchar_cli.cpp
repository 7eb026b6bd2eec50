#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qchar/verify.hpp"

using namespace qchar;

namespace {

enum Exit { ok = 0, theorem_failure = 1, usage = 2, internal = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string type;
    int rank = 0;
    int node = 1;
    int r = 0;
    std::string output;
    std::string format = "json";
};

CartanPtr cartan_for(const Common& c)
{
    try {
        if (c.type.size() == 1)
            return build_cartan(c.type[0], c.rank);
        return build_cartan(c.type);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void check_node(const CartanData& cd, int node)
{
    if (!cd.valid_node(node))
        throw UsageError("node " + std::to_string(node) + " outside 1.." + std::to_string(cd.rank));
}

WeylElement word_for(const CartanData& cd, const std::string& text)
{
    try {
        return reduce_word(cd, parse_word(text == "e" ? std::string() : text));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad word: ") + e.what());
    }
}

std::pair<int, int> node_shift(const CartanData& cd, const std::string& text)
{
    std::istringstream in(text);
    int i = 0, r = 0;
    char comma = 0;
    if (!(in >> i >> comma >> r) || comma != ',' || !in.eof())
        throw UsageError("expected i,r but got '" + text + "'");
    check_node(cd, i);
    return {i, r};
}

void emit(const Common& c, const json& j, const std::string& text)
{
    const std::string body = c.format == "json" ? j.dump(2) + "\n" : text;
    if (c.output.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(c.output);
    if (!(out << body))
        throw std::runtime_error("cannot write " + c.output);
}

void add_common(CLI::App* app, Common& c, bool with_node)
{
    app->add_option("--type", c.type, "type letter (with --rank) or label such as B2")->required();
    app->add_option("--rank", c.rank, "rank when --type is a single letter");
    if (with_node)
        app->add_option("--node", c.node, "node i");
    app->add_option("--r", c.r, "spectral shift");
    app->add_option("--output", c.output, "write to this file instead of stdout");
    app->add_option("--format", c.format)->check(CLI::IsMember({"json", "text"}));
}

int cmd_fundamental(const Common& c, bool no_cache)
{
    const CartanPtr cd = cartan_for(c);
    check_node(*cd, c.node);
    QCharacter qc;
    try {
        if (no_cache)
            qc = fm_fundamental(*cd, c.node, c.r);
        else
            qc = QCharacterCache(QCharacterCache::default_directory()).get(*cd, c.node, c.r);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::ostringstream text;
    text << to_text(qc.poly) << "\n(" << qc.poly.size() << " monomials, dimension "
         << qc.poly.total() << ")\n";
    emit(c, to_json(qc), text.str());
    return ok;
}

struct BraidArgs {
    std::string word;
    std::vector<std::string> apply, aw, psi;
};

int cmd_braid(const Common& c, const BraidArgs& a)
{
    const CartanPtr cd = cartan_for(c);
    const BraidAction braid(cd);
    const WeylElement w = word_for(*cd, a.word);
    json out = {{"w", w.word()}, {"apply", json::array()}, {"aw", json::array()},
                {"psi", json::array()}};
    std::ostringstream text;
    for (const std::string& lit : a.apply) {
        YMonomial m;
        try {
            m = parse_monomial(*cd, lit);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        const YMonomial img = braid.T_w(w, m);
        out["apply"].push_back({{"input", to_json(m)}, {"image", to_json(img)}});
        text << "T_w(" << to_text(m) << ") = " << to_text(img) << '\n';
    }
    for (const std::string& lit : a.aw) {
        const auto [i, r] = node_shift(*cd, lit);
        const TwistedRoot t = twisted_root(braid, w, i, r);
        const auto e = factor_in_A(*cd, t.value, YMonomial{});
        json entry = {{"i", i}, {"r", r}, {"value", to_json(t.value)}};
        entry["in_A"] = e ? to_json(*e) : json(nullptr);
        out["aw"].push_back(entry);
        text << "A^w_{" << i << "," << r << "} = " << to_text(t.value);
        if (e)
            text << " = " << to_text(*e, "A");
        text << '\n';
    }
    for (const std::string& lit : a.psi) {
        const auto [i, r] = node_shift(*cd, lit);
        const PsiMonomial p = psi_extremal(braid, ExtendedBraid(cd), w, i, r);
        out["psi"].push_back({{"i", i}, {"r", r}, {"value", to_json(p)}});
        text << "Psi_{w(omega_" << i << ")," << r << "} = " << to_text(p) << '\n';
    }
    if (a.apply.empty() && a.aw.empty() && a.psi.empty())
        throw UsageError("braid needs at least one of --apply, --aw, --psi");
    emit(c, out, text.str());
    return ok;
}

struct VerifyArgs {
    std::vector<std::string> types;
    int jobs = 1;
    bool no_cache = false;
    std::string output;
    std::string format = "text";
};

std::vector<std::string> expand_types(const std::vector<std::string>& requested)
{
    const SuiteConfig base = SuiteConfig::defaults();
    if (requested.empty())
        return base.types;
    std::vector<std::string> out;
    for (const std::string& t : requested) {
        if (t.size() == 1) {
            const std::size_t before = out.size();
            for (const std::string& d : base.types)
                if (d[0] == t[0])
                    out.push_back(d);
            if (out.size() == before)
                throw UsageError("no default type in family " + t);
        } else {
            out.push_back(t);
        }
    }
    return out;
}

int cmd_verify(const VerifyArgs& v)
{
    SuiteConfig cfg = SuiteConfig::defaults();
    cfg.types = expand_types(v.types);
    cfg.jobs = std::max(1, v.jobs);
    std::optional<QCharacterCache> cache;
    if (!v.no_cache) {
        cache.emplace(QCharacterCache::default_directory());
        cfg.cache = &*cache;
    }
    std::vector<CheckResult> results;
    try {
        results = run_suite(cfg);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const SuiteSummary s = summarize(results);

    json report = json::array();
    for (const CheckResult& r : results)
        report.push_back(to_json(r));
    std::ostringstream text;
    text << summary_table(results);
    for (const CheckResult& r : results)
        if (r.failed())
            text << "FAIL " << r.check_id << " [" << to_string(r.klass) << "] " << r.type
                 << " node " << r.node << (r.w ? " w=[" + word_to_string(*r.w) + "]" : "")
                 << ": " << r.witness << '\n';
    if (s.conjecture_failures > 0)
        text << "note: conjecture-class failures recorded above\n";

    Common c;
    c.output = v.output;
    c.format = v.format;
    json doc = {{"summary",
                 {{"total", s.total},
                  {"theorem_failures", s.theorem_failures},
                  {"conjecture_failures", s.conjecture_failures}}},
                {"results", report}};
    emit(c, doc, text.str());
    if (!v.output.empty())
        std::cout << summary_table(results);
    return s.theorem_failures > 0 ? theorem_failure : ok;
}

struct XArgs {
    std::string word;
    bool oracle = false;
    int N = 12;
    std::string q = "2";
};

int cmd_xseries(const Common& c, const XArgs& x)
{
    const CartanPtr cd = cartan_for(c);
    check_node(*cd, c.node);
    const BraidAction braid(cd);
    const WeylElement w = word_for(*cd, x.word);
    Rational q;
    try {
        q = parse_rational(x.q);
    } catch (const std::exception& e) {
        throw UsageError("bad --q: " + x.q);
    }
    if (x.N < 1)
        throw UsageError("--N must be positive");

    const XFactorization f = x_factorization(braid, w, c.node);
    json out = {{"factorization", to_json(f)}};
    std::ostringstream text;
    text << "X_{w(omega_" << c.node << ")}(z) = " << to_text(f.exps, "X") << '\n';

    const QCharacter qc = QCharacterCache(QCharacterCache::default_directory()).get(*cd, c.node);
    const PolynomialityVerdict v = polynomiality_verdict(braid, w, qc);
    json entries = json::array();
    for (const EigenEntry& e : v.entries)
        entries.push_back(to_json(e));
    out["eigenvalues"] = entries;
    out["all_polynomial"] = v.all_polynomial;
    text << "eigenvalues on " << qc.poly.size() << " monomials x " << cd->rank
         << " nodes: " << (v.all_polynomial ? "all polynomial" : "NOT all polynomial") << '\n';

    if (x.oracle) {
        const PairingOracle oracle(cd, q, x.N);
        const WeylElement e = identity_element(*cd);
        int matched = 0, total = 0;
        json mismatches = json::array();
        for (const auto& [m, mult] : qc.poly.terms())
            for (int i = 1; i <= cd->rank; ++i) {
                ++total;
                const TruncatedSeries ratio =
                    oracle.pairing(i, m) * oracle.pairing(i, qc.highest).inverse();
                const TruncatedSeries structural =
                    eigenvalue_on(braid, e, i, m, qc.highest).expand(q, x.N);
                if (ratio == structural)
                    ++matched;
                else
                    mismatches.push_back({{"i", i}, {"monomial", to_json(m)}});
            }
        out["oracle"] = {{"N", x.N}, {"q", to_string(q)}, {"matched", matched},
                         {"total", total}, {"mismatches", mismatches}};
        text << "oracle at q=" << to_string(q) << ", N=" << x.N << ": " << matched << "/"
             << total << " match\n";
    }
    emit(c, out, text.str());
    return ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"q-character combinatorics: compute, transform, verify"};
    app.require_subcommand(1);

    Common common;
    bool no_cache_fund = false;
    auto* fund = app.add_subcommand("fundamental", "q-character of a fundamental representation");
    add_common(fund, common, true);
    fund->add_flag("--no-cache", no_cache_fund, "recompute instead of using the cache");

    BraidArgs braid_args;
    auto* braid = app.add_subcommand("braid", "braid group images");
    add_common(braid, common, false);
    braid->add_option("--word", braid_args.word, "comma-separated reflection indices, or e")
        ->expected(0, 1);
    braid->add_option("--apply", braid_args.apply, "monomial literal such as Y:1,0*A:2,1^-1");
    braid->add_option("--aw", braid_args.aw, "i,r of a twisted root A^w_{i,r}");
    braid->add_option("--psi", braid_args.psi, "i,r of an extremal l-weight");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--types", verify_args.types, "labels (B2) or families (G)")->delimiter(',');
    verify->add_option("--jobs", verify_args.jobs, "worker threads");
    verify->add_flag("--no-cache", verify_args.no_cache, "ignore QCHAR_CACHE_DIR");
    verify->add_option("--output", verify_args.output, "write the report here");
    verify->add_option("--format", verify_args.format)->check(CLI::IsMember({"json", "text"}));

    XArgs x_args;
    auto* xs = app.add_subcommand("xseries", "X-series factorization and eigenvalues");
    add_common(xs, common, true);
    xs->add_option("--word", x_args.word, "comma-separated reflection indices, or e")
        ->expected(0, 1);
    xs->add_flag("--oracle", x_args.oracle, "compare with the pairing oracle at w = e");
    xs->add_option("--N", x_args.N, "truncation order");
    xs->add_option("--q", x_args.q, "rational evaluation point");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*fund)
            return cmd_fundamental(common, no_cache_fund);
        if (*braid)
            return cmd_braid(common, braid_args);
        if (*verify)
            return cmd_verify(verify_args);
        return cmd_xseries(common, x_args);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return internal;
    }
}

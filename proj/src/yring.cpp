#include "qchar/yring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qchar {

LaurentMonomial::LaurentMonomial(std::vector<Factor> factors)
{
    std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) {
        return a.node != b.node ? a.node < b.node : a.shift < b.shift;
    });
    for (const Factor& f : factors) {
        if (!factors_.empty() && factors_.back().node == f.node &&
            factors_.back().shift == f.shift)
            factors_.back().exp += f.exp;
        else
            factors_.push_back(f);
        if (factors_.back().exp == 0)
            factors_.pop_back();
    }
}

LaurentMonomial LaurentMonomial::variable(int node, int shift, int exp)
{
    LaurentMonomial m;
    if (exp != 0)
        m.factors_.push_back({node, shift, exp});
    return m;
}

int LaurentMonomial::exponent(int node, int shift) const
{
    auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{node, shift, 0},
                               [](const Factor& a, const Factor& b) {
                                   return a.node != b.node ? a.node < b.node
                                                           : a.shift < b.shift;
                               });
    if (it != factors_.end() && it->node == node && it->shift == shift)
        return it->exp;
    return 0;
}

int LaurentMonomial::min_shift() const
{
    int r = factors_.front().shift;
    for (const Factor& f : factors_)
        r = std::min(r, f.shift);
    return r;
}

int LaurentMonomial::max_shift() const
{
    int r = factors_.front().shift;
    for (const Factor& f : factors_)
        r = std::max(r, f.shift);
    return r;
}

LaurentMonomial LaurentMonomial::inverse() const { return pow(-1); }

LaurentMonomial LaurentMonomial::pow(int k) const
{
    LaurentMonomial out;
    if (k == 0)
        return out;
    out.factors_ = factors_;
    for (Factor& f : out.factors_)
        f.exp *= k;
    return out;
}

LaurentMonomial LaurentMonomial::shifted(int s) const
{
    LaurentMonomial out = *this;
    for (Factor& f : out.factors_)
        f.shift += s;
    return out;
}

LaurentMonomial LaurentMonomial::restricted_to(int node) const
{
    LaurentMonomial out;
    for (const Factor& f : factors_)
        if (f.node == node)
            out.factors_.push_back(f);
    return out;
}

LaurentMonomial& LaurentMonomial::operator*=(const LaurentMonomial& other)
{
    if (other.factors_.empty())
        return *this;
    std::vector<Factor> merged;
    merged.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    auto less = [](const Factor& x, const Factor& y) {
        return x.node != y.node ? x.node < y.node : x.shift < y.shift;
    };
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && less(*a, *b))) {
            merged.push_back(*a++);
        } else if (a == factors_.end() || less(*b, *a)) {
            merged.push_back(*b++);
        } else {
            const int e = a->exp + b->exp;
            if (e != 0)
                merged.push_back({a->node, a->shift, e});
            ++a;
            ++b;
        }
    }
    factors_ = std::move(merged);
    return *this;
}

std::size_t LaurentMonomial::hash() const
{
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const Factor& f : factors_) {
        for (int v : {f.node, f.shift, f.exp}) {
            h ^= std::hash<int>{}(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
    }
    return h;
}

void YPolynomial::add(const YMonomial& m, std::int64_t mult)
{
    if (mult == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0)
            terms_.erase(it);
    }
}

std::int64_t YPolynomial::coefficient(const YMonomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

std::int64_t YPolynomial::total() const
{
    std::int64_t s = 0;
    for (const auto& [m, c] : terms_)
        s += c;
    return s;
}

YPolynomial YPolynomial::shifted(int s) const
{
    YPolynomial out;
    for (const auto& [m, c] : terms_)
        out.terms_.emplace(m.shifted(s), c);
    return out;
}

YPolynomial& YPolynomial::operator+=(const YPolynomial& other)
{
    for (const auto& [m, c] : other.terms_)
        add(m, c);
    return *this;
}

YPolynomial& YPolynomial::operator-=(const YPolynomial& other)
{
    for (const auto& [m, c] : other.terms_)
        add(m, -c);
    return *this;
}

YPolynomial operator*(const YPolynomial& a, const YPolynomial& b)
{
    YPolynomial out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add(ma * mb, ca * cb);
    return out;
}

YPolynomial operator*(std::int64_t k, const YPolynomial& a)
{
    YPolynomial out;
    if (k == 0)
        return out;
    for (const auto& [m, c] : a.terms_)
        out.terms_.emplace(m, k * c);
    return out;
}

YPolynomial operator*(const YPolynomial& a, const YMonomial& m)
{
    YPolynomial out;
    for (const auto& [ma, c] : a.terms_)
        out.terms_.emplace(ma * m, c);
    return out;
}

YMonomial make_A(const CartanData& cd, int node, int r)
{
    const int di = cd.d(node);
    std::vector<Factor> f{{node, r - di, 1}, {node, r + di, 1}};
    for (int j = 1; j <= cd.rank; ++j) {
        if (j == node)
            continue;
        switch (cd.c(j, node)) {
        case -1:
            f.push_back({j, r, -1});
            break;
        case -2:
            f.push_back({j, r - 1, -1});
            f.push_back({j, r + 1, -1});
            break;
        case -3:
            f.push_back({j, r - 2, -1});
            f.push_back({j, r, -1});
            f.push_back({j, r + 2, -1});
            break;
        default:
            break;
        }
    }
    return YMonomial(std::move(f));
}

YMonomial expand_roots(const CartanData& cd, const RootExponents& e)
{
    YMonomial out;
    for (const Factor& f : e.factors())
        out *= make_A(cd, f.node, f.shift).pow(f.exp);
    return out;
}

Weight weight_of(const CartanData& cd, const YMonomial& m)
{
    Weight w = Weight::Zero(cd.rank);
    for (const Factor& f : m.factors())
        w(f.node - 1) += f.exp;
    return w;
}

bool is_dominant(const YMonomial& m)
{
    return std::all_of(m.factors().begin(), m.factors().end(),
                       [](const Factor& f) { return f.exp > 0; });
}

bool is_k_dominant(const YMonomial& m, int node)
{
    return std::all_of(m.factors().begin(), m.factors().end(),
                       [node](const Factor& f) { return f.node != node || f.exp > 0; });
}

std::optional<RootExponents> factor_in_A(const CartanData& cd, const YMonomial& m,
                                         const YMonomial& anchor)
{
    // A_{i,q^s} has Y_{i,s-d_i} as its unique factor of lowest spectral
    // parameter, so the lowest factor of the discrepancy pins one exponent.
    YMonomial gap = m / anchor;
    if (gap.is_identity())
        return RootExponents{};
    const int ceiling = gap.max_shift();
    std::vector<Factor> exps;
    while (!gap.is_identity()) {
        const int r = gap.min_shift();
        if (r > ceiling)
            return std::nullopt;
        std::vector<Factor> lowest;
        for (const Factor& f : gap.factors())
            if (f.shift == r)
                lowest.push_back(f);
        for (const Factor& f : lowest) {
            const int s = r + cd.d(f.node);
            exps.push_back({f.node, s, f.exp});
            gap = gap / make_A(cd, f.node, s).pow(f.exp);
        }
    }
    return RootExponents(std::move(exps));
}

std::string to_text(const LaurentMonomial& m, const std::string& letter)
{
    if (m.is_identity())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (const Factor& f : m.factors()) {
        if (!first)
            os << ' ';
        first = false;
        os << letter << "_{" << f.node << ',' << f.shift << '}';
        if (f.exp != 1)
            os << "^{" << f.exp << '}';
    }
    return os.str();
}

std::string to_text(const YPolynomial& p)
{
    if (p.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << '-';
        first = false;
        const std::int64_t a = c < 0 ? -c : c;
        if (a != 1)
            os << a << ' ';
        os << to_text(m);
    }
    return os.str();
}

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

int parse_int(const std::string& s, const std::string& context)
{
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed monomial literal '" + context + "'");
    }
    if (pos != s.size())
        throw std::invalid_argument("malformed monomial literal '" + context + "'");
    return v;
}

} // namespace

YMonomial parse_monomial(const CartanData& cd, const std::string& text)
{
    const std::string body = trim(text);
    if (body.empty())
        throw std::invalid_argument("empty monomial literal");
    if (body == "1")
        return {};
    YMonomial out;
    std::istringstream is(body);
    std::string token;
    while (std::getline(is, token, '*')) {
        token = trim(token);
        if (token.size() < 5 || token[1] != ':' || (token[0] != 'Y' && token[0] != 'A'))
            throw std::invalid_argument("malformed monomial token '" + token + "'");
        std::string args = token.substr(2);
        int e = 1;
        if (const auto caret = args.find('^'); caret != std::string::npos) {
            e = parse_int(trim(args.substr(caret + 1)), token);
            args = args.substr(0, caret);
        }
        const auto comma = args.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("malformed monomial token '" + token + "'");
        const int i = parse_int(trim(args.substr(0, comma)), token);
        const int r = parse_int(trim(args.substr(comma + 1)), token);
        if (!cd.valid_node(i))
            throw std::invalid_argument("node " + std::to_string(i) + " outside I for " +
                                        cd.name());
        if (token[0] == 'Y')
            out *= YMonomial::variable(i, r, e);
        else
            out *= make_A(cd, i, r).pow(e);
    }
    return out;
}

} // namespace qchar

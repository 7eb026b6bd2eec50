#include "qchar/cartan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qchar {

namespace {

void link(MatrixX<int>& c, int i, int j)
{
    c(i - 1, j - 1) = -1;
    c(j - 1, i - 1) = -1;
}

bool valid_pair(char t, int n)
{
    switch (t) {
    case 'A': return n >= 1 && n <= 8;
    case 'B':
    case 'C': return n >= 2 && n <= 8;
    case 'D': return n >= 4 && n <= 8;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
    }
}

int dual_coxeter_number(char t, int n)
{
    switch (t) {
    case 'A': return n + 1;
    case 'B': return 2 * n - 1;
    case 'C': return n + 1;
    case 'D': return 2 * n - 2;
    case 'E': return n == 6 ? 12 : (n == 7 ? 18 : 30);
    case 'F': return 9;
    case 'G': return 4;
    }
    return 0;
}

std::vector<int> word_from_rho_image(const CartanData& cd, Weight v)
{
    std::vector<int> word;
    for (;;) {
        int j = 0;
        while (j < cd.rank && v(j) >= 0)
            ++j;
        if (j == cd.rank)
            break;
        word.push_back(j + 1);
        const int vj = v(j);
        v -= vj * cd.cartan.col(j);
    }
    return word;
}

WeylElement from_matrix(const CartanData& cd, MatrixX<int> m)
{
    Weight v = m * cd.rho();
    return WeylElement(word_from_rho_image(cd, v), std::move(m));
}

} // namespace

Weight CartanData::omega(int node) const
{
    Weight w = Weight::Zero(rank);
    w(node - 1) = 1;
    return w;
}

Weight CartanData::alpha(int node) const { return cartan.col(node - 1); }

Weight CartanData::rho() const { return Weight::Ones(rank); }

std::string CartanData::name() const { return std::string(1, type_label) + std::to_string(rank); }

CartanPtr build_cartan(char t, int n)
{
    if (!valid_pair(t, n))
        throw std::invalid_argument("unsupported finite type " + std::string(1, t) +
                                    std::to_string(n));
    auto cd = std::make_shared<CartanData>();
    cd->type_label = t;
    cd->rank = n;
    MatrixX<int> c = 2 * MatrixX<int>::Identity(n, n);
    VectorX<int> d = VectorX<int>::Ones(n);
    switch (t) {
    case 'A':
        for (int i = 1; i < n; ++i)
            link(c, i, i + 1);
        break;
    case 'B':
        for (int i = 1; i < n; ++i)
            link(c, i, i + 1);
        c(n - 1, n - 2) = -2;
        d.setConstant(2);
        d(n - 1) = 1;
        break;
    case 'C':
        for (int i = 1; i < n; ++i)
            link(c, i, i + 1);
        c(n - 2, n - 1) = -2;
        d(n - 1) = 2;
        break;
    case 'D':
        for (int i = 1; i + 1 < n; ++i)
            link(c, i, i + 1);
        link(c, n - 2, n);
        break;
    case 'E':
        link(c, 1, 3);
        link(c, 3, 4);
        link(c, 2, 4);
        for (int i = 4; i < n; ++i)
            link(c, i, i + 1);
        break;
    case 'F':
        link(c, 1, 2);
        link(c, 2, 3);
        link(c, 3, 4);
        c(2, 1) = -2;
        d << 2, 2, 1, 1;
        break;
    case 'G':
        c(0, 1) = -1;
        c(1, 0) = -3;
        d << 3, 1;
        break;
    }
    cd->cartan = c;
    cd->symmetrizer = d;
    cd->lacing = d.maxCoeff();
    cd->dual_coxeter = dual_coxeter_number(t, n);

    const MatrixXq cq = cast_exact<Rational>(c);
    cd->cartan_inverse = *exact_inverse<Rational>(cq);
    const MatrixXq inv_t = cd->cartan_inverse.transpose();
    MatrixXq dq = MatrixXq::Zero(n, n);
    for (int i = 0; i < n; ++i)
        dq(i, i) = Rational(d(i));
    cd->omega_gram = exact_product(inv_t, dq);
    VectorXq ones(n);
    for (int i = 0; i < n; ++i)
        ones(i) = Rational(1);
    cd->height_functional = exact_product(inv_t, ones);

    // bar involution from w0(alpha_i) = -alpha_bar(i)
    cd->bar_map.assign(static_cast<std::size_t>(n), 0);
    const WeylElement w0 = longest_element(*cd);
    for (int i = 1; i <= n; ++i) {
        const Weight img = w0.matrix() * cd->alpha(i);
        for (int j = 1; j <= n; ++j)
            if (img == -cd->alpha(j))
                cd->bar_map[static_cast<std::size_t>(i - 1)] = j;
        if (cd->bar_map[static_cast<std::size_t>(i - 1)] == 0)
            throw std::logic_error("w0 does not permute the negative simple roots");
    }
    return cd;
}

CartanPtr build_cartan(const std::string& label)
{
    if (label.size() < 2)
        throw std::invalid_argument("type label must look like A2, G2, D4: '" + label + "'");
    const char t = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
    int n = 0;
    try {
        std::size_t pos = 0;
        n = std::stoi(label.substr(1), &pos);
        if (pos != label.size() - 1)
            throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw std::invalid_argument("type label must look like A2, G2, D4: '" + label + "'");
    }
    return build_cartan(t, n);
}

MatrixX<int> reflection_matrix(const CartanData& cd, int node)
{
    // s_k(lambda) = lambda - lambda_k alpha_k
    MatrixX<int> s = MatrixX<int>::Identity(cd.rank, cd.rank);
    s.col(node - 1) -= cd.alpha(node);
    return s;
}

WeylElement reduce_word(const CartanData& cd, std::span<const int> word)
{
    MatrixX<int> m = MatrixX<int>::Identity(cd.rank, cd.rank);
    for (int i : word) {
        if (!cd.valid_node(i))
            throw std::invalid_argument("reflection index " + std::to_string(i) +
                                        " outside I for " + cd.name());
        m = m * reflection_matrix(cd, i);
    }
    return from_matrix(cd, std::move(m));
}

WeylElement identity_element(const CartanData& cd)
{
    return WeylElement({}, MatrixX<int>::Identity(cd.rank, cd.rank));
}

WeylElement simple_reflection(const CartanData& cd, int node)
{
    const int w[] = {node};
    return reduce_word(cd, w);
}

WeylElement longest_element(const CartanData& cd)
{
    const std::vector<int> word = word_from_rho_image(cd, -cd.rho());
    return reduce_word(cd, word);
}

WeylElement compose(const CartanData& cd, const WeylElement& a, const WeylElement& b)
{
    return from_matrix(cd, a.matrix() * b.matrix());
}

WeylElement inverse(const CartanData& cd, const WeylElement& w)
{
    std::vector<int> rev(w.word().rbegin(), w.word().rend());
    return reduce_word(cd, rev);
}

std::vector<WeylElement> enumerate_weyl(const CartanData& cd)
{
    std::set<std::vector<int>> seen;
    auto key = [&](const MatrixX<int>& m) {
        const Weight v = m * cd.rho();
        return std::vector<int>(v.data(), v.data() + v.size());
    };
    std::vector<MatrixX<int>> frontier{MatrixX<int>::Identity(cd.rank, cd.rank)};
    std::vector<WeylElement> all;
    seen.insert(key(frontier.front()));
    std::vector<MatrixX<int>> refl;
    for (int i = 1; i <= cd.rank; ++i)
        refl.push_back(reflection_matrix(cd, i));
    while (!frontier.empty()) {
        std::vector<MatrixX<int>> next;
        for (const auto& m : frontier) {
            all.push_back(from_matrix(cd, m));
            for (const auto& s : refl) {
                MatrixX<int> nm = m * s;
                if (seen.insert(key(nm)).second)
                    next.push_back(std::move(nm));
            }
        }
        frontier = std::move(next);
    }
    std::sort(all.begin(), all.end());
    return all;
}

Rational invariant_form(const CartanData& cd, const Weight& lambda, const Weight& mu)
{
    return invariant_form(cd, cast_exact<Rational>(lambda), cast_exact<Rational>(mu));
}

Rational invariant_form(const CartanData& cd, const RationalWeight& lambda,
                        const RationalWeight& mu)
{
    return exact_dot<Rational>(lambda, exact_product(cd.omega_gram, mu));
}

RationalWeight to_root_coordinates(const CartanData& cd, const Weight& lambda)
{
    return exact_product(cd.cartan_inverse, cast_exact<Rational>(lambda));
}

Rational height(const CartanData& cd, const Weight& lambda)
{
    return exact_dot<Rational>(cd.height_functional, cast_exact<Rational>(lambda));
}

bool is_nonnegative_combination(const CartanData& cd, const Weight& lambda)
{
    const RationalWeight c = to_root_coordinates(cd, lambda);
    for (Eigen::Index i = 0; i < c.size(); ++i)
        if (c(i) < 0)
            return false;
    return true;
}

std::string word_to_string(const std::vector<int>& word)
{
    std::ostringstream os;
    for (std::size_t k = 0; k < word.size(); ++k)
        os << (k ? "," : "") << word[k];
    return os.str();
}

std::vector<int> parse_word(const std::string& text)
{
    std::vector<int> word;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        const auto b = token.find_first_not_of(" \t");
        if (b == std::string::npos)
            throw std::invalid_argument("empty entry in word '" + text + "'");
        const auto e = token.find_last_not_of(" \t");
        token = token.substr(b, e - b + 1);
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(token, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed word '" + text + "'");
        }
        if (pos != token.size())
            throw std::invalid_argument("malformed word '" + text + "'");
        word.push_back(v);
    }
    return word;
}

} // namespace qchar

#include "qchar/lweight.hpp"

#include <sstream>

namespace qchar {

namespace {

RationalWeight zero_weight(int rank)
{
    RationalWeight w(rank);
    for (int i = 0; i < rank; ++i)
        w(i) = Rational(0);
    return w;
}

bool same_weight(const RationalWeight& a, const RationalWeight& b)
{
    if (a.size() != b.size())
        return false;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a(i) != b(i))
            return false;
    return true;
}

// Y_{k,b} with d_k = ratio * d_i becomes these Psi offsets around -b.
std::vector<int> spread(int ratio)
{
    switch (ratio) {
    case 1: return {0};
    case 2: return {-1, 1};
    case 3: return {-2, 0, 2};
    default: throw LweightError("unsupported symmetrizer ratio " + std::to_string(ratio));
    }
}

// Rewrites the node-k part of a monomial as a product of W_{k,c} blocks, where
// a block is Y_{k,c+o} over the given offsets, scanning upwards.
std::vector<Factor> regroup_blocks(const LaurentMonomial& part, int node,
                                   const std::vector<int>& offsets)
{
    std::vector<Factor> blocks;
    LaurentMonomial rest = part;
    const int lowest = offsets.front();
    const int ceiling = part.is_identity() ? 0 : part.max_shift();
    while (!rest.is_identity()) {
        const Factor f = rest.factors().front();
        const int centre = f.shift - lowest;
        if (f.shift > ceiling)
            break;
        std::vector<Factor> block;
        for (int o : offsets)
            block.push_back({node, centre + o, f.exp});
        rest = rest / LaurentMonomial(std::move(block));
        blocks.push_back({node, centre, f.exp});
    }
    if (!rest.is_identity())
        throw LweightError("monomial does not regroup into W-blocks at node " +
                           std::to_string(node));
    return blocks;
}

} // namespace

PsiMonomial PsiMonomial::identity(int rank) { return {LaurentMonomial{}, zero_weight(rank)}; }

PsiMonomial PsiMonomial::variable(int rank, int node, int shift, int exp)
{
    return {LaurentMonomial::variable(node, shift, exp), zero_weight(rank)};
}

PsiMonomial PsiMonomial::weight(const RationalWeight& omega) { return {LaurentMonomial{}, omega}; }

PsiMonomial PsiMonomial::inverse() const
{
    PsiMonomial out{psi.inverse(), omega};
    for (Eigen::Index i = 0; i < out.omega.size(); ++i)
        out.omega(i) = -out.omega(i);
    return out;
}

PsiMonomial PsiMonomial::shifted(int s) const { return {psi.shifted(s), omega}; }

PsiMonomial& PsiMonomial::operator*=(const PsiMonomial& other)
{
    psi *= other.psi;
    if (omega.size() == 0)
        omega = other.omega;
    else
        for (Eigen::Index i = 0; i < other.omega.size(); ++i)
            omega(i) += other.omega(i);
    return *this;
}

bool operator==(const PsiMonomial& a, const PsiMonomial& b)
{
    return a.psi == b.psi && same_weight(a.omega, b.omega);
}

PsiMonomial embed_Y(const CartanData& cd, const YMonomial& m)
{
    std::vector<Factor> psi;
    RationalWeight omega = zero_weight(cd.rank);
    for (const Factor& f : m.factors()) {
        const int d = cd.d(f.node);
        psi.push_back({f.node, f.shift - d, f.exp});
        psi.push_back({f.node, f.shift + d, -f.exp});
        omega(f.node - 1) += f.exp;
    }
    return {LaurentMonomial(std::move(psi)), omega};
}

PsiMonomial tilde_psi(const CartanData& cd, int node, int r)
{
    std::vector<Factor> f{{node, r, -1}};
    for (int j = 1; j <= cd.rank; ++j) {
        if (j == node)
            continue;
        switch (cd.c(node, j)) {
        case -1:
            f.push_back({j, r + cd.d(node), 1});
            break;
        case -2:
            f.push_back({j, r, 1});
            f.push_back({j, r + 2, 1});
            break;
        case -3:
            f.push_back({j, r - 1, 1});
            f.push_back({j, r + 1, 1});
            f.push_back({j, r + 3, 1});
            break;
        default:
            break;
        }
    }
    return {LaurentMonomial(std::move(f)), zero_weight(cd.rank)};
}

PsiMonomial sigma(const PsiMonomial& p)
{
    std::vector<Factor> f;
    for (const Factor& x : p.psi.factors())
        f.push_back({x.node, -x.shift, -x.exp});
    return {LaurentMonomial(std::move(f)), p.omega};
}

PsiMonomial Omega(const PsiMonomial& p)
{
    std::vector<Factor> f;
    for (const Factor& x : p.psi.factors())
        f.push_back({x.node, -x.shift, x.exp});
    return {LaurentMonomial(std::move(f)), p.omega};
}

ExtendedBraid::ExtendedBraid(CartanPtr cd) : cd_(std::move(cd))
{
    for (int i = 1; i <= cd_->rank; ++i) {
        image_.push_back(sigma(tilde_psi(*cd_, i, -2 * cd_->d(i)).inverse()).psi);
        reflection_.push_back(reflection_matrix(*cd_, i));
    }
}

PsiMonomial ExtendedBraid::T_prime(int node, const PsiMonomial& p) const
{
    std::vector<Factor> out;
    const LaurentMonomial& img = image_[static_cast<std::size_t>(node - 1)];
    for (const Factor& f : p.psi.factors()) {
        if (f.node != node) {
            out.push_back(f);
            continue;
        }
        for (const Factor& g : img.factors())
            out.push_back({g.node, g.shift + f.shift, g.exp * f.exp});
    }
    RationalWeight omega = p.omega;
    if (omega.size() > 0) {
        const MatrixX<int>& s = reflection_[static_cast<std::size_t>(node - 1)];
        for (Eigen::Index a = 0; a < omega.size(); ++a) {
            Rational acc(0);
            for (Eigen::Index b = 0; b < omega.size(); ++b)
                acc += Rational(s(a, b)) * p.omega(b);
            omega(a) = acc;
        }
    }
    return {LaurentMonomial(std::move(out)), omega};
}

PsiMonomial ExtendedBraid::T_prime_word(const std::vector<int>& word, const PsiMonomial& p) const
{
    PsiMonomial out = p;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        out = T_prime(*it, out);
    return out;
}

PsiMonomial ExtendedBraid::T_prime_w(const WeylElement& w, const PsiMonomial& p) const
{
    return T_prime_word(w.word(), p);
}

PsiMonomial psi_by_substitution(const BraidAction& braid, const WeylElement& w, int node, int r)
{
    const CartanData& cd = braid.cartan();
    const YMonomial y = braid.T_w(w, YMonomial::variable(node, 0));
    const int di = cd.d(node);
    std::vector<Factor> psi;
    for (int k = 1; k <= cd.rank; ++k) {
        const LaurentMonomial part = y.restricted_to(k);
        if (part.is_identity())
            continue;
        const int dk = cd.d(k);
        if (dk >= di) {
            if (dk % di != 0)
                throw LweightError("unsupported symmetrizer pair");
            const std::vector<int> offs = spread(dk / di);
            for (const Factor& f : part.factors())
                for (int o : offs)
                    psi.push_back({k, -f.shift + o, f.exp});
        } else {
            // Short node seen from a long one: blocks follow the gap to r^vee.
            const int gap = cd.lacing - dk;
            std::vector<int> offsets;
            if (gap == 0)
                offsets = {0};
            else if (gap == 1)
                offsets = {-1, 1};
            else if (gap == 2)
                offsets = {-2, 0, 2};
            else
                throw LweightError("unsupported lacing gap");
            for (const Factor& b : regroup_blocks(part, k, offsets))
                psi.push_back({k, -b.shift, b.exp});
        }
    }
    return PsiMonomial{LaurentMonomial(std::move(psi)), zero_weight(cd.rank)}.shifted(r);
}

PsiMonomial psi_by_braid(const ExtendedBraid& ext, const WeylElement& w, int node, int r)
{
    const PsiMonomial base = PsiMonomial::variable(ext.cartan().rank, node, r);
    return sigma(ext.T_prime_w(w, sigma(base)));
}

PsiMonomial psi_extremal(const BraidAction& braid, const ExtendedBraid& ext, const WeylElement& w,
                         int node, int r)
{
    PsiMonomial a = psi_by_substitution(braid, w, node, r);
    const PsiMonomial b = psi_by_braid(ext, w, node, r);
    if (!(a == b))
        throw LweightError("Psi_{w(omega_" + std::to_string(node) + ")} routes disagree for w = [" +
                           word_to_string(w.word()) + "]: " + to_text(a) + " vs " + to_text(b));
    return a;
}

std::string to_text(const PsiMonomial& p)
{
    std::ostringstream os;
    bool any = false;
    for (Eigen::Index i = 0; i < p.omega.size(); ++i)
        any = any || p.omega(i) != 0;
    if (any) {
        os << "[";
        for (Eigen::Index i = 0; i < p.omega.size(); ++i)
            os << (i ? "," : "") << to_string(p.omega(i));
        os << "] ";
    }
    os << to_text(p.psi, "Psi");
    return os.str();
}

} // namespace qchar

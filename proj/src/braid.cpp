#include "qchar/braid.hpp"

#include <algorithm>

namespace qchar {

const char* to_string(Ordering o)
{
    switch (o) {
    case Ordering::less: return "less";
    case Ordering::equal: return "equal";
    case Ordering::greater: return "greater";
    case Ordering::incomparable: return "incomparable";
    }
    return "?";
}

BraidAction::BraidAction(CartanPtr cd) : cd_(std::move(cd))
{
    for (int i = 1; i <= cd_->rank; ++i) {
        const int di = cd_->d(i);
        const YMonomial y = YMonomial::variable(i, 0);
        forward_.push_back(y / make_A(*cd_, i, di));
        backward_.push_back(y / make_A(*cd_, i, -di));
    }
}

YMonomial BraidAction::apply(const std::vector<YMonomial>& images, int node,
                             const YMonomial& m) const
{
    std::vector<Factor> out;
    out.reserve(m.size() + 4);
    const YMonomial& img = images[static_cast<std::size_t>(node - 1)];
    for (const Factor& f : m.factors()) {
        if (f.node != node) {
            out.push_back(f);
            continue;
        }
        for (const Factor& g : img.factors())
            out.push_back({g.node, g.shift + f.shift, g.exp * f.exp});
    }
    return YMonomial(std::move(out));
}

YMonomial BraidAction::T(int node, const YMonomial& m) const { return apply(forward_, node, m); }

YMonomial BraidAction::T_inv(int node, const YMonomial& m) const
{
    return apply(backward_, node, m);
}

YMonomial BraidAction::T_w(const WeylElement& w, const YMonomial& m) const
{
    return T_word(w.word(), m);
}

YMonomial BraidAction::T_word(const std::vector<int>& word, const YMonomial& m) const
{
    YMonomial out = m;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        out = T(*it, out);
    return out;
}

YMonomial BraidAction::T_w_inv(const WeylElement& w, const YMonomial& m) const
{
    YMonomial out = m;
    for (int i : w.word())
        out = T_inv(i, out);
    return out;
}

TwistedRoot twisted_root(const BraidAction& braid, const WeylElement& w, int node, int r)
{
    return {w, node, r, braid.T_w(w, make_A(braid.cartan(), node, r))};
}

std::optional<RootExponents> factor_in_Aw(const BraidAction& braid, const YMonomial& m,
                                          const YMonomial& anchor, const WeylElement& w)
{
    return factor_in_A(braid.cartan(), braid.T_w_inv(w, m), braid.T_w_inv(w, anchor));
}

bool all_nonpositive(const RootExponents& e)
{
    return std::all_of(e.factors().begin(), e.factors().end(),
                       [](const Factor& f) { return f.exp <= 0; });
}

Ordering compare_w(const BraidAction& braid, const YMonomial& m, const YMonomial& other,
                   const WeylElement& w)
{
    const auto e = factor_in_Aw(braid, m, other, w);
    if (!e)
        return Ordering::incomparable;
    if (e->is_identity())
        return Ordering::equal;
    if (all_nonpositive(*e))
        return Ordering::less;
    if (all_nonpositive(e->inverse()))
        return Ordering::greater;
    return Ordering::incomparable;
}

} // namespace qchar

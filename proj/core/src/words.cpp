#include "twd/words.hpp"

#include <algorithm>
#include <sstream>

namespace twd {

std::vector<Int> CurveWord::exponent_sums(std::size_t handles) const
{
    std::vector<Int> s(handles);
    for (const Letter& l : letters) {
        if (l.handle >= handles)
            throw DomainError("curve word uses handle " + std::to_string(l.handle) + " of " +
                              std::to_string(handles));
        s[l.handle] += l.sign;
    }
    return s;
}

namespace {

std::string handle_name(std::size_t h, std::size_t handles)
{
    if (handles == 2)
        return h == 0 ? "B" : "C";
    return "H" + std::to_string(h + 1);
}

}  // namespace

std::string to_string(const CurveWord& w, std::size_t handles)
{
    std::string out;
    for (const Letter& l : w.letters) {
        if (!out.empty())
            out += ' ';
        out += handle_name(l.handle, handles);
        out += l.sign > 0 ? '+' : '-';
    }
    return out;
}

CurveWord parse_curve_word(const std::string& s, std::size_t handles)
{
    CurveWord w;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        if (tok.size() < 2 || (tok.back() != '+' && tok.back() != '-'))
            throw DomainError("bad curve word token '" + tok + "'");
        int sign = tok.back() == '+' ? 1 : -1;
        std::string name = tok.substr(0, tok.size() - 1);
        std::size_t h = handles;
        for (std::size_t k = 0; k < handles; ++k)
            if (handle_name(k, handles) == name)
                h = k;
        if (h == handles)
            throw DomainError("unknown handle '" + name + "'");
        w.letters.push_back({h, sign});
    }
    return w;
}

CurveWord torus_word(const Int& a, const Int& b)
{
    if (a == 0 && b == 0)
        throw DomainError("torus_word: zero slope");
    if (gcd(a, b) != 1)
        throw DomainError("torus_word: (" + to_string(a) + "," + to_string(b) + ") is not primitive");
    // Crossing times (2k-1)/(2|a|) and (2m-1)/(2|b|) on t in (0,1). At a
    // tie the raised start height makes an ascending line meet the
    // horizontal edge first and a descending one last.
    struct Event {
        Rational t;
        int tie;
        Letter letter;
    };
    std::vector<Event> ev;
    const Int pa = abs(a), pb = abs(b);
    for (Int k = 1; k <= pa; ++k)
        ev.push_back({Rational(2 * k - 1, 2 * pa), 0, {0, sign(a)}});
    for (Int m = 1; m <= pb; ++m)
        ev.push_back({Rational(2 * m - 1, 2 * pb), b > 0 ? -1 : 1, {1, sign(b)}});
    std::stable_sort(ev.begin(), ev.end(), [](const Event& x, const Event& y) {
        return x.t != y.t ? x.t < y.t : x.tie < y.tie;
    });
    CurveWord w;
    for (const Event& e : ev)
        w.letters.push_back(e.letter);
    return w;
}

IntMatrix Presentation::abelianization() const
{
    IntMatrix m(generators.size(), relators.size());
    for (std::size_t j = 0; j < relators.size(); ++j)
        for (const auto& [g, e] : relators[j])
            m(g, j) += e;
    return m;
}

std::string Presentation::to_string() const
{
    std::string out = "<";
    for (std::size_t k = 0; k < generators.size(); ++k)
        out += (k ? "," : "") + generators[k];
    out += " |";
    for (std::size_t j = 0; j < relators.size(); ++j) {
        out += j ? ", " : " ";
        if (relators[j].empty())
            out += "1";
        for (std::size_t s = 0; s < relators[j].size(); ++s) {
            const auto& [g, e] = relators[j][s];
            out += (s ? " " : "") + generators[g];
            if (e != 1)
                out += "^" + twd::to_string(e);
        }
    }
    return out + ">";
}

}  // namespace twd

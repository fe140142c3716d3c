#include "sheafloc/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <vector>

#include "sheafloc/errors.hpp"

namespace sheafloc {

DegreeWindow::DegreeWindow(int zMin, int zMax, int uMax, int vMax)
    : zMin(zMin), zMax(zMax), uMax(uMax), vMax(vMax)
{
    if (zMin > zMax) throw UsageError("degree window with zMin > zMax");
    if (uMax < 0 || vMax < 0) throw UsageError("degree window with negative normal bound");
}

DegreeWindow DegreeWindow::doubled() const
{
    const int grow = (zMax - zMin + 2) / 2;
    return DegreeWindow(zMin - grow, zMax + grow, uMax, vMax);
}

LaurentSection::LaurentSection(Arity arity, const Monomial& m, Scalar coeff) : arity_(arity)
{
    if (m.r < 0 || m.t < 0) throw UsageError("negative u or v exponent");
    if (arity == Arity::Surface && m.t != 0) throw UsageError("v exponent on a surface section");
    if (coeff != 0) terms_.emplace(m, std::move(coeff));
}

Scalar LaurentSection::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void LaurentSection::add_term(const Monomial& m, const Scalar& c)
{
    if (c == 0) return;
    if (m.r < 0 || m.t < 0) throw UsageError("negative u or v exponent");
    if (arity_ == Arity::Surface && m.t != 0) throw UsageError("v exponent on a surface section");
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentSection::check_same_arity(const LaurentSection& other) const
{
    if (arity_ != other.arity_) throw UsageError("arity mismatch between sections");
}

LaurentSection LaurentSection::operator-() const
{
    LaurentSection out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

LaurentSection& LaurentSection::operator+=(const LaurentSection& other)
{
    check_same_arity(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

LaurentSection& LaurentSection::operator-=(const LaurentSection& other)
{
    check_same_arity(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

LaurentSection& LaurentSection::operator*=(const Scalar& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_) x *= c;
    return *this;
}

LaurentSection operator*(const LaurentSection& a, const LaurentSection& b)
{
    return multiply(a, b);
}

LaurentSection LaurentSection::shifted(const Monomial& m) const
{
    LaurentSection out(arity_);
    for (const auto& [x, c] : terms_) out.add_term(x * m, c);
    return out;
}

int LaurentSection::max_abs_z_degree() const
{
    int best = 0;
    for (const auto& [m, c] : terms_) best = std::max(best, std::abs(m.s));
    return best;
}

int LaurentSection::min_degree() const
{
    int best = -1;
    for (const auto& [m, c] : terms_) {
        if (best < 0 || m.degree() < best) best = m.degree();
    }
    return best;
}

LaurentSection multiply(const LaurentSection& a, const LaurentSection& b)
{
    if (a.arity() != b.arity()) throw UsageError("arity mismatch in multiply");
    LaurentSection out(a.arity());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) out.add_term(ma * mb, ca * cb);
    }
    return out;
}

LaurentSection substitute_v_with_cu(const LaurentSection& a, const Scalar& c)
{
    if (a.arity() != Arity::Threefold)
        throw UsageError("substitute_v_with_cu needs a threefold section");
    LaurentSection out(Arity::Surface);
    for (const auto& [m, x] : a.terms()) {
        Scalar coeff = x;
        for (int i = 0; i < m.t; ++i) coeff *= c;
        out.add_term(Monomial{m.s, m.r + m.t, 0}, coeff);
    }
    return out;
}

LaurentSection swap_u_v(const LaurentSection& a)
{
    if (a.arity() != Arity::Threefold) throw UsageError("swap_u_v needs a threefold section");
    LaurentSection out(Arity::Threefold);
    for (const auto& [m, x] : a.terms()) out.add_term(Monomial{m.s, m.t, m.r}, x);
    return out;
}

LaurentSection filter(const LaurentSection& a, const DegreeWindow& w)
{
    LaurentSection out(a.arity());
    for (const auto& [m, c] : a.terms()) {
        if (w.contains(m)) out.add_term(m, c);
    }
    return out;
}

LaurentSection truncate_degree(const LaurentSection& a, int maxDegree)
{
    LaurentSection out(a.arity());
    for (const auto& [m, c] : a.terms()) {
        if (m.degree() <= maxDegree) out.add_term(m, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing and printing

namespace {

int parse_exponent(std::string_view text, std::string_view term)
{
    int value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last)
        throw UsageError("bad exponent in term '" + std::string(term) +
                         "' (grammar: coeff*z^a*u^b*v^c)");
    return value;
}

void parse_term(std::string_view term, bool negative, Arity arity, LaurentSection& out)
{
    if (term.empty()) throw UsageError("empty term (grammar: coeff*z^a*u^b*v^c)");
    Scalar coeff = negative ? -1 : 1;
    Monomial m;
    bool sawCoeff = false;
    std::size_t start = 0;
    while (start <= term.size()) {
        std::size_t stop = term.find('*', start);
        if (stop == std::string_view::npos) stop = term.size();
        std::string_view factor = term.substr(start, stop - start);
        if (factor.empty())
            throw UsageError("empty factor in term '" + std::string(term) +
                             "' (grammar: coeff*z^a*u^b*v^c)");
        const char head = factor[0];
        if (head == 'z' || head == 'u' || head == 'v') {
            int e = 1;
            if (factor.size() > 1) {
                if (factor[1] != '^')
                    throw UsageError("bad factor '" + std::string(factor) +
                                     "' (grammar: coeff*z^a*u^b*v^c)");
                e = parse_exponent(factor.substr(2), term);
            }
            if (head == 'z') m.s += e;
            if (head == 'u') {
                if (e < 0) throw UsageError("negative u exponent in '" + std::string(term) + "'");
                m.r += e;
            }
            if (head == 'v') {
                if (arity == Arity::Surface)
                    throw UsageError("v is not a variable on a surface: '" + std::string(term) + "'");
                if (e < 0) throw UsageError("negative v exponent in '" + std::string(term) + "'");
                m.t += e;
            }
        } else {
            if (sawCoeff)
                throw UsageError("two coefficients in term '" + std::string(term) + "'");
            coeff *= parse_scalar(factor);
            sawCoeff = true;
        }
        start = stop + 1;
    }
    out.add_term(m, coeff);
}

}  // namespace

LaurentSection parse_section(std::string_view text, Arity arity)
{
    std::string compact;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
    }
    if (compact.empty()) throw UsageError("empty polynomial (grammar: coeff*z^a*u^b*v^c)");

    LaurentSection out(arity);
    if (compact == "0") return out;

    std::size_t i = 0;
    while (i < compact.size()) {
        bool negative = false;
        if (compact[i] == '+' || compact[i] == '-') {
            negative = compact[i] == '-';
            ++i;
        } else if (i != 0) {
            throw UsageError("malformed polynomial '" + std::string(text) + "'");
        }
        std::size_t j = i;
        // A sign directly after '^' belongs to the exponent.
        while (j < compact.size() &&
               !((compact[j] == '+' || compact[j] == '-') && j > i && compact[j - 1] != '^'))
            ++j;
        parse_term(std::string_view(compact).substr(i, j - i), negative, arity, out);
        i = j;
    }
    return out;
}

namespace {

void append_power(std::string& out, char var, int e)
{
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += var;
    if (e != 1) out += '^' + std::to_string(e);
}

}  // namespace

std::string to_string(const LaurentSection& a)
{
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : a.terms()) {
        Scalar mag = abs(c);
        if (first) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string body;
        append_power(body, 'u', m.r);
        append_power(body, 'v', m.t);
        append_power(body, 'z', m.s);
        if (body.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += body;
        } else {
            out += mag.get_str() + "*" + body;
        }
    }
    return out;
}

}  // namespace sheafloc

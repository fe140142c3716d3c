#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "sheafloc/monomial.hpp"
#include "sheafloc/scalar.hpp"

namespace sheafloc {

/// Number of chart variables: 2 for (z, u) on surfaces, 3 for (z, u, v).
enum class Arity { Surface = 2, Threefold = 3 };

/// Box of exponents used to truncate sections: zMin <= s <= zMax,
/// r <= uMax, t <= vMax.
struct DegreeWindow {
    int zMin = 0;
    int zMax = 0;
    int uMax = 0;
    int vMax = 0;

    DegreeWindow() = default;
    DegreeWindow(int zMin, int zMax, int uMax, int vMax = 0);

    bool contains(const Monomial& m) const
    {
        return m.s >= zMin && m.s <= zMax && m.r <= uMax && m.t <= vMax;
    }

    /// Same normal degrees, z-range twice as wide (grown evenly on both sides).
    DegreeWindow doubled() const;

    friend bool operator==(const DegreeWindow&, const DegreeWindow&) = default;
};

/// Finite exact combination of monomials z^s u^r (v^t). Zero coefficients are
/// never stored. Values are immutable in spirit: every operation returns a new
/// section.
class LaurentSection {
public:
    using Terms = std::map<Monomial, Scalar>;

    explicit LaurentSection(Arity arity = Arity::Surface) : arity_(arity) {}
    LaurentSection(Arity arity, const Monomial& m, Scalar coeff = 1);

    static LaurentSection monomial(Arity arity, int s, int r, int t = 0, Scalar coeff = 1)
    {
        return LaurentSection(arity, Monomial{s, r, t}, std::move(coeff));
    }

    Arity arity() const { return arity_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Scalar coefficient(const Monomial& m) const;

    /// Adds c * m in place; drops the term if it cancels. Used by builders.
    void add_term(const Monomial& m, const Scalar& c);

    LaurentSection operator-() const;
    LaurentSection& operator+=(const LaurentSection& other);
    LaurentSection& operator-=(const LaurentSection& other);
    LaurentSection& operator*=(const Scalar& c);

    friend LaurentSection operator+(LaurentSection a, const LaurentSection& b) { return a += b; }
    friend LaurentSection operator-(LaurentSection a, const LaurentSection& b) { return a -= b; }
    friend LaurentSection operator*(LaurentSection a, const Scalar& c) { return a *= c; }
    friend LaurentSection operator*(const Scalar& c, LaurentSection a) { return a *= c; }
    friend LaurentSection operator*(const LaurentSection& a, const LaurentSection& b);

    /// Multiplies every exponent by the given monomial.
    LaurentSection shifted(const Monomial& m) const;

    /// Largest |s| among the terms, 0 for the zero section.
    int max_abs_z_degree() const;
    /// Smallest normal degree r + t among the terms; -1 for the zero section.
    int min_degree() const;

    friend bool operator==(const LaurentSection&, const LaurentSection&) = default;

private:
    void check_same_arity(const LaurentSection& other) const;

    Arity arity_;
    Terms terms_;
};

/// Exact product; throws UsageError when arities differ.
LaurentSection multiply(const LaurentSection& a, const LaurentSection& b);

/// Replaces every v^t by (c u)^t; a threefold section becomes a surface one.
LaurentSection substitute_v_with_cu(const LaurentSection& a, const Scalar& c);

/// Exchanges the roles of u and v (threefold only).
LaurentSection swap_u_v(const LaurentSection& a);

/// Keeps exactly the terms whose exponents lie in the window.
LaurentSection filter(const LaurentSection& a, const DegreeWindow& w);

/// Drops terms of normal degree r + t above maxDegree.
LaurentSection truncate_degree(const LaurentSection& a, int maxDegree);

/// Text grammar: terms `coeff*z^a*u^b*v^c` joined by + and -, coeff an integer
/// or p/q, exponents optional when 1, factors in any order. Negative u or v
/// exponents are rejected, as is v on a surface.
LaurentSection parse_section(std::string_view text, Arity arity);

/// Canonical printing, terms in (r, t, s) order; "0" for the zero section.
std::string to_string(const LaurentSection& a);

}  // namespace sheafloc

#pragma once

// Exact model of the bigraded F2 cohomology of the two Z/2 orbits: the ring of
// the fixed point (two cones, polynomial on rho and tau above, the infinitely
// divisible theta family below) and the Laurent ring Z/2[t, t^-1] of the free
// orbit, plus the restriction map between them.

#include <cctype>
#include <compare>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>

namespace z2ss {

// Bigrading (p, w): p is the topological degree, w counts twists.
struct Bidegree {
    int p = 0;
    int w = 0;

    friend constexpr Bidegree operator+(Bidegree a, Bidegree b) { return {a.p + b.p, a.w + b.w}; }
    friend constexpr Bidegree operator-(Bidegree a, Bidegree b) { return {a.p - b.p, a.w - b.w}; }
    friend constexpr auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

// F2 dimension of the point cohomology at (p, w).
// Positive cone: 0 <= p <= w.  Negative cone: p <= 0 and w <= p - 2.
constexpr int point_dim(Bidegree d) {
    if (d.p >= 0 && d.p <= d.w) return 1;
    if (d.p <= 0 && d.w <= d.p - 2) return 1;
    return 0;
}

// Basis element of the point cohomology.  Every nonzero graded piece is
// one-dimensional, so an element is Zero, a monomial rho^a tau^b in the
// positive cone, or theta/(rho^a tau^b) in the negative cone.
class GroundElement {
  public:
    constexpr GroundElement() = default;

    static constexpr GroundElement zero() { return GroundElement(); }
    static constexpr GroundElement top(int a, int b) { return GroundElement(Kind::Top, a, b); }
    static constexpr GroundElement bottom(int a, int b) { return GroundElement(Kind::Bottom, a, b); }
    static constexpr GroundElement one() { return top(0, 0); }
    static constexpr GroundElement rho() { return top(1, 0); }
    static constexpr GroundElement tau() { return top(0, 1); }
    static constexpr GroundElement tau_power(int b) { return top(0, b); }
    static constexpr GroundElement theta() { return bottom(0, 0); }

    constexpr bool is_zero() const { return kind_ == Kind::Zero; }
    constexpr bool is_top() const { return kind_ == Kind::Top; }
    constexpr bool is_bottom() const { return kind_ == Kind::Bottom; }
    constexpr bool is_one() const { return is_top() && a_ == 0 && b_ == 0; }

    // rho exponent / tau exponent (divisor exponents for bottom elements).
    constexpr int a() const { return a_; }
    constexpr int b() const { return b_; }

    // Top(a,b) sits at (a, a+b); Bottom(a,b) at (-a, -2-a-b).
    constexpr Bidegree degree() const {
        if (is_top()) return {a_, a_ + b_};
        if (is_bottom()) return {-a_, -2 - a_ - b_};
        return {0, 0};  // zero carries no degree; callers guard on is_zero()
    }

    std::string text() const;
    static std::optional<GroundElement> parse(std::string_view s);

    friend constexpr auto operator<=>(const GroundElement&, const GroundElement&) = default;

  private:
    enum class Kind { Zero, Top, Bottom };

    constexpr GroundElement(Kind kind, int a, int b) : kind_(kind), a_(a), b_(b) {}

    Kind kind_ = Kind::Zero;
    int a_ = 0;
    int b_ = 0;
};

// The basis element at a bidegree, or Zero when the graded piece vanishes.
constexpr GroundElement element_at(Bidegree d) {
    if (d.p >= 0 && d.p <= d.w) return GroundElement::top(d.p, d.w - d.p);
    if (d.p <= 0 && d.w <= d.p - 2) return GroundElement::bottom(-d.p, d.p - d.w - 2);
    return GroundElement::zero();
}

// Products of basis elements.  Topends multiply freely; a top monomial divides
// into a bottom element exponentwise or kills it; Bottom x Bottom = 0 (the
// graded pieces the product would land in are all empty or unreachable).
constexpr GroundElement point_mul(GroundElement x, GroundElement y) {
    if (x.is_zero() || y.is_zero()) return GroundElement::zero();
    if (x.is_bottom() && y.is_top()) return point_mul(y, x);
    if (x.is_top() && y.is_top()) return GroundElement::top(x.a() + y.a(), x.b() + y.b());
    if (x.is_top() && y.is_bottom()) {
        if (x.a() <= y.a() && x.b() <= y.b()) return GroundElement::bottom(y.a() - x.a(), y.b() - x.b());
        return GroundElement::zero();
    }
    return GroundElement::zero();  // bottom x bottom
}

// Element of the free-orbit ring Z/2[t, t^-1]; t^k sits in degree (0, k).
class OrbitElement {
  public:
    constexpr OrbitElement() = default;

    static constexpr OrbitElement zero() { return OrbitElement(); }
    static constexpr OrbitElement t_power(int k) { return OrbitElement(false, k); }
    static constexpr OrbitElement one() { return t_power(0); }

    constexpr bool is_zero() const { return zero_; }
    constexpr int exponent() const { return k_; }
    constexpr Bidegree degree() const { return {0, k_}; }

    std::string text() const;
    static std::optional<OrbitElement> parse(std::string_view s);

    friend constexpr auto operator<=>(const OrbitElement&, const OrbitElement&) = default;

  private:
    constexpr OrbitElement(bool zero, int k) : zero_(zero), k_(k) {}

    bool zero_ = true;
    int k_ = 0;
};

// The Laurent ring is one copy of F2 in every degree (0, k).
constexpr int orbit_dim(Bidegree d) { return d.p == 0 ? 1 : 0; }

constexpr OrbitElement orbit_mul(OrbitElement x, OrbitElement y) {
    if (x.is_zero() || y.is_zero()) return OrbitElement::zero();
    return OrbitElement::t_power(x.exponent() + y.exponent());
}

// Restriction to the free orbit.  tau^b restricts to t^b; anything with a rho
// factor lands in a vanishing degree; the negative cone restricts to zero.
constexpr OrbitElement restrict_to_orbit(GroundElement x) {
    if (x.is_top() && x.a() == 0) return OrbitElement::t_power(x.b());
    return OrbitElement::zero();
}

// --- canonical text ---------------------------------------------------------
// "1", "rho^a tau^b", "theta/(rho^a tau^b)", "t^k"; unit exponents drop the
// caret, zero exponents drop the factor.

namespace detail {

inline std::string monomial_text(int a, int b) {
    std::string s;
    if (a == 1) s += "rho";
    else if (a > 1) s += "rho^" + std::to_string(a);
    if (b > 0 && !s.empty()) s += ' ';
    if (b == 1) s += "tau";
    else if (b > 1) s += "tau^" + std::to_string(b);
    return s;
}

// Parses "rho^a tau^b" (either factor optional); returns false on junk.
inline bool parse_monomial(std::string_view s, int& a, int& b) {
    a = 0;
    b = 0;
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && s[i] == ' ') ++i; };
    auto read_factor = [&](std::string_view name, int& exp) -> bool {
        if (s.compare(i, name.size(), name) != 0) return false;
        i += name.size();
        exp = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            size_t start = i;
            while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) != 0)) ++i;
            if (i == start) return false;
            exp = std::atoi(std::string(s.substr(start, i - start)).c_str());
        }
        return true;
    };
    skip_ws();
    if (i < s.size() && s[i] == 'r') {
        if (!read_factor("rho", a)) return false;
    }
    skip_ws();
    if (i < s.size() && s[i] == 't') {
        if (!read_factor("tau", b)) return false;
    }
    skip_ws();
    return i == s.size();
}

}  // namespace detail

inline std::string GroundElement::text() const {
    switch (kind_) {
        case Kind::Zero:
            return "0";
        case Kind::Top:
            return is_one() ? "1" : detail::monomial_text(a_, b_);
        case Kind::Bottom:
            if (a_ == 0 && b_ == 0) return "theta";
            return "theta/(" + detail::monomial_text(a_, b_) + ")";
    }
    return "0";
}

inline std::optional<GroundElement> GroundElement::parse(std::string_view s) {
    if (s == "0") return zero();
    if (s == "1") return one();
    if (s == "theta") return theta();
    if (s.starts_with("theta/(") && s.ends_with(")")) {
        int a = 0;
        int b = 0;
        if (!detail::parse_monomial(s.substr(7, s.size() - 8), a, b)) return std::nullopt;
        if (a == 0 && b == 0) return std::nullopt;
        return bottom(a, b);
    }
    int a = 0;
    int b = 0;
    if (detail::parse_monomial(s, a, b) && (a > 0 || b > 0)) return top(a, b);
    return std::nullopt;
}

inline std::string OrbitElement::text() const {
    if (zero_) return "0";
    if (k_ == 0) return "1";
    if (k_ == 1) return "t";
    return "t^" + std::to_string(k_);
}

inline std::optional<OrbitElement> OrbitElement::parse(std::string_view s) {
    if (s == "0") return zero();
    if (s == "1") return one();
    if (s == "t") return t_power(1);
    if (s.starts_with("t^")) {
        std::string rest(s.substr(2));
        if (rest.empty()) return std::nullopt;
        size_t i = rest[0] == '-' ? 1 : 0;
        if (i == rest.size()) return std::nullopt;
        for (size_t j = i; j < rest.size(); ++j)
            if (std::isdigit(static_cast<unsigned char>(rest[j])) == 0) return std::nullopt;
        return t_power(std::atoi(rest.c_str()));
    }
    return std::nullopt;
}

}  // namespace z2ss

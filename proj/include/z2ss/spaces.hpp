#pragma once

// Built-in presentations and ring data: points, representation spheres,
// twisted projective spaces, and the free-monoid cell models of loop spaces.

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "z2ss/charts.hpp"
#include "z2ss/errors.hpp"
#include "z2ss/ground.hpp"

namespace z2ss {

inline ModulePresentation point_presentation() {
    ModulePresentation m{"point", {{"1", {0, 0}}}, {1}, true, true};
    m.validate();
    return m;
}

// S^{p,q}: cells in degrees (0,0) and (p,q); the fixed set is S^{p-q}.
// one_connected encodes the hypothesis under which both the underlying sphere
// and its fixed sphere are simply connected: p >= 2 and p - q >= 2.
inline ModulePresentation sphere_presentation(int p, int q) {
    if (q < 0 || q > p) throw std::invalid_argument("sphere_presentation: need 0 <= q <= p");
    ModulePresentation m;
    m.name = "sphere:" + std::to_string(p) + "," + std::to_string(q);
    m.generators = {{"1", {0, 0}}, {"top", {p, q}}};
    const int fixed_dim = p - q;
    if (fixed_dim == 0) {
        m.fixed_betti = {2};  // two fixed points
    } else {
        m.fixed_betti.assign(static_cast<size_t>(fixed_dim) + 1, 0);
        m.fixed_betti.front() = 1;
        m.fixed_betti.back() = 1;
    }
    m.one_connected = (p >= 2 && p - q >= 2);
    m.fixed_connected = (fixed_dim >= 1);
    m.validate();
    return m;
}

// The space of lines in R^{p,q} is unchanged by q -> p - q; normalize to the
// smaller twist.
inline std::pair<int, int> normalize_projective(int p, int q) {
    if (p < 1 || q < 0 || q > p) throw std::invalid_argument("normalize_projective: need p >= 1 and 0 <= q <= p");
    return {p, std::min(q, p - q)};
}

// Free-module chart of the projective space of lines in R^{p,q}: one generator
// g_k in degree (k, min(ceil(k/2), q)) for k = 0..p-1.  The fixed set is the
// disjoint union of the projective spaces of the eigenspaces, RP^{q-1} and
// RP^{p-q-1}, whose mod-2 Betti numbers just add.
inline ModulePresentation projective_presentation(int p, int q) {
    auto [pn, qn] = normalize_projective(p, q);
    ModulePresentation m;
    m.name = "projective:" + std::to_string(pn) + "," + std::to_string(qn);
    for (int k = 0; k < pn; ++k)
        m.generators.push_back({"g" + std::to_string(k), {k, std::min((k + 1) / 2, qn)}});
    for (int i = 0; i < pn; ++i) {
        const int b = (i <= qn - 1 ? 1 : 0) + (i <= pn - qn - 1 ? 1 : 0);
        m.fixed_betti.push_back(b);
    }
    while (!m.fixed_betti.empty() && m.fixed_betti.back() == 0) m.fixed_betti.pop_back();
    m.one_connected = false;  // projective spaces have fundamental group Z/2
    m.fixed_connected = (qn == 0);
    m.validate();
    return m;
}

// --- the infinite twisted projective space ----------------------------------
// Its cohomology is the ground ring adjoined a in (1,1) and b in (2,1) with the
// single relation a^2 = rho a + tau b; classes normalize to coeff * a^eps b^k.

struct RpMonomial {
    GroundElement coeff = GroundElement::one();
    int a_exp = 0;  // 0 or 1 in normal form
    int b_exp = 0;

    Bidegree degree() const { return coeff.degree() + Bidegree{a_exp + 2 * b_exp, a_exp + b_exp}; }

    friend auto operator<=>(const RpMonomial&, const RpMonomial&) = default;
};

// Sorted, F2-reduced sum of normal-form monomials.
using RpSum = std::vector<RpMonomial>;

namespace detail {

inline void rp_reduce(RpSum& sum) {
    std::sort(sum.begin(), sum.end());
    RpSum out;
    for (const RpMonomial& m : sum) {
        if (m.coeff.is_zero()) continue;
        if (!out.empty() && out.back() == m)
            out.pop_back();  // F2 cancellation
        else
            out.push_back(m);
    }
    sum = std::move(out);
}

}  // namespace detail

// Product of two normal-form monomials; a^2 rewrites to rho a + tau b.
inline RpSum rp_mul(const RpMonomial& x, const RpMonomial& y) {
    const GroundElement c = point_mul(x.coeff, y.coeff);
    if (c.is_zero()) return {};
    const int e = x.a_exp + y.a_exp;
    const int k = x.b_exp + y.b_exp;
    RpSum out;
    if (e <= 1) {
        out.push_back({c, e, k});
    } else {
        // e == 2: c a^2 b^k = c rho a b^k + c tau b^{k+1}
        out.push_back({point_mul(c, GroundElement::rho()), 1, k});
        out.push_back({point_mul(c, GroundElement::tau()), 0, k + 1});
    }
    detail::rp_reduce(out);
    return out;
}

inline RpSum rp_mul(const RpSum& x, const RpSum& y) {
    RpSum out;
    for (const RpMonomial& a : x)
        for (const RpMonomial& b : y)
            for (const RpMonomial& t : rp_mul(a, b)) out.push_back(t);
    detail::rp_reduce(out);
    return out;
}

// --- truncated projective ring data ------------------------------------------
// For the finite space with parameters (p, q) the chart has extra generators
// c_k for 2q < k <= p-1 (with c_{2q} identified as b^q).  The one product the
// model pins down: a c_k = tau c_{k+1}.  Everything else involving a c_k is
// undetermined at this truncation and raises UnspecifiedProduct.

struct TruncatedRelation {
    int p = 0;
    int q = 0;
    int k = 0;  // a c_k = tau c_{k+1}

    Bidegree lhs_degree() const { return Bidegree{1, 1} + Bidegree{k, q}; }
    Bidegree rhs_degree() const { return Bidegree{0, 1} + Bidegree{k + 1, q}; }
};

inline TruncatedRelation truncated_relation(int p, int q, int k) {
    auto [pn, qn] = normalize_projective(p, q);
    if (k < 2 * qn || k >= pn - 1)
        throw std::invalid_argument("truncated_relation: need 2q <= k < p-1 (c_{2q} is b^q)");
    return {pn, qn, k};
}

inline TruncatedRelation a_times_ck(int p, int q, int k) { return truncated_relation(p, q, k); }

[[noreturn]] inline void b_times_ck(int /*p*/, int /*q*/, int k) {
    throw UnspecifiedProduct("b * c_" + std::to_string(k) + " is not determined by the truncated ring data");
}

// --- free-monoid cell models --------------------------------------------------

// Graded cell counts of the free monoid on a list of generating cells; words
// are concatenations, degrees add componentwise.
struct CellModel {
    std::map<Bidegree, int> counts;
    std::map<Bidegree, std::vector<std::string>> words;

    int count(Bidegree d) const {
        auto it = counts.find(d);
        return it == counts.end() ? 0 : it->second;
    }
};

// Enumerates all words with total topological degree <= cutoff.  Generators
// must satisfy the desuspended hypothesis p >= 2 and w <= p-1, which keeps the
// model's cells out of adjacent critical dimensions.
inline CellModel james_cells(std::span<const Bidegree> generators, int cutoff) {
    for (size_t i = 0; i < generators.size(); ++i) {
        const Bidegree g = generators[i];
        if (g.p < 2 || g.w > g.p - 1)
            throw std::invalid_argument("james_cells: generator cell (" + std::to_string(g.p) + "," +
                                        std::to_string(g.w) + ") violates the dimension hypothesis (p >= 2, w <= p-1)");
    }
    CellModel model;
    struct Word {
        Bidegree degree;
        std::string label;
    };
    std::vector<Word> frontier{{Bidegree{0, 0}, ""}};
    model.counts[{0, 0}] = 1;
    model.words[{0, 0}] = {""};
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
            for (size_t i = 0; i < generators.size(); ++i) {
                const Bidegree d = w.degree + generators[i];
                if (d.p > cutoff) continue;
                std::string label = w.label.empty() ? "g" + std::to_string(i) : w.label + ".g" + std::to_string(i);
                model.counts[d] += 1;
                model.words[d].push_back(label);
                next.push_back({d, std::move(label)});
            }
        }
        frontier = std::move(next);
    }
    for (auto& [d, ws] : model.words) std::sort(ws.begin(), ws.end());
    return model;
}

// Loop space of S^{p,q}: free module with one generator x_n in degree
// (n(p-1), nq), exterior over the classes a_i in degree ((p-1)2^{i-1}, q 2^{i-1});
// x_n is the product of the a_i picked by the binary digits of n.
struct LoopSpace {
    ModulePresentation module;
    std::vector<Bidegree> exterior_degrees;  // a_1, a_2, ...
    // Index of the module generator equal to a_i^2, or -1 for the zero class.
    std::vector<int> square_class;
};

inline LoopSpace loops_space(int p, int q, int cutoff) {
    if (p - 1 < 2)
        throw UnsupportedError("loops_space: p = " + std::to_string(p) +
                               " puts model cells in adjacent dimensions; cellular differentials are not "
                               "determined by degree");
    if (q > p - 2) throw std::invalid_argument("loops_space: need q <= p - 2");
    if (q < 0) throw std::invalid_argument("loops_space: need q >= 0");

    LoopSpace out;
    out.module.name = "loops:" + std::to_string(p) + "," + std::to_string(q);
    for (int n = 0; n * (p - 1) <= cutoff; ++n)
        out.module.generators.push_back({"x" + std::to_string(n), {n * (p - 1), n * q}});
    // Underlying space of the loop space is connected with connected fixed set;
    // it is never used as a base, so one_connected stays false.
    out.module.fixed_betti = {1};
    out.module.fixed_connected = true;
    out.module.validate();

    for (int i = 1; (1 << (i - 1)) * (p - 1) <= cutoff; ++i) {
        out.exterior_degrees.push_back({(p - 1) * (1 << (i - 1)), q * (1 << (i - 1))});
        out.square_class.push_back(-1);
    }
    return out;
}

inline ModulePresentation loops_presentation(int p, int q, int cutoff) { return loops_space(p, q, cutoff).module; }

}  // namespace z2ss

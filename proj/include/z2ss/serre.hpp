#pragma once

// E2-page builders wiring charts, Mackey functors and spaces into the page
// engine: the identity fibration, general fibrations with constant
// coefficients, projective bundles (tensor collapse), and the path-loop
// solver including the exterior-square consistency check.

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "z2ss/charts.hpp"
#include "z2ss/errors.hpp"
#include "z2ss/ground.hpp"
#include "z2ss/spaces.hpp"
#include "z2ss/spectra.hpp"

namespace z2ss {

namespace detail {

// Base fixed classes in degree (p, 0): one for each base generator whose
// ground coefficient at the complementary degree is nonzero.
inline std::vector<std::string> bredon_classes(const ModulePresentation& base, int p) {
    std::vector<std::string> out;
    for (const Generator& h : base.generators) {
        const GroundElement z = element_at(Bidegree{p, 0} - h.degree);
        if (z.is_zero()) continue;
        out.push_back(z.is_one() ? h.label : z.text() + "*" + h.label);
    }
    return out;
}

// Singular classes of the fixed set in degree p.
inline std::vector<std::string> betti_classes(const ModulePresentation& base, int p) {
    std::vector<std::string> out;
    const int b = base.betti(p);
    if (b == 1) {
        out.push_back("s" + std::to_string(p));
    } else {
        for (int i = 0; i < b; ++i) out.push_back("s" + std::to_string(p) + "." + std::to_string(i));
    }
    return out;
}

}  // namespace detail

// E2 page of a fibration with the given fiber over a 1-connected base, at one
// weight.  Row q is read off the coefficient functor of the fiber in degree
// (q, r): constant summands contribute the Bredon row of the base, bracket
// summands the singular row of its fixed set; rows whose functor falls outside
// those two kinds are marked unknown across the board.
inline Page e2_serre(const ModulePresentation& base, const ModulePresentation& fiber, int r, int window) {
    if (r < 0)
        throw UnsupportedError("e2_serre: weight " + std::to_string(r) +
                               " < 0 puts coefficient rows in the negative cone, which is not modeled");
    if (!base.one_connected)
        throw UnsupportedError("e2_serre: base " + base.name +
                               " is not equivariantly 1-connected; the constant-coefficient page does not apply");
    base.validate();
    fiber.validate();

    const int qmax = window + 2;
    const int pmax = window + 2;
    Page page(r, 2);

    for (int q = 0; q <= qmax; ++q) {
        const MackeyRank rank = mackey_eval(fiber, q, r);
        if (rank.dim_fixed == 0 && rank.dim_free == 0) continue;  // zero row
        const auto named = to_named(rank);
        const bool computable = named.has_value() &&
                                std::none_of(named->begin(), named->end(), [](NamedFunctor f) {
                                    return f == NamedFunctor::DualConstant || f == NamedFunctor::FreeOnly;
                                });
        if (!computable) {
            for (int p = 0; p <= pmax; ++p) {
                Cell c;
                c.unknown = true;
                page.set_cell(p, q, std::move(c));
            }
            continue;
        }

        // Constant summands, one per generator whose fixed class restricts
        // isomorphically; bracket summands for the remaining fixed classes.
        for (const Generator& g : fiber.generators) {
            const GroundElement coeff = element_at(Bidegree{q, r} - g.degree);
            if (coeff.is_zero()) continue;
            const bool constant_summand = (g.degree.p == q);  // coeff is a pure tau power
            for (int p = 0; p <= pmax; ++p) {
                const std::vector<std::string> bases =
                    constant_summand ? detail::bredon_classes(base, p) : detail::betti_classes(base, p);
                if (bases.empty()) continue;
                Cell c = page.cell(p, q);
                for (const std::string& b : bases) {
                    c.dim += 1;
                    c.labels.push_back({b, coeff, g.label});
                }
                std::sort(c.labels.begin(), c.labels.end());
                page.set_cell(p, q, std::move(c));
            }
        }
    }
    return page;
}

// The identity fibration: fiber a point, so row 0 is the Bredon row and rows
// 1..r are copies of the singular row of the fixed set.
inline Page e2_identity(const ModulePresentation& x, int r, int window) {
    return e2_serre(x, point_presentation(), r, window);
}

// Identity pages solved against the cohomology of the space itself, one per
// requested weight.
inline PageFamily identity_family(const ModulePresentation& x, std::span<const int> weights, int window) {
    PageFamily family;
    family.window = window;
    for (int r : weights) {
        if (family.by_weight.count(r) != 0) continue;
        SolvedPage solved;
        solved.e2 = e2_identity(x, r, window);
        const Abutment target = module_abutment(x, r, window);
        SolverResult res = force_differentials(solved.e2, target, window);
        if (res.status != SolverStatus::Unique)
            throw UnsupportedError("identity_family: differentials of " + x.name + " at weight " +
                                   std::to_string(r) + " are not forced (" +
                                   solver_status_name(res.status) + ")");
        solved.diffs = res.solutions.front().pages;
        solved.einf = apply_solution(solved.e2, res.solutions.front());
        family.by_weight.emplace(r, std::move(solved));
    }
    return family;
}

struct BundleResult {
    ModulePresentation fiber;
    PageFamily base_id;  // identity family of the base at the output weight
    PageFamily bundle;   // tensor family at the output weight
};

// Projective bundle over a 1-connected base with fiber the space of lines in
// R^{n,m}: the pages are the identity pages of the base tensored with the
// fiber chart, with only base-originating differentials.
inline BundleResult projective_bundle(const ModulePresentation& base, int n, int m, int r, int window) {
    BundleResult out;
    out.fiber = projective_presentation(n, m);

    std::vector<int> weights;
    for (const Generator& g : out.fiber.generators) {
        const int s = r - g.degree.w;
        if (s < 0)
            throw UnsupportedError("projective_bundle: weight " + std::to_string(r) +
                                   " needs negative-weight identity pages, which are not modeled");
        weights.push_back(s);
    }
    weights.push_back(r);  // for the injection comparison
    PageFamily ids = identity_family(base, weights, window);

    PageFamily tensored = tensor_pages(ids, out.fiber);
    if (tensored.by_weight.count(r) == 0)
        throw std::logic_error("projective_bundle: tensor family missing the requested weight");

    out.base_id.window = window;
    out.base_id.by_weight.emplace(r, ids.by_weight.at(r));
    out.bundle.window = window;
    out.bundle.by_weight.emplace(r, tensored.by_weight.at(r));
    return out;
}

struct PathloopResult {
    ModulePresentation sphere;
    LoopSpace loops;
    Page e2;
    Abutment abutment;
    SolverResult solver;
    std::optional<Page> einf;  // set when the solver outcome is unique
};

// Path-loop fibration over S^{p,q}: the total space is contractible, so the
// pages converge to the point.  Loop-model generators are built out to the
// degree the window can see.
inline PathloopResult pathloop(int p, int q, int r, int window, std::span<const RankPin> pins = {}) {
    PathloopResult out;
    out.sphere = sphere_presentation(p, q);
    if (!out.sphere.one_connected)
        throw UnsupportedError("pathloop: sphere " + out.sphere.name +
                               " is not equivariantly 1-connected (need p >= 2 and p - q >= 2)");
    const int cutoff = (window + 2) * std::max(1, p - 1);
    out.loops = loops_space(p, q, cutoff);
    out.e2 = e2_serre(out.sphere, out.loops.module, r, window);
    out.abutment = point_abutment(r, window);
    out.solver = force_differentials(out.e2, out.abutment, window, pins);
    if (out.solver.status == SolverStatus::Unique)
        out.einf = apply_solution(out.e2, out.solver.solutions.front());
    return out;
}

struct ExteriorCheckReport {
    bool pass = false;
    int cell_dim = 0;
    int forced_rank = 0;
    std::string detail;
};

// The square of the first exterior generator lives in the cell (0, 2(p-1)) of
// the weight-2q page.  The forced transgression is injective there while the
// Leibniz rule makes any square a cycle, so the stored ring data must record
// that square as zero.
inline ExteriorCheckReport exterior_check(int p, int q, const LoopSpace& ring) {
    ExteriorCheckReport report;
    const int window = 2 * (p - 1) + 1;
    const int cell_q = 2 * (p - 1);

    // Pins from the weight-q page keep the higher solve unique when the grid
    // alone leaves slack.
    std::vector<RankPin> pins;
    PathloopResult low = pathloop(p, q, q, window);
    PathloopResult high_unpinned = pathloop(p, q, 2 * q, window);
    if (low.solver.status == SolverStatus::Unique) {
        pins = action_pins(low.e2, low.solver.solutions.front(), GroundElement::tau_power(q), high_unpinned.e2,
                           window);
    }
    PathloopResult high = pathloop(p, q, 2 * q, window, pins);
    if (high.solver.status != SolverStatus::Unique) {
        report.detail = "weight-" + std::to_string(2 * q) + " differentials not forced";
        return report;
    }

    report.cell_dim = high.e2.dim(0, cell_q);
    report.forced_rank = high.solver.solutions.front().rank_at(2, 0, cell_q);
    const bool injective = report.cell_dim >= 1 && report.forced_rank == report.cell_dim;
    const bool square_zero = !ring.square_class.empty() && ring.square_class.front() == -1;
    report.pass = injective && square_zero;
    if (!injective)
        report.detail = "transgression on the square's cell is not injective";
    else if (!square_zero)
        report.detail = "ring data records a nonzero square for the first generator";
    else
        report.detail = "forced differential is injective on the square's cell; stored square is zero";
    return report;
}

inline ExteriorCheckReport exterior_check(int p, int q) {
    const int cutoff = (2 * (p - 1) + 3) * std::max(1, p - 1);
    return exterior_check(p, q, loops_space(p, q, cutoff));
}

}  // namespace z2ss

#pragma once

// The page engine: per-weight grids of F2 dimensions, page turning by rank
// data, convergence against an abutment, the exhaustive forced-differential
// solver with cross-weight action pins, tensor collapse, the two-row long
// exact sequence, and the first-quadrant injection check.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "z2ss/charts.hpp"
#include "z2ss/errors.hpp"
#include "z2ss/ground.hpp"

namespace z2ss {

// One basis class of a page cell: a base-level class (inert under the ground
// action), the fiber coefficient (a positive-cone ground monomial, which tau
// powers act on), and the fiber generator it decorates.
struct CellLabel {
    std::string base;
    GroundElement coeff;
    std::string gen;

    friend auto operator<=>(const CellLabel&, const CellLabel&) = default;
};

struct Cell {
    int dim = 0;
    bool unknown = false;
    std::vector<CellLabel> labels;  // exact on freshly built pages; dropped once a differential touches the cell

    friend bool operator==(const Cell&, const Cell&) = default;
};

// First-quadrant grid of F2 dimensions at one weight.  Cells not stored are
// zero; unknown cells mark coefficient rows outside the supported catalog.
class Page {
  public:
    Page() = default;
    Page(int weight, int index) : weight_(weight), index_(index) {}

    int weight() const { return weight_; }
    int index() const { return index_; }
    void set_index(int n) { index_ = n; }

    const Cell& cell(int p, int q) const {
        auto it = cells_.find({p, q});
        return it == cells_.end() ? zero_cell() : it->second;
    }
    int dim(int p, int q) const { return cell(p, q).dim; }
    bool unknown(int p, int q) const { return cell(p, q).unknown; }

    void set_cell(int p, int q, Cell c) {
        if (p < 0 || q < 0) throw std::invalid_argument("Page: cells live in the first quadrant");
        if (c.dim == 0 && !c.unknown && c.labels.empty())
            cells_.erase({p, q});
        else
            cells_[{p, q}] = std::move(c);
    }

    const std::map<std::pair<int, int>, Cell>& cells() const { return cells_; }

    // Sum of known dimensions on the diagonal p + q = n.
    int total(int n) const {
        int sum = 0;
        for (int p = 0; p <= n; ++p) sum += dim(p, n - p);
        return sum;
    }

    bool unknown_on_diagonal(int n) const {
        for (int p = 0; p <= n; ++p)
            if (unknown(p, n - p)) return true;
        return false;
    }

    friend bool operator==(const Page&, const Page&) = default;

  private:
    static const Cell& zero_cell() {
        static const Cell kZero{};
        return kZero;
    }

    int weight_ = 0;
    int index_ = 2;
    std::map<std::pair<int, int>, Cell> cells_;
};

// Rank of d_n out of (p, q); the arrow lands at (p+n, q-n+1).
struct Arrow {
    int p = 0;
    int q = 0;
    int rank = 0;

    friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

struct DifferentialAssignment {
    int page = 2;
    std::vector<Arrow> arrows;  // sorted by (p, q)

    int rank_at(int p, int q) const {
        for (const Arrow& a : arrows)
            if (a.p == p && a.q == q) return a.rank;
        return 0;
    }
};

// Graded dimensions of the target the pages converge to, at one weight.
struct Abutment {
    int weight = 0;
    std::vector<int> dims;  // index = total degree

    int dim(int n) const {
        return (n >= 0 && n < static_cast<int>(dims.size())) ? dims[static_cast<size_t>(n)] : 0;
    }
};

inline Abutment point_abutment(int weight, int window) {
    Abutment a{weight, {}};
    for (int n = 0; n <= window; ++n) a.dims.push_back(point_dim({n, weight}));
    return a;
}

inline Abutment module_abutment(const ModulePresentation& m, int weight, int window) {
    Abutment a{weight, {}};
    for (int n = 0; n <= window; ++n) a.dims.push_back(fixed_dim(m, {n, weight}));
    return a;
}

// --- page turning -------------------------------------------------------------

namespace detail {

// Core of turn_page; returns nullopt with a message instead of throwing so the
// solver can use it as a feasibility test.
inline std::optional<Page> apply_assignment(const Page& page, const DifferentialAssignment& d, std::string* err) {
    auto fail = [&](const std::string& m) -> std::optional<Page> {
        if (err != nullptr) *err = m;
        return std::nullopt;
    };
    if (d.page != page.index()) return fail("assignment page index does not match the page");
    const int n = page.index();

    std::map<std::pair<int, int>, int> rank_out;
    std::map<std::pair<int, int>, int> rank_in;
    for (const Arrow& a : d.arrows) {
        if (a.rank < 0) return fail("negative rank");
        if (a.rank == 0) continue;
        const int tp = a.p + n;
        const int tq = a.q - n + 1;
        if (a.p < 0 || a.q < 0 || tq < 0) return fail("arrow leaves the first quadrant");
        const Cell& src = page.cell(a.p, a.q);
        const Cell& tgt = page.cell(tp, tq);
        if (src.unknown || tgt.unknown) return fail("arrow touches an unknown cell");
        if (a.rank > src.dim) return fail("rank exceeds source dimension");
        if (a.rank > tgt.dim) return fail("rank exceeds target dimension");
        rank_out[{a.p, a.q}] += a.rank;
        rank_in[{tp, tq}] += a.rank;
    }

    std::set<std::pair<int, int>> touched;
    for (const auto& [pq, r] : rank_out) touched.insert(pq);
    for (const auto& [pq, r] : rank_in) touched.insert(pq);
    for (const auto& pq : touched) {
        const int out = rank_out.count(pq) != 0 ? rank_out.at(pq) : 0;
        const int in = rank_in.count(pq) != 0 ? rank_in.at(pq) : 0;
        if (out + in > page.dim(pq.first, pq.second)) return fail("rank in + rank out exceeds the cell dimension");
    }

    Page next = page;
    next.set_index(n + 1);
    for (const auto& pq : touched) {
        const int out = rank_out.count(pq) != 0 ? rank_out.at(pq) : 0;
        const int in = rank_in.count(pq) != 0 ? rank_in.at(pq) : 0;
        Cell c = page.cell(pq.first, pq.second);
        c.dim -= out + in;
        c.labels.clear();  // which classes survive is not tracked at rank level
        next.set_cell(pq.first, pq.second, std::move(c));
    }
    return next;
}

}  // namespace detail

inline Page turn_page(const Page& page, const DifferentialAssignment& d) {
    std::string err;
    auto next = detail::apply_assignment(page, d, &err);
    if (!next.has_value()) throw std::invalid_argument("turn_page: " + err);
    return *next;
}

// Repeated turning; assignments must be ordered by page index, gaps turn with
// the zero differential.
inline Page e_infinity(const Page& page, std::span<const DifferentialAssignment> diffs) {
    Page current = page;
    for (const DifferentialAssignment& d : diffs) {
        if (d.page < current.index()) throw std::invalid_argument("e_infinity: assignments out of order");
        while (current.index() < d.page) current = turn_page(current, {current.index(), {}});
        current = turn_page(current, d);
    }
    return current;
}

// --- quarantine ---------------------------------------------------------------
// An unknown cell makes its own total degree incomparable; it also poisons the
// next degree when some differential out of it could hit a live cell, and the
// previous degree when some live cell could map into it.

inline std::set<int> quarantined_degrees(const Page& page, int window) {
    std::set<int> out;
    auto live = [&](int p, int q) {
        if (p < 0 || q < 0) return false;
        const Cell& c = page.cell(p, q);
        return c.dim > 0 || c.unknown;
    };
    for (const auto& [pq, c] : page.cells()) {
        if (!c.unknown) continue;
        const auto [p, q] = pq;
        const int n = p + q;
        if (n <= window) out.insert(n);
        if (n + 1 <= window) {
            for (int k = 2; k <= q + 1; ++k)
                if (live(p + k, q - k + 1)) {
                    out.insert(n + 1);
                    break;
                }
        }
        if (n - 1 >= 0 && n - 1 <= window) {
            for (int k = 2; k <= p; ++k)
                if (live(p - k, q + k - 1)) {
                    out.insert(n - 1);
                    break;
                }
        }
    }
    return out;
}

// --- convergence --------------------------------------------------------------

struct ConvergenceReport {
    bool pass = true;
    std::vector<int> mismatched;  // degrees where the totals differ
    std::vector<int> excluded;    // quarantined degrees, reported not compared
};

inline ConvergenceReport check_convergence(const Page& e_inf, const Abutment& target, int window) {
    if (e_inf.weight() != target.weight)
        throw std::invalid_argument("check_convergence: page and abutment weights differ");
    ConvergenceReport report;
    const std::set<int> quarantined = quarantined_degrees(e_inf, window);
    report.excluded.assign(quarantined.begin(), quarantined.end());
    for (int n = 0; n <= window; ++n) {
        if (quarantined.count(n) != 0) continue;
        if (e_inf.total(n) != target.dim(n)) report.mismatched.push_back(n);
    }
    report.pass = report.mismatched.empty();
    return report;
}

// --- the forced-differential solver --------------------------------------------

struct RankPin {
    int page = 2;
    int p = 0;
    int q = 0;
    int rank = 0;

    friend auto operator<=>(const RankPin&, const RankPin&) = default;
};

struct Solution {
    std::vector<DifferentialAssignment> pages;  // nonzero arrows only, ordered by page index

    int rank_at(int page, int p, int q) const {
        for (const DifferentialAssignment& d : pages)
            if (d.page == page) return d.rank_at(p, q);
        return 0;
    }

    std::vector<std::array<int, 4>> signature() const {
        std::vector<std::array<int, 4>> sig;
        for (const DifferentialAssignment& d : pages)
            for (const Arrow& a : d.arrows)
                if (a.rank > 0) sig.push_back({d.page, a.p, a.q, a.rank});
        std::sort(sig.begin(), sig.end());
        return sig;
    }
};

enum class SolverStatus { Unique, Ambiguous, Infeasible };

inline const char* solver_status_name(SolverStatus s) {
    switch (s) {
        case SolverStatus::Unique: return "unique";
        case SolverStatus::Ambiguous: return "ambiguous";
        case SolverStatus::Infeasible: return "infeasible";
    }
    return "?";
}

struct SolverResult {
    SolverStatus status = SolverStatus::Infeasible;
    std::vector<Solution> solutions;  // canonical DFS order; one entry when Unique
    std::vector<int> quarantined;
};

namespace detail {

struct CandidateArrow {
    int p = 0;
    int q = 0;
    int max_rank = 0;
};

// Arrows worth enumerating on this page: both endpoints known and nonzero, the
// source inside the window, and at least one endpoint on a compared diagonal.
inline std::vector<CandidateArrow> candidate_arrows(const Page& page, int window, const std::set<int>& compared) {
    std::vector<CandidateArrow> out;
    const int n = page.index();
    for (const auto& [pq, c] : page.cells()) {
        const auto [p, q] = pq;
        if (c.unknown || c.dim == 0) continue;
        if (p + q > window) continue;
        const int tq = q - n + 1;
        if (tq < 0) continue;
        const Cell& tgt = page.cell(p + n, tq);
        if (tgt.unknown || tgt.dim == 0) continue;
        if (compared.count(p + q) == 0 && compared.count(p + q + 1) == 0) continue;
        out.push_back({p, q, std::min(c.dim, tgt.dim)});
    }
    std::sort(out.begin(), out.end(), [](const CandidateArrow& a, const CandidateArrow& b) {
        return std::pair{a.p, a.q} < std::pair{b.p, b.q};
    });
    return out;
}

struct SolverContext {
    const Abutment* target = nullptr;
    int window = 0;
    std::set<int> compared;
    std::map<int, std::map<std::pair<int, int>, int>> pins;  // page -> (p,q) -> rank
    std::vector<Solution> solutions;
    long nodes = 0;
};

inline void solver_search(SolverContext& ctx, const Page& page, std::vector<DifferentialAssignment>& chosen) {
    if (++ctx.nodes > 4'000'000) throw UnsupportedError("force_differentials: search space too large for the exhaustive solver");

    if (page.index() > ctx.window + 1) {
        for (int n : ctx.compared)
            if (page.total(n) != ctx.target->dim(n)) return;
        Solution sol;
        for (const DifferentialAssignment& d : chosen) {
            DifferentialAssignment nz{d.page, {}};
            for (const Arrow& a : d.arrows)
                if (a.rank > 0) nz.arrows.push_back(a);
            if (!nz.arrows.empty()) sol.pages.push_back(std::move(nz));
        }
        ctx.solutions.push_back(std::move(sol));
        return;
    }

    const std::vector<CandidateArrow> cands = candidate_arrows(page, ctx.window, ctx.compared);
    const auto page_pins_it = ctx.pins.find(page.index());

    // A positive pin on an arrow that cannot carry rank kills the branch.
    if (page_pins_it != ctx.pins.end()) {
        for (const auto& [pq, rank] : page_pins_it->second) {
            if (rank <= 0) continue;
            const bool present = std::any_of(cands.begin(), cands.end(), [&](const CandidateArrow& c) {
                return c.p == pq.first && c.q == pq.second && c.max_rank >= rank;
            });
            if (!present) return;
        }
    }

    std::vector<Arrow> ranks(cands.size());
    for (size_t i = 0; i < cands.size(); ++i) ranks[i] = {cands[i].p, cands[i].q, 0};

    // Depth-first over rank vectors, candidates in canonical order.
    auto enumerate = [&](auto&& self, size_t i) -> void {
        if (i == cands.size()) {
            DifferentialAssignment d{page.index(), ranks};
            std::string err;
            auto next = apply_assignment(page, d, &err);
            if (!next.has_value()) return;  // joint rank feasibility failed
            chosen.push_back(d);
            solver_search(ctx, *next, chosen);
            chosen.pop_back();
            return;
        }
        int lo = 0;
        int hi = cands[i].max_rank;
        if (page_pins_it != ctx.pins.end()) {
            auto pin = page_pins_it->second.find({cands[i].p, cands[i].q});
            if (pin != page_pins_it->second.end()) {
                if (pin->second > hi) return;
                lo = hi = pin->second;
            }
        }
        for (int r = lo; r <= hi; ++r) {
            ranks[i].rank = r;
            self(self, i + 1);
        }
    };
    enumerate(enumerate, 0);
}

}  // namespace detail

// Exhaustive search over rank assignments on every page inside the window,
// classifying by how many assignments make the stable totals match the target
// on the non-quarantined degrees.  Pins force individual arrow ranks.
inline SolverResult force_differentials(const Page& e2, const Abutment& target, int window,
                                        std::span<const RankPin> pins = {}) {
    if (e2.weight() != target.weight)
        throw std::invalid_argument("force_differentials: page and abutment weights differ");
    if (e2.index() != 2) throw std::invalid_argument("force_differentials: expected an E2 page");

    detail::SolverContext ctx;
    ctx.target = &target;
    ctx.window = window;
    const std::set<int> quarantined = quarantined_degrees(e2, window);
    for (int n = 0; n <= window; ++n)
        if (quarantined.count(n) == 0) ctx.compared.insert(n);
    for (const RankPin& pin : pins) ctx.pins[pin.page][{pin.p, pin.q}] = pin.rank;

    std::vector<DifferentialAssignment> chosen;
    detail::solver_search(ctx, e2, chosen);

    SolverResult result;
    result.quarantined.assign(quarantined.begin(), quarantined.end());
    // Solutions are deduplicated by their nonzero rank signature.
    std::set<std::vector<std::array<int, 4>>> seen;
    for (Solution& sol : ctx.solutions)
        if (seen.insert(sol.signature()).second) result.solutions.push_back(std::move(sol));
    if (result.solutions.empty())
        result.status = SolverStatus::Infeasible;
    else if (result.solutions.size() == 1)
        result.status = SolverStatus::Unique;
    else
        result.status = SolverStatus::Ambiguous;
    return result;
}

inline Page apply_solution(const Page& e2, const Solution& sol) {
    return e_infinity(e2, std::span<const DifferentialAssignment>(sol.pages));
}

// --- cross-weight action pins ---------------------------------------------------

namespace detail {

// True when multiplying every label's coefficient by `factor` carries one
// cell's basis bijectively onto the other's.
inline bool maps_isomorphically(const Cell& from, const Cell& to, GroundElement factor) {
    if (from.unknown || to.unknown) return false;
    if (static_cast<int>(from.labels.size()) != from.dim) return false;  // labels stale or absent
    if (static_cast<int>(to.labels.size()) != to.dim) return false;
    std::vector<CellLabel> image;
    for (const CellLabel& l : from.labels) {
        const GroundElement c = point_mul(l.coeff, factor);
        if (c.is_zero()) return false;
        image.push_back({l.base, c, l.gen});
    }
    std::sort(image.begin(), image.end());
    std::vector<CellLabel> expected = to.labels;
    std::sort(expected.begin(), expected.end());
    return image == expected;
}

}  // namespace detail

// Rank constraints carried from a solved page to another weight along
// multiplication by a tau power.  Only page-2 arrows can be pinned: later
// pages have lost their label data.  An arrow yields a constraint only when
// its rank was actually determined at the solved weight (it was enumerable
// there, or an endpoint vanishes) and both endpoints map isomorphically.
inline std::vector<RankPin> action_pins(const Page& solved_e2, const Solution& solution, GroundElement factor,
                                        const Page& target_e2, int window) {
    if (!factor.is_top() || factor.a() != 0)
        throw std::invalid_argument("action_pins: the pinning factor must be a tau power");
    if (target_e2.weight() - solved_e2.weight() != factor.b())
        throw std::invalid_argument("action_pins: factor weight does not bridge the two pages");

    const std::set<int> quarantined = quarantined_degrees(solved_e2, window);
    auto compared = [&](int n) { return n >= 0 && n <= window && quarantined.count(n) == 0; };

    std::vector<RankPin> pins;
    for (const auto& [pq, src] : solved_e2.cells()) {
        const auto [p, q] = pq;
        if (p + q > window || q < 1) continue;
        const Cell& tgt = solved_e2.cell(p + 2, q - 1);
        if (src.dim == 0 && tgt.dim == 0) continue;  // nothing to pin
        const bool forced_zero = src.dim == 0 || tgt.dim == 0;
        const bool enumerable = compared(p + q) || compared(p + q + 1);
        if (!forced_zero && !enumerable) continue;  // rank never determined at this weight
        if (!detail::maps_isomorphically(src, target_e2.cell(p, q), factor)) continue;
        if (!detail::maps_isomorphically(tgt, target_e2.cell(p + 2, q - 1), factor)) continue;
        pins.push_back({2, p, q, solution.rank_at(2, p, q)});
    }
    std::sort(pins.begin(), pins.end());
    return pins;
}

// --- families, tensor pages, injection -----------------------------------------

struct SolvedPage {
    Page e2;
    std::vector<DifferentialAssignment> diffs;  // nonzero arrows only
    Page einf;
};

struct PageFamily {
    int window = 0;
    std::map<int, SolvedPage> by_weight;
};

// Pages of a fibration whose differentials all come from the base family: the
// entry at (p, q, r) sums the base entries at (p, q - deg(g).p, r - deg(g).w)
// over the fiber generators g, and every base arrow is tensored with the
// identity of the fiber.  Output weights are those for which every shifted
// base weight is present.
inline PageFamily tensor_pages(const PageFamily& base, const ModulePresentation& fiber) {
    PageFamily out;
    out.window = base.window;
    if (base.by_weight.empty() || fiber.generators.empty()) return out;

    int wmin = base.by_weight.begin()->first;
    int wmax = base.by_weight.rbegin()->first;
    int max_gen_w = 0;
    for (const Generator& g : fiber.generators) max_gen_w = std::max(max_gen_w, g.degree.w);

    for (int r = wmin; r <= wmax + max_gen_w; ++r) {
        bool complete = true;
        for (const Generator& g : fiber.generators)
            if (base.by_weight.count(r - g.degree.w) == 0) {
                complete = false;
                break;
            }
        if (!complete) continue;

        std::map<std::pair<int, int>, Cell> merged;
        std::map<int, std::map<std::pair<int, int>, int>> ranks;  // page -> arrow -> rank
        for (const Generator& g : fiber.generators) {
            const SolvedPage& bp = base.by_weight.at(r - g.degree.w);
            for (const auto& [pq, c] : bp.e2.cells()) {
                Cell& m = merged[{pq.first, pq.second + g.degree.p}];
                m.dim += c.dim;
                m.unknown = m.unknown || c.unknown;
                for (const CellLabel& l : c.labels)
                    m.labels.push_back({l.base, l.coeff, l.gen == "1" ? g.label : l.gen + "*" + g.label});
            }
            for (const DifferentialAssignment& d : bp.diffs)
                for (const Arrow& a : d.arrows)
                    if (a.rank > 0) ranks[d.page][{a.p, a.q + g.degree.p}] += a.rank;
        }
        Page e2(r, 2);
        for (auto& [pq, c] : merged) {
            std::sort(c.labels.begin(), c.labels.end());
            e2.set_cell(pq.first, pq.second, std::move(c));
        }

        SolvedPage solved;
        solved.e2 = e2;
        for (const auto& [page_index, arrows] : ranks) {
            DifferentialAssignment d{page_index, {}};
            for (const auto& [pq, rank] : arrows) d.arrows.push_back({pq.first, pq.second, rank});
            solved.diffs.push_back(std::move(d));
        }
        solved.einf = e_infinity(e2, std::span<const DifferentialAssignment>(solved.diffs));
        out.by_weight.emplace(r, std::move(solved));
    }
    return out;
}

// --- the two-row long exact sequence ---------------------------------------------

struct LesReport {
    bool feasible = true;
    int failed_index = -1;  // position in `terms` where the greedy rank run fails
    std::vector<std::string> terms;
    std::vector<int> dims;
};

// Exactness feasibility of
//   0 -> H^{0,0} -> H^{0,1} -> 0 -> H^{1,0} -> H^{1,1} -> Hsing^0(fixed)
//     -> H^{2,0} -> H^{2,1} -> Hsing^1(fixed) -> ...
// by the greedy rank recurrence r_i = dim_i - r_{i-1} >= 0 with terminal 0.
inline LesReport les_two_row(const ModulePresentation& x, int window) {
    LesReport report;
    auto push = [&](std::string term, int dim) {
        report.terms.push_back(std::move(term));
        report.dims.push_back(dim);
    };
    push("H^{0,0}", fixed_dim(x, {0, 0}));
    push("H^{0,1}", fixed_dim(x, {0, 1}));
    push("0", 0);
    for (int p = 1; p <= window; ++p) {
        push("H^{" + std::to_string(p) + ",0}", fixed_dim(x, {p, 0}));
        push("H^{" + std::to_string(p) + ",1}", fixed_dim(x, {p, 1}));
        push("Hsing^" + std::to_string(p - 1) + "(fixed)", x.betti(p - 1));
    }
    int rank = 0;
    for (size_t i = 0; i < report.dims.size(); ++i) {
        rank = report.dims[i] - rank;
        if (rank < 0) {
            report.feasible = false;
            report.failed_index = static_cast<int>(i);
            return report;
        }
    }
    if (rank != 0) {
        report.feasible = false;
        report.failed_index = static_cast<int>(report.dims.size());
    }
    return report;
}

// --- first-quadrant injection check ----------------------------------------------

struct InjectionReport {
    bool pass = true;
    std::vector<std::string> violations;
};

// Entrywise E_infinity comparison plus filtration-sum comparison per total
// degree; a genuine map of first-quadrant pages that injects on every page
// must satisfy both.
inline InjectionReport injection_check(const PageFamily& sub, const PageFamily& big) {
    if (sub.window != big.window) throw std::invalid_argument("injection_check: families use different windows");
    for (const auto& [w, sp] : sub.by_weight)
        if (big.by_weight.count(w) == 0) throw std::invalid_argument("injection_check: families use different weights");
    for (const auto& [w, sp] : big.by_weight)
        if (sub.by_weight.count(w) == 0) throw std::invalid_argument("injection_check: families use different weights");

    InjectionReport report;
    for (const auto& [w, sp] : sub.by_weight) {
        const SolvedPage& bp = big.by_weight.at(w);
        for (const auto& [pq, c] : sp.einf.cells()) {
            if (c.unknown || bp.einf.unknown(pq.first, pq.second)) continue;
            if (c.dim > bp.einf.dim(pq.first, pq.second))
                report.violations.push_back("cell weight=" + std::to_string(w) + " p=" + std::to_string(pq.first) +
                                            " q=" + std::to_string(pq.second));
        }
        for (int n = 0; n <= sub.window; ++n) {
            if (sp.einf.unknown_on_diagonal(n) || bp.einf.unknown_on_diagonal(n)) continue;
            if (sp.einf.total(n) > bp.einf.total(n))
                report.violations.push_back("total weight=" + std::to_string(w) + " degree=" + std::to_string(n));
        }
    }
    report.pass = report.violations.empty();
    return report;
}

}  // namespace z2ss

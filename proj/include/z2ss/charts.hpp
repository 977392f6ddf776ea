#pragma once

// Free bigraded modules over the ground ring, presented by generator lists.
// Dimension counts at both Mackey levels and evaluation of the coefficient
// functors of a fiber live here.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "z2ss/ground.hpp"
#include "z2ss/mackey.hpp"

namespace z2ss {

struct Generator {
    std::string label;
    Bidegree degree;

    friend bool operator==(const Generator&, const Generator&) = default;
};

// A space's cohomology chart: a free module over the ground ring given by
// generator bidegrees, plus the mod-2 Betti numbers of the fixed set.  Only
// free modules are expressible; every space the builders construct is free.
struct ModulePresentation {
    std::string name;
    std::vector<Generator> generators;
    std::vector<int> fixed_betti;  // singular mod-2 Betti numbers of the fixed set
    bool one_connected = false;
    bool fixed_connected = false;

    void validate() const {
        for (const Generator& g : generators)
            if (g.degree.p < 0) throw std::invalid_argument(name + ": generator " + g.label + " has negative degree");
        for (int b : fixed_betti)
            if (b < 0) throw std::invalid_argument(name + ": negative Betti number");
        if (!fixed_betti.empty() && fixed_betti[0] < 1)
            throw std::invalid_argument(name + ": nonempty fixed set needs betti[0] >= 1");
        if (fixed_connected && (fixed_betti.empty() || fixed_betti[0] != 1))
            throw std::invalid_argument(name + ": fixed_connected requires betti[0] == 1");
    }

    int betti(int p) const {
        return (p >= 0 && p < static_cast<int>(fixed_betti.size())) ? fixed_betti[static_cast<size_t>(p)] : 0;
    }

    int max_generator_p() const {
        int m = 0;
        for (const Generator& g : generators) m = std::max(m, g.degree.p);
        return m;
    }

    friend bool operator==(const ModulePresentation&, const ModulePresentation&) = default;
};

// Fixed-level dimension at d: one copy of F2 for every generator whose ground
// coefficient at d - deg(g) is nonzero.
inline int fixed_dim(const ModulePresentation& m, Bidegree d) {
    int n = 0;
    for (const Generator& g : m.generators) n += point_dim(d - g.degree);
    return n;
}

// Free-level dimension at topological degree p; weight-independent because the
// orbit ring is a Laurent ring.
inline int free_dim(const ModulePresentation& m, int p) {
    int n = 0;
    for (const Generator& g : m.generators)
        if (g.degree.p == p) ++n;
    return n;
}

// Rank data of the coefficient Mackey functor of m in degree (q, r).
struct MackeyRank {
    int dim_fixed = 0;
    int dim_free = 0;
    int res_rank = 0;
    int neg_cone_fixed = 0;  // fixed classes whose coefficient sits in the negative cone

    friend bool operator==(const MackeyRank&, const MackeyRank&) = default;
};

inline MackeyRank mackey_eval(const ModulePresentation& m, int q, int r) {
    MackeyRank out;
    out.dim_fixed = fixed_dim(m, {q, r});
    out.dim_free = free_dim(m, q);
    for (const Generator& g : m.generators) {
        if (g.degree.p == q && r - g.degree.w >= 0) ++out.res_rank;  // fixed class tau^(r-w) g, restricts isomorphically
        if (element_at(Bidegree{q, r} - g.degree).is_bottom()) ++out.neg_cone_fixed;
    }
    return out;
}

// Allocation of a rank tuple into catalog functors: the res classes pair with
// free classes as constant summands, remaining positive-cone fixed classes are
// brackets, negative-cone fixed classes pair with leftover free classes as
// duals, leftover free classes are free-only.  nullopt when the counts cannot
// be allocated (Unrecognized).
inline std::optional<FunctorMultiset> to_named(const MackeyRank& rank) {
    if (rank.res_rank > rank.dim_fixed || rank.res_rank > rank.dim_free) return std::nullopt;
    const int brackets = rank.dim_fixed - rank.res_rank - rank.neg_cone_fixed;
    if (brackets < 0) return std::nullopt;
    const int duals = std::min(rank.neg_cone_fixed, rank.dim_free - rank.res_rank);
    if (duals < rank.neg_cone_fixed) return std::nullopt;  // unpaired negative-cone class
    const int free_only = rank.dim_free - rank.res_rank - duals;

    FunctorMultiset out;
    out.insert(out.end(), static_cast<size_t>(rank.res_rank), NamedFunctor::Constant);
    out.insert(out.end(), static_cast<size_t>(brackets), NamedFunctor::Bracket);
    out.insert(out.end(), static_cast<size_t>(duals), NamedFunctor::DualConstant);
    out.insert(out.end(), static_cast<size_t>(free_only), NamedFunctor::FreeOnly);
    std::sort(out.begin(), out.end());
    return out;
}

// The block-diagonal Mackey shape a rank tuple assembles to (constant pairs,
// then brackets, then dual pairs, then free-only; involution is the identity
// since the Weyl action on the orbit ring is trivial over F2).
inline MackeyShape assemble_shape(const MackeyRank& rank) {
    auto named = to_named(rank);
    if (named.has_value()) return direct_sum(*named);
    // Unrecognized allocations still carry a valid shape: couple what pairs up,
    // leave the rest uncoupled.
    MackeyShape m{rank.dim_fixed, rank.dim_free, F2Matrix::identity(rank.dim_free),
                  F2Matrix(rank.dim_free, rank.dim_fixed), F2Matrix(rank.dim_fixed, rank.dim_free)};
    for (int i = 0; i < std::min(rank.res_rank, std::min(rank.dim_fixed, rank.dim_free)); ++i) m.res.set(i, i, 1);
    return m;
}

}  // namespace z2ss

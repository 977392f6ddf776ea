#pragma once

// JSON schemas for the data the CLI exchanges: Mackey shapes, module
// presentations, pages with differentials, families, and solver results.
// Everything the CLI emits parses back to an identical structure.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "z2ss/charts.hpp"
#include "z2ss/mackey.hpp"
#include "z2ss/spectra.hpp"

namespace z2ss {

using json = nlohmann::json;

// --- Mackey shapes: {"fixed", "free", "invol", "res", "tr"} ---------------------

inline json to_json(const F2Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline F2Matrix f2matrix_from_json(const json& j, int rows, int cols) {
    F2Matrix m(rows, cols);
    if (static_cast<int>(j.size()) != rows) throw std::invalid_argument("matrix JSON: wrong row count");
    for (int i = 0; i < rows; ++i) {
        const json& row = j.at(static_cast<size_t>(i));
        if (static_cast<int>(row.size()) != cols) throw std::invalid_argument("matrix JSON: wrong column count");
        for (int c = 0; c < cols; ++c) m.set(i, c, row.at(static_cast<size_t>(c)).get<int>());
    }
    return m;
}

inline json to_json(const MackeyShape& m) {
    return json{{"fixed", m.dim_fixed}, {"free", m.dim_free}, {"invol", to_json(m.invol)},
                {"res", to_json(m.res)},  {"tr", to_json(m.tr)}};
}

inline MackeyShape mackey_from_json(const json& j) {
    MackeyShape m;
    m.dim_fixed = j.at("fixed").get<int>();
    m.dim_free = j.at("free").get<int>();
    m.invol = f2matrix_from_json(j.at("invol"), m.dim_free, m.dim_free);
    m.res = f2matrix_from_json(j.at("res"), m.dim_free, m.dim_fixed);
    m.tr = f2matrix_from_json(j.at("tr"), m.dim_fixed, m.dim_free);
    m.check_dims();
    return m;
}

// --- presentations ----------------------------------------------------------------

inline json to_json(const ModulePresentation& m) {
    json gens = json::array();
    for (const Generator& g : m.generators)
        gens.push_back(json{{"label", g.label}, {"p", g.degree.p}, {"w", g.degree.w}});
    return json{{"name", m.name},
                {"generators", std::move(gens)},
                {"fixed_betti", m.fixed_betti},
                {"one_connected", m.one_connected},
                {"fixed_connected", m.fixed_connected}};
}

inline ModulePresentation presentation_from_json(const json& j) {
    ModulePresentation m;
    m.name = j.at("name").get<std::string>();
    for (const json& g : j.at("generators"))
        m.generators.push_back({g.at("label").get<std::string>(), {g.at("p").get<int>(), g.at("w").get<int>()}});
    m.fixed_betti = j.at("fixed_betti").get<std::vector<int>>();
    m.one_connected = j.at("one_connected").get<bool>();
    m.fixed_connected = j.at("fixed_connected").get<bool>();
    m.validate();
    return m;
}

// --- pages -------------------------------------------------------------------------

inline json to_json(const CellLabel& l) {
    return json{{"base", l.base}, {"coeff", l.coeff.text()}, {"gen", l.gen}};
}

inline CellLabel label_from_json(const json& j) {
    auto coeff = GroundElement::parse(j.at("coeff").get<std::string>());
    if (!coeff.has_value()) throw std::invalid_argument("label JSON: bad coefficient");
    return {j.at("base").get<std::string>(), *coeff, j.at("gen").get<std::string>()};
}

inline json to_json(const Page& page, const std::vector<DifferentialAssignment>& diffs = {}) {
    json cells = json::array();
    for (const auto& [pq, c] : page.cells()) {
        json labels = json::array();
        for (const CellLabel& l : c.labels) labels.push_back(to_json(l));
        cells.push_back(json{{"p", pq.first},
                             {"q", pq.second},
                             {"dim", c.dim},
                             {"unknown", c.unknown},
                             {"labels", std::move(labels)}});
    }
    json darr = json::array();
    for (const DifferentialAssignment& d : diffs)
        for (const Arrow& a : d.arrows)
            if (a.rank > 0) darr.push_back(json{{"page", d.page}, {"from", json::array({a.p, a.q})}, {"rank", a.rank}});
    return json{{"weight", page.weight()}, {"page", page.index()}, {"cells", std::move(cells)}, {"diffs", std::move(darr)}};
}

inline std::pair<Page, std::vector<DifferentialAssignment>> page_from_json(const json& j) {
    Page page(j.at("weight").get<int>(), j.at("page").get<int>());
    for (const json& cj : j.at("cells")) {
        Cell c;
        c.dim = cj.at("dim").get<int>();
        c.unknown = cj.at("unknown").get<bool>();
        for (const json& lj : cj.at("labels")) c.labels.push_back(label_from_json(lj));
        page.set_cell(cj.at("p").get<int>(), cj.at("q").get<int>(), std::move(c));
    }
    std::map<int, DifferentialAssignment> by_page;
    for (const json& dj : j.at("diffs")) {
        const int page_index = dj.at("page").get<int>();
        by_page[page_index].page = page_index;
        by_page[page_index].arrows.push_back(
            {dj.at("from").at(0).get<int>(), dj.at("from").at(1).get<int>(), dj.at("rank").get<int>()});
    }
    std::vector<DifferentialAssignment> diffs;
    for (auto& [idx, d] : by_page) {
        std::sort(d.arrows.begin(), d.arrows.end());
        diffs.push_back(std::move(d));
    }
    return {std::move(page), std::move(diffs)};
}

// --- families and solver results ------------------------------------------------------

inline json to_json(const PageFamily& family) {
    json pages = json::array();
    for (const auto& [w, solved] : family.by_weight) pages.push_back(to_json(solved.e2, solved.diffs));
    return json{{"window", family.window}, {"pages", std::move(pages)}};
}

inline PageFamily family_from_json(const json& j) {
    PageFamily family;
    family.window = j.at("window").get<int>();
    for (const json& pj : j.at("pages")) {
        auto [page, diffs] = page_from_json(pj);
        SolvedPage solved;
        solved.einf = e_infinity(page, diffs);
        solved.e2 = std::move(page);
        solved.diffs = std::move(diffs);
        family.by_weight.emplace(solved.e2.weight(), std::move(solved));
    }
    return family;
}

inline json to_json(const SolverResult& result) {
    json solutions = json::array();
    for (const Solution& sol : result.solutions) {
        json arrows = json::array();
        for (const auto& sig : sol.signature())
            arrows.push_back(json{{"page", sig[0]}, {"from", json::array({sig[1], sig[2]})}, {"rank", sig[3]}});
        solutions.push_back(std::move(arrows));
    }
    return json{{"status", solver_status_name(result.status)},
                {"quarantined", result.quarantined},
                {"solutions", std::move(solutions)}};
}

}  // namespace z2ss

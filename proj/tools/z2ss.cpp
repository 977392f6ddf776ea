// Command-line front end: ground-ring charts, space constructors, page
// builders, the forced-differential solver, and the reproduction suite.
//
// Exit codes: 0 success, 1 infeasible/mismatch, 2 unsupported computation,
// 3 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "z2ss/z2ss.hpp"

namespace {

using namespace z2ss;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitUsage = 3;

struct OutputOptions {
    std::string format = "ascii";
    std::string out_path;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"ascii", "svg", "json"}));
    cmd->add_option("--out", opts.out_path, "Write output to this file instead of stdout");
}

void emit(const OutputOptions& opts, const std::string& content) {
    if (opts.out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(opts.out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + opts.out_path);
    f << content;
}

std::pair<int, int> parse_range(const std::string& s) {
    const size_t colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("range must look like lo:hi");
    const int lo = std::stoi(s.substr(0, colon));
    const int hi = std::stoi(s.substr(colon + 1));
    if (lo > hi) throw std::invalid_argument("range must satisfy lo <= hi");
    return {lo, hi};
}

std::pair<int, int> parse_pq(const std::string& s, const std::string& what) {
    const size_t comma = s.find(',');
    if (comma == std::string::npos) throw std::invalid_argument(what + " takes the form p,q");
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
}

json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open " + path);
    json j;
    f >> j;
    return j;
}

// Space designators: point | sphere:p,q | projective:p,q | loops:p,q | @file.json
ModulePresentation parse_space(const std::string& designator, int loops_cutoff) {
    if (designator == "point") return point_presentation();
    if (designator.starts_with("@")) return presentation_from_json(load_json(designator.substr(1)));
    const size_t colon = designator.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("unknown space designator: " + designator);
    const std::string kind = designator.substr(0, colon);
    auto [p, q] = parse_pq(designator.substr(colon + 1), kind);
    if (kind == "sphere") return sphere_presentation(p, q);
    if (kind == "projective") return projective_presentation(p, q);
    if (kind == "loops") return loops_presentation(p, q, loops_cutoff > 0 ? loops_cutoff : 12);
    throw std::invalid_argument("unknown space designator: " + designator);
}

int loops_cutoff_for_window(const std::string& designator, int window) {
    if (!designator.starts_with("loops:")) return 0;
    auto [p, q] = parse_pq(designator.substr(6), "loops");
    (void)q;
    return (window + 2) * std::max(1, p - 1);
}

// "tau<k>:from-r<s>" -> pins carried from the solved weight-s page by tau^k.
struct PinSpec {
    int k = 0;
    int from_weight = 0;
};

PinSpec parse_pin_spec(const std::string& s) {
    if (!s.starts_with("tau")) throw std::invalid_argument("pins take the form tau<k>:from-r<s>");
    const size_t colon = s.find(':');
    if (colon == std::string::npos || s.compare(colon, 7, ":from-r") != 0)
        throw std::invalid_argument("pins take the form tau<k>:from-r<s>");
    PinSpec spec;
    spec.k = std::stoi(s.substr(3, colon - 3));
    spec.from_weight = std::stoi(s.substr(colon + 7));
    return spec;
}

std::string solver_ascii(const SolverResult& res) {
    std::ostringstream out;
    out << "solver: " << solver_status_name(res.status) << " (" << res.solutions.size() << " solution"
        << (res.solutions.size() == 1 ? "" : "s") << ")\n";
    if (!res.quarantined.empty()) {
        out << "quarantined degrees:";
        for (int n : res.quarantined) out << " " << n;
        out << "\n";
    }
    int index = 0;
    for (const Solution& sol : res.solutions) {
        out << "solution " << index++ << ":";
        const auto sig = sol.signature();
        if (sig.empty()) out << " (all differentials zero)";
        for (const auto& a : sig)
            out << " d" << a[0] << "(" << a[1] << "," << a[2] << ")->rank " << a[3] << ";";
        out << "\n";
    }
    return out.str();
}

std::string les_ascii(const LesReport& report) {
    std::ostringstream out;
    out << "two-row sequence: " << (report.feasible ? "feasible" : "infeasible") << "\n";
    out << "terms:";
    for (size_t i = 0; i < report.terms.size(); ++i) out << " " << report.terms[i] << "=" << report.dims[i];
    out << "\n";
    if (!report.feasible) out << "first failing term: " << report.terms[static_cast<size_t>(report.failed_index)] << "\n";
    return out.str();
}

// --- subcommand configuration ---------------------------------------------------

struct PointOptions {
    std::string window = "-5:5";
    OutputOptions out;
};

struct MackeyOptions {
    std::string named;
    std::string shape_path;
    bool decompose_flag = false;
    OutputOptions out;
};

struct SpaceOptions {
    std::string designator;
    int cutoff = 12;
    bool functors = false;
    int weight = 0;
    int window = 6;
    OutputOptions out;
};

struct IdentityOptions {
    std::string space;
    int weight = 0;
    int window = 6;
    bool les = false;
    bool solve = false;
    OutputOptions out;
};

struct SerreOptions {
    std::string base;
    std::string fiber;
    std::string page_path;
    int weight = 0;
    int window = 6;
    bool solve = false;
    std::string pins;
    std::string abutment = "point";
    OutputOptions out;
};

struct BundleOptions {
    std::string base;
    std::string fiber;
    int weight = 0;
    int window = 6;
    bool check_injection = false;
    OutputOptions out;
};

struct PathloopOptions {
    int p = 0;
    int q = 0;
    int weight = 0;
    int window = 6;
    bool solve = false;
    std::string pins;
    OutputOptions out;
};

int run_point(const PointOptions& o, bool orbit) {
    auto [lo, hi] = parse_range(o.window);
    std::string content;
    if (o.out.format == "ascii") {
        content = orbit ? render_orbit_ascii(lo, hi, lo, hi) : render_ground_ascii(lo, hi, lo, hi);
    } else if (o.out.format == "svg") {
        content = orbit ? render_orbit_svg(lo, hi, lo, hi) : render_ground_svg(lo, hi, lo, hi);
    } else {
        json cells = json::array();
        for (int p = lo; p <= hi; ++p)
            for (int w = lo; w <= hi; ++w) {
                const int dim = orbit ? orbit_dim({p, w}) : point_dim({p, w});
                if (dim == 0) continue;
                const std::string label = orbit ? OrbitElement::t_power(w).text() : element_at({p, w}).text();
                cells.push_back(json{{"p", p}, {"w", w}, {"dim", dim}, {"label", label}});
            }
        content = json{{"window", json{{"lo", lo}, {"hi", hi}}}, {"cells", std::move(cells)}}.dump(2) + "\n";
    }
    emit(o.out, content);
    return kExitOk;
}

int run_mackey(const MackeyOptions& o) {
    MackeyShape shape;
    if (!o.named.empty()) {
        if (o.named == "constant") shape = named_shape(NamedFunctor::Constant);
        else if (o.named == "bracket") shape = named_shape(NamedFunctor::Bracket);
        else if (o.named == "dual") shape = named_shape(NamedFunctor::DualConstant);
        else if (o.named == "free") shape = named_shape(NamedFunctor::FreeOnly);
        else if (o.named == "zero") shape = named_shape(NamedFunctor::Zero);
        else throw std::invalid_argument("unknown functor name: " + o.named);
    } else if (!o.shape_path.empty()) {
        shape = mackey_from_json(load_json(o.shape_path));
    } else {
        throw std::invalid_argument("mackey needs --named or --shape");
    }

    const std::vector<int> violated = check_axioms(shape);
    std::optional<FunctorMultiset> decomposition;
    if (o.decompose_flag && violated.empty()) decomposition = decompose(shape);

    if (o.out.format == "json") {
        json j{{"shape", to_json(shape)}, {"axioms_violated", violated}};
        if (o.decompose_flag) {
            if (decomposition.has_value()) {
                json names = json::array();
                for (NamedFunctor f : *decomposition) names.push_back(functor_name(f));
                j["decomposition"] = std::move(names);
            } else {
                j["decomposition"] = nullptr;
            }
        }
        emit(o.out, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "fixed level: " << shape.dim_fixed << ", free level: " << shape.dim_free << "\n";
        if (violated.empty()) {
            out << "axioms: pass\n";
        } else {
            out << "axioms violated:";
            for (int i : violated) out << " (" << i << ")";
            out << "\n";
        }
        if (o.decompose_flag) {
            if (!violated.empty()) {
                out << "decomposition: skipped (axioms fail)\n";
            } else if (decomposition.has_value()) {
                out << "decomposition:";
                if (decomposition->empty()) out << " zero";
                for (NamedFunctor f : *decomposition) out << " " << functor_name(f);
                out << "\n";
            } else {
                out << "decomposition: unrecognized\n";
            }
        }
        emit(o.out, out.str());
    }
    return violated.empty() ? kExitOk : kExitInfeasible;
}

int run_space(const SpaceOptions& o) {
    const ModulePresentation m = parse_space(o.designator, o.cutoff);
    if (o.functors) {
        std::ostringstream out;
        json rows = json::array();
        for (int q = 0; q <= o.window; ++q) {
            const MackeyRank rank = mackey_eval(m, q, o.weight);
            const auto named = to_named(rank);
            std::string desc;
            if (!named.has_value())
                desc = "unrecognized";
            else if (named->empty())
                desc = "zero";
            else
                for (NamedFunctor f : *named) desc += std::string(desc.empty() ? "" : "+") + functor_name(f);
            out << "q=" << q << ": " << desc << "\n";
            rows.push_back(json{{"q", q}, {"functor", desc}});
        }
        if (o.out.format == "json")
            emit(o.out, json{{"space", m.name}, {"weight", o.weight}, {"rows", std::move(rows)}}.dump(2) + "\n");
        else
            emit(o.out, out.str());
        return kExitOk;
    }
    if (o.out.format == "json") {
        emit(o.out, to_json(m).dump(2) + "\n");
    } else if (o.out.format == "svg") {
        emit(o.out, render_module_svg(m, o.window));
    } else {
        std::ostringstream out;
        out << m.name << "\n";
        out << "fixed betti:";
        for (int b : m.fixed_betti) out << " " << b;
        out << "\none_connected: " << (m.one_connected ? "yes" : "no")
            << ", fixed_connected: " << (m.fixed_connected ? "yes" : "no") << "\n";
        out << render_module_ascii(m, o.window);
        emit(o.out, out.str());
    }
    return kExitOk;
}

std::string page_output(const OutputOptions& out, const Page& page, int window,
                        const std::vector<DifferentialAssignment>& diffs) {
    if (out.format == "json") return to_json(page, diffs).dump(2) + "\n";
    if (out.format == "svg") return render_page_svg(page, window);
    return render_page_ascii(page, window);
}

int run_identity(const IdentityOptions& o) {
    const ModulePresentation m = parse_space(o.space, loops_cutoff_for_window(o.space, o.window));
    const Page page = e2_identity(m, o.weight, o.window);
    std::ostringstream out;
    int exit_code = kExitOk;

    std::vector<DifferentialAssignment> diffs;
    std::optional<SolverResult> solved;
    if (o.solve) {
        solved = force_differentials(page, module_abutment(m, o.weight, o.window), o.window);
        if (solved->status == SolverStatus::Unique) diffs = solved->solutions.front().pages;
        if (solved->status == SolverStatus::Infeasible) exit_code = kExitInfeasible;
    }

    if (o.out.format == "json") {
        json j{{"page", to_json(page, diffs)}};
        if (solved.has_value()) j["solver"] = to_json(*solved);
        if (o.les) {
            const LesReport les = les_two_row(m, o.window);
            j["les"] = json{{"feasible", les.feasible}, {"terms", les.terms}, {"dims", les.dims},
                            {"failed_index", les.failed_index}};
            if (!les.feasible) exit_code = kExitInfeasible;
        }
        emit(o.out, j.dump(2) + "\n");
        return exit_code;
    }

    out << page_output(o.out, page, o.window, diffs);
    if (solved.has_value()) out << solver_ascii(*solved);
    if (o.les) {
        const LesReport les = les_two_row(m, o.window);
        out << les_ascii(les);
        if (!les.feasible) exit_code = kExitInfeasible;
    }
    emit(o.out, out.str());
    return exit_code;
}

int run_serre(const SerreOptions& o) {
    if (!o.page_path.empty()) {
        // Round-trip path: render a previously exported page.  Accepts either
        // a bare page object or a wrapper holding one under "page".
        const std::string path = o.page_path.starts_with("@") ? o.page_path.substr(1) : o.page_path;
        json j = load_json(path);
        if (j.contains("page") && j.at("page").is_object()) j = j.at("page");
        auto [page, diffs] = page_from_json(j);
        emit(o.out, page_output(o.out, page, o.window, diffs));
        return kExitOk;
    }
    const ModulePresentation base = parse_space(o.base, loops_cutoff_for_window(o.base, o.window));
    const ModulePresentation fiber = parse_space(o.fiber, loops_cutoff_for_window(o.fiber, o.window));
    const Page page = e2_serre(base, fiber, o.weight, o.window);

    Abutment target = o.abutment == "point" ? point_abutment(o.weight, o.window)
                                            : [&] {
                                                  const json j = load_json(o.abutment.substr(1));
                                                  Abutment a;
                                                  a.weight = j.at("weight").get<int>();
                                                  a.dims = j.at("dims").get<std::vector<int>>();
                                                  return a;
                                              }();

    std::vector<DifferentialAssignment> diffs;
    std::optional<SolverResult> solved;
    int exit_code = kExitOk;
    if (o.solve) {
        std::vector<RankPin> pins;
        if (!o.pins.empty()) {
            const PinSpec spec = parse_pin_spec(o.pins);
            if (spec.from_weight + spec.k != o.weight)
                throw std::invalid_argument("pins: from-weight + tau power must equal the page weight");
            const Page low = e2_serre(base, fiber, spec.from_weight, o.window);
            const SolverResult low_res =
                force_differentials(low, point_abutment(spec.from_weight, o.window), o.window);
            if (low_res.status != SolverStatus::Unique)
                throw UnsupportedError("pins: the source weight does not solve uniquely");
            pins = action_pins(low, low_res.solutions.front(), GroundElement::tau_power(spec.k), page, o.window);
        }
        solved = force_differentials(page, target, o.window, pins);
        if (solved->status == SolverStatus::Unique) diffs = solved->solutions.front().pages;
        if (solved->status == SolverStatus::Infeasible) exit_code = kExitInfeasible;
    }

    if (o.out.format == "json") {
        json j{{"page", to_json(page, diffs)}};
        if (solved.has_value()) {
            j["solver"] = to_json(*solved);
            if (solved->status == SolverStatus::Unique)
                j["einf"] = to_json(apply_solution(page, solved->solutions.front()));
        }
        emit(o.out, j.dump(2) + "\n");
        return exit_code;
    }
    std::ostringstream out;
    out << page_output(o.out, page, o.window, diffs);
    if (solved.has_value()) out << solver_ascii(*solved);
    emit(o.out, out.str());
    return exit_code;
}

int run_bundle(const BundleOptions& o) {
    const ModulePresentation base = parse_space(o.base, loops_cutoff_for_window(o.base, o.window));
    auto [n, m] = parse_pq(o.fiber, "--fiber");
    const BundleResult result = projective_bundle(base, n, m, o.weight, o.window);
    int exit_code = kExitOk;
    std::optional<InjectionReport> injection;
    if (o.check_injection) {
        injection = injection_check(result.base_id, result.bundle);
        if (!injection->pass) exit_code = kExitInfeasible;
    }
    const SolvedPage& solved = result.bundle.by_weight.at(o.weight);
    if (o.out.format == "json") {
        json j{{"fiber", to_json(result.fiber)}, {"bundle", to_json(result.bundle)}};
        if (injection.has_value())
            j["injection"] = json{{"pass", injection->pass}, {"violations", injection->violations}};
        emit(o.out, j.dump(2) + "\n");
        return exit_code;
    }
    std::ostringstream out;
    out << page_output(o.out, solved.e2, o.window, solved.diffs);
    if (o.out.format == "ascii") {
        out << "stable totals:";
        for (int d = 0; d <= o.window; ++d) out << " " << solved.einf.total(d);
        out << "\n";
        if (injection.has_value()) {
            out << "injection from the identity pages: " << (injection->pass ? "pass" : "violation") << "\n";
            for (const std::string& v : injection->violations) out << "  " << v << "\n";
        }
    }
    emit(o.out, out.str());
    return exit_code;
}

int run_pathloop(const PathloopOptions& o) {
    std::vector<RankPin> pins;
    if (!o.pins.empty()) {
        const PinSpec spec = parse_pin_spec(o.pins);
        if (spec.from_weight + spec.k != o.weight)
            throw std::invalid_argument("pins: from-weight + tau power must equal the page weight");
        const PathloopResult low = pathloop(o.p, o.q, spec.from_weight, o.window);
        if (low.solver.status != SolverStatus::Unique)
            throw UnsupportedError("pins: the source weight does not solve uniquely");
        const PathloopResult target = pathloop(o.p, o.q, o.weight, o.window);
        pins = action_pins(low.e2, low.solver.solutions.front(), GroundElement::tau_power(spec.k), target.e2,
                           o.window);
    }
    const PathloopResult result = pathloop(o.p, o.q, o.weight, o.window, pins);
    int exit_code = kExitOk;
    if (o.solve && result.solver.status == SolverStatus::Infeasible) exit_code = kExitInfeasible;

    std::vector<DifferentialAssignment> diffs;
    if (result.solver.status == SolverStatus::Unique) diffs = result.solver.solutions.front().pages;

    if (o.out.format == "json") {
        json j{{"page", to_json(result.e2, diffs)}};
        if (o.solve) {
            j["solver"] = to_json(result.solver);
            if (result.einf.has_value()) j["einf"] = to_json(*result.einf);
        }
        emit(o.out, j.dump(2) + "\n");
        return exit_code;
    }
    std::ostringstream out;
    out << page_output(o.out, result.e2, o.window, diffs);
    if (o.solve) {
        out << solver_ascii(result.solver);
        if (result.einf.has_value()) {
            out << "stable totals:";
            for (int d = 0; d <= o.window; ++d) out << " " << result.einf->total(d);
            out << "\n";
        }
    }
    emit(o.out, out.str());
    return exit_code;
}

int run_verify(const OutputOptions& out) {
    const std::vector<verify::CheckResult> results = verify::run_all();
    std::ostringstream s;
    bool all = true;
    for (const verify::CheckResult& r : results) {
        s << (r.pass ? "ok  " : "FAIL") << "  " << r.name << " -- " << r.detail << "\n";
        all = all && r.pass;
    }
    s << (all ? "all checks passed" : "some checks FAILED") << " (" << results.size() << " total)\n";
    emit(out, s.str());
    return all ? kExitOk : kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact workbench for weight-graded equivariant cohomology pages over F2"};
    app.require_subcommand(1);

    PointOptions point_opts;
    CLI::App* point_cmd = app.add_subcommand("point", "Chart of the fixed-point cohomology ring");
    point_cmd->add_option("--window", point_opts.window, "Lattice window lo:hi (both axes)");
    add_output_options(point_cmd, point_opts.out);

    PointOptions orbit_opts;
    CLI::App* orbit_cmd = app.add_subcommand("orbit", "Chart of the free-orbit Laurent ring");
    orbit_cmd->add_option("--window", orbit_opts.window, "Lattice window lo:hi (both axes)");
    add_output_options(orbit_cmd, orbit_opts.out);

    MackeyOptions mackey_opts;
    CLI::App* mackey_cmd = app.add_subcommand("mackey", "Check axioms / decompose a Mackey shape");
    mackey_cmd->add_option("--named", mackey_opts.named, "Catalog functor: constant|bracket|dual|free|zero");
    mackey_cmd->add_option("--shape", mackey_opts.shape_path, "Shape JSON file");
    mackey_cmd->add_flag("--decompose", mackey_opts.decompose_flag, "Decompose into catalog summands");
    add_output_options(mackey_cmd, mackey_opts.out);

    SpaceOptions space_opts;
    CLI::App* space_cmd = app.add_subcommand("space", "Print a built-in or file-backed presentation");
    space_cmd->add_option("designator", space_opts.designator,
                          "point | sphere:p,q | projective:p,q | loops:p,q | @file.json")->required();
    space_cmd->add_option("--cutoff", space_opts.cutoff, "Loop-model degree cutoff");
    space_cmd->add_flag("--functors", space_opts.functors, "Print the coefficient functor of each row");
    space_cmd->add_option("-r,--weight", space_opts.weight, "Weight for --functors");
    space_cmd->add_option("--window", space_opts.window, "Row range for --functors");
    add_output_options(space_cmd, space_opts.out);

    IdentityOptions id_opts;
    CLI::App* id_cmd = app.add_subcommand("identity", "Pages of the identity fibration");
    id_cmd->add_option("--space", id_opts.space, "Base space designator")->required();
    id_cmd->add_option("-r,--weight", id_opts.weight, "Weight");
    id_cmd->add_option("--window", id_opts.window, "Total-degree window");
    id_cmd->add_flag("--les", id_opts.les, "Report the two-row long exact sequence");
    id_cmd->add_flag("--solve", id_opts.solve, "Force differentials against the space's own cohomology");
    add_output_options(id_cmd, id_opts.out);

    SerreOptions serre_opts;
    CLI::App* serre_cmd = app.add_subcommand("serre", "E2 page of a fibration with the given fiber");
    serre_cmd->add_option("--base", serre_opts.base, "Base space designator");
    serre_cmd->add_option("--fiber", serre_opts.fiber, "Fiber space designator");
    serre_cmd->add_option("--page", serre_opts.page_path, "Render a previously exported page JSON");
    serre_cmd->add_option("-r,--weight", serre_opts.weight, "Weight");
    serre_cmd->add_option("--window", serre_opts.window, "Total-degree window");
    serre_cmd->add_flag("--solve", serre_opts.solve, "Run the forced-differential solver");
    serre_cmd->add_option("--pins", serre_opts.pins, "Carry pins: tau<k>:from-r<s>");
    serre_cmd->add_option("--abutment", serre_opts.abutment, "point (default) or @file.json with {weight, dims}");
    add_output_options(serre_cmd, serre_opts.out);

    BundleOptions bundle_opts;
    CLI::App* bundle_cmd = app.add_subcommand("projective-bundle", "Tensor pages of a projective bundle");
    bundle_cmd->add_option("--base", bundle_opts.base, "Base space designator")->required();
    bundle_cmd->add_option("--fiber", bundle_opts.fiber, "Fiber parameters n,m")->required();
    bundle_cmd->add_option("-r,--weight", bundle_opts.weight, "Weight");
    bundle_cmd->add_option("--window", bundle_opts.window, "Total-degree window");
    bundle_cmd->add_flag("--check-injection", bundle_opts.check_injection,
                         "Verify the identity pages inject into the bundle pages");
    add_output_options(bundle_cmd, bundle_opts.out);

    PathloopOptions pl_opts;
    CLI::App* pl_cmd = app.add_subcommand("pathloop", "Path-loop fibration pages over a sphere");
    pl_cmd->add_option("p", pl_opts.p, "Sphere dimension")->required();
    pl_cmd->add_option("q", pl_opts.q, "Sphere twist count")->required();
    pl_cmd->add_option("-r,--weight", pl_opts.weight, "Weight");
    pl_cmd->add_option("--window", pl_opts.window, "Total-degree window");
    pl_cmd->add_flag("--solve", pl_opts.solve, "Run the forced-differential solver");
    pl_cmd->add_option("--pins", pl_opts.pins, "Carry pins: tau<k>:from-r<s>");
    add_output_options(pl_cmd, pl_opts.out);

    OutputOptions verify_opts;
    bool verify_paper = false;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run the full reproduction suite");
    verify_cmd->add_flag("--paper", verify_paper, "Run every reproduction check");
    add_output_options(verify_cmd, verify_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (point_cmd->parsed()) return run_point(point_opts, false);
        if (orbit_cmd->parsed()) return run_point(orbit_opts, true);
        if (mackey_cmd->parsed()) return run_mackey(mackey_opts);
        if (space_cmd->parsed()) return run_space(space_opts);
        if (id_cmd->parsed()) return run_identity(id_opts);
        if (serre_cmd->parsed()) return run_serre(serre_opts);
        if (bundle_cmd->parsed()) return run_bundle(bundle_opts);
        if (pl_cmd->parsed()) return run_pathloop(pl_opts);
        if (verify_cmd->parsed()) return run_verify(verify_opts);
    } catch (const z2ss::UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const z2ss::UnspecifiedProduct& e) {
        std::cerr << "unspecified: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

#include "commands.hpp"

#include "hrush/amalgam.hpp"
#include "hrush/error.hpp"
#include "hrush/graph_io.hpp"
#include "hrush/itd.hpp"
#include "hrush/measure.hpp"
#include "hrush/predim.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <sstream>

namespace hrush::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string config_path;
    bool as_json = false;
};

GoodFunction load_config(const Options& opt)
{
    if (opt.config_path.empty())
        return GoodFunction::standard();
    GoodFunction cfg = load_good_function(opt.config_path);
    cfg.validate();
    return cfg;
}

json load_json(const std::string& path)
{
    try {
        return json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw ParseError(0, path + ": " + e.what());
    }
}

// Labels may be given as separate words or comma-separated.
std::vector<std::string> split_labels(const std::vector<std::string>& words)
{
    std::vector<std::string> out;
    for (const auto& w : words) {
        std::stringstream ss(w);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty())
                out.push_back(item);
    }
    return out;
}

VertexMask require_labels(const Graph& g, const std::vector<std::string>& labels)
{
    VertexMask m = 0;
    for (const auto& l : labels) {
        if (!g.has_vertex(l))
            throw InputError("unknown vertex '" + l + "'");
        m |= VertexMask{1} << g.require_index(l);
    }
    return m;
}

std::string join(const std::vector<std::string>& labels)
{
    std::string out;
    for (const auto& l : labels)
        out += (out.empty() ? "" : " ") + l;
    return out.empty() ? "(empty)" : out;
}

void print_indented(std::ostream& out, const std::string& text)
{
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line))
        out << "    " << line << "\n";
}

void print_tower(std::ostream& out, const TowerExtension& ext)
{
    if (ext.tower.empty())
        out << "    tower: (none)\n";
    for (const auto& s : ext.tower)
        out << "    tower: " << s.vertex << " joined to " << s.first << " and " << s.second << "\n";
}

int cmd_check(const Options& opt, const std::string& path, std::ostream& out)
{
    GoodFunction cfg = load_config(opt);
    Graph g = load_graph(path);
    auto violation = smallest_violation(g, cfg);
    if (opt.as_json) {
        json j = {{"in_class", !violation.has_value()}, {"order", g.order()}, {"edges", g.edge_count()}};
        if (violation) {
            j["witness"] = graph_to_json(g.induced(*violation));
            j["witness_predim"] = to_string(predimension(g, *violation, cfg));
        }
        out << j.dump(2) << "\n";
    } else if (!violation) {
        out << "in K_f (" << g.order() << " vertices, " << g.edge_count() << " edges, delta="
            << to_string(predimension(g, cfg)) << ")\n";
    } else {
        Graph w = g.induced(*violation);
        out << "not in K_f\nwitness: " << join(w.labels()) << " (" << w.order()
            << " vertices, delta=" << to_string(predimension(w, cfg)) << ")\n";
        print_indented(out, format_graph_text(w));
    }
    return violation ? negative : ok;
}

int cmd_closure(const Options& opt, const std::string& path, const std::vector<std::string>& words, std::ostream& out)
{
    GoodFunction cfg = load_config(opt);
    Graph g = load_graph(path);
    VertexMask a = require_labels(g, split_labels(words));
    VertexMask cl = closure(g, a, cfg);
    Rational d = predimension(g, cl, cfg);
    if (opt.as_json)
        out << json{{"closure", g.labels_of(cl)}, {"delta", to_string(d)}}.dump(2) << "\n";
    else
        out << "closure: " << join(g.labels_of(cl)) << "\ndelta: " << to_string(d) << "\n";
    return ok;
}

std::map<std::string, std::string> parse_identification(const std::vector<std::string>& pairs)
{
    std::map<std::string, std::string> ident;
    for (const auto& p : split_labels(pairs)) {
        auto pos = p.find('=');
        if (pos == std::string::npos || pos == 0 || pos + 1 == p.size())
            throw InputError("identification '" + p + "' is not of the form b=c");
        ident[p.substr(0, pos)] = p.substr(pos + 1);
    }
    return ident;
}

int cmd_amalgamate(const Options& opt, const std::string& b_path, const std::string& c_path,
                   const std::vector<std::string>& pairs, std::ostream& out)
{
    GoodFunction cfg = load_config(opt);
    Graph b = load_graph(b_path);
    Graph c = load_graph(c_path);
    AmalgamDiagram diag = free_amalgam(b, c, parse_identification(pairs), cfg);
    if (opt.as_json) {
        out << diagram_to_json(diag).dump(2) << "\n";
        return ok;
    }
    const Graph& g = diag.ambient;
    out << "A: " << join(g.labels_of(diag.part_a)) << "\nB: " << join(g.labels_of(diag.part_b))
        << "\nC: " << join(g.labels_of(diag.part_c)) << "\ndelta: " << to_string(predimension(g, cfg)) << "\n"
        << format_graph_text(g);
    return ok;
}

int cmd_eventual_closures(const Options& opt, const std::string& path, std::size_t depth, std::ostream& out)
{
    GoodFunction cfg = load_config(opt);
    AmalgamDiagram diag = diagram_from_json(load_json(path), cfg);
    if (depth > max_tower_depth)
        throw UnsupportedError("--depth above " + std::to_string(max_tower_depth) + " is not supported");
    std::int64_t gap = closure_gap(diag, cfg);
    if (gap > static_cast<std::int64_t>(depth))
        throw PreconditionError("closures may add " + std::to_string(gap) + " vertices, more than --depth " +
                                std::to_string(depth));
    auto closures = eventual_closures(diag, cfg);
    if (opt.as_json) {
        json arr = json::array();
        for (const auto& e : closures)
            arr.push_back(extension_to_json(e));
        out << json{{"count", closures.size()}, {"closures", arr}}.dump(2) << "\n";
        return ok;
    }
    out << closures.size() << " eventual closure" << (closures.size() == 1 ? "" : "s") << "\n";
    for (std::size_t i = 0; i < closures.size(); ++i) {
        const auto& e = closures[i];
        out << "[" << i + 1 << "] " << e.graph.order() << " vertices, " << e.graph.edge_count() << " edges\n";
        print_tower(out, e);
        print_indented(out, format_graph_text(e.graph));
    }
    return ok;
}

int cmd_itd_scan(const Options& opt, const std::string& d12_text, std::ostream& out)
{
    GoodFunction cfg = load_config(opt);
    Rational d12 = parse_rational(d12_text);
    auto diagrams = enumerate_proper_itds(cfg, d12);
    if (opt.as_json) {
        json arr = json::array();
        for (const auto& d : diagrams)
            arr.push_back(itd_to_json(d));
        out << json{{"d12_max", to_string(d12)}, {"count", diagrams.size()}, {"diagrams", arr}}.dump(2) << "\n";
        return ok;
    }
    out << diagrams.size() << " proper ITD" << (diagrams.size() == 1 ? "" : "s") << " with d12 <= " << to_string(d12) << "\n";
    for (std::size_t i = 0; i < diagrams.size(); ++i) {
        const auto& d = diagrams[i];
        const Graph& g = d.ambient;
        auto p = itd_predims(d, cfg);
        out << "[" << i + 1 << "] " << g.order() << " vertices, delta=" << to_string(p.total) << "\n";
        out << "    D0: " << join(g.labels_of(d.base)) << "\n";
        for (int k = 1; k <= 3; ++k)
            out << "    D" << k << ": " << join(g.labels_of(d.single(k))) << "\n";
        for (auto [x, y] : {std::pair{1, 2}, {1, 3}, {2, 3}})
            out << "    D" << x << y << ": " << join(g.labels_of(d.pair(x, y))) << "\n";
        print_indented(out, format_graph_text(g));
    }
    return ok;
}

int cmd_amalg_verify(const Options& opt, std::size_t size_bound, std::ostream& out)
{
    GoodFunction cfg = load_config(opt);
    auto report = verify_free_amalgamation_property(cfg, size_bound);
    if (opt.as_json) {
        json j = {{"pass", report.pass}, {"size_bound", report.size_bound}, {"triples_checked", report.triples_checked},
                  {"points", report.points.size()}};
        if (report.counterexample) {
            json pts = json::array();
            for (const auto& p : *report.counterexample)
                pts.push_back({p.size, to_string(p.predim)});
            j["counterexample"] = pts;
        }
        out << j.dump(2) << "\n";
    } else {
        out << (report.pass ? "pass" : "FAIL") << ": free amalgamation lattice check up to " << size_bound
            << " vertices (" << report.points.size() << " points, " << report.triples_checked << " triples)\n";
        if (report.counterexample) {
            const auto& c = *report.counterexample;
            const char* names[] = {"p", "q", "r", "q+r-p"};
            for (std::size_t i = 0; i < 4; ++i)
                out << "    " << names[i] << " = (" << c[i].size << ", " << to_string(c[i].predim) << ")\n";
        }
    }
    return report.pass ? ok : negative;
}

int cmd_growth_check(const Options& opt, std::int64_t k, std::optional<std::int64_t> from, std::optional<std::int64_t> to,
                     std::ostream& out)
{
    GoodFunction cfg = load_config(opt);
    auto [lo, hi] = default_growth_range(cfg);
    auto report = sitd_growth_check(cfg, k, from.value_or(lo), to.value_or(hi));
    if (opt.as_json) {
        out << growth_report_to_json(report).dump(2) << "\n";
    } else {
        out << (report.pass ? "pass" : "FAIL") << ": f(3t) <= f(t) + " << k << " for t in [" << report.t_from << ", "
            << report.t_to << "]" << (report.analytic ? " (analytic)" : "") << "\n";
        if (report.failing_t)
            out << "    first failure at t = " << *report.failing_t << "\n";
    }
    return report.pass ? ok : negative;
}

std::vector<std::pair<std::string, MeasureEquation>> all_equations(const GoodFunction& cfg)
{
    std::vector<std::pair<std::string, MeasureEquation>> out;
    for (const auto& nd : standard_amalgam_diagrams(cfg))
        out.emplace_back(nd.name, derive_amalgam_equation(nd.diagram, cfg));
    out.emplace_back("triangle", derive_triangle_equation(far_apart_type(), far_apart_type(), distance_two_type(), cfg));
    return out;
}

int cmd_derive_equations(const Options& opt, std::ostream& out)
{
    GoodFunction cfg = load_config(opt);
    auto eqs = all_equations(cfg);
    if (opt.as_json) {
        json arr = json::array();
        for (const auto& [name, e] : eqs) {
            json j = equation_to_json(e);
            j["name"] = name;
            arr.push_back(j);
        }
        out << arr.dump(2) << "\n";
        return ok;
    }
    for (std::size_t i = 0; i < eqs.size(); ++i) {
        out << "(" << i + 1 << ") " << eqs[i].second.to_string() << "    [" << eqs[i].first << "]\n";
        for (const auto& note : eqs[i].second.notes)
            out << "    note: " << note << "\n";
    }
    return ok;
}

int cmd_prove(const Options& opt, const std::string& out_path, std::ostream& out)
{
    GoodFunction cfg = load_config(opt);
    auto cert = prove_nonmeasurability(cfg);
    json j = certificate_to_json(cert);
    const bool write = !out_path.empty() && out_path != "-";
    if (write) {
        std::ofstream file(out_path);
        if (!file)
            throw InputError("cannot write " + out_path);
        file << j.dump(2) << "\n";
    }
    if (opt.as_json) {
        out << j.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < cert.equations.size(); ++i)
            out << "(" << i + 1 << ") " << cert.equations[i].to_string() << "\n";
        for (const auto& s : cert.steps)
            out << "solve " << variable_name(s.variable) << " = " << s.value.to_string() << "\n";
        out << "final polynomial: " << cert.final_polynomial.to_string() << "\n"
            << "verdict: " << to_string(cert.verdict) << "\n"
            << "replay: " << (j.at("replay_verified").get<bool>() ? "verified" : "FAILED") << "\n"
            << cert.conclusion << "\n";
        if (write)
            out << "certificate written to " << out_path << "\n";
    }
    return cert.verdict == Verdict::ForcedZero && j.at("replay_verified").get<bool>() ? ok : negative;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Predimension graphs, free amalgams and the measure equations of K_f", "hrushctl"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--config", opt.config_path, "control function as JSON (default: standard f, log tail)");
    app.add_flag("--json", opt.as_json, "machine-readable output");

    std::function<int()> action;

    std::string path, path2, d12_text = "4", out_path = "certificate.json";
    std::vector<std::string> labels;
    std::size_t depth = max_tower_depth, size_bound = 6;
    std::int64_t k = 1;
    std::optional<std::int64_t> t_from, t_to;

    auto* check = app.add_subcommand("check", "exit 0 iff the graph is in K_f; otherwise print a smallest witness");
    check->add_option("graph", path, "graph file (text or JSON)")->required();
    check->callback([&] { action = [&] { return cmd_check(opt, path, out); }; });

    auto* cl = app.add_subcommand("closure", "closure of a vertex set and its predimension");
    cl->add_option("graph", path, "graph file")->required();
    cl->add_option("vertices", labels, "vertices of the set (space or comma separated)");
    cl->callback([&] { action = [&] { return cmd_closure(opt, path, labels, out); }; });

    auto* am = app.add_subcommand("amalgamate", "free amalgam of two graphs over a common closed part");
    am->add_option("B", path, "first graph")->required();
    am->add_option("C", path2, "second graph")->required();
    am->add_option("--identify", labels, "pairs b=c gluing a vertex of B to one of C");
    am->callback([&] { action = [&] { return cmd_amalgamate(opt, path, path2, labels, out); }; });

    auto* ev = app.add_subcommand("eventual-closures", "eventual closures of an amalgam diagram (JSON)");
    ev->add_option("diagram", path, "diagram file")->required();
    ev->add_option("--depth", depth, "refuse diagrams whose closures may add more vertices than this")
        ->capture_default_str();
    ev->callback([&] { action = [&] { return cmd_eventual_closures(opt, path, depth, out); }; });

    auto* itd = app.add_subcommand("itd-scan", "enumerate proper ITDs up to a pair predimension");
    itd->add_option("d12_max", d12_text, "largest pair predimension")->capture_default_str();
    itd->callback([&] { action = [&] { return cmd_itd_scan(opt, d12_text, out); }; });

    auto* av = app.add_subcommand("amalg-verify", "lattice check of the free amalgamation property");
    av->add_option("--size-bound", size_bound, "largest part size")->capture_default_str();
    av->callback([&] { action = [&] { return cmd_amalg_verify(opt, size_bound, out); }; });

    auto* gc = app.add_subcommand("growth-check", "check f(3t) <= f(t) + k on an integer range");
    gc->add_option("-k", k, "allowed growth")->capture_default_str();
    gc->add_option("--from", t_from, "first t (default: junction of f)");
    gc->add_option("--to", t_to, "last t (default: 1000, or a third of a table)");
    gc->callback([&] { action = [&] { return cmd_growth_check(opt, k, t_from, t_to, out); }; });

    auto* de = app.add_subcommand("derive-equations", "derive the measure equations of the standard diagrams");
    de->callback([&] { action = [&] { return cmd_derive_equations(opt, out); }; });

    auto* pr = app.add_subcommand("prove", "derive, eliminate and certify that the edge measure vanishes");
    pr->add_option("--out", out_path, "certificate path (\"-\": do not write)")->capture_default_str();
    pr->callback([&] { action = [&] { return cmd_prove(opt, out_path, out); }; });

    std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
    try {
        app.parse(rest);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    }

    try {
        return action();
    } catch (const ParseError& e) {
        err << "parse error";
        if (e.line() > 0)
            err << " at line " << e.line();
        err << ": " << e.what() << "\n";
        return bad_input;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return bad_input;
    } catch (const PreconditionError& e) {
        err << "precondition: " << e.what() << "\n";
        return precondition;
    } catch (const UnsupportedError& e) {
        err << "unsupported: " << e.what() << "\n";
        return precondition;
    } catch (const DomainError& e) {
        err << "domain: " << e.what() << "\n";
        return precondition;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return internal;
    }
}

} // namespace hrush::cli

#include "hrush/measure.hpp"

#include "hrush/graph_io.hpp"
#include "hrush/predim.hpp"

#include <algorithm>
#include <sstream>

namespace hrush {

namespace {

std::string join(const std::vector<std::string>& items)
{
    std::string out;
    for (const auto& s : items)
        out += (out.empty() ? "" : ",") + s;
    return "{" + out + "}";
}

Graph spider()
{
    Graph g = shapes::path(3);
    auto extra = g.add_vertex("v5");
    g.add_edge(g.require_index("v2"), extra);
    return g;
}

Graph plus_vertex(Graph g)
{
    g.add_vertex(g.fresh_label("v"));
    return g;
}

} // namespace

MeasurePolynomial::MeasurePolynomial(Rational constant)
{
    if (constant != 0)
        terms_.emplace(Monomial{}, std::move(constant));
}

MeasurePolynomial MeasurePolynomial::variable(const CanonicalForm& form)
{
    MeasurePolynomial p;
    p.terms_.emplace(Monomial{{form, 1U}}, Rational(1));
    return p;
}

MeasurePolynomial MeasurePolynomial::of_graph(const Graph& g, const GoodFunction& cfg)
{
    if (!in_class(g, cfg))
        throw PreconditionError("measure variables are attached to members of K_f");
    if (g.order() <= 1)
        return MeasurePolynomial(1);
    return variable(canonical_form(g));
}

std::set<CanonicalForm> MeasurePolynomial::variables() const
{
    std::set<CanonicalForm> out;
    for (const auto& [mono, c] : terms_)
        for (const auto& [v, e] : mono)
            out.insert(v);
    return out;
}

unsigned MeasurePolynomial::degree_in(const CanonicalForm& v) const
{
    unsigned best = 0;
    for (const auto& [mono, c] : terms_)
        if (auto it = mono.find(v); it != mono.end())
            best = std::max(best, it->second);
    return best;
}

MeasurePolynomial operator+(const MeasurePolynomial& a, const MeasurePolynomial& b)
{
    MeasurePolynomial out = a;
    for (const auto& [mono, c] : b.terms_) {
        auto& slot = out.terms_[mono];
        slot += c;
        if (slot == 0)
            out.terms_.erase(mono);
    }
    return out;
}

MeasurePolynomial MeasurePolynomial::operator-() const
{
    MeasurePolynomial out = *this;
    for (auto& [mono, c] : out.terms_)
        c = -c;
    return out;
}

MeasurePolynomial operator-(const MeasurePolynomial& a, const MeasurePolynomial& b) { return a + (-b); }

MeasurePolynomial operator*(const MeasurePolynomial& a, const MeasurePolynomial& b)
{
    MeasurePolynomial out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma;
            for (const auto& [v, e] : mb)
                m[v] += e;
            auto& slot = out.terms_[m];
            slot += ca * cb;
            if (slot == 0)
                out.terms_.erase(m);
        }
    return out;
}

MeasurePolynomial MeasurePolynomial::substitute(const std::map<CanonicalForm, MeasurePolynomial>& values) const
{
    MeasurePolynomial out;
    for (const auto& [mono, c] : terms_) {
        MeasurePolynomial term(c);
        for (const auto& [v, e] : mono) {
            auto it = values.find(v);
            MeasurePolynomial base = it == values.end() ? variable(v) : it->second;
            for (unsigned k = 0; k < e; ++k)
                term *= base;
        }
        out += term;
    }
    return out;
}

RatFunc MeasurePolynomial::to_ratfunc(const CanonicalForm& target, const std::map<CanonicalForm, RatFunc>& values) const
{
    RatFunc out;
    for (const auto& [mono, c] : terms_) {
        RatFunc term{UPoly(c)};
        for (const auto& [v, e] : mono) {
            RatFunc base;
            if (v == target) {
                base = RatFunc(UPoly::x());
            } else {
                auto it = values.find(v);
                if (it == values.end())
                    throw DomainError("no value for " + variable_name(v));
                base = it->second;
            }
            for (unsigned k = 0; k < e; ++k)
                term = term * base;
        }
        out = out + term;
    }
    return out;
}

std::pair<MeasurePolynomial, MeasurePolynomial> MeasurePolynomial::split_linear(const CanonicalForm& v) const
{
    MeasurePolynomial coeff;
    MeasurePolynomial rest;
    for (const auto& [mono, c] : terms_) {
        auto it = mono.find(v);
        if (it == mono.end()) {
            rest.terms_.emplace(mono, c);
            continue;
        }
        if (it->second > 1)
            throw DomainError(variable_name(v) + " occurs with degree " + std::to_string(it->second));
        Monomial m = mono;
        m.erase(v);
        coeff.terms_.emplace(std::move(m), c);
    }
    return {coeff, rest};
}

MeasurePolynomial MeasurePolynomial::normalized() const
{
    if (terms_.empty())
        return *this;
    Monomial common = terms_.begin()->first;
    for (const auto& [mono, c] : terms_)
        for (auto it = common.begin(); it != common.end();) {
            auto found = mono.find(it->first);
            unsigned e = found == mono.end() ? 0U : std::min(found->second, it->second);
            if (e == 0) {
                it = common.erase(it);
            } else {
                it->second = e;
                ++it;
            }
        }
    MeasurePolynomial out;
    for (const auto& [mono, c] : terms_) {
        Monomial m = mono;
        for (const auto& [v, e] : common)
            if ((m[v] -= e) == 0)
                m.erase(v);
        out.terms_.emplace(std::move(m), c);
    }
    Rational lead = out.terms_.begin()->second;
    for (auto& [mono, c] : out.terms_)
        c /= lead;
    return out;
}

std::string MeasurePolynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [mono, c] : terms_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        std::string factors;
        for (const auto& [v, e] : mono)
            factors += (factors.empty() ? "" : "*") + variable_name(v) + (e > 1 ? "^" + std::to_string(e) : "");
        if (factors.empty())
            out += hrush::to_string(mag);
        else
            out += (mag == 1 ? "" : hrush::to_string(mag) + "*") + factors;
    }
    return out;
}

void check_typed_graph(const TypedGraph& t, const GoodFunction& cfg)
{
    if (!in_class(t.graph, cfg))
        throw PreconditionError("typed graph is not in K_f");
    VertexMask tuple = t.graph.mask_of(t.tuple);
    if (closure(t.graph, tuple, cfg) != t.graph.all())
        throw PreconditionError("the closure of " + join(t.tuple) + " is not the whole graph");
}

MeasurePolynomial type_measure_expression(const TypedGraph& t, const GoodFunction& cfg)
{
    check_typed_graph(t, cfg);
    auto aut = count_automorphisms_fixing(t.graph, t.graph.mask_of(t.tuple));
    return MeasurePolynomial::of_graph(t.graph, cfg) * MeasurePolynomial(Rational(1, static_cast<long long>(aut)));
}

TypedGraph distance_two_type()
{
    Graph g;
    g.add_vertex("a");
    g.add_vertex("m");
    g.add_vertex("b");
    g.add_edge("a", "m");
    g.add_edge("m", "b");
    return {g, {"a", "b"}};
}

TypedGraph far_apart_type()
{
    Graph g;
    g.add_vertex("a");
    g.add_vertex("b");
    return {g, {"a", "b"}};
}

const std::vector<std::pair<std::string, Graph>>& alias_graphs()
{
    static const std::vector<std::pair<std::string, Graph>> table{
        {"edge", shapes::path(1)},
        {"2pts", shapes::independent(2)},
        {"P2", shapes::path(2)},
        {"3pts", shapes::independent(3)},
        {"edge+pt", plus_vertex(shapes::path(1))},
        {"P3", shapes::path(3)},
        {"P2+pt", plus_vertex(shapes::path(2))},
        {"T", spider()},
        {"C6", shapes::cycle(6)},
    };
    return table;
}

CanonicalForm edge_form() { return canonical_form(shapes::path(1)); }

std::optional<std::string> measure_alias(const CanonicalForm& form)
{
    static const std::map<CanonicalForm, std::string> lookup = [] {
        std::map<CanonicalForm, std::string> m;
        for (const auto& [name, g] : alias_graphs())
            m.emplace(canonical_form(g), name);
        return m;
    }();
    if (auto it = lookup.find(form); it != lookup.end())
        return it->second;
    return std::nullopt;
}

std::string variable_name(const CanonicalForm& form)
{
    if (form == edge_form())
        return "lambda";
    if (auto alias = measure_alias(form))
        return "mu(" + *alias + ")";
    return "mu[" + form.key() + "]";
}

MeasureEquation derive_amalgam_equation(const AmalgamDiagram& diag, const GoodFunction& cfg)
{
    const Graph& g = diag.ambient;
    MeasureEquation eq;
    eq.lhs = MeasurePolynomial::of_graph(g.induced(diag.part_b), cfg) * MeasurePolynomial::of_graph(g.induced(diag.part_c), cfg);
    MeasurePolynomial sum;
    for (const auto& ext : eventual_closures(diag, cfg)) {
        auto aut = count_automorphisms_fixing(ext.graph, ext.graph.mask_of(g.labels()));
        sum += MeasurePolynomial::of_graph(ext.graph, cfg) * MeasurePolynomial(Rational(1, static_cast<long long>(aut)));
    }
    eq.rhs = MeasurePolynomial::of_graph(g.induced(diag.part_a), cfg) * sum;
    eq.source = "amalgam of B=" + join(g.labels_of(diag.part_b)) + " and C=" + join(g.labels_of(diag.part_c)) + " over A=" +
                join(g.labels_of(diag.part_a));
    return eq;
}

MeasureEquation derive_triangle_equation(const TypedGraph& p12, const TypedGraph& p23, const TypedGraph& p13, const GoodFunction& cfg)
{
    const std::array<const TypedGraph*, 3> pairs{&p12, &p23, &p13};
    const std::array<std::pair<int, int>, 3> slots{{{1, 2}, {2, 3}, {1, 3}}};
    for (const auto* p : pairs) {
        if (p->tuple.size() != 2 || p->tuple[0] == p->tuple[1])
            throw PreconditionError("2-types need two distinct distinguished vertices; a repeated vertex is not independent of itself");
        check_typed_graph(*p, cfg);
        const Graph& g = p->graph;
        auto a = g.mask_of({p->tuple[0]});
        auto b = g.mask_of({p->tuple[1]});
        if (dimension(g, a | b, cfg) != dimension(g, a, cfg) + dimension(g, b, cfg))
            throw PreconditionError("the pair " + join(p->tuple) + " is not independent: its dimension is not the sum of the singletons'");
        if (closure(g, a, cfg) != a || closure(g, b, cfg) != b)
            throw UnsupportedError("triangle equations are implemented for types whose single vertices are closed");
    }

    Graph base;
    for (int i = 1; i <= 3; ++i)
        base.add_vertex("x" + std::to_string(i));
    std::vector<VertexMask> constraints;
    for (std::size_t s = 0; s < 3; ++s) {
        const Graph& g = pairs[s]->graph;
        auto [i, j] = slots[s];
        std::map<std::string, std::size_t> at;
        at[pairs[s]->tuple[0]] = base.require_index("x" + std::to_string(i));
        at[pairs[s]->tuple[1]] = base.require_index("x" + std::to_string(j));
        for (const auto& l : g.labels())
            if (!at.contains(l))
                at[l] = base.add_vertex("x" + std::to_string(i) + std::to_string(j) + "_" + l);
        for (const auto& [a, b] : g.labelled_edges())
            base.add_edge(at[a], at[b]);
        VertexMask part = 0;
        for (const auto& [l, v] : at)
            part |= VertexMask{1} << v;
        constraints.push_back(part);
    }
    for (int i = 1; i <= 3; ++i)
        constraints.push_back(base.mask_of({"x" + std::to_string(i)}));

    MeasureEquation eq;
    eq.source = "triangle of 2-types x1x2, x2x3, x1x3";
    eq.rhs = type_measure_expression(p12, cfg) * type_measure_expression(p23, cfg) * type_measure_expression(p13, cfg);
    MeasurePolynomial singles(1);
    for (int i = 1; i <= 3; ++i) {
        Graph v;
        v.add_vertex("x");
        singles *= type_measure_expression({v, {"x"}}, cfg);
    }

    bool closed = in_class(base, cfg) &&
                  std::all_of(constraints.begin(), constraints.end(), [&](VertexMask m) { return is_d_closed(base, m, cfg); });
    if (!closed) {
        eq.notes.push_back("the glued graph " + format_graph_text(base) + " admits no completion: the sum is empty");
        eq.lhs = MeasurePolynomial(0);
        return eq;
    }
    auto room = max_size_at_predim(cfg, predimension(base, cfg)) - static_cast<std::int64_t>(base.order());
    if (room > static_cast<std::int64_t>(max_tower_depth))
        throw PreconditionError("completions may add " + std::to_string(room) + " vertices; one-point towers are only complete below 6");
    MeasurePolynomial sum;
    for (const auto& ext : enumerate_zero_extensions(base, constraints, cfg, max_tower_depth))
        sum += type_measure_expression({ext.graph, {"x1", "x2", "x3"}}, cfg);
    eq.lhs = sum * singles;
    return eq;
}

std::vector<NamedDiagram> standard_amalgam_diagrams(const GoodFunction& cfg)
{
    auto path = [](std::initializer_list<std::pair<const char*, const char*>> edges, std::initializer_list<const char*> lone = {}) {
        Graph g;
        for (auto [a, b] : edges) {
            for (const char* l : {a, b})
                if (!g.has_vertex(l))
                    g.add_vertex(l);
            g.add_edge(a, b);
        }
        for (const char* l : lone)
            g.add_vertex(l);
        return g;
    };
    std::vector<NamedDiagram> out;
    out.push_back({"two edges at a vertex", make_diagram(path({{"v1", "v2"}, {"v2", "v3"}}), {"v2"}, {"v1", "v2"}, {"v2", "v3"}, cfg)});
    out.push_back({"two vertices", make_diagram(path({}, {"v1", "v2"}), {}, {"v1"}, {"v2"}, cfg)});
    out.push_back({"two paths over an edge",
                   make_diagram(path({{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}}), {"v2", "v3"}, {"v1", "v2", "v3"}, {"v2", "v3", "v4"}, cfg)});
    out.push_back({"edge and vertex over a vertex", make_diagram(path({{"v1", "v2"}}, {"v3"}), {"v1"}, {"v1", "v3"}, {"v1", "v2"}, cfg)});
    out.push_back({"path and vertex over two vertices",
                   make_diagram(path({{"v1", "v2"}, {"v2", "v3"}}, {"v4"}), {"v2", "v4"}, {"v1", "v2", "v4"}, {"v2", "v3", "v4"}, cfg)});
    out.push_back({"two three-paths over a path",
                   make_diagram(path({{"v1", "v2"}, {"v3", "v2"}, {"v2", "v4"}, {"v4", "v5"}}), {"v2", "v4", "v5"}, {"v1", "v2", "v4", "v5"},
                                {"v3", "v2", "v4", "v5"}, cfg)});
    return out;
}

MeasureEquation derive_path_and_vertex_equation(const GoodFunction& cfg)
{
    auto diag = standard_amalgam_diagrams(cfg)[4].diagram;
    if (!has_no_proper_eventual_closure(diag, cfg))
        throw PreconditionError("the path-and-vertex amalgam has a proper eventual closure under this f");
    auto eq = derive_amalgam_equation(diag, cfg);
    eq.source = "path and vertex over two vertices";
    return eq;
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::ForcedZero:
        return "forced-zero";
    case Verdict::Inconsistent:
        return "inconsistent";
    case Verdict::Consistent:
        return "consistent";
    case Verdict::Undetermined:
        return "undetermined";
    }
    return "?";
}

NonTriangularSystem::NonTriangularSystem(std::vector<std::string> variables)
    : PreconditionError("system is not triangular; cannot solve for " + join(variables)), variables_(std::move(variables))
{
}

namespace {

ResidualIdentity residual_of(std::size_t index, const MeasureEquation& eq, const CanonicalForm& target, const std::map<CanonicalForm, RatFunc>& values)
{
    RatFunc l = eq.lhs.to_ratfunc(target, values);
    RatFunc r = eq.rhs.to_ratfunc(target, values);
    UPoly a = l.num() * r.den();
    UPoly b = r.num() * l.den();
    ResidualIdentity id;
    id.equation = index;
    id.full = a - b;
    id.common = gcd(a, b);
    if (id.common.is_zero())
        id.common = UPoly(1);
    id.reduced = UPoly::divmod(id.full, id.common).first;
    return id;
}

void classify(NonMeasurabilityCertificate& cert)
{
    std::optional<UPoly> full;
    std::optional<UPoly> reduced;
    for (const auto& id : cert.identities) {
        if (id.full.is_zero())
            continue;
        full = full ? gcd(*full, id.full) : id.full.monic();
        reduced = reduced ? gcd(*reduced, id.reduced) : id.reduced.monic();
    }
    const std::string lam = variable_name(cert.target);
    if (!full) {
        cert.verdict = Verdict::Undetermined;
        cert.conclusion = "no identity constrains " + lam + "; it stays free";
        return;
    }
    cert.full_residual = *full;
    cert.final_polynomial = *reduced;
    cert.roots_in_unit_interval = full->degree() < 1 ? 0 : count_roots(*full, 0, 1);
    cert.zero_is_root = (*full)(0) == 0;
    cert.scanned_roots = scan_roots(cert.final_polynomial, 0.0, 1.0);
    if (cert.roots_in_unit_interval > 0) {
        cert.verdict = Verdict::Consistent;
        cert.conclusion = "the residual " + full->to_string(lam) + " has " + std::to_string(cert.roots_in_unit_interval) + " root(s) in (0, 1]";
    } else if (cert.zero_is_root) {
        cert.verdict = Verdict::ForcedZero;
        cert.conclusion = lam + " forced to 0, contradicting positivity: the residual " + full->to_string(lam) +
                          " has no root in (0, 1], while a positive measure needs " + lam + " > 0";
    } else {
        cert.verdict = Verdict::Inconsistent;
        cert.conclusion = "the residual " + full->to_string(lam) + " has no root in [0, 1]: the system has no admissible solution";
    }
}

} // namespace

NonMeasurabilityCertificate reduce_system(const std::vector<MeasureEquation>& equations, const CanonicalForm& target)
{
    NonMeasurabilityCertificate cert;
    cert.target = target;
    cert.equations = equations;
    std::map<CanonicalForm, RatFunc> values;
    std::vector<bool> used(equations.size(), false);
    auto unsolved = [&](const MeasurePolynomial& p) {
        std::vector<CanonicalForm> out;
        for (const auto& v : p.variables())
            if (v != target && !values.contains(v))
                out.push_back(v);
        return out;
    };

    for (bool progress = true; progress;) {
        progress = false;
        for (std::size_t i = 0; i < equations.size() && !progress; ++i) {
            if (used[i])
                continue;
            auto diff = equations[i].difference();
            auto open = unsolved(diff);
            if (open.size() != 1 || diff.degree_in(open[0]) != 1)
                continue;
            auto [c, r] = diff.split_linear(open[0]);
            RatFunc cr = c.to_ratfunc(target, values);
            if (cr.is_zero())
                continue;
            RatFunc value = -r.to_ratfunc(target, values) / cr;
            values[open[0]] = value;
            cert.steps.push_back({i, open[0], cr, value});
            used[i] = true;
            progress = true;
        }
    }

    std::set<std::string> stuck;
    for (std::size_t i = 0; i < equations.size(); ++i) {
        if (used[i])
            continue;
        auto open = unsolved(equations[i].difference());
        if (!open.empty()) {
            for (const auto& v : open)
                stuck.insert(variable_name(v));
            continue;
        }
        cert.identities.push_back(residual_of(i, equations[i], target, values));
    }
    if (!stuck.empty())
        throw NonTriangularSystem({stuck.begin(), stuck.end()});
    classify(cert);
    return cert;
}

bool replay_certificate(const NonMeasurabilityCertificate& cert)
{
    std::map<CanonicalForm, RatFunc> values;
    std::set<std::size_t> seen;
    for (const auto& step : cert.steps) {
        if (step.equation >= cert.equations.size() || !seen.insert(step.equation).second || values.contains(step.variable))
            return false;
        auto diff = cert.equations[step.equation].difference();
        if (diff.degree_in(step.variable) != 1)
            return false;
        auto [c, r] = diff.split_linear(step.variable);
        try {
            RatFunc cr = c.to_ratfunc(cert.target, values);
            if (cr.is_zero() || !(cr == step.coefficient) || !(-r.to_ratfunc(cert.target, values) / cr == step.value))
                return false;
        } catch (const DomainError&) {
            return false;
        }
        values[step.variable] = step.value;
    }
    for (const auto& id : cert.identities) {
        if (id.equation >= cert.equations.size() || !seen.insert(id.equation).second)
            return false;
        try {
            auto again = residual_of(id.equation, cert.equations[id.equation], cert.target, values);
            if (!(again.full == id.full) || !(again.common == id.common) || !(again.reduced == id.reduced))
                return false;
        } catch (const DomainError&) {
            return false;
        }
    }
    if (seen.size() != cert.equations.size())
        return false;
    NonMeasurabilityCertificate again;
    again.target = cert.target;
    again.identities = cert.identities;
    classify(again);
    return again.final_polynomial == cert.final_polynomial && again.full_residual == cert.full_residual && again.verdict == cert.verdict;
}

NonMeasurabilityCertificate prove_nonmeasurability(const GoodFunction& cfg)
{
    auto gate = verify_free_amalgamation_property(cfg, 6);
    if (!gate.pass) {
        const auto& [p, q, r, s] = *gate.counterexample;
        auto show = [](const LatticePoint& x) { return "(" + std::to_string(x.size) + ", " + to_string(x.predim) + ")"; };
        throw PreconditionError("f fails the free amalgamation check: p=" + show(p) + " q=" + show(q) + " r=" + show(r) + " give " + show(s) +
                                " below f");
    }
    auto [from, to] = default_growth_range(cfg);
    auto growth = sitd_growth_check(cfg, 1, from, to);
    if (!growth.pass)
        throw PreconditionError("f fails f(3t) <= f(t) + 1 at t = " + std::to_string(*growth.failing_t));

    std::vector<MeasureEquation> equations;
    for (const auto& [name, diag] : standard_amalgam_diagrams(cfg)) {
        auto eq = derive_amalgam_equation(diag, cfg);
        eq.source = name;
        equations.push_back(std::move(eq));
    }
    auto triangle = derive_triangle_equation(far_apart_type(), far_apart_type(), distance_two_type(), cfg);
    triangle.source = "triangle: far x1x2, far x2x3, distance two x1x3";
    equations.push_back(std::move(triangle));

    auto cert = reduce_system(equations, edge_form());
    cert.amalgamation_gate = std::move(gate);
    cert.growth_gate = growth;
    return cert;
}

nlohmann::json polynomial_to_json(const MeasurePolynomial& p)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mono, c] : p.terms()) {
        nlohmann::json factors = nlohmann::json::array();
        for (const auto& [v, e] : mono) {
            nlohmann::json f{{"variable", v.key()}, {"name", variable_name(v)}, {"exponent", e}};
            if (auto alias = measure_alias(v))
                f["alias"] = *alias;
            factors.push_back(std::move(f));
        }
        terms.push_back({{"coefficient", to_string(c)}, {"factors", factors}});
    }
    return terms;
}

nlohmann::json equation_to_json(const MeasureEquation& e)
{
    nlohmann::json j{{"source", e.source}, {"text", e.to_string()}, {"lhs", polynomial_to_json(e.lhs)}, {"rhs", polynomial_to_json(e.rhs)}};
    if (!e.notes.empty())
        j["notes"] = e.notes;
    return j;
}

nlohmann::json upoly_to_json(const UPoly& p)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coeffs())
        coeffs.push_back(to_string(c));
    return {{"text", p.to_string()}, {"coefficients", coeffs}};
}

nlohmann::json certificate_to_json(const NonMeasurabilityCertificate& cert)
{
    nlohmann::json eqs = nlohmann::json::array();
    for (const auto& e : cert.equations)
        eqs.push_back(equation_to_json(e));
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : cert.steps)
        steps.push_back({{"equation", s.equation},
                         {"variable", variable_name(s.variable)},
                         {"coefficient", {{"numerator", upoly_to_json(s.coefficient.num())}, {"denominator", upoly_to_json(s.coefficient.den())}}},
                         {"value", {{"text", s.value.to_string()}, {"numerator", upoly_to_json(s.value.num())}, {"denominator", upoly_to_json(s.value.den())}}}});
    nlohmann::json ids = nlohmann::json::array();
    for (const auto& id : cert.identities)
        ids.push_back({{"equation", id.equation}, {"full", upoly_to_json(id.full)}, {"common_factor", upoly_to_json(id.common)}, {"reduced", upoly_to_json(id.reduced)}});
    nlohmann::json j{{"target", variable_name(cert.target)},
                     {"equations", eqs},
                     {"substitutions", steps},
                     {"identities", ids},
                     {"final_polynomial", upoly_to_json(cert.final_polynomial)},
                     {"full_residual", upoly_to_json(cert.full_residual)},
                     {"roots_in_unit_interval", cert.roots_in_unit_interval},
                     {"zero_is_root", cert.zero_is_root},
                     {"scanned_roots", cert.scanned_roots},
                     {"verdict", to_string(cert.verdict)},
                     {"conclusion", cert.conclusion},
                     {"replay_verified", replay_certificate(cert)}};
    if (cert.amalgamation_gate)
        j["amalgamation_gate"] = {{"pass", cert.amalgamation_gate->pass}, {"size_bound", cert.amalgamation_gate->size_bound},
                                  {"triples_checked", cert.amalgamation_gate->triples_checked}};
    if (cert.growth_gate)
        j["growth_gate"] = growth_report_to_json(*cert.growth_gate);
    return j;
}

} // namespace hrush

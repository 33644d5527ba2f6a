#pragma once

#include "hrush/amalgam.hpp"
#include "hrush/canonical.hpp"
#include "hrush/error.hpp"
#include "hrush/good_function.hpp"
#include "hrush/graph.hpp"
#include "hrush/itd.hpp"
#include "hrush/poly.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hrush {

// A measure variable mu(G) is named by the canonical form of G. The one-vertex
// and empty graphs are normalised to 1 and never appear as variables; the
// edge's variable plays the role of lambda.
using Monomial = std::map<CanonicalForm, unsigned>;

class MeasurePolynomial {
public:
    MeasurePolynomial() = default;
    MeasurePolynomial(Rational constant);
    MeasurePolynomial(int constant) : MeasurePolynomial(Rational(constant)) {}

    static MeasurePolynomial variable(const CanonicalForm& form);
    // mu(g); g must be in K_f. Graphs with at most one vertex give 1.
    static MeasurePolynomial of_graph(const Graph& g, const GoodFunction& cfg);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::set<CanonicalForm> variables() const;
    unsigned degree_in(const CanonicalForm& v) const;

    friend MeasurePolynomial operator+(const MeasurePolynomial& a, const MeasurePolynomial& b);
    friend MeasurePolynomial operator-(const MeasurePolynomial& a, const MeasurePolynomial& b);
    friend MeasurePolynomial operator*(const MeasurePolynomial& a, const MeasurePolynomial& b);
    MeasurePolynomial operator-() const;
    MeasurePolynomial& operator+=(const MeasurePolynomial& b) { return *this = *this + b; }
    MeasurePolynomial& operator*=(const MeasurePolynomial& b) { return *this = *this * b; }
    bool operator==(const MeasurePolynomial&) const = default;

    MeasurePolynomial substitute(const std::map<CanonicalForm, MeasurePolynomial>& values) const;
    // Value as a rational function of `target`, with every other variable
    // taken from `values`; DomainError when one is missing.
    RatFunc to_ratfunc(const CanonicalForm& target, const std::map<CanonicalForm, RatFunc>& values) const;
    // Writes the polynomial as c * v + r with v absent from c and r.
    // DomainError when v occurs with degree above 1.
    std::pair<MeasurePolynomial, MeasurePolynomial> split_linear(const CanonicalForm& v) const;
    // Divided by the largest monomial dividing every term and scaled so that
    // the first term has coefficient 1; the zero polynomial is returned as is.
    MeasurePolynomial normalized() const;

    std::string to_string() const;

private:
    std::map<Monomial, Rational> terms_;
};

struct MeasureEquation {
    MeasurePolynomial lhs;
    MeasurePolynomial rhs;
    std::string source;
    std::vector<std::string> notes;

    MeasurePolynomial difference() const { return lhs - rhs; }
    std::string to_string() const { return lhs.to_string() + " = " + rhs.to_string(); }
};

// A graph together with distinguished vertices whose closure is the whole
// graph; it names the type of the tuple.
struct TypedGraph {
    Graph graph;
    std::vector<std::string> tuple;
};

// PreconditionError unless the graph is in K_f and is the closure of its tuple.
void check_typed_graph(const TypedGraph& t, const GoodFunction& cfg);

// mu(G) / |Aut(G / tuple)|.
MeasurePolynomial type_measure_expression(const TypedGraph& t, const GoodFunction& cfg);

// Two vertices at distance two (the path a-m-b with tuple a, b) and two
// vertices with no path of length at most two (two isolated vertices).
TypedGraph distance_two_type();
TypedGraph far_apart_type();

// Variable names: short aliases for the small graphs used in the equations.
CanonicalForm edge_form();
std::optional<std::string> measure_alias(const CanonicalForm& form);
std::string variable_name(const CanonicalForm& form);
const std::vector<std::pair<std::string, Graph>>& alias_graphs();

// mu(B) mu(C) = mu(A) * sum_i mu(D_i) / |Aut(D_i / B u C)| over the eventual
// closures D_i.
MeasureEquation derive_amalgam_equation(const AmalgamDiagram& diag, const GoodFunction& cfg);

// For 2-types p12(x1,x2), p23(x2,x3), p13(x1,x3) over the empty set:
// sum over the completions B of the glued graph of mu(B)/|Aut(B/x1x2x3)|
// times the singleton measures equals the product of the pair measures.
// Completions are the zero extensions in which every pair part and every
// singleton closure stays closed.
MeasureEquation derive_triangle_equation(const TypedGraph& p12, const TypedGraph& p23, const TypedGraph& p13, const GoodFunction& cfg);

// mu(P2 + pt) mu(2 pts) = mu(edge + pt)^2, after checking that the path-plus-
// vertex amalgam over two vertices has no proper eventual closure.
MeasureEquation derive_path_and_vertex_equation(const GoodFunction& cfg);

struct NamedDiagram {
    std::string name;
    AmalgamDiagram diagram;
};

// The six amalgams behind the elimination, in elimination order: two edges at
// a vertex, two vertices, two paths over an edge, edge and vertex over a
// vertex, path and vertex over two vertices, two three-paths over a path.
std::vector<NamedDiagram> standard_amalgam_diagrams(const GoodFunction& cfg);

enum class Verdict { ForcedZero, Inconsistent, Consistent, Undetermined };
std::string to_string(Verdict v);

struct EliminationStep {
    std::size_t equation = 0;
    CanonicalForm variable;
    RatFunc coefficient;
    RatFunc value;
};

// An equation left with no unsolved variable: lhs = a/den, rhs = b/den'
// gives the polynomial identity a den' = b den. `common` is the gcd of the
// two sides, cancelled in `reduced`.
struct ResidualIdentity {
    std::size_t equation = 0;
    UPoly full;
    UPoly common;
    UPoly reduced;
};

struct NonMeasurabilityCertificate {
    CanonicalForm target;
    std::vector<MeasureEquation> equations;
    std::vector<EliminationStep> steps;
    std::vector<ResidualIdentity> identities;
    // Monic gcd of the reduced residuals, and of the full residuals.
    UPoly final_polynomial;
    UPoly full_residual;
    Verdict verdict = Verdict::Undetermined;
    // Distinct roots of the full residual in (0, 1], by Sturm sequences.
    std::size_t roots_in_unit_interval = 0;
    bool zero_is_root = false;
    // Floating-point scan of the final polynomial over (0, 1].
    std::vector<double> scanned_roots;
    std::string conclusion;
    std::optional<AmalgamationReport> amalgamation_gate;
    std::optional<GrowthReport> growth_gate;
};

class NonTriangularSystem : public PreconditionError {
public:
    NonTriangularSystem(std::vector<std::string> variables);
    const std::vector<std::string>& variables() const { return variables_; }

private:
    std::vector<std::string> variables_;
};

// Triangular elimination over Q(target): repeatedly solve an equation that is
// linear in its only unsolved variable, then turn equations with nothing left
// to solve into polynomial identities in the target.
NonMeasurabilityCertificate reduce_system(const std::vector<MeasureEquation>& equations, const CanonicalForm& target);

// Re-runs the recorded steps and identities and checks that they reproduce
// the certificate exactly.
bool replay_certificate(const NonMeasurabilityCertificate& cert);

// The full pipeline for cfg: amalgamation and growth gates, the six amalgam
// equations, the triangle equation for (far, far, distance two), and the
// elimination targeting lambda. PreconditionError when a gate fails.
NonMeasurabilityCertificate prove_nonmeasurability(const GoodFunction& cfg);

nlohmann::json polynomial_to_json(const MeasurePolynomial& p);
nlohmann::json equation_to_json(const MeasureEquation& e);
nlohmann::json upoly_to_json(const UPoly& p);
nlohmann::json certificate_to_json(const NonMeasurabilityCertificate& cert);

} // namespace hrush

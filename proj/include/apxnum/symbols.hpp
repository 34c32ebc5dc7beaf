#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

namespace apx {

using cdouble = std::complex<double>;

enum class SymbolKind {
    identity,
    shrink,         // z -> c z
    affine,         // z -> a + b z
    mobius,         // z -> (a - z)/(1 - conj(a) z)
    lens,           // T . tau_theta . T  with T(z) = (1-z)/(1+z)
    blaschke_power, // z -> mobius_a(z)^m
    conjugated,     // z -> mobius_{phi(a)}(phi(mobius_a(z)))
    composed,       // left-to-right mathematical composition: first(second(...))
};

struct SymNode;

// Analytic self-map of the unit disk, built from a small set of closed-form
// generators.  Value type; cheap to copy.
class Symbol {
  public:
    static Symbol identity();
    static Symbol shrink(cdouble c);
    static Symbol affine(cdouble a, cdouble b);
    static Symbol mobius(cdouble a);
    static Symbol lens(double theta);
    static Symbol blaschke_power(cdouble a, int m);
    static Symbol conjugated(const Symbol& inner, cdouble a);
    static Symbol composed(std::vector<Symbol> parts);

    cdouble eval(cdouble z) const;
    cdouble deriv(cdouble z) const;

    SymbolKind kind() const;
    // Round-trippable mini-grammar literal (parse_symbol(describe()) == *this).
    std::string describe() const;

    // True when sup |phi| over the disk equals 1. Structural for every kind
    // except compositions, which are probed on a near-boundary grid.
    bool touches_boundary() const;

    // True when this symbol or any nested part has the given kind.
    bool has_kind(SymbolKind k) const;

    const SymNode& node() const { return *node_; }

  private:
    explicit Symbol(std::shared_ptr<const SymNode> n) : node_(std::move(n)) {}
    std::shared_ptr<const SymNode> node_;
};

// Mini-grammar parser.  Complex scalars are `x` or `(re,im)`.
//   symbol  := "identity" | "shrink:" c | "affine:" c "," c | "mobius:" c
//            | "lens:" x | "blaschke:" c "," int
//            | "conj:" symbol "@" c | "compose:[" symbol (";" symbol)* "]"
Symbol parse_symbol(const std::string& text);

// Central finite-difference derivative with step 1e-6 scaled by (1 - |z|).
// Cross-check oracle for the closed-form chain-rule derivative.
cdouble deriv_fd(const Symbol& phi, cdouble z);

double pseudo_hyperbolic(cdouble a, cdouble b);
double hyperbolic_distance(cdouble a, cdouble b);

// Pseudo-hyperbolic derivative |phi'(z)| (1-|z|^2)/(1-|phi(z)|^2).
double phi_sharp(const Symbol& phi, cdouble z);

struct BracketResult {
    double value;        // certified lower estimate of sup phi_sharp
    cdouble argmax;      // grid point attaining it
    double refine_delta; // change contributed by the final refinement stage
};

// Grid supremum of phi_sharp over |z| <= 0.999 followed by two local
// refinement stages around the running argmax.  Every reported value is an
// evaluated point, hence a true lower bound for [phi].
BracketResult bracket(const Symbol& phi, int radial = 64, int angular = 128);

struct ConjugateResult {
    Symbol psi;
    cdouble psi_prime0; // psi'(0); |psi'(0)| = phi_sharp(phi, a) by construction
};

// psi = mobius_{phi(a)} . phi . mobius_a, renormalized to fix the origin.
// Verifies |psi(0)| <= 1e-10 and ||psi'(0)| - phi_sharp(a)| <= 1e-10.
ConjugateResult conjugate_at(const Symbol& phi, cdouble a);

// Taylor coefficients of phi at 0 through degree N.  Closed form for
// identity/shrink/affine/mobius; otherwise disk-interior Cauchy quadrature
// evaluated at two radii, with their agreement enforced.
std::vector<cdouble> taylor(const Symbol& phi, int N);

// 1 - phi_theta(r) = 2(1-r)^theta / ((1+r)^theta + (1-r)^theta).
double lens_boundary_gap(double theta, double r);

// r_1, r_2, ... with phi_theta(r_{k+1}) = r_k; each step verified to 1e-12.
std::vector<double> backward_orbit(double theta, double r1, int count);

// The canonical symbol set exercised by property suites: identity,
// shrink(0.5), affine(0.3,0.4), mobius(0.5), lens(0.25/0.5/0.75),
// blaschke_power(0.5,2), the conjugate of the affine example at 0.5, and a
// shrink-lens composition.
std::vector<Symbol> builtin_symbols();

} // namespace apx

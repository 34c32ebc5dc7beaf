#include "apxnum/symbols.hpp"

#include "apxnum/errors.hpp"
#include "symbol_node.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <utility>

namespace apx {

namespace {

constexpr double kDiskTol = 1e-12;

void require_in_disk(cdouble a, const char* what) {
    if (std::abs(a) >= 1.0)
        throw domain_error(std::string(what) + " must lie in the open unit disk");
}

cdouble mobius_eval(cdouble a, cdouble z) { return (a - z) / (1.0 - std::conj(a) * z); }

// T(z) = (1-z)/(1+z), an involution exchanging the disk and the right half plane.
cdouble cayley(cdouble z) { return (1.0 - z) / (1.0 + z); }

cdouble lens_eval(double theta, cdouble z) {
    if (std::abs(z - cdouble(-1.0, 0.0)) < 1e-300) return -1.0; // continuous extension
    if (std::abs(z - cdouble(1.0, 0.0)) < 1e-300) return 1.0;
    const cdouble w = cayley(z); // Re w >= 0 on the closed disk
    const cdouble v = std::pow(w, theta);
    return cayley(v);
}

cdouble lens_deriv(double theta, cdouble z) {
    const cdouble w = cayley(z);
    const cdouble v = std::pow(w, theta);
    const cdouble dT_z = -2.0 / ((1.0 + z) * (1.0 + z));
    const cdouble dT_v = -2.0 / ((1.0 + v) * (1.0 + v));
    return dT_v * theta * std::pow(w, theta - 1.0) * dT_z;
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt(cdouble c) {
    if (c.imag() == 0.0) return fmt(c.real());
    return "(" + fmt(c.real()) + "," + fmt(c.imag()) + ")";
}

} // namespace

Symbol Symbol::identity() {
    auto n = std::make_shared<SymNode>();
    n->kind = SymbolKind::identity;
    return Symbol(std::move(n));
}

Symbol Symbol::shrink(cdouble c) {
    if (c == 0.0 || std::abs(c) > 1.0 + kDiskTol)
        throw domain_error("shrink factor must satisfy 0 < |c| <= 1");
    auto n = std::make_shared<SymNode>();
    n->kind = SymbolKind::shrink;
    n->p1 = c;
    return Symbol(std::move(n));
}

Symbol Symbol::affine(cdouble a, cdouble b) {
    if (b == 0.0) throw domain_error("affine symbol needs b != 0");
    if (std::abs(a) + std::abs(b) > 1.0 + kDiskTol)
        throw domain_error("affine symbol needs |a| + |b| <= 1 to map the disk into itself");
    auto n = std::make_shared<SymNode>();
    n->kind = SymbolKind::affine;
    n->p1 = a;
    n->p2 = b;
    return Symbol(std::move(n));
}

Symbol Symbol::mobius(cdouble a) {
    require_in_disk(a, "mobius parameter");
    auto n = std::make_shared<SymNode>();
    n->kind = SymbolKind::mobius;
    n->p1 = a;
    return Symbol(std::move(n));
}

Symbol Symbol::lens(double theta) {
    if (!(theta > 0.0 && theta < 1.0)) throw domain_error("lens exponent must lie in (0, 1)");
    auto n = std::make_shared<SymNode>();
    n->kind = SymbolKind::lens;
    n->theta = theta;
    return Symbol(std::move(n));
}

Symbol Symbol::blaschke_power(cdouble a, int m) {
    require_in_disk(a, "blaschke base point");
    if (m < 1) throw domain_error("blaschke power must be >= 1");
    auto n = std::make_shared<SymNode>();
    n->kind = SymbolKind::blaschke_power;
    n->p1 = a;
    n->m = m;
    return Symbol(std::move(n));
}

Symbol Symbol::conjugated(const Symbol& inner, cdouble a) {
    require_in_disk(a, "conjugation base point");
    const cdouble b = inner.eval(a);
    if (std::abs(b) >= 1.0)
        throw domain_error("conjugation image phi(a) must lie in the open unit disk");
    auto n = std::make_shared<SymNode>();
    n->kind = SymbolKind::conjugated;
    n->p1 = a;
    n->p2 = b;
    n->sub.push_back(inner);
    return Symbol(std::move(n));
}

Symbol Symbol::composed(std::vector<Symbol> parts) {
    if (parts.empty()) throw domain_error("composed symbol needs at least one part");
    auto n = std::make_shared<SymNode>();
    n->kind = SymbolKind::composed;
    n->sub = std::move(parts);
    return Symbol(std::move(n));
}

SymbolKind Symbol::kind() const { return node_->kind; }

cdouble Symbol::eval(cdouble z) const {
    if (std::abs(z) > 1.0 + 1e-9) throw domain_error("evaluation point outside the closed disk");
    const SymNode& n = *node_;
    switch (n.kind) {
        case SymbolKind::identity: return z;
        case SymbolKind::shrink: return n.p1 * z;
        case SymbolKind::affine: return n.p1 + n.p2 * z;
        case SymbolKind::mobius: return mobius_eval(n.p1, z);
        case SymbolKind::lens: return lens_eval(n.theta, z);
        case SymbolKind::blaschke_power: {
            cdouble b = mobius_eval(n.p1, z), p = 1.0;
            for (int i = 0; i < n.m; ++i) p *= b;
            return p;
        }
        case SymbolKind::conjugated:
            return mobius_eval(n.p2, n.sub[0].eval(mobius_eval(n.p1, z)));
        case SymbolKind::composed: {
            cdouble w = z;
            for (auto it = n.sub.rbegin(); it != n.sub.rend(); ++it) w = it->eval(w);
            return w;
        }
    }
    throw domain_error("unknown symbol kind");
}

cdouble Symbol::deriv(cdouble z) const {
    if (std::abs(z) >= 1.0) throw domain_error("derivative needs |z| < 1");
    const SymNode& n = *node_;
    switch (n.kind) {
        case SymbolKind::identity: return 1.0;
        case SymbolKind::shrink: return n.p1;
        case SymbolKind::affine: return n.p2;
        case SymbolKind::mobius: {
            const cdouble d = 1.0 - std::conj(n.p1) * z;
            return (std::norm(n.p1) - 1.0) / (d * d);
        }
        case SymbolKind::lens: return lens_deriv(n.theta, z);
        case SymbolKind::blaschke_power: {
            const cdouble b = mobius_eval(n.p1, z);
            const cdouble d = 1.0 - std::conj(n.p1) * z;
            cdouble p = 1.0;
            for (int i = 0; i < n.m - 1; ++i) p *= b;
            return static_cast<double>(n.m) * p * (std::norm(n.p1) - 1.0) / (d * d);
        }
        case SymbolKind::conjugated: {
            const cdouble u = mobius_eval(n.p1, z);
            const cdouble fu = n.sub[0].eval(u);
            const cdouble d1 = 1.0 - std::conj(n.p1) * z;
            const cdouble d2 = 1.0 - std::conj(n.p2) * fu;
            return (std::norm(n.p2) - 1.0) / (d2 * d2) * n.sub[0].deriv(u) *
                   ((std::norm(n.p1) - 1.0) / (d1 * d1));
        }
        case SymbolKind::composed: {
            cdouble w = z, d = 1.0;
            for (auto it = n.sub.rbegin(); it != n.sub.rend(); ++it) {
                d *= it->deriv(w);
                w = it->eval(w);
            }
            return d;
        }
    }
    throw domain_error("unknown symbol kind");
}

std::string Symbol::describe() const {
    const SymNode& n = *node_;
    switch (n.kind) {
        case SymbolKind::identity: return "identity";
        case SymbolKind::shrink: return "shrink:" + fmt(n.p1);
        case SymbolKind::affine: return "affine:" + fmt(n.p1) + "," + fmt(n.p2);
        case SymbolKind::mobius: return "mobius:" + fmt(n.p1);
        case SymbolKind::lens: return "lens:" + fmt(n.theta);
        case SymbolKind::blaschke_power: return "blaschke:" + fmt(n.p1) + "," + std::to_string(n.m);
        case SymbolKind::conjugated: return "conj:" + n.sub[0].describe() + "@" + fmt(n.p1);
        case SymbolKind::composed: {
            std::string s = "compose:[";
            for (std::size_t i = 0; i < n.sub.size(); ++i) {
                if (i) s += ";";
                s += n.sub[i].describe();
            }
            return s + "]";
        }
    }
    throw domain_error("unknown symbol kind");
}

bool Symbol::touches_boundary() const {
    switch (node_->kind) {
    case SymbolKind::identity:
    case SymbolKind::mobius:
    case SymbolKind::lens:
    case SymbolKind::blaschke_power:
        return true;
    case SymbolKind::shrink:
        return std::abs(node_->p1) >= 1.0 - 1e-12;
    case SymbolKind::affine:
        return std::abs(node_->p1) + std::abs(node_->p2) >= 1.0 - 1e-12;
    case SymbolKind::conjugated:
        // automorphism conjugation preserves the sup norm
        return node_->sub[0].touches_boundary();
    case SymbolKind::composed: {
        // no structural rule: parts may touch the boundary at mismatched
        // points; probe instead (can misjudge very flat compositions)
        const double r = 1.0 - 1e-9;
        std::vector<double> angles;
        for (int j = 0; j < 512; ++j)
            angles.push_back(-M_PI + 2.0 * M_PI * (j + 0.5) / 512.0);
        // dyadic refinement toward the axis contact points of lens-like parts
        angles.push_back(0.0);
        angles.push_back(M_PI);
        for (int k = 1; k <= 40; ++k) {
            const double t = M_PI * std::ldexp(1.0, -k);
            angles.insert(angles.end(), {t, -t, M_PI - t, -M_PI + t});
        }
        double worst = 0.0;
        for (double t : angles)
            worst = std::max(worst, std::abs(eval(r * std::polar(1.0, t))));
        return worst > 1.0 - 1e-2;
    }
    }
    throw domain_error("unknown symbol kind");
}

bool Symbol::has_kind(SymbolKind k) const {
    if (node_->kind == k) return true;
    for (const Symbol& part : node_->sub)
        if (part.has_kind(k)) return true;
    return false;
}

cdouble deriv_fd(const Symbol& phi, cdouble z) {
    const double h = 1e-6 * (1.0 - std::abs(z));
    if (h <= 0.0) throw domain_error("finite-difference derivative needs |z| < 1");
    return (phi.eval(z + h) - phi.eval(z - h)) / (2.0 * h);
}

double pseudo_hyperbolic(cdouble a, cdouble b) {
    if (std::abs(a) >= 1.0 || std::abs(b) >= 1.0)
        throw domain_error("pseudo-hyperbolic distance needs both points in the open disk");
    return std::abs((a - b) / (1.0 - std::conj(a) * b));
}

double hyperbolic_distance(cdouble a, cdouble b) {
    const double rho = pseudo_hyperbolic(a, b);
    return 0.5 * std::log((1.0 + rho) / (1.0 - rho));
}

double phi_sharp(const Symbol& phi, cdouble z) {
    if (std::abs(z) >= 1.0) throw domain_error("phi_sharp needs |z| < 1");
    const double img = std::norm(phi.eval(z));
    if (img >= 1.0) throw domain_error("phi_sharp: image point reached the boundary");
    return std::abs(phi.deriv(z)) * (1.0 - std::norm(z)) / (1.0 - img);
}

BracketResult bracket(const Symbol& phi, int radial, int angular) {
    if (radial < 4 || angular < 8) throw domain_error("bracket grid too coarse");
    const double rmax = 0.999;
    double best = 0.0;
    cdouble arg = 0.0;
    auto probe = [&](cdouble z) {
        if (std::abs(z) > rmax) return;
        const double v = phi_sharp(phi, z);
        if (v > best) {
            best = v;
            arg = z;
        }
    };
    probe(cdouble(0.0, 0.0));
    for (int i = 0; i < radial; ++i) {
        const double r = rmax * (i + 0.5) / radial;
        for (int j = 0; j < angular; ++j)
            probe(std::polar(r, 2.0 * M_PI * j / angular));
    }
    // Two refinement passes on a local polar window around the argmax, each
    // shrinking the window by 8.  Stage values are monotone; delta reports the
    // final stage's contribution.
    double dr = rmax / radial, dt = 2.0 * M_PI / angular;
    double prev = best;
    double delta = 0.0;
    for (int stage = 0; stage < 2; ++stage) {
        const double r0 = std::abs(arg), t0 = std::arg(arg);
        prev = best;
        const int g = 32;
        for (int i = -g; i <= g; ++i) {
            const double r = std::clamp(r0 + dr * i / g, 0.0, rmax);
            for (int j = -g; j <= g; ++j)
                probe(std::polar(r, t0 + dt * j / g));
        }
        delta = best - prev;
        dr /= 8.0;
        dt /= 8.0;
    }
    return {best, arg, delta};
}

ConjugateResult conjugate_at(const Symbol& phi, cdouble a) {
    Symbol psi = Symbol::conjugated(phi, a);
    const double at_zero = std::abs(psi.eval(0.0));
    if (at_zero > 1e-10)
        throw numerical_error("conjugated symbol does not fix the origin", at_zero, 0.0);
    const cdouble d0 = psi.deriv(0.0);
    const double sharp = phi_sharp(phi, a);
    if (std::abs(std::abs(d0) - sharp) > 1e-10)
        throw numerical_error("conjugated symbol derivative disagrees with phi_sharp",
                              std::abs(d0), sharp);
    return {psi, d0};
}

namespace {

// Cauchy-integral coefficients on |z| = r, M uniform nodes, no FFT.
std::vector<cdouble> cauchy_coeffs(const Symbol& phi, int N, double r, int M) {
    std::vector<cdouble> vals(static_cast<std::size_t>(M));
    for (int j = 0; j < M; ++j)
        vals[static_cast<std::size_t>(j)] = phi.eval(std::polar(r, 2.0 * M_PI * j / M));
    std::vector<cdouble> c(static_cast<std::size_t>(N) + 1);
    for (int k = 0; k <= N; ++k) {
        cdouble s = 0.0;
        for (int j = 0; j < M; ++j)
            s += vals[static_cast<std::size_t>(j)] *
                 std::polar(1.0, -2.0 * M_PI * k * j / M);
        c[static_cast<std::size_t>(k)] = s / (static_cast<double>(M) * std::pow(r, k));
    }
    return c;
}

} // namespace

std::vector<cdouble> taylor(const Symbol& phi, int N) {
    if (N < 0) throw domain_error("taylor degree must be >= 0");
    const SymNode& n = phi.node();
    std::vector<cdouble> c(static_cast<std::size_t>(N) + 1, cdouble(0.0));
    switch (n.kind) {
        case SymbolKind::identity:
            if (N >= 1) c[1] = 1.0;
            return c;
        case SymbolKind::shrink:
            if (N >= 1) c[1] = n.p1;
            return c;
        case SymbolKind::affine:
            c[0] = n.p1;
            if (N >= 1) c[1] = n.p2;
            return c;
        case SymbolKind::mobius: {
            // (a - z)/(1 - conj(a) z) = a + (|a|^2 - 1) sum_{k>=1} conj(a)^{k-1} z^k
            c[0] = n.p1;
            const cdouble ca = std::conj(n.p1);
            cdouble p = std::norm(n.p1) - 1.0;
            for (int k = 1; k <= N; ++k) {
                c[static_cast<std::size_t>(k)] = p;
                p *= ca;
            }
            return c;
        }
        default: break;
    }
    // Interior Cauchy quadrature at two radii; the coefficients of a Schur
    // function are bounded by 1, so 8(N+1) nodes push aliasing far below the
    // agreement tolerance while the radii keep roundoff amplification ~ e^12.
    const int nn = std::max(N, 8);
    const double r0 = std::exp(-8.0 / nn), r1 = std::exp(-12.0 / nn);
    const int M = 8 * (N + 1);
    auto c0 = cauchy_coeffs(phi, N, r0, M);
    const auto c1 = cauchy_coeffs(phi, N, r1, M);
    for (int k = 0; k <= N; ++k) {
        const double d = std::abs(c0[static_cast<std::size_t>(k)] - c1[static_cast<std::size_t>(k)]);
        const double scale = std::max(1.0, std::abs(c0[static_cast<std::size_t>(k)]));
        if (d > 1e-8 * scale)
            throw numerical_error("taylor coefficients disagree between quadrature radii",
                                  std::abs(c0[static_cast<std::size_t>(k)]),
                                  std::abs(c1[static_cast<std::size_t>(k)]));
    }
    auto snap = [&](std::size_t k, cdouble exact) {
        if (std::abs(c0[k] - exact) > 1e-8 * std::max(1.0, std::abs(exact)))
            throw numerical_error("taylor quadrature disagrees with the pointwise value",
                                  std::abs(c0[k]), std::abs(exact));
        c0[k] = exact;
    };
    // the lowest coefficients have closed forms; keeping them exact makes
    // phi(0) = 0 columns exactly triangular downstream
    snap(0, phi.eval(0.0));
    if (N >= 1) snap(1, phi.deriv(0.0));
    return c0;
}

double lens_boundary_gap(double theta, double r) {
    if (!(theta > 0.0 && theta < 1.0)) throw domain_error("lens exponent must lie in (0, 1)");
    if (!(r >= 0.0 && r < 1.0)) throw domain_error("lens_boundary_gap needs r in [0, 1)");
    const double up = std::pow(1.0 - r, theta);
    return 2.0 * up / (std::pow(1.0 + r, theta) + up);
}

std::vector<double> backward_orbit(double theta, double r1, int count) {
    if (!(theta > 0.0 && theta < 1.0)) throw domain_error("lens exponent must lie in (0, 1)");
    if (!(r1 > 0.0 && r1 < 1.0)) throw domain_error("orbit start must lie in (0, 1)");
    if (count < 1) throw domain_error("orbit length must be >= 1");
    // Work on the gaps g = 1 - r: the orbit approaches 1 superexponentially
    // and r itself runs out of mantissa long before g does.
    std::vector<double> r;
    r.reserve(static_cast<std::size_t>(count));
    r.push_back(r1);
    double g = 1.0 - r1;
    for (int k = 1; k < count; ++k) {
        const double u = std::pow(g / (2.0 - g), 1.0 / theta);
        const double g_next = 2.0 * u / (1.0 + u);
        if (g_next < 4.0 * std::numeric_limits<double>::epsilon())
            throw domain_error("backward orbit reaches the boundary resolution; fewer steps");
        // forward map in gap coordinates; must reproduce the previous gap
        const double v = std::pow(g_next / (2.0 - g_next), theta);
        const double g_fwd = 2.0 * v / (1.0 + v);
        if (std::abs(g_fwd - g) > 1e-12)
            throw numerical_error("backward orbit step failed to invert the lens map",
                                  1.0 - g_fwd, 1.0 - g);
        g = g_next;
        r.push_back(1.0 - g);
    }
    return r;
}

std::vector<Symbol> builtin_symbols() {
    std::vector<Symbol> v;
    v.push_back(Symbol::identity());
    v.push_back(Symbol::shrink(0.5));
    v.push_back(Symbol::affine(0.3, 0.4));
    v.push_back(Symbol::mobius(0.5));
    v.push_back(Symbol::lens(0.25));
    v.push_back(Symbol::lens(0.5));
    v.push_back(Symbol::lens(0.75));
    v.push_back(Symbol::blaschke_power(0.5, 2));
    v.push_back(Symbol::conjugated(Symbol::affine(0.3, 0.4), 0.5));
    v.push_back(Symbol::composed({Symbol::shrink(0.5), Symbol::lens(0.5)}));
    return v;
}

// ---------------------------------------------------------------------------
// Mini-grammar parser.

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw domain_error("symbol parse error: expected '" + std::string(1, c) +
                               "' at position " + std::to_string(pos) + " in '" + s + "'");
    }
    bool match(const char* kw) {
        skip_ws();
        const std::size_t len = std::string(kw).size();
        if (s.compare(pos, len, kw) == 0) {
            pos += len;
            return true;
        }
        return false;
    }
    double number() {
        skip_ws();
        double out = 0.0;
        const char* begin = s.data() + pos;
        const char* end = s.data() + s.size();
        auto [ptr, ec] = std::from_chars(begin, end, out);
        if (ec != std::errc() || ptr == begin)
            throw domain_error("symbol parse error: expected a number at position " +
                               std::to_string(pos) + " in '" + s + "'");
        pos += static_cast<std::size_t>(ptr - begin);
        return out;
    }
    cdouble complex_scalar() {
        skip_ws();
        if (eat('(')) {
            const double re = number();
            expect(',');
            const double im = number();
            expect(')');
            return {re, im};
        }
        return {number(), 0.0};
    }
    int integer() {
        const double x = number();
        const int i = static_cast<int>(std::lround(x));
        if (std::abs(x - i) > 0.0)
            throw domain_error("symbol parse error: expected an integer in '" + s + "'");
        return i;
    }
};

Symbol parse_at(Cursor& c) {
    if (c.match("identity")) return Symbol::identity();
    if (c.match("shrink:")) return Symbol::shrink(c.complex_scalar());
    if (c.match("affine:")) {
        const cdouble a = c.complex_scalar();
        c.expect(',');
        return Symbol::affine(a, c.complex_scalar());
    }
    if (c.match("mobius:")) return Symbol::mobius(c.complex_scalar());
    if (c.match("lens:")) return Symbol::lens(c.number());
    if (c.match("blaschke:")) {
        const cdouble a = c.complex_scalar();
        c.expect(',');
        return Symbol::blaschke_power(a, c.integer());
    }
    if (c.match("conj:")) {
        Symbol inner = parse_at(c);
        c.expect('@');
        return Symbol::conjugated(inner, c.complex_scalar());
    }
    if (c.match("compose:[")) {
        std::vector<Symbol> parts;
        parts.push_back(parse_at(c));
        while (c.eat(';')) parts.push_back(parse_at(c));
        c.expect(']');
        return Symbol::composed(std::move(parts));
    }
    throw domain_error("symbol parse error: unknown symbol at position " +
                       std::to_string(c.pos) + " in '" + c.s + "'");
}

} // namespace

Symbol parse_symbol(const std::string& text) {
    Cursor c{text};
    Symbol s = parse_at(c);
    c.skip_ws();
    if (c.pos != text.size())
        throw domain_error("symbol parse error: trailing input at position " +
                           std::to_string(c.pos) + " in '" + text + "'");
    return s;
}

} // namespace apx

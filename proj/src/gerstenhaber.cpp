#include "quiverhh/gerstenhaber.hpp"

#include <stdexcept>

namespace quiverhh {

namespace {

Path join(const Path& p, const Path& q) {
    auto r = compose(p, q);
    if (!r) throw std::logic_error("internal: endpoints do not match in a product");
    return *r;
}

// Product in A of basis paths, when it survives.
std::optional<Path> multiply(const BoundQuiver& bq, const Path& p, const Path& q) {
    auto r = compose(p, q);
    if (!r || !bq.avoids_relations(*r)) return std::nullopt;
    return r;
}

std::optional<Path> multiply(const BoundQuiver& bq, const Path& p, const Path& q, const Path& r) {
    auto pq = multiply(bq, p, q);
    return pq ? multiply(bq, *pq, r) : std::nullopt;
}

std::optional<ParallelPair> cup_pair(const BoundQuiver& bq, const ParallelPair& f, const ParallelPair& g) {
    auto rho = compose(f.rho, g.rho);
    if (!rho || !bq.is_relation_chain(*rho)) return std::nullopt;
    auto gamma = multiply(bq, f.gamma, g.gamma);
    if (!gamma) return std::nullopt;
    return ParallelPair{std::move(*rho), std::move(*gamma)};
}

template <class Emit>
void circ_pair(const BoundQuiver& bq, const ParallelPair& f, const ParallelPair& g, std::size_t i, Emit&& emit) {
    const Path& rho = f.rho;
    const Path& gp = g.gamma;
    const std::size_t n = rho.length();
    const std::size_t len = gp.length();
    if (len == 0) return;

    if (n == 1) {
        for (std::size_t j = 0; j < len; ++j) {
            if (gp[j] != rho[0]) continue;
            auto gamma = multiply(bq, bq.subpath(gp, 0, j), f.gamma, bq.subpath(gp, j + 1, len));
            if (gamma) emit(ParallelPair{g.rho, std::move(*gamma)});
        }
        return;
    }

    auto substituted = [&](const Path& w) { return bq.is_relation_chain(w); };
    if (len == 1) {
        if (rho[i - 1] != gp[0]) return;
        Path w = join(join(bq.subpath(rho, 0, i - 1), g.rho), bq.subpath(rho, i, n));
        if (substituted(w)) emit(ParallelPair{std::move(w), f.gamma});
        return;
    }
    if (i == 1 && rho[0] == gp.last()) {
        Path w = join(g.rho, bq.subpath(rho, 1, n));
        auto gamma = multiply(bq, bq.subpath(gp, 0, len - 1), f.gamma);
        if (substituted(w) && gamma) emit(ParallelPair{std::move(w), std::move(*gamma)});
    }
    if (i == n && rho[n - 1] == gp.first()) {
        Path w = join(bq.subpath(rho, 0, n - 1), g.rho);
        auto gamma = multiply(bq, f.gamma, bq.subpath(gp, 1, len));
        if (substituted(w) && gamma) emit(ParallelPair{std::move(w), std::move(*gamma)});
    }
}

void require_cocycle(const CochainComplex& cx, const Cochain& c, const char* what) {
    if (!cx.is_cocycle(c))
        throw NotCocycleError(std::string(what) + " of degree " + std::to_string(c.degree()) + " is not a cocycle");
}

}  // namespace

Cochain cup(const BoundQuiver& bq, const Cochain& f, const Cochain& g, const Field& field) {
    Cochain out(f.degree() + g.degree());
    for (const auto& [p, x] : f.terms())
        for (const auto& [q, y] : g.terms())
            if (auto r = cup_pair(bq, p, q)) out.add_term(*r, field.mul(x, y), field);
    return out;
}

Cochain circ_i(const BoundQuiver& bq, const Cochain& f, const Cochain& g, std::size_t i, const Field& field) {
    const std::size_t n = f.degree();
    if (i < 1 || i > n) throw std::invalid_argument("circ_i requires 1 <= i <= deg f");
    Cochain out(n + g.degree() - 1);
    for (const auto& [p, x] : f.terms())
        for (const auto& [q, y] : g.terms()) {
            Scalar c = field.mul(x, y);
            circ_pair(bq, p, q, i, [&](const ParallelPair& r) { out.add_term(r, c, field); });
        }
    return out;
}

Cochain circ(const BoundQuiver& bq, const Cochain& f, const Cochain& g, const Field& field) {
    const std::size_t n = f.degree(), m = g.degree();
    if (n + m == 0) throw std::invalid_argument("f o g needs deg f + deg g >= 1");
    Cochain out(n + m - 1);
    for (std::size_t i = 1; i <= n; ++i) {
        Scalar sign = field.sign(static_cast<long>((i - 1) * (m + 1)));  // (m - 1) and (m + 1) have the same parity
        out = out.plus(circ_i(bq, f, g, i, field).scaled(sign, field), field);
    }
    return out;
}

Cochain bracket(const BoundQuiver& bq, const Cochain& f, const Cochain& g, const Field& field) {
    const long n = static_cast<long>(f.degree()), m = static_cast<long>(g.degree());
    Scalar sign = field.sign((n - 1) * (m - 1));
    return circ(bq, f, g, field).minus(circ(bq, g, f, field).scaled(sign, field), field);
}

GradedElement GradedElement::of(const CochainComplex& cx, Cochain c) {
    GradedElement e{std::move(c), std::nullopt};
    if (cx.is_cocycle(e.cochain)) e.class_rep = cx.class_of(e.cochain);
    return e;
}

Cochain cup_class(const CochainComplex& cx, const Cochain& f, const Cochain& g) {
    require_cocycle(cx, f, "left factor");
    require_cocycle(cx, g, "right factor");
    return cx.class_of(cup(cx.quiver(), f, g, cx.field()));
}

Cochain bracket_class(const CochainComplex& cx, const Cochain& f, const Cochain& g) {
    require_cocycle(cx, f, "left factor");
    require_cocycle(cx, g, "right factor");
    return cx.class_of(bracket(cx.quiver(), f, g, cx.field()));
}

// ---------------------------------------------------------------------------

ParallelPair omega_power(const BoundQuiver& bq, const ParallelPair& omega, std::size_t s) {
    if (s == 0) throw std::invalid_argument("omega_power requires s >= 1");
    if (!classify_cyclic(bq, omega).gentle)
        throw std::invalid_argument("not a gentle pair: " + describe(bq, omega));
    std::vector<ArrowId> arrows;
    for (std::size_t j = 0; j < s; ++j)
        arrows.insert(arrows.end(), omega.rho.arrows().begin(), omega.rho.arrows().end());
    VertexId r = omega.rho.source();
    return {Path::unchecked(r, r, std::move(arrows)), Path::trivial(r)};
}

Cochain psi(const CochainComplex& cx, const ParallelPair& omega, std::size_t s) {
    const auto& bq = cx.quiver();
    ParallelPair w = omega_power(bq, omega, s);
    Path first = Path::from_arrow(bq.arrow(omega.rho.first()));
    Cochain c = Cochain::basis({join(w.rho, first), first});
    if (!cx.is_cocycle(c)) throw std::logic_error("psi(omega^s) is not a cocycle: " + describe(bq, c));
    return c;
}

Cochain norm_cochain(const CochainComplex& cx, const ParallelPair& omega, std::size_t s) {
    const auto& bq = cx.quiver();
    ParallelPair w = omega_power(bq, omega, s);
    Cochain c = sum_of(w.degree(), orbit(bq, w), cx.field());
    if ((w.degree() % 2 == 0 || cx.field().characteristic() == 2) && !cx.is_cocycle(c))
        throw std::logic_error("N(omega^s) is not a cocycle: " + describe(bq, c));
    return c;
}

const char* to_string(WitnessKind k) { return k == WitnessKind::Cup ? "cup" : "bracket"; }

std::string Witness::describe(const BoundQuiver& bq) const {
    std::string out;
    out += std::string("kind: ") + to_string(kind) + "\n";
    out += "omega: " + quiverhh::describe(bq, omega) + " (n = " + std::to_string(n) + ", order " + std::to_string(k) +
           ")\n";
    out += "s1 = " + std::to_string(s1) + ", s2 = " + std::to_string(s2) + "\n";
    out += "left  (degree " + std::to_string(left.degree()) + "): " + quiverhh::describe(bq, left) + "\n";
    out += "right (degree " + std::to_string(right.degree()) + "): " + quiverhh::describe(bq, right) + "\n";
    out += "product (degree " + std::to_string(product.degree()) + "): " + quiverhh::describe(bq, product) + "\n";
    out += "expected: " + quiverhh::describe(bq, expected) + " (coefficient " + to_string(coefficient) + ")\n";
    out += std::string("identity holds: ") + (identity_holds ? "yes" : "no") + "\n";
    out += std::string("factors are nonzero classes: ") + (factors_nonzero ? "yes" : "no") + "\n";
    out += std::string("product class nonzero: ") + (class_nonzero ? "yes" : "no") + "\n";
    return out;
}

namespace {

bool nonzero_class(const CochainComplex& cx, const Cochain& c) {
    return cx.is_cocycle(c) && !cx.is_zero_class(c);
}

}  // namespace

Witness verify_witness(const CochainComplex& cx, WitnessKind kind, const ParallelPair& omega, std::size_t s1,
                       std::size_t s2) {
    const auto& bq = cx.quiver();
    const auto& field = cx.field();
    Witness w;
    w.kind = kind;
    w.omega = omega;
    w.n = omega.degree();
    w.k = order_of(bq, omega);
    w.s1 = s1;
    w.s2 = s2;
    if (kind == WitnessKind::Cup) {
        w.left = norm_cochain(cx, omega, s1);
        w.right = norm_cochain(cx, omega, s2);
        w.product = cup(bq, w.left, w.right, field);
        w.coefficient = field.one();
        w.expected = norm_cochain(cx, omega, s1 + s2);
    } else {
        w.left = psi(cx, omega, s1);
        w.right = psi(cx, omega, s2);
        w.product = bracket(bq, w.left, w.right, field);
        Scalar diff = field.from_int(static_cast<long>(s1) - static_cast<long>(s2));
        Scalar k = field.from_int(static_cast<long>(w.k));
        Cochain target = psi(cx, omega, s1 + s2);
        if (k != 0) {
            w.coefficient = field.mul(field.div(field.from_int(static_cast<long>(w.n)), k), diff);
            w.expected = target.scaled(w.coefficient, field);
        } else {
            // n/k is not a field element; compare k * product with n (s1 - s2) psi instead.
            w.coefficient = field.zero();
            w.expected = target.scaled(field.mul(field.from_int(static_cast<long>(w.n)), diff), field);
            w.product = w.product.scaled(k, field);
        }
    }
    w.identity_holds = w.product == w.expected;
    w.factors_nonzero = nonzero_class(cx, w.left) && nonzero_class(cx, w.right);
    w.class_nonzero = nonzero_class(cx, w.product);
    return w;
}

namespace {

std::optional<ParallelPair> first_gentle_pair(const CochainComplex& cx, std::size_t max_degree) {
    for (std::size_t n = 1; n <= max_degree; ++n) {
        DegreeCensus census(cx.quiver(), cx.basis_paths(), n);
        for (const auto& c : census.cyclic())
            if (c.gentle) return c.pair;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Witness> find_cup_witness(const CochainComplex& cx, std::size_t max_degree) {
    auto omega = first_gentle_pair(cx, max_degree);
    if (!omega) return std::nullopt;
    std::size_t s = (cx.field().characteristic() != 2 && omega->degree() % 2 == 1) ? 2 : 1;
    return verify_witness(cx, WitnessKind::Cup, *omega, s, s);
}

std::optional<Witness> find_bracket_witness(const CochainComplex& cx, std::size_t max_degree) {
    if (cx.field().characteristic() != 0)
        throw HypothesisError("the bracket witness is only established in characteristic 0");
    if (!is_gentle(cx.quiver())) throw HypothesisError("the bracket witness requires a gentle algebra");
    auto omega = first_gentle_pair(cx, max_degree);
    if (!omega) return std::nullopt;
    std::size_t m = omega->degree() % 2 == 1 ? 2 : 1;
    return verify_witness(cx, WitnessKind::Bracket, *omega, m, 2 * m);
}

}  // namespace quiverhh

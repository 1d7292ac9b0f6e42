#include "quiverhh/cochain.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace quiverhh {

Scalar Cochain::coefficient(const ParallelPair& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Cochain::add_term(const ParallelPair& p, const Scalar& c, const Field& field) {
    if (p.degree() != degree_)
        throw std::invalid_argument("cochain term of degree " + std::to_string(p.degree()) + " added to degree " +
                                    std::to_string(degree_));
    Scalar v = field.add(coefficient(p), c);
    if (v == 0)
        terms_.erase(p);
    else
        terms_[p] = v;
}

Cochain Cochain::plus(const Cochain& other, const Field& field) const {
    if (other.degree_ != degree_) throw std::invalid_argument("adding cochains of different degrees");
    Cochain out = *this;
    for (const auto& [p, c] : other.terms_) out.add_term(p, c, field);
    return out;
}

Cochain Cochain::minus(const Cochain& other, const Field& field) const {
    return plus(other.scaled(field.from_int(-1), field), field);
}

Cochain Cochain::scaled(const Scalar& c, const Field& field) const {
    Cochain out(degree_);
    Scalar k = field.canonical(c);
    if (k == 0) return out;
    for (const auto& [p, v] : terms_) out.terms_.emplace(p, field.mul(v, k));
    return out;
}

std::string describe(const BoundQuiver& bq, const Cochain& c) {
    if (c.is_zero()) return "0";
    std::string out;
    for (const auto& [p, v] : c.terms()) {
        std::string coeff = to_string(v);
        bool negative = !coeff.empty() && coeff.front() == '-';
        if (negative) coeff.erase(0, 1);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (coeff != "1") out += coeff + "*";
        out += describe(bq, p);
    }
    return out;
}

Cochain sum_of(std::size_t degree, const std::vector<ParallelPair>& pairs, const Field& field) {
    Cochain c(degree);
    for (const auto& p : pairs) c.add_term(p, field.one(), field);
    return c;
}

// ---------------------------------------------------------------------------

namespace {

// alpha * gamma in A, when nonzero.
std::optional<Path> left_mul(const BoundQuiver& bq, ArrowId a, const Path& g) {
    if (bq.arrow(a).target != g.source()) return std::nullopt;
    if (!g.is_trivial() && bq.is_relation(a, g.first())) return std::nullopt;
    return compose(Path::from_arrow(bq.arrow(a)), g);
}

std::optional<Path> right_mul(const BoundQuiver& bq, const Path& g, ArrowId a) {
    if (bq.arrow(a).source != g.target()) return std::nullopt;
    if (!g.is_trivial() && bq.is_relation(g.last(), a)) return std::nullopt;
    return compose(g, Path::from_arrow(bq.arrow(a)));
}

struct Value {
    std::size_t key;
    const Path* gamma;
    Scalar coeff;
};

/*
 * F_{m+1}(f)(w) = alpha_1 f(alpha_2...alpha_{m+1}) + (-1)^{m+1} f(alpha_1...alpha_m) alpha_{m+1}
 * for every w in AP_{m+1}. `values(rho)` lists f(rho) as keyed terms; each
 * nonzero product is reported as emit(key, w, product, coefficient).
 */
template <class Lookup, class Emit>
void evaluate_differential(const BoundQuiver& bq, std::size_t m, const Field& field, Lookup&& values, Emit&& emit) {
    const Scalar sign = field.sign(static_cast<long>(m + 1));
    for (const auto& w : enumerate_ap(bq, m + 1).elements) {
        Path tail = bq.subpath(w, 1, m + 1);
        Path head = bq.subpath(w, 0, m);
        for (const Value& v : values(tail))
            if (auto g = left_mul(bq, w.first(), *v.gamma)) emit(v.key, w, *g, v.coeff);
        for (const Value& v : values(head))
            if (auto g = right_mul(bq, *v.gamma, w.last())) emit(v.key, w, *g, field.mul(sign, v.coeff));
    }
}

std::map<Path, std::vector<Value>> group_by_rho(const std::vector<ParallelPair>& pairs, const Field& field) {
    std::map<Path, std::vector<Value>> out;
    for (std::size_t j = 0; j < pairs.size(); ++j) out[pairs[j].rho].push_back({j, &pairs[j].gamma, field.one()});
    return out;
}

std::size_t lookup(const std::map<ParallelPair, std::size_t>& index, const ParallelPair& p) {
    auto it = index.find(p);
    if (it == index.end()) throw std::logic_error("differential produced a pair outside the cochain basis");
    return it->second;
}

std::map<ParallelPair, std::size_t> index_pairs(const std::vector<ParallelPair>& pairs) {
    std::map<ParallelPair, std::size_t> out;
    for (std::size_t i = 0; i < pairs.size(); ++i) out.emplace(pairs[i], i);
    return out;
}

SparseMatrix differential_between(const BoundQuiver& bq, std::size_t m, const std::vector<ParallelPair>& domain,
                                  const std::vector<ParallelPair>& codomain, const Field& field) {
    auto index = index_pairs(codomain);
    auto by_rho = group_by_rho(domain, field);
    const std::vector<Value> none;
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols(domain.size());
    evaluate_differential(
        bq, m, field,
        [&](const Path& rho) -> const std::vector<Value>& {
            auto it = by_rho.find(rho);
            return it == by_rho.end() ? none : it->second;
        },
        [&](std::size_t j, const Path& w, const Path& g, const Scalar& c) {
            cols[j].emplace_back(lookup(index, {w, g}), c);
        });
    SparseMatrix out(codomain.size(), domain.size());
    for (std::size_t j = 0; j < cols.size(); ++j) out.set_column(j, make_sparse(std::move(cols[j]), field));
    return out;
}

std::vector<ParallelPair> all_pairs(const BoundQuiver& bq, const BasisPathSet& P, std::size_t n) {
    return parallel_pairs(enumerate_ap(bq, n), P);
}

template <class Pred>
std::vector<ParallelPair> filter(const std::vector<ParallelPair>& pairs, Pred&& pred) {
    std::vector<ParallelPair> out;
    std::copy_if(pairs.begin(), pairs.end(), std::back_inserter(out), pred);
    return out;
}

BlockComponents blocks_from_formulas(const BoundQuiver& bq, std::size_t n, const std::vector<ParallelPair>& domain,
                                     const std::vector<ParallelPair>& codomain, const Field& field) {
    BlockComponents b;
    b.f0_domain = filter(domain, [](const ParallelPair& p) { return p.gamma.is_trivial(); });
    b.f1_domain = filter(domain, [](const ParallelPair& p) { return !p.gamma.is_trivial(); });
    b.f0_codomain = filter(codomain, [](const ParallelPair& p) { return p.gamma.length() == 1; });
    b.f1_codomain = filter(codomain, [](const ParallelPair& p) { return p.gamma.length() >= 2; });
    const Scalar sign = field.sign(static_cast<long>(n + 1));

    // Arrows beta with beta alpha_1 in I (all arrows into s(rho) when n = 0), and dually.
    auto left_arrows = [&](const Path& rho) {
        std::vector<ArrowId> out;
        for (ArrowId beta : bq.incoming(rho.source()))
            if (rho.is_trivial() || bq.is_relation(beta, rho.first())) out.push_back(beta);
        return out;
    };
    auto right_arrows = [&](const Path& rho) {
        std::vector<ArrowId> out;
        for (ArrowId beta : bq.outgoing(rho.target()))
            if (rho.is_trivial() || bq.is_relation(rho.last(), beta)) out.push_back(beta);
        return out;
    };
    auto arrow_path = [&](ArrowId a) { return Path::from_arrow(bq.arrow(a)); };

    auto f0_index = index_pairs(b.f0_codomain);
    b.f0 = SparseMatrix(b.f0_codomain.size(), b.f0_domain.size());
    for (std::size_t j = 0; j < b.f0_domain.size(); ++j) {
        const Path& rho = b.f0_domain[j].rho;
        std::vector<std::pair<std::size_t, Scalar>> terms;
        for (ArrowId beta : left_arrows(rho))
            terms.emplace_back(lookup(f0_index, {*compose(arrow_path(beta), rho), arrow_path(beta)}), field.one());
        for (ArrowId beta : right_arrows(rho))
            terms.emplace_back(lookup(f0_index, {*compose(rho, arrow_path(beta)), arrow_path(beta)}), sign);
        b.f0.set_column(j, make_sparse(std::move(terms), field));
    }

    auto f1_index = index_pairs(b.f1_codomain);
    b.f1 = SparseMatrix(b.f1_codomain.size(), b.f1_domain.size());
    for (std::size_t j = 0; j < b.f1_domain.size(); ++j) {
        const auto& [rho, gamma] = b.f1_domain[j];
        std::vector<std::pair<std::size_t, Scalar>> terms;
        for (ArrowId beta : left_arrows(rho)) {
            if (bq.is_relation(beta, gamma.first())) continue;
            terms.emplace_back(
                lookup(f1_index, {*compose(arrow_path(beta), rho), *compose(arrow_path(beta), gamma)}), field.one());
        }
        for (ArrowId beta : right_arrows(rho)) {
            if (bq.is_relation(gamma.last(), beta)) continue;
            terms.emplace_back(lookup(f1_index, {*compose(rho, arrow_path(beta)), *compose(gamma, arrow_path(beta))}),
                               sign);
        }
        b.f1.set_column(j, make_sparse(std::move(terms), field));
    }
    return b;
}

}  // namespace

SparseMatrix assemble_blocks(const BlockComponents& blocks, const std::vector<ParallelPair>& domain,
                             const std::vector<ParallelPair>& codomain) {
    auto dom = index_pairs(domain);
    auto cod = index_pairs(codomain);
    std::vector<SparseVector> cols(domain.size());
    auto place = [&](const SparseMatrix& m, const std::vector<ParallelPair>& d, const std::vector<ParallelPair>& c) {
        for (std::size_t j = 0; j < d.size(); ++j) {
            SparseVector v;
            for (const auto& [r, x] : m.column(j).entries) v.entries.emplace_back(lookup(cod, c[r]), x);
            std::sort(v.entries.begin(), v.entries.end());
            cols[lookup(dom, d[j])] = std::move(v);
        }
    };
    place(blocks.f0, blocks.f0_domain, blocks.f0_codomain);
    place(blocks.f1, blocks.f1_domain, blocks.f1_codomain);
    SparseMatrix out(codomain.size(), domain.size());
    for (std::size_t j = 0; j < cols.size(); ++j) out.set_column(j, std::move(cols[j]));
    return out;
}

// ---------------------------------------------------------------------------

template <class T>
const T& CochainComplex::DegreeCache<T>::get(std::size_t n, const std::function<T()>& compute) const {
    Slot* slot;
    {
        std::lock_guard lock(mutex_);
        auto& s = slots_[n];
        if (!s) s = std::make_unique<Slot>();
        slot = s.get();
    }
    std::call_once(slot->once, [&] { slot->value = std::make_unique<T>(compute()); });
    return *slot->value;
}

namespace {
BoundQuiver checked(BoundQuiver bq) {
    require_string_algebra(bq);
    return bq;
}
}  // namespace

CochainComplex::CochainComplex(BoundQuiver bq, Field field)
    : bq_(checked(std::move(bq))), field_(field), paths_(enumerate_basis_paths(bq_)) {}

const CochainComplex::BasisData& CochainComplex::basis_data(std::size_t n) const {
    return bases_.get(n, [&] {
        BasisData d;
        d.pairs = all_pairs(bq_, paths_, n);
        d.index = index_pairs(d.pairs);
        return d;
    });
}

const std::vector<ParallelPair>& CochainComplex::basis(std::size_t n) const { return basis_data(n).pairs; }

std::optional<std::size_t> CochainComplex::index_of(const ParallelPair& p) const {
    const auto& idx = basis_data(p.degree()).index;
    auto it = idx.find(p);
    if (it == idx.end()) return std::nullopt;
    return it->second;
}

SparseMatrix CochainComplex::build_differential(std::size_t n) const {
    return differential_between(bq_, n - 1, basis(n - 1), basis(n), field_);
}

const SparseMatrix& CochainComplex::differential(std::size_t n) const {
    if (n == 0) throw std::invalid_argument("F_n is defined for n >= 1");
    return differentials_.get(n, [&] { return build_differential(n); });
}

DegreeData CochainComplex::build_degree(std::size_t n) const {
    DegreeData d;
    d.degree = n;
    d.basis = basis(n);
    d.differential_out = differential(n + 1);
    d.cocycles = kernel_basis(d.differential_out, field_);
    d.coboundaries = n == 0 ? SubspaceBasis(d.basis.size()) : column_space(differential(n), field_);
    d.hh_dim = d.cocycles.dim() - d.coboundaries.dim();
    return d;
}

const DegreeData& CochainComplex::degree(std::size_t n) const {
    return degrees_.get(n, [&] { return build_degree(n); });
}

SparseVector CochainComplex::to_vector(const Cochain& c) const {
    const auto& idx = basis_data(c.degree()).index;
    std::vector<std::pair<std::size_t, Scalar>> terms;
    for (const auto& [p, v] : c.terms()) {
        auto it = idx.find(p);
        if (it == idx.end()) throw std::invalid_argument("not a cochain basis pair: " + describe(bq_, p));
        terms.emplace_back(it->second, v);
    }
    return make_sparse(std::move(terms), field_);
}

Cochain CochainComplex::from_vector(std::size_t n, const SparseVector& v) const {
    const auto& pairs = basis(n);
    Cochain c(n);
    for (const auto& [i, x] : v.entries) c.add_term(pairs.at(i), x, field_);
    return c;
}

Cochain CochainComplex::apply_differential(const Cochain& c) const {
    const std::size_t m = c.degree();
    std::map<Path, std::vector<Value>> by_rho;
    for (const auto& [p, v] : c.terms()) {
        if (!index_of(p)) throw std::invalid_argument("not a cochain basis pair: " + describe(bq_, p));
        by_rho[p.rho].push_back({0, &p.gamma, v});
    }
    const std::vector<Value> none;
    Cochain out(m + 1);
    evaluate_differential(
        bq_, m, field_,
        [&](const Path& rho) -> const std::vector<Value>& {
            auto it = by_rho.find(rho);
            return it == by_rho.end() ? none : it->second;
        },
        [&](std::size_t, const Path& w, const Path& g, const Scalar& x) { out.add_term({w, g}, x, field_); });
    return out;
}

bool CochainComplex::is_coboundary(const Cochain& c) const {
    return coboundaries(c.degree()).contains(to_vector(c), field_);
}

Cochain CochainComplex::class_of(const Cochain& c) const {
    if (!is_cocycle(c)) throw NotCocycleError("cochain of degree " + std::to_string(c.degree()) + " is not a cocycle");
    return from_vector(c.degree(), coboundaries(c.degree()).reduce(to_vector(c), field_));
}

const SubspaceBasis& CochainComplex::cohomology_space(std::size_t n) const {
    return cohomology_.get(n, [&] {
        const auto& d = degree(n);
        std::vector<SparseVector> reduced;
        for (const auto& row : d.cocycles.rows()) reduced.push_back(d.coboundaries.reduce(row, field_));
        return row_space(reduced, d.basis.size(), field_);
    });
}

std::vector<Cochain> CochainComplex::cohomology_basis(std::size_t n) const {
    std::vector<Cochain> out;
    for (const auto& row : cohomology_space(n).rows()) out.push_back(from_vector(n, row));
    return out;
}

std::vector<Scalar> CochainComplex::class_coordinates(const Cochain& c) const {
    SparseVector v = to_vector(class_of(c));
    std::vector<Scalar> out;
    for (std::size_t p : cohomology_space(c.degree()).pivots()) out.push_back(v.at(p));
    return out;
}

BlockComponents CochainComplex::block_components(std::size_t n) const {
    return blocks_from_formulas(bq_, n, basis(n), basis(n + 1), field_);
}

// ---------------------------------------------------------------------------

SparseMatrix differential_matrix(const BoundQuiver& bq, std::size_t n, const Field& field) {
    if (n == 0) throw std::invalid_argument("F_n is defined for n >= 1");
    require_string_algebra(bq);
    auto P = enumerate_basis_paths(bq);
    return differential_between(bq, n - 1, all_pairs(bq, P, n - 1), all_pairs(bq, P, n), field);
}

BlockComponents block_components(const BoundQuiver& bq, std::size_t n, const Field& field) {
    require_string_algebra(bq);
    auto P = enumerate_basis_paths(bq);
    return blocks_from_formulas(bq, n, all_pairs(bq, P, n), all_pairs(bq, P, n + 1), field);
}

std::size_t hh_dim_oracle(const BoundQuiver& bq, std::size_t n, const Field& field) {
    return CochainComplex(bq, field).hh_dim(n);
}

SubspaceBasis cocycle_basis(const BoundQuiver& bq, std::size_t n, const Field& field) {
    return CochainComplex(bq, field).cocycles(n);
}

SubspaceBasis coboundary_basis(const BoundQuiver& bq, std::size_t n, const Field& field) {
    return CochainComplex(bq, field).coboundaries(n);
}

}  // namespace quiverhh

#include "quiverhh/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace quiverhh {

Scalar SparseVector::at(std::size_t index) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), index,
                               [](const auto& e, std::size_t i) { return e.first < i; });
    if (it != entries.end() && it->first == index) return it->second;
    return Scalar(0);
}

SparseVector make_sparse(std::vector<std::pair<std::size_t, Scalar>> terms, const Field& field) {
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector out;
    for (auto& [i, v] : terms) {
        if (!out.entries.empty() && out.entries.back().first == i) {
            out.entries.back().second = field.add(out.entries.back().second, field.canonical(v));
        } else {
            out.entries.emplace_back(i, field.canonical(v));
        }
    }
    std::erase_if(out.entries, [](const auto& e) { return e.second == 0; });
    return out;
}

SparseVector axpy(const SparseVector& a, const Scalar& c, const SparseVector& b, const Field& field) {
    SparseVector out;
    out.entries.reserve(a.entries.size() + b.entries.size());
    std::size_t i = 0, j = 0;
    while (i < a.entries.size() || j < b.entries.size()) {
        if (j == b.entries.size() || (i < a.entries.size() && a.entries[i].first < b.entries[j].first)) {
            out.entries.push_back(a.entries[i++]);
        } else if (i == a.entries.size() || b.entries[j].first < a.entries[i].first) {
            Scalar v = field.mul(c, b.entries[j].second);
            if (v != 0) out.entries.emplace_back(b.entries[j].first, std::move(v));
            ++j;
        } else {
            Scalar v = field.add(a.entries[i].second, field.mul(c, b.entries[j].second));
            if (v != 0) out.entries.emplace_back(a.entries[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVector scale(const SparseVector& v, const Scalar& c, const Field& field) {
    SparseVector out;
    if (c == 0) return out;
    for (const auto& [i, x] : v.entries) out.entries.emplace_back(i, field.mul(c, x));
    return out;
}

// ---------------------------------------------------------------------------

void SparseMatrix::set_column(std::size_t c, SparseVector v) {
    if (!v.entries.empty() && v.entries.back().first >= rows_)
        throw std::out_of_range("column entry exceeds row count");
    columns_.at(c) = std::move(v);
}

std::size_t SparseMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.nnz();
    return n;
}

std::vector<SparseVector> SparseMatrix::row_vectors() const {
    std::vector<SparseVector> rows(rows_);
    for (std::size_t c = 0; c < columns_.size(); ++c)
        for (const auto& [r, v] : columns_[c].entries) rows[r].entries.emplace_back(c, v);
    return rows;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols(), rows());
    auto rows = row_vectors();
    for (std::size_t r = 0; r < rows.size(); ++r) t.columns_[r] = std::move(rows[r]);
    return t;
}

SparseVector SparseMatrix::apply(const SparseVector& v, const Field& field) const {
    SparseVector out;
    for (const auto& [c, x] : v.entries) out = axpy(out, x, columns_.at(c), field);
    return out;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other, const Field& field) const {
    if (cols() != other.rows()) throw std::invalid_argument("matrix dimensions do not agree");
    SparseMatrix out(rows(), other.cols());
    for (std::size_t c = 0; c < other.cols(); ++c) out.columns_[c] = apply(other.column(c), field);
    return out;
}

bool SparseMatrix::is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
}

SparseMatrix select_columns(const SparseMatrix& m, std::span<const std::size_t> cols) {
    SparseMatrix out(m.rows(), cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) out.set_column(i, m.column(cols[i]));
    return out;
}

// ---------------------------------------------------------------------------

SubspaceBasis::SubspaceBasis(std::size_t ambient_dim, std::vector<SparseVector> rows,
                             std::vector<std::size_t> pivots)
    : ambient_(ambient_dim), rows_(std::move(rows)), pivots_(std::move(pivots)) {}

SparseVector SubspaceBasis::reduce(const SparseVector& v, const Field& field) const {
    SparseVector out = v;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        Scalar c = out.at(pivots_[k]);
        if (c != 0) out = axpy(out, field.neg(c), rows_[k], field);
    }
    return out;
}

bool SubspaceBasis::contains(const SubspaceBasis& other, const Field& field) const {
    return std::all_of(other.rows().begin(), other.rows().end(),
                       [&](const auto& r) { return contains(r, field); });
}

namespace {

/*
 * Echelon engines. Both keep rows keyed by their leading column and insert
 * one vector at a time; `finish` back-substitutes to RREF and converts to
 * field scalars.
 */
struct IntegerEngine {
    using Value = mpz_class;
    using Row = std::vector<std::pair<std::size_t, Value>>;

    static Row from_vector(const SparseVector& v) {
        mpz_class l = 1;
        for (const auto& e : v.entries) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.second.get_den_mpz_t());
        Row r;
        r.reserve(v.entries.size());
        for (const auto& [i, x] : v.entries) r.emplace_back(i, x.get_num() * (l / x.get_den()));
        return r;
    }

    static Value coeff(const Row& r, std::size_t col) {
        for (const auto& e : r)
            if (e.first == col) return e.second;
        return 0;
    }

    // r := lead(p) * r - r[col] * p, where p has its leading entry at `col`.
    static void eliminate(Row& r, const Row& p, std::size_t col) {
        Value b = coeff(r, col);
        if (b == 0) return;
        const Value& a = p.front().second;
        Row out;
        out.reserve(r.size() + p.size());
        std::size_t i = 0, j = 0;
        while (i < r.size() || j < p.size()) {
            if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
                out.emplace_back(r[i].first, a * r[i].second);
                ++i;
            } else if (i == r.size() || p[j].first < r[i].first) {
                out.emplace_back(p[j].first, -b * p[j].second);
                ++j;
            } else {
                Value v = a * r[i].second - b * p[j].second;
                if (v != 0) out.emplace_back(r[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        r = std::move(out);
        make_primitive(r);
    }

    static void make_primitive(Row& r) {
        if (r.empty()) return;
        mpz_class g = 0;
        for (const auto& e : r) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
            if (g == 1) return;
        }
        for (auto& e : r) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
    }

    static void normalize_new_row(Row& r) { make_primitive(r); }

    static SparseVector to_vector(const Row& r, const Field&) {
        SparseVector v;
        const Value& lead = r.front().second;
        for (const auto& [i, x] : r) v.entries.emplace_back(i, Scalar(x, lead));
        for (auto& e : v.entries) e.second.canonicalize();
        return v;
    }
};

struct ModularEngine {
    using Value = std::uint64_t;
    using Row = std::vector<std::pair<std::size_t, Value>>;

    std::uint64_t p;

    Row from_vector(const SparseVector& v) const {
        Row r;
        for (const auto& [i, x] : v.entries) r.emplace_back(i, x.get_num().get_ui());
        return r;
    }

    static Value coeff(const Row& r, std::size_t col) {
        for (const auto& e : r)
            if (e.first == col) return e.second;
        return 0;
    }

    std::uint64_t inverse(std::uint64_t a) const {
        std::uint64_t result = 1, base = a % p, e = p - 2;
        while (e) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return result;
    }

    // r := r - r[col] * p, where p has a leading 1 at `col`.
    void eliminate(Row& r, const Row& q, std::size_t col) const {
        Value b = coeff(r, col);
        if (b == 0) return;
        Value nb = p - b;
        Row out;
        out.reserve(r.size() + q.size());
        std::size_t i = 0, j = 0;
        while (i < r.size() || j < q.size()) {
            if (j == q.size() || (i < r.size() && r[i].first < q[j].first)) {
                out.push_back(r[i++]);
            } else if (i == r.size() || q[j].first < r[i].first) {
                out.emplace_back(q[j].first, nb * q[j].second % p);
                ++j;
            } else {
                Value v = (r[i].second + nb * q[j].second) % p;
                if (v != 0) out.emplace_back(r[i].first, v);
                ++i;
                ++j;
            }
        }
        r = std::move(out);
    }

    void normalize_new_row(Row& r) const {
        Value inv = inverse(r.front().second);
        for (auto& e : r) e.second = e.second * inv % p;
    }

    static SparseVector to_vector(const Row& r, const Field&) {
        SparseVector v;
        for (const auto& [i, x] : r) v.entries.emplace_back(i, Scalar(static_cast<unsigned long>(x)));
        return v;
    }
};

template <class Engine>
SubspaceBasis run_echelon(Engine& engine, std::span<const SparseVector> vectors, std::size_t dim,
                          const Field& field) {
    using Row = typename Engine::Row;
    std::map<std::size_t, Row> pivots;
    for (const auto& vec : vectors) {
        if (!vec.empty() && vec.entries.back().first >= dim)
            throw std::out_of_range("vector entry exceeds ambient dimension");
        Row r = engine.from_vector(vec);
        while (!r.empty()) {
            auto it = pivots.find(r.front().first);
            if (it == pivots.end()) break;
            engine.eliminate(r, it->second, it->first);
        }
        if (r.empty()) continue;
        engine.normalize_new_row(r);
        std::size_t col = r.front().first;
        pivots.emplace(col, std::move(r));
    }
    // Back substitution, largest pivot first: each pivot row is already free of larger pivots.
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        for (auto& [col, row] : pivots) {
            if (col >= it->first) break;
            engine.eliminate(row, it->second, it->first);
        }
    }
    std::vector<SparseVector> rows;
    std::vector<std::size_t> cols;
    for (const auto& [col, row] : pivots) {
        cols.push_back(col);
        rows.push_back(Engine::to_vector(row, field));
    }
    return SubspaceBasis(dim, std::move(rows), std::move(cols));
}

}  // namespace

SubspaceBasis row_space(std::span<const SparseVector> vectors, std::size_t dim, const Field& field) {
    if (field.is_rational()) {
        IntegerEngine engine;
        return run_echelon(engine, vectors, dim, field);
    }
    ModularEngine engine{field.characteristic()};
    return run_echelon(engine, vectors, dim, field);
}

SubspaceBasis column_space(const SparseMatrix& m, const Field& field) {
    std::vector<SparseVector> cols;
    cols.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
    return row_space(cols, m.rows(), field);
}

std::size_t rank(const SparseMatrix& m, const Field& field) {
    // Row and column rank agree; eliminate whichever side has fewer vectors.
    if (m.cols() <= m.rows()) return column_space(m, field).dim();
    auto rows = m.row_vectors();
    return row_space(rows, m.cols(), field).dim();
}

SubspaceBasis kernel_basis(const SparseMatrix& m, const Field& field) {
    auto rows = m.row_vectors();
    SubspaceBasis rref = row_space(rows, m.cols(), field);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : rref.pivots()) is_pivot[p] = true;
    std::vector<SparseVector> kernel;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<std::pair<std::size_t, Scalar>> terms{{f, field.one()}};
        for (std::size_t k = 0; k < rref.dim(); ++k) {
            Scalar c = rref.rows()[k].at(f);
            if (c != 0) terms.emplace_back(rref.pivots()[k], field.neg(c));
        }
        kernel.push_back(make_sparse(std::move(terms), field));
    }
    return row_space(kernel, m.cols(), field);
}

}  // namespace quiverhh

#ifndef QUIVERHH_COCHAIN_HPP
#define QUIVERHH_COCHAIN_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "quiverhh/field.hpp"
#include "quiverhh/linalg.hpp"
#include "quiverhh/paths.hpp"
#include "quiverhh/quiver.hpp"

namespace quiverhh {

/// Thrown when a class-level operation receives a cochain that is not a cocycle.
class NotCocycleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/*
 * Element of Hom_{E-E}(kAP_n, A) written in the parallel-pair basis: the pair
 * (rho, gamma) is the map sending rho to gamma and every other element of AP_n
 * to zero. Coefficients are canonical field scalars; zeros are never stored.
 */
class Cochain {
public:
    explicit Cochain(std::size_t degree = 0) : degree_(degree) {}
    static Cochain basis(const ParallelPair& p) {
        Cochain c(p.degree());
        c.terms_.emplace(p, Scalar(1));
        return c;
    }

    std::size_t degree() const { return degree_; }
    const std::map<ParallelPair, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const ParallelPair& p) const;

    void add_term(const ParallelPair& p, const Scalar& c, const Field& field);
    Cochain plus(const Cochain& other, const Field& field) const;
    Cochain minus(const Cochain& other, const Field& field) const;
    Cochain scaled(const Scalar& c, const Field& field) const;

    bool operator==(const Cochain&) const = default;

private:
    std::size_t degree_;
    std::map<ParallelPair, Scalar> terms_;
};

std::string describe(const BoundQuiver& bq, const Cochain& c);

/// Sum of basis pairs with coefficient one.
Cochain sum_of(std::size_t degree, const std::vector<ParallelPair>& pairs, const Field& field);

/*
 * The four blocks of F_{n+1} relative to the splittings
 * (AP_n//P) = (AP_n//Q0) + (AP_n//P_1) and
 * (AP_{n+1}//P) = (AP_{n+1}//Q0) + (AP_{n+1}//Q1) + (AP_{n+1}//P_2),
 * of which only F0: Q0-part -> Q1-part and F1: P_1-part -> P_2-part are nonzero.
 */
struct BlockComponents {
    std::vector<ParallelPair> f0_domain, f0_codomain;
    std::vector<ParallelPair> f1_domain, f1_codomain;
    SparseMatrix f0;
    SparseMatrix f1;
};

struct DegreeData {
    std::size_t degree = 0;
    std::vector<ParallelPair> basis;
    SparseMatrix differential_out;  // F_{n+1}
    SubspaceBasis cocycles;         // Ker F_{n+1}
    SubspaceBasis coboundaries;     // Im F_n
    std::size_t hh_dim = 0;
};

/*
 * The Hochschild cochain complex of kQ/I in the parallel-pair basis, built
 * lazily degree by degree. Each degree is computed at most once and may be
 * requested concurrently from several threads.
 */
class CochainComplex {
public:
    /// Throws HypothesisError unless the quiver presents a connected finite-dimensional string algebra.
    CochainComplex(BoundQuiver bq, Field field);
    CochainComplex(const CochainComplex&) = delete;
    CochainComplex& operator=(const CochainComplex&) = delete;

    const BoundQuiver& quiver() const { return bq_; }
    const Field& field() const { return field_; }
    const BasisPathSet& basis_paths() const { return paths_; }

    const std::vector<ParallelPair>& basis(std::size_t n) const;
    std::optional<std::size_t> index_of(const ParallelPair& p) const;

    /// F_n : C^{n-1} -> C^n, n >= 1.
    const SparseMatrix& differential(std::size_t n) const;
    const DegreeData& degree(std::size_t n) const;
    const SubspaceBasis& cocycles(std::size_t n) const { return degree(n).cocycles; }
    const SubspaceBasis& coboundaries(std::size_t n) const { return degree(n).coboundaries; }
    std::size_t hh_dim(std::size_t n) const { return degree(n).hh_dim; }

    SparseVector to_vector(const Cochain& c) const;
    Cochain from_vector(std::size_t n, const SparseVector& v) const;

    /// F_{n+1}(c), evaluated directly on the cochain.
    Cochain apply_differential(const Cochain& c) const;
    bool is_cocycle(const Cochain& c) const { return apply_differential(c).is_zero(); }
    bool is_coboundary(const Cochain& c) const;

    /// Canonical representative of the class of a cocycle; throws NotCocycleError otherwise.
    Cochain class_of(const Cochain& c) const;
    bool is_zero_class(const Cochain& c) const { return class_of(c).is_zero(); }

    /// Canonical representatives spanning HH^n: reduced cocycles in RREF.
    std::vector<Cochain> cohomology_basis(std::size_t n) const;
    /// Coordinates of the class of a cocycle in `cohomology_basis(n)`.
    std::vector<Scalar> class_coordinates(const Cochain& c) const;

    BlockComponents block_components(std::size_t n) const;

private:
    template <class T>
    class DegreeCache {
    public:
        const T& get(std::size_t n, const std::function<T()>& compute) const;

    private:
        struct Slot {
            std::once_flag once;
            std::unique_ptr<T> value;
        };
        mutable std::mutex mutex_;
        mutable std::map<std::size_t, std::unique_ptr<Slot>> slots_;
    };

    struct BasisData {
        std::vector<ParallelPair> pairs;
        std::map<ParallelPair, std::size_t> index;
    };

    const BasisData& basis_data(std::size_t n) const;
    SparseMatrix build_differential(std::size_t n) const;
    DegreeData build_degree(std::size_t n) const;
    const SubspaceBasis& cohomology_space(std::size_t n) const;

    BoundQuiver bq_;
    Field field_;
    BasisPathSet paths_;
    DegreeCache<BasisData> bases_;
    DegreeCache<SparseMatrix> differentials_;
    DegreeCache<DegreeData> degrees_;
    DegreeCache<SubspaceBasis> cohomology_;
};

/// F_n from (AP_{n-1}//P) to (AP_n//P), n >= 1, by evaluating the differential on each basis pair.
SparseMatrix differential_matrix(const BoundQuiver& bq, std::size_t n, const Field& field);
/// The F0/F1 blocks of F_{n+1}, built from the block sum formulas.
BlockComponents block_components(const BoundQuiver& bq, std::size_t n, const Field& field);
/// dim Ker F_{n+1} - rank F_n.
std::size_t hh_dim_oracle(const BoundQuiver& bq, std::size_t n, const Field& field);
SubspaceBasis cocycle_basis(const BoundQuiver& bq, std::size_t n, const Field& field);
SubspaceBasis coboundary_basis(const BoundQuiver& bq, std::size_t n, const Field& field);

/// Reassembles F_{n+1} from its blocks in the full (AP_n//P) -> (AP_{n+1}//P) bases.
SparseMatrix assemble_blocks(const BlockComponents& blocks, const std::vector<ParallelPair>& domain,
                             const std::vector<ParallelPair>& codomain);

}  // namespace quiverhh

#endif

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "setdirect/central.hpp"
#include "setdirect/group.hpp"

namespace setdirect {

/// The four equivalent directness criteria for a product XY.
struct DirectnessReport {
    bool multiplicities = false;       ///< every element of XY has one representation
    bool difference_sets = false;      ///< XX^-1 n YY^-1 = {1}
    bool translates_partition = false; ///< the translates xY (or Xy) are pairwise disjoint
    bool cardinality = false;          ///< |XY| = |X||Y|
    Subset product;

    bool direct() const noexcept { return multiplicities; }
    bool agree() const noexcept {
        return multiplicities == difference_sets && multiplicities == translates_partition &&
               multiplicities == cardinality;
    }
};

/// Evaluates the criteria without any precondition or cross-check. Useful
/// for arbitrary subsets, e.g. inside an abelian Z or for non-normal sets.
DirectnessReport evaluate_directness(const GroupTable& g, const Subset& x, const Subset& y);

/// Normal, nonempty X and Y only; asserts that the criteria agree.
/// Throws NotNormal, EmptySet, InternalInconsistency.
DirectnessReport is_direct(const GroupTable& g, const Subset& x, const Subset& y);

struct SetDirectFactorization {
    Subset x;
    Subset y;
    /// X and Y are normal, XY is direct and XY = G.
    bool certified = false;
};

/// Checks G = X x Y from first principles.
SetDirectFactorization certify(const GroupTable& g, const Subset& x, const Subset& y);

/// The trace (r^-1 S) n Z of a normal set S on the coset rZ, for a class representative r.
struct Slice {
    Element rep;
    Subset values;
};

struct MainTheoremReport {
    Subset m;
    Subset n;
    Subset z;
    bool product_is_g = false;
    bool condition_a = false;
    std::optional<CentralProductFailure> a_failure;
    /// One slice per class of G inside M (resp. N): slices only depend on the class.
    std::vector<Slice> x_slices;
    std::vector<Slice> y_slices;
    bool condition_b = false;
    /// First (m, n) with Z != X_m x Y_n, if any.
    std::optional<std::pair<Element, Element>> witness;
    std::string b_failure;
    std::size_t slice_pairs_checked = 0;
    bool verdict = false;
};

/// Evaluates both conditions of the central-product characterisation and
/// asserts the verdict matches the direct check G = X x Y.
/// Throws NotNormal, EmptySet.
MainTheoremReport verify_main_theorem(const GroupTable& g, const Subset& x, const Subset& y);

/// {h : hS = S} inside an abelian group. Throws NotAbelian, EmptySet.
Subset kernel(const GroupTable& z, const Subset& s);

/// Families (M_i), (N_j) of subgroups and (A_i), (B_j) of subsets of an
/// abelian group Z, which lives in `z.group` with its embedding into G.
/// All subsets use the local indices of `z.group`.
struct FactorizationSystem {
    EmbeddedGroup z;
    std::vector<Subset> m;
    std::vector<Subset> n;
    std::vector<Subset> a;
    std::vector<Subset> b;
};

struct SystemReport {
    bool products_direct = false;  ///< Z = A_i x B_j for all i, j
    bool kernels_contain = false;  ///< M_i <= K(A_i), N_j <= K(B_j)
    bool sizes_consistent = false; ///< |Z| = |A_i||B_j|
    bool lcm_divides = false;
    bool coset_separation = false;
    bool trivial_intersections = false;  ///< M_i n N_j = {1}
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
    std::string failure;

    bool valid() const noexcept { return products_direct && kernels_contain; }
};

/// Checks the defining conditions for every (i, j) and, for valid systems,
/// the derived arithmetic and separation properties (a failure there is an
/// InternalInconsistency). Throws NotAbelian, IndexMismatch.
SystemReport check_factorization_system(const FactorizationSystem& sys);

/// Class choices C_i, D_j as class indices of G. Empty vectors select the
/// smallest class index of each orbit.
struct ClassChoices {
    std::vector<std::size_t> c;
    std::vector<std::size_t> d;
};

/// Choices that pick the identity class in the orbit Z, and the smallest
/// class elsewhere.
ClassChoices identity_choices(const GroupTable& g, const CentralDecomposition& cp);

/// The system shape a central product prescribes: Z as its own group and the
/// orbit stabilizers M_i, N_j, with A and B left empty.
FactorizationSystem system_skeleton(const GroupTable& g, const CentralDecomposition& cp);

/// X = U A_i C_i, Y = U B_j D_j, certified. Throws SystemMismatch,
/// InvalidChoice, InternalInconsistency (if certification fails).
SetDirectFactorization construct_from_system(const GroupTable& g, const CentralDecomposition& cp,
                                             const FactorizationSystem& sys, const ClassChoices& choices = {});

struct TransversalResult {
    std::optional<SetDirectFactorization> factorization;
    /// Orbit of Z on the classes in N with a nontrivial stabilizer.
    std::optional<std::vector<std::size_t>> violating_orbit;
    Subset violating_stabilizer;
    ClassCountReport n_counts;  ///< k(N), k(Z), k(N/Z) computed inside N
};

/// X = M and Y one class per Z-orbit in N, when Z acts semi-regularly on the
/// classes in N.
TransversalResult transversal_factorization(const GroupTable& g, const CentralDecomposition& cp);

struct CyclicResult {
    std::optional<SetDirectFactorization> factorization;
    Subset commutator_intersection;  ///< [M,M] n [N,N]
};

/// Z cyclic and Z = X0 x Y0. Returns absence when [M,M] n [N,N] != {1}.
/// Throws NotCyclic, NotADirectFactorizationOfZ, ContainmentViolated,
/// HypothesisViolated.
CyclicResult cyclic_center_factorization(const GroupTable& g, const CentralDecomposition& cp, const Subset& x0,
                                         const Subset& y0);

/// For a semi-regular central z of order p^k, k >= 2: G = X x Y with
/// X n <z> = <z^p> and Y = {1, z, ..., z^(p-1)}.
/// Throws NotCentral, NotSemiRegular, OrderNotPrimePowerAtLeastSquare.
SetDirectFactorization prime_power_factorization(const GroupTable& g, Element z);

/// (z^-1 X, z Y) for the unique central z with z in X and z^-1 in Y.
/// Throws NotCertified.
SetDirectFactorization normalize(const GroupTable& g, const SetDirectFactorization& f);

struct InducedDecompositions {
    SetDirectFactorization m_side;  ///< M = X x (Y n Z)
    SetDirectFactorization n_side;  ///< N = Y x (X n Z)
};

/// Throws NotCertified, ContainmentViolated.
InducedDecompositions induced_decompositions(const GroupTable& g, const SetDirectFactorization& f,
                                             const CentralDecomposition& cp);

}  // namespace setdirect

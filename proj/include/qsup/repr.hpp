#pragma once

// The vector representation V of the quantum supergroup, tensor powers via
// the parity-twisted coproduct, an evaluation homomorphism into exact sparse
// matrices, and dimension-certified echelon bases of the graded pieces of
// U^+/U^-. The echelon bases back the equality oracle is_zero: an element
// vanishes iff all its triangular tensor coordinates vanish, and every basis
// carries a rank certificate (rank == the graded dimension by root-multiset
// counting), so faithfulness of the modules is never assumed.

#include "qsup/rootdata.hpp"
#include "qsup/superalgebra.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace qsup {

// ---------------------------------------------------------------------------
// Sparse exact matrix (row-major).
// ---------------------------------------------------------------------------
struct SparseMat {
    int rows = 0, cols = 0;
    std::vector<std::map<int, Scalar>> r;

    SparseMat() = default;
    SparseMat(int n_rows, int n_cols) : rows(n_rows), cols(n_cols), r(n_rows) {}
    static SparseMat identity(int n);

    void set(int i, int j, const Scalar& s);
    void add(int i, int j, const Scalar& s);
    Scalar get(int i, int j) const;

    SparseMat operator*(const SparseMat& o) const;
    SparseMat operator+(const SparseMat& o) const;
    SparseMat operator-(const SparseMat& o) const;
    SparseMat scaled(const Scalar& c) const;
    bool is_zero() const;
    bool operator==(const SparseMat& o) const;
    bool operator!=(const SparseMat& o) const { return !(*this == o); }
};

// Kronecker product with plain (untwisted) index bookkeeping.
SparseMat kron(const SparseMat& a, const SparseMat& b);

// ---------------------------------------------------------------------------
// Representations.
// ---------------------------------------------------------------------------
struct Rep {
    Diagram diagram;
    int dim = 0;
    std::vector<SparseMat> E, F, K, Kinv;  // one per node
    SparseMat rho;
    std::vector<Weight> basis_weights;  // epsilon-weight of each basis vector
    std::vector<int> basis_parities;
};

// The natural module: E_i, F_i matrix units up to derived sign factors, K_i
// diagonal, rho the parity involution. Throws if no sign assignment passes
// the relation check on V and V tensor V (would indicate a bug).
const Rep& vector_rep(const Diagram& D);

// Tensor product through the twisted coproduct
//   E_i -> E_i ox 1 + rho K_i ox E_i,   F_i -> rho ox F_i + F_i ox K_i^{-1},
//   K_i -> K_i ox K_i,                  rho -> rho ox rho.
Rep tensor(const Rep& r1, const Rep& r2);

// Cached k-th tensor power of the natural module (k >= 1).
const Rep& tensor_power(const Diagram& D, int k);

// Checks every defining relation as a matrix identity; throws on failure.
void verify_relations(const Rep& rep);

// Multiplicative, unital evaluation of a normal-form element.
SparseMat evaluate(const AlgElem& x, const Rep& rep);

// ---------------------------------------------------------------------------
// Certified echelon bases of graded pieces.
// ---------------------------------------------------------------------------
struct EchelonBasis {
    Diagram diagram;
    Weight mu;  // in the positive cone; sign selects the E- or F-side
    int sign = +1;
    int k_used = 0;                       // certifying tensor power
    std::vector<std::vector<int>> words;  // selected basis words (node indices)
    // Reduced-row-echelon data over flattened matrix coordinates, plus the
    // change of basis expressing each reduced row in the selected words.
    std::vector<std::map<int, Scalar>> rref_rows;
    std::vector<int> pivots;
    std::vector<std::vector<Scalar>> transform;

    // Exact coordinates of an arbitrary word of weight mu in this basis.
    std::vector<Scalar> coords(const std::vector<int>& word) const;
};

// Computes (or loads from cache and re-certifies) the echelon basis at mu.
// Raises the tensor power until the evaluated-word rank matches the graded
// dimension; throws "oracle exhausted" if k_max is not enough.
const EchelonBasis& echelon_basis(const Diagram& D, const Weight& mu, int sign, int k_max = 4);

// All words of weight mu (permutations of the node multiset given by the
// simple-root coordinates of mu).
std::vector<std::vector<int>> weight_words(const Weight& mu);

// Directory for persistent echelon caches ("" disables persistence; the
// in-memory cache is always on). Loaded entries are re-certified.
void set_echelon_cache_dir(const std::string& dir);

// Drops the in-memory echelon cache (test hook for exercising disk reloads).
void clear_echelon_memory_cache();

// Exact equality-with-zero oracle via triangular tensor coordinates.
bool is_zero(const AlgElem& x, int k_max = 4);

}  // namespace qsup

#pragma once

// The quantum supergroup attached to a gl(m|n) Dynkin diagram, presented by
// generators E_i, F_i, K_i^{+-1} and the parity involution generator rho.
// Elements are kept in a triangular monomial normal form
//
//     F-word . rho^{0/1} . K-monomial . E-word
//
// reached by straightening with the orientable relations only (EF
// commutation with its Cartan term, K- and rho-commutations, vanishing odd
// squares). Serre relations are deliberately NOT applied as rewrite rules;
// mathematical equality modulo them is decided by the representation layer.

#include "qsup/rootdata.hpp"
#include "qsup/satake.hpp"
#include "qsup/scalars.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace qsup {

struct Monomial {
    std::vector<int> fword;  // internal node indices, as written
    int rho = 0;             // 0 or 1
    std::vector<int> kvec;   // K-exponent per node
    std::vector<int> eword;

    bool is_unit() const { return fword.empty() && rho == 0 && eword.empty() &&
                                  std::all_of(kvec.begin(), kvec.end(), [](int e) { return e == 0; }); }
    auto tie() const { return std::tie(fword, rho, kvec, eword); }
    bool operator<(const Monomial& o) const { return tie() < o.tie(); }
    bool operator==(const Monomial& o) const { return tie() == o.tie(); }
};

class AlgElem {
  public:
    AlgElem() = default;
    explicit AlgElem(Diagram D) : diagram_(std::move(D)) {}

    static AlgElem unit(const Diagram& D);
    static AlgElem scalar(const Diagram& D, const Scalar& c);
    static AlgElem gen_E(const Diagram& D, int i);
    static AlgElem gen_F(const Diagram& D, int i);
    static AlgElem gen_K(const Diagram& D, int i, int exp = 1);
    static AlgElem gen_Kmono(const Diagram& D, const std::vector<int>& kvec);
    static AlgElem gen_rho(const Diagram& D);

    const Diagram& diagram() const { return diagram_; }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    bool syntactic_zero() const { return terms_.empty(); }
    void add_term(const Monomial& m, const Scalar& c);

    AlgElem operator+(const AlgElem& o) const;
    AlgElem operator-(const AlgElem& o) const;
    AlgElem operator-() const;
    AlgElem operator*(const AlgElem& o) const;
    AlgElem scaled(const Scalar& c) const;
    AlgElem power(int k) const;  // k >= 0

    // Syntactic comparison of normal forms (not equality modulo Serre).
    bool operator==(const AlgElem& o) const {
        return diagram_ == o.diagram_ && terms_ == o.terms_;
    }
    bool operator!=(const AlgElem& o) const { return !(*this == o); }

    std::string to_text() const;
    std::string to_json() const;

  private:
    Diagram diagram_;
    std::map<Monomial, Scalar> terms_;
};

AlgElem elem_from_text(const Diagram& D, const std::string& text);
AlgElem elem_from_json(const std::string& text);

// Weight (epsilon coordinates) and parity of a monomial.
Weight monomial_weight(const Diagram& D, const Monomial& m);
int monomial_parity(const Diagram& D, const Monomial& m);

// Graded decomposition; the summands rebuild the input.
struct GradedComponent {
    Weight weight;
    int parity;
    AlgElem component;
};
std::vector<GradedComponent> weight_parity(const AlgElem& x);
// The single component of weight mu (zero element if absent).
AlgElem weight_component(const AlgElem& x, const Weight& mu);

enum class SerrePattern { Even, Super };

// Quantum Serre relation elements (E- and F-versions) for every admissible
// adjacency pattern in the diagram; each must vanish in any representation.
std::vector<AlgElem> serre_residual(const Diagram& D, SerrePattern pattern);

// Anti-linear algebra involution: fixes E_i, F_i, rho; swaps K_i <-> K_i^{-1};
// bar-involutes coefficients.
AlgElem apply_psi(const AlgElem& x);

// Anti-involution (plain product reversal, no super signs): fixes E_i, F_i,
// rho; sends K_i to (-1)^{|i|} K_i^{-1}.
AlgElem apply_sigma(const AlgElem& x);

// Graded anti-involution (product reversal with Koszul signs): fixes E_i,
// F_i, rho; sends K_i to K_i^{-1}.
AlgElem apply_sigma_graded(const AlgElem& x);

// Diagram involution i -> tau(i) with E_i -> (-1)^{|i|} E_{tau i},
// F_i -> F_{tau i}, K_i -> K_{tau i}; requires a tau-symmetric diagram with
// no isotropic node fixed by the flip.  The sign on E compensates the
// antisymmetry d_{tau i} = -d_i of the isotropic symmetrizer entries, making
// this a genuine algebra automorphism.
AlgElem apply_tau(const AlgElem& x, const SatakeDiagram& I);

// Rescaling automorphism: E_i -> a_i^{1/2} E_i, F_i -> a_i^{-1/2} F_i, K_i
// fixed; each a_i must admit a square root in the scalar field.
AlgElem apply_rescale(const AlgElem& x, const std::vector<Scalar>& a);

}  // namespace qsup

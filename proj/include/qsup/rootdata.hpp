#pragma once

// Root data for the general linear Lie superalgebra gl(m|n): Dynkin diagrams
// (parity sequences), the epsilon-weight lattice with its supertrace form,
// Cartan data (c_ij, d_i), and simple reflections acting on diagrams and
// weights.
//
// Conventions:
//  * A diagram stores the parity of each epsilon-basis vector (m zeros and n
//    ones) plus a global form sign; the bilinear form is
//        (eps_a, eps_b) = form_sign * (-1)^{parities[a]} * delta_ab.
//    form_sign = -1 is only used for the global-negation twin that arises
//    when m = n.
//  * Nodes are indexed internally 0 .. m+n-2; node k carries the simple root
//    alpha_k = eps_k - eps_{k+1}. Externally nodes are displayed with the
//    symmetric labels k - (m+n-2)/2, which are integers when m+n is even and
//    half-integers otherwise.
//  * A node is odd (isotropic) exactly when the two adjacent parities differ.

#include <string>
#include <vector>

namespace qsup {

using Weight = std::vector<int>;  // coordinates in the epsilon basis

struct Diagram {
    std::vector<int> parities;  // length m+n, entries in {0,1}
    int form_sign = +1;

    int dim() const { return static_cast<int>(parities.size()); }  // m+n
    int nodes() const { return dim() - 1; }
    int num_even_basis() const;  // m
    int num_odd_basis() const;   // n

    bool node_is_odd(int i) const { return parities[i] != parities[i + 1]; }
    int node_parity(int i) const { return node_is_odd(i) ? 1 : 0; }

    bool operator==(const Diagram& o) const {
        return parities == o.parities && form_sign == o.form_sign;
    }
    bool operator!=(const Diagram& o) const { return !(*this == o); }
    bool operator<(const Diagram& o) const {
        if (form_sign != o.form_sign)
            return form_sign < o.form_sign;
        return parities < o.parities;
    }
};

struct CartanData {
    std::vector<std::vector<int>> c;  // Cartan matrix entries c_ij
    std::vector<int> d;               // symmetrizers d_i
    std::vector<int> node_parities;   // 0 even, 1 odd
};

// alpha_i as an epsilon-coordinate vector (node i internal, 0-based).
Weight simple_root(const Diagram& D, int i);

// Supertrace bilinear form on epsilon-coordinates.
int bform(const Diagram& D, const Weight& lam, const Weight& mu);

// Cartan data under the pinned convention: for even i, d_i = (a_i,a_i)/2 and
// c_ij = (a_i,a_j)/d_i; for odd i, c_{i,i-1} = -1 when a left neighbor
// exists (otherwise c_{i,i+1} = +1) and d_i follows from d_i c_ij = (a_i,a_j).
CartanData cartan(const Diagram& D);

// The diagram obtained by the simple reflection at node i: an odd node swaps
// the two adjacent parities, an even node fixes the diagram.
Diagram reflect_diagram(const Diagram& D, int i);

// The reflection s_i on the epsilon lattice is the adjacent transposition of
// positions (i, i+1); this returns that permutation of 0..dim-1.
std::vector<int> weight_transposition(int i, int dim);

Weight apply_permutation(const std::vector<int>& perm, const Weight& w);

// Weight helpers.
Weight weight_zero(int dim);
Weight weight_add(const Weight& a, const Weight& b);
Weight weight_sub(const Weight& a, const Weight& b);
Weight weight_neg(const Weight& a);
Weight weight_scale(int k, const Weight& a);
bool weight_is_zero(const Weight& a);

// Parity of a weight in the root lattice (sum of coords times parities mod 2).
int weight_parity(const Diagram& D, const Weight& w);

// Expansion of a root-lattice weight in simple roots: coefficient of alpha_k
// is the k-th partial sum of the epsilon coordinates. Throws if the
// coordinates do not sum to zero.
std::vector<int> simple_root_coords(const Weight& w);
// Sum of the simple-root coefficients (for weights in ZPi).
int height(const Weight& w);
// True if all simple-root coefficients are >= 0.
bool in_positive_cone(const Weight& w);

// Dimension of the weight-mu component of the positive (or negative) half of
// the quantized enveloping algebra: the number of multisets of positive roots
// eps_a - eps_b (a < b) summing to mu, where isotropic roots (parities of a
// and b differ) appear at most once.
long kostant_dim(const Diagram& D, const Weight& mu);

// All diagrams for gl(m|n); both form signs are included when m = n.
std::vector<Diagram> enumerate_diagrams(int m, int n);

// Display label of node i (e.g. "-1", "0", "3/2") and of an epsilon position.
std::string node_label(const Diagram& D, int i);
std::string position_label(const Diagram& D, int a);
// Internal node index for a display label given as twice the label value
// (so label -3/2 is passed as -3). Returns -1 if out of range.
int node_from_double_label(const Diagram& D, int twice_label);

// JSON round-trip: {"parities":[...], "form_sign":1}.
std::string diagram_to_json(const Diagram& D);
Diagram diagram_from_json(const std::string& text);

// One-line picture of the diagram, e.g. "(-2)o--(-1)x--(0)o" with x for odd
// nodes, o for even ones and * for nodes in the optional black subset.
std::string pretty_diagram(const Diagram& D, const std::vector<int>& black_nodes = {});

}  // namespace qsup

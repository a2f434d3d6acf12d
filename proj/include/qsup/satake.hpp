#pragma once

// Super Satake diagrams of type sAIII for gl(m|n): a centered block of 2a-1
// black (even) nodes, r pairs of white nodes swapped by the involution
// tau: i -> -i, with m+n = 2a+2r. Admissibility reduces, for this shape, to
// the epsilon-parity sequence being palindromic with a constant middle block
// of 2a parities (for a = 0 palindromicity already forces the tau-fixed
// middle node to be even, which is exactly the lone-isotropic exclusion).

#include "qsup/rootdata.hpp"

#include <vector>

namespace qsup {

struct SatakeDiagram {
    Diagram diagram;
    int a = 0;
    int r = 1;

    int nodes() const { return diagram.nodes(); }
    // Internal index of the node with display label L (labels are integers
    // here because m+n is even).
    int node_of_label(int L) const { return L + a + r - 1; }
    int label_of_node(int k) const { return k - (a + r - 1); }

    // tau: label i -> -i, i.e. internal k -> nodes-1-k.
    int tau(int k) const { return nodes() - 1 - k; }

    bool is_black(int k) const {
        int L = label_of_node(k);
        return L > -a && L < a;
    }
    bool is_white(int k) const { return !is_black(k); }

    std::vector<int> black_nodes() const;  // internal indices, ascending
    std::vector<int> white_nodes() const;

    bool operator==(const SatakeDiagram& o) const {
        return diagram == o.diagram && a == o.a && r == o.r;
    }
    bool operator<(const SatakeDiagram& o) const {
        if (a != o.a)
            return a < o.a;
        return diagram < o.diagram;
    }
};

// Admissibility of a parity sequence for the sAIII shape with given a.
bool satake_admissible(const Diagram& D, int a);

// All admissible diagrams for gl(m|n) with 2a-1 black nodes; both form signs
// when m = n. Requires m+n even and r = (m+n)/2 - a >= 1.
std::vector<SatakeDiagram> enumerate_satake(int m, int n, int a);

// Number of odd parities among the trailing-r epsilon positions (the
// subsequence that classifies the relative-Weyl-groupoid orbits).
int pari(const SatakeDiagram& I);

// tau acting on the weight lattice (alpha_i -> alpha_{-i}): negated
// coordinate reversal.
Weight tau_weight(const SatakeDiagram& I, const Weight& mu);

// The longest element of the black Weyl group as a permutation of epsilon
// positions: reversal of the middle 2a block.
std::vector<int> wbullet_perm(const SatakeDiagram& I);
Weight wbullet_weight(const SatakeDiagram& I, const Weight& mu);

}  // namespace qsup

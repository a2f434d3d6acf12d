#pragma once

// The Coxeter groupoid W attached to the gl(m|n) diagram family (simple
// reflections move between Dynkin diagrams; odd reflections change the parity
// sequence) and the relative Coxeter groupoid W-circ of type sAIII sitting
// inside it.
//
// Elements are canonically represented by (source diagram, position
// permutation); words are witnesses. The product convention is the
// function-composition one: in w1 * w2 the right factor acts first, and the
// product is zero unless source(w1) = target(w2). Words store their letters
// in application order (letters[0] acts first).

#include "qsup/rootdata.hpp"
#include "qsup/satake.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qsup {

struct GroupoidWord {
    bool zero = false;
    Diagram source;
    Diagram target;
    std::vector<int> letters;  // internal node indices, application order
    std::vector<int> perm;     // perm[a] = image position of a

    bool operator==(const GroupoidWord& o) const {
        if (zero || o.zero)
            return zero == o.zero;
        return source == o.source && perm == o.perm;
    }
    bool operator!=(const GroupoidWord& o) const { return !(*this == o); }
};

GroupoidWord zero_word();
GroupoidWord identity_word(const Diagram& D);
// The generator s_{i,D}: source D, target reflect_diagram(D, i).
GroupoidWord generator_word(const Diagram& D, int i);
// Right-to-left composition; zero when sources/targets mismatch.
GroupoidWord compose(const GroupoidWord& w1, const GroupoidWord& w2);
GroupoidWord inverse(const GroupoidWord& w);
// Convenience: the word with the given letters applied to D left-to-right.
GroupoidWord word_from_letters(const Diagram& D, const std::vector<int>& letters);

// Coxeter length (inversion count of perm); -1 encodes "minus infinity" for
// the zero element.
long length(const GroupoidWord& w);
bool is_reduced(const GroupoidWord& w);  // rejects the zero word

// A reduced word for the longest element at D (order-reversing permutation).
GroupoidWord longest_word(const Diagram& D);

// Breadth-first path D1 -> D2 through simple reflections; throws if the two
// diagrams live in different families (unequal size or form sign).
GroupoidWord path_between(const Diagram& D1, const Diagram& D2);

// JSON round-trip for words: {"source": ..., "letters": [...]}.
std::string word_to_json(const GroupoidWord& w);
GroupoidWord word_from_json(const std::string& text);

// ---------------------------------------------------------------------------
// Relative groupoid of type sAIII.
// ---------------------------------------------------------------------------

// The generator r_{i,I} of the relative groupoid, for a white node given by
// its internal index: r_i = s_i s_{-i} when the label is not +-a, and the
// palindromic word s_a ... s_{1-a} s_{-a} s_{1-a} ... s_a when it is.
GroupoidWord rel_generator(const SatakeDiagram& I, int i);
// The Satake diagram r_i(I).
SatakeDiagram rel_target(const SatakeDiagram& I, int i);

struct RelWord {
    SatakeDiagram source;
    SatakeDiagram target;
    std::vector<int> rel_letters;  // positive display labels, application order
    GroupoidWord expansion;
};

RelWord rel_identity(const SatakeDiagram& I);
// Appends the relative generator with positive label L (acting after w).
RelWord rel_append(const RelWord& w, int label);
RelWord rel_word_from_labels(const SatakeDiagram& I, const std::vector<int>& labels);

// Relative simple root doubled to stay integral: alpha_i + wbullet(alpha_{tau i}).
Weight rel_root2(const SatakeDiagram& I, int i);

// The longest element of the relative groupoid at I, built by greedy descent
// on the relative simple roots; r*r relative letters for r white pairs.
RelWord rel_longest(const SatakeDiagram& I);

// The longest element w_I of the full groupoid factors as w_bullet * w_circ;
// this returns the witness pair (as one word) and is used by callers needing
// the black-longest prefix.
GroupoidWord black_longest(const SatakeDiagram& I);

// Orbit decomposition of a Satake family under the relative generators, with
// a connecting relative word from the class representative to each member.
struct RelOrbit {
    std::vector<SatakeDiagram> members;  // members[0] is the representative
    std::vector<RelWord> witnesses;      // witnesses[k] maps members[0] to members[k]
    int pari_value = 0;
};
std::vector<RelOrbit> orbits(const std::vector<SatakeDiagram>& family);

// Checks every instance of the defining relations of the relative groupoid
// at I (idempotents, inverses, and the k_ij in {2,3,4} braid relations) as
// equalities of canonical (source, perm) pairs.
struct RelRelationReport {
    int checked = 0;
    std::vector<std::string> failures;
    // k_ij classification per unordered pair of positive labels.
    std::vector<std::string> classification;
    bool ok() const { return failures.empty(); }
};
RelRelationReport verify_rel_relations(const SatakeDiagram& I);

}  // namespace qsup

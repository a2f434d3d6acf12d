#include "qsup/groupoid.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qsup {

namespace {

std::vector<int> identity_perm(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

// perm2 first, then perm1.
std::vector<int> compose_perms(const std::vector<int>& perm1, const std::vector<int>& perm2) {
    std::vector<int> p(perm2.size());
    for (size_t a = 0; a < perm2.size(); ++a)
        p[a] = perm1[perm2[a]];
    return p;
}

}  // namespace

GroupoidWord zero_word() {
    GroupoidWord w;
    w.zero = true;
    return w;
}

GroupoidWord identity_word(const Diagram& D) {
    GroupoidWord w;
    w.source = w.target = D;
    w.perm = identity_perm(D.dim());
    return w;
}

GroupoidWord generator_word(const Diagram& D, int i) {
    GroupoidWord w;
    w.source = D;
    w.target = reflect_diagram(D, i);
    w.letters = {i};
    w.perm = weight_transposition(i, D.dim());
    return w;
}

GroupoidWord compose(const GroupoidWord& w1, const GroupoidWord& w2) {
    if (w1.zero || w2.zero || w1.source != w2.target)
        return zero_word();
    GroupoidWord w;
    w.source = w2.source;
    w.target = w1.target;
    w.letters = w2.letters;
    w.letters.insert(w.letters.end(), w1.letters.begin(), w1.letters.end());
    w.perm = compose_perms(w1.perm, w2.perm);
    return w;
}

GroupoidWord inverse(const GroupoidWord& w) {
    if (w.zero)
        return zero_word();
    GroupoidWord r;
    r.source = w.target;
    r.target = w.source;
    r.letters.assign(w.letters.rbegin(), w.letters.rend());
    r.perm.assign(w.perm.size(), 0);
    for (size_t a = 0; a < w.perm.size(); ++a)
        r.perm[w.perm[a]] = static_cast<int>(a);
    return r;
}

GroupoidWord word_from_letters(const Diagram& D, const std::vector<int>& letters) {
    GroupoidWord w = identity_word(D);
    for (int i : letters)
        w = compose(generator_word(w.target, i), w);
    return w;
}

long length(const GroupoidWord& w) {
    if (w.zero)
        return -1;
    long inv = 0;
    for (size_t a = 0; a < w.perm.size(); ++a)
        for (size_t b = a + 1; b < w.perm.size(); ++b)
            if (w.perm[a] > w.perm[b])
                ++inv;
    return inv;
}

bool is_reduced(const GroupoidWord& w) {
    if (w.zero)
        throw std::invalid_argument("is_reduced: zero word");
    return static_cast<long>(w.letters.size()) == length(w);
}

GroupoidWord longest_word(const Diagram& D) {
    // Bubble word: row k contributes letters k, k-1, ..., 0; the product is
    // the order-reversing permutation and the word is reduced.
    std::vector<int> letters;
    for (int k = 0; k < D.nodes(); ++k)
        for (int j = k; j >= 0; --j)
            letters.push_back(j);
    GroupoidWord w = word_from_letters(D, letters);
    for (int a = 0; a < D.dim(); ++a)
        if (w.perm[a] != D.dim() - 1 - a)
            throw std::logic_error("longest_word: permutation is not order-reversing");
    return w;
}

GroupoidWord path_between(const Diagram& D1, const Diagram& D2) {
    if (D1.dim() != D2.dim() || D1.form_sign != D2.form_sign)
        throw std::invalid_argument("path_between: diagrams live in different families");
    std::map<Diagram, std::pair<Diagram, int>> parent;  // target -> (previous, letter)
    std::deque<Diagram> queue{D1};
    parent.emplace(D1, std::make_pair(D1, -1));
    while (!queue.empty()) {
        Diagram cur = queue.front();
        queue.pop_front();
        if (cur == D2)
            break;
        for (int i = 0; i < cur.nodes(); ++i) {
            Diagram next = reflect_diagram(cur, i);
            if (parent.emplace(next, std::make_pair(cur, i)).second)
                queue.push_back(next);
        }
    }
    auto it = parent.find(D2);
    if (it == parent.end())
        throw std::invalid_argument("path_between: unreachable target diagram");
    std::vector<int> letters;
    Diagram cur = D2;
    while (!(cur == D1)) {
        auto& [prev, letter] = parent.at(cur);
        letters.push_back(letter);
        cur = prev;
    }
    std::reverse(letters.begin(), letters.end());
    return word_from_letters(D1, letters);
}

std::string word_to_json(const GroupoidWord& w) {
    nlohmann::json j;
    if (w.zero) {
        j["zero"] = true;
        return j.dump();
    }
    j["source"] = nlohmann::json::parse(diagram_to_json(w.source));
    j["letters"] = w.letters;
    return j.dump();
}

GroupoidWord word_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.value("zero", false))
        return zero_word();
    Diagram D = diagram_from_json(j.at("source").dump());
    return word_from_letters(D, j.at("letters").get<std::vector<int>>());
}

// ---------------------------------------------------------------------------
// Relative groupoid
// ---------------------------------------------------------------------------

namespace {

std::vector<int> rel_generator_labels(const SatakeDiagram& I, int label) {
    int L = std::abs(label);
    if (L != I.a)
        return {-L, L};
    // Palindromic word through the black block: a, a-1, ..., 1-a, -a, 1-a, ..., a.
    std::vector<int> labels;
    for (int x = I.a; x >= 1 - I.a; --x)
        labels.push_back(x);
    labels.push_back(-I.a);
    for (int x = 1 - I.a; x <= I.a; ++x)
        labels.push_back(x);
    return labels;
}

}  // namespace

GroupoidWord rel_generator(const SatakeDiagram& I, int i) {
    if (I.is_black(i))
        throw std::invalid_argument("rel_generator: node is black");
    int label = I.label_of_node(i);
    std::vector<int> letters;
    for (int L : rel_generator_labels(I, label))
        letters.push_back(I.node_of_label(L));
    return word_from_letters(I.diagram, letters);
}

SatakeDiagram rel_target(const SatakeDiagram& I, int i) {
    GroupoidWord w = rel_generator(I, i);
    SatakeDiagram J = I;
    J.diagram = w.target;
    if (!satake_admissible(J.diagram, J.a))
        throw std::logic_error("rel_target: image diagram is not admissible");
    return J;
}

RelWord rel_identity(const SatakeDiagram& I) {
    RelWord w;
    w.source = w.target = I;
    w.expansion = identity_word(I.diagram);
    return w;
}

RelWord rel_append(const RelWord& w, int label) {
    if (label < w.source.a || label >= w.source.a + w.source.r)
        throw std::invalid_argument("rel_append: label out of the white range");
    RelWord r = w;
    int node = w.target.node_of_label(label);
    GroupoidWord gen = rel_generator(w.target, node);
    r.expansion = compose(gen, w.expansion);
    r.target = rel_target(w.target, node);
    r.rel_letters.push_back(label);
    return r;
}

RelWord rel_word_from_labels(const SatakeDiagram& I, const std::vector<int>& labels) {
    RelWord w = rel_identity(I);
    for (int L : labels)
        w = rel_append(w, L);
    return w;
}

Weight rel_root2(const SatakeDiagram& I, int i) {
    Weight ai = simple_root(I.diagram, i);
    Weight ati = simple_root(I.diagram, I.tau(i));
    return weight_add(ai, wbullet_weight(I, ati));
}

RelWord rel_longest(const SatakeDiagram& I) {
    RelWord w = rel_identity(I);
    for (;;) {
        bool advanced = false;
        for (int label = I.a; label < I.a + I.r; ++label) {
            RelWord cand = rel_append(w, label);
            long gen_len = length(rel_generator(w.target, w.target.node_of_label(label)));
            if (length(cand.expansion) == length(w.expansion) + gen_len) {
                w = cand;
                advanced = true;
                break;
            }
        }
        if (!advanced)
            return w;
    }
}

GroupoidWord black_longest(const SatakeDiagram& I) {
    std::vector<int> letters;
    for (int k = 0; k < 2 * I.a - 1; ++k)
        for (int j = k; j >= 0; --j)
            letters.push_back(I.r + j);
    GroupoidWord w = word_from_letters(I.diagram, letters);
    if (w.perm != wbullet_perm(I))
        throw std::logic_error("black_longest: unexpected permutation");
    if (w.target != I.diagram)
        throw std::logic_error("black_longest: black reflections moved the diagram");
    return w;
}

std::vector<RelOrbit> orbits(const std::vector<SatakeDiagram>& family) {
    std::vector<RelOrbit> out;
    std::vector<SatakeDiagram> remaining = family;
    std::sort(remaining.begin(), remaining.end());
    while (!remaining.empty()) {
        SatakeDiagram rep = remaining.front();
        RelOrbit orbit;
        orbit.pari_value = pari(rep);
        std::map<SatakeDiagram, RelWord> reached;
        std::deque<SatakeDiagram> queue{rep};
        reached.emplace(rep, rel_identity(rep));
        while (!queue.empty()) {
            SatakeDiagram cur = queue.front();
            queue.pop_front();
            for (int label = cur.a; label < cur.a + cur.r; ++label) {
                RelWord next = rel_append(reached.at(cur), label);
                if (reached.emplace(next.target, next).second)
                    queue.push_back(next.target);
            }
        }
        for (auto& [member, witness] : reached) {
            orbit.members.push_back(member);
            orbit.witnesses.push_back(witness);
            if (pari(member) != orbit.pari_value)
                throw std::logic_error("orbits: pari is not constant on an orbit");
            remaining.erase(std::remove(remaining.begin(), remaining.end(), member),
                            remaining.end());
        }
        out.push_back(std::move(orbit));
    }
    return out;
}

RelRelationReport verify_rel_relations(const SatakeDiagram& I) {
    RelRelationReport report;
    auto check = [&](bool ok, const std::string& what) {
        ++report.checked;
        if (!ok)
            report.failures.push_back(what);
    };

    int lo = I.a, hi = I.a + I.r - 1;
    // Inverse law r_{i, r_i(I)} r_{i,I} = e_I for every generator.
    for (int L = lo; L <= hi; ++L) {
        RelWord w = rel_word_from_labels(I, {L, L});
        check(w.expansion == identity_word(I.diagram), "inverse law at label " + std::to_string(L));
    }
    // Identity laws.
    check(compose(identity_word(I.diagram), identity_word(I.diagram)) ==
              identity_word(I.diagram),
          "idempotent identity");
    Diagram other = I.diagram;
    other.parities[0] ^= 1;  // a diagram of a different family
    check(compose(identity_word(I.diagram), identity_word(other)).zero,
          "distinct idempotents compose to zero");

    // Braid relations with exponent k_ij in {2, 3, 4}.
    for (int Li = lo; Li <= hi; ++Li) {
        for (int Lj = Li + 1; Lj <= hi; ++Lj) {
            int k;
            if (Lj - Li >= 2)
                k = 2;
            else if (Li == I.a)
                k = 4;  // the pair {a, a+1}
            else
                k = 3;
            std::vector<int> lhs, rhs;
            for (int t = 0; t < k; ++t) {
                lhs.push_back(t % 2 == 0 ? Li : Lj);
                rhs.push_back(t % 2 == 0 ? Lj : Li);
            }
            RelWord wl = rel_word_from_labels(I, lhs);
            RelWord wr = rel_word_from_labels(I, rhs);
            check(wl.expansion == wr.expansion,
                  "braid relation k=" + std::to_string(k) + " at labels (" +
                      std::to_string(Li) + "," + std::to_string(Lj) + ")");
            report.classification.push_back("(" + std::to_string(Li) + "," + std::to_string(Lj) +
                                            "): k=" + std::to_string(k));
        }
    }
    return report;
}

}  // namespace qsup

#include "qsup/rootdata.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qsup {

int Diagram::num_even_basis() const {
    int m = 0;
    for (int p : parities)
        if (p == 0)
            ++m;
    return m;
}

int Diagram::num_odd_basis() const {
    return dim() - num_even_basis();
}

Weight simple_root(const Diagram& D, int i) {
    if (i < 0 || i >= D.nodes())
        throw std::out_of_range("simple_root: node out of range");
    Weight w(D.dim(), 0);
    w[i] = 1;
    w[i + 1] = -1;
    return w;
}

int bform(const Diagram& D, const Weight& lam, const Weight& mu) {
    int acc = 0;
    for (int a = 0; a < D.dim(); ++a) {
        int sign = D.parities[a] ? -1 : 1;
        acc += sign * lam[a] * mu[a];
    }
    return D.form_sign * acc;
}

CartanData cartan(const Diagram& D) {
    int n = D.nodes();
    CartanData cd;
    cd.c.assign(n, std::vector<int>(n, 0));
    cd.d.assign(n, 0);
    cd.node_parities.assign(n, 0);
    std::vector<Weight> alpha;
    alpha.reserve(n);
    for (int i = 0; i < n; ++i) {
        alpha.push_back(simple_root(D, i));
        cd.node_parities[i] = D.node_parity(i);
    }
    for (int i = 0; i < n; ++i) {
        if (cd.node_parities[i] == 0) {
            int aa = bform(D, alpha[i], alpha[i]);
            cd.d[i] = aa / 2;
            for (int j = 0; j < n; ++j)
                cd.c[i][j] = bform(D, alpha[i], alpha[j]) / cd.d[i];
        } else {
            // Odd (isotropic) node: c_ii = 0 and the pairing (alpha_i,
            // alpha_i) vanishes, so the symmetrizer entry is not pinned by
            // the diagonal.  Pin it by position: +1 on the left half of the
            // diagram, -1 on the right half (and +1 at an exact centre).
            // The sign depends only on the node's position, so it is stable
            // under reflections of the diagram -- which is what the braid
            // operators need to carry the EF commutation relation across
            // neighbouring diagrams -- and it is antisymmetric under the
            // flip i -> N-1-i, which makes the flip a genuine automorphism.
            cd.d[i] = (2 * i > n - 1) ? -1 : 1;
            for (int k = 0; k < n; ++k)
                cd.c[i][k] = (k == i) ? 0 : bform(D, alpha[i], alpha[k]) / cd.d[i];
        }
    }
    return cd;
}

Diagram reflect_diagram(const Diagram& D, int i) {
    if (i < 0 || i >= D.nodes())
        throw std::out_of_range("reflect_diagram: node out of range");
    Diagram R = D;
    std::swap(R.parities[i], R.parities[i + 1]);
    return R;
}

std::vector<int> weight_transposition(int i, int dim) {
    if (i < 0 || i + 1 >= dim)
        throw std::out_of_range("weight_transposition: node out of range");
    std::vector<int> perm(dim);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[i], perm[i + 1]);
    return perm;
}

Weight apply_permutation(const std::vector<int>& perm, const Weight& w) {
    // perm maps position a to position perm[a]; coordinates move along.
    Weight r(w.size(), 0);
    for (size_t a = 0; a < w.size(); ++a)
        r[perm[a]] = w[a];
    return r;
}

Weight weight_zero(int dim) {
    return Weight(dim, 0);
}

Weight weight_add(const Weight& a, const Weight& b) {
    Weight r = a;
    for (size_t k = 0; k < r.size(); ++k)
        r[k] += b[k];
    return r;
}

Weight weight_sub(const Weight& a, const Weight& b) {
    Weight r = a;
    for (size_t k = 0; k < r.size(); ++k)
        r[k] -= b[k];
    return r;
}

Weight weight_neg(const Weight& a) {
    Weight r = a;
    for (auto& x : r)
        x = -x;
    return r;
}

Weight weight_scale(int k, const Weight& a) {
    Weight r = a;
    for (auto& x : r)
        x *= k;
    return r;
}

bool weight_is_zero(const Weight& a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

int weight_parity(const Diagram& D, const Weight& w) {
    int acc = 0;
    for (int a = 0; a < D.dim(); ++a)
        acc += w[a] * D.parities[a];
    return ((acc % 2) + 2) % 2;
}

std::vector<int> simple_root_coords(const Weight& w) {
    std::vector<int> coords(w.size() - 1, 0);
    int acc = 0;
    for (size_t k = 0; k + 1 < w.size(); ++k) {
        acc += w[k];
        coords[k] = acc;
    }
    acc += w.back();
    if (acc != 0)
        throw std::invalid_argument("simple_root_coords: weight not in the root lattice");
    return coords;
}

int height(const Weight& w) {
    auto coords = simple_root_coords(w);
    return std::accumulate(coords.begin(), coords.end(), 0);
}

bool in_positive_cone(const Weight& w) {
    auto coords = simple_root_coords(w);
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

namespace {

// Memoized count over the list of positive roots in a fixed order.
long kostant_rec(const Diagram& D, const std::vector<std::pair<int, int>>& roots, size_t k,
                 Weight mu, std::map<std::pair<size_t, Weight>, long>& memo) {
    if (weight_is_zero(mu))
        return 1;
    if (k == roots.size())
        return 0;
    auto key = std::make_pair(k, mu);
    auto it = memo.find(key);
    if (it != memo.end())
        return it->second;
    auto [a, b] = roots[k];
    bool odd = D.parities[a] != D.parities[b];
    long total = 0;
    Weight rest = mu;
    for (int mult = 0;; ++mult) {
        if (mult > 0) {
            rest[a] -= 1;
            rest[b] += 1;
            // Stop once the remainder leaves the positive cone.
            int acc = 0;
            bool ok = true;
            for (size_t p = 0; p + 1 < rest.size(); ++p) {
                acc += rest[p];
                if (acc < 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok)
                break;
        }
        total += kostant_rec(D, roots, k + 1, rest, memo);
        if (odd && mult == 1)
            break;
    }
    memo[key] = total;
    return total;
}

}  // namespace

long kostant_dim(const Diagram& D, const Weight& mu) {
    if (!in_positive_cone(mu))
        throw std::invalid_argument("kostant_dim: weight not in the positive cone");
    std::vector<std::pair<int, int>> roots;
    for (int a = 0; a < D.dim(); ++a)
        for (int b = a + 1; b < D.dim(); ++b)
            roots.emplace_back(a, b);
    std::map<std::pair<size_t, Weight>, long> memo;
    return kostant_rec(D, roots, 0, mu, memo);
}

std::vector<Diagram> enumerate_diagrams(int m, int n) {
    if (m < 0 || n < 0 || m + n < 2)
        throw std::invalid_argument("enumerate_diagrams: need m, n >= 0 and m+n >= 2");
    std::vector<Diagram> out;
    std::vector<int> seq(m + n, 0);
    std::fill(seq.begin() + m, seq.end(), 1);
    std::sort(seq.begin(), seq.end());
    do {
        out.push_back(Diagram{seq, +1});
        if (m == n)
            out.push_back(Diagram{seq, -1});
    } while (std::next_permutation(seq.begin(), seq.end()));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Label value is k - (N-2)/2 for node k; represent as halves to cover odd N.
std::string halves_label(int twice_value) {
    if (twice_value % 2 == 0)
        return std::to_string(twice_value / 2);
    return std::to_string(twice_value) + "/2";
}

}  // namespace

std::string node_label(const Diagram& D, int i) {
    return halves_label(2 * i - (D.dim() - 2));
}

std::string position_label(const Diagram& D, int a) {
    return halves_label(2 * a - (D.dim() - 1));
}

int node_from_double_label(const Diagram& D, int twice_label) {
    int twice_index = twice_label + (D.dim() - 2);
    if (twice_index % 2 != 0)
        return -1;
    int i = twice_index / 2;
    return (i >= 0 && i < D.nodes()) ? i : -1;
}

std::string diagram_to_json(const Diagram& D) {
    nlohmann::json j;
    j["parities"] = D.parities;
    j["form_sign"] = D.form_sign;
    return j.dump();
}

Diagram diagram_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Diagram D;
    D.parities = j.at("parities").get<std::vector<int>>();
    D.form_sign = j.value("form_sign", 1);
    for (int p : D.parities)
        if (p != 0 && p != 1)
            throw std::invalid_argument("diagram_from_json: parities must be 0/1");
    if (D.form_sign != 1 && D.form_sign != -1)
        throw std::invalid_argument("diagram_from_json: form_sign must be +1/-1");
    return D;
}

std::string pretty_diagram(const Diagram& D, const std::vector<int>& black_nodes) {
    std::ostringstream out;
    for (int i = 0; i < D.nodes(); ++i) {
        if (i > 0)
            out << "--";
        char symbol = D.node_is_odd(i) ? 'x' : 'o';
        if (std::find(black_nodes.begin(), black_nodes.end(), i) != black_nodes.end())
            symbol = '*';
        out << "(" << node_label(D, i) << ")" << symbol;
    }
    if (D.form_sign < 0)
        out << "  [negated form]";
    return out.str();
}

}  // namespace qsup

#include "qsup/satake.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsup {

std::vector<int> SatakeDiagram::black_nodes() const {
    std::vector<int> out;
    for (int k = 0; k < nodes(); ++k)
        if (is_black(k))
            out.push_back(k);
    return out;
}

std::vector<int> SatakeDiagram::white_nodes() const {
    std::vector<int> out;
    for (int k = 0; k < nodes(); ++k)
        if (is_white(k))
            out.push_back(k);
    return out;
}

bool satake_admissible(const Diagram& D, int a) {
    int N = D.dim();
    if (N % 2 != 0 || a < 0)
        return false;
    int r = N / 2 - a;
    if (r < 1)
        return false;
    // Parity sequence must be palindromic (tau preserves node parities and
    // excludes the tau-fixed isotropic node when a = 0).
    for (int p = 0; p < N / 2; ++p)
        if (D.parities[p] != D.parities[N - 1 - p])
            return false;
    // The middle 2a positions must share one parity so every black node and
    // the flanking +-a nodes' black neighbors are even.
    for (int p = r; p + 1 < r + 2 * a; ++p)
        if (D.parities[p] != D.parities[p + 1])
            return false;
    return true;
}

std::vector<SatakeDiagram> enumerate_satake(int m, int n, int a) {
    if ((m + n) % 2 != 0)
        throw std::invalid_argument("enumerate_satake: m+n must be even");
    int r = (m + n) / 2 - a;
    if (a < 0 || r < 1)
        throw std::invalid_argument("enumerate_satake: need a >= 0 and r >= 1");
    std::vector<SatakeDiagram> out;
    for (const Diagram& D : enumerate_diagrams(m, n))
        if (satake_admissible(D, a))
            out.push_back(SatakeDiagram{D, a, r});
    return out;
}

int pari(const SatakeDiagram& I) {
    int N = I.diagram.dim();
    int count = 0;
    for (int p = 2 * I.a + I.r; p < N; ++p)
        count += I.diagram.parities[p];
    return count;
}

Weight tau_weight(const SatakeDiagram& I, const Weight& mu) {
    int N = I.diagram.dim();
    Weight out(N, 0);
    for (int p = 0; p < N; ++p)
        out[p] = -mu[N - 1 - p];
    return out;
}

std::vector<int> wbullet_perm(const SatakeDiagram& I) {
    int N = I.diagram.dim();
    std::vector<int> perm(N);
    for (int p = 0; p < N; ++p)
        perm[p] = p;
    for (int j = 0; j < 2 * I.a; ++j)
        perm[I.r + j] = I.r + 2 * I.a - 1 - j;
    return perm;
}

Weight wbullet_weight(const SatakeDiagram& I, const Weight& mu) {
    return apply_permutation(wbullet_perm(I), mu);
}

}  // namespace qsup

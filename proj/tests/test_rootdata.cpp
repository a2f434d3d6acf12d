#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsup/rootdata.hpp"

#include <numeric>

using namespace qsup;

namespace {

// gl(4|2) diagram with epsilon parities (0,0,1,1,0,0): nodes o-x-o-x-o.
Diagram gl42_example() {
    return Diagram{{0, 0, 1, 1, 0, 0}, +1};
}

}  // namespace

TEST_CASE("simple roots and parities") {
    Diagram D = gl42_example();
    CHECK(D.nodes() == 5);
    CHECK(simple_root(D, 0) == Weight{1, -1, 0, 0, 0, 0});
    // Node labels run -2..2; the odd (isotropic) nodes sit at labels -1, 1.
    CHECK(node_label(D, 0) == "-2");
    CHECK(node_label(D, 4) == "2");
    CHECK(D.node_parity(1) == 1);
    CHECK(D.node_parity(3) == 1);
    CHECK(D.node_parity(0) == 0);
    CHECK(D.node_parity(2) == 0);
    CHECK_THROWS(simple_root(D, 5));
}

TEST_CASE("bilinear form") {
    Diagram D = gl42_example();
    for (int i = 0; i < D.nodes(); ++i) {
        Weight a = simple_root(D, i);
        int aa = bform(D, a, a);
        if (D.node_is_odd(i))
            CHECK(aa == 0);
        else
            CHECK((aa == 2 || aa == -2));
    }
    CHECK(bform(D, simple_root(D, 0), simple_root(D, 0)) == 2);
    Weight zero = weight_zero(D.dim());
    CHECK(bform(D, simple_root(D, 1), zero) == 0);
    // Symmetry on all pairs.
    for (int i = 0; i < D.nodes(); ++i)
        for (int j = 0; j < D.nodes(); ++j)
            CHECK(bform(D, simple_root(D, i), simple_root(D, j)) ==
                  bform(D, simple_root(D, j), simple_root(D, i)));
}

TEST_CASE("cartan data reproduces the pinned gl(4|2) matrix") {
    CartanData cd = cartan(gl42_example());
    std::vector<std::vector<int>> expected = {
        {2, -1, 0, 0, 0},
        {-1, 0, 1, 0, 0},
        {0, -1, 2, -1, 0},
        {0, 0, -1, 0, 1},
        {0, 0, 0, -1, 2},
    };
    CHECK(cd.c == expected);
    CHECK(cd.d == std::vector<int>{1, 1, -1, -1, 1});
}

TEST_CASE("cartan data invariants across small ranks") {
    for (auto [m, n] : {std::pair{2, 2}, {3, 2}, {4, 2}, {1, 4}, {5, 0}, {3, 3}}) {
        for (const Diagram& D : enumerate_diagrams(m, n)) {
            CartanData cd = cartan(D);
            int g = 0;
            for (int i = 0; i < D.nodes(); ++i) {
                g = g == 0 ? std::abs(cd.d[i]) : std::gcd(g, std::abs(cd.d[i]));
                CHECK(cd.c[i][i] == (cd.node_parities[i] ? 0 : 2));
                for (int j = 0; j < D.nodes(); ++j) {
                    CHECK(cd.d[i] * cd.c[i][j] == cd.d[j] * cd.c[j][i]);
                    CHECK(cd.d[i] * cd.c[i][j] ==
                          bform(D, simple_root(D, i), simple_root(D, j)));
                }
            }
            CHECK(g == 1);
        }
    }
}

TEST_CASE("purely even diagrams give the classical type-A matrix") {
    Diagram D{{0, 0, 0, 0}, +1};
    CartanData cd = cartan(D);
    CHECK(cd.d == std::vector<int>{1, 1, 1});
    CHECK(cd.c == std::vector<std::vector<int>>{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
}

TEST_CASE("diagram reflections") {
    Diagram D{{1, 0, 1, 0}, +1};  // nodes: x-x-x
    Diagram R = reflect_diagram(D, 1);
    CHECK(R.parities == std::vector<int>{1, 1, 0, 0});
    // Reflecting at the middle odd node flips its neighbors: x-x-x -> o-x-o.
    CHECK(R.node_parity(0) == 0);
    CHECK(R.node_parity(1) == 1);
    CHECK(R.node_parity(2) == 0);
    CHECK(reflect_diagram(R, 1) == D);
    // Even nodes fix the diagram.
    Diagram E{{0, 0, 1}, +1};
    CHECK(reflect_diagram(E, 0) == E);
    // Parity multiset conserved.
    CHECK(R.num_even_basis() == D.num_even_basis());
}

TEST_CASE("weight transpositions") {
    Diagram D = gl42_example();
    for (int i = 0; i < D.nodes(); ++i) {
        auto perm = weight_transposition(i, D.dim());
        CHECK(apply_permutation(perm, simple_root(D, i)) == weight_neg(simple_root(D, i)));
        if (i + 1 < D.nodes())
            CHECK(apply_permutation(perm, simple_root(D, i + 1)) ==
                  weight_add(simple_root(D, i), simple_root(D, i + 1)));
        for (int k = 0; k < D.nodes(); ++k)
            if (k != i - 1 && k != i && k != i + 1)
                CHECK(apply_permutation(perm, simple_root(D, k)) == simple_root(D, k));
    }
}

TEST_CASE("kostant dimension") {
    Diagram D{{1, 0, 0}, +1};  // gl(1|2): node 0 odd, node 1 even
    CHECK(kostant_dim(D, simple_root(D, 0)) == 1);
    CHECK(kostant_dim(D, weight_zero(3)) == 1);
    CHECK(kostant_dim(D, weight_add(simple_root(D, 0), simple_root(D, 1))) == 2);
    CHECK_THROWS(kostant_dim(D, weight_neg(simple_root(D, 0))));

    // Classical cross-check on gl(2|0): dim U^+_{k alpha} = 1 for all k.
    Diagram A{{0, 0}, +1};
    for (int k = 1; k <= 4; ++k)
        CHECK(kostant_dim(A, weight_scale(k, simple_root(A, 0))) == 1);
    // gl(3|0): alpha_1 + alpha_2 has the two classical partitions.
    Diagram A2{{0, 0, 0}, +1};
    CHECK(kostant_dim(A2, weight_add(simple_root(A2, 0), simple_root(A2, 1))) == 2);
    // Isotropic roots are capped at multiplicity one: 2*alpha_0 on gl(1|1).
    Diagram B{{1, 0}, +1};
    CHECK(kostant_dim(B, weight_scale(2, simple_root(B, 0))) == 0);
}

TEST_CASE("diagram enumeration") {
    CHECK(enumerate_diagrams(2, 1).size() == 3);
    CHECK(enumerate_diagrams(4, 0).size() == 1);
    CHECK(enumerate_diagrams(2, 2).size() == 12);
    CHECK_THROWS(enumerate_diagrams(1, 0));
}

TEST_CASE("weight helpers") {
    Diagram D = gl42_example();
    Weight mu = weight_add(simple_root(D, 1), simple_root(D, 2));
    CHECK(simple_root_coords(mu) == std::vector<int>{0, 1, 1, 0, 0});
    CHECK(height(mu) == 2);
    CHECK(in_positive_cone(mu));
    CHECK(!in_positive_cone(weight_sub(simple_root(D, 1), simple_root(D, 2))));
    CHECK(weight_parity(D, simple_root(D, 1)) == 1);
    CHECK(weight_parity(D, simple_root(D, 2)) == 0);
}

TEST_CASE("json round trip and pretty printer") {
    Diagram D = gl42_example();
    CHECK(diagram_from_json(diagram_to_json(D)) == D);
    CHECK_THROWS(diagram_from_json("{\"parities\":[0,2]}"));
    std::string row = pretty_diagram(D, {2});
    CHECK(row == "(-2)o--(-1)x--(0)*--(1)x--(2)o");
    CHECK(pretty_diagram(Diagram{{0, 1}, +1}) == "(0)x");
}

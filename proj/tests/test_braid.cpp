#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsup/braid.hpp"
#include "qsup/repr.hpp"

using namespace qsup;

namespace {

Diagram gl21() { return Diagram{{0, 0, 1}, +1}; }
Diagram gl22() { return Diagram{{0, 0, 1, 1}, +1}; }

std::vector<AlgElem> all_generators(const Diagram& D) {
    std::vector<AlgElem> gens;
    for (int i = 0; i < D.nodes(); ++i) {
        gens.push_back(AlgElem::gen_E(D, i));
        gens.push_back(AlgElem::gen_F(D, i));
        gens.push_back(AlgElem::gen_K(D, i));
        gens.push_back(AlgElem::gen_K(D, i, -1));
    }
    gens.push_back(AlgElem::gen_rho(D));
    return gens;
}

std::vector<Diagram> small_diagrams(int max_dim) {
    std::vector<Diagram> out;
    for (int m = 0; m <= max_dim; ++m)
        for (int n = 0; m + n <= max_dim; ++n) {
            if (m + n < 2)
                continue;
            for (const Diagram& D : enumerate_diagrams(m, n))
                out.push_back(D);
        }
    return out;
}

}  // namespace

TEST_CASE("generator images of T_i") {
    Diagram D = gl21();
    // Node 0 is even, so s_0 fixes the diagram.
    Diagram J = reflect_diagram(D, 0);
    CHECK(J == D);
    CHECK(braid_T(0, AlgElem::gen_E(D, 0)) ==
          -(AlgElem::gen_F(J, 0) * AlgElem::gen_K(J, 0)));
    CHECK(braid_T(0, AlgElem::gen_F(D, 0)) ==
          -(AlgElem::gen_K(J, 0, -1) * AlgElem::gen_E(J, 0)));
    CHECK(braid_T(0, AlgElem::gen_K(D, 0)) == AlgElem::gen_K(J, 0, -1));
    CHECK(braid_T(0, AlgElem::gen_rho(D)) == AlgElem::gen_rho(J));
    // Adjacent node: E_1 goes to the q-bracket E_0 E_1 - q^{(a0,a1)} E_1 E_0.
    int pairing = bform(J, simple_root(J, 0), simple_root(J, 1));
    AlgElem expect = AlgElem::gen_E(J, 0) * AlgElem::gen_E(J, 1) -
                     (AlgElem::gen_E(J, 1) * AlgElem::gen_E(J, 0)).scaled(Scalar::qpow(pairing));
    CHECK(braid_T(0, AlgElem::gen_E(D, 1)) == expect);
    // Odd reflection changes the diagram.
    Diagram J1 = reflect_diagram(D, 1);
    CHECK(J1 != D);
    CHECK(braid_T(1, AlgElem::gen_E(D, 0)).diagram() == J1);
    // Distant nodes are untouched: gl(2|2) nodes 0 and 2.
    Diagram D4 = gl22();
    CHECK(braid_T(0, AlgElem::gen_K(D4, 2)) ==
          AlgElem::gen_K(reflect_diagram(D4, 0), 2));
    CHECK(braid_T(2, AlgElem::gen_E(D4, 0)) ==
          AlgElem::gen_E(reflect_diagram(D4, 2), 0));
}

TEST_CASE("T'_i inverts T_i and the psi-conjugate pairing holds") {
    for (const Diagram& D : small_diagrams(4))
        for (int i = 0; i < D.nodes(); ++i)
            for (const AlgElem& g : all_generators(D)) {
                CHECK(braid_T_prime(i, braid_T(i, g)) == g);
                CHECK(braid_T(i, braid_T_prime(i, g)) == g);
                // T'_{i,+1} inverts T''_{i,-1}.
                CHECK(braid_variant(i, braid_variant(i, g, BraidVariant::Tpm),
                                    BraidVariant::Tp_p) == g);
            }
}

TEST_CASE("T_i is a homomorphism: relation images vanish") {
    for (const Diagram& D : small_diagrams(4)) {
        for (int i = 0; i < D.nodes(); ++i) {
            // Multiplicativity is structural (image of a product is the
            // straightened product of images); the content is that the Serre
            // ideal is preserved.
            for (auto pattern : {SerrePattern::Even, SerrePattern::Super})
                for (const AlgElem& rel : serre_residual(D, pattern))
                    CHECK(is_zero(braid_T(i, rel), 8));
        }
    }
}

TEST_CASE("braid relations hold modulo the defining ideal") {
    Diagram D = gl21();
    GroupoidWord lhs = word_from_letters(D, {0, 1, 0});
    GroupoidWord rhs = word_from_letters(D, {1, 0, 1});
    REQUIRE(lhs == rhs);
    for (const AlgElem& g : all_generators(D)) {
        AlgElem a = braid_word(lhs, g);
        AlgElem b = braid_word(rhs, g);
        REQUIRE(a.diagram() == b.diagram());
        CHECK(is_zero(a - b));
    }
}

TEST_CASE("reduced-expression independence for the gl(2|2) longest element") {
    Diagram D = gl22();
    GroupoidWord w1 = word_from_letters(D, {0, 1, 0, 2, 1, 0});
    GroupoidWord w2 = word_from_letters(D, {2, 1, 2, 0, 1, 2});
    REQUIRE(w1 == w2);
    REQUIRE(is_reduced(w1));
    REQUIRE(is_reduced(w2));
    for (const AlgElem& g : all_generators(D)) {
        AlgElem a = braid_word(w1, g);
        AlgElem b = braid_word(w2, g);
        REQUIRE(a.diagram() == b.diagram());
        CHECK(is_zero(a - b));
    }
    // The identity word acts as the identity map.
    for (const AlgElem& g : all_generators(D))
        CHECK(braid_word(identity_word(D), g) == g);
}

TEST_CASE("weight equivariance of T_i") {
    Diagram D = gl22();
    for (int i = 0; i < D.nodes(); ++i) {
        AlgElem x = AlgElem::gen_E(D, 0) * AlgElem::gen_E(D, 1) * AlgElem::gen_F(D, 2);
        auto before = weight_parity(x);
        REQUIRE(before.size() == 1);
        AlgElem y = braid_T(i, x);
        auto perm = weight_transposition(i, D.dim());
        Weight expect = apply_permutation(perm, before[0].weight);
        for (const auto& gc : weight_parity(y))
            CHECK(gc.weight == expect);
    }
}

TEST_CASE("the longest-word operator pairs E and F across tau") {
    for (const Diagram& D : {gl21(), gl22()}) {
        GroupoidWord w = longest_word(D);
        const Diagram& T = w.target;
        int nn = D.nodes();
        CartanData cds = cartan(D), cdt = cartan(T);
        for (int j = 0; j < nn; ++j) {
            int tj = nn - 1 - j;
            // At isotropic nodes the pairing carries the symmetrizer sign:
            // d_j of the source on the E-image, d_{tau j} of the target on
            // the F-image (both +1 at even nodes).
            Scalar se(D.node_parity(j) && cds.d[j] < 0 ? -1 : 1);
            Scalar sf(T.node_parity(tj) && cdt.d[tj] < 0 ? -1 : 1);
            AlgElem img_f = braid_word(w, AlgElem::gen_F(D, j));
            AlgElem expect_f = -(AlgElem::gen_K(T, tj, -1) * AlgElem::gen_E(T, tj)).scaled(sf);
            CHECK(is_zero(img_f - expect_f));
            AlgElem img_e = braid_word(w, AlgElem::gen_E(D, j));
            AlgElem expect_e = -(AlgElem::gen_F(T, tj) * AlgElem::gen_K(T, tj)).scaled(se);
            CHECK(is_zero(img_e - expect_e));
            AlgElem img_k = braid_word(w, AlgElem::gen_K(D, j));
            Scalar s(T.node_parity(tj) ? -1 : 1);
            CHECK(img_k == AlgElem::gen_K(T, tj, -1).scaled(s));
        }
    }
}

TEST_CASE("T_wbullet powers compose and invert") {
    SatakeDiagram I{Diagram{{0, 0, 1, 1, 0, 0}, +1}, 1, 2};
    const Diagram& D = I.diagram;
    // One black node (label 0): T_{w_bullet} = T at that node.
    GroupoidWord wb = black_longest(I);
    REQUIRE(wb.letters.size() == 1);
    int b = wb.letters[0];
    AlgElem x = AlgElem::gen_E(D, b + 1);
    CHECK(braid_wbullet(I, x, 1) == braid_T(b, x));
    CHECK(braid_wbullet(I, braid_wbullet(I, x, 1), -1) == x);
    CHECK(braid_wbullet(I, x, 0) == x);
    CHECK(braid_wbullet(I, x, 2) == braid_T(b, braid_T(b, x)));
    // a = 0: empty black set, identity.
    SatakeDiagram I0{Diagram{{0, 1, 1, 0}, +1}, 0, 2};
    AlgElem y = AlgElem::gen_F(I0.diagram, 1);
    CHECK(braid_wbullet(I0, y, 3) == y);
}

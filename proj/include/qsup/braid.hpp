#pragma once

// Braid group symmetries on the quantum supergroup: the algebra isomorphisms
// T_i = T''_{i,+1} : U(I) -> U(s_i I) given on generators, their sigma/psi
// conjugate variants, inverses T'_i, and composites along groupoid words.

#include "qsup/groupoid.hpp"
#include "qsup/satake.hpp"
#include "qsup/superalgebra.hpp"

namespace qsup {

// Lusztig-style operator labels: Tpp/Tpm are T''_{i,+-1}, Tp_p/Tp_m are
// T'_{i,+-1}. braid_T below is Tpp (the default throughout).
enum class BraidVariant { Tpp, Tpm, Tp_p, Tp_m };

// T''_{i,+1}(x): generator substitution followed by straightening. The result
// lives over the reflected diagram.
AlgElem braid_T(int i, const AlgElem& x);

// The sigma/psi conjugates per the variant table; Tp_m is the two-sided
// inverse of Tpp.
AlgElem braid_variant(int i, const AlgElem& x, BraidVariant which);

// Shorthand T'_i = T'_{i,-1} = (T_i)^{-1}.
AlgElem braid_T_prime(int i, const AlgElem& x);

// T_w along a reduced word (letters applied in application order); rejects
// non-reduced words. variant selects T_w (Tpp) or T'_w (Tp_m, applied with
// inverted letter order semantics preserved by the caller's word).
AlgElem braid_word(const GroupoidWord& w, const AlgElem& x);
AlgElem braid_word_prime(const GroupoidWord& w, const AlgElem& x);

// T_{w_bullet}^{power} for the black longest element (power may be negative).
AlgElem braid_wbullet(const SatakeDiagram& I, const AlgElem& x, int power);

}  // namespace qsup

#pragma once

#include "schubert/localized.hpp"
#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

// Operators act on the x variables only; y, t and beta are scalars.

// x_i -> x_{w(i)}.
Polynomial apply_perm_x(const Permutation& w, const Polynomial& f);

// (f - s_i f) / (x_i - x_{i+1}).
Polynomial partial_i(int i, const Polynomial& f);

// partial_{i_1} ... partial_{i_l} along the canonical reduced word of w;
// the rightmost letter acts first.
Polynomial partial_w(const Permutation& w, const Polynomial& f);

// Same composition along an explicit word (not checked for reducedness).
Polynomial partial_word(const ReducedWord& word, const Polynomial& f);

// pi_i(f) = partial_i((1 + b*x_{i+1}) f).
LocalizedElement pi_i(int i, const LocalizedElement& f);

// Skew operator partial_{w/v}, defined through
//   partial_w(f g) = sum_v partial_{w/v}(f) partial_v(g).
// Recurses on w = s_i w' with i the first letter of the canonical word:
//   partial_{w/v} = partial_i o partial_{w'/v} + [s_i v < v] s_i o partial_{w'/s_i v}.
Polynomial skew_partial(const Permutation& w, const Permutation& v, const Polynomial& f);

} // namespace schubert

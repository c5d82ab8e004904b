#pragma once

#include <map>
#include <optional>

#include "schubert/localized.hpp"
#include "schubert/permutation.hpp"

namespace schubert {

// a (-) b = (a - b) / (1 + beta*b). Throws NotDivisible when 1 + beta*b is not
// a product of (1+b*y_j), (1+b*t_i) factors and cannot be cancelled.
LocalizedElement ominus(const LocalizedElement& a, const LocalizedElement& b);
// a (+) b = a + b + beta*a*b.
LocalizedElement oplus(const LocalizedElement& a, const LocalizedElement& b);

// Convention: G_{w_0}(x;y) = prod_{i+j<=n} (x_i (-) y_j) and
// G_{w s_i} = pi_i G_w whenever w s_i < w. Built like double_schubert: from
// the dominant permutation above w, where G_d = prod_{j <= lambda_i} (x_i (-) y_j).
LocalizedElement double_grothendieck(const Permutation& w, int n);
LocalizedElement double_grothendieck_xt(const Permutation& w, int n);
// Unmemoized construction from the S_n top class.
LocalizedElement double_grothendieck_from_top(const Permutation& w, int n);

using KCoefficients = std::map<Permutation, LocalizedElement>;

// Coefficients of P in {G_w(x;t) : w in S_ambient}, by localization: walking
// v in order of increasing length,
//   c_v = (P(vt) - sum_{w done} c_w G_w(vt;t)) / G_v(vt;t).
// Throws ResidualNonzero when sum c_w G_w(x;t) != P afterwards.
KCoefficients expand_in_t_basis_K(const LocalizedElement& p, int ambient);

struct KExpansionResult {
  Permutation u;
  Permutation v;
  int ambient = 0;
  KCoefficients coefficients;
};

// G_u(x;y) G_v(x;t) in the G_w(x;t) basis, with the same ambient policy as
// expand_product.
KExpansionResult expand_product_K(const Permutation& u, const Permutation& v,
                                  std::optional<int> ambient = std::nullopt);

LocalizedElement triple_coefficient_K(const Permutation& u, const Permutation& v,
                                      const Permutation& w,
                                      std::optional<int> ambient = std::nullopt);

} // namespace schubert

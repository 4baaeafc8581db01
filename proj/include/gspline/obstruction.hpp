#ifndef GSPLINE_OBSTRUCTION_HPP
#define GSPLINE_OBSTRUCTION_HPP

// Obstruction to flow-up class bases on a 3-cycle with pairwise coprime
// labels a (v1-v2), b (v2-v3), c (v3-v1).
//
// Any flow-up basis has the shape (1,1,1), (0, a x, c y), (0, 0, b c z) and
// determinant a b c x z. Coprime labels force that determinant to be a unit
// times a b c, so x is a unit; the edge condition b | a x - c y then puts a in
// the ideal <b, c>. Hence a not in <b, c> rules out every flow-up basis.
// Ideal membership is supplied by the caller; no Groebner machinery here.

#include <functional>
#include <string>

#include "gspline/errors.hpp"
#include "gspline/polynomial_ring.hpp"
#include "gspline/ring.hpp"

namespace gspline {

template <Ring R>
using IdealMembership = std::function<bool(const typename R::element_type&)>;

struct ObstructionResult {
  bool obstructed;
  std::string reason;
};

/// True (obstructed) when `in_ideal_bc(a)` is false. Throws DomainError if the
/// labels are not pairwise coprime.
template <Ring R>
ObstructionResult c3_flowup_obstruction(const R& ring, const typename R::element_type& a,
                                        const typename R::element_type& b, const typename R::element_type& c,
                                        const IdealMembership<R>& in_ideal_bc) {
  auto coprime = [&](const auto& x, const auto& y) { return ring.is_unit(ring.gcd(x, y)); };
  if (!coprime(a, b) || !coprime(b, c) || !coprime(a, c))
    throw DomainError("obstruction test needs pairwise coprime labels");
  if (in_ideal_bc(a)) {
    return {false, ring.format(a) + " lies in <" + ring.format(b) + ", " + ring.format(c) +
                       ">; this argument does not rule out a flow-up basis"};
  }
  return {true, ring.format(a) + " is not in <" + ring.format(b) + ", " + ring.format(c) +
                    ">, so the 3-cycle has no flow-up class basis"};
}

/// Membership in <2, x_1, ..., x_k> inside ZZ[x_1, ..., x_k]: constant term even.
inline bool even_constant_term(const Polynomial& p) {
  Rational c = p.constant_term();
  return c.get_den() == 1 && mpz_even_p(c.get_num_mpz_t());
}

/// Membership in the ideal generated by all variables: constant term zero.
inline bool zero_constant_term(const Polynomial& p) { return sgn(p.constant_term()) == 0; }

template <class T>
bool whole_ring(const T&) {
  return true;
}

}  // namespace gspline

#endif  // GSPLINE_OBSTRUCTION_HPP

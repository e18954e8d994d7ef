#pragma once

#include <vector>

#include "adele/finite_adele.hpp"
#include "adele/numeric.hpp"

namespace adele {

/// A locally constant compactly supported function: supported on the ball
/// a^k, constant on cosets of a^l (l <= k).  Coefficients are indexed by the
/// coset representatives of a^k / a^l, encoded as digit tuples
/// (a_{-k}, ..., a_{-l-1}) in lexicographic order with the leftmost digit
/// most significant.
class TestFunction {
public:
    TestFunction(const RadixTable& table, long support, long constancy,
                 std::vector<Complex> coeffs);

    long support() const noexcept { return support_; }
    long constancy() const noexcept { return constancy_; }
    const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }

private:
    long support_;
    long constancy_;
    std::vector<Complex> coeffs_;
};

/// psi_exp(k)/psi_exp(l) as a plain count; throws domain_error when the
/// coefficient table would be unreasonably large.
long dimension(const RadixTable& table, long support, long constancy);

/// Coset representative (an exact rational) behind coefficient `index`.
Rat representative(const RadixTable& table, const TestFunction& f, long index);

/// Indicator of center + a^l, placed in the smallest space containing it
/// (support index max(l, -ord(center)); the zero center sits in Zhat scale).
/// The center must be known modulo a^l.
TestFunction indicator(const RadixTable& table, long constancy, const FiniteAdele& center);

/// Coefficient of x's coset, or 0 outside the support ball; x must be known
/// modulo a^l.
Complex eval(const RadixTable& table, const TestFunction& f, const FiniteAdele& x);

/// Haar integral: psi_exp(l) * (sum of coefficients).
Complex integrate(const RadixTable& table, const TestFunction& f);

/// Re-express f inside the larger space (support2 >= support,
/// constancy2 <= constancy); evaluation and integral are unchanged.
TestFunction refine(const RadixTable& table, const TestFunction& f, long support2,
                    long constancy2);

/// (Ff)(xi) = integral of f(x) e(chi(xi x)) dx; lands in the dual space with
/// support -l and constancy -k.  Phases are exact rotation numbers
/// exponentiated once.
TestFunction fourier(const RadixTable& table, const TestFunction& f);

/// Conjugate-pairing inverse; inverse_fourier(fourier(f)) == f up to
/// floating rounding.
TestFunction inverse_fourier(const RadixTable& table, const TestFunction& f);

/// L2 pairing: refine both to the common space, then psi_exp(l) * sum f conj(g).
Complex inner_product(const RadixTable& table, const TestFunction& f, const TestFunction& g);

} // namespace adele

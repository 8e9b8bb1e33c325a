#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "treeinv/bigint.hpp"
#include "treeinv/pattern_set.hpp"

namespace treeinv {

/// Truncated polynomial arithmetic on dense coefficient vectors (index = exponent).
namespace poly {

using Coefficients = std::vector<BigInt>;

/// a * b with every exponent above `order` dropped.
Coefficients multiply(const Coefficients& a, const Coefficients& b, std::size_t order);
Coefficients add(const Coefficients& a, const Coefficients& b);
Coefficients scale(const Coefficients& a, const BigInt& s);
/// Multiplies by t^shift.
Coefficients shift(const Coefficients& a, std::size_t shift);
/// True iff every coefficient up to `order` vanishes.
bool is_zero(const Coefficients& a, std::size_t order);

} // namespace poly

/// A formal power series c_1 t + ... + c_N t^N with integer coefficients,
/// exact modulo t^(N+1). The constant term is always zero.
class IntSeries {
public:
    explicit IntSeries(std::size_t order = 0);
    /// `coefficients[j]` multiplies t^j; missing entries are zero. Throws
    /// std::invalid_argument if coefficients[0] != 0 or a nonzero entry exceeds the order.
    IntSeries(std::size_t order, std::vector<BigInt> coefficients);

    /// The series t.
    static IntSeries identity(std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    /// Coefficient of t^j; zero above the order.
    BigInt coefficient(std::size_t j) const;
    /// Coefficients of t^0..t^N.
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

    bool is_identity() const;
    /// Smallest j with a nonzero coefficient.
    std::optional<std::size_t> lowest_term() const;

    /// Sparse signed monomials, e.g. "-t + t^2 - 2t^3"; "0" for the zero series.
    std::string to_string() const;

    friend IntSeries operator+(const IntSeries& a, const IntSeries& b);
    friend IntSeries operator-(const IntSeries& a, const IntSeries& b);
    friend IntSeries operator*(const IntSeries& a, const IntSeries& b);
    friend bool operator==(const IntSeries&, const IntSeries&) = default;

private:
    std::vector<BigInt> coeffs_;
};

/// f(g(t)) mod t^(N+1). Throws std::invalid_argument on an order mismatch.
IntSeries compose(const IntSeries& f, const IntSeries& g);

/// The compositional inverse. Throws NotInvertible unless c_1 = +-1.
IntSeries invert(const IntSeries& f);

/// sum (-1)^(n+1) a_n t^(n+1). Needs order <= a.size().
IntSeries alternating_series(std::span<const BigInt> a, std::size_t order);

enum class LacunaryVariant { F, G };

/// F: sum (-1)^(n+1) a_n t^((k-1)n+1).  G: -sum (-1)^((k+1)n) a_n t^((k-1)n+1).
/// Throws std::invalid_argument if `a` is too short for the order.
IntSeries lacunary_series(std::span<const BigInt> a, int arity, LacunaryVariant variant,
                          std::size_t order);

/// Number of terms a_0..a_n needed for a lacunary series of the given order.
std::size_t lacunary_terms_needed(int arity, std::size_t order);

/// numerator / denominator with integer polynomial coefficients (index = exponent).
struct RationalForm {
    std::vector<BigInt> numerator;
    std::vector<BigInt> denominator;
};

/// Maclaurin expansion. Throws std::invalid_argument unless the denominator's
/// constant term is +-1 and the numerator's constant term is 0.
IntSeries expand(const RationalForm& r, std::size_t order);

struct InversionReport {
    bool holds = false;
    int arity = 2;
    std::vector<BigInt> x_counts;
    std::vector<BigInt> z_counts;
    IntSeries outer;     ///< f(X, .) for binary; g^(k)(Z, .) otherwise
    IntSeries inner;     ///< f(Z, .) for binary; f^(k)(X, .) otherwise
    IntSeries composite; ///< outer(inner(t))
    IntSeries residual;  ///< composite - t
    std::optional<std::size_t> first_bad_exponent;
};

/// Checks f(X, f(Z,t)) = t (binary) or g^(k)(Z, f^(k)(X,t)) = t (arity k > 2)
/// modulo t^(order+1), with counts from count_dp. Z is the complement of X.
InversionReport verify_inversion(const PatternSet& x, std::size_t order);

enum class FunctionalEquation {
    Catalan,      ///< t c(t)^2 - c(t) + 1 = 0, c_n = #X_n for X = Y_2, #I = 1
    SuperCatalan, ///< 2t C(t)^2 - (1+t) C(t) + 1 = 0, C_0 = 1, C_n = #X_n / 2 in example (c)
};

/// Checks the identity on ordinary generating-function coefficients C_0..C_order.
bool functional_equation_holds(FunctionalEquation eq, std::span<const BigInt> coefficients,
                               std::size_t order);

/// Checks the identity on counted coefficients.
bool functional_equation_check(FunctionalEquation eq, std::size_t order = 12);

/// The counted ordinary coefficients the check above uses.
std::vector<BigInt> functional_equation_coefficients(FunctionalEquation eq, std::size_t order);

} // namespace treeinv

#include "treeinv/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "treeinv/avoidance.hpp"
#include "treeinv/errors.hpp"

namespace treeinv {

namespace poly {

Coefficients multiply(const Coefficients& a, const Coefficients& b, std::size_t order)
{
    Coefficients out(std::min(order + 1, a.size() + b.size()), 0);
    for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size() && i + j <= order; ++j)
            if (b[j] != 0)
                out[i + j] += a[i] * b[j];
    }
    return out;
}

Coefficients add(const Coefficients& a, const Coefficients& b)
{
    Coefficients out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] += b[i];
    return out;
}

Coefficients scale(const Coefficients& a, const BigInt& s)
{
    Coefficients out(a);
    for (auto& c : out)
        c *= s;
    return out;
}

Coefficients shift(const Coefficients& a, std::size_t by)
{
    Coefficients out(by, 0);
    out.insert(out.end(), a.begin(), a.end());
    return out;
}

bool is_zero(const Coefficients& a, std::size_t order)
{
    for (std::size_t i = 0; i < a.size() && i <= order; ++i)
        if (a[i] != 0)
            return false;
    return true;
}

} // namespace poly

// --- IntSeries -------------------------------------------------------------

IntSeries::IntSeries(std::size_t order) : coeffs_(order + 1, 0) {}

IntSeries::IntSeries(std::size_t order, std::vector<BigInt> coefficients) : coeffs_(order + 1, 0)
{
    if (!coefficients.empty() && coefficients[0] != 0)
        throw std::invalid_argument("an IntSeries has zero constant term");
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
        if (j > order) {
            if (coefficients[j] != 0)
                throw std::invalid_argument("coefficient of t^" + std::to_string(j) +
                                            " exceeds the truncation order " + std::to_string(order));
            continue;
        }
        coeffs_[j] = std::move(coefficients[j]);
    }
}

IntSeries IntSeries::identity(std::size_t order)
{
    IntSeries s(order);
    if (order >= 1)
        s.coeffs_[1] = 1;
    return s;
}

BigInt IntSeries::coefficient(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : BigInt(0); }

bool IntSeries::is_identity() const { return *this == identity(order()); }

std::optional<std::size_t> IntSeries::lowest_term() const
{
    for (std::size_t j = 1; j < coeffs_.size(); ++j)
        if (coeffs_[j] != 0)
            return j;
    return std::nullopt;
}

std::string IntSeries::to_string() const
{
    std::string out;
    for (std::size_t j = 1; j < coeffs_.size(); ++j) {
        const BigInt& c = coeffs_[j];
        if (c == 0)
            continue;
        const bool negative = c < 0;
        BigInt mag = abs(c);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (mag != 1)
            out += mag.get_str();
        out += 't';
        if (j > 1)
            out += '^' + std::to_string(j);
    }
    return out.empty() ? "0" : out;
}

namespace {

void require_same_order(const IntSeries& a, const IntSeries& b)
{
    if (a.order() != b.order())
        throw std::invalid_argument("series orders differ: " + std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()));
}

} // namespace

IntSeries operator+(const IntSeries& a, const IntSeries& b)
{
    require_same_order(a, b);
    return IntSeries(a.order(), poly::add(a.coeffs_, b.coeffs_));
}

IntSeries operator-(const IntSeries& a, const IntSeries& b)
{
    require_same_order(a, b);
    return IntSeries(a.order(), poly::add(a.coeffs_, poly::scale(b.coeffs_, -1)));
}

IntSeries operator*(const IntSeries& a, const IntSeries& b)
{
    require_same_order(a, b);
    return IntSeries(a.order(), poly::multiply(a.coeffs_, b.coeffs_, a.order()));
}

IntSeries compose(const IntSeries& f, const IntSeries& g)
{
    require_same_order(f, g);
    const std::size_t n = f.order();
    const auto& c = f.coefficients();
    const auto& inner = g.coefficients();
    // Horner: (((c_N g + c_{N-1}) g + ...) + c_1) g
    poly::Coefficients acc{n >= 1 ? c[n] : BigInt(0)};
    for (std::size_t j = n; j-- > 1;) {
        acc = poly::multiply(acc, inner, n);
        acc[0] += c[j];
    }
    acc = poly::multiply(acc, inner, n);
    return IntSeries(n, std::move(acc));
}

IntSeries invert(const IntSeries& f)
{
    const std::size_t n = f.order();
    if (n == 0)
        return IntSeries(0);
    const BigInt c1 = f.coefficient(1);
    if (c1 != 1 && c1 != -1)
        throw NotInvertible("linear coefficient " + c1.get_str() + " is not a unit; the inverse is not integral");
    std::vector<BigInt> g(n + 1, 0);
    g[1] = c1;
    for (std::size_t j = 2; j <= n; ++j) {
        // With g_j = 0, [t^j] f(g) collects every contribution except c1 * g_j.
        IntSeries partial(n, g);
        BigInt rest = compose(f, partial).coefficient(j);
        g[j] = -c1 * rest;
    }
    return IntSeries(n, std::move(g));
}

IntSeries alternating_series(std::span<const BigInt> a, std::size_t order)
{
    if (order > a.size())
        throw std::invalid_argument("alternating series of order " + std::to_string(order) + " needs " +
                                    std::to_string(order) + " terms, got " + std::to_string(a.size()));
    std::vector<BigInt> c(order + 1, 0);
    for (std::size_t n = 0; n + 1 <= order; ++n)
        c[n + 1] = (n % 2 == 0) ? BigInt(-a[n]) : a[n];
    return IntSeries(order, std::move(c));
}

std::size_t lacunary_terms_needed(int arity, std::size_t order)
{
    if (order == 0)
        return 0;
    return (order - 1) / static_cast<std::size_t>(arity - 1) + 1;
}

IntSeries lacunary_series(std::span<const BigInt> a, int arity, LacunaryVariant variant, std::size_t order)
{
    if (arity < 2)
        throw std::invalid_argument("arity must be at least 2");
    const std::size_t needed = lacunary_terms_needed(arity, order);
    if (a.size() < needed)
        throw std::invalid_argument("lacunary series of order " + std::to_string(order) + " needs " +
                                    std::to_string(needed) + " terms, got " + std::to_string(a.size()));
    const auto step = static_cast<std::size_t>(arity - 1);
    std::vector<BigInt> c(order + 1, 0);
    for (std::size_t n = 0; n < needed; ++n) {
        bool negative;
        if (variant == LacunaryVariant::F)
            negative = n % 2 == 0;
        else
            negative = ((static_cast<std::size_t>(arity) + 1) * n) % 2 == 0;
        c[step * n + 1] = negative ? BigInt(-a[n]) : a[n];
    }
    return IntSeries(order, std::move(c));
}

IntSeries expand(const RationalForm& r, std::size_t order)
{
    if (r.denominator.empty() || (r.denominator[0] != 1 && r.denominator[0] != -1))
        throw std::invalid_argument("denominator constant term must be +-1");
    if (!r.numerator.empty() && r.numerator[0] != 0)
        throw std::invalid_argument("numerator constant term must be 0");
    const BigInt& q0 = r.denominator[0];
    std::vector<BigInt> c(order + 1, 0);
    for (std::size_t j = 1; j <= order; ++j) {
        BigInt acc = j < r.numerator.size() ? r.numerator[j] : BigInt(0);
        for (std::size_t i = 1; i <= j && i < r.denominator.size(); ++i)
            acc -= r.denominator[i] * c[j - i];
        c[j] = q0 * acc;
    }
    return IntSeries(order, std::move(c));
}

InversionReport verify_inversion(const PatternSet& x, std::size_t order)
{
    InversionReport report;
    report.arity = x.arity();
    const PatternSet z = complement(x);
    if (x.arity() == 2) {
        const std::size_t terms = order == 0 ? 0 : order - 1;
        report.x_counts = coefficient_sequence(x, terms);
        report.z_counts = coefficient_sequence(z, terms);
        report.outer = alternating_series(report.x_counts, order);
        report.inner = alternating_series(report.z_counts, order);
    } else {
        const std::size_t needed = lacunary_terms_needed(x.arity(), order);
        const std::size_t top = needed == 0 ? 0 : needed - 1;
        report.x_counts = coefficient_sequence(x, top);
        report.z_counts = coefficient_sequence(z, top);
        report.outer = lacunary_series(report.z_counts, x.arity(), LacunaryVariant::G, order);
        report.inner = lacunary_series(report.x_counts, x.arity(), LacunaryVariant::F, order);
    }
    report.composite = compose(report.outer, report.inner);
    report.residual = report.composite - IntSeries::identity(order);
    report.first_bad_exponent = report.residual.lowest_term();
    report.holds = !report.first_bad_exponent.has_value();
    return report;
}

// --- functional equations --------------------------------------------------

bool functional_equation_holds(FunctionalEquation eq, std::span<const BigInt> coefficients, std::size_t order)
{
    if (coefficients.size() < order + 1)
        throw std::invalid_argument("functional equation check of order " + std::to_string(order) +
                                    " needs " + std::to_string(order + 1) + " coefficients");
    poly::Coefficients c(coefficients.begin(), coefficients.begin() + static_cast<long>(order + 1));
    poly::Coefficients square = poly::multiply(c, c, order);
    poly::Coefficients lhs;
    if (eq == FunctionalEquation::Catalan) {
        // t c^2 - c + 1
        lhs = poly::add(poly::shift(square, 1), poly::scale(c, -1));
        lhs[0] += 1;
    } else {
        // 2t C^2 - (1+t) C + 1
        lhs = poly::add(poly::scale(poly::shift(square, 1), 2),
                        poly::scale(poly::add(c, poly::shift(c, 1)), -1));
        lhs[0] += 1;
    }
    return poly::is_zero(lhs, order);
}

std::vector<BigInt> functional_equation_coefficients(FunctionalEquation eq, std::size_t order)
{
    if (eq == FunctionalEquation::Catalan)
        return coefficient_sequence(PatternSet::full(Alphabet::numbered(1), 2), order);

    // I = {1,2}, Z = {(L;1,1), (R;2,2)}: #X_n is twice the super Catalan number for n >= 1.
    const Alphabet ab = Alphabet::numbered(2);
    PatternSet z(ab, 2, {Pattern::binary(Assoc::L, label_at(0), label_at(0)),
                         Pattern::binary(Assoc::R, label_at(1), label_at(1))});
    auto a = coefficient_sequence(complement(z), order);
    std::vector<BigInt> c(order + 1);
    c[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        if (!mpz_even_p(a[n].get_mpz_t()))
            throw InvariantViolation("#X_" + std::to_string(n) + " of example (c) is odd");
        c[n] = a[n] / 2;
    }
    return c;
}

bool functional_equation_check(FunctionalEquation eq, std::size_t order)
{
    return functional_equation_holds(eq, functional_equation_coefficients(eq, order), order);
}

} // namespace treeinv

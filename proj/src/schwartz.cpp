#include "adele/schwartz.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <utility>

#include "adele/errors.hpp"
#include "adele/radix_table.hpp"

namespace adele {

namespace {

constexpr long kMaxDimension = 1L << 22;

Complex unit_phase(const Rat& rotation) {
    const double angle = 2.0 * std::numbers::pi * to_double(rotation);
    return Complex(std::cos(angle), std::sin(angle));
}

// Representatives of the digit positions [lo, hi), lexicographic with the
// leftmost (lowest) position most significant.
std::vector<Rat> lattice_reps(const RadixTable& table, long lo, long hi) {
    std::vector<Rat> reps{Rat(0)};
    for (long pos = lo; pos < hi; ++pos) {
        const long r = table.radix(pos);
        std::vector<Rat> next;
        next.reserve(reps.size() * static_cast<size_t>(r));
        for (const Rat& base : reps)
            for (long a = 0; a < r; ++a) next.push_back(base + Rat(a) * table.psi_exp(pos));
        reps = std::move(next);
    }
    return reps;
}

std::vector<long> decode_tuple(const RadixTable& table, long lo, long hi, long index) {
    std::vector<long> digits(static_cast<size_t>(hi - lo), 0);
    for (long pos = hi - 1; pos >= lo; --pos) {
        const long r = table.radix(pos);
        digits[static_cast<size_t>(pos - lo)] = index % r;
        index /= r;
    }
    return digits;
}

// Pairing matrix for the space (k, l): rows run over representatives of
// positions [l, k) (the dual side), columns over positions [-k, -l).
// Append-only cache; entries are immutable once built.
std::shared_ptr<const std::vector<Complex>> phase_matrix(const RadixTable& table, long k, long l) {
    static std::mutex cache_mutex;
    static std::map<std::pair<long, long>, std::shared_ptr<const std::vector<Complex>>> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        const auto it = cache.find({k, l});
        if (it != cache.end()) return it->second;
    }
    const std::vector<Rat> duals = lattice_reps(table, l, k);
    const std::vector<Rat> points = lattice_reps(table, -k, -l);
    const size_t d = points.size();
    auto matrix = std::make_shared<std::vector<Complex>>(d * d);
    for (size_t v = 0; v < d; ++v)
        for (size_t u = 0; u < d; ++u)
            (*matrix)[v * d + u] = unit_phase(mod_one(duals[v] * points[u]));
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.try_emplace({k, l}, std::move(matrix)).first->second;
}

long coset_index(const RadixTable& table, long k, long l, const FiniteAdele& x) {
    long index = 0;
    for (long pos = -k; pos < -l; ++pos) index = index * table.radix(pos) + x.digit(pos);
    return index;
}

} // namespace

long dimension(const RadixTable& table, long support, long constancy) {
    if (constancy > support) throw domain_error("constancy index exceeds support index");
    const Rat d = table.psi_exp(support) / table.psi_exp(constancy);
    const Int n = numerator(d);
    if (denominator(d) != 1 || n > kMaxDimension)
        throw domain_error("coefficient table too large");
    return n.convert_to<long>();
}

TestFunction::TestFunction(const RadixTable& table, long support, long constancy,
                           std::vector<Complex> coeffs)
    : support_(support), constancy_(constancy), coeffs_(std::move(coeffs)) {
    const long d = dimension(table, support, constancy);
    if (static_cast<long>(coeffs_.size()) != d)
        throw domain_error("coefficient count does not match the space dimension");
}

Rat representative(const RadixTable& table, const TestFunction& f, long index) {
    if (index < 0 || index >= static_cast<long>(f.coeffs().size()))
        throw domain_error("coefficient index out of range");
    const auto tuple = decode_tuple(table, -f.support(), -f.constancy(), index);
    Rat value = 0;
    for (size_t i = 0; i < tuple.size(); ++i)
        value += Rat(tuple[i]) * table.psi_exp(-f.support() + static_cast<long>(i));
    return value;
}

TestFunction indicator(const RadixTable& table, long constancy, const FiniteAdele& center) {
    if (center.precision() < -constancy)
        throw precision_error("center is not known modulo the constancy ball");
    const long anchor = center.is_zero_to_precision() ? 0 : -center.order();
    const long k = std::max(constancy, anchor);
    std::vector<Complex> coeffs(static_cast<size_t>(dimension(table, k, constancy)), Complex(0));
    coeffs[static_cast<size_t>(coset_index(table, k, constancy, center))] = Complex(1);
    return TestFunction(table, k, constancy, std::move(coeffs));
}

Complex eval(const RadixTable& table, const TestFunction& f, const FiniteAdele& x) {
    if (x.precision() < -f.constancy())
        throw precision_error("point is not known modulo the constancy ball");
    if (!x.is_zero_to_precision() && x.order() < -f.support()) return Complex(0);
    return f.coeffs()[static_cast<size_t>(coset_index(table, f.support(), f.constancy(), x))];
}

Complex integrate(const RadixTable& table, const TestFunction& f) {
    Complex sum = 0;
    for (const Complex& c : f.coeffs()) sum += c;
    return sum * to_double(table.psi_exp(f.constancy()));
}

TestFunction refine(const RadixTable& table, const TestFunction& f, long support2,
                    long constancy2) {
    if (support2 < f.support() || constancy2 > f.constancy())
        throw domain_error("refinement must enlarge the space");
    const long d2 = dimension(table, support2, constancy2);
    std::vector<Complex> coeffs(static_cast<size_t>(d2), Complex(0));
    for (long i = 0; i < d2; ++i) {
        const auto tuple = decode_tuple(table, -support2, -constancy2, i);
        bool outside = false;
        long inner = 0;
        for (long pos = -support2; pos < -constancy2; ++pos) {
            const long a = tuple[static_cast<size_t>(pos + support2)];
            if (pos < -f.support()) {
                if (a != 0) outside = true;  // leaves the original support ball
            } else if (pos < -f.constancy()) {
                inner = inner * table.radix(pos) + a;
            }
        }
        if (!outside) coeffs[static_cast<size_t>(i)] = f.coeffs()[static_cast<size_t>(inner)];
    }
    return TestFunction(table, support2, constancy2, std::move(coeffs));
}

TestFunction fourier(const RadixTable& table, const TestFunction& f) {
    const long k = f.support();
    const long l = f.constancy();
    const auto matrix = phase_matrix(table, k, l);
    const size_t d = f.coeffs().size();
    const double scale = to_double(table.psi_exp(l));
    std::vector<Complex> out(d, Complex(0));
    for (size_t v = 0; v < d; ++v) {
        Complex acc = 0;
        for (size_t u = 0; u < d; ++u) acc += (*matrix)[v * d + u] * f.coeffs()[u];
        out[v] = acc * scale;
    }
    return TestFunction(table, -l, -k, std::move(out));
}

TestFunction inverse_fourier(const RadixTable& table, const TestFunction& f) {
    const long k = f.support();
    const long l = f.constancy();
    // The output space's pairing matrix has rows indexed by this function's
    // own representatives, so one cache serves both directions.
    const auto matrix = phase_matrix(table, -l, -k);
    const size_t d = f.coeffs().size();
    const double scale = to_double(table.psi_exp(l));
    std::vector<Complex> out(d, Complex(0));
    for (size_t u = 0; u < d; ++u) {
        Complex acc = 0;
        for (size_t v = 0; v < d; ++v) acc += std::conj((*matrix)[v * d + u]) * f.coeffs()[v];
        out[u] = acc * scale;
    }
    return TestFunction(table, -l, -k, std::move(out));
}

Complex inner_product(const RadixTable& table, const TestFunction& f, const TestFunction& g) {
    const long k = std::max(f.support(), g.support());
    const long l = std::min(f.constancy(), g.constancy());
    const TestFunction fr = refine(table, f, k, l);
    const TestFunction gr = refine(table, g, k, l);
    Complex sum = 0;
    for (size_t i = 0; i < fr.coeffs().size(); ++i)
        sum += fr.coeffs()[i] * std::conj(gr.coeffs()[i]);
    return sum * to_double(table.psi_exp(l));
}

} // namespace adele

#include "mapenum/counts.hpp"

#include "mapenum/errors.hpp"

namespace mapenum {

ReversionSeries revert(long subst_coeff, std::size_t order) {
    if (subst_coeff < 1 || order < 1)
        throw EngineError(ErrorKind::InvalidArgument, "reversion needs a >= 1 and order >= 1");
    // t = s + a t^2; each pass fixes at least one more coefficient.
    std::vector<Rat> t(order + 1);
    for (std::size_t pass = 0; pass <= order; ++pass) {
        std::vector<Rat> next = series_mul(t, t, order);
        for (auto& x : next)
            x *= subst_coeff;
        next[1] += 1;
        if (next == t)
            break;
        t = std::move(next);
    }
    return {subst_coeff, order, std::move(t)};
}

std::vector<Rat> compose(std::span<const Rat> series, const ReversionSeries& rev, std::size_t order) {
    if (rev.order < order)
        throw EngineError(ErrorKind::InvalidArgument, "reversion series is shorter than the requested order");
    std::vector<Rat> acc(order + 1);
    if (series.empty())
        return acc;
    const std::size_t top = std::min(series.size() - 1, order);
    acc[0] = series[top];
    for (std::size_t j = top; j-- > 0;) {
        acc = series_mul(acc, rev.coeffs, order);
        acc[0] += series[j];
    }
    return acc;
}

std::size_t first_nonzero_index(ModelKind kind, unsigned g) {
    return kind == ModelKind::Hypermap ? 2 * g + 1 : 2 * g;
}

namespace {

void check_support(const CountTable& table) {
    const std::size_t first = first_nonzero_index(table.kind, table.genus);
    for (std::size_t n = 0; n < table.counts.size(); ++n) {
        const bool zero = table.counts[n] == 0;
        if ((n < first && !zero) || (n == first && zero))
            throw EngineError(ErrorKind::InvariantViolation,
                              std::string(to_string(table.kind)) + " genus " + std::to_string(table.genus)
                                  + ": count at n = " + std::to_string(n) + " is " + to_decimal(table.counts[n])
                                  + ", first nonzero index should be " + std::to_string(first));
    }
}

} // namespace

CountTable counts_from_solution(const ModelSpec& model, const GenusSolution& sol, const ReversionSeries& rev,
                                std::size_t max_n) {
    if (rev.subst_coeff != model.subst_coeff)
        throw EngineError(ErrorKind::InvalidArgument, "reversion series belongs to another substitution");
    const std::vector<Rat> in_t = series_expand(sol.c_of_t, max_n);
    const std::vector<Rat> in_s = compose(in_t, rev, max_n);

    CountTable table{model.kind, sol.genus, {}};
    table.counts.reserve(in_s.size());
    for (std::size_t n = 0; n < in_s.size(); ++n) {
        const Rat& q = in_s[n];
        if (!is_integer(q))
            throw EngineError(ErrorKind::NonIntegerCount, "coefficient of s^" + std::to_string(n) + " is " + q.get_str());
        if (q < 0)
            throw EngineError(ErrorKind::NegativeCount, "coefficient of s^" + std::to_string(n) + " is " + q.get_str());
        table.counts.push_back(q.get_num());
    }
    check_support(table);
    return table;
}

CountTable counts_by_recursion(ModelKind kind, unsigned g, std::size_t max_n, std::span<const CountTable> lower) {
    if (lower.size() < g)
        throw EngineError(ErrorKind::MissingGenus, "recursion for genus " + std::to_string(g) + " needs genera 0.."
                                                       + std::to_string(g - 1));
    for (unsigned i = 0; i < g; ++i)
        if (lower[i].counts.size() < max_n + 1)
            throw EngineError(ErrorKind::MissingGenus, "genus " + std::to_string(i) + " table is too short");

    CountTable out{kind, g, std::vector<BigInt>(max_n + 1)};
    auto count = [&](unsigned genus, long n) -> const BigInt& {
        static const BigInt zero = 0;
        if (n < 0)
            return zero;
        return genus == g ? out.counts[static_cast<std::size_t>(n)] : lower[genus].counts[static_cast<std::size_t>(n)];
    };

    for (long n = 0; n <= static_cast<long>(max_n); ++n) {
        BigInt rhs = 0;
        if (kind == ModelKind::Hypermap) {
            // coefficient of s^n in
            // (sC_g)' = 3(2s^2 C_g' + s C_g) + 3 s^3 C_g' + s^3 (s (s C_{g-1})')''
            //           + s^3 sum_i (4 C_i + 6 s C_i') C_{g-i}' + 2 s [g = 0]
            rhs += 3 * (2 * n - 1) * count(g, n - 1);
            rhs += 3 * (n - 2) * count(g, n - 2);
            if (g > 0)
                rhs += (n - 1) * (n - 1) * (n - 2) * count(g - 1, n - 2);
            for (unsigned i = 0; i <= g; ++i)
                for (long j = 0; j <= n - 2; ++j)
                    rhs += (4 + 6 * j) * (n - 2 - j) * count(i, j) * count(g - i, n - 2 - j);
            if (g == 0 && n == 1)
                rhs += 2;
        } else {
            rhs += 4 * (2 * n - 1) * count(g, n - 1);
            if (g > 0)
                rhs += (2 * n - 1) * (2 * n - 3) * (n - 1) * count(g - 1, n - 2);
            BigInt conv = 0;
            for (unsigned i = 0; i <= g; ++i)
                for (long j = 0; j <= n - 2; ++j)
                    conv += (2 * j + 1) * (2 * (n - 2 - j) + 1) * count(i, j) * count(g - i, n - 2 - j);
            rhs += 3 * conv;
            if (g == 0 && n == 0)
                rhs += 1;
        }
        if (rhs % (n + 1) != 0)
            throw EngineError(ErrorKind::NonIntegerCount, "recursion gives (n+1) c = " + to_decimal(rhs) + " at n = "
                                                              + std::to_string(n));
        out.counts[static_cast<std::size_t>(n)] = rhs / (n + 1);
        if (out.counts[static_cast<std::size_t>(n)] < 0)
            throw EngineError(ErrorKind::NegativeCount, "recursion gives a negative count at n = " + std::to_string(n));
    }
    check_support(out);
    return out;
}

std::vector<CountTable> counts_by_recursion_all(ModelKind kind, unsigned max_genus, std::size_t max_n) {
    std::vector<CountTable> tables;
    for (unsigned g = 0; g <= max_genus; ++g)
        tables.push_back(counts_by_recursion(kind, g, max_n, tables));
    return tables;
}

std::vector<std::size_t> monotonicity_violations(const CountTable& table) {
    std::vector<std::size_t> out;
    const std::size_t first = first_nonzero_index(table.kind, table.genus);
    for (std::size_t n = first + 1; n < table.counts.size(); ++n)
        if (table.counts[n] < table.counts[n - 1])
            out.push_back(n);
    return out;
}

} // namespace mapenum

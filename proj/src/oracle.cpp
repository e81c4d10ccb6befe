#include "mapenum/oracle.hpp"

#include "mapenum/errors.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <numeric>
#include <string>

namespace mapenum::oracle {

namespace {

constexpr std::size_t kMaxDarts = 16;
using Buf = std::array<std::uint8_t, kMaxDarts>;

std::size_t cycles(const std::uint8_t* p, std::size_t d) {
    std::uint32_t seen = 0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < d; ++i) {
        if (seen >> i & 1u)
            continue;
        ++count;
        for (std::size_t j = i; !(seen >> j & 1u); j = p[j])
            seen |= 1u << j;
    }
    return count;
}

bool transitive(const std::uint8_t* a, const std::uint8_t* b, std::size_t d) {
    std::uint32_t seen = 1;
    std::array<std::uint8_t, kMaxDarts> stack{};
    std::size_t top = 0;
    stack[top++] = 0;
    while (top > 0) {
        const std::uint8_t x = stack[--top];
        for (std::uint8_t y : {a[x], b[x]}) {
            if (!(seen >> y & 1u)) {
                seen |= 1u << y;
                stack[top++] = y;
            }
        }
    }
    return seen == (d == 32 ? ~0u : (1u << d) - 1);
}

/// Per-genus tallies of one worker.
using Tally = std::vector<std::uint64_t>;

void record(Tally& tally, long twice_genus, std::size_t size) {
    if (twice_genus < 0 || twice_genus % 2 != 0)
        throw EngineError(ErrorKind::InvariantViolation,
                          "Euler characteristic gives genus " + std::to_string(twice_genus) + "/2 at size "
                              + std::to_string(size));
    const auto g = static_cast<std::size_t>(twice_genus / 2);
    if (g >= tally.size())
        tally.resize(g + 1);
    ++tally[g];
}

/// Calls visit(sigma) for every permutation of {0..d-1} with sigma(0) = first,
/// in lexicographic order.
template <typename Visit>
void for_each_with_first(std::size_t d, std::uint8_t first, Visit&& visit) {
    Buf sigma{};
    sigma[0] = first;
    std::size_t k = 1;
    for (std::uint8_t v = 0; v < d; ++v)
        if (v != first)
            sigma[k++] = v;
    do {
        visit(sigma.data());
    } while (std::next_permutation(sigma.begin() + 1, sigma.begin() + static_cast<long>(d)));
}

/// Splits the enumeration by sigma(0) across workers and merges tallies.
template <typename Work>
Tally run_partitioned(std::size_t d, unsigned jobs, Work work) {
    const unsigned workers = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(d));
    auto body = [&](unsigned w) {
        Tally t;
        for (std::size_t first = w; first < d; first += workers)
            for_each_with_first(d, static_cast<std::uint8_t>(first), [&](const std::uint8_t* s) { work(t, s); });
        return t;
    };
    std::vector<Tally> parts;
    if (workers == 1) {
        parts.push_back(body(0));
    } else {
        std::vector<std::future<Tally>> futures;
        for (unsigned w = 0; w < workers; ++w)
            futures.push_back(std::async(std::launch::async, body, w));
        for (auto& f : futures)
            parts.push_back(f.get());
    }
    Tally total;
    for (const auto& p : parts) {
        if (p.size() > total.size())
            total.resize(p.size());
        for (std::size_t g = 0; g < p.size(); ++g)
            total[g] += p[g];
    }
    return total;
}

OracleResult finish(std::size_t size, const Tally& tally, const BigInt& multiplier, const BigInt& rootings) {
    OracleResult r;
    r.size = size;
    r.qualifying_pairs = 0;
    for (std::size_t g = 0; g < tally.size(); ++g) {
        const BigInt pairs = BigInt(static_cast<unsigned long>(tally[g])) * multiplier;
        r.qualifying_pairs += pairs;
        if (pairs % rootings != 0)
            throw EngineError(ErrorKind::InexactDivision, "genus " + std::to_string(g) + " pair count "
                                                              + to_decimal(pairs) + " is not divisible by "
                                                              + to_decimal(rootings));
        r.counts_by_genus.push_back(pairs / rootings);
    }
    return r;
}

} // namespace

Perm::Perm(std::vector<std::uint8_t> image) : image_(std::move(image)) {
    std::vector<bool> hit(image_.size());
    for (auto v : image_) {
        if (v >= image_.size() || hit[v])
            throw EngineError(ErrorKind::InvalidArgument, "image is not a bijection");
        hit[v] = true;
    }
}

Perm Perm::identity(std::size_t d) {
    std::vector<std::uint8_t> im(d);
    std::iota(im.begin(), im.end(), std::uint8_t{0});
    return Perm(std::move(im));
}

Perm Perm::compose(const Perm& other) const {
    std::vector<std::uint8_t> im(degree());
    for (std::size_t i = 0; i < degree(); ++i)
        im[i] = image_[other.image_[i]];
    return Perm(std::move(im));
}

std::size_t Perm::cycle_count() const { return cycles(image_.data(), degree()); }

bool Perm::is_fixed_point_free_involution() const {
    for (std::size_t i = 0; i < degree(); ++i)
        if (image_[i] == i || image_[image_[i]] != i)
            return false;
    return true;
}

bool Perm::next() { return std::next_permutation(image_.begin(), image_.end()); }

bool is_transitive(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree() || a.degree() > kMaxDarts)
        throw EngineError(ErrorKind::InvalidArgument, "transitivity needs equal degrees <= 16");
    if (a.degree() == 0)
        return true;
    return transitive(a.image().data(), b.image().data(), a.degree());
}

bool is_transitive_union_find(const Perm& a, const Perm& b) {
    const std::size_t d = a.degree();
    std::vector<std::size_t> parent(d);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = d;
    for (const Perm* p : {&a, &b}) {
        for (std::size_t i = 0; i < d; ++i) {
            const std::size_t ri = find(i), rj = find((*p)(i));
            if (ri != rj) {
                parent[ri] = rj;
                --components;
            }
        }
    }
    return components <= 1;
}

std::vector<Perm> fixed_point_free_involutions(std::size_t darts) {
    std::vector<Perm> out;
    if (darts % 2 != 0)
        return out;
    // lexicographic order over images: pair the smallest free dart with each
    // remaining candidate in increasing order
    std::vector<std::uint8_t> im(darts, 0xff);
    auto rec = [&](auto&& self) -> void {
        auto it = std::find(im.begin(), im.end(), std::uint8_t{0xff});
        if (it == im.end()) {
            out.emplace_back(im);
            return;
        }
        const auto i = static_cast<std::uint8_t>(it - im.begin());
        for (std::uint8_t j = i + 1; j < darts; ++j) {
            if (im[j] != 0xff)
                continue;
            im[i] = j;
            im[j] = i;
            self(self);
            im[i] = im[j] = 0xff;
        }
    };
    if (darts > 0)
        rec(rec);
    return out;
}

OracleResult count_rooted_hypermaps(std::size_t n, const OracleOptions& options) {
    if (n < 1 || n > options.hypermap_bound || n > kMaxDarts)
        throw EngineError(ErrorKind::InvalidArgument, "hypermap oracle size must be in [1, "
                                                          + std::to_string(options.hypermap_bound) + "]");
    // every alpha with its cycle count, lexicographic
    std::vector<Buf> alphas;
    std::vector<std::size_t> alpha_cycles;
    {
        Buf a{};
        std::iota(a.begin(), a.begin() + static_cast<long>(n), std::uint8_t{0});
        do {
            alphas.push_back(a);
            alpha_cycles.push_back(cycles(a.data(), n));
        } while (std::next_permutation(a.begin(), a.begin() + static_cast<long>(n)));
    }

    const Tally tally = run_partitioned(n, options.jobs, [&](Tally& t, const std::uint8_t* sigma) {
        const std::size_t cs = cycles(sigma, n);
        Buf prod{};
        for (std::size_t k = 0; k < alphas.size(); ++k) {
            const std::uint8_t* alpha = alphas[k].data();
            if (!transitive(sigma, alpha, n))
                continue;
            for (std::size_t i = 0; i < n; ++i)
                prod[i] = sigma[alpha[i]];
            const long total = static_cast<long>(cs + alpha_cycles[k] + cycles(prod.data(), n));
            record(t, static_cast<long>(n) + 2 - total, n);
        }
    });
    return finish(n, tally, 1, factorial(n - 1));
}

OracleResult count_rooted_maps(std::size_t n, const OracleOptions& options) {
    const std::size_t bound = options.allow_large_maps ? std::max<std::size_t>(options.map_bound, 5)
                                                       : options.map_bound;
    if (n < 1 || n > bound || 2 * n > kMaxDarts)
        throw EngineError(ErrorKind::InvalidArgument,
                          "map oracle size must be in [1, " + std::to_string(bound) + "]"
                              + (options.allow_large_maps ? "" : "; larger sizes need the opt-in flag"));
    const std::size_t d = 2 * n;
    const bool reduce = options.symmetry_reduction || n > options.map_bound;

    std::vector<Perm> alphas = fixed_point_free_involutions(d);
    const BigInt involution_count = static_cast<unsigned long>(alphas.size());
    if (reduce)
        alphas.resize(1);

    const Tally tally = run_partitioned(d, options.jobs, [&](Tally& t, const std::uint8_t* sigma) {
        const std::size_t cs = cycles(sigma, d);
        Buf prod{};
        for (const Perm& a : alphas) {
            const std::uint8_t* alpha = a.image().data();
            if (!transitive(sigma, alpha, d))
                continue;
            for (std::size_t i = 0; i < d; ++i)
                prod[i] = sigma[alpha[i]];
            const long chi = static_cast<long>(cs + cycles(prod.data(), d)) - static_cast<long>(n);
            record(t, 2 - chi, n);
        }
    });
    return finish(n, tally, reduce ? involution_count : BigInt(1), factorial(d - 1));
}

} // namespace mapenum::oracle

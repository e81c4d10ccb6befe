#ifndef MAPENUM_ORACLE_HPP
#define MAPENUM_ORACLE_HPP

#include "mapenum/rational.hpp"

#include <cstdint>
#include <vector>

namespace mapenum::oracle {

/// Permutation of the darts {0..d-1}; image[i] is where dart i goes.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<std::uint8_t> image);
    static Perm identity(std::size_t d);

    std::size_t degree() const noexcept { return image_.size(); }
    std::uint8_t operator()(std::size_t i) const noexcept { return image_[i]; }
    const std::vector<std::uint8_t>& image() const noexcept { return image_; }

    /// (this * other)(i) = this(other(i))
    Perm compose(const Perm& other) const;
    std::size_t cycle_count() const;
    bool is_fixed_point_free_involution() const;

    /// Lexicographically next arrangement; false after the last one.
    bool next();

    friend bool operator==(const Perm&, const Perm&) = default;

private:
    std::vector<std::uint8_t> image_;
};

/// Whether <a, b> acts transitively, by orbit search from dart 0.
bool is_transitive(const Perm& a, const Perm& b);
/// Same question answered with union-find over both functional graphs.
bool is_transitive_union_find(const Perm& a, const Perm& b);

/// All fixed-point-free involutions on 2n darts, lexicographic.
std::vector<Perm> fixed_point_free_involutions(std::size_t darts);

struct OracleOptions {
    unsigned jobs = 1;
    std::size_t hypermap_bound = 7;
    std::size_t map_bound = 4;
    /// Permit map sizes above map_bound (up to 5); those always use the
    /// symmetry reduction.
    bool allow_large_maps = false;
    /// Fix alpha to (0 1)(2 3)... and scale by the number of involutions.
    bool symmetry_reduction = false;
};

struct OracleResult {
    std::size_t size = 0;
    /// counts_by_genus[g] = rooted count of genus g.
    std::vector<BigInt> counts_by_genus;
    /// Transitive pairs before dividing by the number of rootings.
    BigInt qualifying_pairs;

    BigInt count(unsigned g) const { return g < counts_by_genus.size() ? counts_by_genus[g] : BigInt(0); }
};

/// Pairs (sigma, alpha) in S_n^2 with transitive <sigma, alpha>, sorted by
/// genus from c(sigma) + c(alpha) + c(sigma alpha) = n + 2 - 2g and
/// divided by (n-1)!.
OracleResult count_rooted_hypermaps(std::size_t n, const OracleOptions& options = {});

/// Pairs (sigma, alpha) on 2n darts, alpha a fixed-point-free involution,
/// sorted by genus from c(sigma) - n + c(sigma alpha) = 2 - 2g and divided
/// by (2n-1)!.
OracleResult count_rooted_maps(std::size_t n, const OracleOptions& options = {});

} // namespace mapenum::oracle

#endif // MAPENUM_ORACLE_HPP

#ifndef MAPENUM_CLI_HPP
#define MAPENUM_CLI_HPP

#include "mapenum/model.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mapenum::cli {

struct VerifyOptions {
    /// Empty means both models.
    std::vector<ModelKind> models;
    unsigned max_genus = 3;
    std::size_t max_n = 20;
    std::size_t hypermap_oracle_max = 7;
    std::size_t map_oracle_max = 4;
    /// Adds maps with 5 edges to the oracle comparison.
    bool oracle_map_five = false;
    unsigned jobs = 1;
    std::string cache_dir;
};

/// Runs every check and writes one PASS/FAIL/WARN line each, then a summary.
/// Returns true iff no hard check failed.
bool run_verify(const VerifyOptions& options, std::ostream& out);

struct BenchRow {
    ModelKind model = ModelKind::Hypermap;
    unsigned genus = 0;
    double seconds = 0.0;
    std::size_t max_coeff_bits = 0;
    bool cache_hit = false;
};

/// One row per genus 1..max_genus.
std::vector<BenchRow> run_bench(ModelKind model, unsigned max_genus, unsigned jobs, const std::string& cache_dir);

/// Entry point shared by the executable and the tests. Returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace mapenum::cli

#endif // MAPENUM_CLI_HPP

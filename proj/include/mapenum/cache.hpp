#ifndef MAPENUM_CACHE_HPP
#define MAPENUM_CACHE_HPP

#include "mapenum/genus.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace mapenum {

/// Persistent per-model store of genus solutions.
///
/// One file per model, `<model>.json`:
///   {"format_version": 1, "model": "...", "records": [<solution_to_json>...]}
/// Nothing loaded is trusted: each record is re-validated and checked
/// against the genus ODE before it enters a table.
class ResultCache {
public:
    static constexpr int kFormatVersion = 1;
    static constexpr const char* kEnvVar = "MAPENUM_CACHE_DIR";

    explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    /// --cache-dir if given, else the environment override, else none.
    static std::optional<ResultCache> resolve(const std::string& flag);

    const std::filesystem::path& dir() const noexcept { return dir_; }
    std::filesystem::path file_for(ModelKind kind) const;

    struct Rejection {
        unsigned genus = 0;
        std::string reason;
    };

    struct LoadReport {
        /// Genera accepted into the table, 0..n-1.
        unsigned accepted = 0;
        /// Records refused, plus a whole-file entry (genus 0) if unreadable.
        std::vector<Rejection> rejected;
        bool file_present = false;
    };

    /// Fills an empty table with the longest valid contiguous prefix of the
    /// stored records. Never throws for bad content.
    LoadReport load(GenusTable& table) const;

    /// Writes every solution of the table, replacing the file atomically.
    void save(const GenusTable& table) const;

private:
    std::filesystem::path dir_;
};

} // namespace mapenum

#endif // MAPENUM_CACHE_HPP

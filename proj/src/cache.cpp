#include "mapenum/cache.hpp"

#include "mapenum/checks.hpp"
#include "mapenum/errors.hpp"
#include "mapenum/render.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <unistd.h>

namespace mapenum {

namespace fs = std::filesystem;

std::optional<ResultCache> ResultCache::resolve(const std::string& flag) {
    if (!flag.empty())
        return ResultCache(flag);
    if (const char* env = std::getenv(kEnvVar); env != nullptr && *env != '\0')
        return ResultCache(env);
    return std::nullopt;
}

fs::path ResultCache::file_for(ModelKind kind) const { return dir_ / (std::string(to_string(kind)) + ".json"); }

ResultCache::LoadReport ResultCache::load(GenusTable& table) const {
    LoadReport report;
    const fs::path path = file_for(table.model().kind);
    std::ifstream in(path);
    if (!in)
        return report;
    report.file_present = true;

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
        if (doc.at("format_version").get<int>() != kFormatVersion)
            throw EngineError(ErrorKind::InvalidArgument, "format version " + doc.at("format_version").dump());
        if (doc.at("model").get<std::string>() != to_string(table.model().kind))
            throw EngineError(ErrorKind::InvalidArgument, "file holds model " + doc.at("model").get<std::string>());
        if (!doc.at("records").is_array())
            throw EngineError(ErrorKind::InvalidArgument, "records is not an array");
    } catch (const std::exception& e) {
        report.rejected.push_back({0, std::string("unreadable cache file: ") + e.what()});
        return report;
    }

    std::map<unsigned, nlohmann::json> by_genus;
    for (const auto& rec : doc["records"]) {
        if (rec.is_object() && rec.contains("genus") && rec["genus"].is_number_unsigned())
            by_genus.emplace(rec["genus"].get<unsigned>(), rec);
        else
            report.rejected.push_back({0, "record without a genus"});
    }

    for (unsigned g = static_cast<unsigned>(table.size());; ++g) {
        const auto it = by_genus.find(g);
        if (it == by_genus.end())
            break;
        try {
            GenusTable trial = table;
            GenusSolution sol = solution_from_json(table.model(), it->second);
            trial.push(std::move(sol));
            if (g >= 1 && !ode_residual(trial, g).is_zero())
                throw EngineError(ErrorKind::InvariantViolation, "genus ODE residual is nonzero");
            table = std::move(trial);
            report.accepted = g + 1;
        } catch (const std::exception& e) {
            report.rejected.push_back({g, e.what()});
            break;
        }
    }
    return report;
}

void ResultCache::save(const GenusTable& table) const {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& sol : table.solutions())
        records.push_back(solution_to_json(table.model(), sol));
    const nlohmann::json doc{{"format_version", kFormatVersion},
                             {"model", std::string(to_string(table.model().kind))},
                             {"records", records}};

    fs::create_directories(dir_);
    const fs::path path = file_for(table.model().kind);
    fs::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << doc.dump(1) << '\n';
        out.flush();
        if (!out)
            throw EngineError(ErrorKind::InvalidArgument, "cannot write " + tmp.string());
    }
    fs::rename(tmp, path);
}

} // namespace mapenum

#include "mapenum/cli.hpp"

#include "mapenum/cache.hpp"
#include "mapenum/checks.hpp"
#include "mapenum/counts.hpp"
#include "mapenum/errors.hpp"
#include "mapenum/oracle.hpp"
#include "mapenum/render.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <ostream>
#include <thread>

namespace mapenum::cli {

namespace {

unsigned effective_jobs(unsigned jobs) {
    if (jobs != 0)
        return jobs;
    return std::max(1u, std::thread::hardware_concurrency());
}

ModelKind model_from_flag(const std::string& name) {
    if (auto kind = parse_model_kind(name))
        return *kind;
    throw EngineError(ErrorKind::InvalidArgument, "unknown model '" + name + "'");
}

/// Table through max_genus, reusing and refreshing the cache when one is set.
GenusTable obtain_table(ModelKind kind, unsigned max_genus, unsigned jobs, const std::string& cache_dir) {
    const ModelSpec& model = model_for(kind);
    GenusTable table(model);
    const auto cache = ResultCache::resolve(cache_dir);
    std::size_t loaded = 0;
    bool dirty = false;
    if (cache) {
        const auto report = cache->load(table);
        loaded = report.accepted;
        dirty = !report.rejected.empty();
    }
    extend_table(table, max_genus, jobs);
    if (cache && (dirty || table.size() > loaded))
        cache->save(table);
    return table;
}

class Report {
public:
    explicit Report(std::ostream& out) : out_(out) {}

    void check(bool ok, const std::string& name, const std::string& detail = {}) {
        emit(ok ? "PASS" : "FAIL", name, detail);
        if (ok) {
            ++passed_;
        } else {
            ++failed_;
            if (first_failure_.empty())
                first_failure_ = name;
        }
    }

    void warn(const std::string& name, const std::string& detail) {
        emit("WARN", name, detail);
        ++warnings_;
    }

    template <typename Fn>
    void guarded(const std::string& name, Fn&& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            check(false, name, e.what());
        }
    }

    bool finish() {
        out_ << "summary: " << passed_ << " passed, " << failed_ << " failed, " << warnings_ << " warnings\n";
        if (failed_ > 0)
            out_ << "first failure: " << first_failure_ << '\n';
        return failed_ == 0;
    }

private:
    void emit(const char* tag, const std::string& name, const std::string& detail) {
        out_ << tag << "  " << name;
        if (!detail.empty())
            out_ << ": " << detail;
        out_ << '\n';
    }

    std::ostream& out_;
    std::size_t passed_ = 0, failed_ = 0, warnings_ = 0;
    std::string first_failure_;
};

std::string join_indices(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

void verify_model(ModelKind kind, const VerifyOptions& opt, Report& report) {
    const ModelSpec& model = model_for(kind);
    const std::string tag(to_string(kind));
    const unsigned jobs = effective_jobs(opt.jobs);
    GenusTable table(model);

    const auto cache = ResultCache::resolve(opt.cache_dir);
    bool rewrite = false;
    if (cache) {
        const auto loaded = cache->load(table);
        for (const auto& r : loaded.rejected) {
            report.check(false, "cache " + tag + " g=" + std::to_string(r.genus) + " record", r.reason);
            rewrite = true;
        }
        if (loaded.file_present && loaded.rejected.empty())
            report.check(true, "cache " + tag + " records reloaded");
    }

    try {
        extend_table(table, opt.max_genus, jobs);
    } catch (const std::exception& e) {
        report.check(false, tag + " genus recursion", e.what());
        return;
    }
    if (cache && (rewrite || table.size() > 0))
        cache->save(table);

    std::vector<CountTable> by_recursion;
    report.guarded(tag + " coefficient recursion", [&] {
        by_recursion = counts_by_recursion_all(kind, opt.max_genus, opt.max_n);
    });
    const ReversionSeries rev = revert(model.subst_coeff, opt.max_n);
    std::vector<CountTable> by_series(opt.max_genus + 1);

    for (unsigned g = 0; g <= opt.max_genus; ++g) {
        const GenusSolution& sol = table.at(g);
        const std::string gtag = tag + " g=" + std::to_string(g);

        report.guarded(gtag + " invariants", [&] {
            validate_solution(model, sol);
            report.check(true, gtag + " invariants");
        });
        if (g <= 1)
            report.check(sol.c_of_t == model.closed_form(g), gtag + " closed form");
        if (g >= 1 && sol.polynomial) {
            const std::size_t low = first_nonzero_index(kind, g);
            const Rat lead = sol.polynomial->coeff(low);
            const BigInt formula = leading_coefficient(model, g);
            report.check(lead == formula && lead == leading_coefficient_by_recurrence(model, g),
                         gtag + " leading coefficient", lead.get_str());
        }
        for (const auto& fc : nonvanishing_checks(model, sol)) {
            if (fc.passed)
                report.check(true, gtag + " " + fc.name, fc.detail);
            else
                report.warn(gtag + " " + fc.name, fc.detail);
        }
        if (g >= 1) {
            report.guarded(gtag + " genus ODE residual", [&] {
                report.check(ode_residual(table, g).is_zero(), gtag + " genus ODE residual");
            });
            report.guarded(gtag + " integrating factor", [&] {
                report.check(integrating_factor_residual(kind, sol.c_of_t).is_zero(), gtag + " integrating factor");
            });
        }

        const std::string ctag = gtag + " counts n<=" + std::to_string(opt.max_n);
        report.guarded(ctag + " series vs recursion", [&] {
            by_series[g] = counts_from_solution(model, sol, rev, opt.max_n);
            if (g < by_recursion.size())
                report.check(by_series[g] == by_recursion[g], ctag + " series vs recursion");
        });
        if (const auto bad = monotonicity_violations(by_series[g]); !bad.empty())
            report.warn(ctag + " monotone", "decreases at n=" + join_indices(bad));
    }

    oracle::OracleOptions oopt;
    oopt.jobs = jobs;
    oopt.hypermap_bound = opt.hypermap_oracle_max;
    oopt.map_bound = opt.map_oracle_max;
    oopt.allow_large_maps = opt.oracle_map_five;
    std::size_t bound = kind == ModelKind::Hypermap ? opt.hypermap_oracle_max : opt.map_oracle_max;
    if (kind == ModelKind::Map && opt.oracle_map_five)
        bound = std::max<std::size_t>(bound, 5);
    bound = std::min(bound, opt.max_n);

    for (std::size_t n = 1; n <= bound; ++n) {
        const std::string otag = tag + " oracle n=" + std::to_string(n);
        report.guarded(otag, [&] {
            const auto res = kind == ModelKind::Hypermap ? oracle::count_rooted_hypermaps(n, oopt)
                                                         : oracle::count_rooted_maps(n, oopt);
            std::string mismatch;
            for (unsigned g = 0; g <= opt.max_genus; ++g) {
                const auto& counts = by_series[g].counts;
                if (counts.size() <= n || res.count(g) != counts[n])
                    mismatch += " g=" + std::to_string(g) + " oracle " + to_decimal(res.count(g));
            }
            report.check(mismatch.empty(), otag, mismatch.empty() ? std::string{} : mismatch.substr(1));
        });
    }
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::string s = "model,genus,seconds,max_coeff_bits,cache_hit\n";
    char buf[64];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.6f", r.seconds);
        s += std::string(to_string(r.model)) + "," + std::to_string(r.genus) + "," + buf + ","
             + std::to_string(r.max_coeff_bits) + "," + (r.cache_hit ? "true" : "false") + "\n";
    }
    return s;
}

nlohmann::json bench_json(const std::vector<BenchRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows)
        arr.push_back({{"model", std::string(to_string(r.model))},
                       {"genus", r.genus},
                       {"seconds", r.seconds},
                       {"max_coeff_bits", r.max_coeff_bits},
                       {"cache_hit", r.cache_hit}});
    return arr;
}

std::size_t max_bits(const GenusSolution& sol) {
    const Poly& p = sol.polynomial ? *sol.polynomial : sol.c_of_t.numerator();
    std::size_t bits = 0;
    for (const auto& c : p.coeffs()) {
        bits = std::max(bits, bit_length(c.get_num()));
        bits = std::max(bits, bit_length(c.get_den()) - 1);
    }
    return bits;
}

} // namespace

bool run_verify(const VerifyOptions& options, std::ostream& out) {
    Report report(out);
    const std::vector<ModelKind> models =
        options.models.empty() ? std::vector<ModelKind>{ModelKind::Hypermap, ModelKind::Map} : options.models;
    for (ModelKind kind : models)
        verify_model(kind, options, report);
    return report.finish();
}

std::vector<BenchRow> run_bench(ModelKind kind, unsigned max_genus, unsigned jobs, const std::string& cache_dir) {
    using Clock = std::chrono::steady_clock;
    const ModelSpec& model = model_for(kind);
    jobs = effective_jobs(jobs);
    GenusTable table(model);
    const auto cache = ResultCache::resolve(cache_dir);
    if (cache)
        cache->load(table);
    const std::size_t cached = table.size();

    std::vector<BenchRow> rows;
    extend_table(table, 0, jobs);
    for (unsigned g = 1; g <= max_genus; ++g) {
        BenchRow row{kind, g, 0.0, 0, g < cached};
        if (!row.cache_hit) {
            const auto start = Clock::now();
            extend_table(table, g, jobs);
            row.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        }
        row.max_coeff_bits = max_bits(table.at(g));
        rows.push_back(row);
    }
    if (cache && table.size() > cached)
        cache->save(table);
    return rows;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact genus-by-genus generating functions for rooted maps and hypermaps", "mapenum"};
    app.require_subcommand(1);
    const auto models = CLI::IsMember({"hypermap", "map"});

    std::string model = "hypermap", poly_format = "plain", counts_format = "plain", bench_format = "csv", cache_dir;
    unsigned genus = 0, max_genus = 5, jobs = 0;
    std::size_t max_n = 0;
    VerifyOptions vopt;
    std::string vmodel;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--cache-dir", cache_dir,
                        std::string("Result cache directory (default: $") + ResultCache::kEnvVar + ", else none)");
        sub->add_option("--jobs", jobs, "Worker threads; 0 means one per core")->capture_default_str();
    };

    auto* poly = app.add_subcommand("poly", "Print C_g (g <= 1) or P_g with its denominator");
    poly->add_option("--model", model, "hypermap or map")->required()->check(models);
    poly->add_option("--genus", genus, "Genus g >= 0")->required();
    poly->add_option("--format", poly_format, "plain, json or latex")->check(CLI::IsMember({"plain", "json", "latex"}))
        ->capture_default_str();
    common(poly);

    auto* counts = app.add_subcommand("counts", "Print rooted counts of one genus for n <= max-n");
    counts->add_option("--model", model, "hypermap or map")->required()->check(models);
    counts->add_option("--genus", genus, "Genus g >= 0")->required();
    counts->add_option("--max-n", max_n, "Largest size")->required()->check(CLI::PositiveNumber);
    counts->add_option("--format", counts_format, "plain, json or csv")->check(CLI::IsMember({"plain", "json", "csv"}))
        ->capture_default_str();
    common(counts);

    auto* verify = app.add_subcommand("verify", "Run the invariant, count and ODE checks");
    verify->add_option("--model", vmodel, "Restrict to one model (default: both)")->check(models);
    verify->add_option("--max-genus", vopt.max_genus, "Largest genus checked")->capture_default_str();
    verify->add_option("--max-n", vopt.max_n, "Largest size in count comparisons")->capture_default_str();
    verify->add_option("--hypermap-oracle-max", vopt.hypermap_oracle_max, "Largest hypermap size enumerated")
        ->capture_default_str();
    verify->add_option("--map-oracle-max", vopt.map_oracle_max, "Largest map size enumerated")->capture_default_str();
    verify->add_flag("--oracle-map-five", vopt.oracle_map_five, "Also enumerate maps with 5 edges");
    common(verify);

    auto* bench = app.add_subcommand("bench", "Time the recursion genus by genus");
    bench->add_option("--model", model, "hypermap or map")->check(models)->capture_default_str();
    bench->add_option("--max-genus", max_genus, "Largest genus timed")->capture_default_str();
    bench->add_option("--format", bench_format, "csv or json")->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    common(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*poly) {
            const ModelKind kind = model_from_flag(model);
            const GenusTable table = obtain_table(kind, genus, effective_jobs(jobs), cache_dir);
            const GenusSolution& sol = table.at(genus);
            if (poly_format == "json")
                out << solution_to_json(table.model(), sol).dump(2) << '\n';
            else if (poly_format == "latex")
                out << render_latex(table.model(), sol);
            else
                out << render_plain(table.model(), sol) << '\n';
        } else if (*counts) {
            const ModelKind kind = model_from_flag(model);
            const GenusTable table = obtain_table(kind, genus, effective_jobs(jobs), cache_dir);
            const CountTable c =
                counts_from_solution(table.model(), table.at(genus), revert(table.model().subst_coeff, max_n), max_n);
            if (counts_format == "json")
                out << counts_to_json(c).dump(2) << '\n';
            else if (counts_format == "csv")
                out << counts_to_csv(c);
            else
                out << counts_to_plain(c);
        } else if (*verify) {
            if (!vmodel.empty())
                vopt.models = {model_from_flag(vmodel)};
            vopt.jobs = jobs;
            vopt.cache_dir = cache_dir;
            return run_verify(vopt, out) ? 0 : 1;
        } else if (*bench) {
            const auto rows = run_bench(model_from_flag(model), max_genus, jobs, cache_dir);
            if (bench_format == "json")
                out << bench_json(rows).dump(2) << '\n';
            else
                out << bench_csv(rows);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace mapenum::cli

#include "funho/exactlin/triplet_io.hpp"
#include "funho/theories/theories.hpp"
#include "funho/verify/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace funho;

namespace {

enum Exit { kOk = 0, kFail = 1, kBadInput = 2, kRefused = 3 };

std::vector<std::string> split_list(const std::vector<std::string>& items) {
    std::vector<std::string> out;
    for (const auto& item : items) {
        // tensor(a,b) contains commas, so split only at depth zero
        int depth = 0;
        std::string cur;
        for (char c : item) {
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (c == ',' && depth == 0) {
                if (!cur.empty()) out.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (!cur.empty()) out.push_back(cur);
    }
    return out;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error("cannot write " + path);
    os << text;
}

// ---- content-addressed cache -------------------------------------------------

class Cache {
public:
    Cache(fs::path dir, bool enabled) : dir_(std::move(dir)), enabled_(enabled) {}

    static fs::path default_dir() {
        if (const char* env = std::getenv("FUNHO_CACHE_DIR"); env && *env) return env;
        if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "funho";
        return ".funho-cache";
    }

    static std::string digest(const std::string& key) {
        std::uint64_t h = 1469598103934665603ull;
        for (unsigned char c : key) {
            h ^= c;
            h *= 1099511628211ull;
        }
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return buf;
    }

    std::optional<json> get(const std::string& key) const {
        if (!enabled_) return std::nullopt;
        std::ifstream is(dir_ / (digest(key) + ".json"));
        if (!is) return std::nullopt;
        try {
            json j = json::parse(is);
            if (j.at("key").get<std::string>() != key) return std::nullopt;
            return j.at("value");
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }

    void put(const std::string& key, const json& value) const {
        if (!enabled_) return;
        std::error_code ec;
        fs::create_directories(dir_, ec);
        if (ec) return;
        auto final_path = dir_ / (digest(key) + ".json");
        auto tmp = final_path;
        tmp += ".tmp" + std::to_string(std::hash<std::string>{}(key) ^ reinterpret_cast<std::uintptr_t>(&key));
        {
            std::ofstream os(tmp, std::ios::binary);
            if (!os) return;
            os << json{{"key", key}, {"value", value}}.dump();
        }
        fs::rename(tmp, final_path, ec);
        if (ec) fs::remove(tmp, ec);
    }

    std::vector<fs::path> entries() const {
        std::vector<fs::path> out;
        std::error_code ec;
        if (!fs::is_directory(dir_, ec)) return out;
        for (const auto& e : fs::directory_iterator(dir_))
            if (e.is_regular_file() && e.path().extension() == ".json") out.push_back(e.path());
        std::sort(out.begin(), out.end());
        return out;
    }

    const fs::path& dir() const { return dir_; }

private:
    fs::path dir_;
    bool enabled_;
};

// ---- compute -------------------------------------------------------------------

struct ComputeConfig {
    std::vector<std::string> algebras;
    std::vector<std::string> coeffs{"q"};
    std::vector<std::string> theories{"hh,hc,hgamma,hgammac"};
    int max_degree = 3;
    std::string format = "json";
    std::string out;
    int threads = 1;
    std::uint64_t cap = kDefaultAmbientCap;
    bool no_cache = false;
};

template <class K>
std::vector<Index> compute_dims(const FTheory<K>& t, Theory theory, int max_degree) {
    std::vector<Index> dims;
    for (int n = 0; n <= max_degree; ++n) {
        switch (theory) {
            case Theory::HH: dims.push_back(t.hh(n)->dim()); break;
            case Theory::HC: dims.push_back(t.hc(n)->dim()); break;
            case Theory::HGamma: dims.push_back(t.hgamma(n)->dim()); break;
            case Theory::HGammaC: dims.push_back(t.hgammac(n)->dim()); break;
        }
    }
    return dims;
}

json fixture_signs() {
    return json{{"b", "sum_i (-1)^i G(d_i)"},
                {"B", "sum_i (-1)^(n i) [F(s tau^i) + (-1)^n F(tau s tau^i)]"},
                {"delta", "sum_i (-1)^i [G(p_i) - G(r_i) - G(s_i)]"},
                {"stab", "(-1)^(n(n+1)/2) G(sigma_n)"}};
}

int cmd_compute(const ComputeConfig& cfg) {
    auto algebras = split_list(cfg.algebras);
    auto coeffs = split_list(cfg.coeffs);
    auto theory_names = split_list(cfg.theories);
    if (algebras.empty()) throw Error("--algebra is required");
    if (cfg.max_degree < 0) throw Error("--max-degree must be non-negative");
    std::vector<Theory> theories;
    for (const auto& t : theory_names) theories.push_back(parse_theory(t));
    std::vector<ScalarField> fields;
    for (const auto& c : coeffs) fields.push_back(ScalarField::parse(c));
    std::vector<AlgebraSpec> specs;
    for (const auto& a : algebras) specs.push_back(AlgebraSpec::parse(a));
    const auto format = parse_report_format(cfg.format);
    Cache cache(Cache::default_dir(), !cfg.no_cache);

    // validate everything (including the resource budget) before computing
    struct Job {
        AlgebraSpec spec;
        ScalarField field;
        Theory theory;
        DegreeRequirements req;
    };
    std::vector<Job> jobs;
    for (const auto& s : specs)
        for (const auto& f : fields) {
            int d = visit_field(f, [&](const auto& k) { return build_algebra(s, k).dim(); });
            for (auto t : theories) jobs.push_back({s, f, t, degree_requirements(t, cfg.max_degree, d, cfg.cap)});
        }

    std::vector<json> tables(jobs.size());
    std::map<std::string, std::shared_ptr<void>> engines;
    std::mutex engine_mutex;
    auto run_job = [&](std::size_t i) {
        const auto& job = jobs[i];
        const std::string key = "compute|" + job.spec.to_string() + "|" + job.field.name() + "|" +
                                theory_name(job.theory) + "|" + std::to_string(cfg.max_degree);
        json rows = json::array();
        std::vector<Index> dims;
        if (auto hit = cache.get(key)) {
            dims = hit->get<std::vector<Index>>();
        } else {
            visit_field(job.field, [&](const auto& k) {
                using K = std::decay_t<decltype(k)>;
                std::shared_ptr<FTheory<K>> t;
                {
                    std::lock_guard<std::mutex> lock(engine_mutex);
                    auto& slot = engines[job.spec.to_string() + "/" + job.field.name()];
                    if (!slot) slot = std::make_shared<FTheory<K>>(loday(unit_adapted(build_algebra(job.spec, k))), cfg.cap);
                    t = std::static_pointer_cast<FTheory<K>>(slot);
                }
                dims = compute_dims(*t, job.theory, cfg.max_degree);
            });
            cache.put(key, dims);
        }
        for (std::size_t n = 0; n < dims.size(); ++n) rows.push_back(json{{"n", n}, {"dim", dims[n]}});
        tables[i] = json{{"theory", theory_name(job.theory)},
                         {"input", job.spec.to_string()},
                         {"field", job.field.name()},
                         {"rows", rows},
                         {"truncation",
                          {{"max_degree", cfg.max_degree},
                           {"chain_top", job.req.chain_top},
                           {"largest_chain_space", job.req.largest},
                           {"cap", cfg.cap}}},
                         {"fixture_signs", fixture_signs()}};
    };
    // jobs sharing an engine run on the same worker to keep memory bounded
    std::map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < jobs.size(); ++i)
        groups[jobs[i].spec.to_string() + "/" + jobs[i].field.name()].push_back(i);
    std::vector<std::vector<std::size_t>> batches;
    for (auto& [_, g] : groups) batches.push_back(g);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t b; (b = next++) < batches.size();) {
            try {
                for (auto i : batches[b]) run_job(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    const int workers = std::max(1, std::min<int>(cfg.threads, static_cast<int>(batches.size())));
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);

    std::ostringstream os;
    switch (format) {
        case ReportFormat::json: os << json(tables).dump(2) << "\n"; break;
        case ReportFormat::csv:
            os << "theory,input,field,n,dim\n";
            for (const auto& t : tables)
                for (const auto& r : t["rows"])
                    os << t["theory"].get<std::string>() << "," << t["input"].get<std::string>() << ","
                       << t["field"].get<std::string>() << "," << r["n"] << "," << r["dim"] << "\n";
            break;
        case ReportFormat::markdown:
            for (const auto& t : tables) {
                os << "### " << t["theory"].get<std::string>() << "(" << t["input"].get<std::string>() << "; "
                   << t["field"].get<std::string>() << ")\n\n| n | dim |\n|---|---|\n";
                for (const auto& r : t["rows"]) os << "| " << r["n"] << " | " << r["dim"] << " |\n";
                os << "\n";
            }
            break;
    }
    emit(os.str(), cfg.out);
    return kOk;
}

// ---- verify --------------------------------------------------------------------

struct VerifyConfig {
    std::string suite = "all";
    std::vector<std::string> algebras;
    std::vector<std::string> coeffs;
    int max_degree = 3;
    int samples = 100;
    std::uint64_t seed = 42;
    std::uint64_t cap = kDefaultAmbientCap;
    std::string format = "json";
    std::string out;
    int threads = 1;
    bool strict = false;
    bool no_timings = false;
};

int cmd_verify(const VerifyConfig& cfg) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), cfg.suite) == names.end())
        throw UnknownSuite("unknown suite '" + cfg.suite + "'");
    const auto format = parse_report_format(cfg.format);
    Corpus corpus;
    if (!cfg.algebras.empty()) {
        corpus.algebras.clear();
        for (const auto& a : split_list(cfg.algebras)) corpus.algebras.push_back(AlgebraSpec::parse(a).to_string());
    }
    if (!cfg.coeffs.empty()) {
        corpus.fields.clear();
        for (const auto& c : split_list(cfg.coeffs)) corpus.fields.push_back(ScalarField::parse(c));
    }
    if (cfg.max_degree < 1) throw Error("--max-degree must be at least 1");
    corpus.max_degree = cfg.max_degree;
    corpus.samples = cfg.samples;
    corpus.cap = cfg.cap;
    auto report = run_suite(cfg.suite, corpus, cfg.seed, RunOptions{cfg.threads});
    emit(render_report(report, format, !cfg.no_timings), cfg.out);
    for (const auto& c : report.checks)
        if (c.status == Status::fail) {
            std::cerr << "FAIL " << c.name << " on " << c.input << ": " << c.detail << "\n";
            if (!c.witness.is_null()) std::cerr << "  witness " << c.witness.dump() << "\n";
        }
    switch (report.overall()) {
        case Status::fail: return kFail;
        case Status::skipped: return cfg.strict ? kRefused : kOk;
        case Status::pass: return kOk;
    }
    return kOk;
}

// ---- maps ----------------------------------------------------------------------

struct MapsConfig {
    std::string algebra;
    std::string coeff = "q";
    std::string map;
    int degree = 0;
    std::string out;
    std::uint64_t cap = kDefaultAmbientCap;
};

template <class K>
SparseMatrix<K> build_map(const K& k, const MapsConfig& cfg) {
    FTheory<K> t(loday(build_algebra(AlgebraSpec::parse(cfg.algebra), k)), cfg.cap);
    const auto& g = t.gamma();
    const int n = cfg.degree;
    if (n < 0) throw Error("--degree must be non-negative");
    if (cfg.map == "b") {
        if (n < 1) throw Error("b needs degree ≥ 1");
        return hochschild_boundary(g.module(), n);
    }
    if (cfg.map == "B") return connes_B(t.module(), n);
    if (cfg.map == "delta") {
        if (n < 1) throw Error("delta needs degree ≥ 1");
        return g.cube(n).ambient_boundaries[static_cast<std::size_t>(n - 1)];
    }
    if (cfg.map == "stab") {
        if (!g.cube_feasible(n)) throw ResourceError("cube degree " + std::to_string(n) + " exceeds the cap");
        return scaled(k, k.from_int(stab_normalization(n)), *g.module().matrix(staircase(n)));
    }
    if (cfg.map == "I") return t.periodicity_I(n);
    if (cfg.map == "S") return t.periodicity_S(n);
    if (cfg.map == "cone-c") return t.cone_map();
    throw Error("unknown map '" + cfg.map + "'");
}

int cmd_maps(const MapsConfig& cfg) {
    static const std::vector<std::string> known{"b", "B", "delta", "stab", "I", "S", "cone-c"};
    if (std::find(known.begin(), known.end(), cfg.map) == known.end()) throw Error("unknown map '" + cfg.map + "'");
    if (cfg.algebra.empty()) throw Error("--algebra is required");
    std::string text = visit_field(ScalarField::parse(cfg.coeff), [&](const auto& k) {
        return to_triplet_string(k, build_map(k, cfg));
    });
    emit(text, cfg.out);
    return kOk;
}

// ---- cache ---------------------------------------------------------------------

int cmd_cache(const std::string& action) {
    Cache cache(Cache::default_dir(), true);
    auto entries = cache.entries();
    if (action == "stat") {
        std::uintmax_t bytes = 0;
        for (const auto& e : entries) bytes += fs::file_size(e);
        std::cout << json{{"dir", cache.dir().string()}, {"entries", entries.size()}, {"bytes", bytes}}.dump() << "\n";
    } else if (action == "list") {
        for (const auto& e : entries) {
            std::string key = "?";
            try {
                std::ifstream is(e);
                key = json::parse(is).at("key").get<std::string>();
            } catch (const std::exception&) {
                key = "(corrupt)";
            }
            std::cout << e.stem().string() << "  " << key << "\n";
        }
    } else if (action == "clear") {
        for (const auto& e : entries) fs::remove(e);
        std::cout << "removed " << entries.size() << " entries\n";
    } else {
        throw Error("unknown cache action '" + action + "' (expected list, clear, stat)");
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact HH, HC, HGamma and HGammaC of finite-dimensional commutative algebras"};
    app.require_subcommand(1);

    ComputeConfig cc;
    auto* compute = app.add_subcommand("compute", "homology tables");
    compute->add_option("--algebra,--algebras", cc.algebras, "algebra specs (trunc:N, group:M, prod:R, file:PATH)")
        ->required();
    compute->add_option("--coeff,--coeffs", cc.coeffs, "fields (q, f2, f3, ...)");
    compute->add_option("--theories", cc.theories, "hh,hc,hgamma,hgammac");
    compute->add_option("--max-degree", cc.max_degree);
    compute->add_option("--format", cc.format, "json, csv, markdown");
    compute->add_option("--out", cc.out);
    compute->add_option("--threads", cc.threads);
    compute->add_option("--max-ambient-dim", cc.cap);
    compute->add_flag("--no-cache", cc.no_cache);

    VerifyConfig vc;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", vc.suite);
    verify->add_option("--algebra,--algebras", vc.algebras);
    verify->add_option("--coeff,--coeffs", vc.coeffs);
    verify->add_option("--max-degree", vc.max_degree);
    verify->add_option("--samples", vc.samples);
    verify->add_option("--seed", vc.seed);
    verify->add_option("--max-ambient-dim", vc.cap);
    verify->add_option("--format", vc.format);
    verify->add_option("--out", vc.out);
    verify->add_option("--threads", vc.threads);
    verify->add_flag("--strict", vc.strict, "exit 3 when any check was skipped for resources");
    verify->add_flag("--no-timings", vc.no_timings, "omit per-check seconds");
    bool verify_no_cache = false;
    verify->add_flag("--no-cache", verify_no_cache);

    MapsConfig mc;
    auto* maps = app.add_subcommand("maps", "dump a matrix in triplet format");
    maps->add_option("--algebra", mc.algebra)->required();
    maps->add_option("--coeff", mc.coeff);
    maps->add_option("--map", mc.map, "b, B, delta, stab, I, S, cone-c")->required();
    maps->add_option("--degree", mc.degree);
    maps->add_option("--out", mc.out);
    maps->add_option("--max-ambient-dim", mc.cap);

    std::string cache_action;
    auto* cache = app.add_subcommand("cache", "inspect the result cache");
    cache->add_option("action", cache_action, "list, clear, stat")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        if (*compute) return cmd_compute(cc);
        if (*verify) return cmd_verify(vc);
        if (*maps) return cmd_maps(mc);
        if (*cache) return cmd_cache(cache_action);
    } catch (const ResourceError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kRefused;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}

#include "glsc/noise_lab.hpp"

#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <random>
#include <thread>

#include "json.hpp"

#include "glsc/errors.hpp"

namespace glsc {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

BitString random_message(const ExactRational& p_target, std::uint64_t N, std::uint64_t seed) {
    if (p_target <= 0 || p_target >= 1)
        throw InvalidParameterError("p_target must lie strictly between 0 and 1");
    if (N < 1)
        throw InvalidParameterError("N must be at least 1");
    // bit = 0 iff draw < floor(p * 2^64): exact threshold, identical everywhere
    mpz_class t = (p_target.num() << 64) / p_target.den();
    std::uint64_t threshold = mpz_get_ui(t.get_mpz_t());
    std::mt19937_64 eng(seed);
    BitString out;
    for (std::uint64_t i = 0; i < N; ++i)
        out.push_back(eng() < threshold ? 0 : 1);
    return out;
}

CompressedArtifact flip_bit(const CompressedArtifact& artifact, std::uint64_t d) {
    CompressedArtifact out = artifact;
    out.payload.flip_from_end(d); // range-checks d
    return out;
}

TrialResult run_trial(const TrialConfig& cfg) {
    if (cfg.N < 2)
        throw ConfigError("trial needs N >= 2");
    BitString msg = random_message(cfg.p_target, cfg.N, cfg.seed);
    for (std::uint64_t attempt = 1; msg.count_zeros() == 0 || msg.count_zeros() == msg.size(); ++attempt)
        msg = random_message(cfg.p_target, cfg.N, splitmix64(cfg.seed + attempt));

    CompressedArtifact artifact = encode(msg, cfg.epsilon, cfg.mode);
    if (cfg.flip_distance < 1 || cfg.flip_distance > artifact.payload.size())
        throw ConfigError("flip distance outside the payload");

    DecodeOutcome out = decode(flip_bit(artifact, cfg.flip_distance));

    TrialResult res;
    res.payload_len = artifact.payload.size();
    if (const auto* det = std::get_if<DecodeDetected>(&out)) {
        res.outcome = TrialOutcomeKind::DetectedAt;
        res.symbol_index = det->symbol_index;
        res.prefix_match_symbols = common_prefix(det->prefix, msg);
    } else {
        const auto& success = std::get<DecodeSuccess>(out);
        res.prefix_match_symbols = common_prefix(success.message, msg);
        res.outcome = success.message == msg ? TrialOutcomeKind::UndetectedCorrect
                                             : TrialOutcomeKind::UndetectedWrong;
    }
    return res;
}

namespace {

std::uint64_t trial_seed(std::uint64_t base, std::size_t eps_index, std::uint64_t d) {
    return splitmix64(splitmix64(base ^ (0x9E3779B97F4A7C15ull * (eps_index + 1))) ^ d);
}

} // namespace

TableRun run_table(const TableConfig& cfg) {
    if (cfg.epsilons.empty())
        throw ConfigError("no epsilon values given");
    if (cfg.d_max < 1)
        throw ConfigError("d_max must be at least 1");
    for (std::uint64_t d = 1; d <= cfg.d_max; ++d) {
        int covering = 0;
        for (const auto& [lo, hi] : cfg.bins)
            if (lo <= d && d <= hi) ++covering;
        if (covering != 1)
            throw ConfigError("bins must cover every distance 1..d_max exactly once");
    }

    const std::uint64_t jobs = cfg.epsilons.size() * cfg.d_max;
    TableRun run;
    run.records.resize(jobs);

    std::atomic<std::uint64_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;

    auto worker = [&] {
        for (;;) {
            std::uint64_t idx = next.fetch_add(1);
            if (idx >= jobs) return;
            {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (first_error) return;
            }
            std::size_t e = idx / cfg.d_max;
            std::uint64_t d = idx % cfg.d_max + 1;
            std::uint64_t seed = trial_seed(cfg.seed, e, d);
            try {
                TrialConfig tc{cfg.p_target, cfg.N, cfg.epsilons[e], cfg.mode, d, seed};
                run.records[idx] = TrialRecord{cfg.epsilons[e], d, seed, run_trial(tc)};
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    unsigned nthreads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    nthreads = static_cast<unsigned>(std::min<std::uint64_t>(nthreads, jobs));
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned i = 0; i < nthreads; ++i)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    if (first_error)
        std::rethrow_exception(first_error);

    for (std::size_t e = 0; e < cfg.epsilons.size(); ++e) {
        ExperimentReport rep;
        rep.epsilon = cfg.epsilons[e];
        for (const auto& [lo, hi] : cfg.bins)
            rep.bins.push_back(DistanceBin{lo, hi, 0, 0});
        for (std::uint64_t d = 1; d <= cfg.d_max; ++d) {
            const TrialRecord& rec = run.records[e * cfg.d_max + d - 1];
            bool detected = rec.result.outcome == TrialOutcomeKind::DetectedAt;
            for (DistanceBin& bin : rep.bins)
                if (bin.d_lo <= d && d <= bin.d_hi)
                    (detected ? bin.detected : bin.undetected) += 1;
            (detected ? rep.detected_total : rep.undetected_total) += 1;
        }
        std::uint64_t total = rep.detected_total + rep.undetected_total;
        rep.percent_detected = total ? 100.0 * static_cast<double>(rep.detected_total) / static_cast<double>(total) : 0.0;
        run.reports.push_back(std::move(rep));
    }
    return run;
}

namespace {

const char* outcome_name(TrialOutcomeKind k) {
    switch (k) {
    case TrialOutcomeKind::DetectedAt: return "detected";
    case TrialOutcomeKind::UndetectedWrong: return "undetected_wrong";
    case TrialOutcomeKind::UndetectedCorrect: return "undetected_correct";
    }
    return "?";
}

} // namespace

void write_csv(const TableRun& run, const std::string& path) {
    std::ofstream f(path, std::ios::trunc);
    if (!f) throw ConfigError("cannot open '" + path + "' for writing");
    f << "epsilon,d,seed,outcome,symbol_index,prefix_match_symbols,payload_len\n";
    for (const TrialRecord& rec : run.records) {
        f << rec.epsilon.str() << ',' << rec.d << ',' << rec.seed << ','
          << outcome_name(rec.result.outcome) << ',';
        if (rec.result.outcome == TrialOutcomeKind::DetectedAt)
            f << rec.result.symbol_index;
        f << ',' << rec.result.prefix_match_symbols << ',' << rec.result.payload_len << '\n';
    }
    if (!f) throw ConfigError("short write to '" + path + "'");
}

void write_json(const TableRun& run, const TableConfig& cfg, const std::string& path) {
    nlohmann::json j;
    j["p"] = cfg.p_target.str();
    j["N"] = cfg.N;
    j["seed"] = cfg.seed;
    j["mode"] = cfg.mode == MapMode::Binary ? "binary" : "tent";
    j["d_max"] = cfg.d_max;
    j["trials_per_epsilon"] = cfg.d_max;
    j["reports"] = nlohmann::json::array();
    for (const ExperimentReport& rep : run.reports) {
        nlohmann::json r;
        r["epsilon"] = rep.epsilon.str();
        r["detected"] = rep.detected_total;
        r["undetected"] = rep.undetected_total;
        r["percent_detected"] = rep.percent_detected;
        r["bins"] = nlohmann::json::array();
        for (const DistanceBin& bin : rep.bins)
            r["bins"].push_back({{"d_lo", bin.d_lo},
                                 {"d_hi", bin.d_hi},
                                 {"detected", bin.detected},
                                 {"undetected", bin.undetected}});
        j["reports"].push_back(std::move(r));
    }
    std::ofstream f(path, std::ios::trunc);
    if (!f) throw ConfigError("cannot open '" + path + "' for writing");
    f << j.dump(2) << '\n';
    if (!f) throw ConfigError("short write to '" + path + "'");
}

std::vector<RedundancyRow> redundancy_table(std::uint64_t N, const std::vector<ExactRational>& epsilons,
                                            const std::optional<ExactRational>& p) {
    if (p && (*p <= 0 || *p >= 1))
        throw InvalidParameterError("p must lie strictly between 0 and 1");
    std::vector<RedundancyRow> rows;
    rows.reserve(epsilons.size());
    for (const ExactRational& eps : epsilons) {
        RedundancyRow row;
        row.epsilon = eps;
        row.redundancy_bits = redundancy_bits(N, eps);
        if (p && N >= 2) {
            // zero count nearest to p*N, kept off the degenerate edges
            mpz_class z = (p->num() * N * 2 + p->den()) / (p->den() * 2);
            mpz_class zmax(static_cast<unsigned long>(N - 1));
            if (z < 1) z = 1;
            if (z > zmax) z = zmax;
            std::uint64_t zeros = mpz_get_ui(z.get_mpz_t());
            ExactRational keep = ExactRational(1) - eps;
            ExactRational w = pow(keep * *p, zeros) * pow(keep * (ExactRational(1) - *p), N - zeros);
            row.predicted_payload = ceil_neg_log2(w);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace glsc

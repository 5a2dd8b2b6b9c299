// Command-line front end: compress | decompress | corrupt | rep-encode |
// rep-decode | experiment | cantor-dim.
// Exit codes: 0 success, 1 usage/format error, 2 error detected on decode.

#include <cstdio>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "glsc/codec.hpp"
#include "glsc/errors.hpp"
#include "glsc/noise_lab.hpp"
#include "glsc/repetition.hpp"

namespace {

glsc::MapMode parse_mode(const std::string& text) {
    if (text == "binary") return glsc::MapMode::Binary;
    if (text == "tent") return glsc::MapMode::Tent;
    throw glsc::ConfigError("mode must be 'binary' or 'tent'");
}

int do_compress(const std::string& in, const std::string& out, const std::string& eps_text,
                const std::string& mode_text) {
    glsc::BitString msg = glsc::load_message_file(in);
    glsc::ExactRational eps = glsc::ExactRational::parse(eps_text);
    glsc::CompressedArtifact art = glsc::encode(msg, eps, parse_mode(mode_text));
    glsc::save_artifact(out, art);
    double h = glsc::entropy_bits_per_symbol(art.model.zero_count, art.model.length);
    double r = glsc::redundancy_bits_per_symbol(eps);
    std::printf("N:            %llu\n", static_cast<unsigned long long>(art.model.length));
    std::printf("p:            %s (%.6g)\n", art.model.p().str().c_str(), art.model.p().to_double());
    std::printf("epsilon:      %s\n", eps.str().c_str());
    std::printf("payload bits: %zu\n", art.payload.size());
    std::printf("H(p):         %.6g bits/symbol\n", h);
    std::printf("R(eps):       %.6g bits/symbol\n", r);
    std::printf("rate:         %.6g\n", glsc::code_rate(eps));
    return 0;
}

int do_decompress(const std::string& in, const std::string& out) {
    glsc::CompressedArtifact art = glsc::load_artifact(in);
    glsc::DecodeOutcome outcome = glsc::decode(art);
    if (const auto* det = std::get_if<glsc::DecodeDetected>(&outcome)) {
        std::printf("error detected at symbol %llu of %llu; nothing written\n",
                    static_cast<unsigned long long>(det->symbol_index),
                    static_cast<unsigned long long>(art.model.length));
        return 2;
    }
    const auto& success = std::get<glsc::DecodeSuccess>(outcome);
    glsc::save_message_file(out, success.message);
    std::printf("decoded %zu bits\n", success.message.size());
    return 0;
}

int do_corrupt(const std::string& in, const std::string& out, std::uint64_t distance) {
    glsc::CompressedArtifact art = glsc::load_artifact(in);
    glsc::save_artifact(out, glsc::flip_bit(art, distance));
    std::printf("flipped payload bit %llu from end (payload %zu bits)\n",
                static_cast<unsigned long long>(distance), art.payload.size());
    return 0;
}

int do_rep_encode(const std::string& in, const std::string& out, unsigned n, bool via_gls) {
    glsc::BitString msg = glsc::load_message_file(in);
    glsc::BitString code = via_gls ? glsc::rep_encode_via_gls(msg, n) : glsc::rep_encode(msg, n);
    glsc::save_message_file(out, code);
    std::printf("encoded %zu bits -> %zu bits (n=%u%s)\n", msg.size(), code.size(), n,
                via_gls ? ", via coding map" : "");
    return 0;
}

int do_rep_decode(const std::string& in, const std::string& out, unsigned n) {
    glsc::BitString code = glsc::load_message_file(in);
    auto [msg, corrected] = glsc::rep_decode_majority(code, n);
    glsc::save_message_file(out, msg);
    std::printf("decoded %zu bits; %llu block(s) had errors corrected\n", msg.size(),
                static_cast<unsigned long long>(corrected));
    return 0;
}

int do_experiment(const std::string& p_text, std::uint64_t n, const std::vector<std::string>& eps_texts,
                  std::uint64_t seed, const std::string& csv_path, const std::string& json_path,
                  const std::string& mode_text, std::uint64_t d_max, unsigned threads) {
    glsc::TableConfig cfg;
    cfg.p_target = glsc::ExactRational::parse(p_text);
    cfg.N = n;
    for (const std::string& t : eps_texts)
        cfg.epsilons.push_back(glsc::ExactRational::parse(t));
    cfg.seed = seed;
    cfg.mode = parse_mode(mode_text);
    cfg.d_max = d_max;
    if (d_max != 250) // default bins follow the standard 1-250 sweep
        cfg.bins = {{1, d_max}};
    cfg.threads = threads;

    glsc::TableRun run = glsc::run_table(cfg);
    glsc::write_csv(run, csv_path);
    if (!json_path.empty())
        glsc::write_json(run, cfg, json_path);

    std::printf("p=%s N=%llu, one trial per distance 1..%llu\n", cfg.p_target.str().c_str(),
                static_cast<unsigned long long>(cfg.N), static_cast<unsigned long long>(cfg.d_max));
    for (const glsc::ExperimentReport& rep : run.reports) {
        std::printf("epsilon %-8s detected %llu/%llu (%.1f%%)\n", rep.epsilon.str().c_str(),
                    static_cast<unsigned long long>(rep.detected_total),
                    static_cast<unsigned long long>(rep.detected_total + rep.undetected_total),
                    rep.percent_detected);
        for (const glsc::DistanceBin& bin : rep.bins)
            std::printf("  d %3llu-%-3llu  detected %llu  undetected %llu\n",
                        static_cast<unsigned long long>(bin.d_lo),
                        static_cast<unsigned long long>(bin.d_hi),
                        static_cast<unsigned long long>(bin.detected),
                        static_cast<unsigned long long>(bin.undetected));
    }
    return 0;
}

int do_cantor_dim(unsigned n, unsigned depth) {
    double d = glsc::box_counting_dimension(n, depth);
    glsc::ExactRational eps = glsc::ExactRational(1) - glsc::ExactRational(1, mpz_class(1) << (n - 1));
    glsc::ExactRational measure = glsc::pow(glsc::ExactRational(1, mpz_class(1) << (n - 1)), depth);
    std::printf("n=%u depth=%u\n", n, depth);
    std::printf("intervals:    2^%u, each of width 2^-%u\n", depth, n * depth);
    std::printf("measure:      %s\n", measure.str().c_str());
    std::printf("dimension:    %.6g\n", d);
    std::printf("code rate at epsilon=%s: %.6g\n", eps.str().c_str(), glsc::code_rate(eps));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"GLS compressor with a forbidden-symbol Cantor-set extension for error detection"};
    app.require_subcommand(1);

    std::string in_path, out_path;
    std::string eps_text = "0";
    std::string mode_text = "binary";
    std::uint64_t distance = 1;
    unsigned rep_n = 3;
    bool via_gls = false;

    CLI::App* compress = app.add_subcommand("compress", "encode a message file into a container");
    compress->add_option("input", in_path, "message file")->required();
    compress->add_option("output", out_path, "container file")->required();
    compress->add_option("--epsilon", eps_text, "forbidden-symbol width, rational or decimal");
    compress->add_option("--mode", mode_text, "binary|tent")->check(CLI::IsMember({"binary", "tent"}));

    CLI::App* decompress = app.add_subcommand("decompress", "decode a container; exit 2 if an error is detected");
    decompress->add_option("input", in_path, "container file")->required();
    decompress->add_option("output", out_path, "message file")->required();

    CLI::App* corrupt = app.add_subcommand("corrupt", "flip one payload bit, counted from the end");
    corrupt->add_option("input", in_path, "container file")->required();
    corrupt->add_option("output", out_path, "container file")->required();
    corrupt->add_option("--distance", distance, "1 = last payload bit")->required();

    CLI::App* rep_enc = app.add_subcommand("rep-encode", "repetition-encode a message file");
    rep_enc->add_option("input", in_path, "message file")->required();
    rep_enc->add_option("output", out_path, "code file")->required();
    rep_enc->add_option("--n", rep_n, "repetition factor (odd)")->required();
    rep_enc->add_flag("--gls", via_gls, "produce the codeword through the coding map");

    CLI::App* rep_dec = app.add_subcommand("rep-decode", "majority-decode a repetition code file");
    rep_dec->add_option("input", in_path, "code file")->required();
    rep_dec->add_option("output", out_path, "message file")->required();
    rep_dec->add_option("--n", rep_n, "repetition factor (odd)")->required();

    std::string p_text = "1/10";
    std::uint64_t exp_n = 10000;
    std::vector<std::string> eps_list;
    std::uint64_t seed = 1;
    std::string csv_path, json_path;
    std::uint64_t d_max = 250;
    unsigned threads = 0;

    CLI::App* experiment = app.add_subcommand("experiment", "single-bit-flip detection sweep");
    experiment->add_option("--p", p_text, "source probability of a zero")->required();
    experiment->add_option("--n", exp_n, "message length N")->required();
    experiment->add_option("--epsilons", eps_list, "comma-separated widths")->required()->delimiter(',');
    experiment->add_option("--seed", seed, "base seed");
    experiment->add_option("--out", csv_path, "CSV output path")->required();
    experiment->add_option("--json", json_path, "JSON report path");
    experiment->add_option("--mode", mode_text, "binary|tent")->check(CLI::IsMember({"binary", "tent"}));
    experiment->add_option("--dmax", d_max, "largest flip distance");
    experiment->add_option("--threads", threads, "worker threads (0 = auto)");

    unsigned cantor_n = 3, cantor_depth = 1;
    CLI::App* cantor = app.add_subcommand("cantor-dim", "codeword-set geometry for the repetition construction");
    cantor->add_option("--n", cantor_n, "repetition factor (odd)")->required();
    cantor->add_option("--depth", cantor_depth, "construction depth k");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(compress)) return do_compress(in_path, out_path, eps_text, mode_text);
        if (app.got_subcommand(decompress)) return do_decompress(in_path, out_path);
        if (app.got_subcommand(corrupt)) return do_corrupt(in_path, out_path, distance);
        if (app.got_subcommand(rep_enc)) return do_rep_encode(in_path, out_path, rep_n, via_gls);
        if (app.got_subcommand(rep_dec)) return do_rep_decode(in_path, out_path, rep_n);
        if (app.got_subcommand(experiment))
            return do_experiment(p_text, exp_n, eps_list, seed, csv_path, json_path, mode_text, d_max, threads);
        if (app.got_subcommand(cantor)) return do_cantor_dim(cantor_n, cantor_depth);
    } catch (const glsc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

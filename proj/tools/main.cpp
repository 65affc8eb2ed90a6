#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cshatter/baseline.hpp"
#include "cshatter/cost.hpp"
#include "cshatter/errors.hpp"
#include "cshatter/io.hpp"
#include "cshatter/matrixform.hpp"
#include "cshatter/recon.hpp"
#include "cshatter/shatter.hpp"
#include "cshatter/signal.hpp"
#include "cshatter/sweep.hpp"

namespace {

using namespace cshatter;

SignalFormat resolve_format(const std::string& flag, const std::filesystem::path& path) {
    if (flag == "f64") return SignalFormat::f64;
    if (flag == "csv") return SignalFormat::csv;
    return format_from_extension(path);
}

int cmd_gen(std::size_t n, std::size_t m, std::uint64_t seed, const std::string& out,
            const std::string& format) {
    const SignalFormat fmt = resolve_format(format, out);
    std::cerr << "gen: n=" << n << " sparsity=" << m << " seed=" << seed
              << " format=" << (fmt == SignalFormat::csv ? "csv" : "f64") << " out=" << out
              << "\n";
    write_signal(out, generate_sparse(n, m, seed), fmt);
    return 0;
}

int cmd_encode(const std::string& in, std::size_t t, std::optional<std::uint64_t> sigma,
               double threshold, const std::string& out, const std::string& format) {
    const Signal x = read_signal(in, resolve_format(format, in));
    const std::size_t n = x.size();
    std::uint64_t resolved = 0;
    bool searched = false;
    if (sigma) {
        resolved = *sigma;
    } else {
        resolved = find_sigma(n, t, occupied_bins(dft(x)), 1);
        searched = true;
    }
    std::cerr << "encode: n=" << n << " filters=" << t << " sigma=" << resolved
              << (searched ? " (auto)" : "") << " threshold=" << threshold << " in=" << in
              << " out=" << out << "\n";
    const MeasurementSet set = encode(x, ShatterConfig::make(n, t, resolved, threshold));
    write_measurement_set(out, set);
    std::cerr << "encode: retained " << set.entries.size() << " of " << t
              << " measurement pairs (" << 4 * set.entries.size() << " stored reals)\n";
    return 0;
}

int cmd_decode(const std::string& in, const std::string& out, const std::string& format) {
    const MeasurementSet set = read_measurement_set(in);
    std::cerr << "decode: n=" << set.n << " t=" << set.t << " sigma=" << set.sigma
              << " entries=" << set.entries.size() << " in=" << in << " out=" << out << "\n";
    write_signal(out, decode(set), resolve_format(format, out));
    return 0;
}

int cmd_table1() {
    constexpr std::size_t n = 1000;
    constexpr std::size_t t = 100;
    constexpr double multiplier = 7.0;
    constexpr std::size_t m_max = 25;
    const std::size_t m_cs = CsConfig{n, m_max, multiplier, 0}.measurement_count();

    std::cerr << "table1: n=" << n << " t=" << t << " multiplier=" << multiplier
              << " m={5,25}\n";
    std::printf("%-6s %-4s %-5s %-8s %-12s %-8s %-12s %-8s %-12s\n", "N", "m", "T", "meas_cs",
                "meas_shatter", "add_cs", "add_shatter", "mul_cs", "mul_shatter");
    for (std::size_t m : {std::size_t{5}, std::size_t{25}}) {
        const CostReport cs = conventional_cost(n, m_cs);
        const CostReport sh = shattering_cost(n, t, m);
        std::printf("%-6zu %-4zu %-5zu %-8llu %-12llu %-8llu %-12llu %-8llu %-12llu\n", n, m, t,
                    static_cast<unsigned long long>(cs.stored_real_measurements),
                    static_cast<unsigned long long>(sh.stored_real_measurements),
                    static_cast<unsigned long long>(cs.additions),
                    static_cast<unsigned long long>(sh.additions),
                    static_cast<unsigned long long>(cs.multiplications),
                    static_cast<unsigned long long>(sh.multiplications));
    }
    return 0;
}

int cmd_sweep(std::size_t n, std::size_t t, const std::vector<std::size_t>& m_values,
              double multiplier, double threshold, std::uint64_t seed,
              std::optional<std::uint64_t> sigma, const std::string& out) {
    SweepConfig config{n, t, m_values, multiplier, threshold, seed, sigma};
    std::cerr << "sweep: n=" << n << " filters=" << t << " multiplier=" << multiplier
              << " threshold=" << threshold << " seed=" << seed << " rows=" << m_values.size()
              << "\n";
    const std::string csv = sweep_to_csv(sweep_measurements(config));
    if (out.empty()) {
        std::cout << csv;
    } else {
        std::ofstream file(out);
        if (!file.good()) throw std::runtime_error("cannot open " + out + " for writing");
        file << csv;
    }
    return 0;
}

int cmd_dump_matrix(std::size_t n, std::size_t t, std::uint64_t sigma, const std::string& out) {
    std::cerr << "dump-matrix: n=" << n << " filters=" << t << " sigma=" << sigma
              << " out=" << out << "\n";
    const Eigen::MatrixXcd stacked =
        build_stacked(ShatterConfig::make(n, t, sigma, kDefaultThreshold));
    std::ofstream file(out);
    if (!file.good()) throw std::runtime_error("cannot open " + out + " for writing");
    char buf[64];
    for (Eigen::Index r = 0; r < stacked.rows(); ++r) {
        for (Eigen::Index c = 0; c < stacked.cols(); ++c) {
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g", stacked(r, c).real(),
                          stacked(r, c).imag());
            file << (c == 0 ? "" : ",") << buf;
        }
        file << '\n';
    }
    if (!file.good()) throw std::runtime_error("write failed: " + out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sparsity-adaptive spectral compressed sensing via shattered signals"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a random frequency-sparse signal");
    std::size_t gen_n = 1000, gen_m = 5;
    std::uint64_t gen_seed = 0;
    std::string gen_out, gen_format;
    gen->add_option("--n", gen_n, "Signal length (even)")->required();
    gen->add_option("--sparsity", gen_m, "Occupied frequencies in 0..n/2")->required();
    gen->add_option("--seed", gen_seed, "RNG seed");
    gen->add_option("--out", gen_out, "Output signal file")->required();
    gen->add_option("--format", gen_format, "f64 or csv (default: by extension)")
        ->check(CLI::IsMember({"f64", "csv"}));

    // encode
    auto* enc = app.add_subcommand("encode", "Shatter and sense a signal file");
    std::string enc_in, enc_out, enc_format;
    std::size_t enc_t = 100;
    double enc_threshold = kDefaultThreshold;
    std::optional<std::uint64_t> enc_sigma;
    enc->add_option("--in", enc_in, "Input signal file")->required();
    enc->add_option("--filters", enc_t, "Filter count T (divides n/2)")->required();
    enc->add_option("--sigma", enc_sigma, "Permutation parameter (omit to auto-search)");
    enc->add_option("--threshold", enc_threshold, "Measurement l2 cutoff");
    enc->add_option("--out", enc_out, "Output measurement JSON")->required();
    enc->add_option("--format", enc_format, "Input format override")
        ->check(CLI::IsMember({"f64", "csv"}));

    // decode
    auto* dec = app.add_subcommand("decode", "Reconstruct a signal from measurements");
    std::string dec_in, dec_out, dec_format;
    dec->add_option("--in", dec_in, "Input measurement JSON")->required();
    dec->add_option("--out", dec_out, "Output signal file")->required();
    dec->add_option("--format", dec_format, "Output format override")
        ->check(CLI::IsMember({"f64", "csv"}));

    // table1
    app.add_subcommand("table1", "Print the measurement/operation-count comparison table");

    // sweep
    auto* swp = app.add_subcommand("sweep", "Measurement-count sweep over sparsity values");
    std::size_t swp_n = 0, swp_t = 0;
    std::vector<std::size_t> swp_m;
    double swp_multiplier = 7.0, swp_threshold = kDefaultThreshold;
    std::uint64_t swp_seed = 0;
    std::optional<std::uint64_t> swp_sigma;
    std::string swp_out;
    swp->add_option("--n", swp_n, "Signal length (even)")->required();
    swp->add_option("--filters", swp_t, "Filter count T")->required();
    swp->add_option("--sparsity", swp_m, "Sparsity values, comma separated")
        ->required()
        ->delimiter(',');
    swp->add_option("--multiplier", swp_multiplier, "Conventional measurements per sparsity");
    swp->add_option("--threshold", swp_threshold, "Measurement l2 cutoff");
    swp->add_option("--seed", swp_seed, "Base RNG seed");
    swp->add_option("--sigma", swp_sigma, "Preferred sigma (auto-searched on collision)");
    swp->add_option("--out", swp_out, "Output CSV (default: stdout)");

    // dump-matrix
    auto* dmp = app.add_subcommand("dump-matrix", "Write the stacked 2TxN sensing operator");
    std::size_t dmp_n = 0, dmp_t = 0;
    std::uint64_t dmp_sigma = 1;
    std::string dmp_out;
    dmp->add_option("--n", dmp_n, "Signal length (even, <= 4096)")->required();
    dmp->add_option("--filters", dmp_t, "Filter count T")->required();
    dmp->add_option("--sigma", dmp_sigma, "Permutation parameter")->required();
    dmp->add_option("--out", dmp_out, "Output CSV")->required();

    try {
        app.parse(argc, argv);
        if (gen->parsed()) return cmd_gen(gen_n, gen_m, gen_seed, gen_out, gen_format);
        if (enc->parsed()) {
            return cmd_encode(enc_in, enc_t, enc_sigma, enc_threshold, enc_out, enc_format);
        }
        if (dec->parsed()) return cmd_decode(dec_in, dec_out, dec_format);
        if (app.get_subcommand("table1")->parsed()) return cmd_table1();
        if (swp->parsed()) {
            return cmd_sweep(swp_n, swp_t, swp_m, swp_multiplier, swp_threshold, swp_seed,
                             swp_sigma, swp_out);
        }
        if (dmp->parsed()) return cmd_dump_matrix(dmp_n, dmp_t, dmp_sigma, dmp_out);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const cshatter::DomainError& e) {
        std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "cshatter/io.hpp"
#include "cshatter/signal.hpp"

using namespace cshatter;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "cshatter_cli_test";
    fs::create_directories(dir);
    return dir;
}

CliResult run_cli(const std::string& args) {
    const fs::path dir = scratch_dir();
    const fs::path out = dir / "stdout.txt";
    const fs::path err = dir / "stderr.txt";
    const std::string cmd = std::string(CSHATTER_CLI_PATH) + " " + args + " >" + out.string() +
                            " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return CliResult{code, slurp(out), slurp(err)};
}

}  // namespace

TEST_CASE("gen writes the documented binary format") {
    const fs::path dir = scratch_dir();
    const fs::path file = dir / "x.f64";
    const CliResult r =
        run_cli("gen --n 1000 --sparsity 25 --seed 7 --out " + file.string());
    CHECK(r.exit_code == 0);
    CHECK(fs::file_size(file) == 1000 * sizeof(double));
    CHECK(read_signal_f64(file) == generate_sparse(1000, 25, 7));
}

TEST_CASE("gen writes csv with the documented header") {
    const fs::path dir = scratch_dir();
    const fs::path file = dir / "x.csv";
    const CliResult r =
        run_cli("gen --n 64 --sparsity 3 --seed 1 --out " + file.string());
    CHECK(r.exit_code == 0);
    const std::string text = slurp(file);
    CHECK(text.rfind("sample\n", 0) == 0);
    const Signal back = read_signal_csv(file);
    const Signal expected = generate_sparse(64, 3, 1);
    REQUIRE(back.size() == expected.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i] == doctest::Approx(expected[i]).epsilon(1e-15));
    }
}

TEST_CASE("encode then decode round trips through files") {
    const fs::path dir = scratch_dir();
    const fs::path x_file = dir / "sig.f64";
    const fs::path y_file = dir / "meas.json";
    const fs::path back_file = dir / "back.f64";

    CHECK(run_cli("gen --n 1000 --sparsity 25 --seed 7 --out " + x_file.string()).exit_code == 0);
    const CliResult enc = run_cli("encode --in " + x_file.string() +
                                  " --filters 100 --threshold 0.01 --out " + y_file.string());
    CHECK(enc.exit_code == 0);
    CHECK(enc.err.find("sigma=") != std::string::npos);  // resolved config echoed

    const MeasurementSet set = read_measurement_set(y_file);
    CHECK(set.n == 1000);
    CHECK(set.entries.size() == 25);

    CHECK(run_cli("decode --in " + y_file.string() + " --out " + back_file.string()).exit_code ==
          0);
    const Signal original = read_signal_f64(x_file);
    const Signal decoded = read_signal_f64(back_file);
    REQUIRE(decoded.size() == original.size());
    double err = 0.0;
    for (std::size_t i = 0; i < original.size(); ++i) {
        err = std::max(err, std::abs(decoded[i] - original[i]));
    }
    CHECK(err < 1e-9);
}

TEST_CASE("table1 prints the comparison rows") {
    const CliResult r = run_cli("table1");
    CHECK(r.exit_code == 0);
    for (const char* token : {"175", "20", "100", "174825", "399600", "175000", "400000"}) {
        CHECK(r.out.find(token) != std::string::npos);
    }
}

TEST_CASE("sweep emits csv rows") {
    const CliResult r = run_cli("sweep --n 256 --filters 16 --sparsity 2,4 --seed 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("m,sigma,stored_shatter,stored_cs,max_abs_err_shatter,status\n", 0) == 0);
    CHECK(r.out.find("\n2,") != std::string::npos);
    CHECK(r.out.find("\n4,") != std::string::npos);
}

TEST_CASE("dump-matrix writes 2T rows of re,im pairs") {
    const fs::path dir = scratch_dir();
    const fs::path file = dir / "stacked.csv";
    const CliResult r =
        run_cli("dump-matrix --n 16 --filters 4 --sigma 3 --out " + file.string());
    CHECK(r.exit_code == 0);
    std::ifstream in(file);
    std::string line;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        CHECK(std::count(line.begin(), line.end(), ',') == 2 * 16 - 1);
    }
    CHECK(rows == 8);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("gen --n 16").exit_code == 2);               // missing required flags
    CHECK(run_cli("nonsense").exit_code == 2);                 // unknown subcommand
    CHECK(run_cli("decode --in missing.json --out x.f64").exit_code == 2);
}

TEST_CASE("domain errors exit with code 3 and name the error") {
    const fs::path dir = scratch_dir();
    const fs::path x_file = dir / "cluster.f64";

    // adjacent occupied bins collide under sigma = 1
    Spectrum bins(16, {0.0, 0.0});
    bins[2] = {16.0, 0.0};
    bins[14] = {16.0, 0.0};
    bins[3] = {16.0, 0.0};
    bins[13] = {16.0, 0.0};
    write_signal_f64(x_file, idft(bins));

    const CliResult r = run_cli("encode --in " + x_file.string() +
                                " --filters 4 --sigma 1 --out " + (dir / "y.json").string());
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("ShatterCollision") != std::string::npos);
}

#include "cshatter/io.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cshatter {
namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

std::uint64_t to_le_bits(double v) {
    auto bits = std::bit_cast<std::uint64_t>(v);
    if constexpr (std::endian::native == std::endian::big) {
        bits = __builtin_bswap64(bits);
    }
    return bits;
}

double from_le_bits(std::uint64_t bits) {
    if constexpr (std::endian::native == std::endian::big) {
        bits = __builtin_bswap64(bits);
    }
    return std::bit_cast<double>(bits);
}

}  // namespace

SignalFormat format_from_extension(const std::filesystem::path& path) {
    return path.extension() == ".csv" ? SignalFormat::csv : SignalFormat::f64;
}

void write_signal_f64(const std::filesystem::path& path, const Signal& x) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), "cannot open " + path.string() + " for writing");
    for (double v : x) {
        const std::uint64_t bits = to_le_bits(v);
        out.write(reinterpret_cast<const char*>(&bits), sizeof(bits));
    }
    require(out.good(), "write failed: " + path.string());
}

Signal read_signal_f64(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "cannot open " + path.string());
    Signal x;
    std::uint64_t bits = 0;
    while (in.read(reinterpret_cast<char*>(&bits), sizeof(bits))) {
        x.push_back(from_le_bits(bits));
    }
    require(in.eof() && in.gcount() == 0, "trailing bytes in " + path.string());
    return x;
}

void write_signal_csv(const std::filesystem::path& path, const Signal& x) {
    std::ofstream out(path);
    require(out.good(), "cannot open " + path.string() + " for writing");
    out << "sample\n";
    char buf[32];
    for (double v : x) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        out << buf << '\n';
    }
    require(out.good(), "write failed: " + path.string());
}

Signal read_signal_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open " + path.string());
    std::string line;
    require(static_cast<bool>(std::getline(in, line)), "empty csv: " + path.string());
    if (!line.empty() && line.back() == '\r') line.pop_back();
    require(line == "sample", "expected header \"sample\" in " + path.string());
    Signal x;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::size_t used = 0;
        x.push_back(std::stod(line, &used));
        require(used == line.size(), "bad sample value: " + line);
    }
    return x;
}

void write_signal(const std::filesystem::path& path, const Signal& x, SignalFormat format) {
    format == SignalFormat::csv ? write_signal_csv(path, x) : write_signal_f64(path, x);
}

Signal read_signal(const std::filesystem::path& path, SignalFormat format) {
    return format == SignalFormat::csv ? read_signal_csv(path) : read_signal_f64(path);
}

std::string measurement_set_to_json(const MeasurementSet& set) {
    nlohmann::json j;
    j["n"] = set.n;
    j["t"] = set.t;
    j["sigma"] = set.sigma;
    j["threshold"] = set.threshold;
    j["entries"] = nlohmann::json::array();
    for (const auto& e : set.entries) {
        j["entries"].push_back({{"filter", e.filter},
                                {"y0_re", e.y0.real()},
                                {"y0_im", e.y0.imag()},
                                {"y1_re", e.y1.real()},
                                {"y1_im", e.y1.imag()}});
    }
    return j.dump();
}

MeasurementSet measurement_set_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    MeasurementSet set;
    set.n = j.at("n").get<std::size_t>();
    set.t = j.at("t").get<std::size_t>();
    set.sigma = j.at("sigma").get<std::uint64_t>();
    set.threshold = j.at("threshold").get<double>();
    std::size_t last_filter = 0;
    for (const auto& e : j.at("entries")) {
        Measurement m{e.at("filter").get<std::size_t>(),
                      {e.at("y0_re").get<double>(), e.at("y0_im").get<double>()},
                      {e.at("y1_re").get<double>(), e.at("y1_im").get<double>()}};
        require(m.filter >= 1 && m.filter <= set.t, "filter index out of range");
        require(m.filter > last_filter, "entries must be sorted by filter index");
        last_filter = m.filter;
        set.entries.push_back(m);
    }
    return set;
}

void write_measurement_set(const std::filesystem::path& path, const MeasurementSet& set) {
    std::ofstream out(path);
    require(out.good(), "cannot open " + path.string() + " for writing");
    out << measurement_set_to_json(set) << '\n';
    require(out.good(), "write failed: " + path.string());
}

MeasurementSet read_measurement_set(const std::filesystem::path& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return measurement_set_from_json(buffer.str());
}

}  // namespace cshatter

#include "icosa/config.hpp"

#include <fstream>
#include <sstream>

#include "icosa/errors.hpp"

namespace icosa {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
    std::istringstream is(value);
    T out{};
    is >> out;
    if (!is || !is.eof()) throw InvalidArgument("bad value for " + key + ": '" + value + "'");
    return out;
}

} // namespace

void Config::set(const std::string& key, const std::string& value) {
    if (key == "tol_geo") {
        tol_geo = parse_number<double>(key, value);
        if (!(tol_geo > 0.0)) throw InvalidArgument("tol_geo must be positive");
    } else if (key == "quadrature.kind") {
        quadrature.kind = parse_quadrature_kind(value);
    } else if (key == "quadrature.nodes") {
        quadrature.nodes_per_panel = parse_number<int>(key, value);
    } else if (key == "quadrature.target") {
        quadrature.target_abs_err = parse_number<double>(key, value);
    } else if (key == "seed") {
        seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "billiard.events") {
        billiard_events = parse_number<int>(key, value);
        if (billiard_events < 1) throw InvalidArgument("billiard.events must be positive");
    } else if (key == "tiling.samples") {
        tiling_samples = parse_number<int>(key, value);
        if (tiling_samples < 1) throw InvalidArgument("tiling.samples must be positive");
    } else if (key == "tiling.word_length") {
        tiling_word_length = parse_number<int>(key, value);
    } else {
        throw InvalidArgument("unknown config key '" + key + "'");
    }
    quadrature.validate();
}

Config Config::parse(const std::string& text) {
    Config c;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw InvalidArgument("config line " + std::to_string(lineno) + ": expected key = value");
        c.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return c;
}

Config Config::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot read config " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

} // namespace icosa

#pragma once

#include <cstdint>
#include <string>

#include "icosa/quadrature.hpp"

namespace icosa {

// Run settings. File format: one `key = value` per line, `#` starts a
// comment, blank lines ignored. Keys:
//   tol_geo               point classification tolerance (default 1e-9)
//   quadrature.kind       gauss-jacobi-split | tanh-sinh
//   quadrature.nodes      nodes per Jacobi panel (default 24)
//   quadrature.target     absolute error target (default 1e-12)
//   seed                  base seed for every sampled check (default 12345)
//   billiard.events       events per trajectory in verify (default 30)
//   tiling.samples        sample count for tiling checks (default 200)
//   tiling.word_length    word length for group enumeration (default 8)
struct Config {
    double tol_geo = 1e-9;
    QuadratureRule quadrature;
    std::uint64_t seed = 12345;
    int billiard_events = 30;
    int tiling_samples = 200;
    int tiling_word_length = 8;

    // Throws InvalidArgument on an unknown key or malformed value.
    void set(const std::string& key, const std::string& value);
    static Config load(const std::string& path);
    static Config parse(const std::string& text);
};

} // namespace icosa

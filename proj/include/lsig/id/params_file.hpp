#pragma once

#include <filesystem>
#include <string>

#include "lsig/id/scheme.hpp"

namespace lsig {

// Text parameter files: one key=value per line, '#' starts a comment.
//   scheme=schnorr with p, q, g (decimal or 0x-prefixed hex)
//   scheme=rlwe    with n, q, sigma, mu and setup_seed (a is derived by
//                  rlwe_setup from a generator seeded with setup_seed)
// Throws InvalidParams on missing keys or failed validation.
Scheme load_params_file(const std::filesystem::path& path);
Scheme parse_params_text(const std::string& text);

// Directory holding the in-repo parameter files (LSIG_PARAMS_DIR at build time).
std::filesystem::path default_params_dir();

// params/schnorr-2048.params or params/rlwe-desk.params.
Scheme default_scheme(SchemeId id);

// p = 23, q = 11, g = 2.
Scheme tiny_schnorr();
// n = 16, q = 4294967371, sigma = 2, mu = 16, from the desk setup seed.
Scheme desk_rlwe();

}  // namespace lsig

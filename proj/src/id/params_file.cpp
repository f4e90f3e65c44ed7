#include "lsig/id/params_file.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "lsig/errors.hpp"

namespace lsig {

namespace {

constexpr std::uint64_t kDeskSetupSeed = 20261018;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

const std::string& need(const std::map<std::string, std::string>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw InvalidParams("parameter file is missing '" + key + "'");
  return it->second;
}

mpz_class parse_big(const std::string& s) {
  mpz_class v;
  const bool hex = s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0;
  if (v.set_str(hex ? s.substr(2) : s, hex ? 16 : 10) != 0) {
    throw InvalidParams("bad integer '" + s + "'");
  }
  return v;
}

std::uint64_t parse_u64(const std::string& s) {
  try {
    std::size_t pos = 0;
    const auto v = std::stoull(s, &pos, 0);
    if (pos != s.size()) throw InvalidParams("bad integer '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw InvalidParams("bad integer '" + s + "'");
  }
}

}  // namespace

Scheme parse_params_text(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidParams("parameter line without '=': " + line);
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  const std::string& scheme = need(kv, "scheme");
  const std::string name = kv.count("name") ? kv["name"] : scheme;
  if (scheme == "schnorr") {
    return Scheme::schnorr(GroupParams::create(parse_big(need(kv, "p")), parse_big(need(kv, "q")),
                                               parse_big(need(kv, "g")), name));
  }
  if (scheme == "rlwe") {
    double sigma = 0;
    try {
      sigma = std::stod(need(kv, "sigma"));
    } catch (const std::logic_error&) {
      throw InvalidParams("bad sigma");
    }
    SeededRng rng(parse_u64(need(kv, "setup_seed")));
    return Scheme::rlwe(rlwe_setup(static_cast<std::uint32_t>(parse_u64(need(kv, "n"))),
                                   parse_u64(need(kv, "q")), sigma,
                                   static_cast<std::uint32_t>(parse_u64(need(kv, "mu"))), rng));
  }
  throw InvalidParams("unknown scheme '" + scheme + "'");
}

Scheme load_params_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParams("cannot open parameter file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_params_text(ss.str());
}

std::filesystem::path default_params_dir() {
#ifdef LSIG_PARAMS_DIR
  return LSIG_PARAMS_DIR;
#else
  return "params";
#endif
}

Scheme default_scheme(SchemeId id) {
  const char* file = id == SchemeId::Schnorr ? "schnorr-2048.params" : "rlwe-desk.params";
  return load_params_file(default_params_dir() / file);
}

Scheme tiny_schnorr() { return Scheme::schnorr(GroupParams::tiny()); }

Scheme desk_rlwe() {
  SeededRng rng(kDeskSetupSeed);
  return Scheme::rlwe(rlwe_setup(16, 4294967371ULL, 2.0, 16, rng));
}

}  // namespace lsig

#include "lsig/cli/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "lsig/cli/keyfile.hpp"
#include "lsig/errors.hpp"
#include "lsig/forklab/forklab.hpp"
#include "lsig/harness/harness.hpp"
#include "lsig/id/codec.hpp"
#include "lsig/id/params_file.hpp"
#include "lsig/xof.hpp"

namespace lsig::cli {

namespace {

// LSIG_SEED, when set, seeds every command; the label keeps separate
// invocations (one keygen per output name, say) from colliding.
SeededRng command_rng(const std::string& label) {
  if (auto seed = seed_from_env()) {
    ByteWriter w;
    w.put_framed(Bytes{'l', 's', 'i', 'g'});
    w.put_u64_le(*seed);
    w.put_framed(Bytes(label.begin(), label.end()));
    const auto digest = shake256(w.bytes(), 32);
    return SeededRng(ByteSpan(digest));
  }
  return SeededRng::from_entropy();
}

Scheme load_scheme(const std::string& name, const std::string& params_file) {
  const auto id = scheme_from_name(name);
  if (params_file.empty()) return default_scheme(id);
  auto s = load_params_file(params_file);
  if (s.id() != id) throw SchemeMismatch("params file describes " + scheme_name(s.id()) + ", not " + name);
  return s;
}

void require_same_scheme(const LsigFile& a, const LsigFile& b, const std::string& what) {
  if (a.scheme != b.scheme || a.params != b.params) throw SchemeMismatch("scheme mismatch: " + what);
}

struct Options {
  std::string scheme;
  std::string params_file;
  std::string out;
  std::vector<std::string> keys;
  std::string message_file;
  std::string out_sig;
  std::string trace;
  std::string agg_key;
  std::string sig;
  std::string adversary;
  std::uint32_t q = 2;
  std::uint64_t N = 65536;
  std::uint64_t trials = 10000;
  std::optional<std::uint64_t> seed;
  std::vector<std::uint32_t> t_list;
  std::uint64_t bench_trials = 5;
};

int cmd_keygen(const Options& o, std::ostream& out) {
  const auto scheme = load_scheme(o.scheme, o.params_file);
  auto rng = command_rng("keygen:" + std::filesystem::path(o.out).filename().string());
  const auto kp = keygen(scheme, rng);
  write_bytes(o.out + ".pub", encode_file(make_public_key_file(scheme, kp.pk)));
  write_bytes(o.out + ".sec", encode_file(make_secret_key_file(scheme, kp)));
  out << o.out << ".pub\n" << o.out << ".sec\n";
  return 0;
}

int cmd_aggregate(const Options& o, std::ostream& out) {
  std::vector<LsigFile> files;
  for (const auto& k : o.keys) files.push_back(read_file(k, FileKind::PublicKey));
  for (const auto& f : files) require_same_scheme(files.front(), f, "key files use different parameters");
  const auto scheme = scheme_of(files.front());
  std::vector<PublicKey> pks;
  for (const auto& f : files) pks.push_back(public_key_of(scheme, f));
  const auto key = key_aggregate(scheme, SignerSet::create(scheme, pks));
  write_bytes(o.out, encode_file(make_aggregated_key_file(scheme, key)));
  out << "t=" << key.t << '\n';
  return 0;
}

int cmd_sign(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<LsigFile> files;
  for (const auto& k : o.keys) files.push_back(read_file(k, FileKind::SecretKey));
  for (const auto& f : files) require_same_scheme(files.front(), f, "key files use different parameters");
  const auto scheme = scheme_of(files.front());
  std::vector<KeyPair> keys;
  for (const auto& f : files) keys.push_back(key_pair_of(scheme, f));
  const auto message = read_bytes(o.message_file);

  auto rng = command_rng("sign");
  const auto report = harness::run_with_keys(scheme, keys, message, harness::Policy::pass(), rng.next());
  if (!o.trace.empty()) {
    std::string text;
    for (const auto& line : report.trace) text += line + '\n';
    write_bytes(o.trace, Bytes(text.begin(), text.end()));
  }
  if (!report.signature || !report.verified) {
    err << "signing failed\n" << harness::format_report(report);
    return 2;
  }
  write_bytes(o.out_sig, encode_file(make_signature_file(scheme, *report.signature)));
  out << "t=" << report.t << '\n';
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  try {
    const auto agg = read_file(o.agg_key, FileKind::AggregatedKey);
    const auto sig = read_file(o.sig, FileKind::Signature);
    require_same_scheme(agg, sig, "signature and aggregated key");
    const auto scheme = scheme_of(agg);
    const auto message = read_bytes(o.message_file);
    if (verify(scheme, aggregated_key_of(scheme, agg), message, signature_of(scheme, sig))) {
      out << "accept\n";
      return 0;
    }
    out << "reject\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    out << "reject\n";
  }
  return 1;
}

int cmd_forklab(const Options& o, std::ostream& out) {
  auto rng = o.seed ? SeededRng(*o.seed) : command_rng("forklab");
  const auto row = forklab::run_lab(o.adversary, o.q, o.N, o.trials, rng);
  out << forklab::lab_csv_header() << '\n' << forklab::lab_csv_row(row) << '\n';
  return 0;
}

int cmd_bench(const Options& o, std::ostream& out) {
  const auto scheme = default_scheme(scheme_from_name(o.scheme));
  auto rng = command_rng("bench");
  const std::string text = "bench";
  const Bytes msg(text.begin(), text.end());
  using clock = std::chrono::steady_clock;

  out << std::left << std::setw(8) << "scheme" << std::setw(6) << "t" << std::setw(12) << "sign_ms" << std::setw(12)
      << "verify_ms" << std::setw(11) << "sig_bytes" << std::setw(14) << "aggkey_bytes" << "aborts\n";
  for (const auto t : o.t_list) {
    double sign_ms = 0, verify_ms = 0;
    std::uint64_t aborts = 0, signed_ok = 0;
    std::size_t sig_bytes = commitment_bytes(scheme) + response_bytes(scheme);
    std::size_t agg_bytes = public_key_bytes(scheme) + 4;
    for (std::uint64_t i = 0; i < o.bench_trials; ++i) {
      const auto t0 = clock::now();
      const auto r = harness::run_honest(scheme, t, msg, rng.next());
      sign_ms += std::chrono::duration<double, std::milli>(clock::now() - t0).count();
      if (!r.signature) {
        ++aborts;
        continue;
      }
      ++signed_ok;
      const auto t1 = clock::now();
      (void)verify(scheme, r.key, msg, *r.signature);
      verify_ms += std::chrono::duration<double, std::milli>(clock::now() - t1).count();
      sig_bytes = encode_signature(scheme, *r.signature).size();
      agg_bytes = encode_aggregated_key(scheme, r.key).size();
    }
    std::ostringstream sm, vm;
    sm << std::fixed << std::setprecision(3) << sign_ms / static_cast<double>(o.bench_trials);
    vm << std::fixed << std::setprecision(3) << (signed_ok ? verify_ms / static_cast<double>(signed_ok) : 0.0);
    out << std::setw(8) << scheme_name(scheme.id()) << std::setw(6) << t << std::setw(12) << sm.str()
        << std::setw(12) << vm.str() << std::setw(11) << sig_bytes << std::setw(14) << agg_bytes << aborts << '\n';
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compact multi-signatures over Schnorr and ring-LWE identification schemes", "lsig"};
  app.require_subcommand(1);
  Options o;

  auto* keygen_cmd = app.add_subcommand("keygen", "Generate a key pair: <out>.pub and <out>.sec");
  keygen_cmd->add_option("--scheme", o.scheme, "schnorr or rlwe")->required()->check(CLI::IsMember({"schnorr", "rlwe"}));
  keygen_cmd->add_option("--params-file", o.params_file, "Parameter file (default: the shipped one)");
  keygen_cmd->add_option("--out", o.out, "Output path prefix")->required();

  auto* agg_cmd = app.add_subcommand("aggregate", "Aggregate public keys");
  agg_cmd->add_option("--keys", o.keys, "Public key files")->required()->expected(1, -1);
  agg_cmd->add_option("--out", o.out, "Aggregated key file")->required();

  auto* sign_cmd = app.add_subcommand("sign", "Run the signing protocol locally for the given signers");
  sign_cmd->add_option("--keys-with-secrets", o.keys, "Secret key files")->required()->expected(1, -1);
  sign_cmd->add_option("--message-file", o.message_file)->required();
  sign_cmd->add_option("--out-sig", o.out_sig)->required();
  sign_cmd->add_option("--trace", o.trace, "Write the wire trace here");

  auto* verify_cmd = app.add_subcommand("verify", "Verify against an aggregated key; exit 0 accept, 1 reject");
  verify_cmd->add_option("--agg-key", o.agg_key)->required();
  verify_cmd->add_option("--message-file", o.message_file)->required();
  verify_cmd->add_option("--sig", o.sig)->required();

  auto* fork_cmd = app.add_subcommand("forklab", "Estimate acc and frk for a test adversary (CSV)");
  fork_cmd->add_option("--adversary", o.adversary)->required()->check(CLI::IsMember(forklab::synthetic_adversary_names()));
  fork_cmd->add_option("--q", o.q)->check(CLI::Range(2u, 64u));
  fork_cmd->add_option("--N", o.N)->check(CLI::Range(std::uint64_t{2}, ~std::uint64_t{0}));
  fork_cmd->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  fork_cmd->add_option("--seed", o.seed);

  auto* bench_cmd = app.add_subcommand("bench", "Latency and size table");
  bench_cmd->add_option("--scheme", o.scheme)->required()->check(CLI::IsMember({"schnorr", "rlwe"}));
  bench_cmd->add_option("--t-list", o.t_list, "Signer counts, comma separated")->delimiter(',')->required();
  bench_cmd->add_option("--trials", o.bench_trials)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*keygen_cmd) return cmd_keygen(o, out);
    if (*agg_cmd) return cmd_aggregate(o, out);
    if (*sign_cmd) return cmd_sign(o, out, err);
    if (*verify_cmd) return cmd_verify(o, out, err);
    if (*fork_cmd) return cmd_forklab(o, out);
    if (*bench_cmd) {
      for (auto t : o.t_list) {
        if (t < 1) throw std::invalid_argument("t must be >= 1");
      }
      return cmd_bench(o, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace lsig::cli

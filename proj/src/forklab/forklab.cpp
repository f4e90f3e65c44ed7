#include "lsig/forklab/forklab.hpp"

#include <cmath>
#include <sstream>

namespace lsig::forklab {

double lemma1_bound(double acc, std::uint32_t q, std::uint64_t N) {
  if (acc < 0) acc = 0;
  if (acc > 1) acc = 1;
  const double qd = q;
  const double denom = qd * qd * qd * (qd - 1) * (qd - 1) * (qd - 1);
  return 8 * std::pow(acc, 4) / denom - 3.0 / static_cast<double>(N);
}

SyntheticAdversary SyntheticAdversary::threshold(std::uint64_t k1, std::uint64_t k2) {
  SyntheticAdversary a;
  a.kind_ = Kind::Threshold;
  a.name_ = "threshold";
  a.k1_ = k1;
  a.k2_ = k2;
  return a;
}

SyntheticAdversary SyntheticAdversary::by_name(const std::string& name, std::uint32_t q, std::uint64_t N) {
  if (q < 2 || N < 2) throw std::invalid_argument("adversary needs q >= 2 and N >= 2");
  SyntheticAdversary a;
  a.name_ = name;
  a.q_ = q;
  a.N_ = N;
  if (name == "always") {
    a.kind_ = Kind::Always;
  } else if (name == "never") {
    a.kind_ = Kind::Never;
  } else if (name == "bad-order") {
    a.kind_ = Kind::BadOrder;
  } else if (name == "threshold-half" || name == "threshold-tenth") {
    const double p = name == "threshold-half" ? 0.5 : 0.1;
    const auto k = static_cast<std::uint64_t>(std::llround(static_cast<double>(N) * std::sqrt(p)));
    a.kind_ = Kind::Threshold;
    a.k1_ = k;
    a.k2_ = k;
  } else if (name == "random-index") {
    a.kind_ = Kind::RandomIndex;
  } else {
    throw std::invalid_argument("unknown adversary: " + name);
  }
  return a;
}

std::vector<std::string> synthetic_adversary_names() {
  return {"always", "never", "bad-order", "threshold-half", "threshold-tenth", "random-index"};
}

RunOutput<std::uint64_t> SyntheticAdversary::operator()(const int&, const OracleValues& h, const Coin& rho) const {
  RunOutput<std::uint64_t> out;
  switch (kind_) {
    case Kind::Always:
      out = {1, 2, h[1]};
      break;
    case Kind::Never:
      break;
    case Kind::BadOrder:
      out = {2, 1, h[0]};
      break;
    case Kind::Threshold:
      if (h[0] < k1_ && h[1] < k2_) out = {1, 2, h[1]};
      break;
    case Kind::RandomIndex: {
      SeededRng coin_rng(rho);
      const auto q = static_cast<std::uint32_t>(h.size());
      const auto i = static_cast<std::uint32_t>(coin_rng.uniform_int(1, q - 1));
      const auto j = static_cast<std::uint32_t>(coin_rng.uniform_int(i + 1, q));
      if (h[j - 1] < N_ / 2) out = {i, j, h[j - 1]};
      break;
    }
  }
  return out;
}

double SyntheticAdversary::exact_acc() const {
  switch (kind_) {
    case Kind::Always:
    case Kind::BadOrder:
      return 1.0;
    case Kind::Never:
      return 0.0;
    case Kind::Threshold: {
      const double n = static_cast<double>(N_);
      return (static_cast<double>(k1_) / n) * (static_cast<double>(k2_) / n);
    }
    case Kind::RandomIndex:
      return static_cast<double>(N_ / 2) / static_cast<double>(N_);
  }
  return 0.0;
}

LabRow run_lab(const std::string& adversary, std::uint32_t q, std::uint64_t N, std::uint64_t trials, Rng& rng) {
  const auto alg = SyntheticAdversary::by_name(adversary, q, N);
  LabRow row;
  row.adversary = adversary;
  row.q = q;
  row.N = N;
  row.acc = estimate_acc(alg, dummy_input, q, N, trials, rng);
  row.frk = estimate_frk(alg, dummy_input, q, N, trials, rng);
  row.bound = lemma1_bound(row.acc.value - 3 * row.acc.stderr_, q, N);
  row.holds = row.frk.value + 3 * row.frk.stderr_ >= row.bound;
  return row;
}

std::string lab_csv_header() { return "adversary,q,N,trials,acc,acc_stderr,frk,frk_stderr,bound,holds"; }

std::string lab_csv_row(const LabRow& row) {
  std::ostringstream os;
  os.precision(6);
  os << std::fixed << row.adversary << ',' << row.q << ',' << row.N << ',' << row.acc.trials << ','
     << row.acc.value << ',' << row.acc.stderr_ << ',' << row.frk.value << ',' << row.frk.stderr_ << ','
     << row.bound << ',' << (row.holds ? 1 : 0);
  return os.str();
}

}  // namespace lsig::forklab

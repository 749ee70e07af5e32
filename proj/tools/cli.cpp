#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <CLI11.hpp>
#include <json.hpp>

#include "wsplab/badic.hpp"
#include "wsplab/blaschke.hpp"
#include "wsplab/inner_product.hpp"
#include "wsplab/random.hpp"
#include "wsplab/shimorin.hpp"
#include "wsplab/subspace.hpp"
#include "wsplab/weights.hpp"

namespace wsp::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 12 significant digits; the JSON writer prints the shortest form that
// round-trips, which is then at most 12 digits.
json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::strtod(format_real(x).c_str(), nullptr);
}

std::string purity_note() {
  return "Shimorin condition (i), purity of the operator, is assumed analytically and not checked on truncations";
}

struct Common {
  std::string out_path;
  std::string format = "json";
  std::uint64_t seed = 20240611;
};

// Writes the result either to --out or to the given stream.
void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + c.out_path + " for writing");
  f << text;
}

std::string csv_header(const json& config) {
  std::string s;
  for (const auto& [key, value] : config.items()) {
    s += "# " + key + " = " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
  }
  return s;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError(what + ": not a number: '" + s + "'");
  }
  if (used != s.size()) throw UsageError(what + ": not a number: '" + s + "'");
  return v;
}

long to_long(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw UsageError(what + ": not an integer: '" + s + "'");
  }
  if (used != s.size()) throw UsageError(what + ": not an integer: '" + s + "'");
  return v;
}

// "secozk", "z2improved:<alpha>", or anything parse_weights accepts.
WeightSequence resolve_weights(const std::string& text) {
  if (text == "secozk") return secozk_weights();
  if (text.rfind("z2improved:", 0) == 0) return improved_z2_weights(to_double(text.substr(11), "--weights"));
  return parse_weights(text);
}

// "lo:hi:step" or "a,b,c"
std::vector<double> real_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  const auto colon = split(text, ':');
  if (colon.size() == 3) {
    const double lo = to_double(colon[0], what), hi = to_double(colon[1], what), step = to_double(colon[2], what);
    if (!(step > 0.0) || hi < lo) throw UsageError(what + ": range needs lo <= hi and step > 0");
    const long count = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
    for (long i = 0; i < count; ++i) out.push_back(lo + static_cast<double>(i) * step);
    return out;
  }
  for (const std::string& p : split(text, ',')) out.push_back(to_double(trim(p), what));
  if (out.empty()) throw UsageError(what + ": empty list");
  return out;
}

// "lo:hi" or "a,b,c"
std::vector<long> int_list(const std::string& text, const std::string& what) {
  std::vector<long> out;
  const auto colon = split(text, ':');
  if (colon.size() == 2) {
    const long lo = to_long(colon[0], what), hi = to_long(colon[1], what);
    if (hi < lo) throw UsageError(what + ": range needs lo <= hi");
    for (long v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  for (const std::string& p : split(text, ',')) out.push_back(to_long(trim(p), what));
  if (out.empty()) throw UsageError(what + ": empty list");
  return out;
}

// ---------------------------------------------------------------- thresholds

struct ThresholdsArgs {
  int k_max = 6;
};

int cmd_thresholds(const ThresholdsArgs& a, const Common& c, std::ostream& out) {
  if (a.k_max < 1) throw UsageError("--k must be >= 1");
  json config;
  config["subcommand"] = "thresholds";
  config["k_max"] = a.k_max;
  config["format"] = c.format;

  struct Row {
    std::string kind;
    int k;
    double value;
  };
  std::vector<Row> rows;
  for (int k = 1; k <= a.k_max; ++k) rows.push_back({"monomial", k, alpha_threshold_monomial(k)});
  rows.push_back({"z2_improved", 2, z2_improved_alpha_bound()});

  std::string text;
  if (c.format == "csv") {
    text = csv_header(config) + "kind,k,threshold\n";
    for (const Row& r : rows) text += r.kind + "," + std::to_string(r.k) + "," + format_real(r.value) + "\n";
  } else {
    json j;
    j["config"] = config;
    j["rows"] = json::array();
    for (const Row& r : rows) j["rows"].push_back({{"kind", r.kind}, {"k", r.k}, {"threshold", num(r.value)}});
    text = j.dump(2) + "\n";
  }
  emit(c, text, out);
  return exit_ok;
}

// ----------------------------------------------------------------- criterion

struct CriterionArgs {
  double alpha = 0.0;
  std::string weights;
  bool have_alpha = false;
  int k = 1;
  long s0 = 0;
  long n_max = default_scan_limit;
  std::string test = "shimorin";
};

WeightSequence weights_from(const std::string& weights, bool have_alpha, double alpha) {
  if (!weights.empty()) return resolve_weights(weights);
  if (!have_alpha) throw UsageError("one of --alpha or --weights is required");
  return WeightSequence::power_law(alpha);
}

json criterion_json(const CriterionReport& r) {
  json j;
  j["holds"] = r.holds;
  j["scanned_range"] = {r.scan_begin, r.scan_end};
  j["violation_count"] = r.violations.size();
  j["first_violation_index"] = r.first_violation_index();
  if (r.tail) {
    j["tail_certificate"] = {{"applies", r.tail->applies}, {"analytic", r.tail->analytic}, {"note", r.tail->note}};
  }
  return j;
}

int cmd_criterion(const CriterionArgs& a, const Common& c, std::ostream& out) {
  const WeightSequence w = weights_from(a.weights, a.have_alpha, a.alpha);
  json config;
  config["subcommand"] = "criterion";
  config["test"] = a.test;
  config["weights"] = w.describe();
  config["k"] = a.k;
  if (a.test == "shimorin") config["s0"] = a.s0;
  config["nmax"] = a.n_max;
  config["format"] = c.format;

  const CriterionReport r =
      a.test == "concavity" ? concavity_criterion(w, a.k, a.n_max) : shimorin_weight_criterion(w, a.k, a.s0, a.n_max);

  std::string text;
  if (c.format == "csv") {
    json summary = criterion_json(r);
    text = csv_header(config);
    text += "# holds = " + std::string(r.holds ? "true" : "false") + "\n";
    if (r.tail) text += "# tail_certificate = " + r.tail->note + "\n";
    text += "# note = " + purity_note() + "\n";
    text += "condition,index,lhs,rhs\n";
    for (const Violation& v : r.violations) {
      text += v.condition + "," + std::to_string(v.index) + "," + format_real(v.lhs) + "," + format_real(v.rhs) + "\n";
    }
  } else {
    json j;
    j["config"] = config;
    j["result"] = criterion_json(r);
    j["violations"] = json::array();
    for (const Violation& v : r.violations) {
      j["violations"].push_back({{"condition", v.condition}, {"index", v.index}, {"lhs", num(v.lhs)}, {"rhs", num(v.rhs)}});
    }
    j["note"] = purity_note();
    text = j.dump(2) + "\n";
  }
  emit(c, text, out);
  return r.holds ? exit_ok : exit_violated;
}

// ---------------------------------------------------------------------- scan

struct ScanArgs {
  std::string alphas = "-1:0:0.25";
  std::string ks = "1:6";
  std::string s0s = "0";
  long n_max = default_scan_limit;
  int threads = 0;
};

int cmd_scan(const ScanArgs& a, const Common& c, std::ostream& out) {
  const std::vector<double> alphas = real_list(a.alphas, "--alpha");
  const std::vector<long> ks = int_list(a.ks, "--k");
  // "k" entries stand for s0 = k, encoded as -1
  std::vector<long> s0s;
  for (const std::string& part : split(a.s0s, ',')) {
    if (trim(part) == "k") {
      s0s.push_back(-1);
    } else {
      for (long v : int_list(part, "--s0")) s0s.push_back(v);
    }
  }
  for (long k : ks) {
    if (k < 1) throw UsageError("--k values must be >= 1");
  }

  struct Job {
    double alpha;
    long k;
    long s0;
    bool holds = false;
    long first = -1;
  };
  std::vector<Job> jobs;
  for (double al : alphas) {
    for (long k : ks) {
      for (long s0 : s0s) jobs.push_back({al, k, s0 < 0 ? k : s0});
    }
  }

  // independent grid points; each worker writes only its own slots
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers =
      std::min<unsigned>(a.threads > 0 ? static_cast<unsigned>(a.threads) : hw, static_cast<unsigned>(jobs.size()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        Job& job = jobs[i];
        const CriterionReport r = shimorin_weight_criterion(WeightSequence::power_law(job.alpha),
                                                            static_cast<int>(job.k), job.s0, a.n_max);
        job.holds = r.holds;
        job.first = r.first_violation_index();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::sort(jobs.begin(), jobs.end(), [](const Job& x, const Job& y) {
    return std::tie(x.alpha, x.k, x.s0) < std::tie(y.alpha, y.k, y.s0);
  });
  jobs.erase(std::unique(jobs.begin(), jobs.end(),
                         [](const Job& x, const Job& y) { return x.alpha == y.alpha && x.k == y.k && x.s0 == y.s0; }),
             jobs.end());

  json config;
  config["subcommand"] = "scan";
  config["alpha"] = a.alphas;
  config["k"] = a.ks;
  config["s0"] = a.s0s;
  config["nmax"] = a.n_max;
  config["weights"] = "power:<alpha>";
  config["format"] = c.format;

  std::string text;
  if (c.format == "csv") {
    text = csv_header(config) + "alpha,k,s0,holds,first_violation_index\n";
    for (const Job& j : jobs) {
      text += format_real(j.alpha) + "," + std::to_string(j.k) + "," + std::to_string(j.s0) + "," +
              (j.holds ? "true" : "false") + "," + std::to_string(j.first) + "\n";
    }
  } else {
    json j;
    j["config"] = config;
    j["rows"] = json::array();
    for (const Job& r : jobs) {
      j["rows"].push_back({{"alpha", num(r.alpha)},
                           {"k", r.k},
                           {"s0", r.s0},
                           {"holds", r.holds},
                           {"first_violation_index", r.first}});
    }
    text = j.dump(2) + "\n";
  }
  emit(c, text, out);
  return exit_ok;
}

// ----------------------------------------------------------------- decompose

struct DecomposeArgs {
  std::string blaschke;
  std::string f;
  int depth = 0;
};

ComplexSeries trimmed(const ComplexSeries& s) {
  const int deg = s.effective_degree(1e-14 * std::max(1.0, s.max_abs()));
  return s.truncated(std::max(deg, 0));
}

json series_json(const ComplexSeries& s) {
  json a = json::array();
  for (const cplx& v : s.coeffs()) a.push_back({num(v.real()), num(v.imag())});
  return a;
}

int cmd_decompose(const DecomposeArgs& a, const Common& c, std::ostream& out) {
  if (a.blaschke.empty() || a.f.empty()) throw UsageError("decompose needs --blaschke and --f");
  const BlaschkeProduct b = parse_blaschke(a.blaschke);
  const ComplexSeries f = parse_series(a.f);
  const BAdicCoefficients d = b_adic_decompose(f, b, a.depth);

  json config;
  config["subcommand"] = "decompose";
  config["blaschke"] = b.describe();
  config["f"] = format_series(f);
  config["depth"] = a.depth > 0 ? a.depth : default_depth(b, f.degree());
  config["format"] = c.format;

  std::string text;
  if (c.format == "csv") {
    text = csv_header(config);
    text += "# layers = " + std::to_string(d.depth()) + "\n";
    text += "# residual_h2_norm = " + format_real(d.residual_norm) + "\n";
    text += "index,h2_norm,coefficients\n";
    for (int k = 0; k < d.depth(); ++k) {
      text += std::to_string(k) + "," + format_real(d.layer_norm(k)) + "," +
              quoted(format_series(trimmed(d.layers[static_cast<std::size_t>(k)]))) + "\n";
    }
  } else {
    json j;
    j["config"] = config;
    j["residual_h2_norm"] = num(d.residual_norm);
    j["layers"] = json::array();
    for (int k = 0; k < d.depth(); ++k) {
      j["layers"].push_back({{"index", k},
                             {"h2_norm", num(d.layer_norm(k))},
                             {"coefficients", series_json(trimmed(d.layers[static_cast<std::size_t>(k)]))}});
    }
    text = j.dump(2) + "\n";
  }
  emit(c, text, out);
  return exit_ok;
}

// --------------------------------------------------------------------- bnorm

struct BNormArgs {
  std::string blaschke;
  std::string f;
  double alpha = 0.0;
  int depth = 0;
  int trials = 0;
  int n = 16;
};

int cmd_bnorm(const BNormArgs& a, const Common& c, std::ostream& out) {
  if (a.blaschke.empty()) throw UsageError("bnorm needs --blaschke");
  if (a.f.empty() && a.trials <= 0) throw UsageError("bnorm needs --f or --trials");
  const BlaschkeProduct b = parse_blaschke(a.blaschke);

  json config;
  config["subcommand"] = "bnorm";
  config["blaschke"] = b.describe();
  config["alpha"] = num(a.alpha);
  config["depth"] = a.depth;
  if (!a.f.empty()) config["f"] = format_series(parse_series(a.f));
  if (a.trials > 0) {
    config["trials"] = a.trials;
    config["N"] = a.n;
    config["seed"] = c.seed;
  }
  config["format"] = c.format;

  json result;
  if (!a.f.empty()) {
    const ComplexSeries f = parse_series(a.f);
    const BNorm bn = b_norm(f, b, a.alpha, a.depth);
    const double plain = weighted_norm(f, WeightSequence::power_law(a.alpha));
    result["b_norm"] = num(bn.value);
    result["alpha_norm"] = num(plain);
    result["ratio"] = num(plain > 0.0 ? bn.value / plain : std::nan(""));
    result["supported_regime"] = bn.supported_regime;
  }
  if (a.trials > 0) {
    const NormEquivalence ne = norm_equivalence_estimate(b, a.alpha, a.n, a.trials, c.seed);
    result["ratio_min"] = num(ne.c_min);
    result["ratio_max"] = num(ne.c_max);
    result["supported_regime"] = ne.supported_regime;
  }

  std::string text;
  if (c.format == "csv") {
    text = csv_header(config);
    std::string head, row;
    for (const auto& [key, value] : result.items()) {
      head += (head.empty() ? "" : ",") + key;
      row += (row.empty() ? "" : ",") +
             (value.is_boolean() ? std::string(value.get<bool>() ? "true" : "false")
                                 : value.is_null() ? std::string("nan") : format_real(value.get<double>()));
    }
    text += head + "\n" + row + "\n";
  } else {
    json j;
    j["config"] = config;
    j["result"] = result;
    text = j.dump(2) + "\n";
  }
  emit(c, text, out);
  return exit_ok;
}

// ------------------------------------------------------------------ wsp-test

struct WspArgs {
  std::string descriptor;
  std::map<std::string, std::string> overrides;
};

const std::vector<std::string>& descriptor_keys() {
  static const std::vector<std::string> keys = {
      "check",  "generators", "random_generators", "z_invariant", "direct_sum", "blaschke", "k",
      "ip",     "alpha",      "weights",           "depth",       "shift",      "N",        "N_compare",
      "seed",   "guard",      "tolerance"};
  return keys;
}

std::map<std::string, std::string> read_descriptor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read descriptor " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(t.substr(0, eq));
    const auto& keys = descriptor_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    kv[key] = trim(t.substr(eq + 1));
  }
  return kv;
}

bool truthy(const std::string& s) { return s == "true" || s == "1" || s == "yes"; }

int cmd_wsp_test(const WspArgs& a, const Common& c, std::ostream& out) {
  std::map<std::string, std::string> kv = read_descriptor(a.descriptor);
  for (const auto& [k, v] : a.overrides) kv[k] = v;
  auto get = [&](const std::string& key, const std::string& fallback) {
    auto it = kv.find(key);
    return it == kv.end() ? fallback : it->second;
  };

  const std::string check = get("check", "wsp");
  if (check != "wsp" && check != "corollary") throw UsageError("check must be wsp or corollary");
  const int n = static_cast<int>(to_long(get("N", "64"), "N"));
  const int n_compare = static_cast<int>(to_long(get("N_compare", "40"), "N_compare"));
  const std::uint64_t seed = static_cast<std::uint64_t>(to_long(get("seed", std::to_string(c.seed)), "seed"));
  const int guard = static_cast<int>(to_long(get("guard", std::to_string(default_defect_guard)), "guard"));
  const double tolerance = to_double(get("tolerance", "1e-06"), "tolerance");
  const double alpha = to_double(get("alpha", "-1"), "alpha");

  BlaschkeProduct b = BlaschkeProduct::monomial(1);
  int k = 0;
  if (check == "corollary") {
    k = static_cast<int>(to_long(get("k", "1"), "k"));
    b = BlaschkeProduct::monomial(k);
  } else if (kv.count("blaschke")) {
    b = parse_blaschke(kv["blaschke"]);
  } else {
    b = BlaschkeProduct::monomial(static_cast<int>(to_long(get("k", "2"), "k")));
  }

  std::vector<ComplexSeries> generators;
  if (kv.count("generators")) {
    for (const std::string& g : split(kv["generators"], '|')) generators.push_back(parse_series(trim(g)));
  }
  if (kv.count("random_generators")) {
    const auto parts = split(kv["random_generators"], ':');
    if (parts.size() != 2) throw UsageError("random_generators must be <count>:<zeros>");
    const long count = to_long(parts[0], "random_generators"), zeros = to_long(parts[1], "random_generators");
    for (long i = 0; i < count; ++i) {
      auto rng = substream(seed, static_cast<std::uint64_t>(i));
      generators.push_back(polynomial_from_zeros(random_separated_zeros(rng, static_cast<int>(zeros))));
    }
  }
  if (generators.empty()) throw UsageError("descriptor has no generators");

  const bool monomial = b.is_monomial();
  const int d = b.degree();
  if (truthy(get("direct_sum", "false"))) {
    if (!monomial) throw UsageError("direct_sum needs B = z^k");
    // generator i lives in copy i mod k: z^j g(z^k)
    for (std::size_t i = 0; i < generators.size(); ++i) {
      std::vector<ComplexSeries> parts(static_cast<std::size_t>(d), ComplexSeries::zero(0));
      parts[i % static_cast<std::size_t>(d)] = generators[i];
      generators[i] = even_odd_merge(parts);
    }
  }
  if (truthy(get("z_invariant", "false"))) {
    if (!monomial) throw UsageError("z_invariant needs B = z^k");
    const std::vector<ComplexSeries> base = generators;
    for (int j = 1; j < d; ++j) {
      for (const ComplexSeries& g : base) {
        generators.push_back(series_mul(g, ComplexSeries::monomial(j, j), g.degree() + j));
      }
    }
  }

  const std::string ip_kind = get("ip", "taylor");
  const int depth = static_cast<int>(to_long(get("depth", "0"), "depth"));
  InnerProductSpec ip = InnerProductSpec::taylor_alpha(alpha);
  if (ip_kind == "taylor") {
    ip = InnerProductSpec::taylor(kv.count("weights") ? resolve_weights(kv["weights"]) : WeightSequence::power_law(alpha));
  } else if (ip_kind == "badic") {
    ip = InnerProductSpec::badic(b, kv.count("weights") ? resolve_weights(kv["weights"]) : WeightSequence::power_law(alpha),
                                 depth);
  } else if (ip_kind == "shifted") {
    ip = InnerProductSpec::shifted(static_cast<int>(to_long(get("shift", std::to_string(d)), "shift")), alpha);
  } else {
    throw UsageError("ip must be taylor, badic or shifted");
  }
  if (check == "corollary" && ip_kind != "taylor") throw UsageError("corollary uses the usual D_alpha norm (ip=taylor)");

  const DefectReport r = check == "corollary" ? corollary_check(generators, k, alpha, n, n_compare, guard)
                                              : wsp_defect(generators, b, ip, n, n_compare, guard);
  const bool converged = r.defect <= tolerance;

  json config;
  config["subcommand"] = "wsp-test";
  config["descriptor"] = a.descriptor;
  config["check"] = check;
  config["blaschke"] = check == "corollary" ? "z^" + std::to_string(k) + " (peel with z^" + std::to_string(2 * k) + ")"
                                            : b.describe();
  config["ip"] = check == "corollary" ? InnerProductSpec::taylor_alpha(alpha).describe() : ip.describe();
  json gens = json::array();
  for (const ComplexSeries& g : generators) gens.push_back(format_series(g));
  config["generators"] = gens;
  config["N"] = n;
  config["N_compare"] = n_compare;
  config["guard"] = guard;
  config["seed"] = seed;
  config["tolerance"] = num(tolerance);
  config["format"] = c.format;

  std::string text;
  if (c.format == "csv") {
    text = csv_header(config);
    text += "defect,reverse_defect,dim_M,dim_W,dim_G,N,N_compare,N_wide,converged\n";
    text += format_real(r.defect) + "," + format_real(r.reverse_defect) + "," + std::to_string(r.dim_m) + "," +
            std::to_string(r.dim_w) + "," + std::to_string(r.dim_g) + "," + std::to_string(r.n) + "," +
            std::to_string(r.n_compare) + "," + std::to_string(r.n_wide) + "," + (converged ? "true" : "false") + "\n";
  } else {
    json j;
    j["defect"] = num(r.defect);
    j["dims"] = {{"M", r.dim_m}, {"W", r.dim_w}, {"G", r.dim_g}};
    j["N"] = r.n;
    j["N_compare"] = r.n_compare;
    j["N_wide"] = r.n_wide;
    j["reverse_defect"] = num(r.reverse_defect);
    j["verdict"] = converged ? "defect within tolerance" : "no convergence observed at this truncation";
    j["config"] = config;
    text = j.dump() + "\n";
  }
  emit(c, text, out);
  return converged ? exit_ok : exit_violated;
}

// ------------------------------------------------------------ operator-check

struct OperatorArgs {
  std::string blaschke;
  int k = 1;
  std::string ip = "taylor";
  double alpha = 0.0;
  bool have_alpha = false;
  std::string weights;
  int depth = 0;
  int shift = -1;
  int n_in = 64;
};

int cmd_operator_check(const OperatorArgs& a, const Common& c, std::ostream& out) {
  if (a.n_in < 0) throw UsageError("--N must be >= 0");
  const BlaschkeProduct b = a.blaschke.empty() ? BlaschkeProduct::monomial(a.k) : parse_blaschke(a.blaschke);
  const int d = b.degree();

  InnerProductSpec spec = InnerProductSpec::taylor_alpha(0.0);
  if (a.ip == "taylor") {
    spec = InnerProductSpec::taylor(weights_from(a.weights, a.have_alpha, a.alpha));
  } else if (a.ip == "badic") {
    spec = InnerProductSpec::badic(b, weights_from(a.weights, a.have_alpha, a.alpha), a.depth);
  } else {
    if (!a.have_alpha) throw UsageError("--ip shifted needs --alpha");
    spec = InnerProductSpec::shifted(a.shift >= 0 ? a.shift : d, a.alpha);
  }

  const int n_out = operator_check_output_degree(b, a.n_in);
  const Eigen::MatrixXcd t = multiplication_matrix(b, a.n_in, n_out);
  const auto form = InnerProduct::materialize(spec, n_out);
  const OperatorCheck r = shimorin_operator_check(t, form->gram(), a.n_in);

  json config;
  config["subcommand"] = "operator-check";
  config["blaschke"] = b.describe();
  config["ip"] = spec.describe();
  config["N_in"] = a.n_in;
  config["N_out"] = n_out;
  config["format"] = c.format;

  std::string text;
  if (c.format == "csv") {
    text = csv_header(config) + "# note = " + purity_note() + "\nmin_eig,holds\n";
    text += format_real(r.min_eig) + "," + (r.holds ? "true" : "false") + "\n";
  } else {
    json j;
    j["config"] = config;
    j["result"] = {{"min_eig", num(r.min_eig)}, {"holds", r.holds}, {"tolerance", num(operator_check_tolerance)}};
    j["note"] = purity_note();
    text = j.dump(2) + "\n";
  }
  emit(c, text, out);
  return r.holds ? exit_ok : exit_violated;
}

void add_common(CLI::App* sub, Common& c, bool seeded) {
  sub->add_option("--out", c.out_path, "Write the result to this file instead of standard output");
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  if (seeded) sub->add_option("--seed", c.seed, "Seed for randomized parts (echoed in the output)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Blaschke multiplication operators on weighted Dirichlet spaces: criteria, decompositions, defects",
               "wsplab"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  Common common;

  ThresholdsArgs th;
  auto* s_th = app.add_subcommand("thresholds", "Closed-form alpha thresholds for z^k and the improved z^2 bound.\n"
                                                "CSV columns: kind,k,threshold");
  s_th->add_option("--k", th.k_max, "Largest k");
  add_common(s_th, common, false);

  CriterionArgs cr;
  auto* s_cr = app.add_subcommand("criterion", "Shimorin weight conditions (a)/(b) for z^k, or the concavity test.\n"
                                               "CSV columns: condition,index,lhs,rhs (one row per violation)");
  auto* cr_alpha = s_cr->add_option("--alpha", cr.alpha, "Power-law weights (n+1)^alpha");
  s_cr->add_option("--weights", cr.weights,
                   "power:<a> | shifted:<k>:<w> | scaled:<c>:<w> | explicit:<w0>,...|<tail> | secozk | z2improved:<a>");
  s_cr->add_option("--k", cr.k, "Stride k of the shift z^k")->check(CLI::PositiveNumber);
  s_cr->add_option("--s0", cr.s0, "First index of condition (a)")->check(CLI::NonNegativeNumber);
  s_cr->add_option("--nmax", cr.n_max, "Last index scanned for condition (b)");
  s_cr->add_option("--test", cr.test, "Which test")->check(CLI::IsMember({"shimorin", "concavity"}));
  add_common(s_cr, common, false);

  ScanArgs sc;
  auto* s_sc = app.add_subcommand("scan", "Grid of Shimorin criteria for power-law weights.\n"
                                          "CSV columns: alpha,k,s0,holds,first_violation_index");
  s_sc->add_option("--alpha", sc.alphas, "alpha grid: lo:hi:step or a,b,c");
  s_sc->add_option("--k", sc.ks, "k grid: lo:hi or a,b,c");
  s_sc->add_option("--s0", sc.s0s, "s0 grid: lo:hi or a,b,c; an entry k means s0 = k");
  s_sc->add_option("--nmax", sc.n_max, "Last index scanned");
  s_sc->add_option("--threads", sc.threads, "Worker threads (0 = hardware concurrency)");
  add_common(s_sc, common, false);

  DecomposeArgs de;
  auto* s_de = app.add_subcommand("decompose", "B-adic layers f = sum h_k B^k.\n"
                                               "CSV columns: index,h2_norm,coefficients (\"re,im;re,im;...\")");
  s_de->add_option("--blaschke", de.blaschke, "\"zeros=re,im;... phase=theta\"");
  s_de->add_option("--f", de.f, "Polynomial \"re,im;re,im;...\" in degree order");
  s_de->add_option("--depth", de.depth, "Maximum number of layers (0 = automatic)");
  add_common(s_de, common, false);

  BNormArgs bn;
  auto* s_bn = app.add_subcommand("bnorm", "B-adic norm with layer weights (k+1)^alpha, and its ratio to ||f||_alpha.\n"
                                           "CSV columns: b_norm,alpha_norm,ratio,supported_regime[,ratio_min,ratio_max]");
  s_bn->add_option("--blaschke", bn.blaschke, "\"zeros=re,im;... phase=theta\"");
  s_bn->add_option("--f", bn.f, "Polynomial \"re,im;re,im;...\"");
  s_bn->add_option("--alpha", bn.alpha, "Layer weight exponent");
  s_bn->add_option("--depth", bn.depth, "Maximum number of layers (0 = automatic)");
  s_bn->add_option("--trials", bn.trials, "Also estimate the norm-equivalence ratio range on random polynomials");
  s_bn->add_option("--N", bn.n, "Degree of the random polynomials");
  add_common(s_bn, common, true);

  WspArgs ws;
  std::string ws_n, ws_nc, ws_seed, ws_ip, ws_alpha, ws_weights, ws_depth, ws_blaschke;
  auto* s_ws = app.add_subcommand(
      "wsp-test",
      "Wandering defect of an invariant subspace from a key=value descriptor.\n"
      "Keys: check (wsp|corollary), generators (series separated by |), random_generators (<count>:<zeros>),\n"
      "z_invariant, direct_sum, blaschke, k, ip (taylor|badic|shifted), alpha, weights, depth, shift,\n"
      "N, N_compare, seed, guard, tolerance. Flags override the descriptor.\n"
      "CSV columns: defect,reverse_defect,dim_M,dim_W,dim_G,N,N_compare,N_wide,converged");
  s_ws->add_option("descriptor", ws.descriptor, "Experiment descriptor file")->required();
  s_ws->add_option("--N", ws_n, "Truncation degree");
  s_ws->add_option("--Ncompare", ws_nc, "Comparison degree");
  s_ws->add_option("--seed", ws_seed, "Seed for random generators");
  s_ws->add_option("--ip", ws_ip, "Inner product kind")->check(CLI::IsMember({"taylor", "badic", "shifted"}));
  s_ws->add_option("--alpha", ws_alpha, "alpha of the norm");
  s_ws->add_option("--weights", ws_weights, "Weight sequence for taylor or b-adic layer weights");
  s_ws->add_option("--depth", ws_depth, "b-adic depth (0 = automatic)");
  s_ws->add_option("--blaschke", ws_blaschke, "\"zeros=re,im;... phase=theta\"");
  add_common(s_ws, common, false);

  OperatorArgs op;
  auto* s_op = app.add_subcommand("operator-check",
                                  "Smallest eigenvalue of 2||Tx||^2 + 2||y||^2 - ||x+Ty||^2 on a truncation.\n"
                                  "CSV columns: min_eig,holds");
  s_op->add_option("--blaschke", op.blaschke, "T = multiplication by B (default z^k)");
  s_op->add_option("--k", op.k, "T = multiplication by z^k")->check(CLI::PositiveNumber);
  s_op->add_option("--ip", op.ip, "Norm")->check(CLI::IsMember({"taylor", "badic", "shifted"}));
  auto* op_alpha = s_op->add_option("--alpha", op.alpha, "Power-law exponent");
  s_op->add_option("--weights", op.weights, "Weight sequence (taylor) or layer weights (badic)");
  s_op->add_option("--depth", op.depth, "b-adic depth (0 = automatic)");
  s_op->add_option("--shift", op.shift, "k of the shifted norm ||S^k f||_alpha (default deg B)");
  s_op->add_option("--N", op.n_in, "Input truncation degree N_in");
  add_common(s_op, common, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (s_th->parsed()) return cmd_thresholds(th, common, out);
    if (s_cr->parsed()) {
      cr.have_alpha = cr_alpha->count() > 0;
      return cmd_criterion(cr, common, out);
    }
    if (s_sc->parsed()) return cmd_scan(sc, common, out);
    if (s_de->parsed()) return cmd_decompose(de, common, out);
    if (s_bn->parsed()) return cmd_bnorm(bn, common, out);
    if (s_ws->parsed()) {
      const std::pair<const char*, const std::string*> flags[] = {
          {"N", &ws_n},       {"N_compare", &ws_nc},      {"seed", &ws_seed},   {"ip", &ws_ip},
          {"alpha", &ws_alpha}, {"weights", &ws_weights}, {"depth", &ws_depth}, {"blaschke", &ws_blaschke}};
      for (const auto& [key, value] : flags) {
        if (!value->empty()) ws.overrides[key] = *value;
      }
      return cmd_wsp_test(ws, common, out);
    }
    if (s_op->parsed()) {
      op.have_alpha = op_alpha->count() > 0;
      return cmd_operator_check(op, common, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_failure;
  }
  err << "usage error: no subcommand\n";
  return exit_usage;
}

}  // namespace wsp::cli

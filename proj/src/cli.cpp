#include "affchar/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "affchar/affinization.hpp"
#include "affchar/spbranch.hpp"
#include "affchar/verify.hpp"

namespace affchar {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Pretty };

struct JobSpec {
  std::string command;
  int n = 0;
  std::string lambda_text;
  std::string s_text = "1";
  std::string mu_text;
  int epsilon = 1;
  std::string format_text = "json";
  std::string suite_text = "all";
  std::uint64_t seed = 20240601;
  bool timing = false;
};

FiniteWeight parse_weight(const std::string& text, int n, const char* flag) {
  if (text.empty()) throw InvalidInput(std::string(flag) + " is required");
  std::vector<int> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (item.empty() || used != item.size())
      throw InvalidInput(std::string(flag) + " '" + text + "' must be comma-separated integers");
    coords.push_back(v);
  }
  if (!text.empty() && text.back() == ',') throw InvalidInput(std::string(flag) + " '" + text + "' has a trailing comma");
  if (static_cast<int>(coords.size()) != n)
    throw InvalidInput(std::string(flag) + " has " + std::to_string(coords.size()) + " entries; expected n = " +
                       std::to_string(n));
  FiniteWeight w(n);
  for (int i = 0; i < n; ++i) w[i] = coords[i];
  return w;
}

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "pretty") return Format::Pretty;
  throw InvalidInput("format '" + text + "' must be one of json, csv, pretty");
}

Json weight_json(const FiniteWeight& w) { return Json(w.to_vector()); }

std::string csv_weight(const FiniteWeight& w) {
  std::string out;
  for (int i = 0; i < w.rank(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
  return out;
}

std::string weight_header(const char* prefix, int n) {
  std::string out;
  for (int i = 1; i <= n; ++i) out += (i > 1 ? "," : "") + std::string(prefix) + "_" + std::to_string(i);
  return out;
}

// The symbolic form used by the pretty printer: 2w1 + w3, or 0.
std::string symbolic(const FiniteWeight& w) {
  std::string out;
  for (int i = 1; i <= w.rank(); ++i) {
    const int c = w.node(i);
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    const int a = std::abs(c);
    out += (a == 1 ? "" : std::to_string(a)) + "w" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::string symbolic(const AffineWeight& x) {
  std::string out = x.finite.is_zero() ? "" : symbolic(x.finite);
  auto append = [&](bool positive, const std::string& magnitude, const char* symbol) {
    if (out.empty()) out = positive ? "" : "-";
    else out += positive ? " + " : " - ";
    out += (magnitude == "1" ? "" : magnitude) + symbol;
  };
  if (x.level != 0) append(x.level > 0, std::to_string(std::abs(x.level)), "L0");
  if (x.delta != Rational(0)) append(x.delta > 0, rational_str(x.delta > 0 ? x.delta : -x.delta), "d");
  return out.empty() ? "0" : out;
}

Json meta(const JobSpec& job, std::chrono::steady_clock::time_point start) {
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return Json{{"tool_version", kToolVersion}, {"elapsed_ms", job.timing ? elapsed.count() : 0}};
}

// Multiplicity entries by depth below lambda on simple roots, then decreasing coordinates.
std::vector<std::pair<FiniteWeight, std::int64_t>> ordered(int n, const FiniteWeight& lambda, const DecompositionTable& t) {
  const RootSystem& rs = RootSystem::type_d(n);
  auto depth = [&](const FiniteWeight& mu) {
    const auto r = rs.to_root(lambda - mu);
    int h = 0;
    if (r)
      for (int v : *r) h += v;
    return h;
  };
  std::vector<std::pair<FiniteWeight, std::int64_t>> rows(t.mults.begin(), t.mults.end());
  std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
    const int da = depth(a.first), db = depth(b.first);
    return da != db ? da < db : b.first < a.first;
  });
  return rows;
}

void emit_table(std::ostream& os, Format fmt, const JobSpec& job, const FiniteWeight& lambda, Family s,
                const DecompositionTable& table, const CharElem* ch, std::chrono::steady_clock::time_point start) {
  const int n = job.n;
  const auto rows = ordered(n, lambda, table);
  if (fmt == Format::Json) {
    Json j{{"n", n}, {"s", family_label(s)}, {"lambda", weight_json(lambda)}, {"dimension", table.dimension}};
    Json mults = Json::array();
    for (const auto& [mu, m] : rows) mults.push_back(Json{{"mu", weight_json(mu)}, {"m", m}, {"dim", dim_irr(n, mu)}});
    j["multiplicities"] = std::move(mults);
    if (ch) {
      Json terms = Json::array();
      for (const auto& [w, c] : ch->sorted_terms()) terms.push_back(Json{{"weight", weight_json(w.finite)}, {"coef", c}});
      j["character"] = std::move(terms);
    }
    j["meta"] = meta(job, start);
    os << j.dump(2) << "\n";
  } else if (fmt == Format::Csv) {
    os << weight_header("mu", n) << ",m,dim\n";
    for (const auto& [mu, m] : rows) os << csv_weight(mu) << "," << m << "," << dim_irr(n, mu) << "\n";
  } else {
    os << "D_" << n << " minimal affinization, family s = " << family_label(s) << ", lambda = " << symbolic(lambda)
       << "\n";
    os << "dimension " << table.dimension << "\n";
    for (const auto& [mu, m] : rows)
      os << "  " << std::left << std::setw(24) << symbolic(mu) << " m = " << m << "  dim = " << dim_irr(n, mu) << "\n";
    if (ch) os << "character: " << ch->size() << " distinct weights\n";
  }
}

Json affine_json(int j, const AffineWeight& x) {
  return Json{{"j", j}, {"finite", weight_json(x.finite)}, {"level", x.level}, {"delta", rational_str(x.delta)}};
}

void emit_xi(std::ostream& os, Format fmt, const JobSpec& job, const FiniteWeight& lambda, Family s,
             std::chrono::steady_clock::time_point start) {
  const int n = job.n;
  const XiSequence xi = xi_sequence(n, lambda, s);
  std::optional<LambdaSequence> big;
  if (s != Family::SpinNm1) big = lambda_sequence(n, lambda, s);
  if (fmt == Format::Json) {
    Json j{{"n", n}, {"s", family_label(s)}, {"lambda", weight_json(lambda)}};
    if (s == Family::One) {
      j["m"] = xi.m;
      j["m_prime"] = xi.m_prime;
    } else {
      j["cut"] = xi.cut;
      j["lambda_bar"] = xi.lambda_bar;
    }
    Json entries = Json::array();
    for (int k = 1; k <= n; ++k) entries.push_back(affine_json(k, xi[k]));
    j["xi"] = std::move(entries);
    if (big) {
      Json lam = Json::array();
      for (int k = 1; k <= n; ++k) lam.push_back(affine_json(k, (*big)[k]));
      j["Lambda"] = std::move(lam);
    } else {
      j["Lambda"] = nullptr;
    }
    j["meta"] = meta(job, start);
    os << j.dump(2) << "\n";
  } else if (fmt == Format::Csv) {
    os << "sequence,j," << weight_header("w", n) << ",level,delta\n";
    auto row = [&](const char* name, int k, const AffineWeight& x) {
      os << name << "," << k << "," << csv_weight(x.finite) << "," << x.level << "," << rational_str(x.delta) << "\n";
    };
    for (int k = 1; k <= n; ++k) row("xi", k, xi[k]);
    if (big)
      for (int k = 1; k <= n; ++k) row("Lambda", k, (*big)[k]);
  } else {
    os << "D_" << n << ", family s = " << family_label(s) << ", lambda = " << symbolic(lambda) << "\n";
    if (s == Family::One) os << "m = " << xi.m << ", m' = " << xi.m_prime << "\n";
    else os << "cut = " << xi.cut << ", lambda_bar = " << xi.lambda_bar << "\n";
    for (int k = 1; k <= n; ++k) os << "  xi_" << k << " = " << symbolic(xi[k]) << "\n";
    if (big)
      for (int k = 1; k <= n; ++k) os << "  Lambda_" << k << " = " << symbolic((*big)[k]) << "\n";
  }
}

void emit_drinfeld(std::ostream& os, Format fmt, const JobSpec& job, const FiniteWeight& lambda, Family s,
                   std::chrono::steady_clock::time_point start) {
  const DrinfeldSpec d = drinfeld(job.n, lambda, s, job.epsilon);
  if (fmt == Format::Json) {
    Json j{{"n", job.n}, {"s", family_label(s)}, {"lambda", weight_json(lambda)}, {"epsilon", d.epsilon}};
    Json factors = Json::array();
    for (const auto& f : d.factors) factors.push_back(Json{{"node", f.node}, {"degree", f.degree}, {"offset", f.offset}});
    j["factors"] = std::move(factors);
    j["meta"] = meta(job, start);
    os << j.dump(2) << "\n";
  } else if (fmt == Format::Csv) {
    os << "node,degree,offset\n";
    for (const auto& f : d.factors) os << f.node << "," << f.degree << "," << f.offset << "\n";
  } else {
    os << "Drinfeld polynomials, D_" << job.n << ", family s = " << family_label(s) << ", epsilon = " << d.epsilon
       << "\n";
    for (const auto& f : d.factors)
      os << "  node " << f.node << ": degree " << f.degree << ", spectral parameter a q^" << f.offset << "\n";
  }
}

void emit_single_mult(std::ostream& os, Format fmt, const JobSpec& job, const FiniteWeight& lambda,
                      const FiniteWeight& mu, std::int64_t m, std::chrono::steady_clock::time_point start) {
  if (fmt == Format::Json) {
    Json j{{"n", job.n},     {"s", family_label(Family::One)}, {"lambda", weight_json(lambda)},
           {"mu", weight_json(mu)}, {"m", m}, {"dim", dim_irr(job.n, mu)}};
    j["meta"] = meta(job, start);
    os << j.dump(2) << "\n";
  } else if (fmt == Format::Csv) {
    os << weight_header("mu", job.n) << ",m,dim\n" << csv_weight(mu) << "," << m << "," << dim_irr(job.n, mu) << "\n";
  } else {
    os << "[L(" << symbolic(lambda) << ") : V(" << symbolic(mu) << ")] = " << m << "\n";
  }
}

int emit_verify(std::ostream& os, Format fmt, const JobSpec& job, std::chrono::steady_clock::time_point start) {
  const Suite suite = parse_suite(job.suite_text);
  const std::vector<CheckResult> results = run_suite(suite, job.n, job.seed);
  const auto passed = std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
  const auto failed = static_cast<std::int64_t>(results.size()) - passed;
  if (fmt == Format::Json) {
    Json j{{"n", job.n}, {"suite", suite_label(suite)}, {"seed", job.seed}};
    Json checks = Json::array();
    for (const auto& r : results)
      checks.push_back(Json{{"suite", r.suite}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    j["checks"] = std::move(checks);
    j["passed"] = passed;
    j["failed"] = failed;
    j["meta"] = meta(job, start);
    os << j.dump(2) << "\n";
  } else if (fmt == Format::Csv) {
    os << "suite,name,passed,detail\n";
    for (const auto& r : results)
      os << r.suite << ",\"" << r.name << "\"," << (r.passed ? "true" : "false") << ",\"" << r.detail << "\"\n";
  } else {
    for (const auto& r : results)
      os << (r.passed ? "PASS " : "FAIL ") << r.suite << ": " << r.name << (r.passed ? "" : " (" + r.detail + ")")
         << "\n";
    os << passed << " passed, " << failed << " failed\n";
  }
  return failed == 0 ? 0 : 3;
}

int dispatch(const JobSpec& job, std::ostream& os) {
  const auto start = std::chrono::steady_clock::now();
  const Format fmt = parse_format(job.format_text);
  require_rank(job.n);
  if (job.command == "verify") return emit_verify(os, fmt, job, start);

  const FiniteWeight lambda = parse_weight(job.lambda_text, job.n, "--lambda");
  require_dominant(job.n, lambda);
  const Family s = parse_family(job.s_text, job.n);

  if (job.command == "char" || job.command == "decomp") {
    const CharElem ch = character(job.n, lambda, s);
    const DecompositionTable table = decompose(ch, job.n);
    emit_table(os, fmt, job, lambda, s, table, job.command == "char" ? &ch : nullptr, start);
  } else if (job.command == "xi") {
    emit_xi(os, fmt, job, lambda, s, start);
  } else if (job.command == "drinfeld") {
    emit_drinfeld(os, fmt, job, lambda, s, start);
  } else if (job.command == "sam") {
    if (s != Family::One) throw InvalidInput("the symplectic multiplicity formula covers family s = 1 only");
    if (!job.mu_text.empty()) {
      const FiniteWeight mu = parse_weight(job.mu_text, job.n, "--mu");
      emit_single_mult(os, fmt, job, lambda, mu, sam_mult(job.n, lambda, mu), start);
    } else {
      emit_table(os, fmt, job, lambda, s, sam_table(job.n, lambda), nullptr, start);
    }
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  JobSpec job;
  CLI::App app{"Characters and multiplicity tables of regular minimal affinizations of type D_n", "affchar"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", kToolVersion);

  auto add_common = [&](CLI::App* sub, bool with_weight) {
    sub->add_option("--n", job.n, "rank, 4 <= n <= 12")->required();
    if (with_weight) {
      sub->add_option("--lambda", job.lambda_text, "highest weight on varpi_1..varpi_n, e.g. 1,0,0,2")->required();
      sub->add_option("--s", job.s_text, "family: 1, n-1 or n")->capture_default_str();
    }
    sub->add_option("--format", job.format_text, "json, csv or pretty")->capture_default_str();
    sub->add_flag("--timing", job.timing, "record wall time in meta.elapsed_ms");
  };
  add_common(app.add_subcommand("char", "character and multiplicity table via the Demazure formula"), true);
  add_common(app.add_subcommand("decomp", "multiplicity table via the Demazure formula"), true);
  add_common(app.add_subcommand("xi", "the weight sequences xi_j and Lambda_j"), true);
  auto* drin = app.add_subcommand("drinfeld", "Drinfeld polynomial data relative to a base a");
  add_common(drin, true);
  drin->add_option("--epsilon", job.epsilon, "sign +1 or -1")->capture_default_str();
  auto* sam = app.add_subcommand("sam", "family-1 multiplicities via the symplectic branching formula");
  add_common(sam, true);
  sam->add_option("--mu", job.mu_text, "single target weight; omit for the full table");
  auto* ver = app.add_subcommand("verify", "run self-check suites");
  add_common(ver, false);
  ver->add_option("--suite", job.suite_text, "demazure, weyl, pipeline or all")->capture_default_str();
  ver->add_option("--seed", job.seed, "seed for the randomized checks")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  job.command = app.get_subcommands().front()->get_name();

  std::ostringstream buffer;
  try {
    const int code = dispatch(job, buffer);
    out << buffer.str();
    return code;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace affchar

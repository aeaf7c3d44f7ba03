#include "colorfact/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "colorfact/asymptotics.hpp"
#include "colorfact/counting.hpp"
#include "colorfact/enumeration.hpp"
#include "colorfact/errors.hpp"
#include "colorfact/oracle.hpp"

namespace colorfact::cli {
namespace {

using nlohmann::json;

struct QueryOptions {
  std::string family;
  int l = 1;
  std::optional<int> k;
  std::string method = "default";
};

CountQuery to_query(const QueryOptions& o) {
  CountQuery q;
  const auto family = parse_family(o.family);
  if (!family) throw UsageError("unknown family '" + o.family + "'");
  const auto method = parse_method(o.method);
  if (!method) throw UsageError("unknown method '" + o.method + "'");
  q.family = *family;
  q.l = o.l;
  q.k = o.k;
  q.method = *method;
  return q;
}

void add_query_options(CLI::App* cmd, QueryOptions& o) {
  cmd->add_option("--family", o.family, "A B a b At Bt at bt muf mug dl fl")->required();
  cmd->add_option("--l", o.l, "number of colors (part count for fl)");
  cmd->add_option("--k", o.k, "number of parts (families A and B only)");
  cmd->add_option("--method", o.method, "dirichlet | recursion | closed")
      ->check(CLI::IsMember({"default", "dirichlet", "recursion", "closed"}));
}

std::string label(const CountQuery& q) {
  std::ostringstream s;
  s << family_name(q.family);
  if (q.family != CountFamily::MuF && q.family != CountFamily::MuG) {
    if (q.k) s << "_{" << *q.k << "," << q.l << "}";
    else s << "_" << q.l;
  }
  return s.str();
}

int do_compute(const QueryOptions& o, std::uint64_t n, const std::string& format, std::ostream& out) {
  const CountQuery q = to_query(o);
  const BigCount value = evaluate(q, factorize(n));
  if (format == "json") {
    json j{{"family", family_name(q.family)}, {"l", q.l}, {"n", n}, {"method", method_name(q.method)},
           {"value", value.get_str()}};
    j["k"] = q.k ? json(*q.k) : json(nullptr);
    out << j.dump() << '\n';
  } else {
    out << value.get_str() << '\n';
  }
  return kOk;
}

int do_table(const QueryOptions& o, std::uint64_t max, const std::string& format, const std::string& slice,
             std::ostream& out) {
  const CountQuery q = to_query(o);
  std::vector<Term> terms;
  if (slice == "all") {
    const ArithSeq seq = sequence(q, static_cast<std::size_t>(max));
    for (std::uint64_t n = 1; n <= max; ++n) terms.emplace_back(n, seq(n));
  } else if (slice == "prime-powers") {
    if (max > 63) throw UsageError("prime-powers slice supports --max up to 63");
    for (std::uint64_t m = 1; m <= max; ++m) {
      terms.emplace_back(m, evaluate(q, FactoredInteger({{2, static_cast<int>(m)}})));
    }
  } else {
    if (max > 15) throw UsageError("primorials slice supports --max up to 15");
    for (std::uint64_t m = 1; m <= max; ++m) terms.emplace_back(m, evaluate(q, factorize(primorial(static_cast<int>(m)))));
  }

  if (format == "bfile") {
    write_bfile(out, terms);
  } else if (format == "csv") {
    out << "n,value\n";
    for (const auto& [n, v] : terms) out << n << ',' << v.get_str() << '\n';
  } else if (format == "json") {
    json rows = json::array();
    for (const auto& [n, v] : terms) rows.push_back({{"n", n}, {"value", v.get_str()}});
    json j{{"family", family_name(q.family)}, {"l", q.l},         {"method", method_name(q.method)},
           {"slice", slice},                  {"terms", rows}};
    j["k"] = q.k ? json(*q.k) : json(nullptr);
    out << j.dump() << '\n';
  } else {
    const std::string name = label(q);
    for (const auto& [n, v] : terms) {
      out << name << '(';
      if (slice == "prime-powers") out << "p^" << n;
      else if (slice == "primorials") out << "Q_" << n;
      else out << n;
      out << ") = " << v.get_str() << '\n';
    }
  }
  return kOk;
}

int do_enumerate(std::uint64_t n, int l, const EnumOptions& options, const std::string& format, std::ostream& out) {
  const auto lists = enum_colored(n, l, options);
  if (format == "json") {
    json items = json::array();
    for (const auto& f : lists) items.push_back(colorfact::to_string(f));
    json j{{"n", n},
           {"l", l},
           {"ordered", options.ordered},
           {"distinct", options.distinct},
           {"exact", options.exact},
           {"count", lists.size()},
           {"factorizations", items}};
    out << j.dump() << '\n';
  } else {
    for (const auto& f : lists) out << colorfact::to_string(f) << '\n';
  }
  return kOk;
}

struct VerifyRow {
  std::string name;
  CountFamily family;
  bool parts;  // iterate k = 0..Omega(n)
};

int do_verify(std::uint64_t max, int lmax, const std::string& oracle, std::ostream& out) {
  if (max > kOracleMaxN || lmax > kOracleMaxL || lmax < 1) {
    throw ResourceError("verify: --max must be <= " + std::to_string(kOracleMaxN) + " and --lmax in 1.." +
                        std::to_string(kOracleMaxL));
  }
  std::vector<OracleMethod> methods;
  if (oracle != "weights") methods.push_back(OracleMethod::Enumeration);
  if (oracle != "enumeration") methods.push_back(OracleMethod::Weights);

  const std::vector<VerifyRow> rows = {
      {"A", CountFamily::A, false},      {"B", CountFamily::B, false},
      {"a", CountFamily::a, false},      {"b", CountFamily::b, false},
      {"At", CountFamily::OrderedA, false}, {"Bt", CountFamily::OrderedB, false},
      {"at", CountFamily::OrderedExactA, false}, {"bt", CountFamily::OrderedExactB, false},
      {"f_{k,l}", CountFamily::A, true}, {"g_{k,l}", CountFamily::B, true},
      {"f~_k", CountFamily::OrderedParts, false}, {"muf", CountFamily::MuF, false},
      {"mug", CountFamily::MuG, false},  {"dl", CountFamily::Divisor, false},
  };

  bool all_ok = true;
  for (const auto& row : rows) {
    std::size_t cases = 0;
    std::optional<std::string> failure;
    const bool moebius = row.family == CountFamily::MuF || row.family == CountFamily::MuG;
    for (std::uint64_t n = 1; n <= max && !failure; ++n) {
      const FactoredInteger fn = factorize(n);
      const int top_l = moebius ? 1 : lmax;
      for (int l = 1; l <= top_l && !failure; ++l) {
        std::vector<std::optional<int>> ks{std::nullopt};
        if (row.parts) {
          ks.clear();
          for (int k = 0; k <= fn.big_omega(); ++k) ks.emplace_back(k);
        }
        for (const auto& k : ks) {
          CountQuery q{row.family, moebius ? -1 : l, k, Method::Default};
          const BigCount expected = evaluate(q, fn);
          for (OracleMethod m : methods) {
            const BigCount got = oracle_count(n, row.family, moebius ? 0 : l, k, m);
            ++cases;
            if (got != expected) {
              std::ostringstream msg;
              msg << "n=" << n << " l=" << l;
              if (k) msg << " k=" << *k;
              msg << " counting=" << expected.get_str() << " oracle=" << got.get_str();
              failure = msg.str();
              break;
            }
          }
          if (failure) break;
        }
      }
    }
    if (failure) {
      all_ok = false;
      out << "FAIL " << row.name << ' ' << *failure << '\n';
    } else {
      out << "PASS " << row.name << " (" << cases << " comparisons)\n";
    }
  }
  return all_ok ? kOk : kMismatch;
}

int do_asymptotic(int l, std::uint64_t x, const std::string& format, std::ostream& out) {
  const AverageOrderReport r = average_order_report(l, x);
  if (format == "json") {
    json j{{"l", l},
           {"x", x},
           {"beta", r.params.beta},
           {"alpha", r.params.alpha},
           {"residue", r.params.residue},
           {"residual", r.params.residual},
           {"partial_sum", r.partial_sum.get_str()},
           {"empirical", r.empirical},
           {"predicted", r.predicted},
           {"ratio", r.ratio},
           {"ratio_residue", r.ratio_residue}};
    out << j.dump() << '\n';
    return kOk;
  }
  out << std::setprecision(12);
  out << "l           " << l << '\n'
      << "x           " << x << '\n'
      << "beta        " << r.params.beta << "  (zeta(beta) = " << l + 1 << "/" << l << ", residual "
      << r.params.residual << ")\n"
      << "alpha       " << r.params.alpha << '\n'
      << "residue     " << r.params.residue << '\n'
      << "sum         " << r.partial_sum.get_str() << '\n'
      << "empirical   " << r.empirical << '\n'
      << "predicted   " << r.predicted << '\n'
      << "ratio       " << r.ratio << '\n';
  return kOk;
}

}  // namespace

std::uint64_t enumeration_guard() {
  if (const char* env = std::getenv("COLORFACT_GUARD")) {
    try {
      const unsigned long long v = std::stoull(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return kDefaultGuard;
}

void write_bfile(std::ostream& out, const std::vector<Term>& terms) {
  for (const auto& [n, v] : terms) out << n << ' ' << v.get_str() << '\n';
}

std::vector<Term> parse_bfile(std::istream& in) {
  std::vector<Term> terms;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto space = line.find(' ');
    if (space == std::string::npos || line.find(' ', space + 1) != std::string::npos) {
      throw UsageError("malformed b-file line: " + line);
    }
    const std::uint64_t n = std::stoull(line.substr(0, space));
    BigCount v;
    if (v.set_str(line.substr(space + 1), 10) != 0) throw UsageError("malformed b-file value: " + line);
    terms.emplace_back(n, v);
  }
  return terms;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Colored factorization counts"};
  app.name("colorfact");
  app.require_subcommand(1);

  QueryOptions compute_opts;
  std::uint64_t compute_n = 0;
  std::string compute_format = "text";
  auto* compute = app.add_subcommand("compute", "evaluate one value");
  add_query_options(compute, compute_opts);
  compute->add_option("--n", compute_n, "positive integer")->required();
  compute->add_option("--format", compute_format)->check(CLI::IsMember({"text", "json"}));

  QueryOptions table_opts;
  std::uint64_t table_max = 0;
  std::string table_format = "text";
  std::string table_slice = "all";
  auto* table = app.add_subcommand("table", "emit a sequence");
  add_query_options(table, table_opts);
  table->add_option("--max", table_max, "last index")->required();
  table->add_option("--format", table_format)->check(CLI::IsMember({"text", "json", "csv", "bfile"}));
  table->add_option("--slice", table_slice)->check(CLI::IsMember({"all", "prime-powers", "primorials"}));

  std::uint64_t enum_n = 0;
  int enum_l = 1;
  EnumOptions enum_opts;
  std::string enum_format = "text";
  auto* enumerate = app.add_subcommand("enumerate", "list colored factorizations");
  enumerate->add_option("--n", enum_n)->required();
  enumerate->add_option("--l", enum_l);
  enumerate->add_flag("--ordered", enum_opts.ordered);
  enumerate->add_flag("--distinct", enum_opts.distinct);
  enumerate->add_flag("--exact", enum_opts.exact);
  enumerate->add_option("--format", enum_format)->check(CLI::IsMember({"text", "json"}));

  std::uint64_t verify_max = 200;
  int verify_lmax = 3;
  std::string verify_oracle = "both";
  auto* verify = app.add_subcommand("verify", "cross-check counts against the brute-force oracle");
  verify->add_option("--max", verify_max);
  verify->add_option("--lmax", verify_lmax);
  verify->add_option("--oracle", verify_oracle)->check(CLI::IsMember({"enumeration", "weights", "both"}));

  int asym_l = 1;
  std::uint64_t asym_x = 1'000'000;
  std::string asym_format = "text";
  auto* asymptotic = app.add_subcommand("asymptotic", "average order of ordered colored counts");
  asymptotic->add_option("--l", asym_l);
  asymptotic->add_option("--x", asym_x);
  asymptotic->add_option("--format", asym_format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "colorfact: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*compute) return do_compute(compute_opts, compute_n, compute_format, out);
    if (*table) return do_table(table_opts, table_max, table_format, table_slice, out);
    if (*enumerate) {
      enum_opts.guard = enumeration_guard();
      return do_enumerate(enum_n, enum_l, enum_opts, enum_format, out);
    }
    if (*verify) return do_verify(verify_max, verify_lmax, verify_oracle, out);
    if (*asymptotic) return do_asymptotic(asym_l, asym_x, asym_format, out);
  } catch (const ResourceError& e) {
    err << "colorfact: " << e.what() << '\n';
    return kResource;
  } catch (const ConsistencyError& e) {
    err << "colorfact: internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::invalid_argument& e) {
    err << "colorfact: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "colorfact: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "colorfact: internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace colorfact::cli

#include "totient/cli.hpp"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "totient/arith.hpp"
#include "totient/classify.hpp"
#include "totient/errors.hpp"
#include "totient/phi.hpp"
#include "totient/power_two.hpp"
#include "totient/preimage.hpp"
#include "totient/sieve.hpp"
#include "totient/version.hpp"

namespace totient::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr const char* kUsage =
    R"(Usage: phitool [--fermat-table FILE] <command> [args] [--json]

Commands:
  phi N                        Euler's totient of N
  preimage M [--csv]           every n with phi(n) = M, plus the bound A(M)
  bound M                      A(M), its contributing primes, and A(M)/2
  table2                       bound table for m = 1, 2, 4, ..., 14
  classify P                   whether 2P is a totient value (P prime)
  sp P COUNT                   primes q with 2q a nontotient and P | 2q+1
  twiceodd COUNT               primes p = 2s+1 with odd s, so 2s is a totient
  pow2 K                       odd preimage of 2^K and the bound A(2^K)
  pow2mult P KMAX              n = 2^k(2P+1), phi(n) = 2^k P, k = 1..KMAX
  sieve N [--save FILE]        totient sieve for 1..N
  carmichael B [--sieve FILE]  every m <= B with exactly one preimage
  ford K B [--sieve FILE]      smallest m <= B with exactly K preimages
  parity SMAX [--sieve FILE]   preimage parity balance of 2s, odd s <= SMAX

Options:
  --json               machine-readable output
  --csv                per-member CSV (preimage only)
  --fermat-table FILE  Fermat-number status overrides: "<i> prime|composite|unknown"
  --save FILE          write the sieve as a binary dump
  --sieve FILE         reuse a sieve dump instead of building one

Environment:
  PHITOOL_SIEVE_BUDGET  maximum sieve entries (default 100000000)

Exit codes: 0 ok, 2 usage error, 3 domain error, 4 resource/overflow error
)";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Args {
  std::string command;
  std::vector<std::string> positional;
  bool to_json = false;
  bool to_csv = false;
  std::optional<std::string> fermat_table;
  std::optional<std::string> save_path;
  std::optional<std::string> sieve_path;
};

Args parse_args(const std::vector<std::string>& raw) {
  Args args;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const std::string& a = raw[i];
    auto need_value = [&](const char* flag) -> const std::string& {
      if (i + 1 >= raw.size())
        throw UsageError(std::string(flag) + " needs a value");
      return raw[++i];
    };
    if (a == "--json") {
      args.to_json = true;
    } else if (a == "--csv") {
      args.to_csv = true;
    } else if (a == "--fermat-table") {
      args.fermat_table = need_value("--fermat-table");
    } else if (a == "--save") {
      args.save_path = need_value("--save");
    } else if (a == "--sieve") {
      args.sieve_path = need_value("--sieve");
    } else if (a.rfind("--", 0) == 0) {
      throw UsageError("unknown option " + a);
    } else if (args.command.empty()) {
      args.command = a;
    } else {
      args.positional.push_back(a);
    }
  }
  if (args.command.empty()) throw UsageError("missing command");
  if (args.to_json && args.to_csv) throw UsageError("--json and --csv are exclusive");
  return args;
}

// Numbers must parse completely; range is the library's concern, so 0 or
// huge values surface as domain errors rather than usage errors.
Nat parse_nat(const std::string& s, const char* what) {
  Nat value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw UsageError(std::string(what) + ": not a number: \"" + s + "\"");
  check_nat_range(value, what);
  return value;
}

void expect_positionals(const Args& args, std::size_t n) {
  if (args.positional.size() != n)
    throw UsageError(args.command + " takes " + std::to_string(n) +
                     " argument(s), got " + std::to_string(args.positional.size()));
}

std::size_t sieve_budget() {
  const char* env = std::getenv("PHITOOL_SIEVE_BUDGET");
  if (env == nullptr) return kDefaultSieveBudget;
  std::size_t value = 0;
  const std::string s(env);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || value == 0)
    throw UsageError("PHITOOL_SIEVE_BUDGET: not a positive number");
  return value;
}

json rational_json(const Rational& r) {
  return json{{"num", r.num}, {"den", r.den}};
}

json members_json(const std::vector<Nat>& v) { return json(v); }

std::string join(const std::vector<Nat>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ' ';
    out << v[i];
  }
  return out.str();
}

// Obtain the sieve for a scan command: reuse a dump when given one,
// otherwise build exactly the required size.
TotientSieve scan_sieve(const Args& args, Nat required) {
  const std::size_t budget = sieve_budget();
  if (args.sieve_path) return TotientSieve::load(*args.sieve_path, budget);
  return build_sieve(required, budget);
}

struct Output {
  json inputs;
  json result;
  std::string text;
  std::string csv;  // preimage only
};

Output cmd_phi(const Args& args) {
  expect_positionals(args, 1);
  const Nat n = parse_nat(args.positional[0], "N");
  const Nat value = phi(n);
  Output out;
  out.inputs = {{"n", n}};
  out.result = {{"n", n}, {"phi", value}};
  out.text = "phi(" + std::to_string(n) + ") = " + std::to_string(value) + "\n";
  return out;
}

Output cmd_preimage(const Args& args) {
  expect_positionals(args, 1);
  const Nat m = parse_nat(args.positional[0], "M");
  const PreimageSet set = preimage(m);
  const bool bounded = (m == 1 || m % 2 == 0);
  Output out;
  out.inputs = {{"m", m}};
  out.result["m"] = m;
  std::ostringstream text;
  text << "m = " << m << "\n";
  std::optional<Rational> bound;
  std::optional<Nat> bound_floor;
  if (bounded) {
    const GuptaBound g = gupta_bound(m);
    bound = g.value;
    bound_floor = g.floor;
    out.result["A"] = bound ? rational_json(*bound) : json(nullptr);
    out.result["A_floor"] = g.floor;
    text << "A(" << m << ") = "
         << (bound ? bound->str() : "(fraction exceeds 64-bit)") << " (floor "
         << g.floor << ")\n";
  } else {
    out.result["A"] = nullptr;
    out.result["A_floor"] = nullptr;
    text << "A(" << m << ") undefined (odd m > 1 is never a totient value)\n";
  }
  out.result["members"] = members_json(set.members);
  out.result["odd_members"] = members_json(set.odd_members);
  out.result["even_members"] = members_json(set.even_members);
  out.result["odd_count"] = set.odd_members.size();
  out.result["even_count"] = set.even_members.size();
  text << "members (" << set.members.size() << "): "
       << (set.members.empty() ? "(none)" : join(set.members)) << "\n"
       << "odd (" << set.odd_members.size() << "): "
       << (set.odd_members.empty() ? "(none)" : join(set.odd_members)) << "\n"
       << "even (" << set.even_members.size() << "): "
       << (set.even_members.empty() ? "(none)" : join(set.even_members)) << "\n";
  out.text = text.str();
  std::ostringstream csv;
  csv << "m,A_num,A_den,n,parity\n";
  for (Nat n : set.members) {
    csv << m << ',';
    if (bound)
      csv << bound->num << ',' << bound->den;
    else
      csv << "-,-";
    csv << ',' << n << ',' << (n % 2 == 1 ? "odd" : "even") << "\n";
  }
  out.csv = csv.str();
  return out;
}

Output cmd_bound(const Args& args) {
  expect_positionals(args, 1);
  const Nat m = parse_nat(args.positional[0], "M");
  const GuptaBound g = gupta_bound(m);
  Output out;
  out.inputs = {{"m", m}};
  out.result = {{"m", m},
                {"A", g.value ? rational_json(*g.value) : json(nullptr)},
                {"A_floor", g.floor},
                {"contributing_primes", members_json(g.contributing_primes)}};
  std::ostringstream text;
  text << "A(" << m << ") = "
       << (g.value ? g.value->str() : "(fraction exceeds 64-bit)") << " (floor "
       << g.floor << ")\n"
       << "contributing primes: " << join(g.contributing_primes) << "\n";
  if (g.value) {
    const Rational odd_bound = g.value->half();
    out.result["odd_member_bound"] = rational_json(odd_bound);
    text << "odd members cannot exceed A/2 = " << odd_bound.str() << "\n";
  } else {
    out.result["odd_member_bound"] = nullptr;
    text << "odd members cannot exceed A/2 (floor " << g.floor / 2 << ")\n";
  }
  out.text = text.str();
  return out;
}

Output cmd_table2(const Args& args) {
  expect_positionals(args, 0);
  const auto rows = bound_table();
  Output out;
  out.inputs = json::object();
  json jrows = json::array();
  std::ostringstream text;
  text << "m      A(m)     phi(A(m))\n";
  for (const auto& row : rows) {
    json jrow = {{"m", row.m}, {"A", rational_json(row.bound)}};
    jrow["phi_of_A"] = row.phi_of_bound ? json(*row.phi_of_bound) : json(nullptr);
    jrows.push_back(jrow);
    std::string a = row.bound.str();
    std::string p = row.phi_of_bound ? std::to_string(*row.phi_of_bound) : "-";
    text << row.m << std::string(7 - std::to_string(row.m).size(), ' ') << a
         << std::string(a.size() < 9 ? 9 - a.size() : 1, ' ') << p << "\n";
  }
  out.result = {{"rows", jrows}};
  out.text = text.str();
  return out;
}

Output cmd_classify(const Args& args) {
  expect_positionals(args, 1);
  const Nat p = parse_nat(args.positional[0], "P");
  const TwicePrimeVerdict verdict = classify_twice_prime(p);
  Output out;
  out.inputs = {{"p", p}};
  out.result = {{"p", p},
                {"two_p", 2 * p},
                {"in_image", verdict.in_image}};
  out.result["witness"] = verdict.witness ? json(*verdict.witness) : json(nullptr);
  out.result["safe_prime"] =
      verdict.safe_prime ? json(*verdict.safe_prime) : json(nullptr);
  std::ostringstream text;
  text << "p = " << p << ", 2p = " << 2 * p << ": ";
  if (verdict.in_image)
    text << "totient value (phi(" << *verdict.witness << ") = " << 2 * p
         << "; " << *verdict.safe_prime << " is a safe prime)\n";
  else
    text << "nontotient (2p+1 = " << 2 * p + 1 << " is composite)\n";
  out.text = text.str();
  return out;
}

Output cmd_sp(const Args& args) {
  expect_positionals(args, 2);
  const Nat p = parse_nat(args.positional[0], "P");
  const Nat count = parse_nat(args.positional[1], "COUNT");
  const auto members = nontotient_family(p, count);
  Output out;
  out.inputs = {{"p", p}, {"count", count}};
  json jmembers = json::array();
  std::ostringstream text;
  for (const auto& member : members) {
    jmembers.push_back({{"k", member.k}, {"q", member.q}, {"two_q", 2 * member.q}});
    text << "q = " << member.q << " (k = " << member.k << ", 2q = " << 2 * member.q
         << " nontotient, 2q+1 = " << 2 * member.q + 1 << " = " << p << " * "
         << (2 * member.q + 1) / p << ")\n";
  }
  out.result = {{"p", p}, {"members", jmembers}};
  out.text = text.str();
  return out;
}

Output cmd_twiceodd(const Args& args) {
  expect_positionals(args, 1);
  const Nat count = parse_nat(args.positional[0], "COUNT");
  const auto witnesses = twice_odd_witnesses(count);
  Output out;
  out.inputs = {{"count", count}};
  json jmembers = json::array();
  std::ostringstream text;
  for (const auto& w : witnesses) {
    jmembers.push_back({{"p", w.p}, {"s", w.s}, {"two_s", 2 * w.s}});
    text << "p = " << w.p << ", s = " << w.s << " (odd), phi(" << w.p
         << ") = " << 2 * w.s << "\n";
  }
  out.result = {{"witnesses", jmembers}};
  out.text = text.str();
  return out;
}

Output cmd_pow2(const Args& args, const FermatStatusTable& table) {
  expect_positionals(args, 1);
  const Nat k = parse_nat(args.positional[0], "K");
  const OddPreimageResult result = odd_preimage_of_power_two(k, table);
  Output out;
  out.inputs = {{"k", k}};
  out.result = {{"k", k}, {"two_pow_k", checked_pow(2, k)}};
  out.result["exists"] = result.undetermined ? json(nullptr) : json(result.exists);
  out.result["witness"] = result.witness ? json(*result.witness) : json(nullptr);
  out.result["blocking_index"] =
      result.blocking_index ? json(*result.blocking_index) : json(nullptr);
  out.result["undetermined"] = result.undetermined;
  const auto count = odd_preimage_count(k, table);
  out.result["odd_count"] = count ? json(*count) : json(nullptr);
  std::ostringstream text;
  text << "2^" << k << " = " << checked_pow(2, k) << "\n";
  if (result.undetermined) {
    text << "odd preimage: undetermined (a needed Fermat status is unknown)\n";
  } else if (result.exists) {
    text << "odd preimage: n = " << *result.witness << " (phi(" << *result.witness
         << ") = 2^" << k << "); it is the only odd solution\n";
  } else {
    text << "odd preimage: none (blocked by composite Fermat number F_"
         << *result.blocking_index << ")\n";
  }
  try {
    const Rational bound = gupta_bound_power_two(k, table);
    out.result["A"] = rational_json(bound);
    text << "A(2^" << k << ") = " << bound.str() << "\n";
  } catch (const UndeterminedStatusError&) {
    out.result["A"] = nullptr;
    text << "A(2^" << k << ") undetermined (a needed Fermat status is unknown)\n";
  } catch (const OverflowError&) {
    out.result["A"] = nullptr;
    text << "A(2^" << k << ") exact fraction exceeds 64-bit components\n";
  }
  out.text = text.str();
  return out;
}

Output cmd_pow2mult(const Args& args) {
  expect_positionals(args, 2);
  const Nat p = parse_nat(args.positional[0], "P");
  const Nat k_max = parse_nat(args.positional[1], "KMAX");
  const auto members = power_two_multiples(p, k_max);
  Output out;
  out.inputs = {{"p", p}, {"k_max", k_max}};
  json jmembers = json::array();
  std::ostringstream text;
  for (const auto& member : members) {
    jmembers.push_back({{"k", member.k}, {"n", member.n}, {"value", member.value}});
    text << "k = " << member.k << ": phi(" << member.n << ") = " << member.value
         << "\n";
  }
  out.result = {{"p", p}, {"members", jmembers}};
  out.text = text.str();
  return out;
}

Output cmd_sieve(const Args& args) {
  expect_positionals(args, 1);
  const Nat limit = parse_nat(args.positional[0], "N");
  const TotientSieve sieve = build_sieve(limit, sieve_budget());
  Output out;
  out.inputs = {{"limit", limit}};
  out.result = {{"limit", sieve.limit()}};
  std::ostringstream text;
  text << "sieve built: limit = " << sieve.limit() << "\n";
  if (args.save_path) {
    sieve.save(*args.save_path);
    out.result["saved"] = *args.save_path;
    text << "saved: " << *args.save_path << "\n";
  } else {
    out.result["saved"] = nullptr;
  }
  out.text = text.str();
  return out;
}

Output cmd_carmichael(const Args& args) {
  expect_positionals(args, 1);
  const Nat bound = parse_nat(args.positional[0], "B");
  const Nat required = required_sieve_limit(bound);
  const TotientSieve sieve = scan_sieve(args, required);
  const auto lonely = carmichael_scan(bound, sieve);
  Output out;
  out.inputs = {{"bound", bound}};
  out.result = {{"bound", bound},
                {"required_limit", required},
                {"sieve_limit", sieve.limit()},
                {"counterexamples", members_json(lonely)}};
  std::ostringstream text;
  text << "m <= " << bound << " with exactly one preimage: "
       << (lonely.empty() ? "none" : join(lonely)) << "\n"
       << "(sieve limit " << sieve.limit() << ", required " << required << ")\n";
  out.text = text.str();
  return out;
}

Output cmd_ford(const Args& args) {
  expect_positionals(args, 2);
  const Nat k = parse_nat(args.positional[0], "K");
  const Nat bound = parse_nat(args.positional[1], "B");
  const Nat required = required_sieve_limit(bound);
  const TotientSieve sieve = scan_sieve(args, required);
  const auto found = ford_search(k, bound, sieve);
  Output out;
  out.inputs = {{"k", k}, {"bound", bound}};
  out.result = {{"k", k}, {"bound", bound}};
  std::ostringstream text;
  if (found) {
    const auto report = multiplicity(*found, sieve);
    out.result["m"] = *found;
    out.result["members"] = members_json(report.members);
    text << "smallest m <= " << bound << " with exactly " << k
         << " preimages: " << *found << "\n"
         << "members: " << join(report.members) << "\n";
  } else {
    out.result["m"] = nullptr;
    out.result["members"] = json::array();
    text << "no m <= " << bound << " has exactly " << k << " preimages\n";
  }
  out.text = text.str();
  return out;
}

Output cmd_parity(const Args& args) {
  expect_positionals(args, 1);
  const Nat s_max = parse_nat(args.positional[0], "SMAX");
  const Nat required = parity_required_limit(s_max);
  const TotientSieve sieve = scan_sieve(args, std::max<Nat>(required, 1));
  const auto violations = parity_balance_suite(s_max, sieve);
  Output out;
  out.inputs = {{"s_max", s_max}};
  json jviolations = json::array();
  for (const auto& v : violations)
    jviolations.push_back({{"s", v.s}, {"odd", v.odd_count}, {"even", v.even_count}});
  out.result = {{"s_max", s_max},
                {"required_limit", required},
                {"sieve_limit", sieve.limit()},
                {"violations", jviolations}};
  std::ostringstream text;
  if (violations.empty())
    text << "odd s in [3, " << s_max
         << "]: every preimage of 2s splits evenly between odd and even members\n";
  else
    for (const auto& v : violations)
      text << "s = " << v.s << ": odd " << v.odd_count << ", even " << v.even_count
           << "\n";
  out.text = text.str();
  return out;
}

int dispatch(const Args& args, std::ostream& out_stream) {
  FermatStatusTable table;
  if (args.fermat_table) table = FermatStatusTable::from_file(*args.fermat_table);
  if (args.to_csv && args.command != "preimage")
    throw UsageError("--csv is only supported by preimage");

  const auto started = std::chrono::steady_clock::now();
  Output output;
  if (args.command == "phi") output = cmd_phi(args);
  else if (args.command == "preimage") output = cmd_preimage(args);
  else if (args.command == "bound") output = cmd_bound(args);
  else if (args.command == "table2") output = cmd_table2(args);
  else if (args.command == "classify") output = cmd_classify(args);
  else if (args.command == "sp") output = cmd_sp(args);
  else if (args.command == "twiceodd") output = cmd_twiceodd(args);
  else if (args.command == "pow2") output = cmd_pow2(args, table);
  else if (args.command == "pow2mult") output = cmd_pow2mult(args);
  else if (args.command == "sieve") output = cmd_sieve(args);
  else if (args.command == "carmichael") output = cmd_carmichael(args);
  else if (args.command == "ford") output = cmd_ford(args);
  else if (args.command == "parity") output = cmd_parity(args);
  else throw UsageError("unknown command " + args.command);
  const auto elapsed = std::chrono::steady_clock::now() - started;

  if (args.to_json) {
    // Everything but wall_time_ms is byte-stable for identical inputs.
    json record;
    record["command"] = args.command;
    record["inputs"] = output.inputs;
    record["result"] = output.result;
    record["provenance"] = {{"version", std::string(kVersion)},
                            {"fermat_table_hash", table.content_hash()}};
    record["wall_time_ms"] =
        std::chrono::duration<double, std::milli>(elapsed).count();
    out_stream << record.dump(2) << "\n";
  } else if (args.to_csv) {
    out_stream << output.csv;
  } else {
    out_stream << output.text;
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    if (args.empty() || args[0] == "--help" || args[0] == "help") {
      out << kUsage;
      return args.empty() ? 2 : 0;
    }
    return dispatch(parse_args(args), out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n\n" << kUsage;
    return 2;
  } catch (const OverflowError& e) {
    err << "overflow error: " << e.what() << "\n";
    return 4;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return 4;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace totient::cli

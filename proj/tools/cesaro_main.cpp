#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cesaro/arith.hpp"
#include "cesaro/comb_identity.hpp"
#include "cesaro/distribution.hpp"
#include "cesaro/euler.hpp"
#include "cesaro/format.hpp"
#include "cesaro/scan.hpp"
#include "cesaro/sieve.hpp"
#include "cesaro/signature.hpp"

namespace {

using cesaro::BigInt;
using cesaro::Enclosure;
using cesaro::ExactScanRow;
using cesaro::Rational;
using cesaro::ScanRow;
using cesaro::Sieve;
using cesaro::Signature;

struct GlobalOptions {
  std::string output;
  std::string format = "csv";
  bool exact = false;
  std::uint64_t prime_cutoff = 10'000'000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

// Exact xi/eta scans and the identity verifier materialize big rationals
// whose size grows with n, so the exact modes carry explicit caps. The
// floating scans stream in O(1) memory and need none.
constexpr std::uint64_t kExactScanCap = 5000;
constexpr std::uint64_t kVerifyCap = 5000;
constexpr std::uint64_t kVerifyInvariantCap = 1000;

using Cell =
    std::variant<std::monostate, bool, std::uint64_t, std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  // Key/value pairs rendered as trailing "# key=value" comment lines in CSV
  // and as a "summary" object in JSON. Values are preformatted strings so
  // both sinks emit identical digits.
  std::vector<std::pair<std::string, std::string>> summary;
};

std::string cell_text(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return std::string(); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::uint64_t v) const { return cesaro::format_u64(v); }
    std::string operator()(std::int64_t v) const { return cesaro::format_i64(v); }
    std::string operator()(double v) const { return cesaro::format_double(v); }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, cell);
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(bool b) const { return b; }
    nlohmann::ordered_json operator()(std::uint64_t v) const { return v; }
    nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
    nlohmann::ordered_json operator()(double v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, cell);
}

void write_table(std::ostream& out, const Table& table, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["columns"] = table.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
      auto cells = nlohmann::ordered_json::array();
      for (const auto& cell : row) cells.push_back(cell_json(cell));
      rows.push_back(std::move(cells));
    }
    doc["rows"] = std::move(rows);
    if (!table.summary.empty()) {
      auto summary = nlohmann::ordered_json::object();
      for (const auto& [key, value] : table.summary) summary[key] = value;
      doc["summary"] = std::move(summary);
    }
    out << doc.dump(2) << '\n';
    return;
  }

  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i != 0) out << ',';
    out << csv_escape(table.columns[i]);
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i != 0) out << ',';
      out << csv_escape(cell_text(row[i]));
    }
    out << '\n';
  }
  for (const auto& [key, value] : table.summary) {
    out << "# " << key << '=' << value << '\n';
  }
}

std::uint64_t parse_u64(const std::string& text) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("not a nonnegative integer: '" + text + "'");
  }
  return value;
}

// "A..B" or a single "N" meaning N..N.
std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  auto pos = text.find("..");
  if (pos == std::string::npos) {
    lo = hi = parse_u64(text);
  } else {
    lo = parse_u64(text.substr(0, pos));
    hi = parse_u64(text.substr(pos + 2));
  }
  if (lo < 1 || hi < lo) {
    throw std::invalid_argument("--n expects A..B with 1 <= A <= B, got '" + text + "'");
  }
  return {lo, hi};
}

std::string rational_text(const Rational& r) {
  std::string text = numerator(r).str();
  if (denominator(r) != 1) {
    text += '/';
    text += denominator(r).str();
  }
  return text;
}

int run_orders(std::ostream& out, const GlobalOptions& g, std::uint32_t k,
               const std::string& range, std::uint64_t budget) {
  auto [lo, hi] = parse_range(range);
  Sieve sieve(hi);

  Table table;
  table.columns = {"n", "gl", "sl", "gl_bf", "sl_bf", "match"};
  bool all_match = true;
  std::uint64_t enumerated = 0;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    BigInt gl = cesaro::gl_order(sieve, k, n);
    BigInt sl = cesaro::sl_order(sieve, k, n);
    std::vector<Cell> row = {n, cesaro::format_bigint(gl), cesaro::format_bigint(sl),
                             std::monostate{}, std::monostate{}, std::monostate{}};
    if (k <= 5) {
      try {
        std::uint64_t gl_bf = cesaro::brute_force_gl_order(k, n, budget, g.threads);
        std::uint64_t sl_bf = cesaro::brute_force_sl_order(k, n, budget, g.threads);
        bool match = BigInt(gl_bf) == gl && BigInt(sl_bf) == sl;
        all_match = all_match && match;
        ++enumerated;
        row[3] = gl_bf;
        row[4] = sl_bf;
        row[5] = match;
      } catch (const std::length_error&) {
        // Enumeration over budget: closed forms only for this row.
      }
    }
    table.rows.push_back(std::move(row));
  }

  table.summary = {{"k", cesaro::format_u64(k)},
                   {"rows", cesaro::format_u64(hi - lo + 1)},
                   {"enumerated_rows", cesaro::format_u64(enumerated)},
                   {"all_match", all_match ? "true" : "false"}};
  write_table(out, table, g.format);
  return all_match ? 0 : 1;
}

int run_constants(std::ostream& out, const GlobalOptions& g, std::uint32_t k_max) {
  Sieve sieve(std::max<std::uint64_t>(g.prime_cutoff, 2));

  Table table;
  table.columns = {"k", "c1", "c1_err", "c2", "c2_err"};
  for (std::uint32_t k = 1; k <= k_max; ++k) {
    Enclosure c1 = cesaro::c1(sieve, k, g.prime_cutoff);
    Enclosure c2 = cesaro::c2(sieve, k, g.prime_cutoff);
    table.rows.push_back({std::uint64_t{k}, c1.value, c1.abs_error, c2.value,
                          c2.abs_error});
  }
  table.summary = {{"prime_cutoff", cesaro::format_u64(g.prime_cutoff)}};
  write_table(out, table, g.format);
  return 0;
}

int run_xi_scan_exact(std::ostream& out, const GlobalOptions& g, const Signature& sig,
                      unsigned s, std::uint64_t n_max, std::uint64_t stride,
                      const Sieve& sieve, const Enclosure& phi) {
  if (n_max > kExactScanCap) {
    throw std::invalid_argument("--exact scan is capped at --n-max " +
                                cesaro::format_u64(kExactScanCap) +
                                "; rationals grow with every row");
  }
  std::vector<Rational> y;
  y.reserve(n_max);
  for (std::uint64_t k = 1; k <= n_max; ++k) {
    y.push_back(cesaro::phi_tilde_sig(sieve, sig, k));
  }
  // The midpoint of the enclosure, converted exactly; every row is then an
  // exact rational relative to this fixed reference value.
  const Rational phi_ref(phi.value);
  std::vector<ExactScanRow> rows = cesaro::xi_eta_scan_exact(y, s, phi_ref);

  Table table;
  table.columns = {"n", "partial_sum", "avg", "xi", "eta", "xi_running_avg"};
  Rational xi_sum = 0;
  Rational max_abs_xi = 0;
  for (const ExactScanRow& row : rows) {
    xi_sum += row.xi;
    max_abs_xi = std::max(max_abs_xi, Rational(abs(row.xi)));
    if (row.n % stride != 0) continue;
    BigInt npow1 = cesaro::big_pow(BigInt(row.n), s + 1);
    Rational avg = row.partial_sum * Rational(BigInt(s + 1), npow1);
    Rational running = xi_sum / BigInt(row.n);
    table.rows.push_back({row.n, rational_text(row.partial_sum), rational_text(avg),
                          rational_text(row.xi), rational_text(row.eta),
                          rational_text(running)});
  }

  Rational xi_mean = xi_sum / BigInt(n_max);
  table.summary = {{"sig", sig.to_string()},
                   {"s", cesaro::format_u64(s)},
                   {"n_max", cesaro::format_u64(n_max)},
                   {"exact", "true"},
                   {"phi_ref", rational_text(phi_ref)},
                   {"phi_half", cesaro::format_double(phi.value / 2.0)},
                   {"xi_mean", rational_text(xi_mean)},
                   {"xi_mean_approx",
                    cesaro::format_double(xi_mean.convert_to<double>())},
                   {"max_abs_xi",
                    cesaro::format_double(max_abs_xi.convert_to<double>())}};
  write_table(out, table, g.format);
  return 0;
}

int run_xi_scan(std::ostream& out, const GlobalOptions& g, const std::string& sig_text,
                unsigned s, std::uint64_t n_max, std::uint64_t stride) {
  if (stride < 1) {
    throw std::invalid_argument("--stride must be at least 1");
  }
  Signature sig = Signature::parse(sig_text);
  Sieve sieve(std::max(n_max, g.prime_cutoff));
  Enclosure phi = cesaro::phi_limit(sieve, sig, g.prime_cutoff);

  if (g.exact) {
    return run_xi_scan_exact(out, g, sig, s, n_max, stride, sieve, phi);
  }

  cesaro::PhiEvaluator eval(sieve, sig, n_max);
  cesaro::XiEtaScan scan([&eval](std::uint64_t k) { return eval(k); }, s, n_max, phi);

  Table table;
  table.columns = {"n", "partial_sum", "avg", "xi", "eta", "xi_running_avg"};
  cesaro::KahanSum xi_sum;
  double max_abs_xi = 0.0;
  double max_uncertainty = 0.0;
  while (std::optional<ScanRow> row = scan.next()) {
    xi_sum.add(row->xi);
    max_abs_xi = std::max(max_abs_xi, std::abs(row->xi));
    max_uncertainty = std::max(max_uncertainty, row->xi_uncertainty);
    if (row->n % stride != 0) continue;
    double running = xi_sum.value() / static_cast<double>(row->n);
    table.rows.push_back({row->n, row->partial_sum, row->normalized_avg, row->xi,
                          row->eta, running});
  }

  double xi_mean = xi_sum.value() / static_cast<double>(n_max);
  double phi_half = phi.value / 2.0;
  table.summary = {{"sig", sig.to_string()},
                   {"s", cesaro::format_u64(s)},
                   {"n_max", cesaro::format_u64(n_max)},
                   {"phi", cesaro::format_double(phi.value)},
                   {"phi_abs_error", cesaro::format_double(phi.abs_error)},
                   {"phi_half", cesaro::format_double(phi_half)},
                   {"xi_mean", cesaro::format_double(xi_mean)},
                   {"xi_mean_minus_phi_half",
                    cesaro::format_double(xi_mean - phi_half)},
                   {"max_abs_xi", cesaro::format_double(max_abs_xi)},
                   {"max_xi_uncertainty", cesaro::format_double(max_uncertainty)}};
  write_table(out, table, g.format);
  return 0;
}

std::optional<std::uint64_t> first_identity_mismatch(const Sieve& sieve,
                                                     const Signature& sig,
                                                     std::uint64_t n_max) {
  Rational direct_sum = 0;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    direct_sum += cesaro::phi_tilde_sig(sieve, sig, n);
    if (cesaro::combinatorial_average(sieve, sig, n) != direct_sum / BigInt(n)) {
      return n;
    }
  }
  return std::nullopt;
}

int run_verify(std::ostream& out, const GlobalOptions& g, const std::string& sig_text,
               std::uint64_t n_max) {
  if (n_max < 1) {
    throw std::invalid_argument("--n must be at least 1");
  }
  if (n_max > kVerifyCap) {
    throw std::invalid_argument("verify is capped at --n " +
                                cesaro::format_u64(kVerifyCap) +
                                "; every check runs in exact arithmetic");
  }
  Signature sig = Signature::parse(sig_text);
  Sieve sieve(n_max);

  Table table;
  table.columns = {"check", "detail", "pass"};
  bool all_pass = true;
  auto report = [&](const std::string& name, const std::string& detail, bool pass) {
    table.rows.push_back({name, detail, pass});
    all_pass = all_pass && pass;
  };

  // Closed-form partial means against the directly accumulated means.
  std::optional<std::uint64_t> bad = first_identity_mismatch(sieve, sig, n_max);
  report("partial_mean_expansion",
         bad ? "sig=" + sig.to_string() + " first mismatch at n=" +
                   cesaro::format_u64(*bad)
             : "exact for all n<=" + cesaro::format_u64(n_max),
         !bad.has_value());

  // The remaining checks materialize exact scan rows, so they run on a
  // bounded prefix.
  const std::uint64_t n_cap = std::min(n_max, kVerifyInvariantCap);
  std::vector<Rational> y;
  y.reserve(n_cap);
  for (std::uint64_t k = 1; k <= n_cap; ++k) {
    y.push_back(cesaro::phi_tilde_sig(sieve, sig, k));
  }
  const std::string cap_note = "n<=" + cesaro::format_u64(n_cap);

  bool star_ok = true;
  for (unsigned s = 0; s <= 3 && star_ok; ++s) {
    star_ok = cesaro::check_star_recurrence(y, s);
  }
  report("weighted_sum_recurrence", cap_note + " s<=3", star_ok);

  const Rational phi_ref = cesaro::combinatorial_average(sieve, sig, n_cap);
  std::array<std::vector<ExactScanRow>, 4> rows;
  for (unsigned s = 0; s <= 3; ++s) {
    rows[s] = cesaro::xi_eta_scan_exact(y, s, phi_ref);
  }

  std::optional<std::uint64_t> xi_eta_bad;
  for (std::uint64_t n = 1; n <= n_cap; ++n) {
    if (rows[0][n - 1].xi != rows[0][n - 1].eta) {
      xi_eta_bad = n;
      break;
    }
  }
  report("xi_equals_eta_at_s0",
         xi_eta_bad ? "first mismatch at n=" + cesaro::format_u64(*xi_eta_bad)
                    : cap_note,
         !xi_eta_bad.has_value());

  std::optional<std::uint64_t> bridge_bad;
  for (unsigned s = 1; s <= 2 && !bridge_bad; ++s) {
    BigInt weight_sum = 0;
    for (std::uint64_t n = 1; n <= n_cap; ++n) {
      weight_sum += cesaro::big_pow(BigInt(n), s);
      Rational lhs = rows[s][n - 1].xi - rows[s][n - 1].eta;
      Rational rhs = phi_ref *
                     (Rational(weight_sum) -
                      Rational(cesaro::big_pow(BigInt(n), s + 1), BigInt(s + 1))) /
                     Rational(cesaro::big_pow(BigInt(n), s));
      if (lhs != rhs) {
        bridge_bad = n;
        break;
      }
    }
  }
  report("xi_eta_bridge",
         bridge_bad ? "first mismatch at n=" + cesaro::format_u64(*bridge_bad)
                    : cap_note + " s<=2",
         !bridge_bad.has_value());

  std::optional<std::uint64_t> recurrence_bad;
  for (unsigned s = 0; s <= 2 && !recurrence_bad; ++s) {
    Rational correction = 0;
    for (std::uint64_t n = 1; n <= n_cap; ++n) {
      Rational expected =
          rows[s][n - 1].eta - correction / Rational(cesaro::big_pow(BigInt(n), s + 1));
      if (rows[s + 1][n - 1].eta != expected) {
        recurrence_bad = n;
        break;
      }
      correction += Rational(cesaro::big_pow(BigInt(n), s)) * rows[s][n - 1].eta;
    }
  }
  report("eta_exponent_recurrence",
         recurrence_bad ? "first mismatch at n=" + cesaro::format_u64(*recurrence_bad)
                        : cap_note + " s<=2",
         !recurrence_bad.has_value());

  table.summary = {{"sig", sig.to_string()},
                   {"n_max", cesaro::format_u64(n_max)},
                   {"all_pass", all_pass ? "true" : "false"}};
  write_table(out, table, g.format);
  return all_pass ? 0 : 1;
}

int run_main_theorem(std::ostream& out, const GlobalOptions& g, std::uint32_t k,
                     std::uint64_t n_max, std::uint64_t stride) {
  if (stride < 1) {
    throw std::invalid_argument("--stride must be at least 1");
  }
  if (n_max < 1) {
    throw std::invalid_argument("--n-max must be at least 1");
  }
  const double top_power = (static_cast<double>(k) * k + 1.0) *
                           std::log10(static_cast<double>(n_max));
  if (top_power > 300.0) {
    throw std::invalid_argument(
        "--k/--n-max combination overflows double-precision ratios");
  }
  Sieve sieve(std::max(n_max, g.prime_cutoff));
  Enclosure c1 = cesaro::c1(sieve, k, g.prime_cutoff);
  Enclosure c2 = cesaro::c2(sieve, k, g.prime_cutoff);

  Table table;
  table.columns = {"n", "sl_ratio", "gl_ratio"};
  BigInt sl_sum = 0;
  BigInt gl_sum = 0;
  BigInt sl_weight = 0;
  BigInt gl_weight = 0;
  double sl_ratio = 0.0;
  double gl_ratio = 0.0;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    sl_sum += cesaro::sl_order(sieve, k, n);
    gl_sum += cesaro::gl_order(sieve, k, n);
    sl_weight += cesaro::big_pow(BigInt(n), k * k - 1);
    gl_weight += cesaro::big_pow(BigInt(n), k * k);
    sl_ratio = sl_sum.convert_to<double>() /
               (c1.value * sl_weight.convert_to<double>());
    gl_ratio = gl_sum.convert_to<double>() /
               (c2.value * gl_weight.convert_to<double>());
    if (n % stride == 0) {
      table.rows.push_back({n, sl_ratio, gl_ratio});
    }
  }

  table.summary = {{"k", cesaro::format_u64(k)},
                   {"n_max", cesaro::format_u64(n_max)},
                   {"c1", cesaro::format_double(c1.value)},
                   {"c1_err", cesaro::format_double(c1.abs_error)},
                   {"c2", cesaro::format_double(c2.value)},
                   {"c2_err", cesaro::format_double(c2.abs_error)},
                   {"final_sl_ratio", cesaro::format_double(sl_ratio)},
                   {"final_gl_ratio", cesaro::format_double(gl_ratio)}};
  write_table(out, table, g.format);
  return 0;
}

int run_cdf(std::ostream& out, const GlobalOptions& g, const std::string& sig_text,
            std::uint64_t N, std::uint64_t grid_size) {
  if (grid_size < 1) {
    throw std::invalid_argument("--grid must be at least 1");
  }
  Signature sig = Signature::parse(sig_text);
  Sieve sieve(N);

  Table table;
  table.columns = {"t", "F"};
  if (g.exact) {
    std::vector<Rational> grid;
    grid.reserve(grid_size + 1);
    for (std::uint64_t i = 0; i <= grid_size; ++i) {
      grid.emplace_back(BigInt(i), BigInt(grid_size));
    }
    std::vector<std::uint64_t> counts = cesaro::empirical_cdf_exact(sieve, sig, N, grid);
    for (std::uint64_t i = 0; i <= grid_size; ++i) {
      double t = static_cast<double>(i) / static_cast<double>(grid_size);
      double F = static_cast<double>(counts[i]) / static_cast<double>(N);
      table.rows.push_back({t, F});
    }
  } else {
    std::vector<double> grid(grid_size + 1);
    for (std::uint64_t i = 0; i <= grid_size; ++i) {
      grid[i] = static_cast<double>(i) / static_cast<double>(grid_size);
    }
    cesaro::EmpiricalCDF cdf = cesaro::empirical_cdf(sieve, sig, N, std::move(grid));
    for (std::size_t i = 0; i < cdf.grid.size(); ++i) {
      table.rows.push_back({cdf.grid[i], cdf.cdf_at(i)});
    }
  }

  table.summary = {{"sig", sig.to_string()},
                   {"N", cesaro::format_u64(N)},
                   {"grid", cesaro::format_u64(grid_size)},
                   {"exact", g.exact ? "true" : "false"}};
  write_table(out, table, g.format);
  return 0;
}

int run_fourier(std::ostream& out, const GlobalOptions& g, const std::string& sig_text,
                std::uint64_t N, long index_max, double tol,
                std::uint64_t reconstruct) {
  Signature sig = Signature::parse(sig_text);
  Sieve sieve(std::max(N, g.prime_cutoff));
  std::vector<cesaro::FourierCoefficient> averages =
      cesaro::fourier_u_exponential_batch(sieve, sig, index_max, N, g.prime_cutoff);

  if (reconstruct > 0) {
    if (reconstruct < 2) {
      throw std::invalid_argument("--reconstruct needs at least 2 grid points");
    }
    auto curve = cesaro::fejer_reconstruction(averages, reconstruct);
    Table table;
    table.columns = {"t", "F_fejer"};
    for (const auto& [t, value] : curve) {
      table.rows.push_back({t, value});
    }
    table.summary = {{"sig", sig.to_string()},
                     {"N", cesaro::format_u64(N)},
                     {"index_max", cesaro::format_u64(static_cast<std::uint64_t>(index_max))},
                     {"grid", cesaro::format_u64(reconstruct)}};
    write_table(out, table, g.format);
    return 0;
  }

  Table table;
  table.columns = {"n", "re_series", "im_series", "re_avg", "im_avg", "abs_diff"};
  double max_abs_diff = 0.0;
  for (long n = -index_max; n <= index_max; ++n) {
    cesaro::FourierCoefficient series =
        cesaro::fourier_u_moment_series(sieve, sig, n, tol, g.prime_cutoff);
    const cesaro::FourierCoefficient& average =
        averages[static_cast<std::size_t>(n + index_max)];
    double abs_diff = std::abs(series.value - average.value);
    max_abs_diff = std::max(max_abs_diff, abs_diff);
    table.rows.push_back({static_cast<std::int64_t>(n), series.value.real(),
                          series.value.imag(), average.value.real(),
                          average.value.imag(), abs_diff});
  }

  table.summary = {{"sig", sig.to_string()},
                   {"N", cesaro::format_u64(N)},
                   {"tol", cesaro::format_double(tol)},
                   {"max_abs_diff", cesaro::format_double(max_abs_diff)}};
  write_table(out, table, g.format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Toolkit for matrix group orders over Z_n, their Cesaro constants as "
      "certified Euler products, and the limit distribution of the "
      "associated multiplicative mean functions"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--output", g.output, "Write results to this file instead of stdout");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_flag("--exact", g.exact,
               "Exact rational arithmetic where supported (xi-scan, cdf)");
  app.add_option("--prime-cutoff", g.prime_cutoff,
                 "Largest prime kept in the limit products")
      ->capture_default_str();
  app.add_option("--seed", g.seed,
                 "Accepted for interface stability; every computation is "
                 "deterministic");
  app.add_option("--threads", g.threads, "Worker threads for exhaustive enumeration")
      ->capture_default_str();

  std::uint32_t k = 1;
  std::string range;
  std::uint64_t budget = 100'000'000;
  auto* orders = app.add_subcommand(
      "orders", "Group orders for a range of moduli, checked against exhaustive "
                "enumeration when the matrix count fits the budget");
  orders->fallthrough();
  orders->add_option("--k", k, "Matrix dimension")->required()->check(CLI::Range(1, 16));
  orders->add_option("--n", range, "Modulus range A..B (or a single N)")->required();
  orders->add_option("--budget", budget, "Largest matrix count enumerated per modulus")
      ->capture_default_str();

  std::uint32_t k_max = 4;
  auto* constants = app.add_subcommand(
      "constants", "Cesaro constants of both matrix families with certified "
                   "absolute-error bounds");
  constants->fallthrough();
  constants->add_option("--k-max", k_max, "Largest matrix dimension")
      ->check(CLI::Range(1, 32))
      ->capture_default_str();

  std::string sig_text;
  unsigned s = 0;
  std::uint64_t n_max = 0;
  std::uint64_t stride = 1;
  auto* xi_scan = app.add_subcommand(
      "xi-scan", "Weighted partial sums of the signature's mean function with "
                 "the xi and eta deviation columns and a running xi average");
  xi_scan->fallthrough();
  xi_scan->add_option("--sig", sig_text, "Signature, comma-separated parts, e.g. 1,2")
      ->required();
  xi_scan->add_option("--s", s, "Weight exponent")
      ->check(CLI::Range(0, 8))
      ->capture_default_str();
  xi_scan->add_option("--n-max", n_max, "Scan length")->required();
  xi_scan->add_option("--stride", stride, "Emit every stride-th row")
      ->capture_default_str();

  std::string verify_sig;
  std::uint64_t verify_n = 0;
  auto* verify = app.add_subcommand(
      "verify", "Exact-arithmetic checks: closed-form partial means against "
                "direct accumulation, plus the scan identities");
  verify->fallthrough();
  verify->add_option("--sig", verify_sig, "Signature, comma-separated parts")
      ->required();
  verify->add_option("--n", verify_n, "Verify partial means for every n up to this")
      ->required();

  std::uint32_t mt_k = 1;
  std::uint64_t mt_n_max = 0;
  std::uint64_t mt_stride = 1;
  auto* main_theorem = app.add_subcommand(
      "main-theorem", "Running ratios of summed group orders against their "
                      "predicted Cesaro asymptotics");
  main_theorem->fallthrough();
  main_theorem->add_option("--k", mt_k, "Matrix dimension")
      ->required()
      ->check(CLI::Range(1, 16));
  main_theorem->add_option("--n-max", mt_n_max, "Sum length")->required();
  main_theorem->add_option("--stride", mt_stride, "Emit every stride-th row")
      ->capture_default_str();

  std::string cdf_sig;
  std::uint64_t cdf_N = 0;
  std::uint64_t grid_size = 1000;
  auto* cdf = app.add_subcommand(
      "cdf", "Empirical distribution of the signature's mean function on a "
             "uniform grid over [0, 1]");
  cdf->fallthrough();
  cdf->add_option("--sig", cdf_sig, "Signature, comma-separated parts")->required();
  cdf->add_option("--N", cdf_N, "Sample size")->required();
  cdf->add_option("--grid", grid_size, "Number of grid intervals")
      ->capture_default_str();

  std::string fourier_sig;
  std::uint64_t fourier_N = 0;
  long index_max = 5;
  double tol = 1e-9;
  std::uint64_t reconstruct = 0;
  auto* fourier = app.add_subcommand(
      "fourier", "Fourier coefficients of the limit distribution by the moment "
                 "series and by the transformed sample average, side by side");
  fourier->fallthrough();
  fourier->add_option("--sig", fourier_sig, "Signature, comma-separated parts")
      ->required();
  fourier->add_option("--N", fourier_N, "Sample size for the average method")
      ->required();
  fourier->add_option("--index-max", index_max, "Coefficients for |n| up to this")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  fourier->add_option("--tol", tol, "Moment-series truncation tolerance")
      ->capture_default_str();
  fourier->add_option(
      "--reconstruct", reconstruct,
      "Emit the Fejer reconstruction of the distribution on this many grid "
      "points instead of the coefficient table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!g.output.empty()) {
    file.open(g.output, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open output file '" << g.output << "'\n";
      return 2;
    }
    out = &file;
  }

  try {
    if (orders->parsed()) return run_orders(*out, g, k, range, budget);
    if (constants->parsed()) return run_constants(*out, g, k_max);
    if (xi_scan->parsed()) return run_xi_scan(*out, g, sig_text, s, n_max, stride);
    if (verify->parsed()) return run_verify(*out, g, verify_sig, verify_n);
    if (main_theorem->parsed())
      return run_main_theorem(*out, g, mt_k, mt_n_max, mt_stride);
    if (cdf->parsed()) return run_cdf(*out, g, cdf_sig, cdf_N, grid_size);
    if (fourier->parsed())
      return run_fourier(*out, g, fourier_sig, fourier_N, index_max, tol, reconstruct);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include "sdsirs/cycle_type.hpp"
#include "sdsirs/errors.hpp"
#include "sdsirs/exact.hpp"
#include "sdsirs/experiments.hpp"
#include "sdsirs/report.hpp"
#include "sdsirs/sds.hpp"
#include "sdsirs/subgroup.hpp"

namespace sdsirs::cli {
namespace {

constexpr double psd_tolerance = 1e-9;

struct Common {
  std::optional<std::uint64_t> seed;
  std::uint64_t trials = 100000;
  std::string out_path;
  std::string format = "json";
};

void add_output_options(CLI::App* sub, Common& c) {
  sub->add_option("--out", c.out_path, "output file (default: stdout)");
  sub->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
}

void add_seed_option(CLI::App* sub, Common& c) {
  sub->add_option("--seed", c.seed,
                  "RNG seed (default: SDS_IRS_SEED env, else random)");
}

void add_trials_option(CLI::App* sub, Common& c) {
  sub->add_option("--trials", c.trials, "Monte Carlo trial count")
      ->check(CLI::PositiveNumber);
}

std::uint64_t resolve_seed(const Common& c) {
  if (c.seed) return *c.seed;
  if (const char* env = std::getenv("SDS_IRS_SEED")) {
    const std::string text(env);
    try {
      std::size_t used = 0;
      const std::uint64_t value = std::stoull(text, &used);
      if (used == text.size()) return value;
    } catch (const std::exception&) {
    }
    fail(Errc::parse_error, "SDS_IRS_SEED is not an unsigned integer");
  }
  std::random_device device;
  return (static_cast<std::uint64_t>(device()) << 32) ^ device();
}

std::string quote_arg(const std::string& arg) {
  if (!arg.empty() && arg.find_first_of(" \t\"'\\") == std::string::npos)
    return arg;
  std::string quoted = "\"";
  for (const char c : arg) {
    if (c == '"' || c == '\\') quoted += '\\';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string reconstruct_command_line(const std::vector<std::string>& args) {
  std::string line = "sds-irs";
  for (const std::string& arg : args) {
    line += ' ';
    line += quote_arg(arg);
  }
  return line;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Errc::invalid_argument, "cannot open file: " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void emit(const ReportTable& table, const Common& c, std::ostream& out) {
  const std::string text = render_report(table, parse_format(c.format));
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.out_path, std::ios::binary | std::ios::trunc);
  require(file.good(), Errc::invalid_argument,
          "cannot open output file: " + c.out_path);
  file << text;
  file.close();
  require(file.good(), Errc::invalid_argument,
          "failed writing output file: " + c.out_path);
}

Cell null_cell() { return Cell{Cell::Kind::number, "null"}; }

Cell opt_cell(const std::optional<Rational>& value) {
  return value ? cell(*value) : null_cell();
}

Cell opt_cell(const std::optional<double>& value) {
  return value ? cell(*value) : null_cell();
}

std::uint64_t parse_u64(const std::string& token, const std::string& what) {
  try {
    std::size_t used = 0;
    const std::uint64_t value = std::stoull(token, &used);
    if (used == token.size() && token.find('-') == std::string::npos)
      return value;
  } catch (const std::exception&) {
  }
  fail(Errc::parse_error, what + ": '" + token + "' is not an unsigned integer");
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text,
                                          const std::string& what) {
  std::vector<std::uint64_t> values;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ','))
    values.push_back(parse_u64(token, what));
  require(!values.empty(), Errc::parse_error, what + ": empty list");
  return values;
}

std::vector<std::uint32_t> parse_point_list(const std::string& text) {
  std::vector<std::uint32_t> points;
  for (const std::uint64_t v : parse_u64_list(text, "point list")) {
    require(v <= UINT32_MAX, Errc::parse_error, "point index too large");
    points.push_back(static_cast<std::uint32_t>(v));
  }
  return points;
}

// sym | alt | stab:+:0,1 | stab:-:0,1 | int:0,1 | wreath:d
SubgroupSpec parse_subgroup(const std::string& dsl, std::size_t degree) {
  if (dsl == "sym") return SubgroupSpec::full_sym(degree);
  if (dsl == "alt") return SubgroupSpec::alternating(degree);
  if (dsl.rfind("stab:", 0) == 0) {
    const std::string rest = dsl.substr(5);
    require(rest.size() >= 3 && (rest[0] == '+' || rest[0] == '-') &&
                rest[1] == ':',
            Errc::parse_error, "stab form is stab:+:points or stab:-:points");
    const Parity parity = rest[0] == '+' ? Parity::plus : Parity::minus;
    return SubgroupSpec::pointwise_stabilizer(
        degree, parse_point_list(rest.substr(2)), parity);
  }
  if (dsl.rfind("int:", 0) == 0)
    return SubgroupSpec::intransitive(degree, parse_point_list(dsl.substr(4)));
  if (dsl.rfind("wreath:", 0) == 0)
    return SubgroupSpec::wreath_consecutive(
        degree, parse_u64(dsl.substr(7), "wreath blocksize"));
  fail(Errc::parse_error,
       "subgroup must be sym | alt | stab:+:pts | stab:-:pts | int:pts | "
       "wreath:d, got '" +
           dsl + "'");
}

// "1/2", "0.5", or "1"; exact decimal conversion
Rational parse_fraction(const std::string& text) {
  if (text.find('/') != std::string::npos) return parse_ratio(text);
  const std::size_t dot = text.find('.');
  if (dot == std::string::npos) return parse_ratio(text);
  const std::string whole = text.substr(0, dot);
  const std::string frac = text.substr(dot + 1);
  require(!frac.empty() && frac.find_first_not_of("0123456789") == std::string::npos &&
              (whole.empty() ||
               whole.find_first_not_of("0123456789") == std::string::npos),
          Errc::parse_error, "bad fraction '" + text + "'");
  BigInt scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  const BigInt whole_part = whole.empty() ? BigInt(0) : BigInt(whole);
  return Rational(whole_part * scale + BigInt(frac), scale);
}

// cycle count k from the fraction c with |Z| = c*m
std::uint64_t cycle_count_from_fraction(const Rational& c, std::uint64_t m) {
  require(c > 0 && 2 * c <= 1, Errc::invalid_argument,
          "cycle fraction c must satisfy 0 < c <= 1/2");
  const Rational count = c * m;
  require(boost::multiprecision::denominator(count) == 1,
          Errc::invalid_argument, "c*m must be an integer cycle count");
  return boost::multiprecision::numerator(count).convert_to<std::uint64_t>();
}

// home level of a class datum: the unique level whose size matches
std::size_t level_of_degree(const SdsSpec& spec, std::uint64_t degree) {
  for (std::size_t level = 0; level <= spec.max_level(); ++level)
    if (spec.level_size(level) == degree) return level;
  fail(Errc::degree_mismatch,
       "type degree " + std::to_string(degree) + " matches no level size");
}

void add_chebyshev_cells(std::vector<Cell>& row, const Rational& mean,
                         const Rational& variance) {
  if (mean > 0 && variance > 0) {
    const ChebyshevVerdict v = chebyshev_threshold(
        to_double(mean), std::sqrt(to_double(variance)));
    row.push_back(cell(v.k));
    row.push_back(cell(v.threshold));
    row.push_back(cell(v.lower_bound));
    row.push_back(cell(v.conclusive()));
  } else {
    row.push_back(null_cell());
    row.push_back(null_cell());
    row.push_back(null_cell());
    row.push_back(cell(false));
  }
}

std::vector<Cell> trend_row_cells(const TrendRow& row) {
  return {cell(row.parameter), cell(row.trials),   cell(row.positive),
          cell(row.frequency), cell(row.ci.low),   cell(row.ci.high),
          cell(row.low_power)};
}

const std::vector<std::string> trend_columns = {
    "parameter", "trials", "positive", "frequency",
    "ci_low",    "ci_high", "low_power"};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"exact and Monte Carlo tools for diagonal limits of symmetric "
               "groups",
               "sds-irs"};
  app.require_subcommand(1);
  const std::string command_line = reconstruct_command_line(args);

  // ---- class-size ----
  struct {
    Common common;
    std::string type;
  } cs;
  {
    CLI::App* sub = app.add_subcommand(
        "class-size", "conjugacy class size of a cycle type");
    sub->add_option("--type", cs.type, "cycle type, e.g. \"2^1 1^2\"")
        ->required();
    add_output_options(sub, cs.common);
    sub->callback([&] {
      const CycleType t = parse_cycle_type(cs.type);
      ReportTable table;
      table.title = "class-size";
      table.columns = {"cycle_type", "degree", "class_size"};
      table.rows.push_back({cell(to_string(t)), cell(t.degree()),
                            Cell{Cell::Kind::text, class_size(t).str()}});
      table.manifest = make_manifest(command_line, 0, "");
      emit(table, cs.common, out);
    });
  }

  // ---- embed ----
  struct {
    Common common;
    std::string type;
    std::uint64_t ell = 1;
  } em;
  {
    CLI::App* sub = app.add_subcommand(
        "embed", "apply the ell-fold diagonal embedding to a cycle type");
    sub->add_option("--type", em.type, "cycle type")->required();
    sub->add_option("--ell", em.ell, "diagonal multiplicity")
        ->required()
        ->check(CLI::PositiveNumber);
    add_output_options(sub, em.common);
    sub->callback([&] {
      const CycleType t = parse_cycle_type(em.type);
      const CycleType embedded = diagonal_embed(t, em.ell);
      ReportTable table;
      table.title = "embed";
      table.columns = {"cycle_type", "ell", "embedded_type", "degree", "sign"};
      table.rows.push_back(
          {cell(to_string(t)), cell(em.ell), cell(to_string(embedded)),
           cell(embedded.degree()),
           Cell{Cell::Kind::number, std::to_string(sign(embedded))}});
      table.manifest = make_manifest(command_line, 0, "");
      emit(table, em.common, out);
    });
  }

  // ---- char ----
  struct {
    Common common;
    std::string type;
    std::string subgroup;
    std::string irs;
    std::string spec_path;
    std::uint64_t level = 0;
    bool level_set = false;
  } ch;
  {
    CLI::App* sub = app.add_subcommand(
        "char",
        "normalized permutation character of a subgroup, or a limit character");
    sub->add_option("--type", ch.type, "cycle type of the element")->required();
    sub->add_option("--subgroup", ch.subgroup,
                    "subgroup of Sym(degree): sym | alt | stab:+:pts | "
                    "stab:-:pts | int:pts | wreath:d");
    sub->add_option("--irs", ch.irs,
                    "limit character label: trivial | alt | full | sigma:r | "
                    "sigma~:r");
    sub->add_option("--spec", ch.spec_path, "limit group JSON file");
    sub->add_option("--level", ch.level, "evaluation level")
        ->each([&](const std::string&) { ch.level_set = true; });
    add_output_options(sub, ch.common);
    sub->callback([&] {
      const CycleType t = parse_cycle_type(ch.type);
      require(ch.subgroup.empty() != ch.irs.empty(), Errc::invalid_argument,
              "need exactly one of --subgroup and --irs");
      ReportTable table;
      table.title = "char";
      if (!ch.subgroup.empty()) {
        const SubgroupSpec h = parse_subgroup(ch.subgroup, t.degree());
        const Rational value = normalized_char_exact(h, t);
        table.columns = {"subgroup", "cycle_type", "exact_value", "float_value"};
        table.rows.push_back({cell(h.describe()), cell(to_string(t)),
                              cell(value), cell(to_double(value))});
        table.manifest = make_manifest(command_line, 0, "");
      } else {
        require(!ch.spec_path.empty(), Errc::invalid_argument,
                "--irs needs --spec");
        const std::string spec_text = read_file(ch.spec_path);
        const SdsSpec spec = SdsSpec::from_json(spec_text);
        const IrsLabel label = parse_irs_label(ch.irs);
        const std::size_t home = level_of_degree(spec, t.degree());
        const std::size_t level = ch.level_set ? ch.level : home;
        const LevelElement g =
            embed_level(spec, LevelElement(home, t), level);
        const Rational value = irs_character(spec, label, g);
        table.columns = {"cycle_type", "level", "irs_label", "exact_value",
                         "float_value"};
        table.rows.push_back({cell(to_string(g.type())),
                              cell(static_cast<std::uint64_t>(level)),
                              cell(to_string(label)), cell(value),
                              cell(to_double(value))});
        table.manifest = make_manifest(command_line, 0, spec_text);
      }
      emit(table, ch.common, out);
    });
  }

  // ---- mc-char ----
  struct {
    Common common;
    std::string type;
    std::string subgroup;
  } mc;
  {
    CLI::App* sub = app.add_subcommand(
        "mc-char", "Monte Carlo estimate of a normalized character");
    sub->add_option("--type", mc.type, "cycle type of the element")->required();
    sub->add_option("--subgroup", mc.subgroup, "subgroup of Sym(degree)")
        ->required();
    add_seed_option(sub, mc.common);
    add_trials_option(sub, mc.common);
    add_output_options(sub, mc.common);
    sub->callback([&] {
      const CycleType t = parse_cycle_type(mc.type);
      const SubgroupSpec h = parse_subgroup(mc.subgroup, t.degree());
      const std::uint64_t seed = resolve_seed(mc.common);
      const TrialReport report = normalized_char_montecarlo(
          h, Permutation::canonical(t), mc.common.trials, seed);
      ReportTable table;
      table.title = "mc-char";
      table.columns = {"subgroup", "cycle_type", "trials", "hits", "freq",
                       "ci_low",   "ci_high",    "exact",  "seed"};
      table.rows.push_back({cell(report.subgroup), cell(to_string(t)),
                            cell(report.trials), cell(report.hits),
                            cell(report.freq), cell(report.ci_low),
                            cell(report.ci_high), opt_cell(report.exact),
                            cell(report.seed)});
      table.manifest = make_manifest(command_line, seed, "");
      emit(table, mc.common, out);
    });
  }

  // ---- pet ----
  struct {
    Common common;
    std::string type;
    std::string spec_path;
    std::uint64_t r = 1;
    std::uint64_t level = 0;
  } pet;
  {
    CLI::App* sub = app.add_subcommand(
        "pet", "finite-level orbit average over injective point tuples");
    sub->add_option("--spec", pet.spec_path, "limit group JSON file")
        ->required();
    sub->add_option("--type", pet.type, "cycle type of the element")->required();
    sub->add_option("--r", pet.r, "tuple length")
        ->required()
        ->check(CLI::PositiveNumber);
    sub->add_option("--level", pet.level, "averaging level")->required();
    add_output_options(sub, pet.common);
    sub->callback([&] {
      const std::string spec_text = read_file(pet.spec_path);
      const SdsSpec spec = SdsSpec::from_json(spec_text);
      const CycleType t = parse_cycle_type(pet.type);
      const std::size_t home = level_of_degree(spec, t.degree());
      const LevelElement g(home, t);
      const Rational value = pet_orbit_average(
          spec, g, static_cast<std::uint32_t>(pet.r), pet.level);
      const Rational sigma_value =
          irs_character(spec, IrsLabel::sigma(static_cast<std::uint32_t>(pet.r)), g);
      ReportTable table;
      table.title = "pet";
      table.columns = {"cycle_type", "home_level", "level",       "r",
                       "exact_value", "float_value", "sigma_value", "gap"};
      table.rows.push_back(
          {cell(to_string(t)), cell(static_cast<std::uint64_t>(home)),
           cell(pet.level), cell(pet.r), cell(value), cell(to_double(value)),
           cell(sigma_value),
           cell(std::abs(to_double(value - sigma_value)))});
      table.manifest = make_manifest(command_line, 0, spec_text);
      emit(table, pet.common, out);
    });
  }

  // ---- sample-irs ----
  struct {
    Common common;
    std::string spec_path;
    std::string irs;
    std::uint64_t level = 0;
    std::uint64_t count = 1;
  } si;
  {
    CLI::App* sub = app.add_subcommand(
        "sample-irs", "draw random point stabilizers at a level");
    sub->add_option("--spec", si.spec_path, "limit group JSON file")->required();
    sub->add_option("--irs", si.irs, "sigma:r or sigma~:r")->required();
    sub->add_option("--level", si.level, "sampling level")->required();
    sub->add_option("--count", si.count, "number of draws")
        ->check(CLI::PositiveNumber);
    add_seed_option(sub, si.common);
    add_output_options(sub, si.common);
    sub->callback([&] {
      const std::string spec_text = read_file(si.spec_path);
      const SdsSpec spec = SdsSpec::from_json(spec_text);
      const IrsLabel label = parse_irs_label(si.irs);
      const std::uint64_t seed = resolve_seed(si.common);
      ReportTable table;
      table.title = "sample-irs";
      table.columns = {"index", "irs_label", "level", "subgroup", "seed"};
      for (std::uint64_t i = 0; i < si.count; ++i) {
        const SubgroupSpec h =
            sample_irs_subgroup(spec, label, si.level, seed, i);
        table.rows.push_back({cell(i), cell(to_string(label)), cell(si.level),
                              cell(h.describe()), cell(seed)});
      }
      table.manifest = make_manifest(command_line, seed, spec_text);
      emit(table, si.common, out);
    });
  }

  // ---- verify-block ----
  struct {
    Common common;
    std::uint64_t m = 0;
    std::uint64_t d = 0;
    std::string c;
    std::uint64_t tail = 0;
    std::string sweep;
  } vb;
  {
    CLI::App* sub = app.add_subcommand(
        "verify-block",
        "block-splitting count: exact moments against Monte Carlo");
    sub->add_option("--m", vb.m, "degree")->required();
    sub->add_option("--d", vb.d, "block width");
    sub->add_option("--c", vb.c, "cycle fraction, e.g. 0.5 or 1/2")->required();
    sub->add_option("--tail", vb.tail, "points excluded from the partition");
    sub->add_option("--sweep", vb.sweep,
                    "comma-separated block widths; emits the P[count>0] trend");
    add_seed_option(sub, vb.common);
    add_trials_option(sub, vb.common);
    add_output_options(sub, vb.common);
    sub->callback([&] {
      const std::uint64_t k =
          cycle_count_from_fraction(parse_fraction(vb.c), vb.m);
      require(vb.m >= 2 * k, Errc::invalid_argument,
              "degree too small for the cycle count");
      const CycleType type({{2, k}, {1, vb.m - 2 * k}});
      const std::uint64_t seed = resolve_seed(vb.common);
      ReportTable table;
      if (!vb.sweep.empty()) {
        const std::vector<std::uint64_t> widths =
            parse_u64_list(vb.sweep, "sweep");
        table.title = "verify-block-trend";
        table.columns = trend_columns;
        for (const TrendRow& row : block_probability_trend(
                 type, widths, vb.tail, vb.common.trials, seed))
          table.rows.push_back(trend_row_cells(row));
      } else {
        require(vb.d >= 2, Errc::invalid_argument,
                "need --d >= 2 (or --sweep)");
        const BlockExperiment exp = make_block_experiment(type, vb.d, vb.tail);
        const BlockMoments exact = block_moments(exp);
        const BlockTrialSummary trials =
            run_block_trials(exp, vb.common.trials, seed);
        table.title = "verify-block";
        table.columns = {
            "m", "d", "tail", "cycle_count",
            "p_escaped", "p_same", "p_split",
            "exact_mean_same", "exact_mean_split",
            "exact_second_same", "exact_second_split",
            "exact_mean", "exact_second_moment", "exact_variance",
            "leading_term",
            "cheb_k", "cheb_threshold", "cheb_lower_bound", "cheb_conclusive",
            "trials", "empirical_mean", "empirical_variance", "mean_radius",
            "empirical_mean_same", "empirical_mean_split",
            "escaped", "same_block", "split_blocks",
            "positive", "positive_low", "positive_high", "seed"};
        std::vector<Cell> row = {
            cell(vb.m), cell(vb.d), cell(vb.tail), cell(k),
            cell(exact.p_escaped), cell(exact.p_same), cell(exact.p_split),
            opt_cell(exact.mean_same), opt_cell(exact.mean_split),
            opt_cell(exact.second_same), opt_cell(exact.second_split),
            cell(exact.mean), cell(exact.second_moment), cell(exact.variance),
            cell(exact.leading_term)};
        add_chebyshev_cells(row, exact.mean, exact.variance);
        const WilsonInterval ci = trials.overall.positive_interval();
        row.push_back(cell(trials.overall.trials));
        row.push_back(cell(trials.overall.mean()));
        row.push_back(cell(trials.overall.variance()));
        row.push_back(cell(trials.overall.mean_radius()));
        row.push_back(opt_cell(trials.mean_same()));
        row.push_back(opt_cell(trials.mean_split()));
        row.push_back(cell(trials.escaped));
        row.push_back(cell(trials.same_block.trials));
        row.push_back(cell(trials.split_blocks.trials));
        row.push_back(cell(trials.overall.positive));
        row.push_back(cell(ci.low));
        row.push_back(cell(ci.high));
        row.push_back(cell(seed));
        table.rows.push_back(std::move(row));
      }
      table.manifest = make_manifest(command_line, seed, "");
      emit(table, vb.common, out);
    });
  }

  // ---- verify-int ----
  struct {
    Common common;
    std::uint64_t m = 0;
    std::uint64_t r = 0;
    std::string c;
    std::string sweep;
  } vi;
  {
    CLI::App* sub = app.add_subcommand(
        "verify-int",
        "invariant-set crossing count: exact moments against Monte Carlo");
    sub->add_option("--m", vi.m, "degree")->required();
    sub->add_option("--r", vi.r, "invariant tail size");
    sub->add_option("--c", vi.c, "cycle fraction, e.g. 0.5 or 1/2")->required();
    sub->add_option("--sweep", vi.sweep,
                    "comma-separated tail sizes; emits the P[count>0] trend");
    add_seed_option(sub, vi.common);
    add_trials_option(sub, vi.common);
    add_output_options(sub, vi.common);
    sub->callback([&] {
      const std::uint64_t k =
          cycle_count_from_fraction(parse_fraction(vi.c), vi.m);
      require(vi.m >= 2 * k, Errc::invalid_argument,
              "degree too small for the cycle count");
      const CycleType type({{2, k}, {1, vi.m - 2 * k}});
      const std::uint64_t seed = resolve_seed(vi.common);
      ReportTable table;
      if (!vi.sweep.empty()) {
        const std::vector<std::uint64_t> tails =
            parse_u64_list(vi.sweep, "sweep");
        table.title = "verify-int-trend";
        table.columns = trend_columns;
        for (const TrendRow& row : intransitive_probability_trend(
                 type, tails, vi.common.trials, seed))
          table.rows.push_back(trend_row_cells(row));
      } else {
        const IntransitiveExperiment exp =
            make_intransitive_experiment(type, vi.r);
        const IntransitiveMoments exact = intransitive_moments(exp);
        const TrialMoments trials =
            run_intransitive_trials(exp, vi.common.trials, seed);
        table.title = "verify-int";
        table.columns = {
            "m", "tail", "cycle_count",
            "exact_mean", "exact_second_moment", "exact_variance",
            "leading_term",
            "cheb_k", "cheb_threshold", "cheb_lower_bound", "cheb_conclusive",
            "trials", "empirical_mean", "empirical_variance", "mean_radius",
            "positive", "positive_low", "positive_high", "seed"};
        std::vector<Cell> row = {
            cell(vi.m), cell(vi.r), cell(k),
            cell(exact.mean), cell(exact.second_moment), cell(exact.variance),
            cell(exact.leading_term)};
        add_chebyshev_cells(row, exact.mean, exact.variance);
        const WilsonInterval ci = trials.positive_interval();
        row.push_back(cell(trials.trials));
        row.push_back(cell(trials.mean()));
        row.push_back(cell(trials.variance()));
        row.push_back(cell(trials.mean_radius()));
        row.push_back(cell(trials.positive));
        row.push_back(cell(ci.low));
        row.push_back(cell(ci.high));
        row.push_back(cell(seed));
        table.rows.push_back(std::move(row));
      }
      table.manifest = make_manifest(command_line, seed, "");
      emit(table, vi.common, out);
    });
  }

  // ---- crossover ----
  struct {
    Common common;
    std::string type;
    std::string kind = "primitive";
    std::uint64_t d = 0;
    double epsilon = 0.01;
  } co;
  {
    CLI::App* sub = app.add_subcommand(
        "crossover",
        "least diagonal scale where the order bound loses to the class size");
    sub->add_option("--type", co.type, "cycle type")->required();
    sub->add_option("--case", co.kind, "bound family")
        ->check(CLI::IsMember({"primitive", "wreath"}));
    sub->add_option("--d", co.d, "wreath blocksize (wreath case)");
    sub->add_option("--epsilon", co.epsilon, "ratio threshold")
        ->check(CLI::PositiveNumber);
    add_output_options(sub, co.common);
    sub->callback([&] {
      const CycleType t = parse_cycle_type(co.type);
      CrossoverCase kind;
      if (co.kind == "primitive") {
        kind = PrimitiveCase{};
      } else {
        require(co.d >= 2, Errc::invalid_argument,
                "wreath case needs --d >= 2");
        kind = WreathCase{co.d};
      }
      const CrossoverResult result = vanishing_crossover(t, kind, co.epsilon);
      ReportTable table;
      table.title = "crossover";
      table.columns = {"cycle_type", "case", "d", "epsilon", "least_scale",
                       "log_ratio_at", "log_ratio_doubled", "witness_log_r",
                       "witness_log_s", "witness_exponent", "order_log_b",
                       "order_log_c", "order_exponent"};
      std::vector<Cell> row = {
          cell(to_string(t)), cell(co.kind),
          co.kind == "wreath" ? cell(co.d) : null_cell(), cell(co.epsilon),
          cell(result.least_scale), cell(result.log_ratio_at),
          cell(result.log_ratio_doubled), cell(result.class_witness.log_r),
          cell(result.class_witness.log_s),
          cell(result.class_witness.exponent_coefficient)};
      if (result.order_witness) {
        row.push_back(cell(result.order_witness->log_b));
        row.push_back(cell(result.order_witness->log_c));
        row.push_back(cell(result.order_witness->exponent_coefficient));
      } else {
        row.push_back(null_cell());
        row.push_back(null_cell());
        row.push_back(null_cell());
      }
      table.rows.push_back(std::move(row));
      table.manifest = make_manifest(command_line, 0, "");
      emit(table, co.common, out);
    });
  }

  // ---- psd-check ----
  struct {
    Common common;
    std::string spec_path;
    std::string irs;
    std::uint64_t level = 0;
    std::uint64_t sets = 100;
    std::uint64_t size = 6;
  } psd;
  {
    CLI::App* sub = app.add_subcommand(
        "psd-check",
        "Gram positivity of a limit character on random element sets");
    sub->add_option("--spec", psd.spec_path, "limit group JSON file")
        ->required();
    sub->add_option("--irs", psd.irs, "limit character label")->required();
    sub->add_option("--level", psd.level, "sampling level")->required();
    sub->add_option("--sets", psd.sets, "number of random sets")
        ->check(CLI::PositiveNumber);
    sub->add_option("--size", psd.size, "elements per set")
        ->check(CLI::Range(std::uint64_t(1), std::uint64_t(64)));
    add_seed_option(sub, psd.common);
    add_output_options(sub, psd.common);
    sub->callback([&] {
      const std::string spec_text = read_file(psd.spec_path);
      const SdsSpec spec = SdsSpec::from_json(spec_text);
      const IrsLabel label = parse_irs_label(psd.irs);
      const std::uint64_t degree = spec.level_size(psd.level);
      require(degree <= 4096, Errc::degree_too_large,
              "Gram sampling capped at 4096 points per level");
      const std::uint64_t seed = resolve_seed(psd.common);
      ReportTable table;
      table.title = "psd-check";
      table.columns = {"set", "irs_label", "level", "size", "min_eigenvalue",
                       "pass", "seed"};
      for (std::uint64_t set = 0; set < psd.sets; ++set) {
        Philox rng(seed, set);
        std::vector<LevelElement> elements;
        elements.reserve(psd.size);
        for (std::uint64_t i = 0; i < psd.size; ++i)
          elements.emplace_back(psd.level, random_permutation(degree, rng));
        const double min_eig = min_gram_eigenvalue(spec, label, elements);
        table.rows.push_back({cell(set), cell(to_string(label)),
                              cell(psd.level), cell(psd.size), cell(min_eig),
                              cell(min_eig >= -psd_tolerance), cell(seed)});
      }
      table.manifest = make_manifest(command_line, seed, spec_text);
      emit(table, psd.common, out);
    });
  }

  // ---- probe-unique ----
  struct {
    Common common;
    std::string spec_path;
    std::string h;
    std::string l;
    std::uint64_t level = 0;
    std::uint64_t small_level = 0;
    bool sample = false;
  } pu;
  {
    CLI::App* sub = app.add_subcommand(
        "probe-unique",
        "fraction of conjugates of H meeting the small level exactly in L");
    sub->add_option("--spec", pu.spec_path, "limit group JSON file")->required();
    sub->add_option("--h-group", pu.h, "subgroup at --level (DSL)")->required();
    sub->add_option("--l-group", pu.l, "subgroup at --small-level (DSL)")
        ->required();
    sub->add_option("--level", pu.level, "level of H")->required();
    sub->add_option("--small-level", pu.small_level, "level of L")->required();
    sub->add_flag("--sample", pu.sample,
                  "Monte Carlo instead of exact enumeration");
    add_seed_option(sub, pu.common);
    add_trials_option(sub, pu.common);
    add_output_options(sub, pu.common);
    sub->callback([&] {
      const std::string spec_text = read_file(pu.spec_path);
      const SdsSpec spec = SdsSpec::from_json(spec_text);
      const SubgroupSpec h = parse_subgroup(pu.h, spec.level_size(pu.level));
      const SubgroupSpec l =
          parse_subgroup(pu.l, spec.level_size(pu.small_level));
      ReportTable table;
      table.title = "probe-unique";
      table.columns = {"h",     "l",     "level",   "small_level",
                       "mode",  "exact_value", "trials", "hits",
                       "freq",  "ci_low", "ci_high", "seed"};
      if (pu.sample) {
        const std::uint64_t seed = resolve_seed(pu.common);
        const TrialReport report = unique_ergodicity_probe_sampled(
            spec, h, pu.level, pu.small_level, l, pu.common.trials, seed);
        table.rows.push_back(
            {cell(h.describe()), cell(l.describe()), cell(pu.level),
             cell(pu.small_level), cell("sample"), opt_cell(report.exact),
             cell(report.trials), cell(report.hits), cell(report.freq),
             cell(report.ci_low), cell(report.ci_high), cell(seed)});
        table.manifest = make_manifest(command_line, seed, spec_text);
      } else {
        const Rational value = unique_ergodicity_probe_exact(
            spec, h, pu.level, pu.small_level, l);
        table.rows.push_back(
            {cell(h.describe()), cell(l.describe()), cell(pu.level),
             cell(pu.small_level), cell("exact"), cell(value), null_cell(),
             null_cell(), cell(to_double(value)), null_cell(), null_cell(),
             cell(std::uint64_t(0))});
        table.manifest = make_manifest(command_line, 0, spec_text);
      }
      emit(table, pu.common, out);
    });
  }

  try {
    std::vector<std::string> reversed(args);
    std::reverse(reversed.begin(), reversed.end());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace sdsirs::cli

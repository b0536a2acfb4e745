#include "swd/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "swd/affine_b.hpp"
#include "swd/cocycle.hpp"
#include "swd/duality.hpp"
#include "swd/serialize.hpp"

namespace swd::cli {

namespace {

void require_n(int n) {
  if (n < 2) throw UsageError("--n must be at least 2, got " + std::to_string(n));
}

void require_parity(int i, std::int64_t p) {
  if (floor_mod(p - i - 1, 2) != 0) {
    throw UsageError("parity rule p = i+1 (mod 2) violated: i=" + std::to_string(i) +
                     ", p=" + std::to_string(p));
  }
}

void require_range(std::int64_t from, std::int64_t to) {
  if (from > to) {
    throw UsageError("--from " + std::to_string(from) + " exceeds --to " + std::to_string(to));
  }
}

Segment segment_arg(const std::string& text) {
  try {
    return parse_segment(text);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

Multisegment segment_pair_arg(const std::string& text) {
  Multisegment m;
  try {
    m = parse_multisegment(text);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (m.size() != 2) {
    throw UsageError("--segs needs exactly two segments, got " + std::to_string(m.size()));
  }
  return m;
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

void emit_json(std::ostream& out, Json j) { out << j.dump() << '\n'; }

Json with_schema(Json j) {
  j["schema"] = kSchemaVersion;
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open input file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw DomainError("malformed JSON in '" + path + "': " + e.what());
  }
}

struct Runner {
  Format format;
  std::ostream& out;

  bool tsv(Format fallback) const {
    const Format f = format == Format::Default ? fallback : format;
    return f == Format::Tsv;
  }

  void operator()(const Denom& c) const {
    const DenominatorRoots r = denom_roots(BnData(c.n), c.k, c.l);
    if (tsv(Format::Json)) {
      out << "root\n";
      for (QPower x : r.roots()) out << x.to_string() << '\n';
      return;
    }
    Json text = Json::array();
    for (QPower x : r.roots()) text.push_back(x.to_string());
    emit_json(out, Json{{"schema", kSchemaVersion}, {"n", c.n}, {"k", c.k}, {"l", c.l},
                        {"roots", to_json(r)}, {"text", std::move(text)}});
  }

  void operator()(const Quiver& c) const {
    const DualityDatum d(c.n);
    if (tsv(Format::Tsv)) {
      out << "i\tj\td_ij\td_ij_closed\tmatch\n";
      for (std::int64_t i = c.from; i <= c.to; ++i) {
        for (std::int64_t j = c.from; j <= c.to; ++j) {
          const int dij = d.quiver_dij(i, j);
          const int closed = d.quiver_closed_form(i, j);
          out << i << '\t' << j << '\t' << dij << '\t' << closed << '\t' << bool_text(dij == closed)
              << '\n';
        }
      }
      return;
    }
    Json rows = Json::array();
    for (std::int64_t i = c.from; i <= c.to; ++i) {
      for (std::int64_t j = c.from; j <= c.to; ++j) {
        const int dij = d.quiver_dij(i, j);
        const int closed = d.quiver_closed_form(i, j);
        rows.push_back(Json{{"i", i}, {"j", j}, {"d_ij", dij}, {"d_ij_closed", closed},
                            {"match", dij == closed}});
      }
    }
    emit_json(out, Json{{"schema", kSchemaVersion}, {"n", c.n}, {"rows", std::move(rows)}});
  }

  void operator()(const Cartan& c) const {
    const DualityDatum d(c.n);
    if (tsv(Format::Tsv)) {
      out << "i\tj\ta_ij\n";
      for (std::int64_t i = c.from; i <= c.to; ++i)
        for (std::int64_t j = c.from; j <= c.to; ++j)
          out << i << '\t' << j << '\t' << d.cartan_AJ(i, j) << '\n';
      return;
    }
    Json rows = Json::array();
    for (std::int64_t i = c.from; i <= c.to; ++i)
      for (std::int64_t j = c.from; j <= c.to; ++j)
        rows.push_back(Json{{"i", i}, {"j", j}, {"a_ij", d.cartan_AJ(i, j)}});
    emit_json(out, Json{{"schema", kSchemaVersion}, {"n", c.n}, {"rows", std::move(rows)}});
  }

  void emit_class(const SimpleClassB& v) const {
    if (tsv(Format::Json)) {
      out << to_string(v) << '\n';
    } else {
      emit_json(out, with_schema(to_json(v)));
    }
  }

  void operator()(const FImage& c) const { emit_class(f_image(DualityDatum(c.n), c.segment)); }

  void operator()(const Phi& c) const {
    const DualityDatum d(c.n);
    emit_class(c.t == 1 ? phi1_fund(d, c.i, c.p) : phi2_fund(d, c.i, c.sign.value_or(1), c.p));
  }

  void emit_pair(const Multisegment& segs, const char* name, std::int64_t value) const {
    if (tsv(Format::Json)) {
      out << "s1\ts2\t" << name << '\n'
          << segs[0].to_string() << '\t' << segs[1].to_string() << '\t' << value << '\n';
      return;
    }
    emit_json(out, Json{{"schema", kSchemaVersion},
                        {"segments", Json::array({to_json(segs[0]), to_json(segs[1])})},
                        {name, value}});
  }

  void operator()(const Lambda& c) const { emit_pair(c.segs, "lambda", lambda(c.segs[0], c.segs[1])); }
  void operator()(const De& c) const { emit_pair(c.segs, "de", de(c.segs[0], c.segs[1])); }

  void operator()(const CocycleSolve& c) const {
    const CocycleInput input = cocycle_input_from_json(read_json_file(c.path), c.N, c.series, c.order);
    emit_json(out, cocycle_output_json(input));
  }

  void operator()(const Table& c) const {
    const std::vector<CorollaryRow> rows = corollary_table(DualityDatum(c.n));
    if (tsv(Format::Tsv)) {
      out << "part\ti\tp\tphi1\tphi2\n";
      for (const CorollaryRow& r : rows) {
        out << r.part << '\t' << r.i << '\t' << r.p << '\t' << to_string(r.phi1) << '\t'
            << to_string(r.phi2) << '\n';
      }
      return;
    }
    Json items = Json::array();
    for (const CorollaryRow& r : rows) {
      items.push_back(Json{{"part", r.part}, {"i", r.i}, {"p", r.p}, {"phi1", to_json(r.phi1)},
                           {"phi2", to_json(r.phi2)}});
    }
    emit_json(out, Json{{"schema", kSchemaVersion}, {"n", c.n}, {"rows", std::move(items)}});
  }

  void operator()(const Help& h) const { out << h.text; }
};

}  // namespace

Command parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Exact computations for the type A / type B quantum affine duality", "swd"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  bool as_json = false;
  bool as_tsv = false;
  auto add_format = [&](CLI::App* sub) {
    auto* j = sub->add_flag("--json", as_json, "Emit JSON");
    auto* t = sub->add_flag("--tsv", as_tsv, "Emit TSV");
    j->excludes(t);
  };

  int n = 0, k = 0, l = 0, t = 0, i = 0, sign = 0, N = 0, order = kDefaultSeriesOrder;
  std::int64_t from = 0, to = 0, p = 0;
  std::string seg, segs, path;
  bool series = false;

  auto* denom = app.add_subcommand("denom", "Roots of the denominator d_{k,l}(z) for B_n^(1)");
  denom->add_option("--n", n, "Rank n >= 2")->required();
  denom->add_option("--k", k, "First fundamental index, 1..n")->required();
  denom->add_option("--l", l, "Second fundamental index, 1..n")->required();

  auto* quiver = app.add_subcommand("quiver", "Arrow counts d_ij over a square range");
  auto* cartan = app.add_subcommand("cartan", "Cartan matrix entries over a square range");
  for (auto* sub : {quiver, cartan}) {
    sub->add_option("--n", n, "Rank n >= 2")->required();
    sub->add_option("--from", from, "First index")->required();
    sub->add_option("--to", to, "Last index")->required();
  }

  auto* fimage = app.add_subcommand("fimage", "Image of the segment class [L(a,b)]");
  fimage->add_option("--n", n, "Rank n >= 2")->required();
  fimage->add_option("--seg", seg, "Segment (a,b) or a..b")->required();

  auto* phi = app.add_subcommand("phi", "Image of a fundamental class of type A_{2n-1}^(t)");
  phi->add_option("--n", n, "Rank n >= 2")->required();
  phi->add_option("--t", t, "1 (untwisted) or 2 (twisted)")->required();
  phi->add_option("--i", i, "Fundamental index")->required();
  auto* sign_opt = phi->add_option("--sign", sign, "Sign of the spectral parameter (t=2)");
  phi->add_option("--p", p, "Exponent p with spectral parameter (-q)^p")->required();

  auto* lam = app.add_subcommand("lambda", "Lambda invariant of two segment modules");
  auto* dee = app.add_subcommand("de", "de invariant of two segment modules");
  for (auto* sub : {lam, dee}) {
    sub->add_option("--segs", segs, "Two segments, e.g. \"(1,2);(2,4)\"")->required();
  }

  auto* cocycle = app.add_subcommand("cocycle-solve", "Solve the factorization system for a family");
  cocycle->add_option("--N", N, "Period N >= 2")->required();
  cocycle->add_option("--input", path, "Family JSON file")->required();
  cocycle->add_flag("--series", series, "Entries are power series");
  cocycle->add_option("--order", order, "Truncation order for --series");

  auto* table = app.add_subcommand("table", "Table of phi_1 and phi_2 on fundamental classes");
  table->add_option("--n", n, "Rank n >= 2")->required();

  for (auto* sub : {denom, quiver, cartan, fimage, phi, lam, dee, cocycle, table}) add_format(sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto parsed = app.get_subcommands();
    return Command{Help{parsed.empty() ? app.help() : parsed.front()->help()}};
  } catch (const CLI::CallForAllHelp&) {
    return Command{Help{app.help("", CLI::AppFormatMode::All)}};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  Command cmd;
  cmd.format = as_json ? Format::Json : (as_tsv ? Format::Tsv : Format::Default);

  if (*denom) {
    require_n(n);
    if (k < 1 || k > n || l < 1 || l > n) throw UsageError("--k and --l must lie in 1..n");
    cmd.body = Denom{n, k, l};
  } else if (*quiver) {
    require_n(n);
    require_range(from, to);
    cmd.body = Quiver{n, from, to};
  } else if (*cartan) {
    require_n(n);
    require_range(from, to);
    cmd.body = Cartan{n, from, to};
  } else if (*fimage) {
    require_n(n);
    cmd.body = FImage{n, segment_arg(seg)};
  } else if (*phi) {
    require_n(n);
    if (t != 1 && t != 2) throw UsageError("--t must be 1 or 2");
    const int max_i = t == 1 ? 2 * n - 1 : n;
    if (i < 1 || i > max_i) {
      throw UsageError("--i must lie in 1.." + std::to_string(max_i) + " for t=" + std::to_string(t));
    }
    std::optional<int> s;
    if (sign_opt->count() > 0) {
      if (sign != 1 && sign != -1) throw UsageError("--sign must be 1 or -1");
      if (t == 1 && sign != 1) throw UsageError("--sign -1 needs t=2");
      s = sign;
    }
    require_parity(i, p);
    cmd.body = Phi{n, t, i, s, p};
  } else if (*lam) {
    cmd.body = Lambda{segment_pair_arg(segs)};
  } else if (*dee) {
    cmd.body = De{segment_pair_arg(segs)};
  } else if (*cocycle) {
    if (N < 2) throw UsageError("--N must be at least 2");
    if (order < 0) throw UsageError("--order must be non-negative");
    if (cmd.format == Format::Tsv) throw UsageError("cocycle-solve emits JSON only");
    cmd.body = CocycleSolve{N, path, series, order};
  } else if (*table) {
    require_n(n);
    cmd.body = Table{n};
  }
  return cmd;
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  std::ostringstream buffer;
  try {
    std::visit(Runner{cmd.format, buffer}, cmd.body);
  } catch (const DomainError& e) {
    err << Json{{"error", "domain"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  }
  out << buffer.str();
  return 0;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Command cmd;
  try {
    cmd = parse_args(args);
  } catch (const UsageError& e) {
    err << "swd: " << e.what() << "\nRun 'swd --help' for usage.\n";
    return 1;
  }
  return run(cmd, out, err);
}

}  // namespace swd::cli

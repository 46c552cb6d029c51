#include "cpindex/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "cpindex/errors.hpp"
#include "cpindex/fhindex.hpp"
#include "cpindex/flagcoh.hpp"
#include "cpindex/records.hpp"
#include "cpindex/selftest.hpp"
#include "cpindex/wreath.hpp"

namespace cpindex::cli {

using flagcoh::Field;

namespace {

struct Options {
  std::uint32_t p = 3;
  int n = 1;
  int j = 1;
  int r = 0;
  std::string field = "complex";
  std::optional<int> depth;
  std::optional<int> max_l;
  bool json = false;
  bool verify = false;
  std::string out_path;
  std::string in_path;
};

struct Result {
  std::string text;
  int status = Success;
};

std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::string verdict(bool ok) { return ok ? "MATCH" : "MISMATCH"; }

Result index_command(const Options& o) {
  const Field field = flagcoh::parse_field(o.field);
  const auto c = fhindex::compute_index(o.p, o.n, field, o.max_l);
  auto rec = records::make_record(c);
  Result res;
  std::optional<fhindex::IndexResult> closed;
  if (o.verify) {
    closed = fhindex::closed_form_index(o.p, o.n, field);
    rec.closedShape = fhindex::to_string(closed->shape);
    rec.closedL = closed->l;
    rec.match = *closed == c.result;
    if (!*rec.match) res.status = Mismatch;
  }
  if (o.json) {
    res.text = records::render(rec) + "\n";
    return res;
  }
  std::ostringstream os;
  os << "p = " << o.p << ", n = " << o.n << " = " << o.p << "^" << c.split.a << " * " << c.split.q
     << ", field = " << rec.field << "\n";
  os << "computed     " << c.result.render() << "\n";
  if (closed) {
    os << "closed form  " << closed->render() << "\n";
    os << verdict(*rec.match) << "\n";
  }
  os << "generators " << c.generators_used << ", degrees scanned " << c.degrees_scanned << ", " << std::fixed
     << std::setprecision(3) << c.elapsed_seconds << " s\n";
  res.text = os.str();
  return res;
}

Result flag_command(const Options& o) {
  records::SeriesRecord rec;
  Result res;
  std::optional<galgebra::AlgebraPresentation> pres;
  if (!o.in_path.empty()) {
    std::ifstream in(o.in_path);
    if (!in) throw DomainError("cannot read " + o.in_path);
    std::stringstream buf;
    buf << in.rdbuf();
    pres = galgebra::parse_presentation(buf.str(), o.p);
    rec.field = "input";
    rec.j = 0;
    rec.r = 0;
    rec.depth = o.depth.value_or(20);
  } else {
    const Field field = flagcoh::parse_field(o.field);
    if (o.r == 0) throw DomainError("--r is required unless --in is given");
    pres = flagcoh::flag_presentation(field, o.j, o.r, o.p);
    rec.field = flagcoh::to_string(field);
    rec.j = o.j;
    rec.r = o.r;
    rec.depth = o.depth.value_or(flagcoh::default_depth(o.j, o.p));
  }
  rec.p = static_cast<int>(o.p);
  rec.presentation = galgebra::render_presentation(*pres);
  const auto series = flagcoh::poincare_series(*pres, rec.depth);
  rec.series = series.coefficients;
  rec.oddVanish = series.odd_degrees_vanish();
  rec.match = true;
  if (o.in_path.empty()) {
    const Field field = flagcoh::parse_field(o.field);
    try {
      rec.fibration = flagcoh::fibration_series_oracle(field, o.j, o.r, o.p, rec.depth).coefficients;
      rec.match = *rec.fibration == rec.series;
    } catch (const StructuralError& e) {
      rec.fibrationError = e.what();
      rec.match = false;
    }
    if (field == Field::Complex) {
      std::vector<int> parts(static_cast<std::size_t>(o.r), o.j);
      if (o.r < static_cast<int>(o.p)) parts.push_back((static_cast<int>(o.p) - o.r) * o.j);
      rec.gaussian = flagcoh::gaussian_multinomial(parts, rec.depth).coefficients;
      rec.match = rec.match && *rec.gaussian == rec.series;
    }
  }
  if (o.verify && !rec.match) res.status = Mismatch;
  if (o.json) {
    res.text = records::render(rec) + "\n";
    return res;
  }
  std::ostringstream os;
  os << rec.presentation;
  if (!rec.presentation.empty() && rec.presentation.back() != '\n') os << "\n";
  os << "series       (" << join(rec.series) << ")\n";
  if (rec.fibration) os << "fibration    (" << join(*rec.fibration) << ") " << verdict(*rec.fibration == rec.series) << "\n";
  if (rec.fibrationError) os << "fibration    unavailable: " << *rec.fibrationError << "\n";
  if (rec.gaussian) os << "q-multinomial (" << join(*rec.gaussian) << ") " << verdict(*rec.gaussian == rec.series) << "\n";
  os << "odd degrees  " << (rec.oddVanish ? "vanish" : "nonzero") << "\n";
  res.text = os.str();
  return res;
}

Result wreath_command(const Options& o) {
  const Field field = flagcoh::parse_field(o.field);
  records::WreathRecord rec;
  rec.p = static_cast<int>(o.p);
  rec.n = o.n;
  rec.field = flagcoh::to_string(field);
  rec.depth = o.depth.value_or(2 * static_cast<int>(o.p) * o.n);
  if (field == Field::Complex) {
    const auto cs = wreath::wreath_chern(o.n, o.p, rec.depth);
    for (std::size_t k = 1; k < cs.size(); ++k)
      rec.classes.push_back({"c" + std::to_string(k), 2 * static_cast<int>(k), wreath::render_wreath(cs[k])});
  } else {
    const auto ps = wreath::wreath_pontrjagin(o.n, o.p, rec.depth);
    for (std::size_t i = 1; i < ps.size(); ++i)
      rec.classes.push_back({"p" + std::to_string(i), 4 * static_cast<int>(i), wreath::render_wreath(ps[i])});
    const int pn = static_cast<int>(o.p) * o.n;
    if (o.n % 2 == 0 && pn <= rec.depth)
      rec.classes.push_back({"e" + std::to_string(pn), pn, wreath::render_wreath(wreath::wreath_euler(o.n, o.p))});
  }
  Result res;
  if (o.json) {
    res.text = records::render(rec) + "\n";
    return res;
  }
  std::ostringstream os;
  os << (field == Field::Complex ? "gamma^" : "gamma_SO^") << o.n << " wr C_" << o.p << ", degrees <= " << rec.depth
     << "\n";
  for (const auto& c : rec.classes) os << c.name << " = " << c.value << "\n";
  res.text = os.str();
  return res;
}

Result verify_command(const Options& o) {
  const Field field = flagcoh::parse_field(o.field);
  const auto rep = fhindex::verify_reduction_relations(o.p, o.n, field);
  const auto rec = records::make_record(rep);
  Result res;
  res.status = rec.passed ? Success : Mismatch;
  if (o.json) {
    res.text = records::render(rec) + "\n";
    return res;
  }
  std::ostringstream os;
  os << "p = " << o.p << ", n = " << o.n << ", field = " << rec.field << "\n";
  os << " k  family  holds  lambda  alpha  relation\n";
  for (const auto& c : rep.checks) {
    os << std::setw(2) << c.k << "  " << std::left << std::setw(6) << c.family << std::right << "  "
       << (c.holds ? "yes  " : "NO   ") << "  " << std::setw(6) << c.lambda << "  " << std::setw(5)
       << (c.alpha ? std::to_string(*c.alpha) : std::string("-")) << "  " << c.predicted << "\n";
  }
  os << "u relation       " << (rep.u_relation ? "holds" : "FAILS") << "\n";
  os << "v relation       " << (rep.v_relation ? "holds" : "FAILS") << "\n";
  os << "alpha_0 relation " << (rep.alpha0_relation ? "holds" : "FAILS") << "\n";
  os << (rec.passed ? "PASSED" : "FAILED") << "\n";
  res.text = os.str();
  return res;
}

Result shadows_command(const Options& o) {
  const Field field = flagcoh::parse_field(o.field);
  const auto rec = records::make_record(fhindex::shadow_bound(o.p, o.n, field));
  Result res;
  const bool boundary = rec.admitsMaxR && !rec.admitsMaxRPlusOne;
  if (o.verify && !boundary) res.status = Mismatch;
  if (o.json) {
    res.text = records::render(rec) + "\n";
    return res;
  }
  std::ostringstream os;
  os << "maxR = " << rec.maxR << "\n";
  os << rec.justification << "\n";
  os << "containment at r = " << rec.maxR << ": " << (rec.admitsMaxR ? "admits" : "rejects") << "; at r = "
     << rec.maxR + 1 << ": " << (rec.admitsMaxRPlusOne ? "admits" : "rejects") << "\n";
  if (o.verify) os << verdict(boundary) << "\n";
  res.text = os.str();
  return res;
}

Result selftest_command(const Options& o) {
  const auto rec = selftest::run_all();
  Result res;
  res.status = rec.passed ? Success : Mismatch;
  if (o.json) {
    res.text = records::render(rec) + "\n";
    return res;
  }
  std::ostringstream os;
  for (const auto& c : rec.criteria)
    os << (c.passed ? "PASS" : "FAIL") << "  " << c.id << "  " << std::left << std::setw(32) << c.name << std::right
       << std::fixed << std::setprecision(3) << std::setw(8) << c.elapsed << " s  " << c.detail << "\n";
  os << (rec.passed ? "all criteria pass" : "some criteria fail") << "\n";
  res.text = os.str();
  return res;
}

void common_flags(CLI::App* cmd, Options& o, bool want_n) {
  cmd->add_option("--p", o.p, "odd prime")->capture_default_str();
  if (want_n) cmd->add_option("--n", o.n, "block rank")->capture_default_str();
  cmd->add_option("--field", o.field, "complex or real")->capture_default_str();
  cmd->add_flag("--json", o.json, "structured output");
  cmd->add_option("--out", o.out_path, "write output to this file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fadell-Husseini index of cyclic actions on flag manifolds over F_p", "cpindex"};
  app.require_subcommand(1);
  Options o;

  auto* index = app.add_subcommand("index", "compute the index ideal of F_n");
  common_flags(index, o, true);
  index->add_option("--max-l", o.max_l, "search bound on the v exponent");
  index->add_flag("--verify", o.verify, "compare with the closed form");

  auto* flag = app.add_subcommand("flag-cohomology", "presentation and Poincare series of a flag manifold");
  common_flags(flag, o, false);
  flag->add_option("--j", o.j, "block rank")->capture_default_str();
  flag->add_option("--r", o.r, "number of j-blocks");
  flag->add_option("--depth", o.depth, "series depth");
  flag->add_option("--in", o.in_path, "read a presentation instead");
  flag->add_flag("--verify", o.verify, "fail unless the oracles agree");

  auto* wr = app.add_subcommand("wreath-class", "characteristic classes of the wreath power");
  common_flags(wr, o, true);
  wr->add_option("--depth", o.depth, "largest degree");

  auto* ver = app.add_subcommand("verify-relations", "check the reduction relations (p | n)");
  common_flags(ver, o, true);

  auto* sh = app.add_subcommand("shadows", "largest r for the sphere-bundle bound");
  common_flags(sh, o, true);
  sh->add_flag("--verify", o.verify, "check the containment boundary");

  auto* st = app.add_subcommand("selftest", "run the acceptance grid");
  st->add_flag("--json", o.json, "structured output");
  st->add_option("--out", o.out_path, "write output to this file");

  std::vector<const char*> argv{"cpindex"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Success;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return Usage;
  }

  Result res;
  try {
    if (index->parsed()) res = index_command(o);
    else if (flag->parsed()) res = flag_command(o);
    else if (wr->parsed()) res = wreath_command(o);
    else if (ver->parsed()) res = verify_command(o);
    else if (sh->parsed()) res = shadows_command(o);
    else res = selftest_command(o);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return Mismatch;
  }

  if (o.out_path.empty()) {
    out << res.text;
  } else {
    std::ofstream f(o.out_path);
    if (!f) {
      err << "error: cannot write " << o.out_path << "\n";
      return Usage;
    }
    f << res.text;
    err << "wrote " << o.out_path << "\n";
  }
  return res.status;
}

}  // namespace cpindex::cli

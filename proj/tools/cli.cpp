#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <system_error>

#include <CLI11.hpp>

#include "zernike/coefficients.hpp"
#include "zernike/errors.hpp"
#include "zernike/evaluation.hpp"
#include "zernike/indexing.hpp"
#include "zernike/quadrature.hpp"
#include "zernike/record.hpp"
#include "zernike/symbolic.hpp"
#include "zernike/tablegen.hpp"

namespace zernike::cli {

std::string format_real(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  std::string s(buf, end);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";  // 'n' covers inf/nan
  return s;
}

namespace {

struct ConvertArgs {
  std::optional<std::int64_t> j;
  std::optional<std::string> nm;
  std::string scheme = "noll";
};

struct ExprArgs {
  std::int64_t j = 1;
  std::string format = "latex";
  bool unnormalized = false;
};

struct TableArgs {
  std::int64_t j_min = 1;
  std::int64_t j_max = 465;
  std::string out = "-";
  bool standalone = false;
};

struct EvalArgs {
  std::int64_t j = 1;
  double rho = 0.0;
  double theta = 0.0;
  bool unnormalized = false;
};

struct CheckArgs {
  std::int64_t j_max = 36;
  double tol = 1e-8;
  int radial_nodes = 64;
  int angular_nodes = 256;
};

BwIndex parse_nm(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw DomainError(DomainErrorKind::bad_argument, "--nm expects \"n,m\", got \"" + text + "\"");
  const auto parse_int = [&](std::string_view part) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size())
      throw DomainError(DomainErrorKind::bad_argument, "--nm expects \"n,m\", got \"" + text + "\"");
    return v;
  };
  const std::string_view view(text);
  return validate_nm(parse_int(view.substr(0, comma)), parse_int(view.substr(comma + 1)));
}

int cmd_convert(const ConvertArgs& args, std::ostream& out) {
  if (!args.j && !args.nm)
    throw DomainError(DomainErrorKind::bad_argument, "convert needs one of --j or --nm");
  BwIndex idx = validate_nm(0, 0);
  if (args.nm) {
    idx = parse_nm(*args.nm);
  } else if (args.scheme == "ansi") {
    idx = ansi_to_nm(AnsiIndex(*args.j));
  } else {
    idx = j_to_nm(NollIndex(*args.j));
  }
  const NollIndex j = nm_to_j(idx);
  out << "j=" << j.value() << " n=" << idx.n() << " m=" << idx.m() << " k=" << nm_to_k(idx)
      << " ansi=" << nm_to_ansi(idx).value() << " r=" << seq_position(j).r << "\n";
  return ok;
}

std::string trim_right(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

int cmd_expr(const ExprArgs& args, std::ostream& out) {
  const ZernikeSpec spec = zernike_spec(NollIndex(args.j));
  if (args.format == "json") {
    out << coefficient_record_json(spec) << "\n";
    return ok;
  }
  if (args.format == "record") {
    out << coefficient_record_text(spec);
    return ok;
  }
  const SyntaxProfile profile = args.format == "plain" ? SyntaxProfile::plain()
                                : args.format == "code" ? SyntaxProfile::code()
                                                        : SyntaxProfile::latex();
  out << trim_right(render_zernike(spec.idx, profile, !args.unnormalized)) << "\n";
  return ok;
}

int cmd_table(const TableArgs& args, std::ostream& out, std::ostream& err) {
  TableSpec spec;
  spec.j_min = args.j_min;
  spec.j_max = args.j_max;
  spec.validate();

  const auto emit = [&](TextSink& sink) {
    if (args.standalone)
      gen_document(sink, spec);
    else
      gen_long_table(sink, spec);
  };

  if (args.out == "-") {
    StreamSink sink(out);
    emit(sink);
    err << "rows=" << spec.n_rows() << "\n";
    return ok;
  }
  std::ofstream file(args.out, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + args.out + "' for writing");
  StreamSink sink(file);
  emit(sink);
  file.close();
  if (!file) throw IoError("failed to finish writing '" + args.out + "'");
  out << "rows=" << spec.n_rows() << " file=" << args.out << "\n";
  return ok;
}

int cmd_eval(const EvalArgs& args, std::ostream& out) {
  const ZernikeSpec spec = zernike_spec(NollIndex(args.j));
  const EvalPoint pt(args.rho, args.theta);
  out << format_real(eval_zernike(spec, pt, args.unnormalized ? Normalized::no : Normalized::yes))
      << "\n";
  return ok;
}

int cmd_check(const CheckArgs& args, std::ostream& out) {
  const QuadratureConfig cfg{args.radial_nodes, args.angular_nodes};
  const OrthonormalityReport report = check_orthonormality(args.j_max, cfg);
  const bool pass = report.max_deviation <= args.tol;
  out << "max_deviation=" << format_real(report.max_deviation) << " worst=(" << report.worst_j1
      << "," << report.worst_j2 << ") pairs=" << report.pairs << " tol=" << format_real(args.tol)
      << " " << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? ok : domain_failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zernike circular polynomial indices, expressions, tables and checks",
               "zernike"};
  app.require_subcommand(1, 1);

  ConvertArgs convert;
  auto* convert_cmd = app.add_subcommand("convert", "Print the full index record of one polynomial");
  auto* convert_j = convert_cmd->add_option("--j", convert.j, "Single index (Noll unless --scheme ansi)");
  auto* convert_nm = convert_cmd->add_option("--nm", convert.nm, "Born-Wolf pair as \"n,m\"");
  convert_j->excludes(convert_nm);
  convert_cmd->add_option("--scheme", convert.scheme, "Single-index scheme for --j")
      ->check(CLI::IsMember({"noll", "ansi"}));

  ExprArgs expr;
  auto* expr_cmd = app.add_subcommand("expr", "Print the expression of Z_j");
  expr_cmd->add_option("--j", expr.j, "Noll index")->required();
  expr_cmd->add_option("--format", expr.format, "latex, plain, code, json or record")
      ->check(CLI::IsMember({"latex", "plain", "code", "json", "record"}));
  expr_cmd->add_flag("--unnormalized", expr.unnormalized, "Drop the normalization factor");

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Write the LaTeX long table for a range of j");
  table_cmd->add_option("--jmin", table.j_min, "First Noll index")->capture_default_str();
  table_cmd->add_option("--jmax", table.j_max, "Last Noll index")->capture_default_str();
  table_cmd->add_option("--out", table.out, "Output .tex path, '-' for stdout")->capture_default_str();
  table_cmd->add_flag("--standalone", table.standalone, "Emit a complete document, not a fragment");

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate Z_j at one point of the unit disk");
  eval_cmd->add_option("--j", eval.j, "Noll index")->required();
  eval_cmd->add_option("--rho", eval.rho, "Radius in [0, 1]")->required();
  eval_cmd->add_option("--theta", eval.theta, "Angle in radians")->required();
  eval_cmd->add_flag("--unnormalized", eval.unnormalized, "Drop the normalization factor");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Verify <Z_j, Z_j'> = pi delta by quadrature");
  check_cmd->add_option("--jmax", check.j_max, "Largest Noll index")->capture_default_str();
  check_cmd->add_option("--tol", check.tol, "Maximum allowed deviation")->capture_default_str();
  check_cmd->add_option("--radial-nodes", check.radial_nodes, "Gauss-Legendre nodes")
      ->capture_default_str();
  check_cmd->add_option("--angular-nodes", check.angular_nodes, "Trapezoid nodes")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? ok : domain_failure;
  }

  try {
    if (*convert_cmd) return cmd_convert(convert, out);
    if (*expr_cmd) return cmd_expr(expr, out);
    if (*table_cmd) return cmd_table(table, out, err);
    if (*eval_cmd) return cmd_eval(eval, out);
    if (*check_cmd) return cmd_check(check, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return domain_failure;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return io_failure;
  }
  return domain_failure;
}

}  // namespace zernike::cli

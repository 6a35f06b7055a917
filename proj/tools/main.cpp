// Command-line front end: config-driven enumeration, membership checks,
// fixed points, extension values, invariant verification and exports.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or config error,
// 3 enumeration budget exceeded.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "unconv/config.hpp"
#include "unconv/gallery.hpp"
#include "unconv/io.hpp"
#include "unconv/verify.hpp"

namespace {

using namespace unconv;

struct CommonArgs {
  std::string config_path;
  std::optional<int> depth;
  std::optional<int> precision;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
  std::optional<std::string> out;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "run configuration file")->required();
  cmd->add_option("--depth", args.depth, "enumeration depth override");
  cmd->add_option("--precision", args.precision, "working precision override");
  cmd->add_option("--seed", args.seed, "RNG seed override");
  cmd->add_option("--budget", args.budget, "word-count budget override");
  cmd->add_option("--out", args.out, "output path (stdout when omitted)");
}

RunConfig load(const CommonArgs& args) {
  ConfigOverrides o;
  o.precision = args.precision;
  o.depth = args.depth;
  o.seed = args.seed;
  o.budget = args.budget;
  o.out = args.out;
  return load_config_file(args.config_path, o);
}

void emit(const RunConfig& cfg, const std::string& content) {
  if (cfg.out.empty()) {
    std::cout << content;
  } else {
    write_file_atomic(cfg.out, content);
    std::cout << "wrote " << cfg.out << "\n";
  }
}

int cmd_enumerate(const CommonArgs& args) {
  RunConfig cfg = load(args);
  LimitSetSample sample = enumerate_lambda0(cfg.system, cfg.family, cfg.depth, cfg.budget);
  emit(cfg, sample_to_text(sample));
  return 0;
}

int cmd_member(const CommonArgs& args, const std::string& digits) {
  RunConfig cfg = load(args);
  if (!is_px_system(cfg.system))
    std::cerr << "note: the digit pattern test describes the two-map px family; the configured"
                 " system differs\n";
  PadicInt x = PadicInt::parse_digits(cfg.prime, digits);
  bool in = lambda_member(x);
  std::cout << (in ? "in Lambda" : "not in Lambda") << " (at precision " << x.precision()
            << ")\n";
  return 0;
}

int cmd_fixedpoint(const CommonArgs& args, const std::string& word_text) {
  RunConfig cfg = load(args);
  SymbolWord word = SymbolWord::parse(word_text, static_cast<std::uint32_t>(cfg.system.size()));
  const std::size_t n = word.prefix_size();
  IndexFamily plain = plain_family(static_cast<std::uint32_t>(cfg.system.size()));
  AffineMap composed = component_map(cfg.system, plain.entry(1, 1), word, n);
  PadicInt algebraic = composed.fixed_point();
  PadicInt iterated = banach_fixed_point([&](const PadicInt& x) { return composed(x); },
                                         PadicInt::zero(cfg.prime, cfg.precision));
  std::cout << "word: " << word.str() << "\n";
  std::cout << "composed map: " << composed.to_text() << "\n";
  if (is_px_system(cfg.system)) {
    PxSystem px{cfg.prime, cfg.precision, cfg.system};
    std::cout << "fixed point (closed form): "
              << closed_form_fixed_point(px, word, n).digit_string() << "\n";
  }
  std::cout << "fixed point (algebraic):   " << algebraic.digit_string() << "\n";
  std::cout << "fixed point (iteration):   " << iterated.digit_string() << "\n";
  int agree = 0;
  while (agree < cfg.precision && algebraic.eq_mod(iterated, agree + 1)) ++agree;
  std::cout << "agreement: mod " << cfg.prime << "^" << agree << "\n";
  return 0;
}

int cmd_ftilde(const CommonArgs& args, const std::string& alpha_text, std::size_t n,
               const std::string& beta_text, std::size_t m) {
  RunConfig cfg = load(args);
  const auto alphabet = static_cast<std::uint32_t>(cfg.system.size());
  SymbolWord alpha = SymbolWord::parse(alpha_text, alphabet);
  SymbolWord beta = SymbolWord::parse(beta_text, alphabet);
  PadicInt ext = f_tilde(cfg.system, cfg.family, alpha, n, beta, m);
  SymbolWord joined = concat_words(alpha, n, beta);
  PadicInt direct =
      limit_point(cfg.system, cfg.family, joined, static_cast<int>(n + m)).value;
  const int guaranteed = std::min(static_cast<int>(n + m), cfg.precision);
  int agree = 0;
  while (agree < cfg.precision && ext.eq_mod(direct, agree + 1)) ++agree;
  std::cout << "extension value:    " << ext.digit_string() << "\n";
  std::cout << "concatenated limit: " << direct.digit_string() << " (word "
            << joined.str() << ")\n";
  std::cout << "agreement: mod " << cfg.prime << "^" << agree << " (guaranteed "
            << cfg.prime << "^" << guaranteed << ")\n";
  return agree >= guaranteed ? 0 : 1;
}

int cmd_verify(const CommonArgs& args) {
  RunConfig cfg = load(args);
  std::vector<MetricReport> reports = run_verification(cfg);
  for (const auto& r : reports) std::cout << r.to_text() << "\n";
  const bool ok = all_passed(reports);
  std::cout << (ok ? "verification passed" : "verification FAILED") << " ("
            << reports.size() << " suites)\n";
  return ok ? 0 : 1;
}

int cmd_distmatrix(const CommonArgs& args) {
  RunConfig cfg = load(args);
  LimitSetSample sample = enumerate_lambda0(cfg.system, cfg.family, cfg.depth, cfg.budget);
  emit(cfg, distance_matrix_to_text(sample));
  return 0;
}

int cmd_export(const CommonArgs& args, const std::string& format) {
  RunConfig cfg = load(args);
  LimitSetSample sample = enumerate_lambda0(cfg.system, cfg.family, cfg.depth, cfg.budget);
  if (sample.points.empty()) fail(errc::empty_sample, "nothing to export");
  emit(cfg, format == "monna" ? monna_to_text(sample) : sample_to_text(sample));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"limit sets of contractive p-adic systems under sum-of-products composition"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string digits, word_text, alpha_text, beta_text, format = "digits";
  std::size_t n = 1, m = 1;

  CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate the depth-d limit set sample");
  add_common(enumerate, args);

  CLI::App* member = app.add_subcommand("member", "digit-pattern membership test for a point");
  add_common(member, args);
  member->add_option("digits", digits, "little-endian digit string, e.g. 0,1,2,0")->required();

  CLI::App* fixedpoint = app.add_subcommand("fixedpoint", "fixed point of a composed map");
  add_common(fixedpoint, args);
  fixedpoint->add_option("word", word_text, "finite word over 1..N, e.g. 1,2,1")->required();

  CLI::App* ftilde = app.add_subcommand("ftilde", "extension value against the concatenated word");
  add_common(ftilde, args);
  ftilde->add_option("--alpha", alpha_text, "outer word (prefix[:tail])")->required();
  ftilde->add_option("--n", n, "outer composition depth")->required();
  ftilde->add_option("--beta", beta_text, "anchor word (prefix[:tail])")->required();
  ftilde->add_option("--m", m, "anchor depth")->required();

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
  add_common(verify, args);

  CLI::App* distmatrix = app.add_subcommand("distmatrix", "pairwise distance valuations");
  add_common(distmatrix, args);

  CLI::App* exporter = app.add_subcommand("export", "export sample points");
  add_common(exporter, args);
  exporter->add_option("--format", format, "digits | monna")
      ->check(CLI::IsMember({"digits", "monna"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(args);
    if (member->parsed()) return cmd_member(args, digits);
    if (fixedpoint->parsed()) return cmd_fixedpoint(args, word_text);
    if (ftilde->parsed()) return cmd_ftilde(args, alpha_text, n, beta_text, m);
    if (verify->parsed()) return cmd_verify(args);
    if (distmatrix->parsed()) return cmd_distmatrix(args);
    if (exporter->parsed()) return cmd_export(args, format);
  } catch (const unconv::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == errc::budget_exceeded ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

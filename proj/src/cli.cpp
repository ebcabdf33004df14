#include "qdc/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <utility>

#include "CLI11.hpp"
#include "qdc/criteria.hpp"
#include "qdc/state_io.hpp"
#include "qdc/state_zoo.hpp"
#include "qdc/verify.hpp"

namespace qdc::cli {

namespace {

std::string f6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

const char* tf(bool value) { return value ? "true" : "false"; }

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::validation_failed:
    case ErrorCode::zero_vector:
      return 2;
    default:
      return 1;
  }
}

struct SourceOptions {
  std::string file;
  std::string zoo_name;
  std::string base;
  std::string roles;
  std::string assignment;
  double p = 0.0;
  int n = 4;
  double visibility = 1.0;
  double tolerance = kDcEps;

  CLI::Option* p_given = nullptr;
  CLI::Option* n_given = nullptr;
  CLI::Option* v_given = nullptr;
  CLI::Option* roles_given = nullptr;
  CLI::Option* assignment_given = nullptr;
};

void add_zoo_parameter_options(CLI::App* cmd, SourceOptions& opts) {
  opts.p_given = cmd->add_option("--p", opts.p, "mixing parameter (werner)");
  opts.n_given = cmd->add_option("--n", opts.n, "party count (ghz, w)");
  opts.v_given = cmd->add_option("--v", opts.visibility, "visibility (noisy)");
  cmd->add_option("--base", opts.base, "base zoo state (noisy)");
  opts.roles_given = cmd->add_option("--roles", opts.roles, "role string, e.g. SSRR");
}

void add_source_options(CLI::App* cmd, SourceOptions& opts) {
  cmd->add_option("--file", opts.file, "state file to load");
  cmd->add_option("--zoo", opts.zoo_name, "named zoo state");
  add_zoo_parameter_options(cmd, opts);
  opts.assignment_given =
      cmd->add_option("--assignment", opts.assignment, "sender:receiver pairs, e.g. A1:B1,A2:B2");
  cmd->add_option("--tolerance", opts.tolerance, "dense-codeability tolerance in bits");
}

std::vector<Role> parse_roles(const std::string& text) {
  std::vector<Role> roles;
  for (char c : text) {
    if (c == 'S') {
      roles.push_back(Role::sender);
    } else if (c == 'R') {
      roles.push_back(Role::receiver);
    } else {
      throw Error(ErrorCode::bad_parameter, std::string("invalid role character '") + c + "'");
    }
  }
  return roles;
}

zoo::NamedStateSpec build_spec(const SourceOptions& opts) {
  zoo::NamedStateSpec spec;
  std::optional<double> p;
  std::optional<int> n;
  std::optional<std::vector<Role>> roles;
  if (opts.p_given && opts.p_given->count() > 0) p = opts.p;
  if (opts.n_given && opts.n_given->count() > 0) n = opts.n;
  if (opts.roles_given && opts.roles_given->count() > 0) roles = parse_roles(opts.roles);

  if (opts.zoo_name == "noisy") {
    if (opts.base.empty()) throw Error(ErrorCode::bad_parameter, "noisy requires --base");
    auto base = std::make_shared<zoo::NamedStateSpec>();
    base->name = opts.base;
    base->p = p;
    base->n = n;
    base->roles = roles;
    spec.name = "noisy";
    spec.base = std::move(base);
    spec.visibility = (opts.v_given && opts.v_given->count() > 0)
                          ? std::optional<double>(opts.visibility)
                          : std::nullopt;
    return spec;
  }
  spec.name = opts.zoo_name;
  spec.p = p;
  spec.n = n;
  spec.roles = roles;
  return spec;
}

std::string resolve_party_token(const PartyLayout& layout, const std::string& token) {
  if (layout.has_label(token)) return token;
  int index = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), index);
  if (ec == std::errc() && ptr == token.data() + token.size() && index >= 1 &&
      index <= layout.party_count()) {
    return layout.party(index - 1).label;  // 1-based party position
  }
  throw Error(ErrorCode::bad_parameter,
              "'" + token + "' is neither a party label nor a 1-based party index");
}

Assignment parse_assignment(const std::string& text, const PartyLayout& layout) {
  Assignment assignment;
  std::string entry;
  std::istringstream stream(text);
  while (std::getline(stream, entry, ',')) {
    const size_t colon = entry.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorCode::bad_parameter, "assignment entry '" + entry + "' is not sender:receiver");
    }
    const std::string sender = resolve_party_token(layout, entry.substr(0, colon));
    const std::string receiver = resolve_party_token(layout, entry.substr(colon + 1));
    assignment[sender] = receiver;
  }
  if (assignment.empty()) throw Error(ErrorCode::bad_parameter, "empty assignment");
  return assignment;
}

struct LoadedState {
  DensityState state;
  std::string source;
  std::optional<Assignment> default_assignment;
  std::optional<std::string> entanglement_note;
};

LoadedState acquire_state(const SourceOptions& opts) {
  const bool have_file = !opts.file.empty();
  const bool have_zoo = !opts.zoo_name.empty();
  if (have_file == have_zoo) {
    throw Error(ErrorCode::bad_parameter, "specify exactly one of --file or --zoo");
  }
  if (have_file) {
    return {load_state_file(opts.file), "file:" + opts.file, std::nullopt, std::nullopt};
  }
  zoo::ZooEntry entry = zoo::make(build_spec(opts));
  return {std::move(entry.state), "zoo:" + opts.zoo_name, std::move(entry.default_assignment),
          std::move(entry.entanglement_note)};
}

std::optional<Assignment> select_assignment(const SourceOptions& opts, const LoadedState& loaded) {
  if (opts.assignment_given && opts.assignment_given->count() > 0) {
    return parse_assignment(opts.assignment, loaded.state.layout());
  }
  if (loaded.default_assignment &&
      loaded.state.layout().receiver_indices().size() == 2) {
    return loaded.default_assignment;
  }
  return std::nullopt;
}

void print_parties(const PartyLayout& layout, std::ostream& out) {
  out << "parties =";
  for (const Party& p : layout.parties()) {
    out << ' ' << p.label << ':' << p.dim << ':' << (p.role == Role::sender ? 'S' : 'R');
  }
  out << '\n';
}

int run_analyze(const SourceOptions& opts, std::ostream& out) {
  const LoadedState loaded = acquire_state(opts);
  const std::optional<Assignment> assignment = select_assignment(opts, loaded);
  const CapacityReport report = capacity_report(loaded.state, assignment, opts.tolerance);

  out << "source = " << loaded.source << '\n';
  print_parties(loaded.state.layout(), out);
  if (assignment) {
    out << "assignment =";
    for (const auto& [s, r] : *assignment) out << ' ' << s << ':' << r;
    out << '\n';
  }
  out << "classical_threshold = " << f6(report.classical_threshold) << '\n';
  out << "chi_single = " << f6(report.chi_single) << '\n';
  out << "chi_glob = " << f6(report.chi_glob) << '\n';
  out << "b_locc = " << (report.b_locc ? f6(*report.b_locc) : "n/a") << '\n';
  out << "chi_local = " << (report.chi_local ? f6(*report.chi_local) : "n/a") << '\n';
  out << "is_G_DC = " << tf(report.is_g_dc) << '\n';
  out << "is_LO_DC = " << (report.is_lo_dc ? tf(*report.is_lo_dc) : "n/a") << '\n';
  out << "is_LOCC_DC_excluded = "
      << (report.is_locc_dc_excluded ? tf(*report.is_locc_dc_excluded) : "n/a") << '\n';
  out << "locc_dc = " << to_string(report.locc_status) << '\n';
  return 0;
}

int run_classify(const SourceOptions& opts, std::ostream& out) {
  const LoadedState loaded = acquire_state(opts);
  const std::optional<Assignment> assignment = select_assignment(opts, loaded);
  const Cut cut = sender_receiver_cut(loaded.state.layout());
  const ShellVerdict verdict =
      classify(loaded.state, cut, assignment, opts.tolerance, loaded.entanglement_note);

  out << "source = " << loaded.source << '\n';
  print_parties(loaded.state.layout(), out);
  out << "ppt = " << tf(verdict.ppt.ppt) << '\n';
  out << "ppt_min_eigenvalue = " << f6(verdict.ppt.min_eigenvalue) << '\n';
  out << "reduction_violated = " << tf(verdict.reduction.violated) << '\n';
  out << "reduction_min_eig_first = " << f6(verdict.reduction.min_eig_first) << '\n';
  out << "reduction_min_eig_second = " << f6(verdict.reduction.min_eig_second) << '\n';
  out << "entropic_dc = " << tf(verdict.entropic.dense_codeable) << '\n';
  out << "margin = " << f6(verdict.entropic.margin_bits) << '\n';
  out << "shell = " << to_string(verdict.shell) << '\n';
  out << "locc_dc = " << to_string(verdict.locc_status) << '\n';
  for (const std::string& note : verdict.notes) out << "note = " << note << '\n';
  return 0;
}

int run_zoo(const SourceOptions& opts, const std::string& out_path, std::ostream& out) {
  const zoo::ZooEntry entry = zoo::make(build_spec(opts));
  const std::string path = out_path.empty() ? opts.zoo_name + ".qst" : out_path;
  write_state_file(entry.state, path);
  out << "state = " << opts.zoo_name << '\n';
  print_parties(entry.state.layout(), out);
  out << "written = " << path << '\n';
  return 0;
}

int run_verify(std::uint64_t seed, std::ostream& out) {
  out << "seed = " << seed << '\n';
  const std::vector<SuiteResult> results = verify_all(seed);
  bool all_passed = true;
  for (const SuiteResult& result : results) {
    out << result.name << " = " << (result.passed ? "pass" : "fail") << '\n';
    out << result.name << "_detail = " << result.detail << '\n';
    all_passed = all_passed && result.passed;
  }
  out << "verify = " << (all_passed ? "pass" : "fail") << '\n';
  if (!all_passed) {
    out << "ERROR: 3 verification suite failed\n";
    return 3;
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"dense-coding capacity toolkit", "qdc"};
  app.require_subcommand(1);

  SourceOptions analyze_opts;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "capacities and bounds for a state");
  add_source_options(analyze_cmd, analyze_opts);

  SourceOptions classify_opts;
  CLI::App* classify_cmd = app.add_subcommand("classify", "shell classification for a state");
  add_source_options(classify_cmd, classify_opts);

  SourceOptions zoo_opts;
  std::string zoo_out;
  CLI::App* zoo_cmd = app.add_subcommand("zoo", "materialize a named state to a file");
  zoo_cmd->add_option("name", zoo_opts.zoo_name, "state name")->required();
  add_zoo_parameter_options(zoo_cmd, zoo_opts);
  zoo_cmd->add_option("--out", zoo_out, "output path (default <name>.qst)");

  CLI::App* threshold_cmd =
      app.add_subcommand("werner-threshold", "mixing parameter where the Werner state stops being DC");

  std::uint64_t seed = 42;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the built-in property suites");
  verify_cmd->add_option("--seed", seed, "random seed (default 42)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << app.help();
    out << "ERROR: 1 " << e.what() << '\n';
    return 1;
  }

  try {
    if (analyze_cmd->parsed()) return run_analyze(analyze_opts, out);
    if (classify_cmd->parsed()) return run_classify(classify_opts, out);
    if (zoo_cmd->parsed()) return run_zoo(zoo_opts, zoo_out, out);
    if (threshold_cmd->parsed()) {
      out << "p* = " << f6(zoo::werner_dc_threshold()) << '\n';
      return 0;
    }
    if (verify_cmd->parsed()) return run_verify(seed, out);
    out << "ERROR: 1 no command given\n";
    return 1;
  } catch (const qdc::Error& e) {
    const int code = exit_code_for(e.code());
    out << "ERROR: " << code << ' ' << e.what() << '\n';
    return code;
  }
}

}  // namespace qdc::cli

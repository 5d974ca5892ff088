#include "wtangle/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>

#include "wtangle/entanglement.hpp"
#include "wtangle/protocols.hpp"
#include "wtangle/states.hpp"

namespace wtangle::cli {

using json = nlohmann::ordered_json;
using qcore::Complex;
using qcore::QuantumError;
using states::WParams;

namespace {

constexpr double kInputRenormTol = 1e-6;
constexpr double kDefaultFidelityTol = 1e-9;
constexpr double kDefaultBasisTol = 1e-10;

struct GlobalFlags {
  bool json = false;
  std::uint64_t seed = 42;
  std::optional<double> tol;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json params_json(const std::optional<WParams>& p) {
  if (!p) return nullptr;
  return json{{"n", p->n}, {"gamma", p->gamma}, {"delta", p->delta}};
}

json envelope(const std::string& command, const GlobalFlags& g) {
  return json{{"schema", kSchema}, {"command", command}, {"seed", g.seed}};
}

bool parse_double(std::string_view text, double& value) {
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  return ec == std::errc() && ptr == end && std::isfinite(value);
}

WParams checked_params(double n, double gamma, double delta) {
  WParams p{n, gamma, delta};
  p.validate();
  return p;
}

// ------------------------------------------------------------- teleport

struct TeleportArgs {
  std::string resource = "wn";
  std::string basis = "auto";
  double n = 1.0, gamma = 0.0, delta = 0.0;
  std::string alpha = "1", beta = "0";
  bool random_input = false;
  std::size_t trials = 100;
};

protocols::TeleportSetup build_setup(const TeleportArgs& a) {
  const WParams wn = checked_params(a.n, a.gamma, a.delta);
  const WParams w1{1.0, 0.0, 0.0};

  protocols::TeleportSetup setup = protocols::ghz_setup();
  std::string basis = a.basis;
  if (a.resource == "ghz") {
    if (basis == "auto") basis = "ghz";
  } else if (a.resource == "wn") {
    setup = protocols::w_setup(wn);
    if (basis == "auto") basis = "wn";
  } else if (a.resource == "w1") {
    setup = protocols::w_setup(w1);
    setup.resource_name = "w1";
    if (basis == "auto") basis = "w1";
  } else {
    setup = protocols::prototype_w_setup();
    if (basis == "auto") basis = "w1";
  }

  if (basis == "ghz") {
    setup.basis = states::ghz_teleport_basis();
    setup.table = protocols::ghz_correction_table();
  } else {
    const WParams bp = basis == "wn" ? wn : w1;
    setup.basis = states::w_teleport_basis(bp);
    setup.table = protocols::w_correction_table();
  }
  return setup;
}

protocols::InputQubit fixed_input(const TeleportArgs& a, std::ostream& err) {
  const auto alpha = parse_complex(a.alpha);
  const auto beta = parse_complex(a.beta);
  if (!alpha) throw UsageError("cannot parse --alpha '" + a.alpha + "'");
  if (!beta) throw UsageError("cannot parse --beta '" + a.beta + "'");
  const double n2 = std::norm(*alpha) + std::norm(*beta);
  if (std::abs(n2 - 1.0) > kInputRenormTol) {
    throw UsageError("input qubit is not normalized (|alpha|^2+|beta|^2 = " +
                     std::to_string(n2) + ")");
  }
  protocols::InputQubit in{*alpha, *beta};
  if (std::abs(n2 - 1.0) > 0.0) {
    const double s = 1.0 / std::sqrt(n2);
    in.alpha *= s;
    in.beta *= s;
    if (std::abs(n2 - 1.0) > qcore::kNormTol) {
      err << "warning: input qubit renormalized (norm^2 was " << n2 << ")\n";
    }
  }
  return in;
}

json trace_json(std::size_t trial, const protocols::TeleportTrace& t) {
  return json{{"trial", trial},
              {"seed", t.seed},
              {"resource", t.resource_name},
              {"params", params_json(t.params)},
              {"input", {{"alpha", complex_json(t.input.alpha)}, {"beta", complex_json(t.input.beta)}}},
              {"outcome", t.outcome_label},
              {"outcome_index", t.outcome_index},
              {"probability", t.outcome_probability},
              {"classical_bits",
               t.classical_bits ? json(protocols::bits_string(*t.classical_bits)) : json(nullptr)},
              {"correction", protocols::to_string(t.correction)},
              {"fidelity", t.fidelity},
              {"aux_outcome", t.aux_outcome},
              {"aux_probability", t.aux_probability}};
}

int cmd_teleport(const TeleportArgs& a, const GlobalFlags& g, std::ostream& out,
                 std::ostream& err) {
  if (a.trials == 0) throw UsageError("--trials must be positive");
  const auto setup = build_setup(a);
  const double tol = g.tol.value_or(kDefaultFidelityTol);
  std::optional<protocols::InputQubit> fixed;
  if (!a.random_input) fixed = fixed_input(a, err);

  const Rng master(g.seed);
  std::vector<protocols::TeleportTrace> traces;
  traces.reserve(a.trials);
  for (std::size_t k = 0; k < a.trials; ++k) {
    Rng rng = master.split(k);
    const auto input = fixed ? *fixed : protocols::InputQubit::random(rng);
    traces.push_back(protocols::teleport(setup, input, rng));
  }

  std::map<std::string, std::size_t> histogram;
  for (std::size_t i = 0; i < setup.basis.labeled_count; ++i) histogram[setup.basis.vectors[i].label] = 0;
  double min_f = 1.0, sum_f = 0.0, max_aux = 0.0;
  std::size_t successes = 0, aux_hits = 0;
  for (const auto& t : traces) {
    ++histogram[t.outcome_label];
    min_f = std::min(min_f, t.fidelity);
    sum_f += t.fidelity;
    max_aux = std::max(max_aux, t.aux_probability);
    if (t.fidelity >= 1.0 - tol) ++successes;
    if (t.aux_outcome) ++aux_hits;
  }
  const bool ok = min_f >= 1.0 - tol;
  const double mean_f = sum_f / static_cast<double>(traces.size());

  if (g.json) {
    json report = envelope("teleport", g);
    json args{{"resource", a.resource}, {"basis", a.basis}, {"n", a.n}, {"gamma", a.gamma},
              {"delta", a.delta}, {"trials", a.trials}, {"random_input", a.random_input}};
    if (fixed) {
      args["alpha"] = complex_json(fixed->alpha);
      args["beta"] = complex_json(fixed->beta);
    }
    report["args"] = args;
    report["tolerance"] = tol;
    json jt = json::array();
    for (std::size_t k = 0; k < traces.size(); ++k) jt.push_back(trace_json(k, traces[k]));
    report["traces"] = jt;
    json hist = json::object();
    for (const auto& [label, count] : histogram) hist[label] = count;
    report["aggregates"] = {{"trials", traces.size()},
                            {"min_fidelity", min_f},
                            {"mean_fidelity", mean_f},
                            {"success_rate", static_cast<double>(successes) / traces.size()},
                            {"aux_outcomes", aux_hits},
                            {"max_aux_probability", max_aux},
                            {"classical_bits_per_run", 2},
                            {"histogram", hist}};
    report["status"] = ok ? "ok" : "imperfect";
    out << report.dump(2) << '\n';
  } else {
    out << "teleport resource=" << setup.resource_name << " basis=" << a.basis
        << " trials=" << traces.size() << " seed=" << g.seed << '\n';
    for (const auto& [label, count] : histogram) out << "  " << label << ": " << count << '\n';
    out << "  min fidelity:  " << min_f << '\n'
        << "  mean fidelity: " << mean_f << '\n'
        << "  aux outcomes:  " << aux_hits << " (max aux probability " << max_aux << ")\n"
        << (ok ? "status: ok\n" : "status: imperfect transfer\n");
  }
  return ok ? kOk : kFailure;
}

// ------------------------------------------------------------- densecode

struct DenseArgs {
  std::string scheme;
  double n = 1.0, gamma = 0.0, delta = 0.0;
  std::optional<int> message;
  bool all = false;
};

protocols::DenseScheme scheme_from(const std::string& s) {
  if (s == "bell2") return protocols::DenseScheme::Bell2;
  if (s == "wn2") return protocols::DenseScheme::Wn2;
  if (s == "ghz2") return protocols::DenseScheme::GHZ2;
  return protocols::DenseScheme::GHZ3;
}

int cmd_densecode(const DenseArgs& a, const GlobalFlags& g, std::ostream& out) {
  const auto scheme = scheme_from(a.scheme);
  const WParams p = checked_params(a.n, a.gamma, a.delta);
  const int count = 1 << protocols::message_bits(scheme);
  std::vector<int> messages;
  if (a.message) {
    if (*a.message < 0 || *a.message >= count) {
      throw UsageError("--message must be in [0, " + std::to_string(count) + ")");
    }
    messages.push_back(*a.message);
  } else {
    for (int m = 0; m < count; ++m) messages.push_back(m);
  }

  const Rng master(g.seed);
  std::vector<protocols::DenseCodeTrace> traces;
  for (int m : messages) {
    Rng rng = master.split(static_cast<std::uint64_t>(m));
    traces.push_back(protocols::dense_code(scheme, m, p, rng));
  }
  const auto recovered = std::count_if(traces.begin(), traces.end(),
                                       [](const auto& t) { return t.decoded == t.message; });
  const bool ok = recovered == static_cast<long>(traces.size());

  if (g.json) {
    json report = envelope("densecode", g);
    report["args"] = {{"scheme", a.scheme}, {"n", a.n}, {"gamma", a.gamma}, {"delta", a.delta},
                      {"messages", messages}};
    json jt = json::array();
    for (const auto& t : traces) {
      jt.push_back({{"scheme", protocols::to_string(t.scheme)},
                    {"params", params_json(t.params)},
                    {"message", t.message},
                    {"encoded_label", t.encoded_label},
                    {"decoded", t.decoded},
                    {"qubits_sent", t.qubits_sent},
                    {"ebits_used", t.ebits_used},
                    {"seed", t.seed}});
    }
    report["traces"] = jt;
    report["aggregates"] = {{"messages", traces.size()},
                            {"recovered", recovered},
                            {"success_rate", static_cast<double>(recovered) / traces.size()},
                            {"bits_per_message", protocols::message_bits(scheme)},
                            {"qubits_sent", protocols::qubits_sent(scheme)},
                            {"ebits_used", traces.front().ebits_used}};
    report["status"] = ok ? "ok" : "decode_failure";
    out << report.dump(2) << '\n';
  } else {
    out << "densecode scheme=" << a.scheme << " seed=" << g.seed << '\n';
    for (const auto& t : traces) {
      out << "  message " << t.message << " -> " << t.encoded_label << " -> decoded " << t.decoded
          << (t.decoded == t.message ? "" : "  MISMATCH") << '\n';
    }
    out << "  recovered " << recovered << "/" << traces.size() << ", qubits_sent "
        << protocols::qubits_sent(scheme) << ", ebits_used " << traces.front().ebits_used << '\n'
        << (ok ? "status: ok\n" : "status: decode failure\n");
  }
  return ok ? kOk : kFailure;
}

// ------------------------------------------------------------- analyze

int cmd_analyze(const std::string& spec, const GlobalFlags& g, std::ostream& out,
                std::ostream& err) {
  const auto loaded = load_state(spec);
  if (loaded.renormalized) err << "warning: state amplitudes renormalized\n";
  const double tol = g.tol.value_or(entanglement::kDefaultClassifyTol);
  const auto r = entanglement::analyze(loaded.state, tol);

  if (g.json) {
    json report = envelope("analyze", g);
    report["state"] = loaded.description;
    json amps = json::array();
    for (const auto& z : loaded.state.amps()) amps.push_back(complex_json(z));
    report["amps"] = amps;
    report["tolerance"] = tol;
    report["report"] = {{"entropy_bits_per_cut", r.entropy_bits_per_cut},
                        {"concurrence_pairs", r.concurrence_pairs},
                        {"concurrence_1_23", r.concurrence_1_23},
                        {"tangle", r.tangle},
                        {"slocc_class", entanglement::to_string(r.slocc_class)},
                        {"monogamy_slack", r.monogamy_slack}};
    report["status"] = "ok";
    out << report.dump(2) << '\n';
  } else {
    out << "state: " << loaded.description << '\n';
    for (const auto& [cut, h] : r.entropy_bits_per_cut) out << "  entropy " << cut << ": " << h << '\n';
    for (const auto& [pair, c] : r.concurrence_pairs) out << "  C" << pair << ": " << c << '\n';
    out << "  C1(23): " << r.concurrence_1_23 << '\n'
        << "  tangle: " << r.tangle << '\n'
        << "  monogamy slack: " << r.monogamy_slack << '\n'
        << "  class: " << entanglement::to_string(r.slocc_class) << '\n';
  }
  return kOk;
}

// ------------------------------------------------------------- bases

int cmd_bases(const std::string& family, double n, double gamma, double delta,
              const GlobalFlags& g, std::ostream& out) {
  const double tol = g.tol.value_or(kDefaultBasisTol);
  qcore::MeasurementBasis basis;
  if (family == "ghz") {
    basis = states::ghz_teleport_basis();
  } else if (family == "ghz8") {
    basis = states::ghz_dense8_basis();
  } else {
    basis = states::w_teleport_basis(checked_params(n, gamma, delta));
  }
  std::vector<qcore::StateVector> labeled;
  for (std::size_t i = 0; i < basis.labeled_count; ++i) labeled.push_back(basis.vectors[i].vector);
  const auto full = states::check_orthonormal(basis, tol);
  const auto lab = states::check_orthonormal(labeled, tol);
  const bool ok = full.pass && lab.pass;

  if (g.json) {
    json report = envelope("bases", g);
    report["args"] = {{"family", family}, {"n", n}, {"gamma", gamma}, {"delta", delta}};
    json labels = json::array();
    for (const auto& lv : basis.vectors) labels.push_back(lv.label);
    report["vectors"] = basis.vectors.size();
    report["labeled"] = basis.labeled_count;
    report["labels"] = labels;
    report["max_deviation"] = full.max_deviation;
    report["labeled_max_deviation"] = lab.max_deviation;
    report["tolerance"] = tol;
    report["status"] = ok ? "ok" : "not_orthonormal";
    out << report.dump(2) << '\n';
  } else {
    out << "basis family=" << family << ": " << basis.vectors.size() << " vectors ("
        << basis.labeled_count << " labeled)\n"
        << "  max Gram deviation: " << full.max_deviation << " (labeled: " << lab.max_deviation
        << ")\n"
        << "  tolerance: " << tol << '\n'
        << (ok ? "status: ok\n" : "status: not orthonormal\n");
  }
  return ok ? kOk : kFailure;
}

void add_global_flags(CLI::App& app, GlobalFlags& g) {
  app.add_flag("--json", g.json, "Emit a JSON report");
  app.add_option("--seed", g.seed, "Master random seed")->capture_default_str();
  app.add_option("--tol", g.tol, "Command tolerance (fidelity, classification or Gram)");
}

void add_w_params(CLI::App& sub, double& n, double& gamma, double& delta) {
  sub.add_option("--n", n, "W_n parameter n (>= 0)")->capture_default_str();
  sub.add_option("--gamma", gamma, "W_n phase gamma (radians)")->capture_default_str();
  sub.add_option("--delta", delta, "W_n phase delta (radians)")->capture_default_str();
}

void emit_error(const std::string& command, const GlobalFlags& g, const std::string& status,
                const std::string& message, std::ostream& out, std::ostream& err) {
  err << "error: " << message << '\n';
  if (g.json) {
    json report = envelope(command, g);
    report["status"] = status;
    report["error"] = message;
    out << report.dump(2) << '\n';
  }
}

}  // namespace

std::optional<std::complex<double>> parse_complex(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;

  double re = 0.0, im = 0.0;
  if (text.back() != 'i') {
    if (!parse_double(text, re)) return std::nullopt;
    return std::complex<double>(re, im);
  }
  text.remove_suffix(1);
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = text.size(); k-- > 1;) {
    if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  std::string_view re_text, im_text = text;
  if (split != std::string_view::npos) {
    re_text = text.substr(0, split);
    im_text = text.substr(split);
  }
  if (!re_text.empty() && !parse_double(re_text, re)) return std::nullopt;
  if (im_text.empty() || im_text == "+") {
    im = 1.0;
  } else if (im_text == "-") {
    im = -1.0;
  } else if (!parse_double(im_text, im)) {
    return std::nullopt;
  }
  return std::complex<double>(re, im);
}

namespace {

qcore::StateVector preset_state(const std::string& name, std::string& description) {
  description = name;
  if (name == "ghz") return states::make_ghz();
  if (name == "w") return states::make_w_prototype();
  if (name == "w1") return states::make_w_n({1.0, 0.0, 0.0});
  if (name.rfind("wn", 0) == 0) {
    WParams p;
    std::string_view rest = std::string_view(name).substr(2);
    if (!rest.empty()) {
      if (rest.front() != '(' || rest.back() != ')') throw QuantumError("bad preset '" + name + "'");
      rest = rest.substr(1, rest.size() - 2);
      std::vector<double> vals;
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        double v = 0.0;
        if (!parse_double(rest.substr(0, comma), v)) throw QuantumError("bad preset '" + name + "'");
        vals.push_back(v);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      }
      if (vals.empty() || vals.size() > 3) throw QuantumError("bad preset '" + name + "'");
      p.n = vals[0];
      if (vals.size() > 1) p.gamma = vals[1];
      if (vals.size() > 2) p.delta = vals[2];
    }
    return states::make_w_n(p);
  }
  throw QuantumError("unknown preset '" + name + "'");
}

LoadedState load_state_json(const json& doc, const std::string& path) {
  if (doc.contains("preset")) {
    const auto& preset = doc.at("preset");
    if (!preset.is_string()) throw QuantumError(path + ": \"preset\" must be a string");
    std::string name = preset.get<std::string>();
    if (name == "wn" && (doc.contains("n") || doc.contains("gamma") || doc.contains("delta"))) {
      WParams p{doc.value("n", 1.0), doc.value("gamma", 0.0), doc.value("delta", 0.0)};
      return {"wn(" + std::to_string(p.n) + "," + std::to_string(p.gamma) + "," +
                  std::to_string(p.delta) + ")",
              states::make_w_n(p), false};
    }
    std::string desc;
    auto s = preset_state(name, desc);
    return {desc, std::move(s), false};
  }
  if (!doc.contains("amps")) throw QuantumError(path + ": expected \"preset\" or \"amps\"");
  const auto& amps = doc.at("amps");
  if (!amps.is_array() || amps.size() != 8) throw QuantumError(path + ": \"amps\" must hold 8 entries");
  std::vector<Complex> v;
  for (const auto& pair : amps) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw QuantumError(path + ": each amplitude must be [re, im]");
    }
    v.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  double n2 = 0.0;
  for (const auto& z : v) n2 += std::norm(z);
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kInputRenormTol) {
    throw QuantumError(path + ": amplitudes are not normalized (norm^2 = " + std::to_string(n2) + ")");
  }
  return {path, qcore::StateVector::normalized(std::move(v)), std::abs(n2 - 1.0) > qcore::kNormTol};
}

}  // namespace

LoadedState load_state(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) {
    std::ifstream in(spec);
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::exception& e) {
      throw QuantumError(spec + ": " + e.what());
    }
    return load_state_json(doc, spec);
  }
  std::string desc;
  auto s = preset_state(spec, desc);
  return {desc, std::move(s), false};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Teleportation and superdense coding with GHZ and W_n states"};
  app.name("wtangle");
  app.require_subcommand(1);
  GlobalFlags g;
  add_global_flags(app, g);
  // Known up front so usage errors can still be reported as JSON.
  for (int i = 1; i < argc; ++i) {
    if (std::string_view(argv[i]) == "--json") g.json = true;
  }

  TeleportArgs ta;
  auto* tele = app.add_subcommand("teleport", "Teleport a qubit through a shared 3-qubit state");
  tele->add_option("--resource", ta.resource, "Shared state")
      ->check(CLI::IsMember({"ghz", "wn", "w1", "w-prototype"}))
      ->capture_default_str();
  tele->add_option("--basis", ta.basis, "Alice's measurement basis (auto pairs with the resource)")
      ->check(CLI::IsMember({"auto", "ghz", "w1", "wn"}))
      ->capture_default_str();
  add_w_params(*tele, ta.n, ta.gamma, ta.delta);
  auto* alpha = tele->add_option("--alpha", ta.alpha, "Input amplitude of |0> (re or re+imi)");
  auto* beta = tele->add_option("--beta", ta.beta, "Input amplitude of |1> (re or re+imi)");
  auto* rnd = tele->add_flag("--random-input", ta.random_input, "Draw a Haar-random input per trial");
  rnd->excludes(alpha)->excludes(beta);
  tele->add_option("--trials", ta.trials, "Number of runs")->capture_default_str();

  DenseArgs da;
  auto* dense = app.add_subcommand("densecode", "Superdense coding roundtrip");
  dense->add_option("--scheme", da.scheme, "Coding scheme")
      ->required()
      ->check(CLI::IsMember({"wn2", "ghz2", "ghz3", "bell2"}));
  add_w_params(*dense, da.n, da.gamma, da.delta);
  auto* msg = dense->add_option("--message", da.message, "Single message to send");
  dense->add_flag("--all", da.all, "Send every message (default)")->excludes(msg);

  std::string state_spec;
  auto* analyze = app.add_subcommand("analyze", "Entanglement report for a 3-qubit pure state");
  analyze->add_option("--state", state_spec, "Preset (ghz, w, w1, wn(n,gamma,delta)) or JSON file")
      ->required();

  std::string family;
  double bn = 1.0, bg = 0.0, bd = 0.0;
  auto* bases = app.add_subcommand("bases", "Check orthonormality of a measurement basis");
  bases->add_option("--family", family, "Basis family")
      ->required()
      ->check(CLI::IsMember({"ghz", "ghz8", "wn"}));
  add_w_params(*bases, bn, bg, bd);

  for (auto* sub : {tele, dense, analyze, bases}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::string command = "unknown";
    for (auto* sub : app.get_subcommands()) command = sub->get_name();
    emit_error(command, g, "usage_error", e.what(), out, err);
    return kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (tele->parsed()) return cmd_teleport(ta, g, out, err);
    if (dense->parsed()) return cmd_densecode(da, g, out);
    if (analyze->parsed()) return cmd_analyze(state_spec, g, out, err);
    return cmd_bases(family, bn, bg, bd, g, out);
  } catch (const UsageError& e) {
    emit_error(command, g, "usage_error", e.what(), out, err);
    return kUsage;
  } catch (const QuantumError& e) {
    emit_error(command, g, "usage_error", e.what(), out, err);
    return kUsage;
  } catch (const std::exception& e) {
    emit_error(command, g, "failure", e.what(), out, err);
    return kFailure;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("wtangle");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace wtangle::cli

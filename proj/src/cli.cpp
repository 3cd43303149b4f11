#include "mcc/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "mcc/count_table.hpp"
#include "mcc/format.hpp"
#include "mcc/identity_table.hpp"

namespace mcc::cli {

namespace {

using format::json;

constexpr std::pair<Command, const char*> kCommands[] = {
    {Command::validate, "validate"}, {Command::cosets, "cosets"},           {Command::classes, "classes"},
    {Command::chi, "chi"},           {Command::idempotents, "idempotents"}, {Command::verify, "verify"},
    {Command::codes, "codes"},       {Command::sweep, "sweep"},
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Verification sections collected by `verify` and `codes`.
struct Section {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  json to_json() const { return {{"name", name}, {"checks", checks}, {"failures", failures}}; }
};

bool all_ok(const std::vector<Section>& sections) {
  for (const auto& s : sections) {
    if (!s.failures.empty()) return false;
  }
  return true;
}

void print_sections(const std::vector<Section>& sections, std::ostream& out) {
  for (const auto& s : sections) {
    out << s.name << ": " << s.checks << " checks, " << s.failures.size() << " failures\n";
    for (const auto& f : s.failures) out << "  " << f << "\n";
  }
}

std::string join(const std::vector<u64>& values) {
  std::ostringstream os;
  for (std::size_t k = 0; k < values.size(); ++k) os << (k ? ", " : "") << values[k];
  return os.str();
}

Parameters parameters(const RunConfig& config) {
  if (config.s == 0 || config.t == 0 || config.p < 2 || config.q < 2) {
    return validate_parameters(config.p, config.q, config.s, config.t, config.l, config.g);
  }
  u64 n = 1;
  for (unsigned k = 0; k < config.s; ++k) {
    if (n > kLengthCap / config.p) throw UsageError("n = p^s q^t exceeds the cap " + std::to_string(kLengthCap));
    n *= config.p;
  }
  for (unsigned k = 0; k < config.t; ++k) {
    if (n > kLengthCap / config.q) throw UsageError("n = p^s q^t exceeds the cap " + std::to_string(kLengthCap));
    n *= config.q;
  }
  return validate_parameters(config.p, config.q, config.s, config.t, config.l, config.g);
}

json params_json(const Parameters& params) {
  return {{"p", params.p}, {"q", params.q},   {"s", params.s}, {"t", params.t},
          {"l", params.l}, {"n", params.n},   {"g", params.g}, {"v", params.v},
          {"q_residue_mod_p", params.qr_case}};
}

int cmd_validate(const Parameters& params, const RunConfig& config, std::ostream& out) {
  if (config.output == Output::json) {
    json j = params_json(params);
    j["valid"] = true;
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "p=" << params.p << " q=" << params.q << " s=" << params.s << " t=" << params.t << " l=" << params.l
      << " n=" << params.n << "\n";
  out << "g=" << params.g << " v=" << params.v << ", q is a quadratic " << (params.qr_case ? "residue" : "non-residue")
      << " mod p\n";
  out << "all hypotheses hold\n";
  return kOk;
}

int cmd_cosets(const CosetSystem& system, const RunConfig& config, std::ostream& out) {
  const Parameters& params = system.params();
  if (config.output == Output::json) {
    json list = json::array();
    for (const auto& c : system.cosets()) {
      json entry = format::label_json(params, c.label);
      entry["size"] = c.size();
      entry["elements"] = c.elements;
      list.push_back(std::move(entry));
    }
    out << json{{"parameters", params_json(params)}, {"count", system.size()}, {"cosets", list}}.dump(2) << "\n";
    return kOk;
  }
  out << system.size() << " cosets mod " << params.n << " under multiplication by " << params.l << "\n";
  for (const auto& c : system.cosets()) {
    out << to_string(c.label) << " = " << format::short_name(params, c.label, "C") << " (" << c.size()
        << "): {" << join(c.elements) << "}\n";
  }
  return kOk;
}

int cmd_classes(const CosetSystem& system, const RunConfig& config, std::ostream& out) {
  const Parameters& params = system.params();
  const auto classes = cyclotomic_classes(params);
  const bool d0 = classes.d0 == system.coset({0, 0, false}).elements;
  const bool d1 = classes.d1 == system.coset({0, 0, true}).elements;
  if (config.output == Output::json) {
    out << json{{"parameters", params_json(params)},
                {"D0", classes.d0},
                {"D1", classes.d1},
                {"C1_equals_D0", d0},
                {"Cg_equals_D1", d1}}
               .dump(2)
        << "\n";
  } else {
    out << "g=" << params.g << " v=" << params.v << "\n";
    out << "D_0 (" << classes.d0.size() << "): {" << join(classes.d0) << "}\n";
    out << "D_1 (" << classes.d1.size() << "): {" << join(classes.d1) << "}\n";
    out << "C_1 = D_0: " << (d0 ? "yes" : "no") << "\n";
    out << "C_g = D_1: " << (d1 ? "yes" : "no") << "\n";
  }
  return d0 && d1 ? kOk : kVerification;
}

int cmd_chi(const CosetSystem& system, const RunConfig& config, std::ostream& out) {
  const Parameters& params = system.params();
  json list = json::array();
  for (const auto& label : all_labels(params)) {
    const RingElement c = chi(system, label);
    if (config.output == Output::json) {
      json entry = format::label_json(params, label);
      entry["poly"] = format::poly_json(c);
      list.push_back(std::move(entry));
    } else {
      out << format::short_name(params, label, "chi") << " [" << to_string(label) << "] = " << format::sparse_text(c)
          << "\n";
    }
  }
  if (config.output == Output::json) out << json{{"parameters", params_json(params)}, {"chi", list}}.dump(2) << "\n";
  return kOk;
}

int cmd_idempotents(const CosetSystem& system, const RunConfig& config, std::ostream& out) {
  const Parameters& params = system.params();
  const auto field = gf::build_splitting_field(params, config.alpha_index);
  const auto& gauss = field.gauss;
  json list = json::array();
  if (config.output == Output::text) {
    out << "g=" << params.g << " alpha_index=" << config.alpha_index << " R=" << gauss.residue_sum
        << " N=" << gauss.nonresidue_sum << "\n";
  }
  for (const auto& label : all_labels(params)) {
    const auto terms = idempotent_closed_form_terms(params, gauss, label);
    const Idempotent e = idempotent_closed_form(system, gauss, label);
    if (config.output == Output::json) {
      json entry = format::label_json(params, label);
      entry["case"] = closed_form_case(params, label);
      entry["chi"] = format::chi_json(params, terms);
      entry["poly"] = format::poly_json(e.poly);
      list.push_back(std::move(entry));
    } else {
      out << format::short_name(params, label, "theta") << " [" << to_string(label) << ", "
          << closed_form_case(params, label) << "] = " << format::chi_text(params, terms) << "\n";
    }
  }
  if (config.output == Output::json) {
    out << json{{"parameters", params_json(params)},
                {"alpha_index", config.alpha_index},
                {"R", gauss.residue_sum},
                {"N", gauss.nonresidue_sum},
                {"idempotents", list}}
               .dump(2)
        << "\n";
  }
  return kOk;
}

std::vector<Section> verify_all(const CosetSystem& system, unsigned alpha_index) {
  const Parameters& params = system.params();
  std::vector<Section> sections;

  Section cosets{"cosets", 0, {}};
  for (const auto& label : all_labels(params)) {
    ++cosets.checks;
    if (additive_coset_form(params, label).elements != system.coset(label).elements) {
      cosets.failures.push_back(to_string(label) + ": additive form differs");
    }
  }
  const auto classes = cyclotomic_classes(params);
  cosets.checks += 2;
  if (classes.d0 != system.coset({0, 0, false}).elements) cosets.failures.push_back("C_1 != D_0");
  if (classes.d1 != system.coset({0, 0, true}).elements) cosets.failures.push_back("C_g != D_1");
  sections.push_back(std::move(cosets));

  Section counts{"counts", 0, {}};
  const auto count_report = sweep_counts(system, true);
  counts.checks = count_report.checks;
  for (const auto& m : count_report.mismatches) {
    counts.failures.push_back(m.rule + " " + m.indices + " at a=" + std::to_string(m.anchor_element) +
                              ": closed form " + std::to_string(m.expected) + ", enumeration " +
                              std::to_string(m.actual));
  }
  sections.push_back(std::move(counts));

  Section identities{"identities", 0, {}};
  const auto id_report = sweep_identities(system, false);
  identities.checks = id_report.cases;
  for (const auto& m : id_report.mismatches) {
    identities.failures.push_back(m.rule + " " + m.indices + ": residual weight " +
                                  std::to_string(m.residual_weight));
  }
  sections.push_back(std::move(identities));

  const auto field = gf::build_splitting_field(params, alpha_index);
  Section idempotents{"idempotents", 0, {}};
  std::vector<Idempotent> family;
  for (const auto& label : all_labels(params)) {
    const Idempotent oracle = idempotent_oracle(system, field, label);
    Idempotent closed = idempotent_closed_form(system, field.gauss, label);
    idempotents.checks += 2;
    if (!(closed.poly == oracle.poly)) {
      idempotents.failures.push_back(to_string(label) + " [" + closed_form_case(params, label) +
                                     "]: closed form differs from the oracle");
    }
    const auto report = verify_idempotent(system, field, closed);
    if (!report.ok()) {
      idempotents.failures.push_back(to_string(label) + ": " + (report.idempotent ? "" : "e^2 != e ") +
                                     std::to_string(report.spectrum_failures.size()) + " spectrum failures");
    }
    family.push_back(std::move(closed));
  }
  const auto fam = verify_family(family);
  ++idempotents.checks;
  if (!fam.sums_to_one) idempotents.failures.push_back("idempotents do not sum to 1");
  for (const auto& [a, b] : fam.non_orthogonal) {
    idempotents.failures.push_back(to_string(a) + " * " + to_string(b) + " != 0");
  }
  sections.push_back(std::move(idempotents));

  Section codes{"minimal polynomials", 0, {}};
  const gf::PrimeField f(params.l);
  gf::Poly product{1};
  u64 dims = 0;
  for (const auto& label : all_labels(params)) {
    const auto m = minimal_polynomial(system, field, label);
    product = gf::poly::mul(f, product, m.poly);
    const CodeSpec code = minimal_code(system, field, label);
    ++codes.checks;
    if (code.dimension != system.coset(label).size()) {
      codes.failures.push_back(to_string(label) + ": dimension differs from the coset size");
    }
    dims += code.dimension;
  }
  codes.checks += 2;
  if (product != gf::poly::x_pow_minus_one(f, params.n)) codes.failures.push_back("product of M != x^n - 1");
  if (dims != params.n) codes.failures.push_back("dimensions do not sum to n");
  sections.push_back(std::move(codes));
  return sections;
}

int cmd_verify(const CosetSystem& system, const RunConfig& config, std::ostream& out) {
  const auto sections = verify_all(system, config.alpha_index);
  const bool ok = all_ok(sections);
  if (config.output == Output::json) {
    json list = json::array();
    for (const auto& s : sections) list.push_back(s.to_json());
    out << json{{"parameters", params_json(system.params())}, {"ok", ok}, {"sections", list}}.dump(2) << "\n";
  } else {
    print_sections(sections, out);
    out << (ok ? "all checks passed" : "verification failed") << "\n";
  }
  return ok ? kOk : kVerification;
}

std::string matrix_text(const SelectionMatrix& a) {
  std::string s;
  for (unsigned r = 0; r < a.rows(); ++r) {
    if (r) s += "/";
    for (unsigned c = 0; c < a.cols(); ++c) s += a.at(r, c) ? '1' : '0';
  }
  return s;
}

int cmd_codes(const CosetSystem& system, const RunConfig& config, std::ostream& out) {
  const Parameters& params = system.params();
  const auto field = gf::build_splitting_field(params, config.alpha_index);
  const bool as_json = config.output == Output::json;
  bool ok = true;

  json minimal = json::array();
  if (!as_json) out << "minimal codes (n=" << params.n << ", l=" << params.l << ")\n";
  for (const auto& label : all_labels(params)) {
    CodeSpec code = minimal_code(system, field, label);
    std::optional<u64> searched;
    std::string note;
    try {
      searched = min_distance_exhaustive(code, config.budget);
    } catch (const BudgetExceeded& e) {
      note = "beyond budget, needs " + e.needed().str() + " codewords";
    }
    if (searched && code.distance && *searched != code.distance->value) ok = false;
    if (searched && !code.distance) code.distance = DistanceInfo{*searched, DistanceKind::exact, "exhaustive"};
    if (as_json) {
      json entry = format::code_json(code);
      entry["label"] = format::label_json(params, label);
      entry["exhaustive"] = searched ? json(*searched) : json(nullptr);
      if (!note.empty()) entry["note"] = note;
      minimal.push_back(std::move(entry));
    } else {
      out << "  M_" << representative(params, label) << " [" << to_string(label) << "] k=" << code.dimension
          << " d=";
      if (code.distance) {
        out << code.distance->value << " (" << to_string(code.distance->kind) << ", " << code.distance->provenance
            << (searched && code.distance->provenance != "exhaustive" ? ", confirmed exhaustively" : "") << ")";
      } else {
        out << "? (" << note << ")";
      }
      out << "\n";
    }
  }

  json repetitions = json::array();
  for (unsigned j = 0; j < params.t; ++j) {
    const auto rd = repetition_decomposition(system, field, j);
    if (as_json) {
      repetitions.push_back({{"j", j}, {"inner", format::code_json(rd.inner)}, {"copies", rd.factor}});
    } else {
      out << "  C_{s," << j << "} repeats a length-" << rd.inner.n << " code " << rd.factor << " times\n";
    }
  }

  const Anchor anchor = config.anchor.value_or(Anchor{});
  if (anchor.i >= params.s || anchor.j > params.t) throw UsageError("--anchor needs i < s and j <= t");
  const unsigned rows = params.s - anchor.i, cols = params.t + 1 - anchor.j;
  if (rows * cols > 10) throw UsageError("selection block has too many matrices to list; choose a larger anchor");
  json duadic = json::array();
  if (!as_json) {
    out << "selection codes, anchor (" << anchor.i << "," << anchor.j << "), " << rows << "x" << cols << "\n";
  }
  for (const auto& a : SelectionMatrix::all(rows, cols)) {
    const DuadicCode dc = duadic_code(system, field, a, anchor);
    const OddLikeResult r = odd_like_min_weight(dc, config.budget, 1024);
    const SquareRootCheck sq = check_square_root_products(dc, 16);
    if (!r.bound_holds() || !sq.ok()) ok = false;
    CodeSpec code = dc.code;
    code.distance = DistanceInfo{r.bound, DistanceKind::bound, "square-root-bound"};
    if (as_json) {
      json entry = format::code_json(code);
      entry["A"] = matrix_text(a);
      entry["odd_like"] = {{"min_weight", r.min_weight}, {"bound", r.bound}, {"verdict", r.verdict},
                           {"examined", r.examined}, {"exact", r.exact}};
      entry["square_root_products"] = {{"odd_like_words", sq.odd_like_words}, {"failures", sq.failures}};
      duadic.push_back(std::move(entry));
    } else {
      out << "  A=" << matrix_text(a) << " k=" << code.dimension << " odd-like min " << r.min_weight
          << " >= " << r.bound << " (" << r.verdict << ", " << r.examined << " words)"
          << ", b(x) periodic on " << sq.odd_like_words - sq.failures << "/" << sq.odd_like_words << "\n";
    }
  }
  if (as_json) {
    out << json{{"parameters", params_json(params)},
                {"minimal", minimal},
                {"repetition", repetitions},
                {"selection", duadic},
                {"ok", ok}}
               .dump(2)
        << "\n";
  }
  return ok ? kOk : kVerification;
}

std::vector<u64> primes_up_to(u64 bound) {
  std::vector<u64> out;
  for (u64 v = 2; v <= bound; ++v) {
    if (is_prime(v)) out.push_back(v);
  }
  return out;
}

int cmd_sweep(const RunConfig& config, std::ostream& out) {
  const SweepRange& r = config.sweep;
  const auto ls = primes_up_to(r.max_l);
  json list = json::array();
  for (u64 p : primes_up_to(r.max_p)) {
    if (p % 4 != 3) continue;
    for (u64 q : primes_up_to(r.max_q)) {
      if (q == 2 || q == p) continue;
      for (unsigned s = 1; s <= r.max_s; ++s) {
        for (unsigned t = 1; t <= r.max_t; ++t) {
          const long double n = std::pow(static_cast<long double>(p), s) * std::pow(static_cast<long double>(q), t);
          if (n > r.max_n) continue;
          for (u64 l : ls) {
            try {
              const Parameters params = validate_parameters(p, q, s, t, l);
              if (config.output == Output::json) {
                list.push_back(params_json(params));
              } else {
                out << p << " " << q << " " << s << " " << t << " " << l << " n=" << params.n << " g=" << params.g
                    << "\n";
              }
            } catch (const HypothesisError&) {
            }
          }
        }
      }
    }
  }
  if (config.output == Output::json) out << json{{"tuples", list}}.dump(2) << "\n";
  return kOk;
}

}  // namespace

Command parse_command(const std::string& name) {
  for (const auto& [command, text] : kCommands) {
    if (name == text) return command;
  }
  throw std::invalid_argument("unknown command " + name);
}

const char* to_string(Command command) {
  for (const auto& [c, text] : kCommands) {
    if (c == command) return text;
  }
  return "unknown";
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == Command::sweep) return cmd_sweep(config, out);
    const Parameters params = parameters(config);
    if (config.command == Command::validate) return cmd_validate(params, config, out);
    const CosetSystem system = enumerate_cosets(params);
    switch (config.command) {
      case Command::cosets: return cmd_cosets(system, config, out);
      case Command::classes: return cmd_classes(system, config, out);
      case Command::chi: return cmd_chi(system, config, out);
      case Command::idempotents: return cmd_idempotents(system, config, out);
      case Command::verify: return cmd_verify(system, config, out);
      case Command::codes: return cmd_codes(system, config, out);
      default: break;
    }
    return kUsage;
  } catch (const HypothesisError& e) {
    if (config.output == Output::json) {
      out << json{{"valid", false}, {"hypothesis", mcc::to_string(e.which())}, {"detail", e.what()}}.dump(2)
          << "\n";
    }
    err << "hypothesis violated: " << e.what() << "\n";
    return kHypothesis;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const gf::VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerification;
  } catch (const std::logic_error& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerification;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclotomic cosets, idempotents and minimal cyclic codes of length p^s q^t over F_l"};
  app.set_help_flag("-h,--help");

  RunConfig config;
  std::string command, output = "text", anchor;
  std::optional<u64> budget, g;
  app.add_option("command", command, "validate | cosets | classes | chi | idempotents | verify | codes | sweep")
      ->required();
  app.add_option("--p", config.p, "prime p, p = 3 mod 4");
  app.add_option("--q", config.q, "odd prime q");
  app.add_option("--s", config.s, "exponent of p");
  app.add_option("--t", config.t, "exponent of q");
  app.add_option("--l", config.l, "field characteristic");
  app.add_option("--g", g, "common primitive root override");
  app.add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--budget", budget, "exhaustive enumeration cap in codewords");
  app.add_option("--alpha-index", config.alpha_index, "pick the k-th accepted primitive n-th root");
  app.add_option("--anchor", anchor, "codes: block anchor i,j");
  app.add_option("--max-p", config.sweep.max_p, "sweep bound on p");
  app.add_option("--max-q", config.sweep.max_q, "sweep bound on q");
  app.add_option("--max-s", config.sweep.max_s, "sweep bound on s");
  app.add_option("--max-t", config.sweep.max_t, "sweep bound on t");
  app.add_option("--max-l", config.sweep.max_l, "sweep bound on l");
  app.add_option("--max-n", config.sweep.max_n, "sweep bound on n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    config.command = parse_command(command);
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  config.output = output == "json" ? Output::json : Output::text;
  config.g = g;
  if (budget) {
    config.budget = *budget;
  } else if (const char* env = std::getenv("MCC_BUDGET")) {
    try {
      config.budget = std::stoull(env);
    } catch (const std::exception&) {
      err << "usage error: MCC_BUDGET must be a nonnegative integer\n";
      return kUsage;
    }
  }
  if (!anchor.empty()) {
    unsigned i = 0, j = 0;
    char comma = 0;
    std::istringstream is(anchor);
    if (!(is >> i >> comma >> j) || comma != ',' || !is.eof()) {
      err << "usage error: --anchor expects i,j\n";
      return kUsage;
    }
    config.anchor = Anchor{i, j};
  }
  if (config.command != Command::sweep) {
    for (const char* name : {"--p", "--q", "--s", "--t", "--l"}) {
      if (app.count(name) == 0) {
        err << "usage error: " << name << " is required for " << command << "\n";
        return kUsage;
      }
    }
  }
  return run(config, out, err);
}

}  // namespace mcc::cli

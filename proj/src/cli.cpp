#include "trimorph/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>

#include "trimorph/classifier.hpp"
#include "trimorph/error.hpp"
#include "trimorph/fixtures.hpp"
#include "trimorph/freeness.hpp"
#include "trimorph/json.hpp"
#include "trimorph/numtheory.hpp"
#include "trimorph/omega.hpp"
#include "trimorph/sweep.hpp"

namespace trimorph::cli {

namespace {

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string witness_text(const CommutationReport& r) {
  std::string s;
  for (const auto& [key, value] : r.witness) {
    if (!s.empty()) s += ' ';
    s += key + '=';
    std::visit(
        [&s](const auto& v) {
          if constexpr (std::is_same_v<std::decay_t<decltype(v)>, std::string>) s += v;
          else s += std::to_string(v);
        },
        value);
  }
  return s;
}

void print_report(std::ostream& out, const CommutationReport& r) {
  out << "case: " << case_name(r.kase) << (r.swapped ? " (roles swapped)" : "") << '\n';
  for (const Condition& c : r.conditions) out << "  " << c.name << ": " << yes_no(c.holds) << '\n';
  if (!r.witness.empty()) out << "witness: " << witness_text(r) << '\n';
  out << "prediction: " << (r.prediction ? "commute" : "do not commute") << '\n';
}

void print_sweep(std::ostream& out, bool json, const SweepConfig& config, const SweepSummary& s) {
  if (json) {
    for (const SweepMismatch& m : s.mismatches) out << mismatch_json(m).dump() << '\n';
    out << sweep_summary_json(config, s).dump() << '\n';
    return;
  }
  for (const SweepMismatch& m : s.mismatches)
    out << "mismatch #" << m.index << ": " << m.g1.str() << " vs " << m.g2.str()
        << " direct=" << yes_no(m.direct) << " predicted=" << yes_no(m.report.prediction) << " ("
        << case_name(m.report.kase) << ")\n";
  out << "summary morphisms=" << s.morphisms << " pairs=" << s.pairs << " commuting=" << s.commuting
      << " mismatches=" << s.mismatches.size() << " aborted=" << s.aborted.size() << " cases=";
  for (std::size_t c = 0; c < kCaseCount; ++c)
    out << (c ? "," : "") << case_name(kAllCases[c]) << ':' << s.cases[c];
  out << '\n';
  out << "conditions";
  for (std::size_t c = 0; c < kCaseCount; ++c) {
    const auto names = condition_names(kAllCases[c]);
    for (std::size_t k = 0; k < names.size(); ++k)
      out << ' ' << case_name(kAllCases[c]) << '.' << names[k] << '=' << s.conditions[c][k];
  }
  out << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Commutation of upper triangular binary morphisms"};
  app.name("trimorph");
  app.require_subcommand(1, 1);
  bool json = false;
  int status = kOk;

  std::string g1_text, g2_text, h_text, u_text, v_text;
  std::uint64_t p = 0, q = 0, len = 0, upto = 0;
  unsigned depth = kDefaultRelationDepth;
  bool assert_commute = false, direct = false;
  SweepConfig sweep_config;
  sweep_config.workers = std::max(1U, std::thread::hardware_concurrency());
  std::string output_path;

  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("G1", g1_text, "first morphism, e.g. a=aa,b=ab")->required();
    sub->add_option("G2", g2_text, "second morphism")->required();
  };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "emit a JSON record"); };

  auto* check = app.add_subcommand("check", "decide commutation by direct composition");
  add_pair(check);
  add_json(check);
  check->add_flag("--assert", assert_commute, "exit 1 when the morphisms do not commute");

  auto* classify_cmd = app.add_subcommand("classify", "structural commutation report");
  add_pair(classify_cmd);
  add_json(classify_cmd);

  auto* omega = app.add_subcommand("omega", "prefix of the infinite word omega(H)");
  omega->add_option("H", h_text, "nonsingular upper triangular morphism")->required();
  omega->add_option("--len", len, "prefix length")->required();
  add_json(omega);

  auto* gaps = app.add_subcommand("gaps", "gap sequence A(1..N) of omega(H)");
  gaps->add_option("H", h_text, "nonsingular upper triangular morphism with p >= 2")->required();
  gaps->add_option("--upto", upto, "last index")->required()->check(CLI::PositiveNumber);
  gaps->add_flag("--direct", direct, "count gaps in the expanded word instead of the closed form");
  add_json(gaps);

  auto* conjugate = app.add_subcommand("conjugate", "are U and V a-conjugates");
  conjugate->add_option("U", u_text)->required();
  conjugate->add_option("V", v_text)->required();
  add_json(conjugate);

  auto* multdep = app.add_subcommand("multdep", "multiplicative dependence of P and Q");
  multdep->add_option("P", p)->required()->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));
  multdep->add_option("Q", q)->required()->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));
  add_json(multdep);

  auto* free_cmd = app.add_subcommand("free", "search for a relation between G1 and G2");
  add_pair(free_cmd);
  free_cmd->add_option("--depth", depth, "maximum product length")
      ->check(CLI::Range(1U, 24U))
      ->default_val(kDefaultRelationDepth);
  add_json(free_cmd);

  auto* sweep = app.add_subcommand("sweep", "classifier vs direct composition over all pairs");
  sweep->add_option("--max-s", sweep_config.max_s, "largest |g(a)|")->default_val(3);
  sweep->add_option("--max-p", sweep_config.max_p, "largest |g(b)|_b")->default_val(3);
  sweep->add_option("--max-exp", sweep_config.max_exp, "largest inner/outer a-exponent")->default_val(2);
  sweep->add_option("--max-bonly-exp", sweep_config.max_bonly_exp, "largest e in g(b) = a^e")
      ->default_val(3);
  sweep->add_option("--jobs", sweep_config.workers, "worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--output", output_path, "write records to this file instead of stdout");
  add_json(sweep);

  auto* examples = app.add_subcommand("examples", "check the seven classic commuting pairs");
  add_json(examples);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) {
      const Morphism g1 = Morphism::parse(g1_text);
      const Morphism g2 = Morphism::parse(g2_text);
      const bool commute = direct_commute(g1, g2);
      if (json) {
        out << check_json(g1, g2, commute).dump() << '\n';
      } else {
        out << "g1g2: " << compose(g1, g2).str() << '\n'
            << "g2g1: " << compose(g2, g1).str() << '\n'
            << "commute: " << yes_no(commute) << '\n';
      }
      if (assert_commute && !commute) status = kFalse;
    } else if (*classify_cmd) {
      const Morphism g1 = Morphism::parse(g1_text);
      const Morphism g2 = Morphism::parse(g2_text);
      const CommutationReport report = classify(g1, g2);
      if (json) out << report_json(g1, g2, report).dump() << '\n';
      else print_report(out, report);
    } else if (*omega) {
      const Morphism h = Morphism::parse(h_text);
      const Word w = omega_prefix(to_triangular(h), len);
      if (json) {
        Json j{{"schema_version", kSchemaVersion}, {"kind", "omega"}, {"h", h.str()},
               {"length", len}, {"prefix", w.str()}};
        out << j.dump() << '\n';
      } else {
        out << w.str() << '\n';
      }
    } else if (*gaps) {
      const Morphism h = Morphism::parse(h_text);
      const TriangularForm form = to_triangular(h);
      std::vector<std::uint64_t> values;
      if (direct) {
        values = gaps_direct(form, upto);
      } else {
        for (std::uint64_t i = 1; i <= upto; ++i) values.push_back(gap(form, i));
      }
      if (json) {
        Json j{{"schema_version", kSchemaVersion}, {"kind", "gaps"}, {"h", h.str()},
               {"method", direct ? "direct" : "closed_form"}, {"gaps", values}};
        out << j.dump() << '\n';
      } else {
        for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
        out << '\n';
      }
    } else if (*conjugate) {
      const Word u = Word::parse(u_text);
      const Word v = Word::parse(v_text);
      const bool conj = a_conjugates(u, v);
      if (json) {
        Json j{{"schema_version", kSchemaVersion}, {"kind", "conjugate"}, {"u", u.str()},
               {"v", v.str()}, {"a_conjugates", conj}};
        out << j.dump() << '\n';
      } else {
        out << "a-conjugates: " << yes_no(conj) << '\n';
      }
    } else if (*multdep) {
      const MultDependence dep = mult_dependence(p, q);
      if (json) {
        out << multdep_json(p, q, dep).dump() << '\n';
      } else if (const auto* d = std::get_if<Dependent>(&dep)) {
        out << "dependent r=" << d->r << " m=" << d->m << " n=" << d->n << '\n';
      } else {
        out << "independent\n";
      }
    } else if (*free_cmd) {
      const Morphism g1 = Morphism::parse(g1_text);
      const Morphism g2 = Morphism::parse(g2_text);
      const auto relation = find_relation(g1, g2, depth);
      if (json) out << relation_json(g1, g2, depth, relation).dump() << '\n';
      else if (relation) out << "relation " << relation->left << " = " << relation->right << '\n';
      else out << "no relation up to depth " << depth << '\n';
    } else if (*sweep) {
      const SweepSummary summary = run_sweep(sweep_config);
      if (output_path.empty()) {
        print_sweep(out, json, sweep_config, summary);
      } else {
        std::ofstream file(output_path);
        if (!file) {
          err << "cannot open " << output_path << '\n';
          return kUsage;
        }
        print_sweep(file, json, sweep_config, summary);
      }
      if (!summary.aborted.empty()) status = kOverflow;
      else if (!summary.mismatches.empty()) status = kFalse;
    } else if (*examples) {
      for (const CommutingExample& ex : commuting_examples()) {
        const bool commute = direct_commute(ex.g1, ex.g2);
        const CommutationReport report = classify(ex.g1, ex.g2);
        if (!commute) status = kFalse;
        if (json) {
          Json j = report_json(ex.g1, ex.g2, report);
          j["kind"] = "example";
          j["number"] = ex.number;
          j["commute"] = commute;
          out << j.dump() << '\n';
        } else {
          out << "example " << ex.number << ": " << ex.g1.str() << " vs " << ex.g2.str()
              << " commute=" << yes_no(commute) << " case=" << case_name(report.kase)
              << " prediction=" << yes_no(report.prediction) << '\n';
        }
      }
    }
  } catch (const CountOverflow& e) {
    err << "error: " << e.what() << '\n';
    return kOverflow;
  } catch (const SearchAborted& e) {
    err << "error: " << e.what() << '\n';
    return kOverflow;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return status;
}

}  // namespace trimorph::cli

#include "pqseq/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "pqseq/errors.hpp"

namespace pqseq {

namespace {

using nlohmann::json;

std::vector<uint32_t> parse_residue_list(const std::string& text, uint32_t p) {
  std::vector<uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("--set: empty entry in residue list");
    size_t pos = 0;
    unsigned long v = std::stoul(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("--set: bad residue '" + item + "'");
    if (v >= p) throw std::invalid_argument("--set: residue " + item + " not in [0, p)");
    out.push_back((uint32_t)v);
  }
  if (out.empty()) throw std::invalid_argument("--set: empty expansion");
  return out;
}

json spectrum_point_json(const SpectrumPoint& pt) {
  return json{{"k", pt.k}, {"lc", pt.lc}, {"method", method_name(pt.method)}};
}

std::string field_name(Field f) { return f == Field::f2 ? "f2" : "fp"; }

Field field_for_variant(Variant v) {
  switch (v) {
    case Variant::thm1:
    case Variant::thm2:
    case Variant::thm3_bound:
    case Variant::complement:
    case Variant::corollary:
      return Field::f2;
    default:
      return Field::fp;
  }
}

PeriodicSequence build_sequence(const RunConfig& config, const PrimeParams& params) {
  PeriodicSequence seq = config.complement ? gen_complement(params, config.index_set)
                                           : gen_indicator(params, config.index_set);
  if (config.field == Field::fp) return seq.over_modulus(params.p);
  return seq;
}

void emit(const RunConfig& config, const std::string& artifact, std::ostream& out,
          std::ostream& err, int* status) {
  if (config.output_path.empty()) {
    out << artifact;
    return;
  }
  std::ofstream file(config.output_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open output path " << config.output_path << "\n";
    *status = kExitConfig;
    return;
  }
  file << artifact;
}

std::string render_generate(const RunConfig& config, const PeriodicSequence& seq) {
  if (config.format == RunConfig::Format::csv) {
    std::string out = "u,symbol\n";
    for (uint32_t u = 0; u < seq.period; ++u) {
      out += std::to_string(u);
      out += ',';
      out += std::to_string(seq.symbols[u]);
      out += '\n';
    }
    return out;
  }
  json doc{{"command", "generate"}, {"label", seq.label},       {"modulus", seq.alphabet_modulus},
           {"p", config.p},         {"period", seq.period},     {"symbols", seq.symbols},
           {"w", config.w},         {"weight", seq.weight()}};
  return doc.dump(2) + "\n";
}

std::string render_scalar(const RunConfig& config, const char* command, uint32_t value) {
  if (config.format == RunConfig::Format::csv) return std::to_string(value) + "\n";
  json doc{{"command", command}, {"field", field_name(config.field)}, {"lc", value},
           {"p", config.p},      {"set", config.index_set},           {"w", config.w}};
  if (config.command == RunConfig::Command::klc) doc["k"] = config.k;
  return doc.dump(2) + "\n";
}

std::string render_spectrum(const RunConfig& config, const Spectrum& sp) {
  if (config.format == RunConfig::Format::csv) {
    std::string out = "k,lc,method\n";
    for (const auto& pt : sp.points) {
      out += std::to_string(pt.k);
      out += ',';
      out += std::to_string(pt.lc);
      out += ',';
      out += method_name(pt.method);
      out += '\n';
    }
    return out;
  }
  json points = json::array();
  for (const auto& pt : sp.points) points.push_back(spectrum_point_json(pt));
  json doc{{"command", "spectrum"},
           {"field", field_name(config.field)},
           {"k_requested", sp.k_requested},
           {"p", config.p},
           {"points", points},
           {"required_patterns", sp.required_patterns},
           {"set", config.index_set},
           {"truncated", sp.truncated},
           {"w", config.w}};
  return doc.dump(2) + "\n";
}

std::string render_verify(const RunConfig& config, const VerificationReport& report) {
  if (config.format == RunConfig::Format::csv) {
    std::string out = "k,expected,expected_method,exhaustive,exhaustive_alt,status\n";
    for (const auto& e : report.entries) {
      out += std::to_string(e.k);
      out += ',';
      if (e.status != VerifyStatus::no_claim) {
        out += std::to_string(e.expected.lc);
        out += ',';
        out += method_name(e.expected.method);
      } else {
        out += ',';
      }
      out += ',';
      out += std::to_string(e.exhaustive);
      out += ',';
      if (e.exhaustive_alt) out += std::to_string(*e.exhaustive_alt);
      out += ',';
      out += verify_status_name(e.status);
      out += '\n';
    }
    return out;
  }
  json entries = json::array();
  for (const auto& e : report.entries) {
    json row{{"exhaustive", e.exhaustive}, {"k", e.k}, {"status", verify_status_name(e.status)}};
    if (e.status != VerifyStatus::no_claim) {
      row["expected"] = e.expected.lc;
      row["method"] = method_name(e.expected.method);
    }
    if (e.exhaustive_alt) row["exhaustive_alt"] = *e.exhaustive_alt;
    entries.push_back(row);
  }
  json doc{{"command", "verify"},
           {"entries", entries},
           {"field", field_name(report.field)},
           {"p", report.p},
           {"passed", report.passed},
           {"set", report.index_set},
           {"theorem", report.variant},
           {"w", report.w}};
  return doc.dump(2) + "\n";
}

}  // namespace

std::vector<uint32_t> expand_index_set(const std::string& text, uint32_t p) {
  if (text == "threshold") {
    std::vector<uint32_t> out;
    for (uint32_t l = (p + 1) / 2; l < p; ++l) out.push_back(l);
    return out;
  }
  if (text == "legendre") {
    std::vector<uint32_t> out;
    for (uint32_t a = 1; a < p; ++a) {
      if (legendre(a, p) == -1) out.push_back(a);
    }
    return out;
  }
  return parse_residue_list(text, p);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    PrimeParams params = PrimeParams::make(config.p, config.w);
    ExhaustiveOptions opts;
    opts.budget = config.budget;
    opts.threads = config.threads;
    int status = kExitOk;

    switch (config.command) {
      case RunConfig::Command::generate: {
        PeriodicSequence seq = build_sequence(config, params);
        emit(config, render_generate(config, seq), out, err, &status);
        return status;
      }
      case RunConfig::Command::lc: {
        PeriodicSequence seq = build_sequence(config, params);
        emit(config, render_scalar(config, "lc", lc_gcd(seq)), out, err, &status);
        return status;
      }
      case RunConfig::Command::klc: {
        PeriodicSequence seq = build_sequence(config, params);
        uint32_t value = klc_exhaustive(seq, config.k, opts);
        emit(config, render_scalar(config, "klc", value), out, err, &status);
        return status;
      }
      case RunConfig::Command::spectrum: {
        PeriodicSequence seq = build_sequence(config, params);
        uint32_t k_max = config.k_max.value_or(seq.weight());
        Spectrum sp = spectrum(seq, k_max, opts);
        emit(config, render_spectrum(config, sp), out, err, &status);
        if (sp.truncated && status == kExitOk) {
          err << "warning: budget " << config.budget << " exhausted, spectrum truncated after k="
              << (sp.points.empty() ? std::string("-") : std::to_string(sp.points.back().k))
              << " (full request needs " << sp.required_patterns << " patterns)\n";
          return kExitBudget;
        }
        return status;
      }
      case RunConfig::Command::verify: {
        if (!config.theorem) {
          err << "error: verify requires --theorem\n";
          return kExitConfig;
        }
        TheoremSpec spec;
        spec.params = params;
        spec.index_set = config.index_set;
        spec.variant = *config.theorem;
        spec.field = config.field;
        uint32_t k_max = config.k_max.value_or(sequence_for_spec(spec).weight());
        VerificationReport report = verify_theorem(spec, k_max, opts);
        emit(config, render_verify(config, report), out, err, &status);
        if (status != kExitOk) return status;
        if (!report.passed) {
          err << "verification mismatch: see report\n";
          return kExitMismatch;
        }
        return kExitOk;
      }
    }
    err << "error: unknown command\n";
    return kExitConfig;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const StructureError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;

  uint64_t default_budget = kDefaultBudget;
  if (const char* env = std::getenv("PQSEQ_BUDGET")) {
    try {
      size_t pos = 0;
      default_budget = std::stoull(env, &pos);
      if (pos != std::string(env).size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      err << "error: PQSEQ_BUDGET is not a valid number: " << env << "\n";
      return kExitConfig;
    }
  }
  cfg.budget = default_budget;

  CLI::App app{"polynomial quotient sequences: linear complexity toolkit"};
  app.require_subcommand(1);

  std::string set_text, field_text, format_text = "csv", theorem_text, out_path;
  uint32_t k = 0;
  int64_t k_max = -1;

  auto add_common = [&](CLI::App* sub, bool with_set) {
    sub->add_option("--p", cfg.p, "odd prime modulus")->required();
    sub->add_option("--w", cfg.w, "quotient exponent, 1 <= w <= p-1")->required();
    if (with_set) {
      sub->add_option("--set", set_text,
                      "index set: comma-separated residues, 'threshold' or 'legendre'");
      sub->add_flag("--complement", cfg.complement,
                    "treat --set as J and build the complement-style sequence");
    }
    sub->add_option("--field", field_text, "f2 (default) or fp");
    sub->add_option("--format", format_text, "csv (default) or json");
    sub->add_option("--out", out_path, "output path (default: stdout)");
    sub->add_option("--budget", cfg.budget, "max LC evaluations for exhaustive search");
    sub->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
  };

  CLI::App* generate = app.add_subcommand("generate", "emit one period of a sequence");
  add_common(generate, true);
  CLI::App* lc = app.add_subcommand("lc", "linear complexity of a sequence");
  add_common(lc, true);
  CLI::App* klc = app.add_subcommand("klc", "k-error linear complexity (exhaustive)");
  add_common(klc, true);
  klc->add_option("--k", k, "number of allowed symbol changes")->required();
  CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "error linear complexity spectrum");
  add_common(spectrum_cmd, true);
  spectrum_cmd->add_option("--k-max", k_max, "largest k (default: sequence weight)");
  CLI::App* verify = app.add_subcommand("verify", "closed-form values against the exhaustive oracle");
  add_common(verify, true);
  verify->add_option("--theorem", theorem_text,
                     "thm1|thm2|thm3_bound|complement|corollary|thm4|thm5|"
                     "fp_upper_legendre|fp_lower")
      ->required();
  verify->add_option("--k-max", k_max, "largest k (default: sequence weight)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (generate->parsed()) cfg.command = RunConfig::Command::generate;
    if (lc->parsed()) cfg.command = RunConfig::Command::lc;
    if (klc->parsed()) {
      cfg.command = RunConfig::Command::klc;
      cfg.k = k;
    }
    if (spectrum_cmd->parsed()) cfg.command = RunConfig::Command::spectrum;
    if (verify->parsed()) {
      cfg.command = RunConfig::Command::verify;
      cfg.theorem = variant_from_name(theorem_text);
      if (!cfg.theorem) {
        err << "error: unknown theorem '" << theorem_text << "'\n";
        return kExitConfig;
      }
    }
    if (k_max >= 0) cfg.k_max = (uint32_t)k_max;

    if (!field_text.empty()) {
      if (field_text == "f2") {
        cfg.field = Field::f2;
      } else if (field_text == "fp") {
        cfg.field = Field::fp;
      } else {
        err << "error: --field must be f2 or fp\n";
        return kExitConfig;
      }
    } else if (cfg.theorem) {
      cfg.field = field_for_variant(*cfg.theorem);
    }
    if (cfg.theorem && cfg.field != field_for_variant(*cfg.theorem)) {
      err << "error: --field contradicts the theorem's field\n";
      return kExitConfig;
    }

    if (format_text == "csv") {
      cfg.format = RunConfig::Format::csv;
    } else if (format_text == "json") {
      cfg.format = RunConfig::Format::json;
    } else {
      err << "error: --format must be csv or json\n";
      return kExitConfig;
    }
    cfg.output_path = out_path;

    if (!set_text.empty()) {
      if (cfg.p < 3) {
        err << "error: --set requires a valid --p\n";
        return kExitConfig;
      }
      cfg.index_set = expand_index_set(set_text, cfg.p);
    } else if (cfg.command != RunConfig::Command::verify) {
      err << "error: --set is required for this command\n";
      return kExitConfig;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  return run(cfg, out, err);
}

}  // namespace pqseq

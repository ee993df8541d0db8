#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "hia/catalog.hpp"
#include "hia/discriminator.hpp"
#include "hia/filters.hpp"
#include "hia/hom.hpp"
#include "hia/io.hpp"
#include "hia/power.hpp"
#include "hia/term.hpp"

namespace {

using nlohmann::ordered_json;

constexpr double kEvalWarnThreshold = 1e7;

std::string join_elems(const std::vector<hia::Elem>& xs, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

void emit(const ordered_json& j, const std::string& format,
          const std::string& text) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

ordered_json violations_json(const hia::ValidationReport& report) {
  ordered_json arr = ordered_json::array();
  for (const hia::Violation& v : report.violations) {
    ordered_json item;
    item["law"] = v.law;
    item["witness"] = v.witness;
    arr.push_back(std::move(item));
  }
  return arr;
}

hia::Environment parse_environment(const std::string& spec) {
  hia::Environment env;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t end = spec.find(',', pos);
    if (end == std::string::npos) end = spec.size();
    std::string item = spec.substr(pos, end - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw hia::InputError("environment entry '" + item + "' needs name=value");
    auto trim = [](std::string s) {
      const std::size_t a = s.find_first_not_of(" \t");
      const std::size_t b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string name = trim(item.substr(0, eq));
    const std::string value = trim(item.substr(eq + 1));
    if (name.empty()) throw hia::InputError("empty variable name in environment");
    try {
      const unsigned long v = std::stoul(value);
      env[name] = static_cast<hia::Elem>(v);
    } catch (const std::exception&) {
      throw hia::InputError("environment value '" + value + "' is not a number");
    }
    pos = end + 1;
  }
  return env;
}

int run_check(const std::string& file, const std::string& format) {
  const hia::HIAlgebra a = hia::load_algebra(file);
  const hia::ValidationReport derived = hia::check_derived_identities(a);
  const hia::ValidationReport audit = hia::audit_algebra(a);

  ordered_json j;
  j["name"] = a.name();
  j["size"] = a.size();
  j["trivial"] = a.trivial();
  j["ok"] = derived.ok && audit.ok;
  j["violations"] = violations_json(derived);

  std::string text;
  text += "algebra: " + (a.name().empty() ? std::string("<unnamed>") : a.name()) +
          "\n";
  text += "size: " + std::to_string(a.size()) + "\n";
  text += std::string("trivial: ") + (a.trivial() ? "true" : "false") + "\n";
  text += std::string("ok: ") + (j["ok"].get<bool>() ? "true" : "false") + "\n";
  emit(j, format, text);
  return j["ok"].get<bool>() ? 0 : 1;
}

int run_center(const std::string& file, const std::string& format) {
  const hia::HIAlgebra a = hia::load_algebra(file);
  const hia::InvolutiveCenter ic = hia::involutive_center(a);

  ordered_json j;
  j["name"] = a.name();
  j["center_size"] = ic.members.size();
  j["members"] = ic.members;
  ordered_json comp = ordered_json::array();
  for (std::size_t i = 0; i < ic.members.size(); ++i)
    comp.push_back({ic.members[i], ic.complement_of[i]});
  j["complements"] = std::move(comp);

  std::string text;
  text += "center size: " + std::to_string(ic.members.size()) + "\n";
  text += "members: " + join_elems(ic.members) + "\n";
  text += "complements:";
  for (std::size_t i = 0; i < ic.members.size(); ++i)
    text += " " + std::to_string(ic.members[i]) + "->" +
            std::to_string(ic.complement_of[i]);
  text += "\n";
  emit(j, format, text);
  return 0;
}

int run_filters(const std::string& file, bool involutive_only,
                const std::string& format) {
  const hia::HIAlgebra a = hia::load_algebra(file);
  const std::vector<hia::Filter> filters = hia::all_filters(a);
  std::size_t involutive = 0;

  ordered_json arr = ordered_json::array();
  std::string text;
  for (const hia::Filter& f : filters) {
    const bool inv = hia::is_involutive_filter(a, f);
    if (inv) ++involutive;
    if (involutive_only && !inv) continue;
    ordered_json item;
    item["members"] = f.members;
    item["involutive"] = inv;
    arr.push_back(std::move(item));
    text += "filter {" + join_elems(f.members, ", ") + "}" +
            (inv ? ": involutive" : ": not involutive") + "\n";
  }
  ordered_json j;
  j["name"] = a.name();
  j["filter_count"] = filters.size();
  j["involutive_count"] = involutive;
  j["filters"] = std::move(arr);

  std::string head = "filters: " + std::to_string(filters.size()) +
                     " (involutive: " + std::to_string(involutive) + ")\n";
  emit(j, format, head + text);
  return 0;
}

int run_congruences(const std::string& file, const std::string& format) {
  const hia::HIAlgebra a = hia::load_algebra(file);
  const std::vector<hia::Congruence> congs = hia::all_congruences(a);
  const std::vector<hia::Filter> inv_filters = hia::involutive_filters(a);

  ordered_json arr = ordered_json::array();
  std::string text;
  for (const hia::Congruence& c : congs) {
    ordered_json blocks = ordered_json::array();
    std::string line = "congruence:";
    for (const std::vector<hia::Elem>& b : c.blocks) {
      blocks.push_back(b);
      line += " {" + join_elems(b, ", ") + "}";
    }
    arr.push_back(std::move(blocks));
    text += line + "\n";
  }
  ordered_json j;
  j["name"] = a.name();
  j["congruence_count"] = congs.size();
  j["involutive_filter_count"] = inv_filters.size();
  j["congruences"] = std::move(arr);

  std::string head = "congruences: " + std::to_string(congs.size()) + "\n" +
                     "involutive filters: " + std::to_string(inv_filters.size()) +
                     "\n";
  emit(j, format, head + text);
  return 0;
}

int run_si(const std::string& file, const std::string& format) {
  const hia::HIAlgebra a = hia::load_algebra(file);
  const hia::SiVerdict v = hia::is_subdirectly_irreducible(a);

  ordered_json j;
  j["name"] = a.name();
  j["subdirectly_irreducible"] = v.si;
  j["congruence_criterion"] = v.congruence_criterion;
  j["center_criterion"] = v.center_criterion;

  std::string text;
  text += std::string("subdirectly irreducible: ") + (v.si ? "true" : "false") + "\n";
  text += std::string("smallest nontrivial congruence: ") +
          (v.congruence_criterion ? "exists" : "does not exist") + "\n";
  text += std::string("center is {0, top}: ") +
          (v.center_criterion ? "true" : "false") + "\n";
  emit(j, format, text);
  return 0;
}

int run_killer(const std::string& file, const std::string& format) {
  const hia::HIAlgebra a = hia::load_algebra(file);
  const hia::KillerSynthesis s = hia::synthesize_killer(a);

  ordered_json j;
  j["name"] = a.name();
  j["depth"] = s.depth;
  j["term"] = s.term.to_string();
  j["verified"] = s.verified;
  if (s.failure_witness) j["failure_witness"] = *s.failure_witness;
  if (s.minimal_depth) j["minimal_depth"] = *s.minimal_depth;

  std::string text;
  text += "depth: " + std::to_string(s.depth) + "\n";
  text += "term: " + s.term.to_string() + "\n";
  text += std::string("verified: ") + (s.verified ? "true" : "false") + "\n";
  if (s.failure_witness)
    text += "failure witness: " + std::to_string(*s.failure_witness) + "\n";
  if (s.minimal_depth)
    text += "minimal depth: " + std::to_string(*s.minimal_depth) + "\n";
  emit(j, format, text);
  return s.verified ? 0 : 1;
}

int run_discriminator(const std::string& file, const std::string& format) {
  const hia::HIAlgebra a = hia::load_algebra(file);
  const hia::KillerSynthesis killer = hia::synthesize_killer(a);

  ordered_json j;
  j["name"] = a.name();
  j["killer_verified"] = killer.verified;

  std::string text;
  if (!killer.verified) {
    j["verified"] = false;
    if (killer.failure_witness) j["killer_failure_witness"] = *killer.failure_witness;
    text += "verified: false\n";
    text += "killer fails at element " +
            (killer.failure_witness ? std::to_string(*killer.failure_witness)
                                    : std::string("?")) +
            "; no discriminator via this construction\n";
    emit(j, format, text);
    return 1;
  }

  const hia::Term t = hia::discriminator_from_killer(killer.term);
  const hia::DiscriminatorSynthesis d = hia::verify_discriminator(a, t);
  j["term"] = t.to_string();
  j["verified"] = d.verified;
  if (d.failure_witness)
    j["failure_witness"] = {(*d.failure_witness)[0], (*d.failure_witness)[1],
                            (*d.failure_witness)[2]};
  text += "term: " + t.to_string() + "\n";
  text += std::string("verified: ") + (d.verified ? "true" : "false") + "\n";
  if (d.failure_witness)
    text += "failure witness: (" + std::to_string((*d.failure_witness)[0]) + ", " +
            std::to_string((*d.failure_witness)[1]) + ", " +
            std::to_string((*d.failure_witness)[2]) + ")\n";
  emit(j, format, text);
  return d.verified ? 0 : 1;
}

int run_eval(const std::string& file, const std::string& term_text,
             const std::string& env_text, const std::string& format) {
  const hia::HIAlgebra a = hia::load_algebra(file);
  const hia::Term t = hia::parse_term(term_text);
  const hia::Environment env = parse_environment(env_text);
  const hia::Elem value = hia::eval_term(a, t, env);

  ordered_json j;
  j["term"] = t.to_string();
  j["value"] = value;
  emit(j, format, "value: " + std::to_string(value) + "\n");
  return 0;
}

int run_identity(const std::string& file, const std::string& lhs_text,
                 const std::string& rhs_text, const std::string& format) {
  const hia::HIAlgebra a = hia::load_algebra(file);
  const hia::Term lhs = hia::parse_term(lhs_text);
  const hia::Term rhs = hia::parse_term(rhs_text);

  std::size_t var_count = lhs.free_variables().size();
  {
    std::vector<std::string> all = lhs.free_variables();
    for (const std::string& v : rhs.free_variables())
      if (std::find(all.begin(), all.end(), v) == all.end()) all.push_back(v);
    var_count = all.size();
  }
  if (hia::assignment_count(a.size(), var_count) > kEvalWarnThreshold)
    std::cerr << "warning: checking more than 1e7 assignments\n";

  const hia::IdentityVerdict v = hia::holds_identity(a, lhs, rhs);

  ordered_json j;
  j["lhs"] = lhs.to_string();
  j["rhs"] = rhs.to_string();
  j["holds"] = v.holds;
  std::string text;
  if (v.holds) {
    text = "holds\n";
  } else {
    ordered_json env;
    std::string assign;
    for (const auto& [name, value] : *v.counterexample) {
      env[name] = value;
      if (!assign.empty()) assign += " ";
      assign += name + "=" + std::to_string(value);
    }
    j["counterexample"] = std::move(env);
    j["lhs_value"] = v.lhs_value;
    j["rhs_value"] = v.rhs_value;
    text = "counterexample: " + assign + " (lhs=" + std::to_string(v.lhs_value) +
           ", rhs=" + std::to_string(v.rhs_value) + ")\n";
  }
  emit(j, format, text);
  return v.holds ? 0 : 1;
}

int run_power(const std::string& file, std::size_t exponent, const std::string& out,
              bool boolean, const std::string& format) {
  const hia::HIAlgebra a = hia::load_algebra(file);
  const hia::PowerAlgebra p = boolean ? hia::boolean_power(a, exponent)
                                      : hia::direct_power(a, exponent);

  ordered_json j;
  j["base"] = a.name();
  j[boolean ? "atoms" : "exponent"] = exponent;
  j["carrier"] = p.size();
  j["provenance"] = p.provenance();

  std::string text;
  text += "carrier: " + std::to_string(p.size()) + "\n";
  text += "provenance: " + p.provenance() + "\n";

  if (!out.empty()) {
    const std::string base_name = a.name().empty() ? std::string("base") : a.name();
    const std::string name = boolean
                                 ? base_name + "[2^" + std::to_string(exponent) + "]"
                                 : base_name + "^" + std::to_string(exponent);
    hia::save_algebra(p.materialize(name), out);
    j["wrote"] = out;
    text += "wrote: " + out + "\n";
  }
  emit(j, format, text);
  return 0;
}

int run_injective(const std::string& generator_file, const std::string& candidate_file,
                  std::size_t exponent_bound, std::size_t subalgebra_bound,
                  const std::string& format) {
  const hia::HIAlgebra g = hia::load_algebra(generator_file);
  const hia::CandidateSpec spec = hia::load_candidate(candidate_file);
  auto parent = std::make_shared<hia::PowerAlgebra>(hia::direct_power(g, spec.power));
  const hia::Subalgebra candidate(parent, spec.members);

  const hia::InjectivityVerdict v =
      hia::bounded_injectivity_check(g, candidate, exponent_bound, subalgebra_bound);

  ordered_json j;
  j["generator"] = g.name();
  j["candidate_power"] = spec.power;
  j["candidate_size"] = candidate.members().size();
  j["candidate_diagonal"] = v.candidate_diagonal;
  j["candidate_complete"] = v.candidate_complete;
  j["characterization_predicts_injective"] = v.characterization_predicts_injective;
  j["exponent_bound"] = v.exponent_bound;
  j["subalgebra_bound"] = v.subalgebra_bound;
  j["subalgebras_checked"] = v.subalgebras_checked;
  j["homomorphisms_checked"] = v.homomorphisms_checked;
  j["counterexample_found"] = v.counterexample_found;

  std::string text;
  text += "candidate: power=" + std::to_string(spec.power) +
          " size=" + std::to_string(candidate.members().size()) +
          " diagonal=" + (v.candidate_diagonal ? "true" : "false") +
          " complete=" + (v.candidate_complete ? "true" : "false") + "\n";
  text += std::string("characterization predicts injective: ") +
          (v.characterization_predicts_injective ? "true" : "false") + "\n";
  if (v.counterexample_found) {
    const hia::InjectivityCounterexample& ce = *v.counterexample;
    ordered_json cj;
    cj["exponent"] = ce.exponent;
    cj["d_members"] = ce.d_members;
    cj["b_members"] = ce.b_members;
    cj["b_images"] = ce.b_images;
    j["counterexample"] = std::move(cj);
    text += "bounded search: counterexample found\n";
    text += "  exponent: " + std::to_string(ce.exponent) + "\n";
    text += "  D: " + join_elems(ce.d_members) + "\n";
    text += "  B: " + join_elems(ce.b_members) + "\n";
    std::string arrows;
    for (std::size_t i = 0; i < ce.b_members.size(); ++i)
      arrows += (i ? " " : "") + std::to_string(ce.b_members[i]) + "->" +
                std::to_string(ce.b_images[i]);
    text += "  h: " + arrows + "\n";
  } else {
    text += "bounded search: no counterexample (exponent <= " +
            std::to_string(v.exponent_bound) + ", subalgebra size <= " +
            std::to_string(v.subalgebra_bound) + ", " +
            std::to_string(v.subalgebras_checked) + " subalgebras, " +
            std::to_string(v.homomorphisms_checked) + " homomorphisms)\n";
  }
  emit(j, format, text);
  return v.counterexample_found ? 1 : 0;
}

int run_enumerate(std::size_t max_size, bool si_only, const std::string& out_dir,
                  const std::string& format) {
  hia::CatalogConfig cfg;
  cfg.max_size = max_size;
  cfg.si_only = si_only;
  const std::vector<hia::CatalogEntry> entries = hia::build_catalog(cfg);

  ordered_json index;
  index["max_size"] = max_size;
  index["si_only"] = si_only;
  index["count"] = entries.size();
  ordered_json arr = ordered_json::array();
  std::string text = "catalog entries: " + std::to_string(entries.size()) + "\n";
  for (const hia::CatalogEntry& e : entries) {
    ordered_json item;
    item["name"] = e.algebra.name();
    item["size"] = e.size;
    item["si"] = e.si;
    item["center_size"] = e.center_size;
    item["congruence_count"] = e.congruence_count;
    item["involutive_filter_count"] = e.involutive_filter_count;
    if (!out_dir.empty()) item["file"] = e.algebra.name() + ".json";
    arr.push_back(std::move(item));
    text += e.algebra.name() + " size=" + std::to_string(e.size) +
            " si=" + (e.si ? "true" : "false") +
            " center=" + std::to_string(e.center_size) +
            " congruences=" + std::to_string(e.congruence_count) + "\n";
  }
  index["entries"] = std::move(arr);

  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (const hia::CatalogEntry& e : entries)
      hia::save_algebra(e.algebra,
                        (std::filesystem::path(out_dir) / (e.algebra.name() + ".json"))
                            .string());
    hia::write_text_file((std::filesystem::path(out_dir) / "index.json").string(),
                         index.dump(2) + "\n");
    text += "wrote: " + out_dir + "\n";
  }
  emit(index, format, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for finite Heyting algebras with involution"};
  app.require_subcommand(1);
  int rc = 0;

  auto add_format = [](CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  // check
  {
    auto* cmd = app.add_subcommand("check", "validate an algebra file");
    auto file = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("text");
    cmd->add_option("file", *file, "algebra JSON file")->required();
    add_format(cmd, *format);
    cmd->callback([&rc, file, format] { rc = run_check(*file, *format); });
  }
  // center
  {
    auto* cmd = app.add_subcommand("center", "elements with matching negation and involution");
    auto file = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("text");
    cmd->add_option("file", *file, "algebra JSON file")->required();
    add_format(cmd, *format);
    cmd->callback([&rc, file, format] { rc = run_center(*file, *format); });
  }
  // filters
  {
    auto* cmd = app.add_subcommand("filters", "list filters");
    auto file = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("text");
    auto inv_only = std::make_shared<bool>(false);
    cmd->add_option("file", *file, "algebra JSON file")->required();
    cmd->add_flag("--involutive-only", *inv_only, "list involutive filters only");
    add_format(cmd, *format);
    cmd->callback(
        [&rc, file, inv_only, format] { rc = run_filters(*file, *inv_only, *format); });
  }
  // congruences
  {
    auto* cmd = app.add_subcommand("congruences", "list congruences");
    auto file = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("text");
    cmd->add_option("file", *file, "algebra JSON file")->required();
    add_format(cmd, *format);
    cmd->callback([&rc, file, format] { rc = run_congruences(*file, *format); });
  }
  // si
  {
    auto* cmd = app.add_subcommand("si", "subdirect irreducibility");
    auto file = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("text");
    cmd->add_option("file", *file, "algebra JSON file")->required();
    add_format(cmd, *format);
    cmd->callback([&rc, file, format] { rc = run_si(*file, *format); });
  }
  // killer
  {
    auto* cmd = app.add_subcommand("killer", "synthesize the killer term");
    auto file = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("text");
    cmd->add_option("file", *file, "algebra JSON file")->required();
    add_format(cmd, *format);
    cmd->callback([&rc, file, format] { rc = run_killer(*file, *format); });
  }
  // discriminator
  {
    auto* cmd = app.add_subcommand("discriminator", "synthesize the discriminator");
    auto file = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("text");
    cmd->add_option("file", *file, "algebra JSON file")->required();
    add_format(cmd, *format);
    cmd->callback([&rc, file, format] { rc = run_discriminator(*file, *format); });
  }
  // eval
  {
    auto* cmd = app.add_subcommand("eval", "evaluate a term");
    auto file = std::make_shared<std::string>();
    auto term = std::make_shared<std::string>();
    auto env = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("text");
    cmd->add_option("file", *file, "algebra JSON file")->required();
    cmd->add_option("--term", *term, "term text")->required();
    cmd->add_option("--env", *env, "comma-separated name=value pairs");
    add_format(cmd, *format);
    cmd->callback(
        [&rc, file, term, env, format] { rc = run_eval(*file, *term, *env, *format); });
  }
  // identity
  {
    auto* cmd = app.add_subcommand("identity", "check an identity exhaustively");
    auto file = std::make_shared<std::string>();
    auto lhs = std::make_shared<std::string>();
    auto rhs = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("text");
    cmd->add_option("file", *file, "algebra JSON file")->required();
    cmd->add_option("--lhs", *lhs, "left-hand term")->required();
    cmd->add_option("--rhs", *rhs, "right-hand term")->required();
    add_format(cmd, *format);
    cmd->callback([&rc, file, lhs, rhs, format] {
      rc = run_identity(*file, *lhs, *rhs, *format);
    });
  }
  // power
  {
    auto* cmd = app.add_subcommand("power", "direct power");
    auto file = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto exponent = std::make_shared<std::size_t>(2);
    auto format = std::make_shared<std::string>("text");
    cmd->add_option("file", *file, "algebra JSON file")->required();
    cmd->add_option("-n,--exponent", *exponent, "exponent")->required();
    cmd->add_option("-o,--out", *out, "write the materialized power here");
    add_format(cmd, *format);
    cmd->callback([&rc, file, exponent, out, format] {
      rc = run_power(*file, *exponent, *out, false, *format);
    });
  }
  // boolean-power
  {
    auto* cmd = app.add_subcommand("boolean-power", "finite boolean power");
    auto file = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto atoms = std::make_shared<std::size_t>(1);
    auto format = std::make_shared<std::string>("text");
    cmd->add_option("file", *file, "algebra JSON file")->required();
    cmd->add_option("-k,--atoms", *atoms, "atom count of the boolean algebra")
        ->required();
    cmd->add_option("-o,--out", *out, "write the materialized power here");
    add_format(cmd, *format);
    cmd->callback([&rc, file, atoms, out, format] {
      rc = run_power(*file, *atoms, *out, true, *format);
    });
  }
  // injective
  {
    auto* cmd = app.add_subcommand("injective", "bounded injectivity check");
    auto generator = std::make_shared<std::string>();
    auto candidate = std::make_shared<std::string>();
    auto exponent_bound = std::make_shared<std::size_t>(hia::kDefaultExponentBound);
    auto subalgebra_bound =
        std::make_shared<std::size_t>(hia::kDefaultSubalgebraBound);
    auto format = std::make_shared<std::string>("text");
    cmd->add_option("--generator", *generator, "generator algebra file")->required();
    cmd->add_option("--candidate", *candidate, "candidate subalgebra file")
        ->required();
    cmd->add_option("--exponent-bound", *exponent_bound, "largest power exponent");
    cmd->add_option("--subalgebra-bound", *subalgebra_bound,
                    "largest test subalgebra");
    add_format(cmd, *format);
    cmd->callback([&rc, generator, candidate, exponent_bound, subalgebra_bound,
                   format] {
      rc = run_injective(*generator, *candidate, *exponent_bound, *subalgebra_bound,
                         *format);
    });
  }
  // enumerate
  {
    auto* cmd = app.add_subcommand("enumerate", "catalog small algebras");
    auto max_size = std::make_shared<std::size_t>(8);
    auto si_only = std::make_shared<bool>(false);
    auto out_dir = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("text");
    cmd->add_option("--max-size", *max_size, "largest carrier size");
    cmd->add_flag("--si-only", *si_only, "keep subdirectly irreducible entries only");
    cmd->add_option("-o,--out", *out_dir, "write algebra files and index here");
    add_format(cmd, *format);
    cmd->callback([&rc, max_size, si_only, out_dir, format] {
      rc = run_enumerate(*max_size, *si_only, *out_dir, *format);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const hia::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

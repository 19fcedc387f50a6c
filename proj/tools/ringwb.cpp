// Command-line front end for the finite-ring workbench. Every verb reads and
// writes newline-delimited JSON; --pretty appends human-readable summary
// lines prefixed with "# ". Exit codes: 0 success (or informational report),
// 1 property violation (failed check, refutation), 2 invalid input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ringwb/conditions.hpp"
#include "ringwb/involution.hpp"
#include "ringwb/json_io.hpp"
#include "ringwb/maps.hpp"
#include "ringwb/peirce.hpp"
#include "ringwb/ring.hpp"
#include "ringwb/search.hpp"
#include "ringwb/verify.hpp"

namespace {

using ringwb::elem_t;
using ringwb::json;

std::size_t max_ring_size_from_env() {
  const char* env = std::getenv("WORKBENCH_MAX_RING_SIZE");
  if (!env) return ringwb::kDefaultMaxRingSize;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (!end || *end != '\0' || v == 0)
    throw ringwb::invalid_input(
        "WORKBENCH_MAX_RING_SIZE must be a positive integer");
  return static_cast<std::size_t>(v);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ringwb::invalid_input("cannot open file: " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded())
    throw ringwb::invalid_input("malformed JSON in file: " + path);
  return j;
}

// Shared per-verb options and output plumbing.
struct Io {
  std::string out_path;
  bool pretty = false;
  std::ofstream file;

  std::ostream& out() {
    if (!out_path.empty() && !file.is_open()) {
      file.open(out_path);
      if (!file) throw ringwb::invalid_input("cannot open --out file: " + out_path);
    }
    return out_path.empty() ? std::cout : file;
  }
  void emit(const json& j) { out() << ringwb::canonical_dump(j) << "\n"; }
  void note(const std::string& line) {
    if (pretty) out() << "# " << line << "\n";
  }
};

int emit_error(Io& io, const std::string& msg, int code) {
  json j;
  j["error"] = msg;
  io.emit(j);
  return code;
}

ringwb::FiniteRing load_ring(const std::string& path, int jobs,
                             std::size_t max_size) {
  try {
    return ringwb::validate_ring(ringwb::ring_from_json(read_json_file(path)),
                                 jobs, max_size);
  } catch (const ringwb::axiom_violation& e) {
    // For verbs consuming a ring, a broken ring is a broken input.
    throw ringwb::invalid_input("ring file " + path + ": " + e.what());
  }
}

ringwb::AntiAutomorphism load_involution(const ringwb::FiniteRing& ring,
                                         const std::string& path, int jobs) {
  try {
    return ringwb::involution_from_json(ring, read_json_file(path), jobs);
  } catch (const ringwb::axiom_violation& e) {
    throw ringwb::invalid_input("involution file " + path + ": " + e.what());
  }
}

void log_hashes(const ringwb::FiniteRing& ring,
                const ringwb::AntiAutomorphism* inv) {
  std::cerr << "ringwb: ring=" << ringwb::ring_id(ring);
  if (inv) std::cerr << " inv=" << ringwb::involution_id(*inv);
  std::cerr << "\n";
}

// Element addressing: decimal index, exact label, or the matrix-unit aliases
// E11/E12/E21/E22 on make_m2 rings.
elem_t parse_elem(const ringwb::FiniteRing& ring, const std::string& s) {
  if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) {
    try {
      return ringwb::checked_index(ring, std::stoll(s));
    } catch (const std::out_of_range&) {
      throw ringwb::invalid_input("element index out of range: " + s);
    }
  }
  if (auto hit = ring.find_label(s)) return *hit;
  if (s.size() == 3 && s[0] == 'E') {
    std::size_t n = ringwb::detail::root_of(ring.size(), 4);
    if (n >= 2) {
      auto unit = [&](std::size_t i, std::size_t j) {
        return ringwb::m2_label(i == 1 && j == 1, i == 1 && j == 2,
                                i == 2 && j == 1, i == 2 && j == 2);
      };
      std::size_t i = s[1] - '0', j = s[2] - '0';
      if (i >= 1 && i <= 2 && j >= 1 && j <= 2)
        if (auto hit = ring.find_label(unit(i, j))) return *hit;
    }
  }
  throw ringwb::invalid_input("cannot resolve element \"" + s + "\"");
}

ringwb::RingMap load_map(const ringwb::FiniteRing& ring,
                         const std::string& spec) {
  if (spec == "zero") return ringwb::zero_map(ring);
  if (spec == "example1") return ringwb::make_example1_map(ring);
  if (spec == "example2") return ringwb::make_example2_map(ring);
  return ringwb::map_from_json(ring, read_json_file(spec));
}

struct CommonOpts {
  std::string ring_path;
  std::string inv_path;
  int jobs = 1;
};

// ---------------------------------------------------------------------------

int run_ring_make(Io& io, const std::string& family, long long n,
                  std::size_t max_size) {
  ringwb::FiniteRing ring = [&] {
    if (n < 0) throw ringwb::invalid_input("--n must be nonnegative");
    std::size_t un = static_cast<std::size_t>(n);
    if (family == "zmod") return ringwb::make_zmod(un, max_size);
    if (family == "m2") return ringwb::make_m2(un, max_size);
    if (family == "dual") return ringwb::make_dual(un, max_size);
    throw ringwb::invalid_input("unknown ring family: " + family);
  }();
  log_hashes(ring, nullptr);
  io.emit(ringwb::ring_to_json(ring));
  io.note("ring " + family + "(" + std::to_string(n) +
          "): size=" + std::to_string(ring.size()) +
          ", id=" + ringwb::ring_id(ring));
  return 0;
}

int run_ring_validate(Io& io, const CommonOpts& o, std::size_t max_size) {
  json doc = read_json_file(o.ring_path);
  try {
    ringwb::FiniteRing ring =
        ringwb::validate_ring(ringwb::ring_from_json(doc), o.jobs, max_size);
    log_hashes(ring, nullptr);
    io.emit(ringwb::ring_to_json(ring));
    io.note("valid ring, size=" + std::to_string(ring.size()));
    return 0;
  } catch (const ringwb::axiom_violation& e) {
    return emit_error(io, e.what(), 1);
  }
}

int run_inv_make(Io& io, const CommonOpts& o, const std::string& family,
                 std::size_t max_size) {
  ringwb::FiniteRing ring = load_ring(o.ring_path, o.jobs, max_size);
  auto fam = [&]() -> ringwb::InvolutionFamily {
    if (family == "adjugate_m2") return ringwb::InvolutionFamily::adjugate_m2;
    if (family == "transpose_m2") return ringwb::InvolutionFamily::transpose_m2;
    if (family == "neg_b_dual") return ringwb::InvolutionFamily::neg_b_dual;
    if (family == "identity") return ringwb::InvolutionFamily::identity;
    throw ringwb::invalid_input("unknown involution family: " + family);
  }();
  try {
    ringwb::AntiAutomorphism s = ringwb::validate_antiautomorphism(
        ring, ringwb::builtin_involution(ring, fam), false, o.jobs);
    log_hashes(ring, &s);
    io.emit(ringwb::involution_to_json(s));
    io.note("involution " + family + (s.is_involution ? "" : " (not self-inverse)"));
    return 0;
  } catch (const ringwb::axiom_violation& e) {
    return emit_error(io, e.what(), 1);
  }
}

int run_inv_validate(Io& io, const CommonOpts& o, bool require_involution,
                     std::size_t max_size) {
  ringwb::FiniteRing ring = load_ring(o.ring_path, o.jobs, max_size);
  json doc = read_json_file(o.inv_path);
  try {
    ringwb::AntiAutomorphism s = ringwb::involution_from_json(ring, doc, o.jobs);
    if (require_involution && !s.is_involution)
      return emit_error(io, "valid anti-automorphism but not an involution", 1);
    log_hashes(ring, &s);
    io.emit(ringwb::involution_to_json(s));
    return 0;
  } catch (const ringwb::axiom_violation& e) {
    return emit_error(io, e.what(), 1);
  }
}

int run_idem_find(Io& io, const CommonOpts& o, bool symmetric,
                  std::size_t max_size) {
  ringwb::FiniteRing ring = load_ring(o.ring_path, o.jobs, max_size);
  std::optional<ringwb::AntiAutomorphism> inv;
  if (!o.inv_path.empty()) inv = load_involution(ring, o.inv_path, o.jobs);
  log_hashes(ring, inv ? &*inv : nullptr);
  auto idems =
      ringwb::find_idempotents(ring, symmetric, inv ? &*inv : nullptr);
  json j;
  j["idempotents"] = idems;
  json labels = json::array();
  for (elem_t e : idems) labels.push_back(ring.label(e));
  j["labels"] = std::move(labels);
  io.emit(j);
  io.note(std::to_string(idems.size()) + " nontrivial" +
          (symmetric ? " symmetric" : "") + " idempotent(s)");
  return 0;
}

int run_peirce(Io& io, const CommonOpts& o, const std::string& e_spec,
               const std::string& x_spec, std::size_t max_size) {
  ringwb::FiniteRing ring = load_ring(o.ring_path, o.jobs, max_size);
  std::optional<ringwb::AntiAutomorphism> inv;
  if (!o.inv_path.empty()) inv = load_involution(ring, o.inv_path, o.jobs);
  log_hashes(ring, inv ? &*inv : nullptr);
  ringwb::PeirceFrame frame =
      ringwb::make_frame(ring, parse_elem(ring, e_spec), inv);
  elem_t x = parse_elem(ring, x_spec);
  ringwb::PeirceSplit s = ringwb::peirce_project(frame, x);
  json j;
  j["e"] = frame.e;
  j["x"] = x;
  j["x11"] = s.x11;
  j["x12"] = s.x12;
  j["x21"] = s.x21;
  j["x22"] = s.x22;
  io.emit(j);
  io.note("x = " + ring.label(s.x11) + " + " + ring.label(s.x12) + " + " +
          ring.label(s.x21) + " + " + ring.label(s.x22));
  return 0;
}

int run_conditions(Io& io, const CommonOpts& o, const std::string& e_spec,
                   std::size_t max_size) {
  ringwb::FiniteRing ring = load_ring(o.ring_path, o.jobs, max_size);
  std::optional<ringwb::AntiAutomorphism> inv;
  if (!o.inv_path.empty()) inv = load_involution(ring, o.inv_path, o.jobs);
  log_hashes(ring, inv ? &*inv : nullptr);
  elem_t e = parse_elem(ring, e_spec);
  json j;
  j["M1"] = ringwb::condition_to_json(ringwb::check_M1(ring, o.jobs));
  j["M2"] = ringwb::condition_to_json(ringwb::check_M2(ring, e, o.jobs));
  j["M3"] = ringwb::condition_to_json(ringwb::check_M3(ring, e, o.jobs));
  j["prime"] = ringwb::primality_to_json(ringwb::is_prime(ring, o.jobs));
  j["ring_id"] = ringwb::ring_id(ring);
  j["e"] = e;
  if (inv)
    j["involution_id"] = ringwb::involution_id(*inv);
  else
    j["involution_id"] = nullptr;
  io.emit(j);
  auto verdict = [&](const char* name, bool pass) {
    io.note(std::string(name) + ": " + (pass ? "pass" : "fail"));
  };
  verdict("M1", j["M1"]["pass"].get<bool>());
  verdict("M2", j["M2"]["pass"].get<bool>());
  verdict("M3", j["M3"]["pass"].get<bool>());
  verdict("prime", j["prime"]["pass"].get<bool>());
  return 0;
}

int run_map_check(Io& io, const CommonOpts& o, const std::string& map_spec,
                  const std::string& identity, std::size_t max_size) {
  ringwb::FiniteRing ring = load_ring(o.ring_path, o.jobs, max_size);
  auto kind = ringwb::identity_kind_from(identity);
  if (!kind) throw ringwb::invalid_input("unknown identity kind: " + identity);
  std::optional<ringwb::AntiAutomorphism> inv;
  if (!o.inv_path.empty()) inv = load_involution(ring, o.inv_path, o.jobs);
  log_hashes(ring, inv ? &*inv : nullptr);
  ringwb::RingMap m = load_map(ring, map_spec);
  ringwb::IdentityResult res =
      ringwb::check_identity(m, *kind, inv ? &*inv : nullptr, o.jobs);
  json j;
  j["identity"] = identity;
  j["pass"] = res.pass;
  if (res.witness)
    j["witness"] = json::array({res.witness->a, res.witness->b});
  else
    j["witness"] = nullptr;
  j["ring_id"] = ringwb::ring_id(ring);
  io.emit(j);
  if (res.witness)
    io.note("fails at a=" + ring.label(res.witness->a) +
            ", b=" + ring.label(res.witness->b));
  else
    io.note("holds for all pairs");
  return res.pass ? 0 : 1;
}

int run_map_search(Io& io, const CommonOpts& o, std::size_t limit,
                   std::uint64_t node_budget, std::size_t max_size) {
  ringwb::FiniteRing ring = load_ring(o.ring_path, o.jobs, max_size);
  ringwb::AntiAutomorphism inv = load_involution(ring, o.inv_path, o.jobs);
  log_hashes(ring, &inv);
  ringwb::SearchConfig cfg{inv, limit, node_budget, true};
  ringwb::SearchOutcome out = ringwb::enumerate_reverse_maps(ring, cfg);
  for (const ringwb::RingMap& m : out.maps) io.emit(ringwb::map_to_json(m));
  json summary;
  summary["count"] = out.maps.size();
  summary["exhausted"] = out.exhausted;
  summary["nodes"] = out.nodes;
  io.emit(summary);
  io.note(std::to_string(out.maps.size()) + " map(s), " +
          (out.exhausted ? "space exhausted" : "search truncated"));
  return 0;
}

int run_verify_theorem(Io& io, const CommonOpts& o, const std::string& e_spec,
                       std::size_t limit, std::uint64_t node_budget,
                       std::size_t max_size) {
  ringwb::FiniteRing ring = load_ring(o.ring_path, o.jobs, max_size);
  ringwb::AntiAutomorphism inv = load_involution(ring, o.inv_path, o.jobs);
  log_hashes(ring, &inv);
  elem_t e = parse_elem(ring, e_spec);
  ringwb::SearchConfig cfg{inv, limit, node_budget, true};
  ringwb::VerificationReport rep =
      ringwb::verify_theorem(ring, inv, e, cfg, o.jobs);
  io.emit(ringwb::report_to_json(rep));
  io.note("theorem: " + std::string(rep.theorem_pass ? "pass" : "fail") +
          "; " + rep.notes);
  return rep.refutation ? 1 : 0;
}

int run_report(Io& io, const std::string& path) {
  json j = read_json_file(path);
  ringwb::detail::require_keys(
      j,
      {"ring_id", "frame", "conditions", "search", "maps_checked",
       "lemma_results", "proposition1", "theorem_result", "refutation",
       "notes"},
      "report");
  std::ostream& os = io.out();
  os << "verification report for ring " << j["ring_id"].get<std::string>()
     << "\n";
  os << "  frame: e=" << j["frame"]["e"] << " involution "
     << j["frame"]["involution"].get<std::string>() << "\n";
  for (const char* c : {"M1", "M2", "M3", "prime"}) {
    const json& cj = j["conditions"][c];
    os << "  " << c << ": " << (cj["pass"].get<bool>() ? "pass" : "fail");
    if (!cj["witness"].is_null()) os << " (witness " << cj["witness"] << ")";
    os << "\n";
  }
  os << "  search: " << j["search"]["count"] << " map(s), exhausted="
     << (j["search"]["exhausted"].get<bool>() ? "true" : "false")
     << ", nodes=" << j["search"]["nodes"] << "\n";
  for (int i = 1; i <= 6; ++i) {
    const json& lj = j["lemma_results"]["lemma" + std::to_string(i)];
    os << "  lemma " << i << ": " << (lj["pass"].get<bool>() ? "pass" : "fail");
    if (!lj["witness"].is_null())
      os << " (" << lj["witness"].get<std::string>() << ")";
    os << "\n";
  }
  os << "  proposition 1: "
     << (j["proposition1"]["pass"].get<bool>() ? "pass" : "fail") << "\n";
  os << "  theorem: " << j["theorem_result"].get<std::string>() << "\n";
  os << "  notes: " << j["notes"].get<std::string>() << "\n";
  return j["refutation"].get<bool>() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-ring workbench: table rings, involutions, Peirce "
               "frames, *-reverse derivable maps"};
  app.require_subcommand(1);

  Io io;
  CommonOpts common;
  std::string family, e_spec, x_spec, map_spec, identity, report_path;
  long long n = 0;
  std::size_t limit = 0;
  std::uint64_t node_budget = 10'000'000;
  bool symmetric = false, require_involution = false;

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--out", io.out_path, "write JSON output to a file");
    sub->add_flag("--pretty", io.pretty, "append a rendered summary");
    sub->add_option("--jobs", common.jobs, "worker threads for scans")
        ->check(CLI::Range(1, 256));
  };

  CLI::App* ring_make = app.add_subcommand("ring-make", "construct a builtin ring");
  ring_make->add_option("--family", family, "zmod | m2 | dual")->required();
  ring_make->add_option("--n", n, "modulus / matrix base")->required();
  add_io(ring_make);

  CLI::App* ring_validate =
      app.add_subcommand("ring-validate", "check all ring axioms of a ring file");
  ring_validate->add_option("--ring", common.ring_path)->required();
  add_io(ring_validate);

  CLI::App* inv_make =
      app.add_subcommand("inv-make", "emit a builtin involution for a ring");
  inv_make->add_option("--ring", common.ring_path)->required();
  inv_make
      ->add_option("--family", family,
                   "adjugate_m2 | transpose_m2 | neg_b_dual | identity")
      ->required();
  add_io(inv_make);

  CLI::App* inv_validate =
      app.add_subcommand("inv-validate", "validate an involution file");
  inv_validate->add_option("--ring", common.ring_path)->required();
  inv_validate->add_option("--inv", common.inv_path)->required();
  inv_validate->add_flag("--require-involution", require_involution,
                         "reject anti-automorphisms that are not involutions");
  add_io(inv_validate);

  CLI::App* idem_find =
      app.add_subcommand("idem-find", "list nontrivial idempotents");
  idem_find->add_option("--ring", common.ring_path)->required();
  idem_find->add_option("--inv", common.inv_path);
  idem_find->add_flag("--symmetric", symmetric,
                      "keep only fixed points of the involution");
  add_io(idem_find);

  CLI::App* peirce = app.add_subcommand("peirce", "Peirce-decompose an element");
  peirce->add_option("--ring", common.ring_path)->required();
  peirce->add_option("--inv", common.inv_path);
  peirce->add_option("--e", e_spec, "idempotent (index or label)")->required();
  peirce->add_option("--x", x_spec, "element to decompose")->required();
  add_io(peirce);

  CLI::App* conditions =
      app.add_subcommand("conditions", "decide M1, M2, M3 and primality");
  conditions->add_option("--ring", common.ring_path)->required();
  conditions->add_option("--inv", common.inv_path);
  conditions->add_option("--e", e_spec, "idempotent (index or label)")->required();
  add_io(conditions);

  CLI::App* map_check =
      app.add_subcommand("map-check", "decide a functional identity for a map");
  map_check->add_option("--ring", common.ring_path)->required();
  map_check->add_option("--map", map_spec,
                        "map file or builtin: zero | example1 | example2")
      ->required();
  map_check
      ->add_option("--identity", identity,
                   "additive | derivation | reverse_derivation | star_reverse "
                   "| sigma_reverse")
      ->required();
  map_check->add_option("--inv", common.inv_path);
  add_io(map_check);

  CLI::App* map_search = app.add_subcommand(
      "map-search", "enumerate all maps satisfying the twisted reverse identity");
  map_search->add_option("--ring", common.ring_path)->required();
  map_search->add_option("--inv", common.inv_path)->required();
  map_search->add_option("--limit", limit, "max maps to emit (0 = all)");
  map_search->add_option("--node-budget", node_budget, "backtracking node cap");
  add_io(map_search);

  CLI::App* verify = app.add_subcommand(
      "verify-theorem", "replay the additivity pipeline on one instance");
  verify->add_option("--ring", common.ring_path)->required();
  verify->add_option("--inv", common.inv_path)->required();
  verify->add_option("--e", e_spec, "symmetric idempotent")->required();
  verify->add_option("--limit", limit, "max maps to check (0 = all)");
  verify->add_option("--node-budget", node_budget, "backtracking node cap");
  add_io(verify);

  CLI::App* report = app.add_subcommand("report", "render a verification report");
  report->add_option("file", report_path, "report JSON file")->required();
  add_io(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const std::size_t max_size = max_ring_size_from_env();
    if (app.got_subcommand(ring_make)) return run_ring_make(io, family, n, max_size);
    if (app.got_subcommand(ring_validate))
      return run_ring_validate(io, common, max_size);
    if (app.got_subcommand(inv_make))
      return run_inv_make(io, common, family, max_size);
    if (app.got_subcommand(inv_validate))
      return run_inv_validate(io, common, require_involution, max_size);
    if (app.got_subcommand(idem_find))
      return run_idem_find(io, common, symmetric, max_size);
    if (app.got_subcommand(peirce))
      return run_peirce(io, common, e_spec, x_spec, max_size);
    if (app.got_subcommand(conditions))
      return run_conditions(io, common, e_spec, max_size);
    if (app.got_subcommand(map_check))
      return run_map_check(io, common, map_spec, identity, max_size);
    if (app.got_subcommand(map_search))
      return run_map_search(io, common, limit, node_budget, max_size);
    if (app.got_subcommand(verify))
      return run_verify_theorem(io, common, e_spec, limit, node_budget, max_size);
    if (app.got_subcommand(report)) return run_report(io, report_path);
    return 2;
  } catch (const ringwb::invalid_input& e) {
    return emit_error(io, e.what(), 2);
  } catch (const ringwb::axiom_violation& e) {
    return emit_error(io, e.what(), 2);
  } catch (const std::exception& e) {
    return emit_error(io, std::string("internal error: ") + e.what(), 2);
  }
}

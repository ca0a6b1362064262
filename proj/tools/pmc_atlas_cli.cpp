// pmc-atlas: enumerate and verify potential maximal cliques of small graphs,
// build the extremal families, and evaluate every counting bound with exact
// integers.
//
// Exit codes: 0 all checks pass, 1 a verified-by-theory assertion failed,
// 2 usage or input error, 3 a budget/limit was exceeded.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pmc_atlas/pmc_atlas.hpp"

using json = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------------------
// shared option plumbing

struct CommonOptions {
  std::string input_file;
  std::string family;
  std::string cover_spec;
  std::string format = "json";
  int jobs = 1;
  int limit = pmca::kDefaultEnumerationLimit;
};

int default_limit() {
  if (const char* env = std::getenv("PMC_ATLAS_LIMIT")) {
    try {
      return std::stoi(env);
    } catch (...) {
      throw pmca::InputError("PMC_ATLAS_LIMIT is not an integer");
    }
  }
  return pmca::kDefaultEnumerationLimit;
}

void add_common_options(CLI::App* cmd, CommonOptions& opts, bool with_cover = true) {
  cmd->add_option("--input", opts.input_file, "graph file (edge list, or graph6 by content)");
  cmd->add_option("--family", opts.family,
                  "family spec: star:<n> | gk:<k> | m:<file>:<cover> | random:<k>:<n>:<p>:<seed>");
  if (with_cover) cmd->add_option("--cover", opts.cover_spec, "comma-separated cover vertices");
  cmd->add_option("--format", opts.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--jobs", opts.jobs, "worker threads (affects wall clock only)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--limit", opts.limit, "brute-force vertex cap (default 26, env PMC_ATLAS_LIMIT)");
}

std::vector<int> parse_vertex_list(const std::string& spec) {
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (...) {
      throw pmca::InputError("bad vertex list entry '" + item + "'");
    }
  }
  return out;
}

pmca::EdgeProbability parse_probability(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    try {
      return {std::stoull(text.substr(0, slash)), std::stoull(text.substr(slash + 1))};
    } catch (...) {
      throw pmca::InputError("bad probability '" + text + "'");
    }
  }
  auto dot = text.find('.');
  try {
    if (dot == std::string::npos) return {std::stoull(text), 1};
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::uint64_t den = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    return {std::stoull(digits), den};
  } catch (...) {
    throw pmca::InputError("bad probability '" + text + "'");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pmca::InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------
// family specs and width dispatch

struct FamilySpec {
  enum class Kind { kStar, kGk, kM, kRandom } kind;
  int star_n = 0;
  int gk_k = 0;
  std::string m_file;
  std::vector<int> m_cover;
  int rand_k = 0, rand_n = 0;
  pmca::EdgeProbability rand_p;
  std::uint64_t rand_seed = 0;
};

FamilySpec parse_family(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.empty()) throw pmca::InputError("empty family spec");
  try {
    FamilySpec f;
    if (parts[0] == "star" && parts.size() == 2) {
      f.kind = FamilySpec::Kind::kStar;
      f.star_n = std::stoi(parts[1]);
      return f;
    }
    if (parts[0] == "gk" && parts.size() == 2) {
      f.kind = FamilySpec::Kind::kGk;
      f.gk_k = std::stoi(parts[1]);
      return f;
    }
    if (parts[0] == "m" && parts.size() == 3) {
      f.kind = FamilySpec::Kind::kM;
      f.m_file = parts[1];
      f.m_cover = parse_vertex_list(parts[2]);
      return f;
    }
    if (parts[0] == "random" && parts.size() == 5) {
      f.kind = FamilySpec::Kind::kRandom;
      f.rand_k = std::stoi(parts[1]);
      f.rand_n = std::stoi(parts[2]);
      f.rand_p = parse_probability(parts[3]);
      f.rand_seed = std::stoull(parts[4]);
      return f;
    }
  } catch (const pmca::Error&) {
    throw;
  } catch (...) {
    // fall through to the generic message
  }
  throw pmca::InputError("bad family spec '" + spec + "'");
}

/// Vertex count the instance will need, for picking the set width.
long long required_width(const CommonOptions& opts) {
  if (!opts.family.empty() && !opts.input_file.empty())
    throw pmca::InputError("--input and --family are mutually exclusive");
  if (!opts.family.empty()) {
    FamilySpec f = parse_family(opts.family);
    switch (f.kind) {
      case FamilySpec::Kind::kStar:
        return f.star_n;
      case FamilySpec::Kind::kGk:
        return static_cast<long long>(f.gk_k) + static_cast<long long>(f.gk_k) * (f.gk_k - 1) / 2;
      case FamilySpec::Kind::kM: {
        auto data = pmca::parse_graph_auto(read_file(f.m_file));
        return data.n + (1LL << f.m_cover.size()) - 1;
      }
      case FamilySpec::Kind::kRandom:
        return f.rand_n;
    }
  }
  if (!opts.input_file.empty()) return pmca::parse_graph_auto(read_file(opts.input_file)).n;
  throw pmca::InputError("one of --input or --family is required");
}

template <unsigned W>
struct Instance {
  pmca::Graph<W> graph;
  std::optional<pmca::VertexCover<W>> cover;
  std::string cover_source;  // "family", "given", "minimum"
  std::string descriptor;
  std::optional<pmca::PairIncidenceGraph<W>> gk;
  bool is_cover_supergraph = false;
};

template <unsigned W>
Instance<W> load_instance(const CommonOptions& opts) {
  Instance<W> inst;
  if (!opts.family.empty()) {
    FamilySpec f = parse_family(opts.family);
    inst.descriptor = opts.family;
    switch (f.kind) {
      case FamilySpec::Kind::kStar:
        inst.graph = pmca::build_star<W>(f.star_n);
        inst.cover = pmca::VertexCover<W>{pmca::Bitset<W>::of({0}), 1};
        inst.cover_source = "family";
        break;
      case FamilySpec::Kind::kGk: {
        auto gk = pmca::build_pair_incidence_graph<W>(f.gk_k);
        inst.graph = gk.graph;
        inst.cover = gk.integer_cover();
        inst.cover_source = "family";
        inst.gk = std::move(gk);
        break;
      }
      case FamilySpec::Kind::kM: {
        auto data = pmca::parse_graph_auto(read_file(f.m_file));
        auto base = pmca::Graph<W>::from_edges(data.n, data.edges);
        pmca::Bitset<W> cover_set;
        for (int v : f.m_cover) {
          base.require_vertex(v);
          cover_set.set(v);
        }
        auto m = pmca::build_cover_supergraph(base, pmca::make_vertex_cover(base, cover_set));
        inst.graph = m.graph;
        inst.cover = pmca::VertexCover<W>{m.inner, m.k};
        inst.cover_source = "family";
        inst.is_cover_supergraph = true;
        break;
      }
      case FamilySpec::Kind::kRandom: {
        auto r = pmca::random_graph_with_cover<W>(f.rand_k, f.rand_n, f.rand_p, f.rand_seed);
        inst.graph = r.graph;
        inst.cover = r.cover;
        inst.cover_source = "family";
        break;
      }
    }
  } else {
    auto data = pmca::parse_graph_auto(read_file(opts.input_file));
    inst.graph = pmca::Graph<W>::from_edges(data.n, data.edges);
    inst.descriptor = opts.input_file;
  }
  if (!opts.cover_spec.empty()) {
    pmca::Bitset<W> cover_set;
    for (int v : parse_vertex_list(opts.cover_spec)) {
      inst.graph.require_vertex(v);
      cover_set.set(v);
    }
    inst.cover = pmca::make_vertex_cover(inst.graph, cover_set);  // validated, not minimized
    inst.cover_source = "given";
  }
  return inst;
}

// ---------------------------------------------------------------------------
// serialization helpers

std::string big(const pmca::BigInt& v) { return v.str(); }

json bound_report_json(const pmca::BoundReport& r) {
  json terms;
  terms["three_parts"] = big(r.free_terms.three_parts);
  terms["inner_one_part"] = big(r.free_terms.inner_one_part);
  terms["inner_two_parts"] = big(r.free_terms.inner_two_parts);
  terms["inner_three_parts"] = big(r.free_terms.inner_three_parts);
  json out;
  out["k"] = r.k;
  out["n"] = r.n;
  out["upper_total"] = big(r.upper_total);
  out["free_bound_terms"] = terms;
  out["nonfree_bound"] = big(r.nonfree_bound);
  out["lower_sum"] = big(r.lower_sum);
  if (r.observed_total) out["observed_total"] = big(pmca::BigInt(*r.observed_total));
  if (r.observed_free) out["observed_free"] = big(pmca::BigInt(*r.observed_free));
  if (r.observed_nonfree) out["observed_nonfree"] = big(pmca::BigInt(*r.observed_nonfree));
  return out;
}

template <unsigned W>
json vertex_list_json(const pmca::Bitset<W>& s) {
  json out = json::array();
  s.for_each([&](int v) { out.push_back(v); });
  return out;
}

template <unsigned W>
json name_list_json(const pmca::Graph<W>& g, const pmca::Bitset<W>& s) {
  json out = json::array();
  s.for_each([&](int v) { out.push_back(g.label(v)); });
  return out;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void emit(const json& out, const std::string& format) {
  if (format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    // flat key,value view of the same record
    std::cout << "key,value\n";
    json flat = out.flatten();
    for (auto& [key, value] : flat.items())
      std::cout << csv_quote(key) << "," << csv_quote(value.is_string() ? value.get<std::string>() : value.dump())
                << "\n";
  }
}

struct CheckResult {
  std::string name;
  bool pass = true;
  bool applicable = true;
  json detail;
};

json checks_json(const std::vector<CheckResult>& checks, bool& all_passed) {
  json arr = json::array();
  all_passed = true;
  for (const auto& c : checks) {
    json e;
    e["name"] = c.name;
    if (!c.applicable) {
      e["skipped"] = true;
    } else {
      e["pass"] = c.pass;
      if (!c.pass) all_passed = false;
    }
    if (!c.detail.is_null()) e["detail"] = c.detail;
    arr.push_back(e);
  }
  return arr;
}

// ---------------------------------------------------------------------------
// enumerate

template <unsigned W>
int run_enumerate(const CommonOptions& opts) {
  auto started = std::chrono::steady_clock::now();
  Instance<W> inst = load_instance<W>(opts);
  auto records = pmca::enumerate_pmcs(inst.graph, {opts.limit, opts.jobs});

  pmca::PmcCounts counts;
  for (const auto& rec : records) {
    ++counts.total;
    if (rec.free)
      ++counts.free_count;
    else
      ++counts.nonfree;
  }

  if (opts.format == "csv") {
    std::cout << "vertices,names,free,center\n";
    for (const auto& rec : records) {
      std::string verts, names;
      rec.omega.for_each([&](int v) {
        if (!verts.empty()) {
          verts += ' ';
          names += ' ';
        }
        verts += std::to_string(v);
        names += inst.graph.label(v);
      });
      std::cout << csv_quote(verts) << "," << csv_quote(names) << ","
                << (rec.free ? "true" : "false") << ","
                << (rec.center ? std::to_string(*rec.center) : "") << "\n";
    }
  } else {
    json out;
    out["command"] = "enumerate";
    out["input"] = inst.descriptor;
    out["n"] = inst.graph.size();
    out["m"] = inst.graph.edge_count();
    json pmcs = json::array();
    for (const auto& rec : records) {
      json e;
      e["vertices"] = vertex_list_json(rec.omega);
      e["names"] = name_list_json(inst.graph, rec.omega);
      e["free"] = rec.free;
      if (rec.center) e["center"] = *rec.center;
      pmcs.push_back(e);
    }
    out["pmcs"] = pmcs;
    out["counts"] = {{"total", counts.total}, {"free", counts.free_count}, {"nonfree", counts.nonfree}};
    if (inst.cover) {
      out["cover"] = vertex_list_json(inst.cover->vertices);
      out["cover_source"] = inst.cover_source;
      auto report = pmca::make_bound_report(inst.cover->size, inst.graph.size());
      report.observed_total = counts.total;
      report.observed_free = counts.free_count;
      report.observed_nonfree = counts.nonfree;
      out["bounds"] = bound_report_json(report);
    }
    std::cout << out.dump(2) << "\n";
  }
  std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
  std::cerr << "enumerated " << counts.total << " PMCs in " << elapsed.count() << " s\n";
  return 0;
}

// ---------------------------------------------------------------------------
// check

template <unsigned W>
int run_check(const CommonOptions& opts, const std::string& omega_spec) {
  Instance<W> inst = load_instance<W>(opts);
  pmca::Bitset<W> omega;
  for (int v : parse_vertex_list(omega_spec)) {
    inst.graph.require_vertex(v);
    omega.set(v);
  }
  auto check = pmca::check_pmc(inst.graph, omega);
  json out;
  out["command"] = "check";
  out["input"] = inst.descriptor;
  out["omega"] = vertex_list_json(omega);
  out["names"] = name_list_json(inst.graph, omega);
  out["no_full_component"] = check.no_full_component;
  out["cliquish"] = check.cliquish;
  out["is_pmc"] = check.is_pmc();
  if (check.full_component) out["full_component"] = vertex_list_json(*check.full_component);
  if (check.uncovered_pair)
    out["uncovered_pair"] = json::array({check.uncovered_pair->first, check.uncovered_pair->second});
  if (check.is_pmc()) {
    bool free = pmca::is_free(inst.graph, omega);
    out["free"] = free;
    if (!free) out["center"] = pmca::nonfree_center(inst.graph, omega);
  }
  emit(out, opts.format);
  return 0;
}

// ---------------------------------------------------------------------------
// family

template <unsigned W>
int run_family(const CommonOptions& opts, const std::string& output) {
  if (opts.family.empty()) throw pmca::InputError("family requires --family");
  Instance<W> inst = load_instance<W>(opts);
  std::string text = pmca::to_edge_list(inst.graph);
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw pmca::InputError("cannot write " + output);
    out << text;
    std::cerr << "wrote " << inst.descriptor << " (" << inst.graph.size() << " vertices, "
              << inst.graph.edge_count() << " edges) to " << output << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify-bounds

template <unsigned W>
int run_verify_bounds(const CommonOptions& opts) {
  auto started = std::chrono::steady_clock::now();
  Instance<W> inst = load_instance<W>(opts);
  if (!inst.cover) {
    inst.cover = pmca::minimum_vertex_cover(inst.graph);
    inst.cover_source = "minimum";
  }
  int k = inst.cover->size;
  int n = inst.graph.size();

  auto records = pmca::enumerate_pmcs(inst.graph, {opts.limit, opts.jobs});
  pmca::PmcCounts counts;
  for (const auto& rec : records) {
    ++counts.total;
    if (rec.free)
      ++counts.free_count;
    else
      ++counts.nonfree;
  }
  auto report = pmca::make_bound_report(k, n);
  report.observed_total = counts.total;
  report.observed_free = counts.free_count;
  report.observed_nonfree = counts.nonfree;

  std::vector<CheckResult> checks;

  {
    CheckResult c{.name = "upper_bound"};
    if (k == 0) {
      // edgeless input: the count is reported, the theorem is about k >= 1
      c.applicable = false;
    } else {
      c.pass = report.upper_bound_holds();
      if (!c.pass)
        c.detail = {{"observed_total", counts.total}, {"upper_total", big(report.upper_total)}};
    }
    checks.push_back(std::move(c));
  }
  {
    CheckResult c{.name = "nonfree_are_neighborhoods"};
    for (const auto& rec : records) {
      if (rec.free) continue;
      if (!rec.center || !(inst.graph.closed_neighborhood(*rec.center) == rec.omega)) {
        c.pass = false;
        c.detail = {{"omega", vertex_list_json(rec.omega)}};
        break;
      }
    }
    if (c.pass && counts.nonfree > static_cast<std::uint64_t>(n)) {
      c.pass = false;
      c.detail = {{"nonfree", counts.nonfree}, {"n", n}};
    }
    checks.push_back(std::move(c));
  }
  if (inst.gk) {
    CheckResult lower{.name = "lower_bound"};
    lower.pass = pmca::BigInt(counts.total) >= report.lower_sum;
    if (!lower.pass)
      lower.detail = {{"observed_total", counts.total}, {"lower_sum", big(report.lower_sum)}};
    checks.push_back(std::move(lower));

    // constructed free PMCs must all appear, class by class
    CheckResult classes{.name = "constructed_prefix_classes"};
    json class_detail = json::array();
    for (int i = 0; i <= k; ++i) {
      pmca::BigInt expected = pmca::stirling2(k - i, 3);
      if (expected == 0) continue;
      auto constructed = pmca::construct_prefix_free_pmcs<W>(k, i);
      std::uint64_t observed = 0;
      for (const auto& rec : records) {
        if (!rec.free) continue;
        if ((rec.omega & inst.gk->integer_vertices) == pmca::Bitset<W>::first_n(i)) ++observed;
      }
      bool all_found = true;
      for (const auto& omega : constructed) {
        bool found = false;
        for (const auto& rec : records)
          if (rec.omega == omega && rec.free) {
            found = true;
            break;
          }
        if (!found) all_found = false;
      }
      bool ok = all_found && pmca::BigInt(constructed.size()) == expected &&
                pmca::BigInt(observed) >= expected;
      if (!ok) classes.pass = false;
      class_detail.push_back({{"prefix", i},
                              {"expected", big(expected)},
                              {"constructed", constructed.size()},
                              {"observed", observed},
                              {"pass", ok}});
    }
    classes.detail = class_detail;
    checks.push_back(std::move(classes));
  }

  bool all_passed = true;
  json checks_out = checks_json(checks, all_passed);

  json out;
  out["command"] = "verify-bounds";
  out["input"] = inst.descriptor;
  out["n"] = n;
  out["m"] = inst.graph.edge_count();
  out["k"] = k;
  out["cover"] = vertex_list_json(inst.cover->vertices);
  out["cover_source"] = inst.cover_source;
  out["bounds"] = bound_report_json(report);
  out["checks"] = checks_out;
  out["all_passed"] = all_passed;
  emit(out, opts.format);

  std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
  std::cerr << (all_passed ? "all checks passed" : "CHECK FAILED") << " in " << elapsed.count()
            << " s\n";
  return all_passed ? 0 : 1;
}

// ---------------------------------------------------------------------------
// fuzz

struct FuzzParams {
  int k = 0;
  int n = 0;
  pmca::EdgeProbability p;
  std::uint64_t graph_seed = 0;
  std::uint64_t subset_mask = 0;
  std::uint64_t instance_seed = 0;
};

struct FuzzOutcome {
  enum class Status { kPass, kFail, kSkip } status = Status::kPass;
  std::vector<std::string> failed_checks;
  std::string skip_reason;
};

FuzzParams draw_params(std::uint64_t instance_seed, int k_lo, int k_hi, int n_lo, int n_hi) {
  std::mt19937_64 eng(instance_seed);
  FuzzParams p;
  p.instance_seed = instance_seed;
  p.k = k_lo + static_cast<int>(eng() % static_cast<std::uint64_t>(k_hi - k_lo + 1));
  p.n = n_lo + static_cast<int>(eng() % static_cast<std::uint64_t>(n_hi - n_lo + 1));
  if (p.n < p.k) p.n = p.k;
  p.p = {eng() % 101, 100};
  p.graph_seed = eng();
  p.subset_mask = eng();
  return p;
}

FuzzOutcome run_fuzz_instance(const FuzzParams& params, bool with_m, int limit) {
  FuzzOutcome out;
  auto fail = [&](const std::string& name) {
    out.status = FuzzOutcome::Status::kFail;
    out.failed_checks.push_back(name);
  };
  try {
    auto inst = pmca::random_graph_with_cover<1>(params.k, params.n, params.p, params.graph_seed);
    auto cover = pmca::minimum_vertex_cover(inst.graph);
    int k = cover.size;
    int n = inst.graph.size();
    auto records = pmca::enumerate_pmcs(inst.graph, {limit, 1});

    std::uint64_t total = 0, nonfree = 0;
    bool structure_ok = true;
    for (const auto& rec : records) {
      ++total;
      if (rec.free) continue;
      ++nonfree;
      if (!rec.center || !(inst.graph.closed_neighborhood(*rec.center) == rec.omega))
        structure_ok = false;
    }
    if (!structure_ok || nonfree > static_cast<std::uint64_t>(n)) fail("nonfree_structure");

    if (k >= 1 && pmca::BigInt(total) > pmca::pow4(k) + n) fail("upper_bound");

    // random induced subgraph cannot gain PMCs
    pmca::Bitset<1> keep = pmca::Bitset<1>::from_word(params.subset_mask & ((1ULL << n) - 1));
    auto sub = inst.graph.induced_subgraph(keep);
    if (pmca::enumerate_pmcs(sub.graph, {limit, 1}).size() > total) fail("induced_monotonicity");

    if (with_m && k >= 1) {
      auto m = pmca::build_cover_supergraph(inst.graph, cover);
      auto m_cover = pmca::VertexCover<1>{m.inner, m.k};
      auto m_records = pmca::enumerate_pmcs(m.graph, {limit, 1});

      bool parts_ok = true, outer_ok = true;
      pmca::Bitset<1> outer = m.outer();
      for (const auto& rec : m_records) {
        try {
          auto part = pmca::cover_partition(m.graph, m_cover, rec.omega, true);
          // an outer vertex whose whole (non-empty) neighborhood sits inside
          // one uncovered part can never belong to the PMC
          outer.for_each([&](int v) {
            auto nb = m.graph.neighbors(v);
            if (nb.empty()) return;
            for (const auto& piece : part.parts)
              if (nb.is_subset_of(piece) && rec.omega.test(v)) outer_ok = false;
          });
        } catch (const pmca::InvariantViolation&) {
          parts_ok = false;
        }
      }
      if (!parts_ok) fail("m_parts_at_most_3");
      if (!outer_ok) fail("m_outer_exclusion");

      bool caps_ok = true, shapes_ok = true;
      pmca::BigInt three_part_classes = 0;
      for (const auto& cls : pmca::classify_free_pmcs(m.graph, m_cover, m_records, true)) {
        std::size_t size = cls.members.size();
        switch (cls.partition.shape) {
          case pmca::PartitionShape::kThreeParts:
            ++three_part_classes;
            if (size > 1) caps_ok = false;
            break;
          case pmca::PartitionShape::kInnerOnePart:
            if (size > static_cast<std::size_t>(k)) caps_ok = false;
            break;
          case pmca::PartitionShape::kInnerTwoParts:
            if (size > 2 * static_cast<std::size_t>(k)) caps_ok = false;
            break;
          case pmca::PartitionShape::kInnerThreeParts:
            if (size > 1) caps_ok = false;
            break;
          case pmca::PartitionShape::kInnerOnly:
          case pmca::PartitionShape::kOnePart:
          case pmca::PartitionShape::kTwoParts:
            shapes_ok = false;
            break;
          default:
            caps_ok = false;  // empty or out-of-theory shapes cannot appear here
            break;
        }
      }
      if (three_part_classes > pmca::stirling2(k, 3)) caps_ok = false;
      if (!caps_ok) fail("m_class_caps");
      if (!shapes_ok) fail("m_forbidden_shapes");
    }
  } catch (const pmca::BudgetError& e) {
    out.status = FuzzOutcome::Status::kSkip;
    out.skip_reason = e.what();
  }
  return out;
}

int run_fuzz(const CommonOptions& opts, const std::string& k_range, const std::string& n_range,
             int trials, std::uint64_t seed, bool with_m) {
  auto parse_range = [](const std::string& text) {
    auto sep = text.find("..");
    try {
      if (sep == std::string::npos) {
        int v = std::stoi(text);
        return std::make_pair(v, v);
      }
      return std::make_pair(std::stoi(text.substr(0, sep)), std::stoi(text.substr(sep + 2)));
    } catch (...) {
      throw pmca::InputError("bad range '" + text + "' (want lo..hi)");
    }
  };
  auto [k_lo, k_hi] = parse_range(k_range);
  auto [n_lo, n_hi] = parse_range(n_range);
  if (k_lo < 0 || k_lo > k_hi || n_lo < 0 || n_lo > n_hi || trials < 0)
    throw pmca::InputError("bad fuzz ranges");

  std::vector<FuzzParams> params;
  params.reserve(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t)
    params.push_back(draw_params(seed + static_cast<std::uint64_t>(t), k_lo, k_hi, n_lo, n_hi));

  std::vector<FuzzOutcome> outcomes(static_cast<std::size_t>(trials));
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    for (int t = 0; t < trials; ++t)
      outcomes[static_cast<std::size_t>(t)] = run_fuzz_instance(params[static_cast<std::size_t>(t)], with_m, opts.limit);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    for (int j = 0; j < jobs; ++j)
      workers.emplace_back([&] {
        for (int t = next.fetch_add(1); t < trials; t = next.fetch_add(1))
          outcomes[static_cast<std::size_t>(t)] = run_fuzz_instance(params[static_cast<std::size_t>(t)], with_m, opts.limit);
      });
    for (auto& w : workers) w.join();
  }

  int passed = 0, failed = 0, skipped = 0;
  json failures = json::array();
  for (int t = 0; t < trials; ++t) {
    const auto& o = outcomes[static_cast<std::size_t>(t)];
    switch (o.status) {
      case FuzzOutcome::Status::kPass:
        ++passed;
        break;
      case FuzzOutcome::Status::kSkip:
        ++skipped;
        break;
      case FuzzOutcome::Status::kFail: {
        ++failed;
        std::string reproduce = "pmc-atlas fuzz --k " + k_range + " --n " + n_range +
                                " --trials 1 --seed " + std::to_string(params[static_cast<std::size_t>(t)].instance_seed) +
                                (with_m ? " --with-m" : "");
        failures.push_back({{"trial", t},
                            {"instance_seed", params[static_cast<std::size_t>(t)].instance_seed},
                            {"failed_checks", o.failed_checks},
                            {"reproduce", reproduce}});
        break;
      }
    }
  }

  json out;
  out["command"] = "fuzz";
  out["k_range"] = json::array({k_lo, k_hi});
  out["n_range"] = json::array({n_lo, n_hi});
  out["trials"] = trials;
  out["seed"] = seed;
  out["with_m"] = with_m;
  out["passed"] = passed;
  out["failed"] = failed;
  out["skipped"] = skipped;
  out["failures"] = failures;
  emit(out, opts.format);
  return failed == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// theorem-table

int run_theorem_table(int k_max, const std::string& format) {
  auto rows = pmca::verify_theorem_inequality(k_max);
  bool all = true;
  for (const auto& r : rows) all = all && r.within_budget && r.tail_term_small;

  if (format == "csv") {
    std::cout << "k,s3,k_2k,six_k_s3,four_s4,pow2_minus1,pow4,within_budget,tail_term_small\n";
    for (const auto& r : rows)
      std::cout << r.k << "," << big(r.terms.three_parts) << "," << big(r.terms.inner_one_part)
                << "," << big(r.terms.inner_two_parts) << "," << big(r.terms.inner_three_parts)
                << "," << big(r.extra_nonfree) << "," << big(r.budget) << ","
                << (r.within_budget ? "true" : "false") << ","
                << (r.tail_term_small ? "true" : "false") << "\n";
  } else {
    json out;
    out["command"] = "theorem-table";
    out["k_max"] = k_max;
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"k", r.k},
                     {"s3", big(r.terms.three_parts)},
                     {"k_2k", big(r.terms.inner_one_part)},
                     {"six_k_s3", big(r.terms.inner_two_parts)},
                     {"four_s4", big(r.terms.inner_three_parts)},
                     {"pow2_minus1", big(r.extra_nonfree)},
                     {"pow4", big(r.budget)},
                     {"within_budget", r.within_budget},
                     {"tail_term_small", r.tail_term_small}});
    }
    out["rows"] = arr;
    out["all_passed"] = all;
    std::cout << out.dump(2) << "\n";
  }
  return all ? 0 : 1;
}

// ---------------------------------------------------------------------------

template <typename F>
int dispatch_width(const CommonOptions& opts, F run) {
  long long need = required_width(opts);
  if (need <= 64) return run.template operator()<1>();
  if (need <= 128) return run.template operator()<2>();
  throw pmca::BudgetError("instance needs " + std::to_string(need) +
                          " vertices; the wide build supports up to 128");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"potential-maximal-clique toolkit: enumeration, extremal families, exact bounds"};
  app.require_subcommand(1);

  CommonOptions enum_opts, check_opts, family_opts, verify_opts, fuzz_opts;
  std::string omega_spec, family_output;
  std::string fuzz_k = "1..3", fuzz_n = "4..10";
  int fuzz_trials = 100;
  std::uint64_t fuzz_seed = 0;
  bool fuzz_with_m = false;
  int table_kmax = 64;
  std::string table_format = "json";

  auto* cmd_enum = app.add_subcommand("enumerate", "list all PMCs of a graph or family");
  add_common_options(cmd_enum, enum_opts);

  auto* cmd_check = app.add_subcommand("check", "test one vertex set for PMC-ness");
  add_common_options(cmd_check, check_opts);
  cmd_check->add_option("--omega", omega_spec, "comma-separated vertex list")->required();

  auto* cmd_family = app.add_subcommand("family", "emit a family graph as an edge list");
  add_common_options(cmd_family, family_opts);
  cmd_family->add_option("--output", family_output, "output file (default stdout)");

  auto* cmd_verify = app.add_subcommand("verify-bounds", "enumerate and assert every counting bound");
  add_common_options(cmd_verify, verify_opts);

  auto* cmd_fuzz = app.add_subcommand("fuzz", "seeded random instances through all assertions");
  add_common_options(cmd_fuzz, fuzz_opts, false);
  cmd_fuzz->add_option("--k", fuzz_k, "cover-side size range lo..hi");
  cmd_fuzz->add_option("--n", fuzz_n, "vertex count range lo..hi");
  cmd_fuzz->add_option("--trials", fuzz_trials, "number of instances");
  cmd_fuzz->add_option("--seed", fuzz_seed, "master seed");
  cmd_fuzz->add_flag("--with-m", fuzz_with_m, "also build and test the cover supergraph");

  auto* cmd_table = app.add_subcommand("theorem-table", "per-k exact bound terms and inequality flags");
  cmd_table->add_option("--kmax", table_kmax, "largest k")->check(CLI::PositiveNumber);
  cmd_table->add_option("--format", table_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  int env_limit;
  try {
    env_limit = default_limit();
  } catch (const pmca::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  for (auto* o : {&enum_opts, &check_opts, &family_opts, &verify_opts, &fuzz_opts})
    o->limit = env_limit;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_enum->parsed())
      return dispatch_width(enum_opts, [&]<unsigned W>() { return run_enumerate<W>(enum_opts); });
    if (cmd_check->parsed())
      return dispatch_width(check_opts, [&]<unsigned W>() { return run_check<W>(check_opts, omega_spec); });
    if (cmd_family->parsed())
      return dispatch_width(family_opts, [&]<unsigned W>() { return run_family<W>(family_opts, family_output); });
    if (cmd_verify->parsed())
      return dispatch_width(verify_opts, [&]<unsigned W>() { return run_verify_bounds<W>(verify_opts); });
    if (cmd_fuzz->parsed())
      return run_fuzz(fuzz_opts, fuzz_k, fuzz_n, fuzz_trials, fuzz_seed, fuzz_with_m);
    if (cmd_table->parsed()) return run_theorem_table(table_kmax, table_format);
  } catch (const pmca::InvariantViolation& e) {
    std::cerr << "THEORY VIOLATION: " << e.what() << "\n";
    return 1;
  } catch (const pmca::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const pmca::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

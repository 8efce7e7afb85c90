#include "detspace/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "detspace/detkit.hpp"
#include "detspace/io.hpp"
#include "detspace/theorems.hpp"
#include "detspace/version.hpp"

namespace detspace {

namespace {

// ---------------------------------------------------------------------------
// output helpers: fixed-width text rows and the common report envelope

void row(std::ostream& o, const std::string& key, const std::string& value) {
  o << std::left << std::setw(27) << key << value << '\n';
}

void row(std::ostream& o, const std::string& key, u64 value) {
  row(o, key, std::to_string(value));
}

std::string yesno(bool b) { return b ? "true" : "false"; }

struct Emit {
  bool json = false;
  std::ostream& out;
  Json j;  // filled only in json mode

  void kv(const std::string& key, const std::string& value) {
    if (json)
      j[key] = value;
    else
      row(out, key, value);
  }
  void kv(const std::string& key, u64 value) {
    if (json)
      j[key] = value;
    else
      row(out, key, value);
  }
  void kv(const std::string& key, bool value) {
    if (json)
      j[key] = value;
    else
      row(out, key, yesno(value));
  }
  void finish() {
    if (json) out << j.dump(2) << '\n';
  }
};

void envelope(Emit& e, const std::string& command, const Config& cfg,
              const std::string& seed_source) {
  if (e.json) {
    e.j["tool"] = "detspace";
    e.j["version"] = kVersion;
    e.j["command"] = command;
    e.j["seed"] = cfg.seed;
    e.j["seed_source"] = seed_source;
    e.j["caps"] = Json{{"affine", cfg.affine_cap},
                       {"projective", cfg.projective_cap},
                       {"group_budget", cfg.group_budget},
                       {"root_enum", cfg.root_enum_cap}};
    e.j["threads"] = cfg.threads;
  } else {
    row(e.out, "tool", std::string("detspace ") + kVersion);
    row(e.out, "command", command);
    row(e.out, "seed",
        std::to_string(cfg.seed) + " (" + seed_source + ")");
    std::ostringstream caps;
    caps << "affine=" << cfg.affine_cap << " projective=" << cfg.projective_cap
         << " group=" << cfg.group_budget << " roots=" << cfg.root_enum_cap;
    row(e.out, "caps", caps.str());
    row(e.out, "threads",
        cfg.threads == 0 ? std::string("auto") : std::to_string(cfg.threads));
  }
}

void subspace_facts(Emit& e, const MatSubspace& sub) {
  e.kv("field", sub.field()->describe());
  e.kv("q", sub.field()->size());
  if (sub.is_square()) {
    e.kv("n", u64(sub.n()));
  } else {
    e.kv("rows", u64(sub.rows()));
    e.kv("cols", u64(sub.cols()));
  }
  e.kv("d", u64(sub.dim()));
  if (!sub.tag().empty()) e.kv("tag", sub.tag());
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (unsigned i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (unsigned j = 0; j < m.cols(); ++j) r.push_back(m.at(i, j));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json census_json(const ZeroCensus& c) {
  Json j;
  j["q"] = c.q;
  j["degree"] = c.n;
  j["d"] = c.d;
  j["N_affine"] = c.N_affine;
  if (c.N_projective) j["N_projective"] = *c.N_projective;
  j["affine_derived"] = c.affine_derived;
  return j;
}

std::string witness_text(const NormFormWitness& w) {
  std::ostringstream os;
  os << "lambda=" << w.lambda << ", omega=(";
  for (size_t i = 0; i < w.omega.size(); ++i)
    os << (i ? "," : "") << w.omega[i];
  os << ") in " << w.ext->describe() << ", r=" << w.r;
  return os.str();
}

Json witness_json(const NormFormWitness& w) {
  Json j;
  j["extension"] = w.ext->describe();
  j["omega"] = w.omega;
  j["lambda"] = w.lambda;
  j["r"] = w.r;
  return j;
}

Json report_json(const VerdictReport& r) {
  Json j;
  j["theorem"] = r.theorem_id;
  j["instance"] = r.instance;
  j["passed"] = r.passed;
  Json numbers = Json::object();
  for (const auto& kv : r.numbers) numbers[kv.first] = kv.second;
  j["numbers"] = std::move(numbers);
  j["witnesses"] = r.witnesses;
  j["caveats"] = r.caveats;
  j["violated"] = r.violated;
  return j;
}

void report_text(std::ostream& o, const VerdictReport& r) {
  row(o, "theorem", r.theorem_id);
  row(o, "instance", r.instance);
  row(o, "passed", yesno(r.passed));
  for (const auto& kv : r.numbers) row(o, "  " + kv.first, kv.second);
  for (const auto& w : r.witnesses) row(o, "  witness", w);
  for (const auto& c : r.caveats) row(o, "  caveat", c);
  if (!r.violated.empty()) row(o, "  violated", r.violated);
}

// ---------------------------------------------------------------------------
// named constructions

Matrix unit_matrix(const FieldPtr& f, unsigned n, unsigned i, unsigned j) {
  Matrix m(f, n, n);
  m.set(i, j, 1);
  return m;
}

MatSubspace build_named(const std::string& name, const std::vector<u64>& p) {
  auto want = [&](size_t k) {
    require(p.size() == k, "construction '" + name + "' expects " +
                               std::to_string(k) + " parameter(s)");
  };
  if (name == "ex1") {
    want(0);
    return ex1();
  }
  if (name == "ex2") {
    want(0);
    return ex2();
  }
  if (name == "ex3") {
    want(2);
    return ex3(p[0], p[1]);
  }
  if (name == "thm3_7") {
    want(2);
    return thm3_7(p[0], unsigned(p[1]));
  }
  if (name == "thm4_1") {
    want(1);
    return thm4_1(p[0]);
  }
  if (name == "thm4_4") {
    want(1);
    return thm4_4(p[0]);
  }
  if (name == "field") {
    want(2);
    return field_subspace(Field::of_order(p[0]), unsigned(p[1]));
  }
  if (name == "full" || name == "diagonal" || name == "skew") {
    want(2);
    FieldPtr f = Field::of_order(p[0]);
    unsigned n = unsigned(p[1]);
    require(n >= 1, "the matrix size must be positive");
    std::vector<Matrix> basis;
    if (name == "full") {
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) basis.push_back(unit_matrix(f, n, i, j));
    } else if (name == "diagonal") {
      for (unsigned i = 0; i < n; ++i) basis.push_back(unit_matrix(f, n, i, i));
    } else {
      require(n >= 2, "skew construction needs size at least 2");
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) {
          Matrix m(f, n, n);
          m.set(i, j, 1);
          m.set(j, i, f->neg(1));
          basis.push_back(m);
        }
    }
    return MatSubspace::make(f, n, std::move(basis), name);
  }
  throw Error(
      "unknown construction '" + name +
      "'; available: ex1 ex2 ex3 thm3_7 thm4_1 thm4_4 field full diagonal skew");
}

}  // namespace

// ---------------------------------------------------------------------------

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "exact determinantal analysis of matrix subspaces over finite fields"};
  app.name("detspace");
  app.set_version_flag("--version", std::string(kVersion));
  app.fallthrough();
  app.require_subcommand(1);

  Config cfg;
  bool json = false;
  u64 seed_flag = 0;
  auto* seed_opt = app.add_option("--seed", seed_flag,
                                  "seed for all randomized paths "
                                  "(overrides DETSPACE_SEED)");
  app.add_option("--threads", cfg.threads,
                 "census worker threads (0 = machine parallelism)");
  app.add_option("--affine-cap", cfg.affine_cap,
                 "largest affine point set enumerated exhaustively");
  app.add_option("--projective-cap", cfg.projective_cap,
                 "largest projective point set enumerated exhaustively");
  app.add_option("--group-budget", cfg.group_budget,
                 "largest invertible group scanned element by element");
  app.add_option("--root-cap", cfg.root_enum_cap,
                 "largest extension field scanned for polynomial roots");
  app.add_flag("--json", json, "machine-readable output instead of the table");

  std::string in_path, out_path, construct_name, verify_id;
  std::vector<u64> construct_params, charpoly_coords;
  bool projective = false, normalizer = false, suite = false, list_ids = false;

  CLI::App* c_construct = app.add_subcommand(
      "construct", "build a named subspace and write it to a file");
  c_construct->add_option("name", construct_name, "construction name")
      ->required();
  c_construct->add_option("params", construct_params,
                          "integer parameters of the construction");
  c_construct->add_option("-o,--output", out_path, "subspace file to write");

  CLI::App* c_detpoly = app.add_subcommand(
      "detpoly", "determinantal polynomial of a subspace file");
  c_detpoly->add_option("-i,--input", in_path, "subspace file")->required();

  CLI::App* c_charpoly = app.add_subcommand(
      "charpoly", "characteristic polynomial of one element of a subspace");
  c_charpoly->add_option("-i,--input", in_path, "subspace file")->required();
  c_charpoly
      ->add_option("--coeffs", charpoly_coords,
                   "coordinates of the element in the subspace basis")
      ->required()
      ->delimiter(',');

  CLI::App* c_census = app.add_subcommand(
      "census", "exact zero count of the determinantal polynomial");
  c_census->add_option("-i,--input", in_path, "subspace file")->required();
  c_census->add_flag("--projective", projective,
                     "count projective zeros instead of affine ones");

  CLI::App* c_classify = app.add_subcommand(
      "classify", "full classification of the determinantal polynomial");
  c_classify->add_option("-i,--input", in_path, "subspace file")->required();

  CLI::App* c_singular = app.add_subcommand(
      "singular", "the determinant-zero locus of a subspace");
  c_singular->add_option("-i,--input", in_path, "subspace file")->required();

  CLI::App* c_rank = app.add_subcommand(
      "rank", "exact rank distribution with lower-bound lines");
  c_rank->add_option("-i,--input", in_path, "subspace file")->required();

  CLI::App* c_pfaffian = app.add_subcommand(
      "pfaffian", "canonical square root of the determinant of a "
                  "skew-symmetric subspace");
  c_pfaffian->add_option("-i,--input", in_path, "subspace file")->required();

  CLI::App* c_group = app.add_subcommand(
      "group", "commuting algebra of a subspace, optionally its normalizer");
  c_group->add_option("-i,--input", in_path, "subspace file")->required();
  c_group->add_flag("--normalizer", normalizer,
                    "also scan the invertible group for the normalizer");

  CLI::App* c_verify = app.add_subcommand(
      "verify", "run one catalogue check or the whole designated suite");
  c_verify->add_option("--id", verify_id, "catalogue entry to check");
  c_verify->add_option("-i,--input", in_path,
                       "subspace file the check runs on");
  c_verify->add_flag("--suite", suite, "run every designated instance");
  c_verify->add_flag("--list", list_ids, "print the catalogue ids and exit");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  // seed precedence: --seed flag, then DETSPACE_SEED, then the default
  std::string seed_source = "default";
  if (const char* env = std::getenv("DETSPACE_SEED")) {
    try {
      cfg.seed = std::stoull(env);
      seed_source = "env";
    } catch (const std::exception&) {
      err << "error: DETSPACE_SEED is not an integer: " << env << '\n';
      return 2;
    }
  }
  if (seed_opt->count() > 0) {
    cfg.seed = seed_flag;
    seed_source = "flag";
  }

  try {
    Emit e{json, out, Json::object()};

    if (app.got_subcommand(c_construct)) {
      MatSubspace sub = build_named(construct_name, construct_params);
      envelope(e, "construct", cfg, seed_source);
      subspace_facts(e, sub);
      if (!out_path.empty()) {
        write_subspace(out_path, sub);
        e.kv("wrote", out_path);
      } else if (json) {
        e.j["subspace"] = subspace_to_json(sub);
      } else {
        out << subspace_to_json(sub).dump(2) << '\n';
      }
      e.finish();
      return 0;
    }

    if (app.got_subcommand(c_detpoly)) {
      MatSubspace sub = read_subspace(in_path);
      MultiPoly p = det_poly(sub);
      envelope(e, "detpoly", cfg, seed_source);
      subspace_facts(e, sub);
      e.kv("detpoly", render(p));
      if (json) {
        Json terms = Json::array();
        for (const auto& t : p.terms())
          terms.push_back(Json{{"coeff", t.second}, {"exponents", t.first}});
        e.j["terms"] = std::move(terms);
      }
      e.finish();
      return 0;
    }

    if (app.got_subcommand(c_charpoly)) {
      MatSubspace sub = read_subspace(in_path);
      require(charpoly_coords.size() == sub.dim(),
              "--coeffs needs exactly d = " + std::to_string(sub.dim()) +
                  " coordinates");
      std::vector<Elt> coords;
      for (u64 v : charpoly_coords) {
        require(v < sub.field()->size(),
                "coordinate encoding out of range for " +
                    sub.field()->describe());
        coords.push_back(v);
      }
      Matrix a = sub.element(coords);
      UniPoly cp = char_poly(a);
      envelope(e, "charpoly", cfg, seed_source);
      subspace_facts(e, sub);
      e.kv("element", render(a));
      e.kv("charpoly", render(cp));
      e.kv("irreducible", uni_irreducible(cp));
      e.finish();
      return 0;
    }

    if (app.got_subcommand(c_census)) {
      MatSubspace sub = read_subspace(in_path);
      MultiPoly p = det_poly(sub);
      ZeroCensus c = zero_census(
          p, projective ? CensusMode::projective : CensusMode::affine, cfg);
      envelope(e, "census", cfg, seed_source);
      subspace_facts(e, sub);
      e.kv("N_affine", c.N_affine);
      if (c.N_projective) e.kv("N_projective", *c.N_projective);
      e.kv("affine_derived", c.affine_derived);
      e.finish();
      return 0;
    }

    if (app.got_subcommand(c_classify)) {
      MatSubspace sub = read_subspace(in_path);
      Classification cl = classify(sub, cfg);
      envelope(e, "classify", cfg, seed_source);
      subspace_facts(e, sub);
      e.kv("is_zero_poly", cl.is_zero_poly);
      e.kv("vanishes_everywhere", cl.vanishes_everywhere);
      e.kv("chevalley_irreducible", cl.chevalley_irreducible);
      e.kv("norm_form", cl.norm_form);
      e.kv("is_square", cl.is_square);
      e.kv("heuristic_abs_irreducible", cl.heuristic_abs_irreducible);
      if (cl.witness) {
        if (json)
          e.j["witness"] = witness_json(*cl.witness);
        else
          row(out, "witness", witness_text(*cl.witness));
      }
      if (cl.square_root) e.kv("square_root", render(*cl.square_root));
      if (json) {
        e.j["census"] = census_json(cl.census);
        e.j["notes"] = cl.notes;
      } else {
        row(out, "N_affine", std::to_string(cl.census.N_affine));
        if (cl.census.N_projective)
          row(out, "N_projective", std::to_string(*cl.census.N_projective));
        for (const auto& note : cl.notes) row(out, "  note", note);
      }
      e.finish();
      return 0;
    }

    if (app.got_subcommand(c_singular)) {
      MatSubspace sub = read_subspace(in_path);
      SingularPart sp = singular_part(sub, cfg);
      envelope(e, "singular", cfg, seed_source);
      subspace_facts(e, sub);
      e.kv("count", sp.count);
      e.kv("is_subspace", sp.is_subspace);
      e.kv("singular_dim", u64(sp.dim));
      if (json) {
        Json basis = Json::array();
        for (const Matrix& m : sp.basis) basis.push_back(matrix_json(m));
        e.j["basis"] = std::move(basis);
      } else {
        for (const Matrix& m : sp.basis) row(out, "  basis", render(m));
      }
      e.finish();
      return 0;
    }

    if (app.got_subcommand(c_rank)) {
      MatSubspace sub = read_subspace(in_path);
      RankCensus rc = rank_census(sub, cfg);
      envelope(e, "rank", cfg, seed_source);
      subspace_facts(e, sub);
      e.kv("skew", rc.skew);
      if (json) {
        Json counts = Json::object();
        for (const auto& kv : rc.counts)
          counts[std::to_string(kv.first)] = kv.second;
        e.j["counts"] = std::move(counts);
        Json bounds = Json::array();
        for (const RankBound& b : rc.bounds)
          bounds.push_back(Json{{"name", b.name},
                                {"bound", b.bound},
                                {"observed", b.observed},
                                {"holds", b.holds},
                                {"informational", b.informational}});
        e.j["bounds"] = std::move(bounds);
      } else {
        for (const auto& kv : rc.counts)
          row(out, "rank " + std::to_string(kv.first),
              std::to_string(kv.second));
        for (const RankBound& b : rc.bounds) {
          std::ostringstream line;
          line << b.bound << " <= " << b.observed;
          if (!b.holds) line << "  VIOLATED";
          if (b.informational) line << "  (informational)";
          row(out, b.name, line.str());
        }
      }
      e.finish();
      bool violated = false;
      for (const RankBound& b : rc.bounds)
        violated |= !b.holds && !b.informational;
      return violated ? 1 : 0;
    }

    if (app.got_subcommand(c_pfaffian)) {
      MatSubspace sub = read_subspace(in_path);
      MultiPoly g = pfaffian(sub);
      envelope(e, "pfaffian", cfg, seed_source);
      subspace_facts(e, sub);
      e.kv("pfaffian", render(g));
      e.kv("square_is_det", g * g == det_poly(sub));
      e.finish();
      return 0;
    }

    if (app.got_subcommand(c_group)) {
      MatSubspace sub = read_subspace(in_path);
      GroupAnalysis ga = normalizer ? normalizer_quotient(sub, cfg)
                                    : centralizer(sub, cfg);
      envelope(e, "group", cfg, seed_source);
      subspace_facts(e, sub);
      e.kv("centralizer_dim", u64(ga.centralizer_dim));
      e.kv("centralizer_order", ga.centralizer_order);
      e.kv("field_flag", ga.field_flag);
      if (normalizer) {
        e.kv("normalizer_skipped", ga.skipped);
        if (ga.normalizer_order) e.kv("normalizer_order", *ga.normalizer_order);
        if (ga.quotient_order) e.kv("quotient_order", *ga.quotient_order);
        if (ga.skipped && !json)
          row(out, "  note",
              "normalizer scan skipped: the invertible group exceeds the "
              "budget");
      }
      e.finish();
      return 0;
    }

    if (app.got_subcommand(c_verify)) {
      if (list_ids) {
        envelope(e, "verify", cfg, seed_source);
        if (json)
          e.j["catalogue"] = theorem_ids();
        else
          for (const std::string& id : theorem_ids()) row(out, "id", id);
        e.finish();
        return 0;
      }
      require(suite != !verify_id.empty(),
              "verify needs exactly one of --suite or --id");
      if (suite) {
        require(in_path.empty(), "--suite takes no input file");
        SuiteResult sr = verify_suite(cfg);
        envelope(e, "verify", cfg, seed_source);
        u64 passed = 0;
        for (const VerdictReport& r : sr.reports) passed += r.passed ? 1 : 0;
        if (json) {
          Json reports = Json::array();
          for (const VerdictReport& r : sr.reports)
            reports.push_back(report_json(r));
          e.j["reports"] = std::move(reports);
          e.j["passed"] = passed;
          e.j["total"] = sr.reports.size();
          e.j["all_passed"] = sr.all_passed;
        } else {
          out << std::left << std::setw(8) << "result" << std::setw(42)
              << "theorem" << "instance" << '\n';
          for (const VerdictReport& r : sr.reports)
            out << std::left << std::setw(8) << (r.passed ? "PASS" : "FAIL")
                << std::setw(42) << r.theorem_id << r.instance << '\n';
          for (const VerdictReport& r : sr.reports)
            if (!r.passed)
              row(out, "violated", r.theorem_id + ": " + r.violated);
          row(out, "summary",
              std::to_string(passed) + "/" +
                  std::to_string(sr.reports.size()) + " passed");
        }
        e.finish();
        return sr.all_passed ? 0 : 1;
      }
      std::optional<MatSubspace> sub;
      if (!in_path.empty()) sub = read_subspace(in_path);
      VerdictReport rep = verify(verify_id, sub ? &*sub : nullptr, cfg);
      envelope(e, "verify", cfg, seed_source);
      if (sub) subspace_facts(e, *sub);
      if (json)
        e.j["report"] = report_json(rep);
      else
        report_text(out, rep);
      e.finish();
      return rep.passed ? 0 : 1;
    }

    err << "error: no subcommand selected\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace detspace

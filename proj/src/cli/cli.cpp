#include "qtensor/cli/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qtensor/cli/export.hpp"
#include "qtensor/coeff/field.hpp"
#include "qtensor/dualcheck/dualcheck.hpp"
#include "qtensor/tensorspace/json.hpp"

namespace qtensor::cli {

namespace {

using Json = nlohmann::ordered_json;
using combinatorics::Partition;
using combinatorics::Walk;

const char* const kCommands[] = {"walks", "vectors", "psi", "verify", "norms", "specht", "decompose", "invariants"};

Command command_of(const std::string& name) {
  for (std::size_t i = 0; i < std::size(kCommands); ++i) {
    if (name == kCommands[i]) return static_cast<Command>(i);
  }
  throw UsageError("unknown command '" + name + "'");
}

void write_file(const std::string& text, const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot open '" + path + "' for writing");
  f << text;
  f.close();
  if (!f) throw Error("write to '" + path + "' failed");
}

/// Writes text to --out when given, else to out.
void emit(const CliConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path)
    write_file(text, *cfg.out_path);
  else
    out << text;
}

std::string json_text(const Json& j) { return json_bytes(j); }

template <coeff::CoefficientField F>
std::string vector_text(const F& field, const tensorspace::TensorVector<typename F::Scalar>& v) {
  std::string s;
  for (const auto& [a, c] : v.terms()) s += "  v_" + a.to_string() + "  " + field.render(c) + "\n";
  if (v.is_zero()) s += "  0\n";
  return s;
}

Json walk_json(const Walk& w) { return Json(w.rows()); }

struct CheckLine {
  std::string name;
  bool ok;
  std::string detail;
};

template <coeff::CoefficientField F>
class Runner {
 public:
  using S = typename F::Scalar;
  using Rec = psiphi::MaximalVectorRecord<S>;

  Runner(const CliConfig& cfg, F field, const CliHooks& hooks) : cfg_(cfg), eng_(std::move(field)), hooks_(hooks) {}

  int run(std::ostream& out) {
    switch (cfg_.command) {
      case Command::walks: return walks(out);
      case Command::vectors: return vectors(out);
      case Command::psi: return psi(out);
      case Command::verify: return verify(out);
      case Command::norms: return norms(out);
      case Command::specht: return specht(out);
      case Command::decompose: return decompose(out);
      case Command::invariants: return invariants(out);
    }
    return 2;
  }

 private:
  bool json() const { return cfg_.output == Output::json; }
  const F& field() const { return eng_.field(); }

  std::vector<Walk> selected_walks() const { return combinatorics::enumerate_walks(cfg_.n, cfg_.r, cfg_.shape); }

  std::vector<Rec> selected_records() const {
    auto basis = dualcheck::maximal_basis(eng_, cfg_.n, cfg_.r);
    return cfg_.shape ? dualcheck::records_of_shape(basis, *cfg_.shape) : basis;
  }

  int walks(std::ostream& out) {
    auto ws = selected_walks();
    if (json()) {
      Json arr = Json::array();
      for (const auto& w : ws) arr.push_back(walk_json(w));
      emit(cfg_, json_text(arr), out);
    } else {
      std::string s;
      for (const auto& w : ws) s += w.to_string() + "\n";
      emit(cfg_, s, out);
    }
    return 0;
  }

  std::string psi_trail(const Walk& w) const {
    std::string s;
    for (int step = 0; step < w.length(); ++step) {
      const int m = w.rows()[static_cast<std::size_t>(step)];
      const auto lam = w.steps()[static_cast<std::size_t>(step)].as_weight(cfg_.n);
      s += "  step " + std::to_string(step + 1) + ": Phi_" + std::to_string(m) + " at " + lam.to_string() + "\n";
      for (const auto& [letter, op] : eng_.phi_formal(m, lam))
        s += "    v_" + std::to_string(letter) + " (x) " + op.to_string(field()) + "\n";
    }
    return s;
  }

  int vectors(std::ostream& out) {
    auto recs = selected_records();
    if (json()) {
      emit(cfg_, json_text(records_json(field(), recs)), out);
      return 0;
    }
    std::string s;
    for (const auto& rec : recs) {
      s += "c" + rec.walk.to_string() + " shape " + rec.weight.to_string() + "\n";
      if (cfg_.show_psi) s += psi_trail(rec.walk);
      s += vector_text(field(), rec.vector);
    }
    emit(cfg_, s, out);
    return 0;
  }

  int psi(std::ostream& out) {
    if (!cfg_.shape) throw UsageError("psi needs --shape");
    const auto lam = cfg_.shape->as_weight(cfg_.n);
    Json arr = Json::array();
    std::string s;
    for (int j = 1; j < cfg_.n; ++j) {
      for (int k = 0; j + k < cfg_.n; ++k) {
        std::string label = "Psi_" + std::to_string(j) + "^{+(" + std::to_string(k) + ")}";
        Json e;
        e["j"] = j;
        e["shift"] = k;
        try {
          auto p = eng_.psi(j, lam, k);
          e["defined"] = true;
          e["element"] = p.to_string(field());
          s += label + " = " + p.to_string(field()) + "\n";
        } catch (const PsiUndefined&) {
          e["defined"] = false;
          e["element"] = nullptr;
          s += label + " undefined\n";
        }
        arr.push_back(std::move(e));
      }
    }
    emit(cfg_, json() ? json_text(arr) : s, out);
    return 0;
  }

  int norms(std::ostream& out) {
    auto recs = selected_records();
    bool all = true;
    Json arr = Json::array();
    std::string s;
    for (const auto& rec : recs) {
      S predicted = dualcheck::norm_predict(field(), rec.walk);
      S computed = tensorspace::bilinear(rec.vector, rec.vector);
      bool ok = predicted == computed;
      all = all && ok;
      Json e;
      e["walk"] = walk_json(rec.walk);
      e["predicted"] = field().render(predicted);
      e["computed"] = field().render(computed);
      e["ok"] = ok;
      arr.push_back(std::move(e));
      s += rec.walk.to_string() + "  " + field().render(computed) + (ok ? "" : "  MISMATCH predicted " + field().render(predicted)) + "\n";
    }
    emit(cfg_, json() ? json_text(arr) : s, out);
    return all ? 0 : 1;
  }

  static Json matrix_json(const F& f, const dualcheck::Matrix<S>& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
      Json r = Json::array();
      for (const auto& x : row) r.push_back(f.render(x));
      rows.push_back(std::move(r));
    }
    return rows;
  }

  int specht(std::ostream& out) {
    auto basis = dualcheck::maximal_basis(eng_, cfg_.n, cfg_.r);
    std::vector<Partition> shapes = cfg_.shape ? std::vector<Partition>{*cfg_.shape} : combinatorics::partitions_of(cfg_.r, cfg_.n);
    bool all = true;
    Json arr = Json::array();
    std::string s;
    for (const auto& lam : shapes) {
      auto data = dualcheck::specht_from_basis(field(), lam, dualcheck::records_of_shape(basis, lam), cfg_.r);
      all = all && data.ok();
      Json e;
      e["shape"] = lam.parts();
      Json walks = Json::array();
      for (const auto& rec : data.basis) walks.push_back(walk_json(rec.walk));
      e["walks"] = std::move(walks);
      Json gram = Json::array();
      for (const auto& g : data.gram_diagonal) gram.push_back(field().render(g));
      e["gram_diagonal"] = std::move(gram);
      Json mats = Json::array();
      for (const auto& t : data.t_matrices) mats.push_back(matrix_json(field(), t));
      e["t_matrices"] = std::move(mats);
      e["ok"] = data.ok();
      arr.push_back(std::move(e));

      s += "shape " + lam.to_string() + ", basis";
      for (const auto& rec : data.basis) s += " " + rec.walk.to_string();
      s += std::string(data.ok() ? "" : "  FAILED") + "\n";
      for (std::size_t i = 0; i < data.t_matrices.size(); ++i) {
        s += "  T_" + std::to_string(i + 1) + ":\n";
        for (const auto& row : data.t_matrices[i]) {
          s += "    [";
          for (std::size_t c = 0; c < row.size(); ++c) s += (c ? ", " : "") + field().render(row[c]);
          s += "]\n";
        }
      }
    }
    emit(cfg_, json() ? json_text(arr) : s, out);
    return all ? 0 : 1;
  }

  int decompose(std::ostream& out) {
    auto rep = dualcheck::decomposition_report(eng_, cfg_.n, cfg_.r);
    if (json()) {
      emit(cfg_, json_text(dualcheck::to_json(rep)), out);
    } else {
      std::string s = "shape  weyl_dim  f  walks  maximal  orthogonal\n";
      for (const auto& row : rep.shapes) {
        s += row.shape.to_string() + "  " + std::to_string(row.weyl_dim) + "  " + std::to_string(row.f) + "  " +
             std::to_string(row.walks) + "  " + (row.all_maximal ? "yes" : "no") + "  " +
             (row.gram_diagonal_ok ? "yes" : "no") + "\n";
      }
      s += "total " + std::to_string(rep.total) + ", identity " + (rep.identity_ok ? "holds" : "FAILS") + "\n";
      emit(cfg_, s, out);
    }
    return rep.identity_ok ? 0 : 1;
  }

  int invariants(std::ostream& out) {
    auto recs = dualcheck::invariants_basis(eng_, cfg_.n, cfg_.r);
    bool all = true;
    for (const auto& rec : recs) {
      all = all && eng_.is_maximal(rec.vector);
      for (int i = 1; i < cfg_.n; ++i)
        all = all && tensorspace::apply_generator(field(), tensorspace::Generator::Kt(i), rec.vector) == rec.vector;
    }
    if (json()) {
      emit(cfg_, json_text(records_json(field(), recs)), out);
    } else {
      std::string s;
      for (const auto& rec : recs) s += "c" + rec.walk.to_string() + " shape " + rec.weight.to_string() + "\n" + vector_text(field(), rec.vector);
      if (recs.empty()) s += "no invariants in degree " + std::to_string(cfg_.r) + "\n";
      emit(cfg_, s, out);
    }
    return all ? 0 : 1;
  }

  int verify(std::ostream& out) {
    using Clock = std::chrono::steady_clock;
    const auto start = Clock::now();
    auto basis = dualcheck::maximal_basis(eng_, cfg_.n, cfg_.r);
    if (hooks_.corrupt_record && *hooks_.corrupt_record < basis.size()) {
      auto& v = basis[*hooks_.corrupt_record].vector;
      auto terms = v.terms();
      if (!terms.empty()) terms.begin()->second = S(terms.begin()->second * field().from_int(2));
      v = tensorspace::TensorVector<S>(v.n(), v.r(), std::move(terms));
    }
    if (cfg_.shape) basis = dualcheck::records_of_shape(basis, *cfg_.shape);
    std::vector<CheckLine> lines;
    const std::string count = std::to_string(basis.size()) + " walks";

    std::size_t non_max = 0;
    for (const auto& rec : basis) non_max += eng_.is_maximal(rec.vector) ? 0 : 1;
    lines.push_back({"maximality", non_max == 0, count + (non_max ? ", " + std::to_string(non_max) + " not maximal" : "")});

    auto gram = dualcheck::gram_check(basis);
    lines.push_back({"orthogonality", gram.ok(),
                     std::to_string(gram.nonzero_off_diagonal.size()) + " nonzero off-diagonal, " +
                         std::to_string(gram.zero_diagonal.size()) + " zero diagonal"});

    auto bad_norms = dualcheck::norm_mismatches(field(), basis);
    lines.push_back({"norm formula", bad_norms.empty(), std::to_string(bad_norms.size()) + " mismatches"});

    auto red = dualcheck::reduction_check(eng_, basis);
    lines.push_back({"psi pairing reductions", red.empty(), std::to_string(red.size()) + " failures"});

    auto raise = dualcheck::raising_check(eng_, basis);
    lines.push_back({"psi raising", raise.empty(), std::to_string(raise.size()) + " failures"});

    bool specht_ok = true;
    std::size_t shapes = 0;
    std::vector<Partition> shape_list = cfg_.shape ? std::vector<Partition>{*cfg_.shape} : combinatorics::partitions_of(cfg_.r, cfg_.n);
    for (const auto& lam : shape_list) {
      auto recs = dualcheck::records_of_shape(basis, lam);
      try {
        auto d = dualcheck::specht_from_basis(field(), lam, recs, cfg_.r);
        specht_ok = specht_ok && d.ok() && static_cast<long long>(recs.size()) == combinatorics::count_standard(lam);
      } catch (const ConsistencyFailure&) {
        specht_ok = false;
      }
      ++shapes;
    }
    lines.push_back({"specht matrices", specht_ok, std::to_string(shapes) + " shapes"});

    if (!cfg_.shape) {
      auto rep = dualcheck::decomposition_from_basis(eng_, cfg_.n, cfg_.r, basis);
      lines.push_back({"dimension count", rep.identity_ok,
                       std::to_string(rep.total) + " = " + std::to_string(cfg_.n) + "^" + std::to_string(cfg_.r)});
      bool young = true;
      for (const auto& lam : combinatorics::partitions_of(cfg_.r, cfg_.n)) young = young && dualcheck::youngs_rule_check(lam, cfg_.n).ok();
      lines.push_back({"young's rule", young, std::to_string(shape_list.size()) + " shapes"});
      auto rel = dualcheck::relation_suite(field(), cfg_.n, cfg_.r);
      std::vector<std::pair<std::string, std::vector<std::string>>> groups = {
          {"quantum group relations", {"U1", "U2", "U3", "U4", "U5", "U6", "U7"}},
          {"hecke quadratic", {"hecke quadratic"}},
          {"braid", {"braid"}},
          {"commuting actions", {"commuting actions"}}};
      for (const auto& [name, fams] : groups) {
        long checked = 0, failed = 0;
        for (const auto& fam : fams) {
          auto it = rel.families.find(fam);
          if (it == rel.families.end()) continue;
          checked += it->second.checked;
          failed += it->second.failed;
        }
        lines.push_back({name, failed == 0, std::to_string(checked) + " identities"});
      }
    }

    bool all = true;
    for (const auto& l : lines) all = all && l.ok;
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (json()) {
      Json j;
      j["n"] = cfg_.n;
      j["r"] = cfg_.r;
      j["field"] = field().name();
      Json checks = Json::array();
      for (const auto& l : lines) {
        Json c;
        c["name"] = l.name;
        c["ok"] = l.ok;
        c["detail"] = l.detail;
        checks.push_back(std::move(c));
      }
      j["checks"] = std::move(checks);
      j["ok"] = all;
      emit(cfg_, json_text(j), out);
    } else {
      std::ostringstream s;
      s << "verify n=" << cfg_.n << " r=" << cfg_.r << " over " << field().name() << "\n";
      for (const auto& l : lines) s << "  " << (l.ok ? "PASS" : "FAIL") << "  " << l.name << " (" << l.detail << ")\n";
      s << (all ? "all checks passed" : "some checks FAILED");
      s.precision(3);
      s << " in " << std::fixed << secs << " s\n";
      emit(cfg_, s.str(), out);
    }
    return all ? 0 : 1;
  }

  const CliConfig& cfg_;
  psiphi::Engine<F> eng_;
  const CliHooks& hooks_;
};

}  // namespace

std::string json_bytes(const tensorspace::Json& j) { return j.dump() + "\n"; }

void write_json_file(const tensorspace::Json& j, const std::string& path) { write_file(json_bytes(j), path); }

std::string usage() {
  return "usage: qtensor <command> --n <int> --r <int> [--shape a,b,c] [--q0 num[/den]] "
         "[--output text|json] [--out <path>] [--show-psi]\n"
         "commands: walks vectors psi verify norms specht decompose invariants\n"
         "environment: QTENSOR_THREADS caps worker threads (0 = auto)\n";
}

CliConfig parse_args(const std::vector<std::string>& argv) {
  CLI::App app{"Maximal vectors in quantum tensor space", "qtensor"};
  std::string command, shape, q0, output = "text", out_path;
  CliConfig cfg;
  app.add_option("command", command, "what to run")->required();
  app.add_option("--n", cfg.n, "rank of gl_n")->required();
  app.add_option("--r", cfg.r, "tensor degree")->required();
  app.add_option("--shape", shape, "partition, e.g. 2,1");
  app.add_option("--q0", q0, "specialize q to this rational");
  app.add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out_path, "write the result to this file");
  app.add_flag("--show-psi", cfg.show_psi, "show the Phi operators along each walk");
  if (argv.empty()) throw UsageError("missing program name");
  std::vector<const char*> raw;
  for (const auto& a : argv) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  cfg.command = command_of(command);
  if (cfg.n < 1) throw UsageError("--n must be at least 1");
  if (cfg.r < 0) throw UsageError("--r must be nonnegative");
  if (cfg.n > 9 || cfg.r > 12) throw UsageError("--n at most 9 and --r at most 12");
  try {
    if (!shape.empty()) cfg.shape = combinatorics::parse_partition(shape);
    if (!q0.empty()) cfg.q0 = coeff::parse_rational(q0);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (cfg.shape && (cfg.shape->size() != cfg.r || cfg.shape->length() > cfg.n))
    throw UsageError("--shape " + cfg.shape->to_string() + " is not a partition of " + std::to_string(cfg.r) +
                     " into at most " + std::to_string(cfg.n) + " parts");
  if (cfg.q0 && (*cfg.q0 == 0 || *cfg.q0 == 1 || *cfg.q0 == -1)) throw UsageError("--q0 must not be 0, 1 or -1");
  cfg.output = output == "json" ? Output::json : Output::text;
  if (!out_path.empty()) cfg.out_path = out_path;
  return cfg;
}

int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err, const CliHooks& hooks) {
  for (std::size_t i = 1; i < argv.size(); ++i) {
    if (argv[i] == "--help" || argv[i] == "-h") {
      out << usage();
      return 0;
    }
  }
  CliConfig cfg;
  try {
    cfg = parse_args(argv);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << usage();
    return 2;
  }
  try {
    if (cfg.command == Command::psi && !cfg.shape) throw UsageError("psi needs --shape");
    if (cfg.q0) return Runner<coeff::SpecializedField>(cfg, coeff::SpecializedField(*cfg.q0), hooks).run(out);
    return Runner<coeff::GenericField>(cfg, coeff::GenericField(), hooks).run(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << usage();
    return 2;
  } catch (const ConsistencyFailure& e) {
    err << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qtensor::cli

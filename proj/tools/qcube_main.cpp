#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qcube/serialize.hpp"

namespace {

constexpr int kExitSyntax = 1;
constexpr int kExitIo = 2;
constexpr int kExitVerifyFailed = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    std::exit(kExitIo);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

qcube::Circuit load_circuit(const std::string& path) {
  try {
    return qcube::parse_text(read_file(path));
  } catch (const qcube::CircuitError& e) {
    std::cerr << "error: " << path << ":" << e.what() << "\n";
    std::exit(kExitSyntax);
  }
}

std::uint64_t default_seed(const CLI::Option* seed_opt, std::uint64_t from_flag) {
  if (seed_opt->count() > 0) return from_flag;
  if (const char* env = std::getenv("QCUBE_SEED")) return std::strtoull(env, nullptr, 10);
  return 0;
}

std::string outcome_text(const qcube::BranchOutcome& br) {
  std::string s;
  for (const auto& rec : br.outcomes) {
    if (!s.empty()) s += ' ';
    if (rec.tag) s += *rec.tag + "=";
    s += qcube::axis_letter(rec.axis);
    s += ':';
    s += qcube::face_letter(rec.face);
  }
  return s.empty() ? "(none)" : s;
}

void print_run_table(const std::vector<qcube::BranchOutcome>& branches) {
  std::size_t width = 8;
  for (const auto& br : branches) width = std::max(width, outcome_text(br).size());
  std::cout << std::left << std::setw(static_cast<int>(width) + 2) << "outcomes"
            << std::setw(14) << "probability" << "bloch\n";
  for (const auto& br : branches) {
    const auto r = qcube::bloch_of(br.final_state.prob());
    std::cout << std::setw(static_cast<int>(width) + 2) << outcome_text(br) << std::setw(14)
              << qcube::to_string(br.probability) << "(" << qcube::to_string(r[0]) << ", "
              << qcube::to_string(r[1]) << ", " << qcube::to_string(r[2]) << ")\n";
  }
}

void print_group_listing(const qcube::RotationGroup& group) {
  const auto& classes = group.conjugacy_classes();
  std::vector<std::string> kind_of(group.size());
  for (const auto& cls : classes)
    for (auto i : cls.members) kind_of[i] = cls.kind;
  std::cout << std::left << std::setw(4) << "#" << std::setw(16) << "name" << std::setw(7)
            << "order" << std::setw(12) << "class" << "perm\n";
  for (std::size_t i = 0; i < group.size(); ++i) {
    const auto& e = group.element(i);
    std::cout << std::setw(4) << i << std::setw(16) << e.name << std::setw(7)
              << group.element_order(i) << std::setw(12) << kind_of[i]
              << qcube::cycle_notation(e.perm) << "\n";
  }
}

void print_group_table(const qcube::RotationGroup& group) {
  for (std::size_t a = 0; a < group.size(); ++a) {
    for (std::size_t b = 0; b < group.size(); ++b)
      std::cout << std::setw(3) << group.compose_index(a, b);
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact simulator of the eight-state cube model and its qubit counterpart"};
  app.require_subcommand(1);

  std::string file;
  bool as_json = false;
  bool as_table = false;

  auto* run = app.add_subcommand("run", "Exactly evaluate a circuit's branch tree");
  run->add_option("file", file, "circuit file (.cq)")->required();
  auto* run_json = run->add_flag("--json", as_json, "machine-readable output");
  run->add_flag("--table", as_table, "aligned table output")->excludes(run_json);

  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  int threads = 1;
  auto* smp = app.add_subcommand("sample", "Monte Carlo sample a circuit at the ontic level");
  smp->add_option("file", file, "circuit file (.cq)")->required();
  smp->add_option("--shots", shots, "number of shots")->required();
  auto* smp_seed = smp->add_option("--seed", seed, "RNG seed (default: QCUBE_SEED or 0)");
  smp->add_option("--threads", threads, "worker count (result is identical for any value)");
  smp->add_flag("--json", as_json, "machine-readable output");

  int n_random = 200;
  auto* ver = app.add_subcommand("verify", "Run the epistemic/qubit equivalence suite");
  ver->add_option("--random", n_random, "number of random octahedron states");
  auto* ver_seed = ver->add_option("--seed", seed, "RNG seed (default: QCUBE_SEED or 0)");
  ver->add_flag("--json", as_json, "machine-readable output");

  bool classes = false;
  bool table = false;
  auto* grp = app.add_subcommand("group", "Inspect the 24-element rotation group");
  auto* grp_classes = grp->add_flag("--classes", classes, "conjugacy classes only");
  grp->add_flag("--table", table, "Cayley table")->excludes(grp_classes);
  grp->add_flag("--json", as_json, "machine-readable output");

  auto* prs = app.add_subcommand("parse", "Parse a circuit and print its canonical form");
  prs->add_option("file", file, "circuit file (.cq)")->required();

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    const qcube::Circuit circuit = load_circuit(file);
    const auto branches = qcube::eval_exact(circuit);
    if (as_json)
      std::cout << qcube::eval_json(circuit, branches).dump() << "\n";
    else
      print_run_table(branches);
    return 0;
  }

  if (smp->parsed()) {
    const qcube::Circuit circuit = load_circuit(file);
    const auto result =
        qcube::sample(circuit, shots, default_seed(smp_seed, seed), threads);
    if (as_json) {
      std::cout << qcube::sample_json(result).dump() << "\n";
    } else {
      std::cout << "shots " << result.shots << ", seed " << result.seed << "\n";
      for (const auto& [key, n] : result.counts) std::cout << key << "  " << n << "\n";
    }
    return 0;
  }

  if (ver->parsed()) {
    qcube::SuiteOptions opts;
    opts.n_random = n_random;
    opts.seed = default_seed(ver_seed, seed);
    const qcube::Report report = qcube::run_full_suite(opts);
    if (as_json) {
      std::cout << qcube::report_json(report).dump() << "\n";
    } else {
      std::cout << report.checks << " checks, " << report.failures.size() << " failures\n";
      for (const auto& f : report.failures)
        std::cout << "FAIL " << f.kind << " " << f.inputs << ": lhs=" << f.lhs
                  << " rhs=" << f.rhs << "\n";
    }
    return report.ok() ? 0 : kExitVerifyFailed;
  }

  if (grp->parsed()) {
    const auto& group = qcube::RotationGroup::standard();
    if (as_json) {
      if (classes)
        std::cout << qcube::group_classes_json(group).dump() << "\n";
      else if (table)
        std::cout << qcube::group_table_json(group).dump() << "\n";
      else
        std::cout << qcube::group_json(group).dump() << "\n";
    } else if (classes) {
      for (const auto& cls : group.conjugacy_classes()) {
        std::cout << cls.kind << " (size " << cls.members.size() << "):";
        for (auto i : cls.members) std::cout << " " << group.element(i).name;
        std::cout << "\n";
      }
    } else if (table) {
      print_group_table(group);
    } else {
      print_group_listing(group);
    }
    return 0;
  }

  // parse
  const qcube::Circuit circuit = load_circuit(file);
  std::cout << qcube::pretty_print(circuit);
  return 0;
}

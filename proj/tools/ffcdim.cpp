// Batch front end: parse complex documents, run the dimension and
// codimension formulas, the homology oracle, and the formula-vs-oracle
// verification loop.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <memory>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>

#include "ffc/budget.hpp"
#include "ffc/random_complex.hpp"
#include "ffc/report.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitTimeout = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ffc::ComplexDocument load_document(const std::string& path) {
  try {
    return ffc::parse_complex_document(read_file(path));
  } catch (const ffc::Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void print_term_table(const ffc::DimReport& rep) {
  const char* op = rep.formula == ffc::DimFormula::Primal ? "-" : "+";
  const char* rank_name =
      rep.formula == ffc::DimFormula::Primal ? "s_n" : "r_n";
  std::cout << "  n    " << rank_name << "   gens  gb  term (dim R/I " << op
            << " n)\n";
  for (const auto& row : rep.per_degree) {
    std::cout << "  " << row.degree << "    " << row.expected_rank << "     "
              << row.generator_count << "     " << row.gb_size << "   "
              << row.term.to_string() << "\n";
  }
}

ffc::RingPtr ring_from_flags(int vars, const std::string& field_text,
                             const std::string& order_text) {
  ffc::CoefficientField field = ffc::CoefficientField::rationals();
  if (field_text != "QQ") {
    if (field_text.rfind("Fp(", 0) != 0 || field_text.back() != ')')
      throw InputError("bad field '" + field_text + "', use QQ or Fp(<p>)");
    field = ffc::CoefficientField::prime_field(
        std::stoul(field_text.substr(3, field_text.size() - 4)));
  }
  ffc::MonomialOrder order = order_text == "lex" ? ffc::MonomialOrder::Lex
                                                 : ffc::MonomialOrder::GrevLex;
  return ffc::make_ring(field, ffc::default_variables(vars), order);
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InputError("cannot write " + out_path);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dimension calculator for finite free complexes"};
  app.require_subcommand(1);

  long long timeout_ms = 0;
  app.add_option("--timeout-ms", timeout_ms,
                 "per-basis-computation budget in milliseconds");

  std::string file;
  bool json = false;

  auto* cmd_dim = app.add_subcommand("dim", "dimension via the minor formula");
  cmd_dim->add_option("file", file, "complex document")->required();

  auto* cmd_codim =
      app.add_subcommand("codim", "dimension of the dual and codimension");
  cmd_codim->add_option("file", file, "complex document")->required();

  auto* cmd_hom = app.add_subcommand("homology", "homology table");
  cmd_hom->add_option("file", file, "complex document")->required();

  auto* cmd_report = app.add_subcommand("report", "full analysis");
  cmd_report->add_option("file", file, "complex document")->required();
  cmd_report->add_flag("--json", json, "emit the JSON report");

  auto* cmd_verify = app.add_subcommand(
      "verify", "check the minor formula against the homology oracle");
  bool vrandom = false;
  int count = 50;
  std::uint64_t seed = 0;
  int vars = 3, maxdeg = 2, maxrank = 3, len = 4;
  std::string field_text = "Fp(32003)", order_text = "grevlex";
  cmd_verify->add_option("file", file, "complex document");
  cmd_verify->add_flag("--random", vrandom, "verify random complexes");
  cmd_verify->add_option("--count", count, "number of random complexes");
  cmd_verify->add_option("--seed", seed, "random seed");
  cmd_verify->add_option("--vars", vars, "number of variables");
  cmd_verify->add_option("--maxdeg", maxdeg, "max entry degree");
  cmd_verify->add_option("--maxrank", maxrank, "max rank per degree");
  cmd_verify->add_option("--len", len, "max homological length");

  auto* cmd_gen = app.add_subcommand("gen", "generate a complex document");
  std::vector<std::string> gen_args;
  std::string out_path;
  cmd_gen->add_option("what", gen_args,
                      "`koszul f1 f2 ...` or `random`");
  cmd_gen->add_option("--count", count, "documents to generate (random)");
  cmd_gen->add_option("--seed", seed, "random seed");
  cmd_gen->add_option("--vars", vars, "number of variables");
  cmd_gen->add_option("--maxdeg", maxdeg, "max entry degree");
  cmd_gen->add_option("--maxrank", maxrank, "max rank per degree");
  cmd_gen->add_option("--len", len, "max homological length");
  cmd_gen->add_option("--field", field_text, "QQ or Fp(<p>)");
  cmd_gen->add_option("--order", order_text, "lex or grevlex");
  cmd_gen->add_option("-o,--output", out_path, "output file ('-' = stdout)");

  CLI11_PARSE(app, argc, argv);

  std::unique_ptr<ffc::budget::Scope> budget_scope;
  if (timeout_ms > 0)
    budget_scope = std::make_unique<ffc::budget::Scope>(timeout_ms);

  try {
    if (cmd_dim->parsed()) {
      auto doc = load_document(file);
      ffc::DimReport rep = ffc::dim_via_fitting(doc.complex);
      std::cout << "dim = " << rep.result.to_string() << "\n";
      print_term_table(rep);
      return 0;
    }

    if (cmd_codim->parsed()) {
      auto doc = load_document(file);
      ffc::DimReport rep = ffc::dim_dual_via_fitting(doc.complex);
      ffc::ExtendedDim codim = ffc::bh_codimension(doc.complex);
      std::cout << "dim_dual = " << rep.result.to_string() << ", bh_codim = ";
      if (codim.is_plus_infinity())
        std::cout << "inf (exact complex)\n";
      else
        std::cout << codim.to_string() << "\n";
      print_term_table(rep);
      return 0;
    }

    if (cmd_hom->parsed()) {
      auto doc = load_document(file);
      ffc::HomologyDimension hd = ffc::dim_via_homology(doc.complex);
      std::cout << "dim (homology) = " << hd.dim.to_string() << "\n";
      std::cout << "inf H = " << hd.table.inf_h.to_string()
                << ", sup H = " << hd.table.sup_h.to_string() << "\n";
      for (const auto& [n, entry] : hd.table.per_degree) {
        std::cout << "  H_" << n << ": " << entry.presentation.generator_count
                  << " generators, "
                  << entry.presentation.relations.source_rank()
                  << " relations, dim = " << entry.dimension.to_string()
                  << "\n";
      }
      return 0;
    }

    if (cmd_report->parsed()) {
      auto doc = load_document(file);
      ffc::FullReport rep =
          ffc::analyze_complex(doc.complex, doc.name, /*with_homology=*/true);
      if (json) {
        std::cout << ffc::report_to_json(rep).dump(2) << "\n";
      } else {
        std::cout << "ring:      " << rep.ring_description << "\n"
                  << "dim:       " << rep.dim.result.to_string() << "\n"
                  << "dim_dual:  " << rep.dim_dual.result.to_string() << "\n"
                  << "bh_codim:  " << rep.bh_codim.to_string() << "\n"
                  << "acyclic:   " << (rep.acyclicity.acyclic ? "yes" : "no")
                  << "\n";
      }
      return 0;
    }

    if (cmd_verify->parsed()) {
      std::vector<std::pair<std::string, ffc::FiniteFreeComplex>> cases;
      if (vrandom) {
        ffc::RingPtr ring = ring_from_flags(vars, field_text, order_text);
        ffc::RandomComplexOptions opts;
        opts.vars = vars;
        opts.max_degree = maxdeg;
        opts.max_rank = maxrank;
        opts.length = len;
        std::mt19937_64 rng(seed);
        for (int i = 0; i < count; ++i)
          cases.emplace_back("random-" + std::to_string(i),
                             ffc::random_complex(ring, opts, rng));
      } else {
        if (file.empty())
          throw InputError("verify needs a file or --random");
        auto doc = load_document(file);
        cases.emplace_back(doc.name.empty() ? file : doc.name, doc.complex);
      }
      int agree = 0;
      for (const auto& [cname, complex] : cases) {
        ffc::ExtendedDim formula = ffc::dim_via_fitting(complex).result;
        ffc::ExtendedDim oracle = ffc::dim_via_homology(complex).dim;
        if (formula == oracle) {
          ++agree;
          continue;
        }
        std::cout << "MISMATCH on " << cname << ": formula "
                  << formula.to_string() << " vs homology "
                  << oracle.to_string() << "\ncounterexample document:\n"
                  << ffc::render_complex_document(complex, cname);
        return kExitMismatch;
      }
      std::cout << agree << "/" << cases.size() << " agree\n";
      return 0;
    }

    if (cmd_gen->parsed()) {
      if (gen_args.empty())
        throw InputError("gen needs `koszul f1 ...` or `random`");
      ffc::RingPtr ring = ring_from_flags(vars, field_text, order_text);
      if (gen_args[0] == "koszul") {
        if (gen_args.size() < 2) throw InputError("koszul needs polynomials");
        std::vector<ffc::Polynomial> tuple;
        for (std::size_t i = 1; i < gen_args.size(); ++i)
          tuple.push_back(ffc::parse_polynomial(ring, gen_args[i]));
        ffc::FiniteFreeComplex k = ffc::koszul_complex(ring, tuple);
        write_output(out_path, ffc::render_complex_document(k, "koszul"));
      } else if (gen_args[0] == "random") {
        ffc::RandomComplexOptions opts;
        opts.vars = vars;
        opts.max_degree = maxdeg;
        opts.max_rank = maxrank;
        opts.length = len;
        std::mt19937_64 rng(seed);
        ffc::FiniteFreeComplex c = ffc::random_complex(ring, opts, rng);
        write_output(out_path, ffc::render_complex_document(c, "random"));
      } else {
        throw InputError("unknown generator '" + gen_args[0] + "'");
      }
      return 0;
    }
  } catch (const ffc::TimeoutError& e) {
    std::cerr << "timeout: " << e.what() << "\n";
    return kExitTimeout;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ffc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}

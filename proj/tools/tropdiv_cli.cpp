// Command-line front end: enumerate boundary divisor types, compare the
// closed counting formula with enumeration, compute class group reports,
// and verify the WDVV relation tables on M-bar_{0,n}.

#include <tropdiv/class_group.hpp>
#include <tropdiv/enumeration.hpp>
#include <tropdiv/stable_curves.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::vector<int> alpha;
  std::vector<int> maximal;  // {d, n}
  std::string format = "table";
  std::string out;
  bool oracle = false;
  bool all_wdvv = false;
  int n = 0;
  int n_cap = 9;
};

tropdiv::TangencyProfile resolve_alpha(const Options& opt) {
  if (!opt.maximal.empty()) {
    return tropdiv::TangencyProfile::maximal_contact(opt.maximal[0], opt.maximal[1]);
  }
  if (opt.alpha.empty()) {
    throw std::invalid_argument("one of --alpha or --maximal is required");
  }
  return tropdiv::TangencyProfile(opt.alpha);
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file: " + opt.out);
  file << text;
}

std::string catalog_table(const tropdiv::DivisorCatalog& catalog) {
  std::ostringstream out;
  out << "alpha = (";
  for (std::size_t i = 0; i < catalog.alpha.alpha().size(); ++i) {
    if (i) out << ",";
    out << catalog.alpha.alpha()[i];
  }
  out << ")  N = " << catalog.size() << "\n";
  out << "shapes: " << catalog.count_shape(tropdiv::ShapeKind::Rocket) << " rocket, "
      << catalog.count_shape(tropdiv::ShapeKind::Airborne) << " airborne, "
      << catalog.count_shape(tropdiv::ShapeKind::Binary) << " binary\n";
  out << "roles:  " << catalog.count_role(tropdiv::Role::Alien) << " alien, "
      << catalog.count_role(tropdiv::Role::Airborne) << " airborne, "
      << catalog.count_role(tropdiv::Role::Terrestrial) << " terrestrial\n";
  for (const tropdiv::DivisorEntry& e : catalog.types) {
    out << e.key.substr(0, 16) << "  " << tropdiv::shape_name(e.shape.kind) << "  "
        << e.role.to_string() << "\n";
  }
  return out.str();
}

int run_enumerate(const Options& opt) {
  const tropdiv::TangencyProfile alpha = resolve_alpha(opt);
  const tropdiv::DivisorCatalog catalog = tropdiv::enumerate_divisor_types(alpha);
  if (opt.oracle) {
    const tropdiv::DivisorCatalog reference =
        tropdiv::oracle_enumerate(alpha, std::max(2, alpha.degree() + 1));
    bool same = catalog.size() == reference.size();
    for (int i = 0; same && i < catalog.size(); ++i) {
      same = catalog.types[static_cast<std::size_t>(i)].key ==
             reference.types[static_cast<std::size_t>(i)].key;
    }
    if (!same) {
      std::cerr << "oracle mismatch: taxonomy " << catalog.size() << " types, oracle "
                << reference.size() << " types\n";
      return kExitVerificationFailure;
    }
  }
  if (opt.format == "json") {
    emit(opt, tropdiv::catalog_to_json(catalog).dump(2) + "\n");
  } else if (opt.format == "csv") {
    emit(opt, tropdiv::catalog_to_csv(catalog));
  } else {
    emit(opt, catalog_table(catalog));
  }
  return kExitOk;
}

int run_count(const Options& opt) {
  if (opt.maximal.empty()) {
    throw std::invalid_argument("count requires --maximal D N");
  }
  const int d = opt.maximal[0];
  const int n = opt.maximal[1];
  const tropdiv::Integer formula = tropdiv::count_maximal_contact(d, n);
  const tropdiv::TangencyProfile alpha = tropdiv::TangencyProfile::maximal_contact(d, n);
  tropdiv::DivisorCatalog catalog = tropdiv::enumerate_divisor_types(alpha);
  if (opt.oracle) {
    catalog = tropdiv::oracle_enumerate(alpha, std::max(2, d + 1));
  }
  const bool match = formula == catalog.size();
  std::ostringstream out;
  out << formula.get_str() << " = " << catalog.size() << " "
      << (match ? "MATCH" : "MISMATCH") << "\n";
  emit(opt, out.str());
  return match ? kExitOk : kExitVerificationFailure;
}

int run_classgroup(const Options& opt) {
  const tropdiv::TangencyProfile alpha = resolve_alpha(opt);
  const tropdiv::ClassGroupReport report = tropdiv::class_group_report(alpha);
  if (opt.format == "json") {
    emit(opt, tropdiv::report_to_json(report).dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "N = " << report.N << "  relation rank = " << report.relation_rank
        << "  dimension = " << report.dimension << "\n";
    out << "convention: " << tropdiv::convention_name(report.convention) << "\n";
    for (const auto& [name, ok] : report.checks) {
      out << (ok ? "PASS " : "FAIL ") << name << "\n";
    }
    out << "basis (" << report.basis.size() << " divisors):\n";
    for (const std::string& key : report.basis) out << "  " << key << "\n";
    emit(opt, out.str());
  }
  return report.all_checks_pass() ? kExitOk : kExitVerificationFailure;
}

int run_wdvv(const Options& opt) {
  if (opt.n < 3 || opt.n > opt.n_cap) {
    throw std::invalid_argument("wdvv requires 3 <= n <= " + std::to_string(opt.n_cap));
  }
  if (opt.format == "csv") {
    std::vector<tropdiv::WdvvRelation> relations;
    if (opt.n >= 4) {
      if (opt.all_wdvv) {
        relations = tropdiv::all_wdvv_relations(opt.n);
      } else {
        for (const tropdiv::PivotedRelation& p : tropdiv::appendix_basis(opt.n)) {
          relations.push_back(p.relation);
        }
      }
    }
    emit(opt, tropdiv::relations_to_csv(relations, opt.n));
    return kExitOk;
  }
  const tropdiv::WdvvReport report = tropdiv::verify_wdvv_span(opt.n);
  std::ostringstream out;
  out << report.divisor_count << " divisors, " << report.basis_size << " relations, rank "
      << report.basis_rank << ", Picard dim " << report.picard_dimension << "\n";
  out << (report.rank_ok ? "PASS" : "FAIL") << " rank = C(n-1,2)-1\n";
  out << (report.span_ok ? "PASS" : "FAIL") << " all WDVV relations in span\n";
  out << (report.pivot_ok ? "PASS" : "FAIL") << " pivot triangularity\n";
  out << (report.picard_ok ? "PASS" : "FAIL") << " Picard dimension formula\n";
  emit(opt, out.str());
  return report.all_ok() ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary divisors of genus-zero logarithmic mapping spaces"};
  app.require_subcommand(1);
  Options opt;

  auto add_alpha_flags = [&opt](CLI::App* cmd) {
    cmd->add_option("--alpha", opt.alpha, "Tangency profile, e.g. --alpha 1,0,0")
        ->delimiter(',');
    cmd->add_option("--maximal", opt.maximal, "Maximal contact shortcut: D N")
        ->expected(2);
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "Enumerate boundary divisor types");
  add_alpha_flags(enumerate);
  enumerate->add_option("--format", opt.format)->check(CLI::IsMember({"table", "json", "csv"}));
  enumerate->add_option("--out", opt.out);
  enumerate->add_flag("--oracle", opt.oracle, "Cross-check against the exhaustive oracle");

  CLI::App* count = app.add_subcommand("count", "Formula vs enumeration for (d,0,...,0)");
  add_alpha_flags(count);
  count->add_option("--out", opt.out);
  count->add_flag("--oracle", opt.oracle, "Enumerate via the exhaustive oracle");

  CLI::App* classgroup = app.add_subcommand("classgroup", "Class group report");
  add_alpha_flags(classgroup);
  classgroup->add_option("--format", opt.format)->check(CLI::IsMember({"table", "json"}));
  classgroup->add_option("--out", opt.out);

  CLI::App* wdvv = app.add_subcommand("wdvv", "Boundary relations on M-bar_{0,n}");
  wdvv->add_option("--n", opt.n, "Number of markings")->required();
  wdvv->add_option("--format", opt.format)->check(CLI::IsMember({"table", "csv"}));
  wdvv->add_option("--out", opt.out);
  wdvv->add_flag("--all-wdvv", opt.all_wdvv, "Export all 2C(n,4) relations (csv)");
  wdvv->add_option("--cap", opt.n_cap, "Largest allowed n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(enumerate)) return run_enumerate(opt);
    if (app.got_subcommand(count)) return run_count(opt);
    if (app.got_subcommand(classgroup)) return run_classgroup(opt);
    if (app.got_subcommand(wdvv)) return run_wdvv(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitUsage;
}

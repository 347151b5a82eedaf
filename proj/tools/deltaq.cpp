// Command-line front end: identity verification, symmetric-function
// expansions, parking-function statistics and the combinatorial Delta side.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "deltaq/delta_ops.hpp"
#include "deltaq/hall_littlewood.hpp"
#include "deltaq/parking.hpp"
#include "deltaq/symfunc.hpp"
#include "deltaq/verify.hpp"

using namespace deltaq;

namespace {

std::string join(const std::vector<int>& xs, char sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? std::string(1, sep) : "") << xs[i];
  return out.str();
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void emit(const SymFunc& f, Basis basis, bool csv) {
  if (!csv) {
    std::cout << f.to_string(basis) << '\n';
    return;
  }
  std::cout << "partition,coefficient\n";
  for (const auto& [lambda, c] : basis_convert(f, basis))
    std::cout << csv_quote(lambda.to_string()) << ',' << csv_quote(c.to_string()) << '\n';
}

int get_int(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw std::invalid_argument("missing parameter '" + key + "'");
  return std::stoi(it->second);
}

int run_verify(const std::string& suite, const std::string& id, const std::string& params, int nmax,
               const std::string& out_path) {
  std::vector<IdentityReport> reports;
  if (!id.empty())
    reports.push_back(run_identity(id, parse_params(params)));
  else
    reports = run_suite(suite, nmax);
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw std::runtime_error("cannot open " + out_path);
  }
  std::ostream& out = out_path.empty() ? std::cout : file;
  for (const auto& r : reports) out << to_json_line(r) << '\n';
  const SuiteSummary s = summarize(reports);
  std::cout << "summary: " << reports.size() << " checks, " << s.equal << " equal, " << s.mismatch
            << " mismatch, " << s.skipped << " skipped\n";
  return s.mismatch == 0 ? 0 : 1;
}

SymFunc expand(const std::string& what, const std::string& mu_text, const std::string& params_text) {
  if (what == "P" || what == "Q" || what == "Htilde0" || what == "Htilde") {
    if (mu_text.empty()) throw std::invalid_argument("--mu is required for --what " + what);
    const Partition mu = Partition::parse(mu_text);
    if (what == "P") return hl_P(mu);
    if (what == "Q") return hl_Q(mu);
    if (what == "Htilde0") return modified_macdonald_t0(mu);
    return modified_macdonald_full(mu);
  }
  const Params p = parse_params(params_text);
  if (what == "lhs_nu" || what == "rhs_nu") {
    auto it = p.find("nu");
    if (it == p.end()) throw std::invalid_argument("missing parameter 'nu'");
    const Partition nu = Partition::parse(it->second);
    return what == "lhs_nu" ? lhs_nu(nu, get_int(p, "n")) : rhs_nu(nu, get_int(p, "n"));
  }
  if (what == "lhs_hook" || what == "rhs_hook") {
    const HookParams h{get_int(p, "k"), get_int(p, "m"), get_int(p, "n")};
    return what == "lhs_hook" ? lhs_hook_closed(h) : rhs_hook(h);
  }
  throw std::invalid_argument("unknown --what '" + what + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symmetric-function identities around Delta operators"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Run registered identity checks");
  std::string suite = "hook";
  std::string id;
  std::string params;
  int nmax = 5;
  std::string out_path;
  verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(suite_names()));
  verify->add_option("--id", id, "Single identity id")->check(CLI::IsMember(identity_ids()));
  verify->add_option("--params", params, "Parameters for --id, e.g. k=1,m=3,n=5 or nu=[2,1],n=4");
  verify->add_option("--nmax", nmax, "Size bound for the suite sweep");
  verify->add_option("--out", out_path, "Write JSON lines here instead of stdout");

  auto* expand_cmd = app.add_subcommand("expand", "Print a symmetric function");
  std::string what;
  std::string mu_text;
  std::string expand_params;
  std::string basis_name = "s";
  bool csv = false;
  expand_cmd
      ->add_option("--what", what, "P|Q|Htilde0|Htilde|lhs_nu|rhs_nu|lhs_hook|rhs_hook|ghry")
      ->required()
      ->check(CLI::IsMember({"P", "Q", "Htilde0", "Htilde", "lhs_nu", "rhs_nu", "lhs_hook", "rhs_hook", "ghry"}));
  expand_cmd->add_option("--mu", mu_text, "Partition such as [3,1,1]");
  expand_cmd->add_option("--params", expand_params, "k=..,m=..,n=.. or nu=[..],n=..");
  expand_cmd->add_option("--basis", basis_name, "Output basis: s, m, e, h or p")
      ->check(CLI::IsMember({"s", "m", "e", "h", "p"}));
  expand_cmd->add_flag("--csv", csv, "Emit partition,coefficient rows");

  auto* pf = app.add_subcommand("pf", "List parking functions as CSV");
  int pf_n = 3;
  bool stats = false;
  pf->add_option("--n", pf_n, "Size")->required()->check(CLI::Range(1, 8));
  pf->add_flag("--stats", stats, "Add area, dinv, word and ides columns");

  auto* side = app.add_subcommand("deltaside", "Combinatorial side of the Delta conjecture");
  int side_n = 3;
  int side_k = 1;
  bool t0 = false;
  bool q0 = false;
  side->add_option("--n", side_n, "Size")->required()->check(CLI::Range(1, 8));
  side->add_option("--k", side_k, "Number of selected rises is n-k")->required();
  auto* t0_flag = side->add_flag("--t0", t0, "Evaluate at t = 0");
  side->add_flag("--q0", q0, "Evaluate at q = 0")->excludes(t0_flag);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return run_verify(suite, id, params, nmax, out_path);
    if (*expand_cmd) {
      const Basis basis = basis_from_letter(basis_name[0]);
      if (what == "ghry") {
        const Params p = parse_params(expand_params);
        const auto [left, right] = ghry_sides(get_int(p, "n"), get_int(p, "k"));
        emit(left, basis, csv);
        emit(right, basis, csv);
      } else {
        emit(expand(what, mu_text, expand_params), basis, csv);
      }
      return 0;
    }
    if (*pf) {
      std::cout << "cars,areas" << (stats ? ",area,dinv,word,ides" : "") << '\n';
      for (const auto& f : enumerate_pfs(pf_n)) {
        std::cout << join(f.cars(), ' ') << ',' << join(f.path().area_seq(), ' ');
        if (stats)
          std::cout << ',' << area(f) << ',' << dinv(f) << ',' << join(word(f), ' ') << ',' << join(ides(f), ' ');
        std::cout << '\n';
      }
      return 0;
    }
    if (*side) {
      const Endpoint e = t0 ? Endpoint::t_zero : q0 ? Endpoint::q_zero : Endpoint::generic;
      std::cout << delta_side_combinatorial(side_n, side_k, e).to_string() << '\n';
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  }
  return 0;
}

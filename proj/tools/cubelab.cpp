#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cubelab/cubegraphs.hpp"
#include "cubelab/error.hpp"
#include "cubelab/harmonic.hpp"
#include "cubelab/io.hpp"
#include "cubelab/meshcotan.hpp"
#include "cubelab/oeis.hpp"
#include "cubelab/predicates.hpp"
#include "cubelab/sequences.hpp"
#include "cubelab/spectra.hpp"
#include "cubelab/verify.hpp"

using namespace cubelab;

namespace {

struct Globals {
  bool online = false;
  bool one_based = false;
  double tol = kDefaultClusterTol;
  std::string ordering = "binary";
};

Ordering ordering_for(Family family, const std::string& name) {
  Ordering o = parse_ordering(name);
  return is_ternary_family(family) ? detail::default_ternary(o) : o;
}

SignConvention parse_sign(const std::string& s) {
  if (s == "olp") return SignConvention::OLP;
  if (s == "oln") return SignConvention::OLN;
  throw PreconditionError("unknown sign convention '" + s + "', expected olp or oln");
}

/// Writes to the --out file when given, otherwise stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra, distance matrices and sequences of hypercube graph families"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--online,!--offline", g.online, "Allow network access for OEIS lookups (default offline)");
  app.add_flag("--one-based", g.one_based, "Print vertex indices starting at 1");
  app.add_option("--tol", g.tol, "Eigenvalue clustering tolerance")->check(CLI::PositiveNumber);
  app.add_option("--ordering", g.ordering, "binary|gray|ternary|ternary-gray");
  app.fallthrough();

  // build
  auto* build = app.add_subcommand("build", "Emit a family matrix");
  std::string family_name, format = "csv", out_path, sign_name = "olp";
  int n = 0;
  build->add_option("family", family_name, "ncube|hamming|tricube|regtricube|pow|powtri|powhamming")->required();
  build->add_option("n", n, "Dimension")->required();
  build->add_option("--sign", sign_name, "Laplacian sign convention: olp|oln");
  build->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  build->add_option("--out", out_path);

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of a family matrix");
  bool with_vectors = false;
  spectrum->add_option("family", family_name)->required();
  spectrum->add_option("n", n)->required();
  spectrum->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  spectrum->add_flag("--vectors", with_vectors, "Include eigenvectors (json only)");
  spectrum->add_option("--out", out_path);

  // verify
  auto* verify = app.add_subcommand("verify", "Check the published claims and write a JSON report");
  std::vector<std::string> claims;
  std::string range_text;
  verify->add_option("--claim", claims, "Claim id, repeatable (default: all)");
  verify->add_option("--n-range", range_text, "Dimension range a..b, clipped to each claim's domain");
  verify->add_option("--out", out_path);

  // activation
  auto* activation = app.add_subcommand("activation", "Compound activation function caf(n, r, p) as CSV");
  long long r = 0, p = 0;
  double scale = 1.0, mu = 1.0;
  activation->add_option("n", n)->required();
  activation->add_option("--r", r, "Single rank (default: all 1..2^n)");
  activation->add_option("--p", p, "Single active-set size (default: all 1..2^n)");
  activation->add_option("--scale", scale, "x = r * scale for the logistic column");
  activation->add_option("--mu", mu, "Logistic steepness");

  // poisson
  auto* poisson = app.add_subcommand("poisson", "Minimum-energy balanced source search on the [n]-cube");
  std::vector<int> plus;
  poisson->add_option("n", n)->required();
  poisson->add_option("--plus", plus, "Solve for one pattern: vertices carrying +1 (others -1)")->delimiter(',');

  // seq
  auto* seq = app.add_subcommand("seq", "Generate an integer sequence");
  std::string seq_name;
  long long count = 20;
  bool check = false;
  seq->add_option("--id", seq_name)->required();
  seq->add_option("--count", count)->check(CLI::PositiveNumber);
  seq->add_flag("--check", check, "Compare against the OEIS b-file (cache or bundled fixture when offline)");

  // euler
  auto* euler = app.add_subcommand("euler", "Euler circuit of the regular [n]-cube");
  euler->add_option("n", n)->required();

  // cotan
  auto* cotan = app.add_subcommand("cotan", "Cotangent weighted degree matrix of a triangle mesh file");
  std::string mesh_path;
  cotan->add_option("mesh", mesh_path)->required()->check(CLI::ExistingFile);
  cotan->add_option("--sign", sign_name);

  // plotdata
  auto* plot = app.add_subcommand("plotdata", "Tabular data for plots");
  std::string what;
  plot->add_option("what", what)->required()->check(CLI::IsMember({"caf", "spectrum", "extremes"}));
  plot->add_option("n", n)->required();
  plot->add_option("--family", family_name);

  CLI11_PARSE(app, argc, argv);
  const int base = g.one_based ? 1 : 0;

  try {
    if (*build) {
      const Family f = parse_family(family_name);
      GraphMatrix m = build_family(f, n, ordering_for(f, g.ordering));
      if (parse_sign(sign_name) == SignConvention::OLN && m.kind == MatrixKind::Laplacian) m.entries = -m.entries;
      Output out(out_path);
      if (format == "json")
        out.stream() << matrix_to_json(m).dump() << '\n';
      else
        write_matrix_csv(out.stream(), m);
    } else if (*spectrum) {
      const Family f = parse_family(family_name);
      const GraphMatrix m = build_family(f, n, ordering_for(f, g.ordering));
      const Spectrum s = eig_sym(m, g.tol, with_vectors && format == "json");
      Output out(out_path);
      if (format == "csv") {
        write_spectrum_csv(out.stream(), s);
      } else {
        nlohmann::ordered_json j;
        j["matrix"] = {{"family", to_string(f)}, {"n", n}, {"ordering", to_string(m.ordering)}, {"N", m.size()}};
        j["eigenvalues"] = std::vector<double>(s.values.begin(), s.values.end());
        auto clusters = nlohmann::ordered_json::array();
        for (const auto& c : s.clusters) clusters.push_back({{"value", c.value}, {"multiplicity", c.multiplicity}});
        j["clusters"] = clusters;
        const auto st = spectral_stats(s);
        j["spectral_radius"] = st.radius;
        j["eigengap"] = st.eigengap ? nlohmann::ordered_json(*st.eigengap) : nullptr;
        j["spectral_gap"] = st.spectral_gap ? nlohmann::ordered_json(*st.spectral_gap) : nullptr;
        if (s.has_vectors()) {
          auto cols = nlohmann::ordered_json::array();
          for (Eigen::Index c = 0; c < s.vectors.cols(); ++c)
            cols.push_back(std::vector<double>(s.vectors.col(c).begin(), s.vectors.col(c).end()));
          j["eigenvectors"] = cols;
        }
        out.stream() << j.dump(2) << '\n';
      }
    } else if (*verify) {
      VerifyOptions options;
      options.claims = claims;
      options.offline = !g.online;
      if (!range_text.empty()) options.n_range = parse_range(range_text);
      const VerificationReport report = run_verification(options);
      Output out(out_path);
      out.stream() << report.to_json().dump(2) << '\n';
      for (const auto& e : report.entries)
        std::cerr << e.claim << (e.n ? " n=" + std::to_string(*e.n) : "") << ": " << to_string(e.status) << '\n';
      return report.any_failed() ? 1 : 0;
    } else if (*activation) {
      const long long size = 1LL << std::clamp(n, 0, 20);
      std::cout << "r,p,numerator,denominator,value,logistic\n";
      for (long long rr = r ? r : 1; rr <= (r ? r : size); ++rr)
        for (long long pp = p ? p : 1; pp <= (p ? p : size); ++pp) {
          const Rational v = caf(n, rr, pp);
          std::cout << rr << ',' << pp << ',' << boost::multiprecision::numerator(v) << ','
                    << boost::multiprecision::denominator(v) << ',' << format_number(to_double(v)) << ','
                    << format_number(logistic(static_cast<double>(rr) * scale, mu)) << '\n';
        }
    } else if (*poisson) {
      if (!plus.empty()) {
        const auto L = tricube_laplacian(n).entries;
        Eigen::VectorXd f = Eigen::VectorXd::Constant(L.rows(), -1.0);
        for (int v : plus) {
          if (v - base < 0 || v - base >= L.rows()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
          f(v - base) = 1.0;
        }
        const PoissonSolution s = solve_min_norm(L, f);
        nlohmann::ordered_json j;
        j["n"] = n;
        j["energy"] = s.energy;
        j["norm_l2"] = s.norm_l2;
        j["residual"] = s.residual;
        j["u"] = std::vector<double>(s.u.begin(), s.u.end());
        std::cout << j.dump(2) << '\n';
      } else {
        // Patterns are always reported 1-based.
        const EnergySearch s = min_energy_search(n);
        nlohmann::ordered_json j;
        j["n"] = n;
        if (const auto exact = recognize_rational(s.best_energy)) {
          j["best_energy_num"] = boost::multiprecision::numerator(*exact).convert_to<long long>();
          j["best_energy_den"] = boost::multiprecision::denominator(*exact).convert_to<long long>();
        }
        j["best_energy_float"] = s.best_energy;
        auto patterns = nlohmann::ordered_json::array();
        for (const auto& pattern : s.best_patterns) {
          std::vector<int> one_based;
          for (int v : pattern) one_based.push_back(v + 1);
          patterns.push_back(one_based);
        }
        j["patterns"] = patterns;
        j["norm_l2"] = s.best_norm_l2;
        std::cout << j.dump(2) << '\n';
      }
    } else if (*seq) {
      const SequenceId id = parse_sequence(seq_name);
      const auto values = generate(id, count);
      const long long first = first_index(id);
      for (std::size_t i = 0; i < values.size(); ++i)
        std::cout << first + static_cast<long long>(i) << ' ' << to_string(values[i]) << '\n';
      if (check && id == SequenceId::ProdSeq) {
        // Only the moduli at even positions are expected to agree with A288834.
        const oeis::BFile remote = oeis::fetch("A288834", !g.online);
        const auto local = generate_integers(id, count);
        std::size_t compared = 0, agreed = 0;
        for (std::size_t i = 1; i < local.size(); i += 2) {
          const auto v = remote.at(first + static_cast<long long>(i));
          if (!v) continue;
          ++compared;
          agreed += abs(*v) == abs(local[i]);
        }
        std::cerr << "A288834 (" << oeis::to_string(remote.source) << "): " << agreed << '/' << compared
                  << " even-position moduli agree\n";
        if (agreed != compared) return 1;
      } else if (check) {
        const auto& links = oeis::fixture_links();
        auto it = std::find_if(links.begin(), links.end(), [&](const auto& l) { return l.id == id; });
        if (it == links.end()) throw PreconditionError(to_string(id) + " has no linked OEIS entry");
        const oeis::BFile remote = oeis::fetch(it->anum, !g.online);
        std::vector<BigInt> local = generate_integers(id, count);
        for (auto& v : local) v *= it->sign;
        const auto cmp = oeis::compare(local, remote, it->remote_offset);
        std::cerr << it->anum << " (" << oeis::to_string(remote.source) << "): " << cmp.matched << '/' << cmp.overlap
                  << " terms match\n";
        if (cmp.first_mismatch) return 1;
      }
    } else if (*euler) {
      const auto circuit = eulerian_circuit(n);
      if (!circuit) {
        std::cerr << "no Euler circuit: degree " << regular_tricube_degree(n) << " is odd\n";
        return 1;
      }
      for (std::size_t i = 0; i < circuit->size(); ++i) std::cout << (i ? " " : "") << (*circuit)[i] + base;
      std::cout << '\n';
    } else if (*cotan) {
      std::ifstream in(mesh_path);
      const Eigen::MatrixXd W = build_wdm(read_trimesh(in), parse_sign(sign_name));
      for (Eigen::Index i = 0; i < W.rows(); ++i) {
        for (Eigen::Index j = 0; j < W.cols(); ++j) std::cout << (j ? "," : "") << format_number(W(i, j));
        std::cout << '\n';
      }
    } else if (*plot) {
      if (what == "caf") {
        std::cout << "r,p,caf\n";
        const long long size = 1LL << n;
        for (long long rr = 1; rr <= size; ++rr)
          for (long long pp = 1; pp <= size; ++pp)
            std::cout << rr << ',' << pp << ',' << format_number(to_double(caf(n, rr, pp))) << '\n';
      } else if (what == "spectrum") {
        const Family f = parse_family(family_name.empty() ? "tricube" : family_name);
        write_spectrum_csv(std::cout, eig_sym(build_family(f, n, ordering_for(f, g.ordering)), g.tol, false));
      } else {
        std::cout << "n,lambda_min,lambda_max\n";
        for (int k = 2; k <= n; ++k) {
          const auto e = pow_hamming_extremes(k);
          std::cout << k << ',' << format_number(e.lambda_min) << ',' << format_number(e.lambda_max) << '\n';
        }
      }
    }
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}

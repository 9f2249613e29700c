#ifndef NONINC_TOOLS_CLI_HPP
#define NONINC_TOOLS_CLI_HPP

// Command-line front end.  Exit codes: 0 success or valid, 1 invalid
// certificate or violated invariant, 2 usage error, 3 node budget exhausted.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "noninc/arcs.hpp"
#include "noninc/bounds.hpp"
#include "noninc/certificate.hpp"
#include "noninc/plane.hpp"
#include "noninc/search.hpp"

namespace noninc::cli {

enum exit_code : int { ok = 0, invalid = 1, usage = 2, budget = 3 };

inline int exit_for(errc code) {
  switch (code) {
    case errc::axiom_violation:
    case errc::not_square:
    case errc::bad_order:
    case errc::parse_error:
    case errc::not_extremal:
    case errc::odd_order_unsupported:
    case errc::construction_check_failed:
    case errc::plane_mismatch:
      return invalid;
    default:
      return usage;
  }
}

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Plane load_plane_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot read " + path);
  return validate_imported(read_incidence(in));
}

/// `<q>` for PG(2,q) over the default field, otherwise a matrix file.
inline Plane load_plane_spec(const std::string& spec) {
  if (!spec.empty() && spec.find_first_not_of("0123456789") == std::string::npos)
    return build_pg2(static_cast<std::uint32_t>(std::stoul(spec)));
  return load_plane_file(spec);
}

inline NonincidenceCertificate load_certificate(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot read " + path);
  return read_certificate(in);
}

inline void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw usage_error("cannot write " + path);
}

inline unsigned worker_count(unsigned requested) {
  if (const char* env = std::getenv("NONINC_THREADS")) {
    const std::string s(env);
    if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) {
      const unsigned long v = std::stoul(s);
      if (v >= 1) return static_cast<unsigned>(v);
    }
  }
  return std::max(1u, requested);
}

inline void describe_plane(std::ostream& out, const Plane& pl) {
  out << "order q=" << pl.order() << " points=" << pl.num_points() << " lines=" << pl.num_lines()
      << " points_per_line=" << pl.order() + 1 << '\n'
      << "ref " << pl.reference() << '\n';
}

inline std::string decimal(const Rational& r) {
  const BigInt scaled = numerator(r) * 1000000 / denominator(r);
  const bool neg = scaled < 0;
  BigInt mag = neg ? BigInt(-scaled) : scaled;
  std::string digits = mag.str();
  while (digits.size() < 7) digits.insert(digits.begin(), '0');
  return (neg ? "-" : "") + digits.substr(0, digits.size() - 6) + "." + digits.substr(digits.size() - 6);
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nonincident points and lines in projective planes", "noninc"};
  app.require_subcommand(1);

  // plane
  auto* plane_cmd = app.add_subcommand("plane", "build PG(2,q) or validate an incidence matrix");
  std::uint32_t plane_q = 0;
  std::string plane_import, plane_export;
  auto* plane_q_opt = plane_cmd->add_option("--q", plane_q, "prime power order");
  auto* plane_import_opt = plane_cmd->add_option("--import", plane_import, "incidence matrix file");
  plane_q_opt->excludes(plane_import_opt);
  plane_cmd->add_option("--export", plane_export, "write the incidence matrix here");

  // arc
  auto* arc_cmd = app.add_subcommand("arc", "construct a Denniston maximal arc");
  std::uint32_t arc_v = 0, arc_u = 0, arc_max_v = default_max_arc_degree;
  std::uint64_t arc_q = 0, arc_beta = 0;
  std::string arc_cert;
  auto* arc_v_opt = arc_cmd->add_option("--v", arc_v, "q = 2^v");
  auto* arc_u_opt = arc_cmd->add_option("--u", arc_u, "beta = 2^u");
  auto* arc_q_opt = arc_cmd->add_option("--q", arc_q, "plane order (alternative to --v)");
  auto* arc_beta_opt = arc_cmd->add_option("--beta", arc_beta, "intersection size (alternative to --u)");
  arc_v_opt->excludes(arc_q_opt);
  arc_u_opt->excludes(arc_beta_opt);
  arc_cmd->add_option("--max-v", arc_max_v, "largest v accepted")->capture_default_str();
  arc_cmd->add_option("--cert", arc_cert, "write the nonincidence certificate (needs u = v/2)");

  // bound
  auto* bound_cmd = app.add_subcommand("bound", "tabulate the upper bound on f");
  std::uint64_t bound_qmax = 0;
  bound_cmd->add_option("--q-max", bound_qmax, "largest order")->required()->check(CLI::Range(2ull, 1ull << 20));

  // search
  auto* search_cmd = app.add_subcommand("search", "compute or bound f for a plane");
  std::uint32_t search_q = 0;
  std::string search_import, search_cert, search_initial;
  bool search_exact = false, search_heuristic = false, search_nondet = false;
  std::uint64_t search_seeds = 10, search_budget = 100'000'000;
  unsigned search_threads = 1;
  auto* sq = search_cmd->add_option("--q", search_q, "prime power order");
  auto* si = search_cmd->add_option("--import", search_import, "incidence matrix file");
  sq->excludes(si);
  auto* ex = search_cmd->add_flag("--exact", search_exact, "branch and bound (default)");
  auto* he = search_cmd->add_flag("--heuristic", search_heuristic, "greedy with swaps");
  ex->excludes(he);
  search_cmd->add_option("--seeds", search_seeds, "heuristic seeds 0..k-1")->check(CLI::PositiveNumber);
  search_cmd->add_option("--budget", search_budget, "node budget")->check(CLI::PositiveNumber);
  search_cmd->add_option("--threads", search_threads, "workers (NONINC_THREADS overrides)");
  search_cmd->add_flag("--nondeterministic", search_nondet, "allow scheduling-dependent certificates");
  search_cmd->add_option("--initial", search_initial, "certificate seeding the incumbent");
  search_cmd->add_option("--cert", search_cert, "write the best certificate here");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check a nonincidence certificate");
  std::string verify_plane, verify_cert;
  verify_cmd->add_option("--plane", verify_plane, "order q (PG(2,q)) or incidence matrix file")->required();
  verify_cmd->add_option("--cert", verify_cert, "certificate file")->required();

  // figure
  auto* figure_cmd = app.add_subcommand("figure", "CSV of the line bound against s");
  std::uint64_t figure_q = 0, figure_smax = 0;
  figure_cmd->add_option("--q", figure_q, "plane order")->required()->check(CLI::Range(2ull, 1ull << 20));
  figure_cmd->add_option("--s-max", figure_smax, "largest s")->required()->check(CLI::Range(0ull, 1ull << 24));

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return usage;
  }

  try {
    if (plane_cmd->parsed()) {
      if (plane_import_opt->count()) {
        const Plane pl = load_plane_file(plane_import);
        out << "valid projective plane\n";
        describe_plane(out, pl);
        if (!plane_export.empty()) save_text(plane_export, incidence_text(pl.incidence()));
        return ok;
      }
      if (!plane_q_opt->count()) throw usage_error("plane needs --q or --import");
      const Plane pl = build_pg2(plane_q);
      out << "PG(2," << plane_q << ")\n";
      describe_plane(out, pl);
      if (!plane_export.empty()) save_text(plane_export, incidence_text(pl.incidence()));
      return ok;
    }

    if (arc_cmd->parsed()) {
      if (arc_q_opt->count() || arc_beta_opt->count()) {
        if (!arc_q_opt->count() || !arc_beta_opt->count())
          throw usage_error("--q and --beta must be given together");
        if (arc_q % 2 == 1) maximal_arc(arc_q, arc_beta, arc_max_v);  // throws the documented refusal
        const auto v = log2_exact(arc_q), u = log2_exact(arc_beta);
        if (!v || !u) throw error(errc::bad_parameters, "order and beta must be powers of two");
        arc_v = *v;
        arc_u = *u;
      } else if (!arc_v_opt->count() || !arc_u_opt->count()) {
        throw usage_error("arc needs --v and --u (or --q and --beta)");
      }
      const MaximalArc arc = denniston_arc(arc_v, arc_u, arc_max_v);
      const Plane pl = build_pg2(FieldTable::build(2, arc_v));
      const ArcCheck check = verify_maximal_arc(pl, arc.points);
      out << "maximal arc in PG(2," << pl.order() << "): s=" << arc.s << " beta=" << arc.beta
          << " external=" << check.external << " secant=" << check.secant << '\n'
          << "ARC " << arc.construction->describe() << '\n';
      if (2 * arc_u == arc_v) {
        const auto cert = nonincident_from_arc(pl, arc);
        out << "nonincident set s=" << cert.s << " valid=" << (verify_certificate(pl, cert) ? "yes" : "no") << '\n';
        if (!arc_cert.empty()) save_text(arc_cert, certificate_text(cert));
      } else if (!arc_cert.empty()) {
        nonincident_from_arc(pl, arc);  // throws NotExtremal
      }
      return ok;
    }

    if (bound_cmd->parsed()) {
      out << "q,bound,is_square,attained_by_construction\n";
      for (std::uint64_t q = 2; q <= bound_qmax; ++q) {
        const bool square = is_perfect_square(q);
        const auto v = log2_exact(q);
        const bool attained = v && *v % 2 == 0;
        out << q << ',' << stinson_bound(q) << ',' << (square ? "true" : "false") << ','
            << (attained ? "true" : "false") << '\n';
      }
      return ok;
    }

    if (search_cmd->parsed()) {
      if (!sq->count() && !si->count()) throw usage_error("search needs --q or --import");
      const Plane pl = sq->count() ? build_pg2(search_q) : load_plane_file(search_import);
      if (search_heuristic) {
        NonincidenceCertificate best;
        std::uint64_t best_seed = 0;
        for (std::uint64_t seed = 0; seed < search_seeds; ++seed) {
          auto c = greedy_heuristic(pl, seed);
          if (seed == 0 || c.s > best.s) {
            best = std::move(c);
            best_seed = seed;
          }
        }
        out << "f>=" << best.s << " heuristic\n"
            << "seeds=" << search_seeds << " best_seed=" << best_seed << " upper_bound=" << stinson_bound(pl.order())
            << '\n';
        if (!search_cert.empty()) save_text(search_cert, certificate_text(best));
        return ok;
      }
      SearchConfig cfg;
      cfg.node_budget = search_budget;
      cfg.workers = worker_count(search_threads);
      cfg.deterministic = !search_nondet;
      if (!search_initial.empty()) cfg.initial = load_certificate(search_initial);
      const SearchResult r = exact_f(pl, cfg);
      if (!search_cert.empty()) save_text(search_cert, certificate_text(r.certificate));
      if (r.status == SearchStatus::proven) {
        out << "f=" << r.value << " proven\n" << "nodes=" << r.nodes << '\n';
        return ok;
      }
      out << "f>=" << r.value << " budget_exhausted\n" << "nodes=" << r.nodes << '\n';
      return budget;
    }

    if (verify_cmd->parsed()) {
      const Plane pl = load_plane_spec(verify_plane);
      const auto cert = load_certificate(verify_cert);
      if (verify_certificate(pl, cert)) {
        out << "valid s=" << cert.s << '\n';
        return ok;
      }
      out << "invalid: points and lines are not a nonincident s-by-s set\n";
      return invalid;
    }

    if (figure_cmd->parsed()) {
      out << "s,external_line_bound,s_line,external_line_bound_decimal,relation\n";
      for (std::uint64_t s = 0; s <= figure_smax; ++s) {
        const Rational b = external_line_bound(figure_q, s);
        const Rational diag(s);
        const char* rel = b > diag ? ">" : (b == diag ? "=" : "<");
        out << s << ',' << to_string(b) << ',' << s << ',' << decimal(b) << ',' << rel << '\n';
      }
      return ok;
    }
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << '\n';
    return usage;
  } catch (const error& e) {
    err << e.what() << '\n';
    return exit_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
  return usage;
}

}  // namespace noninc::cli

#endif  // NONINC_TOOLS_CLI_HPP

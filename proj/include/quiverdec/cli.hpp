#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "quiverdec/oracle.hpp"

namespace quiverdec {

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  out << data;
  if (!out) throw ParseError("cannot write " + path);
}

inline void print_barcode_lines(const Barcode& b, std::ostream& out) {
  for (const auto& [iv, mult] : b)
    out << endpoint_to_string(iv.left) << " " << endpoint_to_string(iv.right)
        << " " << mult << "\n";
}

inline void print_report(const CertificateReport& r, std::ostream& out) {
  auto line = [&out](const char* name, const CheckResult& c) {
    out << name << ": " << (c.passed ? "pass" : "FAIL");
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  };
  line("structure", r.structure);
  line("membership", r.membership);
  line("closure", r.closure);
  line("independence", r.independence);
  line("spanning", r.spanning);
  line("dimension", r.dimension);
  out << "certificate: " << (r.all_passed() ? "accepted" : "rejected") << "\n";
}

}  // namespace detail

// Exit codes: 0 success, 1 unreadable/malformed input or bad flags,
// 2 internal invariant failure or oracle disagreement, 3 certificate
// rejected, 4 oracle preconditions unmet.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Interval decomposition of quiver representations on a path "
               "window with zero or constant tails"};
  app.require_subcommand(1);

  std::string input, cert_out, cert_path, output;
  std::string method = "rank";
  std::string tails = "zz";
  bool barcode_only = false;
  int window = 4, max_dim = 3, n_max = 5;
  u64 p = 2, seed = 0;

  CLI::App* dec = app.add_subcommand(
      "decompose", "print the barcode of a representation file");
  dec->add_option("input", input, "representation file")->required();
  dec->add_option("--certificate", cert_out,
                  "also write a decomposition certificate to this path");
  dec->add_flag("--barcode-only", barcode_only,
                "skip the certificate self-check");

  CLI::App* ver = app.add_subcommand(
      "verify", "check a decomposition certificate against a representation");
  ver->add_option("input", input, "representation file")->required();
  ver->add_option("certificate", cert_path, "certificate file")->required();

  CLI::App* orc = app.add_subcommand(
      "oracle", "recompute the barcode independently and compare");
  orc->add_option("input", input, "representation file")->required();
  orc->add_option("--method", method, "rank (composite ranks) or idempotent "
                                      "(exhaustive splitting)")
      ->check(CLI::IsMember({"rank", "idempotent"}));

  CLI::App* gen = app.add_subcommand(
      "gen", "write a seeded random representation file");
  gen->add_option("output", output, "destination path")->required();
  gen->add_option("--window", window, "number of window vertices")
      ->check(CLI::Range(1, 64));
  gen->add_option("--max-dim", max_dim, "per-vertex dimension bound")
      ->check(CLI::Range(0, 16));
  gen->add_option("--p", p, "field modulus, must be prime");
  gen->add_option("--tails", tails,
                  "tail modes, left then right: z = zero, c = constant")
      ->check(CLI::IsMember({"zz", "zc", "cz", "cc"}));
  gen->add_option("--seed", seed, "generator seed");

  CLI::App* demo = app.add_subcommand(
      "demo", "decompose growing truncations of the non-decomposable chain");
  demo->add_option("--n-max", n_max, "largest window right endpoint")
      ->check(CLI::Range(1, 32));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*dec) {
      Representation r = parse_representation(detail::read_file(input));
      Decomposition d = decompose(r);
      if (!barcode_only || !cert_out.empty()) {
        Certificate c = make_certificate(r, d);
        if (!barcode_only) {
          CertificateReport report = certify(r, c);
          if (!report.all_passed())
            throw InvariantError("self-check rejected a fresh certificate");
        }
        if (!cert_out.empty())
          detail::write_file(cert_out, serialize_certificate(c));
      }
      detail::print_barcode_lines(d.barcode, out);
      return 0;
    }
    if (*ver) {
      Representation r = parse_representation(detail::read_file(input));
      Certificate c = parse_certificate(detail::read_file(cert_path));
      CertificateReport report = certify(r, c);
      detail::print_report(report, out);
      return report.all_passed() ? 0 : 3;
    }
    if (*orc) {
      Representation r = parse_representation(detail::read_file(input));
      Barcode reference = method == "rank" ? rank_formula_barcode(r)
                                           : idempotent_bruteforce_barcode(r);
      Barcode computed = decompose(r).barcode;
      detail::print_barcode_lines(reference, out);
      if (reference == computed) {
        out << "AGREE\n";
        return 0;
      }
      out << "DISAGREE\n";
      return 2;
    }
    if (*gen) {
      if (p < 2 || p >= (u64{1} << 32) || !is_prime(static_cast<u32>(p)))
        throw ParseError("--p must be a prime below 2^32");
      TailMode lt = tails[0] == 'c' ? TailMode::Constant : TailMode::Zero;
      TailMode rt = tails[1] == 'c' ? TailMode::Constant : TailMode::Zero;
      Representation r = random_representation(
          window, max_dim, static_cast<u32>(p), lt, rt, seed);
      detail::write_file(output, serialize_representation(r));
      return 0;
    }
    out << counterexample_demo(n_max);
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace quiverdec

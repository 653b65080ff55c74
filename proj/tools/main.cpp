#include <chrono>
#include <deque>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "r4embed/complex.hpp"
#include "r4embed/embed.hpp"
#include "r4embed/homology.hpp"
#include "r4embed/json_io.hpp"
#include "r4embed/model.hpp"
#include "r4embed/presentation.hpp"
#include "r4embed/verify.hpp"

namespace {

using nlohmann::json;
using namespace r4embed;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitViolation = 2;

// Input arguments are a path when one exists on disk (or "-" for stdin),
// otherwise inline text.
std::string slurp(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + arg + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

IntegerMatrix read_matrix(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '[' || text[first] == '{'))
    return matrix_from_json(json::parse(text));
  return matrix_from_text(text);
}

struct CommonOpts {
  bool compress = false;
  bool no_verify = false;
  bool no_prune = false;
  unsigned workers = 1;
  std::string format = "json";
  unsigned long long seed = 0;
  std::string out_path;
  std::string off_path;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_flag("--compress", o.compress, "binary-compress before realizing");
  cmd->add_flag("--no-verify", o.no_verify, "skip the embedding check");
  cmd->add_flag("--no-prune", o.no_prune, "disable verifier pair pruning");
  cmd->add_option("--workers", o.workers, "verifier worker threads")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--seed", o.seed, "seed for randomized helpers");
  cmd->add_option("--out", o.out_path, "write the main artifact here");
  cmd->add_option("--off", o.off_path, "also write a float OFF projection");
}

// Realize + optional verification; shared by `realize` and `reduce`.
int finish_realized(const RealizedComplex& rc, const CommonOpts& o) {
  if (!o.off_path.empty()) emit(realized_to_off(rc), o.off_path);
  emit(dump(realized_to_json(rc)), o.out_path);
  if (o.no_verify) return kExitOk;

  CheckOptions copts;
  copts.prune = !o.no_prune;
  copts.workers = o.workers;
  const IntersectionReport rep = check_embedding(rc, copts);
  const SigmaCertificate sigma = check_sigma_condition(rc);
  if (!rep.clean() || !sigma.ok) {
    std::cerr << "verification failed: "
              << rep.violations.size() << " violation(s), "
              << rep.degeneracies.size() << " degeneracy(ies)";
    if (!sigma.ok) std::cerr << "; sigma: " << sigma.problem;
    std::cerr << '\n';
    for (const Violation& v : rep.violations)
      std::cerr << "  " << to_string(v.a) << " x " << to_string(v.b) << '\n';
    return kExitViolation;
  }
  std::cerr << "verified: " << rep.checked_pairs << " pairs checked, "
            << rep.pruned_pairs << " pruned\n";
  return kExitOk;
}

int cmd_realize(const std::string& input, const CommonOpts& o) {
  const Presentation p = parse_presentation(slurp(input));
  return finish_realized(realize(p, o.compress), o);
}

int cmd_reduce(const std::string& input, const CommonOpts& o) {
  const IntegerMatrix m = read_matrix(slurp(input));
  return finish_realized(realize(matrix_to_presentation(m), o.compress), o);
}

int cmd_verify(const std::string& input, const CommonOpts& o) {
  const RealizedComplex rc = realized_from_json(json::parse(slurp(input)));
  CheckOptions copts;
  copts.prune = !o.no_prune;
  copts.workers = o.workers;
  const IntersectionReport rep = check_embedding(rc, copts);
  const SigmaCertificate sigma = check_sigma_condition(rc);

  if (o.format == "text") {
    std::ostringstream out;
    out << "pairs checked: " << rep.checked_pairs << '\n'
        << "pairs pruned:  " << rep.pruned_pairs << '\n'
        << "violations:    " << rep.violations.size() << '\n'
        << "degeneracies:  " << rep.degeneracies.size() << '\n'
        << "sigma:         " << (sigma.ok ? "ok" : sigma.problem) << '\n';
    for (const Violation& v : rep.violations)
      out << "  " << to_string(v.a) << " x " << to_string(v.b) << '\n';
    emit(out.str(), o.out_path);
  } else {
    json j = report_to_json(rep);
    j["sigma"] = sigma_to_json(sigma);
    emit(dump(j), o.out_path);
  }
  return (rep.clean() && sigma.ok) ? kExitOk : kExitViolation;
}

int cmd_homology(const std::string& input, const CommonOpts& o) {
  const json j = json::parse(slurp(input));
  const SimplicialComplex2 k =
      j.contains("complex") ? complex_from_json(j.at("complex"))
                            : complex_from_json(j);
  const HomologyGroups h = homology_groups(k);
  if (o.format == "text") {
    std::ostringstream out;
    out << "H0 = " << h.h0.to_string() << '\n'
        << "H1 = " << h.h1.to_string() << '\n'
        << "H2 = " << h.h2.to_string() << '\n';
    emit(out.str(), o.out_path);
  } else {
    emit(dump({{"H0", decomposition_to_json(h.h0)},
               {"H1", decomposition_to_json(h.h1)},
               {"H2", decomposition_to_json(h.h2)}}),
         o.out_path);
  }
  return kExitOk;
}

int cmd_snf(const std::string& input, const CommonOpts& o) {
  const IntegerMatrix m = read_matrix(slurp(input));
  const SNFResult r = smith_normal_form(m);
  if (o.format == "text") {
    std::ostringstream out;
    for (std::size_t i = 0; i < r.invariant_factors.size(); ++i)
      out << (i ? " " : "") << r.invariant_factors[i];
    out << '\n';
    emit(out.str(), o.out_path);
  } else {
    json factors = json::array();
    for (const Integer& d : r.invariant_factors) factors.push_back(d.str());
    emit(dump({{"invariant_factors", std::move(factors)},
               {"U", matrix_to_json(r.U)},
               {"V", matrix_to_json(r.V)},
               {"D", matrix_to_json(r.diagonal(m.rows(), m.cols()))}}),
         o.out_path);
  }
  return kExitOk;
}

int cmd_compress(const std::string& input, const CommonOpts& o) {
  const Presentation p = pad_relations(parse_presentation(slurp(input)));
  const Presentation c = binary_compress(p);
  if (o.format == "text") {
    std::ostringstream out;
    out << print_presentation(c) << '\n'
        << "s(P) = " << unary_size(p) << "  b(P) = " << binary_size(p) << '\n'
        << "s(P~) = " << unary_size(c) << "  b(P~) = " << binary_size(c)
        << '\n';
    emit(out.str(), o.out_path);
  } else {
    emit(dump({{"input_sizes",
                {{"unary", unary_size(p).str()}, {"binary", binary_size(p).str()}}},
               {"output_sizes",
                {{"unary", unary_size(c).str()}, {"binary", binary_size(c).str()}}},
               {"presentation", presentation_to_json(c)},
               {"text", print_presentation(c)}}),
         o.out_path);
  }
  return kExitOk;
}

int cmd_stats(const std::string& input, const CommonOpts& o) {
  using clock = std::chrono::steady_clock;
  const Presentation p = parse_presentation(slurp(input));
  const Presentation padded = pad_relations(p);
  const Presentation base = o.compress ? binary_compress(padded) : padded;
  const Presentation stab = stabilize(base);

  const auto t0 = clock::now();
  const RealizedComplex rc = realize(p, o.compress);
  const auto t1 = clock::now();
  CheckOptions copts;
  copts.prune = !o.no_prune;
  copts.workers = o.workers;
  const IntersectionReport rep = check_embedding(rc, copts);
  const auto t2 = clock::now();

  const std::size_t count = simplex_count(rc.complex);
  const Integer s_stab = unary_size(stab);
  auto ms = [](auto a, auto b) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(b - a).count();
  };

  if (o.format == "text") {
    std::ostringstream out;
    out << "unary size s(P)        = " << unary_size(padded) << '\n'
        << "binary size b(P)       = " << binary_size(padded) << '\n'
        << "stabilized size s(P')  = " << s_stab << '\n'
        << "simplices              = " << count << '\n'
        << "C = simplices / s(P')  = " << Rational(Integer(count), s_stab)
        << '\n'
        << "delta_lb               = " << rc.delta_lb << '\n'
        << "verify                 = "
        << (rep.clean() ? "clean" : "VIOLATIONS") << " (" << rep.checked_pairs
        << " pairs)\n"
        << "realize time           = " << ms(t0, t1) << " ms\n"
        << "verify time            = " << ms(t1, t2) << " ms\n";
    emit(out.str(), o.out_path);
  } else {
    emit(dump({{"unary_size", unary_size(padded).str()},
               {"binary_size", binary_size(padded).str()},
               {"stabilized_unary_size", s_stab.str()},
               {"simplices", count},
               {"C", to_string(Rational(Integer(count), s_stab))},
               {"delta_lb", to_string(rc.delta_lb)},
               {"verify_clean", rep.clean()},
               {"checked_pairs", rep.checked_pairs},
               {"pruned_pairs", rep.pruned_pairs},
               {"realize_ms", ms(t0, t1)},
               {"verify_ms", ms(t1, t2)}}),
         o.out_path);
  }
  return rep.clean() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact piecewise-linear realization of group presentations in "
               "R^4, with verification, homology and Smith normal form"};
  app.require_subcommand(1);

  struct Sub {
    CLI::App* cmd;
    std::string input;
    CommonOpts opts;
    int (*run)(const std::string&, const CommonOpts&);
  };
  // deque: CLI11 keeps references into the elements, so no reallocation
  std::deque<Sub> subs;
  auto make = [&](const char* name, const char* help, const char* input_help,
                  int (*fn)(const std::string&, const CommonOpts&)) {
    subs.push_back({app.add_subcommand(name, help), "", {}, fn});
    Sub& s = subs.back();
    s.cmd->add_option("input", s.input, input_help)->required();
    add_common(s.cmd, s.opts);
  };

  make("realize", "presentation -> realized complex JSON (verified)",
       "presentation text, file, or '-'", cmd_realize);
  make("verify", "realized JSON -> intersection + sigma report",
       "realized JSON file or '-'", cmd_verify);
  make("homology", "complex or realized JSON -> H0, H1, H2",
       "complex JSON file or '-'", cmd_homology);
  make("snf", "integer matrix -> invariant factors and transforms",
       "matrix (text or JSON), file, or '-'", cmd_snf);
  make("compress", "presentation -> binary-compressed presentation",
       "presentation text, file, or '-'", cmd_compress);
  make("reduce", "relation matrix -> realized complex JSON (verified)",
       "matrix (text or JSON), file, or '-'", cmd_reduce);
  make("stats", "presentation -> sizes, constants, timings",
       "presentation text, file, or '-'", cmd_stats);

  CLI11_PARSE(app, argc, argv);

  try {
    for (const Sub& s : subs)
      if (s.cmd->parsed()) return s.run(s.input, s.opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

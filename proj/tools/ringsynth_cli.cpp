#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ringsynth/errors.hpp"
#include "ringsynth/lowering.hpp"
#include "ringsynth/random.hpp"
#include "ringsynth/selftest.hpp"
#include "ringsynth/synth.hpp"

using namespace ringsynth;

namespace {

enum Exit { kOk = 0, kInput = 1, kNotUnitary = 2, kUnsupported = 3, kMismatch = 4, kInternal = 5 };

struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw FileError("cannot write " + path);
  out << text;
}

GateSetTag gateset_arg(const std::string& s) {
  auto g = parse_gateset(s);
  if (!g) throw ParseError("unknown gate set '" + s + "'");
  return *g;
}

std::string applicable(RingTag t) {
  auto g = minimal_gateset(t);
  if (!g) return "unsupported for synthesis";
  return "gateset=" + gateset_listing(*g);
}

int cmd_classify(const std::string& file) {
  RingMatrix m = parse_matrix(slurp(file));
  RingTag t = classify_matrix(m);
  std::cout << tag_name(t) << "  " << applicable(t) << "\n";
  return kOk;
}

int cmd_synth(const std::string& file, const std::string& gs, const std::string& anc, const std::string& out) {
  SynthRequest req{parse_matrix(slurp(file)), std::nullopt, AncillaPolicy::AllowOne};
  if (gs != "auto") req.gateset = gateset_arg(gs);
  if (anc == "none") req.policy = AncillaPolicy::AncillaFree;
  SynthResult r = synthesize(req);
  emit(out, format_word(r.word));
  std::ostream& log = out.empty() || out == "-" ? std::cerr : std::cout;
  log << "gateset " << gateset_name(r.gateset) << (r.ancilla_free ? " ancilla-free" : "") << ", "
      << r.word.ops.size() << " generators\n";
  for (const auto& t : r.trace) {
    log << "column " << t.column << " lde(" << base_name(t.base) << "):";
    for (unsigned q : t.lde) log << " " << q;
    log << "\n";
  }
  return kOk;
}

GateSetTag infer_gateset(const GeneratorWord& w) {
  for (GateSetTag g : kAllGateSets) {
    bool ok = true;
    for (const auto& op : w.ops) ok = ok && generator_supported(op.kind, g);
    if (ok) return g;
  }
  throw UnsupportedError("no gate set covers every generator of the word");
}

int cmd_lower(const std::string& file, const std::string& gs, const std::string& anc, const std::string& out) {
  GeneratorWord w = parse_word(slurp(file));
  GateSetTag g = gs == "auto" ? infer_gateset(w) : gateset_arg(gs);
  Circuit c = lower_synthesis(w, g, anc == "none" ? AncillaMode::None : AncillaMode::OneClean);
  emit(out, serialize(c));
  return kOk;
}

int cmd_verify(const std::string& circuit_file, const std::string& matrix_file) {
  Circuit c = parse_circuit(slurp(circuit_file));
  RingMatrix m = parse_matrix(slurp(matrix_file));
  Evaluation e = evaluate(c);
  if (!e.ancilla_ok) {
    std::cout << "FAIL ancilla: " << e.diagnostic << "\n";
    return kMismatch;
  }
  if (e.unitary.rows() != m.rows() || e.unitary.cols() != m.cols()) {
    std::cout << "FAIL dimension " << e.unitary.rows() << " vs " << m.rows() << "\n";
    return kMismatch;
  }
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t col = 0; col < m.cols(); ++col)
      if (!(e.unitary(r, col) == m(r, col))) {
        std::cout << "FAIL entry (" << r + 1 << "," << col + 1 << "): circuit " << format_scalar(e.unitary(r, col))
                  << " expected " << format_scalar(m(r, col)) << "\n";
        return kMismatch;
      }
  std::cout << "PASS\n";
  return kOk;
}

int cmd_random(const std::string& gs, int n, int len, std::optional<std::uint64_t> seed, const std::string& out) {
  std::uint64_t s = 1;
  if (seed) {
    s = *seed;
  } else if (const char* env = std::getenv("RINGSYNTH_SEED")) {
    try {
      s = std::stoull(env);
    } catch (const std::exception&) {
      throw DomainError("bad RINGSYNTH_SEED");
    }
  }
  emit(out, format_matrix(random_matrix(gateset_arg(gs), n, len, s)));
  return kOk;
}

int cmd_selftest() {
  int failed = 0;
  auto checks = run_selftest();
  for (const auto& c : checks) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
    std::cout << "\n";
    failed += !c.pass;
  }
  std::cout << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  return failed ? kMismatch : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact synthesis over the subrings of D[w]"};
  app.require_subcommand(1);

  std::string in, in2, gs = "auto", anc = "one", out;
  int n = 2, len = 20;
  std::optional<std::uint64_t> seed;
  const std::vector<std::string> gatesets{"auto", "int", "supint", "real", "imag", "gauss", "supgauss"};

  auto* classify = app.add_subcommand("classify", "minimal ring of a matrix");
  classify->add_option("matrix", in)->required();

  auto* synth = app.add_subcommand("synth", "generator word for a matrix");
  synth->add_option("matrix", in)->required();
  synth->add_option("--gateset", gs)->check(CLI::IsMember(gatesets));
  synth->add_option("--ancilla", anc)->check(CLI::IsMember({"one", "none"}));
  synth->add_option("--out", out);

  auto* lower = app.add_subcommand("lower", "circuit for the matrix a word was synthesized from");
  lower->add_option("word", in)->required();
  lower->add_option("--gateset", gs)->check(CLI::IsMember(gatesets));
  lower->add_option("--ancilla", anc)->check(CLI::IsMember({"one", "none"}));
  lower->add_option("--out", out);

  auto* verify = app.add_subcommand("verify", "exact comparison of a circuit with a matrix");
  verify->add_option("circuit", in)->required();
  verify->add_option("matrix", in2)->required();

  auto* random = app.add_subcommand("random", "matrix of a random circuit");
  std::string rgs = "int";
  random->add_option("--gateset", rgs)->check(CLI::IsMember(std::vector<std::string>(gatesets.begin() + 1, gatesets.end())));
  random->add_option("--n", n)->check(CLI::PositiveNumber);
  random->add_option("--len", len)->check(CLI::NonNegativeNumber);
  random->add_option("--seed", seed);
  random->add_option("--out", out);

  auto* selftest = app.add_subcommand("selftest", "residue tables, reduction lemmas and circuit identities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kInput;
  }

  try {
    if (*classify) return cmd_classify(in);
    if (*synth) return cmd_synth(in, gs, anc, out);
    if (*lower) return cmd_lower(in, gs, anc, out);
    if (*verify) return cmd_verify(in, in2);
    if (*random) return cmd_random(rgs, n, len, seed, out);
    if (*selftest) return cmd_selftest();
  } catch (const FileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInput;
  } catch (const NotUnitaryError& e) {
    std::cerr << "not unitary: " << e.what() << "\n";
    return kNotUnitary;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInput;
}

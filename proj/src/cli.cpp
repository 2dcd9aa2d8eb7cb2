#include "dualgamal/cli.hpp"

#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "dualgamal/error.hpp"
#include "dualgamal/isolation.hpp"
#include "dualgamal/number_theory.hpp"
#include "dualgamal/serialize.hpp"

namespace dualgamal::cli {

namespace {

constexpr const char* kExitCodes =
    "Exit codes: 0 success, 2 invalid input or parameters, 3 discrete log "
    "not found, 4 verification mismatch.";

std::vector<Nat> parse_list(const std::string& text) {
  std::vector<Nat> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_nat(item));
  if (out.empty()) throw Error(Errc::InvalidParams, "empty list");
  return out;
}

std::string join(const std::vector<Nat>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += to_decimal(values[i]);
  }
  return out;
}

void emit(const std::string& path, const std::string& contents,
          std::ostream& out) {
  if (path == "-") {
    out << contents;
  } else {
    write_file(path, contents);
  }
}

struct KeygenArgs {
  std::string scheme;
  std::string n = "23";
  std::string g = "5";
  std::string d;
  std::uint64_t seed = 0;
  std::string prefix = "key";
};

struct EncryptArgs {
  std::string pub;
  std::string message;
  std::uint64_t seed = 0;
  std::string out = "-";
};

struct DecryptArgs {
  std::string sec;
  std::string in;
};

struct EvalArgs {
  std::string op;
  std::string pub;
  std::vector<std::string> in;
  std::string out = "-";
};

struct BenchArgs {
  std::string layout = "both";
  unsigned bits = 8;
  unsigned t = 2;
  unsigned trials = 10;
  std::uint64_t seed = 1;
};

struct DemoArgs {
  std::string mode = "mul";
  std::string inputs = "3,5";
  std::string adversary = "honest";
  std::uint64_t seed = 1;
  std::string transcript = "transcript.log";
  std::string n = "23";
  std::string g = "5";
  std::string d = "3,5";
};

int cmd_keygen(const KeygenArgs& a, std::ostream& out) {
  SeededRandom rng(a.seed);
  GroupParams group{parse_nat(a.n), parse_nat(a.g)};
  std::string pub;
  std::string sec;
  if (a.scheme == "elgamal") {
    if (!a.d.empty()) {
      throw Error(Errc::InvalidParams, "--d only applies to --scheme ceg");
    }
    KeyPair keys = keygen(group, rng);
    pub = serialize_key(keys.pub);
    sec = serialize_key(keys.pub, &keys.sec);
  } else {
    if (a.d.empty()) throw Error(Errc::InvalidParams, "--scheme ceg needs --d");
    CegKeyPair keys = ceg_keygen(CegParams{group, parse_list(a.d)}, rng);
    pub = serialize_key(keys.pub);
    sec = serialize_key(keys.pub, &keys.sec);
  }
  write_file(a.prefix + ".pub.json", pub);
  write_file(a.prefix + ".sec.json", sec);
  out << a.prefix << ".pub.json\n" << a.prefix << ".sec.json\n";
  return kOk;
}

EngineMode mode_of(const AnyPublicKey& pk) {
  return std::holds_alternative<ElGamalPublicKey>(pk) ? EngineMode::Multiplicative
                                                      : EngineMode::Additive;
}

int cmd_encrypt(const EncryptArgs& a, std::ostream& out) {
  const LoadedKey key = parse_key(read_file(a.pub));
  SeededRandom rng(a.seed);
  Engine engine(EngineConfig::regular());
  const AnyCiphertext ct =
      engine.encrypt(mode_of(key.pub), key.pub, parse_nat(a.message), rng);
  emit(a.out, serialize_ciphertext(ct), out);
  return kOk;
}

int cmd_decrypt(const DecryptArgs& a, std::ostream& out) {
  const LoadedKey key = parse_key(read_file(a.sec));
  if (!key.sec) throw Error(Errc::MalformedFile, a.sec + " has no secret exponent");
  const AnyCiphertext ct = parse_ciphertext(read_file(a.in), key.pub);
  Engine engine(EngineConfig::regular());
  out << to_decimal(engine.decrypt(mode_of(key.pub), key.pub, *key.sec, ct))
      << '\n';
  return kOk;
}

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  if (a.in.size() < 2) {
    throw Error(Errc::InvalidParams, "eval needs at least two --in files");
  }
  const LoadedKey key = parse_key(read_file(a.pub));
  const FoldOp op = a.op == "mul" ? FoldOp::MultiplyFold : FoldOp::AddFold;
  if ((op == FoldOp::MultiplyFold) != (mode_of(key.pub) == EngineMode::Multiplicative)) {
    throw Error(Errc::SchemeMismatch,
                "--op " + a.op + " does not match the " + scheme_tag(key.pub) +
                    " key");
  }
  std::vector<AnyCiphertext> inputs;
  for (const auto& path : a.in) {
    inputs.push_back(parse_ciphertext(read_file(path), key.pub));
  }
  emit(a.out, serialize_ciphertext(fold(key.pub, inputs, op)), out);
  return kOk;
}

struct PhaseCycles {
  std::uint64_t mul_encrypt = 0;
  std::uint64_t mul_decrypt = 0;
  std::uint64_t add_encrypt = 0;
  std::uint64_t add_decrypt = 0;
};

PhaseCycles run_bench(const EngineConfig& config, const KeyPair& mul_keys,
                      const CegKeyPair& add_keys, const std::vector<Nat>& mul_msgs,
                      const std::vector<Nat>& add_msgs, std::uint64_t seed) {
  Engine engine(config);
  SeededRandom rng(seed);
  PhaseCycles c;
  auto timed = [&engine](std::uint64_t& slot, auto&& fn) {
    const std::uint64_t before = engine.ledger().total();
    fn();
    slot += engine.ledger().total() - before;
  };
  const AnyPublicKey mul_pk = mul_keys.pub;
  const AnyPublicKey add_pk = add_keys.pub;
  for (std::size_t i = 0; i < mul_msgs.size(); ++i) {
    AnyCiphertext ct;
    timed(c.mul_encrypt, [&] {
      ct = engine.encrypt(EngineMode::Multiplicative, mul_pk, mul_msgs[i], rng);
    });
    timed(c.mul_decrypt, [&] {
      engine.decrypt(EngineMode::Multiplicative, mul_pk, mul_keys.sec, ct);
    });
    timed(c.add_encrypt, [&] {
      ct = engine.encrypt(EngineMode::Additive, add_pk, add_msgs[i], rng);
    });
    timed(c.add_decrypt, [&] {
      engine.decrypt(EngineMode::Additive, add_pk, add_keys.sec, ct);
    });
  }
  return c;
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  if (a.trials == 0) throw Error(Errc::InvalidParams, "--trials must be positive");
  if (a.t == 0) throw Error(Errc::InvalidParams, "--t must be positive");
  if (a.bits < 4 || a.bits > 62) {
    throw Error(Errc::InvalidParams, "--bits must be in [4, 62]");
  }
  const Nat n = largest_prime_below_pow2(a.bits);
  const Nat g = smallest_generator(n);
  // Basis: the first t odd primes.
  std::vector<Nat> moduli;
  for (Nat p = 3; moduli.size() < a.t; p += 2) {
    if (is_probable_prime(p)) moduli.push_back(p);
  }

  SeededRandom key_rng(a.seed);
  const GroupParams group{n, g};
  const KeyPair mul_keys = keygen(group, key_rng);
  const CegKeyPair add_keys = ceg_keygen(CegParams{group, moduli}, key_rng);
  std::vector<Nat> mul_msgs;
  std::vector<Nat> add_msgs;
  for (unsigned i = 0; i < a.trials; ++i) {
    mul_msgs.push_back(key_rng.uniform(1, n - 1));
    add_msgs.push_back(key_rng.uniform(0, add_keys.pub.plaintext_bound() - 1));
  }

  std::vector<EngineConfig> layouts;
  if (a.layout != "dual") layouts.push_back(EngineConfig::regular());
  if (a.layout != "regular") layouts.push_back(EngineConfig::dual());
  std::vector<PhaseCycles> cycles;
  for (const auto& config : layouts) {
    cycles.push_back(
        run_bench(config, mul_keys, add_keys, mul_msgs, add_msgs, a.seed + 1));
  }
  const bool both = layouts.size() == 2;

  out << "bench bits=" << a.bits << " n=" << n << " g=" << g << " t=" << a.t
      << " d=" << join(moduli) << " trials=" << a.trials << " seed=" << a.seed
      << "\n\n";
  auto header = [&](const char* first) {
    out << std::left << std::setw(18) << first;
    for (const auto& config : layouts) {
      out << std::right << std::setw(12) << layout_name(config.layout);
    }
    if (both) out << std::setw(15) << "reduction(%)";
    out << '\n';
  };
  auto row = [&](const std::string& name, const std::vector<std::uint64_t>& v) {
    out << std::left << std::setw(18) << name;
    for (auto x : v) out << std::right << std::setw(12) << x;
    if (both) {
      out << std::setw(15) << std::fixed << std::setprecision(2)
          << reduction_percent(static_cast<double>(v[0]),
                               static_cast<double>(v[1]));
    }
    out << '\n';
  };
  auto column = [&](auto member) {
    std::vector<std::uint64_t> v;
    for (const auto& c : cycles) v.push_back(member(c));
    return v;
  };

  header("cycles");
  row("mul_encrypt", column([](const PhaseCycles& c) { return c.mul_encrypt; }));
  row("mul_decrypt", column([](const PhaseCycles& c) { return c.mul_decrypt; }));
  row("add_encrypt", column([](const PhaseCycles& c) { return c.add_encrypt; }));
  row("add_decrypt", column([](const PhaseCycles& c) { return c.add_decrypt; }));
  row("encrypt_total", column([](const PhaseCycles& c) {
        return c.mul_encrypt + c.add_encrypt;
      }));
  row("decrypt_total", column([](const PhaseCycles& c) {
        return c.mul_decrypt + c.add_decrypt;
      }));
  out << '\n';
  header("resources");
  for (UnitClass unit : kUnitClasses) {
    std::vector<std::uint64_t> v;
    for (const auto& config : layouts) v.push_back(resource_report(config).count(unit));
    row(unit_class_name(unit), v);
  }
  return kOk;
}

int cmd_demo(const DemoArgs& a, std::ostream& out) {
  ScenarioConfig config;
  config.mode = a.mode == "mul" ? EngineMode::Multiplicative : EngineMode::Additive;
  config.plaintexts = parse_list(a.inputs);
  config.adversary = a.adversary == "honest"   ? AdversaryKind::Honest
                     : a.adversary == "logger" ? AdversaryKind::Logger
                                               : AdversaryKind::Tamperer;
  config.seed = a.seed;
  config.group = GroupParams{parse_nat(a.n), parse_nat(a.g)};
  config.moduli = parse_list(a.d);

  const ScenarioOutcome outcome = run_scenario(config);
  std::string log = "# mode " + std::string(mode_name(config.mode)) +
                    ", adversary " + adversary_name(config.adversary) + '\n' +
                    outcome.transcript.to_text();
  write_file(a.transcript, log);

  const AuditVerdict verdict =
      audit_transcript(outcome.transcript, config.plaintexts, outcome.secret_key);
  out << "mode: " << mode_name(config.mode) << '\n'
      << "inputs: " << join(config.plaintexts) << '\n'
      << "adversary: " << adversary_name(config.adversary) << '\n'
      << "result: "
      << (outcome.result ? to_decimal(*outcome.result) : "undecryptable")
      << '\n'
      << "audit: " << verdict.summary() << '\n'
      << "transcript: " << a.transcript << '\n';
  if (outcome.error) {
    out << "VERIFICATION MISMATCH: " << outcome.error->what() << '\n';
    return kVerificationMismatch;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Partially homomorphic ElGamal / CRT-ElGamal toolkit",
               "dualgamal"};
  app.footer(kExitCodes);
  app.require_subcommand(1);

  KeygenArgs keygen_args;
  auto* keygen_cmd = app.add_subcommand("keygen", "Generate a key pair");
  keygen_cmd->add_option("--scheme", keygen_args.scheme)
      ->required()
      ->check(CLI::IsMember({"elgamal", "ceg"}));
  keygen_cmd->add_option("--n", keygen_args.n, "Prime modulus")->capture_default_str();
  keygen_cmd->add_option("--g", keygen_args.g, "Generator")->capture_default_str();
  keygen_cmd->add_option("--d", keygen_args.d, "Comma-separated CRT moduli (ceg)");
  keygen_cmd->add_option("--seed", keygen_args.seed)->capture_default_str();
  keygen_cmd->add_option("--out-prefix", keygen_args.prefix)->capture_default_str();

  EncryptArgs encrypt_args;
  auto* encrypt_cmd = app.add_subcommand("encrypt", "Encrypt one message");
  encrypt_cmd->add_option("--pub", encrypt_args.pub)->required();
  encrypt_cmd->add_option("--message", encrypt_args.message)->required();
  encrypt_cmd->add_option("--seed", encrypt_args.seed)->capture_default_str();
  encrypt_cmd->add_option("--out", encrypt_args.out, "Output file, - for stdout")
      ->capture_default_str();

  DecryptArgs decrypt_args;
  auto* decrypt_cmd = app.add_subcommand("decrypt", "Decrypt to decimal");
  decrypt_cmd->add_option("--sec", decrypt_args.sec)->required();
  decrypt_cmd->add_option("--in", decrypt_args.in)->required();

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "Fold ciphertexts homomorphically");
  eval_cmd->add_option("--op", eval_args.op)
      ->required()
      ->check(CLI::IsMember({"mul", "add"}));
  eval_cmd->add_option("--pub", eval_args.pub)->required();
  eval_cmd->add_option("--in", eval_args.in, "Two or more ciphertext files")
      ->required();
  eval_cmd->add_option("--out", eval_args.out)->capture_default_str();

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Regular vs dual cycle model");
  bench_cmd->add_option("--layout", bench_args.layout)
      ->check(CLI::IsMember({"regular", "dual", "both"}))
      ->capture_default_str();
  bench_cmd->add_option("--bits", bench_args.bits)->capture_default_str();
  bench_cmd->add_option("--t", bench_args.t)->capture_default_str();
  bench_cmd->add_option("--trials", bench_args.trials)->capture_default_str();
  bench_cmd->add_option("--seed", bench_args.seed)->capture_default_str();

  DemoArgs demo_args;
  auto* demo_cmd = app.add_subcommand("demo", "Blind evaluation by an untrusted IP");
  demo_cmd->add_option("--mode", demo_args.mode)
      ->check(CLI::IsMember({"mul", "add"}))
      ->capture_default_str();
  demo_cmd->add_option("--inputs", demo_args.inputs, "Comma-separated plaintexts")
      ->capture_default_str();
  demo_cmd->add_option("--adversary", demo_args.adversary)
      ->check(CLI::IsMember({"honest", "logger", "tamperer"}))
      ->capture_default_str();
  demo_cmd->add_option("--seed", demo_args.seed)->capture_default_str();
  demo_cmd->add_option("--transcript", demo_args.transcript)->capture_default_str();
  demo_cmd->add_option("--n", demo_args.n)->capture_default_str();
  demo_cmd->add_option("--g", demo_args.g)->capture_default_str();
  demo_cmd->add_option("--d", demo_args.d, "CRT moduli for --mode add")
      ->capture_default_str();

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("dualgamal");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kBadInput;
  }

  try {
    if (keygen_cmd->parsed()) return cmd_keygen(keygen_args, out);
    if (encrypt_cmd->parsed()) return cmd_encrypt(encrypt_args, out);
    if (decrypt_cmd->parsed()) return cmd_decrypt(decrypt_args, out);
    if (eval_cmd->parsed()) return cmd_eval(eval_args, out);
    if (bench_cmd->parsed()) return cmd_bench(bench_args, out);
    if (demo_cmd->parsed()) return cmd_demo(demo_args, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case Errc::DlogNotFound: return kDlogNotFound;
      case Errc::VerificationMismatch: return kVerificationMismatch;
      default: return kBadInput;
    }
  }
  return kBadInput;
}

}  // namespace dualgamal::cli

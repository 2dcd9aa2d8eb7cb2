#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <string>

#include "dualgamal/ceg.hpp"
#include "dualgamal/dual_engine.hpp"
#include "dualgamal/elgamal.hpp"
#include "dualgamal/error.hpp"
#include "dualgamal/isolation.hpp"
#include "dualgamal/modmath.hpp"

namespace py = pybind11;

// Python int <-> Nat through hex text; exact for any size.
namespace pybind11::detail {
template <>
struct type_caster<mpz_class> {
 public:
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool convert) {
    if (!PyLong_Check(src.ptr()) && !(convert && PyIndex_Check(src.ptr()))) {
      return false;
    }
    auto as_int = reinterpret_steal<object>(PyNumber_Index(src.ptr()));
    if (!as_int) {
      PyErr_Clear();
      return false;
    }
    auto text = reinterpret_steal<object>(PyNumber_ToBase(as_int.ptr(), 16));
    if (!text) {
      PyErr_Clear();
      return false;
    }
    std::string s = text.cast<std::string>();
    const bool negative = !s.empty() && s.front() == '-';
    value.set_str(s.substr(negative ? 3 : 2), 16);
    if (negative) value = -value;
    return true;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    const std::string s = v.get_str(16);
    return PyLong_FromString(s.c_str(), nullptr, 16);
  }
};
}  // namespace pybind11::detail

namespace {

using namespace dualgamal;

MulOverlap overlap_from(const std::string& s) {
  if (s == "concurrent") return MulOverlap::Concurrent;
  if (s == "serial") return MulOverlap::Serial;
  throw Error(Errc::InvalidParams, "overlap must be 'concurrent' or 'serial'");
}

py::dict outcome_dict(const ScenarioOutcome& o) {
  py::dict d;
  d["result"] = o.result ? py::cast(*o.result) : py::none();
  d["expected"] = o.expected;
  d["error"] = o.error ? py::cast(std::string(o.error->what())) : py::none();
  d["transcript"] = o.transcript.to_text();
  d["transcript_entries"] = o.transcript.entries.size();
  d["captured_entries"] =
      o.captured ? py::cast(o.captured->entries.size()) : py::none();
  d["secret_key"] = o.secret_key.k();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multiplicative ElGamal and additive CRT-ElGamal on a shared "
            "Montgomery datapath";
  m.attr("__version__") = "0.1.0";

  static py::exception<Error> error_type(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error_type, e.what());
    }
  });

  // Arithmetic core.
  py::class_<MontgomeryContext>(m, "MontgomeryContext")
      .def(py::init<Nat, unsigned>(), py::arg("modulus"), py::arg("width"))
      .def_property_readonly("modulus", &MontgomeryContext::modulus)
      .def_property_readonly("width", &MontgomeryContext::width)
      .def_property_readonly("r", &MontgomeryContext::r)
      .def_property_readonly("r_inv", &MontgomeryContext::r_inv)
      .def_property_readonly("r2", &MontgomeryContext::r2);

  py::class_<CycleLedger>(m, "CycleLedger")
      .def(py::init<>())
      .def_property_readonly("total", &CycleLedger::total)
      .def("breakdown", [](const CycleLedger& l) {
        py::dict d;
        for (const auto& [kind, cycles] : l.breakdown()) {
          d[op_kind_name(kind)] = cycles;
        }
        return d;
      });

  m.def("mont_mul", [](const MontgomeryContext& c, const Nat& x, const Nat& y) {
    return mont_mul(c, x, y);
  });
  m.def("to_mont", [](const MontgomeryContext& c, const Nat& x) { return to_mont(c, x); });
  m.def("from_mont", [](const MontgomeryContext& c, const Nat& x) { return from_mont(c, x); });
  m.def("mod_mul", [](const MontgomeryContext& c, const Nat& a, const Nat& b) {
    return mod_mul(c, a, b);
  });
  m.def(
      "mont_exp",
      [](const MontgomeryContext& c, const Nat& base, const Nat& e,
         const std::string& overlap, CycleLedger* ledger) {
        return mont_exp(c, base, e, overlap_from(overlap), ledger);
      },
      py::arg("ctx"), py::arg("base"), py::arg("exponent"),
      py::arg("overlap") = "concurrent", py::arg("ledger") = nullptr);
  m.def("mod_div", [](const MontgomeryContext& c, const Nat& a, const Nat& b) {
    return mod_div(c, a, b);
  });
  m.def(
      "dlog_small",
      [](const MontgomeryContext& c, const Nat& g, const Nat& y,
         std::uint64_t bound) { return dlog_small(c, g, y, bound); },
      py::arg("ctx"), py::arg("g"), py::arg("y"), py::arg("bound"));

  py::class_<CrtBasis>(m, "CrtBasis")
      .def(py::init<std::vector<Nat>>(), py::arg("moduli"))
      .def_property_readonly("moduli", &CrtBasis::moduli)
      .def_property_readonly("product", &CrtBasis::product);
  m.def("mod_reduce_vector", &mod_reduce_vector, py::arg("m"), py::arg("basis"));
  m.def(
      "crt_recombine",
      [](const std::vector<Nat>& r, const CrtBasis& b) { return crt_recombine(r, b); },
      py::arg("residues"), py::arg("basis"));

  // Randomness.
  py::class_<RandomSource>(m, "RandomSource");
  py::class_<SeededRandom, RandomSource>(m, "SeededRandom")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("uniform", &SeededRandom::uniform);
  py::class_<ScriptedRandom, RandomSource>(m, "ScriptedRandom")
      .def(py::init([](const std::vector<Nat>& v) {
        return ScriptedRandom(v.begin(), v.end());
      }));

  // Multiplicative scheme.
  py::class_<GroupParams>(m, "GroupParams")
      .def(py::init([](Nat n, Nat g, unsigned width, bool strict) {
             return GroupParams{std::move(n), std::move(g), width, strict};
           }),
           py::arg("n"), py::arg("g"), py::arg("width") = 0,
           py::arg("strict") = false)
      .def_readonly("n", &GroupParams::n)
      .def_readonly("g", &GroupParams::g);
  py::class_<ElGamalPublicKey>(m, "ElGamalPublicKey")
      .def(py::init<Nat, Nat, Nat, unsigned>(), py::arg("n"), py::arg("g"),
           py::arg("h"), py::arg("width") = 0)
      .def_property_readonly("n", &ElGamalPublicKey::n)
      .def_property_readonly("g", &ElGamalPublicKey::g)
      .def_property_readonly("h", &ElGamalPublicKey::h)
      .def(py::self == py::self);
  py::class_<ElGamalSecretKey>(m, "ElGamalSecretKey")
      .def(py::init<Nat>(), py::arg("k"))
      .def_property_readonly("k", &ElGamalSecretKey::k);
  py::class_<Ciphertext>(m, "Ciphertext")
      .def(py::init([](Nat c1, Nat c2) { return Ciphertext{std::move(c1), std::move(c2)}; }),
           py::arg("c1"), py::arg("c2"))
      .def_readonly("c1", &Ciphertext::c1)
      .def_readonly("c2", &Ciphertext::c2)
      .def(py::self == py::self)
      .def("__repr__", [](const Ciphertext& c) {
        return "Ciphertext(" + to_decimal(c.c1) + ", " + to_decimal(c.c2) + ")";
      });

  m.def("keygen", [](const GroupParams& p, RandomSource& rng) {
    KeyPair kp = keygen(p, rng);
    return py::make_tuple(kp.pub, kp.sec);
  });
  m.def("encrypt", [](const ElGamalPublicKey& pk, const Nat& msg, RandomSource& rng) {
    return encrypt(pk, msg, rng);
  });
  m.def("decrypt", [](const ElGamalPublicKey& pk, const ElGamalSecretKey& sk,
                      const Ciphertext& ct) { return decrypt(pk, sk, ct); });
  m.def("homomorphic_mul", &homomorphic_mul);

  // Additive scheme.
  py::class_<CegPublicKey>(m, "CegPublicKey")
      .def_property_readonly("base", &CegPublicKey::base)
      .def_property_readonly("moduli",
                             [](const CegPublicKey& k) { return k.basis().moduli(); })
      .def_property_readonly("plaintext_bound", &CegPublicKey::plaintext_bound)
      .def(py::self == py::self);
  py::class_<CegCiphertext>(m, "CegCiphertext")
      .def(py::init([](std::vector<Ciphertext> pairs, std::uint64_t add_count) {
             return CegCiphertext{std::move(pairs), add_count};
           }),
           py::arg("pairs"), py::arg("add_count") = 0)
      .def_readonly("pairs", &CegCiphertext::pairs)
      .def_readonly("add_count", &CegCiphertext::add_count)
      .def(py::self == py::self);
  m.def(
      "ceg_keygen",
      [](const GroupParams& p, const std::vector<Nat>& moduli, RandomSource& rng) {
        CegKeyPair kp = ceg_keygen(CegParams{p, moduli}, rng);
        return py::make_tuple(kp.pub, kp.sec);
      },
      py::arg("params"), py::arg("moduli"), py::arg("rng"));
  m.def("ceg_encrypt", [](const CegPublicKey& pk, const Nat& msg, RandomSource& rng) {
    return ceg_encrypt(pk, msg, rng);
  });
  m.def("ceg_decrypt", [](const CegPublicKey& pk, const ElGamalSecretKey& sk,
                          const CegCiphertext& ct) { return ceg_decrypt(pk, sk, ct); });
  m.def("homomorphic_add", &homomorphic_add);

  // Dual engine.
  py::enum_<EngineMode>(m, "EngineMode")
      .value("Multiplicative", EngineMode::Multiplicative)
      .value("Additive", EngineMode::Additive);
  py::enum_<Layout>(m, "Layout")
      .value("Regular", Layout::Regular)
      .value("Dual", Layout::Dual);
  py::class_<EngineConfig>(m, "EngineConfig")
      .def_static("regular", &EngineConfig::regular)
      .def_static("dual", &EngineConfig::dual)
      .def_readonly("layout", &EngineConfig::layout)
      .def_readonly("multiplier_count", &EngineConfig::multiplier_count)
      .def_readonly("exponentiator_count", &EngineConfig::exponentiator_count);
  py::class_<Engine>(m, "Engine")
      .def(py::init<EngineConfig>())
      .def_property_readonly("ledger", &Engine::ledger, py::return_value_policy::reference_internal)
      .def("reset_ledger", &Engine::reset_ledger)
      .def("keygen", [](Engine& e, const GroupParams& p, RandomSource& rng) {
        KeyPair kp = e.keygen(p, rng);
        return py::make_tuple(kp.pub, kp.sec);
      })
      .def("ceg_keygen", [](Engine& e, const GroupParams& p,
                            const std::vector<Nat>& moduli, RandomSource& rng) {
        CegKeyPair kp = e.keygen(CegParams{p, moduli}, rng);
        return py::make_tuple(kp.pub, kp.sec);
      })
      .def("encrypt", [](Engine& e, EngineMode mode, const ElGamalPublicKey& pk,
                         const Nat& msg, RandomSource& rng) {
        return e.encrypt(mode, pk, msg, rng);
      })
      .def("encrypt", [](Engine& e, EngineMode mode, const CegPublicKey& pk,
                         const Nat& msg, RandomSource& rng) {
        return e.encrypt(mode, pk, msg, rng);
      })
      .def("decrypt", [](Engine& e, EngineMode mode, const ElGamalPublicKey& pk,
                         const ElGamalSecretKey& sk, const Ciphertext& ct) {
        return e.decrypt(mode, pk, sk, ct);
      })
      .def("decrypt", [](Engine& e, EngineMode mode, const CegPublicKey& pk,
                         const ElGamalSecretKey& sk, const CegCiphertext& ct) {
        return e.decrypt(mode, pk, sk, ct);
      });

  py::class_<ResourceReport>(m, "ResourceReport")
      .def_readonly("multipliers", &ResourceReport::multipliers)
      .def_readonly("exponentiators", &ResourceReport::exponentiators)
      .def_readonly("dividers", &ResourceReport::dividers)
      .def_readonly("adders", &ResourceReport::adders)
      .def_readonly("reducers", &ResourceReport::reducers)
      .def_readonly("memory_blocks", &ResourceReport::memory_blocks);
  m.def("resource_report", &resource_report);
  m.def("reduction_percent",
        py::overload_cast<double, double>(&reduction_percent),
        py::arg("regular"), py::arg("dual"));

  // Blind-evaluation harness.
  py::enum_<AdversaryKind>(m, "AdversaryKind")
      .value("Honest", AdversaryKind::Honest)
      .value("Logger", AdversaryKind::Logger)
      .value("Tamperer", AdversaryKind::Tamperer);
  m.def(
      "run_scenario",
      [](EngineMode mode, const std::vector<Nat>& plaintexts,
         AdversaryKind adversary, std::uint64_t seed, Nat n, Nat g,
         std::vector<Nat> moduli) {
        ScenarioConfig c;
        c.mode = mode;
        c.plaintexts = plaintexts;
        c.adversary = adversary;
        c.seed = seed;
        c.group = GroupParams{std::move(n), std::move(g)};
        c.moduli = std::move(moduli);
        const ScenarioOutcome o = run_scenario(c);
        py::dict d = outcome_dict(o);
        d["audit"] =
            audit_transcript(o.transcript, plaintexts, o.secret_key).summary();
        return d;
      },
      py::arg("mode"), py::arg("plaintexts"),
      py::arg("adversary") = AdversaryKind::Honest, py::arg("seed") = 1,
      py::arg("n") = Nat(23), py::arg("g") = Nat(5),
      py::arg("moduli") = std::vector<Nat>{Nat(3), Nat(5)});
}

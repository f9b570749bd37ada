#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cantorsum/json_report.hpp"
#include "cantorsum/version.hpp"

namespace py = pybind11;
namespace cs = cantorsum;

namespace {

py::object json_to_py(const cs::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::object mpz_to_py(const mpz_class& z) {
  return py::module_::import("builtins").attr("int")(z.get_str());
}

cs::DigitStream make_stream(int64_t p, const std::optional<std::string>& alpha,
                            const std::optional<uint64_t>& seed) {
  if (alpha.has_value() == seed.has_value())
    throw std::invalid_argument("give exactly one of alpha and seed");
  cs::Radix radix(p);
  if (alpha)
    return cs::DigitStream::rational(cs::RationalAlpha::parse(*alpha), radix);
  return cs::DigitStream::seeded(*seed, radix);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact subset-sum engine for Cantor-type integer sequences";
  m.attr("__version__") = cs::kVersion;

  m.def(
      "expand_rational",
      [](const std::string& alpha, int64_t p, size_t n) {
        return cs::expand_rational(cs::RationalAlpha::parse(alpha),
                                   cs::Radix(p), n);
      },
      py::arg("alpha"), py::arg("p"), py::arg("n"),
      "Base-p digits eta_0..eta_n of alpha given as 'num/den'.");

  m.def(
      "random_stream",
      [](uint64_t seed, int64_t p, size_t n) {
        return cs::random_stream(seed, cs::Radix(p), n);
      },
      py::arg("seed"), py::arg("p"), py::arg("n"));

  m.def("digit_prefix_sums", &cs::digit_prefix_sums, py::arg("digits"));

  py::class_<cs::GeneratorTable>(m, "GeneratorTable")
      .def_readonly("p", &cs::GeneratorTable::p)
      .def_readonly("n", &cs::GeneratorTable::n)
      .def_readonly("digits", &cs::GeneratorTable::digits)
      .def_readonly("delta", &cs::GeneratorTable::delta)
      .def_property_readonly("source",
                             [](const cs::GeneratorTable& t) { return t.source; })
      .def_property_readonly("x",
                             [](const cs::GeneratorTable& t) {
                               py::list out;
                               for (const auto& v : t.x) out.append(mpz_to_py(v));
                               return out;
                             })
      .def_property_readonly("s",
                             [](const cs::GeneratorTable& t) {
                               py::list out;
                               for (const auto& v : t.s) out.append(mpz_to_py(v));
                               return out;
                             })
      .def("to_dict", [](const cs::GeneratorTable& t) {
        return json_to_py(cs::table_to_json(t));
      });

  m.def(
      "build_table",
      [](int64_t p, std::optional<std::string> alpha,
         std::optional<uint64_t> seed, size_t n, bool materialize) {
        return cs::build_table(make_stream(p, alpha, seed), n,
                               materialize ? cs::TermPolicy::kMaterialize
                                           : cs::TermPolicy::kDeltasOnly);
      },
      py::arg("p"), py::arg("alpha") = std::nullopt,
      py::arg("seed") = std::nullopt, py::arg("n") = 16,
      py::arg("materialize") = true);

  m.def("verify_delta_identity", [](const cs::GeneratorTable& t) {
    auto c = cs::verify_delta_identity(t);
    return py::make_tuple(c.pass, c.first_fail);
  });

  m.def(
      "floor_power_oracle",
      [](const std::string& alpha, int64_t p, size_t n) {
        return mpz_to_py(cs::floor_power_oracle(cs::RationalAlpha::parse(alpha),
                                                cs::Radix(p), n));
      },
      py::arg("alpha"), py::arg("p"), py::arg("n"));

  m.def("complement_in_prefix", &cs::complement_in_prefix, py::arg("subset"),
        py::arg("n"));

  py::class_<cs::IntSetBitmap>(m, "IntSet")
      .def(py::init<uint64_t>(), py::arg("bound"))
      .def_property_readonly("bound", &cs::IntSetBitmap::bound)
      .def("test", &cs::IntSetBitmap::test, py::arg("i"))
      .def("add", &cs::IntSetBitmap::set, py::arg("i"))
      .def("count", &cs::IntSetBitmap::count)
      .def("members", &cs::IntSetBitmap::members,
           py::arg("limit") = size_t(SIZE_MAX))
      .def("max_member",
           [](const cs::IntSetBitmap& s) -> std::optional<uint64_t> {
             return s.max_member();
           })
      .def("density",
           [](const cs::IntSetBitmap& s, uint64_t N) {
             return cs::rational_str(cs::density(s, N));
           })
      .def("gaps",
           [](const cs::IntSetBitmap& s) {
             py::list out;
             for (const auto& g : cs::gaps(s))
               out.append(py::make_tuple(g.left, g.right));
             return out;
           })
      .def("save", &cs::IntSetBitmap::save, py::arg("path"))
      .def_static("load", &cs::IntSetBitmap::load, py::arg("path"))
      .def("__eq__", [](const cs::IntSetBitmap& a, const cs::IntSetBitmap& b) {
        return a == b;
      });

  m.def(
      "fs_bitmap",
      [](const std::vector<uint64_t>& B, uint64_t N) {
        return cs::fs_bitmap(B, N);
      },
      py::arg("B"), py::arg("N"));
  m.def("sumset", &cs::sumset, py::arg("A"), py::arg("B"), py::arg("N"));
  m.def("scaled_sumset", &cs::scaled_sumset, py::arg("A"), py::arg("t"),
        py::arg("N"));
  m.def("piecewise_shift_invariant", [](const cs::IntSetBitmap& s) {
    return json_to_py(cs::shift_invariance_to_json(
        cs::piecewise_shift_invariant(s)));
  });
  m.def("ruler_sequence", &cs::ruler_sequence, py::arg("n"));
  m.def("gap_index_correspondence", [](uint32_t level) {
    auto rc = cs::gap_index_correspondence(level);
    return py::make_tuple(rc.pass, rc.gap_indices);
  });

  m.def("longest_ap", [](const std::vector<int64_t>& Z) {
    auto ap = cs::longest_ap(Z);
    return py::make_tuple(ap.start, ap.diff, ap.length);
  });
  m.def(
      "inverse_vdw",
      [](uint32_t s, uint64_t N, bool certified_only) {
        auto inv = cs::VdwTable::from_env().inverse(s, N, certified_only);
        return py::make_tuple(inv.length, inv.table_limited);
      },
      py::arg("s"), py::arg("N"), py::arg("certified_only") = false);
  m.def(
      "vdw_search",
      [](uint32_t s, uint32_t k, uint64_t budget) {
        return json_to_py(cs::vdw_certificate_to_json(
            cs::vdw_search(s, k, budget)));
      },
      py::arg("s"), py::arg("k"), py::arg("budget") = uint64_t(200000000));
  m.def(
      "lemma23_extract",
      [](const std::vector<int64_t>& Z, uint32_t K, bool certified_only) {
        return json_to_py(cs::bounded_gap_extract_to_json(
            cs::bounded_gap_ap_extract(Z, K, cs::VdwTable::from_env(),
                                       certified_only)));
      },
      py::arg("Z"), py::arg("K"), py::arg("certified_only") = false);
  m.def("random_bounded_gap_set", &cs::random_bounded_gap_set, py::arg("seed"),
        py::arg("K"), py::arg("m"));

  m.def(
      "y_membership",
      [](const cs::GeneratorTable& t, size_t n, uint64_t N) {
        return json_to_py(
            cs::y_membership_to_json(cs::verify_y_membership(t, n, N)));
      },
      py::arg("table"), py::arg("n"), py::arg("N"));
  m.def(
      "ap_content",
      [](int64_t p, std::optional<std::string> alpha,
         std::optional<uint64_t> seed, size_t n, bool certified_only) {
        auto policy = n > 4096 ? cs::TermPolicy::kDeltasOnly
                               : cs::TermPolicy::kMaterialize;
        return json_to_py(cs::ap_content_to_json(
            cs::ap_content_pipeline(make_stream(p, alpha, seed), n, policy,
                                    cs::VdwTable::from_env(), certified_only)));
      },
      py::arg("p"), py::arg("alpha") = std::nullopt,
      py::arg("seed") = std::nullopt, py::arg("n") = 1000,
      py::arg("certified_only") = false);
  m.def(
      "verify_doubling_cover",
      [](std::optional<std::string> alpha, std::optional<uint64_t> seed,
         size_t n, std::optional<uint64_t> N) {
        return json_to_py(cs::sumset_cover_to_json(
            cs::verify_sumset_cover(make_stream(2, alpha, seed), n, N)));
      },
      py::arg("alpha") = std::nullopt, py::arg("seed") = std::nullopt,
      py::arg("n") = 12, py::arg("N") = std::nullopt);
  m.def(
      "witness_decompose",
      [](const std::string& x, const cs::GeneratorTable& t) {
        return json_to_py(
            cs::sum_witness_to_json(cs::witness_decompose(mpz_class(x), t)));
      },
      py::arg("x"), py::arg("table"));
  m.def(
      "density_report",
      [](int64_t p, std::optional<std::string> alpha,
         std::optional<uint64_t> seed, std::optional<uint64_t> t, uint64_t N) {
        return json_to_py(cs::density_report_to_json(
            cs::density_report(make_stream(p, alpha, seed), t, N)));
      },
      py::arg("p"), py::arg("alpha") = std::nullopt,
      py::arg("seed") = std::nullopt, py::arg("t") = std::nullopt,
      py::arg("N") = uint64_t(1000000));

  m.def(
      "construct_generators",
      [](const std::string& family, uint64_t k, uint64_t r) {
        cs::PrefixFamily f;
        if (family == "P1") f = cs::PrefixFamily::kP1;
        else if (family == "P2") f = cs::PrefixFamily::kP2;
        else if (family == "P3") f = cs::PrefixFamily::kP3;
        else if (family == "P4") f = cs::PrefixFamily::kP4;
        else throw std::invalid_argument("family must be P1..P4");
        return cs::construct_generators(cs::PrefixSpec(f, k, r));
      },
      py::arg("family"), py::arg("k"), py::arg("r") = 0);
  m.def("check_prefix_condition", &cs::check_prefix_condition, py::arg("n"));
  m.def("superincreasing", [](const std::vector<uint64_t>& B) {
    auto c = cs::superincreasing(B);
    return py::make_tuple(c.pass, c.first_violation);
  });
  m.def(
      "verify_converse",
      [](const std::vector<uint64_t>& B, uint64_t N) {
        auto c = cs::verify_converse(B, N);
        py::dict out;
        out["pass"] = c.pass;
        out["decomposition_ok"] = c.decomposition_ok;
        out["shift_invariance"] =
            json_to_py(cs::shift_invariance_to_json(c.shift_invariance));
        return out;
      },
      py::arg("B"), py::arg("N"));
  m.def("recover_generators", [](const cs::IntSetBitmap& A) {
    return json_to_py(cs::recovered_to_json(cs::recover_generators(A)));
  });
}

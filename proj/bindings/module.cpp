#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "corotan/errors.hpp"
#include "corotan/json_io.hpp"
#include "corotan/rates.hpp"
#include "corotan/sampling.hpp"
#include "corotan/tangents.hpp"
#include "corotan/uniaxial.hpp"
#include "corotan/verify.hpp"

namespace py = pybind11;
using namespace corotan;

namespace {

Tensor2 t2_from(const py::handle& obj) {
    Tensor2 t;
    const py::sequence seq = py::reinterpret_borrow<py::sequence>(obj);
    if (py::len(seq) == 9) {
        for (int k = 0; k < 9; ++k) t.a[k] = seq[k].cast<double>();
        return t;
    }
    if (py::len(seq) != 3) throw ConfigError("expected a 3x3 matrix or 9 entries");
    for (int i = 0; i < 3; ++i) {
        const py::sequence row = py::reinterpret_borrow<py::sequence>(seq[i]);
        for (int j = 0; j < 3; ++j) t(i, j) = row[j].cast<double>();
    }
    return t;
}

py::list t2_to(const Tensor2& t) {
    py::list rows;
    for (int i = 0; i < 3; ++i) {
        py::list row;
        for (int j = 0; j < 3; ++j) row.append(t(i, j));
        rows.append(row);
    }
    return rows;
}

Tensor4 t4_from(const py::handle& obj) {
    Tensor4 t;
    const py::sequence a = py::reinterpret_borrow<py::sequence>(obj);
    for (int i = 0; i < 3; ++i) {
        const py::sequence b = py::reinterpret_borrow<py::sequence>(a[i]);
        for (int j = 0; j < 3; ++j) {
            const py::sequence c = py::reinterpret_borrow<py::sequence>(b[j]);
            for (int k = 0; k < 3; ++k) {
                const py::sequence d = py::reinterpret_borrow<py::sequence>(c[k]);
                for (int l = 0; l < 3; ++l) t(i, j, k, l) = d[l].cast<double>();
            }
        }
    }
    return t;
}

py::list t4_to(const Tensor4& t) {
    py::list a;
    for (int i = 0; i < 3; ++i) {
        py::list b;
        for (int j = 0; j < 3; ++j) {
            py::list c;
            for (int k = 0; k < 3; ++k) {
                py::list d;
                for (int l = 0; l < 3; ++l) d.append(t(i, j, k, l));
                c.append(d);
            }
            b.append(c);
        }
        a.append(b);
    }
    return a;
}

py::object json_to_py(const ordered_json& j) {
    switch (j.type()) {
        case nlohmann::detail::value_t::null: return py::none();
        case nlohmann::detail::value_t::boolean: return py::bool_(j.get<bool>());
        case nlohmann::detail::value_t::number_integer:
            return py::int_(j.get<long long>());
        case nlohmann::detail::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case nlohmann::detail::value_t::number_float: return py::float_(j.get<double>());
        case nlohmann::detail::value_t::string: return py::str(j.get<std::string>());
        case nlohmann::detail::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case nlohmann::detail::value_t::object: {
            py::dict out;
            for (const auto& item : j.items())
                out[py::str(item.key())] = json_to_py(item.value());
            return out;
        }
        default: return py::none();
    }
}

DeformationState state_of(const py::handle& F) { return make_state(t2_from(F)); }

} // namespace

PYBIND11_MODULE(_corotan, m) {
    m.doc() = "tangent stiffness tensors for hypoelastic rate formulations";

    py::register_exception<NonInvertible>(m, "NonInvertible", PyExc_ValueError);
    py::register_exception<NotSPD>(m, "NotSPD", PyExc_ValueError);
    py::register_exception<NotIsochoric>(m, "NotIsochoric", PyExc_ValueError);
    py::register_exception<MissingSpin>(m, "MissingSpin", PyExc_ValueError);
    py::register_exception<NotMinorSymmetric>(m, "NotMinorSymmetric", PyExc_ValueError);
    py::register_exception<InputAsymmetric>(m, "InputAsymmetric", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    // tensor algebra
    m.def("outer", [](py::handle p, py::handle q) { return t4_to(outer(t2_from(p), t2_from(q))); });
    m.def("otimes_down",
          [](py::handle p, py::handle q) { return t4_to(otimes_down(t2_from(p), t2_from(q))); });
    m.def("otimes_up",
          [](py::handle p, py::handle q) { return t4_to(otimes_up(t2_from(p), t2_from(q))); });
    m.def("otimes_downup", [](py::handle p, py::handle q) {
        return t4_to(otimes_downup(t2_from(p), t2_from(q)));
    });
    m.def("apply4",
          [](py::handle t, py::handle z) { return t2_to(apply4(t4_from(t), t2_from(z))); });
    m.def("transpose4", [](py::handle t) { return t4_to(transpose4(t4_from(t))); });
    m.def("symmetry_flags", [](py::handle t, double tol) {
        const SymmetryFlags f = symmetry_flags(t4_from(t), tol);
        py::dict d;
        d["minor_left"] = f.minor_left;
        d["minor_right"] = f.minor_right;
        d["major"] = f.major;
        d["minor_left_residual"] = f.minor_left_residual;
        d["minor_right_residual"] = f.minor_right_residual;
        d["major_residual"] = f.major_residual;
        return d;
    }, py::arg("tensor"), py::arg("tol") = 1e-10);
    m.def("to_mandel", [](py::handle t, double tol) {
        const Mandel6 mm = to_mandel(t4_from(t), tol);
        py::list rows;
        for (int i = 0; i < 6; ++i) {
            py::list row;
            for (int j = 0; j < 6; ++j) row.append(mm(i, j));
            rows.append(row);
        }
        return rows;
    }, py::arg("tensor"), py::arg("tol") = 1e-10);
    m.def("mandel_vec", [](py::handle s) {
        const Vec6 v = mandel_vec(t2_from(s));
        return std::vector<double>(v.begin(), v.end());
    });
    m.def("eig_sym6_of", [](py::handle t, double tol) {
        const Eig6 e = eig_sym6(to_mandel(t4_from(t), tol), tol);
        return std::vector<double>(e.values.begin(), e.values.end());
    }, py::arg("tensor"), py::arg("tol") = 1e-8);

    // kinematics
    m.def("make_state", [](py::handle F) { return json_to_py(state_to_json(state_of(F))); });
    m.def("spd_log", [](py::handle s) { return t2_to(spd_log(t2_from(s))); });
    m.def("dlog_frechet", [](py::handle b, py::handle h) {
        return t2_to(dlog_frechet(t2_from(b), t2_from(h)));
    });
    m.def("dlog_tensor", [](py::handle b) { return t4_to(dlog_tensor(t2_from(b))); });

    // materials
    py::class_<MaterialModel, std::shared_ptr<MaterialModel>>(m, "MaterialModel")
        .def_property_readonly("name", &MaterialModel::name)
        .def_property_readonly("incompressible", &MaterialModel::is_incompressible)
        .def("energy", [](const MaterialModel& mm, py::handle F) {
            return mm.energy(state_of(F));
        })
        .def("stresses", [](const MaterialModel& mm, py::handle F) {
            const StressBundle b = mm.stresses(state_of(F));
            py::dict d;
            d["sigma"] = t2_to(b.sigma);
            d["tau"] = t2_to(b.tau);
            d["S2"] = t2_to(b.S2);
            d["S1"] = t2_to(b.S1);
            return d;
        })
        .def("material_tangent", [](const MaterialModel& mm, py::handle F) {
            return t4_to(mm.material_tangent(state_of(F)));
        })
        .def("hzj_tau", [](const MaterialModel& mm, py::handle F) {
            return t4_to(mm.hzj_tau(state_of(F)));
        });
    m.def("make_model", &make_model, py::arg("name"), py::arg("mu") = 1.0,
          py::arg("lam") = 1.0);

    // tangent constructions
    m.def("hzj_tau_absolute", [](py::handle c, py::handle tau, double J) {
        return t4_to(hzj_tau_absolute(t4_from(c), t2_from(tau), J));
    });
    m.def("hzj_sigma_absolute", [](py::handle c, py::handle sigma) {
        return t4_to(hzj_sigma_absolute(t4_from(c), t2_from(sigma)));
    });
    m.def("hzj_sigma_from_tau", [](py::handle h, py::handle sigma, double J) {
        return t4_to(hzj_sigma_from_tau(t4_from(h), t2_from(sigma), J));
    });
    m.def("wang_li_tensor", [](py::handle c, py::handle sigma) {
        return t4_to(wang_li_tensor(t4_from(c), t2_from(sigma)));
    });
    m.def("abaqus_ddsdde",
          [](py::handle h, double J) { return t4_to(abaqus_ddsdde(t4_from(h), J)); });
    m.def("spatial_tangent", [](py::handle F, py::handle C4) {
        return t4_to(spatial_tangent(state_of(F), t4_from(C4)));
    });
    m.def("build_tangent_set",
          [](const std::shared_ptr<MaterialModel>& model, py::handle F) {
              return json_to_py(tangent_set_to_json(build_tangent_set(*model, state_of(F))));
          });

    // objective rates
    m.def("rate_names", [] {
        std::vector<std::string> names;
        for (RateKind k : all_rate_kinds()) names.emplace_back(rate_name(k));
        return names;
    });
    m.def("rate_value",
          [](const std::string& kind, py::handle stress, py::handle stress_dot, py::handle L,
             py::object spin) {
              RateInput in{t2_from(stress), t2_from(stress_dot), t2_from(L), {}};
              if (!spin.is_none()) in.spin_override = t2_from(spin);
              return t2_to(rate_value(rate_from_name(kind), in));
          },
          py::arg("kind"), py::arg("stress"), py::arg("stress_dot"), py::arg("L"),
          py::arg("spin") = py::none());

    // uniaxial scans
    m.def("uniaxial_scan",
          [](const std::string& law_name, double lam_min, double lam_max, double step) {
              const ScalarLaw law =
                  law_name == "svk" ? ScalarLaw::svk() : ScalarLaw::hencky();
              return json_to_py(scan_to_json(monotonicity_scan(law, lam_min, lam_max, step)));
          },
          py::arg("law"), py::arg("lam_min") = 0.1, py::arg("lam_max") = 10.0,
          py::arg("step") = 0.01);

    // verification
    m.def("stability_sweep",
          [](const std::shared_ptr<MaterialModel>& model, double lam_min, double lam_max,
             double step) {
              SweepConfig cfg;
              cfg.lam_min = lam_min;
              cfg.lam_max = lam_max;
              cfg.step = step;
              return json_to_py(sweep_to_json(stability_sweep(*model, cfg)));
          },
          py::arg("model"), py::arg("lam_min") = 0.1, py::arg("lam_max") = 10.0,
          py::arg("step") = 0.01);
    m.def("hill_check",
          [](const std::shared_ptr<MaterialModel>& model, int samples, std::uint64_t seed) {
              return json_to_py(check_to_json(hill_check(*model, samples, seed)));
          },
          py::arg("model"), py::arg("samples") = 10000, py::arg("seed") = 20240901);
    m.def("tsts_check", [](const std::shared_ptr<MaterialModel>& model, py::handle F) {
        return json_to_py(check_to_json(tsts_check(*model, state_of(F))));
    });
    m.def("det_scan",
          [](const std::shared_ptr<MaterialModel>& model, const std::string& path, double p0,
             double p1, int points) {
              return json_to_py(
                  check_to_json(det_scan(*model, make_path(path, p0, p1), points)));
          },
          py::arg("model"), py::arg("path") = "uniaxial", py::arg("p0") = 0.5,
          py::arg("p1") = 2.0, py::arg("points") = 50);
    m.def("integrate_hypoelastic",
          [](const std::shared_ptr<MaterialModel>& model, const std::string& path, double p0,
             double p1, const std::string& scheme, int steps) {
              return json_to_py(integration_to_json(integrate_hypoelastic(
                  *model, make_path(path, p0, p1), scheme_from_name(scheme), steps)));
          },
          py::arg("model"), py::arg("path") = "uniaxial", py::arg("p0") = 1.0,
          py::arg("p1") = 2.0, py::arg("scheme") = "rk4", py::arg("steps") = 1000);
    m.def("rate_identity_audit",
          [](const std::shared_ptr<MaterialModel>& model, const std::string& path, double p0,
             double p1, int samples) {
              return json_to_py(check_to_json(
                  rate_identity_audit(*model, make_path(path, p0, p1), samples)));
          },
          py::arg("model"), py::arg("path") = "uniaxial", py::arg("p0") = 1.0,
          py::arg("p1") = 2.0, py::arg("samples") = 25);

    m.attr("MANDEL_CONVENTION") = kMandelConvention;
    m.attr("__version__") = "0.1.0";
}

// Python bindings for the main operations. Exact values cross the boundary
// as strings (polynomials, rationals) or JSON-shaped dicts, so nothing is
// ever rounded.

#include "borderlim/json_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace borderlim;

namespace {

json json_from_py(const py::object& obj) {
    py::object dumps = py::module_::import("json").attr("dumps");
    return json::parse(dumps(obj).cast<std::string>());
}

py::object json_to_py(const json& j) {
    py::object loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

QMatrix matrix_from_rows(const std::vector<std::vector<std::string>>& rows) {
    QMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw parse_error("ragged matrix");
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            auto q = parse_rational(rows[i][j]);
            if (!q) throw parse_error("bad rational entry " + rows[i][j]);
            m.at(i, j) = *q;
        }
    }
    return m;
}

} // namespace

PYBIND11_MODULE(borderlim, m) {
    m.doc() = "exact limit machinery for coordinate spaces";

    py::register_exception<parse_error>(m, "ParseError");
    py::register_exception<resource_limit>(m, "ResourceLimit");
    static py::exception<error> base_error(m, "Error");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const parse_error&) {
            throw;  // handled by the registered exception above
        } catch (const resource_limit&) {
            throw;
        } catch (const error& e) {
            py::set_error(base_error, e.what());
        }
    });

    // polynomial arithmetic on the text grammar
    m.def("poly_canon", [](const std::string& text) { return Poly::parse(text).to_string(); },
          "canonical form of a polynomial in the text grammar");
    m.def("poly_mul", [](const std::string& a, const std::string& b) {
        return (Poly::parse(a) * Poly::parse(b)).to_string();
    });
    m.def("poly_add", [](const std::string& a, const std::string& b) {
        return (Poly::parse(a) + Poly::parse(b)).to_string();
    });
    m.def("poly_substitute", [](const std::string& p, const std::map<std::string, std::string>& sub) {
        std::map<VarId, Poly> assignment;
        for (const auto& [name, value] : sub) assignment[VarTable::intern(name)] = Poly::parse(value);
        return Poly::parse(p).substitute(assignment).to_string();
    });

    m.def("gram_matrix", [](const std::string& f) {
        QMatrix g = gram_matrix(Poly::parse(f));
        std::vector<std::vector<std::string>> rows(g.rows(), std::vector<std::string>(g.cols()));
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t j = 0; j < g.cols(); ++j) rows[i][j] = rational_to_string(g.at(i, j));
        return rows;
    });
    m.def("matrix_rank", [](const std::vector<std::vector<std::string>>& rows) {
        return matrix_from_rows(rows).rank();
    });

    m.def("schur_dim", [](const std::vector<int>& partition, int level) {
        return schur_dim(Partition(partition), level);
    });

    m.def("gl_act", [](const std::vector<std::vector<std::string>>& g, const py::object& point) {
        return json_to_py(point_to_json(gl_act(matrix_from_rows(g), point_from_json(json_from_py(point)))));
    });
    m.def("specialize_point", [](const py::object& point, int level) {
        return json_to_py(point_to_json(specialize_point(point_from_json(json_from_py(point)), level)));
    });
    m.def("embed_point", [](const py::object& point, int level) {
        return json_to_py(point_to_json(embed_point(point_from_json(json_from_py(point)), level)));
    });

    m.def("limit_at_zero", [](const py::object& laurent) {
        return json_to_py(point_to_json(limit_at_zero(laurent_from_json(json_from_py(laurent)))));
    });
    m.def("shift_exponent", [](const py::object& laurent, int s) {
        return json_to_py(laurent_to_json(shift_exponent(laurent_from_json(json_from_py(laurent)), s)));
    });
    m.def("reparametrize", [](const py::object& laurent, int k) {
        return json_to_py(laurent_to_json(reparametrize(laurent_from_json(json_from_py(laurent)), k)));
    });
    m.def("line_curve_expansion", [](const py::object& x, const py::object& y, const std::string& t0) {
        auto q = parse_rational(t0);
        if (!q) throw parse_error("t0 must be rational");
        CurveExpansion e =
            expand_at(line_curve(point_from_json(json_from_py(x)), point_from_json(json_from_py(y))), *q);
        return json_to_py(laurent_to_json(e.series));
    });

    m.def("substitute_laurent", [](const py::object& map_doc, const py::object& laurent) {
        ParsedMap parsed = map_from_json(json_from_py(map_doc));
        LaurentPoint y = laurent_from_json(json_from_py(laurent));
        if (!parsed.poly_map && parsed.slot_map)
            parsed.poly_map = PolyMap::from_slot_map(*parsed.slot_map, y.space().level());
        if (!parsed.poly_map) throw parse_error("map document needs a level");
        return json_to_py(laurent_to_json(substitute_laurent(*parsed.poly_map, y)));
    });

    m.def("lnm_constraints", [](const py::object& map_doc, int n, std::optional<int> m_opt,
                                std::optional<int> level) {
        ParsedMap parsed = map_from_json(json_from_py(map_doc));
        ConstraintSystem sys;
        if (parsed.slot_map && !level) {
            int mm = m_opt ? *m_opt : stabilization_bound(*parsed.slot_map, n);
            sys = lnm_constraints(*parsed.slot_map, n, mm);
        } else {
            if (!parsed.poly_map && parsed.slot_map && level)
                parsed.poly_map = PolyMap::from_slot_map(*parsed.slot_map, *level);
            if (!parsed.poly_map) throw parse_error("map document needs a level");
            int mm = m_opt ? *m_opt : stabilization_bound(*parsed.poly_map, n);
            sys = lnm_constraints(*parsed.poly_map, n, mm);
        }
        return json_to_py(constraint_system_to_json(sys));
    }, py::arg("map_doc"), py::arg("n"), py::arg("m") = std::nullopt, py::arg("level") = std::nullopt);

    m.def("lnm_check", [](const py::object& map_doc, const py::object& laurent) {
        ParsedMap parsed = map_from_json(json_from_py(map_doc));
        LaurentPoint y = laurent_from_json(json_from_py(laurent));
        if (!parsed.poly_map && parsed.slot_map)
            parsed.poly_map = PolyMap::from_slot_map(*parsed.slot_map, y.space().level());
        LnmCheckResult r = lnm_check(*parsed.poly_map, y);
        py::dict out;
        out["member"] = r.member;
        if (r.value) out["value"] = json_to_py(point_to_json(*r.value));
        if (r.pole_exponent) out["pole_exponent"] = *r.pole_exponent;
        return out;
    });

    m.def("stabilization_bound", [](const py::object& map_doc, int n, int level) {
        ParsedMap parsed = map_from_json(json_from_py(map_doc));
        if (parsed.slot_map) return stabilization_bound(*parsed.slot_map, n);
        if (!parsed.poly_map) throw parse_error("map document needs a level or formula");
        (void)level;
        return stabilization_bound(*parsed.poly_map, n);
    }, py::arg("map_doc"), py::arg("n"), py::arg("level") = 0);

    m.def("image_search", [](const py::object& map_doc, const py::object& point, int n_max,
                             std::uint64_t seed) {
        ParsedMap parsed = map_from_json(json_from_py(map_doc));
        Point x = point_from_json(json_from_py(point));
        if (!parsed.poly_map && parsed.slot_map)
            parsed.poly_map = PolyMap::from_slot_map(*parsed.slot_map, x.space().level());
        ImageSearchOptions opts;
        opts.n_max = n_max;
        opts.seed = seed;
        ImageSearchResult r = image_search(*parsed.poly_map, x, opts);
        py::dict out;
        out["found"] = r.found;
        out["definitive"] = r.exhausted_definitively;
        out["notes"] = r.notes;
        if (r.witness) {
            out["witness"] = json_to_py(laurent_to_json(*r.witness));
            out["n"] = r.n_used;
        }
        return out;
    }, py::arg("map_doc"), py::arg("point"), py::arg("n_max") = 1, py::arg("seed") = 12345);

    m.def("quadratic_strength", [](const std::string& f) { return quadratic_strength(Poly::parse(f)); });

    m.def("verify_decomposition", [](const std::string& f, int d, const std::vector<int>& e,
                                     const std::vector<std::string>& factors) {
        std::vector<Poly> parsed;
        for (const auto& s : factors) parsed.push_back(Poly::parse(s));
        return verify_decomposition(Poly::parse(f), DegreeSplitting::make(d, e), parsed);
    });

    m.def("verify_border_certificate", [](const std::string& f, const py::object& cert_doc) {
        CertificateCheck check =
            verify_border_certificate(Poly::parse(f), certificate_from_json(json_from_py(cert_doc)));
        py::dict out;
        out["accepted"] = check.accepted();
        if (check.accepted()) out["s"] = check.sigma_witness;
        if (check.status == CertificateCheck::Status::RejectedPole) out["reason"] = "PoleAtZero";
        if (check.status == CertificateCheck::Status::RejectedWrongLimit) out["reason"] = "WrongLimit";
        return out;
    });

    m.def("sigma_search", [](const std::string& f, int r, int n_max, std::uint64_t seed) {
        SigmaSearchOptions opts;
        opts.n_max = n_max;
        opts.seed = seed;
        SigmaSearchResult res = sigma_search(Poly::parse(f), r, opts);
        py::dict out;
        out["witnessed"] = res.outcome == SigmaSearchResult::Outcome::Witnessed;
        out["note"] = res.note;
        if (res.certificate) {
            out["s"] = res.s;
            out["certificate"] = json_to_py(certificate_to_json(*res.certificate));
        }
        return out;
    }, py::arg("f"), py::arg("r"), py::arg("n_max") = 1, py::arg("seed") = 12345);

    m.def("buchberger", [](const std::vector<std::string>& generators, const std::string& order) {
        std::vector<Poly> gens;
        for (const auto& g : generators) gens.push_back(Poly::parse(g));
        MonomialOrder ord = order == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
        Ideal ideal{gens, ord, std::nullopt};
        ideal = buchberger(ideal);
        std::vector<std::string> basis;
        for (const auto& g : *ideal.basis) basis.push_back(g.to_string());
        return basis;
    }, py::arg("generators"), py::arg("order") = "grevlex");

    m.def("normal_form", [](const std::string& f, const std::vector<std::string>& generators,
                            const std::string& order) {
        std::vector<Poly> gens;
        for (const auto& g : generators) gens.push_back(Poly::parse(g));
        MonomialOrder ord = order == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
        Ideal ideal{gens, ord, std::nullopt};
        ideal = buchberger(ideal);
        return normal_form(Poly::parse(f), ideal).to_string();
    }, py::arg("f"), py::arg("generators"), py::arg("order") = "grevlex");

    m.def("implicitize", [](const py::object& map_doc, std::optional<int> level) {
        ParsedMap parsed = map_from_json(json_from_py(map_doc));
        if (!parsed.poly_map && parsed.slot_map && level)
            parsed.poly_map = PolyMap::from_slot_map(*parsed.slot_map, *level);
        if (!parsed.poly_map) throw parse_error("map document needs a level");
        return json_to_py(ideal_to_json(implicitize(*parsed.poly_map)));
    }, py::arg("map_doc"), py::arg("level") = std::nullopt);

    m.def("border_membership", [](const py::object& point, const py::object& map_doc,
                                  std::optional<int> level) {
        ParsedMap parsed = map_from_json(json_from_py(map_doc));
        Point f = point_from_json(json_from_py(point));
        if (!parsed.poly_map && parsed.slot_map)
            parsed.poly_map = PolyMap::from_slot_map(*parsed.slot_map,
                                                     level ? *level : f.space().level());
        return border_membership(f, *parsed.poly_map);
    }, py::arg("point"), py::arg("map_doc"), py::arg("level") = std::nullopt);
}

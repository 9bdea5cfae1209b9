// Python bindings. Field elements and rationals cross the boundary as strings
// ("3/4", "1/2*g - 1"); curves, points and polynomials are opaque handles.

#include "orbcol/collision.hpp"
#include "orbcol/expr.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace orbcol;

namespace {

std::vector<std::string> coeff_strings(const Poly& p) {
    std::vector<std::string> out;
    for (const auto& c : p.coeffs()) out.push_back(to_string(c));
    return out;
}

Field make_field(const std::vector<std::string>& minpoly) {
    if (minpoly.empty()) return Field();
    std::vector<Rational> cs;
    for (const auto& s : minpoly) cs.push_back(parse_rational(s));
    return Field::from_minpoly(cs);
}

PointFF make_point(const Field& F, const std::string& x, const std::string& y) {
    return PointFF(parse_expr(x, F), parse_expr(y, F));
}

py::dict entry_dict(const CollisionEntry& e) {
    py::dict d;
    d["factor"] = e.factor;
    d["m1"] = e.m1;
    d["m2"] = e.m2;
    d["verified"] = e.verified;
    return d;
}

}  // namespace

PYBIND11_MODULE(_orbcol, m) {
    m.doc() = "Orbit collisions of sections on elliptic surfaces";

    auto error = py::register_exception<Error>(m, "Error");
    py::register_exception<MathError>(m, "MathError", error.ptr());
    py::register_exception<ParseError>(m, "ParseError", error.ptr());
    py::register_exception<InternalError>(m, "InternalError", error.ptr());

    py::class_<Field>(m, "Field")
        .def(py::init(&make_field), py::arg("minpoly") = std::vector<std::string>{},
             "Q, or Q[g]/(minpoly) for a monic quadratic given low-to-high as strings")
        .def_static("quadratic", [](long p, long q) { return Field::quadratic(p, q); })
        .def_property_readonly("degree", &Field::degree)
        .def("__repr__", [](const Field& F) {
            if (F.is_rational()) return std::string("Field(Q)");
            return "Field(g^2 + " + to_string(F.p()) + "*g + " + to_string(F.q()) + ")";
        });

    py::class_<Poly>(m, "Poly")
        .def_property_readonly("degree", &Poly::degree)
        .def_property_readonly("coeffs", &coeff_strings)
        .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; })
        .def("__str__", [](const Poly& p) { return to_string(p); })
        .def("__repr__", [](const Poly& p) { return "Poly(" + to_string(p) + ")"; });

    py::class_<RatFunc>(m, "RatFunc")
        .def_property_readonly("num", &RatFunc::num)
        .def_property_readonly("den", &RatFunc::den)
        .def("__eq__", [](const RatFunc& a, const RatFunc& b) { return a == b; })
        .def("__str__", [](const RatFunc& f) { return to_string(f); });

    py::class_<CurveFF>(m, "Curve")
        .def(py::init([](const std::string& A, const std::string& B, const Field& F) {
                 return CurveFF::make(parse_expr(A, F), parse_expr(B, F));
             }),
             py::arg("A"), py::arg("B"), py::arg("field") = Field())
        .def_property_readonly("A", &CurveFF::A)
        .def_property_readonly("B", &CurveFF::B)
        .def_property_readonly("field", &CurveFF::field)
        .def("j_invariant", &CurveFF::j_invariant)
        .def("point", [](const CurveFF& C, const std::string& x, const std::string& y) {
            PointFF P = make_point(C.field(), x, y);
            require_on_curve(C, P);
            return P;
        })
        .def("contains", &on_curve)
        .def("add", &add)
        .def("mul", [](const CurveFF& C, long n, const PointFF& P) { return scalar_mul(C, n, P); })
        .def("__repr__", [](const CurveFF& C) { return "Curve(y^2 = x^3 + (" + to_string(C.A()) + ")x + (" + to_string(C.B()) + "))"; });

    py::class_<PointFF>(m, "Point")
        .def_static("infinity", &PointFF::infinity)
        .def_property_readonly("is_infinity", &PointFF::is_infinity)
        .def_property_readonly("x", &PointFF::x)
        .def_property_readonly("y", &PointFF::y)
        .def("__neg__", &negate)
        .def("__eq__", [](const PointFF& a, const PointFF& b) { return a == b; })
        .def("__str__", [](const PointFF& P) { return to_string(P); });

    m.def("parse_expr", [](const std::string& s, const Field& F) { return parse_expr(s, F); }, py::arg("text"),
          py::arg("field") = Field());
    m.def("parse_poly", [](const std::string& s, const Field& F) { return parse_poly(s, F); }, py::arg("text"),
          py::arg("field") = Field());
    m.def("rational_roots", [](const Poly& p) {
        std::vector<std::string> out;
        for (const auto& r : rational_roots(p)) out.push_back(to_string(r));
        return out;
    });

    auto family = [](Family f) {
        py::dict d;
        d["name"] = f.name;
        d["curve"] = f.curve;
        d["P"] = f.P;
        d["Q"] = f.Q ? py::cast(*f.Q) : py::none();
        return d;
    };
    m.def("family_j1728", [family] { return family(family_j1728()); });
    m.def("family_standard", [family] { return family(family_standard()); });
    m.def("family_j0", [family] { return family(family_j0()); });
    m.def("cm_image", [](const CurveFF& C, long a, long b, const PointFF& P) {
        auto e = detect_cm(C);
        if (!e) throw MathError("curve has no detected CM structure");
        return cm_apply(C, *e, OrderElem{e->order, a, b}, P);
    }, "[a + b theta]P", py::arg("curve"), py::arg("a"), py::arg("b"), py::arg("P"));

    m.def("condition_poly", [](const CurveFF& C, const PointFF& P, const PointFF& Q, long k) -> py::object {
        auto cp = condition_poly(C, P, Q, k);
        if (cp.identically_satisfied) return py::none();
        return py::cast(cp.poly);
    }, "Locus where [m]P = Q; None when the relation holds identically", py::arg("curve"), py::arg("P"),
          py::arg("Q"), py::arg("m"));

    m.def("collision_scan",
          [](const CurveFF& C, const PointFF& P1, const PointFF& P2, const PointFF& Q, long M1, long M2,
             unsigned jobs) {
              CollisionReport rep;
              {
                  py::gil_scoped_release release;
                  rep = collision_scan(C, P1, P2, Q, M1, M2, {jobs});
              }
              py::list entries;
              for (const auto& e : rep.entries) entries.append(entry_dict(e));
              py::dict d;
              d["entries"] = entries;
              d["everywhere"] = rep.everywhere;
              return d;
          },
          py::arg("curve"), py::arg("P1"), py::arg("P2"), py::arg("Q"), py::arg("M1"), py::arg("M2"),
          py::arg("jobs") = 1);

    m.def("degree_growth",
          [](const CurveFF& C, const PointFF& P, const PointFF& Q, long nmax, unsigned jobs) {
              std::vector<std::pair<long, long>> out;
              for (const auto& r : degree_growth(C, P, Q, nmax, jobs)) out.emplace_back(r.n, r.degree);
              return out;
          },
          py::arg("curve"), py::arg("P"), py::arg("Q"), py::arg("nmax"), py::arg("jobs") = 1);

    m.def("classify",
          [](const CurveFF& C, const PointFF& P1, const PointFF& P2, const PointFF& Q, long K, long box,
             long torsion) { return to_string(classify(C, P1, P2, Q, {K, box, torsion})); },
          py::arg("curve"), py::arg("P1"), py::arg("P2"), py::arg("Q"), py::arg("K") = 12, py::arg("box") = 2,
          py::arg("torsion") = 12);

    m.def("solve_shift", [](long D, long f, long a) {
        auto w = solve_shift(OrderSpec::make(D, f), a);
        return py::make_tuple(w.m, w.r, w.s);
    }, "(m, r, s) with m - theta = (a + 4 theta)(r + s theta)", py::arg("D"), py::arg("f"), py::arg("a"));
    m.def("find_residue", [](long D, long f, long M) { return find_residue(OrderSpec::make(D, f), M); },
          py::arg("D"), py::arg("f"), py::arg("M"));
    m.def("theta_rep", [](long D, long f, long a) {
        auto mod = theta_rep(OrderSpec::make(D, f), a);
        return py::make_tuple(mod.N, mod.theta_rep);
    }, "(N, theta_rep) for Z[theta]/(a + 4 theta)", py::arg("D"), py::arg("f"), py::arg("a"));
    m.def("induced_map", [](long D, long f, long a, long c, long d) {
        auto spec = OrderSpec::make(D, f);
        return induced_map(theta_rep(spec, a), OrderElem{spec, c, d});
    }, "Action of c + d theta on Z[theta]/(a + 4 theta)", py::arg("D"), py::arg("f"), py::arg("a"), py::arg("c"),
          py::arg("d"));
}

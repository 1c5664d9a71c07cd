#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cantor/json_io.hpp"

namespace py = pybind11;
using namespace cantor;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<long long>());
    case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
        py::list out;
        for (const auto& item : j) out.append(json_to_py(item));
        return out;
    }
    case json::value_t::object: {
        py::dict out;
        for (auto it = j.begin(); it != j.end(); ++it)
            out[py::str(it.key())] = json_to_py(it.value());
        return out;
    }
    default: return py::none();
    }
}

DigitSet make_ds(int base, const std::vector<int>& digits) { return DigitSet(base, digits); }

PeriodicCode make_code(const std::string& text, int base, const std::string& alphabet,
                       const DigitSet* ds) {
    alphabet_tag tag = alphabet_from_name(alphabet);
    if (text.find('/') != std::string::npos) {
        Rat v = parse_rational(text);
        return code_from_rational(v < 0 ? -v : v, base, tag, ds);
    }
    return parse_code(text, base, tag);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact structure of intersections of deleted digits Cantor sets";

    py::register_exception<error>(m, "CantorError");

    m.def(
        "classify",
        [](int base, const std::vector<int>& digits) {
            return json_to_py(to_json(make_ds(base, digits).classify()));
        },
        py::arg("base"), py::arg("digits"));

    m.def(
        "slice",
        [](int base, const std::vector<int>& digits, int delta) {
            return json_to_py(to_json(make_ds(base, digits).slice(delta)));
        },
        py::arg("base"), py::arg("digits"), py::arg("delta"));

    m.def(
        "sumset_decompose",
        [](const std::vector<int>& target, const std::vector<int>& base) -> py::object {
            auto r = sumset_decompose(target, base);
            if (!r) return py::none();
            py::list out;
            for (int v : *r) out.append(v);
            return out;
        },
        py::arg("target"), py::arg("base"));

    m.def(
        "canon",
        [](int base, const std::vector<int>& digits, const std::string& num,
           const std::string& alphabet) {
            DigitSet ds = make_ds(base, digits);
            PeriodicCode c = make_code(num, base, alphabet, &ds);
            json j = to_json(canonical(c));
            if (!c.prefix_only) j["value"] = rat_str(value_of(c));
            return json_to_py(j);
        },
        py::arg("base"), py::arg("digits"), py::arg("num"), py::arg("alphabet") = "nary");

    m.def(
        "convert",
        [](int base, const std::vector<int>& digits, const std::string& value,
           const std::string& alphabet) {
            DigitSet ds = make_ds(base, digits);
            PeriodicCode c =
                code_from_rational(parse_rational(value), base, alphabet_from_name(alphabet), &ds);
            return json_to_py(to_json(c));
        },
        py::arg("base"), py::arg("digits"), py::arg("value"), py::arg("alphabet"));

    m.def(
        "truncate",
        [](int base, const std::string& num, const std::string& alphabet, int k) {
            PeriodicCode c = make_code(num, base, alphabet, nullptr);
            return rat_str(truncate_value(c, k));
        },
        py::arg("base"), py::arg("num"), py::arg("alphabet"), py::arg("k"));

    m.def(
        "abs_canonicalize",
        [](int base, const std::vector<int>& digits, const std::string& num) {
            DigitSet ds = make_ds(base, digits);
            PeriodicCode c = make_code(num, base, "delta", &ds);
            return json_to_py(to_json(abs_canonicalize(ds, c)));
        },
        py::arg("base"), py::arg("digits"), py::arg("num"));

    m.def(
        "sigma",
        [](int base, const std::vector<int>& digits, const std::string& num, int depth,
           const std::string& alphabet) {
            DigitSet ds = make_ds(base, digits);
            PeriodicCode c = make_code(num, base, alphabet, &ds);
            return json_to_py(to_json(sigma_trace(ds, c, depth), ds, c, depth));
        },
        py::arg("base"), py::arg("digits"), py::arg("num"), py::arg("depth"),
        py::arg("alphabet") = "nary");

    m.def(
        "psi",
        [](int base, const std::vector<int>& digits, const std::string& num,
           const std::string& alphabet) {
            DigitSet ds = make_ds(base, digits);
            PeriodicCode c = make_code(num, base, alphabet, &ds);
            return json_to_py(to_json(psi(ds, c)));
        },
        py::arg("base"), py::arg("digits"), py::arg("num"), py::arg("alphabet") = "nary");

    m.def(
        "intersect",
        [](int base, const std::vector<int>& digits, const std::string& num, int depth,
           const std::string& alphabet, long long budget) {
            DigitSet ds = make_ds(base, digits);
            PeriodicCode c = make_code(num, base, alphabet, &ds);
            return json_to_py(to_json(intersect_level(ds, c, depth, Budget{budget})));
        },
        py::arg("base"), py::arg("digits"), py::arg("num"), py::arg("depth"),
        py::arg("alphabet") = "nary", py::arg("budget") = 2'000'000LL);

    m.def(
        "offsets",
        [](int base, const std::vector<int>& digits, const std::string& num, int depth,
           const std::string& alphabet) {
            DigitSet ds = make_ds(base, digits);
            PeriodicCode c = make_code(num, base, alphabet, &ds);
            py::list out;
            for (const Rat& r : offsets(ds, c, depth)) out.append(rat_str(r));
            return out;
        },
        py::arg("base"), py::arg("digits"), py::arg("num"), py::arg("depth"),
        py::arg("alphabet") = "nary");

    m.def(
        "boxcount",
        [](int base, const std::vector<int>& digits, const std::string& num, int kmax,
           const std::string& alphabet) {
            DigitSet ds = make_ds(base, digits);
            PeriodicCode c = make_code(num, base, alphabet, &ds);
            return json_to_py(to_json(boxcount_curve(ds, c, kmax)));
        },
        py::arg("base"), py::arg("digits"), py::arg("num"), py::arg("kmax"),
        py::arg("alphabet") = "nary");

    m.def(
        "equivalent",
        [](int base, const std::vector<int>& digits, const std::string& a, const std::string& b,
           const std::string& alphabet) {
            DigitSet ds = make_ds(base, digits);
            return json_to_py(to_json(equivalent(ds, make_code(a, base, alphabet, &ds),
                                                 make_code(b, base, alphabet, &ds))));
        },
        py::arg("base"), py::arg("digits"), py::arg("a"), py::arg("b"),
        py::arg("alphabet") = "delta_plus");

    m.def(
        "rational_equivalent",
        [](int base, const std::vector<int>& digits, const std::string& num,
           const std::string& alphabet, int kmax, int qmax) {
            DigitSet ds = make_ds(base, digits);
            PeriodicCode c = make_code(num, base, alphabet, &ds);
            return json_to_py(to_json(rational_equivalent(ds, c, kmax, qmax)));
        },
        py::arg("base"), py::arg("digits"), py::arg("num"), py::arg("alphabet") = "delta_plus",
        py::arg("kmax") = 32, py::arg("qmax") = 12);

    m.def(
        "is_finite",
        [](int base, const std::vector<int>& digits, const std::string& num,
           const std::string& alphabet) {
            DigitSet ds = make_ds(base, digits);
            PeriodicCode c = make_code(num, base, alphabet, &ds);
            FiniteResult r = is_finite(ds, c);
            json j{{"finite", r.finite}};
            json pts = json::array(), extra = json::array();
            for (const Rat& p : r.points) pts.push_back(rat_str(p));
            for (const Rat& p : r.boundary_points) extra.push_back(rat_str(p));
            j["points"] = pts;
            j["boundary_points"] = extra;
            j["gamma"] = r.gamma ? to_json(*r.gamma) : json(nullptr);
            return json_to_py(j);
        },
        py::arg("base"), py::arg("digits"), py::arg("num"), py::arg("alphabet") = "delta_plus");

    m.def(
        "strongly_periodic",
        [](int base, const std::vector<int>& digits, const std::string& num,
           const std::string& alphabet) {
            DigitSet ds = make_ds(base, digits);
            PeriodicCode c = make_code(num, base, alphabet, &ds);
            StrongPeriodicityResult r = strongly_periodic(ds, c);
            json j{{"strongly_periodic", r.strongly_periodic}};
            if (r.strongly_periodic) {
                j["q"] = r.q;
                j["p"] = r.p;
                j["witnesses"] = r.witnesses;
            }
            return json_to_py(j);
        },
        py::arg("base"), py::arg("digits"), py::arg("num"), py::arg("alphabet") = "delta_plus");

    m.def(
        "selfsim",
        [](int base, const std::vector<int>& digits, const std::string& num,
           const std::string& alphabet, long long budget) {
            DigitSet ds = make_ds(base, digits);
            PeriodicCode c = make_code(num, base, alphabet, &ds);
            return json_to_py(to_json(self_similar_report(ds, c, Budget{budget})));
        },
        py::arg("base"), py::arg("digits"), py::arg("num"), py::arg("alphabet") = "nary",
        py::arg("budget") = 2'000'000LL);

    m.def(
        "generate_nonequivalent",
        [](int base, const std::vector<int>& digits, const std::string& alpha, int delta,
           const std::vector<int>& bits, int depth) {
            DigitSet ds = make_ds(base, digits);
            PeriodicCode a = make_code(alpha, base, "delta_plus", &ds);
            return json_to_py(to_json(generate_nonequivalent(ds, a, delta, bits, depth)));
        },
        py::arg("base"), py::arg("digits"), py::arg("alpha"), py::arg("delta"), py::arg("bits"),
        py::arg("depth"));

    m.def("thue_morse_bits", &thue_morse_bits, py::arg("count"));

    m.def(
        "uniform_hat",
        [](int base, const std::vector<int>& digits, const std::string& num) {
            DigitSet ds = make_ds(base, digits);
            PeriodicCode c = make_code(num, base, "delta_plus", &ds);
            return json_to_py(to_json(uniform_hat(ds, c)));
        },
        py::arg("base"), py::arg("digits"), py::arg("num"));

    m.def(
        "g_beta",
        [](int N, const std::vector<int>& omega, const std::string& beta, const std::string& num) {
            BetaSystem sys(N, omega, parse_rational(beta));
            DigitSet ds(N, omega);
            PeriodicCode c = make_code(num, N, "d_only", &ds);
            return rat_str(g_beta(sys, c));
        },
        py::arg("N"), py::arg("omega"), py::arg("beta"), py::arg("num"));

    m.def(
        "gamma_scale",
        [](int N, const std::vector<int>& omega, const std::string& beta) {
            return rat_str(gamma_scale(BetaSystem(N, omega, parse_rational(beta))));
        },
        py::arg("N"), py::arg("omega"), py::arg("beta"));

    m.def(
        "transport",
        [](int N, const std::vector<int>& omega, const std::string& beta,
           const std::vector<std::string>& nums) {
            BetaSystem sys(N, omega, parse_rational(beta));
            DigitSet ds(N, omega);
            std::vector<PeriodicCode> codes;
            for (const std::string& s : nums) codes.push_back(make_code(s, N, "d_only", &ds));
            return json_to_py(to_json(transport_report(sys, ds, codes)));
        },
        py::arg("N"), py::arg("omega"), py::arg("beta"), py::arg("nums"));
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kabtrees/census.hpp"
#include "kabtrees/codec.hpp"
#include "kabtrees/construct.hpp"
#include "kabtrees/partitions.hpp"

namespace py = pybind11;
using namespace kabtrees;

namespace {

py::int_ to_py(const Natural& n) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(n.str().c_str(), nullptr, 10));
}

py::object to_py(const std::optional<Natural>& n) { return n ? py::object(to_py(*n)) : py::object(py::none()); }

Natural from_py(const py::int_& n) { return Natural(py::str(n).cast<std::string>()); }

std::vector<int> parts_of(const DegreePartition& p) { return {p.parts().begin(), p.parts().end()}; }

py::dict report_dict(const BoundsReport& r) {
    py::dict d;
    d["a"] = r.a;
    d["b"] = r.b;
    d["P_a"] = to_py(r.p_a);
    d["P_b"] = to_py(r.p_b);
    d["lower"] = to_py(r.lower);
    d["upper_thm26"] = to_py(r.upper_thm26);
    d["upper_lemma25"] = to_py(r.upper_lemma25);
    d["scoins"] = to_py(r.scoins);
    d["exact"] = to_py(r.exact);
    d["tight"] = r.tight() ? py::object(py::bool_(*r.tight())) : py::object(py::none());
    d["corollary_231_holds"] = r.corollary_231_holds;
    d["corollary_241_holds"] =
        r.corollary_241_holds ? py::object(py::bool_(*r.corollary_241_holds)) : py::object(py::none());
    return d;
}

std::vector<BoundsReport> table(int max_n, std::uint64_t budget, int jobs) {
    py::gil_scoped_release release;
    return census_table(max_n, budget, jobs);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Spanning-tree isomorphism classes of complete bipartite graphs";

    auto usage = py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<SumMismatch>(m, "SumMismatch", usage.ptr());
    py::register_exception<NotMonotone>(m, "NotMonotone", usage.ptr());
    py::register_exception<InvalidTree>(m, "InvalidTree", PyExc_ValueError);
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);
    py::register_exception<CodeOutOfRange>(m, "CodeOutOfRange", PyExc_IndexError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    py::class_<BipartiteTree>(m, "BipartiteTree")
        .def(py::init([](int a, int b, const std::vector<std::pair<int, int>>& edges) {
                 std::vector<Edge> es;
                 for (auto [x, y] : edges) es.push_back({x, y});
                 return BipartiteTree(a, b, std::move(es));
             }),
             py::arg("a"), py::arg("b"), py::arg("edges"))
        .def_property_readonly("a_size", &BipartiteTree::a_size)
        .def_property_readonly("b_size", &BipartiteTree::b_size)
        .def_property_readonly("edges",
                               [](const BipartiteTree& t) {
                                   std::vector<std::pair<int, int>> out;
                                   for (const Edge& e : t.edges()) out.emplace_back(e.a, e.b);
                                   return out;
                               })
        .def("degrees",
             [](const BipartiteTree& t) {
                 auto [s, u] = degrees(t);
                 return std::make_pair(parts_of(s), parts_of(u));
             })
        .def("to_dot", &to_dot)
        .def("to_json", &to_json)
        .def("__eq__", [](const BipartiteTree& x, const BipartiteTree& y) { return x == y; })
        .def("__hash__", [](const BipartiteTree& t) { return py::hash(py::str(to_json(t))); })
        .def("__repr__", [](const BipartiteTree& t) { return "BipartiteTree(" + to_json(t) + ")"; });

    m.def("count_partitions", [](int mm, int k) { return to_py(count_partitions(mm, k)); }, py::arg("m"),
          py::arg("k"));
    m.def(
        "enumerate_partitions",
        [](int mm, int k) {
            std::vector<std::vector<int>> out;
            for_each_partition(mm, k, [&](const DegreePartition& p) { out.push_back(parts_of(p)); });
            return out;
        },
        py::arg("m"), py::arg("k"));

    m.def("construct_tree", py::overload_cast<const std::vector<int>&, const std::vector<int>&>(&construct_tree),
          py::arg("s"), py::arg("t"));
    m.def(
        "realize_all_pairs",
        [](int a, int b) {
            py::list out;
            for (auto& [s, t, tree] : realize_all_pairs(a, b))
                out.append(py::make_tuple(parts_of(s), parts_of(t), tree));
            return out;
        },
        py::arg("a"), py::arg("b"));

    m.def("encode", [](const BipartiteTree& t) { return encode(t).to_string(); });
    m.def(
        "decode", [](int a, int b, const std::string& code) { return decode(BipartiteCode::parse(a, b, code)); },
        py::arg("a"), py::arg("b"), py::arg("code"));
    m.def(
        "code_at", [](int a, int b, std::uint64_t rank) { return code_at(a, b, rank).to_string(); }, py::arg("a"),
        py::arg("b"), py::arg("rank"));
    m.def("enumerate_labeled", &enumerate_labeled, py::arg("a"), py::arg("b"));
    m.def("sample_uniform", &sample_uniform, py::arg("a"), py::arg("b"), py::arg("seed"));

    m.def("canonical_form", [](const BipartiteTree& t) { return canonical_form(t).to_hex(); });
    m.def("are_isomorphic", &are_isomorphic);

    m.def(
        "exact_classes",
        [](int a, int b, std::uint64_t budget, int jobs) {
            ExactClasses result;
            {
                py::gil_scoped_release release;
                result = exact_classes(a, b, budget, jobs);
            }
            return py::make_tuple(to_py(result.count), result.representatives);
        },
        py::arg("a"), py::arg("b"), py::arg("budget") = kDefaultCodeBudget, py::arg("jobs") = 1);
    m.def(
        "oracle_edge_subsets",
        [](int a, int b, std::uint64_t budget) { return to_py(oracle_edge_subsets(a, b, budget)); }, py::arg("a"),
        py::arg("b"), py::arg("budget") = kDefaultSubsetBudget);
    m.def("lower_bound", [](int a, int b) { return to_py(lower_bound(a, b)); });
    m.def("upper_bound", [](int a, int b) { return to_py(upper_bound(a, b)); });
    m.def(
        "upper_bound_lemma25",
        [](int a, int b, const py::int_& iaa) { return to_py(upper_bound_lemma25(a, b, from_py(iaa))); },
        py::arg("a"), py::arg("b"), py::arg("exact_iaa"));
    m.def("scoins", [](int a, int b) { return to_py(scoins(a, b)); });
    m.def(
        "kirchhoff_count", [](int a, int b, int limit) { return to_py(kirchhoff_count(a, b, limit)); },
        py::arg("a"), py::arg("b"), py::arg("size_limit") = kDefaultKirchhoffLimit);
    m.def("verify_corollaries", [](int a, int b) {
        const auto c = verify_corollaries(a, b);
        return py::make_tuple(c.scoins_dominates_pairs, c.diagonal_dominates_unordered
                                                            ? py::object(py::bool_(*c.diagonal_dominates_unordered))
                                                            : py::object(py::none()));
    });

    m.def(
        "census_table",
        [](int max_n, std::uint64_t budget, int jobs) {
            py::list out;
            for (const auto& r : table(max_n, budget, jobs)) out.append(report_dict(r));
            return out;
        },
        py::arg("max_n"), py::arg("budget") = kDefaultCodeBudget, py::arg("jobs") = 1);
    m.def(
        "census_csv", [](int max_n, std::uint64_t budget, int jobs) { return census_csv(table(max_n, budget, jobs)); },
        py::arg("max_n"), py::arg("budget") = kDefaultCodeBudget, py::arg("jobs") = 1);
    m.def(
        "census_json",
        [](int max_n, std::uint64_t budget, int jobs) { return census_json(table(max_n, budget, jobs)); },
        py::arg("max_n"), py::arg("budget") = kDefaultCodeBudget, py::arg("jobs") = 1);
}

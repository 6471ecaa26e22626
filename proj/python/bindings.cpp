#include "drsim/analytic.hpp"
#include "drsim/config.hpp"
#include "drsim/csv.hpp"
#include "drsim/geometry.hpp"
#include "drsim/radio.hpp"
#include "drsim/sim.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

namespace py = pybind11;
using namespace drsim;

namespace {

template <typename Fn>
std::string to_csv(Fn fn)
{
    std::ostringstream out;
    fn(out);
    return out.str();
}

std::string point_repr(const Point& p) { return "Point(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")"; }

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Concentric-square clustering simulator for wireless sensor networks";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    // geometry
    py::class_<Point>(m, "Point")
        .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
        .def(py::init([](py::tuple t) {
            if (t.size() != 2) throw py::value_error("Point expects (x, y)");
            return Point{t[0].cast<double>(), t[1].cast<double>()};
        }))
        .def_readwrite("x", &Point::x)
        .def_readwrite("y", &Point::y)
        .def("__eq__", [](const Point& a, const Point& b) { return a == b; })
        .def("__iter__", [](const Point& p) { return py::iter(py::make_tuple(p.x, p.y)); })
        .def("__repr__", &point_repr);
    py::implicitly_convertible<py::tuple, Point>();

    m.def("distance", &distance);

    py::class_<Rect>(m, "Rect")
        .def(py::init<Point, Point>())
        .def_property_readonly("min_corner", &Rect::min_corner)
        .def_property_readonly("max_corner", &Rect::max_corner)
        .def_property_readonly("width", &Rect::width)
        .def_property_readonly("height", &Rect::height)
        .def_property_readonly("area", &Rect::area)
        .def_property_readonly("centroid", &Rect::centroid)
        .def("contains", &Rect::contains);

    py::enum_<RegionKind>(m, "RegionKind")
        .value("CENTRAL", RegionKind::Central)
        .value("NON_CORNER", RegionKind::NonCorner)
        .value("CORNER", RegionKind::Corner);

    py::enum_<Side>(m, "Side")
        .value("E", Side::East)
        .value("N", Side::North)
        .value("W", Side::West)
        .value("S", Side::South)
        .value("NE", Side::NorthEast)
        .value("NW", Side::NorthWest)
        .value("SW", Side::SouthWest)
        .value("SE", Side::SouthEast)
        .value("NONE", Side::None);

    py::class_<Region>(m, "Region")
        .def_readonly("id", &Region::id)
        .def_readonly("kind", &Region::kind)
        .def_readonly("ring", &Region::ring)
        .def_readonly("side", &Region::side)
        .def_readonly("bounds", &Region::bounds)
        .def_readonly("midpoint", &Region::midpoint);

    py::class_<FieldPartition>(m, "FieldPartition")
        .def(py::init<double, int>(), py::arg("field_length"), py::arg("rings"))
        .def_property_readonly("field_length", &FieldPartition::field_length)
        .def_property_readonly("rings", &FieldPartition::rings)
        .def_property_readonly("distance_factor", &FieldPartition::distance_factor)
        .def_property_readonly("center", &FieldPartition::center)
        .def_property_readonly("regions",
                               [](const FieldPartition& fp) {
                                   return std::vector<Region>(fp.regions().begin(), fp.regions().end());
                               })
        .def("region", &FieldPartition::region, py::return_value_policy::copy)
        .def("locate", &FieldPartition::locate)
        .def("inward_adjacent_ncr", &FieldPartition::inward_adjacent_ncr)
        .def("cr_neighbor_ncrs", &FieldPartition::cr_neighbor_ncrs)
        .def("__len__", &FieldPartition::size)
        .def("to_csv", [](const FieldPartition& fp) { return to_csv([&](std::ostream& o) { write_partition_csv(o, fp); }); });

    m.def("build_partition", &build_partition, py::arg("field_length"), py::arg("rings"));

    // radio
    py::class_<RadioParams>(m, "RadioParams")
        .def(py::init<>())
        .def(py::init<double, double, double, double>(), py::arg("e_elec"), py::arg("e_fs"), py::arg("e_mp"),
             py::arg("e_da"))
        .def_property_readonly("e_elec", &RadioParams::e_elec)
        .def_property_readonly("e_fs", &RadioParams::e_fs)
        .def_property_readonly("e_mp", &RadioParams::e_mp)
        .def_property_readonly("e_da", &RadioParams::e_da)
        .def_property_readonly("d0", &RadioParams::d0);

    m.def("tx_energy", &tx_energy, py::arg("radio"), py::arg("bits"), py::arg("distance"));
    m.def("rx_energy", &rx_energy, py::arg("radio"), py::arg("bits"));
    m.def("agg_energy", &agg_energy, py::arg("radio"), py::arg("bits"), py::arg("signals"));

    // simulation
    py::enum_<ProtocolKind>(m, "Protocol")
        .value("DR", ProtocolKind::DR)
        .value("LEACH", ProtocolKind::LEACH)
        .value("LEACH_C", ProtocolKind::LEACH_C);

    py::enum_<Deployment>(m, "Deployment").value("UNIFORM", Deployment::Uniform).value("LATTICE", Deployment::Lattice);
    py::enum_<Aggregation>(m, "Aggregation")
        .value("COMPRESS", Aggregation::Compress)
        .value("FORWARD", Aggregation::Forward);

    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init<>())
        .def_readwrite("field_length", &SimConfig::field_length)
        .def_readwrite("n_rings", &SimConfig::n_rings)
        .def_readwrite("node_count", &SimConfig::node_count)
        .def_readwrite("bs_pos", &SimConfig::bs_pos)
        .def_readwrite("initial_energy", &SimConfig::initial_energy)
        .def_readwrite("packet_bits", &SimConfig::packet_bits)
        .def_readwrite("protocol", &SimConfig::protocol)
        .def_readwrite("ch_probability", &SimConfig::ch_probability)
        .def_readwrite("max_rounds", &SimConfig::max_rounds)
        .def_readwrite("seed", &SimConfig::seed)
        .def_readwrite("runs", &SimConfig::runs)
        .def_readwrite("radio", &SimConfig::radio)
        .def_readwrite("deployment", &SimConfig::deployment)
        .def_readwrite("lattice_per_d", &SimConfig::lattice_per_d)
        .def_readwrite("fixed_link_distance", &SimConfig::fixed_link_distance)
        .def_readwrite("relay", &SimConfig::relay)
        .def_readwrite("aggregation", &SimConfig::aggregation)
        .def_readwrite("threads", &SimConfig::threads)
        .def_readwrite("analytic_distance", &SimConfig::analytic_distance)
        .def_property_readonly("base_station", &SimConfig::base_station)
        .def("validate", &SimConfig::validate)
        .def("with_overrides", &apply_overrides, py::arg("overrides"))
        .def_static("from_text", &parse_config_text, py::arg("text"), py::arg("source") = "<config>")
        .def_static("from_file", &parse_config, py::arg("path"), py::arg("overrides") = std::vector<std::string>{});

    py::class_<Node>(m, "Node")
        .def_readonly("id", &Node::id)
        .def_readonly("pos", &Node::pos)
        .def_readonly("energy", &Node::energy)
        .def_readonly("region", &Node::region)
        .def_property_readonly("alive", &Node::alive);

    m.def("deploy", py::overload_cast<const SimConfig&>(&deploy), py::arg("config"));

    py::class_<RoundMetrics>(m, "RoundMetrics")
        .def_readonly("round", &RoundMetrics::round)
        .def_readonly("alive", &RoundMetrics::alive)
        .def_readonly("ch_count", &RoundMetrics::ch_count)
        .def_readonly("packets_to_bs", &RoundMetrics::packets_to_bs)
        .def_readonly("energy_spent", &RoundMetrics::energy_spent)
        .def_readonly("cumulative_energy", &RoundMetrics::cumulative_energy);

    py::class_<RunSummary>(m, "RunSummary")
        .def_readonly("fnd", &RunSummary::fnd)
        .def_readonly("hnd", &RunSummary::hnd)
        .def_readonly("lnd", &RunSummary::lnd)
        .def_readonly("total_packets", &RunSummary::total_packets);

    py::class_<RunResult>(m, "RunResult")
        .def_readonly("series", &RunResult::series)
        .def_readonly("summary", &RunResult::summary)
        .def("to_csv", [](const RunResult& r) { return to_csv([&](std::ostream& o) { write_run_csv(o, r.series); }); });

    m.def("run", &run, py::arg("config"), py::call_guard<py::gil_scoped_release>());

    py::class_<MetricStats>(m, "MetricStats")
        .def_readonly("mean", &MetricStats::mean)
        .def_readonly("median", &MetricStats::median);

    py::class_<ProtocolAggregate>(m, "ProtocolAggregate")
        .def_readonly("protocol", &ProtocolAggregate::protocol)
        .def_readonly("fnd", &ProtocolAggregate::fnd)
        .def_readonly("hnd", &ProtocolAggregate::hnd)
        .def_readonly("lnd", &ProtocolAggregate::lnd)
        .def_readonly("total_packets", &ProtocolAggregate::total_packets);

    py::class_<Improvement>(m, "Improvement")
        .def_readonly("a", &Improvement::a)
        .def_readonly("b", &Improvement::b)
        .def_readonly("fnd", &Improvement::fnd)
        .def_readonly("hnd", &Improvement::hnd)
        .def_readonly("lnd", &Improvement::lnd)
        .def_readonly("total_packets", &Improvement::total_packets);

    py::class_<RunRecord>(m, "RunRecord")
        .def_readonly("protocol", &RunRecord::protocol)
        .def_readonly("seed", &RunRecord::seed)
        .def_readonly("summary", &RunRecord::summary);

    py::class_<ExperimentResult>(m, "ExperimentResult")
        .def_readonly("runs", &ExperimentResult::runs)
        .def_readonly("aggregates", &ExperimentResult::aggregates)
        .def_readonly("improvements", &ExperimentResult::improvements)
        .def("to_csv",
             [](const ExperimentResult& r) { return to_csv([&](std::ostream& o) { write_experiment_csv(o, r.runs); }); });

    m.def(
        "experiment",
        [](const SimConfig& config, std::optional<std::vector<ProtocolKind>> protocols) {
            py::gil_scoped_release release;
            return protocols ? experiment(config, *protocols) : experiment(config);
        },
        py::arg("config"), py::arg("protocols") = py::none());

    // analytic
    py::class_<AnalyticRow>(m, "AnalyticRow")
        .def_readonly("rho", &AnalyticRow::rho)
        .def_readonly("d", &AnalyticRow::d)
        .def_readonly("p", &AnalyticRow::p)
        .def_readonly("e_is", &AnalyticRow::e_is)
        .def_readonly("e_cr", &AnalyticRow::e_cr)
        .def_readonly("e_ms", &AnalyticRow::e_ms)
        .def_readonly("e_os", &AnalyticRow::e_os)
        .def_readonly("e_total", &AnalyticRow::e_total);

    m.def(
        "analytic_sweep",
        [](std::vector<double> rho, std::vector<double> p, double field_length, int rings, double distance, Bits bits,
           const RadioParams& radio) {
            SweepSpec spec{field_length, rings, std::move(rho), std::move(p), distance, bits, radio};
            return analytic_sweep(spec);
        },
        py::arg("rho"), py::arg("p"), py::arg("field_length") = 100.0, py::arg("rings") = 3,
        py::arg("distance") = 0.0, py::arg("bits") = Bits{4000}, py::arg("radio") = RadioParams{});
}

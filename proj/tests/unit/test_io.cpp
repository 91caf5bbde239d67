#include <sstream>

#include "doctest.h"
#include "minkflow/errors.hpp"
#include "minkflow/inequalities.hpp"
#include "minkflow/io.hpp"
#include "minkflow/svg.hpp"

using namespace minkflow;

TEST_SUITE("io") {
    TEST_CASE("doubles round-trip through text") {
        for (double v : {0.1, 1.0 / 3.0, 6.02214076e23, -2.5e-300, 17.355387381771433}) {
            CHECK(std::stod(format_double(v)) == v);
        }
        CHECK(format_double(1234567.0).find(',') == std::string::npos);
    }

    TEST_CASE("spec json") {
        const Json doc = Json::parse(R"({"space": "hyperbolic", "base_radius": 0.7,
            "perturbations": [{"basis": 8, "amplitude": 0.05}, {"basis": 1, "amplitude": -0.01}], "subdivision": 4})");
        const RadialGraphSpec spec = spec_from_json(doc);
        CHECK(spec.space == SpaceKind::Hyperbolic);
        CHECK(spec.base_radius == 0.7);
        CHECK(spec.perturbations.size() == 2);
        CHECK(spec.perturbations[1].amplitude == -0.01);
        CHECK(spec.subdivision == 4);
        CHECK(spec.center.x == basepoint(SpaceKind::Hyperbolic).x);
        const RadialGraphSpec again = spec_from_json(spec_to_json(spec));
        CHECK(again.perturbations[0].basis == 8);
        CHECK(again.base_radius == spec.base_radius);

        CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"space": "flat", "base_radius": 1})")), InputError);
        CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"space": "euclidean"})")), InputError);
        CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"space": "euclidean", "base_radius": -1})")), InputError);
        CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"space": "euclidean", "base_radius": 1,
            "perturbations": [{"basis": 9, "amplitude": 0.1}]})")), InputError);
        CHECK_THROWS_AS(spec_from_json(Json::parse("[1, 2]")), InputError);
        CHECK_THROWS_AS(load_spec("/nonexistent/spec.json"), InputError);
    }

    TEST_CASE("deficit report json schema") {
        const DeficitReport r = minkowski_deficit_euclidean({12.0, 30.0, 4.0});
        const Json j = deficit_report_to_json(r);
        for (const char* key : {"name", "deficit", "holds", "equality", "tol", "inputs"}) CHECK(j.contains(key));
        CHECK(j["inputs"].contains("total_mean_curvature"));
        CHECK_FALSE(j.contains("asserted"));
        const DeficitReport back = deficit_report_from_json(j);
        CHECK(back.deficit == r.deficit);
        CHECK(back.inputs.volume == 4.0);

        const Json f = deficit_report_to_json(false_inequality_eval({1, 1, 0}));
        CHECK(f["asserted"] == false);
        CHECK_FALSE(deficit_report_from_json(f).asserted);
    }

    TEST_CASE("flow series csv") {
        FlowSeries s;
        s.t_values = {0.0, 0.25, 0.5};
        s.areas = {12.566370614359172, 19.634954084936208, 28.274333882308138};
        s.volumes = {4.1887902047863905, 8.1812308687234191, 14.137166941154069};
        s.provenance = Provenance::Discrete;
        std::ostringstream os;
        write_flow_series_csv(os, s);
        CHECK(os.str().rfind("t,area,volume,provenance\n", 0) == 0);
        std::istringstream is(os.str());
        const FlowSeries back = read_flow_series_csv(is);
        CHECK(back.areas == s.areas);
        CHECK(back.volumes == s.volumes);
        CHECK(back.t_values == s.t_values);
        CHECK(back.provenance == Provenance::Discrete);

        std::istringstream bad_header("t,a,v\n");
        CHECK_THROWS_AS(read_flow_series_csv(bad_header), InputError);
        std::istringstream bad_row("t,area,volume,provenance\n0,1,x,analytic\n");
        CHECK_THROWS_AS(read_flow_series_csv(bad_row), InputError);
    }

    TEST_CASE("csv table rejects ragged rows") {
        CsvTable t({"a", "b"});
        t.cell(1.5).cell(2);
        t.end_row();
        t.cell("x");
        CHECK_THROWS_AS(t.end_row(), InputError);
        std::ostringstream os;
        t.write(os);
        CHECK(os.str() == "a,b\n1.5,2\n");
    }

    TEST_CASE("svg chart") {
        SvgPanel p{"Area", "t", "A", {{"analytic", {0, 1, 2}, {1, 4, 9}, "#000", true, false}}};
        const std::string svg = render_svg_chart({p, p});
        CHECK(svg.rfind("<svg", 0) == 0);
        CHECK(svg.find("polyline") != std::string::npos);
        CHECK(svg.find("analytic") != std::string::npos);
        CHECK(svg.find("</svg>") != std::string::npos);
    }
}

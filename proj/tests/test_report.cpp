#include "doctest.h"

#include "yforge/report.hpp"
#include "yforge/fock.hpp"

using namespace yforge;

TEST_CASE("suite registry") {
    CHECK(is_suite_name("shuffle"));
    CHECK(is_suite_name("all"));
    CHECK_FALSE(is_suite_name("bogus"));
    CHECK_THROWS(run_suite("bogus", {}));
}

TEST_CASE("small suites run green and serialize deterministically") {
    SuiteParams p;
    p.comm_max = 2;
    p.y1_max = 1;
    p.serre_max = 0;
    p.order = 3;
    p.level = 1;
    p.workers = 1;

    SuiteReport a = run_suite("shuffle", p);
    CHECK(a.passed());
    SuiteReport b = run_suite("shuffle", p);
    CHECK(a.to_json() == b.to_json());
    CHECK(a.to_json().find("wall") == std::string::npos);
}

TEST_CASE("worker pool does not perturb the report") {
    SuiteParams p;
    p.comm_max = 2;
    p.y1_max = 1;
    p.serre_max = 0;
    p.order = 3;
    p.level = 1;
    p.workers = 1;
    SuiteParams p3 = p;
    p3.workers = 3;
    CHECK(run_suite("yangian", p).to_json() == run_suite("yangian", p3).to_json());
}

TEST_CASE("calibration report") {
    SuiteReport rep = calibrate_report();
    CHECK(rep.passed());
    bool found_standard = false, found_offset = false;
    for (auto& c : rep.checks) {
        if (c.id == "calibrate/virasoro-standard") {
            found_standard = c.status == CheckResult::Status::pass;
            CHECK(c.residual.find("c = ") == 0);
        }
        if (c.id.find("screening-002") != std::string::npos)
            found_offset = c.residual == "offset = -1";
    }
    CHECK(found_standard);
    CHECK(found_offset);
}

TEST_CASE("matrix export carries exact entries") {
    auto sp = make_space({{3}}, {hbar(1)});
    MatrixOp m = MatrixOp::assemble(TruncOp::field_mode(sp, boson_field(0), 0), 2);
    std::string j = matrix_op_to_json(m);
    CHECK(j.find("\"color\": 3") != std::string::npos);
    CHECK(j.find("\"num\": \"h1\"") != std::string::npos);
    CHECK(j.find("\"den\": \"1\"") != std::string::npos);
}

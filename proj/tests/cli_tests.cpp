#include <doctest.h>

#include <cstdlib>
#include <set>

#include "test_support.hpp"
#include "tricolor/parallel.hpp"
#include "tricolor/serialize.hpp"
#include "tricolor/suites.hpp"

using namespace tricolor;

TEST_CASE("generator matches the documented algorithm bit-for-bit") {
    // SplitMix64 reference vector for seed 0.
    SplitMix64 g(0);
    CHECK(g.next() == 0xE220A8397B1DCDAFull);
    CHECK(g.next() == 0x6E789E6AA1B965F4ull);

    // Substream derivation and draw order are part of the report contract;
    // these values pin them down for other implementations.
    CHECK(point_substream_seed(1, 0) == 6791897765849424158ull);
    CHECK(point_substream_seed(42, 7) == 13553200262973777806ull);
    CHECK(point_to_json(sample_point(2, 42, 7)) ==
          "{\"b\":[\"19/52\",\"0/1\"],"
          "\"x\":[[\"-58/19\",\"0/1\"],[\"-33/62\",\"0/1\"]],"
          "\"y\":[[\"12/1\",\"0/1\"],[\"11/25\",\"0/1\"]]}");
}

TEST_CASE("point sampling is deterministic and admissible") {
    const EvaluationPoint p1 = sample_point(3, 42, 7);
    const EvaluationPoint p2 = sample_point(3, 42, 7);
    CHECK(point_to_json(p1) == point_to_json(p2));

    const EvaluationPoint p3 = sample_point(3, 42, 8);
    CHECK(point_to_json(p1) != point_to_json(p3));
    const EvaluationPoint p4 = sample_point(3, 43, 7);
    CHECK(point_to_json(p1) != point_to_json(p4));

    for (std::uint64_t index = 0; index < 50; ++index) {
        const EvaluationPoint pt = sample_point(2, 99, index);
        CHECK(pt.b().is_rational());
        CHECK(pt.b() != CycScalar(1));
        CHECK(pt.b() != CycScalar(-1));
        for (int mu = 1; mu <= 4; ++mu) {
            CHECK_FALSE(pt.u(mu).is_zero());
            CHECK(pt.u(mu).c0().numerator().get_str().size() <= 3); // |num| <= 64
            for (int nu = mu + 1; nu <= 4; ++nu)
                CHECK(pt.u(mu) * pt.u(mu) != pt.u(nu) * pt.u(nu));
        }
    }
}

TEST_CASE("point file roundtrip") {
    const EvaluationPoint pt = sample_point(2, 5, 0);
    const std::string json = point_to_json(pt);
    const EvaluationPoint back = point_from_json(json);
    CHECK(point_to_json(back) == json);
    CHECK_THROWS(point_from_json("{\"b\": [\"1/1\",\"0/1\"], \"x\": [], \"y\": []}"));
    CHECK_THROWS_AS(load_point_file("/nonexistent/point.json"), std::invalid_argument);
}

TEST_CASE("run_suite rejects unknown names") {
    SuiteConfig cfg;
    cfg.suite = "nonsense";
    CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
}

TEST_CASE("states suite passes and reports are reproducible") {
    SuiteConfig cfg;
    cfg.suite = "states";
    cfg.n_max = 4;
    const CheckReport r1 = run_suite(cfg);
    CHECK(r1.pass);
    const CheckReport r2 = run_suite(cfg);
    CHECK(report_to_canonical_json(r1, cfg) == report_to_canonical_json(r2, cfg));
}

TEST_CASE("reports are identical across worker counts") {
    SuiteConfig cfg;
    cfg.suite = "funceq";
    cfg.n_max = 2;
    cfg.trials = 4;
    cfg.seed = 12345;

    setenv("TRICOLOR_THREADS", "1", 1);
    const std::string sequential = report_to_canonical_json(run_suite(cfg), cfg);
    setenv("TRICOLOR_THREADS", "4", 1);
    const std::string parallel = report_to_canonical_json(run_suite(cfg), cfg);
    unsetenv("TRICOLOR_THREADS");

    CHECK(sequential == parallel);
    CHECK(worker_count() >= 1);
}

TEST_CASE("perturbed funceq run fails with a serialized witness") {
    SuiteConfig cfg;
    cfg.suite = "funceq";
    cfg.n_max = 1;
    cfg.trials = 1;
    cfg.perturb = true;
    const CheckReport report = run_suite(cfg);
    CHECK_FALSE(report.pass);
    bool witnessed = false;
    for (const CheckRecord& rec : report.records)
        if (!rec.pass && rec.witness.find("\"b\"") != std::string::npos) witnessed = true;
    CHECK(witnessed);
}

TEST_CASE("record fields carry the check coordinates") {
    SuiteConfig cfg;
    cfg.suite = "parity";
    cfg.n_min = 1;
    cfg.n_max = 1;
    cfg.trials = 2;
    const CheckReport report = run_suite(cfg);
    CHECK(report.pass);
    std::set<std::uint64_t> seeds;
    for (const CheckRecord& rec : report.records) {
        CHECK(rec.suite == "parity");
        CHECK(rec.n == 1);
        CHECK(rec.r.has_value());
        CHECK(rec.side.has_value());
        CHECK(rec.k == 1);
        REQUIRE(rec.point_seed.has_value());
        seeds.insert(*rec.point_seed);
    }
    CHECK(seeds.size() == 2); // one substream seed per trial
}

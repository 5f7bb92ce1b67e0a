#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "planegraph/verify.hpp"

using namespace planegraph;

TEST_CASE("zero trials yield an empty passing report") {
    SuiteOptions opt;
    opt.trials = 0;
    auto r = verify_embedding_suite(opt);
    CHECK(r.records.empty());
    CHECK(r.all_passed());
    auto p = verify_property_suite(opt);
    CHECK(p.records.empty());
    CHECK(p.all_passed());
}

TEST_CASE("small runs of every suite pass") {
    SuiteOptions opt;
    opt.seed = 1;
    opt.trials = 12;
    CHECK(verify_embedding_suite(opt).all_passed());
    CHECK(verify_missing_edge_suite(opt).all_passed());
    CHECK(verify_bounded_subgraph_suite(opt, 15, 24).all_passed());
    CHECK(verify_joinable_suite(opt, 24).all_passed());
    CHECK(verify_cycle_spectrum_suite(opt, 20).all_passed());
    CHECK(verify_min_order_cycle_suite(opt, 5).all_passed());
    CHECK(verify_bound_formula_suite(opt).all_passed());
    auto ext = verify_extraction_suite(opt, 4, 5, 10, 32);
    CHECK(ext.all_passed());
    CHECK(ext.records.size() == 20);
}

TEST_CASE("glued suite over the small range") {
    SuiteOptions opt;
    auto r = verify_glued_suite(opt, {7, 14}, 24);
    CHECK(r.all_passed());
    // k=7 from n=3, k=14 from n=9
    CHECK(r.records.size() == (24 - 3 + 1) + (24 - 9 + 1));
}

TEST_CASE("an injected requirement offset makes the joinable suite fail with a payload") {
    SuiteOptions opt;
    opt.seed = 3;
    opt.trials = 30;
    opt.joinable_requirement_offset = 1;
    auto r = verify_joinable_suite(opt, 24);
    CHECK_FALSE(r.all_passed());
    bool replayable = false;
    for (const auto& rec : r.records) {
        if (rec.status != CheckStatus::Fail) continue;
        REQUIRE_FALSE(rec.payload.empty());
        // the payload must parse back to a graph that reproduces the failure
        std::istringstream in(rec.payload);
        auto gs = read_text(in);
        REQUIRE(gs.size() == 1);
        bool refails = false;
        for (VertexId v : gs[0].outer_face().vertex_set()) {
            auto jr = joinable_after_deletion(gs[0], v);
            if (static_cast<int>(jr.witnesses.size()) < jr.block_count - 1 + 1) refails = true;
        }
        CHECK(refails);
        replayable = true;
        break;
    }
    CHECK(replayable);
}

TEST_CASE("reports emit structured records and summaries") {
    SuiteOptions opt;
    opt.trials = 3;
    auto r = verify_embedding_suite(opt);
    std::ostringstream records, summary;
    r.print_records(records);
    r.print_summary(summary);
    CHECK(records.str().find("suite=embedding") != std::string::npos);
    CHECK(records.str().find("outcome=pass") != std::string::npos);
    CHECK(summary.str().find("3 passed") != std::string::npos);
}

TEST_CASE("worker parallelism does not change the report") {
    SuiteOptions seq;
    seq.seed = 5;
    seq.trials = 16;
    SuiteOptions par = seq;
    par.workers = 4;
    auto a = verify_embedding_suite(seq);
    auto b = verify_embedding_suite(par);
    REQUIRE(a.records.size() == b.records.size());
    for (size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].instance == b.records[i].instance);
        CHECK(a.records[i].status == b.records[i].status);
    }
}

#include <doctest.h>

#include "mel/error.hpp"
#include "mel/parser.hpp"
#include "mel/printer.hpp"
#include "mel/rewrite.hpp"
#include "mel/semantics.hpp"
#include "oracle.hpp"
#include "suites.hpp"

using namespace mel;

namespace {

std::string run(std::string_view pass, std::string_view f, RewriteOptions o = {}) {
    return print_formula(apply_pass(pass, parse_formula(f), o));
}

void require_ok(const testing::SuiteResult& r) {
    INFO(r.name);
    CHECK_MESSAGE(r.ok(), r.first_failure);
}

bool strict_equiv(const Formula& a, const Formula& b, std::size_t len, std::uint64_t max_time) {
    return oracle::equivalent({a}, {b}, {"p", "q"}, len, max_time);
}

}  // namespace

TEST_CASE("Boolean dual") {
    CHECK(run("dual", "p & q") == "p | q");
    CHECK(run("dual", "F[1..3) p") == "G[1..3) p");
    CHECK(run("dual", "X[2] p | #true") == "wX[2] p & #false");
    CHECK(run("dual", "p S q") == "p T q");
    CHECK(run("dual", "wY p") == "Y p");
    CHECK_THROWS_AS(run("dual", "p -> q"), PreconditionError);
    CHECK_THROWS_AS(run("dual", "~p"), PreconditionError);
}

TEST_CASE("time swap") {
    CHECK(run("swap", "p U[2..4) q") == "p S[2..4) q");
    CHECK(run("swap", "X[1..2) p") == "Y[1] p");
    CHECK(run("swap", "p U q") == "p S q");
    CHECK(run("swap", "G p -> wY q") == "H p -> wX q");
    CHECK(run("swap", "#final") == "#init");
}

TEST_CASE("negation pushing") {
    CHECK(run("demorgan", "~(p U[1..3) q)") == "~p R[1..3) ~q");
    CHECK(run("demorgan", "~(p T q)") == "~p S ~q");
    CHECK(run("demorgan", "p & q") == "p & q");
    CHECK(run("demorgan", "~(p R (~(q S r)))") == "~p U ~~q S ~~r");
}

TEST_CASE("range splitting") {
    CHECK(run("split:5", "p U[2..8) q") == "p U[2..5) q | p U[5..8) q");
    CHECK(run("split:5", "F[0..10) p") == "F[0..5) p | F[5..10) p");
    CHECK(run("split:2", "p R[1..4) q") == "p R[1..2) q & p R[2..4) q");
    CHECK(run("split:7", "p T[3..w) q") == "p T[3..7) q & p T[7..w) q");
    CHECK_THROWS_AS(run("split:8", "p U[2..8) q"), PreconditionError);
    CHECK_THROWS_AS(run("split:1", "p U[2..8) q"), PreconditionError);
    CHECK_THROWS_AS(run("split:1", "p & q"), PreconditionError);
    CHECK_THROWS_AS(run("split:x", "p U q"), PreconditionError);
    CHECK(strict_equiv(parse_formula("F[0..10) p"), parse_formula("F[0..5) p | F[5..10) p"), 3, 10));
}

TEST_CASE("next unfolding") {
    const std::string ours = run("unf", "p U[2..4) q");
    CHECK(ours == "p & (X[1](p & (X[1](q | (p & X[1] q)) | X[2] q)) | X[2](q | (p & X[1] q)) | X[3] q)");
    CHECK(run("unf", "p U[0..0] q") == "q");
    CHECK(run("unf", "X[0..0] p") == "#false");
    CHECK(run("unf", "wY[0..0] p") == "#true");
    CHECK(run("unf", "p U[3..2) q") == "#false");
    CHECK(run("unf", "p R[3..2) q") == "#true");
    CHECK(run("unf", "X p") == "X p");
    CHECK_THROWS_AS(run("unf", "p U[1..w) q"), PreconditionError);

    const Formula f = parse_formula("p U[2..4) q");
    CHECK(strict_equiv(f, parse_formula(ours), 4, 8));
}

TEST_CASE("short expansion of p U[2..4) q drops a conjunct") {
    // The second X[1] step must still require p at the intermediate state.
    const Formula f = parse_formula("p U[2..4) q");
    const Formula short_form =
        parse_formula("p & (X[1](X[1](q | (p & X[1] q)) | X[2] q) | X[2](q | (p & X[1] q)) | X[3] q)");
    const auto m = make_total_trace(Alphabet({"p", "q"}), {{"p"}, {}, {"q"}}, {0, 1, 2});
    CHECK_FALSE(mht_sat(m, 0, f));
    CHECK(mht_sat(m, 0, short_form));
    CHECK_FALSE(mht_sat(m, 0, unfold_next(f)));
}

TEST_CASE("unfolding output is shared") {
    const Formula f = parse_formula("p U[0..12) q");
    const Formula u = unfold_next(f);
    CHECK_FALSE(has_binary_temporal(u));
    // The tree size grows exponentially while the number of distinct nodes stays small.
    CHECK(u.size() > 1000);
}

TEST_CASE("one-step elimination") {
    CHECK(run("onestep", "X[3] p") == "G[1..3) #false & F[3..4) p");
    CHECK(run("onestep", "Y[3..2) p") == "#false");
    CHECK(run("onestep", "X[0..3) p") == "F[1..2) p | (G[1..2) #false & F[2..3) p)");
    CHECK(run("onestep", "X[2..5) p") ==
          "(G[1..2) #false & F[2..3) p) | (G[1..3) #false & F[3..4) p) | (G[1..4) #false & F[4..5) p)");
    CHECK(run("onestep", "X p") == "X p");
    CHECK(run("onestep", "Y[1..w) p") == "Y[1..w) p");
    CHECK(run("onestep", "X[3..w) p") == "G[1..3) #false & X p");
}

TEST_CASE("single-eventually one-step forms over wide intervals are too weak") {
    // Times 0,2,3 with p at state 2 only: F[2..5) reaches a state that is
    // not the successor.
    const auto m = make_total_trace(Alphabet({"p"}), {{}, {}, {"p"}}, {0, 2, 3});
    CHECK_FALSE(mht_sat(m, 0, parse_formula("X[2..5) p")));
    CHECK(mht_sat(m, 0, parse_formula("G[1..2) #false & F[2..5) p")));
    CHECK_FALSE(mht_sat(m, 0, one_step_eliminate(parse_formula("X[2..5) p"))));

    const auto m2 = make_total_trace(Alphabet({"p"}), {{}, {}, {"p"}}, {0, 1, 2});
    CHECK_FALSE(mht_sat(m2, 0, parse_formula("X[0..3) p")));
    CHECK(mht_sat(m2, 0, parse_formula("G[1..1) #false & F[1..3) p")));
}

TEST_CASE("unary normal form") {
    CHECK(run("unary", "p U[2..9) q") == "F[2..9) q & G[0..2) (p U (p & X q))");
    CHECK(run("unary", "p U[0..9) q") == "F[0..9) q & p U q");
    CHECK(run("unary", "p R[2..9) q") == "G[2..9) q | F[0..2) (p R (p | wX q))");
    CHECK(run("unary", "F[2..9) q") == "F[2..9) q");
    CHECK(in_unary_nf(parse_formula("F[2..9) q & p U q")));
    CHECK_FALSE(in_unary_nf(parse_formula("p U[1..3) q")));
}

TEST_CASE("strict passes refuse non-strict mode") {
    const RewriteOptions loose{.strict = false};
    for (const char* pass : {"unf", "unary", "onestep", "split:2"})
        CHECK_THROWS_AS(run(pass, "p U[1..3) q", loose), PreconditionError);
    CHECK(run("swap", "p U q", loose) == "p S q");
    CHECK_THROWS_AS(run("nope", "p"), PreconditionError);
}

TEST_CASE("rewrite soundness") {
    require_ok(testing::zero_interval_suite(1000));
    require_ok(testing::point_unfold_suite(1000));
    require_ok(testing::initial_segment_unfold_suite(1000));
    require_ok(testing::next_unfold_suite(1000));
    require_ok(testing::range_split_suite(1000));
    require_ok(testing::one_step_suite(1000));
    require_ok(testing::unary_nf_suite(1000));
    require_ok(testing::unfold_nested_suite(1000));
    require_ok(testing::demorgan_pass_suite(1000));
}

TEST_CASE("duality laws") {
    require_ok(testing::distributivity_suite(200));
    require_ok(testing::de_morgan_suite(500));
    require_ok(testing::interval_inclusion_suite(500));
    require_ok(testing::dual_involution_suite(10000));
    require_ok(testing::swap_involution_suite(10000));
    require_ok(testing::boolean_duality_suite(100));
}

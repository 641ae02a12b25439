#include <gtest/gtest.h>

#include <numbers>
#include <sstream>

#include "macroq/grover.hpp"
#include "macroq/vcm.hpp"

using namespace macroq;

namespace {

double emax(const PureState& s, long long, StepLabel) { return compute_vcm(s).e_max; }

}  // namespace

TEST(GroverInstance, IterationCounts) {
  EXPECT_EQ(build_instance(8, {19}).iterations, 13);
  EXPECT_EQ(build_instance(14, {5}).iterations, 101);
  for (int L = 3; L <= 20; ++L) {
    const auto inst = build_instance(L, {1});
    const int approx = static_cast<int>(std::ceil(std::numbers::pi / 4 * std::sqrt(std::ldexp(1.0, L))));
    EXPECT_LE(std::abs(inst.iterations - approx), 1) << "L=" << L;
  }
  const auto inst = build_instance(8, {19});
  EXPECT_NEAR(std::cos(inst.theta / 2), std::sqrt(255.0 / 256.0), 1e-15);
  EXPECT_EQ(inst.total_steps(), 8 + 18 * 13);
}

TEST(GroverInstance, Validation) {
  EXPECT_THROW(build_instance(4, {}), std::invalid_argument);
  EXPECT_THROW(build_instance(4, {1, 1}), std::invalid_argument);
  EXPECT_THROW(build_instance(4, {16}), std::out_of_range);
  EXPECT_THROW(build_instance(4, {1, 2, 3, 4}), std::domain_error);
  EXPECT_NO_THROW(build_instance(4, {1, 2, 3}));
  EXPECT_THROW(build_instance(0, {0}), std::domain_error);
  EXPECT_THROW(random_instance(4, 4, 1), std::domain_error);
}

TEST(GroverInstance, SolutionsAreSorted) {
  EXPECT_EQ(build_instance(6, {9, 3}).solutions, (std::vector<BasisIndex>{3, 9}));
}

TEST(GroverInstance, RandomInstancesAreSeeded) {
  const auto a = random_instance(12, 5, 42);
  const auto b = random_instance(12, 5, 42);
  const auto c = random_instance(12, 5, 43);
  EXPECT_EQ(a.solutions, b.solutions);
  EXPECT_NE(a.solutions, c.solutions);
  EXPECT_EQ(a.solutions.size(), 5u);
}

TEST(ClosedForm, MatchesTheGatePath) {
  for (const auto& inst : {build_instance(8, {19}), build_instance(7, {0, 100})}) {
    PureState s(inst.num_qubits);
    hadamard_transform(s);
    for (int k = 0; k <= inst.iterations; ++k) {
      const PureState c = closed_form_state(inst, k);
      // Exact amplitudes, no global phase.
      for (std::size_t x = 0; x < s.dim(); ++x) EXPECT_NEAR(std::abs(s[x] - c[x]), 0.0, 1e-12);
      if (k < inst.iterations) grover_iteration(s, inst);
    }
  }
}

TEST(ClosedForm, StepOutsideScheduleThrows) {
  const auto inst = build_instance(6, {1});
  EXPECT_THROW(closed_form_state(inst, -1), std::out_of_range);
  EXPECT_THROW(closed_form_state(inst, inst.iterations + 1), std::out_of_range);
}

TEST(ClosedForm, FinalStateFindsTheSolution) {
  const auto inst = build_instance(10, {700});
  EXPECT_GT(std::norm(run_schedule(inst)[700]), 0.99);
}

TEST(GroverIteration, IsReflectionAboutUniformTimesOracle) {
  const auto inst = build_instance(5, {6, 17});
  PureState s(5);
  hadamard_transform(s);
  apply_oracle(s, inst.solutions);  // arbitrary non-uniform input
  PureState expected = s;
  apply_oracle(expected, inst.solutions);
  cplx mean = 0.0;
  for (auto a : expected.amplitudes()) mean += a;
  mean /= 32.0;
  for (auto& a : expected.amplitudes()) a = 2.0 * mean - a;
  grover_iteration(s, inst);
  for (std::size_t x = 0; x < 32; ++x) EXPECT_NEAR(std::abs(s[x] - expected[x]), 0.0, 1e-14);
}

TEST(KStar, CeilingOfFraction) {
  EXPECT_EQ(k_star(13, 2), 7);
  EXPECT_EQ(k_star(12, 3), 4);
  EXPECT_EQ(k_star(13, 1), 13);
  EXPECT_THROW(k_star(13, 0.5), std::domain_error);
  EXPECT_THROW(k_star(-1, 2), std::domain_error);
}

TEST(Trace, ScheduleShapeAndPlateau) {
  const auto inst = build_instance(8, {19});
  const auto trace = run_with_trace(inst, emax);
  ASSERT_TRUE(trace.valid);
  ASSERT_EQ(trace.records.size(), 243u);
  EXPECT_EQ(trace.records[0].label, StepLabel::Init);
  for (int i = 0; i <= 8; ++i) EXPECT_NEAR(trace.records[i].e_max, 2.0, 1e-9);
  EXPECT_EQ(trace.records[9].label, StepLabel::Oracle);
  EXPECT_NEAR(trace.records[9].e_max, 2.0435512984992004, 1e-10);
  EXPECT_EQ(trace.records[18].label, StepLabel::Phase);
  EXPECT_NEAR(trace.records[18].e_max, 2.0559283365464447, 1e-10);
  // Hadamard sub-steps are local unitaries and leave e_max unchanged.
  for (std::size_t i = 1; i < trace.records.size(); ++i) {
    if (trace.records[i].label == StepLabel::Hadamard) {
      EXPECT_NEAR(trace.records[i].e_max, trace.records[i - 1].e_max, 1e-9) << "step " << i;
    }
  }
  EXPECT_EQ(trace.records.back().step, 242);
}

TEST(Trace, ThrowingProbeKeepsPartialRecords) {
  const auto inst = build_instance(4, {3});
  const auto trace = run_with_trace(inst, [](const PureState&, long long step, StepLabel) {
    if (step == 6) throw std::runtime_error("boom");
    return 1.0;
  });
  EXPECT_FALSE(trace.valid);
  EXPECT_EQ(trace.records.size(), 6u);
  EXPECT_NE(trace.error.find("boom"), std::string::npos);
}

TEST(Trace, CsvLayout) {
  const auto inst = build_instance(3, {5});
  const auto trace = run_with_trace(inst, [](const PureState&, long long, StepLabel) { return 2.0; });
  std::ostringstream os;
  write_trace_csv(os, trace);
  const std::string text = os.str();
  EXPECT_EQ(text.rfind("# L=3\n# solutions=5\n# R=2\n# T_Q=19\nstep,label,e_max\n0,INIT,2\n1,HT,2\n", 0),
            0u);
}

TEST(Solutions, FormatAndParse) {
  EXPECT_EQ(format_solutions({2, 1023}), "2;1023");
  EXPECT_EQ(parse_solutions("2,1023"), (std::vector<BasisIndex>{2, 1023}));
  EXPECT_EQ(parse_solutions("7;8"), (std::vector<BasisIndex>{7, 8}));
  EXPECT_THROW(parse_solutions(""), std::invalid_argument);
  EXPECT_THROW(parse_solutions("1,,2"), std::invalid_argument);
  EXPECT_THROW(parse_solutions("-1"), std::invalid_argument);
  EXPECT_THROW(parse_solutions("3x"), std::invalid_argument);
}

TEST(TwoSolutions, ProfileOneReferenceValue) {
  const auto inst = build_instance(10, {2, 1023});
  EXPECT_EQ(inst.iterations, 18);
  const int k = k_star(inst.iterations, 2);
  EXPECT_EQ(k, 9);
  EXPECT_NEAR(compute_vcm(closed_form_state(inst, k)).e_max, 5.478255038001965, 1e-10);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corpus.hpp"
#include "hopflab/error.hpp"
#include "hopflab/tensor.hpp"
#include "hopflab/twist.hpp"

using namespace hopflab;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ValidationError;
}

// (J⊗1)(Δ⊗id)(J) == (1⊗J)(id⊗Δ)(J), contracted here directly.
bool cocycle_holds(const HopfAlgebra& H, const TensorElement& J) {
  const Field& F = H.field();
  const TensorElement one = as_tensor(H.one());
  const TensorElement lhs = multiply(H, tensor_product(F, J, one), comultiply_leg(H, J, 0));
  const TensorElement rhs = multiply(H, tensor_product(F, one, J), comultiply_leg(H, J, 1));
  return lhs == rhs;
}

struct Case {
  const char* algebra;
  const char* twist;
};
const Case kCases[] = {
    {"k4dual_gf5.hopf", "k4_bichar.twist"},
    {"c3c3dual_gf7.hopf", "c3c3_bichar.twist"},
    {"d4_gf5.hopf", "d4_klein.twist"},
};

}  // namespace

TEST_CASE("trivial twist") {
  for (const HopfAlgebra& H : {group_algebra(cyclic_group(3), Field::prime(7)),
                               group_algebra(symmetric_group3(), Field::prime(7)),
                               drinfeld_double(cyclic_group(2), Field::prime(5))}) {
    const TensorElement J = tensor_one(H, 2);
    const Twist t = twist_validate(H, J);
    CHECK(t.Q == H.one());
    CHECK(t.Q_inv == H.one());
    CHECK(twist_hopf(H, t) == H);
    const IntegralData id = integral_data(H);
    CHECK(twisted_u_check(H, t, id).all_passed());
    CHECK(gauge_invariance_check(H, t, -4, 4, 1).all_passed());
  }
}

TEST_CASE("bundled twists") {
  for (const auto& c : kCases) {
    INFO(c.twist);
    const HopfAlgebra H = testing_corpus::load(c.algebra);
    const TwistFile f = parse_twist(read_file(testing_corpus::path(c.twist)), H);
    CHECK(cocycle_holds(H, f.J));
    const Twist t = twist_validate(H, f.J, f.J_inv);
    CHECK(multiply(H, t.J, t.J_inv) == tensor_one(H, 2));
    CHECK(H.multiply(t.Q, t.Q_inv) == H.one());
    const HopfAlgebra HJ = twist_hopf(H, t);
    CHECK(verify_axioms(HJ).all_passed());
    // H^J keeps the algebra structure
    CHECK(HJ.mult_tensor() == H.mult_tensor());
    const IntegralData id = integral_data(H);
    CHECK(twisted_u_check(H, t, id).all_passed());
    const Report g = gauge_invariance_check(H, t, -4, 4, 1);
    CHECK(g.all_passed());
    CHECK(g.passed("gauge.indicator_multiset"));
    CHECK(g.passed("gauge.dimension_multiset"));
  }
  // on kD4 the twist changes the coalgebra
  const HopfAlgebra D4 = testing_corpus::load("d4_gf5.hopf");
  const Twist t = twist_validate(D4, parse_twist(read_file(testing_corpus::path("d4_klein.twist")), D4).J);
  CHECK_FALSE(twist_hopf(D4, t) == D4);
}

TEST_CASE("invalid twists") {
  const HopfAlgebra H = testing_corpus::load("k4dual_gf5.hopf");
  const Field& F = H.field();
  const TensorElement J = parse_twist(read_file(testing_corpus::path("k4_bichar.twist")), H).J;

  TensorElement bent = J;
  bent.coeffs[1 * 4 + 2] = F.from_int(2);
  CHECK_FALSE(cocycle_holds(H, bent));
  CHECK(code_of([&] { twist_validate(H, bent); }) == ErrorCode::CocycleFails);
  try {
    twist_validate(H, bent);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).size() > std::string("CocycleFails: ").size());
  }

  CHECK(code_of([&] { twist_validate(H, scale(F, J, F.from_int(2))); }) == ErrorCode::NormalizationFails);
  CHECK(code_of([&] { twist_validate(H, TensorElement(2, 4)); }) == ErrorCode::NotInvertible);
  // a supplied inverse that is wrong
  CHECK(code_of([&] { twist_validate(H, J, scale(F, J, F.from_int(2))); }) == ErrorCode::NotInvertible);
}

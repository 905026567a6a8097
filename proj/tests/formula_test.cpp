#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "eccad/formula.hpp"
#include "oracles.hpp"

using namespace eccad;

namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};

Polynomial P(const std::string& s) { return parse_polynomial(s, kXYZ); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Formula random_formula(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, 3), rel(0, 5);
  int k = depth == 0 ? 0 : pick(rng);
  if (k == 0) {
    Polynomial p;
    do p = oracle::random_poly(rng, 3, 2, 3, 0.3);
    while (p.is_zero());
    return Formula::atom(Atom::make(p, static_cast<Rel>(rel(rng))));
  }
  if (k == 1) return Formula::negation(random_formula(rng, depth - 1));
  std::vector<Formula> kids{random_formula(rng, depth - 1), random_formula(rng, depth - 1)};
  return k == 2 ? Formula::conj(std::move(kids)) : Formula::disj(std::move(kids));
}

}  // namespace

TEST(ParseQff, Examples) {
  Formula f = parse_qff("x - y + z^2 = 0 /\\ x^2 - 1 >= 0", kXYZ);
  ASSERT_EQ(f.kind(), Formula::Kind::And);
  ASSERT_EQ(f.kids().size(), 2u);
  EXPECT_EQ(f.kids()[0].atom().poly, P("x-y+z^2"));
  EXPECT_EQ(f.kids()[0].atom().rel, Rel::Eq);
  EXPECT_EQ(f.kids()[1].atom().poly, P("x^2-1"));
  EXPECT_EQ(f.kids()[1].atom().rel, Rel::Ge);

  Formula g = parse_qff("~(x > 0) \\/ y = 0", kXYZ);
  ASSERT_EQ(g.kind(), Formula::Kind::Or);
  ASSERT_EQ(g.kids()[0].kind(), Formula::Kind::Not);
  EXPECT_EQ(g.kids()[0].kids()[0].atom().poly, P("x"));
  EXPECT_EQ(g.kids()[0].kids()[0].atom().rel, Rel::Gt);
  EXPECT_EQ(g.kids()[1].atom().poly, P("y"));
}

TEST(ParseQff, NormalizesSides) {
  Formula f = parse_qff("x < y", kXYZ);
  // x - y < 0 canonicalizes with positive leading coefficient on y: y - x > 0.
  EXPECT_EQ(f.atom().poly, P("y-x"));
  EXPECT_EQ(f.atom().rel, Rel::Gt);
  Formula g = parse_qff("(x+1)*y >= 2*(x+1)*y - 1", kXYZ);
  EXPECT_EQ(g.atom().poly, P("x*y+y-1"));
  EXPECT_EQ(g.atom().rel, Rel::Le);
}

TEST(ParseQff, Errors) {
  EXPECT_THROW(parse_qff("x + w = 0", kXYZ), ParseError);
  EXPECT_THROW(parse_qff("x - x = 0", kXYZ), ParseError);
  EXPECT_THROW(parse_qff("x = 0 /\\", kXYZ), ParseError);
  try {
    parse_problem("vars: x < y\nformula: x + = 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 14);
  }
}

TEST(ParseProblem, Example2File) {
  Problem p = parse_problem(read_file(ECCAD_DATA_DIR "/two_surfaces.qff"));
  EXPECT_EQ(p.vars, kXYZ);
  auto cs = p.formula.conjuncts();
  EXPECT_EQ(cs.size(), 3u);
  PolySet polys = extract_polynomials(p.formula);
  EXPECT_EQ(polys, PolySet({P("x+y^2+z"), P("x-y^2+z"), P("x^2+y^2+z^2-1")}));
}

TEST(ParseProblem, FiveVariableFile) {
  Problem p = parse_problem(read_file(ECCAD_DATA_DIR "/five_var.qff"));
  EXPECT_EQ(p.vars.size(), 5u);
  EXPECT_EQ(extract_polynomials(p.formula).size(), 6u);
}

TEST(ExtractPolynomials, Single) {
  EXPECT_EQ(extract_polynomials(parse_qff("x > 0", kXYZ)), PolySet({P("x")}));
}

TEST(EvaluateTruth, Example2) {
  Problem p = parse_problem(read_file(ECCAD_DATA_DIR "/two_surfaces.qff"));
  EXPECT_TRUE(evaluate_truth(p.formula, SamplePoint::from_rationals({-1, 0, 1})));
  EXPECT_FALSE(evaluate_truth(p.formula, SamplePoint::from_rationals({0, 0, 0})));
  // x = sqrt(2)/2, y = 0, z = -x
  auto rx = isolate_roots_over(to_rpoly(P("2*x^2-1"), -1).poly, SamplePoint(), 0);
  SamplePoint s = SamplePoint().extended((*rx)[1]).extended(std::make_shared<SampleNode>(1, mpq_class(0)));
  auto rz = isolate_roots_over(to_rpoly(P("x+y^2+z"), -1).poly, s, 2);
  ASSERT_EQ(rz->size(), 1u);
  EXPECT_TRUE(evaluate_truth(p.formula, s.extended((*rz)[0])));
}

TEST(FormulaProperty, RoundTripAndBooleanLaws) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int t = 0; t < 200; ++t) {
    Formula f = random_formula(rng, 3);
    std::string text = to_string(f, kXYZ);
    Formula g = parse_qff(text, kXYZ);
    EXPECT_EQ(to_string(g, kXYZ), text);
    EXPECT_EQ(g, f) << text;

    Formula h = random_formula(rng, 2);
    std::vector<mpq_class> pt{mpq_class(c(rng), 2), mpq_class(c(rng)), mpq_class(c(rng), 3)};
    for (auto& q : pt) q.canonicalize();
    SamplePoint sp = SamplePoint::from_rationals(pt);
    bool a = evaluate_truth(f, sp), b = evaluate_truth(h, sp);
    EXPECT_EQ(evaluate_truth(Formula::negation(Formula::negation(f)), sp), a);
    EXPECT_EQ(evaluate_truth(Formula::negation(Formula::conj({f, h})), sp),
              evaluate_truth(Formula::disj({Formula::negation(f), Formula::negation(h)}), sp));
    EXPECT_EQ(evaluate_truth(Formula::conj({f, h}), pt), a && b);
  }
}

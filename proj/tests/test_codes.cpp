#include <set>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "stabgeo/code.hpp"

using stabgeo::BitVec;
using stabgeo::GF2Matrix;
using stabgeo::StabilizerCode;
using stabgeo::SympVector;

namespace {

// Cycle the last n-1 positions one step, fixing position 0.
SympVector shift_tail(const SympVector& v) {
  size_t n = v.qubits();
  SympVector out = SympVector::zero(n);
  auto move = [n](const BitVec& src, BitVec& dst) {
    if (src.get(0)) dst.set(0, true);
    for (size_t i = 1; i < n; ++i)
      if (src.get(i)) dst.set(1 + (i % (n - 1)), true);
  };
  move(v.a, out.a);
  move(v.b, out.b);
  return out;
}

}  // namespace

TEST_CASE("builtin codes validate strictly with the expected dimensions",
          "[codes]") {
  struct Expect {
    stabgeo::Builtin which;
    size_t n, dim, encoded;
  };
  for (auto [which, n, dim, encoded] :
       {Expect{stabgeo::Builtin::five_qubit, 5, 4, 1},
        Expect{stabgeo::Builtin::eight_qubit, 8, 5, 3},
        Expect{stabgeo::Builtin::ten_qubit, 10, 6, 4}}) {
    StabilizerCode code = stabgeo::builtin(which);
    CAPTURE(stabgeo::builtin_name(which));
    CHECK(code.n() == n);
    CHECK(code.k_bar() == dim);
    CHECK(code.encoded_qubits() == encoded);
    CHECK(code.dual_dim() == 2 * n - dim);
    auto report = code.validate(true);
    CHECK(report.valid());
    CHECK(report.orthogonal);
    CHECK(report.independent);
    CHECK(report.totally_singular);
  }
  CHECK(stabgeo::builtin_from_name("five_qubit") ==
        stabgeo::Builtin::five_qubit);
  CHECK_THROWS_AS(stabgeo::builtin_from_name("nope"), std::invalid_argument);
}

TEST_CASE("the five-qubit subspace is cyclic and has the published closure",
          "[codes]") {
  StabilizerCode code = stabgeo::builtin(stabgeo::Builtin::five_qubit);
  for (size_t i = 0; i < 4; ++i)
    CHECK(code.generator(i).to_string() == fixtures::kFiveQubitRows[i]);
  // the fifth cyclic shift depends on the other four
  SympVector fifth = SympVector::parse(fixtures::kFiveQubitFifthShift);
  CHECK(code.generator(3).cyclic_shift() == fifth);
  CHECK(code.in_stabilizer(fifth));
  // the whole subspace is shift-invariant
  for (const SympVector& g : code.generators())
    CHECK(code.in_stabilizer(g.cyclic_shift()));
  // the orthogonal subspace adds exactly the two uniform vectors
  SympVector all_x = SympVector::parse(fixtures::kFiveQubitDualExtraX);
  SympVector all_z = SympVector::parse(fixtures::kFiveQubitDualExtraZ);
  CHECK(code.dual_dim() == 6);
  CHECK(code.in_dual(all_x));
  CHECK(code.in_dual(all_z));
  CHECK_FALSE(code.in_stabilizer(all_x));
  CHECK_FALSE(code.in_stabilizer(all_z));
  stabgeo::Echelon closure(code.stabilizer_matrix());
  closure.add(all_x.to_row());
  closure.add(all_z.to_row());
  CHECK(closure.dim() == 6);
  for (const BitVec& row : code.dual_basis().rows())
    CHECK(closure.contains(row));
  // a known weight-3 member of the difference set
  SympVector w3 = SympVector::parse(fixtures::kFiveQubitWeight3Dual);
  CHECK(code.in_dual(w3));
  CHECK_FALSE(code.in_stabilizer(w3));
  CHECK(stabgeo::symplectic_weight(w3) == 3);
}

TEST_CASE("the eight-qubit subspace is cyclic on the last seven positions",
          "[codes]") {
  StabilizerCode code = stabgeo::builtin(stabgeo::Builtin::eight_qubit);
  for (size_t i = 0; i < code.generator_count(); ++i)
    CHECK(code.generator(i).to_string() == fixtures::kEightQubitRows[i]);
  CHECK(shift_tail(code.generator(0)) == code.generator(1));
  CHECK(shift_tail(code.generator(1)) == code.generator(2));
  for (const SympVector& g : code.generators())
    CHECK(code.in_stabilizer(shift_tail(g)));
}

TEST_CASE("code files round-trip character for character", "[codes]") {
  StabilizerCode five = stabgeo::builtin(stabgeo::Builtin::five_qubit);
  std::string text = five.to_text();
  CHECK(text ==
        "n=5\n"
        "11000|00101\n"
        "01100|10010\n"
        "00110|01001\n"
        "00011|10100\n");
  StabilizerCode back = StabilizerCode::from_text(text);
  CHECK(back.n() == 5);
  REQUIRE(back.generator_count() == 4);
  for (size_t i = 0; i < 4; ++i)
    CHECK(back.generator(i) == five.generator(i));
  CHECK(back.to_text() == text);
  // negative signs survive the trip
  StabilizerCode signed_code(2, {SympVector::parse("10|01")}, {-1});
  CHECK(signed_code.to_text() == "n=2\n-10|01\n");
  StabilizerCode signed_back = StabilizerCode::from_text(signed_code.to_text());
  CHECK(signed_back.sign(0) == -1);
  // comments, blanks, and a missing header are accepted
  StabilizerCode relaxed = StabilizerCode::from_text(
      "# a comment\n\n11000|00101  # trailing\n01100|10010\n");
  CHECK(relaxed.n() == 5);
  CHECK(relaxed.generator_count() == 2);
  // a header alone defines a code with no generators
  StabilizerCode empty = StabilizerCode::from_text("n=3\n");
  CHECK(empty.n() == 3);
  CHECK(empty.generator_count() == 0);
  CHECK(empty.encoded_qubits() == 3);
  CHECK(empty.dual_dim() == 6);
}

TEST_CASE("malformed code files report the offending line", "[codes]") {
  using Catch::Matchers::ContainsSubstring;
  CHECK_THROWS_WITH(StabilizerCode::from_text("n=5\nn=5\n"),
                    ContainsSubstring("line 2"));
  CHECK_THROWS_WITH(StabilizerCode::from_text("n=5\n110|001\n"),
                    ContainsSubstring("line 2"));
  CHECK_THROWS_WITH(StabilizerCode::from_text("11|01\n110|011\n"),
                    ContainsSubstring("line 2"));
  CHECK_THROWS_WITH(StabilizerCode::from_text("# only a comment\n1x|01\n"),
                    ContainsSubstring("line 2"));
  CHECK_THROWS_WITH(StabilizerCode::from_text("110011\n"),
                    ContainsSubstring("line 1"));
  CHECK_THROWS_WITH(StabilizerCode::from_text("10|01\nn=2\n"),
                    ContainsSubstring("unexpected header"));
  CHECK_THROWS_AS(StabilizerCode::from_text("# nothing\n"),
                  std::invalid_argument);
}

TEST_CASE("construction is permissive but validation reports each failure",
          "[codes]") {
  // anticommuting pair: form failure and (by polarization) a singular pair
  StabilizerCode bad(2, {SympVector::parse("10|00"), SympVector::parse("00|10")});
  auto r = bad.validate(true);
  CHECK_FALSE(r.valid());
  CHECK_FALSE(r.orthogonal);
  REQUIRE(r.form_failures.size() == 1);
  CHECK(r.form_failures[0] == std::pair<size_t, size_t>{0, 1});
  REQUIRE(r.singular_failures.size() == 1);
  CHECK(r.singular_failures[0] == std::pair<size_t, size_t>{0, 1});
  // a single non-singular generator passes only the non-strict check
  StabilizerCode xz(1, {SympVector::parse("1|1")});
  CHECK(xz.validate(false).valid());
  auto strict = xz.validate(true);
  CHECK_FALSE(strict.valid());
  REQUIRE(strict.singular_failures.size() == 1);
  CHECK(strict.singular_failures[0] == std::pair<size_t, size_t>{0, 0});
  // dependent generators
  StabilizerCode dep(2, {SympVector::parse("10|00"), SympVector::parse("10|00")});
  auto rd = dep.validate(false);
  CHECK_FALSE(rd.independent);
  CHECK(rd.rank == 1);
  CHECK(rd.generator_count == 2);
  // constructor-level errors
  CHECK_THROWS_AS(StabilizerCode(3, {SympVector::parse("10|00")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(StabilizerCode(2, {SympVector::parse("10|00")}, {+1, -1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(StabilizerCode(2, {SympVector::parse("10|00")}, {2}),
                  std::invalid_argument);
}

TEST_CASE("quadratic-residue construction matches the Legendre symbol",
          "[codes]") {
  StabilizerCode qr5 = stabgeo::quadratic_residue_code(5);
  CHECK(qr5.generator(0).to_string() == fixtures::kQr5FirstRow);
  CHECK(qr5.n() == 5);
  CHECK(qr5.generator_count() == 4);
  CHECK(qr5.k_bar() == 4);
  CHECK(qr5.encoded_qubits() == 1);
  CHECK(qr5.validate(true).valid());

  StabilizerCode qr13 = stabgeo::quadratic_residue_code(13);
  CHECK(qr13.generator(0).to_string() == fixtures::kQr13FirstRow);
  CHECK(qr13.k_bar() == 12);
  CHECK(qr13.encoded_qubits() == 1);
  CHECK(qr13.validate(true).valid());
  for (uint64_t p : {uint64_t{5}, uint64_t{13}}) {
    StabilizerCode code = stabgeo::quadratic_residue_code(p);
    std::set<size_t> squares = oracles::squares_mod(p);
    const SympVector& first = code.generator(0);
    CHECK_FALSE(first.a.get(0));
    CHECK_FALSE(first.b.get(0));
    for (size_t j = 1; j < p; ++j) {
      CHECK(first.a.get(j) == (squares.count(j) > 0));
      CHECK(first.b.get(j) == (squares.count(j) == 0));
    }
    // successive generators are cyclic shifts and the span is shift-closed
    for (size_t i = 1; i < code.generator_count(); ++i)
      CHECK(code.generator(i) == code.generator(i - 1).cyclic_shift());
    CHECK(code.in_stabilizer(code.generator(p - 2).cyclic_shift()));
  }
  CHECK_THROWS_AS(stabgeo::quadratic_residue_code(7), std::invalid_argument);
  CHECK_THROWS_AS(stabgeo::quadratic_residue_code(9), std::invalid_argument);
  CHECK_THROWS_AS(stabgeo::quadratic_residue_code(4), std::invalid_argument);
}

TEST_CASE("dual-containing classical codes produce X/Z generator pairs",
          "[codes]") {
  GF2Matrix hamming = GF2Matrix::from_strings(fixtures::kHammingRows);
  StabilizerCode code = stabgeo::css_from_classical(hamming, 7);
  CHECK(code.n() == 7);
  CHECK(code.generator_count() == 6);
  CHECK(code.k_bar() == 6);
  CHECK(code.encoded_qubits() == 1);  // 2 dim(C) - n
  CHECK(code.validate(true).valid());
  // first half pure X, second half pure Z, mirrored supports
  for (size_t i = 0; i < 3; ++i) {
    CHECK_FALSE(code.generator(i).b.any());
    CHECK_FALSE(code.generator(3 + i).a.any());
    CHECK(code.generator(i).a == code.generator(3 + i).b);
    // the support rows lie in the classical code
    CHECK(stabgeo::in_span(code.generator(i).a, hamming));
  }
}

TEST_CASE("non-dual-containing classical codes are rejected with a witness",
          "[codes]") {
  GF2Matrix repetition = GF2Matrix::from_strings({"111"});
  try {
    stabgeo::css_from_classical(repetition, 3);
    FAIL("expected rejection");
  } catch (const stabgeo::css_error& e) {
    CHECK(e.witness().to_string() == "110");
    // the witness is a parity check of C that is not a codeword
    CHECK_FALSE(BitVec::dot(e.witness(), BitVec::from_string("111")));
    CHECK_FALSE(stabgeo::in_span(e.witness(), repetition));
    CHECK(std::string(e.what()).find("110") != std::string::npos);
  }
  CHECK_THROWS_AS(stabgeo::css_from_classical(repetition, 4),
                  std::invalid_argument);
}

TEST_CASE("the full space as classical code leaves nothing to stabilize",
          "[codes]") {
  StabilizerCode code = stabgeo::css_from_classical(GF2Matrix::identity(2), 2);
  CHECK(code.n() == 2);
  CHECK(code.generator_count() == 0);
  CHECK(code.encoded_qubits() == 2);
}

TEST_CASE("classical matrix files parse with line diagnostics", "[codes]") {
  using Catch::Matchers::ContainsSubstring;
  GF2Matrix m = stabgeo::parse_classical_matrix(
      "# generator\n1000110\n0100101 # checks\n\n0010011\n0001111\n");
  CHECK(m.row_count() == 4);
  CHECK(m.col_count() == 7);
  CHECK(m.row(0).to_string() == "1000110");
  CHECK_THROWS_WITH(stabgeo::parse_classical_matrix("101\n10\n"),
                    ContainsSubstring("line 2"));
  CHECK_THROWS_WITH(stabgeo::parse_classical_matrix("1x1\n"),
                    ContainsSubstring("line 1"));
  CHECK_THROWS_AS(stabgeo::parse_classical_matrix("# empty\n"),
                  std::invalid_argument);
}

TEST_CASE("pairwise correctability follows the subspace geometry", "[codes]") {
  StabilizerCode five = stabgeo::builtin(stabgeo::Builtin::five_qubit);
  auto ok = stabgeo::correctable(five, stabgeo::weight_t_error_set(5, 1));
  CHECK(ok.correctable);
  auto bad = stabgeo::correctable(five, stabgeo::weight_t_error_set(5, 2));
  CHECK_FALSE(bad.correctable);
  // the reported pair is a genuine violation: the difference lies in the
  // orthogonal subspace but outside the stabilizer subspace
  SympVector diff = bad.e1.vec() ^ bad.e2.vec();
  CHECK(five.in_dual(diff));
  CHECK_FALSE(five.in_stabilizer(diff));
  CHECK(bad.first <= bad.second);
  // single-error sets are fine on every distance-3 builtin
  for (auto which : {stabgeo::Builtin::eight_qubit, stabgeo::Builtin::ten_qubit}) {
    StabilizerCode code = stabgeo::builtin(which);
    CHECK(stabgeo::correctable(code,
                               stabgeo::weight_t_error_set(code.n(), 1))
              .correctable);
  }
  // the identity alone is always correctable
  CHECK(stabgeo::correctable(five, {stabgeo::PauliElement::identity(5)})
            .correctable);
  CHECK_THROWS_AS(
      stabgeo::correctable(five, {stabgeo::PauliElement::identity(4)}),
      std::invalid_argument);
}

#include "riccisol/soliton.hpp"

namespace riccisol {

namespace {

Rational need(const std::map<std::string, Rational>& params, const std::string& name) {
  auto it = params.find(name);
  if (it == params.end()) throw std::invalid_argument("fixture system needs parameter '" + name + "'");
  return it->second;
}

// row helper: coefficients for (x1..x4, sigma) plus the constant term of
// "... + const = 0"
struct RowBuilder {
  SolitonSystem sys;
  std::vector<QVector> rows;
  QVector consts;
  void add(std::initializer_list<Rational> xcoeffs, const Rational& sigma, const Rational& c) {
    QVector r(xcoeffs);
    r.push_back(sigma);
    rows.push_back(std::move(r));
    consts.push_back(c);
  }
  SolitonSystem done(size_t n) {
    sys.n = n;
    sys.provenance = Provenance::Fixture;
    sys.coeffs = QMatrix(rows.size(), n + 1);
    for (size_t i = 0; i < rows.size(); ++i) sys.coeffs.set_row(i, rows[i]);
    sys.constants = consts;
    return std::move(sys);
  }
};

const Rational Z(0);

// Nine displayed conditions from the nonexistence proof for the neutral
// case (ii) family. The row with no unknowns is the one the certificate
// must touch.
SolitonSystem thm33_system(const Rational& a, const Rational& e) {
  const Rational a2 = a * a, e2 = e * e;
  RowBuilder b;
  b.add({Z, Z, Z, Z}, Rational(1), -4 * a2);                  // -4a^2 + s = 0
  b.add({Z, Z, Z, Z}, Rational(-1), -4 * e2 * a2);            // -4e^2a^2 - s = 0
  b.add({Z, Z, Z, Z}, Z, -2 * e2 * a2 - 2 * a2);              // -2e^2a^2 - 2a^2 = 0
  b.add({a, Z, Z, -2 * a}, Z, Z);                             // x1 a - 2 x4 a = 0
  b.add({2 * a, Z, Z, a}, Z, Z);                              // 2 x1 a + x4 a = 0
  b.add({-e * a, Z, Z, -2 * e * a}, Z, Z);                    // -x1 e a - 2 x4 e a = 0
  b.add({2 * e * a, Z, Z, -e * a}, Z, Z);                     // 2 x1 e a - x4 e a = 0
  b.add({Z, 2 * e * a, -2 * a, Z}, Rational(1), -2 * e2 * a2 + 2 * a2);
  b.add({Z, 2 * e * a, -2 * a, Z}, Rational(-1), 2 * e2 * a2 - 2 * a2);
  return b.done(4);
}

// Ten displayed conditions from the [(22)] nonexistence proof.
SolitonSystem thm41_system(const Rational& k) {
  const Rational k2 = k * k;
  const Rational A = (1 + 8 * k2) / (4 * k);  // (1+8k^2)/4k
  const Rational B = (4 * k2 - 1) / (4 * k);  // (-1+4k^2)/4k
  const Rational C = (1 + 4 * k2) / (4 * k);  // (1+4k^2)/4k
  const Rational D = (1 + 16 * k2) / (8 * k); // (1+16k^2)/8k
  const Rational i8 = Rational(1) / (8 * k);
  RowBuilder b;
  b.add({Z, i8, Z, C}, Z, Z);              // x2/8k + x4(1+4k^2)/4k = 0
  b.add({Z, B, Z, -D}, Z, Z);              // -x4(1+16k^2)/8k + x2(-1+4k^2)/4k = 0
  b.add({Z, C, Z, i8}, Z, Z);              // x4/8k + x2(1+4k^2)/4k = 0
  b.add({Z, -D, Z, B}, Z, Z);              // -x2(1+16k^2)/8k + x4(-1+4k^2)/4k = 0
  b.add({-2 * A, Z, Z, Z}, Rational(1), Rational(1));   // 1 + s - x1(1+8k^2)/2k = 0
  b.add({A, Z, A, Z}, Z, Rational(-1));                 // x1 A + x3 A = 1
  b.add({Z, Z, -2 * A, Z}, Rational(-1), Rational(1));  // -x3(1+8k^2)/2k + 1 - s = 0
  b.add({-2 * B, Z, 2 * C, Z}, Rational(-1), Rational(1));
  b.add({-2 * C, Z, 2 * B, Z}, Rational(1), Rational(1));
  b.add({2 * k, Z, 2 * k, Z}, Z, Rational(-1)); // x1(-1/8k + (1+16k^2)/8k) + x3(...) = 1
  return b.done(4);
}

// Conditions (the seven displayed ones) for the solvable [1,(12)] family.
SolitonSystem thm42_system(const Rational& k1, const Rational& k2, const Rational& k3) {
  const Rational E2 = (1 + 2 * k1 * k1) / k1; // (1+2k1^2)/k1
  RowBuilder b;
  b.add({Rational(-1) / (2 * k1), k2, -k2, Z}, Z, Z);
  b.add({Z, 1 / k1, -1 / k1, Z}, Rational(-1), Z);
  b.add({Z, -2 * k1, 2 * k1, Z}, Rational(1), Z);
  b.add({Z, -k3, k3, -k1}, Z, Z);
  b.add({-2 * k2, -E2, Z, -2 * k3}, Rational(1), Rational(1));
  b.add({-2 * k2, Z, -E2, -2 * k3}, Rational(-1), Rational(1));
  b.add({2 * k2, E2 / 2, E2 / 2, 2 * k3}, Z, Rational(-1));
  return b.done(4);
}

// The seven printed conditions for case 1.3^1:5 (mu = 0 branch). The
// fourth printed row is quadratic in the unknowns (x1 * sigma); it is kept
// as a substitution check rather than silently linearized.
SolitonSystem case1315_system(const Rational& a, const Rational& l, const Rational& bq, const Rational& c) {
  RowBuilder b;
  b.add({Z, Z, a, Z}, Z, Z);                                    // a x3 = 0
  b.add({-2 * a, Z, Z, Z}, 2 * c / l, Z);                       // -2 x1 a + 2 s c / l = 0
  b.add({Z, Z, Z, a}, a, Z);                                    // x4 a + s a = 0
  b.add({Z, Z, -a * (1 + l * l), -a * l}, Z, Z);                // -x3 a(1+l^2) - a l x4 = 0
  b.add({Z, Z, -a * l, -a}, -a, Z);                             // -a l x3 - a x4 - s a = 0
  b.add({-2 * a * (1 + l * l), 2 * a * l, Z, Z}, -bq, l * l / 2 + 2);
  SolitonSystem sys = b.done(4);
  SolitonSystem::QuadraticCheck q;                              // x1 s a - s c = 0
  q.coeff = a;
  q.a = 0;
  q.b = 4;
  q.linear = qvec_zero(5);
  q.linear[4] = -c;
  q.constant = Z;
  sys.quadratic_checks.push_back(std::move(q));
  return sys;
}

} // namespace

std::vector<std::string> fixture_system_ids() {
  return {"thm3.3-(ii)", "thm4.1-(22)", "thm4.2-[1,(12)]", "case-1.3.1:5"};
}

SolitonSystem load_fixture_system(const std::string& id, const std::map<std::string, Rational>& params) {
  if (id == "thm3.3-(ii)") return thm33_system(need(params, "alpha"), need(params, "eps"));
  if (id == "thm4.1-(22)") return thm41_system(need(params, "k1"));
  if (id == "thm4.2-[1,(12)]")
    return thm42_system(need(params, "k1"), need(params, "k2"), need(params, "k3"));
  if (id == "case-1.3.1:5")
    return case1315_system(need(params, "a"), need(params, "lambda"), need(params, "b"), need(params, "c"));
  throw unknown_id_error(id);
}

} // namespace riccisol

#include "qorbit_cli/verify.hpp"

#include <cmath>
#include <span>

#include <qorbit/classifier.hpp>
#include <qorbit/signature.hpp>

namespace qorbit::cli {

namespace {

using Q = QuarticForm<Rational>;
using B = BinaryForm<Rational>;

Q form(const B& b) { return Q::from_binary(b); }
B lin(const Rational& u) { return B::root_factor(u); }
const B kX = B::root_factor(Rational(0));
const B kY = B::infinity_factor();
const B kCircle = B::pair_factor(Rational(0), Rational(1));

std::string str(const Rational& x) { return to_string(x); }
std::string str(const SignatureTriple& s) { return to_string(s); }

struct Suite {
  const VerifyOptions& options;
  std::vector<CheckResult> results;

  Rational q(const Q& f) const { return options.polar(f, f); }

  void equal(const std::string& name, const Rational& computed, const Rational& expected) {
    results.push_back({name, computed == expected, str(computed), str(expected)});
  }
  void check(const std::string& name, bool ok, std::string computed, std::string expected) {
    results.push_back({name, ok, std::move(computed), std::move(expected)});
  }

  SignatureTriple gram_inertia(const std::vector<Q>& vectors) const {
    DenseMatrix<Rational> g(vectors.size(), vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      for (std::size_t j = 0; j < vectors.size(); ++j) g(i, j) = options.polar(vectors[i], vectors[j]);
    }
    return inertia(g);
  }

  // v is null and orthogonal to every tangent vector.
  void radical(const std::string& name, const Q& v, const std::array<Q, 3>& tangents) {
    bool ok = q(v) == 0;
    std::string computed = "q=" + str(q(v));
    for (const Q& t : tangents) {
      const Rational b = options.polar(v, t);
      ok = ok && b == 0;
      computed += " b=" + str(b);
    }
    check(name, ok, computed, "q=0 b=0 b=0 b=0");
  }
};

// Orbit dimension and signature table as stated for the canonical representatives.
struct Claim {
  Stratum stratum;
  int dim;
  SignatureTriple signature;
};
constexpr Claim kClaims[] = {
    {Stratum::EinQuadruple, 1, {0, 0, 1}},       {Stratum::EinTriple, 2, {0, 1, 1}},
    {Stratum::EinOpen, 3, {1, 2, 0}},            {Stratum::AdsGeneric, 3, {1, 2, 0}},
    {Stratum::HPairEqual, 2, {2, 0, 0}},         {Stratum::HTwoDoubleReal, 2, {1, 1, 0}},
    {Stratum::HPairDistinct, 3, {2, 1, 0}},      {Stratum::HFourReal, 3, {1, 2, 0}},
    {Stratum::HDoubleRealTwoSimple, 3, {1, 1, 1}}, {Stratum::HDoubleRealPair, 3, {1, 1, 1}},
    {Stratum::HTwoRealPair, 3, {1, 2, 0}},
};

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  std::vector<Rational> params = options.params;
  if (params.empty()) params = {Rational(1, 3), Rational(1, 2), Rational(2), Rational(5, 7)};
  Suite s{options, {}};
  const Rational one(1), zero(0);

  // Closed forms for q.
  for (const Rational& r : params) {
    const std::string at = " at r=" + str(r);
    s.equal("q(Y^2(aX^2+bXY+cY^2)) = a^2/6, (a,b,c)=(r,1,r+1)" + at,
            s.q(form(kY.pow(2) * B({r, one, r + 1}))), r * r / 6);
    s.equal("q(XY(X-Y)(X-rY)) = (r^2-r+1)/6" + at, s.q(form(kX * kY * lin(one) * lin(r))), (r * r - r + 1) / 6);
    s.equal("q((X^2+Y^2)(X^2+r^2Y^2)) = 2r^2+(1+r^2)^2/6" + at, s.q(form(kCircle * B::pair_factor(zero, r))),
            2 * r * r + (1 + r * r) * (1 + r * r) / 6);
  }
  for (const Rational& modulus : {Rational(1), Rational(2)}) {
    for (const Rational& cosine : {Rational(1, 2), Rational(3, 5), Rational(-4, 5), Rational(0)}) {
      const Q f = form(kX * kY * B({one, -2 * modulus * cosine, modulus * modulus}));
      s.equal("q(XY(X^2-2|z|cos(t)XY+|z|^2Y^2)) = 2|z|^2/3 (cos^2 t - 3/4) at |z|=" + str(modulus) +
                  ", cos t=" + str(cosine),
              s.q(f), 2 * modulus * modulus / 3 * (cosine * cosine - Rational(3, 4)));
    }
  }
  {
    // cos t = sqrt(3)/2 is irrational; the Einstein boundary is checked in floats.
    const double c = std::sqrt(3.0) / 2.0;
    const QuarticForm<double> f(0.0, 1.0, -2.0 * c, 1.0, 0.0);
    const double qv = q_value(f);
    s.check("q vanishes at cos t = sqrt(3)/2 (float, 1e-12)", std::abs(qv) <= 1e-12, std::to_string(qv), "0");
  }

  // Ambient signature.
  {
    std::vector<Q> basis;
    for (int k = 4; k >= 0; --k) basis.push_back(Q::monomial(k));
    const SignatureTriple sig = s.gram_inertia(basis);
    s.check("ambient signature of q on V", sig == SignatureTriple{2, 3, 0}, str(sig), "(2,3,0)");
  }

  // AdS leaves Y(X^2+Y^2)(X-rY).
  std::vector<Rational> ads{Rational(0), Rational(1, 2), Rational(1)};
  for (const Rational& r : params) ads.push_back(r);
  for (const Rational& r : ads) {
    const std::string at = " at r=" + str(r);
    const Q f = form(kY * kCircle * lin(r));
    s.equal("q(Y(X^2+Y^2)(X-rY)) = r^2/6 - 1/2" + at, s.q(f), r * r / 6 - Rational(1, 2));
    const Q ve = lie_act(generator<Rational>(SubgroupKind::EllipticE), f);
    s.equal("q(E-tangent at Y(X^2+Y^2)(X-rY)) = -2-2r^2" + at, s.q(ve), -2 - 2 * r * r);
    const OrbitSignature os = orbit_signature(f);
    const SignatureTriple want{1, 2, 0};
    s.check("orbit signature at Y(X^2+Y^2)(X-rY)" + at, os.dim == 3 && os.signature == want,
            "dim " + std::to_string(os.dim) + " " + str(os.signature), "dim 3 (1,2,0)");
  }

  // Orthogonal basis at Y(X^2+Y^2)(X-rY); the printed E-vector is the negative of the E-flow derivative.
  std::vector<Rational> ortho{Rational(2), Rational(3)};
  for (const Rational& r : params) {
    if (r * r > 3) ortho.push_back(r);
  }
  for (const Rational& r : ortho) {
    const Q f = form(kY * kCircle * lin(r));
    const auto t = orbit_tangent_basis(f);
    const Q vh = t[0], vp = t[1], ve = -t[2];
    const std::vector<Q> w{(7 * r + 3 * r * r * r) * vh + (6 - 2 * r * r) * vp + (5 + r * r) * ve, 4 * vp + ve, vh};
    bool orthogonal = true;
    std::string off;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        const Rational b = options.polar(w[i], w[j]);
        orthogonal = orthogonal && b == 0;
        off += (off.empty() ? "" : " ") + str(b);
      }
    }
    s.check("stated tangent combinations pairwise orthogonal at r=" + str(r), orthogonal, off, "0 0 0");
    const std::string signs = std::string(s.q(w[0]) < 0 ? "-" : "+") + (s.q(w[1]) < 0 ? "-" : "+") +
                              (s.q(w[2]) < 0 ? "-" : "+");
    s.check("stated tangent combinations have signs (-,+,+) at r=" + str(r), signs == "-++", signs, "-++");
  }

  // Einstein strata.
  {
    const Q f = form(kX * kY.pow(3));
    const auto t = orbit_tangent_basis(f);
    s.check("P-tangent at XY^3 is -Y^4", t[1] == -Q::monomial(0), to_string(t[1]), "-Y^4");
    const Q printed_ve(zero, zero, Rational(3), zero, one);
    s.equal("stated v_E = 3X^2Y^2+Y^4 orthogonal to v_P at XY^3", options.polar(t[1], printed_ve), zero);
    s.equal("E-tangent orthogonal to P-tangent at XY^3", options.polar(t[1], t[2]), zero);
    s.check("v_E + v_P spacelike at XY^3", s.q(t[1] + t[2]) > 0, str(s.q(t[1] + t[2])), "> 0");
    s.equal("H-tangent at Y^4 is q-null", s.q(orbit_tangent_basis(Q::monomial(0))[0]), zero);
  }

  // Degenerate radicals.
  {
    const auto t = orbit_tangent_basis(form(kX * kY.pow(2) * lin(one)));
    // Tangent vectors are compared up to the sign of each flow; with the fixed
    // orientation of H the radical direction is v_P - v_H = Y^4.
    s.radical("v_H + v_P (v_H up to sign) spans the radical at XY^2(X-Y)", t[1] - t[0], t);
  }
  {
    const auto t = orbit_tangent_basis(form(kY.pow(2) * kCircle));
    s.radical("v_H spans the radical at Y^2(X^2+Y^2)", t[0], t);
  }
  {
    const auto t = orbit_tangent_basis(form(kCircle.pow(2)));
    s.check("E-tangent vanishes at (X^2+Y^2)^2", t[2].is_zero(), to_string(t[2]), "0");
  }

  // Dimension and signature table.
  for (const Claim& claim : kClaims) {
    const OrbitSignature os = orbit_signature(representative(claim.stratum));
    s.check("orbit of " + std::string(to_string(claim.stratum)) + " at " + to_string(representative(claim.stratum)),
            os.dim == claim.dim && os.signature == claim.signature,
            "dim " + std::to_string(os.dim) + " " + str(os.signature),
            "dim " + std::to_string(claim.dim) + " " + str(claim.signature));
  }

  // Tangency: (X-uY)^3(X-u'Y) lies on the line through (X-uY)^4 and Y(X-uY)^3.
  for (const Rational& u : params) {
    for (const Rational& u2 : params) {
      if (u == u2) continue;
      const std::vector<Q> vs{form(lin(u).pow(4)), form(kY * lin(u).pow(3)), form(lin(u).pow(3) * lin(u2))};
      const std::size_t rank = span_rank(std::span<const Q>(vs));
      s.check("triple-root form on a tangent line of the quadruple-root curve, u=" + str(u) + " u'=" + str(u2),
              rank == 2, "rank " + std::to_string(rank), "rank 2");
    }
  }
  return s.results;
}

}  // namespace qorbit::cli

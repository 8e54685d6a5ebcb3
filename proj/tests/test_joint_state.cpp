#include <cmath>
#include <numbers>
#include <string>

#include <doctest.h>

#include "npath/errors.hpp"
#include "npath/joint_state.hpp"
#include "npath/scenarios.hpp"
#include "support.hpp"

using namespace npath;
using test::basis;
using test::orthonormal_basis;

namespace {

PathAmplitudes equal_amplitudes(int n) {
    return PathAmplitudes::normalized(Vector::Ones(n));
}

}  // namespace

TEST_SUITE("joint_state") {

TEST_CASE("PathAmplitudes accepts a normalized pair and exposes probabilities") {
    Vector c(2);
    c << 0.6, Complex(0.0, 0.8);
    const PathAmplitudes amps(c);
    CHECK(amps.size() == 2);
    CHECK(amps.probability(0) == 0.36);
    CHECK(amps.probability(1) == doctest::Approx(0.64).epsilon(1e-15));
}

TEST_CASE("PathAmplitudes rejects bad input naming the problem") {
    Vector unnormalized(2);
    unnormalized << 0.6, 0.1;
    CHECK_THROWS_AS(PathAmplitudes{unnormalized}, invariant_error);

    Vector single(1);
    single << 1.0;
    CHECK_THROWS_AS(PathAmplitudes{single}, invariant_error);

    Vector bad(2);
    bad << std::nan(""), 1.0;
    CHECK_THROWS_AS(PathAmplitudes{bad}, invariant_error);
}

TEST_CASE("PathAmplitudes::normalized rescales and rejects the zero vector") {
    const PathAmplitudes amps = PathAmplitudes::normalized(Vector::Ones(2));
    CHECK(std::abs(amps[0].real() - 1.0 / std::sqrt(2.0)) <= 1e-15);
    CHECK_THROWS_AS(PathAmplitudes::normalized(Vector::Zero(2)), invariant_error);
}

TEST_CASE("DetectorSet validates unit norms and a shared dimension") {
    CHECK_NOTHROW(DetectorSet(orthonormal_basis(3)));

    Vector long_vec(2);
    long_vec << 1.0, 1.0;
    CHECK_THROWS_AS(DetectorSet({basis(2, 0), long_vec}), invariant_error);
    CHECK_THROWS_AS(DetectorSet({basis(2, 0), basis(3, 0)}), invariant_error);
    CHECK_THROWS_AS(DetectorSet({basis(2, 0)}), invariant_error);
}

TEST_CASE("DetectorSet error messages name the offending vector") {
    Vector long_vec(2);
    long_vec << 1.0, 1.0;
    std::string message;
    try {
        DetectorSet({basis(2, 0), long_vec});
    } catch (const invariant_error& e) {
        message = e.what();
    }
    CHECK(message.find("norm") != std::string::npos);
    CHECK(message.find("2") != std::string::npos);
}

TEST_CASE("one-dimensional detector spaces are allowed") {
    const std::vector<Vector> d(2, Vector::Ones(1));
    CHECK_NOTHROW(DetectorSet{d});
}

TEST_CASE("PureJointState requires matching path counts") {
    CHECK_THROWS_AS(PureJointState(equal_amplitudes(3), DetectorSet(orthonormal_basis(2))),
                    invariant_error);
}

TEST_CASE("Ensemble validates weights and shared path count") {
    const PureJointState s2(equal_amplitudes(2), DetectorSet(orthonormal_basis(2)));
    const PureJointState s3(equal_amplitudes(3), DetectorSet(orthonormal_basis(3)));

    CHECK_NOTHROW(Ensemble({{0.5, s2}, {0.5, s2}}));
    CHECK_THROWS_AS(Ensemble({{0.5, s2}, {0.4, s2}}), invariant_error);
    CHECK_THROWS_AS(Ensemble({{1.2, s2}, {-0.2, s2}}), invariant_error);
    CHECK_THROWS_AS(Ensemble({{0.5, s2}, {0.5, s3}}), invariant_error);
    CHECK_THROWS_AS(Ensemble({}), invariant_error);
}

TEST_CASE("Ensemble components may use different detector dimensions") {
    const PureJointState narrow(equal_amplitudes(2), DetectorSet(orthonormal_basis(2)));
    const PureJointState wide(equal_amplitudes(2),
                              DetectorSet({basis(5, 0), basis(5, 3)}));
    const Ensemble e({{0.25, narrow}, {0.75, wide}});
    CHECK(e.paths() == 2);
    CHECK(e.size() == 2);
}

TEST_CASE("QuantonDensityMatrix rejects invalid density matrices") {
    Matrix bad_trace = Matrix::Identity(2, 2);
    CHECK_THROWS_AS(QuantonDensityMatrix{bad_trace}, invariant_error);

    Matrix indefinite = Matrix::Zero(2, 2);
    indefinite(0, 0) = 1.5;
    indefinite(1, 1) = -0.5;
    CHECK_THROWS_AS(QuantonDensityMatrix{indefinite}, invariant_error);
}

TEST_CASE("partial_trace with identical detectors returns the pure projector") {
    Vector c(3);
    c << 0.5, Complex(0.0, 0.5), std::sqrt(0.5);
    const std::vector<Vector> d(3, basis(2, 0));
    const QuantonDensityMatrix rho = partial_trace(PureJointState(PathAmplitudes(c), DetectorSet(d)));
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i == j) {
                continue;  // diagonal is |c_i|^2 by construction, checked below
            }
            CHECK(rho(i, j) == c[i] * std::conj(c[j]));
        }
    }
}

TEST_CASE("partial_trace with orthogonal detectors is exactly diagonal") {
    Vector c(3);
    c << 0.5, Complex(0.0, 0.5), std::sqrt(0.5);
    const QuantonDensityMatrix rho =
        partial_trace(PureJointState(PathAmplitudes(c), DetectorSet(orthonormal_basis(3))));
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i != j) {
                CHECK(rho(i, j) == Complex(0.0, 0.0));
            }
        }
    }
    CHECK(rho(0, 0) == Complex(0.25, 0.0));
}

TEST_CASE("partial_trace reproduces the first-family off-diagonals") {
    const double theta = std::numbers::pi / 6.0;
    const QuantonDensityMatrix rho = partial_trace(build(ScenarioSpec::figure1(theta)));
    // rho(0,1) = (1/3) sin(2 theta); the third detector stays orthogonal.
    CHECK(std::abs(rho(0, 1).real() - std::sin(2.0 * theta) / 3.0) <= 1e-15);
    CHECK(rho(0, 1).imag() == 0.0);
    CHECK(std::abs(rho(0, 2)) == 0.0);
    CHECK(std::abs(rho(1, 2)) == 0.0);
}

TEST_CASE("partial_trace diagonal equals |c_i|^2 exactly for random states") {
    GaussianSampler rng(21);
    for (int trial = 0; trial < 25; ++trial) {
        const PureJointState s = random_pure_state(2 + trial % 4, 1 + trial % 5, rng);
        const QuantonDensityMatrix rho = partial_trace(s);
        for (int i = 0; i < s.paths(); ++i) {
            CHECK(rho(i, i) == Complex(s.amplitudes().probability(i), 0.0));
        }
    }
}

TEST_CASE("partial_trace output is a valid density matrix for random states") {
    GaussianSampler rng(22);
    for (int trial = 0; trial < 25; ++trial) {
        const PureJointState s = random_pure_state(2 + trial % 4, 1 + trial % 6, rng);
        CHECK(is_hermitian_psd_trace1(partial_trace(s).matrix(), kDensityTol));
    }
}

TEST_CASE("|rho_ij| is invariant under compensated phase changes") {
    GaussianSampler rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 3;
        const PureJointState s = random_pure_state(n, 3, rng);
        const QuantonDensityMatrix rho = partial_trace(s);

        const int k = trial % n;
        const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const Complex u = std::polar(1.0, phase);
        Vector c = s.amplitudes().coeffs();
        c[k] *= std::conj(u);
        std::vector<Vector> d = s.detectors().states();
        d[static_cast<std::size_t>(k)] *= u;
        const QuantonDensityMatrix shifted =
            partial_trace(PureJointState(PathAmplitudes(c), DetectorSet::normalized(d)));

        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                CHECK(std::abs(std::abs(shifted(i, j)) - std::abs(rho(i, j))) <= 1e-12);
            }
        }
    }
}

TEST_CASE("reduce_ensemble of a single component equals partial_trace") {
    GaussianSampler rng(24);
    const PureJointState s = random_pure_state(3, 2, rng);
    const Ensemble e({{1.0, s}});
    CHECK((reduce_ensemble(e).matrix() - partial_trace(s).matrix()).cwiseAbs().maxCoeff() ==
          0.0);
}

TEST_CASE("mixing orthogonal-detector components stays diagonal") {
    Vector c(2);
    c << 0.6, 0.8;
    const PureJointState a(PathAmplitudes(c), DetectorSet(orthonormal_basis(2)));
    Vector c2(2);
    c2 << 0.8, -0.6;
    const PureJointState b(PathAmplitudes(c2), DetectorSet(orthonormal_basis(2)));
    const QuantonDensityMatrix rho = reduce_ensemble(Ensemble({{0.5, a}, {0.5, b}}));
    CHECK(rho(0, 1) == Complex(0.0, 0.0));
    CHECK(std::abs(rho(0, 0).real() - 0.5) <= 1e-15);
}

TEST_CASE("50/50 mix of the first family at t=0 and t=pi/4 averages the overlaps") {
    const PureJointState a = build(ScenarioSpec::figure1(0.0));
    const PureJointState b = build(ScenarioSpec::figure1(std::numbers::pi / 4.0));
    const QuantonDensityMatrix rho = reduce_ensemble(Ensemble({{0.5, a}, {0.5, b}}));
    // Component overlaps 0 and 1, amplitudes 1/3: averaged entry is 1/6.
    CHECK(std::abs(rho(0, 1) - Complex(1.0 / 6.0, 0.0)) <= 1e-15);
    CHECK(std::abs(rho(0, 2)) == 0.0);
}

}  // TEST_SUITE

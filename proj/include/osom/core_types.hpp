#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "osom/errors.hpp"

namespace osom {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

enum class ModelKind { Simple, Complex };
enum class ContextDistKind { UnitSphereUniform, ScaledHypercube, Custom };
enum class RadiusMode { Theoretical, Empirical };

// Algorithm-side model flag. Distinct from ModelKind on purpose: this is what
// the policy currently believes / plays, not what generates the data.
enum class Mode { Simple, Complex };

const char* to_string(ModelKind kind);
const char* to_string(ContextDistKind kind);
const char* to_string(RadiusMode mode);
const char* to_string(Mode mode);

// Distributional assumptions on the per-arm context vectors. rho_min lower
// bounds the covariance's smallest eigenvalue, rho_max is the sub-Gaussian
// parameter of one-dimensional projections. Both are treated as known inputs.
struct ContextDistSpec {
    ContextDistKind kind = ContextDistKind::UnitSphereUniform;
    double rho_min = 0.0; // 0 means "use the default 1/d"
    double rho_max = 0.0;

    // Fills the 1/d defaults and checks 0 < rho_min <= rho_max <= 1, rho_min <= 1/d.
    ContextDistSpec resolved(int d) const;
};

// The hidden generative model for one bandit instance.
class InstanceSpec {
  public:
    InstanceSpec(ModelKind model_kind, int K, int d, Vec biases, Vec theta_star,
                 double sigma, ContextDistSpec context_dist);

    ModelKind model_kind() const { return model_kind_; }
    int K() const { return K_; }
    int d() const { return d_; }
    const Vec& biases() const { return biases_; }
    const Vec& theta_star() const { return theta_star_; }
    double sigma() const { return sigma_; }
    const ContextDistSpec& context_dist() const { return context_dist_; }

  private:
    ModelKind model_kind_;
    int K_;
    int d_;
    Vec biases_;     // one bias per arm, each in [-1, 1]
    Vec theta_star_; // shared linear parameter, ||theta|| <= 1; zero for Simple
    double sigma_;   // noise scale > 0
    ContextDistSpec context_dist_;
};

// Throws Error{BiasOutOfRange | ThetaNormExceeded | SimpleModelNonzeroTheta |
// InvalidParam} when any invariant fails. Construction goes through this, so
// no invalid InstanceSpec is observable.
void validate_instance(ModelKind model_kind, int K, int d, const Vec& biases,
                       const Vec& theta_star, double sigma, const ContextDistSpec& dist);

// The K context vectors revealed at one round.
struct ContextSlate {
    long round = 0;
    std::vector<Vec> vectors;

    ContextSlate() = default;
    ContextSlate(long round, std::vector<Vec> vectors);
};

// Algorithm configuration shared by all policies.
struct AlgoConfig {
    double delta = 0.05;        // global failure probability in (0,1)
    long n = 300;               // horizon
    RadiusMode radius_mode = RadiusMode::Empirical;
    double maximizer_tol = 1e-9;

    // Per-round failure level; fixed once at configuration time.
    double delta_prime() const { return delta / static_cast<double>(n); }

    void validate(int K) const;
};

// One row of a simulation trace.
struct RoundLog {
    long round = 0;
    int arm = 0; // 0-based
    double reward = 0.0;
    Mode mode = Mode::Simple;      // policy's model flag at play time
    double optimistic_value = 0.0; // policy's optimistic estimate for the played round (0 during warm-up)
    double inst_regret = 0.0;
};

} // namespace osom

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace copasbias {

// One published study: mean-difference effect and its standard error.
struct AggregatedStudy {
    AggregatedStudy(double effect_in, double se_in);

    double effect;
    double se;

    double precision() const { return 1.0 / se; }
    double standardized() const { return effect / se; }
};

// Ordered collection of m >= 1 studies.
class MetaSample {
public:
    explicit MetaSample(std::vector<AggregatedStudy> studies);

    const std::vector<AggregatedStudy>& studies() const { return studies_; }
    std::size_t size() const { return studies_.size(); }
    const AggregatedStudy& operator[](std::size_t i) const { return studies_[i]; }

    double min_se() const;
    double max_se() const;

private:
    std::vector<AggregatedStudy> studies_;
};

struct ReFit {
    double theta_hat = 0.0;
    double tau2_hat = 0.0;
    double se_theta = 0.0;
    double log_lik = 0.0;
    bool converged = false;
};

// Marginal normal log-likelihood of the random-effects model,
// sum_i [ -log(tau2 + se_i^2)/2 - (d_i - theta)^2 / (2 (tau2 + se_i^2)) ].
// Additive -log(2*pi)/2 constants are omitted throughout the library.
double re_log_likelihood(double theta, double tau2, const MetaSample& sample);

// Inverse-variance fixed-effect estimate; used as an optimizer start.
double fixed_effect_estimate(const MetaSample& sample);

// DerSimonian-Laird moment estimate of tau^2, clamped at 0.
double dersimonian_laird_tau2(const MetaSample& sample);

// Maximum-likelihood random-effects fit. tau^2 is optimized on a
// log(tau2 + 1e-10) transform so the tau2 = 0 boundary is a flat region
// rather than a constraint. se_theta = [sum 1/(tau2_hat + se_i^2)]^{-1/2}.
ReFit fit_random_effects(const MetaSample& sample);

// CSV ingestion, header "study_id,effect,se". Rows with non-finite fields
// or se <= 0 are rejected with a line-numbered CsvError.
struct CsvDataset {
    std::vector<std::string> ids;
    std::vector<AggregatedStudy> studies;

    MetaSample sample() const { return MetaSample(studies); }
};

CsvDataset parse_meta_csv(std::istream& in, const std::string& source_name);
CsvDataset read_meta_csv(const std::filesystem::path& path);

}  // namespace copasbias

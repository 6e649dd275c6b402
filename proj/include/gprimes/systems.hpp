#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gprimes {

// One generalized prime. exact is the integer value when the prime is an
// integer that fits in uint64, otherwise 0.
struct GPrime {
    double value;
    double log_value;
    uint64_t exact;
};

enum class SystemKind {
    Classical,
    ExplicitList,
    Geometric,
    DoublyExponential,
    PowerUnion,
    RInverse,
};

struct GenerationLimits {
    uint64_t max_primes = 200'000'000;
    uint64_t max_sieve = 2'000'000'000;
};

// A generalized prime system: a nondecreasing multiset of reals > 1 together
// with a generator that can list all primes up to a bound. Instances share
// a grow-only cache, so copies are cheap and thread-safe to read.
class GPrimeSystem {
public:
    static GPrimeSystem classical();
    static GPrimeSystem explicit_list(std::vector<double> primes);
    static GPrimeSystem explicit_file(const std::string& path);
    static GPrimeSystem geometric(double p);
    static GPrimeSystem doubly_exponential();
    static GPrimeSystem power_union(double beta);
    static GPrimeSystem r_inverse();

    // Grammar: classical | geometric:p=<real> | doubly-exp | r-inverse |
    //          power-union:beta=<real> | explicit:file=<path>
    static GPrimeSystem parse_spec(const std::string& spec);
    std::string canonical_spec() const;

    SystemKind kind() const;
    // True when every prime is an integer, so semigroup arithmetic can run
    // in uint64 below the exact cutoff.
    bool exact_backing() const;
    bool finite() const;
    // Asymptotic density rho of the generalized integers when known
    // analytically: classical 1, power-union zeta(1/beta).
    std::optional<double> density() const;
    // Parameters for the kinds that have one.
    double geometric_ratio() const;
    double power_union_beta() const;

    std::vector<double> primes_up_to(double bound) const;
    std::vector<GPrime> prime_table(double bound) const;

    const GenerationLimits& limits() const;

private:
    struct Impl;
    explicit GPrimeSystem(std::shared_ptr<Impl> impl);
    std::shared_ptr<Impl> impl_;
};

}  // namespace gprimes

#include "gprimes/systems.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <stdexcept>

#include "gprimes/errors.hpp"
#include "gprimes/prime_profile.hpp"
#include "gprimes/zeta_scalar.hpp"

namespace gprimes {

namespace {

std::vector<uint64_t> sieve_primes(uint64_t limit) {
    std::vector<uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<uint8_t> comp(limit + 1, 0);
    for (uint64_t i = 2; i <= limit; ++i) {
        if (comp[i]) continue;
        primes.push_back(i);
        for (uint64_t j = i * i; j <= limit; j += i) comp[j] = 1;
    }
    return primes;
}

GPrime make_gprime(double value) {
    GPrime p;
    p.value = value;
    p.log_value = std::log(value);
    p.exact = 0;
    if (value == std::floor(value) && value < 9.2e18)
        p.exact = static_cast<uint64_t>(value);
    return p;
}

uint64_t checked_pow_u64(uint64_t base, uint64_t exp) {
    uint64_t r = 1;
    for (uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) return 0;
        r *= base;
    }
    return r;
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

}  // namespace

struct GPrimeSystem::Impl {
    SystemKind kind;
    std::string spec;
    GenerationLimits limits;

    double geo_p = 0.0;
    double pu_beta = 0.0;
    uint64_t pu_inv_beta_int = 0;  // integer 1/beta when exact, else 0
    std::vector<GPrime> explicit_primes;
    bool exact = false;
    bool finite = false;

    std::mutex lock;
    std::vector<GPrime> cache;
    double cached_bound = -1.0;
    std::unique_ptr<PrimeCountProfile> profile;
    double profile_bound = 0.0;

    void generate_up_to(double bound);
};

void GPrimeSystem::Impl::generate_up_to(double bound) {
    if (bound <= cached_bound) return;
    std::vector<GPrime> out;
    switch (kind) {
        case SystemKind::Classical: {
            if (bound > static_cast<double>(limits.max_sieve))
                throw BudgetExceededError("classical sieve bound exceeds limit",
                                          cache.size());
            auto primes = sieve_primes(static_cast<uint64_t>(std::floor(bound)));
            if (primes.size() > limits.max_primes)
                throw BudgetExceededError("classical prime budget exceeded",
                                          limits.max_primes);
            out.reserve(primes.size());
            for (uint64_t p : primes) out.push_back(make_gprime(static_cast<double>(p)));
            break;
        }
        case SystemKind::ExplicitList:
        case SystemKind::Geometric: {
            out = explicit_primes;  // finite, bound-independent
            break;
        }
        case SystemKind::DoublyExponential: {
            for (int n = 0;; ++n) {
                int e = 1 << n;
                if (e > 1023) break;
                double v = std::ldexp(1.0, e);
                if (v > bound) break;
                GPrime p;
                p.value = v;
                p.log_value = e * std::log(2.0);
                p.exact = e <= 63 ? (uint64_t{1} << e) : 0;
                out.push_back(p);
            }
            break;
        }
        case SystemKind::PowerUnion: {
            if (bound > static_cast<double>(limits.max_sieve))
                throw BudgetExceededError("power-union sieve bound exceeds limit",
                                          cache.size());
            double inv_beta = 1.0 / pu_beta;
            auto first = sieve_primes(static_cast<uint64_t>(std::floor(bound)));
            uint64_t second_bound =
                static_cast<uint64_t>(std::floor(std::pow(bound, pu_beta))) + 2;
            auto second = sieve_primes(second_bound);
            std::vector<GPrime> scaled;
            for (uint64_t p : second) {
                long double w = powl(static_cast<long double>(p),
                                     static_cast<long double>(inv_beta));
                GPrime g;
                g.value = static_cast<double>(w);
                if (g.value > bound) continue;
                g.log_value = inv_beta * std::log(static_cast<double>(p));
                g.exact = 0;
                if (pu_inv_beta_int > 0) {
                    g.exact = checked_pow_u64(p, pu_inv_beta_int);
                    if (g.exact != 0) g.value = static_cast<double>(g.exact);
                }
                scaled.push_back(g);
            }
            if (first.size() + scaled.size() > limits.max_primes)
                throw BudgetExceededError("power-union prime budget exceeded",
                                          limits.max_primes);
            out.reserve(first.size() + scaled.size());
            size_t i = 0, j = 0;
            while (i < first.size() || j < scaled.size()) {
                if (j >= scaled.size() ||
                    (i < first.size() &&
                     static_cast<double>(first[i]) <= scaled[j].value)) {
                    out.push_back(make_gprime(static_cast<double>(first[i])));
                    ++i;
                } else {
                    out.push_back(scaled[j]);
                    ++j;
                }
            }
            break;
        }
        case SystemKind::RInverse: {
            double need = std::max(bound, 100.0);
            if (!profile || profile_bound < need) {
                profile = std::make_unique<PrimeCountProfile>(std::max(need * 2.0, 200.0));
                profile_bound = need;
            }
            double count_f = std::floor(profile->value(bound) + 1e-12);
            if (count_f > static_cast<double>(limits.max_primes))
                throw BudgetExceededError("r-inverse prime budget exceeded",
                                          limits.max_primes);
            uint64_t count = static_cast<uint64_t>(count_f);
            out.reserve(count);
            for (uint64_t n = 1; n <= count; ++n) {
                double p = profile->inverse(static_cast<double>(n));
                out.push_back(make_gprime(p));
            }
            break;
        }
    }
    cache = std::move(out);
    cached_bound = bound;
}

GPrimeSystem::GPrimeSystem(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}

GPrimeSystem GPrimeSystem::classical() {
    auto impl = std::make_shared<Impl>();
    impl->kind = SystemKind::Classical;
    impl->spec = "classical";
    impl->exact = true;
    impl->finite = false;
    return GPrimeSystem(impl);
}

GPrimeSystem GPrimeSystem::explicit_list(std::vector<double> primes) {
    if (primes.empty())
        throw std::invalid_argument("explicit: need at least one prime");
    auto impl = std::make_shared<Impl>();
    impl->kind = SystemKind::ExplicitList;
    impl->spec = "explicit:list";
    impl->finite = true;
    impl->exact = true;
    double prev = 1.0;
    for (double v : primes) {
        if (!(v > 1.0))
            throw std::invalid_argument("explicit primes must be > 1");
        if (v < prev)
            throw std::invalid_argument("explicit primes must be nondecreasing");
        prev = v;
        GPrime p = make_gprime(v);
        if (p.exact == 0) impl->exact = false;
        impl->explicit_primes.push_back(p);
    }
    return GPrimeSystem(impl);
}

GPrimeSystem GPrimeSystem::explicit_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("explicit: cannot open " + path);
    std::vector<double> values;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        size_t b = line.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) continue;
        size_t e = line.find_last_not_of(" \t\r\n");
        std::string tok = line.substr(b, e - b + 1);
        char* end = nullptr;
        double v = std::strtod(tok.c_str(), &end);
        if (end == tok.c_str() || *end != '\0')
            throw std::invalid_argument("explicit: bad value at " + path + ":" +
                                        std::to_string(lineno));
        values.push_back(v);
    }
    GPrimeSystem sys = explicit_list(std::move(values));
    sys.impl_->spec = "explicit:file=" + path;
    return sys;
}

GPrimeSystem GPrimeSystem::geometric(double p) {
    if (!(p > 1.0)) throw std::invalid_argument("geometric: need p > 1");
    auto impl = std::make_shared<Impl>();
    impl->kind = SystemKind::Geometric;
    impl->spec = "geometric:p=" + format_real(p);
    impl->geo_p = p;
    impl->finite = true;
    GPrime g = make_gprime(p);
    impl->exact = g.exact != 0;
    impl->explicit_primes.push_back(g);
    return GPrimeSystem(impl);
}

GPrimeSystem GPrimeSystem::doubly_exponential() {
    auto impl = std::make_shared<Impl>();
    impl->kind = SystemKind::DoublyExponential;
    impl->spec = "doubly-exp";
    impl->exact = true;
    impl->finite = false;
    return GPrimeSystem(impl);
}

GPrimeSystem GPrimeSystem::power_union(double beta) {
    if (!(beta > 0.0 && beta < 1.0))
        throw std::invalid_argument("power-union: need 0 < beta < 1");
    auto impl = std::make_shared<Impl>();
    impl->kind = SystemKind::PowerUnion;
    impl->spec = "power-union:beta=" + format_real(beta);
    impl->pu_beta = beta;
    double q = 1.0 / beta;
    double qr = std::round(q);
    if (std::fabs(q - qr) <= 1e-12 * q && qr >= 2.0 && qr <= 64.0) {
        impl->pu_inv_beta_int = static_cast<uint64_t>(qr);
        impl->exact = true;
    }
    impl->finite = false;
    return GPrimeSystem(impl);
}

GPrimeSystem GPrimeSystem::r_inverse() {
    auto impl = std::make_shared<Impl>();
    impl->kind = SystemKind::RInverse;
    impl->spec = "r-inverse";
    impl->exact = false;
    impl->finite = false;
    return GPrimeSystem(impl);
}

GPrimeSystem GPrimeSystem::parse_spec(const std::string& spec) {
    if (spec == "classical") return classical();
    if (spec == "doubly-exp") return doubly_exponential();
    if (spec == "r-inverse") return r_inverse();
    auto parse_real = [&](const std::string& text) {
        char* end = nullptr;
        double v = std::strtod(text.c_str(), &end);
        if (end == text.c_str() || *end != '\0')
            throw std::invalid_argument("bad system spec: " + spec);
        return v;
    };
    const std::string geo = "geometric:p=";
    if (spec.rfind(geo, 0) == 0) return geometric(parse_real(spec.substr(geo.size())));
    const std::string pu = "power-union:beta=";
    if (spec.rfind(pu, 0) == 0) return power_union(parse_real(spec.substr(pu.size())));
    const std::string ex = "explicit:file=";
    if (spec.rfind(ex, 0) == 0) return explicit_file(spec.substr(ex.size()));
    throw std::invalid_argument("bad system spec: " + spec);
}

std::string GPrimeSystem::canonical_spec() const { return impl_->spec; }
SystemKind GPrimeSystem::kind() const { return impl_->kind; }
bool GPrimeSystem::exact_backing() const { return impl_->exact; }
bool GPrimeSystem::finite() const { return impl_->finite; }
double GPrimeSystem::geometric_ratio() const { return impl_->geo_p; }
double GPrimeSystem::power_union_beta() const { return impl_->pu_beta; }
const GenerationLimits& GPrimeSystem::limits() const { return impl_->limits; }

std::optional<double> GPrimeSystem::density() const {
    switch (impl_->kind) {
        case SystemKind::Classical:
            return 1.0;
        case SystemKind::PowerUnion:
            return riemann_zeta_real(1.0 / impl_->pu_beta);
        default:
            return std::nullopt;
    }
}

std::vector<GPrime> GPrimeSystem::prime_table(double bound) const {
    if (!(bound >= 0.0)) throw std::domain_error("prime_table: bad bound");
    std::lock_guard<std::mutex> g(impl_->lock);
    impl_->generate_up_to(bound);
    std::vector<GPrime> out;
    for (const GPrime& p : impl_->cache) {
        if (p.value > bound) break;
        out.push_back(p);
    }
    return out;
}

std::vector<double> GPrimeSystem::primes_up_to(double bound) const {
    std::vector<double> out;
    for (const GPrime& p : prime_table(bound)) out.push_back(p.value);
    return out;
}

}  // namespace gprimes

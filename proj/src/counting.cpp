#include "gprimes/counting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gprimes/oracle_classical.hpp"

namespace gprimes {

JumpTable::JumpTable(std::string system_spec, double x_max,
                     std::vector<JumpRecord> jumps, double rho,
                     bool rho_estimated)
    : system_spec_(std::move(system_spec)),
      x_max_(x_max),
      jumps_(std::move(jumps)),
      rho_(rho),
      rho_estimated_(rho_estimated) {}

uint64_t JumpTable::entry_count() const {
    return jumps_.empty() ? 0 : static_cast<uint64_t>(jumps_.back().n);
}

double JumpTable::query(CountFn which, double x) const {
    if (!(x >= 1.0 && x <= x_max_))
        throw std::out_of_range("JumpTable::query: x outside [1, x_max]");
    auto it = std::upper_bound(
        jumps_.begin(), jumps_.end(), x,
        [](double v, const JumpRecord& r) { return v < r.x; });
    if (it == jumps_.begin()) return 0.0;
    --it;
    switch (which) {
        case CountFn::N:
            return static_cast<double>(it->n);
        case CountFn::Psi:
            return it->psi;
        case CountFn::M:
            return static_cast<double>(it->m);
        case CountFn::Pi:
            return static_cast<double>(it->pi);
    }
    return 0.0;
}

JumpTable build_jump_table(const GPrimeSystem& system, double x_max,
                           EnumerationBudget budget) {
    if (!(x_max >= 1.0))
        throw std::domain_error("build_jump_table: need x_max >= 1");
    SemigroupEnumerator en(system, x_max, budget, false);
    const bool exact = en.exact_mode();
    const std::vector<GPrime> primes =
        system.prime_table(exact ? std::floor(x_max) : x_max * (1.0 + 2e-6));

    std::vector<JumpRecord> jumps;
    int64_t n = 0, m = 0, pi = 0;
    double psi = 0.0;
    JumpRecord cur{};
    bool have_cur = false;
    auto flush = [&]() {
        n += cur.d_n;
        psi += cur.d_psi;
        m += cur.d_m;
        pi += cur.d_pi;
        cur.n = n;
        cur.psi = psi;
        cur.m = m;
        cur.pi = pi;
        jumps.push_back(cur);
    };

    GIntegerEntry e;
    while (en.next(e)) {
        bool same_x = have_cur && (exact ? e.exact_value == cur.exact_x
                                         : e.log_value == cur.log_x);
        if (!same_x) {
            if (have_cur) flush();
            cur = JumpRecord{};
            cur.x = e.value();
            cur.log_x = e.log_value;
            cur.exact_x = e.exact_value;
            have_cur = true;
        }
        cur.d_n += 1;
        cur.d_m += e.mobius_sign;
        if (e.support_size() == 1) {
            const auto& [idx, exp] = e.exponents[0];
            cur.d_psi += primes[idx].log_value;
            if (exp == 1) cur.d_pi += 1;
        }
    }
    if (have_cur) flush();

    double rho;
    bool rho_estimated;
    if (auto d = system.density()) {
        rho = *d;
        rho_estimated = false;
    } else {
        rho = jumps.empty() ? 0.0 : static_cast<double>(n) / x_max;
        rho_estimated = true;
    }
    return JumpTable(system.canonical_spec(), x_max, std::move(jumps), rho,
                     rho_estimated);
}

double window_sup(const JumpTable& table, CountFn which, double c, double lo,
                  double hi) {
    if (!(lo >= 1.0 && hi >= lo && hi <= table.x_max()))
        throw std::domain_error("window_sup: need 1 <= lo <= hi <= x_max");
    auto prefix = [&](const JumpRecord& r) -> double {
        switch (which) {
            case CountFn::N: return static_cast<double>(r.n);
            case CountFn::Psi: return r.psi;
            case CountFn::M: return static_cast<double>(r.m);
            case CountFn::Pi: return static_cast<double>(r.pi);
        }
        return 0.0;
    };
    auto delta = [&](const JumpRecord& r) -> double {
        switch (which) {
            case CountFn::N: return static_cast<double>(r.d_n);
            case CountFn::Psi: return r.d_psi;
            case CountFn::M: return static_cast<double>(r.d_m);
            case CountFn::Pi: return static_cast<double>(r.d_pi);
        }
        return 0.0;
    };
    double best = std::fabs(table.query(which, lo) - c * lo);
    const auto& jumps = table.jumps();
    auto it = std::upper_bound(
        jumps.begin(), jumps.end(), lo,
        [](double v, const JumpRecord& r) { return v < r.x; });
    for (; it != jumps.end() && it->x <= hi; ++it) {
        double at = prefix(*it);
        double before = at - delta(*it);
        best = std::max(best, std::fabs(before - c * it->x));
        best = std::max(best, std::fabs(at - c * it->x));
    }
    best = std::max(best, std::fabs(table.query(which, hi) - c * hi));
    return best;
}

double window_sup_error(const JumpTable& table, ErrorKind kind, double rho,
                        double lo, double hi) {
    switch (kind) {
        case ErrorKind::PsiError:
            return window_sup(table, CountFn::Psi, 1.0, lo, hi);
        case ErrorKind::NError:
            return window_sup(table, CountFn::N, rho, lo, hi);
        case ErrorKind::MRaw:
            return window_sup(table, CountFn::M, 0.0, lo, hi);
    }
    return 0.0;
}

ErrorSeries dyadic_error_series(const JumpTable& table, ErrorKind kind,
                                double rho) {
    ErrorSeries series;
    series.kind = kind;
    series.rho = rho;
    if (table.x_max() < 2.0) return series;
    int n_windows = std::ilogb(table.x_max());
    for (int j = 0; j < n_windows; ++j) {
        double lo = std::ldexp(1.0, j);
        double hi = std::ldexp(1.0, j + 1);
        series.windows.push_back({j, window_sup_error(table, kind, rho, lo, hi)});
    }
    return series;
}

DyadicSupScan::DyadicSupScan(int n_windows, double c)
    : n_windows_(n_windows), c_(c),
      sups_(n_windows > 0 ? n_windows : 0, 0.0) {
    if (n_windows < 1)
        throw std::domain_error("DyadicSupScan: need n_windows >= 1");
}

void DyadicSupScan::add(int index, double v) {
    if (index >= 0 && index < n_windows_ && v > sups_[index]) sups_[index] = v;
}

void DyadicSupScan::feed(double x, double f_before, double f_after) {
    if (finished_) throw std::logic_error("DyadicSupScan: feed after finish");
    if (!(x >= 1.0 && x > last_x_) && !(x == 1.0 && last_x_ == 0.0))
        throw std::logic_error("DyadicSupScan: jumps must be increasing in x");
    while (next_boundary_ <= n_windows_) {
        double b = std::ldexp(1.0, next_boundary_);
        if (b >= x) break;
        double v = std::fabs(f_cur_ - c_ * b);
        add(next_boundary_ - 1, v);
        add(next_boundary_, v);
        ++next_boundary_;
    }
    if (next_boundary_ <= n_windows_ && x == std::ldexp(1.0, next_boundary_)) {
        // Jump exactly on a window boundary: the left limit belongs to the
        // window below, the right value to both.
        double vb = std::fabs(f_before - c_ * x);
        double va = std::fabs(f_after - c_ * x);
        add(next_boundary_ - 1, vb);
        add(next_boundary_ - 1, va);
        add(next_boundary_, va);
        ++next_boundary_;
    } else {
        int w = std::ilogb(x);
        if (x != 1.0) add(w, std::fabs(f_before - c_ * x));
        add(w, std::fabs(f_after - c_ * x));
    }
    f_cur_ = f_after;
    last_x_ = x;
}

std::vector<double> DyadicSupScan::finish() {
    while (next_boundary_ <= n_windows_) {
        double b = std::ldexp(1.0, next_boundary_);
        double v = std::fabs(f_cur_ - c_ * b);
        add(next_boundary_ - 1, v);
        add(next_boundary_, v);
        ++next_boundary_;
    }
    finished_ = true;
    return sups_;
}

ClassicalErrorScan classical_error_series(uint64_t x_max) {
    if (x_max < 2)
        throw std::domain_error("classical_error_series: need x_max >= 2");
    ClassicalSieve sv = classical_sieve(x_max);

    std::vector<std::pair<uint64_t, double>> prime_powers;
    for (uint64_t p : sv.primes) {
        double lp = std::log(static_cast<double>(p));
        for (uint64_t v = p; v <= x_max; v *= p) {
            prime_powers.emplace_back(v, lp);
            if (v > x_max / p) break;
        }
    }
    std::sort(prime_powers.begin(), prime_powers.end());

    int n_windows = std::ilogb(static_cast<double>(x_max));
    DyadicSupScan psi_scan(n_windows, 1.0);
    DyadicSupScan n_scan(n_windows, 1.0);
    DyadicSupScan m_scan(n_windows, 0.0);

    double psi = 0.0;
    int64_t m = 0;
    size_t ip = 0;
    for (uint64_t i = 1; i <= x_max; ++i) {
        double x = static_cast<double>(i);
        n_scan.feed(x, static_cast<double>(i - 1), static_cast<double>(i));
        if (sv.mu[i] != 0) {
            m_scan.feed(x, static_cast<double>(m),
                        static_cast<double>(m + sv.mu[i]));
            m += sv.mu[i];
        }
        if (ip < prime_powers.size() && prime_powers[ip].first == i) {
            psi_scan.feed(x, psi, psi + prime_powers[ip].second);
            psi += prime_powers[ip].second;
            ++ip;
        }
    }

    auto wrap = [](ErrorKind kind, double rho, std::vector<double> sups) {
        ErrorSeries s;
        s.kind = kind;
        s.rho = rho;
        for (size_t j = 0; j < sups.size(); ++j)
            s.windows.push_back({static_cast<int>(j), sups[j]});
        return s;
    };
    ClassicalErrorScan out;
    out.psi_error = wrap(ErrorKind::PsiError, 1.0, psi_scan.finish());
    out.n_error = wrap(ErrorKind::NError, 1.0, n_scan.finish());
    out.m_raw = wrap(ErrorKind::MRaw, 0.0, m_scan.finish());
    out.m_final = m;
    out.psi_final = psi;
    return out;
}

}  // namespace gprimes

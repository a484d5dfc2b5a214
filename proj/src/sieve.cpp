#include "resq/sieve.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "resq/conic.hpp"
#include "resq/ntheory.hpp"
#include "resq/parallel.hpp"

namespace resq {

LocalDensity local_density(unsigned long p)
{
    if (p == 2) {
        throw std::domain_error("local_density: p = 2 is vacuous (disc is 0 or 1 mod 4)");
    }
    if (p > 13) {
        throw std::domain_error("local_density: p > 13 exceeds the p^6 enumeration budget");
    }
    if (!is_prime(static_cast<unsigned long long>(p))) {
        throw std::invalid_argument("local_density: p must be prime");
    }

    const unsigned long p2 = p * p;
    std::vector<int> legendre(p, 0);
    for (unsigned long t = 1; t < p; ++t) {
        legendre[t * t % p] = 1;
    }
    for (unsigned long t = 1; t < p; ++t) {
        if (legendre[t] == 0) {
            legendre[t] = -1;
        }
    }

    unsigned long long s = 0;
    for (unsigned long c = 0; c < p2; ++c) {
        if (legendre[c % p] != -1) {
            continue;
        }
        for (unsigned long a = 0; a < p2; ++a) {
            const unsigned long ac4 = static_cast<unsigned long long>(4) * a % p2 * c % p2;
            for (unsigned long b = 0; b < p2; ++b) {
                const unsigned long d = (static_cast<unsigned long long>(b) * b % p2
                                         + p2 - ac4)
                                      % p2;
                if (d != 0 && d % p == 0) {
                    ++s;
                }
            }
        }
    }

    LocalDensity out;
    out.p = p;
    out.s_p = s;
    const unsigned long long p6 = static_cast<unsigned long long>(p2) * p2 * p2;
    out.omega_p = make_rat(Int(static_cast<unsigned long>(s)),
                           Int(static_cast<unsigned long>(p6)));
    out.omega_residues = p6 - s;
    return out;
}

namespace {

struct Box {
    long long b1, b2, b3;

    std::size_t total() const
    {
        return static_cast<std::size_t>(2 * b1 + 1) * static_cast<std::size_t>(2 * b2 + 1)
             * static_cast<std::size_t>(2 * b3 + 1);
    }

    // Index -> (a, b, c), a-major so slices are a-bands.
    QuadTriple at(std::size_t idx) const
    {
        const std::size_t nb = static_cast<std::size_t>(2 * b2 + 1);
        const std::size_t nc = static_cast<std::size_t>(2 * b3 + 1);
        const long long a = static_cast<long long>(idx / (nb * nc)) - b1;
        const long long b = static_cast<long long>(idx / nc % nb) - b2;
        const long long c = static_cast<long long>(idx % nc) - b3;
        return {a, b, c};
    }
};

} // namespace

unsigned long long count_T(long long b1, long long b2, long long b3, unsigned jobs)
{
    if (b1 < 1 || b2 < 1 || b3 < 1) {
        throw std::invalid_argument("count_T: bounds must be >= 1");
    }
    const Box box{b1, b2, b3};
    return count_sliced(box.total(), jobs, [&box](std::size_t begin, std::size_t end) {
        unsigned long long n = 0;
        for (std::size_t idx = begin; idx < end; ++idx) {
            if (omega_member(box.at(idx))) {
                ++n;
            }
        }
        return n;
    });
}

unsigned long long count_Nplus(long long bound, unsigned jobs)
{
    if (bound < 1) {
        throw std::invalid_argument("count_Nplus: bound must be >= 1");
    }
    const std::size_t side = static_cast<std::size_t>(2 * bound);
    const std::size_t total = side * side * side;
    auto coord = [bound](std::size_t t) {
        // 0..2B-1 -> -B..-1, 1..B
        const long long v = static_cast<long long>(t) - bound;
        return v < 0 ? v : v + 1;
    };
    return count_sliced(total, jobs, [&](std::size_t begin, std::size_t end) {
        unsigned long long n = 0;
        for (std::size_t idx = begin; idx < end; ++idx) {
            const QuadTriple q{coord(idx / (side * side)), coord(idx / side % side),
                               coord(idx % side)};
            if (has_rational_point(conic_C(q))) {
                ++n;
            }
        }
        return n;
    });
}

LSum L_sum(unsigned long qmax, const std::vector<LocalDensity>& densities)
{
    if (qmax < 1) {
        throw std::invalid_argument("L_sum: qmax must be >= 1");
    }

    auto omega_exact = [&](unsigned long p) -> const Rat* {
        for (const auto& d : densities) {
            if (d.p == p) {
                return &d.omega_p;
            }
        }
        return nullptr;
    };

    // Smallest prime factor sieve for factoring every q <= qmax.
    std::vector<uint32_t> spf(qmax + 1, 0);
    for (unsigned long i = 2; i <= qmax; ++i) {
        if (spf[i] != 0) {
            continue;
        }
        for (unsigned long j = i; j <= qmax; j += i) {
            if (spf[j] == 0) {
                spf[j] = static_cast<uint32_t>(i);
            }
        }
    }

    LSum out;
    out.value = Rat(1); // q = 1, empty product
    for (unsigned long q = 2; q <= qmax; ++q) {
        if (q % 2 == 0) {
            continue; // omega_2 = 0 kills every even q
        }
        unsigned long rest = q;
        bool squarefree = true;
        Rat term(1);
        while (rest > 1) {
            const unsigned long p = spf[rest];
            rest /= p;
            if (rest % p == 0) {
                squarefree = false;
                break;
            }
            if (const Rat* w = omega_exact(p)) {
                term *= *w / (Rat(1) - *w);
            } else {
                if (p <= 13) {
                    throw std::invalid_argument("L_sum: missing exact density for small p");
                }
                // Main-term substitute 1/(2p): omega/(1-omega) = 1/(2p-1).
                term *= make_rat(Int(1), Int(2 * static_cast<unsigned long>(p) - 1));
                out.used_fallback = true;
            }
        }
        if (squarefree) {
            out.value += term;
        }
    }
    return out;
}

std::vector<DensityRow> density_report(const std::vector<long long>& grid, unsigned jobs)
{
    for (std::size_t t = 1; t < grid.size(); ++t) {
        if (grid[t] <= grid[t - 1]) {
            throw std::invalid_argument("density_report: grid must be ascending");
        }
    }
    std::vector<DensityRow> rows;
    rows.reserve(grid.size());
    for (long long b : grid) {
        DensityRow row;
        row.b = b;
        row.t = count_T(b, b, b, jobs);
        row.nplus = count_Nplus(b, jobs);
        const double rootlog = std::sqrt(std::log(static_cast<double>(b)));
        const double side_t = static_cast<double>(2 * b + 1);
        const double side_n = static_cast<double>(2 * b);
        row.ratio_t = static_cast<double>(row.t) * rootlog / (side_t * side_t * side_t);
        row.ratio_n = static_cast<double>(row.nplus) * rootlog / (side_n * side_n * side_n);
        rows.push_back(row);
    }
    return rows;
}

std::string density_csv(const std::vector<DensityRow>& rows)
{
    std::string out = "B,T,Nplus,ratio_T,ratio_N\n";
    char buf[160];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof(buf), "%lld,%llu,%llu,%.6f,%.6f\n", r.b, r.t, r.nplus,
                      r.ratio_t, r.ratio_n);
        out += buf;
    }
    return out;
}

} // namespace resq

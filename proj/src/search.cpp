#include "algent/mahler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <stdexcept>
#include <thread>
#include <vector>

namespace algent {

namespace {

// Candidates are monic of degree d with a_0 != 0, listed degree first and
// then lexicographically by (a_0, ..., a_{d-1}).  Within one degree the rank
// is mixed-radix: a_0 over 2H values (-H..-1, 1..H), the rest over 2H+1.
struct DegreeBlock {
    int degree;
    std::uint64_t count;
    std::uint64_t first;  // global rank of this block's first candidate
};

IntPolynomial unrank(std::uint64_t r, int degree, int height) {
    const std::uint64_t radix = 2ull * height + 1;
    std::vector<Integer> c(static_cast<size_t>(degree) + 1);
    c[degree] = 1;
    for (int k = degree - 1; k >= 1; --k) {
        c[k] = static_cast<long>(r % radix) - height;
        r /= radix;
    }
    long a0 = static_cast<long>(r);  // 0..2H-1, skipping zero
    c[0] = a0 < height ? a0 - height : a0 - height + 1;
    return IntPolynomial{std::move(c)};
}

bool coeffs_less(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (size_t i = 0; i < a.c.size(); ++i) {
        int s = cmp(a.c[i], b.c[i]);
        if (s) return s < 0;
    }
    return false;
}

void scan_range(const std::vector<DegreeBlock>& blocks, std::uint64_t lo, std::uint64_t hi,
                int height, double threshold, std::vector<SearchFinding>& out) {
    const double log_floor = threshold + 1e-12;
    size_t bi = 0;
    while (bi < blocks.size() && blocks[bi].first + blocks[bi].count <= lo) ++bi;
    for (std::uint64_t g = lo; g < hi; ++g) {
        while (blocks[bi].first + blocks[bi].count <= g) ++bi;
        IntPolynomial f = unrank(g - blocks[bi].first, blocks[bi].degree, height);

        // every root product has modulus |a_0|, so the measure is at least log|a_0|
        double a0 = std::fabs(f.c[0].get_d());
        if (std::log(a0) >= log_floor) continue;

        MahlerResult m = mahler_measure(f, 1e-7);
        if (m.value_nats - m.error_bound <= 0.0) {
            // the certified interval touches zero, so this may be a product of
            // cyclotomics; anything else with a_0 != 0 has strictly positive measure
            if (is_cyclotomic(f)) continue;
        }
        if (m.value_nats + m.error_bound >= threshold) {
            if (m.value_nats - m.error_bound >= threshold) continue;
            m = mahler_measure(f, 1e-12);  // straddles the cutoff, tighten once
            if (m.value_nats + m.error_bound >= threshold) continue;
        }
        out.push_back(SearchFinding{std::move(f), std::move(m)});
    }
}

}  // namespace

std::vector<SearchFinding> search_small_measures(int max_degree, int height,
                                                 double threshold_nats, int workers) {
    std::vector<SearchFinding> found;
    if (max_degree < 1 || height < 1 || !(threshold_nats > 0.0)) return found;

    std::vector<DegreeBlock> blocks;
    std::uint64_t total = 0;
    for (int d = 1; d <= max_degree; ++d) {
        std::uint64_t n = 2ull * height;
        for (int k = 1; k < d; ++k) {
            std::uint64_t radix = 2ull * height + 1;
            if (n > (std::uint64_t(1) << 50) / radix)
                throw std::domain_error("search space too large to enumerate");
            n *= radix;
        }
        blocks.push_back({d, n, total});
        total += n;
    }

    unsigned w = workers > 0 ? static_cast<unsigned>(workers)
                             : std::max(1u, std::thread::hardware_concurrency());
    if (w > total) w = static_cast<unsigned>(total);

    if (w <= 1) {
        scan_range(blocks, 0, total, height, threshold_nats, found);
    } else {
        std::vector<std::vector<SearchFinding>> parts(w);
        std::vector<std::exception_ptr> errors(w);
        std::vector<std::thread> pool;
        pool.reserve(w);
        for (unsigned i = 0; i < w; ++i) {
            std::uint64_t lo = total * i / w;
            std::uint64_t hi = total * (i + 1) / w;
            pool.emplace_back([&, i, lo, hi] {
                try {
                    scan_range(blocks, lo, hi, height, threshold_nats, parts[i]);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        for (auto& p : parts)
            for (auto& f : p) found.push_back(std::move(f));
    }

    std::sort(found.begin(), found.end(), [](const SearchFinding& x, const SearchFinding& y) {
        if (x.measure.value_nats != y.measure.value_nats)
            return x.measure.value_nats < y.measure.value_nats;
        return coeffs_less(x.poly, y.poly);
    });
    return found;
}

}  // namespace algent

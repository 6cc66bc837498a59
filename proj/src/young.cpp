#include "hecke/young.hpp"

#include <gmpxx.h>

#include <numeric>
#include <sstream>

namespace hecke {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw Error("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1]) throw Error("partition parts must be nonincreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << " ";
        os << parts[i];
    }
    os << "]";
    return os.str();
}

namespace {
void enumerate(int remaining, int cap, int rows_left, std::vector<int>& acc,
               std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (rows_left == 0) return;
    for (int next = std::min(cap, remaining); next >= 1; --next) {
        acc.push_back(next);
        enumerate(remaining - next, next, rows_left - 1, acc, out);
        acc.pop_back();
    }
}
} // namespace

std::vector<Partition> partitions_of(int n, int max_rows) {
    if (n < 1) throw Error("partitions_of requires n >= 1");
    std::vector<Partition> out;
    std::vector<int> acc;
    enumerate(n, n, max_rows < 0 ? n : max_rows, acc, out);
    return out;
}

std::int64_t standard_tableaux_count(const Partition& shape) {
    int n = shape.size();
    if (n == 0) return 1;
    // hook of a cell: arm + leg + 1, legs read off the conjugate diagram
    std::vector<int> col_height(static_cast<size_t>(shape.part(1)), 0);
    for (int r = 1; r <= shape.rows(); ++r)
        for (int c = 1; c <= shape.part(r); ++c) ++col_height[static_cast<size_t>(c - 1)];
    mpz_class num, den(1);
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(n));
    for (int r = 1; r <= shape.rows(); ++r)
        for (int c = 1; c <= shape.part(r); ++c) {
            int arm = shape.part(r) - c;
            int leg = col_height[static_cast<size_t>(c - 1)] - r;
            den *= arm + leg + 1;
        }
    mpz_class count = num / den;
    if (count * den != num) throw Error("hook-length product does not divide n!");
    if (!count.fits_slong_p()) throw Error("tableau count exceeds int64 range");
    return static_cast<std::int64_t>(count.get_si());
}

std::int64_t predicted_image_dim(int n, int d) {
    if (n < 1 || d < 1) throw Error("predicted_image_dim requires n, d >= 1");
    std::int64_t total = 0;
    for (const auto& shape : partitions_of(n, d)) {
        std::int64_t f = standard_tableaux_count(shape);
        total += f * f;
    }
    return total;
}

bool is_km_diagram(const Partition& shape, int k, int m) {
    if (k > m - 1) throw Error("is_km_diagram requires k <= m - 1");
    if (shape.rows() > k) return false;
    return shape.part(1) - shape.part(k) <= m - k;
}

} // namespace hecke

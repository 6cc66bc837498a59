#include "hecke/linalg.hpp"

namespace hecke {

std::vector<Rational> symmetric_pivots(std::vector<std::vector<Rational>> m) {
    std::vector<Rational> pivots;
    const size_t n = m.size();
    for (size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) return pivots; // not positive definite past this point
        pivots.push_back(m[k][k]);
        for (size_t r = k + 1; r < n; ++r) {
            if (m[r][k] == 0) continue;
            Rational f = m[r][k] / m[k][k];
            for (size_t c = k; c < n; ++c) m[r][c] -= f * m[k][c];
        }
    }
    return pivots;
}

bool SparseRowReducer::add_row(std::map<std::uint64_t, QuadExt> row) {
    // drop explicit zeros defensively
    for (auto it = row.begin(); it != row.end();) {
        if (it->second.is_zero()) it = row.erase(it);
        else ++it;
    }
    while (!row.empty()) {
        std::uint64_t lead = row.begin()->first;
        auto piv = pivots_.find(lead);
        if (piv == pivots_.end()) {
            // normalize so the leading entry is 1
            QuadExt inv = row.begin()->second.inverse();
            for (auto& [c, v] : row) v = v * inv;
            pivots_.emplace(lead, std::move(row));
            return true;
        }
        QuadExt f = row.begin()->second;
        for (const auto& [c, v] : piv->second) {
            auto it = row.find(c);
            QuadExt nv = (it == row.end() ? QuadExt() : it->second) - f * v;
            if (nv.is_zero()) {
                if (it != row.end()) row.erase(it);
            } else if (it == row.end()) {
                row.emplace(c, std::move(nv));
            } else {
                it->second = std::move(nv);
            }
        }
    }
    return false;
}

} // namespace hecke

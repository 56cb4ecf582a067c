#include "levyvar/pvar/pvar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace levyvar::pvar {

namespace {

double seg_norm(const SeqView& seq, std::size_t i, std::size_t j) {
    const auto a = seq.point(i);
    const auto b = seq.point(j);
    double s = 0.0;
    for (std::size_t k = 0; k < seq.dim; ++k) s += (b[k] - a[k]) * (b[k] - a[k]);
    return std::sqrt(s);
}

void validate(const SeqView& seq, double p, const PVarCfg& cfg) {
    if (seq.dim == 0 || seq.values.size() % seq.dim != 0)
        throw std::invalid_argument("sequence shape mismatch");
    if (seq.size() == 0) throw std::invalid_argument("empty sequence");
    if (!(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument("p must be positive");
    if (seq.size() > cfg.max_points)
        throw std::invalid_argument("sequence exceeds the configured point cap");
}

PVarResult full_partition(const SeqView& seq, double p) {
    PVarResult r;
    r.p = p;
    r.method = "full";
    r.partition.resize(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) r.partition[i] = i;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        r.value += std::pow(seg_norm(seq, i, i + 1), p);
    return r;
}

// Direction-change points of a scalar sequence: first/last plus strict turning points,
// with flat runs collapsed. For p >= 1 an optimal partition exists inside this set.
std::vector<std::size_t> extrema_indices(std::span<const double> v) {
    std::vector<std::size_t> idx;
    const std::size_t n = v.size();
    idx.push_back(0);
    int last_sign = 0;
    std::size_t last_kept = 0;
    for (std::size_t i = 1; i < n; ++i) {
        const double d = v[i] - v[last_kept];
        const int s = (d > 0.0) - (d < 0.0);
        if (s == 0) continue;
        if (last_sign == 0 || s == last_sign) {
            // extend the current run: move its tip
            if (idx.back() != 0 || last_sign != 0) idx.back() = i;
            else idx.push_back(i);
        } else {
            idx.push_back(i);
        }
        last_sign = s;
        last_kept = i;
    }
    if (idx.back() != n - 1) idx.push_back(n - 1);
    return idx;
}

// Exact maximum over partitions for p > 1 on a scalar sequence. best[] is strictly
// increasing, which justifies the periodic early break against the prefix reach bound.
PVarResult dp_scalar(const SeqView& seq, double p) {
    std::span<const double> v = seq.values;
    const auto keep = extrema_indices(v);
    const std::size_t m = keep.size();
    std::vector<double> w(m);
    for (std::size_t i = 0; i < m; ++i) w[i] = v[keep[i]];

    std::vector<double> best(m, 0.0);
    std::vector<std::size_t> prev(m, 0);
    std::vector<double> pmin(m), pmax(m);
    pmin[0] = pmax[0] = w[0];
    for (std::size_t i = 1; i < m; ++i) {
        pmin[i] = std::min(pmin[i - 1], w[i]);
        pmax[i] = std::max(pmax[i - 1], w[i]);
    }

    for (std::size_t j = 1; j < m; ++j) {
        double cur = -1.0;
        std::size_t arg = 0;
        const double wj = w[j];
        std::size_t i = j;
        while (i-- > 0) {
            if (((j - i) & 31u) == 0u) {
                const double reach = std::max(wj - pmin[i], pmax[i] - wj);
                if (reach <= 0.0 || best[i] + std::pow(reach, p) <= cur) break;
            }
            const double cand = best[i] + std::pow(std::abs(wj - w[i]), p);
            if (cand > cur) {
                cur = cand;
                arg = i;
            }
        }
        best[j] = cur;
        prev[j] = arg;
    }

    PVarResult r;
    r.p = p;
    r.method = "dp";
    r.value = best[m - 1];
    std::vector<std::size_t> part;
    for (std::size_t j = m - 1;; j = prev[j]) {
        part.push_back(keep[j]);
        if (j == 0) break;
    }
    std::reverse(part.begin(), part.end());
    r.partition = std::move(part);
    return r;
}

PVarResult dp_dense(const SeqView& seq, double p) {
    const std::size_t n = seq.size();
    std::vector<double> best(n, 0.0);
    std::vector<std::size_t> prev(n, 0);
    for (std::size_t j = 1; j < n; ++j) {
        double cur = -1.0;
        std::size_t arg = 0;
        for (std::size_t i = 0; i < j; ++i) {
            const double cand = best[i] + std::pow(seg_norm(seq, i, j), p);
            if (cand > cur) {
                cur = cand;
                arg = i;
            }
        }
        best[j] = cur;
        prev[j] = arg;
    }
    PVarResult r;
    r.p = p;
    r.method = "dp";
    r.value = best[n - 1];
    std::vector<std::size_t> part;
    for (std::size_t j = n - 1;; j = prev[j]) {
        part.push_back(j);
        if (j == 0) break;
    }
    std::reverse(part.begin(), part.end());
    r.partition = std::move(part);
    return r;
}

}  // namespace

PVarResult pvar_exact(SeqView seq, double p, const PVarCfg& cfg) {
    validate(seq, p, cfg);
    if (seq.size() == 1) {
        PVarResult r;
        r.p = p;
        r.method = "full";
        r.partition = {0};
        return r;
    }
    if (p <= 1.0) return full_partition(seq, p);
    return seq.dim == 1 ? dp_scalar(seq, p) : dp_dense(seq, p);
}

PVarResult pvar_exact(std::span<const double> values, double p, const PVarCfg& cfg) {
    return pvar_exact(SeqView{values, 1}, p, cfg);
}

PVarResult pvar_bruteforce(SeqView seq, double p) {
    PVarCfg cfg;
    cfg.max_points = 20;
    if (seq.dim == 0 || seq.values.size() % seq.dim != 0)
        throw std::invalid_argument("sequence shape mismatch");
    if (seq.size() > 20) throw std::invalid_argument("bruteforce supports at most 20 points");
    validate(seq, p, cfg);
    const std::size_t n = seq.size();
    PVarResult r;
    r.p = p;
    r.method = "bruteforce";
    if (n == 1) {
        r.partition = {0};
        return r;
    }
    const std::size_t interior = n - 2;
    const std::size_t masks = static_cast<std::size_t>(1) << interior;
    double best = -1.0;
    std::size_t best_mask = 0;
    for (std::size_t mask = 0; mask < masks; ++mask) {
        double sum = 0.0;
        std::size_t last = 0;
        for (std::size_t b = 0; b < interior; ++b) {
            if (mask & (static_cast<std::size_t>(1) << b)) {
                sum += std::pow(seg_norm(seq, last, b + 1), p);
                last = b + 1;
            }
        }
        sum += std::pow(seg_norm(seq, last, n - 1), p);
        if (sum > best) {
            best = sum;
            best_mask = mask;
        }
    }
    r.value = best;
    r.partition.push_back(0);
    for (std::size_t b = 0; b < interior; ++b)
        if (best_mask & (static_cast<std::size_t>(1) << b)) r.partition.push_back(b + 1);
    r.partition.push_back(n - 1);
    return r;
}

PVarResult pvar_bruteforce(std::span<const double> values, double p) {
    return pvar_bruteforce(SeqView{values, 1}, p);
}

PVarComponents pvar_components(SeqView seq, double p, const PVarCfg& cfg) {
    validate(seq, p, cfg);
    PVarComponents out;
    out.total = pvar_exact(seq, p, cfg);
    const std::size_t n = seq.size();
    double sum = 0.0, maxc = 0.0;
    for (std::size_t k = 0; k < seq.dim; ++k) {
        std::vector<double> coord(n);
        for (std::size_t i = 0; i < n; ++i) coord[i] = seq.values[i * seq.dim + k];
        out.per_coord.push_back(pvar_exact(coord, p, cfg));
        sum += out.per_coord.back().value;
        maxc = std::max(maxc, out.per_coord.back().value);
    }
    const double d = static_cast<double>(seq.dim);
    out.lower_bound = maxc;
    out.upper_bound = (p >= 1.0) ? std::pow(d, p - 1.0) * sum : sum;
    return out;
}

}  // namespace levyvar::pvar

// Copyright 2026 The loe-page Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "loe/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "loe/error.hpp"
#include "loe/haar.hpp"

namespace loe {

namespace {

constexpr double kClampThreshold = 1e-14;
constexpr double kNormalizationTolerance = 1e-8;

std::int64_t int_pow(int base, int exponent) {
    std::int64_t out = 1;
    for (int i = 0; i < exponent; ++i) {
        out *= base;
    }
    return out;
}

std::vector<double> gram_spectrum(const ComplexMatrix &m) {
    const ComplexMatrix gram = m.rows() <= m.cols() ? ComplexMatrix(m * m.adjoint()) : ComplexMatrix(m.adjoint() * m);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(gram, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        fail_runtime("eigensolver_failed", "Hermitian eigensolver did not converge");
    }
    std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
    for (double &x : out) {
        x = std::max(x, 0.0);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

struct Moments {
    double mean = 0;
    double variance = 0;  // unbiased
};

Moments sample_moments(const std::vector<double> &values) {
    Moments m;
    const auto n = static_cast<double>(values.size());
    m.mean = pairwise_sum(values) / n;
    if (values.size() > 1) {
        std::vector<double> sq(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) {
            sq[i] = (values[i] - m.mean) * (values[i] - m.mean);
        }
        m.variance = pairwise_sum(sq) / (n - 1);
    }
    return m;
}

void check_options(const ScanOptions &options, int qubits, int local_dim) {
    require(options.samples >= 2, "invalid_argument", "need at least 2 samples");
    require(!options.orders.empty(), "invalid_argument", "no entropy orders requested");
    require(options.threads >= 1, "invalid_argument", "threads must be >= 1");
    require(qubits >= 1 && local_dim >= 2, "invalid_argument", "need qubits >= 1 and local dimension >= 2");
    require(qubits <= options.max_qubits, "guard",
            "N = " + std::to_string(qubits) + " exceeds the qubit guard " + std::to_string(options.max_qubits));
    const double log_amplitudes = 2.0 * qubits * std::log(static_cast<double>(local_dim));
    require(log_amplitudes <= std::log(static_cast<double>(options.amplitude_cap)) + 1e-9, "guard",
            "q^{2N} amplitudes exceed the cap " + std::to_string(options.amplitude_cap));
    for (int c : options.cuts) {
        require(c >= 0 && c <= qubits, "invalid_argument", "cut outside 0..N");
    }
}

std::vector<int> cut_list(const ScanOptions &options, int qubits) {
    if (!options.cuts.empty()) {
        return options.cuts;
    }
    std::vector<int> cuts;
    for (int c = 0; c <= qubits; ++c) {
        cuts.push_back(c);
    }
    return cuts;
}

// Shared reduction for operator and state scans. sample(i, cut) returns the
// spectrum of sample i at a cut.
template <class SampleFn>
EntropyCurve run_scan(int qubits, int local_dim, const ScanOptions &options, SampleFn prepare) {
    const auto cuts = cut_list(options, qubits);
    const std::size_t n_orders = options.orders.size();
    const std::size_t per_sample = cuts.size() * n_orders;
    const auto samples = static_cast<std::size_t>(options.samples);
    std::vector<double> entropy(samples * per_sample);
    std::vector<double> purity(samples * per_sample, std::numeric_limits<double>::quiet_NaN());

    parallel_for(options.samples, options.threads, [&](std::int64_t i) {
        const auto spectrum_at = prepare(i);
        for (std::size_t c = 0; c < cuts.size(); ++c) {
            const std::vector<double> spectrum = spectrum_at(cuts[c]);
            const std::vector<double> e = entropies_from_spectrum(spectrum, options.orders);
            for (std::size_t o = 0; o < n_orders; ++o) {
                const std::size_t slot = static_cast<std::size_t>(i) * per_sample + c * n_orders + o;
                entropy[slot] = e[o];
                if (options.orders[o].has_purity()) {
                    purity[slot] = purity_from_spectrum(spectrum, options.orders[o].k);
                }
            }
        }
    });

    EntropyCurve curve;
    curve.qubits = qubits;
    curve.local_dim = local_dim;
    std::vector<double> column(samples);
    for (std::size_t c = 0; c < cuts.size(); ++c) {
        for (std::size_t o = 0; o < n_orders; ++o) {
            const EntropyOrder &order = options.orders[o];
            EntropyRow row;
            row.n_a = cuts[c];
            row.order = order;
            row.samples = options.samples;
            for (std::size_t i = 0; i < samples; ++i) {
                column[i] = entropy[i * per_sample + c * n_orders + o];
            }
            const Moments e = sample_moments(column);
            row.mean_entropy = e.mean;
            row.std_error = std::sqrt(e.variance / static_cast<double>(samples));
            if (order.has_purity()) {
                for (std::size_t i = 0; i < samples; ++i) {
                    column[i] = purity[i * per_sample + c * n_orders + o];
                }
                const Moments p = sample_moments(column);
                row.mean_purity = p.mean;
                row.purity_variance = p.variance;
                row.annealed_entropy = std::log(p.mean) / (1.0 - order.k);
            } else {
                row.mean_purity = std::numeric_limits<double>::quiet_NaN();
                row.purity_variance = std::numeric_limits<double>::quiet_NaN();
                row.annealed_entropy = std::numeric_limits<double>::quiet_NaN();
            }
            curve.rows.push_back(row);
        }
    }
    return curve;
}

}  // namespace

std::int64_t Cut::dim_a() const { return int_pow(local_dim, n_a); }
std::int64_t Cut::dim_b() const { return int_pow(local_dim, qubits - n_a); }

std::vector<double> loe_spectrum(const ComplexMatrix &evolved, const Cut &cut, std::int64_t amplitude_cap) {
    require(cut.n_a >= 0 && cut.n_a <= cut.qubits, "invalid_argument", "cut outside 0..N");
    const std::int64_t da = cut.dim_a();
    const std::int64_t db = cut.dim_b();
    const std::int64_t dim = da * db;
    require(evolved.rows() == dim && evolved.cols() == dim, "dimension_mismatch",
            "operator is not q^N x q^N for this cut");
    require(dim * dim <= amplitude_cap, "guard",
            "q^{2N} = " + std::to_string(dim * dim) + " amplitudes exceed the cap " + std::to_string(amplitude_cap));
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    ComplexMatrix m(da * da, db * db);
    for (std::int64_t ia = 0; ia < da; ++ia) {
        for (std::int64_t ja = 0; ja < da; ++ja) {
            const std::int64_t row = ia * da + ja;
            for (std::int64_t ib = 0; ib < db; ++ib) {
                for (std::int64_t jb = 0; jb < db; ++jb) {
                    m(row, ib * db + jb) = evolved(ia * db + ib, ja * db + jb) * scale;
                }
            }
        }
    }
    return gram_spectrum(m);
}

std::vector<double> state_spectrum(const Eigen::VectorXcd &state, std::int64_t dim_a, std::int64_t dim_b) {
    require(state.size() == dim_a * dim_b, "dimension_mismatch", "state length is not dim_a * dim_b");
    const ComplexMatrix m = Eigen::Map<const ComplexMatrix>(state.data(), dim_b, dim_a).transpose();
    return gram_spectrum(m);
}

double purity_from_spectrum(const std::vector<double> &spectrum, int k) {
    double sum = 0;
    for (double x : spectrum) {
        sum += std::pow(x, k);
    }
    return sum;
}

std::vector<double> entropies_from_spectrum(const std::vector<double> &spectrum, const std::vector<EntropyOrder> &orders) {
    double total = 0;
    for (double x : spectrum) {
        require(x >= 0, "invalid_spectrum", "negative eigenvalue in spectrum");
        total += x;
    }
    if (std::abs(total - 1) > kNormalizationTolerance) {
        fail_runtime("spectrum_not_normalized", "spectrum sums to " + std::to_string(total));
    }
    std::vector<double> kept;
    for (double x : spectrum) {
        if (x >= kClampThreshold) {
            kept.push_back(x);
        }
    }
    std::vector<double> out;
    for (const auto &order : orders) {
        switch (order.kind) {
        case EntropyOrder::Kind::von_neumann: {
            double s = 0;
            for (double x : kept) {
                s -= x * std::log(x);
            }
            out.push_back(s);
            break;
        }
        case EntropyOrder::Kind::hartley:
            out.push_back(std::log(static_cast<double>(kept.size())));
            break;
        case EntropyOrder::Kind::min:
            out.push_back(-std::log(*std::max_element(kept.begin(), kept.end())));
            break;
        case EntropyOrder::Kind::renyi:
            out.push_back(std::log(purity_from_spectrum(kept, order.k)) / (1.0 - order.k));
            break;
        }
    }
    return out;
}

const EntropyRow &EntropyCurve::at(int n_a, const EntropyOrder &order) const {
    for (const auto &row : rows) {
        if (row.n_a == n_a && row.order == order) {
            return row;
        }
    }
    fail("missing_row", "no row for n_a = " + std::to_string(n_a) + ", k = " + order.label());
}

EntropyCurve page_curve_scan(const OperatorSpec &op, const ScanOptions &options) {
    check_options(options, op.qubits, op.local_dim);
    const ComplexMatrix matrix = build_operator(op, derive_seed(options.seed, kOperatorStream, 0));
    return page_curve_scan(matrix, op.qubits, op.local_dim, options);
}

EntropyCurve page_curve_scan(const ComplexMatrix &op, int qubits, int local_dim, const ScanOptions &options) {
    check_options(options, qubits, local_dim);
    const std::int64_t dim = int_pow(local_dim, qubits);
    require(op.rows() == dim && op.cols() == dim, "dimension_mismatch", "operator is not q^N x q^N");
    return run_scan(qubits, local_dim, options, [&](std::int64_t i) {
        const ComplexMatrix u = haar_sample(static_cast<int>(dim), derive_seed(options.seed, kUnitaryStream, i));
        ComplexMatrix evolved = u.adjoint() * op * u;
        return [evolved = std::move(evolved), qubits, local_dim, cap = options.amplitude_cap](int n_a) {
            return loe_spectrum(evolved, Cut{qubits, local_dim, n_a}, cap);
        };
    });
}

EntropyCurve state_page_scan(int qubits, int local_dim, const ScanOptions &options) {
    check_options(options, qubits, local_dim);
    const std::int64_t doubled = int_pow(local_dim, 2 * qubits);
    return run_scan(qubits, local_dim, options, [&](std::int64_t i) {
        Eigen::VectorXcd state = haar_state(doubled, derive_seed(options.seed, kStateStream, i));
        return [state = std::move(state), qubits, local_dim](int n_a) {
            return state_spectrum(state, int_pow(local_dim, 2 * n_a), int_pow(local_dim, 2 * (qubits - n_a)));
        };
    });
}

FluctuationResult fluctuation_scan(const std::string &operator_text, int k, const std::vector<int> &qubit_list,
                                   const ScanOptions &options, int local_dim) {
    require(k >= 2, "invalid_order", "fluctuations are defined for Renyi k >= 2");
    require(qubit_list.size() >= 2, "invalid_argument", "slope fit needs at least two system sizes");
    FluctuationResult result;
    result.k = k;
    std::vector<double> log_dim;
    std::vector<double> log_rel;
    for (int n : qubit_list) {
        ScanOptions per_size = options;
        per_size.orders = {EntropyOrder::renyi(k)};
        per_size.cuts = {n / 2};
        per_size.seed = derive_seed(options.seed, 0x464c5543ULL, static_cast<std::uint64_t>(n));
        const OperatorSpec spec = OperatorSpec::parse(operator_text, n, local_dim);
        const EntropyCurve curve = page_curve_scan(spec, per_size);
        const EntropyRow &row = curve.rows.front();
        FluctuationPoint p;
        p.qubits = n;
        p.dim = int_pow(local_dim, n);
        p.mean_purity = row.mean_purity;
        p.purity_variance = row.purity_variance;
        p.relative_variance = row.purity_variance / (row.mean_purity * row.mean_purity);
        p.mean_entropy = row.mean_entropy;
        p.annealed_entropy = row.annealed_entropy;
        p.samples = row.samples;
        result.points.push_back(p);
        log_dim.push_back(std::log(static_cast<double>(p.dim)));
        log_rel.push_back(std::log(p.relative_variance));
    }
    result.slope = least_squares_slope(log_dim, log_rel);
    return result;
}

double pairwise_sum(const std::vector<double> &values) {
    // Recursive halving over fixed index ranges; leaves of 8 summed in order.
    auto rec = [&](auto &&self, std::size_t lo, std::size_t hi) -> double {
        if (hi - lo <= 8) {
            double s = 0;
            for (std::size_t i = lo; i < hi; ++i) {
                s += values[i];
            }
            return s;
        }
        const std::size_t mid = lo + (hi - lo) / 2;
        return self(self, lo, mid) + self(self, mid, hi);
    };
    return rec(rec, 0, values.size());
}

double least_squares_slope(const std::vector<double> &x, const std::vector<double> &y) {
    require(x.size() == y.size() && x.size() >= 2, "invalid_argument", "slope fit needs two or more points");
    const double n = static_cast<double>(x.size());
    double mx = 0;
    double my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0;
    double sxx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    require(sxx > 0, "invalid_argument", "slope fit needs distinct x values");
    return sxy / sxx;
}

void parallel_for(std::int64_t count, int threads, const std::function<void(std::int64_t)> &body) {
    const int workers = static_cast<int>(std::max<std::int64_t>(1, std::min<std::int64_t>(threads, count)));
    if (workers == 1) {
        for (std::int64_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (;;) {
            const std::int64_t i = next.fetch_add(1);
            if (i >= count) {
                return;
            }
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                next.store(count);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back(work);
    }
    for (auto &t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace loe

#include "bcv/critical_values.hpp"

#include "bcv/errors.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <mutex>
#include <thread>

namespace bcv {

namespace {

int parse_int(std::string_view text, std::string_view whole) {
    int value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw DomainError("malformed panel range '" + std::string(whole) + "'");
    }
    return value;
}

// floor(N * a / b) + 1: the first count strictly above the mean.
int first_above_mean(int N, const ExactProbability& p) {
    mpz_class mean_floor = N * p.numerator();
    mpz_fdiv_q(mean_floor.get_mpz_t(), mean_floor.get_mpz_t(), p.denominator().get_mpz_t());
    return static_cast<int>(mean_floor.get_si()) + 1;
}

} // namespace

CutLevel::CutLevel(ExactProbability lambda) : lambda_(std::move(lambda)) {
    if (lambda_.is_zero() || lambda_.is_one()) {
        throw DomainError("cut level must lie strictly in (0, 1), got " + lambda_.str());
    }
}

std::vector<CriticalValue> bcv_n_critical_many(int N, const ExactProbability& p, const std::vector<CutLevel>& lambdas,
                                               const CriticalOptions& options) {
    const BinomialParams params(N, p);

    std::vector<CriticalValue> out;
    out.reserve(lambdas.size());
    for (const auto& lambda : lambdas) out.push_back({N, p, lambda, 0, false});

    const int start = first_above_mean(N, p);
    if (start <= N) {
        // Above the mean pmf is strictly decreasing, so the first hit is final.
        PmfCursor cursor(params, start);
        std::size_t pending = out.size();
        for (;;) {
            for (auto& cell : out) {
                if (!cell.attainable && cursor.at_most(cell.lambda.lambda())) {
                    cell.n_critical = cursor.position();
                    cell.attainable = true;
                    --pending;
                }
            }
            if (pending == 0 || cursor.position() == N) break;
            cursor.step_up();
        }
    }

    if (options.min_floor) {
        for (auto& cell : out) {
            if (!cell.attainable) continue;
            cell.n_critical = std::max(cell.n_critical, *options.min_floor);
            if (cell.n_critical > N) {
                cell.attainable = false;
                cell.n_critical = 0;
            }
        }
    }
    return out;
}

CriticalValue bcv_n_critical(int N, const ExactProbability& p, const CutLevel& lambda, const CriticalOptions& options) {
    return bcv_n_critical_many(N, p, {lambda}, options).front();
}

PanelRange PanelRange::parse(std::string_view text) {
    PanelRange range;
    if (const auto colon = text.find(':'); colon != std::string_view::npos) {
        range.first = parse_int(text.substr(0, colon), text);
        range.last = parse_int(text.substr(colon + 1), text);
    } else {
        range.first = range.last = parse_int(text, text);
    }
    return range;
}

CriticalTable generate_table(PanelRange range, const ExactProbability& p, const std::vector<CutLevel>& lambdas,
                             const CriticalOptions& options, unsigned threads) {
    if (range.first < 1 || range.last > kMaxPanelSize || range.first > range.last) {
        throw DomainError("panel range " + std::to_string(range.first) + ":" + std::to_string(range.last)
                          + " outside [1, " + std::to_string(kMaxPanelSize) + "]");
    }
    // Validates p before any worker starts.
    (void)BinomialParams(range.first, p);

    CriticalTable table{p, lambdas, {}};
    table.rows.resize(static_cast<std::size_t>(range.size()));

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(range.size()));

    // Each worker claims the next N and writes only its own slot, so the
    // result does not depend on scheduling. Larger N first to balance load.
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        try {
            for (int i = next++; i < range.size(); i = next++) {
                const int N = range.last - i;
                auto& row = table.rows[static_cast<std::size_t>(N - range.first)];
                row.N = N;
                row.cells = bcv_n_critical_many(N, p, lambdas, options);
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };

    if (threads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);
    return table;
}

std::vector<Discrepancy> discrepancy_report(const CriticalTable& generated, const CriticalTable& reference) {
    if (generated.p != reference.p) {
        throw DomainError("tables use different p: " + generated.p.str() + " vs " + reference.p.str());
    }
    if (generated.lambdas != reference.lambdas) throw DomainError("tables use different cut levels");
    if (generated.rows.size() != reference.rows.size()) throw DomainError("tables cover different panel sizes");

    std::vector<Discrepancy> out;
    for (std::size_t r = 0; r < generated.rows.size(); ++r) {
        const auto& g = generated.rows[r];
        const auto& ref = reference.rows[r];
        if (g.N != ref.N || g.cells.size() != ref.cells.size()) {
            throw DomainError("tables cover different panel sizes");
        }
        for (std::size_t c = 0; c < g.cells.size(); ++c) {
            const auto& gc = g.cells[c];
            const auto& rc = ref.cells[c];
            const auto gv = gc.attainable ? std::optional<int>(gc.n_critical) : std::nullopt;
            const auto rv = rc.attainable ? std::optional<int>(rc.n_critical) : std::nullopt;
            if (gv != rv) out.push_back({g.N, gc.lambda, gv, rv});
        }
    }
    return out;
}

} // namespace bcv

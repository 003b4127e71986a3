#pragma once

#include <condition_variable>
#include <cstdint>
#include <deque>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "decnum/classes.hpp"
#include "decnum/graph6.hpp"
#include "decnum/solver.hpp"
#include "decnum/variant.hpp"

namespace decnum {

struct TableRow {
    int n = 0;
    long long count = 0;
    int min_value = 0;
    long long min_attainers = 0;  // m
    int max_value = 0;
    long long max_attainers = 0;  // M

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

enum class TableFormat { Csv, Json, Markdown };

inline std::optional<TableFormat> parse_table_format(std::string_view s) {
    if (s == "csv") return TableFormat::Csv;
    if (s == "json") return TableFormat::Json;
    if (s == "markdown") return TableFormat::Markdown;
    return std::nullopt;
}

struct RunConfig {
    Variant variant = Variant::bad();
    GraphClassSpec cls;
    int n_lo = 0, n_hi = 0;
    int workers = 1;
    TableFormat format = TableFormat::Csv;
    std::string witness_path;
    std::string checkpoint_path;
    long long abort_after = 0;  // test hook simulating a kill after N merged graphs
};

/// Thrown by the abort_after test hook to imitate an interrupted run.
struct TableInterrupted : std::runtime_error {
    TableInterrupted() : std::runtime_error("table run interrupted (test hook)") {}
};

struct TableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// (min, m, max, M) merging is commutative and associative, so the final row
// cannot depend on worker count; merging in sequence order anyway gives a
// well-defined prefix state to checkpoint.
struct TableAggregate {
    long long count = 0;
    long long infeasible = 0;
    int min_value = 0;
    long long m = 0;
    int max_value = 0;
    long long M = 0;

    void add(const SolveOutcome& out) {
        ++count;
        if (!out.optimal()) {
            ++infeasible;
            return;
        }
        bool first = count - infeasible == 1;
        if (first || out.value < min_value) {
            min_value = out.value;
            m = 1;
        } else if (out.value == min_value) {
            ++m;
        }
        if (first || out.value > max_value) {
            max_value = out.value;
            M = 1;
        } else if (out.value == max_value) {
            ++M;
        }
    }

    std::optional<TableRow> row(int n) const {
        if (count == 0) return std::nullopt;
        if (count == infeasible)
            throw TableError("every graph of order " + std::to_string(n) +
                             " is infeasible; no table row exists");
        return TableRow{n, count, min_value, m, max_value, M};
    }
};

template <class T>
class BoundedQueue {
public:
    explicit BoundedQueue(size_t cap) : cap_(cap) {}

    bool push(T item) {
        std::unique_lock lk(mu_);
        cv_space_.wait(lk, [&] { return items_.size() < cap_ || closed_; });
        if (closed_) return false;
        items_.push_back(std::move(item));
        cv_item_.notify_one();
        return true;
    }

    std::optional<T> pop() {
        std::unique_lock lk(mu_);
        cv_item_.wait(lk, [&] { return !items_.empty() || done_ || closed_; });
        if (items_.empty()) return std::nullopt;
        T out = std::move(items_.front());
        items_.pop_front();
        cv_space_.notify_one();
        return out;
    }

    void finish() {  // producer is done; consumers drain whatever is left
        std::lock_guard lk(mu_);
        done_ = true;
        cv_item_.notify_all();
    }

    void close() {  // cancel: unblock everyone, drop the backlog
        std::lock_guard lk(mu_);
        closed_ = true;
        items_.clear();
        cv_item_.notify_all();
        cv_space_.notify_all();
    }

private:
    size_t cap_;
    std::mutex mu_;
    std::condition_variable cv_item_, cv_space_;
    std::deque<T> items_;
    bool done_ = false, closed_ = false;
};

struct Checkpoint {
    std::string fingerprint;
    std::vector<TableRow> rows;
    int current_n = 0;
    long long consumed = 0;
    TableAggregate agg;
    uint64_t witness_offset = 0;

    nlohmann::json to_json() const {
        nlohmann::json jr = nlohmann::json::array();
        for (const auto& r : rows)
            jr.push_back({r.n, r.count, r.min_value, r.min_attainers, r.max_value,
                          r.max_attainers});
        return {{"version", 1},
                {"fingerprint", fingerprint},
                {"rows", jr},
                {"current_n", current_n},
                {"consumed", consumed},
                {"agg",
                 {{"count", agg.count},
                  {"infeasible", agg.infeasible},
                  {"min", agg.min_value},
                  {"m", agg.m},
                  {"max", agg.max_value},
                  {"M", agg.M}}},
                {"witness_offset", witness_offset}};
    }

    static Checkpoint from_json(const nlohmann::json& j) {
        Checkpoint c;
        c.fingerprint = j.at("fingerprint").get<std::string>();
        for (const auto& r : j.at("rows"))
            c.rows.push_back(TableRow{r.at(0).get<int>(), r.at(1).get<long long>(),
                                      r.at(2).get<int>(), r.at(3).get<long long>(),
                                      r.at(4).get<int>(), r.at(5).get<long long>()});
        c.current_n = j.at("current_n").get<int>();
        c.consumed = j.at("consumed").get<long long>();
        const auto& a = j.at("agg");
        c.agg.count = a.at("count").get<long long>();
        c.agg.infeasible = a.at("infeasible").get<long long>();
        c.agg.min_value = a.at("min").get<int>();
        c.agg.m = a.at("m").get<long long>();
        c.agg.max_value = a.at("max").get<int>();
        c.agg.M = a.at("M").get<long long>();
        c.witness_offset = j.at("witness_offset").get<uint64_t>();
        return c;
    }
};

inline void write_checkpoint_file(const std::string& path, const Checkpoint& c) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << c.to_json().dump() << '\n';
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace detail

inline std::string run_fingerprint(const RunConfig& cfg) {
    return cfg.cls.to_string() + "|" + std::string(cfg.variant.name()) + "|" +
           std::to_string(cfg.n_lo) + ".." + std::to_string(cfg.n_hi);
}

/// Solve every graph of every order in the configured range and aggregate
/// min/m/max/M per order. One producer streams the class into a bounded
/// queue, `workers` solver threads drain it, and the caller's thread merges
/// results in sequence order, emitting each finished row through `on_row`.
/// Output is identical for any worker count. With a checkpoint path the run
/// can resume after an interruption, byte-identically.
inline std::vector<TableRow> run_table(
    const RunConfig& cfg,
    const std::function<void(const TableRow&)>& on_row = {}) {
    if (cfg.workers < 1) throw TableError("worker count must be >= 1");
    if (cfg.n_lo > cfg.n_hi) throw TableError("empty order range");

    std::vector<TableRow> rows;
    int resume_n = cfg.n_lo;
    long long resume_consumed = 0;
    detail::TableAggregate resume_agg;
    uint64_t witness_offset = 0;
    const std::string fp = run_fingerprint(cfg);

    if (!cfg.checkpoint_path.empty() && std::filesystem::exists(cfg.checkpoint_path)) {
        std::ifstream in(cfg.checkpoint_path);
        nlohmann::json j;
        in >> j;
        auto c = detail::Checkpoint::from_json(j);
        if (c.fingerprint != fp)
            throw TableError("checkpoint belongs to a different run: " + c.fingerprint);
        rows = c.rows;
        resume_n = c.current_n;
        resume_consumed = c.consumed;
        resume_agg = c.agg;
        witness_offset = c.witness_offset;
        for (const auto& r : rows)
            if (on_row) on_row(r);
    }

    std::fstream witness;
    if (!cfg.witness_path.empty()) {
        if (std::filesystem::exists(cfg.witness_path))
            std::filesystem::resize_file(cfg.witness_path, witness_offset);
        else
            std::ofstream(cfg.witness_path).flush();
        witness.open(cfg.witness_path, std::ios::in | std::ios::out);
        witness.seekp(static_cast<std::streamoff>(witness_offset));
    }
    auto witness_pos = [&]() -> uint64_t {
        return witness.is_open() ? static_cast<uint64_t>(witness.tellp()) : 0;
    };

    struct WorkItem {
        long long seq;
        Graph g;
    };
    struct Result {
        SolveOutcome outcome;
        std::string g6;
    };

    long long merged_this_run = 0;
    for (int n = resume_n; n <= cfg.n_hi; ++n) {
        detail::TableAggregate agg;
        long long skip = 0;
        if (n == resume_n) {
            agg = resume_agg;
            skip = resume_consumed;
        }

        detail::BoundedQueue<WorkItem> queue(256);
        std::mutex mu;
        std::condition_variable cv;
        std::map<long long, Result> ready;
        long long produced = -1;  // total class size, set when the producer ends
        std::exception_ptr producer_error;

        std::thread producer([&] {
            long long seq = 0;
            std::exception_ptr err;
            try {
                for_each_in_class(cfg.cls, n, [&](const Graph& g) {
                    if (seq >= skip)
                        if (!queue.push({seq, g})) throw TableInterrupted();
                    ++seq;
                });
            } catch (const TableInterrupted&) {
                // cancelled from the aggregator side
            } catch (...) {
                err = std::current_exception();
            }
            {
                std::lock_guard lk(mu);
                produced = seq;
                producer_error = err;
            }
            queue.finish();
            cv.notify_all();
        });

        std::vector<std::thread> pool;
        for (int w = 0; w < cfg.workers; ++w)
            pool.emplace_back([&] {
                while (auto item = queue.pop()) {
                    Result r{solve(item->g, cfg.variant), emit_graph6(item->g)};
                    {
                        std::lock_guard lk(mu);
                        ready.emplace(item->seq, std::move(r));
                    }
                    cv.notify_all();
                }
            });

        auto join_all = [&] {
            queue.close();
            producer.join();
            for (auto& t : pool) t.join();
        };

        long long next = skip;
        try {
            for (;;) {
                std::unique_lock lk(mu);
                cv.wait(lk, [&] {
                    return ready.count(next) || (produced >= 0 && next >= produced) ||
                           producer_error;
                });
                if (producer_error) std::rethrow_exception(producer_error);
                if (!ready.count(next)) break;  // class exhausted
                Result r = std::move(ready.at(next));
                ready.erase(next);
                lk.unlock();

                agg.add(r.outcome);
                if (witness.is_open() && r.outcome.optimal()) {
                    nlohmann::json w{{"seq", next},
                                     {"n", n},
                                     {"graph6", r.g6},
                                     {"value", r.outcome.value},
                                     {"witness", assignment_to_string(r.outcome.witness)}};
                    witness << w.dump() << '\n';
                }
                ++next;
                ++merged_this_run;
                if (!cfg.checkpoint_path.empty() && next % 1000 == 0) {
                    if (witness.is_open()) witness.flush();
                    detail::Checkpoint c{fp, rows, n, next, agg, witness_pos()};
                    detail::write_checkpoint_file(cfg.checkpoint_path, c);
                }
                if (cfg.abort_after > 0 && merged_this_run >= cfg.abort_after)
                    throw TableInterrupted();
            }
        } catch (...) {
            join_all();
            throw;
        }
        join_all();

        if (auto row = agg.row(n)) {
            rows.push_back(*row);
            if (on_row) on_row(*row);
        }
        if (!cfg.checkpoint_path.empty()) {
            if (witness.is_open()) witness.flush();
            detail::Checkpoint c{fp, rows, n + 1, 0, {}, witness_pos()};
            detail::write_checkpoint_file(cfg.checkpoint_path, c);
        }
    }
    return rows;
}

inline std::string format_rows(const std::vector<TableRow>& rows, TableFormat fmt) {
    std::ostringstream out;
    switch (fmt) {
        case TableFormat::Csv:
            out << "n,count,min,m,max,M\n";
            for (const auto& r : rows)
                out << r.n << ',' << r.count << ',' << r.min_value << ',' << r.min_attainers
                    << ',' << r.max_value << ',' << r.max_attainers << '\n';
            break;
        case TableFormat::Json: {
            nlohmann::json j = nlohmann::json::array();
            for (const auto& r : rows)
                j.push_back({{"n", r.n},
                             {"count", r.count},
                             {"min", r.min_value},
                             {"m", r.min_attainers},
                             {"max", r.max_value},
                             {"M", r.max_attainers}});
            out << j.dump(2) << '\n';
            break;
        }
        case TableFormat::Markdown:
            out << "| n | count | min | m | max | M |\n";
            out << "|---|-------|-----|---|-----|---|\n";
            for (const auto& r : rows)
                out << "| " << r.n << " | " << r.count << " | " << r.min_value << " | "
                    << r.min_attainers << " | " << r.max_value << " | " << r.max_attainers
                    << " |\n";
            break;
    }
    return out.str();
}

}  // namespace decnum

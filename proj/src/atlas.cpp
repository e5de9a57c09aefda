#include "quadorder/atlas.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include <json.hpp>

#include "quadorder/oracle.hpp"

namespace quadorder {

namespace fs = std::filesystem;

std::string to_csv_row(const ClassificationRecord& r)
{
    std::string s;
    s.reserve(64);
    auto num = [&](std::int64_t v) {
        s += std::to_string(v);
        s += ',';
    };
    num(r.d);
    num(r.n);
    num(r.D);
    num(r.m);
    num(r.L);
    s += r.ideal_preserving ? "1," : "0,";
    s += r.locally_associated ? "1," : "0,";
    s += r.associated ? "1," : "0,";
    num(r.h_maximal);
    num(r.h_order);
    s += r.hfd ? '1' : '0';
    return s;
}

std::string to_json_row(const ClassificationRecord& r)
{
    auto b = [](bool v) { return v ? "true" : "false"; };
    std::ostringstream o;
    o << "{\"d\":" << r.d << ",\"n\":" << r.n << ",\"D\":" << r.D << ",\"m\":" << r.m
      << ",\"L\":" << r.L << ",\"ideal_preserving\":" << b(r.ideal_preserving)
      << ",\"locally_associated\":" << b(r.locally_associated)
      << ",\"associated\":" << b(r.associated) << ",\"h_maximal\":" << r.h_maximal
      << ",\"h_order\":" << r.h_order << ",\"hfd\":" << b(r.hfd) << '}';
    return o.str();
}

ClassificationRecord parse_json_row(const std::string& line)
{
    const auto j = nlohmann::json::parse(line);
    ClassificationRecord r;
    r.d = j.at("d").get<std::int64_t>();
    r.n = j.at("n").get<std::int64_t>();
    r.D = j.at("D").get<std::int64_t>();
    r.m = j.at("m").get<std::int64_t>();
    r.L = j.at("L").get<std::int64_t>();
    r.ideal_preserving = j.at("ideal_preserving").get<bool>();
    r.locally_associated = j.at("locally_associated").get<bool>();
    r.associated = j.at("associated").get<bool>();
    r.h_maximal = j.at("h_maximal").get<std::int64_t>();
    r.h_order = j.at("h_order").get<std::int64_t>();
    r.hfd = j.at("hfd").get<bool>();
    return r;
}

fs::path checkpoint_path(const fs::path& out)
{
    fs::path p = out;
    p += ".ckpt";
    return p;
}

std::optional<Checkpoint> read_checkpoint(const fs::path& file)
{
    std::ifstream in(file);
    if (!in)
        return std::nullopt;
    Checkpoint c;
    bool seen[3] = {false, false, false};
    std::string line;
    while (std::getline(in, line)) {
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            continue;
        const std::string key = line.substr(0, eq);
        const std::int64_t v = std::stoll(line.substr(eq + 1));
        if (key == "d") {
            c.last_d = v;
            seen[0] = true;
        } else if (key == "rows") {
            c.rows = v;
            seen[1] = true;
        } else if (key == "hfd") {
            c.hfd = v;
            seen[2] = true;
        }
    }
    if (!(seen[0] && seen[1] && seen[2]))
        throw MalformedInput("checkpoint " + file.string() + " is incomplete");
    return c;
}

void write_checkpoint(const fs::path& file, const Checkpoint& c)
{
    fs::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream o(tmp, std::ios::trunc);
        o << "d=" << c.last_d << "\nrows=" << c.rows << "\nhfd=" << c.hfd << "\n";
        o.flush();
        if (!o)
            throw std::runtime_error("cannot write checkpoint " + tmp.string());
    }
    fs::rename(tmp, file);
}

std::optional<std::string> oracle_mismatch(const FieldData& fd, const ClassificationRecord& r)
{
    const bool la = brute_locally_associated(fd.field, fd.unit, r.n);
    const bool ip = brute_ideal_preserving(fd.field, r.n);
    const bool as = brute_associated(fd.field, fd.unit, r.n);
    if (la == r.locally_associated && ip == r.ideal_preserving && as == r.associated)
        return std::nullopt;
    std::ostringstream o;
    o << "oracle mismatch at (d, n) = (" << r.d << ", " << r.n << "): la " << r.locally_associated
      << "/" << la << ", ip " << r.ideal_preserving << "/" << ip << ", assoc " << r.associated
      << "/" << as;
    return o.str();
}

namespace {

// Keeps the first `keep` lines of `file` and drops the rest.
void truncate_lines(const fs::path& file, std::int64_t keep)
{
    std::ifstream in(file, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot reopen " + file.string() + " for resume");
    std::uintmax_t offset = 0;
    std::int64_t lines = 0;
    char buf[1 << 16];
    while (lines < keep && in) {
        in.read(buf, sizeof buf);
        const std::streamsize got = in.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            if (buf[i] == '\n' && ++lines == keep) {
                offset += static_cast<std::uintmax_t>(i) + 1;
                break;
            }
        }
        if (lines < keep)
            offset += static_cast<std::uintmax_t>(got);
    }
    if (lines < keep)
        throw MalformedInput(file.string() + " has fewer rows than its checkpoint records");
    in.close();
    fs::resize_file(file, offset);
}

struct Block {
    std::string text;
    std::int64_t rows = 0;
    std::int64_t hfd = 0;
    std::exception_ptr error;
    bool ready = false;
};

}  // namespace

ScanSummary scan(const ScanConfig& cfg)
{
    const auto t0 = std::chrono::steady_clock::now();
    if (cfg.d_min > cfg.d_max)
        throw std::invalid_argument("scan: empty d range");
    if (cfg.n_min < 1)
        throw std::invalid_argument("scan: n_min must be at least 1");
    if (cfg.out.empty())
        throw std::invalid_argument("scan: output path required");

    std::vector<std::int64_t> ds;
    for (std::int64_t d = cfg.d_min; d <= cfg.d_max; ++d)
        if (d != 0 && d != 1 && is_squarefree(d))
            ds.push_back(d);

    ScanSummary summary;
    if (cfg.n_min > cfg.n_max || ds.empty()) {
        summary.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return summary;
    }

    std::vector<Factorization> fact;
    fact.reserve(static_cast<std::size_t>(cfg.n_max - cfg.n_min + 1));
    for (std::int64_t n = cfg.n_min; n <= cfg.n_max; ++n)
        fact.push_back(factorize(n));

    const fs::path ckpt_file = checkpoint_path(cfg.out);
    Checkpoint ckpt;
    std::size_t start = 0;
    std::optional<Checkpoint> prior;
    if (cfg.resume && fs::exists(cfg.out))
        prior = read_checkpoint(ckpt_file);
    std::ofstream out;
    if (prior) {
        ckpt = *prior;
        const std::int64_t header = cfg.format == OutputFormat::Csv ? 1 : 0;
        truncate_lines(cfg.out, header + ckpt.rows);
        start = static_cast<std::size_t>(
            std::upper_bound(ds.begin(), ds.end(), ckpt.last_d) - ds.begin());
        out.open(cfg.out, std::ios::binary | std::ios::app);
    } else {
        fs::remove(ckpt_file);
        out.open(cfg.out, std::ios::binary | std::ios::trunc);
        if (out && cfg.format == OutputFormat::Csv)
            out << kCsvHeader << '\n';
    }
    if (!out)
        throw std::runtime_error("cannot open " + cfg.out.string() + " for writing");

    const std::size_t total = ds.size() - start;
    std::vector<Block> blocks(total);
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> abort{false};
    std::size_t written = 0;  // guarded by mu
    const int jobs = std::max(1, cfg.jobs);
    const std::size_t window = static_cast<std::size_t>(jobs) * 4;

    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= total || abort.load())
                return;
            {
                std::unique_lock lk(mu);
                cv.wait(lk, [&] { return i < written + window || abort.load(); });
                if (abort.load())
                    return;
            }
            Block b;
            try {
                OrderClassifier cls(ds[start + i]);
                std::string text;
                for (std::int64_t n = cfg.n_min; n <= cfg.n_max; ++n) {
                    const auto rec = cls.classify(n, fact[static_cast<std::size_t>(n - cfg.n_min)]);
                    if (cfg.verify && n <= cfg.verify_n_max) {
                        if (auto bad = oracle_mismatch(cls.data(), rec))
                            throw VerificationError(*bad);
                    }
                    text += cfg.format == OutputFormat::Csv ? to_csv_row(rec) : to_json_row(rec);
                    text += '\n';
                    ++b.rows;
                    b.hfd += rec.hfd && rec.n > 1;
                }
                b.text = std::move(text);
            } catch (...) {
                b.error = std::current_exception();
            }
            b.ready = true;
            {
                std::lock_guard lk(mu);
                blocks[i] = std::move(b);
            }
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back(work);

    std::exception_ptr failure;
    for (std::size_t i = 0; i < total && !failure; ++i) {
        Block b;
        {
            std::unique_lock lk(mu);
            cv.wait(lk, [&] { return blocks[i].ready; });
            b = std::move(blocks[i]);
        }
        if (b.error) {
            failure = b.error;
            break;
        }
        out << b.text;
        out.flush();
        if (!out) {
            failure = std::make_exception_ptr(
                std::runtime_error("write failed on " + cfg.out.string()));
            break;
        }
        ckpt.last_d = ds[start + i];
        ckpt.rows += b.rows;
        ckpt.hfd += b.hfd;
        write_checkpoint(ckpt_file, ckpt);
        {
            std::lock_guard lk(mu);
            written = i + 1;
        }
        cv.notify_all();
    }
    if (failure) {
        abort = true;
        cv.notify_all();
    }
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);

    summary.rows = ckpt.rows;
    summary.hfd = ckpt.hfd;
    summary.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return summary;
}

namespace {

bool parse_flag(const std::string& s)
{
    if (s == "1")
        return true;
    if (s == "0")
        return false;
    throw MalformedInput("bad boolean '" + s + "'");
}

ClassificationRecord parse_csv_row(const std::string& line)
{
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ','))
        f.push_back(cell);
    if (f.size() != 11)
        throw MalformedInput("expected 11 fields, got " + std::to_string(f.size()));
    auto num = [](const std::string& s) {
        std::size_t used = 0;
        const std::int64_t v = std::stoll(s, &used);
        if (used != s.size())
            throw MalformedInput("bad integer '" + s + "'");
        return v;
    };
    ClassificationRecord r;
    r.d = num(f[0]);
    r.n = num(f[1]);
    r.D = num(f[2]);
    r.m = num(f[3]);
    r.L = num(f[4]);
    r.ideal_preserving = parse_flag(f[5]);
    r.locally_associated = parse_flag(f[6]);
    r.associated = parse_flag(f[7]);
    r.h_maximal = num(f[8]);
    r.h_order = num(f[9]);
    r.hfd = parse_flag(f[10]);
    return r;
}

}  // namespace

HfdReport report_hfd(const fs::path& input)
{
    std::ifstream in(input);
    if (!in)
        throw std::runtime_error("cannot open " + input.string());
    HfdReport rep;
    std::string line;
    std::int64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        if (lineno == 1 && line == kCsvHeader)
            continue;
        ClassificationRecord r;
        try {
            r = line.front() == '{' ? parse_json_row(line) : parse_csv_row(line);
        } catch (const std::exception& e) {
            throw MalformedInput(input.string() + ":" + std::to_string(lineno) + ": " + e.what());
        }
        if (r.hfd && r.n > 1) {
            ++rep.total;
            ++rep.per_d[r.d];
        }
    }
    return rep;
}

}  // namespace quadorder

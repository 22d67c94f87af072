// permc: command-line front end for the permutation codecs and their
// applications. Exit codes: 0 success, 1 usage, 2 validation, 3 format.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "permc/any_codec.hpp"
#include "permc/csa.hpp"
#include "permc/cycles.hpp"
#include "permc/errors.hpp"
#include "permc/generators.hpp"
#include "permc/inverted_index.hpp"
#include "permc/text_format.hpp"

using namespace permc;
using json = nlohmann::ordered_json;

namespace {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

container load_container(const std::string& path) {
    std::vector<std::uint8_t> bytes;
    try {
        bytes = read_file(path);
    } catch (const format_error&) {
        throw;
    } catch (const std::runtime_error& e) {
        throw io_error(e.what());
    }
    return container::from_bytes(bytes);
}

std::size_t save_container(const std::string& path, const container& c) {
    auto bytes = c.to_bytes();
    try {
        write_file(path, bytes);
    } catch (const std::runtime_error& e) {
        throw io_error(e.what());
    }
    return bytes.size();
}

std::string cell(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : " ") + cell(x);
        return s;
    }
    if (v.is_number_float()) {
        std::ostringstream os;
        os.precision(6);
        os << v.get<double>();
        return os.str();
    }
    return v.dump();
}

// One record, or a table when given an array of records with equal keys.
void emit(const json& out, const std::string& format) {
    if (format == "json") {
        std::cout << out.dump(2) << "\n";
        return;
    }
    const json rows = out.is_array() ? out : json::array({out});
    if (rows.empty()) return;
    std::string header;
    for (const auto& [k, v] : rows.front().items()) header += (header.empty() ? "" : "\t") + k;
    std::cout << header << "\n";
    for (const auto& r : rows) {
        std::string line;
        bool first = true;
        for (const auto& [k, v] : r.items()) {
            line += (first ? "" : "\t") + cell(v);
            first = false;
        }
        std::cout << line << "\n";
    }
}

void add_space(json& r, const space_breakdown& s, std::size_t n) {
    r["payload_bits"] = s.payload;
    r["directory_bits"] = s.directories;
    r["pointer_bits"] = s.pointers;
    r["total_bits"] = s.total();
    r["bits_per_element"] = n == 0 ? 0.0 : static_cast<double>(s.total()) / static_cast<double>(n);
}

codec_kind codec_from(const std::string& name) {
    auto k = parse_codec_kind(name);
    if (!k) throw usage_error("unknown codec '" + name + "' (expected runs, strict or sus)");
    return *k;
}

// Presortedness measure and entropy a codec adapts to.
std::pair<std::size_t, double> measure(const permutation& pi, codec_kind k) {
    switch (k) {
    case codec_kind::runs: {
        auto r = runs(pi);
        return {r.count(), entropy(r.lengths)};
    }
    case codec_kind::strict: {
        auto s = strict_runs(pi);
        return {s.count(), entropy(s.head_run_lengths)};
    }
    case codec_kind::sus: {
        auto p = partition_sus(pi);
        return {p.count(), entropy(p.lengths)};
    }
    }
    return {0, 0.0};
}

std::size_t parse_index(const std::string& s, const char* what) {
    std::size_t v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size())
        throw usage_error(std::string(what) + " must be a non-negative integer, got '" + s + "'");
    return v;
}

std::int64_t parse_signed(const std::string& s, const char* what) {
    std::int64_t v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size())
        throw usage_error(std::string(what) + " must be an integer, got '" + s + "'");
    return v;
}

// ---- analyze ----

int cmd_analyze(const std::string& input, const std::string& format) {
    auto pi = parse_permutation(read_text(input));
    auto r = runs(pi);
    auto s = strict_runs(pi);
    auto p = partition_sus(pi);
    json out;
    out["n"] = pi.size();
    out["runs"] = r.count();
    out["H_runs"] = entropy(r.lengths);
    out["strict_runs"] = s.count();
    out["H_hruns"] = entropy(s.head_run_lengths);
    out["sus"] = p.count();
    out["H_sus"] = entropy(p.lengths);
    emit(out, format);
    return 0;
}

// ---- encode ----

struct encode_opts {
    std::string input, output, codec = "runs", inner = "runs", format = "tsv";
    bool compressed = false;
};

int cmd_encode(const encode_opts& o) {
    json out;
    out["codec"] = o.codec;
    if (o.codec == "function") {
        auto f = parse_function(read_text(o.input));
        auto F = int_function::decompose(f, codec_from(o.inner));
        out["n"] = f.size();
        out["cyclic"] = F.cyclic_count();
        out["cycles"] = F.cycles().cycle_count();
        add_space(out, F.size_in_bits(), f.size());
        out["file_bytes"] = save_container(o.output, F.to_container());
        emit(out, o.format);
        return 0;
    }
    if (o.codec != "cycles" && !parse_codec_kind(o.codec))
        throw usage_error("unknown codec '" + o.codec + "' (expected runs, strict, sus, cycles or function)");
    auto pi = parse_permutation(read_text(o.input));
    out["n"] = pi.size();
    if (o.codec == "cycles") {
        auto c = cycle_codec::encode(pi, codec_from(o.inner), o.compressed);
        out["inner"] = o.inner;
        out["cycles"] = c.cycle_count();
        add_space(out, c.size_in_bits(), pi.size());
        out["file_bytes"] = save_container(o.output, c.to_container());
    } else {
        auto kind = codec_from(o.codec);
        auto c = any_codec::encode(pi, kind, o.compressed);
        auto [m, h] = measure(pi, kind);
        const char* names[] = {"runs", "strict_runs", "sus"};
        const char* entropies[] = {"H_runs", "H_hruns", "H_sus"};
        out[names[static_cast<int>(kind)]] = m;
        out[entropies[static_cast<int>(kind)]] = h;
        add_space(out, c.size_in_bits(), pi.size());
        out["file_bytes"] = save_container(o.output, c.to_container());
    }
    emit(out, o.format);
    return 0;
}

// ---- query ----

int cmd_query(const std::string& path, const std::vector<std::string>& args, const std::string& format) {
    if (args.empty()) throw usage_error("query needs an operation: apply I | inverse I | power I K | range I J");
    const std::string& op = args[0];
    auto need = [&](std::size_t k) {
        if (args.size() != k + 1)
            throw usage_error("operation '" + op + "' takes " + std::to_string(k) + " argument(s)");
    };
    auto c = load_container(path);
    std::vector<std::size_t> values;

    if (c.kind() == structure_tag::int_function) {
        auto F = int_function::from_container(c);
        if (op == "apply") {
            need(1);
            values = F.power(parse_index(args[1], "I"), 1);
        } else if (op == "power") {
            need(2);
            values = F.power(parse_index(args[1], "I"), parse_signed(args[2], "K"));
        } else {
            throw usage_error("function containers support apply and power");
        }
    } else {
        std::function<std::size_t(std::size_t, std::int64_t)> power;
        std::size_t n = 0;
        std::optional<any_codec> codec;
        std::optional<cycle_codec> cycles;
        if (c.kind() == structure_tag::cycle_codec) {
            cycles = cycle_codec::from_container(c);
            n = cycles->size();
        } else {
            codec = any_codec::from_container(c);
            n = codec->size();
        }
        auto apply = [&](std::size_t i) { return cycles ? cycles->apply(i) : codec->apply(i); };
        auto inverse = [&](std::size_t i) { return cycles ? cycles->inverse(i) : codec->inverse(i); };
        if (op == "apply") {
            need(1);
            values.push_back(apply(parse_index(args[1], "I")));
        } else if (op == "inverse") {
            need(1);
            values.push_back(inverse(parse_index(args[1], "I")));
        } else if (op == "power") {
            need(2);
            std::size_t i = parse_index(args[1], "I");
            std::int64_t k = parse_signed(args[2], "K");
            if (cycles) {
                values.push_back(cycles->power(i, k));
            } else {
                // Without a cycle structure, walk i's cycle: at most min(|K|, cycle length) steps.
                if (i == 0 || i > n) throw std::out_of_range("index outside [1," + std::to_string(n) + "]");
                std::uint64_t steps = k < 0 ? std::uint64_t(-(k + 1)) + 1 : std::uint64_t(k);
                std::size_t x = i;
                std::uint64_t done = 0;
                while (done < steps) {
                    x = k < 0 ? inverse(x) : apply(x);
                    ++done;
                    if (x == i) steps %= done, done = 0;  // full cycle: reduce the remaining count
                }
                i = x;
                values.push_back(i);
            }
        } else if (op == "range") {
            need(2);
            std::size_t i = parse_index(args[1], "I"), j = parse_index(args[2], "J");
            if (i == 0 || i > j || j > n)
                throw std::out_of_range("range [" + args[1] + "," + args[2] + "] invalid for n = " + std::to_string(n));
            if (const auto* r = codec ? codec->get_if<runs_codec>() : nullptr) values = r->apply_range(i, j);
            else
                for (std::size_t k = i; k <= j; ++k) values.push_back(apply(k));
        } else if (op == "inverse-range") {
            need(2);
            const auto* r = codec ? codec->get_if<runs_codec>() : nullptr;
            if (!r) throw usage_error("inverse-range needs a runs container");
            values = r->inverse_range(parse_index(args[1], "I"), parse_index(args[2], "J"));
        } else {
            throw usage_error("unknown operation '" + op + "'");
        }
    }
    if (format == "json") {
        json out;
        out["op"] = op;
        out["args"] = std::vector<std::string>(args.begin() + 1, args.end());
        out["values"] = values;
        emit(out, format);
    } else {
        for (auto v : values) std::cout << v << "\n";
    }
    return 0;
}

// ---- sort ----

int cmd_sort(const std::string& input, const std::string& strategy, const std::string& output, const std::string& format) {
    auto kind = codec_from(strategy);
    auto pi = parse_permutation(read_text(input));
    std::vector<std::size_t> a(pi.values().begin(), pi.values().end());
    auto t0 = std::chrono::steady_clock::now();
    sort_stats st;
    switch (kind) {
    case codec_kind::runs: st = sort_adaptive(std::span<std::size_t>(a)); break;
    case codec_kind::strict: st = sort_strict(std::span<std::size_t>(a)); break;
    case codec_kind::sus: st = sort_sus(std::span<std::size_t>(a)); break;
    }
    auto t1 = std::chrono::steady_clock::now();
    auto [m, h] = measure(pi, kind);
    double n = static_cast<double>(pi.size());
    double bound = 0;
    switch (kind) {
    case codec_kind::runs: bound = n * (3.0 + h); break;
    case codec_kind::strict: bound = std::max(0.0, n - 1) + static_cast<double>(m) * (3.0 + h); break;
    case codec_kind::sus: bound = n * (3.0 + 2.0 * h); break;
    }
    json out;
    out["strategy"] = strategy;
    out["n"] = pi.size();
    out["measure"] = m;
    out["H"] = h;
    out["comparisons"] = st.comparisons;
    out["bound"] = bound;
    out["ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (!output.empty()) {
        std::ofstream f(output);
        if (!f) throw io_error("cannot write " + output);
        f << format_permutation(permutation(std::move(a)));
    }
    emit(out, format);
    return 0;
}

// ---- bench ----

struct bench_opts {
    std::string generator = "k-runs", codec = "runs", format = "tsv";
    std::size_t k = 8, reps = 1, queries = 100000;
    std::vector<std::size_t> sizes{std::size_t{1} << 16};
    std::uint64_t seed = 1;
    bool compressed = false;
};

int cmd_bench(const bench_opts& o) {
    auto kind = codec_from(o.codec);
    gen::rng g(o.seed);
    json rows = json::array();
    for (auto n : o.sizes) {
        for (std::size_t rep = 0; rep < o.reps; ++rep) {
            permutation pi;
            try {
                pi = gen::by_name(o.generator, n, o.k, g);
            } catch (const std::invalid_argument& e) {
                throw usage_error(e.what());
            }
            auto c = any_codec::encode(pi, kind, o.compressed);
            auto [m, h] = measure(pi, kind);
            json r;
            r["generator"] = o.generator;
            r["k"] = o.k;
            r["n"] = n;
            r["rep"] = rep + 1;
            r["codec"] = o.codec;
            r["measure"] = m;
            r["H"] = h;
            add_space(r, c.size_in_bits(), n);
            double ns_apply = 0, ns_inverse = 0;
            if (n > 0 && o.queries > 0) {
                std::uniform_int_distribution<std::size_t> pick(1, n);
                std::vector<std::size_t> qs(o.queries);
                for (auto& q : qs) q = pick(g);
                std::size_t sink = 0;
                auto t0 = std::chrono::steady_clock::now();
                for (auto q : qs) sink += c.apply(q);
                auto t1 = std::chrono::steady_clock::now();
                for (auto q : qs) sink += c.inverse(q);
                auto t2 = std::chrono::steady_clock::now();
                if (sink == 0) std::cerr << "";
                ns_apply = std::chrono::duration<double, std::nano>(t1 - t0).count() / static_cast<double>(o.queries);
                ns_inverse = std::chrono::duration<double, std::nano>(t2 - t1).count() / static_cast<double>(o.queries);
            }
            r["ns_apply"] = ns_apply;
            r["ns_inverse"] = ns_inverse;
            rows.push_back(r);
        }
    }
    emit(rows, o.format);
    return 0;
}

// ---- invidx ----

int cmd_invidx_build(const std::string& input, const std::string& output, bool tokenize, bool compressed,
                     const std::string& format) {
    auto text = read_text(input);
    std::vector<std::string> vocab;
    auto ids = tokenize ? tokenize_words(text, vocab) : parse_ids(text);
    auto ix = inverted_index::build(ids, compressed);
    std::vector<std::size_t> freq;
    for (std::size_t w = 1; w <= ix.vocabulary(); ++w) freq.push_back(ix.list_length(w));
    json out;
    out["n"] = ix.size();
    out["vocabulary"] = ix.vocabulary();
    out["H0"] = entropy(freq);
    add_space(out, ix.size_in_bits(), ix.size());
    out["baseline_bits"] = ix.size() * ceil_log2(std::max<std::size_t>(ix.vocabulary(), 1));
    out["file_bytes"] = save_container(output, ix.to_container());
    if (tokenize) {
        std::ofstream v(output + ".vocab");
        if (!v) throw io_error("cannot write " + output + ".vocab");
        for (const auto& w : vocab) v << w << "\n";
    }
    emit(out, format);
    return 0;
}

struct invidx_query_opts {
    std::string index = "invidx.pcpm", format = "tsv";
    std::optional<std::size_t> word, occ, successor, access;
    std::vector<std::size_t> range, phrase;
};

int cmd_invidx_query(const invidx_query_opts& o) {
    auto ix = inverted_index::from_container(load_container(o.index));
    int chosen = (o.occ ? 1 : 0) + (o.successor ? 1 : 0) + (!o.range.empty() ? 1 : 0) + (o.access ? 1 : 0) +
                 (!o.phrase.empty() ? 1 : 0);
    if (chosen != 1) throw usage_error("give exactly one of --occ, --successor, --range, --access, --phrase");
    if ((o.occ || o.successor || !o.range.empty()) && !o.word) throw usage_error("--occ, --successor and --range need --word");
    std::vector<std::size_t> values;
    std::string op;
    if (o.occ) {
        op = "occurrence";
        values.push_back(ix.occurrence(*o.word, *o.occ));
    } else if (o.successor) {
        op = "successor";
        (void)ix.list_length(*o.word);
        if (auto s = ix.successor(*o.word, *o.successor)) values.push_back(*s);
    } else if (!o.range.empty()) {
        op = "range";
        values = ix.range(*o.word, o.range[0], o.range[1]);
    } else if (o.access) {
        op = "access";
        values.push_back(ix.access(*o.access));
    } else {
        op = "phrase";
        values = ix.phrase(o.phrase[0], o.phrase[1]);
    }
    if (o.format == "json") {
        json out;
        out["op"] = op;
        out["values"] = values;
        emit(out, o.format);
    } else {
        for (auto v : values) std::cout << v << "\n";
    }
    return 0;
}

// ---- csa ----

int cmd_csa_build(const std::string& input, const std::string& output, const std::string& codec, std::size_t sample,
                  const std::string& format) {
    auto kind = codec_from(codec);
    if (kind == codec_kind::sus) throw usage_error("csa supports --codec runs or strict");
    auto x = csa_index::build(read_text(input), sample, kind);
    json out;
    out["n"] = x.size();
    out["alphabet"] = x.alphabet_size();
    out["sample"] = x.sample_rate();
    out["codec"] = codec;
    add_space(out, x.size_in_bits(), x.size());
    out["file_bytes"] = save_container(output, x.to_container());
    emit(out, format);
    return 0;
}

int cmd_csa_query(const std::string& index, const std::string& op, const std::vector<std::string>& args,
                  const std::string& format) {
    auto x = csa_index::from_container(load_container(index));
    json out;
    out["op"] = op;
    if (op == "count") {
        out["count"] = x.count(args.at(0));
        if (format != "json") {
            std::cout << out["count"].get<std::size_t>() << "\n";
            return 0;
        }
    } else if (op == "locate") {
        auto occ = x.locate(args.at(0));
        if (format != "json") {
            for (auto p : occ) std::cout << p << "\n";
            return 0;
        }
        out["positions"] = occ;
    } else {
        auto text = x.extract_text(parse_index(args.at(0), "L"), parse_index(args.at(1), "R"));
        if (format != "json") {
            std::cout << text;
            if (!text.empty() && text.back() != '\n') std::cout << "\n";
            return 0;
        }
        out["text"] = text;
    }
    emit(out, format);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Compressed permutations: codecs, adaptive sorting, inverted index and CSA"};
    app.require_subcommand(1);
    std::string format = "tsv";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
    std::function<int()> action;

    auto* analyze = app.add_subcommand("analyze", "Runs, strict runs and shuffled upsequences of a permutation");
    std::string analyze_in;
    analyze->add_option("input", analyze_in, "Permutation file ('-' for stdin)")->required();
    analyze->callback([&] { action = [&] { return cmd_analyze(analyze_in, format); }; });

    auto* encode = app.add_subcommand("encode", "Encode a permutation (or function) into a container file");
    encode_opts eo;
    encode->add_option("input", eo.input, "Permutation file ('-' for stdin)")->required();
    encode->add_option("-o,--output", eo.output, "Container file")->required();
    encode->add_option("--codec", eo.codec, "runs | strict | sus | cycles | function");
    encode->add_option("--inner", eo.inner, "Inner codec for cycles/function: runs | strict | sus");
    encode->add_flag("--compressed", eo.compressed, "Use compressed node bitmaps");
    encode->callback([&] {
        eo.format = format;
        action = [&] { return cmd_encode(eo); };
    });

    auto* query = app.add_subcommand("query", "Query a container: apply I | inverse I | power I K | range I J");
    std::string query_path;
    std::vector<std::string> query_args;
    query->add_option("container", query_path, "Container file")->required();
    query->add_option("op", query_args, "Operation and its arguments")->required()->allow_extra_args();
    query->callback([&] { action = [&] { return cmd_query(query_path, query_args, format); }; });

    auto* sort = app.add_subcommand("sort", "Sort a permutation adaptively and report comparisons");
    std::string sort_in, sort_strategy = "runs", sort_out;
    sort->add_option("input", sort_in, "Permutation file ('-' for stdin)")->required();
    sort->add_option("--strategy", sort_strategy, "runs | strict | sus");
    sort->add_option("-o,--output", sort_out, "Write the sorted sequence here");
    sort->callback([&] { action = [&] { return cmd_sort(sort_in, sort_strategy, sort_out, format); }; });

    auto* bench = app.add_subcommand("bench", "Space and query time on generated permutations");
    bench_opts bo;
    bench->add_option("--generator", bo.generator, "identity | reverse | random | k-runs | k-riffle | strict");
    bench->add_option("--k", bo.k, "Runs / upsequences / strict runs for the generator");
    bench->add_option("--sizes", bo.sizes, "Values of n")->delimiter(',');
    bench->add_option("--reps", bo.reps, "Repetitions per size");
    bench->add_option("--queries", bo.queries, "Random queries timed per operation");
    bench->add_option("--seed", bo.seed, "Generator seed");
    bench->add_option("--codec", bo.codec, "runs | strict | sus");
    bench->add_flag("--compressed", bo.compressed, "Use compressed node bitmaps");
    bench->callback([&] {
        bo.format = format;
        action = [&] { return cmd_bench(bo); };
    });

    auto* invidx = app.add_subcommand("invidx", "Word-level inverted self-index");
    invidx->require_subcommand(1);
    auto* ib = invidx->add_subcommand("build", "Build from a file of word ids");
    std::string ib_in, ib_out = "invidx.pcpm";
    bool ib_tokenize = false, ib_compressed = false;
    ib->add_option("input", ib_in, "Whitespace-separated word ids ('-' for stdin)")->required();
    ib->add_option("-o,--output", ib_out, "Index file");
    ib->add_flag("--tokenize", ib_tokenize, "Treat input as words; ids by first appearance, vocabulary in OUTPUT.vocab");
    ib->add_flag("--compressed", ib_compressed, "Use compressed node bitmaps");
    ib->callback([&] { action = [&] { return cmd_invidx_build(ib_in, ib_out, ib_tokenize, ib_compressed, format); }; });
    auto* iq = invidx->add_subcommand("query", "Query an index");
    invidx_query_opts qo;
    iq->add_option("-i,--index", qo.index, "Index file");
    iq->add_option("--word", qo.word, "Word id");
    iq->add_option("--occ", qo.occ, "j-th occurrence of --word");
    iq->add_option("--successor", qo.successor, "First occurrence of --word after this position");
    iq->add_option("--range", qo.range, "J LEN: occurrences J..J+LEN-1 of --word")->expected(2);
    iq->add_option("--access", qo.access, "Word at this text position");
    iq->add_option("--phrase", qo.phrase, "W1 W2: positions of the phrase")->expected(2);
    iq->callback([&] {
        qo.format = format;
        action = [&] { return cmd_invidx_query(qo); };
    });

    auto* csa = app.add_subcommand("csa", "Compressed suffix array over raw bytes");
    csa->require_subcommand(1);
    auto* cb = csa->add_subcommand("build", "Build from a file");
    std::string cb_in, cb_out = "csa.pcpm", cb_codec = "runs";
    std::size_t cb_sample = 0;
    cb->add_option("input", cb_in, "Text file ('-' for stdin)")->required();
    cb->add_option("-o,--output", cb_out, "Index file");
    cb->add_option("--codec", cb_codec, "runs | strict");
    cb->add_option("--sample", cb_sample, "Sampling step s (0 = ceil(lg n))");
    cb->callback([&] { action = [&] { return cmd_csa_build(cb_in, cb_out, cb_codec, cb_sample, format); }; });
    std::string csa_index_path = "csa.pcpm";
    std::vector<std::string> csa_args;
    for (const char* op : {"count", "locate", "extract"}) {
        auto* sub = csa->add_subcommand(op, std::string(op) == "extract" ? "Text between positions L and R"
                                                                          : std::string(op) + " a pattern");
        sub->add_option("-i,--index", csa_index_path, "Index file");
        if (std::string(op) == "extract") sub->add_option("range", csa_args, "L R")->required()->expected(2);
        else sub->add_option("pattern", csa_args, "Pattern")->required()->expected(1);
        std::string name = op;
        sub->callback([&, name] { action = [&, name] { return cmd_csa_query(csa_index_path, name, csa_args, format); }; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    try {
        return action ? action() : 1;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const format_error& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return 3;
    } catch (const validation_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

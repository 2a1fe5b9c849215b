#include "wchaos/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wchaos {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON");
    return j;
}

SymTensor kernel_from(const json& j) {
    if (!j.contains("q") || !j.contains("dim") || !j.contains("entries"))
        throw ParseError("kernel: missing q/dim/entries");
    const int q = j.at("q").get<int>();
    const int d = j.at("dim").get<int>();
    if (q < 0 || d < 1) throw ParseError("kernel: bad q/dim");
    SymTensor f(q, d);
    for (const auto& e : j.at("entries")) {
        MultiIndex idx = e.at("idx").get<MultiIndex>();
        if (static_cast<int>(idx.size()) != q)
            throw ParseError("kernel: idx length != q");
        for (int& v : idx) --v;  // file is 1-based
        if (!is_sorted_index(idx, d))
            throw ParseError("kernel: idx must be sorted and within 1..dim");
        f.set(idx, e.at("val").get<double>());
    }
    return f;
}

json kernel_to(const SymTensor& f) {
    json entries = json::array();
    MultiIndex alpha(f.order(), 0);
    for (std::size_t flat = 0; flat < f.size(); ++flat) {
        if (f[flat] != 0.0) {
            MultiIndex one_based = alpha;
            for (int& v : one_based) ++v;
            entries.push_back({{"idx", one_based}, {"val", f[flat]}});
        }
        next_multiindex(alpha, f.dim());
    }
    return {{"q", f.order()}, {"dim", f.dim()}, {"entries", entries}};
}

}  // namespace

SymTensor kernel_from_json(const std::string& text) {
    return kernel_from(parse(text));
}

std::string kernel_to_json(const SymTensor& f) {
    return kernel_to(f).dump(2);
}

ChaosExpansion expansion_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.contains("dim") || !j.contains("kernels"))
        throw ParseError("expansion: missing dim/kernels");
    ChaosExpansion F(j.at("dim").get<int>(), j.value("constant", 0.0));
    for (const auto& k : j.at("kernels")) {
        const SymTensor f = kernel_from(k.at("tensor"));
        if (k.at("q").get<int>() != f.order())
            throw ParseError("expansion: kernel q disagrees with tensor order");
        if (f.dim() != F.dim()) throw ParseError("expansion: kernel dim mismatch");
        if (f.order() < 1) throw ParseError("expansion: kernel orders must be >= 1");
        F.add_kernel(f);
    }
    return F;
}

std::string expansion_to_json(const ChaosExpansion& F) {
    json kernels = json::array();
    for (const auto& [q, f] : F.kernels())
        kernels.push_back({{"q", q}, {"tensor", kernel_to(f)}});
    return json{{"dim", F.dim()}, {"constant", F.constant()}, {"kernels", kernels}}.dump(2);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ChaosExpansion load_input(const std::string& path) {
    const std::string text = read_file(path);
    const json j = parse(text);
    if (j.contains("entries")) return ChaosExpansion::integral(kernel_from(j));
    if (j.contains("kernels")) return expansion_from_json(text);
    throw ParseError("input is neither a kernel nor an expansion");
}

std::string estimator_to_jsonl(const EstimatorResult& r) {
    return json{{"s", r.s},
                {"estimate", r.estimate},
                {"stderr", r.stderr_},
                {"N", r.n_samples},
                {"seed", r.seed}}
        .dump();
}

}  // namespace wchaos

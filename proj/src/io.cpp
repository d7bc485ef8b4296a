#include "altramsey/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace altramsey::io {

using nlohmann::json;

namespace {

json parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw MalformedInput("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw MalformedInput(path.string() + ": " + e.what());
    }
}

uint64_t get_uint(const json& j, const char* field, uint64_t max) {
    if (!j.contains(field) || !j[field].is_number_unsigned())
        throw MalformedInput(std::string("field \"") + field +
                             "\" missing or not a non-negative integer");
    uint64_t v = j[field].get<uint64_t>();
    if (v > max)
        throw MalformedInput(std::string("field \"") + field +
                             "\" out of range");
    return v;
}

AltSpace instance_from_json(const json& j) {
    if (!j.is_object()) throw MalformedInput("instance: not a JSON object");
    const uint32_t p = static_cast<uint32_t>(get_uint(j, "p", (1u << 31) - 1));
    if (!is_prime(p))
        throw MalformedInput("instance: p = " + std::to_string(p) +
                             " is not prime");
    FieldCtx ctx(p);
    const size_t n = static_cast<size_t>(get_uint(j, "n", 100000));
    const size_t m = static_cast<size_t>(get_uint(j, "m", 100000));
    if (!j.contains("matrices") || !j["matrices"].is_array())
        throw MalformedInput("instance: \"matrices\" missing or not an array");
    const json& mats = j["matrices"];
    if (mats.size() != m)
        throw MalformedInput("instance: expected " + std::to_string(m) +
                             " matrices, found " + std::to_string(mats.size()));
    std::vector<Mat> gens;
    gens.reserve(m);
    for (size_t k = 0; k < m; ++k) {
        if (!mats[k].is_array())
            throw MalformedInput("instance: matrix " + std::to_string(k) +
                                 " is not an array");
        Mat a(ctx, n, n);
        for (const json& entry : mats[k]) {
            if (!entry.is_array() || entry.size() != 3 ||
                !entry[0].is_number_unsigned() ||
                !entry[1].is_number_unsigned() ||
                !entry[2].is_number_unsigned())
                throw MalformedInput("instance: matrix " + std::to_string(k) +
                                     ": entries must be [i, j, val]");
            const uint64_t i = entry[0].get<uint64_t>();
            const uint64_t jj = entry[1].get<uint64_t>();
            const uint64_t val = entry[2].get<uint64_t>();
            if (i < 1 || jj <= i || jj > n)
                throw MalformedInput(
                    "instance: matrix " + std::to_string(k) + ": need 1 <= i < j <= " +
                    std::to_string(n) + ", got i=" + std::to_string(i) +
                    " j=" + std::to_string(jj));
            if (val >= p)
                throw MalformedInput("instance: matrix " + std::to_string(k) +
                                     ": value " + std::to_string(val) +
                                     " not reduced mod " + std::to_string(p));
            a(i - 1, jj - 1) = Felt{static_cast<uint32_t>(val)};
            a(jj - 1, i - 1) = ctx.neg(Felt{static_cast<uint32_t>(val)});
        }
        gens.push_back(std::move(a));
    }
    return AltSpace(ctx, n, std::move(gens));
}

json instance_to_json(const AltSpace& a) {
    json mats = json::array();
    for (const Mat& g : a.gens()) {
        json entries = json::array();
        for (size_t i = 0; i < a.ambient_dim(); ++i)
            for (size_t j = i + 1; j < a.ambient_dim(); ++j)
                if (!g(i, j).is_zero())
                    entries.push_back({i + 1, j + 1, g(i, j).v});
        mats.push_back(std::move(entries));
    }
    return json{{"p", a.ctx().modulus()},
                {"n", a.ambient_dim()},
                {"m", a.gen_count()},
                {"matrices", std::move(mats)}};
}

}  // namespace

AltSpace load_instance(const std::filesystem::path& path) {
    try {
        return instance_from_json(parse_file(path));
    } catch (const NotAlternating& e) {
        throw MalformedInput(path.string() + ": " + e.what());
    }
}

AltSpace parse_instance(const std::string& text) {
    try {
        return instance_from_json(json::parse(text));
    } catch (const json::parse_error& e) {
        throw MalformedInput(e.what());
    }
}

void save_instance(const std::filesystem::path& path, const AltSpace& a) {
    std::ofstream out(path);
    if (!out) throw MalformedInput("cannot write " + path.string());
    out << instance_to_json(a).dump() << '\n';
}

std::string dump_instance(const AltSpace& a) {
    return instance_to_json(a).dump();
}

WitnessFile load_witness(const std::filesystem::path& path,
                         const FieldCtx& ctx) {
    json j = parse_file(path);
    if (!j.is_object()) throw MalformedInput("witness: not a JSON object");
    if (!j.contains("kind") || !j["kind"].is_string())
        throw MalformedInput("witness: \"kind\" missing");
    const std::string kind_s = j["kind"].get<std::string>();
    WitnessFile w;
    if (kind_s == "isotropic")
        w.kind = WitnessKind::Isotropic;
    else if (kind_s == "complete")
        w.kind = WitnessKind::Complete;
    else
        throw MalformedInput("witness: unknown kind \"" + kind_s + "\"");
    w.dim = static_cast<size_t>(get_uint(j, "dim", 100000));
    if (!j.contains("basis") || !j["basis"].is_array() ||
        j["basis"].size() != w.dim)
        throw MalformedInput("witness: \"basis\" must hold dim columns");
    size_t n = 0;
    if (w.dim > 0) {
        if (!j["basis"][0].is_array())
            throw MalformedInput("witness: basis columns must be arrays");
        n = j["basis"][0].size();
    }
    w.basis = Mat(ctx, n, w.dim);
    for (size_t c = 0; c < w.dim; ++c) {
        const json& col = j["basis"][c];
        if (!col.is_array() || col.size() != n)
            throw MalformedInput("witness: basis column " + std::to_string(c) +
                                 " has wrong length");
        for (size_t i = 0; i < n; ++i) {
            if (!col[i].is_number_unsigned() ||
                col[i].get<uint64_t>() >= ctx.modulus())
                throw MalformedInput("witness: entry not reduced mod p");
            w.basis(i, c) = Felt{col[i].get<uint32_t>()};
        }
    }
    w.verified = j.value("verified", false);
    w.measured_dim = j.value("measured_dim", size_t{0});
    return w;
}

void save_witness(const std::filesystem::path& path, const Witness& w,
                  const VerifyReport& report) {
    json cols = json::array();
    const Mat& b = w.basis.basis();
    for (size_t c = 0; c < b.cols(); ++c) {
        json col = json::array();
        for (size_t i = 0; i < b.rows(); ++i) col.push_back(b(i, c).v);
        cols.push_back(std::move(col));
    }
    json j{{"kind", w.kind == WitnessKind::Isotropic ? "isotropic" : "complete"},
           {"dim", w.basis.dim()},
           {"basis", std::move(cols)},
           {"verified", report.ok},
           {"measured_dim", report.measured_dim}};
    std::ofstream out(path);
    if (!out) throw MalformedInput("cannot write " + path.string());
    out << j.dump() << '\n';
}

Hypergraph load_hypergraph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open " + path.string());
    return Hypergraph::parse(in);
}

}  // namespace altramsey::io

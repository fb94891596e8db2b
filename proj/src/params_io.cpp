#include "subshift/params_io.hpp"

#include "subshift/error.hpp"

#include <fstream>
#include <sstream>

namespace subshift {

namespace {

BigInt big_from_json(const nlohmann::json& v) {
    if (v.is_number_unsigned()) return BigInt(std::to_string(v.get<std::uint64_t>()));
    if (v.is_number_integer()) return BigInt(std::to_string(v.get<std::int64_t>()));
    if (v.is_string()) {
        BigInt out;
        if (out.set_str(v.get<std::string>(), 10) != 0)
            throw Error(ErrorKind::invalid_argument, "not a decimal integer: " + v.get<std::string>());
        return out;
    }
    throw Error(ErrorKind::invalid_argument, "parameter entries must be integers or decimal strings");
}

nlohmann::json big_to_json(const BigInt& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

std::vector<BigInt> sequence(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array()) throw Error(ErrorKind::invalid_argument, std::string("missing array ") + key);
    std::vector<BigInt> out;
    for (const auto& v : j[key]) out.push_back(big_from_json(v));
    return out;
}

}  // namespace

SadicParams params_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("pi") || !j["pi"].is_object())
        throw Error(ErrorKind::invalid_argument, "parameter file needs a \"pi\" object");
    const auto& pi = j["pi"];
    if (!pi.contains("0") || !pi.contains("1") || !pi["0"].is_string() || !pi["1"].is_string())
        throw Error(ErrorKind::invalid_argument, "pi needs string images for \"0\" and \"1\"");
    auto mk = sequence(j, "mk");
    auto nk = sequence(j, "nk");
    if (mk.size() != nk.size()) throw Error(ErrorKind::invalid_argument, "mk and nk differ in length");
    if (j.contains("repeat")) {
        if (!j["repeat"].is_number_integer() || j["repeat"].get<long long>() < 1)
            throw Error(ErrorKind::invalid_argument, "repeat must be a positive integer");
        const auto r = j["repeat"].get<std::size_t>();
        const auto bm = mk, bn = nk;
        for (std::size_t i = 1; i < r; ++i) {
            mk.insert(mk.end(), bm.begin(), bm.end());
            nk.insert(nk.end(), bn.begin(), bn.end());
        }
    }
    return make_params(Word::parse(pi["0"].get<std::string>()), Word::parse(pi["1"].get<std::string>()), std::move(mk),
                       std::move(nk));
}

nlohmann::json params_to_json(const SadicParams& p) {
    nlohmann::json j;
    j["pi"] = {{"0", p.pi.image(0).str()}, {"1", p.pi.image(1).str()}};
    j["mk"] = nlohmann::json::array();
    j["nk"] = nlohmann::json::array();
    for (const auto& v : p.mk) j["mk"].push_back(big_to_json(v));
    for (const auto& v : p.nk) j["nk"].push_back(big_to_json(v));
    return j;
}

nlohmann::json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::invalid_argument, "cannot open " + path.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::invalid_argument, path.string() + ": " + e.what());
    }
}

SadicParams load_params(const std::filesystem::path& path) { return params_from_json(read_json(path)); }

bool is_factor_data(const nlohmann::json& j) { return j.is_object() && j.contains("factors"); }

std::vector<Word> factors_from_json(const nlohmann::json& j) {
    if (!is_factor_data(j) || !j["factors"].is_array()) throw Error(ErrorKind::invalid_argument, "expected a \"factors\" array");
    std::vector<Word> out;
    for (const auto& f : j["factors"]) {
        if (!f.is_string()) throw Error(ErrorKind::invalid_argument, "factors must be strings");
        out.push_back(Word::parse(f.get<std::string>()));
    }
    return out;
}

Word read_symbols(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::invalid_argument, "cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    const auto b = text.find_first_not_of(" \t\r\n");
    const auto e = text.find_last_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    text = text.substr(b, e - b + 1);
    if (text.find_first_of(" \t\r\n") != std::string::npos)
        throw Error(ErrorKind::invalid_argument, "symbol file contains interior whitespace");
    return Word::parse(text);
}

}  // namespace subshift

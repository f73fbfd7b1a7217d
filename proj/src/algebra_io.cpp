#include "leibniz/algebra_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace leibniz {

namespace {

using json = nlohmann::ordered_json;

bool is_zero_vector(const std::vector<Scalar>& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x == 0; });
}

Scalar scalar_from_json(const json& j, const Field& F, const std::string& where) {
    if (j.is_string())
        return F.parse(j.get<std::string>());
    if (j.is_number_integer()) {
        std::ostringstream text;
        text << j;
        return F.parse(text.str());
    }
    throw InputError(where + ": scalar entries must be integers or \"a/b\" strings");
}

json scalar_to_json(const Scalar& x, const Field& F) {
    if (F.kind() == Field::Kind::Prime)
        return json(x.get_num().get_ui());
    return json(F.format(x));
}

std::size_t index_from_json(const json& j, std::size_t dim, const std::string& where) {
    if (!j.is_number_integer())
        throw InputError(where + ": basis index must be an integer");
    long long raw = j.get<long long>();
    if (raw < 1 || static_cast<std::size_t>(raw) > dim)
        throw InputError(where + ": basis index " + std::to_string(raw) +
                         " outside 1.." + std::to_string(dim));
    return static_cast<std::size_t>(raw) - 1;
}

} // namespace

json algebra_to_json(const LeibnizAlgebra& L) {
    const std::size_t n = L.dim();
    json j = json::object();
    if (!L.name().empty())
        j["name"] = L.name();
    j["field"] = field_to_json(L.field());
    j["dim"] = n;
    json products = json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<Scalar> v = L.product_basis(i, k);
            if (is_zero_vector(v))
                continue;
            json value = json::array();
            for (const Scalar& x : v)
                value.push_back(scalar_to_json(x, L.field()));
            products.push_back({{"left", i + 1}, {"right", k + 1}, {"value", value}});
        }
    j["products"] = products;
    return j;
}

LeibnizAlgebra algebra_from_json(const json& j) {
    if (!j.is_object())
        throw InputError("algebra file: top level must be a JSON object");
    if (!j.contains("field"))
        throw InputError("algebra file: missing \"field\"");
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw InputError("algebra file: missing integer \"dim\"");
    long long rawdim = j["dim"].get<long long>();
    if (rawdim < 0)
        throw InputError("algebra file: \"dim\" must be nonnegative");
    const std::size_t n = static_cast<std::size_t>(rawdim);
    Field F = field_from_json(j["field"]);

    std::string name;
    if (j.contains("name")) {
        if (!j["name"].is_string())
            throw InputError("algebra file: \"name\" must be a string");
        name = j["name"].get<std::string>();
    }
    if (j.contains("basis")) {
        const json& basis = j["basis"];
        if (!basis.is_array() || basis.size() != n)
            throw InputError("algebra file: \"basis\" must list exactly dim labels");
        for (const json& label : basis)
            if (!label.is_string())
                throw InputError("algebra file: basis labels must be strings");
    }

    LeibnizAlgebra L(n, F, name);
    if (!j.contains("products"))
        return L;
    const json& products = j["products"];
    if (!products.is_array())
        throw InputError("algebra file: \"products\" must be an array");
    std::vector<char> seen(n * n, 0);
    for (std::size_t entry = 0; entry < products.size(); ++entry) {
        const std::string where = "products[" + std::to_string(entry) + "]";
        const json& p = products[entry];
        if (!p.is_object() || !p.contains("left") || !p.contains("right") || !p.contains("value"))
            throw InputError(where + ": expected {left, right, value}");
        std::size_t i = index_from_json(p["left"], n, where + ".left");
        std::size_t k = index_from_json(p["right"], n, where + ".right");
        if (seen[i * n + k])
            throw InputError(where + ": duplicate product (" + std::to_string(i + 1) + "," +
                             std::to_string(k + 1) + ")");
        seen[i * n + k] = 1;
        const json& value = p["value"];
        if (!value.is_array() || value.size() != n)
            throw InputError(where + ".value: expected an array of dim scalars");
        std::vector<Scalar> v(n);
        for (std::size_t c = 0; c < n; ++c)
            v[c] = scalar_from_json(value[c], F, where + ".value");
        L.set_product(i, k, v);
    }
    return L;
}

void write_algebra_file(const LeibnizAlgebra& L, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot open '" + path + "' for writing");
    out << algebra_to_json(L).dump(2) << "\n";
    if (!out)
        throw InputError("failed writing '" + path + "'");
}

LeibnizAlgebra read_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON in '" + path + "': " + e.what());
    }
    return algebra_from_json(j);
}

json field_to_json(const Field& F) {
    if (F.kind() == Field::Kind::Rationals)
        return json("Q");
    return json{{"GF", F.characteristic()}};
}

Field field_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "Q")
            return Field::rationals();
        throw InputError("field: unknown descriptor \"" + j.get<std::string>() + "\"");
    }
    if (j.is_object() && j.contains("GF") && j["GF"].is_number_integer()) {
        long long p = j["GF"].get<long long>();
        if (p < 2)
            throw InputError("field: GF characteristic must be at least 2");
        return Field::prime(static_cast<std::uint64_t>(p));
    }
    throw InputError("field: expected \"Q\" or {\"GF\": p}");
}

Field parse_field_flag(const std::string& text) {
    if (text == "Q" || text == "q")
        return Field::rationals();
    std::string body;
    if (text.rfind("GF:", 0) == 0)
        body = text.substr(3);
    else if (text.rfind("GF(", 0) == 0 && text.back() == ')')
        body = text.substr(3, text.size() - 4);
    else
        throw InputError("field flag: expected Q or GF:p, got '" + text + "'");
    if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("field flag: bad characteristic '" + body + "'");
    unsigned long long p = 0;
    try {
        p = std::stoull(body);
    } catch (const std::exception&) {
        throw InputError("field flag: bad characteristic '" + body + "'");
    }
    return Field::prime(p);
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string hex(16, '0');
    for (int i = 15; i >= 0; --i) {
        hex[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return hex;
}

std::string algebra_digest(const LeibnizAlgebra& L) {
    return "fnv1a:" + fnv1a_hex(algebra_to_json(L).dump());
}

} // namespace leibniz

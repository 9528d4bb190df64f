#include "holescope/certificate.hpp"

namespace holescope {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* name)
{
    if (!j.is_object() || !j.contains(name))
        throw SchemaError(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

int read_int(const json& j, const char* what)
{
    if (!j.is_number_integer())
        throw SchemaError(std::string(what) + " must be an integer");
    return j.get<int>();
}

VertexSeq read_seq(const json& j, const char* what)
{
    if (!j.is_array())
        throw SchemaError(std::string(what) + " must be an array of vertex ids");
    VertexSeq out;
    for (const auto& v : j)
        out.push_back(read_int(v, what));
    return out;
}

VertexSet read_set(const json& j, const char* what) { return make_set(read_seq(j, what)); }

Levels read_levels(const json& j, const char* what)
{
    if (!j.is_array())
        throw SchemaError(std::string(what) + " must be an array of vertex arrays");
    Levels out;
    for (const auto& level : j)
        out.push_back(read_set(level, what));
    return out;
}

Shower read_shower(const json& j)
{
    return {read_levels(field(j, "levels"), "levels"), read_int(field(j, "drain"), "drain")};
}

json write_shower(const Shower& s, json out)
{
    out["levels"] = s.levels;
    out["drain"] = s.drain;
    return out;
}

// Maps are arrays of [row, column, vertex] triples.
std::vector<VertexSeq> read_map(const json& j, int rows, int width, const char* what)
{
    if (!j.is_array())
        throw SchemaError(std::string(what) + " must be an array of [row, column, vertex] triples");
    std::vector<VertexSeq> out(rows, VertexSeq(width, -1));
    for (const auto& triple : j) {
        if (!triple.is_array() || triple.size() != 3)
            throw SchemaError(std::string(what) + " entries must be triples");
        int r = read_int(triple[0], what), c = read_int(triple[1], what), v = read_int(triple[2], what);
        if (r < 0 || r >= rows || c < 0 || c >= width)
            throw SchemaError(std::string(what) + " index out of range");
        out[r][c] = v;
    }
    return out;
}

json write_map(const std::vector<VertexSeq>& map)
{
    json out = json::array();
    for (std::size_t r = 0; r < map.size(); ++r)
        for (std::size_t c = 0; c < map[r].size(); ++c)
            if (map[r][c] >= 0)
                out.push_back({r, c, map[r][c]});
    return out;
}

Stability read_stability(const json& j)
{
    if (!j.contains("stable"))
        return Stability::none();
    const auto& s = j.at("stable");
    if (s.is_string() && s.get<std::string>() == "all")
        return Stability::full();
    return Stability::top(read_int(s, "stable"));
}

struct ToJson {
    json operator()(const Levelling& l) const { return {{"kind", "levelling"}, {"levels", l.levels}}; }

    json operator()(const ShowerCert& s) const
    {
        json out = write_shower(s.shower, {{"kind", "shower"}});
        if (s.stability.mode == Stability::Mode::full)
            out["stable"] = "all";
        else if (s.stability.mode == Stability::Mode::top)
            out["stable"] = s.stability.lambda;
        return out;
    }

    json operator()(const TrellisEmbedding& t) const
    {
        json out{{"kind", "trellis"}, {"x", t.x},           {"extended", t.extended},
                 {"a", t.a},          {"b", t.b},           {"a_map", write_map(t.a_map)},
                 {"b_map", write_map(t.b_map)}};
        if (t.extended)
            out["c0"] = t.c0;
        return out;
    }

    json operator()(const MulticoverCert& m) const
    {
        json covers = json::array();
        for (const auto& c : m.covers)
            covers.push_back({{"x", c.x}, {"n", c.n}});
        return {{"kind", "multicover"}, {"covers", covers}, {"base", m.base}, {"stable", m.stable}};
    }

    json operator()(const Cable& c) const
    {
        json z = json::array();
        for (const auto& [key, set] : c.z)
            z.push_back({key.first, key.second, set});
        return {{"kind", "cable"}, {"x", c.x}, {"n", c.n}, {"z", z}, {"y", c.y}, {"base", c.base}};
    }

    json operator()(const WUBend& b) const
    {
        return {{"kind", "wubend"},
                {"levels", b.levels},
                {"u", b.u_path},
                {"bend", b.kind == WUBend::Kind::u_bend ? "u" : "w"}};
    }

    json operator()(const SprinklerCert& s) const { return write_shower(s.shower, {{"kind", "sprinkler"}, {"nu", s.nu}}); }

    json operator()(const WandCert& w) const
    {
        json out = write_shower(w.shower, {{"kind", "wand"}, {"wand", w.wand.sets}});
        if (w.mat)
            out["mat"] = *w.mat;
        return out;
    }

    json operator()(const RecirculatorCert& r) const
    {
        return write_shower(r.shower, {{"kind", "recirculator"}, {"path", r.path}});
    }
};

Certificate parse(const json& j)
{
    const auto& kind_field = field(j, "kind");
    if (!kind_field.is_string())
        throw SchemaError("kind must be a string");
    const std::string kind = kind_field.get<std::string>();

    if (kind == "levelling")
        return Levelling{read_levels(field(j, "levels"), "levels")};
    if (kind == "shower")
        return ShowerCert{read_shower(j), read_stability(j)};
    if (kind == "trellis") {
        TrellisEmbedding t;
        t.x = read_seq(field(j, "x"), "x");
        const auto& ext = field(j, "extended");
        if (!ext.is_boolean())
            throw SchemaError("extended must be a boolean");
        t.extended = ext.get<bool>();
        t.a = read_seq(field(j, "a"), "a");
        t.b = read_seq(field(j, "b"), "b");
        if (t.a.empty() || t.a.size() != t.b.size())
            throw SchemaError("a and b must have equal nonzero length t+1");
        const int width = static_cast<int>(t.a.size());
        t.a_map = read_map(field(j, "a_map"), t.rows(), width, "a_map");
        t.b_map = read_map(field(j, "b_map"), t.rows(), width, "b_map");
        if (t.extended)
            t.c0 = read_int(field(j, "c0"), "c0");
        const int first = t.first_column();
        for (int r = 0; r < t.rows(); ++r)
            for (int c = first; c < width; ++c)
                if (t.a_map[r][c] < 0 || t.b_map[r][c] < 0)
                    throw SchemaError("trellis maps are incomplete at row " + std::to_string(r) + ", column " +
                                      std::to_string(c));
        return t;
    }
    if (kind == "multicover") {
        MulticoverCert m;
        const auto& covers = field(j, "covers");
        if (!covers.is_array())
            throw SchemaError("covers must be an array");
        for (const auto& c : covers)
            m.covers.push_back({read_int(field(c, "x"), "x"), read_set(field(c, "n"), "n")});
        m.base = read_set(field(j, "base"), "base");
        if (j.contains("stable")) {
            if (!j.at("stable").is_boolean())
                throw SchemaError("stable must be a boolean");
            m.stable = j.at("stable").get<bool>();
        }
        return m;
    }
    if (kind == "cable") {
        Cable c;
        c.x = read_seq(field(j, "x"), "x");
        c.n = read_levels(field(j, "n"), "n");
        c.y = read_levels(field(j, "y"), "y");
        c.base = read_set(field(j, "base"), "base");
        const auto& z = field(j, "z");
        if (!z.is_array())
            throw SchemaError("z must be an array of [i, j, vertices] triples");
        for (const auto& triple : z) {
            if (!triple.is_array() || triple.size() != 3)
                throw SchemaError("z entries must be triples");
            c.z[{read_int(triple[0], "z"), read_int(triple[1], "z")}] = read_set(triple[2], "z");
        }
        return c;
    }
    if (kind == "wubend") {
        WUBend b;
        b.levels = read_levels(field(j, "levels"), "levels");
        b.u_path = read_seq(field(j, "u"), "u");
        const auto& bend = field(j, "bend");
        if (bend == "u")
            b.kind = WUBend::Kind::u_bend;
        else if (bend != "w")
            throw SchemaError("bend must be \"w\" or \"u\"");
        return b;
    }
    if (kind == "sprinkler")
        return SprinklerCert{read_shower(j), read_int(field(j, "nu"), "nu")};
    if (kind == "wand") {
        WandCert w{read_shower(j), Wand{read_levels(field(j, "wand"), "wand")}, std::nullopt};
        if (j.contains("mat"))
            w.mat = read_set(j.at("mat"), "mat");
        return w;
    }
    if (kind == "recirculator")
        return RecirculatorCert{read_shower(j), read_seq(field(j, "path"), "path")};
    throw SchemaError("unknown certificate kind \"" + kind + "\"");
}

struct Verify {
    const Graph& g;

    json base(const Violations& vs) const { return {{"valid", vs.empty()}, {"violations", violations_json(vs)}}; }

    json operator()(const Levelling& l) const { return base(verify_levelling(g, l)); }

    json operator()(const ShowerCert& s) const
    {
        json out = base(verify_shower(g, s.shower, s.stability));
        out["warnings"] = shower_warnings(g, s.shower);
        return out;
    }

    json operator()(const TrellisEmbedding& t) const { return base(verify_trellis(g, t)); }
    json operator()(const MulticoverCert& m) const { return base(verify_multicover(g, m)); }

    json operator()(const Cable& c) const
    {
        auto result = classify_cable(g, c);
        json out = base(result.violations);
        json types = json::array();
        for (const auto& [key, type] : result.pair_types)
            types.push_back({key.first, key.second, type});
        out["pair_types"] = types;
        return out;
    }

    json operator()(const WUBend& b) const
    {
        auto report = verify_wubend(g, b);
        json out = base(report.violations);
        out["size"] = report.size ? json(*report.size) : json(nullptr);
        return out;
    }

    json operator()(const SprinklerCert& s) const { return base(sprinkler_violations(g, s.shower, s.nu)); }

    json operator()(const WandCert& w) const
    {
        Violations vs = verify_shower(g, w.shower);
        auto more = wand_violations(g, w.shower, w.wand);
        vs.insert(vs.end(), more.begin(), more.end());
        json out = base(vs);
        if (w.mat && vs.empty())
            out["shadow"] = wand_shadow(g, w.shower, w.wand, *w.mat);
        return out;
    }

    json operator()(const RecirculatorCert& r) const
    {
        Violations vs = verify_shower(g, r.shower);
        if (!verify_recirculator(g, r.shower, r.path))
            vs.push_back({"not-recirculator", r.path, "path is not induced or touches the shower"});
        return base(vs);
    }
};

}  // namespace

std::string certificate_kind(const Certificate& c) { return std::visit(ToJson{}, c).at("kind").get<std::string>(); }

json to_json(const Certificate& c) { return std::visit(ToJson{}, c); }

Certificate certificate_from_json(const json& j)
{
    try {
        return parse(j);
    }
    catch (const json::exception& e) {
        throw SchemaError(e.what());
    }
}

Certificate certificate_from_json(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    }
    catch (const json::exception& e) {
        throw SchemaError(e.what());
    }
    return certificate_from_json(j);
}

json violations_json(const Violations& vs)
{
    json out = json::array();
    for (const auto& v : vs)
        out.push_back({{"rule", v.rule}, {"witnesses", v.witnesses}, {"detail", v.detail}});
    return out;
}

json verify_certificate(const Graph& g, const Certificate& c)
{
    json out{{"kind", certificate_kind(c)}};
    out.update(std::visit(Verify{g}, c));
    return out;
}

}  // namespace holescope

#include "gwpt/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gwpt/error.hpp"
#include "gwpt/fixtures.hpp"

namespace gwpt {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

const std::set<std::string> kCheckKinds = {"local-correspondence", "x-reduction",  "y-reduction",
                                           "ratio",                "key-equality", "main-theorem",
                                           "trivial-splittings",   "assemble",     "ktilde-valid",
                                           "bar-identity",         "bar-diagonal"};

// A json value together with its location, for error messages.
struct Node {
    const json& j;
    std::string path;

    [[noreturn]] void fail(const std::string& msg) const { throw ScenarioError((path.empty() ? "/" : path) + ": " + msg); }

    bool has(const std::string& key) const { return j.is_object() && j.contains(key); }

    Node at(const std::string& key) const
    {
        if (!j.is_object()) {
            fail("expected an object");
        }
        auto it = j.find(key);
        if (it == j.end()) {
            fail("missing key '" + key + "'");
        }
        return {*it, path + "/" + key};
    }

    Node operator[](std::size_t i) const { return {j.at(i), path + "/" + std::to_string(i)}; }

    void only(std::initializer_list<const char*> keys) const
    {
        if (!j.is_object()) {
            fail("expected an object");
        }
        for (const auto& [k, v] : j.items()) {
            if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; })) {
                fail("unknown key '" + k + "'");
            }
        }
    }

    std::size_t size() const
    {
        if (!j.is_array()) {
            fail("expected an array");
        }
        return j.size();
    }

    std::int64_t integer() const
    {
        if (!j.is_number_integer()) {
            fail("expected an integer");
        }
        return j.get<std::int64_t>();
    }

    int small_int() const
    {
        const auto v = integer();
        if (v < -(1 << 24) || v > (1 << 24)) {
            fail("integer out of range");
        }
        return static_cast<int>(v);
    }

    std::string string() const
    {
        if (!j.is_string()) {
            fail("expected a string");
        }
        return j.get<std::string>();
    }

    bool boolean() const
    {
        if (!j.is_boolean()) {
            fail("expected true or false");
        }
        return j.get<bool>();
    }

    IntVector ints() const
    {
        IntVector out;
        for (std::size_t i = 0; i < size(); ++i) {
            out.push_back((*this)[i].integer());
        }
        return out;
    }

    IntMatrix matrix() const
    {
        IntMatrix out;
        for (std::size_t i = 0; i < size(); ++i) {
            out.push_back((*this)[i].ints());
        }
        return out;
    }

    std::vector<std::string> strings() const
    {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < size(); ++i) {
            out.push_back((*this)[i].string());
        }
        return out;
    }

    Rational rational() const
    {
        if (j.is_number_integer()) {
            return Rational(std::to_string(j.get<std::int64_t>()));
        }
        try {
            return parse_rational(string());
        } catch (const Error& e) {
            fail(e.what());
        }
    }
};

template <class F>
auto located(const Node& n, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const Error& e) {
        // already located
        if (e.what()[0] == '/') {
            throw;
        }
        n.fail(e.what());
    }
}

// --- reading ------------------------------------------------------------------

HalfInteger read_order(const Node& n)
{
    if (n.j.is_string() && n.j.get<std::string>() == "inf") {
        return HalfInteger::infinity();
    }
    if (n.j.is_number_integer()) {
        return HalfInteger(n.integer());
    }
    if (n.j.is_string()) {
        const auto r = n.rational();
        if (r.get_den() != 1 && r.get_den() != 2) {
            n.fail("orders live in (1/2)Z");
        }
        Rational twice = r * 2;
        twice.canonicalize();
        return HalfInteger::from_twice(twice.get_num().get_si());
    }
    n.fail("expected an integer, a half-integer string or \"inf\"");
}

TruncatedSeries read_series(const Node& n, Variable var)
{
    n.only({"terms", "order"});
    const auto order = n.has("order") ? read_order(n.at("order")) : HalfInteger::infinity();
    const auto terms = n.at("terms");
    std::vector<std::pair<HalfInteger, GaussianRational>> out;
    std::set<std::int64_t> seen;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto t = terms[i];
        if (t.size() != 4) {
            t.fail("a term is [exponent_numerator, exponent_denominator, re, im]");
        }
        const auto num = t[0].integer();
        const auto den = t[1].integer();
        if (den != 1 && den != 2) {
            t[1].fail("exponent denominator must be 1 or 2");
        }
        const auto twice = den == 1 ? 2 * num : num;
        if (!seen.insert(twice).second) {
            t.fail("repeated exponent");
        }
        out.emplace_back(HalfInteger::from_twice(twice), GaussianRational(t[2].rational(), t[3].rational()));
    }
    return located(n, [&] { return TruncatedSeries::from_terms(var, out, order); });
}

CurveClassLattice read_lattice(const Node& n)
{
    n.only({"rank", "degree_weights"});
    const auto w = n.at("degree_weights").ints();
    if (n.at("rank").integer() != static_cast<std::int64_t>(w.size())) {
        n.fail("rank differs from the number of degree weights");
    }
    return located(n, [&] { return CurveClassLattice(w); });
}

MapKind read_kind(const Node& n)
{
    const auto s = n.string();
    for (auto k : {MapKind::pushforward, MapKind::gysin, MapKind::inclusion}) {
        if (s == to_string(k)) {
            return k;
        }
    }
    n.fail("unknown map kind '" + s + "'");
}

LatticeMap read_map(const Node& n, std::size_t source, std::size_t target)
{
    n.only({"kind", "matrix", "image_functionals"});
    const auto kind = read_kind(n.at("kind"));
    const auto m = n.at("matrix").matrix();
    IntMatrix f;
    if (n.has("image_functionals")) {
        f = n.at("image_functionals").matrix();
    }
    return located(n, [&] { return LatticeMap(kind, source, target, m, f); });
}

EffectiveClass read_class(const Node& n)
{
    return located(n, [&] { return EffectiveClass(n.ints()); });
}

Insertion read_insertion(const Node& n)
{
    n.only({"descendant", "class", "degree", "vanishes_on"});
    Insertion ins;
    ins.descendant = n.at("descendant").small_int();
    ins.class_label = n.at("class").string();
    ins.class_degree = n.at("degree").small_int();
    if (n.has("vanishes_on")) {
        for (const auto& c : n.at("vanishes_on").strings()) {
            ins.vanishes_on.insert(c);
        }
    }
    located(n, [&] { ins.validate(); });
    return ins;
}

CohBasis read_basis(const Node& n)
{
    n.only({"labels", "degrees", "pairing", "duality"});
    CohBasis b;
    b.labels = n.at("labels").strings();
    for (auto d : n.at("degrees").ints()) {
        b.degrees.push_back(static_cast<int>(d));
    }
    const auto p = n.at("pairing");
    for (std::size_t i = 0; i < p.size(); ++i) {
        std::vector<Rational> row;
        for (std::size_t k = 0; k < p[i].size(); ++k) {
            row.push_back(p[i][k].rational());
        }
        b.pairing.push_back(std::move(row));
    }
    for (auto d : n.at("duality").ints()) {
        if (d < 0) {
            n.at("duality").fail("negative index");
        }
        b.duality.push_back(static_cast<std::size_t>(d));
    }
    return b;
}

std::optional<IntVector> read_optional_ints(const Node& n, const std::string& key)
{
    if (!n.has(key)) {
        return std::nullopt;
    }
    return n.at(key).ints();
}

DegenerationScenario read_degeneration(const Node& n, const std::map<std::string, InsertionList>& sets,
                                       const Orders& orders, std::string& insertion_set)
{
    n.only({"name", "total", "components", "divisors", "fiber", "insertions"});
    DegenerationScenario s;
    s.name = n.at("name").string();
    s.total = read_lattice(n.at("total"));
    const auto comps = n.at("components");
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto c = comps[i];
        c.only({"name", "lattice", "c1", "inclusion", "dimension_filter", "local_curve_generator"});
        ComponentGeometry g;
        g.name = c.at("name").string();
        g.lattice = read_lattice(c.at("lattice"));
        g.c1 = read_optional_ints(c, "c1");
        g.inclusion = read_map(c.at("inclusion"), g.lattice.rank(), s.total.rank());
        g.dimension_filter = c.has("dimension_filter") && c.at("dimension_filter").boolean();
        if (c.has("local_curve_generator")) {
            const auto v = c.at("local_curve_generator").integer();
            if (v < 0) {
                c.at("local_curve_generator").fail("negative generator index");
            }
            g.local_curve_generator = static_cast<std::size_t>(v);
        }
        s.components.push_back(std::move(g));
    }
    const auto divs = n.at("divisors");
    for (std::size_t i = 0; i < divs.size(); ++i) {
        const auto d = divs[i];
        d.only({"name", "component", "basis", "pairing_main", "pairing_side"});
        DivisorData dd;
        dd.name = d.at("name").string();
        const auto comp = d.at("component").integer();
        if (comp < 1) {
            d.at("component").fail("divisors join M_0 with a component of index >= 1");
        }
        dd.component = static_cast<std::size_t>(comp);
        dd.basis = read_basis(d.at("basis"));
        dd.pairing_main = d.at("pairing_main").ints();
        dd.pairing_side = d.at("pairing_side").ints();
        s.divisors.push_back(std::move(dd));
    }
    if (n.has("fiber")) {
        const auto f = n.at("fiber");
        f.only({"lattice", "c1", "inclusion"});
        FiberData fd;
        fd.lattice = read_lattice(f.at("lattice"));
        fd.c1 = read_optional_ints(f, "c1");
        fd.inclusion = read_map(f.at("inclusion"), fd.lattice.rank(), s.total.rank());
        s.fiber = std::move(fd);
    }
    insertion_set = n.has("insertions") ? n.at("insertions").string() : "";
    if (!insertion_set.empty()) {
        auto it = sets.find(insertion_set);
        if (it == sets.end()) {
            n.at("insertions").fail("unknown insertion set '" + insertion_set + "'");
        }
        s.insertions = it->second;
    }
    s.orders = orders;
    return s;
}

std::shared_ptr<RelativeInvariantTable> read_table(const Node& n, Side side)
{
    auto t = std::make_shared<RelativeInvariantTable>();
    t->side = side;
    for (std::size_t i = 0; i < n.size(); ++i) {
        const auto e = n[i];
        e.only({"component", "class", "insertions", "boundary", "series"});
        TableKey key;
        key.component = e.at("component").string();
        key.cls = read_class(e.at("class"));
        key.insertions = e.has("insertions") ? e.at("insertions").string() : "";
        const auto b = e.at("boundary");
        for (std::size_t k = 0; k < b.size(); ++k) {
            std::vector<WeightedPart> parts;
            for (std::size_t m = 0; m < b[k].size(); ++m) {
                const auto p = b[k][m];
                if (p.size() != 2) {
                    p.fail("a weighted part is [part, basis_index]");
                }
                const auto part = p[0].small_int();
                const auto idx = p[1].integer();
                if (part < 1 || idx < 0) {
                    p.fail("parts are positive and basis indices non-negative");
                }
                parts.push_back({part, static_cast<std::size_t>(idx)});
            }
            key.boundary.emplace_back(std::move(parts));
        }
        auto series = read_series(e.at("series"), variable_of(side));
        if (!t->entries.emplace(key, std::move(series)).second) {
            e.fail("duplicate entry " + key.str());
        }
    }
    return t;
}

ConifoldTransition read_transition(const Node& n, const std::map<std::string, InsertionList>& sets,
                                   const Orders& orders, std::string& x_set, std::string& y_set)
{
    n.only({"name", "lattices", "psi", "phi", "c1", "exceptional", "x_side", "y_side"});
    ConifoldTransition t;
    t.name = n.at("name").string();
    const auto l = n.at("lattices");
    l.only({"Y", "X", "Ytilde"});
    t.y_lattice = read_lattice(l.at("Y"));
    t.x_lattice = read_lattice(l.at("X"));
    t.ytilde_lattice = read_lattice(l.at("Ytilde"));
    t.psi = read_map(n.at("psi"), t.y_lattice.rank(), t.x_lattice.rank());
    t.phi = read_map(n.at("phi"), t.y_lattice.rank(), t.ytilde_lattice.rank());
    const auto c1 = n.at("c1");
    c1.only({"Y", "X", "Ytilde"});
    t.c1_y = c1.at("Y").ints();
    t.c1_x = c1.at("X").ints();
    t.c1_ytilde = c1.at("Ytilde").ints();
    const auto exc = n.at("exceptional");
    for (std::size_t i = 0; i < exc.size(); ++i) {
        t.exceptional.push_back(read_class(exc[i]));
    }
    t.x_side = read_degeneration(n.at("x_side"), sets, orders, x_set);
    t.y_side = read_degeneration(n.at("y_side"), sets, orders, y_set);
    return t;
}

IntPartition read_partition(const Node& n)
{
    std::vector<int> parts;
    for (auto p : n.ints()) {
        parts.push_back(static_cast<int>(p));
    }
    return located(n, [&] { return IntPartition(parts); });
}

KtildeData read_ktilde(const Node& n)
{
    n.only({"chern", "entries"});
    KtildeData k;
    const auto chern = n.at("chern").string();
    if (chern != "log" && chern != "tangent") {
        n.at("chern").fail("expected \"log\" or \"tangent\"");
    }
    k.chern.log = chern == "log";
    const auto es = n.at("entries");
    for (std::size_t i = 0; i < es.size(); ++i) {
        const auto e = es[i];
        e.only({"alpha", "alpha_hat", "terms"});
        const auto key = std::make_pair(read_partition(e.at("alpha")), read_partition(e.at("alpha_hat")));
        if (k.table.entries.count(key)) {
            e.fail("duplicate entry");
        }
        auto& poly = k.table.entries[key];
        const auto ts = e.at("terms");
        for (std::size_t m = 0; m < ts.size(); ++m) {
            const auto t = ts[m];
            t.only({"chern", "series"});
            const auto ex = t.at("chern").ints();
            if (ex.size() != 3 || std::any_of(ex.begin(), ex.end(), [](auto x) { return x < 0; })) {
                t.at("chern").fail("expected the exponents [e1, e2, e3] of c1^e1 c2^e2 c3^e3");
            }
            ChernMonomial mono{static_cast<int>(ex[0]), static_cast<int>(ex[1]), static_cast<int>(ex[2])};
            if (!poly.emplace(mono, read_series(t.at("series"), Variable::u)).second) {
                t.fail("repeated monomial");
            }
        }
    }
    return k;
}

std::optional<Side> read_side(const Node& n)
{
    const auto s = n.string();
    if (s == "gw") {
        return Side::gw;
    }
    if (s == "pt") {
        return Side::pt;
    }
    if (s == "both") {
        return std::nullopt;
    }
    n.fail("expected \"gw\", \"pt\" or \"both\"");
}

CheckSpec read_check(const Node& n)
{
    n.only({"name", "kind", "class", "classes", "insertions", "side", "degeneration", "degree", "expect"});
    CheckSpec c;
    c.kind = n.at("kind").string();
    if (!kCheckKinds.count(c.kind)) {
        n.at("kind").fail("unknown check kind '" + c.kind + "'");
    }
    c.name = n.has("name") ? n.at("name").string() : c.kind;
    if (n.has("class") && n.has("classes")) {
        n.fail("give either 'class' or 'classes'");
    }
    if (n.has("class")) {
        c.classes.push_back(read_class(n.at("class")));
    }
    if (n.has("classes")) {
        const auto cs = n.at("classes");
        for (std::size_t i = 0; i < cs.size(); ++i) {
            c.classes.push_back(read_class(cs[i]));
        }
    }
    c.insertions = n.has("insertions") ? n.at("insertions").string() : "";
    if (n.has("side")) {
        c.side = read_side(n.at("side"));
    }
    c.degeneration = n.has("degeneration") ? n.at("degeneration").string() : "";
    c.degree = n.has("degree") ? n.at("degree").small_int() : 0;
    if (n.has("expect")) {
        if (!c.side) {
            n.fail("'expect' needs a side");
        }
        c.expect = read_series(n.at("expect"), variable_of(*c.side));
    }
    return c;
}

// --- writing ------------------------------------------------------------------

std::string rational_text(const Rational& r) { return to_string(r); }

ojson order_json(HalfInteger h)
{
    if (h.is_infinite()) {
        return "inf";
    }
    if (h.is_integer()) {
        return h.as_integer();
    }
    return h.str();
}

ojson series_json(const TruncatedSeries& s)
{
    ojson terms = ojson::array();
    for (const auto& [twice, c] : s.terms()) {
        const bool whole = twice % 2 == 0;
        terms.push_back(
            ojson::array({whole ? twice / 2 : twice, whole ? 1 : 2, rational_text(c.re()), rational_text(c.im())}));
    }
    ojson out;
    out["terms"] = terms;
    out["order"] = order_json(s.order());
    return out;
}

ojson lattice_json(const CurveClassLattice& l)
{
    ojson out;
    out["rank"] = l.rank();
    out["degree_weights"] = l.degree_weights();
    return out;
}

ojson map_json(const LatticeMap& m)
{
    ojson out;
    out["kind"] = to_string(m.kind());
    out["matrix"] = m.matrix();
    if (!m.image_functionals().empty()) {
        out["image_functionals"] = m.image_functionals();
    }
    return out;
}

ojson insertion_json(const Insertion& i)
{
    ojson out;
    out["descendant"] = i.descendant;
    out["class"] = i.class_label;
    out["degree"] = i.class_degree;
    if (!i.vanishes_on.empty()) {
        out["vanishes_on"] = std::vector<std::string>(i.vanishes_on.begin(), i.vanishes_on.end());
    }
    return out;
}

ojson basis_json(const CohBasis& b)
{
    ojson out;
    out["labels"] = b.labels;
    out["degrees"] = b.degrees;
    ojson p = ojson::array();
    for (const auto& row : b.pairing) {
        ojson r = ojson::array();
        for (const auto& x : row) {
            r.push_back(rational_text(x));
        }
        p.push_back(r);
    }
    out["pairing"] = p;
    out["duality"] = b.duality;
    return out;
}

ojson degeneration_json(const DegenerationScenario& s, const std::string& insertion_set)
{
    ojson out;
    out["name"] = s.name;
    out["total"] = lattice_json(s.total);
    ojson comps = ojson::array();
    for (const auto& c : s.components) {
        ojson j;
        j["name"] = c.name;
        j["lattice"] = lattice_json(c.lattice);
        if (c.c1) {
            j["c1"] = *c.c1;
        }
        j["inclusion"] = map_json(c.inclusion);
        j["dimension_filter"] = c.dimension_filter;
        if (c.local_curve_generator) {
            j["local_curve_generator"] = *c.local_curve_generator;
        }
        comps.push_back(j);
    }
    out["components"] = comps;
    ojson divs = ojson::array();
    for (const auto& d : s.divisors) {
        ojson j;
        j["name"] = d.name;
        j["component"] = d.component;
        j["basis"] = basis_json(d.basis);
        j["pairing_main"] = d.pairing_main;
        j["pairing_side"] = d.pairing_side;
        divs.push_back(j);
    }
    out["divisors"] = divs;
    if (s.fiber) {
        ojson f;
        f["lattice"] = lattice_json(s.fiber->lattice);
        if (s.fiber->c1) {
            f["c1"] = *s.fiber->c1;
        }
        f["inclusion"] = map_json(s.fiber->inclusion);
        out["fiber"] = f;
    }
    if (!insertion_set.empty()) {
        out["insertions"] = insertion_set;
    }
    return out;
}

ojson table_json(const std::map<TableKey, TruncatedSeries>& entries)
{
    ojson out = ojson::array();
    for (const auto& [key, s] : entries) {
        ojson j;
        j["component"] = key.component;
        j["class"] = key.cls.coords();
        if (!key.insertions.empty()) {
            j["insertions"] = key.insertions;
        }
        ojson b = ojson::array();
        for (const auto& eta : key.boundary) {
            ojson parts = ojson::array();
            for (const auto& p : eta.pairs()) {
                parts.push_back(ojson::array({p.part, p.index}));
            }
            b.push_back(parts);
        }
        j["boundary"] = b;
        j["series"] = series_json(s);
        out.push_back(j);
    }
    return out;
}

std::string side_text(const std::optional<Side>& s) { return s ? to_string(*s) : "both"; }

ojson check_json(const CheckSpec& c)
{
    ojson out;
    out["name"] = c.name;
    out["kind"] = c.kind;
    if (!c.classes.empty()) {
        ojson cs = ojson::array();
        for (const auto& x : c.classes) {
            cs.push_back(x.coords());
        }
        out["classes"] = cs;
    }
    if (!c.insertions.empty()) {
        out["insertions"] = c.insertions;
    }
    if (c.side || c.kind == "ratio" || c.kind == "assemble") {
        out["side"] = side_text(c.side);
    }
    if (!c.degeneration.empty()) {
        out["degeneration"] = c.degeneration;
    }
    if (c.degree != 0) {
        out["degree"] = c.degree;
    }
    if (c.expect) {
        out["expect"] = series_json(*c.expect);
    }
    return out;
}

bool is_scalar_array(const ojson& j)
{
    return j.is_array() && std::all_of(j.begin(), j.end(), [](const ojson& x) { return x.is_primitive(); });
}

// Like dump(2), but arrays of scalars stay on one line.
void emit(std::ostringstream& os, const ojson& j, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
    if (j.is_object()) {
        if (j.empty()) {
            os << "{}";
            return;
        }
        os << "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) {
                os << ",\n";
            }
            first = false;
            os << inner << ojson(it.key()).dump() << ": ";
            emit(os, it.value(), indent + 2);
        }
        os << "\n" << pad << "}";
    } else if (j.is_array()) {
        if (is_scalar_array(j)) {
            os << j.dump();
            return;
        }
        os << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) {
                os << ",\n";
            }
            os << inner;
            emit(os, j[i], indent + 2);
        }
        os << "\n" << pad << "]";
    } else {
        os << j.dump();
    }
}

std::string insertion_set_name(const Scenario& s, const InsertionList& ins, const std::string& fallback)
{
    if (ins.empty()) {
        return "";
    }
    for (const auto& [name, list] : s.insertion_sets) {
        if (list == ins) {
            return name;
        }
    }
    return fallback;
}

void collect(std::map<TableKey, TruncatedSeries>& into, const RelativeInvariantTable* t)
{
    if (t) {
        for (const auto& [k, v] : t->entries) {
            into.insert_or_assign(k, v);
        }
    }
}

} // namespace

const InsertionList& Scenario::insertion_set(const std::string& n) const
{
    static const InsertionList empty;
    if (n.empty()) {
        return empty;
    }
    auto it = insertion_sets.find(n);
    if (it == insertion_sets.end()) {
        throw ScenarioError("scenario '" + name + "': unknown insertion set '" + n + "'");
    }
    return it->second;
}

Scenario Scenario::with_orders(const Orders& o) const
{
    auto s = *this;
    s.orders = o;
    if (s.transition) {
        s.transition = s.transition->with_orders(o);
    }
    if (s.degeneration) {
        s.degeneration->orders = o;
    }
    return s;
}

const DegenerationScenario& Scenario::degeneration_named(const std::string& which) const
{
    if ((which.empty() || which == "main") && degeneration) {
        return *degeneration;
    }
    if (transition && which == "x_side") {
        return transition->x_side;
    }
    if (transition && which == "y_side") {
        return transition->y_side;
    }
    throw ScenarioError("scenario '" + name + "': no degeneration '" + which + "'");
}

Scenario parse_scenario(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ScenarioError(std::string("/: not valid JSON: ") + e.what());
    }
    const Node root{doc, ""};
    root.only({"name", "orders", "insertion_sets", "transition", "degeneration", "tables", "ktilde", "checks"});
    Scenario s;
    s.name = root.at("name").string();
    const auto o = root.at("orders");
    o.only({"q_order", "u_order", "degree_bound"});
    s.orders = {o.at("q_order").small_int(), o.at("u_order").small_int(), o.at("degree_bound").small_int()};
    if (root.has("insertion_sets")) {
        const auto sets = root.at("insertion_sets");
        if (!sets.j.is_object()) {
            sets.fail("expected an object");
        }
        for (const auto& [name, v] : sets.j.items()) {
            const Node list{v, sets.path + "/" + name};
            InsertionList ins;
            for (std::size_t i = 0; i < list.size(); ++i) {
                ins.push_back(read_insertion(list[i]));
            }
            s.insertion_sets.emplace(name, std::move(ins));
        }
    }
    TableSet tables;
    if (root.has("tables")) {
        const auto t = root.at("tables");
        t.only({"gw", "pt"});
        tables.gw = read_table(t.at("gw"), Side::gw);
        tables.pt = read_table(t.at("pt"), Side::pt);
    } else {
        auto gw = std::make_shared<RelativeInvariantTable>();
        gw->side = Side::gw;
        auto pt = std::make_shared<RelativeInvariantTable>();
        pt->side = Side::pt;
        tables = {gw, pt};
    }
    std::string unused;
    if (root.has("transition")) {
        std::string x_set;
        std::string y_set;
        s.transition = read_transition(root.at("transition"), s.insertion_sets, s.orders, x_set, y_set);
        s.transition = s.transition->with_tables(tables);
    }
    if (root.has("degeneration")) {
        s.degeneration = read_degeneration(root.at("degeneration"), s.insertion_sets, s.orders, unused);
        s.degeneration->tables = tables;
    }
    if (root.has("ktilde")) {
        s.ktilde = read_ktilde(root.at("ktilde"));
    }
    if (root.has("checks")) {
        const auto cs = root.at("checks");
        for (std::size_t i = 0; i < cs.size(); ++i) {
            s.checks.push_back(read_check(cs[i]));
        }
    }
    return s;
}

Scenario load_scenario(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("cannot read '" + path.string() + "'");
    }
    return parse_scenario(buf.str());
}

std::vector<Diagnostic> validate_scenario(const Scenario& s)
{
    std::vector<Diagnostic> out;
    auto guard = [&](const std::string& where, auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            out.push_back({where, e.what()});
        }
    };
    if (s.orders.q_order < 0 || s.orders.u_order < 0 || s.orders.degree_bound < 0) {
        out.push_back({"/orders", "orders must be non-negative"});
    }
    for (const auto& [name, list] : s.insertion_sets) {
        guard("/insertion_sets/" + name, [&] {
            for (const auto& i : list) {
                i.validate();
            }
        });
    }
    if (s.transition) {
        guard("/transition", [&] { s.transition->validate(); });
    }
    if (s.degeneration) {
        guard("/degeneration", [&] { s.degeneration->validate(); });
    }
    if (s.ktilde) {
        for (const auto& v : validate_Ktilde(s.ktilde->table)) {
            out.push_back({"/ktilde", "entry " + v.alpha.str() + "," + v.hat.str() + ": " + v.what});
        }
    }
    std::set<std::string> names;
    for (std::size_t i = 0; i < s.checks.size(); ++i) {
        const auto& c = s.checks[i];
        const auto where = "/checks/" + std::to_string(i);
        if (!names.insert(c.name).second) {
            out.push_back({where, "duplicate check name '" + c.name + "'"});
        }
        guard(where, [&] {
            s.insertion_set(c.insertions);
            const bool on_transition = c.kind == "x-reduction" || c.kind == "y-reduction" || c.kind == "ratio" ||
                                       c.kind == "key-equality" || c.kind == "main-theorem";
            const bool on_ktilde = c.kind == "ktilde-valid" || c.kind == "bar-identity" || c.kind == "bar-diagonal";
            if (on_transition && !s.transition) {
                throw ScenarioError("check '" + c.name + "' needs a transition");
            }
            if (on_ktilde && !s.ktilde) {
                throw ScenarioError("check '" + c.name + "' needs a ktilde section");
            }
            std::size_t rank = 0;
            if (c.kind == "x-reduction" || c.kind == "main-theorem") {
                rank = s.transition->x_lattice.rank();
            } else if (c.kind == "y-reduction" || c.kind == "key-equality") {
                rank = s.transition->y_lattice.rank();
            } else if (c.kind == "trivial-splittings" || c.kind == "assemble") {
                rank = s.degeneration_named(c.degeneration).total.rank();
            }
            for (const auto& cls : c.classes) {
                if (cls.rank() != rank) {
                    throw ScenarioError("check '" + c.name + "': class " + cls.str() + " has the wrong rank");
                }
            }
            if (c.kind == "assemble" && (c.classes.size() != 1 || !c.side || !c.expect)) {
                throw ScenarioError("check '" + c.name + "': assemble needs one class, a side and an expected series");
            }
            if (c.kind == "local-correspondence" && c.degree < 1) {
                throw ScenarioError("check '" + c.name + "': degree must be >= 1");
            }
        });
    }
    return out;
}

std::string dump_scenario(const Scenario& s)
{
    ojson root;
    root["name"] = s.name;
    ojson o;
    o["q_order"] = s.orders.q_order;
    o["u_order"] = s.orders.u_order;
    o["degree_bound"] = s.orders.degree_bound;
    root["orders"] = o;
    ojson sets = ojson::object();
    for (const auto& [name, list] : s.insertion_sets) {
        ojson l = ojson::array();
        for (const auto& i : list) {
            l.push_back(insertion_json(i));
        }
        sets[name] = l;
    }
    root["insertion_sets"] = sets;
    std::map<TableKey, TruncatedSeries> gw;
    std::map<TableKey, TruncatedSeries> pt;
    if (s.transition) {
        const auto& t = *s.transition;
        ojson j;
        j["name"] = t.name;
        ojson l;
        l["Y"] = lattice_json(t.y_lattice);
        l["X"] = lattice_json(t.x_lattice);
        l["Ytilde"] = lattice_json(t.ytilde_lattice);
        j["lattices"] = l;
        j["psi"] = map_json(t.psi);
        j["phi"] = map_json(t.phi);
        ojson c1;
        c1["Y"] = t.c1_y;
        c1["X"] = t.c1_x;
        c1["Ytilde"] = t.c1_ytilde;
        j["c1"] = c1;
        ojson exc = ojson::array();
        for (const auto& c : t.exceptional) {
            exc.push_back(c.coords());
        }
        j["exceptional"] = exc;
        j["x_side"] = degeneration_json(t.x_side, insertion_set_name(s, t.x_side.insertions, "x_side"));
        j["y_side"] = degeneration_json(t.y_side, insertion_set_name(s, t.y_side.insertions, "y_side"));
        root["transition"] = j;
        for (const auto* d : {&t.x_side, &t.y_side}) {
            collect(gw, d->tables.gw.get());
            collect(pt, d->tables.pt.get());
        }
    }
    if (s.degeneration) {
        root["degeneration"] =
            degeneration_json(*s.degeneration, insertion_set_name(s, s.degeneration->insertions, "degeneration"));
        collect(gw, s.degeneration->tables.gw.get());
        collect(pt, s.degeneration->tables.pt.get());
    }
    if (s.transition || s.degeneration) {
        ojson t;
        t["gw"] = table_json(gw);
        t["pt"] = table_json(pt);
        root["tables"] = t;
    }
    if (s.ktilde) {
        ojson k;
        k["chern"] = s.ktilde->chern.log ? "log" : "tangent";
        ojson es = ojson::array();
        for (const auto& [key, poly] : s.ktilde->table.entries) {
            ojson e;
            e["alpha"] = key.first.parts();
            e["alpha_hat"] = key.second.parts();
            ojson ts = ojson::array();
            for (const auto& [m, series] : poly) {
                ojson t;
                t["chern"] = std::vector<int>{m.e1, m.e2, m.e3};
                t["series"] = series_json(series);
                ts.push_back(t);
            }
            e["terms"] = ts;
            es.push_back(e);
        }
        k["entries"] = es;
        root["ktilde"] = k;
    }
    ojson checks = ojson::array();
    for (const auto& c : s.checks) {
        checks.push_back(check_json(c));
    }
    root["checks"] = checks;
    std::ostringstream os;
    emit(os, root, 0);
    os << "\n";
    return os.str();
}

std::uint64_t fnv1a64(std::string_view data)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v)
{
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

// --- fixtures -----------------------------------------------------------------

Scenario conifold_toy_scenario(const Orders& o)
{
    Scenario s;
    s.name = "resolved-conifold-toy";
    s.orders = o;
    s.transition = make_conifold_toy(o);
    s.insertion_sets["divisor"] = {toy_divisor_insertion()};
    const auto add = [&](std::string kind, std::string ins = "") {
        CheckSpec c;
        c.name = ins.empty() ? kind : kind + "/" + ins;
        c.kind = std::move(kind);
        c.insertions = std::move(ins);
        s.checks.push_back(std::move(c));
    };
    for (int d = 1; d <= 3; ++d) {
        CheckSpec c;
        c.name = "local-correspondence/" + std::to_string(d);
        c.kind = "local-correspondence";
        c.degree = d;
        s.checks.push_back(c);
    }
    CheckSpec filter;
    filter.name = "trivial-splittings/x_side";
    filter.kind = "trivial-splittings";
    filter.degeneration = "x_side";
    s.checks.push_back(filter);
    add("x-reduction");
    add("y-reduction");
    add("ratio");
    add("key-equality");
    add("key-equality", "divisor");
    add("main-theorem");
    add("main-theorem", "divisor");
    return s;
}

Scenario synthetic_degeneration_scenario(const Orders& o, std::uint32_t seed)
{
    Scenario s;
    s.name = "synthetic-degeneration-" + std::to_string(seed);
    s.orders = o;
    s.degeneration = make_synthetic_degeneration(o, seed);
    s.insertion_sets["synthetic"] = s.degeneration->insertions;
    return s;
}

Scenario synthetic_ktilde_scenario(int max_size, std::uint32_t seed)
{
    Scenario s;
    s.name = "synthetic-ktilde-" + std::to_string(seed);
    s.orders = {0, 6, 0};
    s.ktilde = KtildeData{make_synthetic_ktilde(max_size, seed), ChernSubstitution{true}};
    CheckSpec v;
    v.name = v.kind = "ktilde-valid";
    CheckSpec id;
    id.name = id.kind = "bar-identity";
    id.degree = 4;
    CheckSpec diag;
    diag.name = diag.kind = "bar-diagonal";
    diag.degree = max_size;
    s.checks = {v, id, diag};
    return s;
}

} // namespace gwpt

#include "levi/json_io.hpp"

#include <sstream>

namespace levi {

Json field_to_json(const Field& f) {
    if (f.is_prime_field()) return Json{{"type", "gf"}, {"p", f.modulus()}};
    return Json{{"type", "rational"}};
}

Field field_from_json(const Json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "gf") return Field::gf(j.at("p").get<std::uint32_t>());
    if (type == "rational") return Field::rationals();
    throw Error("unknown field type: " + type);
}

Json scalar_to_json(const Scalar& s) {
    if (s.field().is_prime_field()) return Json(s.residue());
    return Json(s.str());
}

Scalar scalar_from_json(const Field& f, const Json& j) {
    if (j.is_number_integer()) return Scalar::of_int(f, j.get<long long>());
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    throw Error("scalar must be an integer or a fraction string");
}

Json monoid_to_json(const Monoid& m) {
    Json table = Json::array();
    for (int x = 0; x < m.size(); ++x) {
        Json row = Json::array();
        for (int y = 0; y < m.size(); ++y) row.push_back(m.mul(x, y));
        table.push_back(std::move(row));
    }
    return Json{{"size", m.size()}, {"identity", m.identity()}, {"table", std::move(table)}};
}

MonoidPtr monoid_from_json(const Json& j) {
    const int size = j.at("size").get<int>();
    const int identity = j.at("identity").get<int>();
    std::vector<std::vector<int>> table;
    for (const Json& row : j.at("table")) table.push_back(row.get<std::vector<int>>());
    return Monoid::validate(size, identity, std::move(table));
}

Json values_to_json(const Func& f) {
    Json arr = Json::array();
    for (int i = 0; i < f.size(); ++i) arr.push_back(scalar_to_json(f(i)));
    return arr;
}

Func values_from_json(const MonoidPtr& m, const Field& f, const Json& j) {
    if (!j.is_array()) throw Error("function values must be an array");
    std::vector<Scalar> vals;
    vals.reserve(j.size());
    for (const Json& v : j) vals.push_back(scalar_from_json(f, v));
    return Func(m, f, std::move(vals));
}

Json func_to_json(const Func& f) { return Json{{"values", values_to_json(f)}}; }

Func func_from_json(const MonoidPtr& m, const Field& f, const Json& j) {
    return values_from_json(m, f, j.at("values"));
}

Json spec_to_json(const ProblemSpec& spec) {
    Json partition = Json::array();
    for (const Block& blk : spec.partition()) partition.push_back(Json::array({blk.lo, blk.hi}));
    Json b = Json::array();
    Json mu = Json::array();
    for (int i = 1; i <= spec.term_count(); ++i) {
        b.push_back(scalar_to_json(spec.coeff(i)));
        mu.push_back(values_to_json(spec.mu(i).func()));
    }
    return Json{{"monoid", monoid_to_json(*spec.monoid())},
                {"field", field_to_json(spec.field())},
                {"partition", std::move(partition)},
                {"b", std::move(b)},
                {"mu", std::move(mu)}};
}

ProblemSpec spec_from_json(const Json& j) {
    MonoidPtr monoid = monoid_from_json(j.at("monoid"));
    const Field field = field_from_json(j.at("field"));
    std::vector<Block> partition;
    for (const Json& pj : j.at("partition")) {
        if (!pj.is_array() || pj.size() != 2) throw Error("partition entries must be [lo, hi]");
        partition.push_back(Block{pj[0].get<int>(), pj[1].get<int>()});
    }
    std::vector<Scalar> b;
    for (const Json& bj : j.at("b")) b.push_back(scalar_from_json(field, bj));
    std::vector<MulFunc> mu;
    for (const Json& mj : j.at("mu"))
        mu.push_back(MulFunc::check(values_from_json(monoid, field, mj)));
    return ProblemSpec::make(std::move(monoid), field, std::move(partition), std::move(b),
                             std::move(mu));
}

Json tuple_to_json(const SolutionTuple& t) {
    Json hs = Json::array();
    for (const Func& hj : t.hs) hs.push_back(values_to_json(hj));
    return Json{{"f", values_to_json(t.f)},
                {"g", values_to_json(t.g)},
                {"h", values_to_json(t.h)},
                {"hs", std::move(hs)}};
}

SolutionTuple tuple_from_json(const ProblemSpec& spec, const Json& j) {
    const MonoidPtr& m = spec.monoid();
    const Field& f = spec.field();
    std::vector<Func> hs;
    for (const Json& hj : j.at("hs")) hs.push_back(values_from_json(m, f, hj));
    return SolutionTuple{values_from_json(m, f, j.at("f")), values_from_json(m, f, j.at("g")),
                         values_from_json(m, f, j.at("h")), std::move(hs)};
}

namespace {

// c_1..c_n with the unused entry at block q encoded as null
Json cj_to_json(const std::vector<Scalar>& cj, int q) {
    Json arr = Json::array();
    for (std::size_t j = 0; j < cj.size(); ++j) {
        if (static_cast<int>(j) + 1 == q)
            arr.push_back(nullptr);
        else
            arr.push_back(scalar_to_json(cj[j]));
    }
    return arr;
}

std::vector<Scalar> cj_from_json(const Field& f, const Json& arr, int q) {
    std::vector<Scalar> cj;
    for (std::size_t j = 0; j < arr.size(); ++j) {
        if (arr[j].is_null() || static_cast<int>(j) + 1 == q)
            cj.push_back(Scalar::zero(f));
        else
            cj.push_back(scalar_from_json(f, arr[j]));
    }
    return cj;
}

Json scalars_to_json(const std::vector<Scalar>& v) {
    Json arr = Json::array();
    for (const Scalar& s : v) arr.push_back(scalar_to_json(s));
    return arr;
}

std::vector<Scalar> scalars_from_json(const Field& f, const Json& arr) {
    std::vector<Scalar> out;
    for (const Json& s : arr) out.push_back(scalar_from_json(f, s));
    return out;
}

}  // namespace

Json classification_to_json(const Classification& cls) {
    Json j{{"family", family_name(cls.tag())}};
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, IndependentParams>) {
                j["chi"] = values_to_json(p.chi.func());
                j["a"] = scalar_to_json(p.a);
                j["b"] = scalar_to_json(p.b);
                j["c"] = scalars_to_json(p.c);
            } else if constexpr (std::is_same_v<T, DependentPairParams>) {
                j["q"] = p.q;
                j["a"] = scalar_to_json(p.a);
                j["b"] = scalar_to_json(p.b);
                j["c"] = scalar_to_json(p.c);
                j["d"] = scalar_to_json(p.d);
                j["cj"] = cj_to_json(p.cj, p.q);
                j["ai"] = scalars_to_json(p.ai);
            } else if constexpr (std::is_same_v<T, DependentSingleParams>) {
                j["q"] = p.q;
                j["k"] = p.k;
                j["a"] = scalar_to_json(p.a);
                j["c"] = scalar_to_json(p.c);
                j["d"] = scalar_to_json(p.d);
                j["cj"] = cj_to_json(p.cj, p.q);
                j["ai"] = scalars_to_json(p.ai);
            } else if constexpr (std::is_same_v<T, DegenerateHParams>) {
                j["c"] = scalars_to_json(p.c);
                j["h"] = values_to_json(p.h);
            } else {
                j["g"] = values_to_json(p.g);
            }
        },
        cls.params);
    return j;
}

Classification classification_from_json(const ProblemSpec& spec, const Json& j) {
    const Field& f = spec.field();
    const MonoidPtr& m = spec.monoid();
    const FamilyTag tag = family_from_name(j.at("family").get<std::string>());
    switch (tag) {
        case FamilyTag::Independent:
            return Classification{IndependentParams{
                MulFunc::check(values_from_json(m, f, j.at("chi"))),
                scalar_from_json(f, j.at("a")), scalar_from_json(f, j.at("b")),
                scalars_from_json(f, j.at("c"))}};
        case FamilyTag::DependentPair: {
            const int q = j.at("q").get<int>();
            return Classification{DependentPairParams{
                q, scalar_from_json(f, j.at("a")), scalar_from_json(f, j.at("b")),
                scalar_from_json(f, j.at("c")), scalar_from_json(f, j.at("d")),
                cj_from_json(f, j.at("cj"), q),
                j.contains("ai") ? scalars_from_json(f, j.at("ai")) : std::vector<Scalar>{}}};
        }
        case FamilyTag::DependentSingle: {
            const int q = j.at("q").get<int>();
            return Classification{DependentSingleParams{
                q, j.at("k").get<int>(), scalar_from_json(f, j.at("a")),
                scalar_from_json(f, j.at("c")), scalar_from_json(f, j.at("d")),
                cj_from_json(f, j.at("cj"), q),
                j.contains("ai") ? scalars_from_json(f, j.at("ai")) : std::vector<Scalar>{}}};
        }
        case FamilyTag::DegenerateNonzeroH:
            return Classification{DegenerateHParams{scalars_from_json(f, j.at("c")),
                                                    values_from_json(m, f, j.at("h"))}};
        case FamilyTag::Trivial:
            return Classification{TrivialParams{values_from_json(m, f, j.at("g"))}};
    }
    throw InternalError("unhandled family tag");
}

Json report_to_json(const OracleReport& report) {
    Json missing = Json::array();
    for (const SolutionTuple& t : report.missing) missing.push_back(tuple_to_json(t));
    Json extra = Json::array();
    for (const SolutionTuple& t : report.extra) extra.push_back(tuple_to_json(t));
    Json per_family = Json::object();
    for (const auto& [name, count] : report.per_family) per_family[name] = count;
    return Json{{"spec_digest", report.spec_digest},
                {"oracle_count", report.oracle_count},
                {"family_count", report.family_count},
                {"missing", std::move(missing)},
                {"extra", std::move(extra)},
                {"per_family", std::move(per_family)},
                {"clean", report.clean()}};
}

std::string report_to_text(const OracleReport& report) {
    std::ostringstream os;
    os << "spec digest:   " << report.spec_digest << "\n";
    os << "oracle count:  " << report.oracle_count << "\n";
    os << "family count:  " << report.family_count << "\n";
    for (const auto& [name, count] : report.per_family)
        os << "  " << name << ": " << count << "\n";
    os << "missing:       " << report.missing.size() << "\n";
    os << "extra:         " << report.extra.size() << "\n";
    if (report.clean()) {
        os << "COMPLETE: all oracle solutions covered by Theorem families\n";
    } else {
        os << "DISCREPANCY: the generated families do not match the oracle\n";
        for (const SolutionTuple& t : report.missing)
            os << "  missing " << tuple_to_json(t).dump() << "\n";
        for (const SolutionTuple& t : report.extra)
            os << "  extra " << tuple_to_json(t).dump() << "\n";
    }
    return os.str();
}

}  // namespace levi

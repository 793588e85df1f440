#pragma once

#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "character_table.hpp"
#include "errors.hpp"
#include "perm_group.hpp"
#include "prym.hpp"
#include "rational.hpp"

namespace prymtyurin
{

//! Version of every JSON document written by this header.
inline constexpr int kSchemaVersion = 1;

//// PLAIN REPORT RECORDS ////

struct GroupInfo
{
    std::string spec;
    std::size_t order = 0;
    friend bool operator==(GroupInfo const&, GroupInfo const&) = default;
};

struct SubgroupInfo
{
    std::size_t order = 0;
    std::size_t index = 0;
    std::vector<std::string> generators;  //!< 1-based cycle notation
    friend bool operator==(SubgroupInfo const&, SubgroupInfo const&) = default;
};

struct RepInfo
{
    std::size_t index = 0;  //!< position in the rational-irreducible list
    std::int64_t degree = 0;
    std::size_t field_degree = 0;
    friend bool operator==(RepInfo const&, RepInfo const&) = default;
};

struct HeckeInfo
{
    std::size_t d = 0;
    std::int64_t b = 0;
    std::int64_t b1 = 0;
    std::int64_t q = 0;
    std::int64_t degK = 0;
    std::vector<std::vector<std::int64_t>> a;
    friend bool operator==(HeckeInfo const&, HeckeInfo const&) = default;
};

struct AdmissibleInfo
{
    std::string label;
    std::size_t class_order = 0;
    std::size_t class_size = 0;
    std::int64_t A = 0;
    std::int64_t mixed_cosets = 0;
    std::vector<std::int64_t> fixed_dims;
    bool generates = false;
    bool admissible = false;
    friend bool operator==(AdmissibleInfo const&, AdmissibleInfo const&) = default;
};

struct SignatureEntryInfo
{
    std::string label;
    std::size_t class_index = 0;
    std::int64_t multiplicity = 0;
    friend bool operator==(SignatureEntryInfo const&, SignatureEntryInfo const&) = default;
};

struct SignatureInfo
{
    std::vector<SignatureEntryInfo> entries;
    std::int64_t branch_points = 0;
    std::int64_t genus_X = 0;
    std::int64_t dim_P = 0;
    std::int64_t fixed_points = 0;
    std::string realizable;
    std::vector<std::string> witness;
    friend bool operator==(SignatureInfo const&, SignatureInfo const&) = default;
};

//! One Hypothesis triple with its admissibility table and signatures.
struct TripleReport
{
    int schema = kSchemaVersion;
    GroupInfo group;
    SubgroupInfo subgroup;
    std::vector<RepInfo> reps;
    HeckeInfo hecke;
    bool identities_pass = false;
    std::vector<AdmissibleInfo> admissible;
    std::vector<SignatureInfo> signatures;
    friend bool operator==(TripleReport const&, TripleReport const&) = default;
};

struct ScanRecord
{
    SubgroupInfo subgroup;
    std::vector<RepInfo> reps;
    std::int64_t n = 0;
    std::int64_t field_degree = 0;
    HeckeInfo hecke;
    bool identities_pass = false;
    friend bool operator==(ScanRecord const&, ScanRecord const&) = default;
};

struct ScanReport
{
    int schema = kSchemaVersion;
    GroupInfo group;
    std::size_t subgroup_classes = 0;
    bool partial = false;
    std::vector<ScanRecord> triples;
    friend bool operator==(ScanReport const&, ScanReport const&) = default;
};

struct ClassInfo
{
    std::string representative;
    std::size_t size = 0;
    std::size_t element_order = 0;
    friend bool operator==(ClassInfo const&, ClassInfo const&) = default;
};

struct CharacterInfo
{
    std::int64_t degree = 0;
    std::vector<std::string> values;  //!< polynomials in z<e>
    friend bool operator==(CharacterInfo const&, CharacterInfo const&) = default;
};

struct RationalInfo
{
    std::vector<std::size_t> orbit;
    std::int64_t degree = 0;
    std::size_t field_degree = 0;
    std::vector<std::int64_t> trace;
    friend bool operator==(RationalInfo const&, RationalInfo const&) = default;
};

struct TableReport
{
    int schema = kSchemaVersion;
    GroupInfo group;
    std::size_t exponent = 0;
    std::vector<ClassInfo> classes;
    std::vector<CharacterInfo> characters;
    std::vector<RationalInfo> rational;
    friend bool operator==(TableReport const&, TableReport const&) = default;
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(GroupInfo, spec, order)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SubgroupInfo, order, index, generators)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(RepInfo, index, degree, field_degree)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(HeckeInfo, d, b, b1, q, degK, a)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(AdmissibleInfo, label, class_order, class_size, A, mixed_cosets, fixed_dims,
                                   generates, admissible)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SignatureEntryInfo, label, class_index, multiplicity)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SignatureInfo, entries, branch_points, genus_X, dim_P, fixed_points, realizable,
                                   witness)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(TripleReport, schema, group, subgroup, reps, hecke, identities_pass, admissible,
                                   signatures)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ScanRecord, subgroup, reps, n, field_degree, hecke, identities_pass)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ScanReport, schema, group, subgroup_classes, partial, triples)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ClassInfo, representative, size, element_order)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CharacterInfo, degree, values)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(RationalInfo, orbit, degree, field_degree, trace)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(TableReport, schema, group, exponent, classes, characters, rational)

//// BUILDERS ////

inline GroupInfo group_info(GroupContext const& ctx) { return {ctx.spec, ctx.G().order()}; }

inline SubgroupInfo subgroup_info(Subgroup const& h)
{
    SubgroupInfo s;
    s.order = h.order();
    s.index = h.index();
    for (Elem g : h.generators())
        s.generators.push_back(h.group().element(g).to_cycle_string());
    return s;
}

inline std::vector<RepInfo> rep_info(GroupContext const& ctx, std::vector<std::size_t> const& reps)
{
    std::vector<RepInfo> out;
    for (auto k : reps)
        out.push_back({k, ctx.irreps.at(k).n, ctx.irreps.at(k).field_degree});
    return out;
}

inline HeckeInfo hecke_info(TripleAnalysis const& t)
{
    return {t.dc ? t.dc->d : 0, t.id.b, t.id.b1, t.id.q, t.id.deg_K, t.id.a};
}

inline SignatureInfo signature_info(GroupContext const& ctx, PrymReport const& r)
{
    auto const labels = ctx.class_labels();
    SignatureInfo s;
    for (auto const& [c, m] : r.signature.entries)
        s.entries.push_back({labels.at(c), c, m});
    s.branch_points = r.signature.branch_points();
    if (!is_integer(r.genus_X) || !is_integer(r.dim_P))
        throw InternalFault("serialized signatures must have integral genus and dimension");
    s.genus_X = to_int64(r.genus_X);
    s.dim_P = to_int64(r.dim_P);
    s.fixed_points = r.fixed_points;
    s.realizable = to_string(r.realizable);
    for (Elem g : r.witness)
        s.witness.push_back(ctx.G().element(g).to_cycle_string());
    return s;
}

inline TripleReport triple_report(GroupContext const& ctx, TripleAnalysis const& t,
                                  std::vector<PrymReport> const& signatures = {})
{
    TripleReport rep;
    rep.group = group_info(ctx);
    rep.subgroup = subgroup_info(t.subgroup);
    rep.reps = rep_info(ctx, t.reps);
    rep.hecke = hecke_info(t);
    rep.identities_pass = t.identities.all_pass() && !t.identities.checks.empty();
    auto const labels = ctx.class_labels();
    for (auto const& row : t.rows) {
        rep.admissible.push_back({labels.at(row.cyclic_class), row.class_order, row.class_size, row.A,
                                  row.mixed_cosets, row.fixed_dims, row.generates, row.admissible()});
    }
    for (auto const& s : signatures)
        rep.signatures.push_back(signature_info(ctx, s));
    return rep;
}

inline ScanReport scan_report(GroupContext const& ctx, ScanResult const& result)
{
    ScanReport rep;
    rep.group = group_info(ctx);
    rep.subgroup_classes = result.subgroup_classes;
    rep.partial = result.partial;
    for (auto const& t : result.triples) {
        ScanRecord rec;
        rec.subgroup = subgroup_info(t.subgroup);
        rec.reps = rep_info(ctx, t.reps);
        rec.n = t.id.n;
        rec.field_degree = t.id.L_degree;
        rec.hecke = hecke_info(t);
        rec.identities_pass = t.identities.all_pass() && !t.identities.checks.empty();
        rep.triples.push_back(std::move(rec));
    }
    return rep;
}

inline TableReport table_report(GroupContext const& ctx)
{
    PermGroup const& G = ctx.G();
    TableReport rep;
    rep.group = group_info(ctx);
    rep.exponent = ctx.table->exponent();
    for (std::size_t c = 0; c < G.class_count(); ++c) {
        Elem const x = G.class_rep(c);
        rep.classes.push_back({G.element(x).to_cycle_string(), G.class_size(c), G.element_order(x)});
    }
    for (auto const& chi : ctx.table->characters()) {
        CharacterInfo ci{chi.degree, {}};
        for (auto const& v : chi.values)
            ci.values.push_back(v.to_string());
        rep.characters.push_back(std::move(ci));
    }
    for (auto const& w : ctx.irreps)
        rep.rational.push_back({w.orbit, w.n, w.field_degree, w.trace_values});
    return rep;
}

//// RENDERING ////

enum class OutputFormat
{
    json,
    csv,
    text,
};

inline OutputFormat parse_output_format(std::string const& s)
{
    if (s == "json")
        return OutputFormat::json;
    if (s == "csv")
        return OutputFormat::csv;
    if (s == "text")
        return OutputFormat::text;
    throw InvalidArgument("unknown format '" + s + "' (expected json, csv or text)");
}

namespace detail
{

template<class T>
std::string join(std::vector<T> const& v, char const* sep)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? sep : "") << v[i];
    return os.str();
}

// Quote a CSV field when it contains a separator or quote.
inline std::string csv_field(std::string const& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string signature_text(SignatureInfo const& s)
{
    std::ostringstream os;
    os << "[0;";
    for (std::size_t i = 0; i < s.entries.size(); ++i)
        os << (i ? ", " : " ") << "(" << s.entries[i].label << ", " << s.entries[i].multiplicity << ")";
    os << "]";
    return os.str();
}

inline std::string reps_text(std::vector<RepInfo> const& reps)
{
    std::vector<std::string> parts;
    for (auto const& r : reps)
        parts.push_back(std::to_string(r.index));
    return join(parts, " ");
}

}  // namespace detail

//! Column lists, also printed by the CLI help.
inline constexpr char const* kTableCsvColumns = "class,representative,size,element_order,chi_0,...,chi_{k-1}";
inline constexpr char const* kScanCsvColumns =
    "group,subgroup_order,subgroup_index,reps,n,field_degree,d,b,b1,q,deg_K,identities_pass";
inline constexpr char const* kAdmissibleCsvColumns =
    "subgroup_order,reps,class,class_order,class_size,A,mixed_cosets,fixed_dims,generates,admissible";
inline constexpr char const* kSignatureCsvColumns =
    "subgroup_order,reps,q,signature,branch_points,genus_X,dim_P,fixed_points,realizable";

inline std::string render(TableReport const& t, OutputFormat f)
{
    std::ostringstream os;
    switch (f) {
        case OutputFormat::json:
            return nlohmann::json(t).dump(2) + "\n";
        case OutputFormat::csv: {
            os << "class,representative,size,element_order";
            for (std::size_t i = 0; i < t.characters.size(); ++i)
                os << ",chi_" << i;
            os << "\n";
            for (std::size_t c = 0; c < t.classes.size(); ++c) {
                os << c << "," << detail::csv_field(t.classes[c].representative) << "," << t.classes[c].size << ","
                   << t.classes[c].element_order;
                for (auto const& chi : t.characters)
                    os << "," << detail::csv_field(chi.values[c]);
                os << "\n";
            }
            return os.str();
        }
        case OutputFormat::text:
            os << "group " << t.group.spec << " of order " << t.group.order << ", exponent " << t.exponent << "\n";
            os << "classes:\n";
            for (std::size_t c = 0; c < t.classes.size(); ++c)
                os << "  " << c << ": " << t.classes[c].representative << "  size " << t.classes[c].size
                   << "  order " << t.classes[c].element_order << "\n";
            os << "characters (values per class, z" << t.exponent << " a primitive root of unity):\n";
            for (std::size_t i = 0; i < t.characters.size(); ++i)
                os << "  chi_" << i << " [deg " << t.characters[i].degree
                   << "]: " << detail::join(t.characters[i].values, " | ") << "\n";
            os << "rational irreducibles (Galois orbits):\n";
            for (std::size_t i = 0; i < t.rational.size(); ++i)
                os << "  W_" << i << ": orbit {" << detail::join(t.rational[i].orbit, ",") << "} degree "
                   << t.rational[i].degree << " field degree " << t.rational[i].field_degree << " trace "
                   << detail::join(t.rational[i].trace, " ") << "\n";
            return os.str();
    }
    return {};
}

inline std::string render(ScanReport const& s, OutputFormat f)
{
    std::ostringstream os;
    switch (f) {
        case OutputFormat::json:
            return nlohmann::json(s).dump(2) + "\n";
        case OutputFormat::csv:
            os << kScanCsvColumns << "\n";
            for (auto const& t : s.triples)
                os << detail::csv_field(s.group.spec) << "," << t.subgroup.order << "," << t.subgroup.index << ","
                   << detail::reps_text(t.reps) << "," << t.n << "," << t.field_degree << "," << t.hecke.d << ","
                   << t.hecke.b << "," << t.hecke.b1 << "," << t.hecke.q << "," << t.hecke.degK << ","
                   << (t.identities_pass ? "true" : "false") << "\n";
            return os.str();
        case OutputFormat::text:
            os << "group " << s.group.spec << " of order " << s.group.order << ": " << s.subgroup_classes
               << " subgroup classes" << (s.partial ? " (partial enumeration)" : "") << ", " << s.triples.size()
               << " triples\n";
            for (auto const& t : s.triples)
                os << "  |H|=" << t.subgroup.order << " [G:H]=" << t.subgroup.index << " reps {"
                   << detail::reps_text(t.reps) << "} n=" << t.n << " [L:Q]=" << t.field_degree
                   << " d=" << t.hecke.d << " b=" << t.hecke.b << " q=" << t.hecke.q << " degK=" << t.hecke.degK
                   << (t.identities_pass ? "" : " IDENTITIES FAILED") << "\n";
            return os.str();
    }
    return {};
}

//! Admissibility tables, optionally with the signature lists.
inline std::string render(std::vector<TripleReport> const& reports, OutputFormat f, bool with_signatures)
{
    std::ostringstream os;
    switch (f) {
        case OutputFormat::json:
            return nlohmann::json(reports).dump(2) + "\n";
        case OutputFormat::csv:
            if (!with_signatures) {
                os << kAdmissibleCsvColumns << "\n";
                for (auto const& r : reports) {
                    for (auto const& a : r.admissible)
                        os << r.subgroup.order << "," << detail::reps_text(r.reps) << "," << a.label << ","
                           << a.class_order << "," << a.class_size << "," << a.A << "," << a.mixed_cosets << ","
                           << detail::join(a.fixed_dims, " ") << "," << (a.generates ? "true" : "false") << ","
                           << (a.admissible ? "true" : "false") << "\n";
                }
            } else {
                os << kSignatureCsvColumns << "\n";
                for (auto const& r : reports) {
                    for (auto const& s : r.signatures)
                        os << r.subgroup.order << "," << detail::reps_text(r.reps) << "," << r.hecke.q << ","
                           << detail::csv_field(detail::signature_text(s)) << "," << s.branch_points << ","
                           << s.genus_X << "," << s.dim_P << "," << s.fixed_points << "," << s.realizable << "\n";
                }
            }
            return os.str();
        case OutputFormat::text:
            for (auto const& r : reports) {
                os << "group " << r.group.spec << " (order " << r.group.order << "), |H|=" << r.subgroup.order
                   << " [G:H]=" << r.subgroup.index << ", reps {" << detail::reps_text(r.reps) << "}\n";
                os << "  d=" << r.hecke.d << " b=" << r.hecke.b << " b1=" << r.hecke.b1 << " q=" << r.hecke.q
                   << " degK=" << r.hecke.degK << " identities " << (r.identities_pass ? "pass" : "FAIL") << "\n";
                os << "  " << std::left << std::setw(8) << "class" << std::right << std::setw(6) << "order"
                   << std::setw(6) << "size" << std::setw(6) << "A" << std::setw(7) << "mixed" << "  "
                   << std::left << std::setw(12) << "fixed dims" << "generates\n";
                for (auto const& a : r.admissible) {
                    os << "  " << std::left << std::setw(8) << a.label << std::right << std::setw(6) << a.class_order
                       << std::setw(6) << a.class_size << std::setw(6) << a.A << std::setw(7) << a.mixed_cosets
                       << "  " << std::left << std::setw(12) << detail::join(a.fixed_dims, ",")
                       << (a.generates ? "yes" : "no") << (a.admissible ? "  admissible" : "") << std::right
                       << "\n";
                }
                if (with_signatures) {
                    if (r.signatures.empty())
                        os << "  no certified signatures within the bounds (no admissible class, or every"
                              " candidate has dim P < 1 or is not realizable)\n";
                    for (auto const& s : r.signatures)
                        os << "  " << detail::signature_text(s) << "  g(X)=" << s.genus_X << " dim P=" << s.dim_P
                           << " realizable=" << s.realizable << "\n";
                }
            }
            return os.str();
    }
    return {};
}

}  // namespace prymtyurin

#include "toradd/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "toradd/errors.hpp"

namespace toradd {

namespace {

using Json = nlohmann::ordered_json;

// ---- document construction ----

std::vector<std::size_t> one_based(const std::vector<std::size_t>& idx) {
  std::vector<std::size_t> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(i + 1);
  return out;
}

IntegerRow row_of(const LatticeVector& v) { return v.coords(); }

// Basis used to print characters: the structure's basis when there is one,
// otherwise the first unimodular n-subset of rays, otherwise none.
struct Notation {
  std::vector<LatticeVector> rays;
  std::vector<std::size_t> labels;  // 1-based
};

std::optional<Notation> notation_basis(const AnalysisReport& r) {
  if (r.structure) {
    Notation nb;
    for (auto i : r.structure->basis_indices) {
      nb.rays.push_back(r.rays[i]);
      nb.labels.push_back(i + 1);
    }
    return nb;
  }
  const std::size_t n = r.dim;
  const std::size_t m = r.rays.size();
  if (m < n) return std::nullopt;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n), true);
  do {
    Notation nb;
    for (std::size_t i = 0; i < m; ++i) {
      if (pick[i]) {
        nb.rays.push_back(r.rays[i]);
        nb.labels.push_back(i + 1);
      }
    }
    if (is_lattice_basis(nb.rays)) return nb;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return std::nullopt;
}

std::string notation_of(const std::optional<Notation>& nb, const LatticeVector& e) {
  if (!nb) return e.to_string();
  return dual_notation(nb->rays, nb->labels, e);
}

RootEntryDoc root_entry(const DemazureRoot& root, const std::optional<Notation>& nb) {
  return {root.ray + 1, row_of(root.vector), notation_of(nb, root.vector)};
}

TupleDoc tuple_doc(const DerivationTuple& t) {
  TupleDoc d;
  for (const auto& der : t.derivations) d.derivations.push_back(der.to_string());
  d.slot_vars = one_based(t.slot_vars);
  d.commuting = to_string(t.commuting);
  d.locally_nilpotent = to_string(t.locally_nilpotent);
  d.triangular = to_string(t.triangular);
  d.open_orbit = to_string(t.open_orbit);
  d.failures = t.failures;
  return d;
}

// ---- JSON encoding ----

Json encode(const Integer& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Json encode(const IntegerRow& row) {
  Json a = Json::array();
  for (const auto& v : row) a.push_back(encode(v));
  return a;
}

Json encode(const std::vector<IntegerRow>& rows) {
  Json a = Json::array();
  for (const auto& row : rows) a.push_back(encode(row));
  return a;
}

Json encode(const std::vector<std::size_t>& v) { return Json(v); }
Json encode(const std::vector<std::string>& v) { return Json(v); }

Json encode(const StructureDoc& s);
Json encode(const EvidenceDoc& e);
Json encode(bool b);
Json encode(const UniquenessDoc& u);
Json encode(const WitnessDoc& w);

template <typename T>
Json encode_optional(const std::optional<T>& v) {
  if (!v) return Json(nullptr);
  return encode(*v);
}

Json encode(const RootEntryDoc& e) {
  Json j;
  j["ray"] = e.ray;
  j["vector"] = encode(e.vector);
  j["notation"] = e.notation;
  return j;
}

Json encode(const std::vector<RootEntryDoc>& v) {
  Json a = Json::array();
  for (const auto& e : v) a.push_back(encode(e));
  return a;
}

Json encode(const StructureDoc& s) {
  Json j;
  j["basis"] = encode(s.basis);
  j["extra"] = encode(s.extra);
  j["canonical_order"] = encode(s.canonical_order);
  j["dual"] = encode(s.dual);
  return j;
}

Json encode(const RootsDoc& r) {
  Json j;
  Json per_ray = Json::array();
  for (const auto& set : r.per_ray) per_ray.push_back(encode(set));
  j["per_ray"] = per_ray;
  j["semisimple"] = encode(r.semisimple);
  j["unipotent"] = encode(r.unipotent);
  j["regularizing_vector"] = encode_optional(r.regularizing_vector);
  j["positive"] = encode(r.positive);
  return j;
}

Json encode(const CollectionDoc& c) {
  Json j;
  j["basis"] = encode(c.basis);
  j["roots"] = encode(c.roots);
  return j;
}

Json encode(const EvidenceDoc& e) {
  Json j;
  j["maximal"] = e.maximal;
  j["dominated"] = e.dominated;
  return j;
}

Json encode(bool b) { return Json(b); }

Json encode(const UniquenessDoc& u) {
  Json j;
  j["cond_roots"] = u.cond_roots;
  j["cond_positive"] = u.cond_positive;
  j["cond_preorder"] = u.cond_preorder;
  j["unique"] = u.unique;
  j["evidence"] = encode_optional(u.evidence);
  j["maximal_rays"] = encode(u.maximal_rays);
  j["dimension_criterion"] = u.dimension_criterion;
  j["projection_wide"] = u.projection_wide;
  j["surface_wide"] = encode_optional(u.surface_wide);
  return j;
}

Json encode(const TupleDoc& t) {
  Json j;
  j["derivations"] = encode(t.derivations);
  j["slot_vars"] = encode(t.slot_vars);
  j["commuting"] = t.commuting;
  j["locally_nilpotent"] = t.locally_nilpotent;
  j["triangular"] = t.triangular;
  j["open_orbit"] = t.open_orbit;
  j["failures"] = encode(t.failures);
  return j;
}

Json encode(const WitnessDoc& w) {
  Json tuples;
  tuples["pair"] = encode(w.tuples.pair);
  tuples["slot_order"] = encode(w.tuples.slot_order);
  tuples["d"] = encode(w.tuples.d);
  tuples["cap"] = w.tuples.cap;
  tuples["na"] = encode(w.tuples.na);
  tuples["nna"] = encode(w.tuples.nna);

  const CertificateDoc& c = w.certificate;
  Json cert;
  cert["distinguished_class"] = encode(c.distinguished_class);
  cert["witness_variable"] = c.witness_variable;
  cert["component"] = encode(c.component);
  cert["rank_na"] = c.rank_na;
  cert["rank_nna"] = c.rank_nna;
  cert["member_in_na"] = c.member_in_na;
  cert["member_in_nna"] = c.member_in_nna;
  cert["samples_checked"] = c.samples_checked;
  Json minors = Json::array();
  for (const auto& m : c.minors_nna) {
    Json mj;
    mj["rows"] = encode(m.rows);
    mj["cols"] = encode(m.cols);
    mj["value"] = m.value;
    minors.push_back(mj);
  }
  cert["minors_nna"] = minors;

  Json j;
  j["tuples"] = tuples;
  j["certificate"] = cert;
  return j;
}

Json encode(const ReportDocument& doc) {
  Json j;
  j["schema"] = doc.schema;
  j["label"] = doc.label ? Json(*doc.label) : Json(nullptr);
  j["dim"] = doc.dim;
  j["rays"] = encode(doc.rays);
  j["seed"] = doc.seed;
  j["existence"] = doc.existence;
  j["structure"] = encode_optional(doc.structure);
  j["alpha"] = encode_optional(doc.alpha);
  j["roots"] = encode(doc.roots);
  j["dim_unipotent"] = doc.dim_unipotent;
  Json collections = Json::array();
  for (const auto& c : doc.collections) collections.push_back(encode(c));
  j["collections"] = collections;
  j["uniqueness"] = encode_optional(doc.uniqueness);
  j["witness"] = encode_optional(doc.witness);
  j["assumptions"] = encode(doc.assumptions);
  j["warnings"] = encode(doc.warnings);
  return j;
}

// ---- JSON decoding ----

// Walks one object, handing out fields by name and rejecting leftovers.
class Reader {
 public:
  Reader(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) fail(path_, "expected an object");
  }

  const Json& at(const std::string& key) {
    if (!j_.contains(key)) fail(path_, "missing field \"" + key + "\"");
    seen_.push_back(key);
    return j_.at(key);
  }
  std::string where(const std::string& key) const { return path_ + "." + key; }

  void finish() const {
    for (const auto& [key, value] : j_.items()) {
      if (std::find(seen_.begin(), seen_.end(), key) == seen_.end()) {
        fail(path_, "unknown field \"" + key + "\"");
      }
    }
  }

  [[noreturn]] static void fail(const std::string& path, const std::string& what) {
    throw InputError("report " + path + ": " + what);
  }

 private:
  const Json& j_;
  std::string path_;
  std::vector<std::string> seen_;
};

Integer decode_integer(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                  : Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  Reader::fail(path, "expected an integer");
}

bool decode_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) Reader::fail(path, "expected a boolean");
  return j.get<bool>();
}

std::string decode_string(const Json& j, const std::string& path) {
  if (!j.is_string()) Reader::fail(path, "expected a string");
  return j.get<std::string>();
}

std::uint64_t decode_u64(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned()) Reader::fail(path, "expected a nonnegative integer");
  return j.get<std::uint64_t>();
}

std::size_t decode_size(const Json& j, const std::string& path) {
  return static_cast<std::size_t>(decode_u64(j, path));
}

template <typename F>
auto decode_array(const Json& j, const std::string& path, F item) {
  if (!j.is_array()) Reader::fail(path, "expected an array");
  std::vector<decltype(item(j, path))> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(item(j[k], path + "[" + std::to_string(k) + "]"));
  }
  return out;
}

template <typename F>
auto decode_nullable(const Json& j, const std::string& path, F item)
    -> std::optional<decltype(item(j, path))> {
  if (j.is_null()) return std::nullopt;
  return item(j, path);
}

IntegerRow decode_row(const Json& j, const std::string& path) {
  return decode_array(j, path, decode_integer);
}

std::vector<IntegerRow> decode_rows(const Json& j, const std::string& path) {
  return decode_array(j, path, decode_row);
}

std::vector<std::size_t> decode_sizes(const Json& j, const std::string& path) {
  return decode_array(j, path, decode_size);
}

std::vector<std::string> decode_strings(const Json& j, const std::string& path) {
  return decode_array(j, path, decode_string);
}

RootEntryDoc decode_root_entry(const Json& j, const std::string& path) {
  Reader r(j, path);
  RootEntryDoc e;
  e.ray = decode_size(r.at("ray"), r.where("ray"));
  e.vector = decode_row(r.at("vector"), r.where("vector"));
  e.notation = decode_string(r.at("notation"), r.where("notation"));
  r.finish();
  return e;
}

std::vector<RootEntryDoc> decode_root_entries(const Json& j, const std::string& path) {
  return decode_array(j, path, decode_root_entry);
}

StructureDoc decode_structure(const Json& j, const std::string& path) {
  Reader r(j, path);
  StructureDoc s;
  s.basis = decode_sizes(r.at("basis"), r.where("basis"));
  s.extra = decode_sizes(r.at("extra"), r.where("extra"));
  s.canonical_order = decode_sizes(r.at("canonical_order"), r.where("canonical_order"));
  s.dual = decode_rows(r.at("dual"), r.where("dual"));
  r.finish();
  return s;
}

RootsDoc decode_roots(const Json& j, const std::string& path) {
  Reader r(j, path);
  RootsDoc d;
  d.per_ray = decode_array(r.at("per_ray"), r.where("per_ray"), decode_rows);
  d.semisimple = decode_root_entries(r.at("semisimple"), r.where("semisimple"));
  d.unipotent = decode_root_entries(r.at("unipotent"), r.where("unipotent"));
  d.regularizing_vector =
      decode_nullable(r.at("regularizing_vector"), r.where("regularizing_vector"), decode_row);
  d.positive = decode_root_entries(r.at("positive"), r.where("positive"));
  r.finish();
  return d;
}

CollectionDoc decode_collection(const Json& j, const std::string& path) {
  Reader r(j, path);
  CollectionDoc c;
  c.basis = decode_sizes(r.at("basis"), r.where("basis"));
  c.roots = decode_rows(r.at("roots"), r.where("roots"));
  r.finish();
  return c;
}

EvidenceDoc decode_evidence(const Json& j, const std::string& path) {
  Reader r(j, path);
  EvidenceDoc e;
  e.maximal = decode_size(r.at("maximal"), r.where("maximal"));
  e.dominated = decode_size(r.at("dominated"), r.where("dominated"));
  r.finish();
  return e;
}

UniquenessDoc decode_uniqueness(const Json& j, const std::string& path) {
  Reader r(j, path);
  UniquenessDoc u;
  u.cond_roots = decode_bool(r.at("cond_roots"), r.where("cond_roots"));
  u.cond_positive = decode_bool(r.at("cond_positive"), r.where("cond_positive"));
  u.cond_preorder = decode_bool(r.at("cond_preorder"), r.where("cond_preorder"));
  u.unique = decode_bool(r.at("unique"), r.where("unique"));
  u.evidence = decode_nullable(r.at("evidence"), r.where("evidence"), decode_evidence);
  u.maximal_rays = decode_sizes(r.at("maximal_rays"), r.where("maximal_rays"));
  u.dimension_criterion = decode_bool(r.at("dimension_criterion"), r.where("dimension_criterion"));
  u.projection_wide = decode_bool(r.at("projection_wide"), r.where("projection_wide"));
  u.surface_wide = decode_nullable(r.at("surface_wide"), r.where("surface_wide"), decode_bool);
  r.finish();
  return u;
}

TupleDoc decode_tuple(const Json& j, const std::string& path) {
  Reader r(j, path);
  TupleDoc t;
  t.derivations = decode_strings(r.at("derivations"), r.where("derivations"));
  t.slot_vars = decode_sizes(r.at("slot_vars"), r.where("slot_vars"));
  t.commuting = decode_string(r.at("commuting"), r.where("commuting"));
  t.locally_nilpotent = decode_string(r.at("locally_nilpotent"), r.where("locally_nilpotent"));
  t.triangular = decode_string(r.at("triangular"), r.where("triangular"));
  t.open_orbit = decode_string(r.at("open_orbit"), r.where("open_orbit"));
  t.failures = decode_strings(r.at("failures"), r.where("failures"));
  r.finish();
  return t;
}

MinorDoc decode_minor(const Json& j, const std::string& path) {
  Reader r(j, path);
  MinorDoc m;
  m.rows = decode_sizes(r.at("rows"), r.where("rows"));
  m.cols = decode_sizes(r.at("cols"), r.where("cols"));
  m.value = decode_string(r.at("value"), r.where("value"));
  r.finish();
  return m;
}

WitnessDoc decode_witness(const Json& j, const std::string& path) {
  Reader r(j, path);
  WitnessDoc w;
  {
    Reader t(r.at("tuples"), r.where("tuples"));
    w.tuples.pair = decode_evidence(t.at("pair"), t.where("pair"));
    w.tuples.slot_order = decode_sizes(t.at("slot_order"), t.where("slot_order"));
    w.tuples.d = decode_integer(t.at("d"), t.where("d"));
    w.tuples.cap = decode_size(t.at("cap"), t.where("cap"));
    w.tuples.na = decode_tuple(t.at("na"), t.where("na"));
    w.tuples.nna = decode_tuple(t.at("nna"), t.where("nna"));
    t.finish();
  }
  {
    Reader c(r.at("certificate"), r.where("certificate"));
    CertificateDoc& cd = w.certificate;
    cd.distinguished_class = decode_row(c.at("distinguished_class"), c.where("distinguished_class"));
    cd.witness_variable = decode_size(c.at("witness_variable"), c.where("witness_variable"));
    cd.component = decode_strings(c.at("component"), c.where("component"));
    cd.rank_na = decode_size(c.at("rank_na"), c.where("rank_na"));
    cd.rank_nna = decode_size(c.at("rank_nna"), c.where("rank_nna"));
    cd.member_in_na = decode_bool(c.at("member_in_na"), c.where("member_in_na"));
    cd.member_in_nna = decode_bool(c.at("member_in_nna"), c.where("member_in_nna"));
    cd.samples_checked = decode_size(c.at("samples_checked"), c.where("samples_checked"));
    cd.minors_nna = decode_array(c.at("minors_nna"), c.where("minors_nna"), decode_minor);
    c.finish();
  }
  r.finish();
  return w;
}

ReportDocument decode_document(const Json& j) {
  Reader r(j, "$");
  ReportDocument d;
  d.schema = decode_string(r.at("schema"), r.where("schema"));
  if (d.schema != kReportSchema) Reader::fail("$.schema", "unsupported schema \"" + d.schema + "\"");
  d.label = decode_nullable(r.at("label"), r.where("label"), decode_string);
  d.dim = decode_size(r.at("dim"), r.where("dim"));
  d.rays = decode_rows(r.at("rays"), r.where("rays"));
  d.seed = decode_u64(r.at("seed"), r.where("seed"));
  d.existence = decode_bool(r.at("existence"), r.where("existence"));
  d.structure = decode_nullable(r.at("structure"), r.where("structure"), decode_structure);
  d.alpha = decode_nullable(r.at("alpha"), r.where("alpha"), decode_rows);
  d.roots = decode_roots(r.at("roots"), r.where("roots"));
  d.dim_unipotent = decode_size(r.at("dim_unipotent"), r.where("dim_unipotent"));
  d.collections = decode_array(r.at("collections"), r.where("collections"), decode_collection);
  d.uniqueness = decode_nullable(r.at("uniqueness"), r.where("uniqueness"), decode_uniqueness);
  d.witness = decode_nullable(r.at("witness"), r.where("witness"), decode_witness);
  d.assumptions = decode_strings(r.at("assumptions"), r.where("assumptions"));
  d.warnings = decode_strings(r.at("warnings"), r.where("warnings"));
  r.finish();
  return d;
}

// ---- text ----

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += sep;
    out += parts[k];
  }
  return out;
}

std::string ray_name(std::size_t input_index) { return "p" + std::to_string(input_index + 1); }

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string class_string(const DivisorClass& c) {
  std::vector<std::string> parts;
  for (const auto& v : c) parts.push_back(v.get_str());
  return "(" + join(parts, ", ") + ")";
}

// Display order inside one root set: fewer dual-basis terms first, then
// descending coordinates.
std::vector<LatticeVector> display_order(std::vector<LatticeVector> set,
                                         const std::optional<Notation>& nb) {
  auto terms = [&](const LatticeVector& e) {
    std::size_t count = 0;
    if (!nb) {
      for (const auto& c : e.coords()) count += (c != 0);
      return count;
    }
    for (const auto& p : nb->rays) count += (pairing(p, e) != 0);
    return count;
  };
  std::stable_sort(set.begin(), set.end(), [&](const LatticeVector& a, const LatticeVector& b) {
    const auto ta = terms(a);
    const auto tb = terms(b);
    if (ta != tb) return ta < tb;
    return b < a;
  });
  return set;
}

std::string root_list(const std::vector<DemazureRoot>& roots, const std::optional<Notation>& nb) {
  std::vector<std::string> parts;
  for (const auto& r : roots) parts.push_back(notation_of(nb, r.vector));
  return "{" + join(parts, ", ") + "}";
}

void write_tuple(std::ostringstream& os, const std::string& name, const DerivationTuple& t) {
  std::vector<std::string> ds;
  for (const auto& d : t.derivations) ds.push_back(d.to_string());
  os << "  " << name << " = (" << join(ds, ", ") << ")\n";
  os << "    commuting " << to_string(t.commuting) << ", locally nilpotent "
     << to_string(t.locally_nilpotent) << ", triangular " << to_string(t.triangular)
     << ", open orbit " << to_string(t.open_orbit) << "\n";
  for (const auto& f : t.failures) os << "    failure: " << f << "\n";
}

}  // namespace

std::string dual_notation(const std::vector<LatticeVector>& basis_rays,
                          const std::vector<std::size_t>& labels, const LatticeVector& e) {
  std::vector<std::pair<Integer, std::size_t>> neg;
  std::vector<std::pair<Integer, std::size_t>> pos;
  for (std::size_t l = 0; l < basis_rays.size(); ++l) {
    const Integer c = pairing(basis_rays[l], e);
    if (c < 0) neg.emplace_back(c, labels[l]);
    if (c > 0) pos.emplace_back(c, labels[l]);
  }
  std::string out;
  bool first = true;
  for (const auto* group : {&neg, &pos}) {
    for (const auto& [c, label] : *group) {
      const Integer mag = abs(c);
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (mag != 1) out += mag.get_str();
      out += "p" + std::to_string(label) + "*";
      first = false;
    }
  }
  return first ? "0" : out;
}

ReportDocument to_document(const AnalysisReport& r) {
  ReportDocument doc;
  doc.schema = kReportSchema;
  doc.label = r.label;
  doc.dim = r.dim;
  for (const auto& ray : r.rays) doc.rays.push_back(row_of(ray));
  doc.seed = r.seed;
  doc.existence = r.existence;

  const auto nb = notation_basis(r);
  if (r.structure) {
    const AdditiveStructure& s = *r.structure;
    StructureDoc sd;
    sd.basis = one_based(s.basis_indices);
    sd.extra = one_based(s.extra_indices);
    sd.canonical_order = one_based(s.canonical_order());
    for (const auto& q : s.dual.vectors()) sd.dual.push_back(row_of(q));
    doc.structure = sd;
    doc.alpha = s.alpha;
  }

  for (const auto& set : r.roots.per_ray) {
    std::vector<IntegerRow> rows;
    for (const auto& e : set) rows.push_back(row_of(e));
    doc.roots.per_ray.push_back(rows);
  }
  for (const auto& e : r.roots.semisimple) doc.roots.semisimple.push_back(root_entry(e, nb));
  for (const auto& e : r.roots.unipotent) doc.roots.unipotent.push_back(root_entry(e, nb));
  if (r.roots.u) doc.roots.regularizing_vector = row_of(*r.roots.u);
  for (const auto& e : r.roots.positive) doc.roots.positive.push_back(root_entry(e, nb));
  doc.dim_unipotent = r.dim_unipotent;

  for (const auto& cc : r.collections) {
    CollectionDoc c;
    c.basis = one_based(cc.basis_indices);
    for (const auto& e : cc.roots) c.roots.push_back(row_of(e));
    doc.collections.push_back(c);
  }

  if (r.uniqueness) {
    UniquenessDoc u;
    u.cond_roots = r.uniqueness->cond_roots;
    u.cond_positive = r.uniqueness->cond_positive;
    u.cond_preorder = r.uniqueness->cond_preorder;
    u.unique = r.uniqueness->unique;
    if (r.uniqueness->evidence) {
      u.evidence = EvidenceDoc{r.uniqueness->evidence->maximal + 1,
                               r.uniqueness->evidence->dominated + 1};
    }
    if (r.preorder && r.structure) {
      for (auto pos : r.preorder->maximal) {
        u.maximal_rays.push_back(r.structure->basis_indices[pos] + 1);
      }
    }
    u.dimension_criterion = r.dimension_criterion.value_or(false);
    u.projection_wide = r.projection_wide.value_or(false);
    u.surface_wide = r.surface_wide;
    doc.uniqueness = u;
  }

  if (r.witness && r.certificate) {
    const WitnessTuples& w = *r.witness;
    WitnessDoc wd;
    wd.tuples.pair = EvidenceDoc{w.pair.maximal + 1, w.pair.dominated + 1};
    wd.tuples.slot_order = one_based(w.slot_order);
    wd.tuples.d = w.d;
    wd.tuples.cap = r.cap;
    wd.tuples.na = tuple_doc(w.na);
    wd.tuples.nna = tuple_doc(w.nna);

    const SeparationCertificate& c = *r.certificate;
    CertificateDoc& cd = wd.certificate;
    cd.distinguished_class = c.distinguished_class;
    cd.witness_variable = c.witness_variable + 1;
    for (const auto& m : c.component) cd.component.push_back(m.to_string());
    cd.rank_na = c.rank_na;
    cd.rank_nna = c.rank_nna;
    cd.member_in_na = c.member_in_na;
    cd.member_in_nna = c.member_in_nna;
    cd.samples_checked = c.samples_checked;
    for (const auto& m : minor_equations(w.nna, c.component)) {
      if (m.value.is_zero()) continue;
      cd.minors_nna.push_back(
          {{m.row1 + 1, m.row2 + 1}, {m.col1 + 1, m.col2 + 1}, m.value.to_string("l")});
    }
    doc.witness = wd;
  }

  doc.assumptions = r.assumptions;
  doc.warnings = r.warnings;
  return doc;
}

std::string serialize(const ReportDocument& doc) { return encode(doc).dump(2) + "\n"; }

ReportDocument parse_report(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
  return decode_document(j);
}

std::string emit_structured(const AnalysisReport& r) { return serialize(to_document(r)); }

std::string emit_text(const AnalysisReport& r) {
  std::ostringstream os;
  const auto nb = notation_basis(r);

  os << "fan: " << r.label.value_or("(unnamed)") << "  (dim " << r.dim << ", " << r.rays.size()
     << " rays)\n";
  for (std::size_t i = 0; i < r.rays.size(); ++i) {
    os << "  " << ray_name(i) << " = " << r.rays[i].to_string() << "\n";
  }
  os << "assumptions:\n";
  for (const auto& a : r.assumptions) os << "  " << a << "\n";
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";

  os << "\nadditive action: " << (r.existence ? "exists" : "none") << "\n";
  if (r.structure) {
    const AdditiveStructure& s = *r.structure;
    std::vector<std::string> names;
    for (auto i : s.basis_indices) names.push_back(ray_name(i));
    os << "  basis: " << join(names, ", ") << "\n";
    for (std::size_t j = 0; j < s.extra_indices.size(); ++j) {
      std::vector<std::string> terms;
      for (std::size_t i = 0; i < s.dim(); ++i) {
        if (s.alpha[j][i] == 0) continue;
        terms.push_back((s.alpha[j][i] == 1 ? "" : s.alpha[j][i].get_str()) +
                        ray_name(s.basis_indices[i]));
      }
      os << "  " << ray_name(s.extra_indices[j]) << " = -(" << join(terms, " + ") << ")\n";
    }
  }

  os << "\nDemazure roots";
  if (nb) {
    std::vector<std::string> names;
    for (auto l : nb->labels) names.push_back("p" + std::to_string(l) + "*");
    os << " (in the dual basis " << join(names, ", ") << ")";
  }
  os << ":\n";
  for (std::size_t i = 0; i < r.roots.per_ray.size(); ++i) {
    const auto set = display_order(r.roots.per_ray[i], nb);
    std::vector<std::string> dual;
    std::vector<std::string> coords;
    for (const auto& e : set) {
      dual.push_back(notation_of(nb, e));
      coords.push_back(e.to_string());
    }
    os << "  R" << (i + 1) << " = {" << join(dual, ", ") << "}";
    if (!set.empty()) os << "  coordinates {" << join(coords, ", ") << "}";
    os << "\n";
  }
  os << "  semisimple: " << root_list(r.roots.semisimple, nb) << "\n";
  os << "  unipotent: " << root_list(r.roots.unipotent, nb) << "\n";
  if (r.roots.u) {
    os << "  positive system for u = " << r.roots.u->to_string() << ": "
       << root_list(r.roots.positive, nb) << "\n";
  }
  os << "dim U = " << r.dim_unipotent << "\n";

  os << "\ncomplete collections: " << r.collections.size() << "\n";
  for (const auto& cc : r.collections) {
    std::vector<std::string> names;
    std::vector<std::string> roots;
    for (auto i : cc.basis_indices) names.push_back(ray_name(i));
    for (const auto& e : cc.roots) roots.push_back(notation_of(nb, e));
    os << "  {" << join(names, ", ") << "}: (" << join(roots, ", ") << ")\n";
  }

  os << "\nuniqueness: ";
  if (!r.uniqueness) {
    os << "not applicable (no additive action)\n";
    return os.str();
  }
  const UniquenessVerdict& v = *r.uniqueness;
  os << (v.unique ? "unique" : "not unique") << "\n";
  os << "  roots condition " << yes_no(v.cond_roots) << ", positive system condition "
     << yes_no(v.cond_positive) << ", trivial preorder " << yes_no(v.cond_preorder) << "\n";
  os << "  dim U == n: " << yes_no(r.dimension_criterion.value_or(false))
     << ", projections wide: " << yes_no(r.projection_wide.value_or(false));
  if (r.surface_wide) os << ", surface wide: " << yes_no(*r.surface_wide);
  os << "\n";
  if (v.evidence) {
    os << "  " << ray_name(v.evidence->maximal) << " is maximal and lies above "
       << ray_name(v.evidence->dominated) << "\n";
  }

  if (v.unique) {
    os << "\nwitness: none (uniqueness holds)\n";
    return os.str();
  }
  if (!r.witness || !r.certificate) {
    os << "\nwitness: not computed\n";
    return os.str();
  }
  const WitnessTuples& w = *r.witness;
  std::vector<std::string> order;
  for (auto i : w.slot_order) order.push_back(ray_name(i));
  os << "\nwitness: slot order " << join(order, ", ") << ", d = " << w.d.get_str()
     << ", nilpotency cap " << r.cap << "\n";
  write_tuple(os, "NA", w.na);
  write_tuple(os, "NNA", w.nna);
  const SeparationCertificate& c = *r.certificate;
  std::vector<std::string> comp;
  for (const auto& m : c.component) comp.push_back(m.to_string());
  os << "separating invariant: degree " << class_string(c.distinguished_class) << ", component {"
     << join(comp, ", ") << "}\n";
  os << "  x" << (c.witness_variable + 1) << ": rank " << c.rank_na << " under NA (member "
     << yes_no(c.member_in_na) << "), rank " << c.rank_nna << " under NNA (member "
     << yes_no(c.member_in_nna) << ")\n";
  os << "  random samples checked: " << c.samples_checked << "\n";
  os << "  certificate " << (c.valid() ? "valid" : "INVALID") << "\n";
  return os.str();
}

std::string emit_report(const AnalysisReport& r, ReportFormat format) {
  return format == ReportFormat::text ? emit_text(r) : emit_structured(r);
}

}  // namespace toradd
